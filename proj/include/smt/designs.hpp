#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "smt/bitvec.hpp"

namespace smt {

enum class Regime { Uniform, LowDegreeNoiseless, Noisy };

std::string to_string(Regime r);
Regime regime_from_string(const std::string& s);

/// Parameters for constructing the per-group subsampling and delay matrices.
struct DesignConfig {
  int n = 0;             // ambient dimension
  int b = 0;             // bins per group = 2^b
  int C = 3;             // number of subsampling groups
  Regime regime = Regime::Uniform;
  int t = 0;             // max interaction degree (low-degree / noisy)
  double nu = std::log(2.0);  // Bernoulli density scale for identification rows
  double gamma = 0.5;    // verification slack
  double sigma = 0.0;    // assumed bin-noise std (noisy)
  double rho = 0.0;      // known coefficient magnitude (noisy; 0 = unknown)
  uint64_t seed = 0;
  double c_gt = 2.0;     // group-testing row constant: P ~ c_gt * t * log2(n)
  double c_ver = 2.0;    // verification row constant
  double beta = 1.0;     // extra identification-row margin in the noisy split

  void validate() const;
};

/// One group's (H_c, D_c) pair. D stores rows p = 1..P only; the implicit
/// zero delay d_{c,0} = 0 is handled by the sampler. In the noisy regime,
/// D = [D_id; D1; D2] with P = P1 + 2*P2; rows [0,P1) identify, rows
/// [P1, P1+P2) and [P1+P2, P1+2*P2) are the paired verification designs.
struct SubsamplingDesign {
  Regime regime = Regime::Uniform;
  BinMatrix H;
  BinMatrix D;
  int P1 = 0;
  int P2 = 0;

  int P() const { return D.row_count(); }
  bool identity_delays() const { return D.is_identity(); }
};

/// Unit-vector rows over disjoint index sets I_c drawn from a seeded
/// permutation of [n]. Requires C*b <= n.
std::vector<BinMatrix> make_uniform_H(int n, int b, int C, uint64_t seed);

/// I.i.d. Bernoulli(1 - 2^(-1/t)) rows, making each bin bit unbiased for
/// degree-t indices.
std::vector<BinMatrix> make_lowdeg_H(int n, int b, int C, int t, uint64_t seed);

/// One group's delay matrix for the given config. Uniform -> identity.
/// Low-degree -> Bernoulli(nu/t) with P = ceil(c_gt * t * log2 n) rows.
/// Noisy -> the split [D_id; D1; D2] (see SubsamplingDesign). Falls back to
/// D = identity whenever the group-testing row count would reach n, since
/// testing saves nothing past min{t log n, n} rows.
struct DelayBlock {
  BinMatrix D;
  int P1 = 0;
  int P2 = 0;
};
DelayBlock make_D(const DesignConfig& cfg, uint64_t group_seed);

/// All C groups for the config.
std::vector<SubsamplingDesign> make_designs(const DesignConfig& cfg);

/// Exhaustive sanity-mode designs: b = n with H a seeded permutation matrix
/// per group and D = identity. Every aliasing set is a single index, so
/// recovery is exact by construction; used for oracle-equivalence testing at
/// small n.
std::vector<SubsamplingDesign> make_exhaustive_designs(int n, int C, uint64_t seed);

/// Row-major 0/1 serialization for reproducibility audits.
std::string design_to_json(const SubsamplingDesign& d);
SubsamplingDesign design_from_json(const std::string& text);

}  // namespace smt
