#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "smt/bitvec.hpp"

namespace smt {

/// A non-adaptive group-testing decode problem: recover the defect set
/// k* from OR-pooled outcomes y = D k*.
struct GroupTestInstance {
  const BinMatrix* D = nullptr;       // P x n test matrix
  std::vector<uint8_t> y;             // binary outcomes, length P
  int t = 0;                          // defect bound (0 = unbounded)
  double q = 0.0;                     // symmetric crossover rate, if noisy
};

/// D = I: the outcome vector is the index itself.
BitVec decode_identity(std::span<const uint8_t> y);

/// Combinatorial decoder. COMP eliminates every item seen in a negative
/// test; the DD stage repeatedly confirms an item that is the sole remaining
/// candidate of some unexplained positive test. In strict mode any leftover
/// ambiguity is a failure. Otherwise a bounded search looks for a unique
/// minimal completion among the undetermined candidates (at most enum_cap
/// candidate subsets); ambiguity or cap overrun fails. A failed decode means
/// the caller should treat the bin as a multiton.
std::optional<BitVec> decode_comp_dd(const GroupTestInstance& inst, bool strict = false,
                                     size_t enum_cap = 100000);

/// LP relaxation decoder: minimize sum k_i + lambda * sum xi_p with
///   k >= 0;  xi_p >= 0;  xi_p <= 1 on positive tests;
///   d_p^T k = xi_p on negative tests;  d_p^T k + xi_p >= 1 on positive tests;
/// then round k_i = 1{k_i > 0.5}. When verify is set (noiseless use) the
/// rounded index must re-encode to y exactly, else the decode fails.
std::optional<BitVec> decode_lp(const GroupTestInstance& inst, double lambda = 1.0,
                                bool verify = true);

/// Threshold test for noisy identification rows: y_p = 1{|U_p| <= gamma_thr}.
/// A suppressed row (small magnitude) means the singleton index overlaps the
/// delay, i.e. the group test is positive.
std::vector<uint8_t> threshold_outcomes(std::span<const double> u_rows, double gamma_thr);

/// Chooses the threshold gamma equalizing the two crossover probabilities
///   p01 = 2 Q(gamma / sigma),
///   p10 = Phi((gamma - rho) / sigma) - Phi((-gamma - rho) / sigma),
/// and returns it together with the common crossover rate q.
struct GammaSolution {
  double gamma = 0.0;
  double q = 0.0;
};
GammaSolution solve_gamma(double rho, double sigma);

/// Standard normal CDF.
double normal_cdf(double x);

}  // namespace smt
