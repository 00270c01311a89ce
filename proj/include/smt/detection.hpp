#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "smt/bitvec.hpp"
#include "smt/designs.hpp"
#include "smt/group_testing.hpp"

namespace smt {

enum class BinKind { Zeroton, Singleton, Multiton };

/// Classification of one observed bin. A singleton carries the recovered
/// index and its (non-zero) coefficient estimate.
struct BinType {
  BinKind kind = BinKind::Zeroton;
  BitVec k;
  double v = 0.0;

  static BinType zeroton() { return {}; }
  static BinType multiton() { return {BinKind::Multiton, {}, 0.0}; }
  static BinType singleton(BitVec k, double v) { return {BinKind::Singleton, std::move(k), v}; }
};

enum class DetectMode { Noiseless, Noisy };

struct DetectorConfig {
  DetectMode mode = DetectMode::Noiseless;
  double eps_ratio = 0.2;   // distance from {0,1} tolerated in ratio entries
  double eps_zero = 1e-8;   // zeroton cut, relative to the bin-table scale
  double gamma = 0.5;       // verification slack (noisy)
  double sigma = 0.0;       // bin-noise std (noisy)
  double rho = 0.0;         // known |F(k)|; > 0 enables value snapping
  double lp_lambda = 1.0;

  // Filled in by prepare(): threshold and crossover for identification rows.
  double gamma_thr = 0.0;
  double crossover_q = 0.0;

  /// Resolves the identification threshold from (rho, sigma) and warns when
  /// gamma violates the verification-validity bound gamma < rho^2 / (4 nu^2).
  void prepare();

  std::string warning;  // non-empty if the gamma bound is violated
};

/// y_p = 1 - U_p / U_0 for p = 1..P. Caller must have ruled out a zeroton,
/// so U_0 is bounded away from zero.
std::vector<double> ratio_vector(std::span<const double> u_bin);

/// Noiseless rule: zeroton iff the bin vector vanishes; multiton iff the
/// ratio vector leaves {0,1}^P; otherwise decode the rounded ratios and
/// verify. `scale` is the bin-table magnitude used for the relative zero cut;
/// `j` is the bin index for the H k = j consistency check.
BinType detect_noiseless(std::span<const double> u_bin, const SubsamplingDesign& design,
                         uint32_t j, const DetectorConfig& cfg, double scale);

/// Noisy rule on the split design: zeroton / singleton verification via the
/// paired rows (energy against (1+gamma) nu^2 with nu^2 = 2 sigma^2),
/// identification via threshold tests on the D_id rows, value estimate by
/// least squares on the +/-1 signature (snapped to +/-rho when rho is known).
BinType detect_noisy(std::span<const double> u_bin, const SubsamplingDesign& design,
                     uint32_t j, const DetectorConfig& cfg);

/// Dispatches on cfg.mode.
BinType detect(std::span<const double> u_bin, const SubsamplingDesign& design, uint32_t j,
               const DetectorConfig& cfg, double scale);

}  // namespace smt
