#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "smt/detection.hpp"
#include "smt/designs.hpp"
#include "smt/oracle.hpp"
#include "smt/sampler.hpp"
#include "smt/sparse_mobius.hpp"

namespace smt {

struct EngineConfig {
  DesignConfig design;
  DetectorConfig detector;
  int max_rounds = 0;             // 0 = auto: 4x the initially occupied bins
  bool check_conservation = false;
  bool full_rescan = false;       // re-detect every bin each round (debug)
  SamplerOptions sampler;
};

struct PhaseTimings {
  double sampling_s = 0.0;
  double transform_s = 0.0;
  double detection_s = 0.0;
  double peeling_s = 0.0;
  double total_s = 0.0;
};

struct RecoveryReport {
  uint64_t total_queries = 0;
  uint64_t unique_queries = 0;
  int rounds = 0;
  size_t zerotons = 0;
  size_t singletons = 0;   // bins that ended life as recovered singletons
  size_t multitons = 0;    // unresolved multitons at termination
  size_t unresolved = 0;   // same as multitons; kept for the report schema
  size_t duplicate_singletons = 0;
  bool converged = true;
  bool inconsistent_values = false;
  double max_conservation_drift = 0.0;
  uint64_t seed = 0;
  std::string config_digest;
  std::string warning;
  PhaseTimings timings;
};

struct SmtResult {
  SparseMobius coefficients;
  RecoveryReport report;
};

/// A frontier entry: bin (c, j) currently classified as singleton (k, v).
struct FrontierEntry {
  int c = 0;
  uint32_t j = 0;
  BitVec k;
  double v = 0.0;
};

/// Engine state across peeling rounds. Exposed for tests; `run_smt` is the
/// ordinary entry point.
class PeelingState {
 public:
  PeelingState(std::vector<SubsamplingDesign> designs, std::vector<BinTable> tables,
               DetectorConfig detector);

  /// Classifies every bin and collects the current singletons.
  std::vector<FrontierEntry> initial_frontier();

  /// Records F(k) = v and subtracts v from every bin the index touches:
  /// for each group c', bin H_{c'} k, rows p with k disjoint from d_{c',p}
  /// (row 0 always). Returns false if k was already recovered.
  bool peel_once(const BitVec& k, double v);

  /// Re-detects only bins whose contents changed since the last call
  /// (or every bin when full_rescan) and returns the fresh singletons.
  std::vector<FrontierEntry> redetect(bool full_rescan = false);

  const SparseMobius& recovered() const { return recovered_; }
  SparseMobius& recovered() { return recovered_; }
  const std::vector<BinTable>& tables() const { return tables_; }
  const std::vector<SubsamplingDesign>& designs() const { return designs_; }

  size_t count_kind(BinKind kind) const;
  size_t duplicate_singletons = 0;
  bool inconsistent_values = false;

  /// Max |current + peeled-back - initial| over all cells; needs snapshots.
  double conservation_drift() const;
  void snapshot_initial();

 private:
  BinType classify(int c, uint32_t j) const;

  std::vector<SubsamplingDesign> designs_;
  std::vector<BinTable> tables_;
  std::vector<BinTable> initial_tables_;  // only when snapshotted
  DetectorConfig detector_;
  SparseMobius recovered_;
  std::vector<std::vector<BinType>> types_;   // per group, per bin
  std::vector<std::vector<uint8_t>> dirty_;   // bins touched since last redetect
  std::vector<double> scale_;                 // per-group zeroton scale
  bool have_snapshot_ = false;
};

/// Runs the full pipeline: build designs and bin tables, detect, then peel
/// until no fresh singleton remains. Non-convergence returns the partial
/// transform with report.converged = false.
SmtResult run_smt(ValueOracle& oracle, const EngineConfig& cfg);

}  // namespace smt
