#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "smt/bitvec.hpp"
#include "smt/dense_function.hpp"

namespace smt {

/// Per-run recovery statistics attached to a recovered transform.
struct RecoveryStats {
  uint64_t total_queries = 0;
  uint64_t unique_queries = 0;
  int rounds = 0;
  size_t zerotons = 0;
  size_t singletons = 0;
  size_t multitons = 0;
  size_t unresolved = 0;
  bool converged = true;
};

/// A sparse Möbius transform: map from index vector to non-zero coefficient.
/// Entries are kept in mask-lexicographic order so that serialization is
/// deterministic. Coefficients exactly equal to zero are never stored.
struct SparseMobius {
  int dim = 0;
  std::map<BitVec, double, BitVecLexLess> entries;
  std::optional<RecoveryStats> stats;

  SparseMobius() = default;
  explicit SparseMobius(int n) : dim(n) {}

  size_t size() const { return entries.size(); }

  void set(const BitVec& k, double v) {
    if (k.dim() != dim) throw std::invalid_argument("SparseMobius::set: dimension mismatch");
    if (v == 0.0) {
      entries.erase(k);
    } else {
      entries[k] = v;
    }
  }

  double get(const BitVec& k) const {
    auto it = entries.find(k);
    return it == entries.end() ? 0.0 : it->second;
  }

  bool contains(const BitVec& k) const { return entries.count(k) != 0; }
};

/// Evaluates the inverse transform at m: sum of F(k) over stored k <= m.
inline double evaluate(const SparseMobius& F, const BitVec& m) {
  if (m.dim() != F.dim) throw std::invalid_argument("evaluate: dimension mismatch");
  double s = 0.0;
  for (const auto& [k, v] : F.entries) {
    if (k.subset_of(m)) s += v;
  }
  return s;
}

/// Prunes a dense transform over all of Z_2^n into sparse form, dropping
/// entries with |coefficient| <= eps_rel * max |coefficient|.
inline SparseMobius sparsify(const DenseFunction& F, double eps_rel = 1e-9) {
  SparseMobius out(F.dim);
  double scale = 0.0;
  for (double v : F.values) scale = std::max(scale, std::abs(v));
  const double cut = eps_rel * scale;
  for (size_t i = 0; i < F.size(); ++i) {
    if (std::abs(F.values[i]) > cut) {
      out.entries.emplace(BitVec::from_uint(F.dim, i), F.values[i]);
    }
  }
  return out;
}

}  // namespace smt
