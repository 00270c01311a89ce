#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "smt/bitvec.hpp"
#include "smt/sparse_mobius.hpp"

namespace smt {

/// Raised when a black-box value oracle misbehaves (process exit, malformed
/// reply, NaN response). The engine maps this to its own failure path.
struct OracleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A black-box pseudo-boolean function f : Z_2^n -> R queried in batches.
class ValueOracle {
 public:
  virtual ~ValueOracle() = default;

  virtual int dim() const = 0;

  /// Fills out[i] = f(masks[i]). Must be deterministic: the same mask always
  /// yields the same value (bin-level noise is injected downstream, not here).
  virtual void query(std::span<const BitVec> masks, std::span<double> out) = 0;

  double query_one(const BitVec& m) {
    double v = 0.0;
    query(std::span<const BitVec>(&m, 1), std::span<double>(&v, 1));
    return v;
  }

  /// Std deviation of i.i.d. Gaussian noise added to each subsampled
  /// transform coefficient U_{c,p}(j); 0 means noiseless.
  virtual double bin_noise_sigma() const { return 0.0; }
  virtual uint64_t bin_noise_seed() const { return 0; }
};

/// Wraps an in-process callable.
class InProcessOracle final : public ValueOracle {
 public:
  InProcessOracle(int n, std::function<double(const BitVec&)> fn)
      : n_(n), fn_(std::move(fn)) {}

  int dim() const override { return n_; }

  void query(std::span<const BitVec> masks, std::span<double> out) override {
    for (size_t i = 0; i < masks.size(); ++i) out[i] = fn_(masks[i]);
  }

 private:
  int n_;
  std::function<double(const BitVec&)> fn_;
};

/// Evaluates a planted sparse transform exactly (the synthetic ground truth).
class SyntheticSparseOracle final : public ValueOracle {
 public:
  explicit SyntheticSparseOracle(SparseMobius truth) : truth_(std::move(truth)) {}

  int dim() const override { return truth_.dim; }

  void query(std::span<const BitVec> masks, std::span<double> out) override {
    for (size_t i = 0; i < masks.size(); ++i) out[i] = evaluate(truth_, masks[i]);
  }

  const SparseMobius& truth() const { return truth_; }

 private:
  SparseMobius truth_;
};

/// Declares bin-level noise of the stated sigma on top of an inner oracle.
/// f-queries themselves stay deterministic; the sampler adds N(0, sigma^2)
/// to each subsampled coefficient after the fast transform, which is the
/// noise model the detection theory assumes. Set query_noise to also perturb
/// raw f-values (outside that model, provided for realism).
class SyntheticNoisyOracle final : public ValueOracle {
 public:
  SyntheticNoisyOracle(std::shared_ptr<ValueOracle> inner, double sigma, uint64_t seed,
                       bool query_noise = false)
      : inner_(std::move(inner)), sigma_(sigma), seed_(seed), query_noise_(query_noise) {}

  int dim() const override { return inner_->dim(); }

  void query(std::span<const BitVec> masks, std::span<double> out) override;

  double bin_noise_sigma() const override { return query_noise_ ? 0.0 : sigma_; }
  uint64_t bin_noise_seed() const override { return seed_; }

 private:
  std::shared_ptr<ValueOracle> inner_;
  double sigma_;
  uint64_t seed_;
  bool query_noise_;
};

/// Talks the line protocol to an external oracle process:
///   engine:  "QUERY <count>\n" then <count> lines of n-char 0/1 masks
///   oracle:  <count> lines, one decimal float each
///   engine:  "END\n" on shutdown.
/// A non-zero exit or malformed reply raises OracleError.
class SubprocessOracle final : public ValueOracle {
 public:
  SubprocessOracle(int n, std::string command, size_t batch_size = 1024);
  ~SubprocessOracle() override;

  SubprocessOracle(const SubprocessOracle&) = delete;
  SubprocessOracle& operator=(const SubprocessOracle&) = delete;

  int dim() const override { return n_; }
  void query(std::span<const BitVec> masks, std::span<double> out) override;

 private:
  void start();
  void shutdown() noexcept;
  void query_batch(std::span<const BitVec> masks, std::span<double> out);

  int n_;
  std::string command_;
  size_t batch_size_;
  int pid_ = -1;
  int to_child_ = -1;
  FILE* from_child_ = nullptr;
};

/// Memoizing wrapper. Identical masks are answered from the cache; safe under
/// concurrent inserts of identical keys since values are deterministic.
class CachingOracle final : public ValueOracle {
 public:
  explicit CachingOracle(std::shared_ptr<ValueOracle> inner) : inner_(std::move(inner)) {}

  int dim() const override { return inner_->dim(); }
  void query(std::span<const BitVec> masks, std::span<double> out) override;

  double bin_noise_sigma() const override { return inner_->bin_noise_sigma(); }
  uint64_t bin_noise_seed() const override { return inner_->bin_noise_seed(); }

  size_t cache_size() const { return cache_.size(); }
  uint64_t inner_queries() const { return inner_queries_; }

 private:
  std::shared_ptr<ValueOracle> inner_;
  std::unordered_map<BitVec, double, BitVecHash> cache_;
  std::mutex mu_;
  uint64_t inner_queries_ = 0;
};

}  // namespace smt
