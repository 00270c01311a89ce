#pragma once

#include <cstdint>
#include <vector>

#include "smt/core.hpp"
#include "smt/dense_function.hpp"
#include "smt/designs.hpp"
#include "smt/oracle.hpp"

namespace smt {

/// The query point for subsampled cell ell under delay d:
/// m = complement(H^T complement(ell) OR d), i.e. m_i = 1 iff d_i = 0 and no
/// row a with ell_a = 0 has H[a,i] = 1.
BitVec query_point(const BinMatrix& H, uint32_t ell, const BitVec& d);

/// One group's subsampled transforms: P+1 dense functions over Z_2^b,
/// row p = 0 corresponding to the zero delay.
struct BinTable {
  int group = 0;
  int dim = 0;                      // b
  std::vector<DenseFunction> rows;  // size P+1, each 2^b values

  int P() const { return static_cast<int>(rows.size()) - 1; }
  size_t bins() const { return size_t{1} << dim; }

  double& at(int p, uint32_t j) { return rows[static_cast<size_t>(p)].values[j]; }
  double at(int p, uint32_t j) const { return rows[static_cast<size_t>(p)].values[j]; }

  /// The vector-valued observation U_c(j), length P+1.
  std::vector<double> bin(uint32_t j) const {
    std::vector<double> u(rows.size());
    for (size_t p = 0; p < rows.size(); ++p) u[p] = rows[p].values[j];
    return u;
  }
};

struct SampleStats {
  uint64_t total_queries = 0;
  uint64_t unique_queries = 0;
};

struct SamplerOptions {
  size_t batch_size = 1024;
  int threads = 1;
};

/// Queries all C*(P+1)*2^b points (identical masks de-duplicated across
/// groups), applies the fast forward transform per (c, p), and injects
/// bin-level Gaussian noise when the oracle declares it.
std::vector<BinTable> build_bin_tables(ValueOracle& oracle,
                                       const std::vector<SubsamplingDesign>& designs, int b,
                                       SampleStats* stats = nullptr,
                                       const SamplerOptions& opts = {});

}  // namespace smt
