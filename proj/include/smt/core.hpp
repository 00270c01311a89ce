#pragma once

#include "smt/bitvec.hpp"
#include "smt/dense_function.hpp"
#include "smt/oracle.hpp"
#include "smt/sparse_mobius.hpp"

namespace smt {

/// Matrix-vector product over the OR semiring: result bit a is the logical OR
/// of M[a,i] AND x_i, i.e. whether row a intersects x.
inline BitVec bool_matvec(const BinMatrix& M, const BitVec& x) {
  if (M.cols != x.dim()) throw std::invalid_argument("bool_matvec: dimension mismatch");
  BitVec r(M.row_count());
  for (int a = 0; a < M.row_count(); ++a) {
    if (M.rows[a].intersects(x)) r.set(a);
  }
  return r;
}

/// Boolean subtraction x - y, defined only for y <= x (asserted).
inline BitVec bool_sub(const BitVec& x, const BitVec& y) {
  if (!y.subset_of(x)) throw std::invalid_argument("bool_sub: requires y <= x");
  return x & y.complement();
}

/// The naive 2^n baseline: queries every mask, runs the fast forward sweep,
/// and prunes zeros. Hard-capped because the table is dense.
SparseMobius brute_force_transform(ValueOracle& oracle, int n, double eps_rel = 1e-9,
                                   int cap = 20);

}  // namespace smt
