#pragma once

#include <vector>

namespace smt::lp {

enum class RowType { LessEqual, Equal, GreaterEqual };

/// minimize c^T x subject to row constraints and x >= 0.
struct Problem {
  int nvars = 0;
  std::vector<double> c;
  std::vector<std::vector<double>> A;
  std::vector<double> b;
  std::vector<RowType> row_type;

  void add_row(std::vector<double> a, RowType t, double rhs) {
    A.push_back(std::move(a));
    row_type.push_back(t);
    b.push_back(rhs);
  }
};

enum class Status { Optimal, Infeasible, Unbounded, IterLimit };

struct Solution {
  Status status = Status::Infeasible;
  std::vector<double> x;
  double objective = 0.0;
};

/// Dense two-phase primal simplex. Dantzig pricing with a switch to Bland's
/// rule after a run of degenerate pivots, which is enough at the problem
/// sizes seen here (a few hundred variables and rows).
Solution solve(const Problem& p, int max_iters = 20000);

}  // namespace smt::lp
