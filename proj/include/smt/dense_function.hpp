#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace smt {

/// A real-valued function on Z_2^b stored densely. Index encoding:
/// ell maps to the integer sum_a ell_a * 2^a (variable 0 = least
/// significant bit).
struct DenseFunction {
  static constexpr int kMaxDim = 30;

  int dim = 0;
  std::vector<double> values;

  DenseFunction() = default;
  explicit DenseFunction(int b) : dim(check(b)), values(size_t{1} << b, 0.0) {}

  size_t size() const { return values.size(); }
  double& operator[](size_t i) { return values[i]; }
  double operator[](size_t i) const { return values[i]; }

  static int check(int b) {
    if (b < 0 || b > kMaxDim) throw std::invalid_argument("DenseFunction: dim out of range");
    return b;
  }
};

/// In-place forward transform: on exit values[k] = sum_{m <= k} (-1)^{|k - m|} f(m).
/// One subset-difference sweep per axis, O(b 2^b).
inline void forward_mobius_inplace(DenseFunction& f) {
  const size_t n = f.size();
  for (int a = 0; a < f.dim; ++a) {
    const size_t bit = size_t{1} << a;
    for (size_t ell = 0; ell < n; ++ell) {
      if (ell & bit) f.values[ell] -= f.values[ell ^ bit];
    }
  }
}

/// In-place inverse transform (subset-sum accumulation); inverse of the above.
inline void inverse_mobius_inplace(DenseFunction& F) {
  const size_t n = F.size();
  for (int a = 0; a < F.dim; ++a) {
    const size_t bit = size_t{1} << a;
    for (size_t ell = 0; ell < n; ++ell) {
      if (ell & bit) F.values[ell] += F.values[ell ^ bit];
    }
  }
}

inline DenseFunction forward_mobius_dense(DenseFunction f) {
  forward_mobius_inplace(f);
  return f;
}

inline DenseFunction inverse_mobius_dense(DenseFunction F) {
  inverse_mobius_inplace(F);
  return F;
}

}  // namespace smt
