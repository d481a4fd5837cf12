#include "fredholm/dense.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace fredholm {

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const Complex& v : data_) {
    m = std::max(m, std::abs(v));
  }
  return m;
}

Complex small_determinant(Complex* m, int k) {
  Complex det{1.0, 0.0};
  for (int c = 0; c < k; ++c) {
    int piv = c;
    double best = std::norm(m[c * k + c]);
    for (int r = c + 1; r < k; ++r) {
      const double v = std::norm(m[r * k + c]);
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (best == 0.0) {
      return Complex{0.0, 0.0};
    }
    if (piv != c) {
      for (int j = c; j < k; ++j) {
        std::swap(m[c * k + j], m[piv * k + j]);
      }
      det = -det;
    }
    const Complex p = m[c * k + c];
    det *= p;
    const Complex inv = std::conj(p) / best;
    for (int r = c + 1; r < k; ++r) {
      const Complex f = m[r * k + c] * inv;
      if (f == Complex{0.0, 0.0}) {
        continue;
      }
      for (int j = c + 1; j < k; ++j) {
        m[r * k + j] -= f * m[c * k + j];
      }
    }
  }
  return det;
}

}  // namespace fredholm
