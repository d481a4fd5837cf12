#include "fredholm/reference.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "fredholm/errors.hpp"

namespace fredholm::reference {
namespace {

void check_order(int n) {
  if (n < 1 || n > 7) {
    throw InvalidArgument("reference: order must lie in [1, 7]");
  }
}

// Visits every n-tuple of node indices (repetitions included) in
// lexicographic order.
template <typename Visit>
void for_each_tuple(std::size_t size, int n, Visit&& visit) {
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    visit(idx);
    int k = n - 1;
    while (k >= 0 && idx[k] + 1 == size) {
      idx[k] = 0;
      --k;
    }
    if (k < 0) {
      return;
    }
    ++idx[k];
  }
}

}  // namespace

Complex determinant_coefficient(const KernelSpec& kernel, const QuadratureRule& rule, int n) {
  check_order(n);
  const auto& t = rule.nodes;
  const auto& w = rule.weights;
  std::vector<Complex> m(static_cast<std::size_t>(n * n));
  Complex sum{0.0, 0.0};
  for_each_tuple(rule.size(), n, [&](const std::vector<std::size_t>& p) {
    double weight = 1.0;
    for (int r = 0; r < n; ++r) {
      weight *= w[p[r]];
      for (int c = 0; c < n; ++c) {
        m[r * n + c] = kernel(t[p[r]], t[p[c]]);
      }
    }
    sum += weight * small_determinant(m.data(), n);
  });
  return sum;
}

Complex minor_coefficient(const KernelSpec& kernel, const QuadratureRule& rule, double x, double t,
                          int n) {
  check_order(n);
  const auto& s = rule.nodes;
  const auto& w = rule.weights;
  const int k = n + 1;
  std::vector<Complex> m(static_cast<std::size_t>(k * k));
  Complex sum{0.0, 0.0};
  for_each_tuple(rule.size(), n, [&](const std::vector<std::size_t>& p) {
    // row/column 0 carry x and t; the rest carry the integration variables
    auto row_arg = [&](int r) { return r == 0 ? x : s[p[r - 1]]; };
    auto col_arg = [&](int c) { return c == 0 ? t : s[p[c - 1]]; };
    double weight = 1.0;
    for (int r = 0; r < n; ++r) {
      weight *= w[p[r]];
    }
    for (int r = 0; r < k; ++r) {
      for (int c = 0; c < k; ++c) {
        m[r * k + c] = kernel(row_arg(r), col_arg(c));
      }
    }
    sum += weight * small_determinant(m.data(), k);
  });
  return sum;
}

ComplexMatrix weighted_kernel_matrix(const KernelSpec& kernel, const QuadratureRule& rule) {
  ComplexMatrix a(rule.size(), rule.size());
  for (std::size_t i = 0; i < rule.size(); ++i) {
    for (std::size_t j = 0; j < rule.size(); ++j) {
      a(i, j) = kernel(rule.nodes[i], rule.nodes[j]) * rule.weights[j];
      if (!std::isfinite(a(i, j).real()) || !std::isfinite(a(i, j).imag())) {
        throw EvaluationError("kernel is non-finite at a quadrature node pair");
      }
    }
  }
  return a;
}

double solve_dense(ComplexMatrix m, std::vector<Complex>& rhs, double pivot_tolerance) {
  const std::size_t size = m.rows();
  if (m.rows() != m.cols() || rhs.size() != size) {
    throw InvalidArgument("solve_dense: dimension mismatch");
  }
  // Elimination noise on an exactly singular matrix grows like n eps max|M|.
  const double relative = std::max(pivot_tolerance, 64.0 * static_cast<double>(m.rows()) *
                                                        std::numeric_limits<double>::epsilon());
  const double threshold = relative * m.max_abs();
  double min_pivot = INFINITY;
  double max_pivot = 0.0;
  for (std::size_t c = 0; c < size; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < size; ++r) {
      if (std::abs(m(r, c)) > std::abs(m(piv, c))) {
        piv = r;
      }
    }
    const double best = std::abs(m(piv, c));
    if (!(best > threshold)) {
      throw SingularMatrix("no usable pivot in column " + std::to_string(c));
    }
    min_pivot = std::min(min_pivot, best);
    max_pivot = std::max(max_pivot, best);
    if (piv != c) {
      for (std::size_t j = 0; j < size; ++j) {
        std::swap(m(c, j), m(piv, j));
      }
      std::swap(rhs[c], rhs[piv]);
    }
    for (std::size_t r = c + 1; r < size; ++r) {
      const Complex f = m(r, c) / m(c, c);
      for (std::size_t j = c; j < size; ++j) {
        m(r, j) -= f * m(c, j);
      }
      rhs[r] -= f * rhs[c];
    }
  }
  for (std::size_t r = size; r-- > 0;) {
    Complex acc = rhs[r];
    for (std::size_t j = r + 1; j < size; ++j) {
      acc -= m(r, j) * rhs[j];
    }
    rhs[r] = acc / m(r, r);
  }
  return size == 0 ? 1.0 : min_pivot / max_pivot;
}

}  // namespace fredholm::reference
