#include "fredholm/parallel.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "fredholm/errors.hpp"
#include "omp_exceptions.hpp"

namespace fredholm::parallel {
namespace {

constexpr int kMaxOrder = 7;
constexpr int kStride = kMaxOrder + 1;

bool finite(Complex v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

// Maximal minors of the n x (n + 1) matrix w = [A_P | c_P] from one
// elimination with partial pivoting; row operations leave every maximal
// minor unchanged and row swaps only flip the sign.
//
// On return `principal` = det A_P and, when with_column is set,
// replaced[m] = det of A_P with column m replaced by c_P.
// `w` is row-major with stride kStride and is overwritten.
void leaf_minors(Complex* w, int n, bool with_column, Complex& principal, Complex* replaced) {
  const int cols = with_column ? n + 1 : n;
  double sign = 1.0;
  for (int k = 0; k < n; ++k) {
    int piv = k;
    double best = std::norm(w[k * kStride + k]);
    for (int r = k + 1; r < n; ++r) {
      const double v = std::norm(w[r * kStride + k]);
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (best == 0.0) {
      continue;  // column already eliminated below the diagonal
    }
    if (piv != k) {
      for (int c = k; c < cols; ++c) {
        std::swap(w[k * kStride + c], w[piv * kStride + c]);
      }
      sign = -sign;
    }
    const Complex inv = std::conj(w[k * kStride + k]) / best;
    for (int r = k + 1; r < n; ++r) {
      const Complex f = w[r * kStride + k] * inv;
      for (int c = k + 1; c < cols; ++c) {
        w[r * kStride + c] -= f * w[k * kStride + c];
      }
      w[r * kStride + k] = Complex{0.0, 0.0};
    }
  }

  // prefix[m] = prod_{k<m} U_kk
  std::array<Complex, kStride> prefix{};
  prefix[0] = Complex{sign, 0.0};
  for (int k = 0; k < n; ++k) {
    prefix[k + 1] = prefix[k] * w[k * kStride + k];
  }
  principal = prefix[n];
  if (!with_column) {
    return;
  }

  // Deleting column m of U leaves a block-triangular matrix whose lower block
  // T[m.., m..] with T(r, j) = U(r, j + 1) is upper Hessenberg. Its trailing
  // determinants obey
  //   g_m = sum_{j>=m} (-1)^{j-m} U(m, j+1) prod_{i=m+1..j} U(i, i) g_{j+1}.
  std::array<Complex, kStride> trailing{};
  trailing[n] = Complex{1.0, 0.0};
  for (int m = n - 1; m >= 0; --m) {
    Complex acc{0.0, 0.0};
    Complex chain{1.0, 0.0};  // (-1)^{j-m} prod U(i, i)
    for (int j = m; j < n; ++j) {
      if (j > m) {
        chain *= -w[j * kStride + j];
      }
      acc += w[m * kStride + j + 1] * chain * trailing[j + 1];
    }
    trailing[m] = acc;
  }
  // Moving c from the last column to position m takes n - 1 - m swaps.
  for (int m = 0; m < n; ++m) {
    const Complex minor = prefix[m] * trailing[m];
    replaced[m] = ((n - 1 - m) % 2 == 0) ? minor : -minor;
  }
}

MinorSums minor_sums_impl(const ComplexMatrix& a, const Complex* column, int order) {
  if (a.rows() != a.cols()) {
    throw InvalidArgument("minor_sums: matrix must be square");
  }
  if (order < 1 || order > kMaxOrder) {
    throw InvalidArgument("minor_sums: order must lie in [1, 7]");
  }
  const auto size = static_cast<std::int64_t>(a.rows());

  MinorSums out;
  out.principal.assign(order + 1, Complex{0.0, 0.0});
  out.principal[0] = Complex{1.0, 0.0};
  if (column != nullptr) {
    out.replaced.assign(order + 1, {});
    for (int n = 1; n <= order; ++n) {
      out.replaced[n].assign(a.rows(), Complex{0.0, 0.0});
    }
  }

  for (int n = 1; n <= order && n <= size; ++n) {
    // Index sets are grouped by their smallest element; each group owns its
    // partial sums so the final reduction order is fixed.
    const std::int64_t firsts = size - n + 1;
    std::vector<Complex> principal_part(firsts);
    std::vector<Complex> replaced_part(column != nullptr ? firsts * size : 0);

#pragma omp parallel
    {
      std::array<std::int64_t, kMaxOrder> idx{};
      std::array<Complex, kMaxOrder * kStride> work{};
      std::array<Complex, kMaxOrder> leaf_replaced{};
      const bool with_column = column != nullptr;

#pragma omp for schedule(dynamic, 1)
      for (std::int64_t first = 0; first < firsts; ++first) {
        Complex psum{0.0, 0.0};
        Complex* rpart = with_column ? replaced_part.data() + first * size : nullptr;
        for (int k = 0; k < n; ++k) {
          idx[k] = first + k;
        }
        while (true) {
          for (int r = 0; r < n; ++r) {
            const Complex* arow = a.row(static_cast<std::size_t>(idx[r]));
            Complex* wrow = work.data() + r * kStride;
            for (int c = 0; c < n; ++c) {
              wrow[c] = arow[idx[c]];
            }
            if (with_column) {
              wrow[n] = column[idx[r]];
            }
          }
          Complex det;
          leaf_minors(work.data(), n, with_column, det, leaf_replaced.data());
          psum += det;
          if (with_column) {
            for (int m = 0; m < n; ++m) {
              rpart[idx[m]] += leaf_replaced[m];
            }
          }

          // next combination with idx[0] fixed
          int k = n - 1;
          while (k >= 1 && idx[k] == size - n + k) {
            --k;
          }
          if (k < 1) {
            break;
          }
          ++idx[k];
          for (int j = k + 1; j < n; ++j) {
            idx[j] = idx[j - 1] + 1;
          }
        }
        principal_part[first] = psum;
      }
    }

    for (std::int64_t first = 0; first < firsts; ++first) {
      out.principal[n] += principal_part[first];
    }
    if (column != nullptr) {
      auto& dst = out.replaced[n];
      for (std::int64_t first = 0; first < firsts; ++first) {
        const Complex* src = replaced_part.data() + first * size;
        for (std::int64_t j = 0; j < size; ++j) {
          dst[j] += src[j];
        }
      }
    }
  }
  return out;
}

}  // namespace

ComplexMatrix weighted_kernel_matrix(const KernelSpec& kernel, const QuadratureRule& rule) {
  const auto size = static_cast<std::int64_t>(rule.size());
  ComplexMatrix a(rule.size(), rule.size());
  int bad = 0;
  detail::LoopExceptions errors;
#pragma omp parallel for schedule(static) reduction(+ : bad)
  for (std::int64_t i = 0; i < size; ++i) {
    try {
      Complex* row = a.row(static_cast<std::size_t>(i));
      for (std::int64_t j = 0; j < size; ++j) {
        row[j] = kernel(rule.nodes[i], rule.nodes[j]) * rule.weights[j];
        if (!finite(row[j])) {
          ++bad;
        }
      }
    } catch (...) {
      errors.capture(i);
    }
  }
  errors.rethrow_if_any();
  if (bad > 0) {
    throw EvaluationError("kernel is non-finite at " + std::to_string(bad) +
                          " quadrature node pair(s)");
  }
  return a;
}

MinorSums minor_sums(const ComplexMatrix& a, int order) { return minor_sums_impl(a, nullptr, order); }

MinorSums minor_sums(const ComplexMatrix& a, std::span<const Complex> column, int order) {
  if (column.size() != a.rows()) {
    throw InvalidArgument("minor_sums: column length must match the matrix");
  }
  return minor_sums_impl(a, column.data(), order);
}

double solve_dense(ComplexMatrix m, std::vector<Complex>& rhs, double pivot_tolerance) {
  const auto size = static_cast<std::int64_t>(m.rows());
  if (m.rows() != m.cols() || rhs.size() != m.rows()) {
    throw InvalidArgument("solve_dense: dimension mismatch");
  }
  // Elimination noise on an exactly singular matrix grows like n eps max|M|.
  const double relative = std::max(pivot_tolerance, 64.0 * static_cast<double>(m.rows()) *
                                                        std::numeric_limits<double>::epsilon());
  const double threshold = relative * m.max_abs();
  double min_pivot = INFINITY;
  double max_pivot = 0.0;

  for (std::int64_t c = 0; c < size; ++c) {
    std::int64_t piv = c;
    double best = std::abs(m(c, c));
    for (std::int64_t r = c + 1; r < size; ++r) {
      const double v = std::abs(m(r, c));
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (!(best > threshold)) {
      throw SingularMatrix("no usable pivot in column " + std::to_string(c) + " (|pivot| = " +
                           std::to_string(best) + ", threshold " + std::to_string(threshold) + ")");
    }
    min_pivot = std::min(min_pivot, best);
    max_pivot = std::max(max_pivot, best);
    if (piv != c) {
      std::swap_ranges(m.row(c), m.row(c) + size, m.row(piv));
      std::swap(rhs[c], rhs[piv]);
    }
    const Complex inv = 1.0 / m(c, c);
    const Complex* prow = m.row(c);
    const Complex prhs = rhs[c];
#pragma omp parallel for schedule(static) if (size - c > 64)
    for (std::int64_t r = c + 1; r < size; ++r) {
      Complex* row = m.row(r);
      const Complex f = row[c] * inv;
      row[c] = Complex{0.0, 0.0};
      for (std::int64_t j = c + 1; j < size; ++j) {
        row[j] -= f * prow[j];
      }
      rhs[r] -= f * prhs;
    }
  }

  for (std::int64_t r = size - 1; r >= 0; --r) {
    Complex acc = rhs[r];
    const Complex* row = m.row(r);
    for (std::int64_t j = r + 1; j < size; ++j) {
      acc -= row[j] * rhs[j];
    }
    rhs[r] = acc / row[r];
  }
  return size == 0 ? 1.0 : min_pivot / max_pivot;
}

std::vector<Complex> evaluate(const RealToComplex& f, std::span<const double> grid) {
  const auto size = static_cast<std::int64_t>(grid.size());
  std::vector<Complex> out(grid.size());
  int bad = 0;
  detail::LoopExceptions errors;
#pragma omp parallel for schedule(static) reduction(+ : bad)
  for (std::int64_t i = 0; i < size; ++i) {
    try {
      out[i] = f(grid[i]);
      if (!finite(out[i])) {
        ++bad;
      }
    } catch (...) {
      errors.capture(i);
    }
  }
  errors.rethrow_if_any();
  if (bad > 0) {
    throw EvaluationError("function is non-finite at " + std::to_string(bad) + " point(s)");
  }
  return out;
}

}  // namespace fredholm::parallel
