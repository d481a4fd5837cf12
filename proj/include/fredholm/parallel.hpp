#pragma once

// OpenMP kernels behind the Fredholm solvers. Every kernel produces results
// that do not depend on the thread count: work is split over a fixed index
// and partial sums are reduced serially in index order.
//
// The serial counterparts live in reference.hpp and are kept for testing and
// benchmarking.

#include <complex>
#include <span>
#include <vector>

#include "fredholm/dense.hpp"
#include "fredholm/kernel.hpp"
#include "fredholm/quadrature.hpp"

namespace fredholm::parallel {

/// Sums of n x n minors of a weighted kernel matrix A over all index sets
/// P = {p_1 < ... < p_n}.
struct MinorSums {
  /// principal[n] = sum_P det A[P, P]; principal[0] = 1.
  std::vector<Complex> principal;
  /// replaced[n][j] = sum over P containing j of det A[P, P] with column j
  /// replaced by column[P]. replaced[0] is unused. Empty when no column was given.
  std::vector<std::vector<Complex>> replaced;
};

/// A(i, j) = K(t_i, t_j) w_j. Throws EvaluationError on a non-finite entry.
ComplexMatrix weighted_kernel_matrix(const KernelSpec& kernel, const QuadratureRule& rule);

/// Principal-minor sums up to `order` (1 <= order <= 7).
MinorSums minor_sums(const ComplexMatrix& a, int order);

/// Principal-minor sums plus Cramer-type column-replaced sums for `column`.
MinorSums minor_sums(const ComplexMatrix& a, std::span<const Complex> column, int order);

/// Solves M u = rhs in place by LU with partial pivoting; rows of the
/// trailing update run in parallel. Throws SingularMatrix when the best pivot
/// is below max(pivot_tolerance, 64 n eps) * max|M|.
/// Returns min|pivot| / max|pivot| as a conditioning hint.
double solve_dense(ComplexMatrix m, std::vector<Complex>& rhs, double pivot_tolerance = 1e-13);

/// values[i] = f(grid[i]) evaluated concurrently. Throws EvaluationError on non-finite output.
std::vector<Complex> evaluate(const RealToComplex& f, std::span<const double> grid);

}  // namespace fredholm::parallel
