#pragma once

// Serial reference implementations. These follow the textbook definitions
// literally (full tensor-product sums, plain Gaussian elimination) and exist
// to check the parallel kernels and to benchmark against them. Cost grows as
// nodes^n, so keep them to small problems.

#include <complex>
#include <vector>

#include "fredholm/dense.hpp"
#include "fredholm/kernel.hpp"
#include "fredholm/quadrature.hpp"

namespace fredholm::reference {

/// d_n: n-fold tensor-product sum of w_{p1}..w_{pn} det[K(t_pi, t_pj)].
Complex determinant_coefficient(const KernelSpec& kernel, const QuadratureRule& rule, int n);

/// d_n(x, t): the same sum over the bordered (n+1) x (n+1) determinants
/// with first row K(x, .) and first column K(., t).
Complex minor_coefficient(const KernelSpec& kernel, const QuadratureRule& rule, double x, double t,
                          int n);

/// Serial A(i, j) = K(t_i, t_j) w_j.
ComplexMatrix weighted_kernel_matrix(const KernelSpec& kernel, const QuadratureRule& rule);

/// Serial LU with partial pivoting; same contract as parallel::solve_dense.
double solve_dense(ComplexMatrix m, std::vector<Complex>& rhs, double pivot_tolerance = 1e-13);

}  // namespace fredholm::reference
