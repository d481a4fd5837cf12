#pragma once

// Second-kind Fredholm equations u(x) = f(x) + lambda * int K(x,t) u(t) dt.
//
// The determinant series Delta(lambda) = 1 + sum_n (-lambda)^n / n! d_n and
// the first-minor series Delta(x,t;lambda) = K(x,t) + sum_n (-lambda)^n / n! d_n(x,t)
// are truncated at SolverConfig::series_order_max. The n-fold integrals use
// the tensor product of the configured 1D rule; since the integrand is a
// determinant, coincident indices contribute nothing and permuted indices
// contribute equally, so each d_n is evaluated as n! times a sum over
// strictly increasing index sets.

#include <complex>
#include <span>
#include <vector>

#include "fredholm/kernel.hpp"
#include "fredholm/quadrature.hpp"

namespace fredholm {

struct SeriesResult {
  Complex value;
  /// d_n for n = 1..series_order_max (index 0 holds n = 1).
  std::vector<Complex> coefficients;
  /// |(-lambda)^N / N! d_N| of the last kept term; a truncation indicator.
  double last_term_magnitude = 0.0;
};

/// Delta(lambda). Throws EvaluationError if the kernel is non-finite on the node grid.
SeriesResult fredholm_determinant(const KernelSpec& kernel, Complex lambda, const SolverConfig& config);

/// Delta(x, t; lambda). x and t must lie in the kernel's domain.
SeriesResult fredholm_first_minor(const KernelSpec& kernel, double x, double t, Complex lambda,
                                  const SolverConfig& config);

/// R(x, t; lambda) = Delta(x, t; lambda) / Delta(lambda).
/// Throws SingularDeterminant when |Delta(lambda)| < config.det_tolerance.
Complex resolvent(const KernelSpec& kernel, double x, double t, Complex lambda,
                  const SolverConfig& config);

struct ResolventSolution {
  SampledFunction u;
  Complex determinant;
  double last_term_magnitude = 0.0;
};

/// u(x) = f(x) + lambda * int R(x,t;lambda) f(t) dt on `grid`.
///
/// The t-integral is folded into the bordered minors (Cramer's rule with the
/// column K f), so the cost is one pass over the index sets rather than one
/// per grid point and node. Grid points may lie outside the kernel domain as
/// long as K(x, .) is defined there.
ResolventSolution solve_resolvent_detailed(const KernelSpec& kernel, const RealToComplex& f,
                                           Complex lambda, const std::vector<double>& grid,
                                           const SolverConfig& config);

SampledFunction solve_resolvent(const KernelSpec& kernel, const RealToComplex& f, Complex lambda,
                                const std::vector<double>& grid, const SolverConfig& config);

/// Nystrom discretisation (delta_pq - lambda K_pq w_q) u_q = f_p solved by LU
/// with partial pivoting. Returns u at the quadrature nodes.
/// Throws SingularMatrix when no pivot exceeds 1e-13 * max|entry|.
SampledFunction solve_nystrom(const KernelSpec& kernel, const RealToComplex& f, Complex lambda,
                              const SolverConfig& config);

/// As above, then u(x) = f(x) + lambda sum_q w_q K(x, t_q) u_q on `grid`.
SampledFunction solve_nystrom(const KernelSpec& kernel, const RealToComplex& f, Complex lambda,
                              const SolverConfig& config, const std::vector<double>& grid);

/// Fixed-point iteration u <- f + lambda int K u at the quadrature nodes.
/// Throws DivergenceDetected when the iterate norm grows past 1e6 times its start.
SampledFunction solve_neumann(const KernelSpec& kernel, const RealToComplex& f, Complex lambda,
                              int iterations, const SolverConfig& config);

SampledFunction solve_neumann(const KernelSpec& kernel, const RealToComplex& f, Complex lambda,
                              int iterations, const SolverConfig& config,
                              const std::vector<double>& grid);

/// Quadrature rule the solvers use for this kernel and configuration.
QuadratureRule solver_rule(const KernelSpec& kernel, const SolverConfig& config);

}  // namespace fredholm
