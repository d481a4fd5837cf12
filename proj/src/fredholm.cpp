#include "fredholm/fredholm.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>
#include <string>

#include "fredholm/errors.hpp"
#include "fredholm/parallel.hpp"
#include "omp_exceptions.hpp"

namespace fredholm {
namespace {

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) {
    f *= i;
  }
  return f;
}

bool finite(Complex v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

Complex checked(Complex v, const char* what) {
  if (!finite(v)) {
    throw EvaluationError(std::string(what) + " is non-finite");
  }
  return v;
}

struct Discretization {
  QuadratureRule rule;
  ComplexMatrix weighted;  // K(t_i, t_j) w_j
};

Discretization discretize(const KernelSpec& kernel, const SolverConfig& config) {
  config.validate();
  Discretization d;
  d.rule = solver_rule(kernel, config);
  d.weighted = parallel::weighted_kernel_matrix(kernel, d.rule);
  return d;
}

// Delta(lambda) from principal-minor sums S_n: sum_n (-lambda)^n S_n.
SeriesResult determinant_from_sums(const parallel::MinorSums& sums, Complex lambda, int order) {
  SeriesResult out;
  out.value = Complex{1.0, 0.0};
  Complex power{1.0, 0.0};
  for (int n = 1; n <= order; ++n) {
    power *= -lambda;
    const Complex term = power * sums.principal[n];
    out.value += term;
    out.coefficients.push_back(factorial(n) * sums.principal[n]);
    out.last_term_magnitude = std::abs(term);
  }
  return out;
}

void require_nonsingular(Complex determinant, const SolverConfig& config, Complex lambda) {
  if (!(std::abs(determinant) >= config.det_tolerance)) {
    std::ostringstream msg;
    msg << "|Delta(lambda)| = " << std::abs(determinant) << " < " << config.det_tolerance
        << " at lambda = " << lambda << " (characteristic value)";
    throw SingularDeterminant(msg.str());
  }
}

void require_in_domain(const KernelSpec& kernel, double x, double t) {
  if (!kernel.domain().contains(x) || !kernel.domain().contains(t)) {
    throw InvalidArgument("fredholm_first_minor: (x, t) outside the kernel domain");
  }
}

// u(x) = f(x) + lambda sum_q w_q K(x, t_q) u_q, evaluated per grid point.
SampledFunction interpolate(const KernelSpec& kernel, const RealToComplex& f, Complex lambda,
                            const QuadratureRule& rule, const std::vector<Complex>& node_values,
                            const std::vector<double>& grid) {
  validate_grid(grid);
  SampledFunction out;
  out.grid = grid;
  out.values.resize(grid.size());
  const auto size = static_cast<std::int64_t>(grid.size());
  detail::LoopExceptions errors;
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < size; ++i) {
    try {
      const double x = grid[i];
      Complex acc{0.0, 0.0};
      for (std::size_t q = 0; q < rule.size(); ++q) {
        acc += rule.weights[q] * kernel(x, rule.nodes[q]) * node_values[q];
      }
      out.values[i] = checked(checked(f(x), "f(x)") + lambda * acc, "interpolated solution");
    } catch (...) {
      errors.capture(i);
    }
  }
  errors.rethrow_if_any();
  return out;
}

double norm2(const std::vector<Complex>& v) {
  double s = 0.0;
  for (const Complex& c : v) {
    s += std::norm(c);
  }
  return std::sqrt(s);
}

}  // namespace

QuadratureRule solver_rule(const KernelSpec& kernel, const SolverConfig& config) {
  return make_rule(config.rule_kind, kernel.domain(), config.nodes, config.placement);
}

SeriesResult fredholm_determinant(const KernelSpec& kernel, Complex lambda, const SolverConfig& config) {
  const Discretization d = discretize(kernel, config);
  const auto sums = parallel::minor_sums(d.weighted, config.series_order_max);
  return determinant_from_sums(sums, lambda, config.series_order_max);
}

SeriesResult fredholm_first_minor(const KernelSpec& kernel, double x, double t, Complex lambda,
                                  const SolverConfig& config) {
  require_in_domain(kernel, x, t);
  const Discretization d = discretize(kernel, config);
  const auto& rule = d.rule;
  const std::size_t size = rule.size();

  std::vector<Complex> column(size);  // K(t_i, t)
  std::vector<Complex> border(size);  // w_j K(x, t_j)
  for (std::size_t i = 0; i < size; ++i) {
    column[i] = checked(kernel(rule.nodes[i], t), "K(t_i, t)");
    border[i] = rule.weights[i] * checked(kernel(x, rule.nodes[i]), "K(x, t_j)");
  }
  const Complex corner = checked(kernel(x, t), "K(x, t)");

  const int order = config.series_order_max;
  const auto sums = parallel::minor_sums(d.weighted, column, order);

  // Bordered determinant expanded along its first row:
  // det [[K(x,t), rho^T], [c, A_P]] = K(x,t) det A_P - sum_j rho_j det A_P(j <- c).
  SeriesResult out;
  out.value = corner;
  Complex power{1.0, 0.0};
  for (int n = 1; n <= order; ++n) {
    power *= -lambda;
    Complex bordered = corner * sums.principal[n];
    for (std::size_t j = 0; j < size; ++j) {
      bordered -= border[j] * sums.replaced[n][j];
    }
    const Complex term = power * bordered;
    out.value += term;
    out.coefficients.push_back(factorial(n) * bordered);
    out.last_term_magnitude = std::abs(term);
  }
  return out;
}

Complex resolvent(const KernelSpec& kernel, double x, double t, Complex lambda,
                  const SolverConfig& config) {
  const SeriesResult det = fredholm_determinant(kernel, lambda, config);
  require_nonsingular(det.value, config, lambda);
  const SeriesResult minor = fredholm_first_minor(kernel, x, t, lambda, config);
  return minor.value / det.value;
}

ResolventSolution solve_resolvent_detailed(const KernelSpec& kernel, const RealToComplex& f,
                                           Complex lambda, const std::vector<double>& grid,
                                           const SolverConfig& config) {
  validate_grid(grid);
  const Discretization d = discretize(kernel, config);
  const auto& rule = d.rule;
  const auto size = static_cast<std::int64_t>(rule.size());
  const int order = config.series_order_max;

  const std::vector<Complex> f_nodes = parallel::evaluate(f, rule.nodes);

  // Column of the folded bordered minors: (int K(., t) f(t) dt)(t_i).
  std::vector<Complex> kf(rule.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < size; ++i) {
    const Complex* row = d.weighted.row(i);
    Complex acc{0.0, 0.0};
    for (std::int64_t q = 0; q < size; ++q) {
      acc += row[q] * f_nodes[q];
    }
    kf[i] = acc;
  }

  const auto sums = parallel::minor_sums(d.weighted, kf, order);
  const SeriesResult det = determinant_from_sums(sums, lambda, order);
  require_nonsingular(det.value, config, lambda);

  std::vector<Complex> powers(order + 1);
  powers[0] = Complex{1.0, 0.0};
  for (int n = 1; n <= order; ++n) {
    powers[n] = powers[n - 1] * (-lambda);
  }

  ResolventSolution out;
  out.determinant = det.value;
  out.last_term_magnitude = det.last_term_magnitude;
  out.u.grid = grid;
  out.u.values.resize(grid.size());

  const auto points = static_cast<std::int64_t>(grid.size());
  detail::LoopExceptions errors;
#pragma omp parallel
  {
    std::vector<Complex> border(rule.size());
#pragma omp for schedule(static)
    for (std::int64_t g = 0; g < points; ++g) {
      try {
        const double x = grid[g];
        Complex corner{0.0, 0.0};  // int K(x, t) f(t) dt
        for (std::int64_t j = 0; j < size; ++j) {
          border[j] = rule.weights[j] * checked(kernel(x, rule.nodes[j]), "K(x, t_j)");
          corner += border[j] * f_nodes[j];
        }
        Complex integral = corner;  // int Delta(x, t; lambda) f(t) dt
        for (int n = 1; n <= order; ++n) {
          Complex bordered = corner * sums.principal[n];
          const auto& replaced = sums.replaced[n];
          for (std::int64_t j = 0; j < size; ++j) {
            bordered -= border[j] * replaced[j];
          }
          integral += powers[n] * bordered;
        }
        const Complex fx = checked(f(x), "f(x)");
        out.u.values[g] = checked(fx + lambda * integral / det.value, "resolvent solution");
      } catch (...) {
        errors.capture(g);
      }
    }
  }
  errors.rethrow_if_any();
  return out;
}

SampledFunction solve_resolvent(const KernelSpec& kernel, const RealToComplex& f, Complex lambda,
                                const std::vector<double>& grid, const SolverConfig& config) {
  return solve_resolvent_detailed(kernel, f, lambda, grid, config).u;
}

SampledFunction solve_nystrom(const KernelSpec& kernel, const RealToComplex& f, Complex lambda,
                              const SolverConfig& config) {
  Discretization d = discretize(kernel, config);
  const std::size_t size = d.rule.size();

  ComplexMatrix system = std::move(d.weighted);
  for (std::size_t i = 0; i < size; ++i) {
    Complex* row = system.row(i);
    for (std::size_t j = 0; j < size; ++j) {
      row[j] *= -lambda;
    }
    row[i] += 1.0;
  }
  std::vector<Complex> u = parallel::evaluate(f, d.rule.nodes);
  parallel::solve_dense(std::move(system), u);

  SampledFunction out;
  out.grid = d.rule.nodes;
  out.values = std::move(u);
  return out;
}

SampledFunction solve_nystrom(const KernelSpec& kernel, const RealToComplex& f, Complex lambda,
                              const SolverConfig& config, const std::vector<double>& grid) {
  validate_grid(grid);
  const SampledFunction nodes = solve_nystrom(kernel, f, lambda, config);
  return interpolate(kernel, f, lambda, solver_rule(kernel, config), nodes.values, grid);
}

SampledFunction solve_neumann(const KernelSpec& kernel, const RealToComplex& f, Complex lambda,
                              int iterations, const SolverConfig& config) {
  if (iterations < 1) {
    throw InvalidArgument("solve_neumann: iterations must be at least 1");
  }
  const Discretization d = discretize(kernel, config);
  const auto size = static_cast<std::int64_t>(d.rule.size());
  const std::vector<Complex> f_nodes = parallel::evaluate(f, d.rule.nodes);
  const double start = std::max(norm2(f_nodes), std::numeric_limits<double>::min());

  std::vector<Complex> u = f_nodes;
  std::vector<Complex> next(u.size());
  for (int it = 0; it < iterations; ++it) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < size; ++i) {
      const Complex* row = d.weighted.row(i);
      Complex acc{0.0, 0.0};
      for (std::int64_t q = 0; q < size; ++q) {
        acc += row[q] * u[q];
      }
      next[i] = f_nodes[i] + lambda * acc;
    }
    u.swap(next);
    const double growth = norm2(u) / start;
    if (!(growth <= 1e6)) {
      std::ostringstream msg;
      msg << "Neumann iterate grew by " << growth << " after " << (it + 1) << " iteration(s)";
      throw DivergenceDetected(msg.str());
    }
  }

  SampledFunction out;
  out.grid = d.rule.nodes;
  out.values = std::move(u);
  return out;
}

SampledFunction solve_neumann(const KernelSpec& kernel, const RealToComplex& f, Complex lambda,
                              int iterations, const SolverConfig& config,
                              const std::vector<double>& grid) {
  validate_grid(grid);
  const SampledFunction nodes = solve_neumann(kernel, f, lambda, iterations, config);
  return interpolate(kernel, f, lambda, solver_rule(kernel, config), nodes.values, grid);
}

}  // namespace fredholm
