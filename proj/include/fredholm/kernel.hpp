#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "fredholm/quadrature.hpp"

namespace fredholm {

using KernelFn = std::function<Complex(double x, double t)>;

/// Complex kernel K(x, t) on an interval. Either an arbitrary callable or a
/// rank-1 product g(x) h(t). Callables must be pure; the solvers evaluate them
/// from several threads at once.
class KernelSpec {
 public:
  struct General {
    KernelFn eval;
  };
  struct Separable {
    RealToComplex g;
    RealToComplex h;
  };

  static KernelSpec general(const Interval& domain, KernelFn eval);
  static KernelSpec separable(const Interval& domain, RealToComplex g, RealToComplex h);

  Complex operator()(double x, double t) const;

  const Interval& domain() const { return domain_; }
  bool is_separable() const { return std::holds_alternative<Separable>(form_); }
  /// Null unless the kernel was built with separable().
  const Separable* separable_parts() const { return std::get_if<Separable>(&form_); }

 private:
  KernelSpec(const Interval& domain, std::variant<General, Separable> form)
      : domain_(domain), form_(std::move(form)) {}

  Interval domain_;
  std::variant<General, Separable> form_;
};

struct SolverConfig {
  int series_order_max = 4;     ///< highest n kept in the determinant and minor series
  std::size_t nodes = 64;       ///< quadrature size
  double det_tolerance = 1e-10; ///< |Delta(lambda)| below this is a characteristic value
  RuleKind rule_kind = RuleKind::gauss;
  NodePlacement placement = NodePlacement::midpoint;  ///< uniform rule only

  /// Throws InvalidArgument when an invariant is violated.
  void validate() const;
};

/// u(x) or psi(x) sampled on a strictly increasing grid.
struct SampledFunction {
  std::vector<double> grid;
  std::vector<Complex> values;

  std::size_t size() const { return grid.size(); }
  void validate() const;
};

/// Throws InvalidArgument unless the grid is non-empty, finite and strictly increasing.
void validate_grid(const std::vector<double>& grid);

}  // namespace fredholm
