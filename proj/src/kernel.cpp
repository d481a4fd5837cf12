#include "fredholm/kernel.hpp"

#include <cmath>
#include <string>

#include "fredholm/errors.hpp"

namespace fredholm {

KernelSpec KernelSpec::general(const Interval& domain, KernelFn eval) {
  if (!eval) {
    throw InvalidArgument("KernelSpec::general: empty callable");
  }
  return KernelSpec(Interval::make(domain.a, domain.b), General{std::move(eval)});
}

KernelSpec KernelSpec::separable(const Interval& domain, RealToComplex g, RealToComplex h) {
  if (!g || !h) {
    throw InvalidArgument("KernelSpec::separable: empty factor");
  }
  return KernelSpec(Interval::make(domain.a, domain.b), Separable{std::move(g), std::move(h)});
}

Complex KernelSpec::operator()(double x, double t) const {
  if (const auto* s = std::get_if<Separable>(&form_)) {
    return s->g(x) * s->h(t);
  }
  return std::get<General>(form_).eval(x, t);
}

void SolverConfig::validate() const {
  if (series_order_max < 1 || series_order_max > 6) {
    throw InvalidArgument("series_order_max must lie in [1, 6], got " +
                          std::to_string(series_order_max));
  }
  if (nodes < 2) {
    throw InvalidArgument("nodes must be at least 2");
  }
  if (rule_kind == RuleKind::gauss && nodes > 512) {
    throw InvalidArgument("gauss rule supports at most 512 nodes");
  }
  if (!(det_tolerance > 0.0) || !std::isfinite(det_tolerance)) {
    throw InvalidArgument("det_tolerance must be positive and finite");
  }
}

void validate_grid(const std::vector<double>& grid) {
  if (grid.empty()) {
    throw InvalidArgument("grid is empty");
  }
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!std::isfinite(grid[i])) {
      throw InvalidArgument("grid contains a non-finite abscissa");
    }
    if (i > 0 && !(grid[i] > grid[i - 1])) {
      throw InvalidArgument("grid must be strictly increasing");
    }
  }
}

void SampledFunction::validate() const {
  validate_grid(grid);
  if (values.size() != grid.size()) {
    throw InvalidArgument("SampledFunction: grid and values differ in length");
  }
}

}  // namespace fredholm
