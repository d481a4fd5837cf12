#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

namespace fredholm {

using Complex = std::complex<double>;
using RealToComplex = std::function<Complex(double)>;

/// Finite interval [a, b] with a < b.
struct Interval {
  double a = 0.0;
  double b = 1.0;

  /// Validating constructor; throws InvalidArgument unless a < b, both finite.
  static Interval make(double a, double b);
  double length() const { return b - a; }
  bool contains(double x) const { return x >= a && x <= b; }
};

/// Where the equal-width partition places its nodes.
enum class NodePlacement {
  midpoint,       ///< a + (h + 1/2) dt, h = 0..n-1
  left_endpoint,  ///< a + h dt, h = 0..n-1 (literal Riemann sum)
};

enum class RuleKind { uniform, gauss };

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }
};

/// Equal-width rule with n nodes and weights (b - a) / n.
QuadratureRule uniform_rule(const Interval& interval, std::size_t n,
                            NodePlacement placement = NodePlacement::midpoint);

/// Gauss-Legendre rule mapped to the interval, 1 <= n <= 512.
/// Exact for polynomials up to degree 2n - 1.
QuadratureRule gauss_rule(const Interval& interval, std::size_t n);

QuadratureRule make_rule(RuleKind kind, const Interval& interval, std::size_t n,
                         NodePlacement placement = NodePlacement::midpoint);

/// Sum of w_q f(t_q) in node order.
Complex integrate_1d(const RealToComplex& f, const QuadratureRule& rule);

}  // namespace fredholm
