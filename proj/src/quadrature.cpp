#include "fredholm/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "fredholm/errors.hpp"

namespace fredholm {

Interval Interval::make(double a, double b) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
    throw InvalidArgument("interval requires finite a < b, got [" + std::to_string(a) + ", " +
                          std::to_string(b) + "]");
  }
  return Interval{a, b};
}

QuadratureRule uniform_rule(const Interval& interval, std::size_t n, NodePlacement placement) {
  if (n == 0) {
    throw InvalidArgument("uniform_rule: n must be at least 1");
  }
  const Interval iv = Interval::make(interval.a, interval.b);
  const double dt = iv.length() / static_cast<double>(n);
  const double shift = placement == NodePlacement::midpoint ? 0.5 : 0.0;

  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.assign(n, dt);
  for (std::size_t h = 0; h < n; ++h) {
    rule.nodes[h] = iv.a + (static_cast<double>(h) + shift) * dt;
  }
  return rule;
}

QuadratureRule gauss_rule(const Interval& interval, std::size_t n) {
  if (n < 1 || n > 512) {
    throw InvalidArgument("gauss_rule: n must lie in [1, 512], got " + std::to_string(n));
  }
  const Interval iv = Interval::make(interval.a, interval.b);
  const double half = 0.5 * iv.length();
  const double mid = 0.5 * (iv.a + iv.b);

  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);

  // Roots of P_n by Newton from the Tricomi-type initial guess. The
  // three-term recurrence gives P_n and P_{n-1}, which yield P_n'.
  const double nd = static_cast<double>(n);
  auto legendre = [n, nd](double x) {
    double p0 = 1.0;
    double p1 = x;
    for (std::size_t j = 2; j <= n; ++j) {
      const double jd = static_cast<double>(j);
      const double p2 = ((2.0 * jd - 1.0) * x * p1 - (jd - 1.0) * p0) / jd;
      p0 = p1;
      p1 = p2;
    }
    const double dp = nd * (x * p1 - p0) / (x * x - 1.0);
    return std::pair{p1, dp};
  };

  const std::size_t m = (n + 1) / 2;
  for (std::size_t i = 0; i < m; ++i) {
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (nd + 0.5));
    for (int iter = 0; iter < 100; ++iter) {
      const auto [p, dp] = legendre(x);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) <= 1e-15) {
        break;
      }
    }
    const double dp = legendre(x).second;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    // x is the i-th largest root; store ascending.
    rule.nodes[i] = mid - half * x;
    rule.nodes[n - 1 - i] = mid + half * x;
    rule.weights[i] = half * w;
    rule.weights[n - 1 - i] = half * w;
  }
  if (n % 2 == 1) {
    rule.nodes[n / 2] = mid;
  }
  return rule;
}

QuadratureRule make_rule(RuleKind kind, const Interval& interval, std::size_t n,
                         NodePlacement placement) {
  return kind == RuleKind::gauss ? gauss_rule(interval, n) : uniform_rule(interval, n, placement);
}

Complex integrate_1d(const RealToComplex& f, const QuadratureRule& rule) {
  Complex sum{0.0, 0.0};
  for (std::size_t q = 0; q < rule.size(); ++q) {
    sum += rule.weights[q] * f(rule.nodes[q]);
  }
  return sum;
}

}  // namespace fredholm
