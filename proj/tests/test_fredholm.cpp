#include <doctest.h>

#include <cmath>

#include "fredholm/errors.hpp"
#include "fredholm/fredholm.hpp"

using namespace fredholm;

namespace {

KernelSpec rank1() {
  return KernelSpec::general({0.0, 1.0}, [](double x, double t) { return Complex{x * t, 0.0}; });
}

KernelSpec rank2() {
  return KernelSpec::general({0.0, 1.0}, [](double x, double t) { return Complex{x * t + x * x * t * t, 0.0}; });
}

KernelSpec oscillatory() {
  return KernelSpec::general({0.0, 1.0}, [](double x, double t) { return std::exp(Complex{0.0, x * t}); });
}

const RealToComplex identity = [](double x) { return Complex{x, 0.0}; };

SolverConfig config(std::size_t nodes = 16) {
  SolverConfig c;
  c.nodes = nodes;
  return c;
}

}  // namespace

TEST_CASE("rank-1 determinant and vanishing higher coefficients") {
  const auto det = fredholm_determinant(rank1(), 1.0, config());
  CHECK(std::abs(det.value - 2.0 / 3.0) <= 1e-12);
  REQUIRE(det.coefficients.size() == 4);
  CHECK(std::abs(det.coefficients[0] - 1.0 / 3.0) <= 1e-14);
  for (std::size_t n = 1; n < det.coefficients.size(); ++n) {
    CHECK(std::abs(det.coefficients[n]) <= 1e-14);
  }
  CHECK(std::abs(fredholm_determinant(rank1(), 3.0, config()).value) <= 1e-10);
  CHECK(fredholm_determinant(oscillatory(), 0.0, config()).value == Complex{1.0, 0.0});
}

TEST_CASE("rank-2 determinant against det(I - lambda M)") {
  for (double lambda : {-1.0, 1.0, 0.5, 2.0}) {
    const double want = (1.0 - lambda / 3.0) * (1.0 - lambda / 5.0) - lambda * lambda / 16.0;
    CAPTURE(lambda);
    CHECK(std::abs(fredholm_determinant(rank2(), lambda, config()).value - want) <= 1e-12);
  }
}

TEST_CASE("first minor of a rank-1 kernel is the kernel") {
  for (double x : {0.2, 1.0}) {
    for (double t : {0.5, 1.0}) {
      const auto m = fredholm_first_minor(rank1(), x, t, 1.7, config());
      CHECK(std::abs(m.value - x * t) <= 1e-14);
    }
  }
  CHECK(std::abs(fredholm_first_minor(rank1(), 1.0, 1.0, 0.4, config()).value - 1.0) <= 1e-14);
  CHECK_THROWS_AS(fredholm_first_minor(rank1(), 1.5, 0.5, 1.0, config()), InvalidArgument);
}

TEST_CASE("rank-1 resolvent") {
  CHECK(std::abs(resolvent(rank1(), 1.0, 1.0, 1.0, config()) - 1.5) <= 1e-12);
  CHECK(std::abs(resolvent(oscillatory(), 0.3, 0.8, 0.0, config()) - std::exp(Complex{0.0, 0.24})) <= 1e-15);
  CHECK_THROWS_AS(resolvent(rank1(), 0.5, 0.5, 3.0, config()), SingularDeterminant);
}

TEST_CASE("resolvent equation R = K + lambda int K R") {
  const auto kernel = oscillatory();
  const auto cfg = config();
  const auto rule = solver_rule(kernel, cfg);
  for (double lambda : {-1.0, 0.5, 1.0}) {
    double worst = 0.0;
    for (double x : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      for (double t : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        Complex integral{0.0, 0.0};
        for (std::size_t q = 0; q < rule.size(); ++q) {
          integral += rule.weights[q] * kernel(x, rule.nodes[q]) * resolvent(kernel, rule.nodes[q], t, lambda, cfg);
        }
        const Complex lhs = resolvent(kernel, x, t, lambda, cfg);
        worst = std::max(worst, std::abs(lhs - kernel(x, t) - lambda * integral));
      }
    }
    CAPTURE(lambda);
    CHECK(worst <= 1e-8);
  }
}

TEST_CASE("solve_resolvent") {
  const auto u = solve_resolvent(rank1(), identity, 1.0, {0.5, 1.0}, config(64));
  CHECK(std::abs(u.values[0] - 0.75) <= 1e-12);
  CHECK(std::abs(u.values[1] - 1.5) <= 1e-12);
  const auto v = solve_resolvent(rank1(), identity, -1.0, {1.0}, config());
  CHECK(std::abs(v.values[0] - 0.75) <= 1e-12);
  const auto same = solve_resolvent(oscillatory(), identity, 0.0, {0.1, 0.7}, config());
  CHECK(same.values[0] == Complex{0.1, 0.0});
  CHECK(same.values[1] == Complex{0.7, 0.0});
  CHECK_THROWS_AS(solve_resolvent(rank1(), identity, 3.0, {0.5}, config()), SingularDeterminant);
  CHECK_THROWS_AS(solve_resolvent(rank1(), identity, 1.0, {0.5, 0.5}, config()), InvalidArgument);
}

TEST_CASE("solve_resolvent detail exposes the determinant") {
  const auto r = solve_resolvent_detailed(rank2(), identity, 1.0, {0.5}, config());
  CHECK(std::abs(r.determinant - ((2.0 / 3.0) * 0.8 - 1.0 / 16.0)) <= 1e-12);
  CHECK(r.last_term_magnitude <= 1e-14);
}

TEST_CASE("solve_nystrom") {
  const auto u = solve_nystrom(rank1(), identity, 1.0, config(200), {0.5});
  CHECK(std::abs(u.values[0] - 0.75) <= 1e-6);
  const auto nodes = solve_nystrom(rank1(), identity, 0.0, config(8));
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    CHECK(nodes.values[i] == Complex{nodes.grid[i], 0.0});
  }
  CHECK_THROWS_AS(solve_nystrom(rank1(), identity, 3.0, config(200)), SingularMatrix);
}

TEST_CASE("uniform midpoint rule converges on the rank-1 problem") {
  SolverConfig c = config(200);
  c.rule_kind = RuleKind::uniform;
  const auto u = solve_nystrom(rank1(), identity, 1.0, c, {0.5});
  CHECK(std::abs(u.values[0] - 0.75) <= 1e-4);
}

TEST_CASE("solve_neumann") {
  const auto u = solve_neumann(rank1(), identity, 0.1, 30, config(), {1.0});
  CHECK(std::abs(u.values[0] - 3.0 / 2.9) <= 1e-8);
  const auto same = solve_neumann(rank1(), identity, 0.0, 5, config(), {0.3});
  CHECK(same.values[0] == Complex{0.3, 0.0});
  CHECK_THROWS_AS(solve_neumann(rank1(), identity, 5.0, 200, config()), DivergenceDetected);
  CHECK_THROWS_AS(solve_neumann(rank1(), identity, 0.1, 0, config()), InvalidArgument);
}

TEST_CASE("solvers agree on a complex kernel") {
  const std::vector<double> grid{0.0, 0.3, 0.6, 1.0};
  const RealToComplex f = [](double x) { return Complex{std::cos(x), x}; };
  const auto r = solve_resolvent(oscillatory(), f, 0.5, grid, config(24));
  const auto n = solve_nystrom(oscillatory(), f, 0.5, config(24), grid);
  const auto s = solve_neumann(oscillatory(), f, 0.5, 80, config(24), grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK(std::abs(r.values[i] - n.values[i]) <= 1e-9);
    CHECK(std::abs(s.values[i] - n.values[i]) <= 1e-12);
  }
}

TEST_CASE("non-finite kernel values are reported") {
  const auto bad = KernelSpec::general({0.0, 1.0}, [](double x, double t) { return Complex{1.0 / (x - t), 0.0}; });
  CHECK_THROWS_AS(fredholm_determinant(bad, 1.0, config()), EvaluationError);
  const RealToComplex nan_f = [](double) { return Complex{NAN, 0.0}; };
  CHECK_THROWS_AS(solve_nystrom(rank1(), nan_f, 1.0, config()), EvaluationError);
}

TEST_CASE("solver config validation") {
  SolverConfig c;
  c.series_order_max = 0;
  CHECK_THROWS_AS(fredholm_determinant(rank1(), 1.0, c), InvalidArgument);
  c = SolverConfig{};
  c.series_order_max = 7;
  CHECK_THROWS_AS(c.validate(), InvalidArgument);
  c = SolverConfig{};
  c.nodes = 1;
  CHECK_THROWS_AS(c.validate(), InvalidArgument);
  c = SolverConfig{};
  c.det_tolerance = 0.0;
  CHECK_THROWS_AS(c.validate(), InvalidArgument);
}

TEST_CASE("separable kernel spec") {
  const auto k = KernelSpec::separable({1.0, 2.0}, [](double x) { return Complex{x, 0.0}; },
                                       [](double t) { return Complex{0.0, t}; });
  CHECK(k.is_separable());
  CHECK(k(2.0, 3.0) == Complex{0.0, 6.0});
  CHECK_FALSE(rank1().is_separable());
  CHECK(rank1().separable_parts() == nullptr);
}
