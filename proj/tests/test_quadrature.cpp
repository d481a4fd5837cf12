#include <doctest.h>

#include <cmath>

#include "fredholm/errors.hpp"
#include "fredholm/quadrature.hpp"
#include "fredholm/special_functions.hpp"

using namespace fredholm;

TEST_CASE("interval validation") {
  CHECK_THROWS_AS(Interval::make(1.0, 1.0), InvalidArgument);
  CHECK_THROWS_AS(Interval::make(2.0, 1.0), InvalidArgument);
  CHECK_THROWS_AS(Interval::make(0.0, INFINITY), InvalidArgument);
  CHECK(Interval::make(1.0, 5.0).length() == 4.0);
}

TEST_CASE("gauss small rules") {
  const auto one = gauss_rule({-1.0, 1.0}, 1);
  CHECK(one.nodes[0] == doctest::Approx(0.0));
  CHECK(one.weights[0] == doctest::Approx(2.0).epsilon(1e-15));

  const auto two = gauss_rule({-1.0, 1.0}, 2);
  CHECK(std::abs(two.nodes[0] + 1.0 / std::sqrt(3.0)) <= 1e-15);
  CHECK(std::abs(two.nodes[1] - 1.0 / std::sqrt(3.0)) <= 1e-15);
  CHECK(std::abs(two.weights[0] - 1.0) <= 1e-15);
  CHECK(std::abs(two.weights[1] - 1.0) <= 1e-15);

  const Complex cube = integrate_1d([](double t) { return Complex{t * t * t, 0.0}; }, gauss_rule({0.0, 1.0}, 2));
  CHECK(std::abs(cube.real() - 0.25) <= 1e-15);
}

TEST_CASE("gauss exactness up to degree 2n-1") {
  for (std::size_t n : {3u, 8u, 20u}) {
    const auto rule = gauss_rule({1.0, 5.0}, n);
    const int degree = static_cast<int>(2 * n - 1);
    const Complex got = integrate_1d([degree](double t) { return Complex{std::pow(t, degree), 0.0}; }, rule);
    const double want = (std::pow(5.0, degree + 1) - 1.0) / (degree + 1);
    CAPTURE(n);
    CHECK(std::abs(got.real() - want) <= 1e-13 * want);
  }
}

TEST_CASE("gauss nodes ordered and weights positive at large n") {
  const auto rule = gauss_rule({0.0, 1.0}, 512);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    CHECK(rule.weights[i] > 0.0);
    if (i > 0) {
      CHECK(rule.nodes[i] > rule.nodes[i - 1]);
    }
    sum += rule.weights[i];
  }
  CHECK(std::abs(sum - 1.0) <= 1e-13);
  CHECK_THROWS_AS(gauss_rule({0.0, 1.0}, 513), InvalidArgument);
  CHECK_THROWS_AS(gauss_rule({0.0, 1.0}, 0), InvalidArgument);
}

TEST_CASE("uniform rule placements") {
  const auto mid = uniform_rule({0.0, 1.0}, 4);
  CHECK(mid.nodes.front() == doctest::Approx(0.125));
  CHECK(mid.weights.front() == doctest::Approx(0.25));
  const auto left = uniform_rule({0.0, 1.0}, 4, NodePlacement::left_endpoint);
  CHECK(left.nodes.front() == 0.0);
  CHECK(left.nodes.back() == doctest::Approx(0.75));

  const Complex linear = integrate_1d([](double t) { return Complex{t, 0.0}; }, mid);
  CHECK(std::abs(linear.real() - 0.5) <= 1e-15);
  const Complex ones = integrate_1d([](double) { return Complex{1.0, 0.0}; }, uniform_rule({1.0, 5.0}, 7));
  CHECK(std::abs(ones - 4.0) <= 1e-14);
}

TEST_CASE("oscillatory integrals on [1,5]") {
  const Complex wave = integrate_1d([](double t) { return plane_wave(t, 1.0); }, gauss_rule({1.0, 5.0}, 32));
  const Complex want{std::sin(5.0) - std::sin(1.0), std::cos(1.0) - std::cos(5.0)};
  CHECK(std::abs(wave - want) <= 1e-13);
  CHECK(std::abs(wave - Complex{-1.800395259471035, 0.256640120404913}) <= 1e-12);

  const Complex inverse =
      integrate_1d([](double t) { return plane_wave(t, -1.0) / t; }, gauss_rule({1.0, 5.0}, 64));
  CHECK(std::abs(inverse - (e1(kI) - e1(5.0 * kI))) <= 1e-13);
}

TEST_CASE("gauss convergence at n = 128") {
  auto f = [](double t) { return plane_wave(t, 1.0) / (t * t); };
  const Complex a = integrate_1d(f, gauss_rule({1.0, 5.0}, 128));
  const Complex b = integrate_1d(f, gauss_rule({1.0, 5.0}, 256));
  CHECK(std::abs(a - b) <= 1e-10);
}
