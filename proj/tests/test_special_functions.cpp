#include <doctest.h>

#include <cmath>
#include <random>

#include "fredholm/errors.hpp"
#include "fredholm/special_functions.hpp"
#include "oracles.hpp"

using fredholm::Complex;
using fredholm::e1;
using fredholm::kI;

namespace {

double rel(Complex got, Complex want) { return std::abs(got - want) / std::abs(want); }

}  // namespace

TEST_CASE("e1 on the positive real axis") {
  CHECK(std::abs(e1(Complex{1.0, 0.0}) - 0.219383934396) <= 1e-10);
  CHECK(e1(Complex{1.0, 0.0}).imag() == 0.0);
  for (double x : {0.01, 0.3, 1.0, 2.5, 4.0, 7.0, 20.0, 45.0}) {
    CAPTURE(x);
    const double want = -std::expint(-x);
    CHECK(std::abs(e1(Complex{x, 0.0}).real() - want) <= 1e-13 * want);
  }
}

TEST_CASE("e1 on the imaginary axis matches Ci/Si") {
  CHECK(std::abs(e1(kI) - oracle::e1_imaginary(1.0)) <= 1e-12);
  CHECK(std::abs(e1(kI) - Complex{-0.337404, -0.624713}) <= 1e-5);
  for (double y : {0.1, 0.5, 2.0, 3.0, 4.0}) {
    CAPTURE(y);
    CHECK(std::abs(e1(Complex{0.0, y}) - oracle::e1_imaginary(y)) <= 1e-12);
  }
}

TEST_CASE("e1 large argument against a backward continued fraction") {
  const Complex want = oracle::e1_backward_fraction(Complex{10.0, 0.0});
  CHECK(std::abs(want.real() - 4.15696892968532e-6) <= 1e-18);
  for (Complex z : {Complex{10.0, 0.0}, Complex{6.0, 8.0}, Complex{-3.0, 12.0}, Complex{30.0, -5.0}}) {
    CAPTURE(z);
    CHECK(rel(e1(z), oracle::e1_backward_fraction(z)) <= 1e-12);
  }
}

TEST_CASE("e1 small argument against a long-double series") {
  for (Complex z : {Complex{0.2, 0.1}, Complex{-1.5, 0.5}, Complex{2.0, -3.0}, Complex{-2.0, 3.0}}) {
    CAPTURE(z);
    CHECK(rel(e1(z), oracle::e1_series(z)) <= 1e-13);
  }
}

TEST_CASE("series and continued fraction agree on the overlap band") {
  double worst = 0.0;
  for (double r = 3.0; r <= 5.0; r += 0.25) {
    for (int k = 0; k <= 24; ++k) {
      const double theta = -2.6 + 5.2 * k / 24.0;
      const Complex z = std::polar(r, theta);
      const Complex s = fredholm::e1_series(z);
      worst = std::max(worst, rel(fredholm::e1_continued_fraction(z), s));
    }
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("e1 conjugate symmetry") {
  std::mt19937_64 rng(20261016);
  std::uniform_real_distribution<double> re(-10.0, 30.0);
  std::uniform_real_distribution<double> im(0.05, 30.0);
  for (int i = 0; i < 100; ++i) {
    const Complex z{re(rng), im(rng)};
    CAPTURE(z);
    CHECK(rel(e1(std::conj(z)), std::conj(e1(z))) <= 1e-14);
  }
}

TEST_CASE("e1 derivative is -e^{-z}/z") {
  const double h = 1e-4;
  for (Complex z : {Complex{0.5, 0.5}, Complex{3.9, 0.3}, Complex{-2.0, 1.0}, Complex{6.0, -2.0}}) {
    CAPTURE(z);
    const Complex fd = (e1(z + h) - e1(z - h)) / (2.0 * h);
    const Complex want = -std::exp(-z) / z;
    CHECK(rel(fd, want) <= 5e-8);
  }
}

TEST_CASE("e1 the combination used by the closed forms") {
  const Complex d = e1(kI) - e1(5.0 * kI);
  CHECK(std::abs(d - Complex{-0.527433672557612, -0.603848174577491}) <= 1e-12);
}

TEST_CASE("e1 domain errors") {
  CHECK_THROWS_AS(e1(Complex{0.0, 0.0}), fredholm::DomainError);
  CHECK_THROWS_AS(e1(Complex{-2.0, 0.0}), fredholm::DomainError);
  CHECK_THROWS_AS(e1(Complex{NAN, 1.0}), fredholm::DomainError);
  CHECK_THROWS_AS(e1(Complex{-800.0, 1.0}), fredholm::DomainError);
  CHECK_NOTHROW(e1(Complex{-2.0, 1e-300}));
}

TEST_CASE("plane wave") {
  CHECK(std::abs(fredholm::plane_wave(1.0, 1.0) - Complex{std::cos(1.0), std::sin(1.0)}) <= 1e-15);
  CHECK(fredholm::plane_wave(0.0, 3.0) == Complex{1.0, 0.0});
}
