#include "fredholm/special_functions.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "fredholm/errors.hpp"

namespace fredholm {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxSeriesTerms = 1000;
constexpr int kMaxFractionTerms = 5000;

void check_domain(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError("e1: non-finite argument");
  }
  if (z.imag() == 0.0 && z.real() <= 0.0) {
    throw DomainError("e1: argument on the branch cut (z <= 0)");
  }
}

Complex finite_or_throw(Complex v) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    throw DomainError("e1: result overflows");
  }
  return v;
}

}  // namespace

Complex e1_series(Complex z) {
  check_domain(z);
  const double mag = std::abs(z);
  Complex term{1.0, 0.0};
  Complex sum{0.0, 0.0};
  for (int n = 1; n <= kMaxSeriesTerms; ++n) {
    term *= -z / static_cast<double>(n);
    const Complex contrib = term / static_cast<double>(n);
    sum += contrib;
    if (n > mag && std::abs(contrib) <= 0.1 * kEps * std::abs(sum)) {
      break;
    }
  }
  return finite_or_throw(-std::numbers::egamma - std::log(z) - sum);
}

Complex e1_continued_fraction(Complex z) {
  check_domain(z);
  // E1(z) = e^{-z} / (z + 1 - 1/(z + 3 - 4/(z + 5 - ...)))
  constexpr double tiny = 1e-300;
  Complex b = z + 1.0;
  Complex c = 1.0 / tiny;
  Complex d = 1.0 / b;
  Complex h = d;
  for (int i = 1; i <= kMaxFractionTerms; ++i) {
    const double a = -static_cast<double>(i) * static_cast<double>(i);
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    const Complex delta = c * d;
    h *= delta;
    if (std::abs(delta - 1.0) <= kEps) {
      return finite_or_throw(std::exp(-z) * h);
    }
  }
  throw DomainError("e1: continued fraction did not converge");
}

Complex e1(Complex z) {
  check_domain(z);
  const double mag = std::abs(z);
  // Near the negative real axis |z| + Re z ~ Im^2 / (2|Re z|) stays small,
  // the series suffers little cancellation and the fraction converges slowly.
  const bool near_cut = z.real() < 0.0 && mag + z.real() < 4.0;
  if (mag < 4.0 || near_cut) {
    return e1_series(z);
  }
  return e1_continued_fraction(z);
}

Complex plane_wave(double x, double k) {
  const double phase = k * x;
  return {std::cos(phase), std::sin(phase)};
}

}  // namespace fredholm
