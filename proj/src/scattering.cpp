#include "fredholm/scattering.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>

#include "fredholm/errors.hpp"
#include "fredholm/special_functions.hpp"
#include "omp_exceptions.hpp"

namespace fredholm::scattering {
namespace {

constexpr double kFourPi = 4.0 * std::numbers::pi;

void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) {
    throw InvalidArgument(std::string(name) + " must be finite");
  }
}

Complex finite_or_throw(Complex v, const char* what) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    throw DomainError(std::string(what) + " is not representable (overflow)");
  }
  return v;
}

void require_positive_x(double x) {
  if (!(x > 0.0)) {
    throw SingularPoint("wave function is undefined at x <= 0 (scattering centre), got x = " +
                        std::to_string(x));
  }
}

}  // namespace

double coulomb_potential(double r, double charge) {
  require_finite(charge, "charge");
  if (!(r > 0.0)) {
    throw SingularPoint("Coulomb potential diverges at r <= 0");
  }
  return charge * charge / (kFourPi * r);
}

double podolsky_potential(double r, double charge, double a) {
  require_finite(charge, "charge");
  require_finite(a, "a");
  if (a < 0.0) {
    throw InvalidArgument("Podolsky length a must be >= 0");
  }
  if (!(r >= 0.0)) {
    throw InvalidArgument("distance r must be >= 0");
  }
  if (a == 0.0) {
    return coulomb_potential(r, charge);
  }
  if (r == 0.0) {
    return charge * charge / (kFourPi * a);
  }
  // Same operation order as the Coulomb branch so podolsky <= coulomb survives rounding.
  return charge * charge * (-std::expm1(-r / a)) / (kFourPi * r);
}

PotentialSpec PotentialSpec::coulomb(double charge) {
  require_finite(charge, "charge");
  return PotentialSpec(Coulomb{charge});
}

PotentialSpec PotentialSpec::podolsky(double charge, double a) {
  require_finite(charge, "charge");
  require_finite(a, "a");
  if (a < 0.0) {
    throw InvalidArgument("Podolsky length a must be >= 0");
  }
  return PotentialSpec(Podolsky{charge, a});
}

double PotentialSpec::operator()(double r) const {
  if (const auto* c = std::get_if<Coulomb>(&form_)) {
    return coulomb_potential(r, c->charge);
  }
  const auto& p = std::get<Podolsky>(form_);
  return podolsky_potential(r, p.charge, p.a);
}

double PotentialSpec::charge() const {
  return std::visit([](const auto& v) { return v.charge; }, form_);
}

bool PotentialSpec::singular_at_origin() const {
  if (const auto* p = std::get_if<Podolsky>(&form_)) {
    return p->a == 0.0;
  }
  return true;
}

Complex greens_function(double rho, double k) {
  if (!(rho > 0.0)) {
    throw SingularPoint("Green's function is singular at rho <= 0");
  }
  return -plane_wave(rho, k) / (kFourPi * rho);
}

PhysicalParams derive_params(double mass, double hbar, double energy, double charge) {
  require_finite(mass, "mass");
  require_finite(hbar, "hbar");
  require_finite(energy, "energy");
  require_finite(charge, "charge");
  if (!(mass > 0.0) || !(hbar > 0.0) || !(energy > 0.0)) {
    throw InvalidArgument("mass, hbar and energy must be positive");
  }
  PhysicalParams p;
  p.mass = mass;
  p.hbar = hbar;
  p.energy = energy;
  p.charge = charge;
  p.k = std::sqrt(2.0 * mass * energy) / hbar;
  p.lambda = -mass * charge * charge / (2.0 * hbar * hbar);
  return p;
}

Complex psi_coulomb_closed(double x, double lambda) {
  require_positive_x(x);
  require_finite(lambda, "lambda");
  const Complex amplitude = plane_wave(6.0, 1.0) * std::sin(4.0) / x;
  const Complex coupling = lambda / (1.0 + lambda * (e1(kI) - e1(5.0 * kI)));
  return finite_or_throw(plane_wave(x, 1.0) + amplitude * coupling, "psi_coulomb_closed");
}

Complex psi_podolsky_closed(double x, double a, double lambda) {
  require_positive_x(x);
  require_finite(lambda, "lambda");
  require_finite(a, "a");
  if (a < 0.0) {
    throw InvalidArgument("Podolsky length a must be >= 0");
  }
  // e^{2i-5a}(e^{4a} - e^{8i}) rewritten as e^{2i}(e^{-a} - e^{8i-5a}) to avoid overflow.
  const Complex numerator =
      plane_wave(2.0, 1.0) * (std::exp(-a) - std::exp(-5.0 * a) * plane_wave(8.0, 1.0));
  const Complex amplitude = numerator / (x * Complex{a, -2.0});
  const Complex z1{-a, 1.0};
  const Complex z5{-a, 5.0};
  const Complex coupling = lambda / (1.0 + lambda * (e1(z1) - e1(z5)));
  return finite_or_throw(plane_wave(x, 1.0) + amplitude * coupling, "psi_podolsky_closed");
}

KernelSpec reduced_kernel(const PotentialSpec& potential, const PhysicalParams& params,
                          const Interval& interval, const ReducedKernelChoice& choice) {
  if (std::holds_alternative<ClosedFormOnly>(choice)) {
    throw InvalidArgument("reduced_kernel: ClosedFormOnly bypasses the solver and has no kernel");
  }
  const Interval iv = Interval::make(interval.a, interval.b);
  if (iv.a < 0.0) {
    throw InvalidArgument("reduced_kernel: the interval is a radial distance and must satisfy a >= 0");
  }
  const double k = params.k;

  if (const auto* reg = std::get_if<RegularizedGreen>(&choice)) {
    const double eps = reg->epsilon;
    if (!(eps > 0.0) || !std::isfinite(eps)) {
      throw InvalidArgument("RegularizedGreen: epsilon must be positive");
    }
    if (potential.singular_at_origin() && iv.a == 0.0) {
      throw SingularPoint("interval touches the r = 0 singularity of the potential");
    }
    return KernelSpec::general(iv, [potential, k, eps](double x, double t) {
      const double s = std::hypot(x - t, eps);
      return plane_wave(s, k) / s * potential(t);
    });
  }

  // SeparableFarField: g(x) = e^{ikx}/x is singular at x = 0 for every potential.
  if (iv.a == 0.0) {
    throw SingularPoint("SeparableFarField: g(x) = e^{ikx}/x is singular at x = 0");
  }
  auto g = [k](double x) -> Complex {
    if (x == 0.0) {
      throw SingularPoint("SeparableFarField: g(0) is singular");
    }
    return plane_wave(x, k) / x;
  };
  auto h = [potential, k](double t) -> Complex { return plane_wave(t, -k) * potential(t); };
  return KernelSpec::separable(iv, g, h);
}

SampledFunction sample_wavefunction(WaveKind which, const std::vector<double>& grid, double a,
                                    const PhysicalParams& params) {
  validate_grid(grid);
  require_positive_x(grid.front());
  if (which == WaveKind::podolsky && !(a >= 0.0)) {
    throw InvalidArgument("Podolsky length a must be >= 0");
  }

  SampledFunction out;
  out.grid = grid;
  out.values.resize(grid.size());
  const auto size = static_cast<std::int64_t>(grid.size());
  const double lambda = params.lambda;
  detail::LoopExceptions errors;
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < size; ++i) {
    try {
      out.values[i] = which == WaveKind::coulomb ? psi_coulomb_closed(grid[i], lambda)
                                                 : psi_podolsky_closed(grid[i], a, lambda);
    } catch (...) {
      errors.capture(i);
    }
  }
  errors.rethrow_if_any();
  return out;
}

double amplitude_range(const SampledFunction& psi) {
  if (psi.values.empty()) {
    return 0.0;
  }
  double lo = INFINITY;
  double hi = -INFINITY;
  for (const Complex& v : psi.values) {
    lo = std::min(lo, std::abs(v));
    hi = std::max(hi, std::abs(v));
  }
  return hi - lo;
}

}  // namespace fredholm::scattering
