#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>

#include "fredholm/cli.hpp"
#include "fredholm/errors.hpp"
#include "fredholm/fredholm.hpp"
#include "fredholm/special_functions.hpp"

namespace fredholm::cli {
namespace {

using scattering::WaveKind;

struct Outcome {
  bool passed;
  std::string detail;
};

std::string fmt(const char* pattern, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, pattern, a, b);
  return buf;
}

Outcome within(double error, double tolerance, const char* label = "err") {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%s=%.3e tol=%.1e", label, error, tolerance);
  return {error <= tolerance, buf};
}

// Small polynomial-kernel problems use the user's series order and
// determinant tolerance but a fixed 16-point Gauss rule.
SolverConfig small_config(const RunConfig& config) {
  SolverConfig s = config.solver;
  s.nodes = 16;
  s.rule_kind = RuleKind::gauss;
  return s;
}

KernelSpec rank1() {
  return KernelSpec::general(Interval{0.0, 1.0}, [](double x, double t) { return Complex{x * t, 0.0}; });
}

const RealToComplex identity = [](double x) { return Complex{x, 0.0}; };

}  // namespace

std::vector<CheckResult> cmd_selftest(const RunConfig& config) {
  std::vector<std::pair<std::string, std::function<Outcome()>>> checks;
  const auto params = config.params();

  checks.emplace_back("special.e1_real", [] {
    return within(std::abs(e1(Complex{1.0, 0.0}) - 0.219383934396), 1e-10);
  });
  checks.emplace_back("special.e1_imaginary_unit", [] {
    return within(std::abs(e1(kI) - Complex{-0.337403922901, -0.624713256428}), 1e-10);
  });
  checks.emplace_back("special.series_vs_continued_fraction", [] {
    double worst = 0.0;
    for (double r : {3.0, 4.0, 5.0}) {
      for (int k = 0; k < 12; ++k) {
        const double theta = -2.5 + 5.0 * k / 11.0;
        const Complex z = std::polar(r, theta);
        const Complex s = e1_series(z);
        worst = std::max(worst, std::abs(s - e1_continued_fraction(z)) / std::abs(s));
      }
    }
    return within(worst, 1e-10, "rel");
  });
  checks.emplace_back("special.conjugate_symmetry", [] {
    double worst = 0.0;
    for (double re : {-3.0, 0.5, 2.0, 7.0}) {
      for (double im : {0.25, 1.0, 6.0}) {
        const Complex z{re, im};
        worst = std::max(worst, std::abs(e1(std::conj(z)) - std::conj(e1(z))));
      }
    }
    return within(worst, 1e-14);
  });

  checks.emplace_back("quadrature.gauss_degree", [] {
    const auto rule = gauss_rule(Interval{1.0, 5.0}, 4);
    const Complex got = integrate_1d([](double t) { return Complex{std::pow(t, 7), 0.0}; }, rule);
    return within(std::abs(got.real() - (std::pow(5.0, 8) - 1.0) / 8.0) / 48828.0, 1e-14, "rel");
  });
  checks.emplace_back("quadrature.uniform_weights", [] {
    const auto rule = uniform_rule(Interval{1.0, 5.0}, 10);
    double sum = 0.0;
    for (double w : rule.weights) {
      sum += w;
    }
    return within(std::abs(sum - 4.0), 1e-14);
  });

  checks.emplace_back("fredholm.rank1_determinant", [&] {
    const auto det = fredholm_determinant(rank1(), Complex{1.0, 0.0}, small_config(config));
    const double d2 = det.coefficients.size() > 1 ? std::abs(det.coefficients[1]) : 0.0;
    Outcome o = within(std::abs(det.value - 2.0 / 3.0), 1e-10);
    o.passed = o.passed && d2 <= 1e-10;
    o.detail += fmt(" |d2|=%.3e", d2);
    return o;
  });
  checks.emplace_back("fredholm.rank1_resolvent_solution", [&] {
    const auto u = solve_resolvent(rank1(), identity, Complex{1.0, 0.0}, {0.5}, small_config(config));
    return within(std::abs(u.values[0] - 0.75), 1e-8);
  });
  checks.emplace_back("fredholm.rank1_nystrom_solution", [&] {
    const auto u = solve_nystrom(rank1(), identity, Complex{1.0, 0.0}, small_config(config), {0.5});
    return within(std::abs(u.values[0] - 0.75), 1e-8);
  });
  checks.emplace_back("fredholm.characteristic_value", [&] {
    try {
      solve_resolvent(rank1(), identity, Complex{3.0, 0.0}, {0.5}, small_config(config));
    } catch (const SingularDeterminant&) {
      return Outcome{true, "SingularDeterminant at lambda=3"};
    }
    return Outcome{false, "no SingularDeterminant at lambda=3"};
  });
  checks.emplace_back("fredholm.rank2_determinant", [&] {
    const auto kernel = KernelSpec::general(Interval{0.0, 1.0}, [](double x, double t) {
      return Complex{x * t + x * x * t * t, 0.0};
    });
    double worst = 0.0;
    for (double lambda : {-1.0, 1.0}) {
      const double expected = (1.0 - lambda / 3.0) * (1.0 - lambda / 5.0) - lambda * lambda / 16.0;
      const auto det = fredholm_determinant(kernel, Complex{lambda, 0.0}, small_config(config));
      worst = std::max(worst, std::abs(det.value - expected));
    }
    return within(worst, 1e-8);
  });

  checks.emplace_back("scattering.podolsky_origin", [] {
    const double got = scattering::podolsky_potential(0.0, 1.0, 2.0);
    return within(std::abs(got - 1.0 / (8.0 * std::numbers::pi)), 1e-12);
  });
  checks.emplace_back("scattering.podolsky_below_coulomb", [] {
    double worst = 0.0;
    for (int i = 0; i <= 90; ++i) {
      const double r = std::pow(10.0, -6.0 + i / 10.0);
      worst = std::max(worst, scattering::podolsky_potential(r, 1.0, 1.0) -
                                  scattering::coulomb_potential(r, 1.0));
    }
    return Outcome{worst <= 0.0, fmt("max(podolsky-coulomb)=%.3e", worst)};
  });
  checks.emplace_back("scattering.greens_helmholtz_residual", [] {
    const double h = 1e-3;
    double worst = 0.0;
    for (double rho = 0.5; rho <= 10.0; rho += 0.5) {
      auto f = [](double r) { return r * scattering::greens_function(r, 1.0); };
      const Complex second = (f(rho + h) - 2.0 * f(rho) + f(rho - h)) / (h * h);
      worst = std::max(worst, std::abs(second + f(rho)) / std::abs(f(rho)));
    }
    return within(worst, 1e-5, "rel");
  });
  checks.emplace_back("scattering.closed_form_identity", [&] {
    double worst = 0.0;
    for (double x : {0.1, 0.5, 1.0, 2.0, 5.0, 10.0}) {
      worst = std::max(worst, std::abs(scattering::psi_podolsky_closed(x, 0.0, params.lambda) -
                                       scattering::psi_coulomb_closed(x, params.lambda)));
    }
    return within(worst, 1e-12);
  });
  checks.emplace_back("scattering.stabilization", [&] {
    std::vector<double> grid;
    for (int i = 0; i <= 450; ++i) {
      grid.push_back(0.5 + 0.01 * i);
    }
    const double c = scattering::amplitude_range(
        scattering::sample_wavefunction(WaveKind::coulomb, grid, 0.0, params));
    const double p = scattering::amplitude_range(
        scattering::sample_wavefunction(WaveKind::podolsky, grid, 5.0, params));
    return Outcome{p < c, fmt("range coulomb=%.5e podolsky_a5=%.5e", c, p)};
  });
  checks.emplace_back("scattering.cross_solver", [&] {
    const auto kernel = scattering::reduced_kernel(scattering::PotentialSpec::coulomb(params.charge), params,
                                                   config.interval, scattering::SeparableFarField{});
    const double k = params.k;
    const RealToComplex f = [k](double s) { return plane_wave(s, k); };
    const std::vector<double> grid{1.0, 2.0, 3.0, 4.0, 5.0};
    const Complex lambda{params.lambda, 0.0};
    const auto r = solve_resolvent(kernel, f, lambda, grid, config.solver);
    const auto n = solve_nystrom(kernel, f, lambda, config.solver, grid);
    double worst = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      worst = std::max(worst, std::abs(r.values[i] - n.values[i]));
    }
    return within(worst, 1e-6);
  });

  checks.emplace_back("cli.csv_format", [] {
    FigureDataset set;
    set.name = "probe";
    set.add_column("x", {1.0});
    set.add_column("re_psi", {-0.5});
    const std::string csv = to_csv(set);
    const std::string expected = "x,re_psi\n1.00000000000e+00,-5.00000000000e-01\n";
    return Outcome{csv == expected, csv == expected ? "header and 12-digit rows" : "got: " + csv};
  });

  std::vector<CheckResult> results;
  for (auto& [name, check] : checks) {
    CheckResult r;
    r.name = name;
    try {
      Outcome o = check();
      r.passed = o.passed;
      r.detail = std::move(o.detail);
    } catch (const Error& e) {
      r.detail = std::string(e.kind()) + ": " + e.what();
    } catch (const std::exception& e) {
      r.detail = e.what();
    }
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace fredholm::cli
