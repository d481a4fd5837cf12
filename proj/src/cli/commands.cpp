#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

#include "fredholm/cli.hpp"
#include "fredholm/errors.hpp"
#include "fredholm/fredholm.hpp"
#include "fredholm/special_functions.hpp"

namespace fredholm::cli {
namespace {

using scattering::WaveKind;

const std::vector<double> kFig2A{1.0, 2.0, 3.0, 4.0, 5.0};
const std::vector<double> kFig3A{0.0, 2.0, 5.0};

void add_complex(FigureDataset& set, const std::string& suffix, const std::vector<Complex>& values) {
  std::vector<double> re(values.size());
  std::vector<double> im(values.size());
  std::vector<double> ab(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    re[i] = values[i].real();
    im[i] = values[i].imag();
    ab[i] = std::abs(values[i]);
  }
  set.add_column("re_psi" + suffix, std::move(re));
  set.add_column("im_psi" + suffix, std::move(im));
  set.add_column("abs_psi" + suffix, std::move(ab));
}

FigureDataset with_x(std::string name, const char* column, const std::vector<double>& x) {
  FigureDataset set;
  set.name = std::move(name);
  set.add_column(column, x);
  return set;
}

std::vector<Complex> closed(WaveKind which, const std::vector<double>& x, double a,
                            const scattering::PhysicalParams& p) {
  return scattering::sample_wavefunction(which, x, a, p).values;
}

double max_deviation(const std::vector<Complex>& u, const std::vector<Complex>& v) {
  double worst = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    worst = std::max(worst, std::abs(u[i] - v[i]));
  }
  return worst;
}

const std::vector<double>& or_default(const std::vector<double>& given, const std::vector<double>& fallback) {
  return given.empty() ? fallback : given;
}

}  // namespace

std::vector<FigureDataset> cmd_potentials(const RunConfig& config) {
  const auto r = config.grid.points();
  FigureDataset set = with_x("potentials", "r", r);
  std::vector<double> coulomb(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    coulomb[i] = scattering::coulomb_potential(r[i], config.charge);
  }
  set.add_column("coulomb", std::move(coulomb));
  for (double a : or_default(config.a_values, kFig2A)) {
    std::vector<double> v(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
      v[i] = scattering::podolsky_potential(r[i], config.charge, a);
    }
    set.add_column("podolsky_" + a_label(a), std::move(v));
  }
  return {std::move(set)};
}

std::vector<FigureDataset> cmd_closed_form(const RunConfig& config) {
  const auto x = config.grid.points();
  const auto p = config.params();
  FigureDataset set = with_x("closed_form", "x", x);
  add_complex(set, "_coulomb", closed(WaveKind::coulomb, x, 0.0, p));
  for (double a : or_default(config.a_values, kFig2A)) {
    add_complex(set, "_" + a_label(a), closed(WaveKind::podolsky, x, a, p));
  }
  return {std::move(set)};
}

std::vector<FigureDataset> cmd_figures(const RunConfig& config) {
  const auto x = config.grid.points();
  const auto p = config.params();
  std::vector<FigureDataset> out;

  FigureDataset fig1 = with_x("fig1", "x", x);
  add_complex(fig1, "", closed(WaveKind::coulomb, x, 0.0, p));
  out.push_back(std::move(fig1));

  FigureDataset fig2 = with_x("fig2", "x", x);
  for (double a : or_default(config.a_values, kFig2A)) {
    add_complex(fig2, "_" + a_label(a), closed(WaveKind::podolsky, x, a, p));
  }
  out.push_back(std::move(fig2));

  FigureDataset fig3 = with_x("fig3", "x", x);
  add_complex(fig3, "_coulomb", closed(WaveKind::coulomb, x, 0.0, p));
  for (double a : kFig3A) {
    add_complex(fig3, "_" + a_label(a), closed(WaveKind::podolsky, x, a, p));
  }
  out.push_back(std::move(fig3));

  // Long format, a is the outer loop.
  const auto sx = config.surface_x.points();
  const auto sa = config.surface_a.points();
  std::vector<double> col_x;
  std::vector<double> col_a;
  std::vector<double> col_abs;
  col_x.reserve(sx.size() * sa.size());
  col_a.reserve(sx.size() * sa.size());
  col_abs.reserve(sx.size() * sa.size());
  for (double a : sa) {
    const auto psi = closed(WaveKind::podolsky, sx, a, p);
    for (std::size_t i = 0; i < sx.size(); ++i) {
      col_x.push_back(sx[i]);
      col_a.push_back(a);
      col_abs.push_back(std::abs(psi[i]));
    }
  }
  FigureDataset fig4;
  fig4.name = "fig4";
  fig4.add_column("x", std::move(col_x));
  fig4.add_column("a", std::move(col_a));
  fig4.add_column("abs_psi", std::move(col_abs));
  out.push_back(std::move(fig4));
  return out;
}

SolveOutput cmd_solve(const RunConfig& config) {
  const auto x = config.grid.points();
  const auto p = config.params();
  const bool podolsky = !config.a_values.empty();
  const double a = podolsky ? config.a_values.front() : 0.0;
  const auto potential = podolsky ? scattering::PotentialSpec::podolsky(config.charge, a)
                                  : scattering::PotentialSpec::coulomb(config.charge);
  const KernelSpec kernel = scattering::reduced_kernel(potential, p, config.interval, config.kernel_choice);
  const double k = p.k;
  const RealToComplex incident = [k](double s) { return plane_wave(s, k); };
  const Complex lambda{p.lambda, 0.0};

  const ResolventSolution res = solve_resolvent_detailed(kernel, incident, lambda, x, config.solver);
  const SampledFunction nys = solve_nystrom(kernel, incident, lambda, config.solver, x);
  const auto cf = closed(podolsky ? WaveKind::podolsky : WaveKind::coulomb, x, a, p);

  SolveOutput out;
  out.data = with_x("solve", "x", x);
  add_complex(out.data, "_resolvent", res.u.values);
  add_complex(out.data, "_nystrom", nys.values);
  add_complex(out.data, "_closed", cf);

  auto& report = out.report;
  report.kernel = std::holds_alternative<scattering::RegularizedGreen>(config.kernel_choice) ? "regularized"
                                                                                             : "separable";
  report.determinant = res.determinant;
  report.last_term_magnitude = res.last_term_magnitude;
  report.max_resolvent_vs_nystrom = max_deviation(res.u.values, nys.values);
  report.max_numeric_vs_closed = max_deviation(res.u.values, cf);
  try {
    const SampledFunction neu =
        solve_neumann(kernel, incident, lambda, config.neumann_iterations, config.solver, x);
    report.max_resolvent_vs_neumann = max_deviation(res.u.values, neu.values);
  } catch (const DivergenceDetected&) {
    report.max_resolvent_vs_neumann.reset();
  }
  return out;
}

}  // namespace fredholm::cli
