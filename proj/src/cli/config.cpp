#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>

#include "fredholm/cli.hpp"
#include "fredholm/errors.hpp"

namespace fredholm::cli {
namespace {

constexpr std::size_t kMaxGridPoints = 10'000'000;

std::vector<double> split_numbers(const std::string& text, std::size_t expected, const char* flag) {
  std::vector<double> out;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ':')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(part, &used));
      if (used != part.size()) {
        throw std::invalid_argument(part);
      }
    } catch (const std::exception&) {
      throw InvalidArgument(std::string(flag) + ": cannot parse '" + part + "' as a number");
    }
  }
  if (out.size() != expected) {
    throw InvalidArgument(std::string(flag) + ": expected " + std::to_string(expected) +
                          " ':'-separated numbers, got '" + text + "'");
  }
  return out;
}

GridSpec parse_grid(const std::string& text, const char* flag) {
  const auto v = split_numbers(text, 3, flag);
  return GridSpec{v[0], v[1], v[2]};
}

void require(bool ok, const std::string& message) {
  if (!ok) {
    throw InvalidArgument(message);
  }
}

void validate_grid_spec(const GridSpec& g, const char* name, bool positive_start) {
  require(std::isfinite(g.start) && std::isfinite(g.stop) && std::isfinite(g.step),
          std::string(name) + ": values must be finite");
  require(g.step > 0.0, std::string(name) + ": step must be > 0");
  require(g.start <= g.stop, std::string(name) + ": start must not exceed stop");
  if (positive_start) {
    require(g.start > 0.0, std::string(name) +
                               ": start must be > 0 (the wave function is singular at x = 0)");
  } else {
    require(g.start >= 0.0, std::string(name) + ": start must be >= 0");
  }
  require((g.stop - g.start) / g.step < static_cast<double>(kMaxGridPoints),
          std::string(name) + ": too many points");
}

void build_app(CLI::App& app, RunConfig& cfg, std::string& command, std::string& interval,
               std::string& grid, std::string& surface_x, std::string& surface_a, std::string& kernel,
               double& epsilon, std::string& format, std::string& rule, std::string& placement,
               double& lambda) {
  app.add_option("--command", command, "potentials | closed-form | solve | figures | selftest")
      ->check(CLI::IsMember({"potentials", "closed-form", "solve", "figures", "selftest"}));
  app.add_option("--a", cfg.a_values, "Podolsky length a (repeatable)");
  app.add_option("--interval", interval, "integration interval a:b");
  app.add_option("--grid", grid, "output grid start:stop:step");
  app.add_option("--surface-x", surface_x, "fig4 x grid start:stop:step");
  app.add_option("--surface-a", surface_a, "fig4 a grid start:stop:step");
  app.add_option("--mass", cfg.mass, "particle mass m");
  app.add_option("--hbar", cfg.hbar, "reduced Planck constant");
  app.add_option("--energy", cfg.energy, "total energy E");
  app.add_option("--charge", cfg.charge, "central charge Q");
  app.add_option("--lambda", lambda, "override the derived coupling -m Q^2 / (2 hbar^2)");
  app.add_option("--nodes", cfg.solver.nodes, "quadrature nodes");
  app.add_option("--series-order", cfg.solver.series_order_max, "Fredholm series truncation order");
  app.add_option("--det-tolerance", cfg.solver.det_tolerance, "singular |Delta(lambda)| threshold");
  app.add_option("--rule", rule, "gauss | uniform")->check(CLI::IsMember({"gauss", "uniform"}));
  app.add_option("--placement", placement, "uniform-rule nodes: midpoint | left")
      ->check(CLI::IsMember({"midpoint", "left"}));
  app.add_option("--kernel", kernel, "regularized | separable | closed-form")
      ->check(CLI::IsMember({"regularized", "separable", "closed-form"}));
  app.add_option("--epsilon", epsilon, "RegularizedGreen softening length");
  app.add_option("--iterations", cfg.neumann_iterations, "Neumann iterations for the solve report");
  app.add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", cfg.output_path, "output directory");
}

}  // namespace

std::vector<double> GridSpec::points() const {
  validate_grid_spec(*this, "grid", false);
  const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i) {
    out[i] = start + static_cast<double>(i) * step;
  }
  return out;
}

scattering::PhysicalParams RunConfig::params() const {
  auto p = scattering::derive_params(mass, hbar, energy, charge);
  if (lambda) {
    p.lambda = *lambda;
  }
  return p;
}

std::string a_label(double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "a%g", a);
  return buf;
}

void validate(const RunConfig& config) {
  validate_grid_spec(config.grid, "--grid", true);
  Interval::make(config.interval.a, config.interval.b);
  for (double a : config.a_values) {
    require(std::isfinite(a) && a >= 0.0, "--a values must be finite and >= 0");
  }
  config.params();
  if (config.lambda) {
    require(std::isfinite(*config.lambda), "--lambda must be finite");
  }
  config.solver.validate();
  if (const auto* reg = std::get_if<scattering::RegularizedGreen>(&config.kernel_choice)) {
    require(reg->epsilon > 0.0 && std::isfinite(reg->epsilon), "--epsilon must be > 0");
  }
  require(config.neumann_iterations >= 1, "--iterations must be >= 1");
  require(!config.output_path.empty(), "--out must not be empty");

  if (config.command == Command::figures) {
    validate_grid_spec(config.surface_x, "--surface-x", true);
    validate_grid_spec(config.surface_a, "--surface-a", false);
  }
  if (config.command == Command::solve) {
    require(!std::holds_alternative<scattering::ClosedFormOnly>(config.kernel_choice),
            "solve needs a numeric kernel (--kernel regularized|separable)");
    require(config.a_values.size() <= 1, "solve accepts at most one --a (Podolsky length)");
    // Builds the kernel once so interval/potential singularities surface here.
    const auto potential = config.a_values.empty()
                               ? scattering::PotentialSpec::coulomb(config.charge)
                               : scattering::PotentialSpec::podolsky(config.charge, config.a_values[0]);
    scattering::reduced_kernel(potential, config.params(), config.interval, config.kernel_choice);
  }
}

RunConfig parse_args(int argc, const char* const* argv) {
  RunConfig cfg;
  std::string command = "figures";
  std::string interval;
  std::string grid;
  std::string surface_x;
  std::string surface_a;
  std::string kernel = "separable";
  double epsilon = scattering::RegularizedGreen{}.epsilon;
  std::string format = "csv";
  std::string rule = "gauss";
  std::string placement = "midpoint";
  double lambda = 0.0;

  CLI::App app{"Fredholm-method scattering by Coulomb and Podolsky potentials", "fredholm"};
  build_app(app, cfg, command, interval, grid, surface_x, surface_a, kernel, epsilon, format, rule,
            placement, lambda);
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    throw;
  } catch (const CLI::ParseError& e) {
    throw InvalidArgument(e.what());
  }

  if (command == "potentials") {
    cfg.command = Command::potentials;
  } else if (command == "closed-form") {
    cfg.command = Command::closed_form;
  } else if (command == "solve") {
    cfg.command = Command::solve;
  } else if (command == "selftest") {
    cfg.command = Command::selftest;
  } else {
    cfg.command = Command::figures;
  }
  if (!interval.empty()) {
    const auto v = split_numbers(interval, 2, "--interval");
    cfg.interval = Interval{v[0], v[1]};
  }
  if (!grid.empty()) {
    cfg.grid = parse_grid(grid, "--grid");
  }
  if (!surface_x.empty()) {
    cfg.surface_x = parse_grid(surface_x, "--surface-x");
  }
  if (!surface_a.empty()) {
    cfg.surface_a = parse_grid(surface_a, "--surface-a");
  }
  if (app.count("--lambda") > 0) {
    cfg.lambda = lambda;
  }
  if (kernel == "regularized") {
    cfg.kernel_choice = scattering::RegularizedGreen{epsilon};
  } else if (kernel == "closed-form") {
    cfg.kernel_choice = scattering::ClosedFormOnly{};
  } else {
    cfg.kernel_choice = scattering::SeparableFarField{};
  }
  cfg.format = format == "json" ? OutputFormat::json : OutputFormat::csv;
  cfg.solver.rule_kind = rule == "uniform" ? RuleKind::uniform : RuleKind::gauss;
  cfg.solver.placement = placement == "left" ? NodePlacement::left_endpoint : NodePlacement::midpoint;
  return cfg;
}

std::string usage() {
  RunConfig cfg;
  double d = 0.0;
  double e = 0.0;
  std::string c, i, g, sx, sa, k, f, r, p;
  CLI::App app{"Fredholm-method scattering by Coulomb and Podolsky potentials", "fredholm"};
  build_app(app, cfg, c, i, g, sx, sa, k, e, f, r, p, d);
  return app.help();
}

}  // namespace fredholm::cli
