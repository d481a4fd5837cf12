#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fredholm/kernel.hpp"
#include "fredholm/quadrature.hpp"
#include "fredholm/scattering.hpp"

namespace fredholm::cli {

enum class Command { potentials, closed_form, solve, figures, selftest };
enum class OutputFormat { csv, json };

/// start:stop:step, inclusive of stop when it lands on the lattice.
struct GridSpec {
  double start = 0.05;
  double stop = 10.0;
  double step = 0.01;

  std::vector<double> points() const;
};

struct RunConfig {
  Command command = Command::figures;
  Interval interval{1.0, 5.0};
  GridSpec grid{};
  /// Podolsky lengths; when empty each command uses its own default set.
  std::vector<double> a_values;
  GridSpec surface_x{0.1, 10.0, 0.1};
  GridSpec surface_a{0.5, 50.0, 0.5};

  double mass = 2.0;
  double hbar = 1.0;
  double energy = 0.25;
  double charge = 1.0;
  /// Replaces the derived coupling -m Q^2 / (2 hbar^2) when set.
  std::optional<double> lambda;

  SolverConfig solver{4, 128, 1e-10, RuleKind::gauss, NodePlacement::midpoint};
  scattering::ReducedKernelChoice kernel_choice = scattering::SeparableFarField{};
  int neumann_iterations = 60;

  std::string output_path = ".";
  OutputFormat format = OutputFormat::csv;

  scattering::PhysicalParams params() const;
};

/// Named real columns of equal length, written as one CSV or JSON file.
struct FigureDataset {
  std::string name;  ///< file stem, e.g. "fig1"
  std::vector<std::string> column_names;
  std::vector<std::vector<double>> columns;

  /// Throws InvalidArgument on a duplicate name or a length mismatch.
  void add_column(std::string column, std::vector<double> values);
  std::size_t rows() const { return columns.empty() ? 0 : columns.front().size(); }
};

/// Header line then one line per row; %.11e numbers, ',' separators, LF endings.
std::string to_csv(const FigureDataset& data);
/// {"meta": <resolved config>, "columns": {name: [...], ...}} in column order.
std::string to_json(const FigureDataset& data, const RunConfig& config);

/// Throws InvalidArgument when the configuration cannot run. Called before
/// any computation or file creation.
void validate(const RunConfig& config);

/// Column-name fragment for a Podolsky length, e.g. 0.5 -> "a0.5".
std::string a_label(double a);

std::vector<FigureDataset> cmd_potentials(const RunConfig& config);
std::vector<FigureDataset> cmd_closed_form(const RunConfig& config);
std::vector<FigureDataset> cmd_figures(const RunConfig& config);

struct SolveReport {
  double max_resolvent_vs_nystrom = 0.0;
  std::optional<double> max_resolvent_vs_neumann;  ///< empty when the iteration diverged
  double max_numeric_vs_closed = 0.0;
  Complex determinant;
  double last_term_magnitude = 0.0;
  std::string kernel;
};

struct SolveOutput {
  FigureDataset data;
  SolveReport report;
};

SolveOutput cmd_solve(const RunConfig& config);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Runs the invariant suite of every module. Never throws for a failing
/// check; failures, including numerical exceptions, become entries.
std::vector<CheckResult> cmd_selftest(const RunConfig& config);

/// Writes every dataset into config.output_path in config.format.
/// Throws IOError on failure.
void write_datasets(const std::vector<FigureDataset>& sets, const RunConfig& config);

/// JSON object with the report fields and the resolved config under "meta".
std::string report_json(const SolveReport& report, const RunConfig& config);
/// Writes `content` to output_path/name. Throws IOError.
void write_file(const RunConfig& config, const std::string& name, const std::string& content);

/// Parses argv into a RunConfig. Throws InvalidArgument on bad flags.
/// Rethrows CLI::CallForHelp for --help.
RunConfig parse_args(int argc, const char* const* argv);
std::string usage();

/// Entry point: parse, validate, compute, write. Returns the process exit code
/// (0 ok, 1 validation, 2 numerical failure, 3 I/O).
int run(int argc, const char* const* argv);

}  // namespace fredholm::cli
