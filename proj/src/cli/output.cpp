#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "fredholm/cli.hpp"
#include "fredholm/errors.hpp"

namespace fredholm::cli {
namespace {

using Json = nlohmann::ordered_json;

const char* command_name(Command c) {
  switch (c) {
    case Command::potentials:
      return "potentials";
    case Command::closed_form:
      return "closed-form";
    case Command::solve:
      return "solve";
    case Command::selftest:
      return "selftest";
    case Command::figures:
      break;
  }
  return "figures";
}

Json grid_json(const GridSpec& g) { return Json{{"start", g.start}, {"stop", g.stop}, {"step", g.step}}; }

Json kernel_json(const scattering::ReducedKernelChoice& choice) {
  if (const auto* reg = std::get_if<scattering::RegularizedGreen>(&choice)) {
    return Json{{"kind", "regularized"}, {"epsilon", reg->epsilon}};
  }
  if (std::holds_alternative<scattering::ClosedFormOnly>(choice)) {
    return Json{{"kind", "closed-form"}};
  }
  return Json{{"kind", "separable"}};
}

Json meta_json(const RunConfig& c) {
  const auto p = c.params();
  Json meta;
  meta["command"] = command_name(c.command);
  meta["interval"] = Json::array({c.interval.a, c.interval.b});
  meta["grid"] = grid_json(c.grid);
  meta["a"] = c.a_values;
  if (c.command == Command::figures) {
    meta["surface_x"] = grid_json(c.surface_x);
    meta["surface_a"] = grid_json(c.surface_a);
  }
  meta["physical"] = Json{{"mass", p.mass}, {"hbar", p.hbar}, {"energy", p.energy},
                          {"charge", p.charge}, {"k", p.k},   {"lambda", p.lambda}};
  meta["solver"] = Json{{"series_order", c.solver.series_order_max},
                        {"nodes", c.solver.nodes},
                        {"det_tolerance", c.solver.det_tolerance},
                        {"rule", c.solver.rule_kind == RuleKind::gauss ? "gauss" : "uniform"},
                        {"placement", c.solver.placement == NodePlacement::midpoint ? "midpoint" : "left"}};
  meta["kernel"] = kernel_json(c.kernel_choice);
  if (c.command == Command::solve) {
    meta["iterations"] = c.neumann_iterations;
  }
  return meta;
}

void format_number(std::string& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.11e", v);
  out += buf;
}

}  // namespace

void FigureDataset::add_column(std::string column, std::vector<double> values) {
  for (const auto& existing : column_names) {
    if (existing == column) {
      throw InvalidArgument("duplicate column '" + column + "' in " + name);
    }
  }
  if (!columns.empty() && values.size() != columns.front().size()) {
    throw InvalidArgument("column '" + column + "' has " + std::to_string(values.size()) +
                          " rows, expected " + std::to_string(columns.front().size()));
  }
  column_names.push_back(std::move(column));
  columns.push_back(std::move(values));
}

std::string to_csv(const FigureDataset& data) {
  std::string out;
  for (std::size_t c = 0; c < data.column_names.size(); ++c) {
    if (c > 0) {
      out += ',';
    }
    out += data.column_names[c];
  }
  out += '\n';
  const std::size_t rows = data.rows();
  out.reserve(out.size() + rows * data.columns.size() * 19);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < data.columns.size(); ++c) {
      if (c > 0) {
        out += ',';
      }
      format_number(out, data.columns[c][r]);
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const FigureDataset& data, const RunConfig& config) {
  Json doc;
  doc["meta"] = meta_json(config);
  doc["meta"]["dataset"] = data.name;
  Json cols = Json::object();
  for (std::size_t c = 0; c < data.columns.size(); ++c) {
    cols[data.column_names[c]] = data.columns[c];
  }
  doc["columns"] = std::move(cols);
  return doc.dump(1) + "\n";
}

std::string report_json(const SolveReport& report, const RunConfig& config) {
  Json doc;
  doc["meta"] = meta_json(config);
  doc["kernel"] = report.kernel;
  doc["determinant"] = Json::array({report.determinant.real(), report.determinant.imag()});
  doc["last_term_magnitude"] = report.last_term_magnitude;
  doc["max_resolvent_vs_nystrom"] = report.max_resolvent_vs_nystrom;
  if (report.max_resolvent_vs_neumann) {
    doc["max_resolvent_vs_neumann"] = *report.max_resolvent_vs_neumann;
  } else {
    doc["max_resolvent_vs_neumann"] = nullptr;
  }
  doc["max_numeric_vs_closed"] = report.max_numeric_vs_closed;
  return doc.dump(1) + "\n";
}

void write_file(const RunConfig& config, const std::string& name, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path dir(config.output_path);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    throw IOError("cannot create output directory '" + dir.string() + "': " + ec.message());
  }
  const fs::path target = dir / name;
  const fs::path tmp = dir / (name + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw IOError("cannot open '" + tmp.string() + "' for writing");
    }
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      throw IOError("write to '" + tmp.string() + "' failed");
    }
  }
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IOError("cannot move output into place at '" + target.string() + "'");
  }
}

void write_datasets(const std::vector<FigureDataset>& sets, const RunConfig& config) {
  for (const auto& set : sets) {
    if (config.format == OutputFormat::json) {
      write_file(config, set.name + ".json", to_json(set, config));
    } else {
      write_file(config, set.name + ".csv", to_csv(set));
    }
  }
}

}  // namespace fredholm::cli
