#include <CLI11.hpp>
#include <omp.h>

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

#include "fredholm/cli.hpp"
#include "fredholm/errors.hpp"

namespace fredholm::cli {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitNumerical = 2;
constexpr int kExitIO = 3;

void apply_thread_cap() {
  const char* env = std::getenv("FREDHOLM_SEED_THREADS");
  if (env == nullptr || *env == '\0') {
    return;
  }
  char* end = nullptr;
  const long n = std::strtol(env, &end, 10);
  if (*end == '\0' && n > 0 && n <= 4096) {
    omp_set_num_threads(static_cast<int>(n));
  } else {
    std::cerr << "warning: ignoring FREDHOLM_SEED_THREADS='" << env << "'\n";
  }
}

int report(const Error& e, int code) {
  std::cerr << "error: " << e.kind() << ": " << e.what() << '\n';
  return code;
}

int execute(const RunConfig& config) {
  switch (config.command) {
    case Command::potentials:
      write_datasets(cmd_potentials(config), config);
      return kExitOk;
    case Command::closed_form:
      write_datasets(cmd_closed_form(config), config);
      return kExitOk;
    case Command::figures:
      write_datasets(cmd_figures(config), config);
      return kExitOk;
    case Command::solve: {
      const SolveOutput out = cmd_solve(config);
      const std::string summary = report_json(out.report, config);
      write_datasets({out.data}, config);
      write_file(config, "solve_report.json", summary);
      std::printf("max |resolvent - nystrom| = %.3e\n", out.report.max_resolvent_vs_nystrom);
      if (out.report.max_resolvent_vs_neumann) {
        std::printf("max |resolvent - neumann| = %.3e\n", *out.report.max_resolvent_vs_neumann);
      } else {
        std::printf("max |resolvent - neumann| = n/a (Neumann series diverged)\n");
      }
      std::printf("max |resolvent - closed form| = %.3e\n", out.report.max_numeric_vs_closed);
      return kExitOk;
    }
    case Command::selftest: {
      int failed = 0;
      for (const auto& r : cmd_selftest(config)) {
        std::printf("%s %s %s\n", r.passed ? "PASS" : "FAIL", r.name.c_str(), r.detail.c_str());
        failed += r.passed ? 0 : 1;
      }
      std::printf("%s: %d failure(s)\n", failed == 0 ? "OK" : "FAILED", failed);
      std::fflush(stdout);
      return failed == 0 ? kExitOk : kExitNumerical;
    }
  }
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv) {
  apply_thread_cap();
  RunConfig config;
  try {
    config = parse_args(argc, argv);
    validate(config);
  } catch (const CLI::CallForHelp&) {
    std::cout << usage();
    return kExitOk;
  } catch (const Error& e) {
    return report(e, kExitValidation);
  }

  try {
    return execute(config);
  } catch (const IOError& e) {
    return report(e, kExitIO);
  } catch (const Error& e) {
    return report(e, kExitNumerical);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
}

}  // namespace fredholm::cli
