#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "sectorkit/jobs.hpp"

namespace {

int emit(const sectorkit::JobReport& report, const std::string& out_path) {
  const std::string text = report.document.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return 2;
    }
    out << text;
  }
  for (const sectorkit::TaskTiming& timing : report.timings) {
    std::cerr << timing.name << ": " << timing.wall_ms << " ms\n";
  }
  return report.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graded decomposition and sector classification for finite "
               "spin systems"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  std::string task_name;
  std::optional<double> tol_override;
  std::optional<std::uint64_t> seed_override;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("config", config_path, "job config (JSON)")->required();
    cmd->add_option("--out", out_path, "write the report to a file");
    cmd->add_option_function<double>(
        "--tol", [&](double value) { tol_override = value; },
        "tolerance override");
  };

  CLI::App* verify = app.add_subcommand("verify", "run the invariant suites");
  add_common(verify);
  verify->add_option_function<std::uint64_t>(
      "--seed", [&](std::uint64_t value) { seed_override = value; },
      "seed for the randomized suites (default: config seed)");

  CLI::App* classify = app.add_subcommand("classify", "classify a charged operator");
  add_common(classify);
  classify->add_option("--task", task_name, "task name from the config")->required();

  CLI::App* decompose = app.add_subcommand("decompose",
                                           "graded decomposition of an operator "
                                           "or vector");
  add_common(decompose);
  decompose->add_option("--task", task_name, "task name from the config")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    return app.exit(err) == 0 ? 0 : 2;
  }

  try {
    const sectorkit::JobConfig config = sectorkit::load_config(config_path);
    sectorkit::JobReport report;
    if (verify->parsed()) {
      report = sectorkit::run_verify(config, seed_override.value_or(config.seed),
                                     tol_override);
    } else if (classify->parsed()) {
      report = sectorkit::run_classify(config, task_name, tol_override);
    } else {
      report = sectorkit::run_decompose(config, task_name, tol_override);
    }
    return emit(report, out_path);
  } catch (const sectorkit::ConfigError& err) {
    std::cerr << "config error: " << err.what() << "\n";
    return 2;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
}
