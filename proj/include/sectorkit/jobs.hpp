#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sectorkit/config.hpp"
#include "sectorkit/sectors.hpp"

namespace sectorkit {

struct TaskTiming {
  std::string name;
  double wall_ms = 0.0;
};

/// Result of one command. `document` holds the reproducible report (same
/// config and seed give identical bytes); wall-clock timings are kept
/// separate so the CLI can print them without perturbing the report.
struct JobReport {
  nlohmann::json document;
  bool pass = false;
  std::vector<TaskTiming> timings;
};

/// Runs the invariant suites of every module on the configured system plus
/// seeded random instances. Passes iff every suite stays within tolerance.
JobReport run_verify(const JobConfig& config, std::uint64_t seed,
                     std::optional<double> tol_override = std::nullopt);

/// Classifies the charged representation named by the task against its
/// reference and evaluates the superselection criterion over the region
/// family.
JobReport run_classify(const JobConfig& config, const std::string& task_name,
                       std::optional<double> tol_override = std::nullopt);

/// Graded decomposition of a named operator or vector under the lattice
/// action.
JobReport run_decompose(const JobConfig& config, const std::string& task_name,
                        std::optional<double> tol_override = std::nullopt);

}  // namespace sectorkit
