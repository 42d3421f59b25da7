#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "sectorkit/lattice.hpp"
#include "sectorkit/split.hpp"

namespace sectorkit {

/// Raised for malformed or inconsistent job configurations; the CLI maps
/// it to exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ClassifyTask {
  std::string charged_operator;
  std::optional<Character> expected_grade;
  std::string split_region;               // names the region used for the split
  std::vector<std::string> region_family; // SSC family; default {split, complement}
  std::optional<Vec> gns_reference;       // classify against the GNS of this
                                          // vector state instead of the
                                          // defining product reference
};

struct DecomposeTask {
  std::optional<std::string> operator_name;
  std::optional<std::string> vector_name;
};

struct Task {
  std::string name;
  std::string kind;  // "classify" | "decompose"
  std::optional<double> tol;
  std::optional<ClassifyTask> classify;
  std::optional<DecomposeTask> decompose;
};

struct JobConfig {
  SpinSystem system;
  std::map<std::string, Region> regions;
  std::map<std::string, LocalOperator> operators;
  std::map<std::string, Vec> vectors;
  std::string split_region;  // optional; defaults to the first named region
  std::uint64_t seed = 0;
  std::vector<Task> tasks;

  const Region& region(const std::string& name) const;
  const LocalOperator& op(const std::string& name) const;
  const Vec& vector(const std::string& name) const;
  const Task& task(const std::string& name) const;
};

/// Parses and validates a job configuration document. Any malformed field,
/// unresolved reference or invalid system specification throws ConfigError.
JobConfig parse_config(const nlohmann::json& doc);
JobConfig load_config(const std::string& path);

// JSON <-> linear algebra, entries as [re, im] pairs.
nlohmann::json complex_to_json(const Complex& z);
nlohmann::json matrix_to_json(const Mat& m);
nlohmann::json vector_to_json(const Vec& v);
Complex json_to_complex(const nlohmann::json& j);
Mat json_to_matrix(const nlohmann::json& j);
Vec json_to_vector(const nlohmann::json& j);

// Characters serialize as residue arrays; refined grades as a pair of them.
nlohmann::json character_to_json(const Character& chi);
Character json_to_character(const nlohmann::json& j);
nlohmann::json refined_grade_to_json(const RefinedGrade& grade);
RefinedGrade json_to_refined_grade(const nlohmann::json& j);

}  // namespace sectorkit
