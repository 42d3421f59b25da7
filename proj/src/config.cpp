#include "sectorkit/config.hpp"

#include <fstream>

namespace sectorkit {

using nlohmann::json;

namespace {

const json& require_field(const json& j, const std::string& key,
                          const std::string& where) {
  if (!j.contains(key)) {
    throw ConfigError("missing \"" + key + "\" in " + where);
  }
  return j.at(key);
}

std::vector<std::int64_t> parse_int_list(const json& j, const std::string& where) {
  if (!j.is_array()) throw ConfigError(where + " must be an array of integers");
  std::vector<std::int64_t> out;
  for (const auto& entry : j) {
    if (!entry.is_number_integer()) {
      throw ConfigError(where + " must be an array of integers");
    }
    out.push_back(entry.get<std::int64_t>());
  }
  return out;
}

}  // namespace

Complex json_to_complex(const json& j) {
  if (j.is_number()) return Complex(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return Complex(j[0].get<double>(), j[1].get<double>());
  }
  throw ConfigError("complex entries must be numbers or [re, im] pairs");
}

Mat json_to_matrix(const json& j) {
  if (!j.is_array() || j.empty()) throw ConfigError("matrix must be a nonempty array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  if (cols == 0) throw ConfigError("matrix rows must be nonempty arrays");
  Mat m(static_cast<Index>(rows), static_cast<Index>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) {
      throw ConfigError("matrix rows must all have the same length");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      m(static_cast<Index>(r), static_cast<Index>(c)) = json_to_complex(j[r][c]);
    }
  }
  return m;
}

Vec json_to_vector(const json& j) {
  if (!j.is_array() || j.empty()) throw ConfigError("vector must be a nonempty array");
  Vec v(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    v(static_cast<Index>(i)) = json_to_complex(j[i]);
  }
  return v;
}

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

json matrix_to_json(const Mat& m) {
  json rows = json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json vector_to_json(const Vec& v) {
  json out = json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i)));
  return out;
}

json character_to_json(const Character& chi) {
  json out = json::array();
  for (const std::int64_t m : chi.dual_residues) out.push_back(m);
  return out;
}

Character json_to_character(const json& j) {
  return Character{parse_int_list(j, "character")};
}

json refined_grade_to_json(const RefinedGrade& grade) {
  return json::array({character_to_json(grade.left), character_to_json(grade.right)});
}

RefinedGrade json_to_refined_grade(const json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw ConfigError("refined grade must be a pair of residue arrays");
  }
  return RefinedGrade{json_to_character(j[0]), json_to_character(j[1])};
}

namespace {

std::vector<Mat> parse_generator_list(const json& j, const std::string& where) {
  if (!j.is_array()) {
    throw ConfigError(where + ": generators must be an array (one matrix per "
                              "cyclic factor)");
  }
  std::vector<Mat> out;
  for (const auto& entry : j) out.push_back(json_to_matrix(entry));
  return out;
}

SpinSystem parse_system(const json& doc) {
  const json& group_spec = require_field(doc, "group", "config");
  FiniteAbelianGroup group(
      parse_int_list(require_field(group_spec, "cyclic_moduli", "\"group\""),
                     "\"cyclic_moduli\""));

  const json& system_spec = require_field(doc, "system", "config");
  const json& sites = require_field(system_spec, "sites", "\"system\"");
  if (!sites.is_array() || sites.empty()) {
    throw ConfigError("\"system.sites\" must be a nonempty array");
  }

  Index default_dim = 0;
  if (system_spec.contains("onsite_dim")) {
    default_dim = system_spec.at("onsite_dim").get<Index>();
  }
  std::optional<std::vector<Mat>> default_generators;
  if (system_spec.contains("default_generators")) {
    default_generators = parse_generator_list(system_spec.at("default_generators"),
                                              "\"system.default_generators\"");
  }
  const json per_site_generators = system_spec.contains("generators")
                                       ? system_spec.at("generators")
                                       : json::object();

  std::vector<SiteSpec> specs;
  for (const auto& site : sites) {
    SiteSpec spec;
    spec.id = require_field(site, "id", "site entry").get<int>();
    const json& xy = require_field(site, "xy", "site entry");
    if (!xy.is_array() || xy.size() != 2) {
      throw ConfigError("site \"xy\" must be a pair of coordinates");
    }
    spec.xy = {xy[0].get<double>(), xy[1].get<double>()};
    spec.dim = site.contains("dim") ? site.at("dim").get<Index>() : default_dim;
    if (spec.dim < 1) {
      throw ConfigError("no dimension given for site " + std::to_string(spec.id));
    }
    const std::string key = std::to_string(spec.id);
    if (per_site_generators.contains(key)) {
      spec.generators = parse_generator_list(per_site_generators.at(key),
                                             "generators for site " + key);
    } else if (default_generators) {
      spec.generators = *default_generators;
    } else {
      throw ConfigError("no generators given for site " + key);
    }
    specs.push_back(std::move(spec));
  }

  try {
    return build_system(std::move(group), std::move(specs));
  } catch (const std::invalid_argument& err) {
    throw ConfigError(err.what());
  }
}

Region parse_region(const SpinSystem& system, const json& j, const std::string& name) {
  if (j.contains("mask")) {
    std::vector<int> ids;
    for (const std::int64_t id : parse_int_list(j.at("mask"), "region \"" + name + "\"")) {
      ids.push_back(static_cast<int>(id));
    }
    Region region(std::move(ids));
    try {
      system.check_region(region);
    } catch (const std::invalid_argument& err) {
      throw ConfigError("region \"" + name + "\": " + err.what());
    }
    return region;
  }
  if (j.contains("cone")) {
    const json& cone = j.at("cone");
    const json& apex = require_field(cone, "apex", "cone region \"" + name + "\"");
    const json& deg = require_field(cone, "deg", "cone region \"" + name + "\"");
    if (!apex.is_array() || apex.size() != 2 || !deg.is_array() || deg.size() != 2) {
      throw ConfigError("cone region \"" + name +
                        "\" needs \"apex\":[x,y] and \"deg\":[lo,hi]");
    }
    return cone_region(system, {apex[0].get<double>(), apex[1].get<double>()},
                       deg[0].get<double>(), deg[1].get<double>());
  }
  throw ConfigError("region \"" + name + "\" must have a \"mask\" or a \"cone\"");
}

Task parse_task(const json& j) {
  Task task;
  task.name = require_field(j, "name", "task entry").get<std::string>();
  task.kind = require_field(j, "kind", "task \"" + task.name + "\"").get<std::string>();
  if (j.contains("tol")) {
    task.tol = j.at("tol").get<double>();
    if (*task.tol <= 0.0) {
      throw ConfigError("task \"" + task.name + "\": tolerance must be positive");
    }
  }
  if (task.kind == "classify") {
    ClassifyTask classify;
    classify.charged_operator =
        require_field(j, "charged_operator", "task \"" + task.name + "\"")
            .get<std::string>();
    if (j.contains("expected_grade")) {
      classify.expected_grade =
          Character{parse_int_list(j.at("expected_grade"), "\"expected_grade\"")};
    }
    if (j.contains("split_region")) {
      classify.split_region = j.at("split_region").get<std::string>();
    }
    if (j.contains("regions")) {
      for (const auto& name : j.at("regions")) {
        classify.region_family.push_back(name.get<std::string>());
      }
    }
    if (j.contains("reference")) {
      const json& ref = j.at("reference");
      if (ref.is_string() && ref.get<std::string>() == "defining") {
        // default
      } else if (ref.is_object() && ref.contains("gns_vector_state")) {
        classify.gns_reference = json_to_vector(ref.at("gns_vector_state"));
      } else {
        throw ConfigError("task \"" + task.name +
                          "\": reference must be \"defining\" or "
                          "{\"gns_vector_state\": [...]}");
      }
    }
    task.classify = std::move(classify);
  } else if (task.kind == "decompose") {
    DecomposeTask decompose;
    if (j.contains("operator")) {
      decompose.operator_name = j.at("operator").get<std::string>();
    }
    if (j.contains("vector")) {
      decompose.vector_name = j.at("vector").get<std::string>();
    }
    if (!decompose.operator_name && !decompose.vector_name) {
      throw ConfigError("task \"" + task.name +
                        "\" must name an \"operator\" or a \"vector\"");
    }
    task.decompose = std::move(decompose);
  } else {
    throw ConfigError("task \"" + task.name + "\": unknown kind \"" + task.kind + "\"");
  }
  return task;
}

}  // namespace

const Region& JobConfig::region(const std::string& name) const {
  const auto it = regions.find(name);
  if (it == regions.end()) throw ConfigError("unknown region \"" + name + "\"");
  return it->second;
}

const LocalOperator& JobConfig::op(const std::string& name) const {
  const auto it = operators.find(name);
  if (it == operators.end()) throw ConfigError("unknown operator \"" + name + "\"");
  return it->second;
}

const Vec& JobConfig::vector(const std::string& name) const {
  const auto it = vectors.find(name);
  if (it == vectors.end()) throw ConfigError("unknown vector \"" + name + "\"");
  return it->second;
}

const Task& JobConfig::task(const std::string& name) const {
  for (const Task& t : tasks) {
    if (t.name == name) return t;
  }
  throw ConfigError("unknown task \"" + name + "\"");
}

JobConfig parse_config(const json& doc) {
  SpinSystem system = parse_system(doc);

  std::map<std::string, Region> regions;
  if (doc.contains("regions")) {
    for (const auto& [name, spec] : doc.at("regions").items()) {
      regions.emplace(name, parse_region(system, spec, name));
    }
  }

  std::map<std::string, LocalOperator> operators;
  if (doc.contains("operators")) {
    for (const auto& [name, spec] : doc.at("operators").items()) {
      std::vector<int> support;
      for (const std::int64_t id :
           parse_int_list(require_field(spec, "support", "operator \"" + name + "\""),
                          "operator support")) {
        support.push_back(static_cast<int>(id));
      }
      LocalOperator op{json_to_matrix(require_field(spec, "matrix",
                                                    "operator \"" + name + "\"")),
                       Region(std::move(support))};
      try {
        system.check_region(op.support);
        embed_local(op, system);  // validates the dimension against the support
      } catch (const std::invalid_argument& err) {
        throw ConfigError("operator \"" + name + "\": " + err.what());
      }
      operators.emplace(name, std::move(op));
    }
  }

  std::map<std::string, Vec> vectors;
  if (doc.contains("vectors")) {
    for (const auto& [name, spec] : doc.at("vectors").items()) {
      Vec v = json_to_vector(spec);
      if (v.size() != system.total_dim()) {
        throw ConfigError("vector \"" + name + "\" has length " +
                          std::to_string(v.size()) + ", expected " +
                          std::to_string(system.total_dim()));
      }
      vectors.emplace(name, std::move(v));
    }
  }

  std::string split_region;
  if (doc.contains("split_region")) {
    split_region = doc.at("split_region").get<std::string>();
  } else if (!regions.empty()) {
    split_region = regions.begin()->first;
  }
  if (!split_region.empty() && regions.find(split_region) == regions.end()) {
    throw ConfigError("unknown split region \"" + split_region + "\"");
  }

  std::uint64_t seed = 0;
  if (doc.contains("seed")) seed = doc.at("seed").get<std::uint64_t>();

  std::vector<Task> tasks;
  if (doc.contains("tasks")) {
    for (const auto& entry : doc.at("tasks")) tasks.push_back(parse_task(entry));
  }

  JobConfig config{std::move(system), std::move(regions),  std::move(operators),
                   std::move(vectors), std::move(split_region), seed,
                   std::move(tasks)};

  // Cross-checks: every task reference must resolve now, not at run time.
  for (const Task& task : config.tasks) {
    if (task.classify) {
      config.op(task.classify->charged_operator);
      if (!task.classify->split_region.empty()) {
        config.region(task.classify->split_region);
      } else if (task.classify->region_family.empty() && config.split_region.empty()) {
        throw ConfigError("task \"" + task.name +
                          "\": no split region configured for the criterion");
      }
      for (const auto& name : task.classify->region_family) config.region(name);
      if (task.classify->gns_reference &&
          task.classify->gns_reference->size() != config.system.total_dim()) {
        throw ConfigError("task \"" + task.name +
                          "\": reference state has the wrong dimension");
      }
    }
    if (task.decompose) {
      if (task.decompose->operator_name) config.op(*task.decompose->operator_name);
      if (task.decompose->vector_name) config.vector(*task.decompose->vector_name);
    }
  }
  return config;
}

JobConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& err) {
    throw ConfigError(std::string("config is not valid JSON: ") + err.what());
  }
  return parse_config(doc);
}

}  // namespace sectorkit
