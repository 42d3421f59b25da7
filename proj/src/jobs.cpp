#include "sectorkit/jobs.hpp"

#include <chrono>
#include <cmath>

#include "sectorkit/random.hpp"

namespace sectorkit {

using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

Character random_character(const FiniteAbelianGroup& group, Rng& rng) {
  return group.character_at(rng.below(group.order()));
}

GroupElement random_element(const FiniteAbelianGroup& group, Rng& rng) {
  return group.element_at(rng.below(group.order()));
}

/// Random operator supported on a region, embedded into the full space.
Mat random_embedded(const SpinSystem& system, const Region& region, Rng& rng) {
  const SplitIndexer indexer(system, region);
  return embed_local(LocalOperator{rng.matrix(indexer.region_dim(),
                                              indexer.region_dim()),
                                   region},
                     system);
}

Region default_split(const SpinSystem& system) {
  std::vector<int> ids;
  const std::size_t half = (system.site_count() + 1) / 2;
  for (std::size_t p = 0; p < half; ++p) ids.push_back(system.site(p).id);
  return Region(std::move(ids));
}

struct SuiteCollector {
  json suites = json::array();
  std::vector<TaskTiming> timings;
  bool all_pass = true;
  std::optional<double> tol_override;

  template <class Body>
  void run(const std::string& name, double tolerance, Body&& body) {
    const auto start = Clock::now();
    double dev = 0.0;
    const auto update = [&dev](double value) { dev = std::max(dev, value); };
    body(update);
    const double tol = tol_override.value_or(tolerance);
    const bool pass = dev <= tol;
    suites.push_back(json{{"name", name},
                          {"max_deviation", dev},
                          {"tolerance", tol},
                          {"pass", pass}});
    all_pass = all_pass && pass;
    timings.push_back(TaskTiming{name, ms_since(start)});
  }
};

json region_to_json(const Region& region) {
  json ids = json::array();
  for (const int id : region.site_ids()) ids.push_back(id);
  return ids;
}

}  // namespace

JobReport run_verify(const JobConfig& config, std::uint64_t seed,
                     std::optional<double> tol_override) {
  const SpinSystem& system = config.system;
  const FiniteAbelianGroup& group = system.group();
  const std::int64_t order = group.order();
  const Index dim = system.total_dim();

  const Region lambda = config.split_region.empty()
                            ? default_split(system)
                            : config.region(config.split_region);
  const SplitAction split(system, lambda);
  const UnitaryRep lattice = global_rep(system);
  const auto elements = enumerate_elements(group);
  const auto characters = enumerate_dual(group);

  Rng rng(seed);
  SuiteCollector out;
  out.tol_override = tol_override;
  constexpr int kInstances = 20;

  out.run("character-orthogonality", 1e-12, [&](auto update) {
    for (const Character& chi : characters) {
      const Complex mean = haar_average(group, [&](const GroupElement& g) {
        return evaluate_character(group, chi, g);
      });
      const double expected = chi == group.trivial_character() ? 1.0 : 0.0;
      update(std::abs(mean - Complex(expected, 0.0)));
    }
  });

  out.run("dual-group-law", 1e-12, [&](auto update) {
    for (const Character& c1 : characters) {
      for (const Character& c2 : characters) {
        const Character product = group.multiply(c1, c2);
        for (const GroupElement& g : elements) {
          update(std::abs(evaluate_character(group, product, g) -
                          evaluate_character(group, c1, g) *
                              evaluate_character(group, c2, g)));
        }
      }
    }
  });

  out.run("enumeration-determinism", 0.5, [&](auto update) {
    update(enumerate_elements(group) == enumerate_elements(group) ? 0.0 : 1.0);
    update(enumerate_dual(group) == enumerate_dual(group) ? 0.0 : 1.0);
  });

  out.run("region-representation", 1e-12, [&](auto update) {
    std::vector<Region> regions{system.full_region(), lambda};
    for (const auto& [name, region] : config.regions) regions.push_back(region);
    for (const Region& region : regions) {
      const std::int64_t step = std::max<std::int64_t>(1, order * order / 36);
      for (std::int64_t k = 0; k < order * order; k += step) {
        const GroupElement g = group.element_at(k / order);
        const GroupElement h = group.element_at(k % order);
        const Mat lhs = region_unitary(system, region, g) *
                        region_unitary(system, region, h);
        update((lhs - region_unitary(system, region, group.add(g, h))).norm());
      }
    }
  });

  out.run("split-commutation", 1e-12, [&](auto update) {
    for (std::int64_t i = 0; i < std::min<std::int64_t>(order, 6); ++i) {
      for (std::int64_t j = 0; j < std::min<std::int64_t>(order, 6); ++j) {
        const Mat a = split.side_lambda().unitary(i);
        const Mat b = split.side_complement().unitary(j);
        update((a * b - b * a).norm());
      }
    }
  });

  out.run("support-stability", 1e-10, [&](auto update) {
    for (int k = 0; k < kInstances; ++k) {
      const Mat a = random_embedded(system, lambda, rng);
      const GroupElement g = random_element(group, rng);
      const Mat& u = lattice.unitary(g);
      update(support_defect(system, lambda, u * a * u.adjoint()));
    }
  });

  out.run("projection-properties", 1e-10, [&](auto update) {
    for (int k = 0; k < kInstances; ++k) {
      const Mat a = rng.matrix(dim, dim);
      const Vec v = rng.vector(dim);
      const Character phi1 = random_character(group, rng);
      const Character phi2 = random_character(group, rng);
      const GroupElement g = random_element(group, rng);
      const Mat pa = project_operator(lattice, phi1, a);
      const Vec pv = project_vector(lattice, phi1, v);
      const Mat& u = lattice.unitary(g);
      const Complex phase = evaluate_character(group, phi1, g);
      update((u * pa * u.adjoint() - phase * pa).norm());
      update((u * pv - phase * pv).norm());
      const double delta = phi1 == phi2 ? 1.0 : 0.0;
      update((project_operator(lattice, phi1, project_operator(lattice, phi2, a)) -
              delta * pa)
                 .norm());
      update((project_operator(lattice, phi1, pa) - pa).norm());
      update((project_vector(lattice, phi1, pv) - pv).norm());
    }
  });

  out.run("completeness", 1e-10, [&](auto update) {
    for (int k = 0; k < 5; ++k) {
      update(decompose_operator(lattice, rng.matrix(dim, dim)).residual_norm);
      update(decompose_vector(lattice, rng.vector(dim)).residual_norm);
    }
  });

  out.run("compatibility", 1e-10, [&](auto update) {
    for (int k = 0; k < kInstances; ++k) {
      const Mat a = rng.matrix(dim, dim);
      const Vec v = rng.vector(dim);
      const Character phi1 = random_character(group, rng);
      const Character phi2 = random_character(group, rng);
      const Vec lhs = project_operator(lattice, phi1, a) *
                      project_vector(lattice, phi2, v);
      const Vec rhs = project_vector(lattice, group.multiply(phi1, phi2),
                                     Vec(a * project_vector(lattice, phi2, v)));
      update((lhs - rhs).norm());
    }
  });

  out.run("oracle-equivalence", 1e-10, [&](auto update) {
    std::vector<UnitaryRep> reps{lattice, split.side_lambda(),
                                 split.side_complement()};
    for (const UnitaryRep& rep : reps) {
      const auto oracle = eigenspace_oracle(rep);
      for (const auto& [chi, projector] : oracle) {
        const Mat averaged = haar_average(group, chi, [&](const GroupElement& g) {
          return Mat(rep.unitary(g));
        });
        update(operator_norm(averaged - projector));
      }
    }
  });

  out.run("grade-multiplicativity", 1e-10, [&](auto update) {
    for (int k = 0; k < kInstances; ++k) {
      const Character phi1 = random_character(group, rng);
      const Character phi2 = random_character(group, rng);
      const Mat a = project_operator(lattice, phi1, rng.matrix(dim, dim));
      const Mat b = project_operator(lattice, phi2, rng.matrix(dim, dim));
      if (a.norm() < 1e-6 || b.norm() < 1e-6) continue;
      const Mat ab = a * b;
      const Character product = group.multiply(phi1, phi2);
      for (std::size_t j = 0; j < group.factor_count(); ++j) {
        std::vector<std::int64_t> res(group.factor_count(), 0);
        res[j] = 1 % group.cyclic_moduli()[j];
        const GroupElement g{res};
        const Mat& u = lattice.unitary(g);
        update((u * ab * u.adjoint() -
                evaluate_character(group, product, g) * ab)
                   .norm() /
               std::max(1.0, ab.norm()));
      }
    }
  });

  out.run("refinement-diagonal-compatibility", 1e-10, [&](auto update) {
    for (int k = 0; k < kInstances; ++k) {
      const Vec v = rng.vector(dim);
      const Character phi1 = random_character(group, rng);
      const Character phi2 = random_character(group, rng);
      const Character product = group.multiply(phi1, phi2);
      const Vec refined = refined_project_vector(split, RefinedGrade{phi1, phi2}, v);
      update((project_vector(lattice, product, refined) - refined).norm());
      update((refined_project_vector(split, RefinedGrade{phi1, phi2},
                                     project_vector(lattice, product, v)) -
              refined)
                 .norm());
    }
  });

  out.run("refinement-side-action", 1e-10, [&](auto update) {
    for (int k = 0; k < kInstances; ++k) {
      const Mat a = random_embedded(system, lambda, rng);
      const GroupElement g1 = random_element(group, rng);
      const GroupElement g2 = random_element(group, rng);
      const Mat tilde = split.tilde_unitary(g1, g2);
      const Mat& side = split.side_lambda().unitary(g1);
      update((tilde * a * tilde.adjoint() - side * a * side.adjoint()).norm());
      const Character phi = random_character(group, rng);
      const Mat refined = refined_project_operator(
          split, RefinedGrade{phi, group.trivial_character()}, a);
      update((refined - project_operator(lattice, phi, a)).norm());
    }
  });

  out.run("refinement-support-preservation", 1e-10, [&](auto update) {
    for (int k = 0; k < kInstances; ++k) {
      const Mat a = random_embedded(system, lambda, rng);
      const Character phi = random_character(group, rng);
      update(support_defect(system, lambda, project_operator(lattice, phi, a)));
    }
  });

  out.run("refinement-promotion", 1e-10, [&](auto update) {
    for (int k = 0; k < kInstances; ++k) {
      const Mat a = rng.matrix(dim, dim);
      const Character phi1 = random_character(group, rng);
      const Character phi2 = random_character(group, rng);
      const double refined =
          refined_project_operator(split, RefinedGrade{phi1, phi2}, a).norm();
      const double diagonal =
          project_operator(lattice, group.multiply(phi1, phi2), a).norm();
      update(std::max(0.0, refined - diagonal));
    }
  });

  out.run("refinement-product-formula", 1e-10, [&](auto update) {
    for (int k = 0; k < kInstances; ++k) {
      const Mat a = random_embedded(system, lambda, rng);
      const Mat b = random_embedded(system, split.lambda_complement(), rng);
      const Character phi1 = random_character(group, rng);
      const Character phi2 = random_character(group, rng);
      const Mat lhs =
          refined_project_operator(split, RefinedGrade{phi1, phi2}, Mat(a * b));
      const Mat rhs = project_operator(split.side_lambda(), phi1, a) *
                      project_operator(split.side_complement(), phi2, b);
      update((lhs - rhs).norm());
    }
  });

  out.run("factorization", 1e-9, [&](auto update) {
    for (int k = 0; k < kInstances; ++k) {
      const Character phi = random_character(group, rng);
      const Mat a = project_operator(split.side_lambda(), phi,
                                     random_embedded(system, lambda, rng));
      const Mat b =
          project_operator(split.side_complement(), group.inverse(phi),
                           random_embedded(system, split.lambda_complement(), rng));
      if (a.norm() < 1e-6 || b.norm() < 1e-6) continue;
      const auto [ga, gb] = factor_grades(split, a, b, 1e-9);
      update(ga == phi && gb == group.inverse(phi) ? 0.0 : 1.0);
      const UnitaryRep diagonal = split.diagonal_rep();
      update(grade_of_operator(diagonal, a, 1e-9).deviation /
             std::max(1.0, a.norm()));
      update(grade_of_operator(diagonal, b, 1e-9).deviation /
             std::max(1.0, b.norm()));
    }
  });

  out.run("reference-covariance", 1e-10, [&](auto update) {
    const CovariantRep reference = defining_rep(system);
    for (int k = 0; k < kInstances; ++k) {
      const Mat a = rng.matrix(dim, dim);
      const GroupElement g = random_element(group, rng);
      const Mat& u_sys = lattice.unitary(g);
      const Mat& u_imp = reference.implementing().unitary(g);
      update((reference.apply(Mat(u_sys * a * u_sys.adjoint())) -
              u_imp * reference.apply(a) * u_imp.adjoint())
                 .norm() /
             std::max(1.0, a.norm()));
    }
  });

  JobReport report;
  report.document = json{{"command", "verify"},
                         {"seed", seed},
                         {"split_region", region_to_json(lambda)},
                         {"suites", out.suites},
                         {"pass", out.all_pass}};
  report.pass = out.all_pass;
  report.timings = std::move(out.timings);
  return report;
}

namespace {

json ssc_to_json(const CriterionReport& report,
                 const std::vector<std::string>& names) {
  json blocks = json::array();
  for (std::size_t i = 0; i < report.regions.size(); ++i) {
    const RegionVerdict& verdict = report.regions[i];
    blocks.push_back(json{{"region", names[i]},
                          {"region_sites", region_to_json(verdict.region)},
                          {"plain_V_found", verdict.plain_found},
                          {"plain_deviation", verdict.plain_deviation},
                          {"equivariant_V_found", verdict.equivariant_found},
                          {"deviation", verdict.equivariant_deviation}});
  }
  return blocks;
}

}  // namespace

JobReport run_classify(const JobConfig& config, const std::string& task_name,
                       std::optional<double> tol_override) {
  const Task& task = config.task(task_name);
  if (task.kind != "classify" || !task.classify) {
    throw ConfigError("task \"" + task_name + "\" is not a classification task");
  }
  const ClassifyTask& spec = *task.classify;
  const double tol = tol_override.value_or(task.tol.value_or(1e-10));
  const SpinSystem& system = config.system;

  // Resolve every reference up front; unresolved names are config errors.
  const LocalOperator& charged_op = config.op(spec.charged_operator);
  const std::string split_name =
      spec.split_region.empty() ? config.split_region : spec.split_region;
  std::vector<std::string> family_names;
  std::vector<Region> family;
  if (!spec.region_family.empty()) {
    for (const std::string& name : spec.region_family) {
      family_names.push_back(name);
      family.push_back(config.region(name));
    }
  } else {
    const Region& lambda = config.region(split_name);
    family_names.push_back(split_name);
    family.push_back(lambda);
    family_names.push_back(split_name + "^c");
    family.push_back(system.complement(lambda));
  }

  JobReport report;
  const auto start = Clock::now();
  json block{{"task", task.name}, {"kind", "classify"}};
  try {
    const UnitaryRep lattice = global_rep(system, tol);
    CovariantRep reference = spec.gns_reference
                                 ? gns_covariant_rep(
                                       system, gns_from_vector_state(
                                                   *spec.gns_reference, lattice, tol),
                                       tol)
                                 : defining_rep(system, tol);

    const Mat w = embed_local(charged_op, system);
    Character expected = spec.expected_grade.value_or(Character{});
    if (!spec.expected_grade) {
      const HomogeneityReport hom = grade_of_map(lattice, lattice, w, tol);
      if (!hom.grade) {
        throw std::runtime_error("operator \"" + spec.charged_operator +
                                 "\" is not homogeneous (deviation " +
                                 std::to_string(hom.deviation) + ")");
      }
      expected = *hom.grade;
    }
    const CovariantRep charged = charged_rep(reference, w, expected, tol);
    const SectorLabel label = classify_sector(charged, reference, tol);
    const CriterionReport criterion =
        check_equivariant_ssc(charged, reference, family, tol);

    block["sector"] = character_to_json(label.character);
    block["deviation"] = label.deviation;
    block["intertwiner_phase"] = "first-nonzero-positive-real";
    block["ssc"] = ssc_to_json(criterion, family_names);
    block["equivariant_criterion_satisfied"] = criterion.equivariant_satisfied;
    block["pass"] = true;
    report.pass = true;
  } catch (const std::exception& err) {
    block["error"] = err.what();
    block["pass"] = false;
    report.pass = false;
  }
  report.timings.push_back(TaskTiming{task.name, ms_since(start)});
  report.document = json{{"command", "classify"},
                         {"seed", config.seed},
                         {"tasks", json::array({block})},
                         {"pass", report.pass}};
  return report;
}

JobReport run_decompose(const JobConfig& config, const std::string& task_name,
                        std::optional<double> tol_override) {
  const Task& task = config.task(task_name);
  if (task.kind != "decompose" || !task.decompose) {
    throw ConfigError("task \"" + task_name + "\" is not a decomposition task");
  }
  const DecomposeTask& spec = *task.decompose;
  const double drop_tol = tol_override.value_or(task.tol.value_or(1e-12));
  const SpinSystem& system = config.system;

  JobReport report;
  const auto start = Clock::now();
  json block{{"task", task.name}, {"kind", "decompose"}};
  try {
    const UnitaryRep lattice = global_rep(system);
    json components = json::array();
    double residual = 0.0;
    if (spec.operator_name) {
      const Mat a = embed_local(config.op(*spec.operator_name), system);
      const OperatorDecomposition parts = decompose_operator(lattice, a);
      residual = parts.residual_norm;
      const double floor = drop_tol * std::max(1.0, a.norm());
      for (const auto& [chi, component] : parts.components) {
        if (component.norm() <= floor) continue;
        components.push_back(json{{"character", character_to_json(chi)},
                                  {"norm", component.norm()},
                                  {"matrix", matrix_to_json(component)}});
      }
      block["target"] = *spec.operator_name;
    } else {
      const Vec v = config.vector(*spec.vector_name);
      const VectorDecomposition parts = decompose_vector(lattice, v);
      residual = parts.residual_norm;
      const double floor = drop_tol * std::max(1.0, v.norm());
      for (const auto& [chi, component] : parts.components) {
        if (component.norm() <= floor) continue;
        components.push_back(json{{"character", character_to_json(chi)},
                                  {"norm", component.norm()},
                                  {"vector", vector_to_json(component)}});
      }
      block["target"] = *spec.vector_name;
    }
    block["components"] = std::move(components);
    block["residual_norm"] = residual;
    block["pass"] = true;
    report.pass = true;
  } catch (const std::exception& err) {
    block["error"] = err.what();
    block["pass"] = false;
    report.pass = false;
  }
  report.timings.push_back(TaskTiming{task.name, ms_since(start)});
  report.document = json{{"command", "decompose"},
                         {"seed", config.seed},
                         {"tasks", json::array({block})},
                         {"pass", report.pass}};
  return report;
}

}  // namespace sectorkit
