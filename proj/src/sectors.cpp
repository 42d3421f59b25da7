#include "sectorkit/sectors.hpp"

#include <cmath>

#include "sectorkit/random.hpp"

namespace sectorkit {

namespace {

double dim_scale(Index dim) { return std::sqrt(static_cast<double>(dim)); }

}  // namespace

CovariantRep::CovariantRep(SpinSystem system, Mat conjugator, UnitaryRep implementing,
                           double tol)
    : system_(std::move(system)),
      conjugator_(std::move(conjugator)),
      implementing_(std::move(implementing)) {
  const Index d = system_.total_dim();
  if (conjugator_.rows() != d || conjugator_.cols() != d ||
      implementing_.dim() != d) {
    throw std::invalid_argument("CovariantRep: carrier dimension mismatch");
  }
  if (!(implementing_.group() == system_.group())) {
    throw std::invalid_argument("CovariantRep: group mismatch");
  }
  if (!is_unitary(conjugator_, tol * dim_scale(d))) {
    throw std::invalid_argument("CovariantRep: conjugator is not unitary");
  }
  for (std::size_t j = 0; j < system_.group().factor_count(); ++j) {
    std::vector<std::int64_t> residues(system_.group().factor_count(), 0);
    residues[j] = 1 % system_.group().cyclic_moduli()[j];
    const Mat lattice = region_unitary(system_, system_.full_region(),
                                       GroupElement{residues});
    const Mat q = conjugator_.adjoint() * implementing_.generator_image(j).adjoint() *
                  conjugator_ * lattice;
    if (scalar_defect(q) > tol * dim_scale(d)) {
      throw std::invalid_argument("CovariantRep: covariance violated");
    }
  }
}

Mat CovariantRep::apply(const Mat& a) const {
  if (a.rows() != dim() || a.cols() != dim()) {
    throw std::invalid_argument("CovariantRep: operator dimension mismatch");
  }
  return conjugator_ * a * conjugator_.adjoint();
}

CovariantRep defining_rep(const SpinSystem& system, double tol) {
  const Index d = system.total_dim();
  return CovariantRep(system, Mat::Identity(d, d), global_rep(system, tol), tol);
}

CovariantRep product_rep(const SpinSystem& system, const Region& lambda,
                         const CovariantRep& left, const CovariantRep& right,
                         double tol) {
  if (!(left.implementing().group() == system.group()) ||
      !(right.implementing().group() == system.group())) {
    throw std::invalid_argument("product_rep: group mismatch");
  }
  const Region complement = system.complement(lambda);
  const Mat conjugator =
      embed_local(LocalOperator{left.conjugator(), lambda}, system) *
      embed_local(LocalOperator{right.conjugator(), complement}, system);
  std::vector<Mat> images;
  for (std::size_t j = 0; j < system.group().factor_count(); ++j) {
    images.push_back(
        embed_local(LocalOperator{left.implementing().generator_image(j), lambda},
                    system) *
        embed_local(
            LocalOperator{right.implementing().generator_image(j), complement},
            system));
  }
  return CovariantRep(system, conjugator,
                      UnitaryRep(system.group(), std::move(images), tol), tol);
}

CovariantRep charged_rep(const CovariantRep& base, const Mat& w,
                         const Character& expected_grade, double tol) {
  const Index d = base.dim();
  if (w.rows() != d || w.cols() != d) {
    throw std::invalid_argument("charged_rep: operator dimension mismatch");
  }
  if (!is_unitary(w, tol * dim_scale(d))) {
    throw std::invalid_argument("charged_rep: operator is not unitary");
  }
  const UnitaryRep lattice_action = global_rep(base.system(), tol);
  const HomogeneityReport report = grade_of_map(lattice_action, lattice_action, w, tol);
  if (!report.grade) {
    throw std::invalid_argument("charged_rep: operator is not homogeneous");
  }
  if (!(*report.grade == expected_grade)) {
    throw std::invalid_argument("charged_rep: operator grade differs from expected " +
                                to_string(expected_grade) + ", found " +
                                to_string(*report.grade));
  }
  return CovariantRep(base.system(), base.conjugator() * w, base.implementing(), tol);
}

Mat GnsTriple::represent(const Mat& a) const {
  if (a.rows() != algebra_dim || a.cols() != algebra_dim) {
    throw std::invalid_argument("GnsTriple: operator dimension mismatch");
  }
  return kron(a, Mat::Identity(multiplicity, multiplicity));
}

GnsTriple gns_from_state(const Mat& density, const UnitaryRep& action, double tol) {
  const Index d = action.dim();
  if (density.rows() != d || density.cols() != d) {
    throw std::invalid_argument("gns_from_state: density dimension mismatch");
  }
  if ((density - density.adjoint()).norm() > tol * dim_scale(d)) {
    throw std::invalid_argument("gns_from_state: state is not hermitian");
  }
  if (std::abs(density.trace() - Complex(1.0, 0.0)) > tol * dim_scale(d)) {
    throw std::invalid_argument("gns_from_state: state is not normalized");
  }
  for (std::size_t j = 0; j < action.group().factor_count(); ++j) {
    const Mat& u = action.generator_image(j);
    if ((u * density * u.adjoint() - density).norm() > tol * dim_scale(d)) {
      throw std::invalid_argument("gns_from_state: state is not invariant");
    }
  }

  Eigen::SelfAdjointEigenSolver<Mat> eig(0.5 * (density + density.adjoint()));
  if (eig.eigenvalues()(0) < -tol * dim_scale(d)) {
    throw std::invalid_argument("gns_from_state: state is not positive");
  }
  constexpr double kRankTol = 1e-12;
  std::vector<Index> kept;
  for (Index i = d; i-- > 0;) {  // descending eigenvalue order
    if (eig.eigenvalues()(i) > kRankTol) kept.push_back(i);
  }
  const Index rank = static_cast<Index>(kept.size());
  if (rank == 0) {
    throw std::invalid_argument("gns_from_state: state has no support");
  }
  Mat support(d, rank);
  Vec weights(rank);
  for (Index c = 0; c < rank; ++c) {
    support.col(c) = eig.eigenvectors().col(kept[static_cast<std::size_t>(c)]);
    weights(c) = eig.eigenvalues()(kept[static_cast<std::size_t>(c)]);
  }

  Vec cyclic = Vec::Zero(d * rank);
  for (Index a = 0; a < d; ++a) {
    for (Index i = 0; i < rank; ++i) {
      cyclic(a * rank + i) = std::sqrt(weights(i).real()) * support(a, i);
    }
  }

  // The action restricted to the support of the state, conjugated onto the
  // multiplicity factor so that the cyclic vector stays fixed.
  std::vector<Mat> images;
  for (std::size_t j = 0; j < action.group().factor_count(); ++j) {
    const Mat& u = action.generator_image(j);
    const Mat restricted = support.adjoint() * u * support;
    if (!is_unitary(restricted, 100.0 * tol * dim_scale(d))) {
      throw std::invalid_argument(
          "gns_from_state: action does not preserve the support of the state");
    }
    images.push_back(kron(u, restricted.conjugate()));
  }
  GnsTriple out{d, rank, rank == 1, std::move(cyclic),
                UnitaryRep(action.group(), std::move(images), 100.0 * tol)};

  for (std::size_t j = 0; j < action.group().factor_count(); ++j) {
    if ((out.implementing.generator_image(j) * out.cyclic_vector -
         out.cyclic_vector)
            .norm() > 100.0 * tol * dim_scale(d)) {
      throw std::runtime_error("gns_from_state: cyclic vector is not fixed");
    }
  }
  return out;
}

GnsTriple gns_from_vector_state(const Vec& psi, const UnitaryRep& action, double tol) {
  const double norm2 = psi.squaredNorm();
  if (norm2 <= 0.0) {
    throw std::invalid_argument("gns_from_vector_state: zero vector");
  }
  const Mat density = (psi * psi.adjoint()) / norm2;
  return gns_from_state(density, action, tol);
}

CovariantRep gns_covariant_rep(const SpinSystem& system, const GnsTriple& gns,
                               double tol) {
  if (!gns.pure) {
    throw std::invalid_argument("gns_covariant_rep: state is not pure");
  }
  if (gns.algebra_dim != system.total_dim()) {
    throw std::invalid_argument("gns_covariant_rep: dimension mismatch");
  }
  return CovariantRep(system, Mat::Identity(gns.algebra_dim, gns.algebra_dim),
                      gns.implementing, tol);
}

namespace {

std::vector<std::pair<Index, Index>> unit_order(Index dim, BasisOrder order) {
  std::vector<std::pair<Index, Index>> out;
  out.reserve(static_cast<std::size_t>(dim * dim));
  if (order == BasisOrder::kRowMajor) {
    for (Index i = 0; i < dim; ++i) {
      for (Index j = 0; j < dim; ++j) out.emplace_back(i, j);
    }
  } else {
    for (Index j = 0; j < dim; ++j) {
      for (Index i = 0; i < dim; ++i) out.emplace_back(i, j);
    }
  }
  return out;
}

}  // namespace

IntertwinerResult solve_intertwiner(const CovariantRep& sigma,
                                    const CovariantRep& reference, double tol,
                                    BasisOrder order) {
  const Index d = sigma.dim();
  if (reference.dim() != d) {
    throw std::invalid_argument("solve_intertwiner: dimension mismatch");
  }
  const auto units = unit_order(d, order);

  // Weyl averaging: T = sum_ij pi_0(E_ij) X sigma(E_ij)^* intertwines sigma
  // with pi_0 for any X, and is a scalar multiple of a unitary when both
  // representations are conjugator-form. Seeds are tried in a fixed order
  // until the average is nonzero.
  std::vector<Mat> seeds;
  seeds.push_back(Mat::Identity(d, d));
  for (Index k = 0; k < d; ++k) seeds.push_back(matrix_unit(d, 0, k));
  for (Index k = 1; k < d; ++k) seeds.push_back(matrix_unit(d, k, 0));

  Mat candidate;
  bool have_candidate = false;
  for (const Mat& seed : seeds) {
    Mat t = Mat::Zero(d, d);
    for (const auto& [i, j] : units) {
      const Mat e = matrix_unit(d, i, j);
      t += reference.apply(e) * seed * sigma.apply(e).adjoint();
    }
    t /= static_cast<double>(d);
    if (t.norm() > 1e-8) {
      candidate = std::move(t);
      have_candidate = true;
      break;
    }
  }
  if (!have_candidate) {
    throw std::runtime_error("solve_intertwiner: no intertwiner found");
  }

  Mat u = fix_phase(polar_unitary(candidate));

  double worst = 0.0;
  for (const auto& [i, j] : units) {
    const Mat e = matrix_unit(d, i, j);
    worst = std::max(worst, (u * sigma.apply(e) - reference.apply(e) * u).norm());
  }
  if (worst > tol * dim_scale(d) || !is_unitary(u, tol * dim_scale(d))) {
    throw std::runtime_error("solve_intertwiner: no solution within tolerance");
  }
  return IntertwinerResult{std::move(u), worst};
}

SectorLabel classify_sector(const CovariantRep& sigma, const CovariantRep& reference,
                            double tol) {
  const IntertwinerResult solved = solve_intertwiner(sigma, reference, tol);
  const HomogeneityReport report =
      grade_of_map(sigma.implementing(), reference.implementing(), solved.unitary, tol);
  if (!report.grade) {
    throw std::runtime_error(
        "classify_sector: connecting intertwiner is not homogeneous");
  }
  return SectorLabel{sigma.implementing().group(), *report.grade,
                     std::max(report.deviation, solved.deviation)};
}

bool equivalent_sectors(const SectorLabel& a, const SectorLabel& b) {
  if (!(a.group == b.group)) {
    throw std::invalid_argument("equivalent_sectors: group mismatch");
  }
  return a.character == b.character;
}

std::vector<Mat> intertwiner_space(const std::vector<std::pair<Mat, Mat>>& pairs,
                                   Index dim) {
  const Index n = dim * dim;
  Mat h = Mat::Zero(n, n);
  const Mat id = Mat::Identity(dim, dim);
  for (const auto& [lhs, rhs] : pairs) {
    const Mat m = kron(lhs.transpose(), id) - kron(id, rhs);
    h += m.adjoint() * m;
  }
  Eigen::SelfAdjointEigenSolver<Mat> eig(h);
  const double scale = std::max(1.0, eig.eigenvalues()(n - 1));
  std::vector<Mat> basis;
  for (Index i = 0; i < n; ++i) {
    if (eig.eigenvalues()(i) <= 1e-16 * scale * static_cast<double>(n)) {
      basis.push_back(
          Mat(Eigen::Map<const Mat>(eig.eigenvectors().col(i).data(), dim, dim)));
    }
  }
  return basis;
}

namespace {

struct SpanSearch {
  bool found = false;
  Mat unitary;
  double residual = 0.0;
};

double constraint_residual(const Mat& v, const std::vector<std::pair<Mat, Mat>>& pairs) {
  double worst = 0.0;
  for (const auto& [lhs, rhs] : pairs) {
    worst = std::max(worst, (v * lhs - rhs * v).norm());
  }
  return worst;
}

// Deterministic scan for a unitary inside the span of an intertwiner-space
// basis: generic elements are invertible and their polar factor stays in
// the space.
SpanSearch find_unitary_in_span(const std::vector<Mat>& basis,
                                const std::vector<std::pair<Mat, Mat>>& pairs,
                                Index dim, double tol) {
  SpanSearch out;
  if (basis.empty()) return out;

  std::vector<Mat> candidates;
  for (const Mat& b : basis) candidates.push_back(b);
  Mat sum = Mat::Zero(dim, dim);
  for (const Mat& b : basis) sum += b;
  candidates.push_back(sum);
  Rng rng(0x5ec7012u);
  for (int attempt = 0; attempt < 8; ++attempt) {
    Mat mix = Mat::Zero(dim, dim);
    for (const Mat& b : basis) mix += rng.complex_gaussian() * b;
    candidates.push_back(std::move(mix));
  }

  for (const Mat& t : candidates) {
    Eigen::JacobiSVD<Mat> svd(t, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const double smax = svd.singularValues()(0);
    if (smax <= 0.0) continue;
    if (svd.singularValues()(dim - 1) < 1e-8 * smax) continue;
    Mat u = svd.matrixU() * svd.matrixV().adjoint();
    const double residual = constraint_residual(u, pairs);
    if (residual <= tol * dim_scale(dim) && is_unitary(u, tol * dim_scale(dim))) {
      out.found = true;
      out.unitary = fix_phase(std::move(u));
      out.residual = residual;
      return out;
    }
  }
  return out;
}

double infeasibility(const std::vector<std::pair<Mat, Mat>>& pairs, Index dim) {
  const Index n = dim * dim;
  Mat h = Mat::Zero(n, n);
  const Mat id = Mat::Identity(dim, dim);
  for (const auto& [lhs, rhs] : pairs) {
    const Mat m = kron(lhs.transpose(), id) - kron(id, rhs);
    h += m.adjoint() * m;
  }
  Eigen::SelfAdjointEigenSolver<Mat> eig(h);
  return std::sqrt(std::max(0.0, eig.eigenvalues()(0)));
}

}  // namespace

CriterionReport check_equivariant_ssc(const CovariantRep& sigma,
                                      const CovariantRep& reference,
                                      const std::vector<Region>& regions,
                                      double tol) {
  if (sigma.dim() != reference.dim()) {
    throw std::invalid_argument("check_equivariant_ssc: dimension mismatch");
  }
  const SpinSystem& system = sigma.system();
  const Index d = sigma.dim();

  CriterionReport report;
  report.plain_satisfied = true;
  report.equivariant_satisfied = true;

  for (const Region& region : regions) {
    system.check_region(region);
    const Region complement = system.complement(region);
    const SplitIndexer indexer(system, complement);
    const Index dc = indexer.region_dim();

    std::vector<std::pair<Mat, Mat>> algebra_pairs;
    algebra_pairs.reserve(static_cast<std::size_t>(dc * dc));
    for (Index i = 0; i < dc; ++i) {
      for (Index j = 0; j < dc; ++j) {
        const Mat embedded =
            embed_local(LocalOperator{matrix_unit(dc, i, j), complement}, system);
        algebra_pairs.emplace_back(sigma.apply(embedded), reference.apply(embedded));
      }
    }

    RegionVerdict verdict;
    verdict.region = region;

    const std::vector<Mat> plain_basis = intertwiner_space(algebra_pairs, d);
    const SpanSearch plain = find_unitary_in_span(plain_basis, algebra_pairs, d, tol);
    verdict.plain_found = plain.found;
    verdict.plain_deviation =
        plain.found ? plain.residual : infeasibility(algebra_pairs, d);
    if (plain.found) verdict.plain_intertwiner = plain.unitary;

    std::vector<std::pair<Mat, Mat>> equivariant_pairs = algebra_pairs;
    for (std::size_t j = 0; j < system.group().factor_count(); ++j) {
      equivariant_pairs.emplace_back(sigma.implementing().generator_image(j),
                                     reference.implementing().generator_image(j));
    }
    const std::vector<Mat> eq_basis = intertwiner_space(equivariant_pairs, d);
    const SpanSearch equivariant =
        find_unitary_in_span(eq_basis, equivariant_pairs, d, tol);
    verdict.equivariant_found = equivariant.found;
    verdict.equivariant_deviation = equivariant.found
                                        ? equivariant.residual
                                        : infeasibility(equivariant_pairs, d);
    if (equivariant.found) verdict.equivariant_intertwiner = equivariant.unitary;

    report.plain_satisfied = report.plain_satisfied && verdict.plain_found;
    report.equivariant_satisfied =
        report.equivariant_satisfied && verdict.equivariant_found;
    report.regions.push_back(std::move(verdict));
  }
  return report;
}

}  // namespace sectorkit
