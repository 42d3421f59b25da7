#include "sectorkit/split.hpp"

namespace sectorkit {

UnitaryRep region_rep(const SpinSystem& system, const Region& region, double tol) {
  std::vector<Mat> images;
  const std::size_t factors = system.group().factor_count();
  images.reserve(factors);
  for (std::size_t j = 0; j < factors; ++j) {
    std::vector<std::int64_t> residues(factors, 0);
    residues[j] = 1 % system.group().cyclic_moduli()[j];
    images.push_back(region_unitary(system, region, GroupElement{residues}));
  }
  return UnitaryRep(system.group(), std::move(images), tol);
}

UnitaryRep global_rep(const SpinSystem& system, double tol) {
  return region_rep(system, system.full_region(), tol);
}

SplitAction::SplitAction(const SpinSystem& system, Region lambda, double tol)
    : lambda_(std::move(lambda)),
      complement_(system.complement(lambda_)),
      side_lambda_(region_rep(system, lambda_, tol)),
      side_complement_(region_rep(system, complement_, tol)) {}

Mat SplitAction::tilde_unitary(const GroupElement& g1, const GroupElement& g2) const {
  return side_lambda_.unitary(g1) * side_complement_.unitary(g2);
}

UnitaryRep SplitAction::diagonal_rep() const {
  std::vector<Mat> images;
  for (std::size_t j = 0; j < base_group().factor_count(); ++j) {
    images.push_back(side_lambda_.generator_image(j) *
                     side_complement_.generator_image(j));
  }
  return UnitaryRep(base_group(), std::move(images));
}

SplitAction split_action(const SpinSystem& system, const Region& lambda, double tol) {
  return SplitAction(system, lambda, tol);
}

Vec refined_project_vector(const SplitAction& split, const RefinedGrade& grade,
                           const Vec& v) {
  const Vec inner = project_vector(split.side_lambda(), grade.left, v);
  return project_vector(split.side_complement(), grade.right, inner);
}

Mat refined_project_operator(const SplitAction& split, const RefinedGrade& grade,
                             const Mat& a) {
  const Mat inner = project_operator(split.side_lambda(), grade.left, a);
  return project_operator(split.side_complement(), grade.right, inner);
}

std::pair<Character, Character> factor_grades(const SplitAction& split, const Mat& a,
                                              const Mat& b, double tol) {
  const Mat product = a * b;
  if (product.norm() <= tol) {
    throw std::invalid_argument("factor_grades: product vanishes");
  }
  const UnitaryRep diagonal = split.diagonal_rep();
  const HomogeneityReport product_report = grade_of_operator(diagonal, product, tol);
  if (!product_report.grade ||
      !(*product_report.grade == split.base_group().trivial_character())) {
    throw std::invalid_argument(
        "factor_grades: product is not homogeneous of trivial grade");
  }
  const HomogeneityReport report_a = grade_of_operator(diagonal, a, tol);
  const HomogeneityReport report_b = grade_of_operator(diagonal, b, tol);
  if (!report_a.grade || !report_b.grade) {
    throw std::runtime_error("factor_grades: factor is not homogeneous");
  }
  if (!(split.base_group().multiply(*report_a.grade, *report_b.grade) ==
        split.base_group().trivial_character())) {
    throw std::runtime_error("factor_grades: factor grades are not inverse");
  }
  return {*report_a.grade, *report_b.grade};
}

}  // namespace sectorkit
