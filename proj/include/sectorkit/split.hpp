#pragma once

#include <utility>

#include "sectorkit/grading.hpp"
#include "sectorkit/lattice.hpp"

namespace sectorkit {

/// Representation g -> U_{Lambda,g} on the full space.
UnitaryRep region_rep(const SpinSystem& system, const Region& region,
                      double tol = 1e-10);

/// Representation of the whole-lattice action.
UnitaryRep global_rep(const SpinSystem& system, double tol = 1e-10);

struct RefinedGrade {
  Character left;   // grade under the region action
  Character right;  // grade under the complement action
};

/// The two-sided action (g1, g2) -> U_{Lambda,g1} U_{Lambda^c,g2}. The two
/// side representations are stored; the product-group family is formed on
/// demand.
class SplitAction {
 public:
  SplitAction(const SpinSystem& system, Region lambda, double tol = 1e-10);

  const FiniteAbelianGroup& base_group() const { return side_lambda_.group(); }
  const Region& lambda() const { return lambda_; }
  const Region& lambda_complement() const { return complement_; }
  Index dim() const { return side_lambda_.dim(); }

  const UnitaryRep& side_lambda() const { return side_lambda_; }
  const UnitaryRep& side_complement() const { return side_complement_; }

  Mat tilde_unitary(const GroupElement& g1, const GroupElement& g2) const;

  /// The diagonal restriction g -> U_{Gamma,g}.
  UnitaryRep diagonal_rep() const;

 private:
  Region lambda_;
  Region complement_;
  UnitaryRep side_lambda_;
  UnitaryRep side_complement_;
};

SplitAction split_action(const SpinSystem& system, const Region& lambda,
                         double tol = 1e-10);

/// (phi1, phi2)-component of a vector under the two-sided action.
Vec refined_project_vector(const SplitAction& split, const RefinedGrade& grade,
                           const Vec& v);

/// (phi1, phi2)-component of an operator under the two-sided action; the
/// double average factorizes into the two side averages.
Mat refined_project_operator(const SplitAction& split, const RefinedGrade& grade,
                             const Mat& a);

/// For a nonzero product A B with A supported on the region side, B on the
/// complement side, and A B homogeneous of trivial grade: recovers the
/// individual grades, which are inverses of each other.
std::pair<Character, Character> factor_grades(const SplitAction& split, const Mat& a,
                                              const Mat& b, double tol = 1e-10);

}  // namespace sectorkit
