#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sectorkit/group.hpp"
#include "sectorkit/linalg.hpp"

namespace sectorkit {

/// Unitary representation of a finite abelian group, stored as one image
/// per cyclic factor and materialized over the whole group in enumeration
/// order. Construction validates unitarity, pairwise commutation and the
/// cyclic orders, which together make g -> U_g a homomorphism.
class UnitaryRep {
 public:
  UnitaryRep(FiniteAbelianGroup group, std::vector<Mat> generator_images,
             double tol = 1e-10);

  static UnitaryRep trivial(FiniteAbelianGroup group, Index dim);

  const FiniteAbelianGroup& group() const { return group_; }
  Index dim() const { return dim_; }
  const Mat& generator_image(std::size_t factor) const;
  const Mat& unitary(const GroupElement& g) const;
  const Mat& unitary(std::int64_t index) const { return elements_.at(index); }

 private:
  FiniteAbelianGroup group_;
  Index dim_ = 0;
  std::vector<Mat> generator_images_;
  std::vector<Mat> elements_;
};

template <class Payload>
struct GradedDecomposition {
  std::vector<std::pair<Character, Payload>> components;  // dual order
  double residual_norm = 0.0;

  const Payload& component(const FiniteAbelianGroup& group,
                           const Character& chi) const {
    return components.at(static_cast<std::size_t>(group.index_of(chi))).second;
  }
};

using VectorDecomposition = GradedDecomposition<Vec>;
using OperatorDecomposition = GradedDecomposition<Mat>;

struct HomogeneityReport {
  std::optional<Character> grade;
  double deviation = 0.0;  // norm of the input minus its largest component
  bool zero_input = false;
};

/// p_chi v: Haar average of chi(g^{-1}) U_g v; the orthogonal projection
/// onto the chi eigenspace.
Vec project_vector(const UnitaryRep& rep, const Character& chi, const Vec& v);

/// P_chi(A): Haar average of chi(g^{-1}) U_g A U_g^*.
Mat project_operator(const UnitaryRep& rep, const Character& chi, const Mat& a);

VectorDecomposition decompose_vector(const UnitaryRep& rep, const Vec& v);

OperatorDecomposition decompose_operator(const UnitaryRep& rep, const Mat& a);

/// Graded components of a map T : H_1 -> H_2 under g . T = U2_g T U1_g^*.
OperatorDecomposition decompose_map(const UnitaryRep& rep1, const UnitaryRep& rep2,
                                    const Mat& t);

/// Homogeneity verdict for a map between two represented spaces: the grade
/// of the largest component is returned iff everything else has combined
/// norm within `tol` (scaled by the input norm). Zero maps carry no grade.
HomogeneityReport grade_of_map(const UnitaryRep& rep1, const UnitaryRep& rep2,
                               const Mat& t, double tol = 1e-10);

HomogeneityReport grade_of_operator(const UnitaryRep& rep, const Mat& a,
                                    double tol = 1e-10);

/// Independent route to the grading projectors: simultaneous
/// diagonalization of the commuting generator images by cluster-wise Schur
/// refinement. Never touches the averaging path.
std::vector<std::pair<Character, Mat>> eigenspace_oracle(const UnitaryRep& rep);

}  // namespace sectorkit
