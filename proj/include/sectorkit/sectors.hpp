#pragma once

#include <utility>
#include <vector>

#include "sectorkit/split.hpp"

namespace sectorkit {

/// Irreducible representation of the full matrix algebra of a system,
/// together with the unitary group map implementing the on-site action.
/// The algebra map is stored as a unitary conjugator against the defining
/// representation: pi(A) = C A C^*. Construction verifies covariance,
///   pi(alpha_g(A)) = U_g pi(A) U_g^*,
/// which for conjugator form reduces to C^* U_g^* C S_g being scalar
/// (S_g the lattice unitary).
class CovariantRep {
 public:
  CovariantRep(SpinSystem system, Mat conjugator, UnitaryRep implementing,
               double tol = 1e-10);

  const SpinSystem& system() const { return system_; }
  Index dim() const { return conjugator_.rows(); }
  const Mat& conjugator() const { return conjugator_; }
  const UnitaryRep& implementing() const { return implementing_; }

  /// pi(A).
  Mat apply(const Mat& a) const;

 private:
  SpinSystem system_;
  Mat conjugator_;
  UnitaryRep implementing_;
};

/// The defining representation with the lattice action as implementer.
CovariantRep defining_rep(const SpinSystem& system, double tol = 1e-10);

/// Tensor product of two side representations over a region split:
/// pi_0 = pi_L (x) pi_R with U^{(pi_0)}_g = U^{(L)}_g (x) U^{(R)}_g,
/// assembled in declaration order. The side representations live on the
/// subsystems of `lambda` and its complement.
CovariantRep product_rep(const SpinSystem& system, const Region& lambda,
                         const CovariantRep& left, const CovariantRep& right,
                         double tol = 1e-10);

/// sigma := Ad(pi_0(W)) o pi_0 with the implementer of pi_0 kept. W must be
/// unitary and homogeneous of `expected_grade` under the lattice action.
CovariantRep charged_rep(const CovariantRep& base, const Mat& w,
                         const Character& expected_grade, double tol = 1e-10);

/// GNS data of a state on the full matrix algebra: the carrier is
/// C^D (x) C^r with r the rank of the density matrix, the representation is
/// A -> A (x) 1_r, and the implementer fixes the cyclic vector.
struct GnsTriple {
  Index algebra_dim;
  Index multiplicity;  // rank of the density matrix
  bool pure;
  Vec cyclic_vector;
  UnitaryRep implementing;

  Index carrier_dim() const { return algebra_dim * multiplicity; }
  Mat represent(const Mat& a) const;
};

/// Builds the GNS triple of the state A -> tr(rho A). The state must be
/// positive, normalized and invariant under the given action.
GnsTriple gns_from_state(const Mat& density, const UnitaryRep& action,
                         double tol = 1e-10);

/// Convenience: GNS of the vector state of psi.
GnsTriple gns_from_vector_state(const Vec& psi, const UnitaryRep& action,
                                double tol = 1e-10);

/// Covariant form of a pure GNS triple (conjugator = identity).
CovariantRep gns_covariant_rep(const SpinSystem& system, const GnsTriple& gns,
                               double tol = 1e-10);

enum class BasisOrder { kRowMajor, kColMajor };

struct IntertwinerResult {
  Mat unitary;       // Ad(unitary) o sigma = reference
  double deviation;  // worst intertwining residual over the matrix units
};

/// Unitary U with U sigma(A) = reference(A) U for all A, unique up to a
/// phase; the phase is fixed by making the first nonzero entry in row-major
/// order real and positive. The solve averages over matrix units in the
/// requested order.
IntertwinerResult solve_intertwiner(const CovariantRep& sigma,
                                    const CovariantRep& reference,
                                    double tol = 1e-10,
                                    BasisOrder order = BasisOrder::kRowMajor);

struct SectorLabel {
  FiniteAbelianGroup group;
  Character character;
  double deviation = 0.0;
};

/// Character label of (sigma, U^{(sigma)}) against the reference pair: the
/// grade of the connecting intertwiner. Fails hard if the intertwiner is
/// not homogeneous.
SectorLabel classify_sector(const CovariantRep& sigma, const CovariantRep& reference,
                            double tol = 1e-10);

bool equivalent_sectors(const SectorLabel& a, const SectorLabel& b);

struct RegionVerdict {
  Region region;
  bool plain_found = false;
  double plain_deviation = 0.0;
  Mat plain_intertwiner;
  bool equivariant_found = false;
  double equivariant_deviation = 0.0;
  Mat equivariant_intertwiner;
};

struct CriterionReport {
  std::vector<RegionVerdict> regions;
  bool plain_satisfied = false;
  bool equivariant_satisfied = false;
};

/// For every region Lambda' in the family, searches the space of operators
/// intertwining sigma and the reference on the complement algebra for a
/// unitary (plain criterion) and for a unitary that also commutes with the
/// implementers (equivariant criterion). Absence is a verdict, not an
/// error.
CriterionReport check_equivariant_ssc(const CovariantRep& sigma,
                                      const CovariantRep& reference,
                                      const std::vector<Region>& regions,
                                      double tol = 1e-10);

/// Hilbert-Schmidt-orthonormal basis of {V : V L_k = R_k V for all k}.
std::vector<Mat> intertwiner_space(const std::vector<std::pair<Mat, Mat>>& pairs,
                                   Index dim);

}  // namespace sectorkit
