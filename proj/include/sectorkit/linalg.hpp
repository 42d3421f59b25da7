#pragma once

#include <Eigen/Dense>
#include <complex>

namespace sectorkit {

using Complex = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using Index = Eigen::Index;

Mat kron(const Mat& a, const Mat& b);

Mat matrix_unit(Index dim, Index i, Index j);

/// Largest singular value.
double operator_norm(const Mat& m);

bool is_unitary(const Mat& m, double tol);

/// Unitary factor of the polar decomposition m = U * P, P >= 0.
Mat polar_unitary(const Mat& m);

/// Multiplies by the phase that makes the first entry (row-major scan)
/// with modulus above `eps` real and positive.
Mat fix_phase(const Mat& m, double eps = 1e-8);

/// Distance from `m` to the scalar multiples of the identity.
double scalar_defect(const Mat& m);

struct SchmidtSplit {
  Mat left;        // dim_left x dim_left
  Mat right;       // dim_right x dim_right
  double defect;   // ||m - left (x) right||_F
};

/// Nearest Kronecker factorization of an operator on C^{dl} (x) C^{dr}.
/// `defect` is the Frobenius error of the rank-one fit.
SchmidtSplit operator_schmidt_split(const Mat& m, Index dim_left, Index dim_right);

}  // namespace sectorkit
