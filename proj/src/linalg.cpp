#include "sectorkit/linalg.hpp"

#include <stdexcept>

namespace sectorkit {

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Mat matrix_unit(Index dim, Index i, Index j) {
  Mat e = Mat::Zero(dim, dim);
  e(i, j) = Complex(1.0, 0.0);
  return e;
}

double operator_norm(const Mat& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Mat> svd(m);
  return svd.singularValues()(0);
}

bool is_unitary(const Mat& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m.adjoint() * m - Mat::Identity(m.rows(), m.cols())).norm() <= tol;
}

Mat polar_unitary(const Mat& m) {
  Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

Mat fix_phase(const Mat& m, double eps) {
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      const Complex entry = m(i, j);
      if (std::abs(entry) > eps) {
        return m * (std::conj(entry) / std::abs(entry));
      }
    }
  }
  return m;
}

double scalar_defect(const Mat& m) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw std::invalid_argument("scalar_defect: square matrix required");
  }
  const Complex mean = m.trace() / static_cast<double>(m.rows());
  return (m - mean * Mat::Identity(m.rows(), m.cols())).norm();
}

SchmidtSplit operator_schmidt_split(const Mat& m, Index dim_left, Index dim_right) {
  if (m.rows() != dim_left * dim_right || m.cols() != dim_left * dim_right) {
    throw std::invalid_argument("operator_schmidt_split: dimension mismatch");
  }
  // Reshuffle M[(il,ir),(jl,jr)] into R[(il,jl),(ir,jr)]; a Kronecker
  // product becomes a rank-one matrix there.
  Mat r(dim_left * dim_left, dim_right * dim_right);
  for (Index il = 0; il < dim_left; ++il) {
    for (Index jl = 0; jl < dim_left; ++jl) {
      for (Index ir = 0; ir < dim_right; ++ir) {
        for (Index jr = 0; jr < dim_right; ++jr) {
          r(il * dim_left + jl, ir * dim_right + jr) =
              m(il * dim_right + ir, jl * dim_right + jr);
        }
      }
    }
  }
  Eigen::JacobiSVD<Mat> svd(r, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const double s0 = svd.singularValues()(0);
  Mat left(dim_left, dim_left);
  Mat right(dim_right, dim_right);
  const double scale = std::sqrt(s0);
  for (Index il = 0; il < dim_left; ++il) {
    for (Index jl = 0; jl < dim_left; ++jl) {
      left(il, jl) = scale * svd.matrixU()(il * dim_left + jl, 0);
    }
  }
  for (Index ir = 0; ir < dim_right; ++ir) {
    for (Index jr = 0; jr < dim_right; ++jr) {
      right(ir, jr) = scale * std::conj(svd.matrixV()(ir * dim_right + jr, 0));
    }
  }
  SchmidtSplit out{std::move(left), std::move(right), 0.0};
  out.defect = (m - kron(out.left, out.right)).norm();
  return out;
}

}  // namespace sectorkit
