#include "sectorkit/random.hpp"

#include <cmath>

namespace sectorkit {

double Rng::uniform() {
  // 53-bit mantissa from the top bits of one engine draw.
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * M_PI * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

Complex Rng::complex_gaussian() {
  const double re = gaussian();
  const double im = gaussian();
  return Complex(re, im);
}

std::int64_t Rng::below(std::int64_t n) {
  return static_cast<std::int64_t>(engine_() % static_cast<std::uint64_t>(n));
}

Mat Rng::matrix(Index rows, Index cols) {
  Mat m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) {
      m(i, j) = complex_gaussian();
    }
  }
  return m;
}

Vec Rng::vector(Index dim) {
  Vec v(dim);
  for (Index i = 0; i < dim; ++i) v(i) = complex_gaussian();
  return v;
}

Mat Rng::unitary(Index dim) {
  const Mat g = matrix(dim, dim);
  Eigen::HouseholderQR<Mat> qr(g);
  Mat q = qr.householderQ() * Mat::Identity(dim, dim);
  // Fix the column phases so the factorization is unique.
  const Mat r = q.adjoint() * g;
  for (Index j = 0; j < dim; ++j) {
    const Complex d = r(j, j);
    if (std::abs(d) > 0.0) q.col(j) *= d / std::abs(d);
  }
  return q;
}

Mat Rng::hermitian(Index dim) {
  const Mat g = matrix(dim, dim);
  return 0.5 * (g + g.adjoint());
}

}  // namespace sectorkit
