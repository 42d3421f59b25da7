#include "sectorkit/grading.hpp"

#include <cmath>

namespace sectorkit {

UnitaryRep::UnitaryRep(FiniteAbelianGroup group, std::vector<Mat> generator_images,
                       double tol)
    : group_(std::move(group)), generator_images_(std::move(generator_images)) {
  const std::size_t factors = group_.factor_count();
  if (generator_images_.size() != factors) {
    throw std::invalid_argument("UnitaryRep: expected one image per cyclic factor");
  }
  dim_ = factors == 0 ? 1 : generator_images_[0].rows();
  for (std::size_t j = 0; j < factors; ++j) {
    const Mat& u = generator_images_[j];
    if (u.rows() != dim_ || u.cols() != dim_) {
      throw std::invalid_argument("UnitaryRep: generator images differ in shape");
    }
    if (!is_unitary(u, tol * std::sqrt(static_cast<double>(dim_)))) {
      throw std::invalid_argument("UnitaryRep: generator image is not unitary");
    }
    Mat power = Mat::Identity(dim_, dim_);
    for (std::int64_t k = 0; k < group_.cyclic_moduli()[j]; ++k) power = power * u;
    if ((power - Mat::Identity(dim_, dim_)).norm() >
        tol * std::sqrt(static_cast<double>(dim_))) {
      throw std::invalid_argument("UnitaryRep: generator image order violation");
    }
    for (std::size_t k = 0; k < j; ++k) {
      const Mat& v = generator_images_[k];
      if ((u * v - v * u).norm() > tol * std::sqrt(static_cast<double>(dim_))) {
        throw std::invalid_argument("UnitaryRep: generator images do not commute");
      }
    }
  }
  elements_.reserve(static_cast<std::size_t>(group_.order()));
  for (std::int64_t i = 0; i < group_.order(); ++i) {
    const GroupElement g = group_.element_at(i);
    Mat u = Mat::Identity(dim_, dim_);
    for (std::size_t j = 0; j < factors; ++j) {
      for (std::int64_t k = 0; k < g.residues[j]; ++k) {
        u = u * generator_images_[j];
      }
    }
    elements_.push_back(std::move(u));
  }
}

UnitaryRep UnitaryRep::trivial(FiniteAbelianGroup group, Index dim) {
  std::vector<Mat> images(group.factor_count(), Mat::Identity(dim, dim));
  return UnitaryRep(std::move(group), std::move(images));
}

const Mat& UnitaryRep::generator_image(std::size_t factor) const {
  return generator_images_.at(factor);
}

const Mat& UnitaryRep::unitary(const GroupElement& g) const {
  return elements_.at(static_cast<std::size_t>(group_.index_of(g)));
}

Vec project_vector(const UnitaryRep& rep, const Character& chi, const Vec& v) {
  if (v.size() != rep.dim()) {
    throw std::invalid_argument("project_vector: dimension mismatch");
  }
  return haar_average(rep.group(), chi,
                      [&](const GroupElement& g) { return Vec(rep.unitary(g) * v); });
}

Mat project_operator(const UnitaryRep& rep, const Character& chi, const Mat& a) {
  if (a.rows() != rep.dim() || a.cols() != rep.dim()) {
    throw std::invalid_argument("project_operator: dimension mismatch");
  }
  return haar_average(rep.group(), chi, [&](const GroupElement& g) {
    const Mat& u = rep.unitary(g);
    return Mat(u * a * u.adjoint());
  });
}

VectorDecomposition decompose_vector(const UnitaryRep& rep, const Vec& v) {
  if (v.size() != rep.dim()) {
    throw std::invalid_argument("decompose_vector: dimension mismatch");
  }
  const FiniteAbelianGroup& group = rep.group();
  const std::int64_t order = group.order();
  // One pass of U_g v, then each component is a weighted mean of the cache.
  std::vector<Vec> moved;
  moved.reserve(static_cast<std::size_t>(order));
  for (std::int64_t i = 0; i < order; ++i) moved.push_back(rep.unitary(i) * v);

  VectorDecomposition out;
  Vec total = Vec::Zero(v.size());
  for (std::int64_t c = 0; c < order; ++c) {
    const Character chi = group.character_at(c);
    Vec acc = Vec::Zero(v.size());
    for (std::int64_t i = 0; i < order; ++i) {
      const Complex w =
          std::conj(evaluate_character(group, chi, group.element_at(i)));
      acc += w * moved[static_cast<std::size_t>(i)];
    }
    acc /= static_cast<double>(order);
    total += acc;
    out.components.emplace_back(chi, std::move(acc));
  }
  out.residual_norm = (v - total).norm();
  return out;
}

namespace {

OperatorDecomposition decompose_transformed(const FiniteAbelianGroup& group,
                                            const Mat& t,
                                            const std::vector<Mat>& moved) {
  const std::int64_t order = group.order();
  OperatorDecomposition out;
  Mat total = Mat::Zero(t.rows(), t.cols());
  for (std::int64_t c = 0; c < order; ++c) {
    const Character chi = group.character_at(c);
    Mat acc = Mat::Zero(t.rows(), t.cols());
    for (std::int64_t i = 0; i < order; ++i) {
      const Complex w =
          std::conj(evaluate_character(group, chi, group.element_at(i)));
      acc += w * moved[static_cast<std::size_t>(i)];
    }
    acc /= static_cast<double>(order);
    total += acc;
    out.components.emplace_back(chi, std::move(acc));
  }
  out.residual_norm = (t - total).norm();
  return out;
}

}  // namespace

OperatorDecomposition decompose_operator(const UnitaryRep& rep, const Mat& a) {
  return decompose_map(rep, rep, a);
}

OperatorDecomposition decompose_map(const UnitaryRep& rep1, const UnitaryRep& rep2,
                                    const Mat& t) {
  if (!(rep1.group() == rep2.group())) {
    throw std::invalid_argument("decompose_map: representations of different groups");
  }
  if (t.cols() != rep1.dim() || t.rows() != rep2.dim()) {
    throw std::invalid_argument("decompose_map: dimension mismatch");
  }
  const FiniteAbelianGroup& group = rep1.group();
  std::vector<Mat> moved;
  moved.reserve(static_cast<std::size_t>(group.order()));
  for (std::int64_t i = 0; i < group.order(); ++i) {
    moved.push_back(rep2.unitary(i) * t * rep1.unitary(i).adjoint());
  }
  return decompose_transformed(group, t, moved);
}

HomogeneityReport grade_of_map(const UnitaryRep& rep1, const UnitaryRep& rep2,
                               const Mat& t, double tol) {
  HomogeneityReport report;
  const double scale = t.norm();
  if (scale == 0.0) {
    report.zero_input = true;
    return report;
  }
  const OperatorDecomposition parts = decompose_map(rep1, rep2, t);
  std::size_t best = 0;
  double best_norm = -1.0;
  for (std::size_t i = 0; i < parts.components.size(); ++i) {
    const double n = parts.components[i].second.norm();
    if (n > best_norm) {
      best_norm = n;
      best = i;
    }
  }
  report.deviation = (t - parts.components[best].second).norm();
  if (report.deviation <= tol * scale) {
    report.grade = parts.components[best].first;
  }
  return report;
}

HomogeneityReport grade_of_operator(const UnitaryRep& rep, const Mat& a, double tol) {
  return grade_of_map(rep, rep, a, tol);
}

namespace {

struct Cluster {
  std::vector<std::int64_t> label;  // per-factor eigenvalue exponents
  Mat basis;                        // orthonormal columns
};

}  // namespace

std::vector<std::pair<Character, Mat>> eigenspace_oracle(const UnitaryRep& rep) {
  const FiniteAbelianGroup& group = rep.group();
  const Index dim = rep.dim();

  std::vector<Cluster> clusters{{std::vector<std::int64_t>{}, Mat::Identity(dim, dim)}};
  for (std::size_t factor = 0; factor < group.factor_count(); ++factor) {
    const std::int64_t n = group.cyclic_moduli()[factor];
    const Mat& image = rep.generator_image(factor);
    std::vector<Cluster> refined;
    for (const Cluster& cluster : clusters) {
      const Mat block = cluster.basis.adjoint() * image * cluster.basis;
      // A unitary matrix is normal, so its Schur form is diagonal and the
      // Schur basis consists of orthonormal eigenvectors.
      Eigen::ComplexSchur<Mat> schur(block);
      const Mat rotated = cluster.basis * schur.matrixU();
      std::vector<std::vector<Index>> buckets(static_cast<std::size_t>(n));
      for (Index col = 0; col < block.rows(); ++col) {
        const Complex lambda = schur.matrixT()(col, col);
        const double angle = std::arg(lambda);
        std::int64_t k = static_cast<std::int64_t>(std::llround(
                             angle * static_cast<double>(n) / (2.0 * M_PI))) %
                         n;
        if (k < 0) k += n;
        const Complex root = std::polar(1.0, 2.0 * M_PI * static_cast<double>(k) /
                                                 static_cast<double>(n));
        if (std::abs(lambda - root) > 1e-6) {
          throw std::runtime_error(
              "eigenspace_oracle: eigenvalue is not a root of unity of the "
              "expected order");
        }
        buckets[static_cast<std::size_t>(k)].push_back(col);
      }
      for (std::int64_t k = 0; k < n; ++k) {
        const auto& cols = buckets[static_cast<std::size_t>(k)];
        if (cols.empty()) continue;
        Cluster next;
        next.label = cluster.label;
        next.label.push_back(k);
        next.basis.resize(dim, static_cast<Index>(cols.size()));
        for (std::size_t c = 0; c < cols.size(); ++c) {
          next.basis.col(static_cast<Index>(c)) = rotated.col(cols[c]);
        }
        refined.push_back(std::move(next));
      }
    }
    clusters = std::move(refined);
  }

  std::vector<std::pair<Character, Mat>> out;
  out.reserve(static_cast<std::size_t>(group.order()));
  for (std::int64_t c = 0; c < group.order(); ++c) {
    out.emplace_back(group.character_at(c), Mat::Zero(dim, dim));
  }
  for (const Cluster& cluster : clusters) {
    const Character chi{cluster.label};
    const std::int64_t index = group.index_of(chi);
    out[static_cast<std::size_t>(index)].second =
        cluster.basis * cluster.basis.adjoint();
  }
  return out;
}

}  // namespace sectorkit
