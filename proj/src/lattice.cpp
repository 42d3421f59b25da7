#include "sectorkit/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_map>

namespace sectorkit {

namespace {

std::string site_label(int id) {
  std::ostringstream out;
  out << "site " << id;
  return out.str();
}

double normalize_degrees(double deg) {
  double out = std::fmod(deg, 360.0);
  if (out < 0.0) out += 360.0;
  return out;
}

}  // namespace

Region::Region(std::vector<int> site_ids) : site_ids_(std::move(site_ids)) {
  std::sort(site_ids_.begin(), site_ids_.end());
  site_ids_.erase(std::unique(site_ids_.begin(), site_ids_.end()), site_ids_.end());
}

bool Region::contains(int site_id) const {
  return std::binary_search(site_ids_.begin(), site_ids_.end(), site_id);
}

SpinSystem::SpinSystem(FiniteAbelianGroup group, std::vector<SiteSpec> sites,
                       double tol)
    : group_(std::move(group)) {
  const std::size_t factors = group_.factor_count();
  for (const SiteSpec& spec : sites) {
    if (has_site(spec.id)) {
      throw std::invalid_argument("SpinSystem: duplicate id at " + site_label(spec.id));
    }
    if (spec.dim < 1) {
      throw std::invalid_argument("SpinSystem: dimension must be >= 1 at " +
                                  site_label(spec.id));
    }
    if (spec.generators.size() != factors) {
      throw std::invalid_argument(
          "SpinSystem: expected one generator per cyclic factor at " +
          site_label(spec.id));
    }
    for (std::size_t j = 0; j < factors; ++j) {
      const Mat& u = spec.generators[j];
      if (u.rows() != spec.dim || u.cols() != spec.dim) {
        throw std::invalid_argument("SpinSystem: generator shape mismatch at " +
                                    site_label(spec.id));
      }
      if (!is_unitary(u, tol)) {
        throw std::invalid_argument("SpinSystem: non-unitary generator at " +
                                    site_label(spec.id));
      }
      // Order: the factor-j generator must close after n_j steps.
      Mat power = Mat::Identity(spec.dim, spec.dim);
      for (std::int64_t k = 0; k < group_.cyclic_moduli()[j]; ++k) power = power * u;
      if ((power - Mat::Identity(spec.dim, spec.dim)).norm() > tol) {
        throw std::invalid_argument("SpinSystem: generator order violation at " +
                                    site_label(spec.id));
      }
      for (std::size_t k = 0; k < j; ++k) {
        const Mat& v = spec.generators[k];
        if ((u * v - v * u).norm() > tol) {
          throw std::invalid_argument(
              "SpinSystem: on-site generators do not commute at " +
              site_label(spec.id));
        }
      }
    }
    if (total_dim_ > (Index{1} << 21) / spec.dim) {
      throw std::invalid_argument("SpinSystem: total dimension too large");
    }
    total_dim_ *= spec.dim;
    sites_.push_back(Site{spec.id, spec.xy});
    dims_.push_back(spec.dim);
    generators_.push_back(spec.generators);
  }
}

std::size_t SpinSystem::position_of(int site_id) const {
  for (std::size_t p = 0; p < sites_.size(); ++p) {
    if (sites_[p].id == site_id) return p;
  }
  throw std::invalid_argument("SpinSystem: unknown " + site_label(site_id));
}

bool SpinSystem::has_site(int site_id) const {
  for (const Site& s : sites_) {
    if (s.id == site_id) return true;
  }
  return false;
}

const Mat& SpinSystem::generator(std::size_t position, std::size_t factor) const {
  return generators_.at(position).at(factor);
}

Mat SpinSystem::onsite_unitary(std::size_t position, const GroupElement& g) const {
  if (g.residues.size() != group_.factor_count()) {
    throw std::invalid_argument("onsite_unitary: group element length mismatch");
  }
  Mat u = Mat::Identity(dims_[position], dims_[position]);
  for (std::size_t j = 0; j < g.residues.size(); ++j) {
    for (std::int64_t k = 0; k < g.residues[j]; ++k) {
      u = u * generators_[position][j];
    }
  }
  return u;
}

Region SpinSystem::full_region() const {
  std::vector<int> ids;
  ids.reserve(sites_.size());
  for (const Site& s : sites_) ids.push_back(s.id);
  return Region(std::move(ids));
}

Region SpinSystem::complement(const Region& region) const {
  check_region(region);
  std::vector<int> ids;
  for (const Site& s : sites_) {
    if (!region.contains(s.id)) ids.push_back(s.id);
  }
  return Region(std::move(ids));
}

void SpinSystem::check_region(const Region& region) const {
  for (const int id : region.site_ids()) {
    if (!has_site(id)) {
      throw std::invalid_argument("Region: unknown " + site_label(id));
    }
  }
}

SpinSystem build_system(FiniteAbelianGroup group, std::vector<SiteSpec> sites,
                        double tol) {
  return SpinSystem(std::move(group), std::move(sites), tol);
}

Mat region_unitary(const SpinSystem& system, const Region& region,
                   const GroupElement& g) {
  system.check_region(region);
  Mat out = Mat::Identity(1, 1);
  for (std::size_t p = 0; p < system.site_count(); ++p) {
    const Index d = system.site_dim(p);
    if (region.contains(system.site(p).id)) {
      out = kron(out, system.onsite_unitary(p, g));
    } else {
      out = kron(out, Mat::Identity(d, d));
    }
  }
  return out;
}

SplitIndexer::SplitIndexer(const SpinSystem& system, const Region& region) {
  system.check_region(region);
  std::vector<Index> strides(system.site_count());
  Index stride = 1;
  for (std::size_t p = system.site_count(); p-- > 0;) {
    strides[p] = stride;
    stride *= system.site_dim(p);
  }
  region_offsets_ = {0};
  complement_offsets_ = {0};
  for (std::size_t p = 0; p < system.site_count(); ++p) {
    const Index d = system.site_dim(p);
    const bool in_region = region.contains(system.site(p).id);
    auto& offsets = in_region ? region_offsets_ : complement_offsets_;
    std::vector<Index> next;
    next.reserve(offsets.size() * d);
    for (const Index base : offsets) {
      for (Index k = 0; k < d; ++k) next.push_back(base + k * strides[p]);
    }
    offsets = std::move(next);
    (in_region ? region_dim_ : complement_dim_) *= d;
  }
}

std::vector<Index> SplitIndexer::permutation() const {
  std::vector<Index> perm(static_cast<std::size_t>(region_dim_ * complement_dim_));
  for (Index i = 0; i < region_dim_; ++i) {
    for (Index j = 0; j < complement_dim_; ++j) {
      perm[static_cast<std::size_t>(i * complement_dim_ + j)] = global_index(i, j);
    }
  }
  return perm;
}

Mat embed_local(const LocalOperator& op, const SpinSystem& system) {
  const SplitIndexer indexer(system, op.support);
  if (op.matrix.rows() != indexer.region_dim() ||
      op.matrix.cols() != indexer.region_dim()) {
    throw std::invalid_argument(
        "embed_local: operator dimension does not match its support");
  }
  Mat out = Mat::Zero(system.total_dim(), system.total_dim());
  for (Index i = 0; i < indexer.region_dim(); ++i) {
    for (Index j = 0; j < indexer.region_dim(); ++j) {
      const Complex value = op.matrix(i, j);
      if (value == Complex(0.0, 0.0)) continue;
      for (Index c = 0; c < indexer.complement_dim(); ++c) {
        out(indexer.global_index(i, c), indexer.global_index(j, c)) = value;
      }
    }
  }
  return out;
}

Region cone_region(const SpinSystem& system, std::array<double, 2> apex,
                   double deg_lo, double deg_hi) {
  const bool full_circle = (deg_hi - deg_lo >= 360.0) || (deg_hi - deg_lo <= -360.0);
  const bool single_ray = deg_hi == deg_lo;
  const double lo = normalize_degrees(deg_lo);
  const double width = full_circle ? 360.0 : normalize_degrees(deg_hi - deg_lo);
  constexpr double kRayEps = 1e-9;

  std::vector<int> ids;
  for (const Site& s : system.sites()) {
    const double dx = s.xy[0] - apex[0];
    const double dy = s.xy[1] - apex[1];
    if (std::abs(dx) < kRayEps && std::abs(dy) < kRayEps) {
      ids.push_back(s.id);  // apex site
      continue;
    }
    if (full_circle) {
      ids.push_back(s.id);
      continue;
    }
    const double theta = normalize_degrees(std::atan2(dy, dx) * 180.0 / M_PI);
    const double delta = normalize_degrees(theta - lo);
    if (single_ray) {
      if (delta < kRayEps || delta > 360.0 - kRayEps) ids.push_back(s.id);
    } else if (delta < width) {
      ids.push_back(s.id);
    }
  }
  Region region(std::move(ids));
  region.set_cone(ConeDescriptor{apex, deg_lo, deg_hi});
  return region;
}

Mat reorder_to_split(const SpinSystem& system, const Region& region, const Mat& m) {
  if (m.rows() != system.total_dim() || m.cols() != system.total_dim()) {
    throw std::invalid_argument("reorder_to_split: dimension mismatch");
  }
  const SplitIndexer indexer(system, region);
  const auto perm = indexer.permutation();
  const Index d = system.total_dim();
  Mat out(d, d);
  for (Index i = 0; i < d; ++i) {
    for (Index j = 0; j < d; ++j) {
      out(i, j) = m(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
    }
  }
  return out;
}

Mat compress_to_region(const SpinSystem& system, const Region& region, const Mat& m) {
  if (m.rows() != system.total_dim() || m.cols() != system.total_dim()) {
    throw std::invalid_argument("compress_to_region: dimension mismatch");
  }
  const SplitIndexer indexer(system, region);
  const Index dr = indexer.region_dim();
  const Index dc = indexer.complement_dim();
  Mat out = Mat::Zero(dr, dr);
  for (Index i = 0; i < dr; ++i) {
    for (Index j = 0; j < dr; ++j) {
      Complex sum(0.0, 0.0);
      for (Index c = 0; c < dc; ++c) {
        sum += m(indexer.global_index(i, c), indexer.global_index(j, c));
      }
      out(i, j) = sum / static_cast<double>(dc);
    }
  }
  return out;
}

double support_defect(const SpinSystem& system, const Region& region, const Mat& m) {
  const Mat compressed = compress_to_region(system, region, m);
  const Mat rebuilt = embed_local(LocalOperator{compressed, region}, system);
  return (m - rebuilt).norm();
}

SpinSystem subsystem(const SpinSystem& system, const Region& region) {
  system.check_region(region);
  std::vector<SiteSpec> specs;
  for (std::size_t p = 0; p < system.site_count(); ++p) {
    const Site& s = system.site(p);
    if (!region.contains(s.id)) continue;
    SiteSpec spec;
    spec.id = s.id;
    spec.xy = s.xy;
    spec.dim = system.site_dim(p);
    for (std::size_t j = 0; j < system.group().factor_count(); ++j) {
      spec.generators.push_back(system.generator(p, j));
    }
    specs.push_back(std::move(spec));
  }
  return SpinSystem(system.group(), std::move(specs));
}

}  // namespace sectorkit
