#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sectorkit/group.hpp"
#include "sectorkit/linalg.hpp"

namespace sectorkit {

struct Site {
  int id = 0;
  std::array<double, 2> xy{0.0, 0.0};
};

struct ConeDescriptor {
  std::array<double, 2> apex{0.0, 0.0};
  double deg_lo = 0.0;
  double deg_hi = 360.0;
};

/// A subset of lattice sites, stored as a sorted id list. Regions built
/// from an angular wedge keep the wedge descriptor for reporting.
class Region {
 public:
  Region() = default;
  explicit Region(std::vector<int> site_ids);

  const std::vector<int>& site_ids() const { return site_ids_; }
  bool contains(int site_id) const;
  bool empty() const { return site_ids_.empty(); }
  std::size_t size() const { return site_ids_.size(); }

  const std::optional<ConeDescriptor>& cone() const { return cone_; }
  void set_cone(ConeDescriptor cone) { cone_ = std::move(cone); }

  bool operator==(const Region& other) const { return site_ids_ == other.site_ids_; }

 private:
  std::vector<int> site_ids_;
  std::optional<ConeDescriptor> cone_;
};

struct SiteSpec {
  int id = 0;
  std::array<double, 2> xy{0.0, 0.0};
  Index dim = 2;
  std::vector<Mat> generators;  // one unitary per cyclic factor
};

/// Finite set of sites, each carrying a Hilbert space dimension and one
/// unitary generator per cyclic factor of the symmetry group. The full
/// space is the tensor product over sites in declaration order.
class SpinSystem {
 public:
  SpinSystem(FiniteAbelianGroup group, std::vector<SiteSpec> sites,
             double tol = 1e-12);

  const FiniteAbelianGroup& group() const { return group_; }
  std::size_t site_count() const { return sites_.size(); }
  const Site& site(std::size_t position) const { return sites_[position]; }
  const std::vector<Site>& sites() const { return sites_; }
  Index site_dim(std::size_t position) const { return dims_[position]; }
  Index total_dim() const { return total_dim_; }

  std::size_t position_of(int site_id) const;
  bool has_site(int site_id) const;

  /// Generator unitary for one cyclic factor on one site.
  const Mat& generator(std::size_t position, std::size_t factor) const;

  /// On-site unitary for an arbitrary group element.
  Mat onsite_unitary(std::size_t position, const GroupElement& g) const;

  Region full_region() const;
  Region complement(const Region& region) const;
  void check_region(const Region& region) const;

 private:
  FiniteAbelianGroup group_;
  std::vector<Site> sites_;
  std::vector<Index> dims_;
  std::vector<std::vector<Mat>> generators_;  // [site][factor]
  Index total_dim_ = 1;
};

struct LocalOperator {
  Mat matrix;      // acts on the tensor factor of the support sites
  Region support;  // support sites; factor order follows declaration order
};

SpinSystem build_system(FiniteAbelianGroup group, std::vector<SiteSpec> sites,
                        double tol = 1e-12);

/// U_{Lambda,g}: the product of on-site unitaries over the region,
/// identity elsewhere.
Mat region_unitary(const SpinSystem& system, const Region& region,
                   const GroupElement& g);

/// Embeds a local operator into the full space, tensoring with the
/// identity on the complement.
Mat embed_local(const LocalOperator& op, const SpinSystem& system);

/// Sites whose direction from the apex lies in the half-open interval
/// [deg_lo, deg_hi) mod 360. A site located at the apex is included.
/// deg_lo == deg_hi selects the single ray at deg_lo; a span of 360 or
/// more selects every site.
Region cone_region(const SpinSystem& system, std::array<double, 2> apex,
                   double deg_lo, double deg_hi);

/// Index bookkeeping for the factorization  H = H_region (x) H_complement.
/// global_index(i, j) recovers the declaration-order basis index.
class SplitIndexer {
 public:
  SplitIndexer(const SpinSystem& system, const Region& region);

  Index region_dim() const { return region_dim_; }
  Index complement_dim() const { return complement_dim_; }
  Index global_index(Index region_index, Index complement_index) const {
    return region_offsets_[region_index] + complement_offsets_[complement_index];
  }

  /// Permutation taking the (region, complement) ordering to declaration
  /// order: perm[i_region * complement_dim + i_complement] = global index.
  std::vector<Index> permutation() const;

 private:
  Index region_dim_ = 1;
  Index complement_dim_ = 1;
  std::vector<Index> region_offsets_;
  std::vector<Index> complement_offsets_;
};

/// Reorders a full-space operator into the (region, complement) tensor
/// ordering.
Mat reorder_to_split(const SpinSystem& system, const Region& region, const Mat& m);

/// Normalized partial trace over the complement: for m = a (x) 1 this
/// recovers a.
Mat compress_to_region(const SpinSystem& system, const Region& region, const Mat& m);

/// Frobenius distance from m to the operators supported in the region.
double support_defect(const SpinSystem& system, const Region& region, const Mat& m);

/// Restriction of the system to the sites of a region (declaration order
/// preserved).
SpinSystem subsystem(const SpinSystem& system, const Region& region);

}  // namespace sectorkit
