#include "sectorkit/group.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace sectorkit {

namespace {

std::string join(const std::vector<std::int64_t>& values) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out << ",";
    out << values[i];
  }
  out << "]";
  return out.str();
}

}  // namespace

std::string to_string(const GroupElement& g) { return join(g.residues); }
std::string to_string(const Character& chi) { return join(chi.dual_residues); }

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::int64_t> cyclic_moduli)
    : moduli_(std::move(cyclic_moduli)) {
  if (moduli_.empty()) {
    throw std::invalid_argument("FiniteAbelianGroup: at least one cyclic factor required");
  }
  for (const std::int64_t n : moduli_) {
    if (n < 1) {
      throw std::invalid_argument("FiniteAbelianGroup: cyclic modulus must be >= 1");
    }
    if (order_ > (1LL << 40) / n) {
      throw std::invalid_argument("FiniteAbelianGroup: order too large");
    }
    order_ *= n;
    exponent_ = std::lcm(exponent_, n);
  }
}

GroupElement FiniteAbelianGroup::identity() const {
  return GroupElement{std::vector<std::int64_t>(moduli_.size(), 0)};
}

GroupElement FiniteAbelianGroup::reduce(std::vector<std::int64_t> raw) const {
  if (raw.size() != moduli_.size()) {
    throw std::invalid_argument("GroupElement: residue count does not match moduli");
  }
  for (std::size_t j = 0; j < raw.size(); ++j) {
    raw[j] %= moduli_[j];
    if (raw[j] < 0) raw[j] += moduli_[j];
  }
  return GroupElement{std::move(raw)};
}

GroupElement FiniteAbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
  check_element(a);
  check_element(b);
  std::vector<std::int64_t> out(moduli_.size());
  for (std::size_t j = 0; j < moduli_.size(); ++j) {
    out[j] = (a.residues[j] + b.residues[j]) % moduli_[j];
  }
  return GroupElement{std::move(out)};
}

GroupElement FiniteAbelianGroup::inverse(const GroupElement& g) const {
  check_element(g);
  std::vector<std::int64_t> out(moduli_.size());
  for (std::size_t j = 0; j < moduli_.size(); ++j) {
    out[j] = (moduli_[j] - g.residues[j]) % moduli_[j];
  }
  return GroupElement{std::move(out)};
}

Character FiniteAbelianGroup::trivial_character() const {
  return Character{std::vector<std::int64_t>(moduli_.size(), 0)};
}

Character FiniteAbelianGroup::multiply(const Character& a, const Character& b) const {
  check_character(a);
  check_character(b);
  std::vector<std::int64_t> out(moduli_.size());
  for (std::size_t j = 0; j < moduli_.size(); ++j) {
    out[j] = (a.dual_residues[j] + b.dual_residues[j]) % moduli_[j];
  }
  return Character{std::move(out)};
}

Character FiniteAbelianGroup::inverse(const Character& chi) const {
  check_character(chi);
  std::vector<std::int64_t> out(moduli_.size());
  for (std::size_t j = 0; j < moduli_.size(); ++j) {
    out[j] = (moduli_[j] - chi.dual_residues[j]) % moduli_[j];
  }
  return Character{std::move(out)};
}

std::int64_t FiniteAbelianGroup::index_of(const GroupElement& g) const {
  check_element(g);
  std::int64_t index = 0;
  for (std::size_t j = 0; j < moduli_.size(); ++j) {
    index = index * moduli_[j] + g.residues[j];
  }
  return index;
}

std::int64_t FiniteAbelianGroup::index_of(const Character& chi) const {
  check_character(chi);
  std::int64_t index = 0;
  for (std::size_t j = 0; j < moduli_.size(); ++j) {
    index = index * moduli_[j] + chi.dual_residues[j];
  }
  return index;
}

GroupElement FiniteAbelianGroup::element_at(std::int64_t index) const {
  if (index < 0 || index >= order_) {
    throw std::invalid_argument("FiniteAbelianGroup: element index out of range");
  }
  std::vector<std::int64_t> residues(moduli_.size(), 0);
  for (std::size_t j = moduli_.size(); j-- > 0;) {
    residues[j] = index % moduli_[j];
    index /= moduli_[j];
  }
  return GroupElement{std::move(residues)};
}

Character FiniteAbelianGroup::character_at(std::int64_t index) const {
  return Character{element_at(index).residues};
}

FiniteAbelianGroup FiniteAbelianGroup::squared() const {
  std::vector<std::int64_t> doubled = moduli_;
  doubled.insert(doubled.end(), moduli_.begin(), moduli_.end());
  return FiniteAbelianGroup(std::move(doubled));
}

void FiniteAbelianGroup::check_element(const GroupElement& g) const {
  if (g.residues.size() != moduli_.size()) {
    throw std::invalid_argument("GroupElement: residue count does not match moduli");
  }
  for (std::size_t j = 0; j < moduli_.size(); ++j) {
    if (g.residues[j] < 0 || g.residues[j] >= moduli_[j]) {
      throw std::invalid_argument("GroupElement: residue out of range");
    }
  }
}

void FiniteAbelianGroup::check_character(const Character& chi) const {
  if (chi.dual_residues.size() != moduli_.size()) {
    throw std::invalid_argument("Character: residue count does not match moduli");
  }
  for (std::size_t j = 0; j < moduli_.size(); ++j) {
    if (chi.dual_residues[j] < 0 || chi.dual_residues[j] >= moduli_[j]) {
      throw std::invalid_argument("Character: residue out of range");
    }
  }
}

std::vector<GroupElement> enumerate_elements(const FiniteAbelianGroup& group) {
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(group.order()));
  for (std::int64_t i = 0; i < group.order(); ++i) {
    out.push_back(group.element_at(i));
  }
  return out;
}

std::vector<Character> enumerate_dual(const FiniteAbelianGroup& group) {
  std::vector<Character> out;
  out.reserve(static_cast<std::size_t>(group.order()));
  for (std::int64_t i = 0; i < group.order(); ++i) {
    out.push_back(group.character_at(i));
  }
  return out;
}

std::complex<double> evaluate_character(const FiniteAbelianGroup& group,
                                        const Character& chi, const GroupElement& g) {
  group.check_character(chi);
  group.check_element(g);
  // Exact phase numerator over the common denominator lcm(n_j).
  const std::int64_t denom = group.exponent_;
  std::int64_t num = 0;
  for (std::size_t j = 0; j < group.moduli_.size(); ++j) {
    const std::int64_t n = group.moduli_[j];
    const std::int64_t part = (chi.dual_residues[j] * g.residues[j]) % n;
    num = (num + part * (denom / n)) % denom;
  }
  // Quarter turns come out exact.
  if ((4 * num) % denom == 0) {
    switch ((4 * num) / denom) {
      case 0: return std::complex<double>(1.0, 0.0);
      case 1: return std::complex<double>(0.0, 1.0);
      case 2: return std::complex<double>(-1.0, 0.0);
      default: return std::complex<double>(0.0, -1.0);
    }
  }
  return std::polar(1.0, 2.0 * M_PI * static_cast<double>(num) /
                             static_cast<double>(denom));
}

}  // namespace sectorkit
