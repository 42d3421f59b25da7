#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

namespace sectorkit {

struct GroupElement {
  std::vector<std::int64_t> residues;
  bool operator==(const GroupElement&) const = default;
};

struct Character {
  std::vector<std::int64_t> dual_residues;
  bool operator==(const Character&) const = default;
};

std::string to_string(const GroupElement& g);
std::string to_string(const Character& chi);

/// Finite abelian group Z_{n1} x ... x Z_{nk} with its dual group and the
/// normalized counting measure. Elements and characters are residue tuples;
/// evaluation is
///
///   chi_m(g) = exp(2 pi i sum_j m_j g_j / n_j),
///
/// computed from an exact rational phase so that equal phases evaluate to
/// identical complex numbers.
class FiniteAbelianGroup {
 public:
  explicit FiniteAbelianGroup(std::vector<std::int64_t> cyclic_moduli);

  const std::vector<std::int64_t>& cyclic_moduli() const { return moduli_; }
  std::int64_t order() const { return order_; }
  std::size_t factor_count() const { return moduli_.size(); }

  GroupElement identity() const;
  GroupElement reduce(std::vector<std::int64_t> raw) const;
  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement inverse(const GroupElement& g) const;

  Character trivial_character() const;
  Character multiply(const Character& a, const Character& b) const;
  Character inverse(const Character& chi) const;

  /// Position in the lexicographic enumeration.
  std::int64_t index_of(const GroupElement& g) const;
  std::int64_t index_of(const Character& chi) const;
  GroupElement element_at(std::int64_t index) const;
  Character character_at(std::int64_t index) const;

  /// Concatenation Z_m x Z_m used for two-sided actions.
  FiniteAbelianGroup squared() const;

  bool operator==(const FiniteAbelianGroup&) const = default;

 private:
  void check_element(const GroupElement& g) const;
  void check_character(const Character& chi) const;

  std::vector<std::int64_t> moduli_;
  std::int64_t order_ = 1;
  std::int64_t exponent_ = 1;  // lcm of the moduli

  friend std::complex<double> evaluate_character(const FiniteAbelianGroup& group,
                                                 const Character& chi,
                                                 const GroupElement& g);
};

/// All group elements in deterministic lexicographic order.
std::vector<GroupElement> enumerate_elements(const FiniteAbelianGroup& group);

/// All characters in lexicographic order of dual residues; the trivial
/// character comes first.
std::vector<Character> enumerate_dual(const FiniteAbelianGroup& group);

std::complex<double> evaluate_character(const FiniteAbelianGroup& group,
                                        const Character& chi, const GroupElement& g);

namespace detail {
template <class T>
concept EigenShaped = requires(const T& t) {
  t.rows();
  t.cols();
};

template <class T>
void check_same_shape(const T& a, const T& b) {
  if constexpr (EigenShaped<T>) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
      throw std::invalid_argument("haar_average: family values differ in shape");
    }
  }
}
}  // namespace detail

/// Mean of `family(g)` over the group, weighted by the character evaluated
/// at the inverse element. Terms are accumulated in enumeration order and
/// the 1/|G| weight is applied once at the end.
template <class Family>
auto haar_average(const FiniteAbelianGroup& group, const Character& weight,
                  Family&& family) {
  using Value = std::decay_t<decltype(family(group.identity()))>;
  Value acc = family(group.identity());
  acc = acc * evaluate_character(group, weight, group.identity());
  const std::int64_t order = group.order();
  for (std::int64_t index = 1; index < order; ++index) {
    const GroupElement g = group.element_at(index);
    const std::complex<double> w =
        std::conj(evaluate_character(group, weight, g));
    Value term = family(g);
    detail::check_same_shape(acc, term);
    acc = acc + term * w;
  }
  return Value(acc / static_cast<double>(order));
}

template <class Family>
auto haar_average(const FiniteAbelianGroup& group, Family&& family) {
  return haar_average(group, group.trivial_character(),
                      std::forward<Family>(family));
}

}  // namespace sectorkit
