#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qlsmodcat/cyclotomic.hpp"

namespace qlsmodcat {

/// Z_{n_1} x ... x Z_{n_r}. Elements are addressed by a mixed-radix index
/// with the first coordinate most significant, so index order coincides with
/// lexicographic order on exponent vectors.
class AbelianGroup {
 public:
  AbelianGroup() : AbelianGroup(std::vector<int>{}) {}
  explicit AbelianGroup(std::vector<int> orders);

  const std::vector<int>& orders() const { return orders_; }
  int rank() const { return static_cast<int>(orders_.size()); }
  int order() const { return order_; }
  int exponent() const { return exponent_; }

  std::vector<int> exps(int idx) const;
  int index(const std::vector<int>& exps) const;  // reduces modulo the orders
  int identity() const { return 0; }
  int mul(int a, int b) const { return mul_[static_cast<std::size_t>(a) * order_ + b]; }
  int inv(int a) const { return inv_[a]; }
  int pow(int a, long k) const;
  int element_order(int a) const { return elt_order_[a]; }

  friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) { return a.orders_ == b.orders_; }
  friend bool operator!=(const AbelianGroup& a, const AbelianGroup& b) { return !(a == b); }

  std::string to_string() const;

 private:
  std::vector<int> orders_;
  int order_ = 1;
  int exponent_ = 1;
  std::vector<int> mul_;
  std::vector<int> inv_;
  std::vector<int> elt_order_;
};

struct GroupElement {
  AbelianGroup parent;
  std::vector<int> exps;

  GroupElement(const AbelianGroup& g, std::vector<int> e);
  GroupElement(const AbelianGroup& g, int idx) : parent(g), exps(g.exps(idx)) {}
  int index() const { return parent.index(exps); }
};

/// chi(g) = prod_i zeta_{n_i}^{chi_i g_i}.
struct Character {
  AbelianGroup parent;
  std::vector<int> exps;

  Character(const AbelianGroup& g, std::vector<int> e);
  static Character trivial(const AbelianGroup& g) { return Character(g, std::vector<int>(g.rank(), 0)); }

  /// Exponent k with chi(g) = zeta_E^k, E the exponent of the parent.
  long exponent_at(int g_index) const;
  CycloNumber operator()(int g_index) const;
  Character operator*(const Character& o) const;
  Character pow(long k) const;
  bool is_trivial() const;

  friend bool operator==(const Character& a, const Character& b) {
    return a.parent == b.parent && a.exps == b.exps;
  }
};

CycloNumber evaluate_character(const Character& chi, const GroupElement& g);

/// A subgroup F of a parent group, with elements sorted by parent index and
/// an invariant-factor presentation F = <h_1> x ... x <h_s>, m_1 | ... | m_s.
class Subgroup {
 public:
  Subgroup(const AbelianGroup& parent, std::vector<int> elements);

  const AbelianGroup& parent() const { return parent_; }
  const std::vector<int>& elements() const { return elements_; }
  int size() const { return static_cast<int>(elements_.size()); }
  bool contains(int parent_idx) const { return local_[parent_idx] >= 0; }
  /// Position of a parent element in elements(), or -1.
  int local(int parent_idx) const { return local_[parent_idx]; }
  int element(int local_idx) const { return elements_[local_idx]; }
  int mul_local(int a, int b) const { return local_[parent_.mul(elements_[a], elements_[b])]; }
  int inv_local(int a) const { return local_[parent_.inv(elements_[a])]; }

  const std::vector<int>& invariant_factors() const { return factors_; }
  const std::vector<int>& generators() const { return gens_; }  // parent indices
  /// The abstract group Z_{m_1} x ... x Z_{m_s}.
  const AbelianGroup& presented() const { return presented_; }
  /// Presentation coordinates of a local element.
  const std::vector<int>& coords(int local_idx) const { return coords_[local_idx]; }
  int exponent() const { return presented_.exponent(); }

  /// Restriction of a character of the parent, as a character of presented().
  Character restrict(const Character& chi) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.elements_ == b.elements_;
  }
  friend bool operator<(const Subgroup& a, const Subgroup& b);

  std::string to_string() const;

 private:
  AbelianGroup parent_;
  std::vector<int> elements_;
  std::vector<int> local_;
  std::vector<int> factors_;
  std::vector<int> gens_;
  AbelianGroup presented_;
  std::vector<std::vector<int>> coords_;
};

Subgroup whole_group(const AbelianGroup& g);
Subgroup trivial_subgroup(const AbelianGroup& g);
/// Subgroup generated by the given parent elements.
Subgroup generated_subgroup(const AbelianGroup& g, const std::vector<int>& gens);

inline constexpr int kDefaultMaxGroupOrder = 256;

/// Every subgroup exactly once, ordered lexicographically on sorted element
/// lists. SizeBound when |G| exceeds max_order.
std::vector<Subgroup> enumerate_subgroups(const AbelianGroup& g, int max_order = kDefaultMaxGroupOrder);

/// Normalized 2-cocycle on a subgroup F, tabulated over local indices.
class TwoCocycle {
 public:
  TwoCocycle(Subgroup f, std::vector<CycloNumber> table);

  static TwoCocycle trivial(const Subgroup& f);

  const Subgroup& subgroup() const { return f_; }
  const std::vector<CycloNumber>& table() const { return table_; }
  /// psi(a, b) on local indices.
  const CycloNumber& at(int a, int b) const {
    return table_[static_cast<std::size_t>(a) * f_.size() + b];
  }
  /// Exponents of the alternating form omega(h_i,h_j), i<j, on the presentation
  /// generators, each modulo gcd(m_i, m_j). Two cocycles are cohomologous iff
  /// their tags agree.
  const std::vector<int>& class_exponents() const { return class_; }
  std::string class_tag() const;
  bool is_class_trivial() const;

  /// Cocycle identity and unit normalization, exhaustive.
  std::optional<std::string> check_identity() const;
  bool inverse_normalized() const;

 private:
  Subgroup f_;
  std::vector<CycloNumber> table_;
  std::vector<int> class_;
};

/// One representative per class of H^2(F, k^x), bicharacter-based and
/// normalized so that psi(g^{-1}, g) = 1.
std::vector<TwoCocycle> cocycle_classes(const Subgroup& f);

/// The bicharacter representative with the given exponents k_ij (i<j).
TwoCocycle bicharacter_cocycle(const Subgroup& f, const std::vector<int>& k);

/// psi_g(h) = psi(h,g) psi(g,h)^{-1}, as a character of F's presentation.
Character psi_g(const TwoCocycle& psi, int g_parent);

CycloNumber cocycle_eval(const TwoCocycle& psi, int f_parent, int g_parent);

/// psi * d(mu) where d(mu)(a,b) = mu(a) mu(b) / mu(ab); mu indexed locally.
TwoCocycle multiply_by_coboundary(const TwoCocycle& psi, const std::vector<CycloNumber>& mu);

}  // namespace qlsmodcat
