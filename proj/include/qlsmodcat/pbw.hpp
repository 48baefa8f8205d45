#pragma once

#include <map>
#include <string>
#include <vector>

#include "qlsmodcat/algebra.hpp"

namespace qlsmodcat {

/// Presentation of an algebra with PBW basis y_1^{r_1}...y_s^{r_s} e_f
/// (0 <= r_k < N_k, f in a finite group) by
///   e_f e_g = psi(f,g) e_{fg},
///   e_f y_k = weight[k][f] y_k e_f,
///   y_l y_k = comm[l][k] y_k y_l + lower[l][k]    (l > k),
///   y_k^{N_k} = power[k],
/// where lower and power are elements of the twisted group algebra.
/// Bosonizations, liftings and the comodule algebras A(W,F,psi,xi,alpha)
/// are all instances.
struct PbwPresentation {
  int group_size = 1;
  std::vector<int> group_mul;  // group_size^2, identity is element 0
  std::vector<CycloNumber> psi;
  std::vector<std::string> group_labels;

  std::vector<std::string> gen_names;
  std::vector<int> height;
  std::vector<std::vector<CycloNumber>> weight;
  std::vector<std::vector<CycloNumber>> comm;
  std::vector<std::vector<Vec>> lower;
  std::vector<Vec> power;

  int gens() const { return static_cast<int>(height.size()); }
  /// Initializes group data with a trivial cocycle and generators with no
  /// lower terms and zero powers.
  void init(int m, std::vector<int> mul, std::vector<std::string> glabels, int s);
};

class PbwAlgebra {
 public:
  explicit PbwAlgebra(PbwPresentation p);

  const PbwPresentation& presentation() const { return p_; }
  const Algebra& algebra() const { return alg_; }
  std::size_t dim() const { return alg_.dim; }

  std::size_t index(const std::vector<int>& r, int f) const;
  const std::vector<int>& exps(std::size_t b) const { return exps_[b / p_.group_size]; }
  int group_part(std::size_t b) const { return static_cast<int>(b % p_.group_size); }
  int degree(std::size_t b) const;
  std::vector<int> degrees() const;

  Vec generator(int k) const;
  Vec group_element(int f) const { return Vec::unit(index(std::vector<int>(p_.gens(), 0), f)); }

  /// Normal form of the word y_{w_1}...y_{w_n}, using leftmost (true) or
  /// rightmost (false) reduction.
  Vec normal_form(const std::vector<int>& word, bool leftmost) const;

  /// Compares leftmost and rightmost reductions on every word of length
  /// <= max_len; returns a description of the first disagreement.
  std::optional<std::string> confluence_check(int max_len) const;

 private:
  using Word = std::vector<unsigned char>;
  Vec reduce(const Word& w, bool leftmost) const;
  Vec times_group(const Vec& v, int g, const CycloNumber& c) const;

  PbwPresentation p_;
  Algebra alg_;
  std::vector<std::vector<int>> exps_;
  std::size_t monomials_ = 1;
  mutable std::map<Word, Vec> memo_;
};

/// Builds the algebra, checks confluence on words of length <= 4 and
/// associativity on every basis triple; ConfluenceFailure on mismatch.
PbwAlgebra build_pbw(PbwPresentation p, bool full_associativity_sweep = true);

}  // namespace qlsmodcat
