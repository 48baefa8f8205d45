#pragma once

#include <string>
#include <vector>

#include "qlsmodcat/abelian_group.hpp"

namespace qlsmodcat {

/// Datum (Gamma, g_1..g_theta, chi_1..chi_theta) of a quantum linear space.
class QlsDatum {
 public:
  QlsDatum(AbelianGroup group, std::vector<int> g, std::vector<Character> chi);

  const AbelianGroup& group() const { return group_; }
  int theta() const { return static_cast<int>(g_.size()); }
  int g(int i) const { return g_[i]; }
  const std::vector<int>& gs() const { return g_; }
  const Character& chi(int i) const { return chi_[i]; }
  const std::vector<Character>& chis() const { return chi_; }

  /// q_ij = chi_j(g_i).
  CycloNumber q(int i, int j) const { return chi_[j](g_[i]); }
  CycloNumber q(int i) const { return q(i, i); }
  /// Multiplicative order of q_i (1 when q_i = 1).
  int N(int i) const { return N_[i]; }
  const std::vector<int>& Ns() const { return N_; }
  int exponent() const { return group_.exponent(); }

 private:
  AbelianGroup group_;
  std::vector<int> g_;
  std::vector<Character> chi_;
  std::vector<int> N_;
};

struct Violation {
  std::string condition;  // "q-nontrivial", "q-pairing", ...
  std::vector<int> indices;
  std::string detail;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;
  void fail(std::string condition, std::vector<int> idx, std::string detail);
  std::string summary() const;
};

ValidationReport validate_datum(const QlsDatum& d);

/// Quantum binomial (l choose k)_q by the q-Pascal recurrence.
CycloNumber gaussian_binomial(int l, int k, const CycloNumber& q);

}  // namespace qlsmodcat
