#pragma once

#include <map>
#include <utility>
#include <vector>

#include "qlsmodcat/pbw.hpp"
#include "qlsmodcat/qls_datum.hpp"

namespace qlsmodcat {

/// Compatible datum (mu, lambda) for a lifting; lambda is indexed (i, j), i < j.
struct LiftingDatum {
  std::vector<CycloNumber> mu;
  std::map<std::pair<int, int>, CycloNumber> lambda;

  static LiftingDatum trivial(int theta);
  bool is_trivial() const;
  CycloNumber lam(int i, int j) const;
};

ValidationReport validate_lifting(const QlsDatum& d, const LiftingDatum& l);

/// Bosonization U = B(V) # k Gamma.
HopfAlgebraRep build_bosonization(const QlsDatum& d);

/// Lifting A(Gamma, Q, D): a_i^{N_i} = mu_i (1 - g_i^{N_i}),
/// a_i a_j = chi_j(g_i) a_j a_i + lambda_ij (1 - g_i g_j).
HopfAlgebraRep build_lifting(const QlsDatum& d, const LiftingDatum& l);

/// PBW presentation shared by the two constructions above.
PbwPresentation lifting_presentation(const QlsDatum& d, const LiftingDatum& l, const std::string& letter);

/// Completes a PBW algebra with Delta(y_k) = y_k (x) 1 + g_k (x) y_k,
/// Delta(e_f) = e_f (x) e_f, counit and antipode S(y_k) = -g_k^{-1} y_k.
/// Group elements are local indices of the presentation.
HopfAlgebraRep pbw_hopf(const PbwAlgebra& a, const std::vector<int>& gen_group, const std::vector<int>& group_inv,
                        std::string name);

/// Labels for group elements of Gamma, e.g. "(1,0)".
std::vector<std::string> group_labels(const AbelianGroup& g, const std::string& prefix = "");

/// Scalars q_{h,g} with wv = q_{h,g} vw for v in V_g, w in V_h.
struct QMatrix {
  std::vector<int> support;  // group elements with V_g != 0
  std::map<std::pair<int, int>, CycloNumber> q;  // (h, g)
  /// False when two basis vectors of the same components disagree; happens
  /// only inside one V_g with q_i != -1.
  bool consistent = true;
  std::pair<int, int> conflict{-1, -1};
};
QMatrix compute_qmatrix(const QlsDatum& d);

/// Degree cutoffs: basis indices of H_n for each n (filtration recorded by degree).
std::vector<std::vector<std::size_t>> filtration_layers(const HopfAlgebraRep& h);

/// Delta(H(n)) in sum_i H(i) (x) H(n-i) on every basis element; with exact
/// false only the filtered inclusion (degrees at most n) is required.
std::optional<std::string> check_coradical_grading(const HopfAlgebraRep& h, bool exact = true);

}  // namespace qlsmodcat
