#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qlsmodcat/hopf.hpp"

namespace qlsmodcat {

/// A quantum linear space datum together with its bosonization U.
struct QlsContext {
  QlsDatum datum;
  std::shared_ptr<const HopfAlgebraRep> U;

  /// Basis index of x_1^{r_1}...x_theta^{r_theta} # g in U.
  std::size_t index(const std::vector<int>& r, int g) const;
  Vec x(int i) const;
  /// sum_i c_i x_i for coordinates c over x_1..x_theta.
  Vec x_of(const Vec& coords) const;
  Vec group(int g) const { return Vec::unit(static_cast<std::size_t>(g)); }
};

std::shared_ptr<const QlsContext> make_context(const QlsDatum& d);

/// (W, F, psi, xi, alpha). W is given by a basis of vectors in coordinates
/// over x_1..x_theta; each basis vector must be homogeneous (inside one V_g)
/// and an F-eigenvector. xi and alpha are indexed by that basis, alpha by
/// pairs (k, l) with k < l.
struct ModCatDatum {
  TwoCocycle psi;
  std::vector<Vec> W;
  std::vector<CycloNumber> xi;
  std::map<std::pair<int, int>, CycloNumber> alpha;

  explicit ModCatDatum(TwoCocycle p) : psi(std::move(p)) {}

  const Subgroup& F() const { return psi.subgroup(); }
  CycloNumber a(int k, int l) const;
  bool is_graded() const;
};

/// Basis {x_i : i in coords} of a coordinate subcomodule.
std::vector<Vec> coordinate_subspace(const std::vector<int>& coords);

/// True when every basis vector of W is a single x_i with coefficient 1.
bool is_coordinate(const std::vector<Vec>& W);

/// How the chosen basis of W sits inside U.
struct WBasisInfo {
  std::vector<Vec> in_U;
  std::vector<int> g;                            // Gamma-degree of w_k
  std::vector<std::vector<CycloNumber>> weight;  // e_f w_k = weight[k][f] w_k e_f, f local in F
  std::vector<int> height;                       // N'_k: least n with w_k^n = 0 in U
  std::vector<std::vector<CycloNumber>> q;       // w_k w_l = q[k][l] w_l w_k in U
  std::vector<std::string> problems;
};

WBasisInfo analyze_W(const QlsContext& ctx, const Subgroup& F, const std::vector<Vec>& W);

ValidationReport validate_modcat_datum(const QlsContext& ctx, const ModCatDatum& m);

/// A(W, F, psi, xi, alpha) on PBW labels w^r e_f, with
///   e_f w_k = chi_k(f) w_k e_f,  w_k w_l - q_kl w_l w_k = alpha_kl e_{g_k g_l},
///   w_k^{N'_k} = xi_k e_{g_k^{N'_k}},
/// and lambda(w_k) = x(w_k) (x) 1 + g_k (x) w_k, lambda(e_f) = f (x) e_f.
ComoduleAlgebraRep build_A(const QlsContext& ctx, const ModCatDatum& m, bool verify = true);
ComoduleAlgebraRep build_A(const QlsDatum& d, const ModCatDatum& m);

/// K(W, psi, F) = K(W) (x) k_psi F computed inside U: K(W) is the subalgebra
/// of U generated by W, with (v (x) f)(v' (x) f') = v (f.v') (x) psi(f,f') ff'.
/// Basis index j * |F| + f for the j-th basis vector of K(W); the first basis
/// vectors of K(W) are 1, w_1, ..., w_s.
ComoduleAlgebraRep build_K(const QlsContext& ctx, const std::vector<Vec>& W, const TwoCocycle& psi);

/// Images (as columns) of the PBW basis of src under the algebra map sending
/// generator k to gen_images[k] and e_f to group_images[f].
std::vector<Vec> generator_map(const ComoduleAlgebraRep& src, const std::vector<Vec>& gen_images,
                               const std::vector<Vec>& group_images, const Algebra& target);

/// Checks that phi (columns) is a bijective unital algebra map a -> b that
/// intertwines the coactions (both over the same Hopf algebra basis).
std::optional<std::string> check_isomorphism(const ComoduleAlgebraRep& a, const ComoduleAlgebraRep& b,
                                             const std::vector<Vec>& phi);

/// The generator-matching map A(W,F,psi,0,0) -> K(W,psi,F) (or from gr A):
/// w_k -> w_k (x) 1, e_f -> 1 (x) e_f.
std::vector<Vec> generator_map_to_K(const ComoduleAlgebraRep& src, const ComoduleAlgebraRep& K, int s);

}  // namespace qlsmodcat
