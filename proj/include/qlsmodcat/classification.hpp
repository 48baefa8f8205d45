#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qlsmodcat/comodule_algebra.hpp"
#include "qlsmodcat/structure.hpp"

namespace qlsmodcat {

/// Positions of (xi, alpha) that the compatibility conditions leave free.
struct FreePositions {
  std::vector<int> xi;
  std::vector<std::pair<int, int>> alpha;
  int count() const { return static_cast<int>(xi.size() + alpha.size()); }
  friend bool operator==(const FreePositions&, const FreePositions&) = default;
};

FreePositions free_positions(const QlsContext& ctx, const TwoCocycle& psi, const std::vector<Vec>& W);

/// Every W spanned by a subset of x_1..x_theta, by increasing bitmask.
std::vector<std::vector<Vec>> coordinate_subcomodules(const QlsDatum& d);

/// Sweep over F x psi-classes x W x (xi, alpha) in sample^free, zero on
/// forced positions. extra_W are user-registered bases, used for every F
/// where they consist of F-eigenvectors. SizeBound above max_group_order.
std::vector<ModCatDatum> enumerate_modcat_data(const QlsDatum& d, const std::vector<CycloNumber>& sample,
                                               int max_group_order = kDefaultMaxGroupOrder,
                                               const std::vector<std::vector<Vec>>& extra_W = {});

/// Canonical key: F, psi (class tag, or the raw table when strict), W basis, xi, alpha.
std::string datum_key(const ModCatDatum& m, bool strict = false);
/// Row key: F, psi, W.
std::string row_key(const ModCatDatum& m, bool strict = false);

/// First representative of each key, in input order.
std::vector<ModCatDatum> dedupe(const std::vector<ModCatDatum>& data, bool strict = false);

std::string W_to_string(const std::vector<Vec>& W);
std::string params_to_string(const ModCatDatum& m);

struct RepresentativeInfo {
  ModCatDatum datum;
  std::size_t dim = 0;
  Simplicity verdict = Simplicity::Undecided;
  std::size_t coinvariants = 0;
  SimpleModulesResult modules;
};

struct ClassificationRow {
  std::string F;
  std::string psi_class;
  std::string W;
  bool general_W = false;
  int free_params = 0;
  std::size_t dim = 0;
  std::vector<RepresentativeInfo> reps;
};

struct ClassificationOptions {
  std::vector<CycloNumber> sample{CycloNumber(0L), CycloNumber(1L)};
  int max_group_order = kDefaultMaxGroupOrder;
  int conductor = 0;  // 0: exponent of Gamma
  std::uint32_t seed = 1;
  bool strict_cocycle = false;
  std::vector<std::vector<Vec>> extra_W;
};

struct ClassificationReport {
  std::string datum;
  std::vector<ClassificationRow> rows;
  std::size_t total = 0;
  std::vector<std::string> notes;
};

ClassificationReport classification_report(const QlsDatum& d, const ClassificationOptions& opt = {});
/// Groups already enumerated data (after dedupe) into rows in canonical key order.
ClassificationReport classification_report(const QlsDatum& d, const std::vector<ModCatDatum>& data,
                                           const ClassificationOptions& opt);

/// Cl(W, beta) # k_psi F with beta(w_k, w_k) = xi_k, beta(w_k, w_l) = alpha_kl / 2,
/// built by its own rewriting, with lambda(w) = w (x) 1 + u (x) w and
/// lambda(f) = f (x) f.
ComoduleAlgebraRep clifford_smash(const QlsContext& ctx, const ModCatDatum& m);

struct CliffordCheck {
  bool pass = false;
  std::string detail;
  std::size_t dim = 0;
};

/// Compares A(W, F, psi, xi, alpha) with Cl(W, beta) # k_psi F through the
/// generator map. NotExteriorDatum unless every g_i = u of order 2 and chi_i(u) = -1.
CliffordCheck exterior_clifford_check(const QlsDatum& d, const ModCatDatum& m);

}  // namespace qlsmodcat
