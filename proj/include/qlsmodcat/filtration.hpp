#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qlsmodcat/comodule_algebra.hpp"

namespace qlsmodcat {

/// A_0 ⊆ A_1 ⊆ ... ⊆ A_m = A, each layer given by a basis of A-vectors.
struct FiltrationRep {
  std::vector<std::vector<Vec>> layers;
  std::vector<std::size_t> dims() const;
};

/// A_n = lambda^{-1}(H_n (x) A), H_n spanned by basis elements of degree <= n.
FiltrationRep loewy_filtration(const ComoduleAlgebraRep& a);

/// Filtration by the recorded monomial degree of the basis.
FiltrationRep monomial_filtration(const ComoduleAlgebraRep& a);

/// Layer-by-layer equality of two filtrations of the same space.
std::optional<std::string> compare_filtrations(const FiltrationRep& a, const FiltrationRep& b);

/// A_i A_j ⊆ A_{i+j} on all pairs of layer basis vectors.
std::optional<std::string> check_multiplicative(const Algebra& alg, const FiltrationRep& f);

/// gr A with induced product and coaction into gr H (x) gr A; H must have a
/// homogeneous basis (true for U). Layer representatives are standard basis
/// vectors whenever possible, in which case PBW labels are inherited.
/// IsoCheckFailed if the filtration is not compatible with the structure.
ComoduleAlgebraRep associated_graded(const ComoduleAlgebraRep& a, const FiltrationRep& f);

/// The generator-matching comparison of gr A(W,F,psi,xi,alpha) with
/// K(W,psi,F); IsoCheckFailed with the first failing property.
void check_graded_model(const QlsContext& ctx, const ModCatDatum& m, const ComoduleAlgebraRep& gr);

}  // namespace qlsmodcat
