#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qlsmodcat/cyclotomic.hpp"

namespace qlsmodcat {

/// Finite-dimensional associative algebra given by structure constants.
/// mult[i * dim + j] is the product of basis elements i and j.
struct Algebra {
  std::size_t dim = 0;
  std::vector<std::string> labels;
  std::vector<Vec> mult;
  Vec unit;

  const Vec& product(std::size_t i, std::size_t j) const { return mult[i * dim + j]; }
  Vec multiply(const Vec& a, const Vec& b) const;
  /// Structure constants of the opposite algebra.
  Algebra opposite() const;
};

/// Index of the pair (i, j) in a tensor product whose right factor has dimension d2.
inline std::size_t pair_index(std::size_t i, std::size_t j, std::size_t d2) { return i * d2 + j; }

/// Componentwise product in A (x) B of vectors indexed by pair_index.
Vec tensor_multiply(const Algebra& a, const Algebra& b, const Vec& x, const Vec& y);

/// Elementary tensor x (x) y.
Vec tensor(const Vec& x, const Vec& y, std::size_t d2);

/// Applies f to every left leg (or right leg) of a tensor: f given by columns.
Vec map_left(const Vec& t, std::size_t d2, const std::vector<Vec>& f, std::size_t f_codim);
Vec map_right(const Vec& t, std::size_t d2, const std::vector<Vec>& f, std::size_t f_codim);

struct HopfAlgebraRep {
  Algebra alg;
  std::vector<Vec> comult;   // over pair_index(i, j, dim)
  std::vector<CycloNumber> counit;
  std::vector<Vec> antipode;  // columns
  std::vector<int> degree;    // filtration degree per basis element
  std::string name;

  std::size_t dim() const { return alg.dim; }
  Vec coproduct(const Vec& a) const;
  CycloNumber epsilon(const Vec& a) const;
  Vec antipode_of(const Vec& a) const;
  int top_degree() const;
};

/// Basis element y_1^{r_1}...y_s^{r_s} e_f of an algebra with a PBW basis.
struct PbwLabel {
  std::vector<int> r;
  int f = 0;
};

/// Left comodule algebra over a Hopf algebra: coaction[i] lives over
/// pair_index(h, j, dim A).
struct ComoduleAlgebraRep {
  Algebra alg;
  std::vector<Vec> coaction;
  std::shared_ptr<const HopfAlgebraRep> hopf;
  std::vector<int> degree;  // optional monomial grading, empty if unknown
  std::vector<PbwLabel> pbw;  // optional, empty if the basis has no PBW labels
  std::string name;

  std::size_t dim() const { return alg.dim; }
  Vec coact(const Vec& a) const;
};

/// Per-axiom outcome with a witness when it fails.
struct AxiomCheck {
  std::string name;
  bool pass = true;
  std::string witness;
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;
  bool ok() const;
  void add(std::string name, std::optional<std::string> failure);
  std::string summary() const;
};

std::string vec_to_string(const Vec& v, const std::vector<std::string>& labels);

AxiomReport verify_algebra(const Algebra& a);
AxiomReport verify_hopf_axioms(const HopfAlgebraRep& h);
/// Coassociativity, counit, coaction is an algebra map, plus associativity.
AxiomReport verify_comodule_algebra(const ComoduleAlgebraRep& a);

/// Multiply checking basis dimension; DimensionMismatch on bad input.
Vec multiply(const HopfAlgebraRep& h, const Vec& a, const Vec& b);
Vec coproduct(const HopfAlgebraRep& h, const Vec& a);

/// Group algebra k[G] with Delta(g) = g (x) g; degenerate theta = 0 case.
HopfAlgebraRep group_algebra(const class AbelianGroup& g);

/// Antipode as the convolution inverse of the identity, by a linear solve.
/// Returns nullopt when no solution exists.
std::optional<std::vector<Vec>> solve_antipode(const Algebra& alg, const std::vector<Vec>& comult,
                                               const std::vector<CycloNumber>& counit);

/// Inverse of a square matrix given by columns; nullopt if singular.
std::optional<std::vector<Vec>> invert_columns(const std::vector<Vec>& cols, std::size_t n);

/// Dense column of a unit vector.
inline Vec basis_vec(std::size_t i) { return Vec::unit(i); }

bool is_index_in_range(const Vec& v, std::size_t dim);

}  // namespace qlsmodcat
