#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qlsmodcat/algebra.hpp"

namespace qlsmodcat {

/// Linear operator on k^n given by its columns.
using Operator = std::vector<Vec>;

/// Basis of {a : lambda(a) = 1 (x) a}.
std::vector<Vec> coinvariants(const ComoduleAlgebraRep& a);

struct GaloisResult {
  std::size_t rows = 0;  // dim H * dim A
  std::size_t cols = 0;  // dim A * dim A
  std::size_t rank = 0;
  bool bijective() const { return rows == cols && rank == rows; }
};

/// beta(a (x) b) = a_(-1) (x) a_(0) b.
GaloisResult galois_map(const ComoduleAlgebraRep& a);
/// Columns of beta, indexed a * dim A + b, rows h * dim A + c.
std::vector<Vec> galois_columns(const ComoduleAlgebraRep& a);

/// Smallest subspace containing v and stable under every operator.
std::vector<Vec> spin(const std::vector<Operator>& ops, const Vec& v);

/// Search for a proper nonzero subspace stable under every operator, from
/// eigenvectors of the operators and of pseudo-random combinations, for the
/// operators and their transposes. Eigenvalue candidates are 0 and
/// s * zeta_L^k with s in {1, -1, 2, -2, 1/2, -1/2}.
std::optional<std::vector<Vec>> find_invariant_subspace(const std::vector<Operator>& ops, std::size_t n,
                                                        int conductor, std::uint32_t seed);

/// Dimension of the algebra of operators generated by ops (with identity).
std::size_t operator_algebra_dim(const std::vector<Operator>& ops, std::size_t n);

enum class Simplicity { SplitSimple, Reducible, Undecided };
std::string to_string(Simplicity s);

struct SimplicityResult {
  Simplicity verdict = Simplicity::Undecided;
  std::size_t operator_span = 0;  // dim of span{R_b T_phi}
  std::vector<Vec> witness;       // H-costable right ideal when reducible
  std::string note;
};

/// Right H-simplicity: no proper nonzero right ideal I with lambda(I) ⊆ H (x) I.
SimplicityResult check_simplicity(const ComoduleAlgebraRep& a, int conductor = 0, std::uint32_t seed = 1);

struct SimpleModulesResult {
  std::size_t dim_radical = 0;
  std::size_t dim_semisimple = 0;
  bool split = false;
  std::vector<int> blocks;  // sizes d of the matrix blocks M_d, ascending
  std::string advice;
};

/// Jacobson radical from the trace form, then the simple quotient blocks of
/// A/J when Q(zeta_L) splits them.
SimpleModulesResult simple_modules(const Algebra& a, int conductor = 0, std::uint32_t seed = 1);

/// lcm of the conductors of the structure constants.
int structure_conductor(const Algebra& a);

}  // namespace qlsmodcat
