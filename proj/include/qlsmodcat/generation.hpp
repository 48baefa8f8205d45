#pragma once

#include <string>
#include <vector>

#include "qlsmodcat/comodule_algebra.hpp"

namespace qlsmodcat {

/// K = K(0) + K(1) + ... inside the quantum linear space Q ⊆ U (the span of
/// the monomials x^r # 1); each layer is a basis of U-vectors.
struct GradedFlag {
  std::vector<std::vector<Vec>> layers;
};

struct GenerationResult {
  bool pass = false;
  std::vector<std::size_t> flag_dims;       // dim K(n)
  std::vector<std::size_t> generated_dims;  // dim of the degree-n part generated by K(1)
};

/// Verifies that K is a graded subalgebra and hypotheses (1) K(i) ⊆ Q(i),
/// (2) K(1) is a Gamma-subcomodule of V, (3) Delta(K(n)) ⊆ sum U(i) (x) K(n-i);
/// HypothesisViolated names the failing one. Then compares K with the
/// subalgebra generated by K(1), degree by degree.
GenerationResult check_degree_one_generation(const QlsContext& ctx, const GradedFlag& K);

/// The flag of K(W): layers of the subalgebra of U generated by W.
GradedFlag flag_of_subalgebra(const QlsContext& ctx, const std::vector<Vec>& W);

}  // namespace qlsmodcat
