#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qlsmodcat/comodule_algebra.hpp"

namespace qlsmodcat {

/// Bilinear form sigma on a Hopf algebra H, tabulated on basis pairs
/// (i * dim + j), with its convolution inverse.
struct HopfCocycle {
  std::size_t dim = 0;
  std::vector<CycloNumber> table;
  std::vector<CycloNumber> inverse;

  const CycloNumber& at(std::size_t i, std::size_t j) const { return table[i * dim + j]; }
  const CycloNumber& inv(std::size_t i, std::size_t j) const { return inverse[i * dim + j]; }
};

/// sigma = eps (x) eps.
HopfCocycle trivial_hopf_cocycle(const HopfAlgebraRep& h);

/// sigma(x # g, y # h) = eps(x) eps(y) psi(g, h) for H with basis index
/// m * |Gamma| + g (bosonizations, liftings, group algebras); psi on all of Gamma.
HopfCocycle group_hopf_cocycle(const HopfAlgebraRep& h, const TwoCocycle& psi);

/// Fills sigma.inverse by solving sigma * tau = eps (x) eps; false if singular.
bool solve_cocycle_inverse(const HopfAlgebraRep& h, HopfCocycle& sigma);

/// Exhaustive check of the cocycle identity on basis triples, unitality and
/// the convolution inverse; failures carry a witness.
AxiomReport validate_hopf_cocycle(const HopfAlgebraRep& h, const HopfCocycle& sigma);

/// H^sigma: x.y = sigma(x1,y1) sigma^{-1}(x3,y3) x2 y2 on the same coalgebra.
HopfAlgebraRep deform_hopf(const HopfAlgebraRep& h, const HopfCocycle& sigma);

/// K_sigma: a.b = sigma(a_(-1), b_(-1)) a_(0) b_(0), a left comodule algebra
/// over H^sigma (passed in, or computed).
ComoduleAlgebraRep deform_comodule_algebra(const ComoduleAlgebraRep& k, const HopfCocycle& sigma,
                                           std::shared_ptr<const HopfAlgebraRep> h_sigma = nullptr);

/// For a left coideal subalgebra K of H (basis as vectors of H) and a
/// compatible tau: a.b = tau(a_2, b_2) a_1 b_1, which must stay inside K
/// (NotClosed otherwise). Left coaction over H is the restricted coproduct.
ComoduleAlgebraRep deform_coideal_subalgebra(std::shared_ptr<const HopfAlgebraRep> h, const std::vector<Vec>& k,
                                             const HopfCocycle& tau);

/// H itself with lambda = Delta.
ComoduleAlgebraRep regular_comodule_algebra(std::shared_ptr<const HopfAlgebraRep> h);

/// An (L, H)-biGalois object: left L-coaction in alg, right H-coaction in
/// right_coaction[i] over pair_index(b, h, dim H).
struct BiGaloisRep {
  ComoduleAlgebraRep alg;
  std::vector<Vec> right_coaction;
  std::shared_ptr<const HopfAlgebraRep> right_hopf;

  std::size_t dim() const { return alg.dim(); }
  Vec right_coact(const Vec& b) const;
};

/// H as an (H, H)-biGalois object.
BiGaloisRep regular_bigalois(std::shared_ptr<const HopfAlgebraRep> h);

/// H_sigma as an (H^sigma, H)-biGalois object.
BiGaloisRep cocycle_bigalois(std::shared_ptr<const HopfAlgebraRep> h, const HopfCocycle& sigma);

/// B = A(V, Gamma, 1, -mu, -lambda) with its left U-coaction and
/// rho(e_g) = e_g (x) g, rho(v_i) = v_i (x) 1 + e_{g_i} (x) a_i into H.
BiGaloisRep build_bigalois(const QlsDatum& d, const LiftingDatum& l);

/// Both coactions are counital coassociative algebra maps, they commute, and
/// both Galois maps are bijective.
AxiomReport verify_bigalois(const BiGaloisRep& b);

/// B^op as an (H, L)-biGalois object, with coactions b_(0) (x) S_L^{-1}(b_(-1))
/// and S_H^{-1}(b_(1)) (x) b_(0).
BiGaloisRep opposite_bigalois(const BiGaloisRep& b);

/// B box_H A for an (L, H)-biGalois B and a left H-comodule algebra A,
/// a left L-comodule algebra. embedding[i] is the i-th basis element as a
/// vector of B (x) A.
struct CotensorResult {
  ComoduleAlgebraRep alg;
  std::vector<Vec> embedding;
};

CotensorResult cotensor(const BiGaloisRep& b, const ComoduleAlgebraRep& a);

/// Columns of a -> a_(-1) (x) a_(0) in the cotensor basis of
/// B box_H A for B = H_sigma; nullopt when the image leaves the cotensor.
std::optional<std::vector<Vec>> coaction_into_cotensor(const CotensorResult& c, const ComoduleAlgebraRep& a);

struct TransportResult {
  ComoduleAlgebraRep algebra;  // over H = A(Gamma, Q, D)
  std::vector<Vec> embedding;
  AxiomReport checks;
};

/// A(W, F, psi, xi, alpha) over U carried to H through the biGalois object
/// of the lifting; verifies the comodule algebra axioms over H.
TransportResult transport(const QlsDatum& d, const LiftingDatum& l, const ModCatDatum& m);

}  // namespace qlsmodcat
