#include "doctest.h"
#include "qlsmodcat/classification.hpp"
#include "qlsmodcat/deformation.hpp"
#include "qlsmodcat/errors.hpp"
#include "qlsmodcat/structure.hpp"
#include "support.hpp"

using namespace qlsmodcat;
using testsupport::full_datum;

namespace {

void require_ok(const AxiomReport& r) {
  INFO(r.summary());
  CHECK(r.ok());
}

// a -> S(a_(-1)) (x) a_(0) in the cotensor basis; the transport of A along a
// trivial lifting is isomorphic to A through this map.
std::optional<std::vector<Vec>> antipode_map(const ComoduleAlgebraRep& A, const std::vector<Vec>& embedding) {
  const std::size_t na = A.dim();
  TrackedEchelon<CycloNumber> e;
  for (const auto& v : embedding) e.insert(v);
  std::vector<Vec> phi;
  for (std::size_t i = 0; i < na; ++i) {
    Accumulator<CycloNumber> acc;
    for (const auto& [p, c] : A.coaction[i])
      for (const auto& [s, t] : A.hopf->antipode[p / na]) acc.add(s * na + p % na, c * t);
    auto x = e.coordinates(acc.finish());
    if (!x) return std::nullopt;
    phi.push_back(std::move(*x));
  }
  return phi;
}

}  // namespace

TEST_CASE("biGalois objects of the liftings") {
  const std::vector<std::pair<QlsDatum, LiftingDatum>> cases{
      {fixtures::z4_minus_one(), fixtures::z4_mu_lifting()},
      {fixtures::z2z2_pair(), fixtures::z2z2_lambda_lifting()},
      {fixtures::sweedler(), LiftingDatum::trivial(1)}};
  for (const auto& [d, l] : cases) {
    const auto B = build_bigalois(d, l);
    CHECK(B.dim() == B.right_hopf->dim());
    require_ok(verify_bigalois(B));
    require_ok(verify_bigalois(opposite_bigalois(B)));
  }
}

TEST_CASE("transport keeps dimension, simplicity and trivial coinvariants") {
  const std::vector<std::pair<QlsDatum, LiftingDatum>> cases{{fixtures::z4_minus_one(), fixtures::z4_mu_lifting()},
                                                             {fixtures::z2z2_pair(), fixtures::z2z2_lambda_lifting()}};
  for (const auto& [d, l] : cases)
    for (const auto& m : enumerate_modcat_data(d, {CycloNumber(0L), CycloNumber(1L)})) {
      INFO(d.group().to_string() << " " << W_to_string(m.W) << " " << params_to_string(m));
      const auto T = transport(d, l, m);
      require_ok(T.checks);
      CHECK(coinvariants(T.algebra).size() == 1);
      CHECK(check_simplicity(T.algebra, d.exponent()).verdict == Simplicity::SplitSimple);
    }
}

TEST_CASE("transport along a trivial lifting reproduces A") {
  for (const auto& d : {fixtures::sweedler(), fixtures::clifford(), fixtures::z2z2_pair()}) {
    const auto ctx = make_context(d);
    for (const auto& m : enumerate_modcat_data(d, {CycloNumber(0L), CycloNumber(1L)})) {
      const auto A = build_A(*ctx, m);
      const auto T = transport(d, LiftingDatum::trivial(d.theta()), m);
      const auto phi = antipode_map(A, T.embedding);
      REQUIRE(phi);
      CHECK_FALSE(check_isomorphism(A, T.algebra, *phi));
    }
  }
}

TEST_CASE("group cocycles on Z2 x Z2") {
  const QlsDatum d = fixtures::z2z2_pair();
  const auto H = std::make_shared<HopfAlgebraRep>(build_bosonization(d));
  const auto classes = cocycle_classes(whole_group(d.group()));
  REQUIRE(classes.size() == 2);
  const HopfCocycle sigma = group_hopf_cocycle(*H, classes.back());
  require_ok(validate_hopf_cocycle(*H, sigma));

  SUBCASE("the inverse is the solved one") {
    HopfCocycle s = sigma;
    REQUIRE(solve_cocycle_inverse(*H, s));
    CHECK(s.inverse == sigma.inverse);
  }
  SUBCASE("H^sigma and H_sigma") {
    const auto Hs = std::make_shared<HopfAlgebraRep>(deform_hopf(*H, sigma));
    require_ok(verify_hopf_axioms(*Hs));
    CHECK(Hs->comult == H->comult);
    require_ok(verify_bigalois(cocycle_bigalois(H, sigma)));
  }
  SUBCASE("H_sigma box A is A_sigma") {
    const auto Bs = cocycle_bigalois(H, sigma);
    const auto A = build_A(d, full_datum(d));
    const auto As = deform_comodule_algebra(A, sigma, Bs.alg.hopf);
    require_ok(verify_comodule_algebra(As));
    const auto C = cotensor(Bs, A);
    CHECK(C.alg.dim() == A.dim());
    const auto phi = coaction_into_cotensor(C, A);
    REQUIRE(phi);
    CHECK_FALSE(check_isomorphism(As, C.alg, *phi));
    CHECK(check_simplicity(As, 2).verdict == Simplicity::SplitSimple);
  }
  SUBCASE("a perturbed cocycle fails with a witness") {
    HopfCocycle bad = sigma;
    bad.table[5 * H->dim() + 6] = CycloNumber(3L);
    const auto r = validate_hopf_cocycle(*H, bad);
    CHECK_FALSE(r.ok());
    for (const auto& c : r.checks)
      if (!c.pass) CHECK_FALSE(c.witness.empty());
  }
}

TEST_CASE("the trivial cocycle changes nothing") {
  const auto H = std::make_shared<HopfAlgebraRep>(build_bosonization(fixtures::sweedler()));
  const HopfCocycle e = trivial_hopf_cocycle(*H);
  require_ok(validate_hopf_cocycle(*H, e));
  const auto Hs = deform_hopf(*H, e);
  CHECK(Hs.alg.mult == H->alg.mult);
  const auto R = regular_comodule_algebra(H);
  CHECK(deform_comodule_algebra(R, e).alg.mult == R.alg.mult);
  require_ok(verify_bigalois(regular_bigalois(H)));
}

TEST_CASE("coideal subalgebra deformation on the group part") {
  // K = kGamma inside U: a.b = tau(a_2, b_2) a_1 b_1 = psi(g, h) gh.
  const QlsDatum d = fixtures::z2z2_pair();
  const auto H = std::make_shared<HopfAlgebraRep>(build_bosonization(d));
  const TwoCocycle psi = cocycle_classes(whole_group(d.group())).back();
  const HopfCocycle tau = group_hopf_cocycle(*H, psi);
  std::vector<Vec> K;
  for (int g = 0; g < d.group().order(); ++g) K.push_back(Vec::unit(static_cast<std::size_t>(g)));
  const auto A = deform_coideal_subalgebra(H, K, tau);
  require_ok(verify_comodule_algebra(A));
  const Subgroup F = whole_group(d.group());
  for (int g = 0; g < 4; ++g)
    for (int h = 0; h < 4; ++h) {
      const Vec expect = cocycle_eval(psi, g, h) * Vec::unit(static_cast<std::size_t>(d.group().mul(g, h)));
      CHECK(A.alg.product(g, h) == expect);
    }
  // span{x_1} is not a subalgebra-closed coideal for this product.
  const auto ctx = make_context(d);
  CHECK_THROWS_AS(deform_coideal_subalgebra(H, {H->alg.unit, ctx->x(0), ctx->x(1)}, tau), Error);
}
