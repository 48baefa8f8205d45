#include "doctest.h"
#include "qlsmodcat/classification.hpp"
#include "qlsmodcat/errors.hpp"
#include "qlsmodcat/filtration.hpp"
#include "qlsmodcat/structure.hpp"
#include "support.hpp"

using namespace qlsmodcat;
using testsupport::coordinate_datum;

namespace {

const std::vector<CycloNumber> kSample{CycloNumber(0L), CycloNumber(1L)};

std::size_t expected_dim(const QlsContext& ctx, const ModCatDatum& m) {
  const auto info = analyze_W(ctx, m.F(), m.W);
  std::size_t n = static_cast<std::size_t>(m.F().size());
  for (int h : info.height) n *= static_cast<std::size_t>(h);
  return n;
}

// The algebra kZ2 with lambda(a) = 1 (x) a over Sweedler's U.
ComoduleAlgebraRep trivial_coaction_control(const std::shared_ptr<const HopfAlgebraRep>& U) {
  ComoduleAlgebraRep a;
  a.alg = group_algebra(AbelianGroup({2})).alg;
  a.hopf = U;
  for (std::size_t i = 0; i < a.dim(); ++i) a.coaction.push_back(tensor(U->alg.unit, Vec::unit(i), a.dim()));
  a.name = "kZ2 with trivial coaction";
  return a;
}

}  // namespace

TEST_CASE("dimension law on every enumerated datum") {
  std::size_t seen = 0;
  for (const auto& d : {fixtures::sweedler(), fixtures::clifford(), fixtures::z4_minus_one(), fixtures::z2z2_pair(),
                        fixtures::z4_order_four()}) {
    const auto ctx = make_context(d);
    for (const auto& m : enumerate_modcat_data(d, kSample)) {
      const auto A = build_A(*ctx, m);
      CHECK(A.dim() == expected_dim(*ctx, m));
      ++seen;
    }
  }
  CHECK(seen >= 10);
}

TEST_CASE("Sweedler representatives: dimensions and Loewy layers") {
  const QlsDatum d = fixtures::sweedler();
  const auto ctx = make_context(d);
  const Subgroup one = trivial_subgroup(d.group()), all = whole_group(d.group());
  CHECK(build_A(*ctx, coordinate_datum(TwoCocycle::trivial(one), {})).dim() == 1);
  CHECK(build_A(*ctx, coordinate_datum(TwoCocycle::trivial(one), {0})).dim() == 2);
  CHECK(build_A(*ctx, coordinate_datum(TwoCocycle::trivial(all), {})).dim() == 2);
  const auto A = build_A(*ctx, coordinate_datum(TwoCocycle::trivial(all), {0}));
  CHECK(A.dim() == 4);
  CHECK(loewy_filtration(A).dims() == std::vector<std::size_t>{2, 4});
}

TEST_CASE("comodule algebra axioms, coinvariants and Galois map") {
  for (const auto& d : {fixtures::sweedler(), fixtures::clifford(), fixtures::z2z2_pair()}) {
    const auto ctx = make_context(d);
    for (const auto& m : enumerate_modcat_data(d, kSample)) {
      const auto A = build_A(*ctx, m);
      INFO(d.group().to_string() << " " << W_to_string(m.W) << " " << params_to_string(m));
      CHECK(verify_comodule_algebra(A).ok());
      CHECK(coinvariants(A).size() == 1);
      const auto g = galois_map(A);
      const bool full = m.F().size() == d.group().order() && m.W.size() == static_cast<std::size_t>(d.theta());
      CHECK(g.bijective() == full);
      if (!full) CHECK(g.rank < g.rows);
    }
  }
}

TEST_CASE("the trivial coaction is reducible with a witness") {
  const auto ctx = make_context(fixtures::sweedler());
  const auto a = trivial_coaction_control(ctx->U);
  CHECK(verify_comodule_algebra(a).ok());
  CHECK(coinvariants(a).size() == 2);
  const auto s = check_simplicity(a);
  CHECK(s.verdict == Simplicity::Reducible);
  REQUIRE_FALSE(s.witness.empty());
  CHECK(s.witness.size() < a.dim());
  // The witness is a right ideal.
  Echelon<CycloNumber> span;
  for (const auto& v : s.witness) span.insert(v);
  for (const auto& v : s.witness)
    for (std::size_t b = 0; b < a.dim(); ++b) CHECK(span.contains(a.alg.multiply(v, Vec::unit(b))));
}

TEST_CASE("compatibility conditions on xi and alpha") {
  const QlsDatum d = fixtures::z4_minus_one();
  const auto ctx = make_context(d);
  // g^2 != 1, so x^2 = xi e_{g^2} needs g^2 in F.
  ModCatDatum m = coordinate_datum(TwoCocycle::trivial(trivial_subgroup(d.group())), {0});
  m.xi[0] = CycloNumber(1L);
  const auto r = validate_modcat_datum(*ctx, m);
  REQUIRE_FALSE(r.ok);
  CHECK(r.violations.front().condition == "xi-support");
  CHECK_THROWS_AS(build_A(*ctx, m), Error);

  const QlsDatum c = fixtures::clifford();
  const auto cctx = make_context(c);
  ModCatDatum ok = coordinate_datum(TwoCocycle::trivial(trivial_subgroup(c.group())), {0, 1});
  ok.alpha[{0, 1}] = CycloNumber(2L);
  CHECK(validate_modcat_datum(*cctx, ok).ok);
}

TEST_CASE("free positions do not depend on the cocycle representative") {
  const QlsDatum d = fixtures::z2z2_pair();
  const auto ctx = make_context(d);
  const Subgroup F = whole_group(d.group());
  const auto W = coordinate_subspace({0, 1});
  for (const auto& psi : cocycle_classes(F)) {
    const auto base = free_positions(*ctx, psi, W);
    const TwoCocycle moved =
        multiply_by_coboundary(psi, {CycloNumber(1L), CycloNumber(2L), CycloNumber(-3L), root_of_unity(4, 1)});
    CHECK(moved.class_tag() == psi.class_tag());
    CHECK(free_positions(*ctx, moved, W) == base);
  }
}

TEST_CASE("K(W, psi, F) matches A with xi = alpha = 0") {
  const QlsDatum d = fixtures::clifford();
  const auto ctx = make_context(d);
  for (const auto& F : enumerate_subgroups(d.group())) {
    const ModCatDatum m = coordinate_datum(TwoCocycle::trivial(F), {0, 1});
    const auto A = build_A(*ctx, m);
    const auto K = build_K(*ctx, m.W, m.psi);
    CHECK(K.dim() == A.dim());
    CHECK_FALSE(check_isomorphism(A, K, generator_map_to_K(A, K, 2)));
  }
}
