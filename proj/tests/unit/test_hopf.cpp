#include "doctest.h"
#include "qlsmodcat/errors.hpp"
#include "qlsmodcat/pbw.hpp"
#include "support.hpp"

using namespace qlsmodcat;

namespace {

std::size_t expected_dim(const QlsDatum& d) {
  std::size_t n = static_cast<std::size_t>(d.group().order());
  for (int N : d.Ns()) n *= static_cast<std::size_t>(N);
  return n;
}

void require_axioms(const HopfAlgebraRep& h) {
  const auto r = verify_hopf_axioms(h);
  INFO(h.name << ": " << r.summary());
  CHECK(r.ok());
}

Vec pow(const HopfAlgebraRep& h, const Vec& v, int n) {
  Vec p = h.alg.unit;
  for (int i = 0; i < n; ++i) p = multiply(h, p, v);
  return p;
}

}  // namespace

TEST_CASE("group algebras are Hopf algebras") {
  for (const auto& orders : {std::vector<int>{2}, std::vector<int>{4}, std::vector<int>{2, 2}}) {
    const auto h = group_algebra(AbelianGroup(orders));
    CHECK(h.dim() == static_cast<std::size_t>(AbelianGroup(orders).order()));
    require_axioms(h);
  }
}

TEST_CASE("bosonizations satisfy the Hopf axioms and the dimension law") {
  for (const auto& d : {fixtures::sweedler(), fixtures::clifford(), fixtures::exterior_z2z2(), fixtures::z4_minus_one(),
                        fixtures::z2z2_pair(), fixtures::z4_order_four()}) {
    const auto U = build_bosonization(d);
    CHECK(U.dim() == expected_dim(d));
    require_axioms(U);
    CHECK_FALSE(check_coradical_grading(U));
  }
}

TEST_CASE("liftings satisfy the Hopf axioms and keep the graded dimensions") {
  const std::vector<std::pair<QlsDatum, LiftingDatum>> cases{{fixtures::z4_minus_one(), fixtures::z4_mu_lifting()},
                                                             {fixtures::z2z2_pair(), fixtures::z2z2_lambda_lifting()}};
  for (const auto& [d, l] : cases) {
    const auto H = build_lifting(d, l);
    CHECK(H.dim() == expected_dim(d));
    require_axioms(H);
    CHECK_FALSE(check_coradical_grading(H, false));
    // The coalgebra is that of U; only the product is deformed.
    const auto U = build_bosonization(d);
    CHECK(H.comult == U.comult);
    CHECK(H.alg.mult != U.alg.mult);
  }
}

TEST_CASE("Sweedler relations hold in U") {
  const auto ctx = make_context(fixtures::sweedler());
  const HopfAlgebraRep& U = *ctx->U;
  const Vec x = ctx->x(0), g = ctx->group(1);
  CHECK(multiply(U, g, g) == U.alg.unit);
  CHECK(multiply(U, x, x).empty());
  CHECK(multiply(U, g, x) == CycloNumber(-1L) * multiply(U, x, g));
  CHECK(U.antipode_of(x) == CycloNumber(-1L) * multiply(U, g, x));
  CHECK(U.coproduct(x) == tensor(x, U.alg.unit, U.dim()) + tensor(g, x, U.dim()));
  CHECK(U.epsilon(x).is_zero());
}

TEST_CASE("lifted relations hold in H") {
  SUBCASE("a^2 = mu (1 - g^2)") {
    const QlsDatum d = fixtures::z4_minus_one();
    const auto ctx = make_context(d);
    const auto H = build_lifting(d, fixtures::z4_mu_lifting());
    const Vec a = ctx->x(0);
    CHECK(multiply(H, a, a) == H.alg.unit - ctx->group(2));
    CHECK(pow(H, ctx->group(1), 4) == H.alg.unit);
  }
  SUBCASE("a_1 a_2 = q_12 a_2 a_1 + lambda (1 - g_1 g_2)") {
    const QlsDatum d = fixtures::z2z2_pair();
    const auto ctx = make_context(d);
    const auto H = build_lifting(d, fixtures::z2z2_lambda_lifting());
    const Vec a1 = ctx->x(0), a2 = ctx->x(1);
    const int g12 = d.group().mul(d.g(0), d.g(1));
    CHECK(multiply(H, a1, a2) == CycloNumber(-1L) * multiply(H, a2, a1) + H.alg.unit - ctx->group(g12));
  }
}

TEST_CASE("a corrupted coproduct is caught with a witness") {
  auto U = build_bosonization(fixtures::sweedler());
  const auto ctx = make_context(fixtures::sweedler());
  const std::size_t x = ctx->index({1}, 0);
  U.comult[x] = tensor(ctx->x(0), U.alg.unit, U.dim());  // drop g (x) x
  const auto r = verify_hopf_axioms(U);
  CHECK_FALSE(r.ok());
  bool multiplicative_failed = false;
  for (const auto& c : r.checks)
    if (!c.pass) {
      CHECK_FALSE(c.witness.empty());
      if (c.name == "comultiplication is multiplicative" || c.name == "antipode") multiplicative_failed = true;
    }
  CHECK(multiplicative_failed);
}

TEST_CASE("inconsistent PBW data raise ConfluenceFailure") {
  // e_g y = -y e_g together with y^2 = e_g cannot hold: y(yy) = y g but (yy)y = g y = -y g.
  PbwPresentation p;
  p.init(2, {0, 1, 1, 0}, {"1", "g"}, 1);
  p.gen_names = {"y"};
  p.height = {2};
  p.weight = {{CycloNumber(1L), CycloNumber(-1L)}};
  p.power = {Vec::unit(1)};
  CHECK_THROWS_AS(build_pbw(p), Error);
  try {
    build_pbw(p);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ConfluenceFailure);
  }
}

TEST_CASE("leftmost and rightmost reduction agree on a consistent presentation") {
  const auto pres = lifting_presentation(fixtures::z2z2_pair(), fixtures::z2z2_lambda_lifting(), "a");
  const PbwAlgebra a = build_pbw(pres);
  CHECK_FALSE(a.confluence_check(5));
  CHECK(a.normal_form({0, 1, 0}, true) == a.normal_form({0, 1, 0}, false));
}

TEST_CASE("the q-matrix of a datum") {
  const auto qm = compute_qmatrix(fixtures::z2z2_pair());
  CHECK(qm.consistent);
  CHECK(qm.support.size() == 2);
}
