#include "doctest.h"
#include "qlsmodcat/classification.hpp"
#include "qlsmodcat/errors.hpp"
#include "qlsmodcat/generation.hpp"
#include "support.hpp"

using namespace qlsmodcat;

TEST_CASE("coordinate flags are generated in degree one") {
  for (const auto& d : {fixtures::sweedler(), fixtures::clifford(), fixtures::z2z2_pair(), fixtures::z4_order_four(),
                        fixtures::exterior_z2z2()}) {
    const auto ctx = make_context(d);
    for (const auto& W : coordinate_subcomodules(d)) {
      const auto r = check_degree_one_generation(*ctx, flag_of_subalgebra(*ctx, W));
      CHECK(r.pass);
      CHECK(r.flag_dims == r.generated_dims);
    }
  }
}

TEST_CASE("the Clifford diagonal is generated in degree one") {
  const auto ctx = make_context(fixtures::clifford());
  const std::vector<Vec> W{Vec::unit(0) + Vec::unit(1)};
  const auto r = check_degree_one_generation(*ctx, flag_of_subalgebra(*ctx, W));
  CHECK(r.pass);
  // (x1 + x2)^2 = 0 since x1 x2 = -x2 x1.
  CHECK(r.flag_dims == std::vector<std::size_t>{1, 1});
}

TEST_CASE("a flag violating the coproduct hypothesis is rejected") {
  const auto ctx = make_context(fixtures::clifford());
  GradedFlag K;
  K.layers = {{ctx->U->alg.unit}, {ctx->x(0)}, {ctx->U->alg.multiply(ctx->x(0), ctx->x(1))}};
  try {
    check_degree_one_generation(*ctx, K);
    FAIL("expected HypothesisViolated");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::HypothesisViolated);
    CHECK(std::string(e.what()).find("(3)") != std::string::npos);
  }
}

TEST_CASE("a flag outside the quantum linear space is rejected") {
  const auto ctx = make_context(fixtures::sweedler());
  GradedFlag K;
  K.layers = {{ctx->U->alg.unit}, {ctx->group(1)}};
  CHECK_THROWS_AS(check_degree_one_generation(*ctx, K), Error);
}
