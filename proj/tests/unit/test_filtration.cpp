#include "doctest.h"
#include "qlsmodcat/classification.hpp"
#include "qlsmodcat/errors.hpp"
#include "qlsmodcat/filtration.hpp"
#include "support.hpp"

using namespace qlsmodcat;

namespace {

// Oracle: the layer A_n must be spanned by basis monomials of total degree <= n.
std::vector<std::size_t> monomial_counts(const ComoduleAlgebraRep& a) {
  int top = 0;
  for (const auto& r : a.pbw) {
    int deg = 0;
    for (int e : r.r) deg += e;
    top = std::max(top, deg);
  }
  std::vector<std::size_t> counts(top + 1, 0);
  for (const auto& r : a.pbw) {
    int deg = 0;
    for (int e : r.r) deg += e;
    for (int n = deg; n <= top; ++n) ++counts[n];
  }
  return counts;
}

}  // namespace

TEST_CASE("Loewy filtration equals the monomial filtration") {
  for (const auto& d : {fixtures::sweedler(), fixtures::clifford(), fixtures::z2z2_pair(), fixtures::z4_order_four()}) {
    const auto ctx = make_context(d);
    for (const auto& m : enumerate_modcat_data(d, {CycloNumber(0L), CycloNumber(1L)})) {
      const auto A = build_A(*ctx, m);
      INFO(d.group().to_string() << " " << W_to_string(m.W) << " " << params_to_string(m));
      const auto loewy = loewy_filtration(A);
      CHECK_FALSE(compare_filtrations(loewy, monomial_filtration(A)));
      CHECK(loewy.dims() == monomial_counts(A));
      CHECK_FALSE(check_multiplicative(A.alg, loewy));
      CHECK_NOTHROW(check_graded_model(*ctx, m, associated_graded(A, loewy)));
    }
  }
}

TEST_CASE("the Loewy series of U itself is the degree filtration") {
  const auto ctx = make_context(fixtures::clifford());
  const auto A = build_A(*ctx, testsupport::full_datum(fixtures::clifford()));
  CHECK(loewy_filtration(A).dims() == std::vector<std::size_t>{2, 6, 8});
}

TEST_CASE("compare_filtrations reports the first differing layer") {
  FiltrationRep a, b;
  a.layers = {{Vec::unit(0)}, {Vec::unit(0), Vec::unit(1)}};
  b.layers = {{Vec::unit(1)}, {Vec::unit(0), Vec::unit(1)}};
  CHECK(compare_filtrations(a, b));
  CHECK_FALSE(compare_filtrations(a, a));
}

TEST_CASE("the graded model check rejects a deformed algebra used as gr") {
  const QlsDatum d = fixtures::sweedler();
  const auto ctx = make_context(d);
  ModCatDatum m = testsupport::coordinate_datum(TwoCocycle::trivial(trivial_subgroup(d.group())), {0});
  m.xi[0] = CycloNumber(1L);
  const auto A = build_A(*ctx, m);  // x^2 = 1, not graded
  CHECK_THROWS_AS(check_graded_model(*ctx, m, A), Error);
}
