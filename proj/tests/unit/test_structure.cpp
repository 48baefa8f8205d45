#include <numeric>

#include "doctest.h"
#include "qlsmodcat/classification.hpp"
#include "qlsmodcat/structure.hpp"
#include "support.hpp"

using namespace qlsmodcat;
using testsupport::coordinate_datum;

namespace {

ModCatDatum clifford_datum(const Subgroup& F, long xi1, long xi2, long alpha) {
  ModCatDatum m = coordinate_datum(TwoCocycle::trivial(F), {0, 1});
  m.xi = {CycloNumber(xi1), CycloNumber(xi2)};
  m.alpha[{0, 1}] = CycloNumber(alpha);
  return m;
}

// Invariant of a split Wedderburn decomposition.
void check_dimension_count(const SimpleModulesResult& s, std::size_t dim) {
  std::size_t sum = s.dim_radical;
  for (int b : s.blocks) sum += static_cast<std::size_t>(b * b);
  CHECK(sum == dim);
  CHECK(s.dim_semisimple + s.dim_radical == dim);
}

}  // namespace

TEST_CASE("simple modules of small algebras") {
  const QlsDatum d = fixtures::clifford();
  const auto ctx = make_context(d);
  SUBCASE("nondegenerate form on F = 1 gives M2") {
    const auto A = build_A(*ctx, clifford_datum(trivial_subgroup(d.group()), 1, 1, 0));
    const auto s = simple_modules(A.alg, 2);
    CHECK(s.split);
    CHECK(s.dim_radical == 0);
    CHECK(s.blocks == std::vector<int>{2});
  }
  SUBCASE("exterior algebra is local") {
    const auto A = build_A(*ctx, clifford_datum(trivial_subgroup(d.group()), 0, 0, 0));
    const auto s = simple_modules(A.alg, 2);
    CHECK(s.dim_radical == 3);
    CHECK(s.blocks == std::vector<int>{1});
  }
  SUBCASE("splitting needs the right field") {
    // x^2 = y^2 = 1, xy + yx = 1 over kZ2: the blocks are defined over Q(sqrt(-3)).
    const auto A = build_A(*ctx, clifford_datum(whole_group(d.group()), 1, 1, 1));
    const auto small = simple_modules(A.alg, 2);
    CHECK_FALSE(small.split);
    CHECK_FALSE(small.advice.empty());
    const auto big = simple_modules(A.alg, 3);
    CHECK(big.split);
    CHECK(big.blocks == std::vector<int>{2, 2});
    check_dimension_count(big, A.dim());
  }
}

TEST_CASE("split Wedderburn counts on every Sweedler and Clifford datum") {
  for (const auto& d : {fixtures::sweedler(), fixtures::clifford()}) {
    const auto ctx = make_context(d);
    for (const auto& m : enumerate_modcat_data(d, {CycloNumber(0L), CycloNumber(1L)})) {
      const auto A = build_A(*ctx, m);
      const auto s = simple_modules(A.alg, 12);
      INFO(W_to_string(m.W) << " " << params_to_string(m));
      REQUIRE(s.split);
      check_dimension_count(s, A.dim());
    }
  }
}

TEST_CASE("every enumerated datum is right H-simple") {
  for (const auto& d : {fixtures::sweedler(), fixtures::clifford(), fixtures::z2z2_pair()}) {
    const auto ctx = make_context(d);
    for (const auto& m : enumerate_modcat_data(d, {CycloNumber(0L), CycloNumber(1L)})) {
      const auto A = build_A(*ctx, m);
      INFO(d.group().to_string() << " " << W_to_string(m.W) << " " << params_to_string(m));
      CHECK(check_simplicity(A, d.exponent()).verdict == Simplicity::SplitSimple);
    }
  }
}

TEST_CASE("invariant subspace search") {
  // Upper triangular 2x2 operator: span(e0) is stable.
  const Operator up{Vec::unit(0), Vec::unit(0) + Vec::unit(1)};
  const auto sub = find_invariant_subspace({up}, 2, 1, 7);
  REQUIRE(sub);
  CHECK(sub->size() == 1);
  // The swap together with diag(1, -1) generates M2: nothing stable.
  const Operator swap{Vec::unit(1), Vec::unit(0)};
  const Operator diag{Vec::unit(0), CycloNumber(-1L) * Vec::unit(1)};
  CHECK_FALSE(find_invariant_subspace({swap, diag}, 2, 1, 7));
  CHECK(operator_algebra_dim({swap, diag}, 2) == 4);
  CHECK(spin({swap}, Vec::unit(0)).size() == 2);
}
