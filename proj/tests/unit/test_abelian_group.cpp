#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "qlsmodcat/abelian_group.hpp"
#include "qlsmodcat/errors.hpp"

using namespace qlsmodcat;

namespace {

// Oracle: all subsets closed under multiplication that contain the identity.
std::size_t brute_force_subgroup_count(const AbelianGroup& g) {
  const int n = g.order();
  std::size_t count = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (!(mask & 1u)) continue;
    bool closed = true;
    for (int a = 0; a < n && closed; ++a)
      for (int b = 0; b < n && closed; ++b)
        if ((mask >> a & 1u) && (mask >> b & 1u) && !(mask >> g.mul(a, b) & 1u)) closed = false;
    if (closed) ++count;
  }
  return count;
}

// Oracle: normalized cocycles with values in mu_M (M = exponent of G), modulo
// those coboundaries d(mu) that are mu_M-valued. mu(a)^{ord a} is a product
// of values of d(mu), so mu ranging over mu_{M*M} reaches all of them.
std::size_t brute_force_h2(const AbelianGroup& g, int M) {
  const int n = g.order();
  std::vector<std::pair<int, int>> free;
  for (int a = 1; a < n; ++a)
    for (int b = 1; b < n; ++b) free.emplace_back(a, b);
  std::vector<int> t(static_cast<std::size_t>(n) * n, 0);
  std::set<std::vector<int>> cocycles;
  std::vector<int> digits(free.size(), 0);
  for (;;) {
    for (std::size_t p = 0; p < free.size(); ++p) t[free[p].first * n + free[p].second] = digits[p];
    bool ok = true;
    for (int a = 1; a < n && ok; ++a)
      for (int b = 1; b < n && ok; ++b)
        for (int c = 1; c < n && ok; ++c)
          ok = (t[a * n + b] + t[g.mul(a, b) * n + c]) % M == (t[b * n + c] + t[a * n + g.mul(b, c)]) % M;
    if (ok) cocycles.insert(t);
    int p = static_cast<int>(digits.size()) - 1;
    while (p >= 0 && ++digits[p] == M) digits[p--] = 0;
    if (p < 0) break;
  }
  std::set<std::vector<int>> boundaries;
  const int MM = M * M;
  std::vector<int> mu(n, 0);
  for (;;) {
    std::vector<int> d(static_cast<std::size_t>(n) * n);
    bool in_mu_M = true;
    for (int a = 0; a < n && in_mu_M; ++a)
      for (int b = 0; b < n && in_mu_M; ++b) {
        const int e = ((mu[a] + mu[b] - mu[g.mul(a, b)]) % MM + MM) % MM;
        in_mu_M = e % M == 0;
        d[a * n + b] = e / M;
      }
    if (in_mu_M) boundaries.insert(d);
    int p = n - 1;
    while (p >= 1 && ++mu[p] == MM) mu[p--] = 0;
    if (p < 1) break;
  }
  return cocycles.size() / boundaries.size();
}

}  // namespace

TEST_CASE("evaluate_character") {
  const AbelianGroup z2({2}), z4({4});
  CHECK(evaluate_character(Character::trivial(z4), GroupElement(z4, {3})).is_one());
  CHECK(evaluate_character(Character(z2, {1}), GroupElement(z2, {1})) == CycloNumber(-1L));
  const CycloNumber v = evaluate_character(Character(z4, {1}), GroupElement(z4, {2}));
  CHECK(std::abs(v.to_complex() - std::complex<double>(-1, 0)) < 1e-12);
  CHECK_THROWS_AS(evaluate_character(Character(z2, {1}), GroupElement(z4, {1})), Error);
}

TEST_CASE("characters are multiplicative") {
  const AbelianGroup g({2, 4, 3});
  for (int c = 0; c < g.order(); c += 5) {
    const Character chi(g, g.exps(c));
    for (int a = 0; a < g.order(); ++a)
      for (int b = 0; b < g.order(); b += 3) CHECK(chi(g.mul(a, b)) == chi(a) * chi(b));
  }
}

TEST_CASE("enumerate_subgroups against brute force") {
  CHECK(enumerate_subgroups(AbelianGroup({2})).size() == 2);
  CHECK(enumerate_subgroups(AbelianGroup({4})).size() == 3);
  CHECK(enumerate_subgroups(AbelianGroup({2, 2})).size() == 5);
  for (const auto& orders : std::vector<std::vector<int>>{{2}, {4}, {2, 2}, {6}, {2, 4}, {3, 3}, {8}, {2, 2, 2}}) {
    const AbelianGroup g(orders);
    const auto subs = enumerate_subgroups(g);
    CHECK(subs.size() == brute_force_subgroup_count(g));
    for (std::size_t i = 0; i + 1 < subs.size(); ++i) CHECK(subs[i] < subs[i + 1]);
    for (const auto& s : subs) {
      for (int a : s.elements())
        for (int b : s.elements()) CHECK(s.contains(g.mul(a, b)));
      // The invariant-factor presentation is a divisibility chain covering F.
      const auto& m = s.invariant_factors();
      int prod = 1;
      for (std::size_t i = 0; i < m.size(); ++i) {
        prod *= m[i];
        if (i) CHECK(m[i] % m[i - 1] == 0);
      }
      CHECK(prod == s.size());
    }
    const auto again = enumerate_subgroups(g);
    CHECK(again.size() == subs.size());
    for (std::size_t i = 0; i < subs.size(); ++i) CHECK(again[i] == subs[i]);
  }
  try {
    (void)enumerate_subgroups(AbelianGroup({2, 2, 2}), 4);
    FAIL("expected SizeBound");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SizeBound);
  }
}

TEST_CASE("cocycle_classes counts against brute force") {
  for (const auto& orders : std::vector<std::vector<int>>{{2}, {3}, {4}, {2, 2}}) {
    const AbelianGroup g(orders);
    const auto reps = cocycle_classes(whole_group(g));
    CHECK(reps.size() == brute_force_h2(g, g.exponent()));
  }
  CHECK(cocycle_classes(whole_group(AbelianGroup({2, 4}))).size() == 2);
  CHECK(cocycle_classes(whole_group(AbelianGroup({4, 2}))).size() == 2);
  CHECK(cocycle_classes(whole_group(AbelianGroup({2, 2, 2}))).size() == 8);
  CHECK(cocycle_classes(whole_group(AbelianGroup({3, 3}))).size() == 3);
}

TEST_CASE("Z2xZ4 classes agree with the count of alternating forms of all bicharacters") {
  // Oracle: every class contains a bicharacter, and the class of a
  // bicharacter is its alternating form; enumerate all bicharacters with
  // values in mu_4 and count distinct alternating forms.
  const AbelianGroup g({2, 4});
  std::set<std::vector<int>> forms;
  for (int b00 = 0; b00 < 2; ++b00)
    for (int b01 = 0; b01 < 2; ++b01)
      for (int b10 = 0; b10 < 2; ++b10)
        for (int b11 = 0; b11 < 4; ++b11) {
          // psi(a,b) = zeta_4^{2 b00 a0 c0 + 2 b01 a0 c1 + 2 b10 a1 c0 + b11 a1 c1}
          auto val = [&](int x, int y) {
            const auto a = g.exps(x), c = g.exps(y);
            return (2 * b00 * a[0] * c[0] + 2 * b01 * a[0] * c[1] + 2 * b10 * a[1] * c[0] + b11 * a[1] * c[1]) % 4;
          };
          std::vector<int> w;
          for (int x = 0; x < g.order(); ++x)
            for (int y = 0; y < g.order(); ++y) w.push_back(((val(x, y) - val(y, x)) % 4 + 4) % 4);
          forms.insert(w);
        }
  CHECK(cocycle_classes(whole_group(g)).size() == forms.size());
}

TEST_CASE("produced cocycles satisfy the identity and both normalizations") {
  for (const auto& orders : std::vector<std::vector<int>>{{2, 2}, {2, 4}, {4, 4}, {3, 3}, {2, 2, 2}, {6}, {2, 6}}) {
    const AbelianGroup g(orders);
    for (const auto& f : enumerate_subgroups(g)) {
      for (const auto& psi : cocycle_classes(f)) {
        CHECK_FALSE(psi.check_identity().has_value());
        CHECK(psi.inverse_normalized());
      }
    }
  }
}

TEST_CASE("psi_g and cocycle_eval examples") {
  const AbelianGroup g({2, 2});
  const Subgroup F = whole_group(g);
  const auto reps = cocycle_classes(F);
  REQUIRE(reps.size() == 2);
  const TwoCocycle& triv = reps[0];
  const TwoCocycle& nontriv = reps[1];
  CHECK(triv.is_class_trivial());
  CHECK_FALSE(nontriv.is_class_trivial());
  for (int x = 0; x < 4; ++x) {
    CHECK(psi_g(triv, x).is_trivial());
    CHECK(cocycle_eval(nontriv, 0, x).is_one());
    CHECK(cocycle_eval(nontriv, g.inv(x), x).is_one());
  }
  CHECK(psi_g(nontriv, 0).is_trivial());
  const int u = g.index({1, 0}), v = g.index({0, 1});
  CHECK(psi_g(nontriv, u).exps == std::vector<int>{0, 1});
  CHECK(cocycle_eval(nontriv, u, v) / cocycle_eval(nontriv, v, u) == CycloNumber(-1L));

  const Subgroup small = generated_subgroup(g, {u});
  const TwoCocycle t = TwoCocycle::trivial(small);
  try {
    (void)psi_g(t, v);
    FAIL("expected NotInSubgroup");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotInSubgroup);
  }
  CHECK_THROWS_AS(cocycle_eval(t, u, v), Error);
}

TEST_CASE("psi_g is invariant under random coboundaries") {
  std::mt19937 rng(5);
  for (const auto& orders : std::vector<std::vector<int>>{{2, 2}, {2, 4}, {3, 3}}) {
    const AbelianGroup g(orders);
    const Subgroup F = whole_group(g);
    for (const auto& psi : cocycle_classes(F)) {
      std::vector<CycloNumber> mu(F.size());
      std::uniform_int_distribution<int> k(0, 11);
      mu[0] = CycloNumber(1L);
      for (int a = 1; a < F.size(); ++a) mu[a] = root_of_unity(12, k(rng)) * CycloNumber(Rational(1 + a, 2));
      const TwoCocycle other = multiply_by_coboundary(psi, mu);
      const auto bad = other.check_identity();
      CHECK_MESSAGE(!bad.has_value(), bad.value_or(""));
      CHECK(other.class_tag() == psi.class_tag());
      for (int x : F.elements()) CHECK(psi_g(other, x) == psi_g(psi, x));
    }
  }
}
