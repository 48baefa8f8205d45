#include "qlsmodcat/fixtures.hpp"

namespace qlsmodcat::fixtures {

namespace {

QlsDatum make(const std::vector<int>& orders, const std::vector<std::vector<int>>& g,
              const std::vector<std::vector<int>>& chi) {
  const AbelianGroup G(orders);
  std::vector<int> gi;
  std::vector<Character> ci;
  for (const auto& e : g) gi.push_back(G.index(e));
  for (const auto& e : chi) ci.emplace_back(G, e);
  return QlsDatum(G, gi, ci);
}

}  // namespace

QlsDatum sweedler() { return make({2}, {{1}}, {{1}}); }
QlsDatum clifford() { return make({2}, {{1}, {1}}, {{1}, {1}}); }
QlsDatum exterior_z2z2() { return make({2, 2}, {{1, 0}, {1, 0}}, {{1, 0}, {1, 1}}); }
QlsDatum z4_minus_one() { return make({4}, {{1}}, {{2}}); }
QlsDatum z2z2_pair() { return make({2, 2}, {{1, 0}, {0, 1}}, {{1, 1}, {1, 1}}); }
QlsDatum z4_order_four() { return make({4}, {{1}}, {{1}}); }

LiftingDatum z4_mu_lifting() {
  LiftingDatum l = LiftingDatum::trivial(1);
  l.mu[0] = CycloNumber(1L);
  return l;
}

LiftingDatum z2z2_lambda_lifting() {
  LiftingDatum l = LiftingDatum::trivial(2);
  l.lambda[{0, 1}] = CycloNumber(1L);
  return l;
}

}  // namespace qlsmodcat::fixtures
