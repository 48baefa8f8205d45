#pragma once

#include <vector>

#include "qlsmodcat/comodule_algebra.hpp"
#include "qlsmodcat/fixtures.hpp"

namespace testsupport {

using namespace qlsmodcat;

inline QlsDatum make_datum(const std::vector<int>& orders, const std::vector<std::vector<int>>& g,
                           const std::vector<std::vector<int>>& chi) {
  const AbelianGroup G(orders);
  std::vector<int> gi;
  std::vector<Character> ci;
  for (const auto& e : g) gi.push_back(G.index(e));
  for (const auto& e : chi) ci.emplace_back(G, e);
  return QlsDatum(G, gi, ci);
}

inline std::vector<int> all_coords(const QlsDatum& d) {
  std::vector<int> v;
  for (int i = 0; i < d.theta(); ++i) v.push_back(i);
  return v;
}

/// W = span{x_i : i in coords}, xi = 0, alpha = 0.
inline ModCatDatum coordinate_datum(const TwoCocycle& psi, const std::vector<int>& coords) {
  ModCatDatum m(psi);
  m.W = coordinate_subspace(coords);
  m.xi.assign(coords.size(), CycloNumber());
  return m;
}

inline ModCatDatum full_datum(const QlsDatum& d) {
  return coordinate_datum(TwoCocycle::trivial(whole_group(d.group())), all_coords(d));
}

}  // namespace testsupport
