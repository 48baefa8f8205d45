#include "qlsmodcat/filtration.hpp"

#include <algorithm>

#include "qlsmodcat/errors.hpp"

namespace qlsmodcat {

std::vector<std::size_t> FiltrationRep::dims() const {
  std::vector<std::size_t> out;
  for (const auto& l : layers) out.push_back(l.size());
  return out;
}

FiltrationRep loewy_filtration(const ComoduleAlgebraRep& a) {
  const HopfAlgebraRep& h = *a.hopf;
  const std::size_t n = a.dim();
  FiltrationRep out;
  for (int deg = 0;; ++deg) {
    std::vector<Vec> cols(n);
    for (std::size_t i = 0; i < n; ++i) {
      Vec c;
      for (const auto& [p, x] : a.coaction[i])
        if (h.degree[p / n] > deg) c.push_back(p, x);
      cols[i] = std::move(c);
    }
    out.layers.push_back(span_basis(kernel(cols)));
    if (out.layers.back().size() == n || deg > h.top_degree()) break;
  }
  return out;
}

FiltrationRep monomial_filtration(const ComoduleAlgebraRep& a) {
  FiltrationRep out;
  const int top = a.degree.empty() ? 0 : *std::max_element(a.degree.begin(), a.degree.end());
  for (int deg = 0; deg <= top; ++deg) {
    std::vector<Vec> layer;
    for (std::size_t b = 0; b < a.dim(); ++b)
      if (a.degree.empty() || a.degree[b] <= deg) layer.push_back(Vec::unit(b));
    out.layers.push_back(span_basis(layer));
  }
  return out;
}

std::optional<std::string> compare_filtrations(const FiltrationRep& a, const FiltrationRep& b) {
  const std::size_t m = std::max(a.layers.size(), b.layers.size());
  for (std::size_t k = 0; k < m; ++k) {
    const auto& la = a.layers[std::min(k, a.layers.size() - 1)];
    const auto& lb = b.layers[std::min(k, b.layers.size() - 1)];
    std::vector<Vec> both = la;
    both.insert(both.end(), lb.begin(), lb.end());
    const std::size_t r = rank(both);
    if (la.size() != lb.size() || r != la.size())
      return "layer " + std::to_string(k) + ": dims " + std::to_string(la.size()) + " and " +
             std::to_string(lb.size()) + ", joint rank " + std::to_string(r);
  }
  return std::nullopt;
}

std::optional<std::string> check_multiplicative(const Algebra& alg, const FiltrationRep& f) {
  const std::size_t m = f.layers.size();
  std::vector<Echelon<CycloNumber>> ech(m);
  for (std::size_t k = 0; k < m; ++k)
    for (const auto& v : f.layers[k]) ech[k].insert(v);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; i + j < m; ++j)
      for (const auto& x : f.layers[i])
        for (const auto& y : f.layers[j])
          if (!ech[i + j].contains(alg.multiply(x, y)))
            return "A_" + std::to_string(i) + " A_" + std::to_string(j) + " not inside A_" + std::to_string(i + j);
  return std::nullopt;
}

ComoduleAlgebraRep associated_graded(const ComoduleAlgebraRep& a, const FiltrationRep& f) {
  const std::size_t n = a.dim();
  const HopfAlgebraRep& h = *a.hopf;
  std::vector<Vec> reps;
  std::vector<int> layer;
  bool standard = true;
  Echelon<CycloNumber> below;
  for (std::size_t k = 0; k < f.layers.size(); ++k) {
    Echelon<CycloNumber> here;
    for (const auto& v : f.layers[k]) here.insert(v);
    for (std::size_t b = 0; b < n && below.rank() < here.rank(); ++b) {
      const Vec e = Vec::unit(b);
      if (here.contains(e) && below.insert(e)) {
        reps.push_back(e);
        layer.push_back(static_cast<int>(k));
      }
    }
    for (const auto& v : f.layers[k])
      if (below.insert(v)) {
        reps.push_back(v);
        layer.push_back(static_cast<int>(k));
        standard = false;
      }
  }
  if (reps.size() != n) throw Error(ErrorKind::IsoCheckFailed, "filtration does not exhaust A");
  TrackedEchelon<CycloNumber> coords;
  for (const auto& v : reps) coords.insert(v);
  const int top = layer.back();
  // Component of v in layer `want`; fails if v has components above it.
  auto project = [&](const Vec& v, int want, const char* what) {
    auto c = coords.coordinates(v);
    Vec out;
    for (const auto& [i, x] : *c) {
      if (layer[i] > want) throw Error(ErrorKind::IsoCheckFailed, std::string(what) + " leaves the filtration");
      if (layer[i] == want) out.push_back(i, x);
    }
    return out;
  };

  ComoduleAlgebraRep g;
  g.hopf = a.hopf;
  g.name = "gr " + a.name;
  g.alg.dim = n;
  g.degree = layer;
  for (std::size_t i = 0; i < n; ++i)
    g.alg.labels.push_back(standard ? a.alg.labels[reps[i].leading()] : "r" + std::to_string(i));
  g.alg.unit = project(a.alg.unit, 0, "unit");
  g.alg.mult.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const int want = layer[i] + layer[j];
      g.alg.mult[i * n + j] = want > top ? Vec() : project(a.alg.multiply(reps[i], reps[j]), want, "product");
    }
  g.coaction.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::map<std::size_t, Accumulator<CycloNumber>> legs;
    for (const auto& [p, x] : a.coact(reps[i])) legs[p / n].add(p % n, x);
    Accumulator<CycloNumber> acc;
    for (auto& [hh, right] : legs) {
      const int want = layer[i] - h.degree[hh];
      const Vec r = right.finish();
      if (want < 0) {
        if (!r.empty()) throw Error(ErrorKind::IsoCheckFailed, "coaction leaves the filtration");
        continue;
      }
      for (const auto& [t, x] : project(r, want, "coaction")) acc.add(pair_index(hh, t, n), x);
    }
    g.coaction[i] = acc.finish();
  }
  if (standard && a.pbw.size() == n)
    for (const auto& v : reps) g.pbw.push_back(a.pbw[v.leading()]);
  return g;
}

void check_graded_model(const QlsContext& ctx, const ModCatDatum& m, const ComoduleAlgebraRep& gr) {
  if (gr.pbw.size() != gr.dim())
    throw Error(ErrorKind::IsoCheckFailed, "gr A has no monomial basis to match generators on");
  const ComoduleAlgebraRep K = build_K(ctx, m.W, m.psi);
  const auto phi = generator_map_to_K(gr, K, static_cast<int>(m.W.size()));
  if (auto bad = check_isomorphism(gr, K, phi)) throw Error(ErrorKind::IsoCheckFailed, *bad);
}

}  // namespace qlsmodcat
