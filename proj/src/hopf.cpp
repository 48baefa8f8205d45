#include "qlsmodcat/hopf.hpp"

#include <algorithm>
#include <sstream>

#include "qlsmodcat/errors.hpp"

namespace qlsmodcat {

LiftingDatum LiftingDatum::trivial(int theta) {
  LiftingDatum l;
  l.mu.assign(theta, CycloNumber());
  return l;
}

bool LiftingDatum::is_trivial() const {
  for (const auto& m : mu)
    if (!m.is_zero()) return false;
  for (const auto& [k, v] : lambda)
    if (!v.is_zero()) return false;
  return true;
}

CycloNumber LiftingDatum::lam(int i, int j) const {
  auto it = lambda.find({i, j});
  return it == lambda.end() ? CycloNumber() : it->second;
}

ValidationReport validate_lifting(const QlsDatum& d, const LiftingDatum& l) {
  ValidationReport r = validate_datum(d);
  const AbelianGroup& G = d.group();
  if (static_cast<int>(l.mu.size()) != d.theta()) {
    r.fail("lifting", {}, "mu has wrong length");
    return r;
  }
  for (int i = 0; i < d.theta(); ++i) {
    if (l.mu[i].is_zero()) continue;
    const int gN = G.pow(d.g(i), d.N(i));
    const bool chi_ok = d.chi(i).pow(d.N(i)).is_trivial();
    if (gN == 0 || !chi_ok) {
      r.fail("lifting-mu", {i}, gN == 0 ? "g_i^{N_i} = 1 forces mu_i = 0" : "chi_i^{N_i} != 1 forces mu_i = 0");
    }
  }
  for (const auto& [ij, v] : l.lambda) {
    const auto [i, j] = ij;
    if (i < 0 || j <= i || j >= d.theta()) {
      r.fail("lifting-lambda", {i, j}, "lambda index must satisfy i < j");
      continue;
    }
    if (v.is_zero()) continue;
    const bool g_ok = G.mul(d.g(i), d.g(j)) != 0;
    const bool chi_ok = (d.chi(i) * d.chi(j)).is_trivial();
    if (!g_ok || !chi_ok)
      r.fail("lifting-lambda", {i, j}, !g_ok ? "g_i g_j = 1 forces lambda_ij = 0" : "chi_i chi_j != 1 forces lambda_ij = 0");
  }
  return r;
}

std::vector<std::string> group_labels(const AbelianGroup& g, const std::string& prefix) {
  std::vector<std::string> out;
  for (int i = 0; i < g.order(); ++i) {
    std::ostringstream os;
    os << prefix << "(";
    const auto e = g.exps(i);
    for (std::size_t k = 0; k < e.size(); ++k) os << (k ? "," : "") << e[k];
    os << ")";
    out.push_back(os.str());
  }
  return out;
}

PbwPresentation lifting_presentation(const QlsDatum& d, const LiftingDatum& l, const std::string& letter) {
  const AbelianGroup& G = d.group();
  const int m = G.order();
  const int s = d.theta();
  std::vector<int> mul(static_cast<std::size_t>(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) mul[static_cast<std::size_t>(a) * m + b] = G.mul(a, b);
  PbwPresentation p;
  p.init(m, std::move(mul), group_labels(G), s);
  for (int k = 0; k < s; ++k) {
    p.gen_names[k] = letter + std::to_string(k + 1);
    p.height[k] = d.N(k);
    for (int f = 0; f < m; ++f) p.weight[k][f] = d.chi(k)(f);
    const int gN = G.pow(d.g(k), d.N(k));
    Accumulator<CycloNumber> pw;
    pw.add(0, l.mu[k]);
    pw.add(gN, -l.mu[k]);
    p.power[k] = pw.finish();
  }
  for (int lgen = 0; lgen < s; ++lgen)
    for (int k = 0; k < lgen; ++k) {
      const CycloNumber q = d.q(lgen, k);
      p.comm[lgen][k] = q;
      const CycloNumber lam = l.lam(k, lgen);
      if (lam.is_zero()) continue;
      // a_l a_k = q_lk a_k a_l - q_lk lambda_kl (1 - g_k g_l)
      Accumulator<CycloNumber> lo;
      lo.add(0, -q * lam);
      lo.add(G.mul(d.g(k), d.g(lgen)), q * lam);
      p.lower[lgen][k] = lo.finish();
    }
  return p;
}

HopfAlgebraRep pbw_hopf(const PbwAlgebra& a, const std::vector<int>& gen_group, const std::vector<int>& group_inv,
                        std::string name) {
  const auto& P = a.presentation();
  const Algebra& A = a.algebra();
  const std::size_t n = A.dim;
  const int s = P.gens();
  HopfAlgebraRep h;
  h.alg = A;
  h.name = std::move(name);
  std::vector<Vec> dgen(s);
  for (int k = 0; k < s; ++k) {
    const Vec y = a.generator(k);
    dgen[k] = tensor(y, A.unit, n) + tensor(a.group_element(gen_group[k]), y, n);
  }
  h.comult.resize(n);
  h.counit.assign(n, CycloNumber());
  h.antipode.resize(n);
  h.degree = a.degrees();
  std::vector<Vec> sgen(s);
  for (int k = 0; k < s; ++k) {
    sgen[k] = -CycloNumber(1L) * A.multiply(a.group_element(group_inv[gen_group[k]]), a.generator(k));
  }
  for (std::size_t b = 0; b < n; ++b) {
    const auto& r = a.exps(b);
    const int f = a.group_part(b);
    Vec d = tensor(A.unit, A.unit, n);
    Vec sv = A.unit;
    bool is_group = true;
    for (int k = 0; k < s; ++k)
      for (int t = 0; t < r[k]; ++t) {
        d = tensor_multiply(A, A, d, dgen[k]);
        sv = A.multiply(sgen[k], sv);
        is_group = false;
      }
    sv = A.multiply(a.group_element(group_inv[f]), sv);
    const Vec ef = a.group_element(f);
    d = tensor_multiply(A, A, d, tensor(ef, ef, n));
    h.comult[b] = d;
    // Antipode is anti-multiplicative: S(y^r e_f) = S(e_f) S(y_s)^{r_s} ... S(y_1)^{r_1}.
    h.antipode[b] = sv;
    if (is_group) h.counit[b] = CycloNumber(1L);
  }
  return h;
}

HopfAlgebraRep build_lifting(const QlsDatum& d, const LiftingDatum& l) {
  const ValidationReport r = validate_lifting(d, l);
  if (!r.ok) throw Error(ErrorKind::ValidationFailed, r.summary());
  const bool trivial = l.is_trivial();
  PbwAlgebra a = build_pbw(lifting_presentation(d, l, trivial ? "x" : "a"));
  std::vector<int> inv(d.group().order());
  for (int f = 0; f < d.group().order(); ++f) inv[f] = d.group().inv(f);
  return pbw_hopf(a, d.gs(), inv, trivial ? "U" : "H");
}

HopfAlgebraRep build_bosonization(const QlsDatum& d) { return build_lifting(d, LiftingDatum::trivial(d.theta())); }

QMatrix compute_qmatrix(const QlsDatum& d) {
  QMatrix qm;
  for (int i = 0; i < d.theta(); ++i)
    if (std::find(qm.support.begin(), qm.support.end(), d.g(i)) == qm.support.end()) qm.support.push_back(d.g(i));
  std::sort(qm.support.begin(), qm.support.end());
  // x_j x_i = chi_i(g_j) x_i x_j, so q_{h,g} = chi_i(h) for x_i in V_g, x_j in V_h.
  for (int i = 0; i < d.theta(); ++i)
    for (int j = 0; j < d.theta(); ++j) {
      if (i == j) continue;
      const CycloNumber v = d.chi(i)(d.g(j));
      auto [it, inserted] = qm.q.emplace(std::make_pair(d.g(j), d.g(i)), v);
      if (!inserted && it->second != v && qm.consistent) {
        qm.consistent = false;
        qm.conflict = {i, j};
      }
    }
  return qm;
}

std::vector<std::vector<std::size_t>> filtration_layers(const HopfAlgebraRep& h) {
  std::vector<std::vector<std::size_t>> out(h.top_degree() + 1);
  for (std::size_t b = 0; b < h.dim(); ++b)
    for (int n = h.degree[b]; n <= h.top_degree(); ++n) out[n].push_back(b);
  return out;
}

std::optional<std::string> check_coradical_grading(const HopfAlgebraRep& h, bool exact) {
  const std::size_t n = h.dim();
  for (std::size_t b = 0; b < n; ++b)
    for (const auto& [p, c] : h.comult[b]) {
      const int d = h.degree[p / n] + h.degree[p % n];
      if (exact ? d != h.degree[b] : d > h.degree[b])
        return "Delta(" + h.alg.labels[b] + ") has a term " + h.alg.labels[p / n] + "(x)" + h.alg.labels[p % n] +
               " of the wrong degree";
    }
  return std::nullopt;
}

}  // namespace qlsmodcat
