#include "qlsmodcat/comodule_algebra.hpp"

#include <sstream>

#include "qlsmodcat/errors.hpp"

namespace qlsmodcat {

std::size_t QlsContext::index(const std::vector<int>& r, int g) const {
  std::size_t x = 0;
  for (int k = 0; k < datum.theta(); ++k) x = x * datum.N(k) + r[k];
  return x * datum.group().order() + g;
}

Vec QlsContext::x(int i) const {
  std::vector<int> r(datum.theta(), 0);
  r[i] = 1;
  return Vec::unit(index(r, 0));
}

Vec QlsContext::x_of(const Vec& coords) const {
  Accumulator<CycloNumber> acc;
  for (const auto& [i, c] : coords) acc.add(x(static_cast<int>(i)), c);
  return acc.finish();
}

std::shared_ptr<const QlsContext> make_context(const QlsDatum& d) {
  auto ctx = std::make_shared<QlsContext>(QlsContext{d, nullptr});
  ctx->U = std::make_shared<const HopfAlgebraRep>(build_bosonization(d));
  return ctx;
}

CycloNumber ModCatDatum::a(int k, int l) const {
  auto it = alpha.find({k, l});
  return it == alpha.end() ? CycloNumber() : it->second;
}

bool ModCatDatum::is_graded() const {
  for (const auto& x : xi)
    if (!x.is_zero()) return false;
  for (const auto& [k, v] : alpha)
    if (!v.is_zero()) return false;
  return true;
}

std::vector<Vec> coordinate_subspace(const std::vector<int>& coords) {
  std::vector<Vec> out;
  for (int i : coords) out.push_back(Vec::unit(static_cast<std::size_t>(i)));
  return out;
}

bool is_coordinate(const std::vector<Vec>& W) {
  for (const auto& w : W)
    if (w.nnz() != 1 || !w.leading_value().is_one()) return false;
  return true;
}

WBasisInfo analyze_W(const QlsContext& ctx, const Subgroup& F, const std::vector<Vec>& W) {
  const QlsDatum& d = ctx.datum;
  const Algebra& U = ctx.U->alg;
  WBasisInfo info;
  const int s = static_cast<int>(W.size());
  info.q.assign(s, std::vector<CycloNumber>(s, CycloNumber(1L)));
  for (int k = 0; k < s; ++k) {
    const Vec& w = W[k];
    std::ostringstream where;
    where << "w" << k + 1;
    int g = -1;
    bool ok = !w.empty();
    if (!ok) info.problems.push_back(where.str() + " is zero");
    for (const auto& [i, c] : w) {
      if (static_cast<int>(i) >= d.theta()) {
        info.problems.push_back(where.str() + " has a coordinate outside V");
        ok = false;
        break;
      }
      if (g < 0) g = d.g(static_cast<int>(i));
      else if (g != d.g(static_cast<int>(i))) {
        info.problems.push_back(where.str() + " is not homogeneous (it meets two components V_g)");
        ok = false;
        break;
      }
    }
    info.g.push_back(std::max(g, 0));
    info.in_U.push_back(ok ? ctx.x_of(w) : Vec());
    std::vector<CycloNumber> wt(F.size(), CycloNumber(1L));
    if (ok) {
      for (int f = 0; f < F.size(); ++f) {
        const int fp = F.element(f);
        const CycloNumber c0 = d.chi(static_cast<int>(w.leading()))(fp);
        for (const auto& [i, c] : w)
          if (d.chi(static_cast<int>(i))(fp) != c0) {
            info.problems.push_back(where.str() + " is not an eigenvector of F");
            ok = false;
            break;
          }
        if (!ok) break;
        wt[f] = c0;
      }
    }
    info.weight.push_back(wt);
    int height = 0;
    if (ok) {
      Vec p = info.in_U[k];
      const int bound = 4 * d.exponent() + 4;
      for (int n = 2; n <= bound; ++n) {
        p = U.multiply(p, info.in_U[k]);
        if (p.empty()) {
          height = n;
          break;
        }
      }
      if (!height) info.problems.push_back(where.str() + " is not nilpotent in U");
    }
    info.height.push_back(std::max(height, 1));
  }
  if (info.problems.empty()) {
    // Independence of the basis.
    if (rank(W) != W.size()) info.problems.push_back("the basis of W is linearly dependent");
    for (int k = 0; k < s; ++k)
      for (int l = k + 1; l < s; ++l) {
        const Vec kl = U.multiply(info.in_U[k], info.in_U[l]);
        const Vec lk = U.multiply(info.in_U[l], info.in_U[k]);
        std::ostringstream where;
        where << "w" << k + 1 << ", w" << l + 1;
        if (kl.empty() || lk.empty()) {
          info.problems.push_back(where.str() + ": product vanishes in U");
          continue;
        }
        const CycloNumber den = lk.get(kl.leading());
        const CycloNumber c = den.is_zero() ? CycloNumber() : kl.leading_value() / den;
        if (den.is_zero() || !(kl == c * lk)) {
          info.problems.push_back(where.str() + ": w_k w_l is not a multiple of w_l w_k in U");
          continue;
        }
        info.q[k][l] = c;
        info.q[l][k] = c.inverse();
      }
  }
  return info;
}

namespace {

// psi_h(f) = psi(f,h) psi(h,f)^{-1} on local indices.
CycloNumber psi_char(const TwoCocycle& psi, int h_local, int f_local) {
  return psi.at(f_local, h_local) / psi.at(h_local, f_local);
}

// Character condition chi|_F = psi_h where chi is given by values on local f.
std::optional<int> failing_element(const TwoCocycle& psi, int h_local,
                                   const std::vector<CycloNumber>& chi_values) {
  for (int f = 0; f < psi.subgroup().size(); ++f)
    if (chi_values[f] != psi_char(psi, h_local, f)) return f;
  return std::nullopt;
}

}  // namespace

ValidationReport validate_modcat_datum(const QlsContext& ctx, const ModCatDatum& m) {
  ValidationReport r;
  const QlsDatum& d = ctx.datum;
  const Subgroup& F = m.F();
  const AbelianGroup& G = d.group();
  if (!(F.parent() == G)) {
    r.fail("structure", {}, "F is not a subgroup of Gamma");
    return r;
  }
  const int s = static_cast<int>(m.W.size());
  if (static_cast<int>(m.xi.size()) != s) {
    r.fail("structure", {}, "xi must have one entry per basis vector of W");
    return r;
  }
  const WBasisInfo info = analyze_W(ctx, F, m.W);
  for (const auto& p : info.problems) r.fail("subcomodule", {}, p);
  if (!r.ok) return r;
  auto label = [&](int f) { return group_labels(G)[F.element(f)]; };
  for (int k = 0; k < s; ++k) {
    if (m.xi[k].is_zero()) continue;
    const int h = G.pow(info.g[k], info.height[k]);
    if (!F.contains(h)) {
      r.fail("xi-support", {k}, "xi_" + std::to_string(k + 1) + " != 0 but g^N = " + group_labels(G)[h] +
                                     " is not in F");
      continue;
    }
    std::vector<CycloNumber> vals;
    for (int f = 0; f < F.size(); ++f) vals.push_back(info.weight[k][f].pow(info.height[k]));
    if (auto f = failing_element(m.psi, F.local(h), vals))
      r.fail("xi-support", {k}, "xi_" + std::to_string(k + 1) + " != 0 but chi^N(" + label(*f) + ") = " +
                                     vals[*f].to_string() + " differs from psi_{g^N}(" + label(*f) + ") = " +
                                     psi_char(m.psi, F.local(h), *f).to_string());
  }
  for (const auto& [kl, v] : m.alpha) {
    const auto [k, l] = kl;
    if (k < 0 || l <= k || l >= s) {
      r.fail("structure", {k, l}, "alpha index must satisfy k < l within the basis of W");
      continue;
    }
    if (v.is_zero()) continue;
    const std::string name = "alpha_" + std::to_string(k + 1) + std::to_string(l + 1);
    const int h = G.mul(info.g[k], info.g[l]);
    if (!F.contains(h)) {
      r.fail("alpha-support", {k, l}, name + " != 0 but g_k g_l = " + group_labels(G)[h] + " is not in F");
      continue;
    }
    std::vector<CycloNumber> vals;
    for (int f = 0; f < F.size(); ++f) vals.push_back(info.weight[k][f] * info.weight[l][f]);
    if (auto f = failing_element(m.psi, F.local(h), vals))
      r.fail("alpha-support", {k, l}, name + " != 0 but chi_k chi_l(" + label(*f) + ") = " + vals[*f].to_string() +
                                        " differs from psi_{g_k g_l}(" + label(*f) + ") = " +
                                        psi_char(m.psi, F.local(h), *f).to_string());
  }
  return r;
}

ComoduleAlgebraRep build_A(const QlsContext& ctx, const ModCatDatum& m, bool verify) {
  const ValidationReport rep = validate_modcat_datum(ctx, m);
  if (!rep.ok) throw Error(ErrorKind::ValidationFailed, rep.summary());
  const QlsDatum& d = ctx.datum;
  const AbelianGroup& G = d.group();
  const Subgroup& F = m.F();
  const WBasisInfo info = analyze_W(ctx, F, m.W);
  const int s = static_cast<int>(m.W.size());
  const int nf = F.size();

  std::vector<int> mul(static_cast<std::size_t>(nf) * nf);
  for (int a = 0; a < nf; ++a)
    for (int b = 0; b < nf; ++b) mul[static_cast<std::size_t>(a) * nf + b] = F.mul_local(a, b);
  std::vector<std::string> glabels;
  const auto all = group_labels(G, "e");
  for (int f = 0; f < nf; ++f) glabels.push_back(all[F.element(f)]);

  PbwPresentation p;
  p.init(nf, std::move(mul), std::move(glabels), s);
  p.psi = m.psi.table();
  const bool coord = is_coordinate(m.W);
  for (int k = 0; k < s; ++k) {
    p.gen_names[k] = coord ? "v" + std::to_string(m.W[k].leading() + 1) : "w" + std::to_string(k + 1);
    p.height[k] = info.height[k];
    p.weight[k] = info.weight[k];
    if (!m.xi[k].is_zero()) {
      const int h = G.pow(info.g[k], info.height[k]);
      p.power[k] = Vec::single(static_cast<std::size_t>(F.local(h)), m.xi[k]);
    }
  }
  for (int l = 0; l < s; ++l)
    for (int k = 0; k < l; ++k) {
      // w_l w_k = q_kl^{-1} w_k w_l - q_kl^{-1} alpha_kl e_{g_k g_l}
      const CycloNumber qinv = info.q[l][k];
      p.comm[l][k] = qinv;
      const CycloNumber al = m.a(k, l);
      if (!al.is_zero()) {
        const int h = G.mul(info.g[k], info.g[l]);
        p.lower[l][k] = Vec::single(static_cast<std::size_t>(F.local(h)), -(qinv * al));
      }
    }
  PbwAlgebra pa = build_pbw(std::move(p), verify);

  ComoduleAlgebraRep A;
  A.alg = pa.algebra();
  A.hopf = ctx.U;
  A.degree = pa.degrees();
  A.name = "A";
  const std::size_t n = A.dim();
  for (std::size_t b = 0; b < n; ++b) A.pbw.push_back(PbwLabel{pa.exps(b), pa.group_part(b)});

  std::vector<Vec> lgen(s);
  for (int k = 0; k < s; ++k)
    lgen[k] = tensor(info.in_U[k], A.alg.unit, n) + tensor(ctx.group(info.g[k]), pa.generator(k), n);
  const Algebra& U = ctx.U->alg;
  A.coaction.resize(n);
  std::vector<Vec> mono(pa.dim() / nf);
  for (std::size_t b = 0; b < n; ++b) {
    const int f = pa.group_part(b);
    const std::size_t r = b / nf;
    if (f == 0) {
      Vec t = tensor(U.unit, A.alg.unit, n);
      const auto& e = pa.exps(b);
      for (int k = 0; k < s; ++k)
        for (int c = 0; c < e[k]; ++c) t = tensor_multiply(U, A.alg, t, lgen[k]);
      mono[r] = t;
    }
    A.coaction[b] = tensor_multiply(U, A.alg, mono[r], tensor(ctx.group(F.element(f)), pa.group_element(f), n));
  }
  if (verify) {
    const AxiomReport ax = verify_comodule_algebra(A);
    if (!ax.ok()) throw Error(ErrorKind::ConfluenceFailure, "comodule algebra axioms fail:\n" + ax.summary());
  }
  return A;
}

ComoduleAlgebraRep build_A(const QlsDatum& d, const ModCatDatum& m) { return build_A(*make_context(d), m); }

ComoduleAlgebraRep build_K(const QlsContext& ctx, const std::vector<Vec>& W, const TwoCocycle& psi) {
  const Subgroup& F = psi.subgroup();
  const WBasisInfo info = analyze_W(ctx, F, W);
  if (!info.problems.empty()) throw Error(ErrorKind::ValidationFailed, info.problems.front());
  const HopfAlgebraRep& H = *ctx.U;
  const Algebra& U = H.alg;
  const int s = static_cast<int>(W.size());

  // K(W): closure of span{1} under left multiplication by the generators.
  std::vector<Vec> kb{U.unit};
  std::vector<int> kdeg{0};
  Echelon<CycloNumber> seen;
  seen.insert(U.unit);
  for (int k = 0; k < s; ++k) {
    if (!seen.insert(info.in_U[k])) throw Error(ErrorKind::ValidationFailed, "the basis of W is dependent");
    kb.push_back(info.in_U[k]);
    kdeg.push_back(1);
  }
  for (std::size_t j = 1; j < kb.size(); ++j)
    for (int k = 0; k < s; ++k) {
      Vec v = U.multiply(info.in_U[k], kb[j]);
      if (v.empty() || !seen.insert(v)) continue;
      kb.push_back(std::move(v));
      kdeg.push_back(kdeg[j] + 1);
    }
  TrackedEchelon<CycloNumber> coords;
  for (const auto& v : kb) coords.insert(v);
  auto in_K = [&](const Vec& v) {
    auto c = coords.coordinates(v);
    if (!c) throw Error(ErrorKind::NotClosed, "element of U outside K(W): " + vec_to_string(v, U.labels));
    return *c;
  };

  const std::size_t nk = kb.size();
  const int nf = F.size();
  const std::size_t n = nk * nf;
  ComoduleAlgebraRep K;
  K.hopf = ctx.U;
  K.name = "K";
  K.alg.dim = n;
  const auto glab = group_labels(ctx.datum.group(), "e");
  for (std::size_t j = 0; j < nk; ++j)
    for (int f = 0; f < nf; ++f) {
      std::string v = (kb[j].nnz() == 1 && kb[j].leading_value().is_one()) ? U.labels[kb[j].leading()]
                                                                           : "k" + std::to_string(j);
      K.alg.labels.push_back("[" + v + "]" + glab[F.element(f)]);
      K.degree.push_back(kdeg[j]);
    }
  K.alg.unit = Vec::unit(0);
  // Adjoint action f.v = f v f^{-1} in U, as coordinates in K(W).
  std::vector<std::vector<Vec>> act(nf, std::vector<Vec>(nk));
  for (int f = 0; f < nf; ++f) {
    const Vec ef = ctx.group(F.element(f));
    const Vec efi = ctx.group(ctx.datum.group().inv(F.element(f)));
    for (std::size_t j = 0; j < nk; ++j) act[f][j] = in_K(U.multiply(U.multiply(ef, kb[j]), efi));
  }
  std::vector<Vec> kprod(nk * nk);
  for (std::size_t i = 0; i < nk; ++i)
    for (std::size_t j = 0; j < nk; ++j) kprod[i * nk + j] = in_K(U.multiply(kb[i], kb[j]));
  K.alg.mult.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t i = a / nf, j = b / nf;
      const int f = static_cast<int>(a % nf), g = static_cast<int>(b % nf);
      const int fg = F.mul_local(f, g);
      Accumulator<CycloNumber> acc;
      for (const auto& [jj, c] : act[f][j])
        for (const auto& [t, ct] : kprod[i * nk + jj]) acc.add(t * nf + fg, c * ct * psi.at(f, g));
      K.alg.mult[a * n + b] = acc.finish();
    }
  // lambda(v (x) f) = v_(1) f (x) (v_(2) (x) f).
  K.coaction.resize(n);
  for (std::size_t j = 0; j < nk; ++j) {
    std::map<std::size_t, Accumulator<CycloNumber>> legs;
    for (const auto& [p, c] : H.coproduct(kb[j])) legs[p / H.dim()].add(p % H.dim(), c);
    std::vector<std::pair<std::size_t, Vec>> split;
    for (auto& [h, acc] : legs) {
      Vec right = acc.finish();
      if (!right.empty()) split.emplace_back(h, in_K(right));
    }
    for (int f = 0; f < nf; ++f) {
      Accumulator<CycloNumber> acc;
      for (const auto& [h, right] : split)
        for (const auto& [u, cu] : U.product(h, F.element(f)))
          for (const auto& [t, ct] : right) acc.add(pair_index(u, t * nf + f, n), cu * ct);
      K.coaction[j * nf + f] = acc.finish();
    }
  }
  return K;
}

std::vector<Vec> generator_map(const ComoduleAlgebraRep& src, const std::vector<Vec>& gen_images,
                               const std::vector<Vec>& group_images, const Algebra& target) {
  if (src.pbw.size() != src.dim()) throw Error(ErrorKind::IsoCheckFailed, src.name + " has no PBW labels");
  std::vector<Vec> out;
  std::map<std::vector<int>, Vec> mono;
  for (const auto& lab : src.pbw) {
    auto it = mono.find(lab.r);
    if (it == mono.end()) {
      Vec v = target.unit;
      for (std::size_t k = 0; k < lab.r.size(); ++k)
        for (int c = 0; c < lab.r[k]; ++c) v = target.multiply(v, gen_images[k]);
      it = mono.emplace(lab.r, std::move(v)).first;
    }
    out.push_back(target.multiply(it->second, group_images[lab.f]));
  }
  return out;
}

std::optional<std::string> check_isomorphism(const ComoduleAlgebraRep& a, const ComoduleAlgebraRep& b,
                                             const std::vector<Vec>& phi) {
  const std::size_t n = a.dim();
  if (b.dim() != n || phi.size() != n) return "dimensions differ: " + std::to_string(n) + " vs " + std::to_string(b.dim());
  if (rank(phi) != n) return "the map is not bijective";
  if (!(apply_columns(phi, a.alg.unit) == b.alg.unit)) return "the map is not unital";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!(apply_columns(phi, a.alg.product(i, j)) == b.alg.multiply(phi[i], phi[j])))
        return "not multiplicative on " + a.alg.labels[i] + " * " + a.alg.labels[j];
  if (a.hopf && b.hopf) {
    if (a.hopf->dim() != b.hopf->dim()) return "coactions are over different Hopf algebras";
    for (std::size_t i = 0; i < n; ++i)
      if (!(map_right(a.coaction[i], n, phi, n) == b.coact(phi[i])))
        return "does not intertwine the coactions on " + a.alg.labels[i];
  }
  return std::nullopt;
}

std::vector<Vec> generator_map_to_K(const ComoduleAlgebraRep& src, const ComoduleAlgebraRep& K, int s) {
  // |F| is the number of basis elements of K lying over the unit of K(W).
  std::size_t F_size = 0;
  for (std::size_t b = 0; b < K.dim() && K.degree[b] == 0; ++b) ++F_size;
  std::vector<Vec> gens, groups;
  for (int k = 0; k < s; ++k) gens.push_back(Vec::unit((1 + k) * F_size));
  for (std::size_t f = 0; f < F_size; ++f) groups.push_back(Vec::unit(f));
  return generator_map(src, gens, groups, K.alg);
}

}  // namespace qlsmodcat
