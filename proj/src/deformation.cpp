#include "qlsmodcat/deformation.hpp"

#include <map>

#include "qlsmodcat/errors.hpp"
#include "qlsmodcat/structure.hpp"

namespace qlsmodcat {

namespace {

struct Triple {
  std::size_t a, b, c;
  CycloNumber coef;
};

// (Delta (x) id) Delta on every basis element.
std::vector<std::vector<Triple>> double_coproducts(const HopfAlgebraRep& h) {
  const std::size_t n = h.dim();
  std::vector<std::vector<Triple>> out(n);
  for (std::size_t x = 0; x < n; ++x) {
    Accumulator<CycloNumber> acc;
    for (const auto& [p, c] : h.comult[x])
      for (const auto& [q, d] : h.comult[p / n]) acc.add((q * n) + p % n, c * d);
    for (const auto& [t, c] : acc.finish()) out[x].push_back({t / (n * n), (t / n) % n, t % n, c});
  }
  return out;
}

CycloNumber eval(const HopfCocycle& s, const std::vector<CycloNumber>& table, const Vec& x, const Vec& y) {
  CycloNumber r;
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y) {
      const CycloNumber& v = table[i * s.dim + j];
      if (!v.is_zero()) r += a * b * v;
    }
  return r;
}

// sum over Delta(x), Delta(y) of sigma(x1, y1) tau(x2, y2).
CycloNumber convolve(const HopfAlgebraRep& h, const std::vector<CycloNumber>& s, const std::vector<CycloNumber>& t,
                     std::size_t x, std::size_t y) {
  const std::size_t n = h.dim();
  CycloNumber r;
  for (const auto& [p, c] : h.comult[x])
    for (const auto& [q, d] : h.comult[y]) {
      const CycloNumber& a = s[(p / n) * n + q / n];
      if (a.is_zero()) continue;
      const CycloNumber& b = t[(p % n) * n + q % n];
      if (!b.is_zero()) r += c * d * a * b;
    }
  return r;
}

std::size_t unit_index(const HopfAlgebraRep& h) {
  if (h.alg.unit.nnz() != 1 || !h.alg.unit.leading_value().is_one())
    throw Error(ErrorKind::ValidationFailed, "the unit of " + h.name + " is not a basis element");
  return h.alg.unit.leading();
}

Vec coordinates_or_throw(const TrackedEchelon<CycloNumber>& e, const Vec& v, const std::string& what) {
  auto x = e.coordinates(v);
  if (!x) throw Error(ErrorKind::NotClosed, what);
  return *x;
}

std::vector<Vec> inverse_antipode(const HopfAlgebraRep& h) {
  auto inv = invert_columns(h.antipode, h.dim());
  if (!inv) throw Error(ErrorKind::ValidationFailed, "antipode of " + h.name + " is not bijective");
  return *inv;
}

}  // namespace

HopfCocycle trivial_hopf_cocycle(const HopfAlgebraRep& h) {
  HopfCocycle s;
  s.dim = h.dim();
  s.table.resize(s.dim * s.dim);
  for (std::size_t i = 0; i < s.dim; ++i)
    for (std::size_t j = 0; j < s.dim; ++j) s.table[i * s.dim + j] = h.counit[i] * h.counit[j];
  s.inverse = s.table;
  return s;
}

HopfCocycle group_hopf_cocycle(const HopfAlgebraRep& h, const TwoCocycle& psi) {
  const Subgroup& F = psi.subgroup();
  if (F.size() != F.parent().order())
    throw Error(ErrorKind::CocycleInvalid, "a group-induced Hopf cocycle needs psi on all of Gamma");
  const std::size_t G = static_cast<std::size_t>(F.size());
  HopfCocycle s;
  s.dim = h.dim();
  if (s.dim % G) throw Error(ErrorKind::DimensionMismatch, "basis size is not a multiple of |Gamma|");
  s.table.resize(s.dim * s.dim);
  s.inverse.resize(s.dim * s.dim);
  for (std::size_t i = 0; i < s.dim; ++i)
    for (std::size_t j = 0; j < s.dim; ++j) {
      const CycloNumber e = h.counit[i] * h.counit[j];
      if (e.is_zero()) continue;
      const CycloNumber& p = psi.at(F.local(static_cast<int>(i % G)), F.local(static_cast<int>(j % G)));
      s.table[i * s.dim + j] = e * p;
      s.inverse[i * s.dim + j] = e * p.inverse();
    }
  return s;
}

bool solve_cocycle_inverse(const HopfAlgebraRep& h, HopfCocycle& sigma) {
  const std::size_t n = h.dim();
  std::vector<Accumulator<CycloNumber>> cols(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (const auto& [p, c] : h.comult[x])
        for (const auto& [q, d] : h.comult[y]) {
          const CycloNumber& a = sigma.at(p / n, q / n);
          if (!a.is_zero()) cols[(p % n) * n + q % n].add(x * n + y, c * d * a);
        }
  TrackedEchelon<CycloNumber> e;
  for (auto& c : cols)
    if (e.insert(c.finish())) return false;
  Accumulator<CycloNumber> rhs;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) rhs.add(x * n + y, h.counit[x] * h.counit[y]);
  const auto sol = e.coordinates(rhs.finish());
  if (!sol) return false;
  sigma.inverse.assign(n * n, CycloNumber());
  for (const auto& [k, c] : *sol) sigma.inverse[k] = c;
  return true;
}

AxiomReport validate_hopf_cocycle(const HopfAlgebraRep& h, const HopfCocycle& s) {
  AxiomReport r;
  const std::size_t n = h.dim();
  const auto& L = h.alg.labels;
  if (s.dim != n || s.table.size() != n * n) {
    r.add("table shape", "table does not match dim " + std::to_string(n));
    return r;
  }
  const std::size_t one = unit_index(h);
  std::optional<std::string> fail;
  for (std::size_t x = 0; x < n && !fail; ++x)
    if (s.at(x, one) != h.counit[x] || s.at(one, x) != h.counit[x])
      fail = "sigma(" + L[x] + ",1) or sigma(1," + L[x] + ") differs from eps";
  r.add("unital", fail);

  fail.reset();
  for (std::size_t x = 0; x < n && !fail; ++x)
    for (std::size_t y = 0; y < n && !fail; ++y) {
      // sigma(x1,y1) sigma(x2 y2, -) and sigma(y1, -1) sigma(x, y2 -2) as functionals of z.
      std::vector<CycloNumber> lhs(n), rhs(n);
      for (const auto& [p, c] : h.comult[x])
        for (const auto& [q, d] : h.comult[y]) {
          const CycloNumber& a = s.at(p / n, q / n);
          if (a.is_zero()) continue;
          const Vec& prod = h.alg.product(p % n, q % n);
          for (std::size_t z = 0; z < n; ++z) lhs[z] += c * d * a * eval(s, s.table, prod, Vec::unit(z));
        }
      for (std::size_t z = 0; z < n; ++z) {
        for (const auto& [p, c] : h.comult[y])
          for (const auto& [q, d] : h.comult[z]) {
            const CycloNumber& a = s.at(p / n, q / n);
            if (a.is_zero()) continue;
            rhs[z] += c * d * a * eval(s, s.table, Vec::unit(x), h.alg.product(p % n, q % n));
          }
        if (lhs[z] != rhs[z]) {
          fail = "cocycle identity fails on (" + L[x] + ", " + L[y] + ", " + L[z] + ")";
          break;
        }
      }
    }
  r.add("cocycle identity", fail);

  fail.reset();
  if (s.inverse.size() != n * n) fail = "no inverse table";
  for (std::size_t x = 0; x < n && !fail; ++x)
    for (std::size_t y = 0; y < n && !fail; ++y) {
      const CycloNumber e = h.counit[x] * h.counit[y];
      if (convolve(h, s.table, s.inverse, x, y) != e || convolve(h, s.inverse, s.table, x, y) != e)
        fail = "sigma^{-1} is not a convolution inverse at (" + L[x] + ", " + L[y] + ")";
    }
  r.add("convolution invertible", fail);
  return r;
}

HopfAlgebraRep deform_hopf(const HopfAlgebraRep& h, const HopfCocycle& s) {
  if (auto rep = validate_hopf_cocycle(h, s); !rep.ok()) throw Error(ErrorKind::CocycleInvalid, rep.summary());
  const std::size_t n = h.dim();
  const auto tri = double_coproducts(h);
  HopfAlgebraRep out = h;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      Accumulator<CycloNumber> acc;
      for (const auto& u : tri[x])
        for (const auto& v : tri[y]) {
          const CycloNumber& a = s.at(u.a, v.a);
          if (a.is_zero()) continue;
          const CycloNumber& b = s.inv(u.c, v.c);
          if (b.is_zero()) continue;
          acc.add(h.alg.product(u.b, v.b), u.coef * v.coef * a * b);
        }
      out.alg.mult[x * n + y] = acc.finish();
    }
  auto S = solve_antipode(out.alg, out.comult, out.counit);
  if (!S) throw Error(ErrorKind::ValidationFailed, "deformed bialgebra has no antipode");
  out.antipode = std::move(*S);
  out.name = h.name + "^sigma";
  return out;
}

ComoduleAlgebraRep deform_comodule_algebra(const ComoduleAlgebraRep& k, const HopfCocycle& s,
                                           std::shared_ptr<const HopfAlgebraRep> h_sigma) {
  if (!h_sigma) h_sigma = std::make_shared<HopfAlgebraRep>(deform_hopf(*k.hopf, s));
  else if (auto rep = validate_hopf_cocycle(*k.hopf, s); !rep.ok())
    throw Error(ErrorKind::CocycleInvalid, rep.summary());
  const std::size_t n = k.dim();
  ComoduleAlgebraRep out = k;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      Accumulator<CycloNumber> acc;
      for (const auto& [p, c] : k.coaction[x])
        for (const auto& [q, d] : k.coaction[y]) {
          const CycloNumber& a = s.at(p / n, q / n);
          if (!a.is_zero()) acc.add(k.alg.product(p % n, q % n), c * d * a);
        }
      out.alg.mult[x * n + y] = acc.finish();
    }
  out.hopf = std::move(h_sigma);
  out.name = k.name + "_sigma";
  return out;
}

ComoduleAlgebraRep deform_coideal_subalgebra(std::shared_ptr<const HopfAlgebraRep> h, const std::vector<Vec>& k,
                                             const HopfCocycle& tau) {
  if (auto rep = validate_hopf_cocycle(*h, tau); !rep.ok()) throw Error(ErrorKind::CocycleInvalid, rep.summary());
  const std::size_t n = h->dim();
  const std::size_t m = k.size();
  TrackedEchelon<CycloNumber> e;
  for (const auto& v : k)
    if (e.insert(v)) throw Error(ErrorKind::ValidationFailed, "coideal basis is linearly dependent");
  std::vector<Vec> delta;
  for (const auto& v : k) delta.push_back(h->coproduct(v));

  ComoduleAlgebraRep out;
  out.hopf = h;
  out.name = "_tau K";
  out.alg.dim = m;
  for (const auto& v : k) out.alg.labels.push_back(vec_to_string(v, h->alg.labels));
  out.alg.unit = coordinates_or_throw(e, h->alg.unit, "K does not contain 1");
  out.alg.mult.resize(m * m);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      Accumulator<CycloNumber> acc;
      for (const auto& [p, c] : delta[x])
        for (const auto& [q, d] : delta[y]) {
          const CycloNumber& a = tau.at(p % n, q % n);
          if (!a.is_zero()) acc.add(h->alg.product(p / n, q / n), c * d * a);
        }
      out.alg.mult[x * m + y] = coordinates_or_throw(
          e, acc.finish(), "tau(a2,b2) a1 b1 leaves K for " + out.alg.labels[x] + ", " + out.alg.labels[y]);
    }
  for (std::size_t x = 0; x < m; ++x) {
    std::map<std::size_t, Accumulator<CycloNumber>> legs;
    for (const auto& [p, c] : delta[x]) legs[p / n].add(p % n, c);
    Vec lam;
    for (auto& [l, acc] : legs) {
      const Vec right = acc.finish();
      if (right.empty()) continue;
      for (const auto& [j, c] : coordinates_or_throw(e, right, "K is not a left coideal"))
        lam.push_back(pair_index(l, j, m), c);
    }
    out.coaction.push_back(std::move(lam));
  }
  return out;
}

ComoduleAlgebraRep regular_comodule_algebra(std::shared_ptr<const HopfAlgebraRep> h) {
  ComoduleAlgebraRep out;
  out.alg = h->alg;
  out.coaction = h->comult;
  out.degree = h->degree;
  out.name = h->name;
  out.hopf = std::move(h);
  return out;
}

Vec BiGaloisRep::right_coact(const Vec& b) const { return apply_columns(right_coaction, b); }

BiGaloisRep regular_bigalois(std::shared_ptr<const HopfAlgebraRep> h) {
  BiGaloisRep b;
  b.alg = regular_comodule_algebra(h);
  b.right_coaction = h->comult;
  b.right_hopf = std::move(h);
  return b;
}

BiGaloisRep cocycle_bigalois(std::shared_ptr<const HopfAlgebraRep> h, const HopfCocycle& sigma) {
  BiGaloisRep b;
  b.alg = deform_comodule_algebra(regular_comodule_algebra(h), sigma);
  b.right_coaction = h->comult;
  b.right_hopf = std::move(h);
  return b;
}

BiGaloisRep build_bigalois(const QlsDatum& d, const LiftingDatum& l) {
  if (auto rep = validate_lifting(d, l); !rep.ok) throw Error(ErrorKind::ValidationFailed, rep.summary());
  auto ctx = make_context(d);
  const int theta = d.theta();
  ModCatDatum m(TwoCocycle::trivial(whole_group(d.group())));
  std::vector<int> all(theta);
  for (int i = 0; i < theta; ++i) all[i] = i;
  m.W = coordinate_subspace(all);
  for (int i = 0; i < theta; ++i) m.xi.push_back(i < static_cast<int>(l.mu.size()) ? -l.mu[i] : CycloNumber());
  for (int i = 0; i < theta; ++i)
    for (int j = i + 1; j < theta; ++j)
      if (!l.lam(i, j).is_zero()) m.alpha[{i, j}] = -l.lam(i, j);

  BiGaloisRep b;
  b.alg = build_A(*ctx, m);
  b.alg.name = "B";
  auto H = std::make_shared<HopfAlgebraRep>(build_lifting(d, l));
  const std::size_t n = b.dim(), h = H->dim();
  if (n != h) throw Error(ErrorKind::DimensionMismatch, "dim B != dim H");

  std::map<std::pair<std::vector<int>, int>, std::size_t> where;
  for (std::size_t i = 0; i < n; ++i) where[{b.alg.pbw[i].r, b.alg.pbw[i].f}] = i;
  const std::vector<int> zero(theta, 0);
  std::vector<Vec> rho_gen, rho_group;
  for (int i = 0; i < theta; ++i) {
    auto r = zero;
    r[i] = 1;
    Vec t = tensor(Vec::unit(where.at({r, 0})), H->alg.unit, h);
    t += tensor(Vec::unit(where.at({zero, d.g(i)})), Vec::unit(ctx->index(r, 0)), h);
    rho_gen.push_back(std::move(t));
  }
  for (int g = 0; g < d.group().order(); ++g)
    rho_group.push_back(tensor(Vec::unit(where.at({zero, g})), Vec::unit(ctx->index(zero, g)), h));
  for (std::size_t i = 0; i < n; ++i) {
    Vec t = tensor(b.alg.alg.unit, H->alg.unit, h);
    const auto& lab = b.alg.pbw[i];
    for (int k = 0; k < theta; ++k)
      for (int e = 0; e < lab.r[k]; ++e) t = tensor_multiply(b.alg.alg, H->alg, t, rho_gen[k]);
    t = tensor_multiply(b.alg.alg, H->alg, t, rho_group[lab.f]);
    b.right_coaction.push_back(std::move(t));
  }
  b.right_hopf = std::move(H);
  if (auto rep = verify_bigalois(b); !rep.ok()) throw Error(ErrorKind::ValidationFailed, rep.summary());
  return b;
}

AxiomReport verify_bigalois(const BiGaloisRep& b) {
  AxiomReport r = verify_comodule_algebra(b.alg);
  const HopfAlgebraRep& H = *b.right_hopf;
  const std::size_t n = b.dim(), m = H.dim();
  const auto& lab = b.alg.alg.labels;
  std::optional<std::string> fail;

  for (std::size_t x = 0; x < n && !fail; ++x) {
    Accumulator<CycloNumber> lhs, rhs;
    for (const auto& [p, c] : b.right_coaction[x]) {
      const std::size_t bi = p / m, hi = p % m;
      for (const auto& [q, d] : b.right_coaction[bi]) lhs.add((q * m) + hi, c * d);
      for (const auto& [q, d] : H.comult[hi]) rhs.add(bi * m * m + q, c * d);
    }
    if (!(lhs.finish() == rhs.finish())) fail = "right coaction not coassociative on " + lab[x];
  }
  r.add("right coaction coassociative", fail);

  fail.reset();
  for (std::size_t x = 0; x < n && !fail; ++x) {
    Accumulator<CycloNumber> acc;
    for (const auto& [p, c] : b.right_coaction[x]) acc.add(p / m, c * H.counit[p % m]);
    if (!(acc.finish() == Vec::unit(x))) fail = "right counit law fails on " + lab[x];
  }
  r.add("right coaction counital", fail);

  fail.reset();
  for (std::size_t x = 0; x < n && !fail; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (!(b.right_coact(b.alg.alg.product(x, y)) ==
            tensor_multiply(b.alg.alg, H.alg, b.right_coaction[x], b.right_coaction[y]))) {
        fail = "rho(" + lab[x] + "*" + lab[y] + ") != rho(a)rho(b)";
        break;
      }
  if (!fail && !(b.right_coact(b.alg.alg.unit) == tensor(b.alg.alg.unit, H.alg.unit, m))) fail = "rho(1) != 1(x)1";
  r.add("right coaction is an algebra map", fail);

  fail.reset();
  for (std::size_t x = 0; x < n && !fail; ++x) {
    Accumulator<CycloNumber> lhs, rhs;
    for (const auto& [p, c] : b.right_coaction[x])
      for (const auto& [q, d] : b.alg.coaction[p / m]) lhs.add(q * m + p % m, c * d);
    for (const auto& [p, c] : b.alg.coaction[x])
      for (const auto& [q, d] : b.right_coaction[p % n]) rhs.add((p / n) * n * m + q, c * d);
    if (!(lhs.finish() == rhs.finish())) fail = "coactions do not commute on " + lab[x];
  }
  r.add("bicomodule", fail);

  const auto left = galois_map(b.alg);
  r.add("left Galois map bijective",
        left.bijective() ? std::nullopt
                         : std::optional<std::string>("rank " + std::to_string(left.rank) + " of " +
                                                      std::to_string(left.rows) + "x" + std::to_string(left.cols)));
  std::vector<Vec> cols;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      Accumulator<CycloNumber> acc;
      for (const auto& [p, c] : b.right_coaction[y])
        for (const auto& [z, e] : b.alg.alg.product(x, p / m)) acc.add(z * m + p % m, c * e);
      cols.push_back(acc.finish());
    }
  const std::size_t rk = rank(cols);
  r.add("right Galois map bijective",
        rk == n * m && n == m ? std::nullopt
                              : std::optional<std::string>("rank " + std::to_string(rk) + " of " +
                                                           std::to_string(n * m) + "x" + std::to_string(n * n)));
  return r;
}

BiGaloisRep opposite_bigalois(const BiGaloisRep& b) {
  const std::size_t n = b.dim();
  const HopfAlgebraRep& L = *b.alg.hopf;
  const HopfAlgebraRep& H = *b.right_hopf;
  const auto SL = inverse_antipode(L);
  const auto SH = inverse_antipode(H);
  BiGaloisRep o;
  o.alg.alg = b.alg.alg.opposite();
  o.alg.hopf = b.right_hopf;
  o.alg.name = b.alg.name + "^op";
  o.right_hopf = b.alg.hopf;
  for (std::size_t x = 0; x < n; ++x) {
    Accumulator<CycloNumber> left, right;
    for (const auto& [p, c] : b.right_coaction[x])
      for (const auto& [h, d] : SH[p % H.dim()]) left.add(pair_index(h, p / H.dim(), n), c * d);
    for (const auto& [p, c] : b.alg.coaction[x])
      for (const auto& [h, d] : SL[p / n]) right.add(pair_index(p % n, h, L.dim()), c * d);
    o.alg.coaction.push_back(left.finish());
    o.right_coaction.push_back(right.finish());
  }
  return o;
}

CotensorResult cotensor(const BiGaloisRep& b, const ComoduleAlgebraRep& a) {
  const std::size_t nb = b.dim(), na = a.dim(), m = b.right_hopf->dim();
  if (a.hopf->dim() != m) throw Error(ErrorKind::DimensionMismatch, "A is not a comodule over the right side of B");
  std::vector<Vec> cols;
  cols.reserve(nb * na);
  for (std::size_t x = 0; x < nb; ++x)
    for (std::size_t y = 0; y < na; ++y) {
      Accumulator<CycloNumber> acc;
      for (const auto& [p, c] : b.right_coaction[x]) acc.add((p / m * m + p % m) * na + y, c);
      for (const auto& [p, c] : a.coaction[y]) acc.add((x * m + p / na) * na + p % na, -c);
      cols.push_back(acc.finish());
    }
  CotensorResult out;
  out.embedding = span_basis(kernel(cols));
  const std::size_t k = out.embedding.size();
  TrackedEchelon<CycloNumber> e;
  for (const auto& v : out.embedding) e.insert(v);

  auto& alg = out.alg.alg;
  alg.dim = k;
  std::vector<std::string> pair_labels;
  for (std::size_t x = 0; x < nb; ++x)
    for (std::size_t y = 0; y < na; ++y) pair_labels.push_back(b.alg.alg.labels[x] + "|" + a.alg.labels[y]);
  for (const auto& v : out.embedding) alg.labels.push_back("[" + pair_labels[v.leading()] + "]");
  alg.unit = coordinates_or_throw(e, tensor(b.alg.alg.unit, a.alg.unit, na), "1 (x) 1 is not in the cotensor");
  alg.mult.resize(k * k);
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = 0; y < k; ++y)
      alg.mult[x * k + y] = coordinates_or_throw(e, tensor_multiply(b.alg.alg, a.alg, out.embedding[x], out.embedding[y]),
                                                 "cotensor not closed under multiplication");
  for (std::size_t x = 0; x < k; ++x) {
    std::map<std::size_t, Accumulator<CycloNumber>> legs;
    for (const auto& [p, c] : out.embedding[x]) {
      const std::size_t bi = p / na, ai = p % na;
      for (const auto& [q, d] : b.alg.coaction[bi]) legs[q / nb].add((q % nb) * na + ai, c * d);
    }
    Vec lam;
    for (auto& [l, acc] : legs) {
      const Vec part = acc.finish();
      if (part.empty()) continue;
      for (const auto& [j, c] : coordinates_or_throw(e, part, "induced coaction leaves the cotensor"))
        lam.push_back(pair_index(l, j, k), c);
    }
    out.alg.coaction.push_back(std::move(lam));
  }
  out.alg.hopf = b.alg.hopf;
  out.alg.name = b.alg.name + " box " + a.name;
  return out;
}

std::optional<std::vector<Vec>> coaction_into_cotensor(const CotensorResult& c, const ComoduleAlgebraRep& a) {
  TrackedEchelon<CycloNumber> e;
  for (const auto& v : c.embedding) e.insert(v);
  std::vector<Vec> out;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    auto x = e.coordinates(a.coaction[i]);
    if (!x) return std::nullopt;
    out.push_back(std::move(*x));
  }
  return out;
}

TransportResult transport(const QlsDatum& d, const LiftingDatum& l, const ModCatDatum& m) {
  const BiGaloisRep B = opposite_bigalois(build_bigalois(d, l));
  const ComoduleAlgebraRep A = build_A(d, m);
  auto c = cotensor(B, A);
  TransportResult r{std::move(c.alg), std::move(c.embedding), {}};
  r.checks = verify_comodule_algebra(r.algebra);
  r.checks.add("dimension preserved", r.algebra.dim() == A.dim()
                                          ? std::nullopt
                                          : std::optional<std::string>(std::to_string(r.algebra.dim()) + " != " +
                                                                       std::to_string(A.dim())));
  r.algebra.name = "transport(" + A.name + ")";
  return r;
}

}  // namespace qlsmodcat
