#include "qlsmodcat/algebra.hpp"

#include <sstream>

#include "qlsmodcat/abelian_group.hpp"
#include "qlsmodcat/errors.hpp"

namespace qlsmodcat {

Vec Algebra::multiply(const Vec& a, const Vec& b) const {
  Accumulator<CycloNumber> acc;
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) acc.add(product(i, j), x * y);
  return acc.finish();
}

Algebra Algebra::opposite() const {
  Algebra op = *this;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) op.mult[i * dim + j] = mult[j * dim + i];
  return op;
}

Vec tensor_multiply(const Algebra& a, const Algebra& b, const Vec& x, const Vec& y) {
  const std::size_t d2 = b.dim;
  Accumulator<CycloNumber> acc;
  for (const auto& [p, cx] : x) {
    const std::size_t i = p / d2, j = p % d2;
    for (const auto& [q, cy] : y) {
      const std::size_t k = q / d2, l = q % d2;
      const Vec& left = a.product(i, k);
      const Vec& right = b.product(j, l);
      if (left.empty() || right.empty()) continue;
      const CycloNumber c = cx * cy;
      for (const auto& [u, cu] : left) {
        const CycloNumber cc = c * cu;
        for (const auto& [v, cv] : right) acc.add(pair_index(u, v, d2), cc * cv);
      }
    }
  }
  return acc.finish();
}

Vec tensor(const Vec& x, const Vec& y, std::size_t d2) {
  Vec out;
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y) out.push_back(pair_index(i, j, d2), a * b);
  return out;
}

Vec map_left(const Vec& t, std::size_t d2, const std::vector<Vec>& f, std::size_t f_codim) {
  (void)f_codim;
  Accumulator<CycloNumber> acc;
  for (const auto& [p, c] : t) {
    const std::size_t i = p / d2, j = p % d2;
    for (const auto& [u, cu] : f[i]) acc.add(pair_index(u, j, d2), c * cu);
  }
  return acc.finish();
}

Vec map_right(const Vec& t, std::size_t d2, const std::vector<Vec>& f, std::size_t f_codim) {
  Accumulator<CycloNumber> acc;
  for (const auto& [p, c] : t) {
    const std::size_t i = p / d2, j = p % d2;
    for (const auto& [v, cv] : f[j]) acc.add(pair_index(i, v, f_codim), c * cv);
  }
  return acc.finish();
}

Vec HopfAlgebraRep::coproduct(const Vec& a) const {
  Accumulator<CycloNumber> acc;
  for (const auto& [i, x] : a) acc.add(comult[i], x);
  return acc.finish();
}

CycloNumber HopfAlgebraRep::epsilon(const Vec& a) const {
  CycloNumber s;
  for (const auto& [i, x] : a) s += x * counit[i];
  return s;
}

Vec HopfAlgebraRep::antipode_of(const Vec& a) const { return apply_columns(antipode, a); }

int HopfAlgebraRep::top_degree() const {
  int m = 0;
  for (int d : degree) m = std::max(m, d);
  return m;
}

Vec ComoduleAlgebraRep::coact(const Vec& a) const {
  Accumulator<CycloNumber> acc;
  for (const auto& [i, x] : a) acc.add(coaction[i], x);
  return acc.finish();
}

bool AxiomReport::ok() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

void AxiomReport::add(std::string name, std::optional<std::string> failure) {
  AxiomCheck c;
  c.name = std::move(name);
  c.pass = !failure.has_value();
  if (failure) c.witness = *failure;
  checks.push_back(std::move(c));
}

std::string AxiomReport::summary() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.pass ? "  pass  " : "  FAIL  ") << c.name;
    if (!c.pass) os << ": " << c.witness;
    os << "\n";
  }
  return os.str();
}

std::string vec_to_string(const Vec& v, const std::vector<std::string>& labels) {
  if (v.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, c] : v) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    if (i < labels.size()) os << "*" << labels[i];
    else os << "*b" << i;
  }
  return os.str();
}

namespace {

std::string pair_label(std::size_t p, std::size_t d2, const std::vector<std::string>& l1,
                       const std::vector<std::string>& l2) {
  return l1[p / d2] + "(x)" + l2[p % d2];
}

std::string tensor_to_string(const Vec& v, std::size_t d2, const std::vector<std::string>& l1,
                             const std::vector<std::string>& l2) {
  if (v.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : v) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")*" << pair_label(p, d2, l1, l2);
  }
  return os.str();
}

}  // namespace

AxiomReport verify_algebra(const Algebra& a) {
  AxiomReport r;
  const std::size_t n = a.dim;
  std::optional<std::string> fail;
  for (std::size_t i = 0; i < n && !fail; ++i)
    for (std::size_t j = 0; j < n && !fail; ++j) {
      const Vec& ij = a.product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        Vec lhs = a.multiply(ij, Vec::unit(k));
        Vec rhs = a.multiply(Vec::unit(i), a.product(j, k));
        if (!(lhs == rhs)) {
          fail = "(" + a.labels[i] + "*" + a.labels[j] + ")*" + a.labels[k] + " != " + a.labels[i] + "*(" +
                 a.labels[j] + "*" + a.labels[k] + ")";
          break;
        }
      }
    }
  r.add("associativity", fail);
  fail.reset();
  for (std::size_t i = 0; i < n && !fail; ++i) {
    const Vec e = Vec::unit(i);
    if (!(a.multiply(a.unit, e) == e) || !(a.multiply(e, a.unit) == e)) fail = "unit fails on " + a.labels[i];
  }
  r.add("unit", fail);
  return r;
}

AxiomReport verify_hopf_axioms(const HopfAlgebraRep& h) {
  AxiomReport r = verify_algebra(h.alg);
  const std::size_t n = h.dim();
  const auto& L = h.alg.labels;
  std::optional<std::string> fail;

  // Coassociativity in H (x) H (x) H, indexed (i * n + j) * n + k.
  for (std::size_t i = 0; i < n && !fail; ++i) {
    const Vec& d = h.comult[i];
    const Vec lhs = map_left(d, n, h.comult, n * n);   // (Delta (x) id) Delta
    const Vec rhs = map_right(d, n, h.comult, n * n);  // (id (x) Delta) Delta
    if (!(lhs == rhs)) fail = "coassociativity fails on " + L[i];
  }
  r.add("coassociativity", fail);

  fail.reset();
  for (std::size_t i = 0; i < n && !fail; ++i) {
    Accumulator<CycloNumber> left, right;
    for (const auto& [p, c] : h.comult[i]) {
      left.add(p % n, c * h.counit[p / n]);
      right.add(p / n, c * h.counit[p % n]);
    }
    const Vec e = Vec::unit(i);
    if (!(left.finish() == e) || !(right.finish() == e)) fail = "counit law fails on " + L[i];
  }
  r.add("counit", fail);

  fail.reset();
  for (std::size_t i = 0; i < n && !fail; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec lhs = h.coproduct(h.alg.product(i, j));
      const Vec rhs = tensor_multiply(h.alg, h.alg, h.comult[i], h.comult[j]);
      if (!(lhs == rhs)) {
        fail = "Delta(" + L[i] + "*" + L[j] + ") = " + tensor_to_string(lhs, n, L, L) +
               " but Delta(a)Delta(b) = " + tensor_to_string(rhs, n, L, L);
        break;
      }
    }
  r.add("comultiplication is multiplicative", fail);

  fail.reset();
  if (!(h.coproduct(h.alg.unit) == tensor(h.alg.unit, h.alg.unit, n))) fail = "Delta(1) != 1(x)1";
  r.add("comultiplication is unital", fail);

  fail.reset();
  for (std::size_t i = 0; i < n && !fail; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (h.epsilon(h.alg.product(i, j)) != h.counit[i] * h.counit[j]) {
        fail = "epsilon(" + L[i] + "*" + L[j] + ") != epsilon(a)epsilon(b)";
        break;
      }
    }
  if (!fail && !h.epsilon(h.alg.unit).is_one()) fail = "epsilon(1) != 1";
  r.add("counit is an algebra map", fail);

  fail.reset();
  for (std::size_t i = 0; i < n && !fail; ++i) {
    Accumulator<CycloNumber> left, right;
    for (const auto& [p, c] : h.comult[i]) {
      left.add(h.alg.multiply(h.antipode[p / n], Vec::unit(p % n)), c);
      right.add(h.alg.multiply(Vec::unit(p / n), h.antipode[p % n]), c);
    }
    Vec expect = h.counit[i] * h.alg.unit;
    if (!(left.finish() == expect)) fail = "m(S(x)id)Delta != u epsilon on " + L[i];
    else if (!(right.finish() == expect)) fail = "m(id(x)S)Delta != u epsilon on " + L[i];
  }
  r.add("antipode", fail);
  return r;
}

AxiomReport verify_comodule_algebra(const ComoduleAlgebraRep& a) {
  AxiomReport r = verify_algebra(a.alg);
  const HopfAlgebraRep& h = *a.hopf;
  const std::size_t n = a.dim();
  const std::size_t m = h.dim();
  const auto& L = a.alg.labels;
  std::optional<std::string> fail;

  // (Delta (x) id) lambda vs (id (x) lambda) lambda in H (x) H (x) A.
  for (std::size_t i = 0; i < n && !fail; ++i) {
    const Vec& l = a.coaction[i];
    Accumulator<CycloNumber> lhs, rhs;
    for (const auto& [p, c] : l) {
      const std::size_t hi = p / n, ai = p % n;
      for (const auto& [q, d] : h.comult[hi]) lhs.add((q / m * m + q % m) * n + ai, c * d);
      for (const auto& [q, d] : a.coaction[ai]) rhs.add((hi * m + q / n) * n + q % n, c * d);
    }
    if (!(lhs.finish() == rhs.finish())) fail = "coaction not coassociative on " + L[i];
  }
  r.add("coaction coassociative", fail);

  fail.reset();
  for (std::size_t i = 0; i < n && !fail; ++i) {
    Accumulator<CycloNumber> acc;
    for (const auto& [p, c] : a.coaction[i]) acc.add(p % n, c * h.counit[p / n]);
    if (!(acc.finish() == Vec::unit(i))) fail = "counit law fails on " + L[i];
  }
  r.add("coaction counital", fail);

  fail.reset();
  for (std::size_t i = 0; i < n && !fail; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec lhs = a.coact(a.alg.product(i, j));
      const Vec rhs = tensor_multiply(h.alg, a.alg, a.coaction[i], a.coaction[j]);
      if (!(lhs == rhs)) {
        fail = "lambda(" + L[i] + "*" + L[j] + ") != lambda(a)lambda(b)";
        break;
      }
    }
  if (!fail && !(a.coact(a.alg.unit) == tensor(h.alg.unit, a.alg.unit, n))) fail = "lambda(1) != 1(x)1";
  r.add("coaction is an algebra map", fail);
  return r;
}

Vec multiply(const HopfAlgebraRep& h, const Vec& a, const Vec& b) {
  if (!is_index_in_range(a, h.dim()) || !is_index_in_range(b, h.dim()))
    throw Error(ErrorKind::DimensionMismatch, "vector index outside the basis");
  return h.alg.multiply(a, b);
}

Vec coproduct(const HopfAlgebraRep& h, const Vec& a) {
  if (!is_index_in_range(a, h.dim())) throw Error(ErrorKind::DimensionMismatch, "vector index outside the basis");
  return h.coproduct(a);
}

bool is_index_in_range(const Vec& v, std::size_t dim) {
  for (const auto& [i, c] : v)
    if (i >= dim) return false;
  return true;
}

HopfAlgebraRep group_algebra(const AbelianGroup& g) {
  HopfAlgebraRep h;
  const std::size_t n = g.order();
  h.alg.dim = n;
  for (std::size_t i = 0; i < n; ++i) {
    std::ostringstream os;
    os << "g(";
    const auto e = g.exps(static_cast<int>(i));
    for (std::size_t k = 0; k < e.size(); ++k) os << (k ? "," : "") << e[k];
    os << ")";
    h.alg.labels.push_back(os.str());
  }
  h.alg.mult.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h.alg.mult[i * n + j] = Vec::unit(g.mul(static_cast<int>(i), static_cast<int>(j)));
  h.alg.unit = Vec::unit(0);
  for (std::size_t i = 0; i < n; ++i) {
    h.comult.push_back(Vec::unit(pair_index(i, i, n)));
    h.counit.emplace_back(1L);
    h.antipode.push_back(Vec::unit(g.inv(static_cast<int>(i))));
    h.degree.push_back(0);
  }
  h.name = "k[" + g.to_string() + "]";
  return h;
}

std::optional<std::vector<Vec>> invert_columns(const std::vector<Vec>& cols, std::size_t n) {
  TrackedEchelon<CycloNumber> e;
  for (const auto& c : cols)
    if (e.insert(c)) return std::nullopt;
  std::vector<Vec> out;
  for (std::size_t i = 0; i < n; ++i) {
    auto x = e.coordinates(Vec::unit(i));
    if (!x) return std::nullopt;
    out.push_back(*x);
  }
  return out;
}

std::optional<std::vector<Vec>> solve_antipode(const Algebra& alg, const std::vector<Vec>& comult,
                                               const std::vector<CycloNumber>& counit) {
  // Unknowns S_{u,v} (coefficient of basis u in S(v)), flattened u*n + v.
  // Equation for each basis x: sum_{(p,q) in Delta(x)} c * S(p) * q = eps(x) 1.
  const std::size_t n = alg.dim;
  // Column for unknown (u, v): contributions to equations (x, w) = x*n + w.
  std::vector<Accumulator<CycloNumber>> cols(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (const auto& [p, c] : comult[x]) {
      const std::size_t v = p / n, q = p % n;
      for (std::size_t u = 0; u < n; ++u)
        for (const auto& [w, cw] : alg.product(u, q)) cols[u * n + v].add(x * n + w, c * cw);
    }
  TrackedEchelon<CycloNumber> e;
  for (auto& c : cols) e.insert(c.finish());
  Accumulator<CycloNumber> rhs;
  for (std::size_t x = 0; x < n; ++x)
    for (const auto& [w, cw] : alg.unit) rhs.add(x * n + w, counit[x] * cw);
  auto sol = e.coordinates(rhs.finish());
  if (!sol) return std::nullopt;
  std::vector<Accumulator<CycloNumber>> out(n);
  for (const auto& [k, c] : *sol) out[k % n].add(k / n, c);
  std::vector<Vec> res;
  for (auto& a : out) res.push_back(a.finish());
  return res;
}

}  // namespace qlsmodcat
