#include "qlsmodcat/structure.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <random>

#include "qlsmodcat/errors.hpp"

namespace qlsmodcat {

std::vector<Vec> coinvariants(const ComoduleAlgebraRep& a) {
  const std::size_t n = a.dim();
  std::vector<Vec> cols;
  for (std::size_t i = 0; i < n; ++i) cols.push_back(a.coaction[i] - tensor(a.hopf->alg.unit, Vec::unit(i), n));
  return span_basis(kernel(cols));
}

std::vector<Vec> galois_columns(const ComoduleAlgebraRep& a) {
  const std::size_t n = a.dim();
  std::vector<Vec> cols;
  cols.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Accumulator<CycloNumber> acc;
      for (const auto& [p, c] : a.coaction[i])
        for (const auto& [u, cu] : a.alg.product(p % n, j)) acc.add(pair_index(p / n, u, n), c * cu);
      cols.push_back(acc.finish());
    }
  return cols;
}

GaloisResult galois_map(const ComoduleAlgebraRep& a) {
  GaloisResult r;
  r.rows = a.hopf->dim() * a.dim();
  r.cols = a.dim() * a.dim();
  r.rank = rank(galois_columns(a));
  return r;
}

std::vector<Vec> spin(const std::vector<Operator>& ops, const Vec& v) {
  std::vector<Vec> out;
  if (v.empty()) return out;
  Echelon<CycloNumber> e;
  std::deque<Vec> queue;
  e.insert(v);
  out.push_back(v);
  queue.push_back(v);
  while (!queue.empty()) {
    const Vec x = std::move(queue.front());
    queue.pop_front();
    for (const auto& op : ops) {
      Vec y = apply_columns(op, x);
      if (e.insert(y)) {
        out.push_back(y);
        queue.push_back(std::move(y));
      }
    }
  }
  return out;
}

namespace {

Operator transpose(const Operator& op, std::size_t n) {
  std::vector<Accumulator<CycloNumber>> rows(n);
  for (std::size_t j = 0; j < op.size(); ++j)
    for (const auto& [i, c] : op[j]) rows[i].add(j, c);
  Operator out;
  for (auto& r : rows) out.push_back(r.finish());
  return out;
}

Operator shifted(const Operator& op, const CycloNumber& c) {
  Operator out = op;
  for (std::size_t j = 0; j < out.size(); ++j) out[j] -= Vec::single(j, c);
  return out;
}

std::vector<CycloNumber> eigen_candidates(int L) {
  std::vector<CycloNumber> out{CycloNumber()};
  const Rational scales[] = {Rational(1), Rational(-1), Rational(2), Rational(-2), Rational(1, 2), Rational(-1, 2)};
  for (const auto& s : scales)
    for (int k = 0; k < L; ++k) {
      const CycloNumber c = CycloNumber(s) * root_of_unity(L, k);
      if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
    }
  return out;
}

// Polynomial p with p(M) v = 0, from the Krylov sequence of v.
std::vector<CycloNumber> krylov_polynomial(const Operator& m, const Vec& v) {
  TrackedEchelon<CycloNumber> e;
  Vec x = v;
  for (std::size_t k = 0; k <= m.size(); ++k) {
    if (auto dep = e.insert(x)) {
      std::vector<CycloNumber> p(k + 1);
      for (const auto& [i, c] : *dep) p[i] = c;
      return p;
    }
    x = apply_columns(m, x);
  }
  return {};
}

CycloNumber eval_poly(const std::vector<CycloNumber>& p, const CycloNumber& x) {
  CycloNumber acc;
  for (std::size_t k = p.size(); k-- > 0;) acc = acc * x + p[k];
  return acc;
}

// p / (x - r) when r is a root.
std::vector<CycloNumber> deflate(const std::vector<CycloNumber>& p, const CycloNumber& r) {
  std::vector<CycloNumber> q(p.size() - 1);
  CycloNumber carry;
  for (std::size_t k = p.size(); k-- > 1;) {
    carry = carry * r + p[k];
    q[k - 1] = carry;
  }
  return q;
}

// sqrt(p) for a prime p, from Gauss sums.
CycloNumber sqrt_prime(long p) {
  if (p == 2) return root_of_unity(8, 1) + root_of_unity(8, 7);
  CycloNumber g;
  for (long a = 1; a < p; ++a) {
    long leg = 1;  // a^((p-1)/2) mod p
    for (long e = 0; e < (p - 1) / 2; ++e) leg = leg * a % p;
    g += CycloNumber(leg == 1 ? 1L : -1L) * root_of_unity(static_cast<int>(p), a);
  }
  return p % 4 == 1 ? g : g * root_of_unity(4, 3);
}

// sqrt of a rational number, when its field has conductor dividing L.
std::optional<CycloNumber> sqrt_rational(const Rational& q, int L) {
  if (sgn(q) == 0) return CycloNumber();
  mpz_class m = q.get_num() * q.get_den();
  CycloNumber root(Rational(1, 1) / Rational(q.get_den()));
  if (m < 0) {
    root *= root_of_unity(4, 1);
    m = -m;
  }
  for (long p = 2; m > 1; ++p) {
    if (p > 1000) return std::nullopt;
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    for (int k = 0; k < e / 2; ++k) root *= CycloNumber(p);
    if (e % 2) root *= sqrt_prime(p);
  }
  const CycloNumber r = root.normalized();
  if (!r.is_rational() && L % r.conductor() != 0) return std::nullopt;
  return r;
}

// sqrt of c zeta_L^k with c rational.
std::optional<CycloNumber> sqrt_in_field(const CycloNumber& d, int L) {
  for (int k = 0; k < L; ++k) {
    const CycloNumber c = (d / root_of_unity(L, k)).normalized();
    if (!c.is_rational()) continue;
    auto s = sqrt_rational(c.rational(), L);
    if (!s) continue;
    const CycloNumber r = (*s * root_of_unity(2 * L, k)).normalized();
    if (!r.is_rational() && L % r.conductor() != 0) continue;
    if (r * r == d) return r;
  }
  return std::nullopt;
}

// Roots of p in Q(zeta_L): candidates first, then the exact formulas once
// the remaining factor has degree at most 2.
std::vector<CycloNumber> roots_in_field(std::vector<CycloNumber> p, int L, const std::vector<CycloNumber>& cands) {
  std::vector<CycloNumber> out;
  if (p.size() < 2) return out;
  for (const auto& c : cands)
    while (p.size() >= 2 && eval_poly(p, c).is_zero()) {
      if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
      p = deflate(p, c);
    }
  if (p.size() == 2) out.push_back((-p[0] / p[1]).normalized());
  if (p.size() == 3) {
    const CycloNumber disc = p[1] * p[1] - CycloNumber(4L) * p[0] * p[2];
    if (auto s = sqrt_in_field(disc, L))
      for (const CycloNumber& sg : {*s, -*s}) out.push_back(((-p[1] + sg) / (CycloNumber(2L) * p[2])).normalized());
  }
  return out;
}

Vec random_vector(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> d(-3, 3);
  Vec v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(i, CycloNumber(static_cast<long>(d(rng))));
  return v;
}

std::optional<std::vector<Vec>> search(const std::vector<Operator>& ops, std::size_t n, int L,
                                       std::mt19937& rng) {
  auto proper = [&](const std::vector<Vec>& w) { return !w.empty() && w.size() < n; };
  for (std::size_t b = 0; b < n; ++b) {
    auto w = spin(ops, Vec::unit(b));
    if (proper(w)) return w;
  }
  std::vector<Operator> probes = ops;
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int t = 0; t < 3 && !ops.empty(); ++t) {
    Operator m(n);
    for (const auto& op : ops) {
      const long c = coef(rng);
      if (!c) continue;
      for (std::size_t j = 0; j < n; ++j) m[j].axpy(CycloNumber(c), op[j]);
    }
    probes.push_back(std::move(m));
  }
  const auto cands = eigen_candidates(L);
  for (const auto& m : probes) {
    std::vector<CycloNumber> roots;
    for (int t = 0; t < 2; ++t)
      for (const auto& r : roots_in_field(krylov_polynomial(m, random_vector(rng, n)), L, cands))
        if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
    for (const auto& c : roots) {
      const auto ker = kernel(shifted(m, c));
      for (std::size_t k = 0; k < ker.size() && k < 4; ++k) {
        auto w = spin(ops, ker[k]);
        if (proper(w)) return w;
      }
    }
  }
  return std::nullopt;
}

// Operators restricted to the span of `basis` (assumed stable), in its coordinates.
std::vector<Operator> restrict_ops(const std::vector<Operator>& ops, const std::vector<Vec>& basis) {
  TrackedEchelon<CycloNumber> e;
  for (const auto& v : basis) e.insert(v);
  std::vector<Operator> out;
  for (const auto& op : ops) {
    Operator r;
    for (const auto& v : basis) {
      auto c = e.coordinates(apply_columns(op, v));
      if (!c) throw Error(ErrorKind::NotClosed, "subspace is not stable");
      r.push_back(*c);
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<Vec> lift(const std::vector<Vec>& coords, const std::vector<Vec>& basis) {
  std::vector<Vec> out;
  for (const auto& c : coords) out.push_back(apply_columns(basis, c));
  return out;
}

int conductor_of(const CycloNumber& c) { return c.is_rational() ? 1 : c.normalized().conductor(); }

}  // namespace

std::optional<std::vector<Vec>> find_invariant_subspace(const std::vector<Operator>& ops, std::size_t n,
                                                        int conductor, std::uint32_t seed) {
  if (n <= 1) return std::nullopt;
  std::mt19937 rng(seed);
  const int L = std::max(conductor, 1);
  if (auto w = search(ops, n, L, rng)) return w;
  std::vector<Operator> t;
  for (const auto& op : ops) t.push_back(transpose(op, n));
  if (auto w = search(t, n, L, rng)) {
    // The annihilator of a subspace stable under the transposes is stable.
    std::vector<Vec> cols(n);
    for (std::size_t u = 0; u < w->size(); ++u)
      for (const auto& [j, c] : (*w)[u]) cols[j].push_back(u, c);
    return span_basis(kernel(cols));
  }
  return std::nullopt;
}

std::size_t operator_algebra_dim(const std::vector<Operator>& ops, std::size_t n) {
  auto flatten = [n](const Operator& m) {
    Vec v;
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [i, c] : m[j]) v.push_back(j * n + i, c);
    return v;
  };
  Operator id(n);
  for (std::size_t j = 0; j < n; ++j) id[j] = Vec::unit(j);
  Echelon<CycloNumber> e;
  std::deque<Operator> queue;
  e.insert(flatten(id));
  queue.push_back(id);
  while (!queue.empty() && e.rank() < n * n) {
    const Operator m = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : ops) {
      Operator p(n);
      for (std::size_t j = 0; j < n; ++j) p[j] = apply_columns(g, m[j]);
      if (e.insert(flatten(p))) queue.push_back(std::move(p));
    }
  }
  return e.rank();
}

std::string to_string(Simplicity s) {
  switch (s) {
    case Simplicity::SplitSimple: return "split-simple";
    case Simplicity::Reducible: return "reducible";
    case Simplicity::Undecided: return "undecided";
  }
  return "undecided";
}

int structure_conductor(const Algebra& a) {
  int L = 1;
  for (const auto& v : a.mult)
    for (const auto& [i, c] : v) L = std::lcm(L, conductor_of(c));
  return L;
}

SimplicityResult check_simplicity(const ComoduleAlgebraRep& a, int conductor, std::uint32_t seed) {
  SimplicityResult r;
  const std::size_t n = a.dim();
  const std::size_t m = a.hopf->dim();
  int L = std::max(conductor, 1);
  L = std::lcm(L, structure_conductor(a.alg));
  for (const auto& v : a.coaction)
    for (const auto& [p, c] : v) L = std::lcm(L, conductor_of(c));

  std::vector<Operator> T(m, Operator(n));
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Accumulator<CycloNumber>> legs(m);
    for (const auto& [p, c] : a.coaction[i]) legs[p / n].add(p % n, c);
    for (std::size_t h = 0; h < m; ++h) T[h][i] = legs[h].finish();
  }
  // span{R_b T_h} is closed under composition, so it is the operator algebra.
  Echelon<CycloNumber> span;
  for (std::size_t h = 0; h < m && span.rank() < n * n; ++h) {
    bool zero = true;
    for (const auto& c : T[h]) zero = zero && c.empty();
    if (zero) continue;
    for (std::size_t b = 0; b < n && span.rank() < n * n; ++b) {
      Vec flat;
      for (std::size_t i = 0; i < n; ++i) {
        Accumulator<CycloNumber> col;
        for (const auto& [t, c] : T[h][i]) col.add(a.alg.product(t, b), c);
        for (const auto& [row, c] : col.finish()) flat.push_back(i * n + row, c);
      }
      span.insert(flat);
    }
  }
  r.operator_span = span.rank();
  if (r.operator_span == n * n) {
    r.verdict = Simplicity::SplitSimple;
    return r;
  }
  std::vector<Operator> ops;
  for (std::size_t b = 0; b < n; ++b) {
    Operator rb(n);
    for (std::size_t i = 0; i < n; ++i) rb[i] = a.alg.product(i, b);
    ops.push_back(std::move(rb));
  }
  for (auto& t : T) ops.push_back(std::move(t));
  if (auto w = find_invariant_subspace(ops, n, L, seed)) {
    r.verdict = Simplicity::Reducible;
    r.witness = std::move(*w);
    return r;
  }
  r.verdict = Simplicity::Undecided;
  r.note = "operator span has dimension " + std::to_string(r.operator_span) + " < " + std::to_string(n * n) +
           " and no costable right ideal was found over Q(zeta_" + std::to_string(L) +
           "); enlarge the conductor";
  return r;
}

namespace {

// Splits a commutative semisimple algebra (given by its multiplication
// operators on a stable subspace) into minimal ideals. Returns false when
// some ideal of dimension > 1 cannot be split over the field.
bool split_commutative(const std::vector<Operator>& ops, const std::vector<Vec>& ideal, const Algebra& alg,
                       int L, std::uint32_t seed, std::vector<std::vector<Vec>>& out) {
  if (ideal.size() <= 1) {
    out.push_back(ideal);
    return true;
  }
  const auto local = restrict_ops(ops, ideal);
  auto sub = find_invariant_subspace(local, ideal.size(), L, seed);
  if (!sub) {
    out.push_back(ideal);
    return false;
  }
  const std::vector<Vec> a = span_basis(lift(*sub, ideal));
  // Complement ideal: {x in ideal : x a = 0 for all a in the sub-ideal}.
  const std::size_t n = alg.dim;
  std::vector<Vec> cols;
  for (const auto& x : ideal) {
    Vec c;
    for (std::size_t t = 0; t < a.size(); ++t)
      for (const auto& [i, v] : alg.multiply(x, a[t])) c.push_back(t * n + i, v);
    cols.push_back(c);
  }
  const std::vector<Vec> b = span_basis(lift(kernel(cols), ideal));
  if (a.size() + b.size() != ideal.size()) {
    out.push_back(ideal);
    return false;
  }
  const bool ok1 = split_commutative(ops, a, alg, L, seed + 1, out);
  const bool ok2 = split_commutative(ops, b, alg, L, seed + 2, out);
  return ok1 && ok2;
}

}  // namespace

SimpleModulesResult simple_modules(const Algebra& a, int conductor, std::uint32_t seed) {
  SimpleModulesResult r;
  const std::size_t n = a.dim;
  const int L = std::lcm(std::max(conductor, 1), structure_conductor(a));

  // Trace form tr(L_{a_i a_j}); its radical is J(A) in characteristic zero.
  std::vector<CycloNumber> tr(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) tr[k] += a.product(k, i).get(i);
  std::vector<Vec> gram(n);
  for (std::size_t j = 0; j < n; ++j) {
    Vec col;
    for (std::size_t i = 0; i < n; ++i) {
      CycloNumber s;
      for (const auto& [k, c] : a.product(i, j)) s += c * tr[k];
      col.push_back(i, s);
    }
    gram[j] = col;
  }
  const std::vector<Vec> J = span_basis(kernel(gram));
  r.dim_radical = J.size();
  r.dim_semisimple = n - J.size();
  if (r.dim_semisimple == 0) return r;

  // A/J on representatives that are standard basis vectors.
  Echelon<CycloNumber> e;
  for (const auto& v : J) e.insert(v);
  std::vector<std::size_t> reps;
  for (std::size_t b = 0; b < n; ++b)
    if (e.insert(Vec::unit(b))) reps.push_back(b);
  TrackedEchelon<CycloNumber> coords;
  for (const auto& v : J) coords.insert(v);
  for (std::size_t b : reps) coords.insert(Vec::unit(b));
  const std::size_t nj = J.size(), nq = reps.size();
  auto project = [&](const Vec& v) {
    Vec out;
    const auto x = coords.coordinates(v);
    for (const auto& [i, c] : *x)
      if (i >= nj) out.push_back(i - nj, c);
    return out;
  };
  Algebra q;
  q.dim = nq;
  q.mult.resize(nq * nq);
  for (std::size_t i = 0; i < nq; ++i) {
    q.labels.push_back(a.labels.empty() ? "" : a.labels[reps[i]]);
    for (std::size_t j = 0; j < nq; ++j) q.mult[i * nq + j] = project(a.product(reps[i], reps[j]));
  }
  q.unit = project(a.unit);

  // Centre of A/J and its minimal ideals.
  std::vector<Vec> ccols;
  for (std::size_t i = 0; i < nq; ++i) {
    Vec c;
    for (std::size_t j = 0; j < nq; ++j)
      for (const auto& [t, v] : q.product(i, j) - q.product(j, i)) c.push_back(j * nq + t, v);
    ccols.push_back(c);
  }
  const std::vector<Vec> Z = span_basis(kernel(ccols));
  std::vector<Operator> zops;
  for (const auto& z : Z) {
    Operator op(nq);
    for (std::size_t j = 0; j < nq; ++j) op[j] = q.multiply(z, Vec::unit(j));
    zops.push_back(std::move(op));
  }
  std::vector<std::vector<Vec>> ideals;
  bool split = split_commutative(zops, Z, q, L, seed, ideals);

  std::vector<Operator> left;
  for (std::size_t b = 0; b < nq; ++b) {
    Operator op(nq);
    for (std::size_t j = 0; j < nq; ++j) op[j] = q.product(b, j);
    left.push_back(std::move(op));
  }
  for (const auto& ideal : ideals) {
    if (ideal.size() != 1) continue;
    // Central idempotent e = z / c where z^2 = c z.
    const Vec& z = ideal[0];
    const Vec z2 = q.multiply(z, z);
    const CycloNumber c = z2.get(z.leading()) / z.leading_value();
    const Vec idem = c.inverse() * z;
    std::vector<Vec> block;
    for (std::size_t b = 0; b < nq; ++b) block.push_back(q.multiply(Vec::unit(b), idem));
    block = span_basis(block);
    // Descend to a minimal left ideal inside the block.
    std::vector<Vec> M = block;
    std::uint32_t s = seed;
    while (M.size() > 1) {
      auto sub = find_invariant_subspace(restrict_ops(left, M), M.size(), L, s++);
      if (!sub) break;
      M = span_basis(lift(*sub, M));
    }
    const std::size_t d = M.size();
    if (operator_algebra_dim(restrict_ops(left, M), d) != d * d || d * d != block.size()) {
      split = false;
      continue;
    }
    r.blocks.push_back(static_cast<int>(d));
  }
  std::sort(r.blocks.begin(), r.blocks.end());
  r.split = split && !r.blocks.empty();
  if (!r.split) {
    r.blocks.clear();
    r.advice = "A/J does not split over Q(zeta_" + std::to_string(L) + "); enlarge the conductor";
  }
  return r;
}

}  // namespace qlsmodcat
