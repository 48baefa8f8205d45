#include "qlsmodcat/abelian_group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "qlsmodcat/errors.hpp"

namespace qlsmodcat {

AbelianGroup::AbelianGroup(std::vector<int> orders) : orders_(std::move(orders)) {
  for (int n : orders_) {
    if (n < 1) throw Error(ErrorKind::OutOfRange, "group orders must be positive");
    order_ *= n;
    exponent_ = std::lcm(exponent_, n);
  }
  const int r = rank();
  std::vector<std::vector<int>> all(order_);
  for (int i = 0; i < order_; ++i) all[i] = exps(i);
  mul_.resize(static_cast<std::size_t>(order_) * order_);
  inv_.resize(order_);
  elt_order_.resize(order_);
  std::vector<int> tmp(r);
  for (int a = 0; a < order_; ++a) {
    for (int b = 0; b < order_; ++b) {
      for (int k = 0; k < r; ++k) tmp[k] = all[a][k] + all[b][k];
      mul_[static_cast<std::size_t>(a) * order_ + b] = index(tmp);
    }
    for (int k = 0; k < r; ++k) tmp[k] = -all[a][k];
    inv_[a] = index(tmp);
    int o = 1;
    for (int k = 0; k < r; ++k) o = std::lcm(o, orders_[k] / std::gcd(orders_[k], all[a][k]));
    elt_order_[a] = o;
  }
}

std::vector<int> AbelianGroup::exps(int idx) const {
  std::vector<int> e(orders_.size());
  for (int k = rank() - 1; k >= 0; --k) {
    e[k] = idx % orders_[k];
    idx /= orders_[k];
  }
  return e;
}

int AbelianGroup::index(const std::vector<int>& e) const {
  if (e.size() != orders_.size()) throw Error(ErrorKind::ParentMismatch, "exponent vector has wrong length");
  int idx = 0;
  for (int k = 0; k < rank(); ++k) {
    int v = e[k] % orders_[k];
    if (v < 0) v += orders_[k];
    idx = idx * orders_[k] + v;
  }
  return idx;
}

int AbelianGroup::pow(int a, long k) const {
  const int o = elt_order_[a];
  long e = k % o;
  if (e < 0) e += o;
  int r = 0;
  for (long i = 0; i < e; ++i) r = mul(r, a);
  return r;
}

std::string AbelianGroup::to_string() const {
  if (orders_.empty()) return "1";
  std::ostringstream os;
  for (std::size_t k = 0; k < orders_.size(); ++k) os << (k ? "xZ" : "Z") << orders_[k];
  return os.str();
}

GroupElement::GroupElement(const AbelianGroup& g, std::vector<int> e) : parent(g), exps(std::move(e)) {
  exps = g.exps(g.index(exps));
}

Character::Character(const AbelianGroup& g, std::vector<int> e) : parent(g), exps(std::move(e)) {
  if (static_cast<int>(exps.size()) != g.rank())
    throw Error(ErrorKind::ParentMismatch, "character has wrong length");
  for (int k = 0; k < g.rank(); ++k) {
    exps[k] %= g.orders()[k];
    if (exps[k] < 0) exps[k] += g.orders()[k];
  }
}

long Character::exponent_at(int g_index) const {
  const auto e = parent.exps(g_index);
  const long E = parent.exponent();
  long s = 0;
  for (int k = 0; k < parent.rank(); ++k) s += static_cast<long>(exps[k]) * e[k] * (E / parent.orders()[k]);
  return s % E;
}

CycloNumber Character::operator()(int g_index) const { return root_of_unity(parent.exponent(), exponent_at(g_index)); }

Character Character::operator*(const Character& o) const {
  if (parent != o.parent) throw Error(ErrorKind::ParentMismatch, "characters of different groups");
  std::vector<int> e(exps.size());
  for (std::size_t k = 0; k < e.size(); ++k) e[k] = exps[k] + o.exps[k];
  return Character(parent, e);
}

Character Character::pow(long k) const {
  std::vector<int> e(exps.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<int>((exps[i] * k) % parent.orders()[i]);
  return Character(parent, e);
}

bool Character::is_trivial() const {
  return std::all_of(exps.begin(), exps.end(), [](int x) { return x == 0; });
}

CycloNumber evaluate_character(const Character& chi, const GroupElement& g) {
  if (chi.parent != g.parent) throw Error(ErrorKind::ParentMismatch, "character and element live in different groups");
  return chi(g.index());
}

namespace {

std::vector<int> closure(const AbelianGroup& g, std::vector<int> seed) {
  std::vector<char> in(g.order(), 0);
  std::vector<int> out{0};
  in[0] = 1;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (int s : seed) {
      const int p = g.mul(out[i], s);
      if (!in[p]) {
        in[p] = 1;
        out.push_back(p);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool meets_trivially(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> both;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
  return both.size() == 1;
}

std::set<std::vector<int>> subgroup_sets(const AbelianGroup& g) {
  std::set<std::vector<int>> seen;
  std::deque<std::vector<int>> queue;
  const std::vector<int> triv{0};
  seen.insert(triv);
  queue.push_back(triv);
  while (!queue.empty()) {
    const std::vector<int> s = queue.front();
    queue.pop_front();
    // Every subgroup is reached from a smaller one by adjoining one element.
    for (int x = 0; x < g.order(); ++x) {
      if (std::binary_search(s.begin(), s.end(), x)) continue;
      std::vector<int> gen = s;
      gen.push_back(x);
      auto t = closure(g, gen);
      if (seen.insert(t).second) queue.push_back(std::move(t));
    }
  }
  return seen;
}

struct Presentation {
  std::vector<int> factors;
  std::vector<int> gens;
};

Presentation present(const AbelianGroup& g, const std::vector<int>& elements) {
  if (elements.size() <= 1) return {};
  if (static_cast<int>(elements.size()) == g.order()) {
    // Standard generators when the orders already form a divisibility chain.
    Presentation p;
    bool chain = true;
    int prev = 1;
    for (int k = 0; k < g.rank(); ++k) {
      const int n = g.orders()[k];
      if (n == 1) continue;
      if (n % prev != 0) chain = false;
      prev = n;
      std::vector<int> e(g.rank(), 0);
      e[k] = 1;
      p.factors.push_back(n);
      p.gens.push_back(g.index(e));
    }
    if (chain) return p;
  }
  int a = elements[0];
  for (int x : elements)
    if (g.element_order(x) > g.element_order(a)) a = x;
  const std::vector<int> cyc = closure(g, {a});
  const std::size_t target = elements.size() / cyc.size();
  std::vector<int> comp{0};
  for (int x : elements) {
    if (comp.size() == target) break;
    if (std::binary_search(comp.begin(), comp.end(), x)) continue;
    std::vector<int> seed = comp;
    seed.push_back(x);
    auto next = closure(g, seed);
    if (meets_trivially(next, cyc)) comp = std::move(next);
  }
  if (comp.size() != target) {
    // Greedy growth stalled; fall back to an exhaustive complement search.
    comp.clear();
    for (const auto& el : subgroup_sets(g)) {
      if (el.size() != target) continue;
      if (!std::includes(elements.begin(), elements.end(), el.begin(), el.end())) continue;
      if (meets_trivially(el, cyc)) {
        comp = el;
        break;
      }
    }
    if (comp.empty()) throw Error(ErrorKind::NotClosed, "no complement found for a cyclic factor");
  }
  Presentation p = present(g, comp);
  p.factors.push_back(g.element_order(a));
  p.gens.push_back(a);
  return p;
}

}  // namespace

Subgroup::Subgroup(const AbelianGroup& parent, std::vector<int> elements)
    : parent_(parent), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  local_.assign(parent_.order(), -1);
  for (std::size_t i = 0; i < elements_.size(); ++i) local_[elements_[i]] = static_cast<int>(i);
  if (elements_.empty() || elements_[0] != 0) throw Error(ErrorKind::NotClosed, "subgroup must contain the identity");
  for (int a : elements_)
    for (int b : elements_)
      if (local_[parent_.mul(a, b)] < 0) throw Error(ErrorKind::NotClosed, "element set is not a subgroup");
  Presentation p = present(parent_, elements_);
  factors_ = p.factors;
  gens_ = p.gens;
  presented_ = AbelianGroup(factors_);
  coords_.assign(elements_.size(), {});
  for (int c = 0; c < presented_.order(); ++c) {
    const auto e = presented_.exps(c);
    int x = 0;
    for (std::size_t i = 0; i < e.size(); ++i) x = parent_.mul(x, parent_.pow(gens_[i], e[i]));
    coords_[local_[x]] = e;
  }
}

bool operator<(const Subgroup& a, const Subgroup& b) {
  return std::lexicographical_compare(a.elements_.begin(), a.elements_.end(), b.elements_.begin(),
                                      b.elements_.end());
}

Character Subgroup::restrict(const Character& chi) const {
  if (chi.parent != parent_) throw Error(ErrorKind::ParentMismatch, "character of a different group");
  const long E = parent_.exponent();
  std::vector<int> e(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const long k = chi.exponent_at(gens_[i]);
    e[i] = static_cast<int>((k * factors_[i] / E) % factors_[i]);
  }
  return Character(presented_, e);
}

std::string Subgroup::to_string() const {
  std::ostringstream os;
  os << "<";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) os << ",";
    os << "(";
    const auto e = parent_.exps(gens_[i]);
    for (std::size_t k = 0; k < e.size(); ++k) os << (k ? "," : "") << e[k];
    os << ")";
  }
  os << ">";
  return os.str();
}

Subgroup whole_group(const AbelianGroup& g) {
  std::vector<int> all(g.order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup(g, all);
}

Subgroup trivial_subgroup(const AbelianGroup& g) { return Subgroup(g, {0}); }

Subgroup generated_subgroup(const AbelianGroup& g, const std::vector<int>& gens) {
  return Subgroup(g, closure(g, gens));
}

std::vector<Subgroup> enumerate_subgroups(const AbelianGroup& g, int max_order) {
  if (g.order() > max_order) {
    throw Error(ErrorKind::SizeBound, "group order " + std::to_string(g.order()) + " exceeds bound " +
                                          std::to_string(max_order));
  }
  const auto seen = subgroup_sets(g);
  std::vector<Subgroup> out;
  out.reserve(seen.size());
  for (const auto& s : seen) out.emplace_back(g, s);  // std::set order is lexicographic
  return out;
}

TwoCocycle::TwoCocycle(Subgroup f, std::vector<CycloNumber> table) : f_(std::move(f)), table_(std::move(table)) {
  const int n = f_.size();
  if (table_.size() != static_cast<std::size_t>(n) * n)
    throw Error(ErrorKind::DimensionMismatch, "cocycle table has wrong size");
  const auto& m = f_.invariant_factors();
  const auto& h = f_.generators();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      const int a = f_.local(h[i]);
      const int b = f_.local(h[j]);
      const CycloNumber w = at(a, b) / at(b, a);
      const int d = std::gcd(m[i], m[j]);
      auto k = root_exponent(w, d);
      if (!k) throw Error(ErrorKind::CocycleInvalid, "alternating form value is not a root of unity of the expected order");
      class_.push_back(static_cast<int>(*k));
    }
  }
}

TwoCocycle TwoCocycle::trivial(const Subgroup& f) {
  return TwoCocycle(f, std::vector<CycloNumber>(static_cast<std::size_t>(f.size()) * f.size(), CycloNumber(1L)));
}

std::string TwoCocycle::class_tag() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < class_.size(); ++i) os << (i ? "," : "") << class_[i];
  os << "]";
  return os.str();
}

bool TwoCocycle::is_class_trivial() const {
  return std::all_of(class_.begin(), class_.end(), [](int x) { return x == 0; });
}

std::optional<std::string> TwoCocycle::check_identity() const {
  const int n = f_.size();
  for (int a = 0; a < n; ++a) {
    if (!at(0, a).is_one() || !at(a, 0).is_one()) return "not normalized at element " + std::to_string(f_.element(a));
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const CycloNumber lhs = at(a, b) * at(f_.mul_local(a, b), c);
        const CycloNumber rhs = at(b, c) * at(a, f_.mul_local(b, c));
        if (lhs != rhs) {
          return "cocycle identity fails at (" + std::to_string(f_.element(a)) + "," +
                 std::to_string(f_.element(b)) + "," + std::to_string(f_.element(c)) + ")";
        }
      }
  return std::nullopt;
}

bool TwoCocycle::inverse_normalized() const {
  for (int a = 0; a < f_.size(); ++a)
    if (!at(f_.inv_local(a), a).is_one()) return false;
  return true;
}

TwoCocycle bicharacter_cocycle(const Subgroup& f, const std::vector<int>& k) {
  const auto& m = f.invariant_factors();
  const int s = static_cast<int>(m.size());
  const int n = f.size();
  const int E = std::max(1, f.exponent());
  // Exponent of psi(a,b) as a power of zeta_E.
  std::vector<long> ex(static_cast<std::size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const auto& ca = f.coords(a);
      const auto& cb = f.coords(b);
      long e = 0;
      int p = 0;
      for (int i = 0; i < s; ++i)
        for (int j = i + 1; j < s; ++j, ++p) {
          const int d = std::gcd(m[i], m[j]);
          e += static_cast<long>(k[p]) * ca[i] * cb[j] * (E / d);
        }
      ex[static_cast<std::size_t>(a) * n + b] = ((e % E) + E) % E;
    }
  // Greedy coboundary at conductor 2E: mu(g) with psi(g^{-1},g) mu(g) mu(g^{-1}) = 1.
  std::vector<long> mu(n, 0);  // exponents of zeta_{2E}
  std::vector<char> done(n, 0);
  done[0] = 1;
  for (int g = 1; g < n; ++g) {
    if (done[g]) continue;
    const int gi = f.inv_local(g);
    const long t = ex[static_cast<std::size_t>(gi) * n + g];  // psi(g^{-1},g) = zeta_E^t
    if (gi == g) {
      mu[g] = (2 * E - t) % (2 * E);  // zeta_{2E}^{-t} squares to zeta_E^{-t}
    } else {
      mu[g] = (2 * E - 2 * t) % (2 * E);
      mu[gi] = 0;
      done[gi] = 1;
    }
    done[g] = 1;
  }
  std::vector<CycloNumber> table;
  table.reserve(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const long e = 2 * ex[static_cast<std::size_t>(a) * n + b] + mu[a] + mu[b] - mu[f.mul_local(a, b)];
      table.push_back(root_of_unity(2 * E, e));
    }
  return TwoCocycle(f, std::move(table));
}

std::vector<TwoCocycle> cocycle_classes(const Subgroup& f) {
  const auto& m = f.invariant_factors();
  std::vector<int> radix;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j) radix.push_back(std::gcd(m[i], m[j]));
  std::vector<TwoCocycle> out;
  std::vector<int> k(radix.size(), 0);
  for (;;) {
    out.push_back(bicharacter_cocycle(f, k));
    int p = static_cast<int>(k.size()) - 1;
    while (p >= 0 && ++k[p] == radix[p]) k[p--] = 0;
    if (p < 0) break;
  }
  return out;
}

Character psi_g(const TwoCocycle& psi, int g_parent) {
  const Subgroup& f = psi.subgroup();
  if (g_parent < 0 || g_parent >= f.parent().order() || !f.contains(g_parent))
    throw Error(ErrorKind::NotInSubgroup, "element " + std::to_string(g_parent) + " is not in F");
  const int g = f.local(g_parent);
  const auto& m = f.invariant_factors();
  std::vector<int> e(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    const int h = f.local(f.generators()[i]);
    const CycloNumber v = psi.at(h, g) / psi.at(g, h);
    auto k = root_exponent(v, m[i]);
    if (!k) throw Error(ErrorKind::CocycleInvalid, "psi_g is not a character");
    e[i] = static_cast<int>(*k);
  }
  return Character(f.presented(), e);
}

CycloNumber cocycle_eval(const TwoCocycle& psi, int f_parent, int g_parent) {
  const Subgroup& f = psi.subgroup();
  const int n = f.parent().order();
  if (f_parent < 0 || f_parent >= n || g_parent < 0 || g_parent >= n || !f.contains(f_parent) ||
      !f.contains(g_parent))
    throw Error(ErrorKind::NotInSubgroup, "cocycle evaluated outside F");
  return psi.at(f.local(f_parent), f.local(g_parent));
}

TwoCocycle multiply_by_coboundary(const TwoCocycle& psi, const std::vector<CycloNumber>& mu) {
  const Subgroup& f = psi.subgroup();
  const int n = f.size();
  std::vector<CycloNumber> table;
  table.reserve(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table.push_back(psi.at(a, b) * mu[a] * mu[b] / mu[f.mul_local(a, b)]);
  return TwoCocycle(f, std::move(table));
}

}  // namespace qlsmodcat
