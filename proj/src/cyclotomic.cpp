#include "qlsmodcat/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "qlsmodcat/errors.hpp"

namespace qlsmodcat {

namespace detail {

struct CycloContext {
  int L = 1;
  int deg = 1;
  // x^k mod Phi_L for 0 <= k < max(L, 2*deg - 1), dense length deg.
  std::vector<std::vector<Rational>> xpow;
};

namespace {

using Poly = std::vector<Rational>;  // low degree first

Poly poly_divide_exact(Poly num, const Poly& den) {
  const std::size_t dn = den.size() - 1;
  if (num.size() < den.size()) return Poly{Rational(0)};
  Poly q(num.size() - dn, Rational(0));
  for (std::size_t k = num.size(); k-- > dn;) {
    Rational c = num[k] / den[dn];
    q[k - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[k - dn + j] -= c * den[j];
  }
  return q;
}

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

std::map<int, Poly>& phi_cache() {
  static std::map<int, Poly> c;
  return c;
}

Poly phi_locked(int L) {
  auto& cache = phi_cache();
  if (auto it = cache.find(L); it != cache.end()) return it->second;
  Poly p(L + 1, Rational(0));
  p[0] = -1;
  p[L] = 1;
  for (int d = 1; d < L; ++d) {
    if (L % d == 0) p = poly_divide_exact(p, phi_locked(d));
  }
  cache[L] = p;
  return p;
}

}  // namespace

const CycloContext& cyclo_context(int L) {
  if (L < 1) throw Error(ErrorKind::OutOfRange, "conductor must be positive");
  static std::map<int, std::unique_ptr<CycloContext>> contexts;
  std::lock_guard<std::mutex> lock(cache_mutex());
  if (auto it = contexts.find(L); it != contexts.end()) return *it->second;
  auto ctx = std::make_unique<CycloContext>();
  const Poly phi = phi_locked(L);
  ctx->L = L;
  ctx->deg = static_cast<int>(phi.size()) - 1;
  const int deg = ctx->deg;
  const int count = std::max(L, 2 * deg - 1);
  ctx->xpow.assign(count, std::vector<Rational>(deg, Rational(0)));
  for (int k = 0; k < count; ++k) {
    if (k < deg) {
      ctx->xpow[k][k] = 1;
      continue;
    }
    // x^k = x * x^{k-1}; shift and reduce the overflowing top coefficient.
    const auto& prev = ctx->xpow[k - 1];
    auto& cur = ctx->xpow[k];
    const Rational top = prev[deg - 1];
    for (int j = deg - 1; j >= 1; --j) cur[j] = prev[j - 1];
    cur[0] = 0;
    if (sgn(top) != 0) {
      for (int j = 0; j < deg; ++j) cur[j] -= top * phi[j];
    }
  }
  const CycloContext* out = ctx.get();
  contexts.emplace(L, std::move(ctx));
  return *out;
}

}  // namespace detail

using detail::CycloContext;
using detail::cyclo_context;

long lcm_long(long a, long b) { return std::lcm(a, b); }

std::vector<Rational> cyclotomic_polynomial(int L) {
  const auto& ctx = cyclo_context(L);
  (void)ctx;
  std::lock_guard<std::mutex> lock(detail::cache_mutex());
  return detail::phi_locked(L);
}

int euler_phi(int L) { return cyclo_context(L).deg; }

CycloNumber::CycloNumber() : ctx_(&cyclo_context(1)), c_{Rational(0)} {}

CycloNumber::CycloNumber(long n) : ctx_(&cyclo_context(1)), c_{Rational(n)} {}

CycloNumber::CycloNumber(const Rational& r) : ctx_(&cyclo_context(1)), c_{r} { c_[0].canonicalize(); }

CycloNumber::CycloNumber(int conductor, std::vector<Rational> coeffs)
    : ctx_(&cyclo_context(conductor)) {
  const int deg = ctx_->deg;
  c_.assign(deg, Rational(0));
  // Accept any length: entries beyond deg are powers of zeta to reduce.
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    coeffs[k].canonicalize();
    if (sgn(coeffs[k]) == 0) continue;
    const std::size_t e = k % static_cast<std::size_t>(ctx_->L);
    const auto& row = ctx_->xpow[e];
    for (int j = 0; j < deg; ++j) c_[j] += coeffs[k] * row[j];
  }
}

int CycloNumber::conductor() const { return ctx_->L; }

bool CycloNumber::is_zero() const {
  for (const auto& x : c_)
    if (sgn(x) != 0) return false;
  return true;
}

bool CycloNumber::is_rational() const {
  for (std::size_t j = 1; j < c_.size(); ++j)
    if (sgn(c_[j]) != 0) return false;
  return true;
}

Rational CycloNumber::rational() const { return c_[0]; }

bool CycloNumber::is_one() const { return is_rational() && c_[0] == 1; }

namespace {

// Coefficients of a at conductor M, where L(a) divides M.
std::vector<Rational> lift(const CycloContext& from, const std::vector<Rational>& c,
                           const CycloContext& to) {
  const int m = to.L / from.L;
  std::vector<Rational> out(to.deg, Rational(0));
  for (int i = 0; i < from.deg; ++i) {
    if (sgn(c[i]) == 0) continue;
    const auto& row = to.xpow[(static_cast<long>(i) * m) % to.L];
    for (int j = 0; j < to.deg; ++j)
      if (sgn(row[j]) != 0) out[j] += c[i] * row[j];
  }
  return out;
}

SparseVec<Rational> to_sparse(const std::vector<Rational>& c) {
  SparseVec<Rational> v;
  for (std::size_t j = 0; j < c.size(); ++j) v.push_back(j, c[j]);
  return v;
}

// Attempts to express c (at conductor `to.L` multiple of `sub.L`) in the
// subfield of conductor sub.L.
std::optional<std::vector<Rational>> descend(const CycloContext& sub,
                                             const std::vector<Rational>& c,
                                             const CycloContext& full) {
  TrackedEchelon<Rational> e;
  const int m = full.L / sub.L;
  for (int i = 0; i < sub.deg; ++i) {
    e.insert(to_sparse(full.xpow[(static_cast<long>(i) * m) % full.L]));
  }
  auto coords = e.coordinates(to_sparse(c));
  if (!coords) return std::nullopt;
  std::vector<Rational> out(sub.deg, Rational(0));
  for (const auto& [i, v] : *coords) out[i] = v;
  return out;
}

}  // namespace

CycloNumber CycloNumber::rebased(int L2) const {
  if (L2 < 1) throw Error(ErrorKind::IncompatibleConductor, "conductor must be positive");
  if (L2 == ctx_->L) return *this;
  const auto& target = cyclo_context(L2);
  if (L2 % ctx_->L == 0) return CycloNumber(&target, lift(*ctx_, c_, target));
  const long M = std::lcm(static_cast<long>(L2), static_cast<long>(ctx_->L));
  const auto& full = cyclo_context(static_cast<int>(M));
  const auto up = (M == ctx_->L) ? c_ : lift(*ctx_, c_, full);
  auto down = descend(target, up, full);
  if (!down) {
    throw Error(ErrorKind::IncompatibleConductor,
                to_string() + " does not lie in Q(zeta_" + std::to_string(L2) + ")");
  }
  return CycloNumber(&target, std::move(*down));
}

CycloNumber CycloNumber::normalized() const {
  if (ctx_->L == 1 || is_rational()) return CycloNumber(c_[0]);
  for (int d = 1; d < ctx_->L; ++d) {
    if (ctx_->L % d != 0) continue;
    if (auto down = descend(cyclo_context(d), c_, *ctx_))
      return CycloNumber(&cyclo_context(d), std::move(*down));
  }
  return *this;
}

void CycloNumber::align(CycloNumber& other) {
  if (ctx_ == other.ctx_) return;
  const int M = static_cast<int>(std::lcm(static_cast<long>(ctx_->L), static_cast<long>(other.ctx_->L)));
  if (ctx_->L != M) *this = rebased(M);
  if (other.ctx_->L != M) other = other.rebased(M);
}

CycloNumber CycloNumber::operator-() const {
  CycloNumber r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

CycloNumber& CycloNumber::operator+=(const CycloNumber& b) {
  if (ctx_ == b.ctx_) {
    for (std::size_t j = 0; j < c_.size(); ++j) c_[j] += b.c_[j];
    return *this;
  }
  if (b.ctx_->L == 1) {
    c_[0] += b.c_[0];
    return *this;
  }
  CycloNumber bb = b;
  align(bb);
  for (std::size_t j = 0; j < c_.size(); ++j) c_[j] += bb.c_[j];
  return *this;
}

CycloNumber& CycloNumber::operator-=(const CycloNumber& b) { return *this += -b; }

CycloNumber& CycloNumber::operator*=(const CycloNumber& b) {
  if (b.ctx_->L == 1) {
    for (auto& x : c_) x *= b.c_[0];
    return *this;
  }
  if (ctx_->L == 1) {
    const Rational s = c_[0];
    *this = b;
    for (auto& x : c_) x *= s;
    return *this;
  }
  CycloNumber bb = b;
  align(bb);
  const int deg = ctx_->deg;
  std::vector<Rational> prod(2 * deg - 1, Rational(0));
  for (int i = 0; i < deg; ++i) {
    if (sgn(c_[i]) == 0) continue;
    for (int j = 0; j < deg; ++j)
      if (sgn(bb.c_[j]) != 0) prod[i + j] += c_[i] * bb.c_[j];
  }
  std::vector<Rational> out(deg, Rational(0));
  for (int k = 0; k < 2 * deg - 1; ++k) {
    if (sgn(prod[k]) == 0) continue;
    if (k < deg) {
      out[k] += prod[k];
      continue;
    }
    const auto& row = ctx_->xpow[k];
    for (int j = 0; j < deg; ++j)
      if (sgn(row[j]) != 0) out[j] += prod[k] * row[j];
  }
  c_ = std::move(out);
  return *this;
}

CycloNumber CycloNumber::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  if (is_rational()) {
    CycloNumber r = *this;
    r.c_[0] = 1 / c_[0];
    for (std::size_t j = 1; j < r.c_.size(); ++j) r.c_[j] = 0;
    return r;
  }
  // Solve a * x = 1 in the power basis: column j is a * zeta^j.
  TrackedEchelon<Rational> e;
  for (int j = 0; j < ctx_->deg; ++j) {
    std::vector<Rational> z(ctx_->deg, Rational(0));
    z[j] = 1;
    CycloNumber col = *this * CycloNumber(ctx_->L, z);
    e.insert(to_sparse(col.c_));
  }
  std::vector<Rational> one(ctx_->deg, Rational(0));
  one[0] = 1;
  auto coords = e.coordinates(to_sparse(one));
  std::vector<Rational> out(ctx_->deg, Rational(0));
  for (const auto& [i, v] : *coords) out[i] = v;
  return CycloNumber(ctx_, std::move(out));
}

CycloNumber& CycloNumber::operator/=(const CycloNumber& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
  return *this *= b.inverse();
}

CycloNumber CycloNumber::pow(long e) const {
  CycloNumber base = e < 0 ? inverse() : *this;
  unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  CycloNumber acc(1L);
  while (n) {
    if (n & 1UL) acc *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return acc;
}

bool operator==(const CycloNumber& a, const CycloNumber& b) {
  if (a.ctx_ == b.ctx_) return a.c_ == b.c_;
  CycloNumber x = a;
  CycloNumber y = b;
  x.align(y);
  return x.c_ == y.c_;
}

std::complex<double> CycloNumber::to_complex() const {
  std::complex<double> s = 0;
  const double two_pi = 2.0 * std::acos(-1.0);
  for (int j = 0; j < ctx_->deg; ++j) {
    if (sgn(c_[j]) == 0) continue;
    s += c_[j].get_d() * std::polar(1.0, two_pi * j / ctx_->L);
  }
  return s;
}

std::string CycloNumber::to_string() const {
  if (is_rational()) return c_[0].get_str();
  std::ostringstream os;
  bool first = true;
  for (int j = 0; j < ctx_->deg; ++j) {
    if (sgn(c_[j]) == 0) continue;
    const Rational& v = c_[j];
    const bool neg = sgn(v) < 0;
    if (!first) os << (neg ? " - " : " + ");
    else if (neg) os << "-";
    const Rational mag = abs(v);
    if (j == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << "z" << ctx_->L;
      if (j > 1) os << "^" << j;
    }
    first = false;
  }
  return os.str();
}

CycloNumber field_arith(const CycloNumber& a, const CycloNumber& b, FieldOp op) {
  switch (op) {
    case FieldOp::Add: return a + b;
    case FieldOp::Sub: return a - b;
    case FieldOp::Mul: return a * b;
    case FieldOp::Div: return a / b;
  }
  return a;
}

CycloNumber root_of_unity(int L, long k) {
  if (L < 1) throw Error(ErrorKind::OutOfRange, "root_of_unity needs L >= 1");
  long e = k % L;
  if (e < 0) e += L;
  const long g = std::gcd(e, static_cast<long>(L));
  const int L2 = static_cast<int>(L / g);
  const long e2 = e / g;
  const auto& ctx = cyclo_context(L2);
  return CycloNumber(L2, ctx.xpow[e2]);
}

CycloNumber rebase(const CycloNumber& a, int L2) {
  if (L2 < 1 || L2 % a.conductor() != 0) {
    // Permit exact descent; failure raises IncompatibleConductor.
    return a.rebased(L2);
  }
  return a.rebased(L2);
}

std::optional<long> root_exponent(const CycloNumber& x, int L) {
  if (L < 1) return std::nullopt;
  for (long k = 0; k < L; ++k) {
    if (root_of_unity(L, k) == x) return k;
  }
  return std::nullopt;
}

std::optional<long> root_order(const CycloNumber& x, int L) {
  auto k = root_exponent(x, L);
  if (!k) return std::nullopt;
  return L / std::gcd(*k, static_cast<long>(L));
}

}  // namespace qlsmodcat
