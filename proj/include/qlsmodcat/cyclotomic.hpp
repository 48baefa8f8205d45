#pragma once

#include <complex>
#include <string>
#include <vector>

#include "qlsmodcat/linalg.hpp"

namespace qlsmodcat {

namespace detail {
struct CycloContext;
const CycloContext& cyclo_context(int L);
}  // namespace detail

long lcm_long(long a, long b);

/// Element of Q(zeta_L), stored in the power basis modulo the L-th
/// cyclotomic polynomial. Binary operations rebase both operands to the lcm
/// of their conductors.
class CycloNumber {
 public:
  CycloNumber();
  CycloNumber(long n);  // NOLINT: integers convert implicitly
  CycloNumber(const Rational& r);  // NOLINT
  CycloNumber(int conductor, std::vector<Rational> coeffs);

  int conductor() const;
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// The rational value; only meaningful when is_rational().
  Rational rational() const;

  /// Same element at conductor L2. Going down requires the element to lie in
  /// the subfield; otherwise IncompatibleConductor.
  CycloNumber rebased(int L2) const;
  /// Same element at the least conductor whose field contains it.
  CycloNumber normalized() const;

  CycloNumber inverse() const;
  CycloNumber pow(long e) const;
  std::complex<double> to_complex() const;
  std::string to_string() const;

  CycloNumber operator-() const;
  CycloNumber& operator+=(const CycloNumber& b);
  CycloNumber& operator-=(const CycloNumber& b);
  CycloNumber& operator*=(const CycloNumber& b);
  CycloNumber& operator/=(const CycloNumber& b);

  friend CycloNumber operator+(CycloNumber a, const CycloNumber& b) { return a += b; }
  friend CycloNumber operator-(CycloNumber a, const CycloNumber& b) { return a -= b; }
  friend CycloNumber operator*(CycloNumber a, const CycloNumber& b) { return a *= b; }
  friend CycloNumber operator/(CycloNumber a, const CycloNumber& b) { return a /= b; }
  friend bool operator==(const CycloNumber& a, const CycloNumber& b);
  friend bool operator!=(const CycloNumber& a, const CycloNumber& b) { return !(a == b); }

 private:
  CycloNumber(const detail::CycloContext* ctx, std::vector<Rational> c)
      : ctx_(ctx), c_(std::move(c)) {}
  void align(CycloNumber& other);

  const detail::CycloContext* ctx_;
  std::vector<Rational> c_;
};

enum class FieldOp { Add, Sub, Mul, Div };
CycloNumber field_arith(const CycloNumber& a, const CycloNumber& b, FieldOp op);

/// zeta_L^k; stored at conductor L / gcd(L, k).
CycloNumber root_of_unity(int L, long k);
CycloNumber rebase(const CycloNumber& a, int L2);

/// If x is a root of unity of order dividing L, returns k with x = zeta_L^k.
std::optional<long> root_exponent(const CycloNumber& x, int L);
/// Multiplicative order of a root of unity x, searching orders dividing L.
std::optional<long> root_order(const CycloNumber& x, int L);

std::vector<Rational> cyclotomic_polynomial(int L);
int euler_phi(int L);

template <>
struct ScalarTraits<CycloNumber> {
  static bool is_zero(const CycloNumber& x) { return x.is_zero(); }
  static CycloNumber zero() { return CycloNumber(); }
  static CycloNumber one() { return CycloNumber(1L); }
};

using Vec = SparseVec<CycloNumber>;
using Scalar = CycloNumber;

}  // namespace qlsmodcat
