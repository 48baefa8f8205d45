#include "qlsmodcat/qls_datum.hpp"

#include <numeric>
#include <sstream>

#include "qlsmodcat/errors.hpp"

namespace qlsmodcat {

QlsDatum::QlsDatum(AbelianGroup group, std::vector<int> g, std::vector<Character> chi)
    : group_(std::move(group)), g_(std::move(g)), chi_(std::move(chi)) {
  if (g_.size() != chi_.size()) throw Error(ErrorKind::DimensionMismatch, "g and chi lists differ in length");
  for (int x : g_)
    if (x < 0 || x >= group_.order()) throw Error(ErrorKind::OutOfRange, "g_i outside the group");
  for (const auto& c : chi_)
    if (c.parent != group_) throw Error(ErrorKind::ParentMismatch, "chi_i is a character of another group");
  const long E = group_.exponent();
  for (int i = 0; i < theta(); ++i) {
    const long k = chi_[i].exponent_at(g_[i]);
    N_.push_back(static_cast<int>(E / std::gcd(k, E)));
  }
}

void ValidationReport::fail(std::string condition, std::vector<int> idx, std::string detail) {
  ok = false;
  violations.push_back(Violation{std::move(condition), std::move(idx), std::move(detail)});
}

std::string ValidationReport::summary() const {
  if (ok) return "valid";
  std::ostringstream os;
  os << "invalid:";
  for (const auto& v : violations) {
    os << " " << v.condition << "(";
    for (std::size_t k = 0; k < v.indices.size(); ++k) os << (k ? "," : "") << v.indices[k] + 1;
    os << ") " << v.detail << ";";
  }
  return os.str();
}

ValidationReport validate_datum(const QlsDatum& d) {
  ValidationReport r;
  for (int i = 0; i < d.theta(); ++i) {
    const CycloNumber qi = d.q(i);
    if (qi.is_one()) r.fail("q-nontrivial", {i}, "q_" + std::to_string(i + 1) + " = chi_i(g_i) = 1");
  }
  for (int i = 0; i < d.theta(); ++i)
    for (int j = i + 1; j < d.theta(); ++j) {
      const CycloNumber p = d.q(i, j) * d.q(j, i);
      if (!p.is_one()) {
        r.fail("q-pairing", {i, j}, "q_ij q_ji = " + p.normalized().to_string() + " != 1");
      }
    }
  return r;
}

CycloNumber gaussian_binomial(int l, int k, const CycloNumber& q) {
  if (l < 0 || k < 0 || k > l) throw Error(ErrorKind::OutOfRange, "gaussian_binomial needs 0 <= k <= l");
  // row[j] = (n choose j)_q; (n+1 choose j) = (n choose j-1) + q^j (n choose j).
  std::vector<CycloNumber> row{CycloNumber(1L)};
  for (int n = 0; n < l; ++n) {
    std::vector<CycloNumber> next(n + 2);
    next[0] = CycloNumber(1L);
    next[n + 1] = CycloNumber(1L);
    for (int j = 1; j <= n; ++j) next[j] = row[j - 1] + q.pow(j) * row[j];
    row = std::move(next);
  }
  return row[k];
}

}  // namespace qlsmodcat
