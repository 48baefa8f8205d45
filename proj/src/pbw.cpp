#include "qlsmodcat/pbw.hpp"

#include <sstream>

#include "qlsmodcat/errors.hpp"

namespace qlsmodcat {

void PbwPresentation::init(int m, std::vector<int> mul, std::vector<std::string> glabels, int s) {
  group_size = m;
  group_mul = std::move(mul);
  psi.assign(static_cast<std::size_t>(m) * m, CycloNumber(1L));
  group_labels = std::move(glabels);
  gen_names.assign(s, "");
  height.assign(s, 2);
  weight.assign(s, std::vector<CycloNumber>(m, CycloNumber(1L)));
  comm.assign(s, std::vector<CycloNumber>(s, CycloNumber(1L)));
  lower.assign(s, std::vector<Vec>(s));
  power.assign(s, Vec());
}

PbwAlgebra::PbwAlgebra(PbwPresentation p) : p_(std::move(p)) {
  const int s = p_.gens();
  for (int k = 0; k < s; ++k) {
    if (p_.height[k] < 1) throw Error(ErrorKind::OutOfRange, "generator height must be positive");
    monomials_ *= static_cast<std::size_t>(p_.height[k]);
  }
  exps_.resize(monomials_);
  for (std::size_t r = 0; r < monomials_; ++r) {
    std::vector<int> e(s);
    std::size_t x = r;
    for (int k = s - 1; k >= 0; --k) {
      e[k] = static_cast<int>(x % p_.height[k]);
      x /= p_.height[k];
    }
    exps_[r] = e;
  }
  const std::size_t m = p_.group_size;
  alg_.dim = monomials_ * m;
  for (std::size_t r = 0; r < monomials_; ++r)
    for (std::size_t f = 0; f < m; ++f) {
      std::ostringstream os;
      bool any = false;
      for (int k = 0; k < s; ++k) {
        if (exps_[r][k] == 0) continue;
        os << p_.gen_names[k];
        if (exps_[r][k] > 1) os << "^" << exps_[r][k];
        any = true;
      }
      if (any) os << "#";
      os << p_.group_labels[f];
      alg_.labels.push_back(os.str());
    }
  alg_.unit = Vec::unit(0);
  alg_.mult.resize(alg_.dim * alg_.dim);
  for (std::size_t a = 0; a < alg_.dim; ++a)
    for (std::size_t b = 0; b < alg_.dim; ++b) {
      const auto& ra = exps_[a / m];
      const auto& rb = exps_[b / m];
      const int fa = static_cast<int>(a % m), fb = static_cast<int>(b % m);
      // y^ra e_fa y^rb e_fb = wt * psi(fa,fb) * y^ra y^rb e_{fa fb}
      CycloNumber wt = p_.psi[fa * m + fb];
      for (int k = 0; k < s; ++k)
        if (rb[k]) wt *= p_.weight[k][fa].pow(rb[k]);
      Word w;
      for (int k = 0; k < s; ++k) w.insert(w.end(), ra[k], static_cast<unsigned char>(k));
      for (int k = 0; k < s; ++k) w.insert(w.end(), rb[k], static_cast<unsigned char>(k));
      alg_.mult[a * alg_.dim + b] = times_group(reduce(w, true), p_.group_mul[fa * m + fb], wt);
    }
}

std::size_t PbwAlgebra::index(const std::vector<int>& r, int f) const {
  std::size_t x = 0;
  for (int k = 0; k < p_.gens(); ++k) x = x * p_.height[k] + r[k];
  return x * p_.group_size + f;
}

int PbwAlgebra::degree(std::size_t b) const {
  int d = 0;
  for (int e : exps(b)) d += e;
  return d;
}

std::vector<int> PbwAlgebra::degrees() const {
  std::vector<int> out(alg_.dim);
  for (std::size_t b = 0; b < alg_.dim; ++b) out[b] = degree(b);
  return out;
}

Vec PbwAlgebra::generator(int k) const {
  std::vector<int> r(p_.gens(), 0);
  if (p_.height[k] == 1) return normal_form({k}, true);
  r[k] = 1;
  return Vec::unit(index(r, 0));
}

// v * c * e_g, where v is a combination of y^r e_h.
Vec PbwAlgebra::times_group(const Vec& v, int g, const CycloNumber& c) const {
  const std::size_t m = p_.group_size;
  Accumulator<CycloNumber> acc;
  for (const auto& [b, x] : v) {
    const std::size_t h = b % m;
    acc.add(b - h + p_.group_mul[h * m + g], x * c * p_.psi[h * m + g]);
  }
  return acc.finish();
}

Vec PbwAlgebra::normal_form(const std::vector<int>& word, bool leftmost) const {
  Word w;
  for (int k : word) w.push_back(static_cast<unsigned char>(k));
  return reduce(w, leftmost);
}

Vec PbwAlgebra::reduce(const Word& w, bool leftmost) const {
  if (leftmost) {
    if (auto it = memo_.find(w); it != memo_.end()) return it->second;
  }
  const int n = static_cast<int>(w.size());
  // Locate a reducible position: a descent or a run of N_k equal letters.
  int pos = -1;
  bool is_power = false;
  auto check = [&](int i) -> bool {
    const int k = w[i];
    const int N = p_.height[k];
    if (i + N <= n) {
      bool run = true;
      for (int t = 1; t < N && run; ++t) run = (w[i + t] == k);
      if (run) {
        pos = i;
        is_power = true;
        return true;
      }
    }
    if (i + 1 < n && w[i] > w[i + 1]) {
      pos = i;
      is_power = false;
      return true;
    }
    return false;
  };
  if (leftmost) {
    for (int i = 0; i < n; ++i)
      if (check(i)) break;
  } else {
    for (int i = n - 1; i >= 0; --i)
      if (check(i)) break;
  }
  Vec out;
  if (pos < 0) {
    std::vector<int> r(p_.gens(), 0);
    for (unsigned char k : w) ++r[k];
    out = Vec::unit(index(r, 0));
  } else {
    Accumulator<CycloNumber> acc;
    const int span = is_power ? p_.height[w[pos]] : 2;
    Word prefix(w.begin(), w.begin() + pos);
    Word suffix(w.begin() + pos + span, w.end());
    Word shortened = prefix;
    shortened.insert(shortened.end(), suffix.begin(), suffix.end());
    const Vec& group_term = is_power ? p_.power[w[pos]] : p_.lower[w[pos]][w[pos + 1]];
    if (!group_term.empty()) {
      const Vec base = reduce(shortened, leftmost);
      for (const auto& [g, c] : group_term) {
        // Move e_g to the right end past the suffix.
        CycloNumber wt = c;
        for (unsigned char t : suffix) wt *= p_.weight[t][g];
        acc.add(times_group(base, static_cast<int>(g), wt));
      }
    }
    if (!is_power) {
      const int l = w[pos], k = w[pos + 1];
      Word swapped = w;
      swapped[pos] = static_cast<unsigned char>(k);
      swapped[pos + 1] = static_cast<unsigned char>(l);
      acc.add(reduce(swapped, leftmost), p_.comm[l][k]);
    }
    out = acc.finish();
  }
  if (leftmost) memo_.emplace(w, out);
  return out;
}

std::optional<std::string> PbwAlgebra::confluence_check(int max_len) const {
  const int s = p_.gens();
  if (s == 0) return std::nullopt;
  std::vector<int> word;
  for (int len = 1; len <= max_len; ++len) {
    word.assign(len, 0);
    for (;;) {
      const Vec a = normal_form(word, true);
      const Vec b = normal_form(word, false);
      if (!(a == b)) {
        std::ostringstream os;
        os << "word";
        for (int k : word) os << " " << p_.gen_names[k];
        os << ": leftmost " << vec_to_string(a, alg_.labels) << " vs rightmost " << vec_to_string(b, alg_.labels);
        return os.str();
      }
      int p = len - 1;
      while (p >= 0 && ++word[p] == s) word[p--] = 0;
      if (p < 0) break;
    }
  }
  return std::nullopt;
}

PbwAlgebra build_pbw(PbwPresentation p, bool full_associativity_sweep) {
  PbwAlgebra a(std::move(p));
  if (auto bad = a.confluence_check(4)) throw Error(ErrorKind::ConfluenceFailure, *bad);
  if (full_associativity_sweep) {
    const AxiomReport r = verify_algebra(a.algebra());
    if (!r.ok()) throw Error(ErrorKind::ConfluenceFailure, "normal forms are not associative: " + r.summary());
  }
  return a;
}

}  // namespace qlsmodcat
