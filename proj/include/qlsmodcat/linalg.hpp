#pragma once

// Exact sparse linear algebra over an arbitrary field type.
//
// Everything in the library reduces to three questions about finitely many
// vectors: is this vector in the span, what is the kernel of this map, and
// what are the coordinates of this vector in that spanning set. The classes
// below answer them by incremental Gaussian elimination on sorted sparse
// rows; the scalar type only needs field operations plus ScalarTraits.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace qlsmodcat {

using Rational = mpq_class;

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
};

template <class T>
class SparseVec {
 public:
  using Entry = std::pair<std::size_t, T>;

  SparseVec() = default;

  static SparseVec unit(std::size_t i) { return single(i, ScalarTraits<T>::one()); }
  static SparseVec single(std::size_t i, T value) {
    SparseVec v;
    if (!ScalarTraits<T>::is_zero(value)) v.e_.emplace_back(i, std::move(value));
    return v;
  }

  const std::vector<Entry>& entries() const { return e_; }
  bool empty() const { return e_.empty(); }
  std::size_t nnz() const { return e_.size(); }
  auto begin() const { return e_.begin(); }
  auto end() const { return e_.end(); }

  /// Appends an entry; the caller guarantees strictly increasing indices.
  void push_back(std::size_t i, T value) {
    if (!ScalarTraits<T>::is_zero(value)) e_.emplace_back(i, std::move(value));
  }

  std::size_t leading() const { return e_.front().first; }
  const T& leading_value() const { return e_.front().second; }

  T get(std::size_t i) const {
    auto it = std::lower_bound(e_.begin(), e_.end(), i,
                               [](const Entry& a, std::size_t b) { return a.first < b; });
    if (it != e_.end() && it->first == i) return it->second;
    return ScalarTraits<T>::zero();
  }

  /// this += a * x
  SparseVec& axpy(const T& a, const SparseVec& x) {
    if (ScalarTraits<T>::is_zero(a) || x.empty()) return *this;
    std::vector<Entry> out;
    out.reserve(e_.size() + x.e_.size());
    auto i = e_.begin();
    auto j = x.e_.begin();
    while (i != e_.end() || j != x.e_.end()) {
      if (j == x.e_.end() || (i != e_.end() && i->first < j->first)) {
        out.push_back(std::move(*i));
        ++i;
      } else if (i == e_.end() || j->first < i->first) {
        T v = a * j->second;
        if (!ScalarTraits<T>::is_zero(v)) out.emplace_back(j->first, std::move(v));
        ++j;
      } else {
        T v = i->second + a * j->second;
        if (!ScalarTraits<T>::is_zero(v)) out.emplace_back(i->first, std::move(v));
        ++i;
        ++j;
      }
    }
    e_ = std::move(out);
    return *this;
  }

  SparseVec& operator*=(const T& a) {
    if (ScalarTraits<T>::is_zero(a)) {
      e_.clear();
      return *this;
    }
    for (auto& [i, v] : e_) v = v * a;
    return *this;
  }

  SparseVec& operator+=(const SparseVec& x) { return axpy(ScalarTraits<T>::one(), x); }
  SparseVec& operator-=(const SparseVec& x) { return axpy(-ScalarTraits<T>::one(), x); }

  friend SparseVec operator+(SparseVec a, const SparseVec& b) { return a += b; }
  friend SparseVec operator-(SparseVec a, const SparseVec& b) { return a -= b; }
  friend SparseVec operator*(const T& s, SparseVec a) { return a *= s; }

  friend bool operator==(const SparseVec& a, const SparseVec& b) {
    if (a.e_.size() != b.e_.size()) return false;
    for (std::size_t k = 0; k < a.e_.size(); ++k) {
      if (a.e_[k].first != b.e_[k].first) return false;
      if (!(a.e_[k].second == b.e_[k].second)) return false;
    }
    return true;
  }

 private:
  std::vector<Entry> e_;
};

/// Order-independent accumulation of (index, value) contributions.
template <class T>
class Accumulator {
 public:
  void add(std::size_t i, const T& v) {
    if (ScalarTraits<T>::is_zero(v)) return;
    auto [it, inserted] = m_.try_emplace(i, v);
    if (!inserted) it->second = it->second + v;
  }
  void add(const SparseVec<T>& v, const T& scale) {
    for (const auto& [i, x] : v) add(i, scale * x);
  }
  void add(const SparseVec<T>& v) {
    for (const auto& [i, x] : v) add(i, x);
  }
  SparseVec<T> finish() const {
    SparseVec<T> out;
    for (const auto& [i, v] : m_) out.push_back(i, v);
    return out;
  }

 private:
  std::map<std::size_t, T> m_;
};

/// Row-echelon basis of a subspace; rows are normalized to leading value 1.
template <class T>
class Echelon {
 public:
  /// Reduces v against every pivot it touches; the residue is canonical for
  /// the coset v + span.
  SparseVec<T> reduce(SparseVec<T> v) const {
    std::size_t cursor = 0;
    for (;;) {
      const typename SparseVec<T>::Entry* hit = nullptr;
      const SparseVec<T>* row = nullptr;
      for (const auto& entry : v) {
        if (entry.first < cursor) continue;
        auto it = rows_.find(entry.first);
        if (it != rows_.end()) {
          hit = &entry;
          row = &it->second;
          break;
        }
      }
      if (!hit) return v;
      const std::size_t p = hit->first;
      const T c = hit->second;
      v.axpy(-c, *row);
      cursor = p + 1;
    }
  }

  bool contains(const SparseVec<T>& v) const { return reduce(v).empty(); }

  /// Inserts v; returns false when v already lies in the span.
  bool insert(const SparseVec<T>& v) {
    SparseVec<T> r = reduce(v);
    if (r.empty()) return false;
    const T inv = ScalarTraits<T>::one() / r.leading_value();
    r *= inv;
    rows_.emplace(r.leading(), std::move(r));
    return true;
  }

  std::size_t rank() const { return rows_.size(); }

  std::vector<SparseVec<T>> basis() const {
    std::vector<SparseVec<T>> out;
    out.reserve(rows_.size());
    for (const auto& [p, r] : rows_) out.push_back(r);
    return out;
  }

  std::vector<std::size_t> pivots() const {
    std::vector<std::size_t> out;
    for (const auto& [p, r] : rows_) out.push_back(p);
    return out;
  }

 private:
  std::map<std::size_t, SparseVec<T>> rows_;
};

/// Echelon form that remembers how each row was combined from the inserted
/// vectors; yields kernels and coordinates.
template <class T>
class TrackedEchelon {
 public:
  /// Inserts the next vector (index = number of prior insertions). Returns
  /// the linear dependency among inserted vectors when v is dependent.
  std::optional<SparseVec<T>> insert(SparseVec<T> v) {
    SparseVec<T> h = SparseVec<T>::unit(count_++);
    reduce_tracked(v, h, -ScalarTraits<T>::one());
    if (v.empty()) return h;
    const T inv = ScalarTraits<T>::one() / v.leading_value();
    v *= inv;
    h *= inv;
    const std::size_t p = v.leading();
    rows_.emplace(p, Row{std::move(v), std::move(h)});
    return std::nullopt;
  }

  /// Coordinates of v in terms of the inserted vectors, if v is in the span.
  std::optional<SparseVec<T>> coordinates(SparseVec<T> v) const {
    SparseVec<T> h;
    reduce_tracked(v, h, ScalarTraits<T>::one());
    if (!v.empty()) return std::nullopt;
    return h;
  }

  std::size_t rank() const { return rows_.size(); }
  std::size_t inserted() const { return count_; }

 private:
  struct Row {
    SparseVec<T> v;
    SparseVec<T> h;
  };

  // v -= c*row.v; h += sign*c*row.h for each pivot hit.
  void reduce_tracked(SparseVec<T>& v, SparseVec<T>& h, const T& sign) const {
    std::size_t cursor = 0;
    for (;;) {
      const Row* row = nullptr;
      std::size_t p = 0;
      T c;
      for (const auto& entry : v) {
        if (entry.first < cursor) continue;
        auto it = rows_.find(entry.first);
        if (it != rows_.end()) {
          row = &it->second;
          p = entry.first;
          c = entry.second;
          break;
        }
      }
      if (!row) return;
      v.axpy(-c, row->v);
      h.axpy(sign * c, row->h);
      cursor = p + 1;
    }
  }

  std::map<std::size_t, Row> rows_;
  std::size_t count_ = 0;
};

template <class T>
std::size_t rank(const std::vector<SparseVec<T>>& vectors) {
  Echelon<T> e;
  for (const auto& v : vectors) e.insert(v);
  return e.rank();
}

/// Kernel of the linear map whose j-th column is columns[j].
template <class T>
std::vector<SparseVec<T>> kernel(const std::vector<SparseVec<T>>& columns) {
  TrackedEchelon<T> e;
  std::vector<SparseVec<T>> out;
  for (const auto& c : columns) {
    if (auto dep = e.insert(c)) out.push_back(std::move(*dep));
  }
  return out;
}

/// Basis of the span, in echelon form.
template <class T>
std::vector<SparseVec<T>> span_basis(const std::vector<SparseVec<T>>& vectors) {
  Echelon<T> e;
  for (const auto& v : vectors) e.insert(v);
  return e.basis();
}

/// Applies the linear map with the given columns to a vector.
template <class T>
SparseVec<T> apply_columns(const std::vector<SparseVec<T>>& columns, const SparseVec<T>& x) {
  Accumulator<T> acc;
  for (const auto& [j, c] : x) acc.add(columns[j], c);
  return acc.finish();
}

}  // namespace qlsmodcat
