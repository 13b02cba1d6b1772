// Sparse vectors, column-major sparse matrices and an incremental row-echelon
// basis over an exact field. Pivot order is the smallest nonzero index, so all
// results are deterministic.
#pragma once

#include "lamcoh/field.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace lamcoh {

/// Sorted (index, value) pairs with no stored zeros.
template <class F>
using SparseVector = std::vector<std::pair<int, F>>;

/// y += a * x
template <class F>
void axpy(SparseVector<F>& y, const F& a, const SparseVector<F>& x) {
  if (FieldTraits<F>::is_zero(a) || x.empty()) return;
  SparseVector<F> out;
  out.reserve(y.size() + x.size());
  std::size_t i = 0, j = 0;
  while (i < y.size() || j < x.size()) {
    if (j == x.size() || (i < y.size() && y[i].first < x[j].first)) {
      out.push_back(std::move(y[i++]));
    } else if (i == y.size() || x[j].first < y[i].first) {
      out.emplace_back(x[j].first, a * x[j].second);
      ++j;
    } else {
      F v = y[i].second + a * x[j].second;
      if (!FieldTraits<F>::is_zero(v)) out.emplace_back(y[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  y = std::move(out);
}

template <class F>
void scale(SparseVector<F>& v, const F& a) {
  if (FieldTraits<F>::is_zero(a)) {
    v.clear();
    return;
  }
  for (auto& e : v) e.second = e.second * a;
}

template <class F>
SparseVector<F> unit_vector(int index) {
  return {{index, FieldTraits<F>::one()}};
}

template <class F>
SparseVector<F> sparse_from_dense(const std::vector<F>& dense) {
  SparseVector<F> out;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (!FieldTraits<F>::is_zero(dense[i])) out.emplace_back(static_cast<int>(i), dense[i]);
  }
  return out;
}

template <class F>
std::vector<F> dense_from_sparse(const SparseVector<F>& v, std::size_t size) {
  std::vector<F> out(size, FieldTraits<F>::zero());
  for (const auto& [i, x] : v) out.at(static_cast<std::size_t>(i)) = x;
  return out;
}

/// Column-major sparse matrix; column j is the image of basis vector j.
template <class F>
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols), columns_(static_cast<std::size_t>(cols)) {}

  static SparseMatrix identity(int n) {
    SparseMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.columns_[static_cast<std::size_t>(i)] = unit_vector<F>(i);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  const SparseVector<F>& column(int j) const { return columns_.at(static_cast<std::size_t>(j)); }
  SparseVector<F>& column(int j) { return columns_.at(static_cast<std::size_t>(j)); }

  /// Adds v to entry (i, j).
  void add(int i, int j, const F& v) {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw std::out_of_range("matrix index");
    SparseVector<F> single{{i, v}};
    if (FieldTraits<F>::is_zero(v)) return;
    axpy(columns_[static_cast<std::size_t>(j)], FieldTraits<F>::one(), single);
  }

  F at(int i, int j) const {
    for (const auto& [r, v] : column(j)) {
      if (r == i) return v;
    }
    return FieldTraits<F>::zero();
  }

  SparseVector<F> apply(const SparseVector<F>& x) const {
    SparseVector<F> y;
    for (const auto& [j, v] : x) {
      if (j < 0 || j >= cols_) throw std::out_of_range("vector index exceeds matrix columns");
      axpy(y, v, column(j));
    }
    return y;
  }

  bool is_zero() const {
    for (const auto& c : columns_) {
      if (!c.empty()) return false;
    }
    return true;
  }

  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& c : columns_) n += c.size();
    return n;
  }

  SparseMatrix transpose() const {
    SparseMatrix t(cols_, rows_);
    for (int j = 0; j < cols_; ++j) {
      for (const auto& [i, v] : column(j)) t.columns_[static_cast<std::size_t>(i)].emplace_back(j, v);
    }
    return t;
  }

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
    SparseMatrix c(a.rows_, b.cols_);
    for (int j = 0; j < b.cols_; ++j) c.columns_[static_cast<std::size_t>(j)] = a.apply(b.column(j));
    return c;
  }

  friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum dimension mismatch");
    SparseMatrix c = a;
    for (int j = 0; j < a.cols_; ++j) axpy(c.columns_[static_cast<std::size_t>(j)], FieldTraits<F>::one(), b.column(j));
    return c;
  }

  friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference dimension mismatch");
    SparseMatrix c = a;
    F minus_one = FieldTraits<F>::zero() - FieldTraits<F>::one();
    for (int j = 0; j < a.cols_; ++j) axpy(c.columns_[static_cast<std::size_t>(j)], minus_one, b.column(j));
    return c;
  }

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.columns_ == b.columns_;
  }

  std::vector<std::vector<F>> to_dense() const {
    std::vector<std::vector<F>> d(static_cast<std::size_t>(rows_),
                                  std::vector<F>(static_cast<std::size_t>(cols_), FieldTraits<F>::zero()));
    for (int j = 0; j < cols_; ++j) {
      for (const auto& [i, v] : column(j)) d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
    }
    return d;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<SparseVector<F>> columns_;
};

/// Incrementally maintained echelon basis. Every stored vector carries a tag
/// recording which combination of inserted inputs produced it, so the same
/// structure answers rank, kernel, span-membership and coordinate queries.
template <class F>
class Echelon {
 public:
  struct Reduction {
    SparseVector<F> remainder;
    SparseVector<F> tag;
  };

  /// Reduces v against the basis; tag is transformed alongside v.
  Reduction reduce(SparseVector<F> v, SparseVector<F> tag = {}) const {
    std::size_t i = 0;
    while (i < v.size()) {
      auto it = pivots_.find(v[i].first);
      if (it == pivots_.end()) {
        ++i;
        continue;
      }
      const Row& row = rows_[it->second];
      F coef = FieldTraits<F>::zero() - v[i].second;
      axpy(v, coef, row.vector);
      axpy(tag, coef, row.tag);
    }
    return {std::move(v), std::move(tag)};
  }

  /// Inserts v. Returns nullopt when v was independent; otherwise returns the
  /// reduced tag, i.e. a combination of inputs that sums to zero.
  std::optional<SparseVector<F>> insert(SparseVector<F> v, SparseVector<F> tag = {}) {
    Reduction r = reduce(std::move(v), std::move(tag));
    if (r.remainder.empty()) return std::move(r.tag);
    F inv = FieldTraits<F>::one() / r.remainder.front().second;
    scale(r.remainder, inv);
    scale(r.tag, inv);
    int pivot = r.remainder.front().first;
    pivots_.emplace(pivot, rows_.size());
    rows_.push_back(Row{std::move(r.remainder), std::move(r.tag)});
    return std::nullopt;
  }

  bool contains(const SparseVector<F>& v) const { return reduce(v).remainder.empty(); }

  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  struct Row {
    SparseVector<F> vector;
    SparseVector<F> tag;
  };
  std::vector<Row> rows_;
  std::map<int, std::size_t> pivots_;
};

template <class F>
int rank(const SparseMatrix<F>& m) {
  Echelon<F> e;
  for (int j = 0; j < m.cols(); ++j) e.insert(m.column(j));
  return e.rank();
}

/// Basis of {x : m x = 0}, one vector per dependent column, in column order.
template <class F>
std::vector<SparseVector<F>> kernel_basis(const SparseMatrix<F>& m) {
  Echelon<F> e;
  std::vector<SparseVector<F>> basis;
  for (int j = 0; j < m.cols(); ++j) {
    if (auto dep = e.insert(m.column(j), unit_vector<F>(j))) basis.push_back(std::move(*dep));
  }
  return basis;
}

/// Solves m x = b; nullopt when b is outside the column space.
template <class F>
std::optional<SparseVector<F>> solve(const SparseMatrix<F>& m, const SparseVector<F>& b) {
  Echelon<F> e;
  for (int j = 0; j < m.cols(); ++j) e.insert(m.column(j), unit_vector<F>(j));
  auto r = e.reduce(b);
  if (!r.remainder.empty()) return std::nullopt;
  // b - m * (-tag) = 0, so x = -tag.
  F minus_one = FieldTraits<F>::zero() - FieldTraits<F>::one();
  scale(r.tag, minus_one);
  return std::move(r.tag);
}

}  // namespace lamcoh
