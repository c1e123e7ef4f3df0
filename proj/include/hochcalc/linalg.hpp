#pragma once

// Exact dense linear algebra over any of the field classes in fields.hpp.
// Elimination is Gauss-Jordan with first-nonzero pivoting in column order;
// row operations skip zero entries of the pivot row, which keeps the cost
// proportional to the fill rather than the full width for the sparse maps
// that dominate this library.

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hochcalc/fields.hpp"

namespace hochcalc {

template <class F>
using V_of = typename F::value_type;

template <class F>
using Vec = std::vector<typename F::value_type>;

template <class F>
class Matrix {
 public:
  using V = typename F::value_type;

  Matrix() = default;
  Matrix(const F& f, std::size_t rows, std::size_t cols)
      : f_(f), rows_(rows), cols_(cols), a_(rows * cols, f.zero()) {}

  static Matrix identity(const F& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
    return m;
  }
  static Matrix from_rows(const F& f, std::size_t cols, const std::vector<Vec<F>>& rows) {
    Matrix m(f, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
      std::copy(rows[i].begin(), rows[i].end(), m.row(i));
    }
    return m;
  }

  const F& field() const { return f_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  V& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const V& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  V* row(std::size_t r) { return a_.data() + r * cols_; }
  const V* row(std::size_t r) const { return a_.data() + r * cols_; }
  Vec<F> row_vec(std::size_t r) const { return Vec<F>(row(r), row(r) + cols_); }

  void swap_rows(std::size_t r, std::size_t s) {
    if (r == s) return;
    std::swap_ranges(row(r), row(r) + cols_, row(s));
  }
  void append_row(const Vec<F>& v) {
    if (v.size() != cols_) throw std::invalid_argument("row length mismatch");
    a_.insert(a_.end(), v.begin(), v.end());
    ++rows_;
  }
  void truncate_rows(std::size_t n) {
    rows_ = std::min(rows_, n);
    a_.resize(rows_ * cols_);
  }

  bool is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [&](const V& x) { return f_.is_zero(x); });
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.a_.size(); ++i)
      if (!a.f_.equal(a.a_[i], b.a_[i])) return false;
    return true;
  }

 private:
  F f_{};
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<V> a_;
};

template <class F>
Matrix<F> transpose(const Matrix<F>& m) {
  Matrix<F> t(m.field(), m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  return t;
}

template <class F>
Matrix<F> operator*(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("dimension mismatch in matrix product");
  const F& f = a.field();
  Matrix<F> c(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto& x = a(i, k);
      if (f.is_zero(x)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!f.is_zero(b(k, j))) c(i, j) = f.add(c(i, j), f.mul(x, b(k, j)));
    }
  return c;
}

template <class F>
Vec<F> apply(const Matrix<F>& m, const Vec<F>& v) {
  if (v.size() != m.cols()) throw std::invalid_argument("dimension mismatch in matrix-vector product");
  const F& f = m.field();
  Vec<F> r(m.rows(), f.zero());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (f.is_zero(v[j])) continue;
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (!f.is_zero(m(i, j))) r[i] = f.add(r[i], f.mul(m(i, j), v[j]));
  }
  return r;
}

template <class F>
bool is_zero_vec(const F& f, const Vec<F>& v) {
  return std::all_of(v.begin(), v.end(), [&](const auto& x) { return f.is_zero(x); });
}

template <class F>
struct Rref {
  Matrix<F> matrix;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

namespace detail {

// In-place elimination. full = reduce above pivots too (RREF); otherwise
// plain row echelon form, enough for rank.
template <class F>
std::vector<std::size_t> eliminate(Matrix<F>& m, bool full) {
  const F& f = m.field();
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> nz;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && f.is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    auto* pr = m.row(r);
    if (!f.equal(pr[c], f.one())) {
      const auto s = f.inv(pr[c]);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!f.is_zero(pr[j])) pr[j] = f.mul(pr[j], s);
    }
    nz.clear();
    for (std::size_t j = c; j < m.cols(); ++j)
      if (!f.is_zero(pr[j])) nz.push_back(j);
    for (std::size_t i = full ? 0 : r + 1; i < m.rows(); ++i) {
      if (i == r) continue;
      auto* ri = m.row(i);
      if (f.is_zero(ri[c])) continue;
      const auto factor = ri[c];
      for (auto j : nz) f.sub_mul(ri[j], factor, pr[j]);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace detail

template <class F>
Rref<F> rref(Matrix<F> m) {
  auto piv = detail::eliminate(m, true);
  return {std::move(m), std::move(piv)};
}

template <class F>
std::size_t rank(Matrix<F> m) {
  // Eliminate along the shorter side.
  if (m.rows() > m.cols()) m = transpose(m);
  return detail::eliminate(m, false).size();
}

// Semi-echelon basis grown one vector at a time. Each stored row has its
// first nonzero (the pivot) equal to 1; rows are kept sparse.
template <class F>
class Echelon {
 public:
  using V = typename F::value_type;

  Echelon(const F& f, std::size_t ambient) : f_(f), n_(ambient), pivot_row_(ambient, npos) {}

  std::size_t ambient() const { return n_; }
  std::size_t rank() const { return rows_.size(); }
  const F& field() const { return f_; }

  // Reduces v in place against the stored rows.
  void reduce(Vec<F>& v) const {
    if (v.size() != n_) throw std::invalid_argument("vector length mismatch");
    for (std::size_t c = 0; c < n_; ++c) {
      if (f_.is_zero(v[c])) continue;
      const auto r = pivot_row_[c];
      if (r == npos) continue;
      const auto factor = v[c];
      for (const auto& [j, x] : rows_[r]) f_.sub_mul(v[j], factor, x);
    }
  }

  bool contains(Vec<F> v) const {
    reduce(v);
    return is_zero_vec(f_, v);
  }

  // Returns true when v was independent of the stored rows.
  bool insert(Vec<F> v) {
    reduce(v);
    std::size_t c = 0;
    while (c < n_ && f_.is_zero(v[c])) ++c;
    if (c == n_) return false;
    const auto s = f_.inv(v[c]);
    std::vector<std::pair<std::size_t, V>> row;
    for (std::size_t j = c; j < n_; ++j)
      if (!f_.is_zero(v[j])) row.emplace_back(j, f_.mul(v[j], s));
    pivot_row_[c] = rows_.size();
    rows_.push_back(std::move(row));
    return true;
  }

  Vec<F> row(std::size_t i) const {
    Vec<F> v(n_, f_.zero());
    for (const auto& [j, x] : rows_[i]) v[j] = x;
    return v;
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  F f_;
  std::size_t n_;
  std::vector<std::size_t> pivot_row_;
  std::vector<std::vector<std::pair<std::size_t, V>>> rows_;
};

// Rank of a stream of sparse rows of unbounded count; only the echelon rows
// are retained. Used where the full matrix would not fit in memory.
template <class F>
class SparseEchelon {
 public:
  using V = typename F::value_type;
  using SparseRow = std::vector<std::pair<std::size_t, V>>;  // sorted by column

  explicit SparseEchelon(const F& f) : f_(f) {}

  std::size_t rank() const { return rows_.size(); }

  bool insert(const SparseRow& in) {
    std::map<std::size_t, V> v;
    for (const auto& [j, x] : in)
      if (!f_.is_zero(x)) {
        auto [it, fresh] = v.emplace(j, x);
        if (!fresh) {
          it->second = f_.add(it->second, x);
          if (f_.is_zero(it->second)) v.erase(it);
        }
      }
    while (!v.empty()) {
      auto lead = v.begin();
      auto pr = pivot_.find(lead->first);
      if (pr == pivot_.end()) {
        const auto s = f_.inv(lead->second);
        SparseRow row;
        row.reserve(v.size());
        for (const auto& [j, x] : v) row.emplace_back(j, f_.mul(x, s));
        pivot_.emplace(lead->first, rows_.size());
        rows_.push_back(std::move(row));
        return true;
      }
      const auto factor = lead->second;
      for (const auto& [j, x] : rows_[pr->second]) {
        auto it = v.find(j);
        if (it == v.end()) {
          v.emplace(j, f_.neg(f_.mul(factor, x)));
        } else {
          f_.sub_mul(it->second, factor, x);
          if (f_.is_zero(it->second)) v.erase(it);
        }
      }
    }
    return false;
  }

 private:
  F f_;
  std::map<std::size_t, std::size_t> pivot_;
  std::vector<SparseRow> rows_;
};

// Subspace of F^n stored by its reduced row echelon basis.
template <class F>
class Subspace {
 public:
  using V = typename F::value_type;

  Subspace(const F& f, std::size_t ambient) : basis_(f, 0, ambient) {}

  static Subspace span(const F& f, std::size_t ambient, const std::vector<Vec<F>>& vectors) {
    Subspace s(f, ambient);
    if (vectors.empty()) return s;
    auto r = rref(Matrix<F>::from_rows(f, ambient, vectors));
    r.matrix.truncate_rows(r.rank());
    s.basis_ = std::move(r.matrix);
    s.pivots_ = std::move(r.pivots);
    return s;
  }

  const F& field() const { return basis_.field(); }
  std::size_t ambient() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix<F>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Vec<F> vector(std::size_t i) const { return basis_.row_vec(i); }

  bool contains(Vec<F> v) const {
    if (v.size() != ambient()) throw std::invalid_argument("vector length does not match ambient dimension");
    const F& f = field();
    for (std::size_t i = 0; i < dim(); ++i) {
      const auto c = v[pivots_[i]];
      if (f.is_zero(c)) continue;
      const auto* row = basis_.row(i);
      for (std::size_t j = pivots_[i]; j < ambient(); ++j)
        if (!f.is_zero(row[j])) f.sub_mul(v[j], c, row[j]);
    }
    return is_zero_vec(f, v);
  }

 private:
  Matrix<F> basis_;
  std::vector<std::size_t> pivots_;
};

template <class F>
Subspace<F> kernel_basis(const Matrix<F>& m) {
  const F& f = m.field();
  auto r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<Vec<F>> vecs;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec<F> v(m.cols(), f.zero());
    v[free] = f.one();
    for (std::size_t i = 0; i < r.rank(); ++i) v[r.pivots[i]] = f.neg(r.matrix(i, free));
    vecs.push_back(std::move(v));
  }
  return Subspace<F>::span(f, m.cols(), vecs);
}

template <class F>
bool membership(const Subspace<F>& s, const Vec<F>& v) {
  return s.contains(v);
}

}  // namespace hochcalc
