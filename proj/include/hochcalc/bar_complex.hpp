#pragma once

// Independent HH^0..HH^2 via the reduced bar complex relative to the
// semisimple subalgebra E spanned by the vertex idempotents. With r = rad A,
//   C^n = Hom_{E-E}(r^{(x)_E n}, A) = (+) over composable n-tuples of
//         positive-length basis words (w_1..w_n) of e_{s(w_1)} A e_{t(w_n)},
// and the usual Hochschild differential. No resolution data is shared with
// hochschild.hpp, which makes agreement a meaningful cross-check.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hochcalc/algebra.hpp"

namespace hochcalc {

struct BarResult {
  std::size_t h0 = 0, h1 = 0;
  std::optional<std::size_t> h2;
  std::size_t max_degree = 1;
  std::vector<std::size_t> cochain_dims;  // dim C^0, C^1, C^2, C^3 (when built)
  std::string note;
};

inline constexpr std::size_t kBarGuard = 2'000'000;

template <class F>
class RelativeBarComplex {
 public:
  using V = typename F::value_type;
  using Tuple = std::vector<std::size_t>;  // basis word indices; for n = 0 a single vertex
  using SparseRow = typename SparseEchelon<F>::SparseRow;

  explicit RelativeBarComplex(const Algebra<F>& A) : A_(A), f_(A.field()) {
    for (std::size_t i = 0; i < A.dim(); ++i)
      if (!A.word(i).is_trivial()) rad_.push_back(i);
    tuples_.resize(4);
    for (std::size_t v = 0; v < A.num_vertices(); ++v) tuples_[0].push_back({v});
    for (auto w : rad_) tuples_[1].push_back({w});
    for (std::size_t n = 2; n <= 3; ++n)
      for (const auto& t : tuples_[n - 1])
        for (auto w : rad_) {
          if (A.source(w) != A.target(t.back())) continue;
          Tuple u = t;
          u.push_back(w);
          tuples_[n].push_back(std::move(u));
        }
    for (std::size_t n = 0; n <= 3; ++n) {
      std::size_t off = 0;
      for (const auto& t : tuples_[n]) {
        offset_[n].emplace(t, off);
        off += corner_of(n, t).size();
      }
      dims_[n] = off;
    }
  }

  std::size_t dim(std::size_t n) const { return dims_[n]; }

  // Emits the rows of delta^n : C^n -> C^{n+1}, one per (tuple, output word).
  template <class Sink>
  void rows(std::size_t n, Sink&& sink) const {
    for (const auto& tau : tuples_[n + 1]) {
      const auto& out = corner_of(n + 1, tau);
      std::map<std::size_t, std::map<std::size_t, V>> block;  // output word -> var -> coeff
      auto add = [&](std::size_t b, std::size_t var, const V& c) {
        if (f_.is_zero(c)) return;
        auto& row = block[b];
        auto [it, fresh] = row.emplace(var, c);
        if (!fresh) it->second = f_.add(it->second, c);
      };
      // r_1 f(r_2 .. r_{n+1})
      {
        const Tuple sigma = n == 0 ? Tuple{A_.target(tau[0])} : Tuple(tau.begin() + 1, tau.end());
        const auto base = offset_[n].at(sigma);
        const auto& cs = corner_of(n, sigma);
        for (std::size_t p = 0; p < cs.size(); ++p)
          for (const auto& [b, x] : A_.product(tau[0], cs[p])) add(b, base + p, x);
      }
      // (-1)^i f(.. r_i r_{i+1} ..)
      for (std::size_t i = 1; i <= n; ++i) {
        for (const auto& [w, x] : A_.product(tau[i - 1], tau[i])) {
          Tuple sigma(tau.begin(), tau.begin() + (i - 1));
          sigma.push_back(w);
          sigma.insert(sigma.end(), tau.begin() + i + 1, tau.end());
          const auto base = offset_[n].at(sigma);
          const auto& cs = corner_of(n, sigma);
          const V c = i % 2 ? f_.neg(x) : x;
          for (std::size_t p = 0; p < cs.size(); ++p) add(cs[p], base + p, c);
        }
      }
      // (-1)^{n+1} f(r_1 .. r_n) r_{n+1}
      {
        const Tuple sigma = n == 0 ? Tuple{A_.source(tau[0])} : Tuple(tau.begin(), tau.end() - 1);
        const auto base = offset_[n].at(sigma);
        const auto& cs = corner_of(n, sigma);
        const bool neg = (n + 1) % 2 == 1;
        for (std::size_t p = 0; p < cs.size(); ++p)
          for (const auto& [b, x] : A_.product(cs[p], tau.back())) add(b, base + p, neg ? f_.neg(x) : x);
      }
      const auto row_base = offset_[n + 1].at(tau);
      for (std::size_t q = 0; q < out.size(); ++q) {
        SparseRow row;
        auto it = block.find(out[q]);
        if (it != block.end())
          for (const auto& [var, c] : it->second)
            if (!f_.is_zero(c)) row.emplace_back(var, c);
        sink(row_base + q, row);
      }
    }
  }

  Matrix<F> matrix(std::size_t n) const {
    Matrix<F> m(f_, dims_[n + 1], dims_[n]);
    rows(n, [&](std::size_t r, const SparseRow& row) {
      for (const auto& [c, x] : row) m(r, c) = x;
    });
    return m;
  }

 private:
  const std::vector<std::size_t>& corner_of(std::size_t n, const Tuple& t) const {
    if (n == 0) return A_.corner(t[0], t[0]);
    return A_.corner(A_.source(t.front()), A_.target(t.back()));
  }

  const Algebra<F>& A_;
  F f_;
  std::vector<std::size_t> rad_;
  std::vector<std::vector<Tuple>> tuples_;
  std::map<Tuple, std::size_t> offset_[4];
  std::size_t dims_[4] = {0, 0, 0, 0};
};

template <class F>
BarResult hh_via_bar(const Algebra<F>& A, std::size_t n_max = 2, std::size_t guard = kBarGuard) {
  const F& f = A.field();
  RelativeBarComplex<F> bar(A);
  BarResult res;
  for (std::size_t n = 0; n <= 3; ++n) res.cochain_dims.push_back(bar.dim(n));
  const auto m0 = bar.matrix(0);
  const auto m1 = bar.matrix(1);
  if (!(m1 * m0).is_zero()) throw BuildError("bar complex: delta^1 delta^0 != 0");
  const auto r0 = rank(m0);
  const auto r1 = rank(m1);
  res.h0 = bar.dim(0) - r0;
  res.h1 = bar.dim(1) - r0 - r1;
  res.max_degree = 1;
  if (n_max < 2) return res;
  if (bar.dim(3) > guard) {
    res.note = "size guard: dim C^3 = " + std::to_string(bar.dim(3)) + " exceeds " + std::to_string(guard);
    return res;
  }
  SparseEchelon<F> ech(f);
  bool complex_ok = true;
  bar.rows(2, [&](std::size_t, const auto& row) {
    // delta^2 delta^1 = 0, row by row.
    Vec<F> acc(bar.dim(1), f.zero());
    for (const auto& [c, x] : row)
      for (std::size_t j = 0; j < bar.dim(1); ++j)
        if (!f.is_zero(m1(c, j))) acc[j] = f.add(acc[j], f.mul(x, m1(c, j)));
    if (!is_zero_vec(f, acc)) complex_ok = false;
    ech.insert(row);
  });
  if (!complex_ok) throw BuildError("bar complex: delta^2 delta^1 != 0");
  res.h2 = bar.dim(2) - r1 - ech.rank();
  res.max_degree = 2;
  return res;
}

}  // namespace hochcalc
