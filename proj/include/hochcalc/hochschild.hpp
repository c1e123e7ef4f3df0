#pragma once

// Free bimodules P = (+)_k A e_{i_k} (x) e_{j_k} A, the maps d_1, d_2 of the
// minimal resolution, the induced cochain maps into A, HH^0..HH^2 dimensions,
// tops of sub-bimodules and step-by-step extension of the resolution.
//
// A bimodule map out of a free bimodule is fixed by the images g_k of the
// generators e_{i_k} (x) e_{j_k}; on the basis it reads u (x)_k v -> u g_k v.
// Hom(P, A) is identified with (+)_k e_{i_k} A e_{j_k}.

#include <deque>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hochcalc/algebra.hpp"

namespace hochcalc {

using VertexPair = std::pair<std::size_t, std::size_t>;

template <class F>
class FreeBimodule {
 public:
  FreeBimodule(const Algebra<F>& A, std::vector<VertexPair> summands) : A_(&A), summands_(std::move(summands)) {
    const std::size_t nv = A.num_vertices();
    pos_left_.assign(A.dim(), 0);
    pos_right_.assign(A.dim(), 0);
    for (std::size_t v = 0; v < nv; ++v) {
      const auto& l = A.left_basis(v);
      for (std::size_t p = 0; p < l.size(); ++p) pos_left_[l[p]] = p;
      const auto& r = A.right_basis(v);
      for (std::size_t p = 0; p < r.size(); ++p) pos_right_[r[p]] = p;
    }
    std::size_t off = 0;
    for (const auto& [i, j] : summands_) {
      offset_.push_back(off);
      off += A.left_basis(i).size() * A.right_basis(j).size();
    }
    dim_ = off;
    coords_.reserve(dim_);
    for (std::size_t k = 0; k < summands_.size(); ++k) {
      const auto& [i, j] = summands_[k];
      for (auto u : A.left_basis(i))
        for (auto v : A.right_basis(j)) coords_.push_back({k, u, v});
    }
  }

  struct Coord {
    std::size_t summand, u, v;  // u, v are basis word indices of A
  };

  const Algebra<F>& algebra() const { return *A_; }
  std::size_t dim() const { return dim_; }
  std::size_t num_summands() const { return summands_.size(); }
  const std::vector<VertexPair>& summands() const { return summands_; }
  const VertexPair& summand(std::size_t k) const { return summands_[k]; }
  const Coord& coord(std::size_t idx) const { return coords_[idx]; }

  // u must end at the summand's left vertex and v start at its right vertex.
  std::size_t index(std::size_t k, std::size_t u, std::size_t v) const {
    const auto& [i, j] = summands_[k];
    return offset_[k] + pos_left_[u] * A_->right_basis(j).size() + pos_right_[v];
  }
  bool fits(std::size_t k, std::size_t u, std::size_t v) const {
    return A_->target(u) == summands_[k].first && A_->source(v) == summands_[k].second;
  }

  Vec<F> zero() const { return Vec<F>(dim_, A_->field().zero()); }
  Vec<F> generator(std::size_t k) const {
    auto x = zero();
    x[index(k, A_->idempotent(summands_[k].first), A_->idempotent(summands_[k].second))] = A_->field().one();
    return x;
  }

  // Adds c * (a (x)_k b) for A-elements a, b.
  void add_tensor(Vec<F>& x, std::size_t k, const Vec<F>& a, const Vec<F>& b, const V_of<F>& c) const {
    const F& f = A_->field();
    const auto& [i, j] = summands_[k];
    for (auto u : A_->left_basis(i)) {
      if (f.is_zero(a[u])) continue;
      const auto cu = f.mul(c, a[u]);
      for (auto v : A_->right_basis(j))
        if (!f.is_zero(b[v])) x[index(k, u, v)] = f.add(x[index(k, u, v)], f.mul(cu, b[v]));
    }
  }

  // w * x for a basis word w of A.
  Vec<F> left_mul(std::size_t w, const Vec<F>& x) const {
    const F& f = A_->field();
    auto r = zero();
    for (std::size_t idx = 0; idx < dim_; ++idx) {
      if (f.is_zero(x[idx])) continue;
      const auto& c = coords_[idx];
      if (A_->target(w) != A_->source(c.u)) continue;
      for (const auto& [u2, y] : A_->product(w, c.u)) {
        auto& slot = r[index(c.summand, u2, c.v)];
        slot = f.add(slot, f.mul(x[idx], y));
      }
    }
    return r;
  }
  Vec<F> right_mul(const Vec<F>& x, std::size_t w) const {
    const F& f = A_->field();
    auto r = zero();
    for (std::size_t idx = 0; idx < dim_; ++idx) {
      if (f.is_zero(x[idx])) continue;
      const auto& c = coords_[idx];
      if (A_->target(c.v) != A_->source(w)) continue;
      for (const auto& [v2, y] : A_->product(c.v, w)) {
        auto& slot = r[index(c.summand, c.u, v2)];
        slot = f.add(slot, f.mul(x[idx], y));
      }
    }
    return r;
  }

  // Coordinate filter for e_i x e_j.
  Vec<F> corner_part(const Vec<F>& x, std::size_t i, std::size_t j) const {
    auto r = zero();
    for (std::size_t idx = 0; idx < dim_; ++idx)
      if (A_->source(coords_[idx].u) == i && A_->target(coords_[idx].v) == j) r[idx] = x[idx];
    return r;
  }

  std::string render(const Vec<F>& x) const {
    const F& f = A_->field();
    const auto& q = A_->quiver();
    std::string s;
    for (std::size_t idx = 0; idx < dim_; ++idx) {
      if (f.is_zero(x[idx])) continue;
      const auto& c = coords_[idx];
      if (!s.empty()) s += " + ";
      if (!f.equal(x[idx], f.one())) s += "(" + f.to_string(x[idx]) + ")*";
      s += render_path(q, A_->word(c.u)) + "|" + render_path(q, A_->word(c.v));
      if (num_summands() > 1) s += "@" + std::to_string(c.summand + 1);
    }
    return s.empty() ? "0" : s;
  }

 private:
  const Algebra<F>* A_;
  std::vector<VertexPair> summands_;
  std::vector<std::size_t> offset_, pos_left_, pos_right_;
  std::vector<Coord> coords_;
  std::size_t dim_ = 0;
};

template <class F>
FreeBimodule<F> make_P0(const Algebra<F>& A) {
  std::vector<VertexPair> s;
  for (std::size_t v = 0; v < A.num_vertices(); ++v) s.emplace_back(v, v);
  return FreeBimodule<F>(A, std::move(s));
}

template <class F>
FreeBimodule<F> make_P1(const Algebra<F>& A) {
  std::vector<VertexPair> s;
  for (const auto& a : A.quiver().arrows) s.emplace_back(a.source, a.target);
  return FreeBimodule<F>(A, std::move(s));
}

template <class F>
FreeBimodule<F> make_P2(const Algebra<F>& A) {
  std::vector<VertexPair> s;
  for (const auto& r : A.resolution_relations()) {
    const auto& p = r.begin()->first;
    s.emplace_back(p.source, p.target);
  }
  return FreeBimodule<F>(A, std::move(s));
}

template <class F>
std::vector<SparseVec<F>> sparse_images(const F& f, const std::vector<Vec<F>>& images) {
  std::vector<SparseVec<F>> out(images.size());
  for (std::size_t k = 0; k < images.size(); ++k)
    for (std::size_t t = 0; t < images[k].size(); ++t)
      if (!f.is_zero(images[k][t])) out[k].emplace_back(t, images[k][t]);
  return out;
}

// Matrix (rows = target basis, cols = source basis) of the bimodule map
// S -> T sending generator k of S to images[k].
template <class F>
Matrix<F> bimodule_map_matrix(const FreeBimodule<F>& S, const FreeBimodule<F>& T, const std::vector<Vec<F>>& images) {
  const Algebra<F>& A = S.algebra();
  const F& f = A.field();
  const auto sparse = sparse_images(f, images);
  Matrix<F> m(f, T.dim(), S.dim());
  for (std::size_t col = 0; col < S.dim(); ++col) {
    const auto& c = S.coord(col);
    for (const auto& [t, gt] : sparse[c.summand]) {
      const auto& tc = T.coord(t);
      // u * a (x) b * v
      for (const auto& [a2, x] : A.product(c.u, tc.u))
        for (const auto& [b2, y] : A.product(tc.v, c.v)) {
          auto& slot = m(T.index(tc.summand, a2, b2), col);
          slot = f.add(slot, f.mul(gt, f.mul(x, y)));
        }
    }
  }
  return m;
}

// Multiplication P0 -> A, u (x)_i v -> uv.
template <class F>
Matrix<F> d0_matrix(const Algebra<F>& A, const FreeBimodule<F>& P0) {
  const F& f = A.field();
  Matrix<F> m(f, A.dim(), P0.dim());
  for (std::size_t col = 0; col < P0.dim(); ++col) {
    const auto& c = P0.coord(col);
    for (const auto& [k, x] : A.product(c.u, c.v)) m(k, col) = f.add(m(k, col), x);
  }
  return m;
}

// rho(a_1...a_m) = sum_k a_1..a_{k-1} (x) a_{k+1}..a_m in the a_k summand of P1.
template <class F>
Vec<F> rho(const Algebra<F>& A, const FreeBimodule<F>& P1, const LinComb<F>& lc) {
  const F& f = A.field();
  const auto& q = A.quiver();
  auto x = P1.zero();
  for (const auto& [p, c] : lc) {
    if (p.is_trivial()) throw std::invalid_argument("rho is undefined on trivial paths");
    for (std::size_t k = 0; k < p.length(); ++k) {
      const auto left = A.path_element(subpath(q, p, 0, k));
      const auto right = A.path_element(subpath(q, p, k + 1, p.length()));
      P1.add_tensor(x, p.arrows[k], left, right, c);
    }
  }
  (void)f;
  return x;
}

template <class F>
std::vector<Vec<F>> d1_images(const Algebra<F>& A, const FreeBimodule<F>& P0) {
  const F& f = A.field();
  std::vector<Vec<F>> g;
  for (std::size_t a = 0; a < A.num_arrows(); ++a) {
    const auto& ar = A.quiver().arrows[a];
    auto x = P0.zero();
    // alpha (x) e_t - e_s (x) alpha
    x[P0.index(ar.target, A.arrow(a), A.idempotent(ar.target))] = f.one();
    auto& s = x[P0.index(ar.source, A.idempotent(ar.source), A.arrow(a))];
    s = f.sub(s, f.one());
    g.push_back(std::move(x));
  }
  return g;
}

template <class F>
std::vector<Vec<F>> d2_images(const Algebra<F>& A, const FreeBimodule<F>& P1) {
  std::vector<Vec<F>> g;
  for (const auto& r : A.resolution_relations()) g.push_back(rho(A, P1, r));
  return g;
}

template <class F>
Matrix<F> d1_matrix(const Algebra<F>& A) {
  auto P0 = make_P0(A);
  auto P1 = make_P1(A);
  return bimodule_map_matrix(P1, P0, d1_images(A, P0));
}

template <class F>
Matrix<F> d2_matrix(const Algebra<F>& A) {
  auto P1 = make_P1(A);
  auto P2 = make_P2(A);
  return bimodule_map_matrix(P2, P1, d2_images(A, P1));
}

// Coordinates of Hom(P, A) = (+)_k corner(i_k, j_k).
template <class F>
class CochainSpace {
 public:
  CochainSpace(const Algebra<F>& A, const FreeBimodule<F>& P) {
    for (std::size_t k = 0; k < P.num_summands(); ++k) {
      offset_.push_back(coords_.size());
      const auto& [i, j] = P.summand(k);
      for (auto w : A.corner(i, j)) coords_.push_back({k, w});
    }
  }
  struct Coord {
    std::size_t summand, word;
  };
  std::size_t dim() const { return coords_.size(); }
  const Coord& coord(std::size_t i) const { return coords_[i]; }
  std::size_t offset(std::size_t k) const { return offset_[k]; }

 private:
  std::vector<std::size_t> offset_;
  std::vector<Coord> coords_;
};

// Matrix of phi -> phi o d : Hom(T, A) -> Hom(S, A), d given by generator images.
template <class F>
Matrix<F> cochain_matrix(const FreeBimodule<F>& S, const FreeBimodule<F>& T, const std::vector<Vec<F>>& images) {
  const Algebra<F>& A = S.algebra();
  const F& f = A.field();
  CochainSpace<F> hs(A, S), ht(A, T);
  const auto sparse = sparse_images(f, images);
  std::vector<std::size_t> row_of(A.dim() * S.num_summands(), static_cast<std::size_t>(-1));
  for (std::size_t r = 0; r < hs.dim(); ++r) row_of[hs.coord(r).summand * A.dim() + hs.coord(r).word] = r;
  Matrix<F> m(f, hs.dim(), ht.dim());
  for (std::size_t col = 0; col < ht.dim(); ++col) {
    const auto& [l, w] = ht.coord(col);
    for (std::size_t k = 0; k < S.num_summands(); ++k) {
      for (const auto& [t, gt] : sparse[k]) {
        const auto& tc = T.coord(t);
        if (tc.summand != l) continue;
        // a * w * b
        for (const auto& [aw, x] : A.product(tc.u, w))
          for (const auto& [awb, y] : A.product(aw, tc.v)) {
            const auto row = row_of[k * A.dim() + awb];
            m(row, col) = f.add(m(row, col), f.mul(gt, f.mul(x, y)));
          }
      }
    }
  }
  return m;
}

template <class F>
Matrix<F> delta0(const Algebra<F>& A) {
  auto P0 = make_P0(A);
  auto P1 = make_P1(A);
  return cochain_matrix(P1, P0, d1_images(A, P0));
}

template <class F>
Matrix<F> delta1(const Algebra<F>& A) {
  auto P1 = make_P1(A);
  auto P2 = make_P2(A);
  return cochain_matrix(P2, P1, d2_images(A, P1));
}

// dim of {f in Hom(P2, A) : f vanishes on every vector of the subspace K}.
template <class F>
std::size_t hom_vanishing_dim(const FreeBimodule<F>& P2, const Subspace<F>& K) {
  const Algebra<F>& A = P2.algebra();
  const F& f = A.field();
  CochainSpace<F> hs(A, P2);
  Echelon<F> conditions(f, hs.dim());
  for (std::size_t r = 0; r < K.dim(); ++r) {
    const auto* x = K.basis().row(r);
    // One condition per coordinate of f(x) in A.
    std::vector<Vec<F>> rows(A.dim(), Vec<F>(hs.dim(), f.zero()));
    std::vector<bool> touched(A.dim(), false);
    for (std::size_t idx = 0; idx < P2.dim(); ++idx) {
      if (f.is_zero(x[idx])) continue;
      const auto& c = P2.coord(idx);
      const auto off = hs.offset(c.summand);
      const auto& [i, j] = P2.summand(c.summand);
      const auto& cw = A.corner(i, j);
      for (std::size_t p = 0; p < cw.size(); ++p)
        for (const auto& [uw, a] : A.product(c.u, cw[p]))
          for (const auto& [uwv, b] : A.product(uw, c.v)) {
            auto& slot = rows[uwv][off + p];
            slot = f.add(slot, f.mul(x[idx], f.mul(a, b)));
            touched[uwv] = true;
          }
    }
    for (std::size_t k = 0; k < A.dim(); ++k)
      if (touched[k] && !is_zero_vec(f, rows[k])) conditions.insert(std::move(rows[k]));
  }
  return hs.dim() - conditions.rank();
}

template <class F>
std::size_t hom_omega2_dim(const Algebra<F>& A) {
  auto P2 = make_P2(A);
  return hom_vanishing_dim(P2, kernel_basis(d2_matrix(A)));
}

struct HHIntermediates {
  std::size_t dim_algebra = 0;
  std::size_t dim_p0 = 0, dim_p1 = 0, dim_p2 = 0;
  std::size_t hom_p0 = 0, hom_p1 = 0, hom_p2 = 0;
  std::size_t rank_d1 = 0, rank_d2 = 0, ker_d1 = 0, ker_d2 = 0;
  std::size_t rank_delta0 = 0, ker_delta0 = 0, rank_delta1 = 0, ker_delta1 = 0;
  std::size_t hom_omega2 = 0;
};

struct HHResult {
  std::size_t h0 = 0, h1 = 0, h2 = 0;
  HHIntermediates inter;
};

template <class F>
HHResult hh_dims(const Algebra<F>& A) {
  HHIntermediates in;
  auto P0 = make_P0(A);
  auto P1 = make_P1(A);
  auto P2 = make_P2(A);
  const auto g1 = d1_images(A, P0);
  const auto g2 = d2_images(A, P1);
  in.dim_algebra = A.dim();
  in.dim_p0 = P0.dim();
  in.dim_p1 = P1.dim();
  in.dim_p2 = P2.dim();
  in.hom_p0 = CochainSpace<F>(A, P0).dim();
  in.hom_p1 = CochainSpace<F>(A, P1).dim();
  in.hom_p2 = CochainSpace<F>(A, P2).dim();

  in.rank_d1 = rank(bimodule_map_matrix(P1, P0, g1));
  in.ker_d1 = in.dim_p1 - in.rank_d1;
  const auto d2 = bimodule_map_matrix(P2, P1, g2);
  auto K = kernel_basis(d2);
  in.ker_d2 = K.dim();
  in.rank_d2 = in.dim_p2 - in.ker_d2;
  // Exactness of P2 -> P1 -> P0 -> A -> 0.
  if (in.rank_d1 != in.dim_p0 - A.dim())
    throw BuildError("d1 does not map onto the kernel of multiplication");
  if (in.rank_d2 != in.ker_d1)
    throw BuildError("resolution relations do not generate the kernel of d1 (rank d2 = " +
                     std::to_string(in.rank_d2) + ", dim ker d1 = " + std::to_string(in.ker_d1) + ")");

  in.rank_delta0 = rank(cochain_matrix(P1, P0, g1));
  in.ker_delta0 = in.hom_p0 - in.rank_delta0;
  in.rank_delta1 = rank(cochain_matrix(P2, P1, g2));
  in.ker_delta1 = in.hom_p1 - in.rank_delta1;
  in.hom_omega2 = hom_vanishing_dim(P2, K);

  HHResult r;
  r.inter = in;
  r.h0 = in.ker_delta0;
  r.h1 = in.ker_delta0 + in.ker_delta1 - in.hom_p0;
  r.h2 = in.ker_delta1 + in.hom_omega2 - in.hom_p1;
  return r;
}

// Parses "c*u|v + ..." into P: u, v are paths (or e_<vertex>), c optional
// scalar factors; the summand comes from the endpoints, or "@k" (1-based).
template <class F>
Vec<F> parse_bimodule_element(const Algebra<F>& A, const FreeBimodule<F>& P, std::string_view text) {
  const F& f = A.field();
  const auto& q = A.quiver();
  const auto& pres = A.presentation();
  const auto params = bind_params(f, pres, A.bindings());
  detail::LineCursor cur(text, 1);
  auto x = P.zero();
  bool neg = false;
  if (cur.eat('-'))
    neg = true;
  else
    cur.eat('+');
  for (;;) {
    const std::size_t col = cur.col();
    auto left = detail::parse_term(cur, q, pres.params, neg);
    if (!cur.eat('|')) cur.fail("expected '|'");
    auto right = detail::parse_term(cur, q, pres.params, false);
    std::optional<std::size_t> k;
    if (cur.eat('@')) {
      const auto n = std::stoul(cur.number());
      if (n == 0 || n > P.num_summands()) cur.fail_at(col, "summand index out of range");
      k = n - 1;
      if (P.summand(*k) != VertexPair{left.path.target, right.path.source})
        cur.fail_at(col, "term does not fit the requested summand");
    } else {
      for (std::size_t s = 0; s < P.num_summands(); ++s)
        if (P.summand(s) == VertexPair{left.path.target, right.path.source}) {
          if (k) cur.fail_at(col, "ambiguous summand; add @k");
          k = s;
        }
      if (!k) cur.fail_at(col, "no summand matches the term's endpoints");
    }
    auto c = f.mul(eval_scalar(f, left.coef, params), eval_scalar(f, right.coef, params));
    P.add_tensor(x, *k, A.path_element(left.path), A.path_element(right.path), c);
    if (cur.eat('+'))
      neg = false;
    else if (cur.eat('-'))
      neg = true;
    else
      break;
  }
  if (!cur.done()) cur.fail("unexpected trailing input");
  return x;
}

struct GeneratorReport {
  std::vector<bool> in_kernel;
  std::size_t kernel_dim = 0;
  std::size_t closure_dim = 0;
  bool ok() const {
    for (bool b : in_kernel)
      if (!b) return false;
    return closure_dim == kernel_dim;
  }
};

// Sub-bimodule generated by the given elements: seeds e_i g e_j, closed under
// left and right multiplication by arrows.
template <class F>
Echelon<F> bimodule_closure(const FreeBimodule<F>& P, const std::vector<Vec<F>>& gens) {
  const Algebra<F>& A = P.algebra();
  const F& f = A.field();
  Echelon<F> span(f, P.dim());
  std::deque<Vec<F>> todo;
  for (const auto& g : gens)
    for (std::size_t i = 0; i < A.num_vertices(); ++i)
      for (std::size_t j = 0; j < A.num_vertices(); ++j) {
        auto y = P.corner_part(g, i, j);
        if (!is_zero_vec(f, y) && span.insert(y)) todo.push_back(std::move(y));
      }
  while (!todo.empty()) {
    auto y = std::move(todo.front());
    todo.pop_front();
    for (std::size_t a = 0; a < A.num_arrows(); ++a) {
      for (auto z : {P.left_mul(A.arrow(a), y), P.right_mul(y, A.arrow(a))})
        if (!is_zero_vec(f, z) && span.insert(z)) todo.push_back(std::move(z));
    }
  }
  return span;
}

template <class F>
GeneratorReport check_omega3_generators(const Algebra<F>& A, const std::vector<Vec<F>>& gens) {
  const F& f = A.field();
  auto P1 = make_P1(A);
  auto P2 = make_P2(A);
  const auto d2 = bimodule_map_matrix(P2, P1, d2_images(A, P1));
  GeneratorReport rep;
  rep.kernel_dim = P2.dim() - rank(d2);
  for (const auto& g : gens) rep.in_kernel.push_back(is_zero_vec(f, apply(d2, g)));
  rep.closure_dim = bimodule_closure(P2, gens).rank();
  return rep;
}

using TopTable = std::map<VertexPair, std::size_t>;

template <class F>
struct TopResult {
  TopTable multiplicities;
  std::vector<VertexPair> summands;  // one per minimal generator, in echelon order
  std::vector<Vec<F>> lifts;         // matching elements of the sub-bimodule
};

// Top s / (rad s + s rad) of a sub-bimodule s of P, with minimal generators.
template <class F>
TopResult<F> bimodule_top_with_lifts(const FreeBimodule<F>& P, const Subspace<F>& s) {
  const Algebra<F>& A = P.algebra();
  const F& f = A.field();
  const std::size_t nv = A.num_vertices();
  std::vector<Vec<F>> radical_part;
  for (std::size_t r = 0; r < s.dim(); ++r) {
    const auto x = s.vector(r);
    for (std::size_t a = 0; a < A.num_arrows(); ++a)
      for (auto y : {P.left_mul(A.arrow(a), x), P.right_mul(x, A.arrow(a))}) {
        if (is_zero_vec(f, y)) continue;
        if (!s.contains(y)) throw BuildError("subspace is not closed under the bimodule action");
        radical_part.push_back(std::move(y));
      }
    for (std::size_t v = 0; v < nv; ++v) {
      if (!s.contains(P.left_mul(A.idempotent(v), x)) || !s.contains(P.right_mul(x, A.idempotent(v))))
        throw BuildError("subspace is not closed under the bimodule action");
    }
  }
  TopResult<F> res;
  for (std::size_t i = 0; i < nv; ++i)
    for (std::size_t j = 0; j < nv; ++j) {
      Echelon<F> e(f, P.dim());
      for (const auto& y : radical_part) {
        auto z = P.corner_part(y, i, j);
        if (!is_zero_vec(f, z)) e.insert(std::move(z));
      }
      std::size_t count = 0;
      for (std::size_t r = 0; r < s.dim(); ++r) {
        auto z = P.corner_part(s.vector(r), i, j);
        if (is_zero_vec(f, z)) continue;
        if (e.insert(z)) {
          ++count;
          res.summands.emplace_back(i, j);
          res.lifts.push_back(std::move(z));
        }
      }
      if (count) res.multiplicities[{i, j}] = count;
    }
  return res;
}

template <class F>
TopTable bimodule_top(const FreeBimodule<F>& P, const Subspace<F>& s) {
  return bimodule_top_with_lifts(P, s).multiplicities;
}

struct ResolutionDegree {
  std::size_t n = 0;
  std::size_t dim_p = 0;      // dim P_n
  std::size_t dim_omega = 0;  // dim Omega^n (Omega^0 = A)
  TopTable top;               // top of Omega^n = summands of P_n
};

struct ResolutionRecord {
  std::vector<ResolutionDegree> degrees;
  bool truncated = false;
  bool terminated = false;  // some Omega^n vanished
  std::size_t max_feasible = 0;
  std::string note;
};

inline constexpr std::size_t kMaxResolutionTerms = 6;
inline constexpr std::size_t kDefaultMatrixGuard = 12'000'000;

template <class F>
ResolutionRecord extend_resolution(const Algebra<F>& A, std::size_t N, std::size_t guard = kDefaultMatrixGuard) {
  if (N > kMaxResolutionTerms)
    throw std::invalid_argument("resolution length capped at " + std::to_string(kMaxResolutionTerms));
  ResolutionRecord rec;
  auto prev = std::make_unique<FreeBimodule<F>>(make_P0(A));
  ResolutionDegree d0{0, prev->dim(), A.dim(), {}};
  for (std::size_t v = 0; v < A.num_vertices(); ++v) d0.top[{v, v}] = 1;
  rec.degrees.push_back(d0);
  rec.max_feasible = 0;
  if (N == 0) return rec;
  if (A.dim() * prev->dim() > guard) {
    rec.truncated = true;
    rec.note = "memory guard: d0 too large";
    return rec;
  }
  Subspace<F> omega = kernel_basis(d0_matrix(A, *prev));
  for (std::size_t n = 1; n <= N; ++n) {
    ResolutionDegree d{n, 0, omega.dim(), {}};
    if (omega.dim() == 0) {
      rec.degrees.push_back(d);
      rec.terminated = true;
      rec.max_feasible = n;
      break;
    }
    auto top = bimodule_top_with_lifts(*prev, omega);
    auto next = std::make_unique<FreeBimodule<F>>(A, top.summands);
    d.dim_p = next->dim();
    d.top = top.multiplicities;
    rec.degrees.push_back(d);
    rec.max_feasible = n;
    if (n == N) break;
    if (next->dim() * prev->dim() > guard) {
      rec.truncated = true;
      rec.note = "memory guard tripped building d_" + std::to_string(n);
      break;
    }
    auto dn = bimodule_map_matrix(*next, *prev, top.lifts);
    auto ker = kernel_basis(dn);
    if (next->dim() - ker.dim() != omega.dim())
      throw BuildError("chosen generators do not cover Omega^" + std::to_string(n));
    omega = std::move(ker);
    prev = std::move(next);
  }
  return rec;
}

}  // namespace hochcalc
