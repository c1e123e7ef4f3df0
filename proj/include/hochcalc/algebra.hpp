#pragma once

// The certified quotient A = KQ/I: normal-word basis, multiplication table,
// corners e_i A e_j, center, socles, Nakayama permutation and the search for
// a symmetrizing form.

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hochcalc/linalg.hpp"
#include "hochcalc/presentation.hpp"
#include "hochcalc/rewriting.hpp"

namespace hochcalc {

struct BuildOptions {
  std::size_t degree_cap = degree_cap_from_env();
  bool check_associativity = true;
};

struct BuildCertificate {
  std::size_t rules = 0;
  std::size_t overlaps_checked = 0;
  std::size_t associativity_triples = 0;
  bool resolution_ideal_checked = false;
  std::size_t loewy_length = 0;  // set by the resolution-ideal check
};

template <class F>
using SparseVec = std::vector<std::pair<std::size_t, typename F::value_type>>;

template <class F>
class Algebra;

template <class F>
Algebra<F> build(const Presentation& p, const F& f, const ParamBindings& bindings = {},
                 const BuildOptions& opts = {});

template <class F>
class Algebra {
 public:
  using V = typename F::value_type;
  using Element = Vec<F>;

  const F& field() const { return f_; }
  const Presentation& presentation() const { return pres_; }
  const Quiver& quiver() const { return pres_.quiver; }
  std::size_t num_vertices() const { return pres_.quiver.num_vertices(); }
  std::size_t num_arrows() const { return pres_.quiver.num_arrows(); }
  const ParamBindings& bindings() const { return bindings_; }
  const BuildCertificate& certificate() const { return cert_; }
  const RewriteSystem<F>& rewriting() const { return *rs_; }

  std::size_t dim() const { return basis_.size(); }
  const std::vector<Path>& basis() const { return basis_; }
  const Path& word(std::size_t i) const { return basis_[i]; }
  std::optional<std::size_t> index_of(const Path& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  std::size_t source(std::size_t i) const { return basis_[i].source; }
  std::size_t target(std::size_t i) const { return basis_[i].target; }

  std::size_t idempotent(std::size_t v) const { return idem_[v]; }
  std::size_t arrow(std::size_t a) const { return arrow_[a]; }

  // Basis indices of e_i A e_j, of A e_j (words ending at j) and of e_i A.
  const std::vector<std::size_t>& corner(std::size_t i, std::size_t j) const {
    return corner_[i * num_vertices() + j];
  }
  const std::vector<std::size_t>& left_basis(std::size_t j) const { return ends_at_[j]; }
  const std::vector<std::size_t>& right_basis(std::size_t i) const { return starts_at_[i]; }

  const SparseVec<F>& product(std::size_t a, std::size_t b) const { return table_[a * dim() + b]; }

  const std::vector<LinComb<F>>& relations() const { return rels_; }
  const std::vector<LinComb<F>>& resolution_relations() const { return res_rels_; }

  Element zero() const { return Element(dim(), f_.zero()); }
  Element unit() const {
    Element e = zero();
    for (auto i : idem_) e[i] = f_.one();
    return e;
  }
  Element basis_element(std::size_t i) const {
    Element e = zero();
    e[i] = f_.one();
    return e;
  }

  Element element_of(const LinComb<F>& lc) const {
    Element e = zero();
    for (const auto& [p, c] : rs_->reduce(lc)) e[index_.at(p)] = f_.add(e[index_.at(p)], c);
    return e;
  }
  Element path_element(const Path& p) const {
    LinComb<F> lc;
    lc.emplace(p, f_.one());
    return element_of(lc);
  }

  Element multiply(const Element& a, const Element& b) const {
    Element r = zero();
    for (std::size_t i = 0; i < dim(); ++i) {
      if (f_.is_zero(a[i])) continue;
      for (auto j : starts_at_[target(i)]) {
        if (f_.is_zero(b[j])) continue;
        const auto c = f_.mul(a[i], b[j]);
        for (const auto& [k, x] : product(i, j)) r[k] = f_.add(r[k], f_.mul(c, x));
      }
    }
    return r;
  }

  std::vector<std::vector<std::size_t>> cartan_matrix() const {
    std::vector<std::vector<std::size_t>> c(num_vertices(), std::vector<std::size_t>(num_vertices()));
    for (std::size_t i = 0; i < num_vertices(); ++i)
      for (std::size_t j = 0; j < num_vertices(); ++j) c[i][j] = corner(i, j).size();
    return c;
  }

  std::string render(const Element& x) const {
    std::string s;
    for (std::size_t i = 0; i < dim(); ++i) {
      if (f_.is_zero(x[i])) continue;
      if (!s.empty()) s += " + ";
      if (!f_.equal(x[i], f_.one())) s += "(" + f_.to_string(x[i]) + ")*";
      s += render_path(quiver(), basis_[i]);
    }
    return s.empty() ? "0" : s;
  }

  template <class G>
  friend Algebra<G> build(const Presentation& p, const G& f, const ParamBindings& bindings,
                          const BuildOptions& opts);

 private:
  explicit Algebra(const F& f) : f_(f) {}

  F f_;
  Presentation pres_;
  ParamBindings bindings_;
  std::shared_ptr<RewriteSystem<F>> rs_;
  std::vector<LinComb<F>> rels_, res_rels_;
  std::vector<Path> basis_;
  std::map<Path, std::size_t> index_;
  std::vector<std::size_t> idem_, arrow_;
  std::vector<std::vector<std::size_t>> corner_, ends_at_, starts_at_;
  std::vector<SparseVec<F>> table_;
  BuildCertificate cert_;
};


template <class F>
std::size_t nilpotency_index(const Algebra<F>& A);

namespace detail {

// The two relation lists must define the same admissible ideal I. Since
// rad^m A = 0 puts every path of length m into I, this is checked as
// I = (resolution relations) + (paths of length m): every resolution relation
// reduces to 0 in A, and the completion of the resolution relations together
// with all length-m paths reduces every defining relation to 0.
template <class F>
std::size_t check_resolution_ideal(const Algebra<F>& A, std::size_t cap) {
  const F& f = A.field();
  const Quiver& q = A.quiver();
  for (const auto& r : A.resolution_relations())
    if (!A.rewriting().reduce(r).empty())
      throw BuildError("resolution/defining ideal mismatch: a resolution relation is not in the defining ideal");
  const std::size_t m = nilpotency_index(A);
  std::vector<LinComb<F>> gens = A.resolution_relations();
  std::vector<Path> level;
  for (std::size_t a = 0; a < q.num_arrows(); ++a) level.push_back(Path::arrow(q, a));
  for (std::size_t len = 1; len < m; ++len) {
    std::vector<Path> next;
    for (const auto& w : level)
      for (std::size_t a = 0; a < q.num_arrows(); ++a)
        if (auto x = concat(w, Path::arrow(q, a))) next.push_back(std::move(*x));
    level = std::move(next);
  }
  for (const auto& w : level) {
    LinComb<F> lc;
    lc.emplace(w, f.one());
    gens.push_back(std::move(lc));
  }
  RewriteSystem<F> other(f, q);
  try {
    other.complete(gens, std::max(cap, 2 * m));
  } catch (const BuildError& e) {
    throw BuildError(std::string("resolution/defining ideal mismatch: ") + e.what());
  }
  for (const auto& r : A.relations())
    if (!other.reduce(r).empty())
      throw BuildError("resolution/defining ideal mismatch: a defining relation is not generated by the "
                       "resolution relations modulo paths of length " + std::to_string(m));
  return m;
}

}  // namespace detail

template <class F>
Algebra<F> build(const Presentation& p, const F& f, const ParamBindings& bindings, const BuildOptions& opts) {
  auto report = validate(p, f, bindings);
  if (!report.ok()) {
    std::string msg = "presentation '" + p.name + "' is invalid:";
    for (const auto& v : report.violations) msg += "\n  " + v;
    throw BuildError(msg);
  }
  Algebra<F> A(f);
  A.pres_ = p;
  A.bindings_ = bindings;
  const auto params = bind_params(f, p, bindings);
  for (const auto& r : p.relations) {
    auto lc = bind_relation(f, r, params);
    if (!lc.empty()) A.rels_.push_back(std::move(lc));
  }
  for (const auto& r : p.effective_resolution_relations()) {
    auto lc = bind_relation(f, r, params);
    if (lc.empty()) throw BuildError("resolution relation " + render_relation(p.quiver, r) + " is zero");
    A.res_rels_.push_back(std::move(lc));
  }

  A.rs_ = std::make_shared<RewriteSystem<F>>(f, p.quiver);
  A.rs_->complete(A.rels_, opts.degree_cap);
  A.cert_.rules = A.rs_->rules().size();
  A.cert_.overlaps_checked = A.rs_->overlaps_checked();

  A.basis_ = A.rs_->normal_words();
  const std::size_t n = A.basis_.size(), nv = p.quiver.num_vertices();
  for (std::size_t i = 0; i < n; ++i) A.index_.emplace(A.basis_[i], i);
  A.idem_.resize(nv);
  for (std::size_t v = 0; v < nv; ++v) A.idem_[v] = A.index_.at(Path::trivial(v));
  A.arrow_.resize(p.quiver.num_arrows());
  for (std::size_t a = 0; a < p.quiver.num_arrows(); ++a) {
    auto it = A.index_.find(Path::arrow(p.quiver, a));
    if (it == A.index_.end()) throw BuildError("arrow " + p.quiver.arrows[a].label + " lies in the ideal");
    A.arrow_[a] = it->second;
  }
  A.corner_.assign(nv * nv, {});
  A.ends_at_.assign(nv, {});
  A.starts_at_.assign(nv, {});
  for (std::size_t i = 0; i < n; ++i) {
    const auto& w = A.basis_[i];
    A.corner_[w.source * nv + w.target].push_back(i);
    A.ends_at_[w.target].push_back(i);
    A.starts_at_[w.source].push_back(i);
  }

  A.table_.assign(n * n, {});
  for (std::size_t a = 0; a < n; ++a)
    for (auto b : A.starts_at_[A.basis_[a].target]) {
      auto prod = concat(A.basis_[a], A.basis_[b]);
      SparseVec<F> sv;
      if (A.basis_[a].is_trivial()) {
        sv.emplace_back(b, f.one());
      } else if (A.basis_[b].is_trivial()) {
        sv.emplace_back(a, f.one());
      } else {
        for (const auto& [w, c] : A.rs_->reduce_path(*prod)) sv.emplace_back(A.index_.at(w), c);
        std::sort(sv.begin(), sv.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      }
      A.table_[a * n + b] = std::move(sv);
    }

  if (opts.check_associativity) {
    // (ab)c = a(bc) on all composable basis triples.
    std::size_t triples = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (auto b : A.starts_at_[A.basis_[a].target])
        for (auto c : A.starts_at_[A.basis_[b].target]) {
          ++triples;
          Vec<F> left(n, f.zero()), right(n, f.zero());
          for (const auto& [k, x] : A.product(a, b))
            for (const auto& [m, y] : A.product(k, c)) left[m] = f.add(left[m], f.mul(x, y));
          for (const auto& [k, x] : A.product(b, c))
            for (const auto& [m, y] : A.product(a, k)) right[m] = f.add(right[m], f.mul(x, y));
          for (std::size_t m = 0; m < n; ++m)
            if (!f.equal(left[m], right[m]))
              throw BuildError("associativity check failed on " + render_path(p.quiver, A.basis_[a]) + ", " +
                               render_path(p.quiver, A.basis_[b]) + ", " + render_path(p.quiver, A.basis_[c]));
        }
    A.cert_.associativity_triples = triples;
  }
  if (p.has_resolution_block) {
    A.cert_.loewy_length = detail::check_resolution_ideal(A, opts.degree_cap);
    A.cert_.resolution_ideal_checked = true;
  }
  return A;
}

template <class F>
struct CenterResult {
  std::size_t dim = 0;
  std::vector<Vec<F>> basis;
};

// Solved over all of A: z commutes with every idempotent and every arrow.
template <class F>
CenterResult<F> center(const Algebra<F>& A) {
  const F& f = A.field();
  const std::size_t n = A.dim();
  std::vector<std::size_t> gens;
  for (std::size_t v = 0; v < A.num_vertices(); ++v) gens.push_back(A.idempotent(v));
  for (std::size_t a = 0; a < A.num_arrows(); ++a) gens.push_back(A.arrow(a));
  Matrix<F> m(f, gens.size() * n, n);
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    const auto g = gens[gi];
    for (std::size_t b = 0; b < n; ++b) {
      for (const auto& [k, x] : A.product(g, b)) m(gi * n + k, b) = f.add(m(gi * n + k, b), x);
      for (const auto& [k, x] : A.product(b, g)) m(gi * n + k, b) = f.sub(m(gi * n + k, b), x);
    }
  }
  auto ker = kernel_basis(m);
  CenterResult<F> r;
  r.dim = ker.dim();
  for (std::size_t i = 0; i < ker.dim(); ++i) r.basis.push_back(ker.vector(i));
  return r;
}

template <class F>
bool in_center(const Algebra<F>& A, const Vec<F>& z) {
  const F& f = A.field();
  for (std::size_t v = 0; v < A.num_vertices(); ++v) {
    auto e = A.basis_element(A.idempotent(v));
    auto d = A.multiply(e, z);
    auto d2 = A.multiply(z, e);
    for (std::size_t i = 0; i < A.dim(); ++i)
      if (!f.equal(d[i], d2[i])) return false;
  }
  for (std::size_t a = 0; a < A.num_arrows(); ++a) {
    auto e = A.basis_element(A.arrow(a));
    auto d = A.multiply(e, z);
    auto d2 = A.multiply(z, e);
    for (std::size_t i = 0; i < A.dim(); ++i)
      if (!f.equal(d[i], d2[i])) return false;
  }
  return true;
}

// Dims of rad^1, rad^2, ..., stopping at the last nonzero power. The
// nilpotency index is the returned size + 1.
template <class F>
std::vector<std::size_t> radical_series(const Algebra<F>& A) {
  const F& f = A.field();
  const std::size_t n = A.dim();
  std::vector<Vec<F>> cur;
  for (std::size_t i = 0; i < n; ++i)
    if (!A.word(i).is_trivial()) cur.push_back(A.basis_element(i));
  std::vector<std::size_t> dims;
  while (!cur.empty()) {
    dims.push_back(cur.size());
    Echelon<F> next(f, n);
    std::vector<Vec<F>> nb;
    for (const auto& x : cur)
      for (std::size_t a = 0; a < A.num_arrows(); ++a) {
        auto y = A.multiply(x, A.basis_element(A.arrow(a)));
        if (!is_zero_vec(f, y) && next.insert(y)) nb.push_back(std::move(y));
      }
    cur = std::move(nb);
  }
  return dims;
}

template <class F>
std::size_t nilpotency_index(const Algebra<F>& A) {
  return radical_series(A).size() + 1;
}

// soc(e_i A) = {x in e_i A : x * arrow = 0 for all arrows}, as full-length vectors.
template <class F>
std::vector<Vec<F>> right_socle(const Algebra<F>& A, std::size_t i) {
  const F& f = A.field();
  const auto& cols = A.right_basis(i);
  const std::size_t n = A.dim();
  Matrix<F> m(f, A.num_arrows() * n, cols.size());
  for (std::size_t a = 0; a < A.num_arrows(); ++a)
    for (std::size_t c = 0; c < cols.size(); ++c)
      for (const auto& [k, x] : A.product(cols[c], A.arrow(a))) m(a * n + k, c) = f.add(m(a * n + k, c), x);
  auto ker = kernel_basis(m);
  std::vector<Vec<F>> out;
  for (std::size_t r = 0; r < ker.dim(); ++r) {
    Vec<F> v = A.zero();
    for (std::size_t c = 0; c < cols.size(); ++c) v[cols[c]] = ker.basis()(r, c);
    out.push_back(std::move(v));
  }
  return out;
}

struct NakayamaResult {
  std::optional<std::vector<std::size_t>> permutation;
  std::vector<std::size_t> socle_dims;
  std::string evidence;  // why no permutation exists
  bool is_identity() const {
    if (!permutation) return false;
    for (std::size_t i = 0; i < permutation->size(); ++i)
      if ((*permutation)[i] != i) return false;
    return true;
  }
};

template <class F>
NakayamaResult nakayama_permutation(const Algebra<F>& A) {
  const F& f = A.field();
  NakayamaResult r;
  std::vector<std::size_t> nu;
  std::string evidence;
  for (std::size_t i = 0; i < A.num_vertices(); ++i) {
    auto soc = right_socle(A, i);
    r.socle_dims.push_back(soc.size());
    if (soc.size() != 1) {
      if (evidence.empty())
        evidence = "soc(e_" + A.quiver().vertices[i] + "A) has dimension " + std::to_string(soc.size());
      continue;
    }
    std::optional<std::size_t> j;
    for (std::size_t k = 0; k < A.dim(); ++k)
      if (!f.is_zero(soc[0][k])) {
        if (j && *j != A.target(k) && evidence.empty()) evidence = "socle element not in a single corner";
        j = A.target(k);
      }
    nu.push_back(*j);
  }
  if (evidence.empty()) {
    std::vector<bool> hit(A.num_vertices(), false);
    for (auto j : nu) {
      if (hit[j]) evidence = "socle map is not injective (vertex " + A.quiver().vertices[j] + " hit twice)";
      hit[j] = true;
    }
  }
  if (evidence.empty())
    r.permutation = std::move(nu);
  else
    r.evidence = std::move(evidence);
  return r;
}

enum class SymmetryVerdict { certified, refuted_by_nakayama, refuted_exhaustive, unresolved };

inline std::string to_string(SymmetryVerdict v) {
  switch (v) {
    case SymmetryVerdict::certified: return "Certified";
    case SymmetryVerdict::refuted_by_nakayama: return "RefutedByNakayama";
    case SymmetryVerdict::refuted_exhaustive: return "RefutedExhaustive";
    case SymmetryVerdict::unresolved: return "Unresolved";
  }
  return "?";
}

template <class F>
struct SymmetryResult {
  SymmetryVerdict verdict = SymmetryVerdict::unresolved;
  Vec<F> functional;  // values on the basis words when certified
  std::size_t symmetric_functionals = 0;  // dim of functionals vanishing on [A,A]
  std::size_t trials = 0;
  std::string note;
};

// Functionals vanishing on [A,A], as vectors of values on basis words.
template <class F>
std::vector<Vec<F>> trace_functionals(const Algebra<F>& A) {
  const F& f = A.field();
  const std::size_t n = A.dim();
  // [A,A] is spanned by commutators of generators (idempotents, arrows) with basis words.
  std::vector<std::size_t> gens;
  for (std::size_t v = 0; v < A.num_vertices(); ++v) gens.push_back(A.idempotent(v));
  for (std::size_t a = 0; a < A.num_arrows(); ++a) gens.push_back(A.arrow(a));
  Echelon<F> comm(f, n);
  for (auto g : gens)
    for (std::size_t b = 0; b < n; ++b) {
      Vec<F> c(n, f.zero());
      for (const auto& [k, x] : A.product(g, b)) c[k] = f.add(c[k], x);
      for (const auto& [k, x] : A.product(b, g)) c[k] = f.sub(c[k], x);
      if (!is_zero_vec(f, c)) comm.insert(std::move(c));
    }
  Matrix<F> m(f, comm.rank(), n);
  for (std::size_t r = 0; r < comm.rank(); ++r) {
    auto row = comm.row(r);
    std::copy(row.begin(), row.end(), m.row(r));
  }
  auto ker = kernel_basis(m);
  std::vector<Vec<F>> out;
  for (std::size_t i = 0; i < ker.dim(); ++i) out.push_back(ker.vector(i));
  return out;
}

template <class F>
bool form_nondegenerate(const Algebra<F>& A, const Vec<F>& phi) {
  const F& f = A.field();
  const std::size_t n = A.dim();
  Matrix<F> g(f, n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (auto b : A.right_basis(A.target(a))) {
      auto s = f.zero();
      for (const auto& [k, x] : A.product(a, b)) s = f.add(s, f.mul(x, phi[k]));
      g(a, b) = s;
    }
  return rank(std::move(g)) == n;
}

template <class F>
SymmetryResult<F> symmetric_certify(const Algebra<F>& A, std::size_t random_trials = 1000) {
  const F& f = A.field();
  SymmetryResult<F> res;
  auto nak = nakayama_permutation(A);
  if (!nak.is_identity()) {
    res.verdict = SymmetryVerdict::refuted_by_nakayama;
    res.note = nak.permutation ? "Nakayama permutation is not the identity" : nak.evidence;
    return res;
  }
  const auto S = trace_functionals(A);
  res.symmetric_functionals = S.size();
  const std::size_t n = A.dim();
  auto combine = [&](const std::vector<V_of<F>>& coeffs) {
    Vec<F> phi(n, f.zero());
    for (std::size_t t = 0; t < S.size(); ++t) {
      if (f.is_zero(coeffs[t])) continue;
      for (std::size_t k = 0; k < n; ++k)
        if (!f.is_zero(S[t][k])) phi[k] = f.add(phi[k], f.mul(coeffs[t], S[t][k]));
    }
    return phi;
  };
  if (S.empty()) {
    res.verdict = SymmetryVerdict::refuted_exhaustive;
    res.note = "no nonzero functional vanishes on [A,A]";
    return res;
  }
  const std::uint64_t q = f.order();
  bool exhaustive = false;
  std::uint64_t total = 1;
  if (q != 0) {
    exhaustive = true;
    for (std::size_t t = 0; t < S.size() && exhaustive; ++t) {
      total *= q;
      if (total > (std::uint64_t{1} << 20)) exhaustive = false;
    }
  }
  if constexpr (requires(const F& ff) { ff.element(0); }) {
    if (exhaustive) {
      for (std::uint64_t idx = 1; idx < total; ++idx) {
        std::vector<V_of<F>> c(S.size());
        std::uint64_t x = idx;
        for (std::size_t t = 0; t < S.size(); ++t) {
          c[t] = f.element(x % q);
          x /= q;
        }
        ++res.trials;
        auto phi = combine(c);
        if (form_nondegenerate(A, phi)) {
          res.verdict = SymmetryVerdict::certified;
          res.functional = std::move(phi);
          return res;
        }
      }
      res.verdict = SymmetryVerdict::refuted_exhaustive;
      res.note = "all " + std::to_string(total - 1) + " nonzero functionals vanishing on [A,A] are degenerate";
      return res;
    }
  }
  std::mt19937_64 rng(0x5eed);
  for (std::size_t t = 0; t < random_trials; ++t) {
    std::vector<V_of<F>> c(S.size());
    for (auto& x : c) x = f.random(rng);
    ++res.trials;
    auto phi = combine(c);
    if (form_nondegenerate(A, phi)) {
      res.verdict = SymmetryVerdict::certified;
      res.functional = std::move(phi);
      return res;
    }
  }
  res.verdict = SymmetryVerdict::unresolved;
  res.note = "no nondegenerate form found in " + std::to_string(random_trials) + " random trials";
  return res;
}

}  // namespace hochcalc
