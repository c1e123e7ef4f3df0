#pragma once

// Noncommutative rewriting for path algebras: completion of a set of relations
// to a confluent system under the length-lexicographic order, reduction to
// normal form, and enumeration of normal words.

#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "hochcalc/presentation.hpp"

namespace hochcalc {

class BuildError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultDegreeCap = 16;

// HOCHCALC_GB_CAP overrides the completion degree cap.
inline std::size_t degree_cap_from_env() {
  if (const char* s = std::getenv("HOCHCALC_GB_CAP")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(s, &end, 10);
    if (end != s && *end == '\0' && v > 0) return v;
  }
  return kDefaultDegreeCap;
}

template <class F>
struct Rule {
  Path lead;
  LinComb<F> tail;  // lead -> tail, every tail path smaller than lead
};

template <class F>
class RewriteSystem {
 public:
  using V = typename F::value_type;

  RewriteSystem(const F& f, const Quiver& q) : f_(f), q_(q), by_first_(q.num_arrows()) {}

  const std::vector<Rule<F>>& rules() const { return rules_; }
  std::size_t overlaps_checked() const { return overlaps_checked_; }
  std::size_t max_lead_length() const {
    std::size_t m = 0;
    for (const auto& r : rules_) m = std::max(m, r.lead.length());
    return m;
  }

  // Completes the relations into a confluent system; throws BuildError when an
  // unresolved overlap exceeds the degree cap.
  void complete(const std::vector<LinComb<F>>& relations, std::size_t cap) {
    std::vector<Rule<F>> work;
    std::vector<bool> alive;
    std::vector<LinComb<F>> queue(relations.rbegin(), relations.rend());
    // (degree, i, j, k): suffix of lead i of length k equals prefix of lead j.
    std::set<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>> pairs;

    auto rebuild_index = [&] {
      rules_.clear();
      for (auto& l : by_first_) l.clear();
      for (std::size_t i = 0; i < work.size(); ++i)
        if (alive[i]) {
          by_first_[work[i].lead.arrows.front()].push_back(rules_.size());
          rules_.push_back(work[i]);
        }
    };
    auto add_pairs = [&](std::size_t n) {
      for (std::size_t i = 0; i < work.size(); ++i) {
        if (!alive[i]) continue;
        for (auto [a, b] : {std::pair{i, n}, std::pair{n, i}}) {
          const auto& la = work[a].lead.arrows;
          const auto& lb = work[b].lead.arrows;
          for (std::size_t k = 1; k < la.size() && k < lb.size(); ++k)
            if (std::equal(la.end() - k, la.end(), lb.begin()))
              pairs.emplace(la.size() + lb.size() - k, a, b, k);
          if (a == b) break;
        }
      }
    };

    for (;;) {
      while (!queue.empty()) {
        LinComb<F> p = reduce(std::move(queue.back()));
        queue.pop_back();
        if (p.empty()) continue;
        Rule<F> r = make_rule(p);
        if (r.lead.is_trivial())
          throw BuildError("the ideal contains the idempotent " + render_path(q_, r.lead) + "; not admissible");
        const std::size_t n = work.size();
        for (std::size_t i = 0; i < n; ++i) {
          if (!alive[i] || !contains(work[i].lead, r.lead)) continue;
          alive[i] = false;
          LinComb<F> back = work[i].tail;
          for (auto& [path, c] : back) c = f_.neg(c);
          add_term(f_, back, work[i].lead, f_.one());
          queue.push_back(std::move(back));
        }
        work.push_back(std::move(r));
        alive.push_back(true);
        rebuild_index();
        add_pairs(n);
      }
      // Smallest live overlap first.
      std::optional<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>> next;
      while (!pairs.empty()) {
        auto it = pairs.begin();
        auto t = *it;
        pairs.erase(it);
        if (alive[std::get<1>(t)] && alive[std::get<2>(t)]) {
          next = t;
          break;
        }
      }
      if (!next) break;
      auto [deg, i, j, k] = *next;
      if (deg > cap)
        throw BuildError("not certified at cap " + std::to_string(cap) + ": unresolved overlap of degree " +
                         std::to_string(deg));
      LinComb<F> s = overlap_difference(work[i], work[j], k);
      s = reduce(std::move(s));
      if (!s.empty()) queue.push_back(std::move(s));
    }
    // Interreduce tails so the system is the reduced one.
    for (std::size_t i = 0; i < work.size(); ++i)
      if (alive[i]) work[i].tail = reduce(work[i].tail);
    rebuild_index();
    certify();
  }

  // Diamond-lemma certificate: every overlap of the final rules resolves.
  void certify() {
    overlaps_checked_ = 0;
    for (std::size_t i = 0; i < rules_.size(); ++i)
      for (std::size_t j = 0; j < rules_.size(); ++j) {
        const auto& la = rules_[i].lead.arrows;
        const auto& lb = rules_[j].lead.arrows;
        if (i != j && contains(rules_[j].lead, rules_[i].lead))
          throw BuildError("rewrite system is not reduced: " + render_path(q_, rules_[i].lead) + " inside " +
                           render_path(q_, rules_[j].lead));
        for (std::size_t k = 1; k < la.size() && k < lb.size(); ++k) {
          if (!std::equal(la.end() - k, la.end(), lb.begin())) continue;
          ++overlaps_checked_;
          if (!reduce(overlap_difference(rules_[i], rules_[j], k)).empty())
            throw BuildError("confluence check failed on overlap of " + render_path(q_, rules_[i].lead) + " and " +
                             render_path(q_, rules_[j].lead));
        }
      }
  }

  LinComb<F> reduce(LinComb<F> p) const {
    LinComb<F> out;
    while (!p.empty()) {
      auto it = std::prev(p.end());
      const Path w = it->first;
      const V c = it->second;
      p.erase(it);
      auto m = match(w);
      if (!m) {
        out.emplace(w, c);
        continue;
      }
      const auto& [ri, pos] = *m;
      const Rule<F>& r = rules_[ri];
      const std::size_t len = r.lead.length();
      for (const auto& [t, d] : r.tail) {
        Path np = splice(w, pos, len, t);
        add_term(f_, p, np, f_.mul(c, d));
      }
    }
    return out;
  }

  LinComb<F> reduce_path(const Path& p) const {
    LinComb<F> lc;
    lc.emplace(p, f_.one());
    return reduce(std::move(lc));
  }

  bool is_normal(const Path& w) const { return !match(w).has_value(); }

  // Normal words in increasing order. Throws when the set is infinite: with m
  // the longest lead, normality is decided by windows of length m, so a normal
  // word longer than (#normal words of length m-1) + m - 1 repeats a window and
  // can be pumped.
  std::vector<Path> normal_words(std::size_t limit = 1000000) const {
    std::vector<Path> all;
    std::vector<Path> level;
    for (std::size_t v = 0; v < q_.num_vertices(); ++v) level.push_back(Path::trivial(v));
    const std::size_t m = std::max<std::size_t>(1, max_lead_length());
    std::optional<std::size_t> bound;
    std::size_t len = 0;
    while (!level.empty()) {
      if (len + 1 == m) bound = level.size() + m - 1;
      if (m == 1 && len == 0) bound = q_.num_vertices();
      if (bound && len >= *bound && len >= m)
        throw BuildError("not finite-dimensional: normal words of length " + std::to_string(len) +
                         " exist (cycle among normal words)");
      all.insert(all.end(), level.begin(), level.end());
      if (all.size() > limit) throw BuildError("not finite-dimensional: more than " + std::to_string(limit) +
                                               " normal words");
      std::vector<Path> next;
      for (const auto& w : level)
        for (std::size_t a = 0; a < q_.num_arrows(); ++a) {
          if (q_.arrows[a].source != w.target) continue;
          Path x = w.is_trivial() ? Path::arrow(q_, a) : *concat(w, Path::arrow(q_, a));
          if (suffix_normal(x)) next.push_back(std::move(x));
        }
      std::sort(next.begin(), next.end());
      level = std::move(next);
      ++len;
    }
    return all;
  }

 private:
  Rule<F> make_rule(const LinComb<F>& p) const {
    auto lead = std::prev(p.end());
    const V inv = f_.inv(lead->second);
    Rule<F> r{lead->first, {}};
    for (auto it = p.begin(); it != lead; ++it) r.tail.emplace(it->first, f_.neg(f_.mul(it->second, inv)));
    return r;
  }

  static bool contains(const Path& big, const Path& small) {
    if (small.length() > big.length() || small.is_trivial()) return false;
    return std::search(big.arrows.begin(), big.arrows.end(), small.arrows.begin(), small.arrows.end()) !=
           big.arrows.end();
  }

  // Replaces arrows [pos, pos+len) of w by the path t.
  Path splice(const Path& w, std::size_t pos, std::size_t len, const Path& t) const {
    Path r;
    r.source = w.source;
    r.target = w.target;
    r.arrows.reserve(w.length() - len + t.length());
    r.arrows.insert(r.arrows.end(), w.arrows.begin(), w.arrows.begin() + pos);
    r.arrows.insert(r.arrows.end(), t.arrows.begin(), t.arrows.end());
    r.arrows.insert(r.arrows.end(), w.arrows.begin() + pos + len, w.arrows.end());
    return r;
  }

  // lead_i * b - a * lead_j rewritten: tail_i * b - a * tail_j.
  LinComb<F> overlap_difference(const Rule<F>& ri, const Rule<F>& rj, std::size_t k) const {
    const auto& li = ri.lead;
    const auto& lj = rj.lead;
    const Path a = subpath(q_, li, 0, li.length() - k);
    const Path b = subpath(q_, lj, k, lj.length());
    LinComb<F> s;
    for (const auto& [t, c] : ri.tail) add_term(f_, s, *concat(t, b), c);
    for (const auto& [t, c] : rj.tail) add_term(f_, s, *concat(a, t), f_.neg(c));
    return s;
  }

  std::optional<std::pair<std::size_t, std::size_t>> match(const Path& w) const {
    const auto& ar = w.arrows;
    for (std::size_t pos = 0; pos < ar.size(); ++pos)
      for (auto ri : by_first_[ar[pos]]) {
        const auto& l = rules_[ri].lead.arrows;
        if (l.size() <= ar.size() - pos && std::equal(l.begin(), l.end(), ar.begin() + pos))
          return std::pair{ri, pos};
      }
    return std::nullopt;
  }

  // w's proper prefix is known normal, so only suffixes can match a lead.
  bool suffix_normal(const Path& w) const {
    const auto& ar = w.arrows;
    for (const auto& r : rules_) {
      const auto& l = r.lead.arrows;
      if (l.size() <= ar.size() && std::equal(l.begin(), l.end(), ar.end() - l.size())) return false;
    }
    return true;
  }

  F f_;
  Quiver q_;
  std::vector<Rule<F>> rules_;
  std::vector<std::vector<std::size_t>> by_first_;
  std::size_t overlaps_checked_ = 0;
};

}  // namespace hochcalc
