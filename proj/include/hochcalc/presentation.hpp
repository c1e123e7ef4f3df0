#pragma once

// Quivers with relations and the `.qa` text format.
//
//   algebra <name> [params <id>, ...]
//   field-constraints: <id> not-in {<lit>, ...}
//   vertices: <v1>, <v2>, ...
//   arrow <label>: <src> -> <tgt>
//   relations:
//     <lincomb> = <lincomb|0>
//   resolution-relations:
//     <lincomb> = <lincomb|0>
//
// Paths compose left to right: alpha*beta needs target(alpha) = source(beta).
// Coefficients stay symbolic (literal and parameter factors) until bound to a
// field, so one presentation serves every characteristic.

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hochcalc/fields.hpp"

namespace hochcalc {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t col, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + msg),
        line_(line),
        col_(col),
        msg_(msg) {}
  std::size_t line() const { return line_; }
  std::size_t col() const { return col_; }
  const std::string& message() const { return msg_; }

 private:
  std::size_t line_, col_;
  std::string msg_;
};

class BindError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Arrow {
  std::string label;
  std::size_t source = 0, target = 0;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

struct Quiver {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;

  std::size_t num_vertices() const { return vertices.size(); }
  std::size_t num_arrows() const { return arrows.size(); }
  std::optional<std::size_t> vertex_index(std::string_view label) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
      if (vertices[i] == label) return i;
    return std::nullopt;
  }
  std::optional<std::size_t> arrow_index(std::string_view label) const {
    for (std::size_t i = 0; i < arrows.size(); ++i)
      if (arrows[i].label == label) return i;
    return std::nullopt;
  }
  friend bool operator==(const Quiver&, const Quiver&) = default;
};

// A path is either the trivial path at a vertex or a composable arrow sequence.
struct Path {
  std::size_t source = 0, target = 0;
  std::vector<std::size_t> arrows;

  static Path trivial(std::size_t v) { return {v, v, {}}; }
  static Path arrow(const Quiver& q, std::size_t a) { return {q.arrows[a].source, q.arrows[a].target, {a}}; }

  std::size_t length() const { return arrows.size(); }
  bool is_trivial() const { return arrows.empty(); }

  // Monomial order: length first, then lexicographic in arrow declaration order.
  friend bool operator<(const Path& a, const Path& b) {
    if (a.arrows.size() != b.arrows.size()) return a.arrows.size() < b.arrows.size();
    if (a.arrows.empty()) return a.source < b.source;
    return a.arrows < b.arrows;
  }
  friend bool operator==(const Path& a, const Path& b) {
    return a.source == b.source && a.target == b.target && a.arrows == b.arrows;
  }
};

inline std::optional<Path> concat(const Path& a, const Path& b) {
  if (a.target != b.source) return std::nullopt;
  Path r{a.source, b.target, a.arrows};
  r.arrows.insert(r.arrows.end(), b.arrows.begin(), b.arrows.end());
  return r;
}

// Sub-path of arrows [from, to).
inline Path subpath(const Quiver& q, const Path& p, std::size_t from, std::size_t to) {
  if (from == to) {
    const std::size_t v = from == 0 ? p.source : q.arrows[p.arrows[from - 1]].target;
    return Path::trivial(v);
  }
  Path r;
  r.arrows.assign(p.arrows.begin() + from, p.arrows.begin() + to);
  r.source = q.arrows[r.arrows.front()].source;
  r.target = q.arrows[r.arrows.back()].target;
  return r;
}

inline std::string render_path(const Quiver& q, const Path& p) {
  if (p.is_trivial()) return "e_" + q.vertices[p.source];
  std::string s;
  for (std::size_t i = 0; i < p.arrows.size(); ++i) {
    if (i) s += '*';
    s += q.arrows[p.arrows[i]].label;
  }
  return s;
}

// Product of scalar factors; each factor is a literal (e.g. "2", "1/3", "g+1")
// or a parameter name. Empty product = 1.
struct ScalarExpr {
  bool negative = false;
  std::vector<std::string> factors;
  friend bool operator==(const ScalarExpr&, const ScalarExpr&) = default;
};

struct SymbolicTerm {
  ScalarExpr coef;
  Path path;
  friend bool operator==(const SymbolicTerm&, const SymbolicTerm&) = default;
};

struct SymbolicRelation {
  std::vector<SymbolicTerm> lhs, rhs;  // empty side means 0
  friend bool operator==(const SymbolicRelation& a, const SymbolicRelation& b) {
    return a.lhs == b.lhs && a.rhs == b.rhs;
  }
};

struct FieldConstraint {
  std::string param;
  std::vector<std::string> excluded;
  friend bool operator==(const FieldConstraint&, const FieldConstraint&) = default;
};

struct Presentation {
  std::string name;
  std::vector<std::string> params;
  std::vector<FieldConstraint> constraints;
  Quiver quiver;
  std::vector<SymbolicRelation> relations;
  std::vector<SymbolicRelation> resolution_relations;
  bool has_resolution_block = false;

  const std::vector<SymbolicRelation>& effective_resolution_relations() const {
    return has_resolution_block ? resolution_relations : relations;
  }
  friend bool operator==(const Presentation&, const Presentation&) = default;
};

using ParamBindings = std::map<std::string, std::string>;

// Linear combination of paths with field coefficients, no zero entries.
template <class F>
using LinComb = std::map<Path, typename F::value_type>;

template <class F>
void add_term(const F& f, LinComb<F>& lc, const Path& p, const typename F::value_type& c) {
  if (f.is_zero(c)) return;
  auto [it, fresh] = lc.emplace(p, c);
  if (!fresh) {
    it->second = f.add(it->second, c);
    if (f.is_zero(it->second)) lc.erase(it);
  }
}

namespace detail {

inline bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
inline bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

// Cursor over one line with 1-based column reporting.
class LineCursor {
 public:
  LineCursor(std::string_view text, std::size_t line) : s_(text), line_(line) {}

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool done() {
    skip();
    return i_ >= s_.size();
  }
  char peek() {
    skip();
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  bool eat(char c) {
    if (peek() == c) {
      ++i_;
      return true;
    }
    return false;
  }
  bool eat_word(std::string_view w) {
    skip();
    if (s_.substr(i_, w.size()) == w && (i_ + w.size() == s_.size() || !ident_char(s_[i_ + w.size()]))) {
      i_ += w.size();
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  std::string ident() {
    skip();
    if (i_ >= s_.size() || !ident_start(s_[i_])) fail("expected identifier");
    std::size_t start = i_;
    while (i_ < s_.size() && ident_char(s_[i_])) ++i_;
    return std::string(s_.substr(start, i_ - start));
  }
  // Vertex labels may be numerals or identifiers.
  std::string label() {
    skip();
    if (i_ >= s_.size() || !(ident_char(s_[i_]))) fail("expected label");
    std::size_t start = i_;
    while (i_ < s_.size() && ident_char(s_[i_])) ++i_;
    return std::string(s_.substr(start, i_ - start));
  }
  std::string number() {
    skip();
    std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) fail("expected number");
    return std::string(s_.substr(start, i_ - start));
  }
  // Raw text up to the matching ')'; the '(' has been consumed.
  std::string balanced() {
    std::size_t depth = 1, start = i_;
    while (i_ < s_.size()) {
      if (s_[i_] == '(') ++depth;
      if (s_[i_] == ')' && --depth == 0) {
        std::string r(s_.substr(start, i_ - start));
        ++i_;
        return r;
      }
      ++i_;
    }
    fail("unbalanced '('");
  }
  std::size_t col() {
    skip();
    return i_ + 1;
  }
  [[noreturn]] void fail(const std::string& msg) { throw ParseError(line_, col(), msg); }
  [[noreturn]] void fail_at(std::size_t col, const std::string& msg) { throw ParseError(line_, col, msg); }

 private:
  std::string_view s_;
  std::size_t line_;
  std::size_t i_ = 0;
};

inline std::string trim_copy(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

// Parses "[scalar '*'] factor ('*' factor)*" where factors are arrows, vertex
// idempotents e_<v>, parameters, or literals. Stops before '+', '-', '=', end.
inline SymbolicTerm parse_term(LineCursor& cur, const Quiver& q, const std::vector<std::string>& params,
                               bool negative) {
  SymbolicTerm t;
  t.coef.negative = negative;
  std::optional<Path> path;
  const std::size_t term_col = cur.col();
  auto append = [&](const Path& p, std::size_t col) {
    if (!path) {
      path = p;
      return;
    }
    auto c = concat(*path, p);
    if (!c)
      cur.fail_at(col, "non-composable path: " + render_path(q, *path) + " ends at " + q.vertices[path->target] +
                           " but " + render_path(q, p) + " starts at " + q.vertices[p.source]);
    // Idempotents are absorbed into the surrounding path.
    if (p.is_trivial()) return;
    if (path->is_trivial()) {
      path = p;
      return;
    }
    path = *c;
  };
  for (;;) {
    const std::size_t col = cur.col();
    const char c = cur.peek();
    if (c == '(') {
      cur.eat('(');
      std::string lit = trim_copy(cur.balanced());
      if (lit.empty()) cur.fail_at(col, "empty parenthesized scalar");
      t.coef.factors.push_back(lit);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string lit = cur.number();
      if (cur.eat('/')) lit += "/" + cur.number();
      t.coef.factors.push_back(lit);
    } else if (ident_start(c)) {
      std::string id = cur.ident();
      if (auto a = q.arrow_index(id)) {
        std::size_t reps = 1;
        if (cur.eat('^')) reps = std::stoul(cur.number());
        if (reps == 0) cur.fail_at(col, "arrow power must be positive");
        for (std::size_t r = 0; r < reps; ++r) append(Path::arrow(q, *a), col);
      } else if (id.size() > 2 && id.rfind("e_", 0) == 0 && q.vertex_index(id.substr(2))) {
        append(Path::trivial(*q.vertex_index(id.substr(2))), col);
      } else if (std::find(params.begin(), params.end(), id) != params.end()) {
        t.coef.factors.push_back(id);
      } else if (id == "g") {
        std::string lit = "g";
        if (cur.eat('^')) lit += "^" + cur.number();
        t.coef.factors.push_back(lit);
      } else {
        cur.fail_at(col, "unknown arrow label or unbound parameter '" + id + "'");
      }
    } else {
      cur.fail_at(col, "expected arrow label or scalar");
    }
    if (!cur.eat('*')) break;
  }
  if (!path) cur.fail_at(term_col, "term has no path");
  t.path = *path;
  return t;
}

inline std::vector<SymbolicTerm> parse_side(LineCursor& cur, const Quiver& q, const std::vector<std::string>& params) {
  std::vector<SymbolicTerm> terms;
  bool neg = false;
  if (cur.eat('-'))
    neg = true;
  else
    cur.eat('+');
  // A bare 0 side.
  if (cur.peek() == '0') {
    LineCursor probe = cur;
    probe.number();
    const char n = probe.peek();
    if (n == '\0' || n == '=') {
      cur = probe;
      return terms;
    }
  }
  terms.push_back(parse_term(cur, q, params, neg));
  for (;;) {
    if (cur.eat('+'))
      terms.push_back(parse_term(cur, q, params, false));
    else if (cur.eat('-'))
      terms.push_back(parse_term(cur, q, params, true));
    else
      return terms;
  }
}

inline SymbolicRelation parse_relation_line(std::string_view text, std::size_t line, const Quiver& q,
                                            const std::vector<std::string>& params) {
  LineCursor cur(text, line);
  SymbolicRelation r;
  const std::size_t c0 = cur.col();
  r.lhs = parse_side(cur, q, params);
  if (!cur.eat('=')) cur.fail("expected '='");
  r.rhs = parse_side(cur, q, params);
  if (!cur.done()) cur.fail("unexpected trailing input");
  if (r.lhs.empty() && r.rhs.empty()) cur.fail_at(c0, "relation 0 = 0");
  const Path* first = nullptr;
  for (const auto* side : {&r.lhs, &r.rhs})
    for (const auto& t : *side) {
      if (!first) {
        first = &t.path;
        continue;
      }
      if (t.path.source != first->source || t.path.target != first->target)
        cur.fail_at(c0, "mixed relation endpoints: " + render_path(q, *first) + " and " + render_path(q, t.path) +
                            " are not parallel");
    }
  return r;
}

inline bool is_header(std::string_view line) {
  for (std::string_view h : {"algebra", "field-constraints:", "vertices:", "arrow", "relations:",
                             "resolution-relations:"}) {
    if (line.substr(0, h.size()) == h &&
        (h.back() == ':' || line.size() == h.size() || std::isspace(static_cast<unsigned char>(line[h.size()]))))
      return true;
  }
  return false;
}

}  // namespace detail

// Parses a single path such as "alpha*delta*gamma" or "e_2".
inline Path parse_path(const Quiver& q, std::string_view text) {
  detail::LineCursor cur(text, 1);
  auto t = detail::parse_term(cur, q, {}, false);
  if (!cur.done()) cur.fail("unexpected trailing input");
  if (!t.coef.factors.empty()) cur.fail_at(1, "scalar in path");
  return t.path;
}

inline Presentation parse_presentation(std::string_view text) {
  Presentation p;
  enum class Block { none, relations, resolution } block = Block::none;
  bool have_algebra = false, have_vertices = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view raw = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    std::string trimmed = detail::trim_copy(raw);
    if (trimmed.empty()) continue;
    const std::size_t indent = raw.find_first_not_of(" \t");
    const bool header = detail::is_header(trimmed) && !(block != Block::none && indent > 0);
    if (!header) {
      if (block == Block::none) throw ParseError(line_no, indent + 1, "unexpected line outside a relations block");
      // Columns in errors refer to the original line.
      auto r = detail::parse_relation_line(raw, line_no, p.quiver, p.params);
      (block == Block::relations ? p.relations : p.resolution_relations).push_back(std::move(r));
      continue;
    }
    detail::LineCursor cur(raw, line_no);
    if (cur.eat_word("algebra")) {
      if (have_algebra) cur.fail("duplicate algebra line");
      have_algebra = true;
      p.name = cur.label();
      if (cur.eat_word("params")) {
        do {
          p.params.push_back(cur.ident());
        } while (cur.eat(','));
      }
    } else if (cur.eat_word("field-constraints")) {
      cur.expect(':');
      do {
        FieldConstraint fc;
        const std::size_t col = cur.col();
        fc.param = cur.ident();
        if (std::find(p.params.begin(), p.params.end(), fc.param) == p.params.end())
          cur.fail_at(col, "constraint on undeclared parameter '" + fc.param + "'");
        if (!cur.eat_word("not-in")) cur.fail("expected 'not-in'");
        cur.expect('{');
        do {
          std::string lit;
          if (cur.eat('-')) lit = "-";
          lit += cur.number();
          if (cur.eat('/')) lit += "/" + cur.number();
          fc.excluded.push_back(lit);
        } while (cur.eat(','));
        cur.expect('}');
        p.constraints.push_back(std::move(fc));
      } while (cur.eat(';'));
    } else if (cur.eat_word("vertices")) {
      cur.expect(':');
      if (have_vertices) cur.fail("duplicate vertices line");
      have_vertices = true;
      if (!cur.done()) {
        do {
          const std::size_t col = cur.col();
          std::string v = cur.label();
          if (p.quiver.vertex_index(v)) cur.fail_at(col, "duplicate vertex '" + v + "'");
          p.quiver.vertices.push_back(v);
        } while (cur.eat(','));
      }
    } else if (cur.eat_word("arrow")) {
      if (!have_vertices) cur.fail("arrow declared before vertices");
      if (block != Block::none) cur.fail("arrow declared after relations");
      const std::size_t col = cur.col();
      Arrow a;
      a.label = cur.ident();
      if (p.quiver.arrow_index(a.label)) cur.fail_at(col, "duplicate arrow '" + a.label + "'");
      if (std::find(p.params.begin(), p.params.end(), a.label) != p.params.end())
        cur.fail_at(col, "arrow label '" + a.label + "' clashes with a parameter");
      cur.expect(':');
      const std::size_t scol = cur.col();
      auto s = p.quiver.vertex_index(cur.label());
      if (!s) cur.fail_at(scol, "unknown vertex");
      cur.expect('-');
      cur.expect('>');
      const std::size_t tcol = cur.col();
      auto t = p.quiver.vertex_index(cur.label());
      if (!t) cur.fail_at(tcol, "unknown vertex");
      a.source = *s;
      a.target = *t;
      p.quiver.arrows.push_back(std::move(a));
    } else if (cur.eat_word("relations")) {
      cur.expect(':');
      if (!have_vertices) cur.fail("relations before vertices");
      block = Block::relations;
    } else if (cur.eat_word("resolution-relations")) {
      cur.expect(':');
      if (!have_vertices) cur.fail("relations before vertices");
      block = Block::resolution;
      p.has_resolution_block = true;
    }
    if (!cur.done()) cur.fail("unexpected trailing input");
  }
  if (!have_algebra) throw ParseError(1, 1, "missing 'algebra' line");
  if (!have_vertices) throw ParseError(line_no, 1, "missing 'vertices' line");
  return p;
}

namespace detail {

inline std::string render_factor(const std::string& f) {
  const bool plain = std::all_of(f.begin(), f.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '/' || c == '^' || c == '_' || c == '\'';
  });
  return plain ? f : "(" + f + ")";
}

inline std::string render_side(const Quiver& q, const std::vector<SymbolicTerm>& side) {
  if (side.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < side.size(); ++i) {
    const auto& t = side[i];
    if (i == 0)
      s += t.coef.negative ? "-" : "";
    else
      s += t.coef.negative ? " - " : " + ";
    for (const auto& f : t.coef.factors) s += render_factor(f) + "*";
    s += render_path(q, t.path);
  }
  return s;
}

}  // namespace detail

inline std::string render_relation(const Quiver& q, const SymbolicRelation& r) {
  return detail::render_side(q, r.lhs) + " = " + detail::render_side(q, r.rhs);
}

inline std::string render(const Presentation& p) {
  std::ostringstream os;
  os << "algebra " << p.name;
  if (!p.params.empty()) {
    os << " params ";
    for (std::size_t i = 0; i < p.params.size(); ++i) os << (i ? ", " : "") << p.params[i];
  }
  os << "\n";
  for (const auto& c : p.constraints) {
    os << "field-constraints: " << c.param << " not-in {";
    for (std::size_t i = 0; i < c.excluded.size(); ++i) os << (i ? "," : "") << c.excluded[i];
    os << "}\n";
  }
  os << "vertices: ";
  for (std::size_t i = 0; i < p.quiver.vertices.size(); ++i) os << (i ? ", " : "") << p.quiver.vertices[i];
  os << "\n";
  for (const auto& a : p.quiver.arrows)
    os << "arrow " << a.label << ": " << p.quiver.vertices[a.source] << " -> " << p.quiver.vertices[a.target] << "\n";
  os << "relations:\n";
  for (const auto& r : p.relations) os << "  " << render_relation(p.quiver, r) << "\n";
  if (p.has_resolution_block) {
    os << "resolution-relations:\n";
    for (const auto& r : p.resolution_relations) os << "  " << render_relation(p.quiver, r) << "\n";
  }
  return os.str();
}

// Same algebra with arrows redeclared in the order arrow_order (new position
// k holds old arrow arrow_order[k]) and both relation lists reordered.
inline Presentation permute_presentation(const Presentation& p, const std::vector<std::size_t>& arrow_order,
                                         const std::vector<std::size_t>& relation_order,
                                         const std::vector<std::size_t>& resolution_order = {}) {
  const std::size_t na = p.quiver.num_arrows();
  auto is_perm = [](const std::vector<std::size_t>& v, std::size_t n) {
    if (v.size() != n) return false;
    std::vector<bool> seen(n, false);
    for (auto x : v) {
      if (x >= n || seen[x]) return false;
      seen[x] = true;
    }
    return true;
  };
  if (!is_perm(arrow_order, na)) throw std::invalid_argument("arrow order is not a permutation");
  if (!is_perm(relation_order, p.relations.size())) throw std::invalid_argument("relation order is not a permutation");
  if (!resolution_order.empty() && !is_perm(resolution_order, p.resolution_relations.size()))
    throw std::invalid_argument("resolution order is not a permutation");
  std::vector<std::size_t> new_index(na);
  for (std::size_t k = 0; k < na; ++k) new_index[arrow_order[k]] = k;
  Presentation out = p;
  for (std::size_t k = 0; k < na; ++k) out.quiver.arrows[k] = p.quiver.arrows[arrow_order[k]];
  auto remap = [&](SymbolicRelation r) {
    for (auto* side : {&r.lhs, &r.rhs})
      for (auto& t : *side)
        for (auto& a : t.path.arrows) a = new_index[a];
    return r;
  };
  for (std::size_t k = 0; k < p.relations.size(); ++k) out.relations[k] = remap(p.relations[relation_order[k]]);
  for (std::size_t k = 0; k < p.resolution_relations.size(); ++k)
    out.resolution_relations[k] =
        remap(p.resolution_relations[resolution_order.empty() ? k : resolution_order[k]]);
  return out;
}

// Parameter values parsed in the field.
template <class F>
std::map<std::string, typename F::value_type> bind_params(const F& f, const Presentation& p,
                                                          const ParamBindings& bindings) {
  std::map<std::string, typename F::value_type> out;
  for (const auto& name : p.params) {
    auto it = bindings.find(name);
    if (it == bindings.end()) throw BindError("unbound parameter '" + name + "'");
    try {
      out.emplace(name, parse_scalar(f, it->second));
    } catch (const FieldError& e) {
      throw BindError("parameter '" + name + "': " + e.what());
    }
  }
  for (const auto& [name, value] : bindings)
    if (std::find(p.params.begin(), p.params.end(), name) == p.params.end())
      throw BindError("unknown parameter '" + name + "'");
  return out;
}

template <class F>
typename F::value_type eval_scalar(const F& f, const ScalarExpr& e,
                                   const std::map<std::string, typename F::value_type>& params) {
  auto v = f.one();
  for (const auto& fac : e.factors) {
    auto it = params.find(fac);
    if (it != params.end())
      v = f.mul(v, it->second);
    else
      v = f.mul(v, parse_scalar(f, fac));
  }
  return e.negative ? f.neg(v) : v;
}

// lhs - rhs as a field linear combination.
template <class F>
LinComb<F> bind_relation(const F& f, const SymbolicRelation& r,
                         const std::map<std::string, typename F::value_type>& params) {
  LinComb<F> lc;
  for (const auto& t : r.lhs) add_term(f, lc, t.path, eval_scalar(f, t.coef, params));
  for (const auto& t : r.rhs) add_term(f, lc, t.path, f.neg(eval_scalar(f, t.coef, params)));
  return lc;
}

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

template <class F>
ValidationReport validate(const Presentation& p, const F& f, const ParamBindings& bindings) {
  ValidationReport rep;
  std::map<std::string, typename F::value_type> params;
  for (const auto& name : p.params) {
    auto it = bindings.find(name);
    if (it == bindings.end()) {
      rep.violations.push_back("unbound parameter '" + name + "'");
      continue;
    }
    try {
      params.emplace(name, parse_scalar(f, it->second));
    } catch (const FieldError& e) {
      rep.violations.push_back("parameter '" + name + "': " + e.what());
    }
  }
  for (const auto& [name, value] : bindings)
    if (std::find(p.params.begin(), p.params.end(), name) == p.params.end())
      rep.violations.push_back("unknown parameter '" + name + "'");
  for (const auto& c : p.constraints) {
    auto it = params.find(c.param);
    if (it == params.end()) continue;
    for (const auto& lit : c.excluded) {
      bool hit = false;
      try {
        hit = f.equal(it->second, parse_scalar(f, lit));
      } catch (const FieldError&) {
      }
      if (hit)
        rep.violations.push_back("parameter constraint violated: " + c.param + " = " + f.to_string(it->second) +
                                 " but " + c.param + " must not be " + lit);
    }
  }
  auto check = [&](const std::vector<SymbolicRelation>& rels, const char* what) {
    for (std::size_t i = 0; i < rels.size(); ++i) {
      const auto& r = rels[i];
      const std::string tag = std::string(what) + " " + std::to_string(i + 1) + " (" +
                              render_relation(p.quiver, r) + ")";
      std::optional<std::pair<std::size_t, std::size_t>> ends;
      for (const auto* side : {&r.lhs, &r.rhs})
        for (const auto& t : *side) {
          auto e = std::make_pair(t.path.source, t.path.target);
          if (!ends) ends = e;
          if (*ends != e) {
            rep.violations.push_back(tag + ": mixed endpoints");
            break;
          }
        }
      bool bad_scalar = false;
      LinComb<F> lc;
      try {
        lc = bind_relation(f, r, params);
      } catch (const FieldError& e) {
        rep.violations.push_back(tag + ": " + e.what());
        bad_scalar = true;
      }
      if (bad_scalar) continue;
      for (const auto& [path, c] : lc)
        if (path.length() < 2)
          rep.violations.push_back(tag + ": admissibility violated, monomial " + render_path(p.quiver, path) +
                                   " has length " + std::to_string(path.length()));
    }
  };
  check(p.relations, "relation");
  if (p.has_resolution_block) check(p.resolution_relations, "resolution relation");
  return rep;
}

}  // namespace hochcalc
