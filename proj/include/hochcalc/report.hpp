#pragma once

// Source loading, run reports with JSON serialization, the expectations table
// and the verify suite. Shared by the command-line tool and the acceptance
// driver.

#include <chrono>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hochcalc/algebra.hpp"
#include "hochcalc/bar_complex.hpp"
#include "hochcalc/catalog.hpp"
#include "hochcalc/hochschild.hpp"

namespace hochcalc {

using json = nlohmann::json;

// Bad command-line input that is not a .qa syntax error (unreadable file,
// unknown name, malformed expectation table).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Source {
  std::string label;   // catalog name or file path
  std::string origin;  // "catalog" or "file"
  Presentation presentation;
  ParamBindings params;
  const CatalogEntry* entry = nullptr;
  const CharExpectation* expectation = nullptr;
};

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// The field an entry is reported over when no --field is given.
inline FieldSpec default_field_for(const std::string& name_or_path) {
  if (const auto* e = catalog_find(name_or_path); e && !e->fields.empty())
    return parse_field_spec(e->fields.front().field);
  return FieldSpec::rationals();
}

// A catalog name wins over a file of the same name. With no explicit
// parameters, a catalog entry over its first designated field keeps that
// field's designated bindings.
inline Source load_source(const std::string& name_or_path, const FieldSpec& spec,
                          const ParamBindings& overrides = {}) {
  Source s;
  s.label = name_or_path;
  if (const auto* e = catalog_find(name_or_path)) {
    ParamBindings ov = overrides;
    if (ov.empty())
      for (const auto& df : e->fields)
        if (parse_field_spec(df.field) == spec) {
          ov = df.params;
          break;
        }
    auto slice = catalog_get(e->name, spec, ov);
    s.origin = "catalog";
    s.presentation = std::move(slice.presentation);
    s.params = std::move(slice.params);
    s.entry = slice.entry;
    s.expectation = slice.expectation;
    return s;
  }
  std::ifstream probe(name_or_path);
  if (!probe) throw InputError("'" + name_or_path + "' is neither a catalog entry nor a readable file");
  s.origin = "file";
  s.presentation = parse_presentation(read_text_file(name_or_path));
  s.params = overrides;
  return s;
}

template <class Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn) {
  return std::visit(std::forward<Fn>(fn), make_any_field(spec));
}

// ---------------------------------------------------------------- run report

struct OracleReport {
  std::size_t h0 = 0, h1 = 0;
  std::optional<std::size_t> h2;
  std::vector<std::size_t> cochain_dims;
  std::string note;
  bool agrees = false;
};

struct StructureReport {
  std::size_t basis_size = 0;
  std::optional<std::vector<std::size_t>> nakayama;  // vertex indices
  std::string nakayama_evidence;
  bool weakly_symmetric = false;
  std::string symmetry;
  std::string symmetry_note;
  std::size_t loewy_length = 0;
  std::size_t rewrite_rules = 0;
  std::size_t overlaps_checked = 0;
  std::size_t associativity_triples = 0;
};

struct RunReport {
  std::string algebra;
  std::string source;
  std::string field;
  std::uint64_t characteristic = 0;
  ParamBindings params;
  std::vector<std::string> vertices;
  std::size_t dim = 0;
  std::vector<std::vector<std::size_t>> cartan;
  std::size_t center_dim = 0;
  std::optional<HHResult> hh;
  std::optional<OracleReport> oracle;
  std::optional<StructureReport> structure;
  std::map<std::string, double> timing_ms;

  bool oracle_disagrees() const { return oracle && !oracle->agrees; }
};

struct RunOptions {
  bool hh = true;
  bool oracle = false;
  bool structure = false;
  BuildOptions build;
};

namespace detail {

inline double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace detail

template <class F>
RunReport run_over(const Source& src, const F& f, const FieldSpec& spec, const RunOptions& opt) {
  using clock = std::chrono::steady_clock;
  const auto t_start = clock::now();
  RunReport r;
  r.algebra = src.presentation.name.empty() ? src.label : src.presentation.name;
  r.source = src.origin == "catalog" ? "catalog:" + src.label : "file:" + src.label;
  r.field = to_string(spec);
  r.characteristic = spec.characteristic();
  r.params = src.params;
  r.vertices = src.presentation.quiver.vertices;

  auto t = clock::now();
  const auto A = build(src.presentation, f, src.params, opt.build);
  r.timing_ms["build"] = detail::ms_since(t);
  r.dim = A.dim();
  r.cartan = A.cartan_matrix();

  t = clock::now();
  r.center_dim = center(A).dim;
  r.timing_ms["center"] = detail::ms_since(t);

  if (opt.structure) {
    t = clock::now();
    StructureReport s;
    s.basis_size = A.basis().size();
    auto nak = nakayama_permutation(A);
    s.nakayama = nak.permutation;
    s.nakayama_evidence = nak.evidence;
    s.weakly_symmetric = nak.is_identity();
    auto sym = symmetric_certify(A);
    s.symmetry = to_string(sym.verdict);
    s.symmetry_note = sym.note;
    s.loewy_length = nilpotency_index(A);
    s.rewrite_rules = A.certificate().rules;
    s.overlaps_checked = A.certificate().overlaps_checked;
    s.associativity_triples = A.certificate().associativity_triples;
    r.structure = std::move(s);
    r.timing_ms["structure"] = detail::ms_since(t);
  }
  if (opt.hh || opt.oracle) {
    t = clock::now();
    r.hh = hh_dims(A);
    r.timing_ms["hh"] = detail::ms_since(t);
  }
  if (opt.oracle) {
    t = clock::now();
    const auto b = hh_via_bar(A);
    OracleReport o;
    o.h0 = b.h0;
    o.h1 = b.h1;
    o.h2 = b.h2;
    o.cochain_dims = b.cochain_dims;
    o.note = b.note;
    o.agrees = o.h0 == r.hh->h0 && o.h1 == r.hh->h1 && (!o.h2 || *o.h2 == r.hh->h2);
    r.oracle = std::move(o);
    r.timing_ms["oracle"] = detail::ms_since(t);
  }
  r.timing_ms["total"] = detail::ms_since(t_start);
  return r;
}

inline RunReport run(const Source& src, const FieldSpec& spec, const RunOptions& opt = {}) {
  return with_field(spec, [&](const auto& f) { return run_over(src, f, spec, opt); });
}

inline json intermediates_json(const HHIntermediates& in) {
  return json{{"dim_algebra", in.dim_algebra}, {"dim_p0", in.dim_p0},       {"dim_p1", in.dim_p1},
              {"dim_p2", in.dim_p2},           {"hom_p0", in.hom_p0},       {"hom_p1", in.hom_p1},
              {"hom_p2", in.hom_p2},           {"rank_d1", in.rank_d1},     {"rank_d2", in.rank_d2},
              {"ker_d1", in.ker_d1},           {"ker_d2", in.ker_d2},       {"rank_delta0", in.rank_delta0},
              {"ker_delta0", in.ker_delta0},   {"rank_delta1", in.rank_delta1}, {"ker_delta1", in.ker_delta1},
              {"hom_omega2", in.hom_omega2}};
}

inline json to_json(const RunReport& r) {
  json j;
  j["algebra"] = r.algebra;
  j["source"] = r.source;
  j["field"] = r.field;
  j["params"] = json(r.params);
  j["dim"] = r.dim;
  j["cartan"] = r.cartan;
  j["center_dim"] = r.center_dim;
  if (r.hh) {
    j["hh"] = json{{"h0", r.hh->h0}, {"h1", r.hh->h1}, {"h2", r.hh->h2}};
    j["intermediates"] = intermediates_json(r.hh->inter);
  } else {
    j["hh"] = nullptr;
    j["intermediates"] = nullptr;
  }
  if (r.oracle) {
    json o{{"h0", r.oracle->h0}, {"h1", r.oracle->h1}, {"agrees", r.oracle->agrees},
           {"cochain_dims", r.oracle->cochain_dims}, {"note", r.oracle->note}};
    o["h2"] = r.oracle->h2 ? json(*r.oracle->h2) : json(nullptr);
    j["oracle"] = o;
  } else {
    j["oracle"] = nullptr;
  }
  if (r.structure) {
    const auto& s = *r.structure;
    json st{{"basis_size", s.basis_size},
            {"weakly_symmetric", s.weakly_symmetric},
            {"symmetry", s.symmetry},
            {"loewy_length", s.loewy_length},
            {"rewrite_rules", s.rewrite_rules},
            {"overlaps_checked", s.overlaps_checked},
            {"associativity_triples", s.associativity_triples}};
    if (s.nakayama) {
      std::vector<std::string> labels;
      for (auto v : *s.nakayama) labels.push_back(r.vertices[v]);
      st["nakayama"] = labels;
    } else {
      st["nakayama"] = nullptr;
      st["nakayama_evidence"] = s.nakayama_evidence;
    }
    if (!s.symmetry_note.empty()) st["symmetry_note"] = s.symmetry_note;
    j["structure"] = st;
  }
  j["timing_ms"] = json(r.timing_ms);
  return j;
}

inline std::string render_matrix(const std::vector<std::vector<std::size_t>>& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) s += ",";
    s += "[";
    for (std::size_t j = 0; j < m[i].size(); ++j) s += (j ? "," : "") + std::to_string(m[i][j]);
    s += "]";
  }
  return s + "]";
}

inline std::string render_params(const ParamBindings& p) {
  std::string s;
  for (const auto& [k, v] : p) s += (s.empty() ? "" : ", ") + k + "=" + v;
  return s;
}

// ------------------------------------------------------------- resolution

inline json to_json(const ResolutionRecord& rec, const std::vector<std::string>& vertices) {
  json terms = json::array();
  for (const auto& d : rec.degrees) {
    json top = json::object();
    for (const auto& [vp, m] : d.top) top["(" + vertices[vp.first] + "," + vertices[vp.second] + ")"] = m;
    terms.push_back(json{{"n", d.n}, {"dim_p", d.dim_p}, {"dim_omega", d.dim_omega}, {"top", top}});
  }
  return json{{"terms", terms},
              {"terminated", rec.terminated},
              {"truncated", rec.truncated},
              {"max_feasible", rec.max_feasible},
              {"note", rec.note}};
}

// ------------------------------------------------------------- expectations

inline CharClass char_class_from_string(const std::string& s) {
  if (s == "char2") return CharClass::two;
  if (s == "char3") return CharClass::three;
  if (s == "other") return CharClass::other;
  throw InputError("unknown characteristic class '" + s + "'");
}

namespace detail {

template <class T>
json opt_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <class T>
std::optional<T> opt_from(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

}  // namespace detail

inline json expectations_json(const CatalogEntry& e) {
  const auto& x = e.expected;
  json j;
  j["family"] = e.family;
  j["partner"] = e.partner;
  json fields = json::array();
  for (const auto& df : e.fields) fields.push_back(json{{"field", df.field}, {"params", json(df.params)}});
  j["fields"] = fields;
  j["dim"] = detail::opt_json(x.dim);
  j["cartan"] = detail::opt_json(x.cartan);
  j["omega3_dim"] = detail::opt_json(x.omega3_dim);
  json by = json::object();
  for (const auto& [cc, ce] : x.by_char) {
    json c;
    c["hh"] = json{{"h0", detail::opt_json(ce.hh.h0)}, {"h1", detail::opt_json(ce.hh.h1)},
                   {"h2", detail::opt_json(ce.hh.h2)}};
    if (ce.intermediates)
      c["intermediates"] = json{{"hom_p0", ce.intermediates->hom_p0},
                                {"hom_p1", ce.intermediates->hom_p1},
                                {"ker_delta1", ce.intermediates->ker_delta1},
                                {"hom_omega2", ce.intermediates->hom_omega2}};
    else
      c["intermediates"] = nullptr;
    c["center_dim"] = detail::opt_json(ce.center_dim);
    c["nakayama_identity"] = detail::opt_json(ce.nakayama_identity);
    c["symmetric"] = detail::opt_json(ce.symmetric);
    by[to_string(cc)] = c;
  }
  j["by_char"] = by;
  json gens = json::array();
  for (const auto& g : x.generators) {
    json els = json::array();
    for (const auto& [n, t] : g.elements) els.push_back(json{{"name", n}, {"element", t}});
    gens.push_back(json{{"family", g.family},
                        {"only", g.only ? json(to_string(*g.only)) : json(nullptr)},
                        {"elements", els}});
  }
  j["generators"] = gens;
  return j;
}

inline json expectations_table() {
  json j = json::object();
  for (const auto& e : catalog()) j[e.name] = expectations_json(e);
  return j;
}

struct ExpectationOverride {
  std::vector<DesignatedField> fields;
  ExpectedRecord expected;
};

inline ExpectationOverride expectation_from_json(const json& j) {
  ExpectationOverride o;
  try {
    for (const auto& f : j.at("fields"))
      o.fields.push_back({f.at("field").get<std::string>(), f.value("params", ParamBindings{})});
    auto& x = o.expected;
    x.dim = detail::opt_from<std::size_t>(j, "dim");
    x.cartan = detail::opt_from<std::vector<std::vector<std::size_t>>>(j, "cartan");
    x.omega3_dim = detail::opt_from<std::size_t>(j, "omega3_dim");
    for (const auto& [k, c] : j.at("by_char").items()) {
      CharExpectation ce;
      const auto& h = c.at("hh");
      ce.hh = {detail::opt_from<std::size_t>(h, "h0"), detail::opt_from<std::size_t>(h, "h1"),
               detail::opt_from<std::size_t>(h, "h2")};
      if (c.contains("intermediates") && !c.at("intermediates").is_null()) {
        const auto& i = c.at("intermediates");
        ce.intermediates = ExpectedIntermediates{i.at("hom_p0").get<std::size_t>(), i.at("hom_p1").get<std::size_t>(),
                                                 i.at("ker_delta1").get<std::size_t>(),
                                                 i.at("hom_omega2").get<std::size_t>()};
      }
      ce.center_dim = detail::opt_from<std::size_t>(c, "center_dim");
      ce.nakayama_identity = detail::opt_from<bool>(c, "nakayama_identity");
      ce.symmetric = detail::opt_from<bool>(c, "symmetric");
      x.by_char[char_class_from_string(k)] = ce;
    }
    if (j.contains("generators"))
      for (const auto& g : j.at("generators")) {
        GeneratorSet gs;
        gs.family = g.at("family").get<std::string>();
        if (g.contains("only") && !g.at("only").is_null())
          gs.only = char_class_from_string(g.at("only").get<std::string>());
        for (const auto& el : g.at("elements"))
          gs.elements.emplace_back(el.at("name").get<std::string>(), el.at("element").get<std::string>());
        x.generators.push_back(std::move(gs));
      }
  } catch (const json::exception& ex) {
    throw InputError(std::string("malformed expectation record: ") + ex.what());
  }
  return o;
}

inline std::map<std::string, ExpectationOverride> load_expectations(const std::string& path) {
  json j;
  try {
    j = json::parse(read_text_file(path));
  } catch (const json::parse_error& ex) {
    throw InputError(path + ": " + ex.what());
  }
  if (!j.is_object()) throw InputError(path + ": expected an object keyed by entry name");
  std::map<std::string, ExpectationOverride> out;
  for (const auto& [name, rec] : j.items()) {
    if (!catalog_find(name)) throw InputError(path + ": unknown catalog entry '" + name + "'");
    out.emplace(name, expectation_from_json(rec));
  }
  return out;
}

// ------------------------------------------------------------------ verify

struct Check {
  std::string what;
  std::string expected;
  std::string got;
  bool pass = false;
  bool oracle = false;  // an oracle cross-check rather than a recorded expectation
};

struct VerifyRow {
  std::string entry;
  std::string field;
  ParamBindings params;
  std::vector<Check> checks;
  std::string error;  // build or certification failure
  double ms = 0;

  bool expectations_pass() const {
    if (!error.empty()) return false;
    for (const auto& c : checks)
      if (!c.oracle && !c.pass) return false;
    return true;
  }
  bool oracle_pass() const {
    for (const auto& c : checks)
      if (c.oracle && !c.pass) return false;
    return true;
  }
};

namespace detail {

inline std::string show(const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : "-"; }

inline std::string show_triple(std::size_t a, std::size_t b, std::size_t c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

template <class F>
void verify_algebra(const Algebra<F>& A, const CatalogEntry& e, const ExpectedRecord& x, const FieldSpec& spec,
                    bool with_oracle, VerifyRow& row) {
  auto add = [&](std::string what, std::string exp, std::string got, bool pass, bool oracle = false) {
    row.checks.push_back({std::move(what), std::move(exp), std::move(got), pass, oracle});
  };
  const auto cartan = A.cartan_matrix();
  std::size_t sum = 0;
  for (const auto& r : cartan)
    for (auto v : r) sum += v;
  add("cartan_sum", std::to_string(A.dim()), std::to_string(sum), sum == A.dim());
  if (x.dim) add("dim", std::to_string(*x.dim), std::to_string(A.dim()), *x.dim == A.dim());
  if (x.cartan) add("cartan", render_matrix(*x.cartan), render_matrix(cartan), *x.cartan == cartan);

  const auto h = hh_dims(A);
  const auto cls = char_class(spec.characteristic());
  auto it = x.by_char.find(cls);
  const CharExpectation* ce = it == x.by_char.end() ? nullptr : &it->second;
  if (ce) {
    const auto& t = ce->hh;
    if (t.h0 || t.h1 || t.h2) {
      const bool ok = (!t.h0 || *t.h0 == h.h0) && (!t.h1 || *t.h1 == h.h1) && (!t.h2 || *t.h2 == h.h2);
      add("hh", "(" + show(t.h0) + "," + show(t.h1) + "," + show(t.h2) + ")", show_triple(h.h0, h.h1, h.h2), ok);
    }
    if (ce->intermediates) {
      const auto& xi = *ce->intermediates;
      const auto& in = h.inter;
      add("intermediates",
          "(" + std::to_string(xi.hom_p0) + "," + std::to_string(xi.hom_p1) + "," + std::to_string(xi.ker_delta1) +
              "," + std::to_string(xi.hom_omega2) + ")",
          "(" + std::to_string(in.hom_p0) + "," + std::to_string(in.hom_p1) + "," + std::to_string(in.ker_delta1) +
              "," + std::to_string(in.hom_omega2) + ")",
          xi.hom_p0 == in.hom_p0 && xi.hom_p1 == in.hom_p1 && xi.ker_delta1 == in.ker_delta1 &&
              xi.hom_omega2 == in.hom_omega2);
    }
    if (ce->center_dim) {
      const auto c = center(A).dim;
      add("center_dim", std::to_string(*ce->center_dim), std::to_string(c), c == *ce->center_dim);
    }
    if (ce->nakayama_identity) {
      const bool id = nakayama_permutation(A).is_identity();
      add("nakayama_identity", *ce->nakayama_identity ? "yes" : "no", id ? "yes" : "no",
          id == *ce->nakayama_identity);
    }
    if (ce->symmetric) {
      const auto v = symmetric_certify(A).verdict;
      const bool cert = v == SymmetryVerdict::certified;
      add("symmetric", *ce->symmetric ? "Certified" : "not Certified", to_string(v), cert == *ce->symmetric);
    }
  }
  if (x.omega3_dim)
    add("omega3_dim", std::to_string(*x.omega3_dim), std::to_string(h.inter.ker_d2),
        *x.omega3_dim == h.inter.ker_d2);
  for (const auto& gs : x.generators) {
    if (gs.only && *gs.only != cls) continue;
    const auto P2 = make_P2(A);
    std::vector<Vec<F>> gens;
    for (const auto& [n, t] : gs.elements) gens.push_back(parse_bimodule_element(A, P2, t));
    const auto rep = check_omega3_generators(A, gens);
    std::string bad;
    for (std::size_t i = 0; i < rep.in_kernel.size(); ++i)
      if (!rep.in_kernel[i]) bad += (bad.empty() ? "" : ",") + gs.elements[i].first;
    add("generators " + gs.family,
        "in ker d2, closure " + std::to_string(rep.kernel_dim),
        (bad.empty() ? std::string("in ker d2") : "outside ker d2: " + bad) + ", closure " +
            std::to_string(rep.closure_dim),
        rep.ok());
  }
  (void)e;
  if (with_oracle) {
    const auto b = hh_via_bar(A);
    const bool ok = b.h0 == h.h0 && b.h1 == h.h1 && (!b.h2 || *b.h2 == h.h2);
    add("oracle", show_triple(h.h0, h.h1, h.h2),
        "(" + std::to_string(b.h0) + "," + std::to_string(b.h1) + "," + show(b.h2) + ")", ok, true);
  }
}

}  // namespace detail

inline VerifyRow verify_entry_field(const CatalogEntry& e, const ExpectedRecord& x, const DesignatedField& df,
                                    bool with_oracle) {
  const auto t0 = std::chrono::steady_clock::now();
  VerifyRow row;
  row.entry = e.name;
  row.field = df.field;
  try {
    const auto spec = parse_field_spec(df.field);
    auto slice = catalog_get(e.name, spec, df.params);
    row.params = slice.params;
    with_field(spec, [&](const auto& f) {
      const auto A = build(slice.presentation, f, slice.params);
      detail::verify_algebra(A, e, x, spec, with_oracle, row);
    });
  } catch (const std::exception& ex) {
    row.error = ex.what();
  }
  row.ms = detail::ms_since(t0);
  return row;
}

inline std::vector<VerifyRow> verify_entry(const CatalogEntry& e, bool with_oracle,
                                           const ExpectationOverride* override_ = nullptr) {
  const auto& fields = override_ ? override_->fields : e.fields;
  const auto& x = override_ ? override_->expected : e.expected;
  std::vector<VerifyRow> rows;
  for (const auto& df : fields) rows.push_back(verify_entry_field(e, x, df, with_oracle));
  return rows;
}

inline json to_json(const VerifyRow& r) {
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back(json{{"what", c.what}, {"expected", c.expected}, {"got", c.got}, {"pass", c.pass},
                          {"oracle", c.oracle}});
  json j{{"entry", r.entry},   {"field", r.field},
         {"params", json(r.params)}, {"checks", checks},
         {"pass", r.expectations_pass() && r.oracle_pass()}, {"ms", r.ms}};
  j["error"] = r.error.empty() ? json(nullptr) : json(r.error);
  return j;
}

}  // namespace hochcalc
