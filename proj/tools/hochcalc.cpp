// hochcalc: build bound quiver algebras and compute HH^0..HH^2.
//
// Exit codes: 0 ok, 1 expectation mismatch, 2 parse/usage error,
// 3 build or certification failure, 4 oracle disagreement.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "hochcalc/report.hpp"

using namespace hochcalc;

namespace {

enum Exit { kOk = 0, kMismatch = 1, kParse = 2, kBuild = 3, kOracle = 4 };

struct Common {
  std::string source;
  std::string catalog;
  std::string field;
  std::vector<std::string> params;
  bool json = false;
};

void add_common(CLI::App* sub, Common& c, bool with_source = true) {
  if (with_source) {
    sub->add_option("source", c.source, "catalog entry name or .qa file");
    sub->add_option("--catalog", c.catalog, "catalog entry name (or .qa path)");
  }
  sub->add_option("--field", c.field, "Q | GF(p) | GF(p^k)[:modulus]");
  sub->add_option("--param", c.params, "parameter binding name=value (repeatable)");
  sub->add_flag("--json", c.json, "emit JSON only");
}

std::string resolve_source(const Common& c) {
  if (!c.catalog.empty() && !c.source.empty() && c.catalog != c.source)
    throw InputError("give the source either positionally or with --catalog, not both");
  const auto s = c.catalog.empty() ? c.source : c.catalog;
  if (s.empty()) throw InputError("no source given (catalog name or .qa file)");
  return s;
}

ParamBindings parse_params(const std::vector<std::string>& raw) {
  ParamBindings b;
  for (const auto& r : raw) {
    const auto eq = r.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == r.size())
      throw InputError("--param expects name=value, got '" + r + "'");
    b[r.substr(0, eq)] = r.substr(eq + 1);
  }
  return b;
}

FieldSpec field_for(const Common& c, const std::string& source) {
  return c.field.empty() ? default_field_for(source) : parse_field_spec(c.field);
}

// Parameters declared by a source, read without binding anything.
std::vector<std::string> declared_params(const std::string& source) {
  if (const auto* e = catalog_find(source)) return parse_presentation(e->source).params;
  return parse_presentation(read_text_file(source)).params;
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string vertex_map(const RunReport& r) {
  const auto& s = *r.structure;
  if (!s.nakayama) return "none (" + s.nakayama_evidence + ")";
  std::string out;
  for (std::size_t i = 0; i < s.nakayama->size(); ++i)
    out += (i ? ", " : "") + r.vertices[i] + "->" + r.vertices[(*s.nakayama)[i]];
  return out + (s.weakly_symmetric ? " (identity: weakly symmetric)" : " (not the identity)");
}

void print_header(const RunReport& r) {
  std::cout << "algebra      " << r.algebra << "  [" << r.source << "]\n";
  std::cout << "field        " << r.field << "\n";
  if (!r.params.empty()) std::cout << "params       " << render_params(r.params) << "\n";
}

std::string triple(std::size_t a, std::size_t b, std::size_t c) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + ")";
}

// ------------------------------------------------------------------ info

int cmd_info(const Common& c) {
  const auto src_name = resolve_source(c);
  const auto spec = field_for(c, src_name);
  const auto src = load_source(src_name, spec, parse_params(c.params));
  RunOptions opt;
  opt.hh = false;
  opt.structure = true;
  const auto r = run(src, spec, opt);
  if (c.json) {
    print_json(to_json(r));
    return kOk;
  }
  const auto& s = *r.structure;
  print_header(r);
  std::cout << "dim          " << r.dim << "  (basis words: " << s.basis_size << ")\n";
  std::cout << "cartan       " << render_matrix(r.cartan) << "\n";
  std::cout << "center dim   " << r.center_dim << "\n";
  std::cout << "loewy length " << s.loewy_length << "\n";
  std::cout << "nakayama     " << vertex_map(r) << "\n";
  std::cout << "symmetry     " << s.symmetry << (s.symmetry_note.empty() ? "" : "  (" + s.symmetry_note + ")")
            << "\n";
  std::cout << "rewriting    " << s.rewrite_rules << " rules, " << s.overlaps_checked << " overlaps resolved, "
            << s.associativity_triples << " associativity triples checked\n";
  return kOk;
}

// -------------------------------------------------------------------- hh

int cmd_hh(const Common& c, bool oracle) {
  const auto src_name = resolve_source(c);
  const auto spec = field_for(c, src_name);
  const auto src = load_source(src_name, spec, parse_params(c.params));
  RunOptions opt;
  opt.oracle = oracle;
  const auto r = run(src, spec, opt);
  const int code = r.oracle_disagrees() ? kOracle : kOk;
  if (c.json) {
    print_json(to_json(r));
    return code;
  }
  const auto& h = *r.hh;
  const auto& in = h.inter;
  print_header(r);
  std::cout << "dim          " << r.dim << "\n";
  std::cout << "HH^0, HH^1, HH^2 = " << triple(h.h0, h.h1, h.h2) << "\n";
  std::cout << "  Hom(P0,A) = " << in.hom_p0 << ", Hom(P1,A) = " << in.hom_p1 << ", Hom(P2,A) = " << in.hom_p2
            << "\n";
  std::cout << "  ker delta0 = " << in.ker_delta0 << ", ker delta1 = " << in.ker_delta1
            << ", Hom(Omega2,A) = " << in.hom_omega2 << "\n";
  std::cout << "  dim P0/P1/P2 = " << in.dim_p0 << "/" << in.dim_p1 << "/" << in.dim_p2
            << ", ker d1 = " << in.ker_d1 << ", ker d2 = " << in.ker_d2 << "\n";
  if (src.expectation) {
    const auto& t = src.expectation->hh;
    if (t.h0 || t.h1 || t.h2) {
      auto show = [](const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : std::string("-"); };
      const bool ok = (!t.h0 || *t.h0 == h.h0) && (!t.h1 || *t.h1 == h.h1) && (!t.h2 || *t.h2 == h.h2);
      std::cout << "catalog      expects (" << show(t.h0) << ", " << show(t.h1) << ", " << show(t.h2) << "): "
                << (ok ? "match" : "MISMATCH") << "\n";
    }
  }
  if (r.oracle) {
    const auto& o = *r.oracle;
    std::cout << "oracle       (" << o.h0 << ", " << o.h1 << ", " << (o.h2 ? std::to_string(*o.h2) : "-") << ") "
              << (o.agrees ? "agrees" : "DISAGREES") << (o.note.empty() ? "" : "  [" + o.note + "]") << "\n";
  }
  std::cout << "time         " << std::fixed << std::setprecision(1) << r.timing_ms.at("total") << " ms\n";
  return code;
}

// --------------------------------------------------------------- compare

int cmd_compare(const Common& c, const std::string& a, const std::string& b, bool oracle) {
  const auto spec = field_for(c, a);
  const auto overrides = parse_params(c.params);
  struct Side {
    std::string name;
    std::optional<RunReport> report;
    std::string error;
    int code = kOk;
  };
  std::vector<Side> sides{{a, {}, {}, kOk}, {b, {}, {}, kOk}};
  for (auto& s : sides) {
    try {
      ParamBindings mine;
      const auto declared = declared_params(s.name);
      for (const auto& [k, v] : overrides)
        if (std::find(declared.begin(), declared.end(), k) != declared.end()) mine[k] = v;
      RunOptions opt;
      opt.oracle = oracle;
      s.report = run(load_source(s.name, spec, mine), spec, opt);
    } catch (const ParseError& e) {
      s.error = e.what();
      s.code = kParse;
    } catch (const FieldError& e) {
      s.error = e.what();
      s.code = kParse;
    } catch (const InputError& e) {
      s.error = e.what();
      s.code = kParse;
    } catch (const CatalogError& e) {
      s.error = e.what();
      s.code = kParse;
    } catch (const std::exception& e) {
      s.error = e.what();
      s.code = kBuild;
    }
  }
  int code = std::max(sides[0].code, sides[1].code);
  if (code == kOk)
    for (const auto& s : sides)
      if (s.report->oracle_disagrees()) code = kOracle;

  auto rel = [](std::size_t x, std::size_t y) { return x == y ? std::string("=") : x < y ? "<" : ">"; };
  json cmp = nullptr;
  if (sides[0].report && sides[1].report) {
    const auto &h = *sides[0].report->hh, &k = *sides[1].report->hh;
    cmp = json{{"hh0", rel(h.h0, k.h0)}, {"hh1", rel(h.h1, k.h1)}, {"hh2", rel(h.h2, k.h2)}};
  }
  if (c.json) {
    json j;
    j["field"] = to_string(spec);
    for (std::size_t i = 0; i < 2; ++i) {
      const char* key = i == 0 ? "a" : "b";
      j[key] = sides[i].report ? to_json(*sides[i].report) : json{{"source", sides[i].name}, {"error", sides[i].error}};
    }
    j["comparison"] = cmp;
    print_json(j);
    return code;
  }
  std::cout << "field " << to_string(spec) << "\n";
  for (const auto& s : sides)
    if (!s.error.empty()) std::cout << s.name << ": error: " << s.error << "\n";
  if (!sides[0].report || !sides[1].report) return code;
  const auto &h = *sides[0].report->hh, &k = *sides[1].report->hh;
  const std::size_t w = std::max<std::size_t>({a.size(), b.size(), 6}) + 2;
  std::cout << std::left << std::setw(8) << "" << std::setw(w) << a << std::setw(w) << b << "\n";
  const std::size_t hv[3] = {h.h0, h.h1, h.h2}, kv[3] = {k.h0, k.h1, k.h2};
  for (int n = 0; n < 3; ++n)
    std::cout << std::setw(8) << ("HH^" + std::to_string(n)) << std::setw(w) << hv[n] << std::setw(w) << kv[n]
              << rel(hv[n], kv[n]) << "\n";
  if (h.h0 == k.h0 && h.h1 < k.h1 && h.h2 < k.h2)
    std::cout << "HH^0 equal; HH^1 and HH^2 strictly smaller for " << a << "\n";
  return code;
}

// ---------------------------------------------------------------- verify

int cmd_verify(const std::vector<std::string>& names, bool all, bool oracle, const std::string& expectations_path,
               bool as_json) {
  std::map<std::string, ExpectationOverride> overrides;
  if (!expectations_path.empty()) overrides = load_expectations(expectations_path);
  std::vector<const CatalogEntry*> entries;
  if (all) {
    if (!names.empty()) throw InputError("verify takes either --all or entry names");
    for (const auto& e : catalog()) entries.push_back(&e);
  } else {
    if (names.empty()) throw InputError("verify needs --all or at least one entry name");
    for (const auto& n : names) entries.push_back(&catalog_entry(n));
  }
  std::vector<VerifyRow> rows;
  for (const auto* e : entries) {
    auto it = overrides.find(e->name);
    auto part = verify_entry(*e, oracle, it == overrides.end() ? nullptr : &it->second);
    rows.insert(rows.end(), part.begin(), part.end());
  }
  bool mismatch = false, oracle_bad = false;
  std::set<std::string> failed_entries;
  for (const auto& r : rows) {
    if (!r.expectations_pass()) {
      mismatch = true;
      failed_entries.insert(r.entry);
    }
    if (!r.oracle_pass()) oracle_bad = true;
  }
  const int code = mismatch ? kMismatch : oracle_bad ? kOracle : kOk;
  if (as_json) {
    json j = json::array();
    for (const auto& r : rows) j.push_back(to_json(r));
    print_json(json{{"rows", j},
                    {"failed_entries", failed_entries},
                    {"pass", code == kOk},
                    {"exit_code", code}});
    return code;
  }
  std::size_t npass = 0;
  for (const auto& r : rows) {
    const bool ok = r.expectations_pass() && r.oracle_pass();
    npass += ok;
    std::cout << (ok ? "PASS " : "FAIL ") << std::left << std::setw(10) << r.entry << " " << std::setw(8)
              << r.field << " " << std::setw(12) << render_params(r.params) << " " << std::right << std::setw(2)
              << r.checks.size() << " checks " << std::fixed << std::setprecision(0) << std::setw(6) << r.ms
              << " ms\n";
    if (!r.error.empty()) std::cout << "     error: " << r.error << "\n";
    for (const auto& ch : r.checks)
      if (!ch.pass)
        std::cout << "     " << ch.what << ": expected " << ch.expected << ", got " << ch.got << "\n";
  }
  std::cout << npass << "/" << rows.size() << " entry-field rows pass";
  if (!failed_entries.empty()) {
    std::cout << "; mismatches in:";
    for (const auto& n : failed_entries) std::cout << " " << n;
  }
  std::cout << "\n";
  return code;
}

// ------------------------------------------------------------ resolution

int cmd_resolution(const Common& c, std::size_t terms) {
  if (terms > kMaxResolutionTerms)
    throw InputError("--terms is capped at " + std::to_string(kMaxResolutionTerms));
  const auto src_name = resolve_source(c);
  const auto spec = field_for(c, src_name);
  const auto src = load_source(src_name, spec, parse_params(c.params));
  const auto t0 = std::chrono::steady_clock::now();
  return with_field(spec, [&](const auto& f) {
    const auto A = build(src.presentation, f, src.params);
    const auto rec = extend_resolution(A, terms);
    const auto& verts = src.presentation.quiver.vertices;
    if (c.json) {
      json j = to_json(rec, verts);
      j["algebra"] = src.presentation.name.empty() ? src_name : src.presentation.name;
      j["field"] = to_string(spec);
      j["params"] = json(src.params);
      j["dim"] = A.dim();
      j["timing_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      print_json(j);
      return static_cast<int>(kOk);
    }
    std::cout << "algebra " << src.presentation.name << " over " << to_string(spec);
    if (!src.params.empty()) std::cout << " (" << render_params(src.params) << ")";
    std::cout << ", dim " << A.dim() << "\n";
    std::cout << std::left << std::setw(4) << "n" << std::setw(10) << "dim P_n" << std::setw(14) << "dim Omega^n"
              << "top of Omega^n\n";
    for (const auto& d : rec.degrees) {
      std::string top;
      for (const auto& [vp, m] : d.top)
        top += (top.empty() ? "" : " ") + ("(" + verts[vp.first] + "," + verts[vp.second] + ")") +
               (m == 1 ? "" : "^" + std::to_string(m));
      std::cout << std::setw(4) << d.n << std::setw(10) << d.dim_p << std::setw(14) << d.dim_omega << top << "\n";
    }
    if (rec.terminated) std::cout << "resolution terminates (Omega vanishes)\n";
    if (rec.truncated) std::cout << "truncated: " << rec.note << " (largest feasible n = " << rec.max_feasible << ")\n";
    return static_cast<int>(kOk);
  });
}

// --------------------------------------------------------- export-catalog

int cmd_export(const std::string& dir, bool as_json) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  std::vector<std::string> written;
  for (const auto& e : catalog()) {
    const auto path = (fs::path(dir) / (e.name + ".qa")).string();
    std::ofstream(path, std::ios::binary) << e.source;
    written.push_back(path);
  }
  const auto path = (fs::path(dir) / "expectations.json").string();
  std::ofstream(path, std::ios::binary) << expectations_table().dump(2) << "\n";
  written.push_back(path);
  if (as_json)
    print_json(json{{"written", written}});
  else
    for (const auto& w : written) std::cout << "wrote " << w << "\n";
  return kOk;
}

int cmd_list(bool as_json) {
  json j = json::array();
  for (const auto& e : catalog()) {
    std::vector<std::string> fields;
    for (const auto& df : e.fields) fields.push_back(df.field + (df.params.empty() ? "" : " " + render_params(df.params)));
    if (as_json)
      j.push_back(json{{"name", e.name}, {"family", e.family}, {"partner", e.partner}, {"fields", fields}});
    else {
      std::cout << std::left << std::setw(10) << e.name << " ";
      for (std::size_t i = 0; i < fields.size(); ++i) std::cout << (i ? "; " : "") << fields[i];
      std::cout << "\n";
    }
  }
  if (as_json) print_json(j);
  return kOk;
}

int report_error(bool as_json, int code, const std::string& kind, const std::string& msg,
                 std::optional<std::pair<std::size_t, std::size_t>> pos = std::nullopt) {
  if (as_json) {
    json j{{"error", msg}, {"kind", kind}, {"exit_code", code}};
    if (pos) {
      j["line"] = pos->first;
      j["col"] = pos->second;
    }
    print_json(j);
  } else {
    std::cerr << "hochcalc: " << kind << " error: " << msg << "\n";
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hochschild cohomology of bound quiver algebras"};
  app.require_subcommand(1);

  Common info_c, hh_c, cmp_c, res_c;
  bool hh_oracle = false, cmp_oracle = false;
  auto* info = app.add_subcommand("info", "dimension, Cartan matrix, center, Nakayama permutation, symmetry");
  add_common(info, info_c);
  auto* hh = app.add_subcommand("hh", "HH^0, HH^1, HH^2 with intermediate dimensions");
  add_common(hh, hh_c);
  hh->add_flag("--oracle", hh_oracle, "cross-check against the relative bar complex");

  std::string cmp_a, cmp_b;
  auto* cmp = app.add_subcommand("compare", "side-by-side HH dimensions of two algebras");
  cmp->add_option("a", cmp_a, "first source")->required();
  cmp->add_option("b", cmp_b, "second source")->required();
  add_common(cmp, cmp_c, false);
  cmp->add_flag("--oracle", cmp_oracle, "cross-check both sides against the bar complex");

  std::vector<std::string> verify_names;
  bool verify_all = false, verify_oracle = false, verify_json = false;
  std::string verify_expect;
  auto* ver = app.add_subcommand("verify", "check catalog entries against their expectations");
  ver->add_option("names", verify_names, "catalog entries");
  ver->add_flag("--all", verify_all, "every catalog entry");
  ver->add_flag("--oracle", verify_oracle, "also cross-check with the bar complex");
  ver->add_option("--expectations", verify_expect, "expectation table (JSON) overriding the built-in one");
  ver->add_flag("--json", verify_json, "emit JSON only");

  std::size_t terms = 3;
  auto* res = app.add_subcommand("resolution", "minimal bimodule resolution: dims and tops");
  add_common(res, res_c);
  res->add_option("--terms", terms, "number of terms (at most 6)");

  std::string export_dir = "catalog";
  bool export_json = false;
  auto* exp = app.add_subcommand("export-catalog", "write catalog .qa files and expectations.json");
  exp->add_option("dir", export_dir, "output directory (default: catalog)");
  exp->add_flag("--json", export_json, "emit JSON only");

  bool list_json = false;
  auto* lst = app.add_subcommand("list", "catalog entries and designated fields");
  lst->add_flag("--json", list_json, "emit JSON only");

  bool as_json = false;
  for (int i = 1; i < argc; ++i)
    if (std::string(argv[i]) == "--json") as_json = true;

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return report_error(as_json, kParse, "usage", e.what());
  }

  try {
    if (*info) return cmd_info(info_c);
    if (*hh) return cmd_hh(hh_c, hh_oracle);
    if (*cmp) return cmd_compare(cmp_c, cmp_a, cmp_b, cmp_oracle);
    if (*ver) return cmd_verify(verify_names, verify_all, verify_oracle, verify_expect, verify_json);
    if (*res) return cmd_resolution(res_c, terms);
    if (*exp) return cmd_export(export_dir, export_json);
    if (*lst) return cmd_list(list_json);
  } catch (const ParseError& e) {
    return report_error(as_json, kParse, "parse", e.what(), std::pair{e.line(), e.col()});
  } catch (const FieldError& e) {
    return report_error(as_json, kParse, "field", e.what());
  } catch (const InputError& e) {
    return report_error(as_json, kParse, "input", e.what());
  } catch (const CatalogError& e) {
    return report_error(as_json, kParse, "catalog", e.what());
  } catch (const BuildError& e) {
    return report_error(as_json, kBuild, "build", e.what());
  } catch (const BindError& e) {
    return report_error(as_json, kBuild, "build", e.what());
  } catch (const std::exception& e) {
    return report_error(as_json, kBuild, "build", e.what());
  }
  return kOk;
}
