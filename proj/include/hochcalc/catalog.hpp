#pragma once

// Built-in presentations of the twenty exceptional algebras plus the mesh
// algebra of type G2 and the preprojective algebra of type A5, with expected
// values keyed by characteristic class.

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hochcalc/fields.hpp"
#include "hochcalc/presentation.hpp"

namespace hochcalc {

class CatalogError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class CharClass { two, three, other };

inline CharClass char_class(std::uint32_t characteristic) {
  if (characteristic == 2) return CharClass::two;
  if (characteristic == 3) return CharClass::three;
  return CharClass::other;
}

inline std::string to_string(CharClass c) {
  switch (c) {
    case CharClass::two: return "char2";
    case CharClass::three: return "char3";
    case CharClass::other: return "other";
  }
  return "?";
}

struct HHTriple {
  std::optional<std::size_t> h0, h1, h2;
  bool operator==(const HHTriple&) const = default;
};

struct ExpectedIntermediates {
  std::size_t hom_p0, hom_p1, ker_delta1, hom_omega2;
};

struct CharExpectation {
  HHTriple hh;
  std::optional<ExpectedIntermediates> intermediates;
  std::optional<std::size_t> center_dim;
  std::optional<bool> nakayama_identity;
  std::optional<bool> symmetric;
};

struct GeneratorSet {
  std::string family;  // e.g. "Gamma", "zeta"
  std::vector<std::pair<std::string, std::string>> elements;  // (name, bimodule element text)
  std::optional<CharClass> only;  // coefficients valid only in this class
};

struct ExpectedRecord {
  std::optional<std::size_t> dim;
  std::optional<std::vector<std::vector<std::size_t>>> cartan;
  std::optional<std::size_t> omega3_dim;
  std::map<CharClass, CharExpectation> by_char;
  std::vector<GeneratorSet> generators;
};

struct DesignatedField {
  std::string field;
  ParamBindings params;
};

struct CatalogEntry {
  std::string name;
  std::string family;   // derived-equivalence family, empty when alone
  std::string partner;  // standard counterpart of a non-standard entry
  std::string source;   // .qa text
  std::vector<DesignatedField> fields;
  ExpectedRecord expected;
};

namespace detail {

inline const char* const kQuiverL1 =
    "vertices: 1, 2\n"
    "arrow alpha: 2 -> 2\n"
    "arrow beta: 1 -> 2\n"
    "arrow gamma: 2 -> 1\n";

inline const char* const kQuiverL3 =
    "vertices: 1, 2\n"
    "arrow alpha: 1 -> 1\n"
    "arrow sigma: 1 -> 2\n"
    "arrow gamma: 2 -> 1\n"
    "arrow beta: 2 -> 2\n";

inline const char* const kQuiverL4 =
    "vertices: 1, 2, 3\n"
    "arrow alpha: 1 -> 3\n"
    "arrow gamma: 3 -> 2\n"
    "arrow delta: 1 -> 2\n"
    "arrow beta: 2 -> 1\n";

inline const char* const kQuiverL5 =
    "vertices: 1, 2, 3\n"
    "arrow beta: 1 -> 2\n"
    "arrow gamma: 2 -> 1\n"
    "arrow alpha: 2 -> 2\n"
    "arrow delta: 2 -> 3\n"
    "arrow sigma: 3 -> 2\n";

inline const char* const kQuiverL6 =
    "vertices: 1, 2, 3\n"
    "arrow alpha: 1 -> 2\n"
    "arrow beta: 2 -> 1\n"
    "arrow delta: 2 -> 3\n"
    "arrow gamma: 3 -> 2\n";

inline const char* const kQuiverL7 =
    "vertices: 1, 2, 3\n"
    "arrow alpha: 1 -> 1\n"
    "arrow sigma: 1 -> 3\n"
    "arrow gamma: 3 -> 2\n"
    "arrow delta: 1 -> 2\n"
    "arrow beta: 2 -> 1\n";

inline const char* const kQuiverL8 =
    "vertices: 1, 2, 3\n"
    "arrow alpha: 1 -> 1\n"
    "arrow sigma: 3 -> 1\n"
    "arrow gamma: 2 -> 3\n"
    "arrow delta: 2 -> 1\n"
    "arrow beta: 1 -> 2\n";

inline const char* const kQuiverL9 =
    "vertices: 1, 2, 3, 4\n"
    "arrow alpha: 1 -> 4\n"
    "arrow beta: 4 -> 1\n"
    "arrow delta: 4 -> 3\n"
    "arrow gamma: 3 -> 4\n"
    "arrow epsilon: 4 -> 2\n"
    "arrow xi: 2 -> 4\n";

inline const char* const kQuiverL10 =
    "vertices: 1, 2, 3, 4, 5\n"
    "arrow sigma: 1 -> 3\n"
    "arrow delta: 3 -> 1\n"
    "arrow gamma: 1 -> 2\n"
    "arrow xi: 2 -> 1\n"
    "arrow eta: 2 -> 5\n"
    "arrow mu: 5 -> 3\n"
    "arrow beta: 3 -> 4\n"
    "arrow alpha: 4 -> 2\n";

inline const char* const kQuiverA5 =
    "vertices: 1, 2, 3, 4, 5\n"
    "arrow alpha: 4 -> 2\n"
    "arrow beta: 2 -> 4\n"
    "arrow delta: 2 -> 1\n"
    "arrow gamma: 1 -> 2\n"
    "arrow sigma: 1 -> 3\n"
    "arrow xi: 3 -> 1\n"
    "arrow eta: 3 -> 5\n"
    "arrow mu: 5 -> 3\n";

inline std::string qa(const std::string& header, const char* quiver, const std::string& relations,
                      const std::string& resolution = {}) {
  std::string s = header + "\n" + quiver + "relations:\n" + relations;
  if (!resolution.empty()) s += "resolution-relations:\n" + resolution;
  return s;
}

inline CharExpectation hh(std::size_t h0, std::size_t h1, std::size_t h2) {
  CharExpectation e;
  e.hh = {h0, h1, h2};
  e.center_dim = h0;
  return e;
}

inline CharExpectation with(CharExpectation e, std::optional<ExpectedIntermediates> inter,
                            std::optional<bool> nakayama_identity = {}, std::optional<bool> symmetric = {}) {
  e.intermediates = inter;
  e.nakayama_identity = nakayama_identity;
  e.symmetric = symmetric;
  return e;
}

inline std::vector<DesignatedField> fields_plain(std::initializer_list<const char*> names) {
  std::vector<DesignatedField> v;
  for (auto n : names) v.push_back({n, {}});
  return v;
}

inline GeneratorSet gens_l3() {
  return {"Gamma",
          {{"Gamma_1", "sigma|e_1 - e_1|gamma - alpha|e_1 + e_1|alpha"},
           {"Gamma_2", "gamma|e_2 - e_2|sigma + beta|e_2 - e_2|beta"}},
          std::nullopt};
}

inline std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> c;
  const ExpectedIntermediates i_l1p{8, 11, 6, 8}, i_l1p_3{8, 11, 7, 8};
  const ExpectedIntermediates i_l3p{8, 12, 6, 10}, i_l3p_2{8, 12, 8, 10};
  const ExpectedIntermediates i_l6p{10, 10, 7, 5}, i_l6p_2{10, 10, 8, 5};
  const ExpectedIntermediates i_l9p{10, 12, 6, 6}, i_l9p_2{10, 12, 7, 8};
  const ExpectedIntermediates i_l10p{10, 16, 8, 8}, i_l10p_2{10, 16, 9, 8};
  const std::vector<std::vector<std::size_t>> cartan_l1{{3, 3}, {3, 5}};
  const std::vector<std::vector<std::size_t>> cartan_l3{{4, 2}, {2, 4}};

  // ---- (3,3,3) pair 1/2
  {
    CatalogEntry e;
    e.name = "lambda1p";
    e.family = "lambda1p-2p";
    e.source = qa("algebra lambda1p", kQuiverL1,
                  "  alpha^2 = gamma*beta\n"
                  "  beta*alpha*gamma = 0\n",
                  "  beta*alpha*gamma = 0\n"
                  "  alpha^2 = gamma*beta\n");
    e.fields = fields_plain({"Q", "GF(5)", "GF(2)", "GF(3)"});
    e.expected.dim = 14;
    e.expected.cartan = cartan_l1;
    e.expected.by_char[CharClass::other] = with(hh(5, 3, 3), i_l1p, true, true);
    e.expected.by_char[CharClass::two] = with(hh(5, 3, 3), i_l1p, true, true);
    e.expected.by_char[CharClass::three] = with(hh(5, 4, 4), i_l1p_3, true, true);
    e.expected.generators.push_back(
        {"Psi'",
         {{"Psi'_1", "-e_1|beta*gamma + beta*gamma|e_1 + beta|alpha*gamma - beta*alpha|gamma"},
          {"Psi'_2", "e_2|alpha^4 - alpha|alpha^3 + alpha^3|alpha - alpha^4|e_2 + gamma|beta*alpha - alpha*gamma|beta"}},
         std::nullopt});
    c.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "lambda2p";
    e.family = "lambda1p-2p";
    e.source = qa("algebra lambda2p", kQuiverL1,
                  "  alpha^2*gamma = 0\n"
                  "  beta*alpha^2 = 0\n"
                  "  beta*gamma = 0\n"
                  "  alpha^3 = gamma*beta\n");
    e.fields = fields_plain({"Q", "GF(5)", "GF(2)", "GF(3)"});
    e.expected.by_char[CharClass::other] = with(hh(5, 3, 3), std::nullopt, true, true);
    e.expected.by_char[CharClass::two] = with(hh(5, 3, 3), std::nullopt, true, true);
    e.expected.by_char[CharClass::three] = with(hh(5, 4, 4), std::nullopt, true, true);
    c.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "lambda1";
    e.family = "lambda1-2";
    e.partner = "lambda1p";
    e.source = qa("algebra lambda1", kQuiverL1,
                  "  alpha^2 = gamma*beta\n"
                  "  beta*alpha*gamma = beta*alpha^2*gamma\n"
                  "  alpha^5 = 0\n",
                  "  beta*alpha*gamma - beta*alpha^2*gamma = 0\n"
                  "  alpha^2 = gamma*beta\n");
    e.fields = fields_plain({"GF(3)"});
    e.expected.dim = 14;
    e.expected.by_char[CharClass::three] = with(hh(5, 3, 3), i_l1p, true, true);
    e.expected.generators.push_back(
        {"Psi",
         {{"Psi_1",
           "-e_1|beta*gamma + beta*gamma|e_1 + beta|alpha*gamma - beta*alpha|gamma + beta*alpha^2|gamma - "
           "beta|alpha^2*gamma"},
          {"Psi_2",
           "e_2|alpha^4 - alpha|alpha^3 + alpha^3|alpha - alpha^4|e_2 + gamma|beta*alpha - alpha*gamma|beta - "
           "alpha^4|alpha + alpha|alpha^4"}},
         std::nullopt});
    c.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "lambda2";
    e.family = "lambda1-2";
    e.partner = "lambda2p";
    e.source = qa("algebra lambda2", kQuiverL1,
                  "  alpha^2*gamma = 0\n"
                  "  beta*alpha^2 = 0\n"
                  "  beta*gamma = beta*alpha*gamma\n"
                  "  alpha^3 = gamma*beta\n");
    e.fields = fields_plain({"GF(3)"});
    e.expected.by_char[CharClass::three] = with(hh(5, 3, 3), std::nullopt, true, true);
    c.push_back(e);
  }

  // ---- (2,2,2,2)
  {
    CatalogEntry e;
    e.name = "lambda3p";
    e.source = qa("algebra lambda3p params lambda\nfield-constraints: lambda not-in {0,1}", kQuiverL3,
                  "  alpha^2 = sigma*gamma\n"
                  "  lambda*beta^2 = gamma*sigma\n"
                  "  gamma*alpha = beta*gamma\n"
                  "  alpha*sigma = sigma*beta\n",
                  "  alpha^2 = sigma*gamma\n"
                  "  alpha*sigma = sigma*beta\n"
                  "  gamma*alpha = beta*gamma\n"
                  "  lambda*beta^2 = gamma*sigma\n");
    e.fields = {{"Q", {{"lambda", "2"}}},   {"Q", {{"lambda", "-1/3"}}}, {"GF(3)", {{"lambda", "2"}}},
                {"GF(5)", {{"lambda", "2"}}}, {"GF(5)", {{"lambda", "4"}}},  {"GF(4)", {{"lambda", "g"}}},
                {"GF(8)", {{"lambda", "g^2+1"}}}};
    e.expected.dim = 12;
    e.expected.cartan = cartan_l3;
    e.expected.omega3_dim = 60;
    e.expected.by_char[CharClass::other] = with(hh(6, 4, 4), i_l3p, true, true);
    e.expected.by_char[CharClass::three] = with(hh(6, 4, 4), i_l3p, true, true);
    e.expected.by_char[CharClass::two] = with(hh(6, 6, 6), i_l3p_2, true, true);
    e.expected.generators.push_back(gens_l3());
    c.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "lambda3";
    e.partner = "lambda3p";
    e.source = qa("algebra lambda3 params lambda\nfield-constraints: lambda not-in {0,1}", kQuiverL3,
                  "  alpha^2 = sigma*gamma + alpha^3\n"
                  "  lambda*beta^2 = gamma*sigma\n"
                  "  gamma*alpha = beta*gamma\n"
                  "  alpha*sigma = sigma*beta\n"
                  "  alpha^4 = 0\n",
                  "  alpha^2 = sigma*gamma + alpha^3\n"
                  "  alpha*sigma = sigma*beta\n"
                  "  gamma*alpha = beta*gamma\n"
                  "  lambda*beta^2 = gamma*sigma\n");
    e.fields = {{"GF(4)", {{"lambda", "g"}}}, {"GF(8)", {{"lambda", "g"}}}};
    e.expected.dim = 12;
    e.expected.cartan = cartan_l3;
    e.expected.by_char[CharClass::two] = with(hh(6, 4, 4), i_l3p, true, true);
    e.expected.generators.push_back(gens_l3());
    c.push_back(e);
  }

  // ---- (2,4,4): 4..8
  struct Fam {
    const char* name;
    const char* quiver;
    std::string relations_std, relations_nonstd;
    std::string res_std, res_nonstd;
  };
  const std::vector<Fam> fam = {
      {"4", kQuiverL4,
       "  delta*beta*delta = alpha*gamma\n"
       "  beta*delta*beta*delta*beta*delta*beta = 0\n"
       "  gamma*beta*alpha = 0\n",
       "  delta*beta*delta = alpha*gamma\n"
       "  beta*delta*beta*delta*beta*delta*beta = 0\n"
       "  gamma*beta*alpha = gamma*beta*delta*beta*alpha\n",
       "", ""},
      {"5", kQuiverL5,
       "  alpha^2 = gamma*beta\n"
       "  alpha^3 = delta*sigma\n"
       "  beta*delta = 0\n"
       "  sigma*gamma = 0\n"
       "  alpha*delta = 0\n"
       "  sigma*alpha = 0\n"
       "  beta*gamma = 0\n",
       "  alpha^2 = gamma*beta\n"
       "  alpha^3 = delta*sigma\n"
       "  beta*delta = 0\n"
       "  sigma*gamma = 0\n"
       "  alpha*delta = 0\n"
       "  sigma*alpha = 0\n"
       "  beta*gamma = beta*alpha*gamma\n",
       "", ""},
      {"6", kQuiverL6,
       "  alpha*delta*gamma*delta = 0\n"
       "  gamma*delta*gamma*beta = 0\n"
       "  alpha*beta = 0\n"
       "  beta*alpha = delta*gamma*delta*gamma\n",
       "  alpha*delta*gamma*delta = 0\n"
       "  gamma*delta*gamma*beta = 0\n"
       "  alpha*beta = alpha*delta*gamma*beta\n"
       "  beta*alpha = delta*gamma*delta*gamma\n",
       "  alpha*beta = 0\n"
       "  alpha*delta*gamma*delta = 0\n"
       "  gamma*delta*gamma*beta = 0\n"
       "  beta*alpha = delta*gamma*delta*gamma\n",
       "  alpha*beta = alpha*delta*gamma*beta\n"
       "  alpha*delta*gamma*delta = 0\n"
       "  gamma*delta*gamma*beta = 0\n"
       "  beta*alpha = delta*gamma*delta*gamma\n"},
      {"7", kQuiverL7,
       "  beta*delta = 0\n"
       "  alpha*sigma = 0\n"
       "  alpha*delta = sigma*gamma\n"
       "  gamma*beta*alpha = 0\n"
       "  alpha^2 = delta*beta\n",
       "  beta*delta = beta*alpha*delta\n"
       "  alpha*sigma = 0\n"
       "  alpha*delta = sigma*gamma\n"
       "  gamma*beta*alpha = 0\n"
       "  alpha^2 = delta*beta\n",
       "", ""},
      {"8", kQuiverL8,
       "  delta*beta = 0\n"
       "  sigma*alpha = 0\n"
       "  delta*alpha = gamma*sigma\n"
       "  alpha*beta*gamma = 0\n"
       "  alpha^2 = beta*delta\n",
       "  delta*beta = delta*alpha*beta\n"
       "  sigma*alpha = 0\n"
       "  delta*alpha = gamma*sigma\n"
       "  alpha*beta*gamma = 0\n"
       "  alpha^2 = beta*delta\n",
       "", ""},
  };
  for (const auto& f : fam) {
    const bool six = std::string(f.name) == "6";
    CatalogEntry s;
    s.name = std::string("lambda") + f.name + "p";
    s.family = "lambda4p-8p";
    s.source = qa("algebra " + s.name, f.quiver, f.relations_std, f.res_std);
    s.fields = fields_plain({"Q", "GF(3)", "GF(2)"});
    s.expected.by_char[CharClass::other] = with(hh(5, 2, 2), six ? std::optional(i_l6p) : std::nullopt, true, true);
    s.expected.by_char[CharClass::three] = with(hh(5, 2, 2), six ? std::optional(i_l6p) : std::nullopt, true, true);
    s.expected.by_char[CharClass::two] = with(hh(5, 3, 3), six ? std::optional(i_l6p_2) : std::nullopt, true, true);
    if (six) {
      s.expected.dim = 22;
      s.expected.generators.push_back(
          {"Gamma",
           {{"Gamma_12", "alpha|e_2 - e_1|alpha + e_1|gamma"},
            {"Gamma_21", "beta|e_1 - e_2|beta - delta|e_1"},
            {"Gamma_33", "gamma*beta|e_3 - e_3|alpha*delta - gamma|delta*gamma*delta + gamma*delta*gamma|delta"}},
           std::nullopt});
    }
    c.push_back(s);
  }
  for (const auto& f : fam) {
    const bool six = std::string(f.name) == "6";
    CatalogEntry n;
    n.name = std::string("lambda") + f.name;
    n.family = "lambda4-8";
    n.partner = n.name + "p";
    n.source = qa("algebra " + n.name, f.quiver, f.relations_nonstd, f.res_nonstd);
    n.fields = fields_plain({"GF(2)"});
    n.expected.by_char[CharClass::two] =
        with(hh(5, 2, 2), six ? std::optional(ExpectedIntermediates{10, 10, 7, 5}) : std::nullopt, true, true);
    if (six) {
      n.expected.dim = 22;
      n.expected.generators.push_back(
          {"Delta",
           {{"Delta_12", "alpha|e_2 + e_1|alpha + e_1|gamma + alpha*delta*gamma|e_2 + e_1|gamma*delta*gamma"},
            {"Delta_21", "beta|e_1 + e_2|beta + delta|e_1 + e_2|delta*gamma*beta + delta*gamma*delta|e_1"},
            {"Delta_33", "gamma*beta|e_3 + e_3|alpha*delta + gamma|delta*gamma*delta + gamma*delta*gamma|delta"}},
           CharClass::two});
    }
    c.push_back(n);
  }

  // ---- (3,3,3): 9
  {
    CatalogEntry e;
    e.name = "lambda9p";
    e.source = qa("algebra lambda9p", kQuiverL9,
                  "  beta*alpha + epsilon*xi + delta*gamma = 0\n"
                  "  alpha*beta = 0\n"
                  "  xi*epsilon = 0\n"
                  "  gamma*delta = 0\n",
                  "  alpha*beta = 0\n"
                  "  xi*epsilon = 0\n"
                  "  gamma*delta = 0\n"
                  "  beta*alpha + epsilon*xi + delta*gamma = 0\n");
    e.fields = fields_plain({"Q", "GF(3)", "GF(2)"});
    e.expected.dim = 28;
    e.expected.omega3_dim = 28;
    e.expected.by_char[CharClass::other] = with(hh(5, 1, 0), i_l9p, true, false);
    e.expected.by_char[CharClass::three] = with(hh(5, 1, 0), i_l9p, true, false);
    e.expected.by_char[CharClass::two] = with(hh(5, 2, 3), i_l9p_2, true, true);
    e.expected.generators.push_back(
        {"zeta",
         {{"zeta_1",
           "e_1|alpha*delta*gamma*beta - alpha|delta*gamma*beta + alpha*delta|gamma*beta - alpha*epsilon|xi*beta "
           "- alpha*delta*gamma|beta + alpha*delta*gamma*beta|e_1"},
          {"zeta_2",
           "e_2|xi*beta*alpha*epsilon - xi|beta*alpha*epsilon + xi*beta|alpha*epsilon - xi*delta|gamma*epsilon "
           "- xi*beta*alpha|epsilon + xi*beta*alpha*epsilon|e_2"},
          {"zeta_3",
           "e_3|gamma*beta*alpha*delta - gamma|beta*alpha*delta + gamma*beta|alpha*delta - gamma*epsilon|xi*delta "
           "- gamma*beta*alpha|delta + gamma*beta*alpha*delta|e_3"},
          {"zeta_4",
           "e_4|beta*alpha*delta*gamma - beta|alpha*delta*gamma - epsilon|xi*beta*alpha + delta|gamma*beta*alpha "
           "+ beta*alpha|delta*gamma - delta*gamma|beta*alpha - beta*alpha*delta|gamma - delta*gamma*epsilon|xi "
           "+ delta*gamma*beta|alpha + beta*alpha*delta*gamma|e_4"}},
         std::nullopt});
    c.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "lambda9";
    e.partner = "lambda9p";
    e.source = qa("algebra lambda9", kQuiverL9,
                  "  beta*alpha + epsilon*xi + delta*gamma = 0\n"
                  "  xi*epsilon = 0\n"
                  "  gamma*delta = 0\n"
                  "  alpha*beta = alpha*delta*gamma*beta\n",
                  "  alpha*beta = alpha*delta*gamma*beta\n"
                  "  xi*epsilon = 0\n"
                  "  gamma*delta = 0\n"
                  "  beta*alpha + epsilon*xi + delta*gamma = 0\n");
    e.fields = fields_plain({"GF(2)"});
    e.expected.dim = 28;
    e.expected.by_char[CharClass::two] = with(hh(5, 1, 2), ExpectedIntermediates{10, 12, 6, 8}, true, false);
    e.expected.generators.push_back(
        {"Psi",
         {{"Psi_1",
           "e_1|alpha*delta*gamma*beta + alpha|delta*gamma*beta + alpha*delta|gamma*beta + alpha*epsilon|xi*beta "
           "+ alpha*delta*gamma|beta + alpha*delta*gamma|delta*gamma*beta + alpha*delta*gamma*beta|e_1 "
           "+ alpha*delta*gamma|delta*gamma*beta"},
          {"Psi_2",
           "e_2|xi*beta*alpha*epsilon + xi|beta*alpha*epsilon + xi*beta|alpha*epsilon + xi*delta|gamma*epsilon "
           "+ xi*beta*alpha|epsilon + xi*beta*alpha*epsilon|e_2"},
          {"Psi_3",
           "e_3|gamma*beta*alpha*delta + gamma|beta*alpha*delta + gamma*beta|alpha*delta + gamma*epsilon|xi*delta "
           "+ gamma*epsilon*xi|delta + gamma*beta*alpha*delta|e_3 + gamma*beta*alpha|beta*alpha*delta"},
          {"Psi_4",
           "e_4|beta*alpha*delta*gamma + beta|alpha*delta*gamma + epsilon|xi*beta*alpha + delta|gamma*beta*alpha "
           "+ beta*alpha|delta*gamma + delta*gamma|beta*alpha + beta*alpha*delta|gamma + delta*gamma*epsilon|xi "
           "+ delta*gamma*beta|alpha + beta*alpha*delta*gamma|e_4 + delta*gamma*beta|alpha*delta*gamma "
           "+ beta*alpha*delta|gamma*beta*alpha"}},
         CharClass::two});
    c.push_back(e);
  }

  // ---- (2,3,6): 10
  {
    CatalogEntry e;
    e.name = "lambda10p";
    e.source = qa("algebra lambda10p", kQuiverL10,
                  "  mu*beta = 0\n"
                  "  alpha*eta = 0\n"
                  "  beta*alpha = delta*gamma\n"
                  "  eta*mu = xi*sigma\n"
                  "  sigma*delta = gamma*xi\n",
                  "  sigma*delta = gamma*xi\n"
                  "  eta*mu = xi*sigma\n"
                  "  beta*alpha = delta*gamma\n"
                  "  alpha*eta = 0\n"
                  "  mu*beta = 0\n");
    e.fields = fields_plain({"Q", "GF(3)", "GF(2)"});
    e.expected.dim = 35;
    e.expected.by_char[CharClass::other] = with(hh(2, 0, 0), i_l10p);
    e.expected.by_char[CharClass::three] = with(hh(2, 0, 0), i_l10p);
    e.expected.by_char[CharClass::two] = with(hh(2, 1, 1), i_l10p_2);
    e.expected.generators.push_back(
        {"zeta",
         {{"zeta_1",
           "e_1|sigma*delta*sigma*delta - sigma*delta|gamma*xi + sigma*delta*sigma*delta|e_1 - gamma|delta*sigma*delta "
           "+ gamma*xi*gamma|delta + sigma|xi*gamma*xi - sigma*delta*sigma|xi + gamma*eta|alpha*xi - sigma*beta|mu*delta"},
          {"zeta_2",
           "e_2|beta*alpha*xi*gamma - xi*gamma|beta*alpha + eta*mu|xi*gamma - eta*mu*delta*sigma|e_2 "
           "- eta|alpha*xi*gamma + xi*gamma*eta|alpha + xi|gamma*xi*gamma - xi*gamma*xi|gamma"},
          {"zeta_3",
           "e_3|xi*gamma*eta*mu - delta*sigma|eta*mu - beta|mu*delta*sigma + delta*sigma*beta|mu "
           "- delta|sigma*delta*sigma + delta*sigma*delta|sigma + beta*alpha|delta*sigma - delta*sigma*beta*alpha|e_3"},
          {"zeta_4",
           "e_4|mu*delta*sigma*beta - alpha|delta*sigma*beta - alpha*xi|sigma*beta + alpha*xi*gamma|beta "
           "- alpha*xi*gamma*eta|e_4"},
          {"zeta_5",
           "e_5|alpha*xi*gamma*eta - mu|xi*gamma*eta + mu*delta|gamma*eta + mu*delta*sigma|eta "
           "- mu*delta*sigma*beta|e_5"}},
         std::nullopt});
    c.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "lambda10";
    e.partner = "lambda10p";
    e.source = qa("algebra lambda10", kQuiverL10,
                  "  mu*beta = 0\n"
                  "  alpha*eta = 0\n"
                  "  beta*alpha = delta*gamma\n"
                  "  eta*mu = xi*sigma\n"
                  "  sigma*delta = gamma*xi + sigma*delta*sigma*delta\n"
                  "  delta*sigma*delta*sigma = 0\n",
                  "  sigma*delta = gamma*xi + sigma*delta*sigma*delta\n"
                  "  eta*mu = xi*sigma\n"
                  "  beta*alpha = delta*gamma\n"
                  "  alpha*eta = 0\n"
                  "  mu*beta = 0\n");
    e.fields = fields_plain({"GF(2)"});
    e.expected.dim = 35;
    e.expected.by_char[CharClass::two] = with(hh(2, 0, 0), ExpectedIntermediates{10, 16, 8, 8}, false, false);
    e.expected.generators.push_back(
        {"Psi",
         {{"Psi_1",
           "e_1|sigma*delta*sigma*delta + sigma*delta|gamma*xi + sigma*delta|sigma*delta*sigma*delta "
           "+ sigma*delta*sigma*delta|e_1 + gamma|delta*sigma*delta + gamma*xi*gamma|delta + sigma|xi*gamma*xi "
           "+ sigma*delta*sigma|xi + gamma*eta|alpha*xi + sigma*beta|mu*delta + sigma*delta*sigma*delta|sigma*delta "
           "+ sigma*delta*sigma|xi*gamma*xi"},
          {"Psi_2",
           "e_2|beta*alpha*xi*gamma + xi*gamma|beta*alpha + eta*mu|xi*gamma + eta*mu*delta*sigma|e_2 "
           "+ eta|alpha*xi*gamma + xi*gamma*eta|alpha + xi|gamma*xi*gamma + xi*gamma*xi|gamma "
           "+ xi*gamma*xi|gamma*xi*gamma + xi*gamma*xi|gamma*xi*gamma"},
          {"Psi_3",
           "e_3|xi*gamma*eta*mu + delta*sigma|eta*mu + beta|mu*delta*sigma + delta*sigma*beta|mu "
           "+ delta|sigma*delta*sigma + delta*sigma*delta|sigma + beta*alpha|delta*sigma + delta*sigma*beta*alpha|e_3"},
          {"Psi_4",
           "e_4|mu*delta*sigma*beta + alpha|delta*sigma*beta + alpha*xi|sigma*beta + alpha*xi*gamma|beta "
           "+ alpha*xi*gamma*eta|e_4"},
          {"Psi_5",
           "e_5|alpha*xi*gamma*eta + mu|xi*gamma*eta + mu*delta|gamma*eta + mu*delta*sigma|eta "
           "+ mu*delta*sigma*beta|e_5"}},
         CharClass::two});
    c.push_back(e);
  }

  // ---- extra entries
  {
    CatalogEntry e;
    e.name = "mesh_g2";
    e.source = qa("algebra mesh_g2", kQuiverL9,
                  "  beta*alpha + epsilon*xi + delta*gamma = 0\n"
                  "  alpha*delta = 0\n"
                  "  xi*beta = 0\n"
                  "  gamma*epsilon = 0\n");
    e.fields = fields_plain({"GF(2)"});
    CharExpectation x;
    x.center_dim = 2;
    x.hh.h0 = 2;
    e.expected.by_char[CharClass::two] = x;
    c.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "p_a5";
    e.source = qa("algebra p_a5", kQuiverA5,
                  "  alpha*beta = 0\n"
                  "  beta*alpha = delta*gamma\n"
                  "  gamma*delta = sigma*xi\n"
                  "  xi*sigma = eta*mu\n"
                  "  mu*eta = 0\n");
    e.fields = fields_plain({"GF(2)"});
    e.expected.dim = 35;
    CharExpectation x;
    x.hh.h1 = 2;
    x.hh.h2 = 2;
    e.expected.by_char[CharClass::two] = x;
    c.push_back(e);
  }

  std::sort(c.begin(), c.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
    auto key = [](const std::string& n) {
      // lambdaN, lambdaNp, then the extras
      if (n.rfind("lambda", 0) != 0) return std::pair{100, n};
      const bool p = n.back() == 'p';
      const int k = std::stoi(n.substr(6, n.size() - 6 - (p ? 1 : 0)));
      return std::pair{k * 2 + (p ? 0 : 1), n};
    };
    return key(a.name) < key(b.name);
  });
  return c;
}

}  // namespace detail

inline const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> c = detail::build_catalog();
  return c;
}

inline const CatalogEntry* catalog_find(std::string_view name) {
  for (const auto& e : catalog())
    if (e.name == name) return &e;
  return nullptr;
}

inline const CatalogEntry& catalog_entry(std::string_view name) {
  if (const auto* e = catalog_find(name)) return *e;
  throw CatalogError("unknown catalog entry '" + std::string(name) + "'");
}

// lambda = g in characteristic 2 (needs GF(2^k), k >= 2); lambda = 2 elsewhere.
inline ParamBindings default_params(const Presentation& p, const FieldSpec& spec) {
  ParamBindings b;
  for (const auto& name : p.params) {
    if (spec.characteristic() == 2) {
      if (spec.kind != FieldSpec::Kind::extension)
        throw CatalogError("parameter " + name + " must avoid {0,1}; " + to_string(spec) +
                           " has no such element, use GF(4) or larger");
      b[name] = "g";
    } else {
      b[name] = "2";
    }
  }
  return b;
}

struct CatalogSlice {
  Presentation presentation;
  ParamBindings params;
  const CatalogEntry* entry = nullptr;
  const CharExpectation* expectation = nullptr;  // null when the class is not covered
};

// Presentation with bindings (defaults filled in) plus the expectation slice
// for the field's characteristic class.
inline CatalogSlice catalog_get(std::string_view name, const FieldSpec& spec, const ParamBindings& overrides = {}) {
  const auto& e = catalog_entry(name);
  CatalogSlice s;
  s.entry = &e;
  s.presentation = parse_presentation(e.source);
  for (const auto& [k, v] : overrides)
    if (std::find(s.presentation.params.begin(), s.presentation.params.end(), k) == s.presentation.params.end())
      throw CatalogError("entry " + e.name + " has no parameter '" + k + "'");
  ParamBindings defaults;
  bool need_defaults = false;
  for (const auto& name_ : s.presentation.params)
    if (!overrides.count(name_)) need_defaults = true;
  if (need_defaults) defaults = default_params(s.presentation, spec);
  s.params = defaults;
  for (const auto& [k, v] : overrides) s.params[k] = v;
  auto it = e.expected.by_char.find(char_class(spec.characteristic()));
  if (it != e.expected.by_char.end()) s.expectation = &it->second;
  return s;
}

inline std::optional<HHTriple> expected_hh(std::string_view name, std::uint32_t characteristic) {
  const auto& e = catalog_entry(name);
  auto it = e.expected.by_char.find(char_class(characteristic));
  if (it == e.expected.by_char.end()) return std::nullopt;
  const auto& t = it->second.hh;
  if (!t.h0 && !t.h1 && !t.h2) return std::nullopt;
  return t;
}

}  // namespace hochcalc
