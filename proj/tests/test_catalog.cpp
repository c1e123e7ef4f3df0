#include <gtest/gtest.h>

#include <filesystem>
#include <set>

#include "hochcalc/report.hpp"

using namespace hochcalc;

namespace {

const std::filesystem::path kCatalogDir = std::filesystem::path(HOCHCALC_SOURCE_DIR) / "catalog";

}  // namespace

TEST(Catalog, NamesAreUniqueAndPartnersResolve) {
  std::set<std::string> names;
  for (const auto& e : catalog()) {
    EXPECT_TRUE(names.insert(e.name).second) << e.name;
    EXPECT_FALSE(e.fields.empty()) << e.name;
  }
  for (const auto& e : catalog())
    if (!e.partner.empty()) {
      EXPECT_TRUE(catalog_find(e.partner)) << e.name << " -> " << e.partner;
    }
  EXPECT_EQ(names.size(), 22u);
}

TEST(Catalog, EveryEntryBuildsOverItsDesignatedFields) {
  for (const auto& e : catalog())
    for (const auto& df : e.fields) {
      const auto spec = parse_field_spec(df.field);
      auto s = catalog_get(e.name, spec, df.params);
      std::visit(
          [&](const auto& f) {
            auto A = build(s.presentation, f, s.params);
            if (e.expected.dim) {
              EXPECT_EQ(A.dim(), *e.expected.dim) << e.name << "@" << df.field;
            }
            if (e.expected.cartan) {
              EXPECT_EQ(A.cartan_matrix(), *e.expected.cartan) << e.name << "@" << df.field;
            }
          },
          make_any_field(spec));
    }
}

TEST(CatalogGet, Lambda9pOverQ) {
  auto s = catalog_get("lambda9p", FieldSpec::rationals());
  ASSERT_NE(s.expectation, nullptr);
  EXPECT_EQ(s.expectation->hh, (HHTriple{5, 1, 0}));
  auto A = build(s.presentation, RationalField{}, s.params);
  auto r = hh_dims(A);
  EXPECT_EQ(r.h0, 5u);
  EXPECT_EQ(r.h1, 1u);
  EXPECT_EQ(r.h2, 0u);
}

TEST(CatalogGet, Lambda6OverGF2) {
  auto s = catalog_get("lambda6", parse_field_spec("GF(2)"));
  auto r = hh_dims(build(s.presentation, PrimeField(2), s.params));
  EXPECT_EQ(r.h0, 5u);
  EXPECT_EQ(r.h1, 2u);
  EXPECT_EQ(r.h2, 2u);
}

TEST(CatalogGet, MeshCenter) {
  auto s = catalog_get("mesh_g2", parse_field_spec("GF(2)"));
  EXPECT_EQ(center(build(s.presentation, PrimeField(2), s.params)).dim, 2u);
}

TEST(CatalogGet, DefaultParameters) {
  EXPECT_EQ(catalog_get("lambda3p", parse_field_spec("GF(4)")).params, (ParamBindings{{"lambda", "g"}}));
  EXPECT_EQ(catalog_get("lambda3p", parse_field_spec("GF(5)")).params, (ParamBindings{{"lambda", "2"}}));
  EXPECT_EQ(catalog_get("lambda3p", parse_field_spec("GF(5)"), {{"lambda", "3"}}).params,
            (ParamBindings{{"lambda", "3"}}));
  EXPECT_THROW(catalog_get("lambda3p", parse_field_spec("GF(2)")), CatalogError);
  EXPECT_THROW(catalog_get("lambda3p", parse_field_spec("GF(5)"), {{"mu", "3"}}), CatalogError);
}

TEST(CatalogGet, UnknownName) {
  EXPECT_THROW(catalog_get("lambda11", FieldSpec::rationals()), CatalogError);
  EXPECT_EQ(catalog_find("nope"), nullptr);
}

TEST(ExpectedHH, Examples) {
  EXPECT_EQ(expected_hh("lambda4p", 5), (HHTriple{5, 2, 2}));
  EXPECT_EQ(expected_hh("lambda1p", 3), (HHTriple{5, 4, 4}));
  auto a5 = expected_hh("p_a5", 2);
  ASSERT_TRUE(a5.has_value());
  EXPECT_FALSE(a5->h0.has_value());
  EXPECT_EQ(a5->h1, 2u);
  EXPECT_EQ(a5->h2, 2u);
  EXPECT_FALSE(expected_hh("lambda9", 3).has_value());
}

TEST(CharClass, Mapping) {
  EXPECT_EQ(char_class(2), CharClass::two);
  EXPECT_EQ(char_class(3), CharClass::three);
  EXPECT_EQ(char_class(0), CharClass::other);
  EXPECT_EQ(char_class(7), CharClass::other);
  for (auto c : {CharClass::two, CharClass::three, CharClass::other})
    EXPECT_EQ(char_class_from_string(to_string(c)), c);
}

TEST(CheckedIn, QaFilesMatchExport) {
  std::size_t qa_files = 0;
  for (const auto& it : std::filesystem::directory_iterator(kCatalogDir))
    if (it.path().extension() == ".qa") ++qa_files;
  EXPECT_EQ(qa_files, catalog().size());
  for (const auto& e : catalog()) {
    const auto path = kCatalogDir / (e.name + ".qa");
    ASSERT_TRUE(std::filesystem::exists(path)) << path;
    EXPECT_EQ(read_text_file(path.string()), e.source) << path;
  }
}

TEST(CheckedIn, ExpectationsMatchExport) {
  const auto text = read_text_file((kCatalogDir / "expectations.json").string());
  EXPECT_EQ(text, expectations_table().dump(2) + "\n");
}

TEST(Expectations, JsonRoundTrip) {
  for (const auto& e : catalog()) {
    auto o = expectation_from_json(expectations_json(e));
    CatalogEntry copy = e;
    copy.fields = o.fields;
    copy.expected = o.expected;
    EXPECT_EQ(expectations_json(copy), expectations_json(e)) << e.name;
  }
}

TEST(Expectations, LoaderRejectsUnknownEntries) {
  const auto path = std::filesystem::temp_directory_path() / "hochcalc_bad_expectations.json";
  {
    std::ofstream(path) << R"({"lambda99": {"fields": [], "by_char": {}}})";
  }
  EXPECT_THROW(load_expectations(path.string()), InputError);
  {
    std::ofstream(path) << R"({"lambda3p": {"by_char": {}}})";
  }
  EXPECT_THROW(load_expectations(path.string()), InputError);
  std::filesystem::remove(path);
}

TEST(Expectations, VerifyCatchesCorruptedRecord) {
  const auto& e = catalog_entry("lambda3p");
  auto o = expectation_from_json(expectations_json(e));
  o.fields = {{"GF(3)", {{"lambda", "2"}}}};
  o.expected.by_char[CharClass::three].hh.h1 = 5;
  auto rows = verify_entry(e, false, &o);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_FALSE(rows[0].expectations_pass());
  bool saw = false;
  for (const auto& c : rows[0].checks)
    if (!c.pass) saw = saw || c.what == "hh";
  EXPECT_TRUE(saw);
  auto clean = verify_entry(e, false);
  for (const auto& r : clean) EXPECT_TRUE(r.expectations_pass()) << r.field;
}
