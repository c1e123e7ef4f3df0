#include <gtest/gtest.h>

#include "hochcalc/catalog.hpp"
#include "hochcalc/presentation.hpp"

using namespace hochcalc;

namespace {

const char* const kLambda3p =
    "algebra l3p params lambda\n"
    "field-constraints: lambda not-in {0,1}\n"
    "vertices: 1, 2\n"
    "arrow alpha: 1 -> 1\n"
    "arrow sigma: 1 -> 2\n"
    "arrow gamma: 2 -> 1\n"
    "arrow beta: 2 -> 2\n"
    "relations:\n"
    "  alpha*alpha = sigma*gamma\n"
    "  lambda*beta*beta = gamma*sigma\n"
    "  gamma*alpha = beta*gamma\n"
    "  alpha*sigma = sigma*beta\n";

ParseError parse_error_of(const std::string& text) {
  try {
    parse_presentation(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "expected a parse error";
  return ParseError(0, 0, "none");
}

}  // namespace

TEST(Parse, Lambda3pShape) {
  auto p = parse_presentation(kLambda3p);
  EXPECT_EQ(p.quiver.num_vertices(), 2u);
  EXPECT_EQ(p.quiver.num_arrows(), 4u);
  EXPECT_EQ(p.relations.size(), 4u);
  EXPECT_EQ(p.params, std::vector<std::string>{"lambda"});
  EXPECT_FALSE(p.has_resolution_block);
  EXPECT_EQ(p.effective_resolution_relations().size(), 4u);
  // left-to-right composition: sigma*gamma runs 1 -> 2 -> 1
  const auto& t = p.relations[0].rhs.at(0);
  EXPECT_EQ(t.path.source, 0u);
  EXPECT_EQ(t.path.target, 0u);
  EXPECT_EQ(t.path.length(), 2u);
}

TEST(Parse, Semisimple) {
  auto p = parse_presentation("algebra kk\nvertices: 1, 2\nrelations:\n");
  EXPECT_EQ(p.quiver.num_vertices(), 2u);
  EXPECT_EQ(p.quiver.num_arrows(), 0u);
  EXPECT_TRUE(p.relations.empty());
  EXPECT_TRUE(validate(p, RationalField{}, {}).ok());
}

TEST(Parse, NonComposablePath) {
  auto e = parse_error_of(
      "algebra x\nvertices: 1, 2\narrow alpha: 1 -> 2\narrow beta: 1 -> 2\nrelations:\n  alpha*beta = 0\n");
  EXPECT_EQ(e.line(), 6u);
  EXPECT_GT(e.col(), 0u);
  EXPECT_NE(e.message().find("non-composable"), std::string::npos);
}

TEST(Parse, UnknownArrow) {
  auto e = parse_error_of("algebra x\nvertices: 1\narrow a: 1 -> 1\nrelations:\n  a*b = 0\n");
  EXPECT_EQ(e.line(), 5u);
  EXPECT_NE(e.message().find("b"), std::string::npos);
}

TEST(Parse, UnknownParameterInTerm) {
  auto e = parse_error_of("algebra x\nvertices: 1\narrow a: 1 -> 1\nrelations:\n  mu*a*a = 0\n");
  EXPECT_EQ(e.line(), 5u);
}

TEST(Parse, MissingEquals) {
  auto e = parse_error_of("algebra x\nvertices: 1\narrow a: 1 -> 1\nrelations:\n  a*a\n");
  EXPECT_EQ(e.line(), 5u);
}

TEST(Parse, BadArrowEndpoint) {
  auto e = parse_error_of("algebra x\nvertices: 1\narrow a: 1 -> 7\n");
  EXPECT_EQ(e.line(), 3u);
}

TEST(Parse, DuplicateLabels) {
  EXPECT_THROW(parse_presentation("algebra x\nvertices: 1, 1\n"), ParseError);
  EXPECT_THROW(parse_presentation("algebra x\nvertices: 1\narrow a: 1 -> 1\narrow a: 1 -> 1\n"), ParseError);
}

TEST(Parse, SyntaxErrorColumn) {
  auto e = parse_error_of("algebra x\nvertices: 1\narrow a: 1 -> 1\nrelations:\n  a*a = a*a*a +\n");
  EXPECT_EQ(e.line(), 5u);
  EXPECT_GE(e.col(), 15u);
}

TEST(Validate, LambdaGOverGF4) {
  auto p = parse_presentation(kLambda3p);
  ExtensionField f(parse_field_spec("GF(4)"));
  EXPECT_TRUE(validate(p, f, {{"lambda", "g"}}).ok());
}

TEST(Validate, LambdaOneViolates) {
  auto p = parse_presentation(kLambda3p);
  auto rep = validate(p, RationalField{}, {{"lambda", "1"}});
  ASSERT_FALSE(rep.ok());
  EXPECT_NE(rep.violations.front().find("constraint"), std::string::npos);
  EXPECT_FALSE(validate(p, PrimeField(3), {{"lambda", "4"}}).ok());  // 4 = 1 in GF(3)
  EXPECT_FALSE(validate(p, PrimeField(5), {{"lambda", "0"}}).ok());
}

TEST(Validate, UnboundParameter) {
  auto p = parse_presentation(kLambda3p);
  EXPECT_FALSE(validate(p, RationalField{}, {}).ok());
  EXPECT_FALSE(validate(p, RationalField{}, {{"lambda", "2"}, {"mu", "3"}}).ok());
}

TEST(Validate, AdmissibilityViolation) {
  auto p = parse_presentation(
      "algebra x\nvertices: 1, 2\narrow a: 1 -> 2\narrow b: 2 -> 1\narrow c: 1 -> 1\nrelations:\n  c = a*b\n");
  auto rep = validate(p, RationalField{}, {});
  ASSERT_FALSE(rep.ok());
  EXPECT_NE(rep.violations.front().find("length"), std::string::npos);
}

TEST(Parse, MixedEndpoints) {
  auto e = parse_error_of(
      "algebra x\nvertices: 1, 2\narrow a: 1 -> 2\narrow b: 2 -> 1\nrelations:\n  a*b = b*a\n");
  EXPECT_EQ(e.line(), 6u);
  EXPECT_NE(e.message().find("mixed"), std::string::npos);
}

TEST(RoundTrip, Lambda3p) {
  auto p = parse_presentation(kLambda3p);
  EXPECT_EQ(parse_presentation(render(p)), p);
}

TEST(RoundTrip, EveryCatalogEntry) {
  for (const auto& e : catalog()) {
    auto p = parse_presentation(e.source);
    auto again = parse_presentation(render(p));
    EXPECT_EQ(again, p) << e.name;
    EXPECT_EQ(render(again), render(p)) << e.name;
  }
}

TEST(RoundTrip, ScalarsAndSigns) {
  const char* text =
      "algebra s\nvertices: 1\narrow a: 1 -> 1\narrow b: 1 -> 1\nrelations:\n"
      "  -2/3*a*b + a*a = 1/2*b*a - b*b\n  a*a*a = 0\n  b*b*b = 0\n";
  auto p = parse_presentation(text);
  EXPECT_EQ(parse_presentation(render(p)), p);
}

TEST(Validate, EveryCatalogEntryOverDesignatedFields) {
  for (const auto& e : catalog())
    for (const auto& df : e.fields) {
      const auto spec = parse_field_spec(df.field);
      auto s = catalog_get(e.name, spec, df.params);
      std::visit([&](const auto& f) { EXPECT_TRUE(validate(s.presentation, f, s.params).ok()) << e.name; },
                 make_any_field(spec));
    }
}

TEST(Permute, RemapsArrowsAndRelations) {
  auto p = parse_presentation(kLambda3p);
  auto q = permute_presentation(p, {3, 2, 1, 0}, {3, 2, 1, 0});
  EXPECT_EQ(q.quiver.arrows[0].label, "beta");
  EXPECT_EQ(render_relation(q.quiver, q.relations[3]), render_relation(p.quiver, p.relations[0]));
  EXPECT_EQ(render_relation(q.quiver, q.relations[0]), render_relation(p.quiver, p.relations[3]));
  EXPECT_EQ(permute_presentation(q, {3, 2, 1, 0}, {3, 2, 1, 0}), p);
  EXPECT_THROW(permute_presentation(p, {0, 0, 1, 2}, {0, 1, 2, 3}), std::invalid_argument);
}
