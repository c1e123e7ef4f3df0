#include <gtest/gtest.h>

#include "hochcalc/bar_complex.hpp"
#include "hochcalc/catalog.hpp"
#include "hochcalc/hochschild.hpp"

using namespace hochcalc;

namespace {

template <class F>
Algebra<F> build_entry(const std::string& name, const F& f, const ParamBindings& params = {}) {
  auto s = catalog_get(name, f.spec(), params);
  return build(s.presentation, f, s.params);
}

}  // namespace

TEST(Bar, Lambda3pOverGF4) {
  auto b = hh_via_bar(build_entry("lambda3p", ExtensionField(parse_field_spec("GF(4)")), {{"lambda", "g"}}));
  EXPECT_EQ(b.h0, 6u);
  EXPECT_EQ(b.h1, 6u);
  ASSERT_TRUE(b.h2.has_value());
  EXPECT_EQ(*b.h2, 6u);
}

TEST(Bar, Lambda1OverGF3) {
  auto b = hh_via_bar(build_entry("lambda1", PrimeField(3)));
  EXPECT_EQ(b.h0, 5u);
  EXPECT_EQ(b.h1, 3u);
  ASSERT_TRUE(b.h2.has_value());
  EXPECT_EQ(*b.h2, 3u);
}

TEST(Bar, Semisimple) {
  auto A = build(parse_presentation("algebra kk\nvertices: 1, 2\nrelations:\n"), RationalField{});
  auto b = hh_via_bar(A);
  EXPECT_EQ(b.h0, 2u);
  EXPECT_EQ(b.h1, 0u);
  ASSERT_TRUE(b.h2.has_value());
  EXPECT_EQ(*b.h2, 0u);
}

TEST(Bar, TruncatedPolynomialMatchesClosedForm) {
  // k[x]/(x^n): HH^0 = n, HH^1 = HH^2 = n-1 when char does not divide n, else n.
  for (std::size_t n : {2u, 3u, 4u}) {
    std::string rel = "a";
    for (std::size_t i = 1; i < n; ++i) rel += "*a";
    auto p = parse_presentation("algebra t\nvertices: 1\narrow a: 1 -> 1\nrelations:\n  " + rel + " = 0\n");
    for (std::uint32_t ch : {2u, 3u, 5u}) {
      PrimeField f(ch);
      auto A = build(p, f);
      auto b = hh_via_bar(A);
      const std::size_t expect = (n % ch == 0) ? n : n - 1;
      EXPECT_EQ(b.h0, n);
      EXPECT_EQ(b.h1, expect) << n << " " << ch;
      ASSERT_TRUE(b.h2.has_value());
      EXPECT_EQ(*b.h2, expect) << n << " " << ch;
      auto r = hh_dims(A);
      EXPECT_EQ(r.h1, b.h1);
      EXPECT_EQ(r.h2, *b.h2);
    }
  }
}

TEST(Bar, SizeGuardLeavesH2Unset) {
  auto A = build_entry("lambda9p", RationalField{});
  auto b = hh_via_bar(A, 2, 10);
  EXPECT_FALSE(b.h2.has_value());
  EXPECT_NE(b.note.find("size guard"), std::string::npos);
  auto one = hh_via_bar(A, 1);
  EXPECT_FALSE(one.h2.has_value());
  EXPECT_EQ(one.h0, b.h0);
}

TEST(Bar, AgreesWithResolutionOnEveryEntry) {
  for (const auto& e : catalog())
    for (const auto& df : e.fields) {
      const auto spec = parse_field_spec(df.field);
      auto s = catalog_get(e.name, spec, df.params);
      std::visit(
          [&](const auto& f) {
            auto A = build(s.presentation, f, s.params);
            const std::string tag = e.name + "@" + df.field;
            auto r = hh_dims(A);
            auto b = hh_via_bar(A);
            EXPECT_EQ(b.h0, r.h0) << tag;
            EXPECT_EQ(b.h1, r.h1) << tag;
            if (A.dim() <= 28) {
              ASSERT_TRUE(b.h2.has_value()) << tag;
            }
            if (b.h2) {
              EXPECT_EQ(*b.h2, r.h2) << tag;
            }
            EXPECT_EQ(b.cochain_dims.at(0), r.inter.hom_p0) << tag;
          },
          make_any_field(spec));
    }
}
