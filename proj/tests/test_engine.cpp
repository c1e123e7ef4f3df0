#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "hochcalc/algebra.hpp"
#include "hochcalc/catalog.hpp"

using namespace hochcalc;

namespace {

template <class F>
Algebra<F> build_entry(const std::string& name, const F& f, const ParamBindings& params = {}) {
  auto s = catalog_get(name, f.spec(), params);
  return build(s.presentation, f, s.params);
}

Algebra<RationalField> semisimple_kk() {
  return build(parse_presentation("algebra kk\nvertices: 1, 2\nrelations:\n"), RationalField{});
}

template <class F>
typename Algebra<F>::Element word(const Algebra<F>& A, const std::string& text) {
  return A.path_element(parse_path(A.quiver(), text));
}

}  // namespace

TEST(Build, Lambda3pGF3) {
  auto A = build_entry("lambda3p", PrimeField(3), {{"lambda", "2"}});
  EXPECT_EQ(A.dim(), 12u);
  EXPECT_EQ(A.cartan_matrix(), (std::vector<std::vector<std::size_t>>{{4, 2}, {2, 4}}));
}

TEST(Build, SemisimpleDimTwo) {
  auto A = semisimple_kk();
  EXPECT_EQ(A.dim(), 2u);
  EXPECT_EQ(A.cartan_matrix(), (std::vector<std::vector<std::size_t>>{{1, 0}, {0, 1}}));
}

TEST(Build, Lambda10pRationals) {
  auto A = build_entry("lambda10p", RationalField{});
  EXPECT_EQ(A.dim(), 35u);
  auto C = A.cartan_matrix();
  std::vector<std::size_t> row_sums;
  for (const auto& r : C) row_sums.push_back(std::accumulate(r.begin(), r.end(), std::size_t{0}));
  EXPECT_EQ(row_sums, (std::vector<std::size_t>{9, 8, 8, 5, 5}));
}

TEST(Build, Lambda1pCartan) {
  auto A = build_entry("lambda1p", PrimeField(5));
  EXPECT_EQ(A.cartan_matrix(), (std::vector<std::vector<std::size_t>>{{3, 3}, {3, 5}}));
}

TEST(Build, InfiniteDimensionalRejected) {
  auto p = parse_presentation("algebra loop\nvertices: 1\narrow a: 1 -> 1\narrow b: 1 -> 1\nrelations:\n  a*b = 0\n");
  try {
    build(p, PrimeField(2));
    FAIL() << "expected a build error";
  } catch (const BuildError& e) {
    EXPECT_NE(std::string(e.what()).find("not finite-dimensional"), std::string::npos) << e.what();
  }
}

TEST(Build, DegreeCapReported) {
  auto s = catalog_get("lambda10", parse_field_spec("GF(2)"));
  BuildOptions opts;
  opts.degree_cap = 3;
  try {
    build(s.presentation, PrimeField(2), s.params, opts);
    FAIL() << "expected a cap failure";
  } catch (const BuildError& e) {
    EXPECT_NE(std::string(e.what()).find("not certified at cap 3"), std::string::npos) << e.what();
  }
}

TEST(Build, ResolutionIdealMismatch) {
  // a*a is not in the ideal generated by a^3.
  auto p = parse_presentation(
      "algebra m\nvertices: 1\narrow a: 1 -> 1\nrelations:\n  a*a*a = 0\nresolution-relations:\n  a*a = 0\n");
  try {
    build(p, RationalField{});
    FAIL() << "expected an ideal mismatch";
  } catch (const BuildError& e) {
    EXPECT_NE(std::string(e.what()).find("ideal mismatch"), std::string::npos) << e.what();
  }
}

TEST(Build, ResolutionSubsetAccepted) {
  // lambda1, lambda3, lambda10 use strict subsets of their defining relations.
  for (auto [name, field] : {std::pair{"lambda1", "GF(3)"}, {"lambda3", "GF(4)"}, {"lambda10", "GF(2)"}}) {
    const auto spec = parse_field_spec(field);
    auto s = catalog_get(name, spec);
    EXPECT_LT(s.presentation.resolution_relations.size(), s.presentation.relations.size()) << name;
    std::visit(
        [&](const auto& f) {
          auto A = build(s.presentation, f, s.params);
          EXPECT_TRUE(A.certificate().resolution_ideal_checked) << name;
        },
        make_any_field(spec));
  }
}

TEST(Multiply, Examples) {
  auto A = build_entry("lambda3p", PrimeField(3), {{"lambda", "2"}});
  EXPECT_EQ(A.multiply(word(A, "sigma"), word(A, "gamma")), word(A, "alpha*alpha"));
  EXPECT_EQ(A.multiply(word(A, "e_1"), word(A, "e_1")), word(A, "e_1"));
  EXPECT_EQ(A.multiply(A.unit(), word(A, "beta")), word(A, "beta"));
  auto B = build_entry("lambda5p", RationalField{});
  EXPECT_EQ(B.multiply(word(B, "beta"), word(B, "delta")), B.zero());
}

TEST(Multiply, OrientationMakesAlphaSquaredNormal) {
  auto A = build_entry("lambda3p", PrimeField(3), {{"lambda", "2"}});
  EXPECT_TRUE(A.index_of(parse_path(A.quiver(), "alpha*alpha")).has_value());
  EXPECT_FALSE(A.index_of(parse_path(A.quiver(), "sigma*gamma")).has_value());
}

TEST(Center, Examples) {
  EXPECT_EQ(center(build_entry("lambda3p", PrimeField(3), {{"lambda", "2"}})).dim, 6u);
  EXPECT_EQ(center(build_entry("lambda10p", RationalField{})).dim, 2u);
  EXPECT_EQ(center(semisimple_kk()).dim, 2u);
}

TEST(Center, BasisCommutesWithEverything) {
  auto A = build_entry("lambda9p", PrimeField(3));
  auto c = center(A);
  for (const auto& z : c.basis) {
    EXPECT_TRUE(in_center(A, z));
    for (std::size_t i = 0; i < A.dim(); ++i)
      EXPECT_EQ(A.multiply(z, A.basis_element(i)), A.multiply(A.basis_element(i), z));
  }
}

TEST(Center, Lambda3pContainsListedElements) {
  auto A = build_entry("lambda3p", PrimeField(5), {{"lambda", "2"}});
  auto sum = word(A, "alpha");
  const auto b = word(A, "beta");
  for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = A.field().add(sum[i], b[i]);
  EXPECT_TRUE(in_center(A, sum));
  for (auto w : {"alpha*alpha", "alpha*alpha*alpha", "beta*beta", "beta*beta*beta"})
    EXPECT_TRUE(in_center(A, A.path_element(parse_path(A.quiver(), w)))) << w;
  EXPECT_FALSE(in_center(A, word(A, "alpha")));
}

TEST(Nakayama, Examples) {
  EXPECT_TRUE(nakayama_permutation(build_entry("lambda9", PrimeField(2))).is_identity());
  auto n10 = nakayama_permutation(build_entry("lambda10", PrimeField(2)));
  ASSERT_TRUE(n10.permutation.has_value());
  EXPECT_FALSE(n10.is_identity());
  EXPECT_TRUE(nakayama_permutation(build_entry("lambda3p", PrimeField(3), {{"lambda", "2"}})).is_identity());
}

TEST(Nakayama, NonSelfInjectiveEvidence) {
  // Path algebra of 1 -> 2: e_1 A has socle S_2 but e_2 A = S_2 too.
  auto A = build(parse_presentation("algebra a2\nvertices: 1, 2\narrow a: 1 -> 2\nrelations:\n"), RationalField{});
  auto n = nakayama_permutation(A);
  EXPECT_FALSE(n.permutation.has_value());
  EXPECT_FALSE(n.evidence.empty());
}

TEST(Symmetry, Examples) {
  EXPECT_EQ(symmetric_certify(build_entry("lambda1p", PrimeField(3))).verdict, SymmetryVerdict::certified);
  EXPECT_EQ(symmetric_certify(build_entry("lambda10", PrimeField(2))).verdict, SymmetryVerdict::refuted_by_nakayama);
  EXPECT_EQ(symmetric_certify(build_entry("lambda9", PrimeField(2))).verdict, SymmetryVerdict::refuted_exhaustive);
}

TEST(Symmetry, CertifiedFunctionalIsNondegenerateTrace) {
  auto A = build_entry("lambda3p", ExtensionField(parse_field_spec("GF(4)")), {{"lambda", "g"}});
  auto r = symmetric_certify(A);
  ASSERT_EQ(r.verdict, SymmetryVerdict::certified);
  EXPECT_TRUE(form_nondegenerate(A, r.functional));
}

TEST(Radical, NilpotentAndSpannedByPositiveWords) {
  for (auto name : {"lambda3p", "lambda6p", "lambda9p", "lambda10p"}) {
    auto A = build_entry(name, PrimeField(3));
    auto series = radical_series(A);
    ASSERT_FALSE(series.empty());
    for (std::size_t i = 1; i < series.size(); ++i) EXPECT_LT(series[i], series[i - 1]) << name;
    std::size_t positive = 0;
    for (const auto& w : A.basis()) positive += !w.is_trivial();
    EXPECT_EQ(series.front(), positive) << name;
    EXPECT_EQ(nilpotency_index(A), series.size() + 1) << name;
  }
}

TEST(Properties, AssociativityOnRandomElements) {
  std::mt19937_64 rng(17);
  auto A = build_entry("lambda7p", PrimeField(5));
  const auto& f = A.field();
  auto rnd = [&] {
    auto x = A.zero();
    for (auto& c : x) c = f.random(rng);
    return x;
  };
  for (int t = 0; t < 30; ++t) {
    auto a = rnd(), b = rnd(), c = rnd();
    EXPECT_EQ(A.multiply(A.multiply(a, b), c), A.multiply(a, A.multiply(b, c)));
  }
}

TEST(Properties, CertificateCoversAllBasisTriples) {
  auto A = build_entry("lambda6p", RationalField{});
  EXPECT_GT(A.certificate().associativity_triples, 0u);
  EXPECT_GT(A.certificate().rules, 0u);
}

TEST(Properties, CartanSumEqualsDimForEveryEntry) {
  for (const auto& e : catalog())
    for (const auto& df : e.fields) {
      const auto spec = parse_field_spec(df.field);
      auto s = catalog_get(e.name, spec, df.params);
      std::visit(
          [&](const auto& f) {
            auto A = build(s.presentation, f, s.params);
            std::size_t sum = 0;
            for (const auto& r : A.cartan_matrix()) sum += std::accumulate(r.begin(), r.end(), std::size_t{0});
            EXPECT_EQ(sum, A.dim()) << e.name << "@" << df.field;
          },
          make_any_field(spec));
    }
}

TEST(Properties, ArrowOrderInvariance) {
  for (const auto& e : catalog()) {
    const auto& df = e.fields.front();
    const auto spec = parse_field_spec(df.field);
    auto s = catalog_get(e.name, spec, df.params);
    const auto na = s.presentation.quiver.num_arrows();
    std::vector<std::size_t> rev(na), rel(s.presentation.relations.size());
    std::iota(rev.rbegin(), rev.rend(), 0);
    std::iota(rel.rbegin(), rel.rend(), 0);
    auto q = permute_presentation(s.presentation, rev, rel);
    std::visit(
        [&](const auto& f) {
          auto A = build(s.presentation, f, s.params);
          auto B = build(q, f, s.params);
          EXPECT_EQ(A.dim(), B.dim()) << e.name;
          EXPECT_EQ(A.cartan_matrix(), B.cartan_matrix()) << e.name;
          EXPECT_EQ(center(A).dim, center(B).dim) << e.name;
        },
        make_any_field(spec));
  }
}

TEST(Properties, LambdaSamplesAgree) {
  // Several admissible lambda values over the same field give the same shape.
  for (auto lam : {"2", "3", "4", "1/2"}) {
    auto A = build_entry("lambda3p", RationalField{}, {{"lambda", lam}});
    EXPECT_EQ(A.dim(), 12u) << lam;
    EXPECT_EQ(center(A).dim, 6u) << lam;
  }
  for (auto lam : {"g", "g+1"}) {
    auto A = build_entry("lambda3", ExtensionField(parse_field_spec("GF(4)")), {{"lambda", lam}});
    EXPECT_EQ(A.dim(), 12u) << lam;
  }
}
