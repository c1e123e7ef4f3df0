#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "hochcalc/catalog.hpp"
#include "hochcalc/hochschild.hpp"

using namespace hochcalc;

namespace {

template <class F>
Algebra<F> build_entry(const std::string& name, const F& f, const ParamBindings& params = {}) {
  auto s = catalog_get(name, f.spec(), params);
  return build(s.presentation, f, s.params);
}

template <class F>
LinComb<F> lincomb(const Algebra<F>& A, std::initializer_list<std::pair<const char*, long>> terms) {
  LinComb<F> lc;
  for (const auto& [w, c] : terms) add_term(A.field(), lc, parse_path(A.quiver(), w), A.field().from_int(c));
  return lc;
}

template <class F>
bool all_zero(const F& f, const Matrix<F>& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (!is_zero_vec(f, m.row_vec(i))) return false;
  return true;
}

// Runs fn over every catalog entry and each of its designated fields.
template <class Fn>
void for_each_designated(Fn fn) {
  for (const auto& e : catalog())
    for (const auto& df : e.fields) {
      const auto spec = parse_field_spec(df.field);
      auto s = catalog_get(e.name, spec, df.params);
      std::visit(
          [&](const auto& f) {
            auto A = build(s.presentation, f, s.params);
            fn(e.name + "@" + df.field, A);
          },
          make_any_field(spec));
    }
}

}  // namespace

TEST(Rho, SingleArrow) {
  auto A = build_entry("lambda3p", PrimeField(3), {{"lambda", "2"}});
  auto P1 = make_P1(A);
  EXPECT_EQ(rho(A, P1, lincomb(A, {{"sigma", 1}})), P1.generator(1));
}

TEST(Rho, Lambda3pFirstRelation) {
  auto A = build_entry("lambda3p", PrimeField(3), {{"lambda", "2"}});
  auto P1 = make_P1(A);
  auto got = rho(A, P1, lincomb(A, {{"alpha*alpha", 1}, {"sigma*gamma", -1}}));
  EXPECT_EQ(got, parse_bimodule_element(A, P1, "e_1|alpha + alpha|e_1 - e_1|gamma - sigma|e_1"))
      << P1.render(got);
}

TEST(Rho, Lambda1pLengthThree) {
  auto A = build_entry("lambda1p", PrimeField(5));
  auto P1 = make_P1(A);
  auto got = rho(A, P1, lincomb(A, {{"beta*alpha*gamma", 1}}));
  EXPECT_EQ(got, parse_bimodule_element(A, P1, "e_1|alpha*gamma + beta|gamma + beta*alpha|e_1")) << P1.render(got);
}

TEST(Rho, Lambda9pVertexTwoRelation) {
  auto A = build_entry("lambda9p", RationalField{});
  auto P1 = make_P1(A);
  auto got = rho(A, P1, lincomb(A, {{"xi*epsilon", 1}}));
  EXPECT_EQ(got, parse_bimodule_element(A, P1, "e_2|epsilon + xi|e_2"));
  EXPECT_THROW(rho(A, P1, lincomb(A, {{"e_1", 1}})), std::invalid_argument);
}

TEST(BimoduleElement, ParseErrors) {
  auto A = build_entry("lambda3p", PrimeField(3), {{"lambda", "2"}});
  auto P1 = make_P1(A);
  EXPECT_THROW(parse_bimodule_element(A, P1, "alpha"), ParseError);
  EXPECT_THROW(parse_bimodule_element(A, P1, "e_1|e_1@3"), ParseError);
  EXPECT_THROW(parse_bimodule_element(A, P1, "e_1|e_1 +"), ParseError);
}

TEST(Differentials, Lambda3pKernelOfD1) {
  auto A = build_entry("lambda3p", PrimeField(3), {{"lambda", "2"}});
  auto r = hh_dims(A);
  EXPECT_EQ(r.inter.ker_d1, 84u);
  EXPECT_EQ(r.inter.rank_d2, 84u);
  EXPECT_EQ(r.inter.ker_d2, 60u);
}

TEST(Differentials, Lambda9pKernelOfD2) {
  auto A = build_entry("lambda9p", RationalField{});
  EXPECT_EQ(kernel_basis(d2_matrix(A)).dim(), 28u);
}

TEST(Differentials, ComplexAndCocomplexOnEveryEntry) {
  for_each_designated([](const std::string& name, const auto& A) {
    const auto& f = A.field();
    EXPECT_TRUE(all_zero(f, d1_matrix(A) * d2_matrix(A))) << name;
    EXPECT_TRUE(all_zero(f, delta1(A) * delta0(A))) << name;
    auto P1 = make_P1(A);
    const auto d1 = d1_matrix(A);
    for (const auto& r : A.relations()) EXPECT_TRUE(is_zero_vec(f, hochcalc::apply(d1, rho(A, P1, r)))) << name;
  });
}

TEST(Differentials, HomDimensionsReadOffCartan) {
  for_each_designated([](const std::string& name, const auto& A) {
    const auto C = A.cartan_matrix();
    auto r = hh_dims(A);
    std::size_t h0 = 0, h1 = 0;
    for (std::size_t v = 0; v < A.num_vertices(); ++v) h0 += C[v][v];
    for (const auto& a : A.quiver().arrows) h1 += C[a.source][a.target];
    EXPECT_EQ(r.inter.hom_p0, h0) << name;
    EXPECT_EQ(r.inter.hom_p1, h1) << name;
    // P2 -> P1 -> P0 -> A -> 0 is exact.
    EXPECT_EQ(r.inter.rank_d1 + A.dim(), r.inter.dim_p0) << name;
    EXPECT_EQ(r.inter.rank_d2, r.inter.ker_d1) << name;
    EXPECT_EQ(r.h0, center(A).dim) << name;
  });
}

TEST(HomOmega2, Examples) {
  EXPECT_EQ(hom_omega2_dim(build_entry("lambda3p", PrimeField(3), {{"lambda", "2"}})), 10u);
  EXPECT_EQ(hom_omega2_dim(build_entry("lambda6p", RationalField{})), 5u);
  EXPECT_EQ(hom_omega2_dim(build_entry("lambda10p", RationalField{})), 8u);
}

TEST(HH, Lambda3pOverGF4) {
  auto r = hh_dims(build_entry("lambda3p", ExtensionField(parse_field_spec("GF(4)")), {{"lambda", "g"}}));
  EXPECT_EQ(r.h0, 6u);
  EXPECT_EQ(r.h1, 6u);
  EXPECT_EQ(r.h2, 6u);
  EXPECT_EQ(r.inter.ker_delta1, 8u);
}

TEST(HH, Lambda3pOverGF3) {
  auto r = hh_dims(build_entry("lambda3p", PrimeField(3), {{"lambda", "2"}}));
  EXPECT_EQ(r.inter.ker_delta1, 6u);
  EXPECT_EQ(r.h0, 6u);
  EXPECT_EQ(r.h1, 4u);
  EXPECT_EQ(r.h2, 4u);
}

TEST(HH, Lambda9OverGF2) {
  auto r = hh_dims(build_entry("lambda9", PrimeField(2)));
  EXPECT_EQ(r.h0, 5u);
  EXPECT_EQ(r.h1, 1u);
  EXPECT_EQ(r.h2, 2u);
}

TEST(HH, Lambda10pRationalIntermediates) {
  auto r = hh_dims(build_entry("lambda10p", RationalField{}));
  EXPECT_EQ(r.inter.ker_delta1, 8u);
  EXPECT_EQ(r.inter.hom_p1, 16u);
  EXPECT_EQ(r.inter.hom_omega2, 8u);
}

TEST(HH, SemisimpleIsCenterOnly) {
  auto A = build(parse_presentation("algebra kk\nvertices: 1, 2\nrelations:\n"), RationalField{});
  auto r = hh_dims(A);
  EXPECT_EQ(r.h0, 2u);
  EXPECT_EQ(r.h1, 0u);
  EXPECT_EQ(r.h2, 0u);
}

TEST(HH, RelationOrderInvariance) {
  auto s = catalog_get("lambda3p", parse_field_spec("GF(3)"), {{"lambda", "2"}});
  const auto base = hh_dims(build(s.presentation, PrimeField(3), s.params));
  const std::size_t nr = s.presentation.relations.size();
  const std::size_t na = s.presentation.quiver.num_arrows();
  std::mt19937_64 rng(31);
  for (int t = 0; t < 4; ++t) {
    std::vector<std::size_t> ao(na), ro(nr);
    std::iota(ao.begin(), ao.end(), 0);
    std::iota(ro.begin(), ro.end(), 0);
    std::shuffle(ao.begin(), ao.end(), rng);
    std::shuffle(ro.begin(), ro.end(), rng);
    auto q = permute_presentation(s.presentation, ao, ro);
    auto r = hh_dims(build(q, PrimeField(3), s.params));
    EXPECT_EQ(r.h0, base.h0);
    EXPECT_EQ(r.h1, base.h1);
    EXPECT_EQ(r.h2, base.h2);
    EXPECT_EQ(r.inter.ker_delta1, base.inter.ker_delta1);
  }
}

TEST(HH, MissingResolutionGeneratorDetected) {
  // b*b is dropped from the resolution block, so d2 cannot cover ker d1.
  auto p = parse_presentation(
      "algebra m\nvertices: 1\narrow a: 1 -> 1\narrow b: 1 -> 1\nrelations:\n"
      "  a*a = 0\n  b*b = 0\n  a*b = 0\n  b*a = 0\n"
      "resolution-relations:\n  a*a = 0\n  a*b = 0\n  b*a = 0\n");
  auto A = build(p, RationalField{});
  try {
    hh_dims(A);
    FAIL() << "expected an exactness failure";
  } catch (const BuildError& e) {
    EXPECT_NE(std::string(e.what()).find("do not generate the kernel of d1"), std::string::npos) << e.what();
  }
}

TEST(Generators, Lambda3pGamma) {
  auto A = build_entry("lambda3p", PrimeField(3), {{"lambda", "2"}});
  auto P2 = make_P2(A);
  std::vector<Vec<PrimeField>> gens;
  for (const auto& [name, text] : detail::gens_l3().elements) gens.push_back(parse_bimodule_element(A, P2, text));
  auto rep = check_omega3_generators(A, gens);
  EXPECT_EQ(rep.kernel_dim, 60u);
  EXPECT_EQ(rep.closure_dim, 60u);
  EXPECT_TRUE(rep.ok());
}

TEST(Generators, Lambda9pZeta) {
  auto A = build_entry("lambda9p", RationalField{});
  auto P2 = make_P2(A);
  const auto& e = catalog_entry("lambda9p");
  ASSERT_FALSE(e.expected.generators.empty());
  std::vector<Vec<RationalField>> gens;
  for (const auto& [name, text] : e.expected.generators.front().elements)
    gens.push_back(parse_bimodule_element(A, P2, text));
  auto rep = check_omega3_generators(A, gens);
  EXPECT_EQ(rep.kernel_dim, 28u);
  EXPECT_EQ(rep.closure_dim, 28u);
  EXPECT_TRUE(rep.ok());
  // Dropping one generator loses part of the kernel.
  gens.pop_back();
  EXPECT_FALSE(check_omega3_generators(A, gens).ok());
}

TEST(Generators, EmptyListOnSemisimple) {
  auto A = build(parse_presentation("algebra kk\nvertices: 1, 2\nrelations:\n"), RationalField{});
  auto rep = check_omega3_generators(A, {});
  EXPECT_EQ(rep.kernel_dim, 0u);
  EXPECT_TRUE(rep.ok());
}

TEST(Top, KernelOfD1IsGeneratedByRelations) {
  auto A = build_entry("lambda3p", PrimeField(3), {{"lambda", "2"}});
  auto top = bimodule_top(make_P1(A), kernel_basis(d1_matrix(A)));
  EXPECT_EQ(top, (TopTable{{{0, 0}, 1}, {{0, 1}, 1}, {{1, 0}, 1}, {{1, 1}, 1}}));
}

TEST(Top, Lambda9pOmega3IsDiagonal) {
  auto A = build_entry("lambda9p", RationalField{});
  auto top = bimodule_top(make_P2(A), kernel_basis(d2_matrix(A)));
  EXPECT_EQ(top, (TopTable{{{0, 0}, 1}, {{1, 1}, 1}, {{2, 2}, 1}, {{3, 3}, 1}}));
}

TEST(Resolution, Lambda3pOmegaDims) {
  auto A = build_entry("lambda3p", PrimeField(3), {{"lambda", "2"}});
  auto r3 = extend_resolution(A, 3);
  ASSERT_GE(r3.degrees.size(), 4u);
  EXPECT_EQ(r3.degrees[3].dim_omega, 60u);
  auto r4 = extend_resolution(A, 4);
  ASSERT_GE(r4.degrees.size(), 5u);
  EXPECT_EQ(r4.degrees[4].dim_omega, 12u);
  std::size_t gens = 0;
  for (const auto& [pair, m] : r4.degrees[4].top) gens += m;
  EXPECT_EQ(gens, 2u);
  EXPECT_FALSE(r4.truncated);
}

TEST(Resolution, SemisimpleTerminates) {
  auto A = build(parse_presentation("algebra kk\nvertices: 1, 2\nrelations:\n"), RationalField{});
  auto r = extend_resolution(A, 3);
  EXPECT_TRUE(r.terminated);
  EXPECT_THROW(extend_resolution(A, kMaxResolutionTerms + 1), std::invalid_argument);
}

TEST(Resolution, AgreesWithHHBookkeeping) {
  auto A = build_entry("lambda6p", PrimeField(3));
  auto r = extend_resolution(A, 3);
  auto h = hh_dims(A);
  ASSERT_GE(r.degrees.size(), 4u);
  EXPECT_EQ(r.degrees[1].dim_p, h.inter.dim_p1);
  EXPECT_EQ(r.degrees[2].dim_p, h.inter.dim_p2);
  EXPECT_EQ(r.degrees[2].dim_omega, h.inter.ker_d1);
  EXPECT_EQ(r.degrees[3].dim_omega, h.inter.ker_d2);
}
