#include <gtest/gtest.h>

#include <random>

#include "hochcalc/linalg.hpp"

using namespace hochcalc;

namespace {

template <class F, class Rng>
Matrix<F> random_matrix(const F& f, std::size_t r, std::size_t c, Rng& rng, int zero_bias = 2) {
  Matrix<F> m(f, r, c);
  std::uniform_int_distribution<int> coin(0, zero_bias);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = coin(rng) == 0 ? f.random(rng) : f.zero();
  return m;
}

// Rank-deficient on purpose: last rows are combinations of the first ones.
template <class F, class Rng>
Matrix<F> deficient_matrix(const F& f, std::size_t r, std::size_t c, std::size_t true_rank, Rng& rng) {
  auto m = random_matrix(f, r, c, rng, 0);
  for (std::size_t i = true_rank; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      auto x = f.zero();
      for (std::size_t k = 0; k < true_rank; ++k) x = f.add(x, f.mul(f.from_int(long(i + k)), m(k, j)));
      m(i, j) = x;
    }
  return m;
}

}  // namespace

TEST(Rref, IdentityRankTwo) {
  PrimeField f(5);
  EXPECT_EQ(rref(Matrix<PrimeField>::identity(f, 2)).rank(), 2u);
}

TEST(Rref, AllOnesOverGF2) {
  PrimeField f(2);
  auto m = Matrix<PrimeField>::from_rows(f, 2, {{1, 1}, {1, 1}});
  EXPECT_EQ(rref(m).rank(), 1u);
  auto k = kernel_basis(m);
  ASSERT_EQ(k.dim(), 1u);
  EXPECT_EQ(k.vector(0), (Vec<PrimeField>{1, 1}));
}

TEST(Rref, RandomRankNullityGF3) {
  PrimeField f(3);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    auto m = random_matrix(f, 5, 7, rng);
    EXPECT_EQ(rref(m).rank() + kernel_basis(m).dim(), 7u);
  }
}

TEST(Rref, EchelonShape) {
  RationalField f;
  std::mt19937_64 rng(11);
  auto m = random_matrix(f, 6, 8, rng);
  auto r = rref(m);
  for (std::size_t i = 0; i < r.rank(); ++i) {
    const auto pc = r.pivots[i];
    if (i) {
      EXPECT_GT(pc, r.pivots[i - 1]);
    }
    EXPECT_TRUE(f.equal(r.matrix(i, pc), f.one()));
    for (std::size_t k = 0; k < r.matrix.rows(); ++k)
      if (k != i) {
        EXPECT_TRUE(f.is_zero(r.matrix(k, pc)));
      }
    for (std::size_t c = 0; c < pc; ++c) EXPECT_TRUE(f.is_zero(r.matrix(i, c)));
  }
}

TEST(Kernel, IdentityIsZero) {
  RationalField f;
  EXPECT_EQ(kernel_basis(Matrix<RationalField>::identity(f, 4)).dim(), 0u);
}

TEST(Kernel, ZeroMatrix) {
  RationalField f;
  EXPECT_EQ(kernel_basis(Matrix<RationalField>(f, 3, 4)).dim(), 4u);
}

TEST(Membership, Examples) {
  PrimeField f(7);
  auto s = Subspace<PrimeField>::span(f, 3, {{1, 0, 0}, {0, 1, 0}});
  EXPECT_TRUE(membership(s, {0, 0, 0}));
  EXPECT_TRUE(membership(s, s.vector(0)));
  EXPECT_FALSE(membership(s, {0, 0, 1}));
  EXPECT_TRUE(membership(s, {3, 5, 0}));
  EXPECT_THROW(membership(s, {1, 2}), std::invalid_argument);
}

template <class F>
void run_properties(const F& f, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int t = 0; t < 25; ++t) {
    const std::size_t r = 1 + t % 7, c = 1 + (t * 5) % 9;
    auto m = t % 2 ? random_matrix(f, r, c, rng) : deficient_matrix(f, r, c, std::min(r, c) / 2, rng);
    auto once = rref(m);
    auto twice = rref(once.matrix);
    EXPECT_TRUE(once.matrix == twice.matrix);
    EXPECT_EQ(rank(m), rank(transpose(m)));
    auto k = kernel_basis(m);
    EXPECT_EQ(k.dim() + rank(m), c);
    for (std::size_t i = 0; i < k.dim(); ++i) EXPECT_TRUE(is_zero_vec(f, hochcalc::apply(m, k.vector(i))));
    // Every kernel combination stays in the kernel subspace.
    if (k.dim() >= 2) {
      auto v = k.vector(0);
      auto w = k.vector(1);
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = f.add(v[j], f.mul(f.from_int(2), w[j]));
      EXPECT_TRUE(membership(k, v));
    }
  }
}

TEST(LinalgProperties, Rationals) { run_properties(RationalField{}, 1); }
TEST(LinalgProperties, GF2) { run_properties(PrimeField(2), 2); }
TEST(LinalgProperties, GF3) { run_properties(PrimeField(3), 3); }
TEST(LinalgProperties, GF4) { run_properties(ExtensionField(parse_field_spec("GF(4)")), 4); }
TEST(LinalgProperties, GF9) { run_properties(ExtensionField(parse_field_spec("GF(9)")), 9); }

TEST(Echelon, IncrementalRankMatchesBatch) {
  PrimeField f(5);
  std::mt19937_64 rng(5);
  auto m = deficient_matrix(f, 8, 6, 4, rng);
  Echelon<PrimeField> e(f, 6);
  std::size_t inserted = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) inserted += e.insert(m.row_vec(i));
  EXPECT_EQ(inserted, rank(m));
  EXPECT_EQ(e.rank(), rank(m));
  for (std::size_t i = 0; i < m.rows(); ++i) EXPECT_TRUE(e.contains(m.row_vec(i)));
}

TEST(SparseEchelon, RankMatchesDense) {
  PrimeField f(3);
  std::mt19937_64 rng(8);
  auto m = random_matrix(f, 10, 12, rng);
  SparseEchelon<PrimeField> s(f);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    SparseEchelon<PrimeField>::SparseRow row;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!f.is_zero(m(i, j))) row.emplace_back(j, m(i, j));
    s.insert(row);
  }
  EXPECT_EQ(s.rank(), rank(m));
}

TEST(Matrix, ProductAndTranspose) {
  RationalField f;
  auto a = Matrix<RationalField>::from_rows(f, 2, {{1, 2}, {3, 4}});
  auto b = Matrix<RationalField>::from_rows(f, 2, {{0, 1}, {1, 0}});
  auto c = a * b;
  EXPECT_EQ(c(0, 0), 2);
  EXPECT_EQ(c(1, 1), 3);
  EXPECT_TRUE(transpose(transpose(a)) == a);
}
