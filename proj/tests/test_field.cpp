#include <gtest/gtest.h>

#include "support.hpp"

using namespace idcomp;
using namespace testing_support;

namespace {

const PrimeField F2(2);

TEST(Rref, IdentityIsFixed) {
  auto r = rref(FMatrix::identity(F2, 2));
  EXPECT_EQ(r.reduced, FMatrix::identity(F2, 2));
  EXPECT_EQ(r.rank, 2u);
}

TEST(Rref, ZeroMatrix) {
  FMatrix z(F2, 3, 3);
  auto r = rref(z);
  EXPECT_EQ(r.reduced, z);
  EXPECT_EQ(r.rank, 0u);
  EXPECT_TRUE(r.pivots.empty());
}

TEST(Rref, AllOnesOverF2) {
  auto m = FMatrix::from_rows(F2, {{1, 1}, {1, 1}});
  auto r = rref(m);
  // Row space oracle: every vector of F_2^2 in the span of m is in the span of the result and back.
  auto span = [](const FMatrix& a) {
    std::vector<std::vector<Elem>> out;
    for_each_vector(F2, a.rows(), [&](const std::vector<Elem>& t) {
      std::vector<Elem> v(a.cols(), 0);
      for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) v[j] = F2.add(v[j], F2.mul(t[i], a(i, j)));
      }
      out.push_back(v);
      return false;
    });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  };
  EXPECT_EQ(span(m), span(r.reduced));
  EXPECT_EQ(r.reduced, FMatrix::from_rows(F2, {{1, 1}, {0, 0}}));
  EXPECT_EQ(r.rank, 1u);
}

TEST(Solve, IdentitySystem) {
  auto b = FMatrix::column(F2, {1, 0, 1});
  auto s = solve(FMatrix::identity(F2, 3), b);
  ASSERT_TRUE(s);
  EXPECT_EQ(s->particular, b);
  EXPECT_EQ(s->kernel.cols(), 0u);
}

TEST(Solve, ZeroSystemHasFullKernel) {
  auto s = solve(FMatrix(F2, 2, 2), FMatrix(F2, 2, 1));
  ASSERT_TRUE(s);
  EXPECT_EQ(s->particular, FMatrix(F2, 2, 1));
  EXPECT_EQ(s->kernel.cols(), 2u);
}

TEST(Solve, UpperTriangularOverF2) {
  auto a = FMatrix::from_rows(F2, {{1, 1}, {0, 1}});
  auto b = FMatrix::column(F2, {1, 0});
  auto s = solve(a, b);
  ASSERT_TRUE(s);
  EXPECT_EQ(a * s->particular, b);
  EXPECT_EQ(s->particular, FMatrix::column(F2, {1, 0}));
}

TEST(Solve, InconsistentSystem) {
  auto a = FMatrix::from_rows(F2, {{1, 1}, {1, 1}});
  EXPECT_FALSE(solve(a, FMatrix::column(F2, {1, 0})));
}

TEST(Inverse, Identity) {
  auto i = inverse(FMatrix::identity(F2, 3));
  ASSERT_TRUE(i);
  EXPECT_EQ(*i, FMatrix::identity(F2, 3));
}

TEST(Inverse, ShearIsSelfInverseOverF2) {
  auto m = FMatrix::from_rows(F2, {{1, 1}, {0, 1}});
  EXPECT_EQ(m * m, FMatrix::identity(F2, 2));
  auto i = inverse(m);
  ASSERT_TRUE(i);
  EXPECT_EQ(*i, m);
}

TEST(Inverse, SingularAndNonSquare) {
  EXPECT_FALSE(inverse(FMatrix::from_rows(F2, {{1, 1}, {1, 1}})));
  EXPECT_FALSE(inverse(FMatrix(F2, 2, 3)));
  EXPECT_TRUE(inverse(FMatrix(F2, 0, 0)));
}

TEST(FieldProperties, SolveAgreesWithExhaustiveSearch) {
  std::mt19937_64 rng(101);
  for (unsigned p : {2u, 3u}) {
    PrimeField F(p);
    for (int trial = 0; trial < 300; ++trial) {
      std::size_t rows = rng() % 7, cols = rng() % 7;
      if (p == 3 && cols > 5) cols = 5;
      auto a = random_matrix(rng, F, rows, cols);
      auto b = random_matrix(rng, F, rows, 1);
      if (trial % 3 == 0 && cols > 0) {
        // Consistent by construction half of the time.
        b = a * random_matrix(rng, F, cols, 1);
      }
      std::size_t hits = 0;
      for_each_vector(F, cols, [&](const std::vector<Elem>& x) {
        if (a * FMatrix::column(F, x) == b) ++hits;
        return false;
      });
      auto s = solve(a, b);
      ASSERT_EQ(s.has_value(), hits > 0);
      if (!s) continue;
      EXPECT_EQ(a * s->particular, b);
      EXPECT_EQ(a * s->kernel, FMatrix(F, rows, s->kernel.cols()));
      EXPECT_EQ(rank(s->kernel), s->kernel.cols());
      // Solution count is p^dim ker.
      std::size_t expected = 1;
      for (std::size_t k = 0; k < s->kernel.cols(); ++k) expected *= p;
      EXPECT_EQ(hits, expected);
    }
  }
}

TEST(FieldProperties, RrefIsIdempotent) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    auto m = random_matrix(rng, PrimeField(trial % 2 ? 5 : 2), rng() % 7, rng() % 7);
    auto once = rref(m);
    auto twice = rref(once.reduced);
    EXPECT_EQ(once.reduced, twice.reduced);
    EXPECT_EQ(once.rank, twice.rank);
    EXPECT_EQ(once.rank, once.pivots.size());
  }
}

TEST(FieldProperties, InverseRoundTrip) {
  std::mt19937_64 rng(13);
  int found = 0;
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t k = rng() % 6;
    PrimeField F(trial % 2 ? 3 : 2);
    auto m = random_matrix(rng, F, k, k);
    auto i = inverse(m);
    EXPECT_EQ(i.has_value(), rank(m) == k);
    if (!i) continue;
    ++found;
    EXPECT_EQ(m * *i, FMatrix::identity(F, k));
    EXPECT_EQ(*i * m, FMatrix::identity(F, k));
  }
  EXPECT_GT(found, 50);
}

}  // namespace
