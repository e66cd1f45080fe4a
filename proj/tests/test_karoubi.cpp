#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

using namespace idcomp;
using namespace testing_support;

namespace {

// Rank over F_2 by counting the distinct images of all 2^cols vectors.
std::size_t brute_rank(const Mor& m) {
  const auto rows = m.dst.size(), cols = m.src.size();
  std::set<std::vector<Elem>> images;
  for (std::size_t v = 0; v < (1u << cols); ++v) {
    std::vector<Elem> out(rows, 0);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) out[r] ^= m.coords[r * cols + c] & ((v >> c) & 1);
    }
    images.insert(out);
  }
  std::size_t k = 0;
  while ((1u << k) < images.size()) ++k;
  return k;
}

KMor random_kmor(std::mt19937_64& rng, const KaroubiCategory& K, const KObj& x, const KObj& y) {
  const auto& C = K.base();
  auto p = random_mor(rng, C, x.base, y.base);
  return K.make_morphism(x, y, C.compose(y.e, C.compose(p, x.e)));
}

std::vector<KObj> battery(const KaroubiCategory& K, std::size_t dims) {
  return envelope_battery(K, objects_up_to(K.base().presentation().size(), dims), 1 << 16);
}

TEST(Karoubi, IdentityIsTheIdempotent) {
  KaroubiCategory K(oracles::free_module());
  auto x = K.make_object(vpow(1), oracles::free_module_x(K.base(), 1));
  EXPECT_EQ(K.identity(x).p, x.e);
  EXPECT_NE(K.identity(x).p, K.base().identity(vpow(1)));
}

TEST(Karoubi, CheckedConstructorsReject) {
  KaroubiCategory K(oracles::vect());
  const auto& C = K.base();
  EXPECT_THROW(K.make_object(vpow(2), vmat(C, 2, 2, {0, 1, 0, 0})), std::invalid_argument);
  auto x = K.make_object(vpow(2), vmat(C, 2, 2, {1, 0, 0, 0}));
  // [0 1] does not absorb e_x = diag(1, 0) on the right.
  EXPECT_THROW(K.make_morphism(x, K.include(vpow(1)), vmat(C, 1, 2, {0, 1})), std::invalid_argument);
  EXPECT_NO_THROW(K.make_morphism(x, K.include(vpow(1)), vmat(C, 1, 2, {1, 0})));
}

TEST(Karoubi, ComplementOfTheFreeModuleIdempotent) {
  KaroubiCategory K(oracles::free_module());
  const auto& C = K.base();
  auto xm = oracles::free_module_x(C, 1);
  auto x = K.make_object(vpow(1), xm);
  auto xc = K.complement(x);
  EXPECT_EQ(xc.e, C.add(xm, C.identity(vpow(1))));
  EXPECT_EQ(K.complement(xc), x);
  auto ci = complement_iso(K, x);
  EXPECT_TRUE(ci.verified);
  EXPECT_EQ(ci.sum, K.direct_sum(x, xc));
}

TEST(Karoubi, FreeModuleSummandHomDimensions) {
  KaroubiCategory K(oracles::free_module());
  auto x = K.make_object(vpow(1), oracles::free_module_x(K.base(), 1));
  auto xc = K.complement(x);
  EXPECT_EQ(K.hom_basis(x, x).size(), 1u);
  EXPECT_EQ(K.hom_basis(xc, xc).size(), 1u);
  EXPECT_EQ(K.hom_basis(x, xc).size(), 0u);
  EXPECT_EQ(K.hom_basis(xc, x).size(), 0u);
  EXPECT_EQ(K.hom_basis(x, K.include(vpow(1))).size(), 1u);
}

TEST(Karoubi, SummandIsNotIsomorphicToABaseObject) {
  // (R, x) against R and 0: no pair of maps composes to both identities.
  KaroubiCategory K(oracles::free_module());
  auto x = K.make_object(vpow(1), oracles::free_module_x(K.base(), 1));
  for (const auto& a : objects_up_to(1, 1)) {
    auto ia = K.include(a);
    bool iso = false;
    Budget b1(1 << 10);
    enumerate_hom(K, x, ia, b1, [&](const KMor& f) {
      Budget b2(1 << 10);
      enumerate_hom(K, ia, x, b2, [&](const KMor& g) {
        iso = iso || (K.compose(g, f) == K.identity(x) && K.compose(f, g) == K.identity(ia));
        return iso;
      });
      return iso;
    });
    EXPECT_FALSE(iso) << a.size();
  }
}

TEST(Karoubi, VectHomDimensionIsProductOfRanks) {
  KaroubiCategory K(oracles::vect());
  auto objs = battery(K, 3);
  for (const auto& x : objs) {
    for (const auto& y : objs) {
      EXPECT_EQ(K.hom_basis(x, y).size(), brute_rank(x.e) * brute_rank(y.e));
    }
  }
}

TEST(Karoubi, CompletenessOfBaseAndEnvelope) {
  auto R = oracles::free_module();
  KaroubiCategory K(R);
  auto base = verify_idempotent_complete(R, objects_up_to(1, 2), 1 << 16);
  ASSERT_EQ(base.status, Status::Fail);
  ASSERT_TRUE(base.witness_idempotent);
  EXPECT_EQ(split_idempotent(R, *base.witness_object, *base.witness_idempotent, 1 << 20).status,
            SplitStatus::NotSplitHere);
  EXPECT_EQ(verify_idempotent_complete(K, battery(K, 2), 1 << 16).status, Status::Pass);

  auto V = oracles::vect();
  EXPECT_EQ(verify_idempotent_complete(V, objects_up_to(1, 3), 1 << 16).status, Status::Pass);
}

TEST(Karoubi, EnvelopeChecksPass) {
  for (auto C : {oracles::vect(), oracles::free_module()}) {
    KaroubiCategory K(C);
    for (const auto& v : envelope_checks(K, 2, 16, 1 << 16)) {
      EXPECT_EQ(v.status, Status::Pass) << v.name << ": " << v.witness;
      EXPECT_GT(v.checked, 0u) << v.name;
    }
  }
}

TEST(Karoubi, DirectSumOfSummandsAndSuspension) {
  KaroubiCategory K(oracles::vect());
  const auto& C = K.base();
  auto x = K.make_object(vpow(2), vmat(C, 2, 2, {1, 1, 0, 0}));
  auto s = K.direct_sum(x, K.complement(x));
  EXPECT_EQ(s.base.size(), 4u);
  EXPECT_EQ(brute_rank(s.e), 2u);
  EXPECT_EQ(K.suspend(x), x);  // the suspension of the fixture is the identity
  EXPECT_EQ(K.desuspend(K.suspend(x)), x);
}

TEST(KaroubiProperties, CategoryLawsOnRandomMorphisms) {
  std::mt19937_64 rng(41);
  for (auto C : {oracles::vect(), oracles::free_module()}) {
    KaroubiCategory K(C);
    auto objs = battery(K, 2);
    std::uniform_int_distribution<std::size_t> pick(0, objs.size() - 1);
    for (int t = 0; t < 300; ++t) {
      const auto &a = objs[pick(rng)], &b = objs[pick(rng)], &c = objs[pick(rng)], &d = objs[pick(rng)];
      auto f = random_kmor(rng, K, a, b), g = random_kmor(rng, K, b, c), h = random_kmor(rng, K, c, d);
      EXPECT_EQ(K.compose(K.compose(h, g), f), K.compose(h, K.compose(g, f)));
      EXPECT_EQ(K.compose(K.identity(b), f), f);
      EXPECT_EQ(K.compose(f, K.identity(a)), f);
      EXPECT_EQ(K.compose(g, K.add(f, f)), K.add(K.compose(g, f), K.compose(g, f)));
    }
  }
}

TEST(KaroubiProperties, EveryIdempotentSplitsCanonically) {
  for (auto C : {oracles::vect(), oracles::free_module()}) {
    KaroubiCategory K(C);
    for (const auto& x : battery(K, 2)) {
      for (const auto& q : idempotents(K, x, 1 << 16).idempotents) {
        auto sp = K.split_idempotent(x, q, 0);
        ASSERT_EQ(sp.status, SplitStatus::Split);
        EXPECT_TRUE(verify_splitting(K, q, *sp.splitting));
      }
    }
  }
}

TEST(KaroubiProperties, ComplementsAreInvolutiveAndIsomorphic) {
  for (auto C : {oracles::vect(), oracles::free_module()}) {
    KaroubiCategory K(C);
    for (const auto& x : battery(K, 2)) {
      EXPECT_EQ(K.complement(K.complement(x)), x);
      EXPECT_TRUE(complement_iso(K, x).verified);
    }
  }
}

}  // namespace
