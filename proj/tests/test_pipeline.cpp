#include <gtest/gtest.h>

#include "support.hpp"

using namespace idcomp;
using namespace testing_support;

namespace {

struct Fixture {
  BaseCategory C = oracles::vect();
  KaroubiCategory K{C};
  Theta theta{C, ThetaSpec::exact(), 2, 10000};
  SubcategorySpec full = SubcategorySpec::full(1);
};

void expect_well_formed(const KaroubiCategory& K, const PipelineResult& r, const Extension<KaroubiCategory>& d,
                        int n) {
  ASSERT_EQ(r.status, Status::Pass) << r.message;
  ASSERT_TRUE(r.exangle);
  const auto& core = r.exangle->seq;
  EXPECT_EQ(core.objects.front(), d.a_obj);
  EXPECT_EQ(core.objects.back(), d.c_obj);
  EXPECT_EQ(core.connecting(), d.delta);
  EXPECT_EQ(consecutive_zero_check(K, core).status, Status::Pass);
  EXPECT_EQ(exactness_certificate(K, core).status, Status::Pass);
  EXPECT_TRUE(r.terms_in_subcategory);
  EXPECT_TRUE(r.peeled_shape_ok);
  ASSERT_TRUE(r.certificate);
  EXPECT_TRUE(r.certificate->verified);
  EXPECT_EQ(r.certificate->ambient_membership, Status::Pass);
  ASSERT_TRUE(r.peeled);
  // The peeled part is trivial(X') ⊕ B(Y') and has no connecting map.
  EXPECT_TRUE(K.is_zero(r.peeled->connecting()));
  EXPECT_EQ(r.peeled->n(), n);
}

TEST(Pipeline, ZeroExtensionOnIncludedObjects) {
  Fixture f;
  auto x = f.K.include(vpow(1)), y = f.K.include(vpow(2));
  auto d = zero_extension(f.K, x, y);
  auto r = karoubi_extension_complete(f.K, f.theta, f.full, d, 1 << 16);
  expect_well_formed(f.K, r, d, 2);
  EXPECT_TRUE(is_split(f.K, r.exangle->seq, 1 << 12).split);
  // Complements of included objects are zero: nothing is peeled.
  for (const auto& o : r.peeled->objects) EXPECT_TRUE(f.K.is_zero(f.K.identity(o)));
}

TEST(Pipeline, IncludedEndpointsAgreeWithDirectRealization) {
  Fixture f;
  std::mt19937_64 rng(73);
  for (int t = 0; t < 20; ++t) {
    auto a = vpow(rng() % 3), c = vpow(rng() % 3);
    auto delta = random_mor(rng, f.C, c, f.C.suspend(a));
    auto d = make_extension(f.K, f.K.include(a), f.K.include(c), f.K.include(delta));
    auto r = karoubi_extension_complete(f.K, f.theta, f.full, d, 1 << 16);
    expect_well_formed(f.K, r, d, 2);
    auto direct = realize(f.theta, Extension<BaseCategory>{a, c, delta});
    ASSERT_EQ(direct.found, Found::Yes);
    auto iso = find_seq_iso(f.K, r.exangle->seq, include_seq(f.K, direct.exangle->seq), 1 << 16);
    EXPECT_TRUE(iso.iso);
  }
}

TEST(Pipeline, RankOneIdempotentEndpoints) {
  Fixture f;
  auto e = vmat(f.C, 2, 2, {1, 1, 0, 0});  // rank 1, not diagonal
  auto x = f.K.make_object(vpow(2), e);
  auto y = f.K.make_object(vpow(2), vmat(f.C, 2, 2, {1, 0, 0, 0}));
  auto sx = f.K.suspend(x);
  // δ = e_sx p e_y for p = 1 is a nonzero map (V+V, e_y) -> Σ(V+V, e).
  auto delta = f.K.make_morphism(y, sx, f.C.compose(sx.e, y.e));
  ASSERT_FALSE(f.K.is_zero(delta));
  auto d = make_extension(f.K, x, y, delta);
  auto r = karoubi_extension_complete(f.K, f.theta, f.full, d, 1 << 16);
  expect_well_formed(f.K, r, d, 2);
  EXPECT_FALSE(is_split(f.K, r.exangle->seq, 1 << 12).split);
  for (const auto& o : r.exangle->seq.objects) EXPECT_TRUE(f.full.contains(o.base));
}

TEST(Pipeline, EndpointsOutsideTheSubcategory) {
  Fixture f;
  auto x = f.K.include(vpow(1));
  EXPECT_THROW(karoubi_extension_complete(f.K, f.theta, SubcategorySpec::zero_only(1), zero_extension(f.K, x, x),
                                          1 << 16),
               DomainError);
}

TEST(Pipeline, WorksForEveryN) {
  auto C = oracles::vect();
  KaroubiCategory K(C);
  auto x = K.make_object(vpow(2), vmat(C, 2, 2, {0, 0, 1, 1}));
  auto y = K.complement(x);
  auto d = make_extension(K, x, y, K.make_morphism(y, K.suspend(x), C.compose(x.e, y.e)));
  for (int n = 1; n <= 3; ++n) {
    Theta th(C, ThetaSpec::exact(), n, 10000);
    auto r = karoubi_extension_complete(K, th, SubcategorySpec::full(1), d, 1 << 16);
    expect_well_formed(K, r, d, n);
  }
}

TEST(PipelineProperties, EnvelopeBatteryAtDimsTwo) {
  Fixture f;
  const auto objs = envelope_battery(f.K, objects_up_to(1, 2), 1 << 16);
  std::size_t count = 0;
  for (const auto& x : objs) {
    for (const auto& y : objs) {
      const auto sx = f.K.suspend(x);
      for (const auto& km : f.K.hom_basis(y, sx)) {
        auto d = make_extension(f.K, x, y, km);
        auto r = karoubi_extension_complete(f.K, f.theta, f.full, d, 1 << 16);
        expect_well_formed(f.K, r, d, 2);
        ++count;
      }
      auto z = zero_extension(f.K, x, y);
      expect_well_formed(f.K, karoubi_extension_complete(f.K, f.theta, f.full, z, 1 << 16), z, 2);
      ++count;
    }
  }
  EXPECT_GT(count, 100u);
}

}  // namespace
