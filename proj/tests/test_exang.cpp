#include <gtest/gtest.h>

#include "support.hpp"

using namespace idcomp;
using namespace testing_support;

namespace {

using Ext = Extension<BaseCategory>;

TEST(ExtAct, Examples) {
  auto C = oracles::vect();
  Ext d{vpow(1), vpow(1), vmat(C, 1, 1, {1})};
  auto same = ext_act(C, C.identity(vpow(1)), C.identity(vpow(1)), d);
  EXPECT_EQ(same.delta, d.delta);
  auto zero = ext_act(C, C.zero(vpow(1), vpow(2)), C.identity(vpow(1)), d);
  EXPECT_TRUE(C.is_zero(zero.delta));
  auto pushed = ext_act(C, vmat(C, 2, 1, {1, 0}), C.identity(vpow(1)), d);
  EXPECT_EQ(pushed.a_obj, vpow(2));
  EXPECT_EQ(pushed.delta, vmat(C, 2, 1, {1, 0}));
  EXPECT_THROW(ext_act(C, C.identity(vpow(2)), C.identity(vpow(1)), d), std::invalid_argument);
  EXPECT_THROW(make_extension(C, vpow(1), vpow(1), vmat(C, 1, 2, {1, 1})), std::invalid_argument);
}

TEST(ExtDirectSum, Examples) {
  auto C = oracles::vect();
  Ext d{vpow(1), vpow(1), vmat(C, 1, 1, {1})};
  auto z = zero_extension(C, vpow(1), vpow(1));
  EXPECT_EQ(ext_direct_sum(C, d, z).delta, vmat(C, 2, 2, {1, 0, 0, 0}));
  EXPECT_TRUE(C.is_zero(ext_direct_sum(C, z, z).delta));
  auto s = ext_direct_sum(C, d, d);
  EXPECT_EQ(s.delta, C.identity(vpow(2)));
  // Projections recover each summand.
  std::vector<Obj> two{vpow(1), vpow(1)};
  for (std::size_t i = 0; i < 2; ++i) {
    auto pi = projection(C, std::span<const Obj>(two), i);
    auto in = injection(C, std::span<const Obj>(two), i);
    EXPECT_EQ(ext_act(C, pi, in, s).delta, d.delta);
  }
}

TEST(Realize, ZeroIsSplit) {
  auto C = oracles::vect();
  for (int n = 1; n <= 3; ++n) {
    Theta th(C, ThetaSpec::exact(), n, 10000);
    auto r = realize(th, zero_extension(C, vpow(1), vpow(2)));
    ASSERT_EQ(r.found, Found::Yes);
    EXPECT_TRUE(is_split(C, r.exangle->seq, 1 << 12).split);
    EXPECT_EQ(verify_exangle(th, *r.exangle), Status::Pass);
  }
}

TEST(Realize, IdentityExtension) {
  auto C = oracles::vect();
  Theta th(C, ThetaSpec::exact(), 2, 10000);
  Ext d{vpow(1), vpow(1), vmat(C, 1, 1, {1})};
  auto r = realize(th, d);
  ASSERT_EQ(r.found, Found::Yes);
  const auto& s = r.exangle->seq;
  EXPECT_EQ(s.objects.front(), vpow(1));
  EXPECT_EQ(s.objects.back(), vpow(1));
  EXPECT_EQ(s.connecting(), d.delta);
  EXPECT_EQ(th.contains(s).status, Status::Pass);
  auto again = realize(th, ext_act(C, C.identity(vpow(1)), C.identity(vpow(1)), d));
  ASSERT_EQ(again.found, Found::Yes);
  EXPECT_TRUE(find_seq_iso(C, s, again.exangle->seq, 1 << 12).iso);
}

TEST(Realize, MiddleFilterCanRuleOutEveryCompletion) {
  // n = 1: a zero δ : V -> ΣV needs V ⊕ V in the middle, an isomorphism needs nothing.
  auto C = oracles::vect();
  Theta th(C, ThetaSpec::exact(), 1, 10000);
  auto only_zero = [](const Obj& o) { return o.is_zero(); };
  EXPECT_EQ(realize(th, zero_extension(C, vpow(1), vpow(1)), only_zero).found, Found::None);
  auto iso = realize(th, Ext{vpow(1), vpow(1), vmat(C, 1, 1, {1})}, only_zero);
  ASSERT_EQ(iso.found, Found::Yes);
  EXPECT_TRUE(iso.exangle->seq.objects[1].is_zero());
}

TEST(Realize, ExactAndGeneratedRealizationsAreIsomorphic) {
  // For n = 1 over F_2 the rotations of trivial sequences generate the exact triangles.
  auto C = oracles::vect();
  Theta ex(C, ThetaSpec::exact(), 1, 10000);
  auto t = trivial_seq(C, vpow(1), 1);
  Theta gen(C, ThetaSpec::generated({t}), 1, 10000);
  for (const auto& a : objects_up_to(1, 2)) {
    for (const auto& c : objects_up_to(1, 2)) {
      for (const auto& d : morphism_battery(C, c, C.suspend(a), 16)) {
        auto r1 = realize(ex, Ext{a, c, d});
        auto r2 = realize(gen, Ext{a, c, d});
        ASSERT_EQ(r1.found, Found::Yes);
        ASSERT_EQ(r2.found, Found::Yes) << describe(d);
        EXPECT_TRUE(find_seq_iso(C, r1.exangle->seq, r2.exangle->seq, 1 << 16).iso) << describe(d);
      }
    }
  }
}

TEST(Closure, FullAndZeroSubcategories) {
  auto C = oracles::vect();
  Theta th(C, ThetaSpec::exact(), 2, 10000);
  auto full = is_n_extension_closed(th, SubcategorySpec::full(1), 2, 64);
  EXPECT_EQ(full.status, Status::Pass);
  EXPECT_GT(full.checked, 10u);
  auto zero = is_n_extension_closed(th, SubcategorySpec::zero_only(1), 2, 64);
  EXPECT_EQ(zero.status, Status::Pass);
  EXPECT_EQ(zero.checked, 1u);
}

TEST(Closure, TrivialOnlyThetaIsNotClosed) {
  auto C = oracles::vect();
  Theta th(C, ThetaSpec::generated({}), 1, 10000);
  auto r = is_n_extension_closed(th, SubcategorySpec::full(1), 1, 16);
  EXPECT_NE(r.status, Status::Pass);
}

TEST(Restricted, FullMatchesUnrestricted) {
  auto C = oracles::vect();
  Theta th(C, ThetaSpec::exact(), 2, 10000);
  RestrictedStructure st(th, SubcategorySpec::full(1));
  for (const auto& a : objects_up_to(1, 2)) {
    for (const auto& c : objects_up_to(1, 2)) {
      for (const auto& d : morphism_battery(C, c, C.suspend(a), 16)) {
        auto r1 = st.realize(Ext{a, c, d});
        auto r2 = realize(th, Ext{a, c, d});
        ASSERT_EQ(r1.found, Found::Yes);
        EXPECT_EQ(r1.exangle->seq, r2.exangle->seq);
      }
    }
  }
}

TEST(Restricted, RejectsObjectsOutsideTheSubcategory) {
  auto C = oracles::vect();
  Theta th(C, ThetaSpec::exact(), 2, 10000);
  RestrictedStructure st(th, SubcategorySpec::zero_only(1));
  EXPECT_THROW(st.realize(zero_extension(C, vpow(1), vpow(0))), DomainError);
  EXPECT_THROW(st.is_inflation(C.identity(vpow(1))), DomainError);
  auto z = st.realize(zero_extension(C, vpow(0), vpow(0)));
  ASSERT_EQ(z.found, Found::Yes);
  for (const auto& o : z.exangle->seq.objects) EXPECT_TRUE(o.is_zero());
}

TEST(Restricted, InflationsAndDeflations) {
  auto C = oracles::vect();
  Theta th(C, ThetaSpec::exact(), 2, 10000);
  RestrictedStructure st(th, SubcategorySpec::full(1));
  EXPECT_EQ(st.is_inflation(C.identity(vpow(1))), Found::Yes);
  EXPECT_EQ(st.is_deflation(C.identity(vpow(1))), Found::Yes);
  EXPECT_EQ(st.is_inflation(vmat(C, 1, 2, {1, 1})), Found::Yes);  // everything is, over a field
}

TEST(EA, PassOnVectAtDimsTwo) {
  auto C = oracles::vect();
  Theta th(C, ThetaSpec::exact(), 2, 10000);
  RestrictedStructure st(th, SubcategorySpec::full(1));
  for (const auto& v : check_EA1(st, 2, 64, 10000)) {
    EXPECT_EQ(v.status, Status::Pass) << v.name << ": " << v.witness;
    EXPECT_GT(v.checked, 0u);
  }
  auto v = check_EA2(st, 2, 64, 10000);
  EXPECT_EQ(v.status, Status::Pass) << v.witness;
  EXPECT_GT(v.checked, 0u);
}

TEST(EA, ZeroBudgetIsUnknown) {
  auto C = oracles::vect();
  Theta th(C, ThetaSpec::exact(), 2, 10000);
  RestrictedStructure st(th, SubcategorySpec::full(1));
  for (const auto& v : check_EA1(st, 2, 64, 0)) EXPECT_EQ(v.status, Status::Unknown);
  EXPECT_EQ(check_EA2(st, 2, 64, 0).status, Status::Unknown);
}

TEST(ExangProperties, ExtActIsBifunctorial) {
  std::mt19937_64 rng(61);
  for (Elem p : {2, 3}) {
    auto C = oracles::vect(p);
    for (int t = 0; t < 200; ++t) {
      auto a0 = vpow(rng() % 3), a1 = vpow(rng() % 3), a2 = vpow(rng() % 3);
      auto c0 = vpow(rng() % 3), c1 = vpow(rng() % 3), c2 = vpow(rng() % 3);
      Ext d{a0, c0, random_mor(rng, C, c0, C.suspend(a0))};
      auto a = random_mor(rng, C, a0, a1), a2m = random_mor(rng, C, a1, a2);
      auto c = random_mor(rng, C, c1, c0), c2m = random_mor(rng, C, c2, c1);
      auto lhs = ext_act(C, C.compose(a2m, a), C.compose(c, c2m), d);
      auto rhs = ext_act(C, a2m, c2m, ext_act(C, a, c, d));
      EXPECT_EQ(lhs.delta, rhs.delta);
      auto sum = ext_act(C, C.add(a, a), c, d);
      EXPECT_EQ(sum.delta, C.add(ext_act(C, a, c, d).delta, ext_act(C, a, c, d).delta));
    }
  }
}

TEST(ExangProperties, RealizationsVerifyAndZeroIsSplit) {
  std::mt19937_64 rng(67);
  for (Elem p : {2, 3}) {
    auto C = oracles::vect(p);
    for (int n = 1; n <= 3; ++n) {
      Theta th(C, ThetaSpec::exact(), n, 10000);
      for (int t = 0; t < 40; ++t) {
        auto a = vpow(rng() % 3), c = vpow(rng() % 3);
        Ext d{a, c, random_mor(rng, C, c, C.suspend(a))};
        auto r = realize(th, d);
        ASSERT_EQ(r.found, Found::Yes);
        EXPECT_EQ(verify_exangle(th, *r.exangle), Status::Pass);
        auto split = is_split(C, r.exangle->seq, 1 << 14);
        EXPECT_EQ(split.split, C.is_zero(d.delta));
        EXPECT_TRUE(split.agree);
      }
    }
  }
}

TEST(ExangProperties, SumOfRealizationsRealizesTheSum) {
  std::mt19937_64 rng(71);
  auto C = oracles::vect();
  Theta th(C, ThetaSpec::exact(), 2, 10000);
  for (int t = 0; t < 20; ++t) {
    auto a = vpow(rng() % 2 + 1), c = vpow(rng() % 2);
    Ext d1{a, c, random_mor(rng, C, c, C.suspend(a))};
    Ext d2{c, a, random_mor(rng, C, a, C.suspend(c))};
    auto r1 = realize(th, d1), r2 = realize(th, d2), r = realize(th, ext_direct_sum(C, d1, d2));
    ASSERT_EQ(r.found, Found::Yes);
    auto sum = seq_direct_sum(C, r1.exangle->seq, r2.exangle->seq);
    EXPECT_EQ(th.contains(sum).status, Status::Pass);
    EXPECT_TRUE(find_seq_iso(C, sum, r.exangle->seq, 1 << 18).iso);
  }
}

}  // namespace
