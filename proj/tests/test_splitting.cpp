#include <gtest/gtest.h>

#include "support.hpp"

using namespace idcomp;
using namespace testing_support;

namespace {

template <class Cat>
NSeq<Cat> conjugate(const Cat& cat, const NSeq<Cat>& s, const std::vector<typename Cat::Morphism>& u) {
  NSeq<Cat> r = s;
  const auto len = s.objects.size();
  for (std::size_t i = 0; i < len; ++i) {
    const auto next = i + 1 < len ? u[i + 1] : cat.suspend(u[0]);
    r.maps[i] = cat.compose(next, cat.compose(s.maps[i], *inverse_of(cat, u[i])));
  }
  return r;
}

// Random automorphisms at the positions in [lo, hi], identities elsewhere.
std::vector<Mor> automorphisms(std::mt19937_64& rng, const BaseCategory& C, const NSeq<BaseCategory>& s,
                               std::size_t lo, std::size_t hi) {
  std::vector<Mor> u;
  for (std::size_t i = 0; i < s.objects.size(); ++i) {
    u.push_back(i >= lo && i <= hi ? random_automorphism(rng, C, s.objects[i]) : C.identity(s.objects[i]));
  }
  return u;
}

TEST(TrailingSplit, VectExample) {
  auto C = oracles::vect();
  Theta th(C, ThetaSpec::exact(), 2, 10000);
  auto x = *complete_morphism(th, vmat(C, 1, 1, {0})).seq;  // ends in one copy of V
  auto s = seq_direct_sum(C, x, trailing_padding(C, vpow(1), 2));
  auto r = split_off_summand(C, s, x.objects[3], vpow(1), 1 << 16);
  ASSERT_EQ(r.status, Status::Pass) << r.message;
  EXPECT_EQ(r.core, x);  // nothing to untangle: the sum was already split
  EXPECT_EQ(r.padding, trailing_padding(C, vpow(1), 2));
  ASSERT_TRUE(r.iso);
  EXPECT_TRUE(verify_seq_iso(C, *r.iso));
}

TEST(TrailingSplit, ZeroSummandKeepsTheSequence) {
  auto C = oracles::vect();
  Theta th(C, ThetaSpec::exact(), 2, 10000);
  auto x = *complete_morphism(th, vmat(C, 1, 2, {1, 1})).seq;
  auto r = split_off_summand(C, x, x.objects[3], vpow(0), 1 << 16);
  ASSERT_EQ(r.status, Status::Pass) << r.message;
  EXPECT_TRUE(find_seq_iso(C, r.core, x, 1 << 16).iso);
}

TEST(TrailingSplit, RejectsBadInput) {
  auto C = oracles::vect();
  Theta th(C, ThetaSpec::exact(), 1, 10000);
  auto x = *complete_morphism(th, vmat(C, 1, 1, {0})).seq;  // V -> V -> V+V -> ΣV, connecting [0 1]
  EXPECT_THROW(split_off_summand(C, x, vpow(1), vpow(2), 100), std::invalid_argument);
  // The connecting map does not vanish on the second copy of V.
  EXPECT_THROW(split_off_summand(C, x, vpow(1), vpow(1), 100), std::invalid_argument);
}

TEST(LeadingSplit, VectExample) {
  auto C = oracles::vect();
  Theta th(C, ThetaSpec::exact(), 2, 10000);
  auto x = *complete_morphism(th, vmat(C, 2, 1, {1, 0})).seq;
  auto s = seq_direct_sum(C, x, trivial_seq(C, vpow(1), 2));
  auto r = split_off_leading_summand(C, s, x.objects[0], vpow(1), 1 << 16);
  ASSERT_EQ(r.status, Status::Pass) << r.message;
  EXPECT_EQ(r.padding, trivial_seq(C, vpow(1), 2));
  EXPECT_TRUE(find_seq_iso(C, r.core, x, 1 << 16).iso);
}

TEST(SplittingProperties, TrailingUndoesConjugation) {
  std::mt19937_64 rng(53);
  for (Elem p : {2, 3}) {
    auto C = oracles::vect(p);
    for (int n = 1; n <= 3; ++n) {
      Theta th(C, ThetaSpec::exact(), n, 10000);
      const auto un = static_cast<std::size_t>(n);
      for (int t = 0; t < 25; ++t) {
        auto x = *complete_morphism(th, random_mor(rng, C, vpow(rng() % 3), vpow(rng() % 3))).seq;
        const auto d = vpow(rng() % 3);
        auto s = seq_direct_sum(C, x, trailing_padding(C, d, n));
        auto twisted = conjugate(C, s, automorphisms(rng, C, s, 0, un));
        auto r = split_off_summand(C, twisted, x.objects[un + 1], d, 1 << 16);
        ASSERT_EQ(r.status, Status::Pass) << r.message;
        ASSERT_TRUE(r.iso);
        EXPECT_TRUE(verify_seq_iso(C, *r.iso));
        EXPECT_EQ(r.core.objects.back(), x.objects.back());
        EXPECT_EQ(r.padding, trailing_padding(C, d, n));
        EXPECT_TRUE(find_seq_iso(C, r.core, x, 1 << 18).iso);
        EXPECT_EQ(th.contains(r.core).status, Status::Pass);
      }
    }
  }
}

TEST(SplittingProperties, LeadingUndoesConjugation) {
  std::mt19937_64 rng(59);
  for (Elem p : {2, 3}) {
    auto C = oracles::vect(p);
    for (int n = 1; n <= 3; ++n) {
      Theta th(C, ThetaSpec::exact(), n, 10000);
      const auto un = static_cast<std::size_t>(n);
      for (int t = 0; t < 25; ++t) {
        auto x = *complete_morphism(th, random_mor(rng, C, vpow(rng() % 3), vpow(rng() % 3))).seq;
        const auto d = vpow(rng() % 3);
        auto s = seq_direct_sum(C, x, trivial_seq(C, d, n));
        auto twisted = conjugate(C, s, automorphisms(rng, C, s, 1, un + 1));
        auto r = split_off_leading_summand(C, twisted, x.objects[0], d, 1 << 16);
        ASSERT_EQ(r.status, Status::Pass) << r.message;
        ASSERT_TRUE(r.iso);
        EXPECT_TRUE(verify_seq_iso(C, *r.iso));
        EXPECT_EQ(r.core.objects.front(), x.objects.front());
        EXPECT_EQ(r.padding, trivial_seq(C, d, n));
        EXPECT_TRUE(find_seq_iso(C, r.core, x, 1 << 18).iso);
      }
    }
  }
}

TEST(SplittingProperties, EnvelopeOfTheFreeModule) {
  // Summands (R, x) and (R, 1 + x) only exist in the completion.
  KaroubiCategory K(oracles::free_module());
  const auto& C = K.base();
  auto a = K.make_object(vpow(1), oracles::free_module_x(C, 1));
  auto b = K.complement(a);
  for (int n = 1; n <= 2; ++n) {
    for (const auto& x : {trivial_seq(K, a, n), rotate(K, trivial_seq(K, b, n))}) {
      for (const auto& d : {a, b}) {
        auto s = seq_direct_sum(K, x, trailing_padding(K, d, n));
        auto r = split_off_summand(K, s, x.objects.back(), d, 1 << 16);
        ASSERT_EQ(r.status, Status::Pass) << r.message;
        EXPECT_TRUE(verify_seq_iso(K, *r.iso));
        EXPECT_EQ(r.padding, trailing_padding(K, d, n));
        auto l = split_off_leading_summand(K, seq_direct_sum(K, x, trivial_seq(K, d, n)), x.objects.front(), d,
                                           1 << 16);
        ASSERT_EQ(l.status, Status::Pass) << l.message;
        EXPECT_TRUE(verify_seq_iso(K, *l.iso));
      }
    }
  }
}

}  // namespace
