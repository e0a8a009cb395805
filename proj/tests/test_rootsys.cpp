// Root systems of types A/B/C: positive roots, half-sums, coroots under the
// trace form, Weyl orders, exponents, and the B/C discriminant comparison.

#include <gtest/gtest.h>

#include "ellstab/classparam.hpp"
#include "ellstab/rootsys.hpp"
#include "helpers.hpp"

using namespace ellstab;
using tst::R;

namespace {

Weight W(std::initializer_list<Rational> cs) { return Weight{std::vector<Rational>(cs)}; }

}  // namespace

TEST(Roots, PositiveRootCounts) {
  for (int n = 1; n <= 8; ++n) {
    EXPECT_EQ(positive_roots({Family::B, n}).size(), static_cast<size_t>(n) * n);
    EXPECT_EQ(positive_roots({Family::C, n}).size(), static_cast<size_t>(n) * n);
    EXPECT_EQ(positive_roots({Family::A, n}).size(), static_cast<size_t>(n) * (n - 1) / 2);
  }
}

TEST(Roots, SmallRankContents) {
  auto b2 = positive_roots({Family::B, 2});
  ASSERT_EQ(b2.size(), 4u);
  EXPECT_EQ(b2[0], W({R(1), R(-1)}));  // eps1 - eps2
  EXPECT_EQ(b2[1], W({R(1), R(1)}));   // eps1 + eps2
  EXPECT_EQ(b2[2], W({R(1), R(0)}));   // eps1
  EXPECT_EQ(b2[3], W({R(0), R(1)}));   // eps2

  auto c2 = positive_roots({Family::C, 2});
  ASSERT_EQ(c2.size(), 4u);
  EXPECT_EQ(c2[2], W({R(2), R(0)}));  // 2 eps1
  EXPECT_EQ(c2[3], W({R(0), R(2)}));  // 2 eps2
}

TEST(Roots, HalfSums) {
  EXPECT_EQ(rho({Family::B, 2}), W({R(3, 2), R(1, 2)}));
  EXPECT_EQ(rho({Family::C, 2}), W({R(2), R(1)}));
  EXPECT_EQ(rho({Family::B, 3}), W({R(5, 2), R(3, 2), R(1, 2)}));
  EXPECT_EQ(rho({Family::C, 3}), W({R(3), R(2), R(1)}));
}

TEST(Roots, CorootsUnderTraceForm) {
  // under the trace form every coroot has the coordinates of its root
  EXPECT_EQ(coroot_btr(W({R(1), R(-1), R(0)}), {Family::B, 3}), W({R(1), R(-1), R(0)}));
  EXPECT_EQ(coroot_btr(W({R(1), R(0), R(0)}), {Family::B, 3}), W({R(1), R(0), R(0)}));
  EXPECT_EQ(coroot_btr(W({R(2), R(0), R(0)}), {Family::C, 3}), W({R(2), R(0), R(0)}));
  EXPECT_EQ(coroot_btr(W({R(-1), R(1), R(0)}), {Family::C, 3}), W({R(-1), R(1), R(0)}));  // negative root
  EXPECT_THROW(coroot_btr(W({R(1), R(0), R(0)}), {Family::C, 3}), std::invalid_argument);
  EXPECT_THROW(coroot_btr(W({R(1), R(1), R(1)}), {Family::B, 3}), std::invalid_argument);
}

TEST(Roots, VarpiAtRhoMatchesDirectProduct) {
  // C2 at rho = (2,1): pairings over the four positive roots are 1, 3, 4, 2
  EXPECT_EQ(varpi_eval({Family::C, 2}, rho({Family::C, 2})), R(24));
  for (int n = 1; n <= 6; ++n)
    for (Family f : {Family::B, Family::C}) {
      RootDatum rd{f, n};
      EXPECT_EQ(steinberg_rho_value(rd), varpi_eval(rd, rho(rd))) << n;
    }
}

TEST(Roots, TwinRatiosOfWeylElementValues) {
  auto [r1, r2] = lemma_2n_ratios(3);
  EXPECT_EQ(r1, R(1, 8));
  EXPECT_EQ(r2, R(1, 64));
  auto [s1, s2] = lemma_2n_ratios(1);
  EXPECT_EQ(s1, R(1, 2));
  EXPECT_EQ(s2, R(1, 4));
}

TEST(Roots, ExponentsAndWeylOrders) {
  EXPECT_EQ(exponents({Family::B, 3}), (std::vector<int>{1, 3, 5}));
  EXPECT_EQ(exponents({Family::C, 3}), (std::vector<int>{1, 3, 5}));
  EXPECT_EQ(exponents({Family::A, 4}), (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(weyl_order({Family::B, 3}), Int(48));
  EXPECT_EQ(weyl_order({Family::C, 3}), Int(48));
  EXPECT_EQ(weyl_order({Family::A, 4}), Int(24));
  for (int n = 1; n <= 10; ++n)
    EXPECT_EQ(weyl_order({Family::B, n}), weyl_order({Family::C, n})) << n;
}

TEST(Roots, DimensionAndQInvariant) {
  auto [dim_sp, q_sp] = dim_and_q(AtomKind::Sp, 3, QContext::real_split);
  EXPECT_EQ(dim_sp, Int(21));
  EXPECT_EQ(q_sp, R(6));
  auto [dim_so, q_so] = dim_and_q(AtomKind::SO_odd, 3, QContext::real_split);
  EXPECT_EQ(dim_so, Int(21));
  EXPECT_EQ(q_so, R(6));

  auto [dim_na, q_na] = dim_and_q(AtomKind::Sp, 3, QContext::nonarch_split);
  EXPECT_EQ(dim_na, Int(21));
  EXPECT_EQ(q_na, R(3));

  auto [dim_gl, q_gl] = dim_and_q(AtomKind::GL, 4, QContext::compact);
  EXPECT_EQ(dim_gl, Int(16));
  EXPECT_EQ(q_gl, R(0));
  EXPECT_THROW(dim_and_q(AtomKind::GL, 4, QContext::real_split), std::invalid_argument);
}

TEST(Roots, WeylDiscriminantValues) {
  EXPECT_EQ(weyl_discriminant({Family::C, 1}, {R(2)}), R(-9, 4));
  EXPECT_EQ(weyl_discriminant({Family::B, 1}, {R(2)}), R(-1, 2));
  EXPECT_THROW(weyl_discriminant({Family::B, 1}, {R(1)}), std::domain_error);  // singular point
  EXPECT_THROW(weyl_discriminant({Family::B, 1}, {R(0)}), std::invalid_argument);
}

TEST(Roots, DiscriminantRatioClosedForm) {
  DiscriminantRatio r = discriminant_ratio(1, {R(2)});
  EXPECT_EQ(r.value, R(9, 2));
  EXPECT_FALSE(r.is_limit);
  EXPECT_EQ(r.value, weyl_discriminant({Family::C, 1}, {R(2)}) /
                         weyl_discriminant({Family::B, 1}, {R(2)}));

  DiscriminantRatio lim = discriminant_ratio(2, {R(1), R(1)});
  EXPECT_EQ(lim.value, R(16));  // 2^{2n} at the identity
  EXPECT_TRUE(lim.is_limit);

  EXPECT_THROW(discriminant_ratio(1, {R(0)}), std::invalid_argument);
  EXPECT_THROW(discriminant_ratio(1, {R(-1)}), std::invalid_argument);
  EXPECT_THROW(discriminant_ratio(2, {R(2)}), std::invalid_argument);  // rank mismatch
}

TEST(Roots, GermExponentAtIdentity) {
  GroupShape s;
  s.atoms.push_back({AtomKind::Sp, 4, PolyQ()});
  EXPECT_EQ(germ_exponent(s, UnipotentClass::identity), 0);
}
