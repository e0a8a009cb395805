// Tate-motive bookkeeping for centralizer shapes and the point-count /
// L-factor identity over small finite fields, pinned against exhaustive
// matrix enumeration where feasible.

#include <gtest/gtest.h>

#include "ellstab/motive.hpp"
#include "ellstab/oracles.hpp"
#include "helpers.hpp"

using namespace ellstab;
using tst::P;
using tst::R;

namespace {

GroupShape shape(std::initializer_list<Atom> atoms) {
  GroupShape s;
  s.atoms = atoms;
  return s;
}

}  // namespace

TEST(Motive, SymplecticAndOddOrthogonalTwins) {
  TateMotive sp = motive_of_shape(shape({{AtomKind::Sp, 6, PolyQ()}}));
  ASSERT_EQ(sp.summands.size(), 3u);
  EXPECT_EQ(sp.summands[0].exponent, 1);
  EXPECT_EQ(sp.summands[1].exponent, 3);
  EXPECT_EQ(sp.summands[2].exponent, 5);

  TateMotive so = motive_of_shape(shape({{AtomKind::SO_odd, 7, PolyQ()}}));
  EXPECT_TRUE(motive_equal(sp, so));
  EXPECT_FALSE(motive_equal(sp, motive_of_shape(shape({{AtomKind::Sp, 4, PolyQ()}}))));
}

TEST(Motive, OpaqueLabelsForLinearAtoms) {
  TateMotive m = motive_of_shape(shape({{AtomKind::U, 2, P({1, -3, 1})}, {AtomKind::Sp, 4, PolyQ()}}));
  ASSERT_EQ(m.summands.size(), 3u);
  EXPECT_EQ(m.summands[0].exponent, 1);
  EXPECT_EQ(m.summands[1].exponent, 3);
  EXPECT_TRUE(m.summands[2].opaque);
  EXPECT_EQ(m.summands[2].label_size, 2);

  // the label ignores the sign-flip presentation of the base
  TateMotive flipped = motive_of_shape(shape({{AtomKind::U, 2, P({1, 3, 1})}, {AtomKind::Sp, 4, PolyQ()}}));
  EXPECT_TRUE(motive_equal(m, flipped));
}

TEST(Motive, ConcatenationMatchesMergedShapes) {
  GroupShape a = shape({{AtomKind::Sp, 2, PolyQ()}, {AtomKind::U, 1, P({-3, 1})}});
  GroupShape b = shape({{AtomKind::SO_odd, 5, PolyQ()}});
  GroupShape both = a;
  both.atoms.insert(both.atoms.end(), b.atoms.begin(), b.atoms.end());

  TateMotive merged = motive_of_shape(both);
  TateMotive ma = motive_of_shape(a);
  TateMotive mb = motive_of_shape(b);
  ma.summands.insert(ma.summands.end(), mb.summands.begin(), mb.summands.end());
  canonicalize(ma);
  EXPECT_TRUE(motive_equal(merged, ma));
}

TEST(Motive, FlaggedOrthogonalBlocksAreRejected) {
  GroupShape s = shape({{AtomKind::Sp, 2, PolyQ()}});
  s.so_minus_caveat = true;
  s.so_minus_dim = 4;
  EXPECT_THROW(motive_of_shape(s), std::invalid_argument);
}

TEST(PointCount, MatchesExhaustiveEnumerationOverF3) {
  EXPECT_EQ(point_count(AtomKind::Sp, 1, Int(3)), Int(24));
  EXPECT_EQ(oracle_sp2_f3_order(), Int(24));
  EXPECT_EQ(oracle_so3_f3_order(), Int(24));
}

TEST(PointCount, TwinOrdersAndDomainChecks) {
  for (int n = 1; n <= 4; ++n)
    for (long q : {3, 5, 9})
      EXPECT_EQ(point_count(AtomKind::Sp, n, Int(q)), point_count(AtomKind::SO_odd, n, Int(q)))
          << n << "," << q;

  EXPECT_EQ(point_count(AtomKind::Sp, 2, Int(3)), Int(51840));

  EXPECT_THROW(point_count(AtomKind::Sp, 1, Int(4)), std::invalid_argument);   // even
  EXPECT_THROW(point_count(AtomKind::Sp, 1, Int(15)), std::invalid_argument);  // not a prime power
  EXPECT_THROW(point_count(AtomKind::GL, 1, Int(3)), std::invalid_argument);
}

TEST(LFactor, InverseEqualsNormalizedPointCount) {
  TateMotive m = motive_of_shape(shape({{AtomKind::Sp, 2, PolyQ()}}));
  EXPECT_EQ(local_L_dual1(m, Int(3)), R(9, 8));
  EXPECT_EQ(local_L_dual1(m, Int(3)) * Rational(point_count(AtomKind::Sp, 1, Int(3))),
            Rational(int_pow(Int(3), 3)));

  for (int n = 1; n <= 4; ++n)
    for (long q : {3, 5, 7, 9}) {
      TateMotive mn = motive_of_shape(shape({{AtomKind::Sp, 2 * n, PolyQ()}}));
      Rational lhs = local_L_dual1(mn, Int(q)) * Rational(point_count(AtomKind::Sp, n, Int(q)));
      Int dim = n * Int(2 * n + 1);
      EXPECT_EQ(lhs, Rational(int_pow(Int(q), dim.convert_to<unsigned long>()))) << n << "," << q;
    }
}

TEST(LFactor, OpaqueSummandsAreRejected) {
  TateMotive m = motive_of_shape(shape({{AtomKind::GL, 2, P({-2, 1})}}));
  EXPECT_THROW(local_L_dual1(m, Int(3)), std::invalid_argument);
  EXPECT_THROW(local_L_dual1(motive_of_shape(shape({{AtomKind::Sp, 2, PolyQ()}})), Int(6)),
               std::invalid_argument);
}
