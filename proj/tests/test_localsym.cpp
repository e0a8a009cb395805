// Local symbols over Q: normalized absolute values, Legendre and Hilbert
// symbols (pinned against the conic-solvability oracle), the theta constant,
// quadratic-extension sign characters, and the transfer sign factor.

#include <gtest/gtest.h>

#include "ellstab/localsym.hpp"
#include "ellstab/oracles.hpp"
#include "helpers.hpp"

using namespace ellstab;
using tst::P;
using tst::R;

TEST(Places, ConstructionValidatesPrimes) {
  EXPECT_TRUE(place_infinite().infinite);
  EXPECT_EQ(place_finite(7).p, Int(7));
  EXPECT_THROW(place_finite(4), std::invalid_argument);
  EXPECT_THROW(place_finite(1), std::invalid_argument);
}

TEST(AbsNorm, NormalizedValues) {
  EXPECT_EQ(abs_norm(R(12), place_finite(3)), R(1, 3));
  EXPECT_EQ(abs_norm(R(12), place_finite(2)), R(1, 4));
  EXPECT_EQ(abs_norm(R(3, 4), place_finite(2)), R(4));
  EXPECT_EQ(abs_norm(R(3, 4), place_finite(7)), R(1));
  EXPECT_EQ(abs_norm(R(-5), place_infinite()), R(5));
  EXPECT_THROW(abs_norm(R(0), place_finite(3)), std::invalid_argument);
}

TEST(Legendre, SmallValuesAndEulerCriterion) {
  EXPECT_EQ(legendre(Int(2), Int(7)), 1);
  EXPECT_EQ(legendre(Int(3), Int(7)), -1);
  EXPECT_EQ(legendre(Int(7), Int(7)), 0);
  EXPECT_EQ(legendre(Int(-1), Int(13)), 1);
  EXPECT_EQ(legendre(Int(-1), Int(11)), -1);
  for (long p : {3, 5, 7, 11, 13})
    for (long a = -6; a <= 6; ++a)
      EXPECT_EQ(legendre(Int(a), Int(p)), oracle_legendre(Int(a), Int(p))) << a << "," << p;
}

TEST(Hilbert, FrozenTableCrossCheckedAgainstConicOracle) {
  struct Row {
    long a, b;
    const char* place;  // "inf" or a prime as text
    int expect;
  };
  const Row rows[] = {
      {-1, -1, "inf", -1}, {-1, 2, "inf", 1},  {2, 3, "inf", 1},
      {-1, -1, "2", -1},   {2, 3, "2", -1},    {2, 2, "2", 1},
      {3, 3, "2", -1},     {5, 2, "2", -1},    {-1, -1, "7", 1},
      {3, 7, "7", -1},     {2, 7, "7", 1},     {5, 5, "5", 1},
      {5, 10, "5", -1},    {2, 5, "5", -1},    {3, 3, "3", -1},
  };
  for (const Row& r : rows) {
    PlaceQ v = r.place == std::string("inf") ? place_infinite() : place_finite(Int(r.place));
    EXPECT_EQ(hilbert(R(r.a), R(r.b), v), r.expect) << r.a << "," << r.b << "@" << r.place;
    if (!v.infinite) {
      EXPECT_EQ(oracle_hilbert(R(r.a), R(r.b), v.p), r.expect) << r.a << "," << r.b << "@" << r.place;
    }
  }
  EXPECT_THROW(hilbert(R(0), R(1), place_finite(3)), std::invalid_argument);
}

TEST(Hilbert, SymmetryBilinearityAndComplement) {
  const std::vector<PlaceQ> places = {place_infinite(), place_finite(2), place_finite(3),
                                      place_finite(5), place_finite(7)};
  const std::vector<Rational> xs = {R(2), R(-3), R(5, 2), R(-1, 6), R(7)};
  for (const auto& v : places)
    for (const auto& a : xs)
      for (const auto& b : xs) {
        EXPECT_EQ(hilbert(a, b, v), hilbert(b, a, v));
        EXPECT_EQ(hilbert(a, -a, v), 1);
        EXPECT_EQ(hilbert(a, a * a * b, v), hilbert(a, b, v));  // square-class invariance
        for (const auto& c : xs)
          EXPECT_EQ(hilbert(a, b * c, v), hilbert(a, b, v) * hilbert(a, c, v));
      }
}

TEST(Hilbert, ProductOverAllPlacesIsTrivial) {
  const std::vector<std::pair<Rational, Rational>> samples = {
      {R(2), R(3)}, {R(-1), R(-1)}, {R(5, 2), R(-7, 3)}, {R(30), R(-42)}, {R(-15, 7), R(9, 10)}};
  for (const auto& [a, b] : samples) {
    std::set<Int> primes = {Int(2)};
    for (const Rational& x : {a, b})
      for (const auto& [p, e] : factorize(rat_num(x) * rat_den(x))) {
        (void)e;
        primes.insert(p);
      }
    int prod = hilbert(a, b, place_infinite());
    for (const Int& p : primes) prod *= hilbert(a, b, place_finite(p));
    EXPECT_EQ(prod, 1) << a.str() << "," << b.str();
  }
}

TEST(Theta, ConstantAndGlobalProducts) {
  EXPECT_EQ(theta_minus_one(3, place_infinite()), R(1, 8));
  EXPECT_EQ(theta_minus_one(3, place_finite(2)), R(8));
  EXPECT_EQ(theta_minus_one(3, place_finite(5)), R(1));
  for (long n = 0; n <= 10; ++n) {
    Rational prod = theta_minus_one(n, place_infinite()) * theta_minus_one(n, place_finite(2)) *
                    theta_minus_one(n, place_finite(3)) * theta_minus_one(n, place_finite(7));
    EXPECT_EQ(prod, R(1)) << n;
  }
  for (long t = 0; t <= 10; ++t) EXPECT_EQ(two_power_product(t), R(1)) << t;
  EXPECT_THROW(theta_minus_one(-1, place_finite(2)), std::invalid_argument);
  EXPECT_THROW(two_power_product(-2), std::invalid_argument);
}

TEST(SgnQuadext, CharacterOfTheExtensionNorms) {
  EXPECT_EQ(sgn_quadext(Int(-1), R(-1), place_infinite()), -1);
  EXPECT_EQ(sgn_quadext(Int(-1), R(2), place_infinite()), 1);
  EXPECT_EQ(sgn_quadext(Int(5), R(-60), place_infinite()), 1);
  EXPECT_EQ(sgn_quadext(Int(5), R(-60), place_finite(3)), -1);
  EXPECT_EQ(sgn_quadext(Int(5), R(-60), place_finite(5)), -1);
  EXPECT_EQ(sgn_quadext(Int(5), R(-60), place_finite(2)), 1);

  // norms of the real quadratic field are exactly the kernel at each place
  for (long x : {2, 3, 7, 11})
    EXPECT_EQ(sgn_quadext(Int(5), R(x * x) * R(-60), place_finite(3)),
              sgn_quadext(Int(5), R(-60), place_finite(3)));

  EXPECT_THROW(sgn_quadext(Int(12), R(3), place_infinite()), std::invalid_argument);  // not squarefree
  EXPECT_THROW(sgn_quadext(Int(1), R(3), place_infinite()), std::invalid_argument);
  EXPECT_THROW(sgn_quadext(Int(5), R(0), place_infinite()), std::invalid_argument);
}

TEST(DeltaZero, WorkedExampleAcrossPlaces) {
  QuadElem a2{R(9), R(4), Int(5)};  // norm-1 generator of Q(sqrt 5)
  std::vector<SignFactorInput> fs = {SignFactorInput{false, Int(5), a2}};
  PolyQ eig = P({1, -3, 1});

  EXPECT_EQ(delta_zero(eig, fs, 1, R(4), place_infinite()), 1);
  EXPECT_EQ(delta_zero(eig, fs, 1, R(4), place_finite(2)), 1);
  EXPECT_EQ(delta_zero(eig, fs, 1, R(4), place_finite(3)), -1);
  EXPECT_EQ(delta_zero(eig, fs, 1, R(4), place_finite(5)), -1);

  // determinant changes within a square class never move the sign
  EXPECT_EQ(delta_zero(eig, fs, 1, R(4) * R(9), place_finite(3)),
            delta_zero(eig, fs, 1, R(4), place_finite(3)));

  // split factors contribute nothing
  std::vector<SignFactorInput> with_split = fs;
  SignFactorInput split;
  split.split = true;
  with_split.push_back(split);
  EXPECT_EQ(delta_zero(eig, with_split, 1, R(4), place_finite(3)), -1);

  // no second-side field factors: the sign is trivially +1
  EXPECT_EQ(delta_zero(eig, {}, 1, R(4), place_finite(3)), 1);
}

TEST(DeltaZero, RejectsDegenerateInputs) {
  QuadElem a2{R(9), R(4), Int(5)};
  std::vector<SignFactorInput> fs = {SignFactorInput{false, Int(5), a2}};
  EXPECT_THROW(delta_zero(P({-2, 1}), fs, 1, R(4), place_infinite()), std::invalid_argument);
  EXPECT_THROW(delta_zero(P({1, -3, 1}), fs, 1, R(0), place_infinite()), std::domain_error);

  // a'' a root of the eigenvalue polynomial collapses the pairing
  QuadElem root{R(3, 2), R(1, 2), Int(5)};
  std::vector<SignFactorInput> bad = {SignFactorInput{false, Int(5), root}};
  EXPECT_THROW(delta_zero(P({1, -3, 1}), bad, 1, R(4), place_infinite()), std::domain_error);
}

TEST(SignLedger, ComparesParityWithSignProduct) {
  EXPECT_TRUE(sign_ledger(R(3), R(1), 1, 1));
  EXPECT_TRUE(sign_ledger(R(3), R(2), -1, 1));
  EXPECT_TRUE(sign_ledger(R(9, 2), R(3, 2), 1, -1));  // integral difference, odd
  EXPECT_FALSE(sign_ledger(R(3), R(2), 1, 1));
  EXPECT_THROW(sign_ledger(R(1, 2), R(0), 1, 1), std::invalid_argument);
  EXPECT_THROW(sign_ledger(R(1), R(0), 2, 1), std::invalid_argument);
}
