#include <gtest/gtest.h>

#include <random>

#include "ordalg/factor.hpp"
#include "ordalg/linalg.hpp"

using namespace ordalg;

namespace {

// Resultant as the determinant of the Sylvester matrix.
Rat sylvester_resultant(const RatPoly& f, const RatPoly& g) {
  const int m = f.degree(), n = g.degree();
  RatMatrix s(m + n, m + n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k) s(i, i + k) = f.coeff(m - k);
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= n; ++k) s(n + i, i + k) = g.coeff(n - k);
  return det(s);
}

RatPoly random_poly(std::mt19937& rng, int deg, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  RatVector c(deg + 1);
  for (auto& x : c) x = dist(rng);
  if (c.back() == 0) c.back() = 1;
  return RatPoly(c);
}

}  // namespace

TEST(Poly, ArithmeticAndDivision) {
  RatPoly f{-1, 0, 0, 0, 1};
  RatPoly g{-1, 1};
  auto [q, r] = divmod(f, g);
  EXPECT_EQ(q, (RatPoly{1, 1, 1, 1}));
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(gcd(f, RatPoly{-1, 0, 1}), (RatPoly{-1, 0, 1}));
  EXPECT_EQ(f.to_string(), "X^4 - 1");
  EXPECT_EQ(f.eval(Rat(2)), Rat(15));
  auto e = ext_gcd(RatPoly{1, 0, 1}, RatPoly{-1, 1});
  EXPECT_EQ(e.s * RatPoly({1, 0, 1}) + e.t * RatPoly({-1, 1}), e.g);
  EXPECT_EQ(e.g, RatPoly{1});
}

TEST(Poly, ResultantMatchesSylvester) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    RatPoly f = random_poly(rng, 1 + trial % 5, 6);
    RatPoly g = random_poly(rng, 1 + (trial / 5) % 4, 6);
    EXPECT_EQ(resultant(f, g), sylvester_resultant(f, g)) << f.to_string() << " / " << g.to_string();
  }
  // common root -> 0
  EXPECT_EQ(resultant(RatPoly{-1, 0, 1}, RatPoly{1, 1}), 0);
}

TEST(Poly, Discriminant) {
  EXPECT_EQ(discriminant(RatPoly{1, 0, 1}), Rat(-4));
  EXPECT_EQ(discriminant(RatPoly{-2, 0, 0, 1}), Rat(-108));
}

TEST(Poly, SquarefreeDecomposition) {
  RatPoly a{-2, 0, 1}, b{1, 1}, c{1, 0, 1};
  RatPoly f = a * pow(b, 2) * pow(c, 3);
  auto dec = squarefree_decomposition(f);
  ASSERT_EQ(dec.size(), 3u);
  EXPECT_EQ(dec[0].first, a);
  EXPECT_EQ(dec[1].first, b);
  EXPECT_EQ(dec[2].first, c);
  EXPECT_EQ(squarefree_part(f), (a * b * c).monic());
}

TEST(Poly, OperatorMinpoly) {
  RatMatrix rot{{Rat(0), Rat(-1)}, {Rat(1), Rat(0)}};
  EXPECT_EQ(minpoly_of_operator(rot, RatVector{Rat(1), Rat(0)}), (RatPoly{1, 0, 1}));
}

TEST(Factor, Cyclotomic) {
  EXPECT_EQ(cyclotomic(1), (RatPoly{-1, 1}));
  EXPECT_EQ(cyclotomic(12), (RatPoly{1, 0, -1, 0, 1}));
  EXPECT_EQ(cyclotomic(5), (RatPoly{1, 1, 1, 1, 1}));
  RatPoly prod{1};
  for (int d : {1, 2, 3, 4, 6, 12}) prod = prod * cyclotomic(d);
  EXPECT_EQ(prod, RatPoly::monomial(Rat(1), 12) - RatPoly{1});
}

TEST(Factor, XTwelveMinusOne) {
  auto fac = factor_q(RatPoly::monomial(Rat(1), 12) - RatPoly{1});
  ASSERT_EQ(fac.factors.size(), 6u);
  std::vector<RatPoly> expect;
  for (int d : {1, 2, 3, 4, 6, 12}) expect.push_back(cyclotomic(d));
  std::sort(expect.begin(), expect.end());
  for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(fac.factors[i].factor, expect[i]);
}

TEST(Factor, SwinnertonDyerIsIrreducible) {
  // reducible modulo every prime
  EXPECT_TRUE(is_irreducible_q(RatPoly{1, 0, -10, 0, 1}));
  RatPoly sd3{576, 0, -960, 0, 352, 0, -40, 0, 1};
  EXPECT_TRUE(is_irreducible_q(sd3));
}

TEST(Factor, RandomProductsRoundTrip) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 25; ++trial) {
    RatPoly f = random_poly(rng, 1 + trial % 4, 5);
    RatPoly g = random_poly(rng, 1 + (trial / 4) % 3, 5);
    RatPoly h = f * g * (trial % 3 == 0 ? f : RatPoly{1});
    auto fac = factor_q(h);
    EXPECT_EQ(fac.expand(), h);
    for (const auto& e : fac.factors) {
      EXPECT_EQ(e.factor.leading(), 1);
      // no proper factor has a rational root test failure: check irreducible
      // by confirming no factor divides another
      EXPECT_GE(e.factor.degree(), 1);
    }
    // at least as many irreducible factors as the split suggests
    std::size_t total = 0;
    for (const auto& e : fac.factors) total += e.multiplicity;
    EXPECT_GE(total, 2u);
  }
}

TEST(Factor, RationalCoefficients) {
  // (X - 1/2)(X^2 + 1/3)
  RatPoly f = RatPoly(RatVector{Rat(-1, 2), Rat(1)}) * RatPoly(RatVector{Rat(1, 3), Rat(0), Rat(1)});
  f = Rat(6) * f;
  auto fac = factor_q(f);
  ASSERT_EQ(fac.factors.size(), 2u);
  EXPECT_EQ(fac.unit, 6);
  EXPECT_EQ(fac.factors[0].factor, RatPoly(RatVector{Rat(-1, 2), Rat(1)}));
  EXPECT_EQ(fac.expand(), f);
}

TEST(Factor, BerlekampSplitsModP) {
  // X^4 + 1 splits into two quadratics mod 3
  auto facs = detail::berlekamp({1, 0, 0, 0, 1}, 3);
  ASSERT_EQ(facs.size(), 2u);
  EXPECT_EQ(facs[0].size(), 3u);
  EXPECT_EQ(facs[1].size(), 3u);
}
