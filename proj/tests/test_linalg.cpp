#include <gtest/gtest.h>

#include <random>

#include "ordalg/linalg.hpp"

using namespace ordalg;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
  return m;
}

// Laplace expansion; independent of the elimination code.
Int cofactor_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Int d = 0;
  for (std::size_t j = 0; j < n; ++j) {
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t k = 0, kk = 0; k < n; ++k)
        if (k != j) minor(i - 1, kk++) = m(i, k);
    Int term = m(0, j) * cofactor_det(minor);
    d += (j % 2 ? -term : term);
  }
  return d;
}

}  // namespace

TEST(Hnf, ShapeAndUnimodularTransform) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t r = 1 + trial % 4, c = 1 + (trial / 4) % 5;
    IntMatrix m = random_matrix(rng, r, c, -9, 9);
    auto res = hnf(m);
    EXPECT_EQ(m * res.u, res.h);
    EXPECT_EQ(abs_int(det(res.u)), 1);
    std::size_t prev = 0;
    for (std::size_t j = 0; j < res.rank(); ++j) {
      std::size_t p = res.pivot_rows[j];
      if (j) EXPECT_GT(p, prev);
      prev = p;
      EXPECT_GT(res.h(p, j), 0);
      for (std::size_t i = 0; i < p; ++i) EXPECT_EQ(res.h(i, j), 0);
      for (std::size_t k = 0; k < j; ++k) {
        EXPECT_GE(res.h(p, k), 0);
        EXPECT_LT(res.h(p, k), res.h(p, j));
      }
    }
    for (std::size_t j = res.rank(); j < c; ++j)
      for (std::size_t i = 0; i < r; ++i) EXPECT_EQ(res.h(i, j), 0);
    EXPECT_EQ(res.rank(), rank_rat(to_rat(m)));
  }
}

TEST(Snf, DiagonalDivisibility) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t r = 1 + trial % 4, c = 1 + (trial / 3) % 4;
    IntMatrix m = random_matrix(rng, r, c, -12, 12);
    auto res = snf(m);
    EXPECT_EQ(res.u * m * res.v, res.d);
    EXPECT_EQ(abs_int(det(res.u)), 1);
    EXPECT_EQ(abs_int(det(res.v)), 1);
    auto diag = res.diagonal();
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (i != j) EXPECT_EQ(res.d(i, j), 0);
    for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
      EXPECT_GE(diag[i], 0);
      if (diag[i] != 0) {
        EXPECT_EQ(diag[i + 1] % diag[i], 0);
      } else {
        EXPECT_EQ(diag[i + 1], 0);
      }
    }
  }
}

TEST(Det, MatchesCofactorExpansion) {
  std::mt19937 rng(3);
  for (int n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      IntMatrix m = random_matrix(rng, n, n, -20, 20);
      EXPECT_EQ(det(m), cofactor_det(m));
      EXPECT_EQ(det(to_rat(m)), Rat(cofactor_det(m)));
    }
  }
}

TEST(Lattice, IntersectionAgainstBoxEnumeration) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 25; ++trial) {
    IntMatrix a = random_matrix(rng, 2, 2, -4, 4);
    IntMatrix b = random_matrix(rng, 2, 2, -4, 4);
    if (det(a) == 0 || det(b) == 0) continue;
    Lattice la = Lattice::generated_by(a), lb = Lattice::generated_by(b);
    Lattice lc = intersect_lattices(la, lb);
    for (int x = -15; x <= 15; ++x)
      for (int y = -15; y <= 15; ++y) {
        IntVector v{Int(x), Int(y)};
        EXPECT_EQ(lc.contains(v), la.contains(v) && lb.contains(v));
      }
    // index multiplicativity
    EXPECT_EQ(index(lc, Lattice::full(2)), lc.covolume());
    EXPECT_EQ(index(lc, la) * la.covolume(), lc.covolume());
    Lattice ls = sum_lattices(la, lb);
    EXPECT_TRUE(ls.contains(la));
    EXPECT_TRUE(ls.contains(lb));
    // |A+B| * |A cap B| = |A| * |B| for covolumes in Z^n
    EXPECT_EQ(ls.covolume() * lc.covolume(), la.covolume() * lb.covolume());
  }
}

TEST(Lattice, CoordinatesAndReduce) {
  IntMatrix g{{2, 0, 4}, {1, 3, 5}};
  Lattice l = Lattice::generated_by(g);
  EXPECT_TRUE(l.is_full_rank());
  EXPECT_EQ(l.covolume(), 6);
  IntVector v{Int(6), Int(9)};
  auto c = l.coordinates(v);
  ASSERT_TRUE(c);
  EXPECT_EQ(l.basis() * *c, v);
  EXPECT_FALSE(l.contains(IntVector{Int(1), Int(0)}));
  // reduce lands in a canonical residue, equal for congruent vectors
  IntVector w{Int(7), Int(-4)};
  IntVector w2 = w;
  w2[0] += 2 * 5;
  w2[1] += 1 * 5;
  EXPECT_EQ(l.reduce(w), l.reduce(w2));
  EXPECT_THROW(index(l, Lattice::generated_by(IntMatrix{{2, 0}, {0, 2}})), DomainError);
}

TEST(Lattice, KernelAndPreimage) {
  IntMatrix m{{1, 2, 3}, {4, 5, 6}};
  Lattice k = kernel_int(m);
  ASSERT_EQ(k.rank(), 1u);
  IntVector v = k.basis().column(0);
  EXPECT_EQ(m * v, (IntVector{Int(0), Int(0)}));
  EXPECT_EQ(abs_int(v[0]), 1);  // saturated: (1,-2,1)

  IntMatrix mult{{0, 1}, {1, 0}};
  Lattice target = Lattice::generated_by(IntMatrix{{2, 0}, {0, 1}});
  Lattice pre = preimage(mult, target);
  EXPECT_EQ(pre, Lattice::generated_by(IntMatrix{{1, 0}, {0, 2}}));
}

TEST(Invariants, InvariantFactors) {
  IntMatrix rel{{2, 0}, {0, 4}};
  EXPECT_EQ(invariant_factors(rel), (IntVector{Int(2), Int(4)}));
  IntMatrix rel2{{4, 0}, {0, 6}};
  EXPECT_EQ(invariant_factors(rel2), (IntVector{Int(2), Int(12)}));
}

TEST(Rational, InverseAndSolve) {
  RatMatrix m{{Rat(2), Rat(1)}, {Rat(1), Rat(1)}};
  RatMatrix inv = inverse(m);
  EXPECT_EQ(m * inv, RatMatrix::identity(2));
  RatMatrix sing{{Rat(1), Rat(2)}, {Rat(2), Rat(4)}};
  EXPECT_THROW(inverse(sing), DomainError);
  EXPECT_FALSE(solve_rat(sing, RatVector{Rat(1), Rat(0)}));
  EXPECT_EQ(kernel_rat(sing).cols(), 1u);
}
