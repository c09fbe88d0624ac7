#include <gtest/gtest.h>

#include <random>

#include "foxcolor/knot_table.hpp"
#include "foxcolor/linalg.hpp"
#include "foxcolor/modular.hpp"

using namespace foxcolor;

namespace {

IntMatrix random_matrix(std::mt19937& rng) {
  int r = 1 + static_cast<int>(rng() % 6), c = 1 + static_cast<int>(rng() % 6);
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = static_cast<int>(rng() % 19) - 9;
  return m;
}

bool is_diagonal(const IntMatrix& d) {
  for (int i = 0; i < d.rows(); ++i)
    for (int j = 0; j < d.cols(); ++j)
      if (i != j && d(i, j) != 0) return false;
  return true;
}

// Divisibility chain with 0 divisible by everything.
bool chain_ok(const std::vector<BigInt>& diag) {
  for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
    if (diag[i] < 0) return false;
    if (diag[i] == 0) {
      if (diag[i + 1] != 0) return false;
    } else if (diag[i + 1] % diag[i] != 0) {
      return false;
    }
  }
  return diag.empty() || diag.back() >= 0;
}

std::vector<long> as_longs(const std::vector<BigInt>& v) {
  std::vector<long> out;
  for (const auto& x : v) out.push_back(static_cast<long>(x));
  return out;
}

}  // namespace

TEST(Snf, TrefoilDiagonal) {
  Diagram d = parse_pd("X 1 4 2 5\nX 3 6 4 1\nX 5 2 6 3");
  auto s = smith_normal_form(coloring_matrix(d));
  EXPECT_EQ(as_longs(smith_diagonal(s.D)), (std::vector<long>{1, 3, 0}));
}

TEST(Snf, IdentityAndZero) {
  auto s = smith_normal_form(IntMatrix::identity(2));
  EXPECT_EQ(s.D, IntMatrix::identity(2));
  EXPECT_EQ(s.U, IntMatrix::identity(2));
  EXPECT_EQ(s.V, IntMatrix::identity(2));
  auto z = smith_normal_form(IntMatrix(1, 1));
  EXPECT_EQ(as_longs(smith_diagonal(z.D)), (std::vector<long>{0}));
}

TEST(Snf, RandomMatricesSatisfyIdentity) {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 1000; ++trial) {
    IntMatrix a = random_matrix(rng);
    auto s = smith_normal_form(a);
    ASSERT_EQ(s.U * a * s.V, s.D) << "trial " << trial;
    ASSERT_TRUE(is_diagonal(s.D));
    ASSERT_EQ(abs(determinant(s.U)), 1);
    ASSERT_EQ(abs(determinant(s.V)), 1);
    std::vector<BigInt> diag;
    for (int i = 0; i < std::min(a.rows(), a.cols()); ++i) diag.push_back(s.D(i, i));
    ASSERT_TRUE(chain_ok(diag)) << "trial " << trial;
  }
}

TEST(Snf, ProductOfDiagonalIsDeterminantForSquare) {
  // Independent check through Bareiss elimination.
  std::mt19937 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 1 + static_cast<int>(rng() % 6);
    IntMatrix a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = static_cast<int>(rng() % 19) - 9;
    BigInt prod = 1;
    for (const auto& x : smith_diagonal(smith_normal_form(a).D)) prod *= x;
    EXPECT_EQ(prod, abs(determinant(a)));
  }
}

TEST(ColoringMatrix, TrefoilRowsArePermutationsOfTwoMinusOneMinusOne) {
  IntMatrix m = coloring_matrix(parse_pd("X 1 4 2 5\nX 3 6 4 1\nX 5 2 6 3"));
  ASSERT_EQ(m.rows(), 3);
  ASSERT_EQ(m.cols(), 3);
  for (int i = 0; i < 3; ++i) {
    std::vector<long> row;
    for (int j = 0; j < 3; ++j) row.push_back(static_cast<long>(m(i, j)));
    std::sort(row.begin(), row.end());
    EXPECT_EQ(row, (std::vector<long>{-1, -1, 2}));
  }
}

TEST(ColoringMatrix, KinkIsZero) {
  IntMatrix m = coloring_matrix(parse_pd("X 1 1 2 2"));
  ASSERT_EQ(m.rows(), 1);
  ASSERT_EQ(m.cols(), 1);
  EXPECT_EQ(m(0, 0), 0);
}

TEST(ColoringMatrix, TorusKnotIsCirculantUpToOrdering) {
  for (int n : {3, 5, 11, 13}) {
    IntMatrix m = coloring_matrix(torus_2n(n));
    ASSERT_EQ(m.rows(), n);
    ASSERT_EQ(m.cols(), n);
    for (int i = 0; i < n; ++i) {
      int twos = 0, minus = 0, zeros = 0;
      for (int j = 0; j < n; ++j) {
        if (m(i, j) == 2) ++twos;
        else if (m(i, j) == -1) ++minus;
        else if (m(i, j) == 0) ++zeros;
      }
      EXPECT_EQ(twos, 1);
      EXPECT_EQ(minus, 2);
      EXPECT_EQ(zeros, n - 3);
    }
    // The -1's of a row sit on the arcs adjacent to its 2 along the braid:
    // every column also holds exactly one 2 and two -1's.
    for (int j = 0; j < n; ++j) {
      int twos = 0, minus = 0;
      for (int i = 0; i < n; ++i) {
        if (m(i, j) == 2) ++twos;
        if (m(i, j) == -1) ++minus;
      }
      EXPECT_EQ(twos, 1);
      EXPECT_EQ(minus, 2);
    }
  }
}

TEST(LinkDeterminant, BundledKnotsAgreeWithFirstMinor) {
  // For a knot, any first minor of the coloring matrix has |det| = det.
  for (const auto& k : knot_table()) {
    IntMatrix m = coloring_matrix(k.pd);
    const int n = m.rows();
    IntMatrix minor(n - 1, n - 1);
    for (int i = 1; i < n; ++i)
      for (int j = 1; j < n; ++j) minor(i - 1, j - 1) = m(i, j);
    EXPECT_EQ(abs(determinant(minor)), link_determinant(k.pd).det_link) << k.name;
  }
}

TEST(LinkDeterminant, SummaryInvariants) {
  for (const auto& k : knot_table()) {
    SNFSummary s = link_determinant(k.pd);
    EXPECT_TRUE(chain_ok(s.diagonal)) << k.name;
    EXPECT_GE(std::count(s.diagonal.begin(), s.diagonal.end(), BigInt(0)), 1) << k.name;
    for (int p = 2; p <= 50; ++p) {
      if (!is_prime(p)) continue;
      EXPECT_GE(s.nullity_of(p), 1);
      EXPECT_EQ(s.nullity_of(p) >= 2, s.det_link % p == 0) << k.name << " p=" << p;
    }
  }
}

TEST(LinkDeterminant, NullDeterminantLink) {
  SNFSummary s = link_determinant(parse_braid("s1 -s1", 2));
  EXPECT_EQ(s.det_link, 0);
  EXPECT_EQ(s.nullity_of(7), 2);
}

TEST(LinkDeterminant, FreeLoopsAddZeroColumns) {
  Diagram unknot = Diagram::from_crossings({}, 1);
  EXPECT_EQ(link_determinant(unknot).det_link, 1);
  Diagram two = Diagram::from_crossings({}, 2);
  EXPECT_EQ(link_determinant(two).det_link, 0);
}

TEST(LinkDeterminant, NinesAndTens) {
  auto a = link_determinant(find_knot("9_49")->pd);
  auto b = link_determinant(find_knot("10_3")->pd);
  EXPECT_EQ(a.det_link, 25);
  EXPECT_EQ(b.det_link, 25);
  EXPECT_EQ(a.nullity_of(5), 3);
  EXPECT_EQ(b.nullity_of(5), 2);
}
