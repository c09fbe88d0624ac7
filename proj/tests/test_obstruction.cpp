#include <gtest/gtest.h>

#include <random>

#include "foxcolor/knot_table.hpp"
#include "foxcolor/obstruction.hpp"

using namespace foxcolor;

namespace {

// Direct scan: does some affine image of {0, ..., k} contain s?
bool covered_by_affine_half(const std::vector<int>& s, int m) {
  const int k = (m - 1) / 2;
  for (int l = 1; l < m; ++l) {
    if (std::gcd(l, m) != 1) continue;
    for (int u = 0; u < m; ++u) {
      std::vector<bool> image(m, false);
      for (int x = 0; x <= k; ++x) image[(l * x + u) % m] = true;
      bool all = true;
      for (int c : s) all = all && image[((c % m) + m) % m];
      if (all) return true;
    }
  }
  return false;
}

std::vector<int> random_subset(std::mt19937& rng, int m) {
  std::vector<int> s;
  for (int x = 0; x < m; ++x)
    if (rng() % 3 == 0) s.push_back(x);
  return s;
}

int dividing_prime(const BigInt& det) {
  for (int p : {3, 5, 7, 11, 13})
    if (det % p == 0) return p;
  return 0;
}

}  // namespace

TEST(LowerHalf, Examples) {
  EXPECT_TRUE(lower_half_blocked({0, 1, 2, 3, 4, 5}, Modulus(11)));
  EXPECT_FALSE(lower_half_blocked({0, 2, 3, 4, 8}, Modulus(11)));
  EXPECT_TRUE(lower_half_blocked({0, 1, 2, 3}, Modulus(7)));
  EXPECT_THROW(lower_half_blocked({0, 1}, Modulus(10)), std::domain_error);
}

TEST(AffineLowerHalf, Examples) {
  auto w = affine_lower_half_blocked({0, 1, 2, 6}, Modulus(7));
  ASSERT_TRUE(w);
  EXPECT_TRUE(lower_half_blocked(apply(w->inverse(), Palette{0, 1, 2, 6}), Modulus(7)));
  EXPECT_EQ(apply(AffineMap(Modulus(7), 1, 6), Palette{0, 1, 2, 3}), (Palette{0, 1, 2, 6}));

  auto v = affine_lower_half_blocked({2, 3, 4, 8}, Modulus(11));
  ASSERT_TRUE(v);
  Palette image;
  for (int x = 0; x <= 5; ++x) image.colors.push_back(AffineMap(Modulus(11), 5, 4)(x));
  image = Palette(image.colors);
  EXPECT_EQ(image, (Palette{2, 3, 4, 7, 8, 9}));

  EXPECT_FALSE(affine_lower_half_blocked({0, 2, 3, 4, 8}, Modulus(11)));
  EXPECT_THROW(affine_lower_half_blocked({0}, Modulus(4)), std::domain_error);
}

TEST(AffineLowerHalf, AgreesWithDirectScan) {
  std::mt19937 rng(17);
  for (int m : {3, 5, 7, 9, 11, 13, 15}) {
    for (int t = 0; t < 300; ++t) {
      auto s = random_subset(rng, m);
      auto w = affine_lower_half_blocked(Palette(s), Modulus(m));
      ASSERT_EQ(w.has_value(), covered_by_affine_half(s, m)) << m;
      if (w) EXPECT_TRUE(lower_half_blocked(apply(w->inverse(), Palette(s)), Modulus(m)));
    }
  }
}

TEST(AffineLowerHalf, ImpliedByLowerHalf) {
  std::mt19937 rng(3);
  for (int m : {5, 7, 11, 13}) {
    for (int t = 0; t < 200; ++t) {
      Palette s(random_subset(rng, m));
      if (lower_half_blocked(s, Modulus(m))) EXPECT_TRUE(affine_lower_half_blocked(s, Modulus(m)));
    }
  }
}

TEST(PairStructure, Examples) {
  auto ps = pair_structure({0, 1, 2, 4}, Modulus(7));
  EXPECT_TRUE(ps.pairs_at.at(0).empty());
  EXPECT_EQ(ps.pairs_at.at(1), (std::set<std::pair<int, int>>{{0, 2}}));
  EXPECT_EQ(ps.pairs_at.at(2), (std::set<std::pair<int, int>>{{0, 4}}));
  EXPECT_EQ(ps.pairs_at.at(4), (std::set<std::pair<int, int>>{{0, 1}}));
  for (int m : {5, 7, 9, 11, 13})
    for (const auto& [c, pairs] : pair_structure({0, 1}, Modulus(m)).pairs_at) EXPECT_TRUE(pairs.empty());
  EXPECT_TRUE(pair_structure({}, Modulus(11)).pairs_at.empty());
}

TEST(PairStructure, BruteForce) {
  std::mt19937 rng(8);
  for (int m : {5, 7, 9, 11, 13}) {
    for (int t = 0; t < 100; ++t) {
      auto s = random_subset(rng, m);
      auto ps = pair_structure(Palette(s), Modulus(m));
      for (int c : s) {
        std::set<std::pair<int, int>> expected;
        for (int a : s)
          for (int b : s)
            if (a < b && (a + b - 2 * c) % m == 0) expected.emplace(a, b);
        EXPECT_EQ(ps.pairs_at[c], expected);
      }
    }
  }
}

TEST(Wraparound, Examples) {
  EXPECT_TRUE(wraparound_exists({0, 1, 2, 4}, Modulus(7)));
  EXPECT_FALSE(wraparound_exists({0, 1, 2}, Modulus(101)));
  for (int m : {3, 5, 7, 11, 13, 15}) {
    std::vector<int> half;
    for (int x = 0; x <= (m - 1) / 2; ++x) half.push_back(x);
    EXPECT_FALSE(wraparound_exists(Palette(half), Modulus(m))) << m;
  }
}

TEST(RemovableColors, Examples) {
  EXPECT_TRUE(removable_colors({0, 1, 2, 4}, Modulus(7)).colors.empty());
  auto ps = pair_structure({0, 1, 2, 6, 11}, Modulus(13));
  EXPECT_EQ(ps.pairs_at.at(0), (std::set<std::pair<int, int>>{{2, 11}}));
  EXPECT_EQ(ps.pairs_at.at(1), (std::set<std::pair<int, int>>{{0, 2}}));
  EXPECT_EQ(ps.pairs_at.at(2), (std::set<std::pair<int, int>>{{6, 11}}));
  EXPECT_EQ(ps.pairs_at.at(6), (std::set<std::pair<int, int>>{{1, 11}}));
  EXPECT_TRUE(ps.pairs_at.at(11).empty());
  EXPECT_TRUE(removable_colors({0, 1, 2, 6, 11}, Modulus(13)).colors.empty());
  EXPECT_EQ(removable_colors({4}, Modulus(11)), (Palette{4}));
}

TEST(Screen, ElevenMinimalSetAllBlockedByAffine) {
  auto rows = screen_candidates({0, 2, 3, 4, 8}, Modulus(11));
  ASSERT_EQ(rows.size(), 5u);
  for (const auto& r : rows) {
    EXPECT_TRUE(r.blocked_by_test(foxcolor::Test::AffineLowerHalf)) << r.subset.to_string();
    ASSERT_TRUE(r.affine_witness);
    EXPECT_TRUE(covered_by_affine_half(r.subset.colors, 11));
  }
}

TEST(Screen, LowerHalfSetBlockedEverywhere) {
  EXPECT_TRUE(lower_half_blocked({0, 1, 2, 3, 4}, Modulus(11)));
  for (const auto& r : screen_candidates({0, 1, 2, 3, 4}, Modulus(11)))
    EXPECT_TRUE(r.blocked_by_test(foxcolor::Test::LowerHalf));
}

TEST(Screen, SevenThreeSubsetsBlocked) {
  for (const auto& r : screen_candidates({0, 1, 2, 4}, Modulus(7))) EXPECT_TRUE(r.blocked());
  EXPECT_TRUE(elimination_candidates({0, 1, 2, 4}, Modulus(7)).colors.empty());
}

TEST(Screen, NeedsTwoColors) {
  EXPECT_THROW(screen_candidates({3}, Modulus(11)), std::invalid_argument);
}

TEST(Screen, MinimalSetsFromTablesPassEveryTest) {
  const std::vector<std::pair<int, Palette>> sets = {
      {11, {0, 2, 3, 4, 8}}, {11, {0, 3, 4, 5, 6}}, {11, {0, 1, 5, 8, 10}}, {11, {2, 3, 4, 6, 9}},
      {11, {0, 1, 2, 3, 6}}, {13, {0, 1, 2, 6, 11}}, {13, {0, 2, 3, 4, 9}}, {13, {0, 1, 3, 8, 12}},
      {13, {0, 3, 4, 5, 10}}};
  for (const auto& [m, s] : sets) {
    EXPECT_FALSE(lower_half_blocked(s, Modulus(m))) << s.to_string();
    EXPECT_FALSE(affine_lower_half_blocked(s, Modulus(m))) << s.to_string();
    EXPECT_TRUE(wraparound_exists(s, Modulus(m))) << s.to_string();
  }
}

TEST(Soundness, EnumeratedPalettesNeverBlocked) {
  for (const auto& k : knot_table()) {
    int p = dividing_prime(link_determinant(k.pd).det_link);
    ASSERT_NE(p, 0) << k.name;
    for (int q : {7, 11, 13, p}) {
      if (link_determinant(k.pd).det_link % q != 0) continue;
      for (const auto& c : enumerate_nontrivial(k.pd, Modulus(q))) {
        Palette s = palette_of(c);
        EXPECT_FALSE(lower_half_blocked(s, Modulus(q))) << k.name;
        EXPECT_FALSE(affine_lower_half_blocked(s, Modulus(q))) << k.name;
        EXPECT_TRUE(wraparound_exists(s, Modulus(q))) << k.name;
      }
    }
  }
}
