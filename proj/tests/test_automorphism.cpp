#include <gtest/gtest.h>

#include <random>
#include <set>

#include "foxcolor/automorphism.hpp"
#include "foxcolor/knot_table.hpp"

using namespace foxcolor;

TEST(Apply, NamedImages) {
  EXPECT_EQ(apply(AffineMap(Modulus(5), 2, 0), Palette{0, 1, 2, 3}), (Palette{0, 1, 2, 4}));
  EXPECT_EQ(apply(AffineMap(Modulus(7), 3, 2), Palette{0, 1, 2, 4}), (Palette{0, 1, 2, 5}));
  auto id = AffineMap::identity(Modulus(13));
  for (int x = 0; x < 13; ++x) EXPECT_EQ(id(x), x);
}

TEST(AffineMap, RejectsNonUnit) {
  EXPECT_THROW(AffineMap(Modulus(11), 0, 3), std::domain_error);
  EXPECT_THROW(AffineMap(Modulus(9), 3, 0), std::domain_error);
  EXPECT_NO_THROW(AffineMap(Modulus(9), 2, 0));
}

TEST(GroupAxioms, ExhaustiveForSmallPrimes) {
  for (int p : {5, 7, 11, 13}) {
    Modulus m(p);
    auto g = affine_group(m);
    ASSERT_EQ(static_cast<int>(g.size()), p * (p - 1));
    std::set<std::pair<int, int>> elements;
    for (const auto& f : g) elements.emplace(f.lambda(), f.mu());
    auto id = AffineMap::identity(m);
    for (const auto& f : g) {
      EXPECT_EQ(f.after(id), f);
      EXPECT_EQ(id.after(f), f);
      EXPECT_EQ(f.after(f.inverse()), id);
      EXPECT_EQ(f.inverse().after(f), id);
      for (const auto& h : g) {
        auto fh = f.after(h);
        ASSERT_TRUE(elements.count({fh.lambda(), fh.mu()}));
        for (int x = 0; x < p; ++x) ASSERT_EQ(fh(x), f(h(x)));
      }
    }
    // Associativity on a sample of triples (composition is checked
    // pointwise above, which already implies it).
    std::mt19937 rng(p);
    for (int t = 0; t < 2000; ++t) {
      const auto& a = g[rng() % g.size()];
      const auto& b = g[rng() % g.size()];
      const auto& c = g[rng() % g.size()];
      EXPECT_EQ(a.after(b).after(c), a.after(b.after(c)));
    }
  }
}

TEST(GroupAction, FreeOnNontrivialColorings) {
  for (const auto& k : knot_table()) {
    for (int p : {5, 7, 11, 13}) {
      Modulus m(p);
      auto all = enumerate_nontrivial(k.pd, m);
      if (all.empty()) continue;
      auto g = affine_group(m);
      auto id = AffineMap::identity(m);
      for (const auto& c : all)
        for (const auto& f : g)
          if (!(f == id)) ASSERT_NE(act_on_coloring(f, c), c) << k.name << " " << f.to_string();
    }
  }
}

TEST(GroupAction, PreservesColorings) {
  std::mt19937 rng(1);
  const auto& table = knot_table();
  int checked = 0;
  while (checked < 1000) {
    const auto& k = table[rng() % table.size()];
    int p = std::vector<int>{3, 5, 7, 11, 13}[rng() % 5];
    auto all = enumerate_nontrivial(k.pd, Modulus(p));
    if (all.empty()) continue;
    const auto& c = all[rng() % all.size()];
    AffineMap f(Modulus(p), 1 + static_cast<int>(rng() % (p - 1)), static_cast<int>(rng() % p));
    EXPECT_TRUE(is_coloring(k.pd, act_on_coloring(f, c)));
    ++checked;
  }
}

TEST(ActOnColoring, Examples) {
  Modulus m(11);
  auto id = AffineMap::identity(m);
  Coloring c{m, {0, 1, 2, 4, 7, 7}};
  EXPECT_EQ(act_on_coloring(id, c), c);
  Coloring constant{m, {3, 3, 3}};
  EXPECT_TRUE(act_on_coloring(AffineMap(m, 5, 1), constant).is_trivial());
  EXPECT_EQ(palette_of(act_on_coloring(AffineMap(m, 2, 0), c)), (Palette{0, 2, 3, 4, 8}));
  EXPECT_THROW(act_on_coloring(AffineMap(Modulus(7), 1, 0), c), std::invalid_argument);
}

TEST(FindMapBetweenSets, Examples) {
  EXPECT_FALSE(find_map_between_sets({0, 2, 3, 4, 8}, {0, 3, 4, 5, 6}, Modulus(11)));
  auto f = find_map_between_sets({0, 1, 2, 4, 7}, {0, 2, 3, 4, 8}, Modulus(11));
  ASSERT_TRUE(f);
  EXPECT_EQ(f->lambda(), 2);
  EXPECT_EQ(f->mu(), 0);
  auto g = find_map_between_sets({0, 1, 3, 8, 12}, {0, 1, 2, 6, 11}, Modulus(13));
  ASSERT_TRUE(g);
  EXPECT_EQ(apply(*g, Palette{0, 1, 3, 8, 12}), (Palette{0, 1, 2, 6, 11}));
  EXPECT_THROW(find_map_between_sets({0, 1}, {0, 1, 2}, Modulus(11)), std::invalid_argument);
}

TEST(FindMapBetweenSets, FallbackForTinySets) {
  Modulus m(7);
  auto f = find_map_between_sets(Palette{3}, Palette{5}, m);
  ASSERT_TRUE(f);
  EXPECT_EQ((*f)(3), 5);
  EXPECT_TRUE(find_map_between_sets(Palette{}, Palette{}, m));
}

TEST(FindMapBetweenSets, AgreesWithFullScanAndIsSymmetric) {
  std::mt19937 rng(5);
  for (int p : {5, 7, 11, 13}) {
    Modulus m(p);
    auto g = affine_group(m);
    for (int t = 0; t < 300; ++t) {
      int size = 1 + static_cast<int>(rng() % (p - 1));
      std::vector<int> a, b;
      std::vector<int> all(p);
      std::iota(all.begin(), all.end(), 0);
      std::shuffle(all.begin(), all.end(), rng);
      a.assign(all.begin(), all.begin() + size);
      std::shuffle(all.begin(), all.end(), rng);
      b.assign(all.begin(), all.begin() + size);
      Palette pa(a), pb(b);
      bool scan = std::any_of(g.begin(), g.end(), [&](const AffineMap& f) { return apply(f, pa) == pb; });
      auto f = find_map_between_sets(pa, pb, m);
      ASSERT_EQ(f.has_value(), scan);
      if (f) {
        EXPECT_EQ(apply(*f, pa), pb);
        auto back = find_map_between_sets(pb, pa, m);
        ASSERT_TRUE(back);
        EXPECT_EQ(apply(f->inverse(), pb), pa);
      }
    }
  }
}

TEST(PinningTable, ShapeAndMarks) {
  auto rows = pinning_table({0, 2, 3, 4, 8}, Palette{0, 3, 4, 5, 6}, Modulus(11));
  ASSERT_EQ(rows.size(), 20u);
  for (const auto& r : rows) {
    EXPECT_GE(r.marks(), 1);
    AffineMap f(Modulus(11), r.lambda, r.mu);
    EXPECT_EQ(f(0), r.image0);
    EXPECT_EQ(f(2), r.image1);
  }
  EXPECT_EQ(rows.front().lambda, 7);
  EXPECT_EQ(rows.front().images, (std::vector<int>{10, 6, 1}));
  EXPECT_EQ(rows.back().lambda, 5);
  EXPECT_EQ(rows.back().mu, 6);
}

TEST(EquivalenceClasses, Examples) {
  auto a = equivalence_classes(find_knot("6_2")->pd, Modulus(11));
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(a[0].members.size(), 110u);
  auto b = equivalence_classes(find_knot("9_49")->pd, Modulus(5));
  ASSERT_EQ(b.size(), 6u);
  for (const auto& c : b) EXPECT_EQ(c.members.size(), 20u);
  auto c = equivalence_classes(find_knot("10_3")->pd, Modulus(5));
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].members.size(), 20u);
  EXPECT_THROW(equivalence_classes(find_knot("3_1")->pd, Modulus(5)), std::domain_error);
}

TEST(EquivalenceClasses, CountFormulaOnBundledKnots) {
  for (const auto& k : knot_table())
    for (int p : {3, 5, 7, 11, 13}) {
      int n = link_determinant(k.pd).nullity_of(p);
      if (n < 2) continue;
      long long pw = 1;
      for (int i = 0; i < n - 1; ++i) pw *= p;
      auto classes = equivalence_classes(k.pd, Modulus(p));
      EXPECT_EQ(static_cast<long long>(classes.size()), (pw - 1) / (p - 1)) << k.name << " " << p;
      for (const auto& c : classes) EXPECT_EQ(static_cast<int>(c.members.size()), p * (p - 1));
    }
}

TEST(NormalizeTo012, Examples) {
  Diagram d = find_knot("6_2")->pd;
  Modulus m(11);
  for (const auto& c : enumerate_nontrivial(d, m)) {
    Coloring n = normalize_to_012(d, c);
    EXPECT_TRUE(is_coloring(d, n));
    Palette p = palette_of(n);
    EXPECT_TRUE(p.contains(0) && p.contains(1) && p.contains(2));
    EXPECT_TRUE(find_map_between_sets(palette_of(c), p, m));
  }
  EXPECT_THROW(normalize_to_012(d, Coloring{m, std::vector<int>(6, 4)}), std::domain_error);
}

TEST(NormalizeTo012, PaletteWithZeroTwoThreeFourEight) {
  Diagram d = find_knot("6_2")->pd;
  Modulus m(11);
  // A coloring of the minimal diagram mapped to contain the set's colors is
  // not available (the minimal diagram uses six colors); normalizing any
  // coloring still yields 0, 1, 2 at the first polychromatic crossing.
  auto first = enumerate_nontrivial(d, m).front();
  Coloring n = normalize_to_012(d, first);
  ArcPartition a = arcs(d);
  for (const auto& x : d.crossings()) {
    int u = n.values[a.arc_of_edge[x.under_in()]], o = n.values[a.arc_of_edge[x.over_a()]];
    if (u == o) continue;
    EXPECT_EQ(u, 0);
    EXPECT_EQ(o, 1);
    EXPECT_EQ(n.values[a.arc_of_edge[x.under_out()]], 2);
    break;
  }
}

TEST(OrbitOfSet, Examples) {
  auto four = orbit_of_set({0, 1, 2, 3}, Modulus(5));
  EXPECT_EQ(four.size(), 5u);
  auto o13 = orbit_of_set({0, 1, 2, 6, 11}, Modulus(13));
  EXPECT_TRUE(o13.count(Palette{0, 2, 3, 4, 9}));
  EXPECT_TRUE(o13.count(Palette{0, 3, 4, 5, 10}));
  auto x = orbit_of_set({0, 2, 3, 4, 8}, Modulus(11));
  auto y = orbit_of_set({0, 3, 4, 5, 6}, Modulus(11));
  for (const auto& s : x) EXPECT_FALSE(y.count(s));
}
