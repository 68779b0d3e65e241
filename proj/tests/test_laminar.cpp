#include <gtest/gtest.h>

#include "support.hpp"

namespace tc = threecol;
using namespace threecol::testing;

namespace {

bool covers(const std::vector<tc::cycle>& fam, tc::vertex_id v) {
  return std::any_of(fam.begin(), fam.end(), [&](const tc::cycle& c) { return c.contains(v); });
}

}  // namespace

TEST(Extract, BarePentagon) {
  const auto g = tc::cycle_graph(5);
  const auto out = tc::extract(g, 2);
  ASSERT_FALSE(out.reducible());
  const auto& cov = out.covering();
  ASSERT_EQ(cov.family.size(), 1u);
  EXPECT_EQ(cov.low_degree.size(), 5u);
  for (tc::vertex_id v = 0; v < 5; ++v) EXPECT_TRUE(covers(cov.family.cycles, v));
}

TEST(Extract, DodecahedronGivesItsFaces) {
  const auto g = tc::dodecahedron();
  for (tc::vertex_id v = 0; v < 20; ++v) EXPECT_FALSE(tc::is_triangle_free(tc::identify_neighbors(g, v)));
  for (const auto& c : tc::enumerate_cycles(g, 5)) {
    const auto r = tc::compute_regions(g, c);
    EXPECT_TRUE(r.interior.empty() || r.exterior.empty());
  }
  const auto out = tc::extract(g, 3);
  ASSERT_FALSE(out.reducible());
  EXPECT_EQ(out.covering().family.cycles, tc::facial_cycles(g, 5));
  for (tc::vertex_id v = 0; v < 20; ++v) EXPECT_TRUE(covers(out.covering().family.cycles, v));
}

TEST(Extract, TreesHaveAReducibleLeaf) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto g = tc::random_tree(9, seed);
    const auto out = tc::extract(g, 1);
    ASSERT_TRUE(out.reducible());
    EXPECT_EQ(g.degree(out.vertex()), 1u);
    EXPECT_TRUE(tc::is_triangle_free(tc::identify_neighbors(g, out.vertex())));
    // The first leaf in id order.
    EXPECT_EQ(out.vertex(), tc::low_degree_set(g, 1).front());
  }
}

TEST(Extract, RejectsTriangles) {
  EXPECT_THROW(tc::extract(triangle(), 3), std::invalid_argument);
}

TEST(Extract, TowerSplitsAlongSeparatingPentagons) {
  for (std::size_t k = 3; k <= 6; ++k) {
    const auto g = tc::pentagon_tower(k);
    const auto out = tc::extract(g, 213);
    ASSERT_FALSE(out.reducible()) << k;
    const auto& fam = out.covering().family.cycles;
    // Layers are the only 5-cycles; all of them are returned.
    EXPECT_EQ(fam, tc::enumerate_cycles(g, 5)) << k;
    EXPECT_EQ(fam.size(), k);
  }
}

TEST(Extract, OutputInvariantsOnCorpus) {
  for (const auto& [id, g] : corpus()) {
    for (std::size_t k : {3, 4, 213}) {
      const auto out = tc::extract(g, k);
      if (out.reducible()) {
        const auto v = out.vertex();
        EXPECT_LE(g.degree(v), k) << id;
        EXPECT_TRUE(tc::is_triangle_free(tc::identify_neighbors(g, v))) << id;
        EXPECT_EQ(v, *tc::find_reducible_vertex(g, k)) << id;
        continue;
      }
      EXPECT_FALSE(tc::find_reducible_vertex(g, k)) << id;
      const auto& fam = out.covering().family.cycles;
      EXPECT_TRUE(tc::is_laminar(g, fam)) << id;
      for (const auto& c : fam) {
        EXPECT_EQ(c.size(), 5u) << id;
        EXPECT_NO_THROW(tc::make_cycle(g, std::span<const tc::vertex_id>(c.vertices))) << id;
      }
      for (tc::vertex_id v : tc::low_degree_set(g, k)) EXPECT_TRUE(covers(fam, v)) << id << " " << g.name(v);
      EXPECT_TRUE(std::is_sorted(fam.begin(), fam.end())) << id;
      EXPECT_EQ(std::adjacent_find(fam.begin(), fam.end()), fam.end()) << id;
    }
  }
}

TEST(Extract, LowDegreeShare) {
  // (k - 1) |D_k| >= (k - 3) n when the minimum degree is at least 2.
  for (const auto& [id, g] : corpus()) {
    std::size_t min_degree = g.vertex_count();
    for (tc::vertex_id v = 0; v < g.vertex_count(); ++v) min_degree = std::min(min_degree, g.degree(v));
    if (min_degree < 2) continue;
    for (std::size_t k : {3, 4, 5, 8, 213})
      EXPECT_TRUE(tc::meets_low_degree_share(tc::low_degree_set(g, k).size(), g.vertex_count(), k)) << id;
  }
}

TEST(Dilworth, DisjointPentagons) {
  const auto g = tc::pentagon_garden(5);
  auto fam = tc::enumerate_cycles(g, 5);
  std::erase(fam, named_cycle(g, {"a0", "a1", "a2", "a3", "a4"}));
  const auto d = tc::dilworth_decompose(g, fam);
  EXPECT_EQ(d.chain.size(), 1u);
  EXPECT_EQ(d.antichain.size(), 5u);
  const auto f = tc::build_containment_forest(g, fam);
  EXPECT_EQ(f.roots.size(), 5u);
}

TEST(Dilworth, TowerOfFive) {
  const auto g = tc::pentagon_tower(5);
  std::vector<tc::cycle> fam;
  for (std::size_t i = 0; i < 5; ++i) fam.push_back(tower_layer(g, 4 - i));
  const auto d = tc::dilworth_decompose(g, fam);
  EXPECT_EQ(d.chain.size(), 5u);
  EXPECT_EQ(d.antichain.size(), 1u);
  for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(d.chain.cycles[i], tower_layer(g, i));
  const auto f = tc::build_containment_forest(g, fam);
  ASSERT_EQ(f.roots.size(), 1u);
  EXPECT_EQ(*std::max_element(f.depth.begin(), f.depth.end()), 5u);
}

TEST(Dilworth, TwoNestedPairsSideBySide) {
  const auto g = twin_prisms();
  const std::vector<tc::cycle> fam{named_cycle(g, {"a0_0", "a0_1", "a0_2", "a0_3", "a0_4"}),
                                   named_cycle(g, {"a1_0", "a1_1", "a1_2", "a1_3", "a1_4"}),
                                   named_cycle(g, {"b0_0", "b0_1", "b0_2", "b0_3", "b0_4"}),
                                   named_cycle(g, {"b1_0", "b1_1", "b1_2", "b1_3", "b1_4"})};
  const auto d = tc::dilworth_decompose(g, fam);
  EXPECT_EQ(d.chain.size(), 2u);
  EXPECT_EQ(d.antichain.size(), 2u);
  const auto f = tc::build_containment_forest(g, fam);
  EXPECT_EQ(f.roots, (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(f.parent[1], 0u);
  EXPECT_EQ(f.parent[3], 2u);
  EXPECT_EQ(f.depth, (std::vector<std::size_t>{1, 2, 1, 2}));
}

TEST(Dilworth, RejectsCrossingFamilies) {
  const auto g = crossing_pentagons();
  const std::vector<tc::cycle> fam{named_cycle(g, {"x", "p", "y", "q", "r"}),
                                   named_cycle(g, {"x", "s", "y", "t", "u"})};
  EXPECT_THROW(tc::dilworth_decompose(g, fam), std::invalid_argument);
}

TEST(Dilworth, OutputsAreChainsAndAntichains) {
  for (const auto& [id, g] : corpus()) {
    const auto out = tc::extract(g, 213);
    if (out.reducible()) continue;
    const auto& fam = out.covering().family.cycles;
    const auto d = tc::dilworth_decompose(g, fam);
    EXPECT_GE(d.chain.size() * d.antichain.size(), fam.size()) << id;
    for (std::size_t i = 0; i + 1 < d.chain.size(); ++i)
      EXPECT_TRUE(tc::interior_contains(tc::compute_regions(g, d.chain.cycles[i]),
                                        tc::compute_regions(g, d.chain.cycles[i + 1])))
          << id;
    for (std::size_t i = 0; i < d.antichain.size(); ++i)
      for (std::size_t j = i + 1; j < d.antichain.size(); ++j)
        EXPECT_TRUE(tc::interiors_disjoint(tc::compute_regions(g, d.antichain.cycles[i]),
                                           tc::compute_regions(g, d.antichain.cycles[j])))
            << id;
    const std::size_t m = fam.size();
    EXPECT_TRUE(tc::antichain_meets_balance(d.antichain.size(), m) || tc::chain_meets_balance(d.chain.size(), m))
        << id;
  }
}

TEST(Dilworth, BalanceThresholdsAreExact) {
  // a >= sqrt(6m/7): m = 7 needs a^2 >= 6, so a = 3 passes and a = 2 fails.
  EXPECT_TRUE(tc::antichain_meets_balance(3, 7));
  EXPECT_FALSE(tc::antichain_meets_balance(2, 7));
  // c >= sqrt(7m/6): m = 6 needs c^2 >= 7.
  EXPECT_TRUE(tc::chain_meets_balance(3, 6));
  EXPECT_FALSE(tc::chain_meets_balance(2, 6));
  // Every (c, a) with c a >= m satisfies one of the two.
  for (std::size_t m = 1; m <= 60; ++m)
    for (std::size_t c = 1; c <= m; ++c) {
      const std::size_t a = (m + c - 1) / c;
      EXPECT_TRUE(tc::antichain_meets_balance(a, m) || tc::chain_meets_balance(c, m)) << m << " " << c;
    }
}
