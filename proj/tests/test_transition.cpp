#include <gtest/gtest.h>

#include "support.hpp"

namespace tc = threecol;
using namespace threecol::testing;

namespace {

using mbig = tc::matrix5<tc::big_int>;

/// Tallies special-vertex pairs over every colouring of the annulus,
/// without going through the library's boundary enumeration.
mbig tally_by_enumeration(const tc::plane_graph& g, const tc::transition_matrix& m) {
  const tc::subgraph ann = tc::annulus_subgraph(g, tc::cycle{{m.rows.begin(), m.rows.end()}},
                                                tc::cycle{{m.cols.begin(), m.cols.end()}});
  tc::matrix5<std::uint64_t> raw;
  for (const auto& phi : tc::enumerate_3_colorings(ann.graph)) {
    std::array<tc::color, 5> r{}, c{};
    for (std::size_t i = 0; i < 5; ++i) {
      r[i] = phi[*ann.from_parent(m.rows[i])];
      c[i] = phi[*ann.from_parent(m.cols[i])];
    }
    ++raw(tally_special(r), tally_special(c));
  }
  mbig out;
  for (std::size_t k = 0; k < 25; ++k) {
    EXPECT_EQ(raw.a[k] % 6, 0u);
    out.a[k] = raw.a[k] / 6;
  }
  return out;
}

tc::transition_matrix labelled(const tc::matrix5<std::uint64_t>& e, std::array<tc::vertex_id, 5> rows,
                               std::array<tc::vertex_id, 5> cols) {
  tc::transition_matrix m;
  m.entries = e.cast<tc::big_int>();
  m.rows = rows;
  m.cols = cols;
  return m;
}

}  // namespace

TEST(Transition, SharedPathPentagonsRealiseA0) {
  const auto g = tc::shared_path_pentagons();
  const auto m = tc::compute_transition(g, named_cycle(g, {"u1", "u2", "u3", "u4", "u5"}),
                                        named_cycle(g, {"u1", "u2", "u3", "u4", "v"}));
  EXPECT_TRUE(equal_up_to_permutation(m.entries, tc::a0_matrix<tc::big_int>()));
  EXPECT_EQ(6 * m.entries.sum(), 42);
  EXPECT_EQ(m.raw_count, 42u);
  EXPECT_EQ(tc::count_3_colorings(g).count, 42u);
  EXPECT_EQ(tc::classify(m), tc::matrix_class::dominant);
  EXPECT_EQ(m.entries, tally_by_enumeration(g, m));
}

TEST(Transition, PrismChecksumAndTally) {
  const auto g = tc::pentagon_tower(2);
  const auto m = tc::compute_transition(g, tower_layer(g, 0), tower_layer(g, 1));
  EXPECT_EQ(6 * m.entries.sum(), tc::count_3_colorings(g).count);
  EXPECT_EQ(m.entries, tally_by_enumeration(g, m));
  // Two colourings of the prism per (special, special) pair off the
  // diagonal, and twice that on it.
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) EXPECT_EQ(m.entries(i, j), i == j ? 2 : 1);
}

TEST(Transition, LabelsAreClockwiseFromTheLeastId) {
  const auto g = tc::pentagon_tower(3);
  const auto m = tc::compute_transition(g, tower_layer(g, 0), tower_layer(g, 1));
  EXPECT_EQ(m.rows, (std::array<tc::vertex_id, 5>{0, 4, 3, 2, 1}));
  EXPECT_EQ(m.cols, (std::array<tc::vertex_id, 5>{5, 9, 8, 7, 6}));
}

TEST(Transition, ChecksumOnEveryTowerAndPerturbedAnnulus) {
  std::vector<tc::plane_graph> graphs;
  for (std::size_t k = 2; k <= 4; ++k) graphs.push_back(tc::pentagon_tower(k));
  for (std::uint64_t seed = 1; seed <= 4; ++seed) graphs.push_back(tc::perturbed_tower(3, seed, 3));
  for (const auto& g : graphs)
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j) {
        if (!g.find("p" + std::to_string(j) + "_0")) continue;
        const auto m = tc::compute_transition(g, tower_layer(g, i), tower_layer(g, j));
        const auto ann = tc::annulus_subgraph(g, tower_layer(g, i), tower_layer(g, j));
        EXPECT_EQ(6 * m.entries.sum(), tc::count_3_colorings(ann.graph).count);
        EXPECT_EQ(*m.raw_count, tc::count_3_colorings(ann.graph).count);
        for (auto cell : m.raw_cells->a) EXPECT_EQ(cell % 6, 0u);
        EXPECT_NE(tc::classify(m), tc::matrix_class::neither);
      }
}

TEST(Transition, PerturbedAnnulusMatchesEnumeration) {
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const auto g = tc::perturbed_tower(2, seed, 2);
    const auto m = tc::compute_transition(g, tower_layer(g, 0), tower_layer(g, 1));
    EXPECT_EQ(m.entries, tally_by_enumeration(g, m)) << seed;
  }
}

TEST(Transition, RejectsBadInput) {
  const auto g = tc::pentagon_tower(2);
  EXPECT_THROW(tc::compute_transition(g, tower_layer(g, 1), tower_layer(g, 0)), tc::graph_error);
  const auto quad = tc::make_cycle(g, {0, 1, 6, 5});
  EXPECT_THROW(tc::compute_transition(g, tower_layer(g, 0), quad), std::invalid_argument);
  const auto chord = pentagon_with_chord();
  const auto c = named_cycle(chord, {"c0", "c1", "c2", "c3", "c4"});
  EXPECT_THROW(tc::compute_transition(chord, c, c), std::invalid_argument);
}

TEST(Compose, SingletonIsIdentity) {
  const auto g = tc::pentagon_tower(2);
  const std::vector<tc::transition_matrix> one{
      tc::compute_transition(g, tower_layer(g, 0), tower_layer(g, 1))};
  const auto c = tc::compose(one);
  EXPECT_EQ(c.entries, one[0].entries);
  EXPECT_EQ(c.rows, one[0].rows);
  EXPECT_EQ(c.cols, one[0].cols);
}

TEST(Compose, A0ThenIdentity) {
  using m64 = tc::matrix5<std::uint64_t>;
  const std::vector<tc::transition_matrix> ms{labelled(tc::a0_matrix<std::uint64_t>(), {0, 1, 2, 3, 4}, {5, 6, 7, 8, 9}),
                                              labelled(m64::identity(), {5, 6, 7, 8, 9}, {10, 11, 12, 13, 14})};
  const auto c = tc::compose(ms);
  EXPECT_EQ(c.entries, tc::a0_matrix<tc::big_int>());
  EXPECT_EQ(c.rows, ms[0].rows);
  EXPECT_EQ(c.cols, ms[1].cols);
  EXPECT_FALSE(c.raw_count.has_value());
}

TEST(Compose, LabelMismatchIsRejected) {
  using m64 = tc::matrix5<std::uint64_t>;
  const std::vector<tc::transition_matrix> ms{labelled(m64::identity(), {0, 1, 2, 3, 4}, {5, 6, 7, 8, 9}),
                                              labelled(m64::identity(), {5, 9, 8, 7, 6}, {10, 11, 12, 13, 14})};
  EXPECT_THROW(tc::compose(ms), std::invalid_argument);
  EXPECT_THROW(tc::compose(std::span<const tc::transition_matrix>{}), std::invalid_argument);
}

TEST(Compose, TowerOfThreeMatchesDirect) {
  const auto g = tc::pentagon_tower(3);
  const std::vector<tc::transition_matrix> layers{
      tc::compute_transition(g, tower_layer(g, 0), tower_layer(g, 1)),
      tc::compute_transition(g, tower_layer(g, 1), tower_layer(g, 2))};
  const auto direct = tc::compute_transition(g, tower_layer(g, 0), tower_layer(g, 2));
  const auto composed = tc::compose(layers);
  EXPECT_EQ(composed.entries, direct.entries);
  EXPECT_EQ(composed.rows, direct.rows);
  EXPECT_EQ(composed.cols, direct.cols);
  EXPECT_EQ(6 * composed.entries.sum(), tc::count_3_colorings(g).count);
}

TEST(Compose, PerturbedTowerMatchesDirect) {
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const auto g = tc::perturbed_tower(3, seed, 4);
    const std::vector<tc::transition_matrix> layers{
        tc::compute_transition(g, tower_layer(g, 0), tower_layer(g, 1)),
        tc::compute_transition(g, tower_layer(g, 1), tower_layer(g, 2))};
    EXPECT_EQ(tc::compose(layers).entries,
              tc::compute_transition(g, tower_layer(g, 0), tower_layer(g, 2)).entries)
        << seed;
  }
}
