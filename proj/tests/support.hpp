#pragma once

// Independent oracles, hand-built fixtures and the shared test corpus.
// The oracles deliberately avoid the library's search code.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "threecol/threecol.hpp"

namespace threecol::testing {

// ---------------------------------------------------------------- oracles

/// Scans all 3^n assignments. n <= 13.
template <graph_like G>
std::uint64_t brute_force_count(const G& g) {
  const std::size_t n = g.vertex_count();
  std::vector<int> c(n, 0);
  std::uint64_t total = 0;
  std::uint64_t limit = 1;
  for (std::size_t i = 0; i < n; ++i) limit *= 3;
  for (std::uint64_t code = 0; code < limit; ++code) {
    std::uint64_t x = code;
    for (std::size_t i = 0; i < n; ++i) {
      c[i] = static_cast<int>(x % 3);
      x /= 3;
    }
    bool ok = true;
    for (vertex_id u = 0; u < n && ok; ++u)
      for (vertex_id v : g.neighbors(u))
        if (c[u] == c[v]) {
          ok = false;
          break;
        }
    total += ok;
  }
  return total;
}

/// Dynamic programming over a BFS vertex order. The state is the colouring
/// of the processed vertices that still have unprocessed neighbours.
template <graph_like G>
std::uint64_t frontier_count(const G& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return 1;
  std::vector<vertex_id> order;
  std::vector<bool> seen(n, false);
  for (vertex_id s = 0; s < n; ++s) {
    if (seen[s]) continue;
    seen[s] = true;
    order.push_back(s);
    for (std::size_t h = order.size() - 1; h < order.size(); ++h)
      for (vertex_id w : g.neighbors(order[h]))
        if (!seen[w]) {
          seen[w] = true;
          order.push_back(w);
        }
  }
  std::vector<std::size_t> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[order[i]] = i;
  auto last_neighbor = [&](vertex_id v) {
    std::size_t last = pos[v];
    for (vertex_id w : g.neighbors(v)) last = std::max(last, pos[w]);
    return last;
  };

  std::vector<vertex_id> frontier;
  std::map<std::vector<std::uint8_t>, std::uint64_t> states{{{}, 1}};
  for (std::size_t t = 0; t < n; ++t) {
    const vertex_id v = order[t];
    std::vector<vertex_id> next_frontier;
    for (vertex_id f : frontier)
      if (last_neighbor(f) > t) next_frontier.push_back(f);
    if (last_neighbor(v) > t) next_frontier.push_back(v);
    std::map<std::vector<std::uint8_t>, std::uint64_t> next;
    for (const auto& [key, ways] : states) {
      for (std::uint8_t c = 1; c <= 3; ++c) {
        bool ok = true;
        for (std::size_t i = 0; i < frontier.size(); ++i)
          if (key[i] == c && g.has_edge(frontier[i], v)) ok = false;
        if (!ok) continue;
        std::vector<std::uint8_t> nk;
        for (vertex_id f : next_frontier) {
          if (f == v) {
            nk.push_back(c);
          } else {
            const auto i = static_cast<std::size_t>(std::find(frontier.begin(), frontier.end(), f) - frontier.begin());
            nk.push_back(key[i]);
          }
        }
        next[nk] += ways;
      }
    }
    states = std::move(next);
    frontier = std::move(next_frontier);
  }
  std::uint64_t total = 0;
  for (const auto& [key, ways] : states) total += ways;
  return total;
}

/// The vertex position whose colour occurs once, by counting colours.
inline std::size_t tally_special(std::span<const color> five) {
  std::array<int, 4> seen{};
  for (color c : five) ++seen[c];
  for (std::size_t i = 0; i < 5; ++i)
    if (seen[five[i]] == 1) return i;
  return 5;
}

/// Literal definition: some pair of permutations (p, q) with
/// a(i, j) >= b(p(i), q(j)) everywhere. Tries all 14400 pairs.
template <class T>
bool dominates_by_definition(const matrix5<T>& a, const matrix5<T>& b) {
  std::array<int, 5> p{0, 1, 2, 3, 4};
  do {
    std::array<int, 5> q{0, 1, 2, 3, 4};
    do {
      bool ok = true;
      for (int i = 0; i < 5 && ok; ++i)
        for (int j = 0; j < 5 && ok; ++j) ok = a(i, j) >= b(p[i], q[j]);
      if (ok) return true;
    } while (std::next_permutation(q.begin(), q.end()));
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

/// Some pair of permutations maps a exactly onto b.
template <class T>
bool equal_up_to_permutation(const matrix5<T>& a, const matrix5<T>& b) {
  std::array<int, 5> p{0, 1, 2, 3, 4};
  do {
    std::array<int, 5> q{0, 1, 2, 3, 4};
    do {
      bool ok = true;
      for (int i = 0; i < 5 && ok; ++i)
        for (int j = 0; j < 5 && ok; ++j) ok = a(i, j) == b(p[i], q[j]);
      if (ok) return true;
    } while (std::next_permutation(q.begin(), q.end()));
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

/// s_k and S written out from the definition.
template <class T>
big_int oracle_potential(const vector5<T>& x) {
  std::array<big_int, 5> s;
  for (std::size_t i = 0; i < 5; ++i) s[i] = big_int(x[i]);
  std::sort(s.begin(), s.end());
  const big_int s1 = s[0], s2 = s[0] + s[1], s4 = s2 + s[2] + s[3], s5 = s4 + s[4];
  return s1 * s2 * s4 * s5;
}

// --------------------------------------------------------------- fixtures

/// Rebuilds g with the face whose vertex set is `face` as the outer face.
inline plane_graph with_outer_face(const plane_graph& g, std::vector<vertex_id> face) {
  std::sort(face.begin(), face.end());
  for (const auto& walk : g.faces()) {
    std::vector<vertex_id> s(walk);
    std::sort(s.begin(), s.end());
    if (s == face) {
      std::vector<std::vector<vertex_id>> rot(g.vertex_count());
      for (vertex_id v = 0; v < g.vertex_count(); ++v) {
        auto r = g.rotation(v);
        rot[v].assign(r.begin(), r.end());
      }
      return plane_graph(g.names(), std::move(rot), dart{walk[0], walk[1]});
    }
  }
  throw std::invalid_argument("no such face");
}

inline plane_graph single_vertex() { return plane_graph({"a"}, {{}}, std::nullopt); }

inline plane_graph single_edge() { return plane_graph({"a", "b"}, {{1}, {0}}, dart{0, 1}); }

inline plane_graph triangle() { return cycle_graph(3); }

/// Pentagon c0..c4 with the chord c0 c2 drawn inside; the pentagon stays
/// the outer face.
inline plane_graph pentagon_with_chord() {
  detail::drawing d;
  for (int j = 0; j < 5; ++j) d.add("c" + std::to_string(j), 1.0, 90.0 + 72.0 * j);
  for (vertex_id j = 0; j < 5; ++j) d.join(j, (j + 1) % 5);
  d.join(0, 2);
  const plane_graph g = d.embed({0, 1});
  return with_outer_face(g, {0, 1, 2, 3, 4});
}

/// x and y joined by four internally disjoint paths x-p-y, x-s-y, x-r-q-y
/// and x-u-t-y, leaving x in that interleaved clockwise order. The pentagons
/// x p y q r and x s y t u meet in x and y only and cross there.
inline plane_graph crossing_pentagons() {
  detail::drawing d;
  const vertex_id x = d.add("x", 2.0, 180.0), y = d.add("y", 2.0, 0.0);
  const vertex_id p = d.add("p", 3.0, 90.0), s = d.add("s", 0.0, 0.0);
  const vertex_id r = d.add("r", std::sqrt(5.0), 180.0 + 63.4349488);
  const vertex_id q = d.add("q", std::sqrt(5.0), -63.4349488);
  const vertex_id u = d.add("u", 5.0, 180.0 + 53.1301024), t = d.add("t", 5.0, -53.1301024);
  d.join(x, p), d.join(p, y);
  d.join(x, s), d.join(s, y);
  d.join(x, r), d.join(r, q), d.join(q, y);
  d.join(x, u), d.join(u, t), d.join(t, y);
  return with_outer_face(d.embed({x, p}), {x, p, y, t, u});
}

/// Two pentagonal prisms side by side, joined by one edge between their
/// outer pentagons: a<i>_<j> and b<i>_<j>.
inline plane_graph twin_prisms() {
  detail::drawing d;
  auto place = [&](const std::string& tag, double cx, double offset) {
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 5; ++j) {
        const double r = i == 0 ? 2.0 : 1.0, t = (offset + 72.0 * j) * std::numbers::pi / 180.0;
        d.names.push_back(tag + std::to_string(i) + "_" + std::to_string(j));
        d.at.emplace_back(cx + r * std::cos(t), r * std::sin(t));
      }
  };
  place("a", -6.0, 0.0);
  place("b", 6.0, 180.0);
  for (vertex_id base : {0u, 10u})
    for (vertex_id j = 0; j < 5; ++j) {
      d.join(base + j, base + (j + 1) % 5);
      d.join(base + 5 + j, base + 5 + (j + 1) % 5);
      d.join(base + j, base + 5 + j);
    }
  d.join(0, 10);
  const plane_graph g = d.embed({0, 10});
  std::size_t longest = 0;
  for (std::size_t f = 0; f < g.face_count(); ++f)
    if (g.faces()[f].size() > g.faces()[longest].size()) longest = f;
  return with_outer_face(g, g.faces()[longest]);
}

inline cycle named_cycle(const plane_graph& g, std::initializer_list<const char*> names) {
  std::vector<vertex_id> ids;
  for (const char* n : names) ids.push_back(g.find(n).value());
  return make_cycle(g, std::span<const vertex_id>(ids));
}

/// Layer i of a (possibly perturbed) pentagon tower.
inline cycle tower_layer(const plane_graph& g, std::size_t i) {
  std::vector<vertex_id> ids;
  for (std::size_t j = 0; j < 5; ++j) ids.push_back(g.find("p" + std::to_string(i) + "_" + std::to_string(j)).value());
  return make_cycle(g, std::span<const vertex_id>(ids));
}

// ----------------------------------------------------------------- corpus

struct corpus_entry {
  std::string id;
  plane_graph graph;
};

/// Triangle-free plane graphs with at most 40 vertices.
inline std::vector<corpus_entry> corpus() {
  std::vector<corpus_entry> out;
  for (std::size_t k = 1; k <= 6; ++k) out.push_back({"tower-" + std::to_string(k), pentagon_tower(k)});
  out.push_back({"shared", shared_path_pentagons()});
  out.push_back({"dodecahedron", dodecahedron()});
  for (std::size_t m = 4; m <= 8; ++m) out.push_back({"garden-" + std::to_string(m), pentagon_garden(m)});
  for (std::size_t n : {4, 6, 7}) out.push_back({"cycle-" + std::to_string(n), cycle_graph(n)});
  out.push_back({"path-6", path_graph(6)});
  for (std::uint64_t seed : {1, 2}) out.push_back({"tree-" + std::to_string(seed), random_tree(12, seed)});
  for (std::size_t k : {2, 3, 4, 5})
    for (std::uint64_t seed : {1, 2, 3})
      for (std::size_t ops : {2, 5}) {
        plane_graph g = perturbed_tower(k, seed, ops);
        if (g.vertex_count() > 40) continue;
        out.push_back({"perturbed-" + std::to_string(k) + "-" + std::to_string(seed) + "-" + std::to_string(ops),
                       std::move(g)});
      }
  return out;
}

}  // namespace threecol::testing
