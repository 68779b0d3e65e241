#pragma once

// Laminar families of 5-cycles: the reducible-vertex / covering-family
// dichotomy, and chain/antichain decomposition of the containment order.

#include <algorithm>
#include <optional>
#include <span>
#include <stdexcept>
#include <variant>
#include <vector>

#include "threecol/plane_graph.hpp"

namespace threecol {

enum class family_kind { general, laminar, chain, antichain };

struct cycle_family {
  std::vector<cycle> cycles;
  family_kind kind = family_kind::general;

  std::size_t size() const noexcept { return cycles.size(); }
};

struct reducible_vertex {
  vertex_id vertex;
};

struct covering_family {
  cycle_family family;               // laminar, 5-cycles only
  std::vector<vertex_id> low_degree;  // D_k, every member lies on a cycle of the family
};

struct laminar_outcome {
  std::variant<reducible_vertex, covering_family> result;
  std::size_t k = 0;

  bool reducible() const { return std::holds_alternative<reducible_vertex>(result); }
  vertex_id vertex() const { return std::get<reducible_vertex>(result).vertex; }
  const covering_family& covering() const { return std::get<covering_family>(result); }
};

/// First v in D_k (ascending id) with G_v triangle-free.
inline std::optional<vertex_id> find_reducible_vertex(const plane_graph& g, std::size_t k) {
  for (vertex_id v : low_degree_set(g, k))
    if (is_triangle_free(identify_neighbors(g, v))) return v;
  return std::nullopt;
}

namespace detail {

inline void collect_laminar_fives(const plane_graph& g, std::size_t k,
                                  const std::vector<vertex_id>& to_root, std::vector<cycle>& out) {
  const std::vector<cycle> fives = enumerate_cycles(g, 5);
  std::optional<std::size_t> split;
  std::size_t best_inside = 0;
  std::vector<region_partition> regions;
  regions.reserve(fives.size());
  for (std::size_t i = 0; i < fives.size(); ++i) {
    regions.push_back(compute_regions(g, fives[i]));
    const auto& r = regions.back();
    if (r.interior.empty() || r.exterior.empty()) continue;
    if (!split || r.interior.size() < best_inside) {
      split = i;
      best_inside = r.interior.size();
    }
  }
  if (!split) {
    for (const cycle& c : fives) {
      std::vector<vertex_id> s;
      for (vertex_id v : c.vertices) s.push_back(to_root[v]);
      out.push_back(cycle{canonical_form(s)});
    }
    return;
  }
  for (bool inside : {true, false}) {
    const subgraph piece = side_subgraph(g, fives[*split], regions[*split], inside);
    if (find_reducible_vertex(piece.graph, k))
      throw std::logic_error("a piece split off along a separating 5-cycle has a reducible vertex");
    std::vector<vertex_id> map;
    for (vertex_id v : piece.to_parent) map.push_back(to_root[v]);
    collect_laminar_fives(piece.graph, k, map, out);
  }
}

}  // namespace detail

/// Either a vertex v of degree <= k with G_v triangle-free, or a laminar
/// family of 5-cycles covering every vertex of degree <= k. Without a
/// reducible vertex, the graph is split along the separating 5-cycle with
/// the fewest interior vertices (ties: least canonical cycle) and the
/// families of both closed sides are merged; a graph with no separating
/// 5-cycle contributes all of its 5-cycles.
inline laminar_outcome extract(const plane_graph& g, std::size_t k) {
  if (!is_triangle_free(g)) throw std::invalid_argument("extract needs a triangle-free graph");
  laminar_outcome out;
  out.k = k;
  if (auto v = find_reducible_vertex(g, k)) {
    out.result = reducible_vertex{*v};
    return out;
  }
  std::vector<vertex_id> identity(g.vertex_count());
  for (vertex_id v = 0; v < g.vertex_count(); ++v) identity[v] = v;
  covering_family cov;
  detail::collect_laminar_fives(g, k, identity, cov.family.cycles);
  auto& cs = cov.family.cycles;
  std::sort(cs.begin(), cs.end());
  cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
  cov.low_degree = low_degree_set(g, k);
  for (vertex_id v : cov.low_degree) {
    const bool covered = std::any_of(cs.begin(), cs.end(), [&](const cycle& c) { return c.contains(v); });
    if (!covered) throw std::logic_error("low-degree vertex not covered by the laminar family");
  }
  if (!is_laminar(g, cs)) throw std::logic_error("extracted family is not laminar");
  cov.family.kind = family_kind::laminar;
  out.result = std::move(cov);
  return out;
}

/// Hasse forest of a laminar family under interior containment; the parent
/// of a cycle is the smallest member strictly containing it.
struct containment_forest {
  std::vector<std::optional<std::size_t>> parent;
  std::vector<std::vector<std::size_t>> children;
  std::vector<std::size_t> roots;
  std::vector<std::size_t> depth;  // roots have depth 1
};

inline containment_forest build_containment_forest(const plane_graph& g, std::span<const cycle> fam) {
  const std::size_t m = fam.size();
  std::vector<region_partition> regions;
  std::vector<std::size_t> area(m);
  for (std::size_t i = 0; i < m; ++i) {
    regions.push_back(compute_regions(g, fam[i]));
    area[i] = regions.back().interior_face_count();
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (crosses(regions[i], regions[j]))
        throw std::invalid_argument("family is not laminar");
  containment_forest f;
  f.parent.assign(m, std::nullopt);
  f.children.assign(m, {});
  f.depth.assign(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j || fam[i] == fam[j]) continue;
      if (!interior_contains(regions[j], regions[i])) continue;
      if (!f.parent[i] || area[j] < area[*f.parent[i]]) f.parent[i] = j;
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (f.parent[i])
      f.children[*f.parent[i]].push_back(i);
    else
      f.roots.push_back(i);
  }
  std::vector<std::size_t> stack(f.roots.begin(), f.roots.end());
  for (std::size_t r : f.roots) f.depth[r] = 1;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t c : f.children[v]) {
      f.depth[c] = f.depth[v] + 1;
      stack.push_back(c);
    }
  }
  return f;
}

struct chain_antichain {
  cycle_family chain;      // outermost first
  cycle_family antichain;  // ascending canonical order
};

/// Longest chain (a deepest root-to-leaf path) and largest antichain (the
/// leaves, found by the forest DP best(v) = max(1, sum best(children))).
inline chain_antichain dilworth_decompose(const plane_graph& g, std::span<const cycle> fam) {
  chain_antichain out;
  out.chain.kind = family_kind::chain;
  out.antichain.kind = family_kind::antichain;
  if (fam.empty()) return out;
  const containment_forest f = build_containment_forest(g, fam);
  std::size_t deepest = 0;
  for (std::size_t i = 1; i < fam.size(); ++i)
    if (f.depth[i] > f.depth[deepest]) deepest = i;
  for (std::optional<std::size_t> v = deepest; v; v = f.parent[*v]) out.chain.cycles.push_back(fam[*v]);
  std::reverse(out.chain.cycles.begin(), out.chain.cycles.end());

  std::vector<std::vector<std::size_t>> best(fam.size());
  auto solve = [&](auto&& self, std::size_t v) -> void {
    std::vector<std::size_t> below;
    for (std::size_t c : f.children[v]) {
      self(self, c);
      below.insert(below.end(), best[c].begin(), best[c].end());
    }
    best[v] = below.empty() ? std::vector<std::size_t>{v} : std::move(below);
  };
  for (std::size_t r : f.roots) {
    solve(solve, r);
    for (std::size_t i : best[r]) out.antichain.cycles.push_back(fam[i]);
  }
  std::sort(out.antichain.cycles.begin(), out.antichain.cycles.end());
  return out;
}

/// 7 a^2 >= 6 m, i.e. a >= sqrt(6m/7).
inline bool antichain_meets_balance(std::size_t antichain, std::size_t m) {
  return 7 * antichain * antichain >= 6 * m;
}

/// 6 c^2 >= 7 m, i.e. c >= sqrt(7m/6).
inline bool chain_meets_balance(std::size_t chain, std::size_t m) {
  return 6 * chain * chain >= 7 * m;
}

}  // namespace threecol
