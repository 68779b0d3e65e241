#pragma once

// Triangle-free plane graphs with known embeddings. Deterministic families
// are laid out with straight-line drawings and the rotation system is read
// off the drawing; random perturbations edit the rotation system directly.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "threecol/plane_graph.hpp"

namespace threecol {

namespace detail {

struct drawing {
  std::vector<std::string> names;
  std::vector<std::pair<double, double>> at;
  std::vector<std::pair<vertex_id, vertex_id>> edges;

  vertex_id add(std::string name, double radius, double degrees) {
    const double t = degrees * std::numbers::pi / 180.0;
    names.push_back(std::move(name));
    at.emplace_back(radius * std::cos(t), radius * std::sin(t));
    return static_cast<vertex_id>(names.size() - 1);
  }
  void join(vertex_id a, vertex_id b) { edges.emplace_back(a, b); }

  /// Neighbours sorted by decreasing angle, i.e. clockwise.
  plane_graph embed(dart outer) const {
    std::vector<std::vector<vertex_id>> rot(names.size());
    for (auto [a, b] : edges) {
      rot[a].push_back(b);
      rot[b].push_back(a);
    }
    for (vertex_id v = 0; v < rot.size(); ++v) {
      auto angle = [&](vertex_id w) {
        return std::atan2(at[w].second - at[v].second, at[w].first - at[v].first);
      };
      std::sort(rot[v].begin(), rot[v].end(),
                [&](vertex_id x, vertex_id y) { return angle(x) > angle(y); });
    }
    return plane_graph(names, std::move(rot), outer);
  }
};

inline std::vector<std::vector<vertex_id>> rotations_of(const plane_graph& g) {
  std::vector<std::vector<vertex_id>> rot(g.vertex_count());
  for (vertex_id v = 0; v < g.vertex_count(); ++v) {
    auto r = g.rotation(v);
    rot[v].assign(r.begin(), r.end());
  }
  return rot;
}

inline void insert_after(std::vector<vertex_id>& rot, vertex_id after, vertex_id v) {
  auto it = std::find(rot.begin(), rot.end(), after);
  rot.insert(it + 1, v);
}

}  // namespace detail

/// k concentric pentagons p<i>_<j> (layer 0 outermost), consecutive layers
/// joined by the spokes p<i>_<j> p<i+1>_<j>.
inline plane_graph pentagon_tower(std::size_t k) {
  if (k < 1) throw std::invalid_argument("pentagon_tower needs k >= 1");
  detail::drawing d;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < 5; ++j)
      d.add("p" + std::to_string(i) + "_" + std::to_string(j), static_cast<double>(k - i),
            90.0 + 72.0 * static_cast<double>(j));
  auto id = [](std::size_t i, std::size_t j) { return static_cast<vertex_id>(5 * i + j % 5); };
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < 5; ++j) {
      d.join(id(i, j), id(i, j + 1));
      if (i + 1 < k) d.join(id(i, j), id(i + 1, j));
    }
  return d.embed({id(0, 0), id(0, 4)});
}

/// The pentagon u1..u5 and the pentagon u1 u2 u3 u4 v drawn inside it.
inline plane_graph shared_path_pentagons() {
  detail::drawing d;
  for (int j = 0; j < 5; ++j) d.add("u" + std::to_string(j + 1), 2.0, 90.0 + 72.0 * j);
  const vertex_id v = d.add("v", 0.0, 0.0);
  for (vertex_id j = 0; j < 5; ++j) d.join(j, (j + 1) % 5);
  d.join(v, 0);
  d.join(v, 3);
  return d.embed({0, 4});
}

/// Schlegel diagram: outer pentagon o*, a zigzag 10-cycle m*, inner
/// pentagon i*.
inline plane_graph dodecahedron() {
  detail::drawing d;
  for (int j = 0; j < 5; ++j) d.add("o" + std::to_string(j), 4.0, 90.0 + 72.0 * j);
  for (int t = 0; t < 10; ++t) d.add("m" + std::to_string(t), t % 2 ? 2.2 : 2.6, 90.0 + 36.0 * t);
  for (int j = 0; j < 5; ++j) d.add("i" + std::to_string(j), 1.0, 126.0 + 72.0 * j);
  auto o = [](int j) { return static_cast<vertex_id>(j % 5); };
  auto m = [](int t) { return static_cast<vertex_id>(5 + t % 10); };
  auto in = [](int j) { return static_cast<vertex_id>(15 + j % 5); };
  for (int j = 0; j < 5; ++j) {
    d.join(o(j), o(j + 1));
    d.join(o(j), m(2 * j));
    d.join(m(2 * j + 1), in(j));
    d.join(in(j), in(j + 1));
  }
  for (int t = 0; t < 10; ++t) d.join(m(t), m(t + 1));
  return d.embed({o(0), o(4)});
}

/// A ring of m >= 4 pentagonal faces side by side: an inner m-cycle a*, an
/// outer 2m-cycle b* and rungs a_j b_{2j}. The m pentagons form an
/// antichain and every vertex lies on one of them.
inline plane_graph pentagon_garden(std::size_t m) {
  if (m < 4) throw std::invalid_argument("pentagon_garden needs m >= 4");
  detail::drawing d;
  const double step = 360.0 / static_cast<double>(m);
  for (std::size_t j = 0; j < m; ++j) d.add("a" + std::to_string(j), 1.0, step * static_cast<double>(j));
  for (std::size_t t = 0; t < 2 * m; ++t)
    d.add("b" + std::to_string(t), 2.0, step / 2.0 * static_cast<double>(t));
  auto a = [&](std::size_t j) { return static_cast<vertex_id>(j % m); };
  auto b = [&](std::size_t t) { return static_cast<vertex_id>(m + t % (2 * m)); };
  for (std::size_t j = 0; j < m; ++j) {
    d.join(a(j), a(j + 1));
    d.join(a(j), b(2 * j));
  }
  for (std::size_t t = 0; t < 2 * m; ++t) d.join(b(t), b(t + 1));
  return d.embed({b(0), b(2 * m - 1)});
}

inline plane_graph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle_graph needs n >= 3");
  detail::drawing d;
  for (std::size_t j = 0; j < n; ++j)
    d.add("c" + std::to_string(j), 1.0, 90.0 + 360.0 / static_cast<double>(n) * static_cast<double>(j));
  for (std::size_t j = 0; j < n; ++j) d.join(static_cast<vertex_id>(j), static_cast<vertex_id>((j + 1) % n));
  return d.embed({0, static_cast<vertex_id>(n - 1)});
}

/// Path on n >= 1 vertices.
inline plane_graph path_graph(std::size_t n) {
  if (n < 1) throw std::invalid_argument("path_graph needs n >= 1");
  std::vector<std::string> names;
  std::vector<std::vector<vertex_id>> rot(n);
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back("q" + std::to_string(i));
    if (i > 0) rot[i].push_back(static_cast<vertex_id>(i - 1));
    if (i + 1 < n) rot[i].push_back(static_cast<vertex_id>(i + 1));
  }
  std::optional<dart> outer;
  if (n > 1) outer = dart{0, 1};
  return plane_graph(std::move(names), std::move(rot), outer);
}

/// Random labelled tree on n >= 2 vertices; any rotation of a tree is plane.
inline plane_graph random_tree(std::size_t n, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("random_tree needs n >= 2");
  std::mt19937_64 rng(seed);
  std::vector<std::string> names;
  std::vector<std::vector<vertex_id>> rot(n);
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back("r" + std::to_string(i));
    if (i == 0) continue;
    const auto parent = static_cast<vertex_id>(rng() % i);
    rot[i].push_back(parent);
    auto& pr = rot[parent];
    pr.insert(pr.begin() + static_cast<std::ptrdiff_t>(rng() % (pr.size() + 1)), static_cast<vertex_id>(i));
  }
  return plane_graph(std::move(names), std::move(rot), dart{1, rot[1].front()});
}

struct perturbation_stats {
  std::size_t diagonal_ops = 0;  // one new vertex, quad -> two quads
  std::size_t path_ops = 0;      // two new vertices, quad -> quad + hexagon
};

/// pentagon_tower(k) followed by `ops` seeded subdivisions of random
/// quadrilateral faces. A diagonal op adds a vertex adjacent to two opposite
/// corners; a path op adds a 3-edge path between two adjacent corners. Both
/// keep the graph plane and triangle-free. The vertex count is
/// 5k + diagonal_ops + 2 path_ops.
inline plane_graph perturbed_tower(std::size_t k, std::uint64_t seed, std::size_t ops,
                                   perturbation_stats* stats = nullptr) {
  plane_graph g = pentagon_tower(k);
  std::mt19937_64 rng(seed);
  perturbation_stats local;
  std::size_t fresh = 0;
  for (std::size_t op = 0; op < ops; ++op) {
    std::vector<std::vector<vertex_id>> quads;
    for (const auto& walk : g.faces()) {
      if (walk.size() != 4) continue;
      std::vector<vertex_id> s(walk);
      std::sort(s.begin(), s.end());
      if (std::adjacent_find(s.begin(), s.end()) == s.end()) quads.push_back(walk);
    }
    if (quads.empty()) break;
    const auto& q = quads[rng() % quads.size()];
    const std::size_t s = rng() % 4;
    const vertex_id a = q[s], b = q[(s + 1) % 4], c = q[(s + 2) % 4], dd = q[(s + 3) % 4];
    const bool diagonal = rng() % 2 == 0;

    std::vector<std::string> names = g.names();
    auto rot = detail::rotations_of(g);
    const auto x = static_cast<vertex_id>(names.size());
    names.push_back("s" + std::to_string(fresh++));
    rot.emplace_back();
    detail::insert_after(rot[a], dd, x);
    if (diagonal) {
      detail::insert_after(rot[c], b, x);
      rot[x] = {a, c};
      ++local.diagonal_ops;
    } else {
      const auto y = static_cast<vertex_id>(names.size());
      names.push_back("s" + std::to_string(fresh++));
      rot.emplace_back();
      detail::insert_after(rot[b], a, y);
      rot[x] = {a, y};
      rot[y] = {x, b};
      ++local.path_ops;
    }
    const auto& outer = g.faces()[g.outer_face()];
    g = plane_graph(std::move(names), std::move(rot), dart{outer[0], outer[1]});
  }
  if (stats) *stats = local;
  return g;
}

struct generator_spec {
  std::string family;  // tower | shared | dodeca | garden | perturbed
  std::size_t k = 1;
  std::uint64_t seed = 0;
  std::size_t ops = 0;
};

inline plane_graph generate(const generator_spec& spec) {
  if (spec.family == "tower") return pentagon_tower(spec.k);
  if (spec.family == "shared") return shared_path_pentagons();
  if (spec.family == "dodeca") return dodecahedron();
  if (spec.family == "garden") return pentagon_garden(spec.k);
  if (spec.family == "perturbed") return perturbed_tower(spec.k, spec.seed, spec.ops);
  throw std::invalid_argument("unknown generator family '" + spec.family + "'");
}

}  // namespace threecol
