#pragma once

// Plane graphs given by rotation systems, and the combinatorial versions of
// the planar notions built on top of them: faces, cycle interiors, nesting,
// crossing, the neighbourhood identification G_v and annulus subgraphs.

#include <algorithm>
#include <cassert>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace threecol {

using vertex_id = std::uint32_t;

template <class G>
concept graph_like = requires(const G& g, vertex_id v) {
  { g.vertex_count() } -> std::convertible_to<std::size_t>;
  { g.neighbors(v) } -> std::convertible_to<std::span<const vertex_id>>;
  { g.has_edge(v, v) } -> std::convertible_to<bool>;
};

/// Raised when a graph or cycle violates its structural invariants. `kind`
/// is a stable machine-readable tag and `where` names the offending vertices.
class graph_error : public std::runtime_error {
 public:
  graph_error(std::string kind, const std::string& message,
              std::vector<std::string> where = {})
      : std::runtime_error(message), kind_(std::move(kind)), where_(std::move(where)) {}

  const std::string& kind() const noexcept { return kind_; }
  const std::vector<std::string>& where() const noexcept { return where_; }

 private:
  std::string kind_;
  std::vector<std::string> where_;
};

struct dart {
  vertex_id tail;
  vertex_id head;
  friend bool operator==(const dart&, const dart&) = default;
};

/// Simple graph without an embedding.
class abstract_graph {
 public:
  explicit abstract_graph(std::size_t n = 0) : adj_(n) {}

  template <graph_like G>
  static abstract_graph from(const G& g) {
    abstract_graph out(g.vertex_count());
    for (vertex_id v = 0; v < g.vertex_count(); ++v)
      for (vertex_id w : g.neighbors(v))
        if (v < w) out.add_edge(v, w);
    return out;
  }

  /// Parallel edges are dropped; loops are rejected.
  void add_edge(vertex_id u, vertex_id v) {
    if (u == v) throw graph_error("self_loop", "abstract_graph: self-loop");
    if (u >= adj_.size() || v >= adj_.size())
      throw std::out_of_range("abstract_graph: vertex out of range");
    insert_sorted(adj_[u], v);
    insert_sorted(adj_[v], u);
  }

  std::size_t vertex_count() const noexcept { return adj_.size(); }
  std::size_t edge_count() const noexcept {
    std::size_t s = 0;
    for (const auto& a : adj_) s += a.size();
    return s / 2;
  }
  std::size_t degree(vertex_id v) const { return adj_[v].size(); }
  std::span<const vertex_id> neighbors(vertex_id v) const { return adj_[v]; }
  bool has_edge(vertex_id u, vertex_id v) const {
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
  }

 private:
  static void insert_sorted(std::vector<vertex_id>& xs, vertex_id v) {
    auto it = std::lower_bound(xs.begin(), xs.end(), v);
    if (it == xs.end() || *it != v) xs.insert(it, v);
  }

  std::vector<std::vector<vertex_id>> adj_;
};

/// A connected simple graph with a combinatorial embedding. rotation(v)
/// lists the neighbours of v in clockwise order. Faces are traced by taking,
/// after arriving at v from u, the clockwise successor of u around v; each
/// dart therefore carries the face on its left, bounded faces are walked
/// counter-clockwise and the outer face clockwise.
class plane_graph {
 public:
  plane_graph(std::vector<std::string> names, std::vector<std::vector<vertex_id>> rotation,
              std::optional<dart> outer)
      : plane_graph(std::move(names), std::move(rotation), no_outer_tag{}) {
    if (edge_count() == 0) return;
    if (!outer || !is_dart(*outer))
      throw graph_error("outer_face", "outer face dart is not an edge of the graph");
    outer_ = face_of(*outer);
  }

  /// Builds the graph with the face whose walk equals `walk` (up to
  /// rotation) as outer face.
  static plane_graph with_outer_walk(std::vector<std::string> names,
                                     std::vector<std::vector<vertex_id>> rotation,
                                     std::span<const vertex_id> walk) {
    plane_graph g(std::move(names), std::move(rotation), no_outer_tag{});
    if (g.edge_count() == 0) {
      if (walk.size() > 1) throw graph_error("outer_face", "outer face does not match any face");
      g.outer_ = 0;
      return g;
    }
    for (std::size_t f = 0; f < g.faces_.size(); ++f) {
      if (same_cyclic_sequence(g.faces_[f], walk)) {
        g.outer_ = f;
        return g;
      }
    }
    std::vector<std::string> where;
    for (vertex_id v : walk)
      where.push_back(v < g.names_.size() ? g.names_[v] : std::to_string(v));
    throw graph_error("outer_face", "outer face does not match any face walk", where);
  }

  std::size_t vertex_count() const noexcept { return rotation_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  std::size_t face_count() const noexcept { return faces_.size(); }
  std::size_t degree(vertex_id v) const { return rotation_[v].size(); }

  const std::string& name(vertex_id v) const { return names_[v]; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<vertex_id> find(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<vertex_id>(it - names_.begin());
  }

  std::span<const vertex_id> rotation(vertex_id v) const { return rotation_[v]; }
  std::span<const vertex_id> neighbors(vertex_id v) const { return rotation_[v]; }
  bool has_edge(vertex_id u, vertex_id v) const {
    return std::binary_search(sorted_[u].begin(), sorted_[u].end(), v);
  }
  bool is_dart(dart d) const {
    return d.tail < vertex_count() && d.head < vertex_count() && has_edge(d.tail, d.head);
  }

  std::vector<std::pair<vertex_id, vertex_id>> edges() const {
    std::vector<std::pair<vertex_id, vertex_id>> out;
    for (vertex_id v = 0; v < vertex_count(); ++v)
      for (vertex_id w : sorted_[v])
        if (v < w) out.emplace_back(v, w);
    return out;
  }

  const std::vector<std::vector<vertex_id>>& faces() const noexcept { return faces_; }
  std::size_t outer_face() const noexcept { return outer_; }
  std::size_t face_of(dart d) const { return dart_face_[d.tail][position(d.tail, d.head)]; }

  /// Index of `w` in the rotation of `v`.
  std::size_t position(vertex_id v, vertex_id w) const {
    const auto& r = rotation_[v];
    auto it = std::find(r.begin(), r.end(), w);
    if (it == r.end()) throw std::out_of_range("plane_graph: not a dart");
    return static_cast<std::size_t>(it - r.begin());
  }

  /// Dart following `d` along its face.
  dart next_in_face(dart d) const {
    const auto& r = rotation_[d.head];
    const std::size_t p = position(d.head, d.tail);
    return {d.head, r[(p + 1) % r.size()]};
  }

  static bool same_cyclic_sequence(std::span<const vertex_id> a, std::span<const vertex_id> b) {
    if (a.size() != b.size()) return false;
    if (a.empty()) return true;
    for (std::size_t s = 0; s < a.size(); ++s) {
      bool ok = true;
      for (std::size_t i = 0; i < a.size() && ok; ++i) ok = a[(s + i) % a.size()] == b[i];
      if (ok) return true;
    }
    return false;
  }

 private:
  struct no_outer_tag {};

  plane_graph(std::vector<std::string> names, std::vector<std::vector<vertex_id>> rotation,
              no_outer_tag)
      : names_(std::move(names)), rotation_(std::move(rotation)) {
    validate_structure();
    trace_faces();
    const std::size_t v = vertex_count(), e = edge_count(), f = faces_.size();
    if (v + f != e + 2)
      throw graph_error("euler", "Euler check failed: V - E + F = " +
                                     std::to_string(static_cast<long long>(v + f) -
                                                    static_cast<long long>(e)));
  }

  std::string label(vertex_id v) const {
    return v < names_.size() ? names_[v] : std::to_string(v);
  }

  void validate_structure() {
    const std::size_t n = rotation_.size();
    if (n == 0) throw graph_error("empty", "graph has no vertices");
    if (names_.size() != n) throw graph_error("names", "name list does not match vertex count");
    {
      std::vector<std::string> sorted_names = names_;
      std::sort(sorted_names.begin(), sorted_names.end());
      auto dup = std::adjacent_find(sorted_names.begin(), sorted_names.end());
      if (dup != sorted_names.end())
        throw graph_error("duplicate_vertex", "duplicate vertex " + *dup, {*dup});
    }
    sorted_.assign(n, {});
    std::size_t darts = 0;
    for (vertex_id v = 0; v < n; ++v) {
      for (vertex_id w : rotation_[v]) {
        if (w >= n) throw graph_error("unknown_vertex", "rotation of " + label(v) + " names an unknown vertex", {label(v)});
        if (w == v) throw graph_error("self_loop", "self-loop at " + label(v), {label(v)});
      }
      sorted_[v] = rotation_[v];
      std::sort(sorted_[v].begin(), sorted_[v].end());
      auto dup = std::adjacent_find(sorted_[v].begin(), sorted_[v].end());
      if (dup != sorted_[v].end())
        throw graph_error("repeated_neighbor", "repeated neighbour in rotation of " + label(v),
                          {label(v), label(*dup)});
      darts += rotation_[v].size();
    }
    for (vertex_id v = 0; v < n; ++v)
      for (vertex_id w : rotation_[v])
        if (!std::binary_search(sorted_[w].begin(), sorted_[w].end(), v))
          throw graph_error("asymmetric_rotation",
                            label(w) + " appears around " + label(v) + " but not conversely",
                            {label(v), label(w)});
    edge_count_ = darts / 2;

    std::vector<bool> seen(n, false);
    std::vector<vertex_id> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
      vertex_id v = stack.back();
      stack.pop_back();
      for (vertex_id w : rotation_[v])
        if (!seen[w]) {
          seen[w] = true;
          ++reached;
          stack.push_back(w);
        }
    }
    if (reached != n) {
      vertex_id lost = 0;
      while (seen[lost]) ++lost;
      throw graph_error("disconnected", "graph is disconnected", {label(0), label(lost)});
    }
  }

  void trace_faces() {
    const std::size_t n = rotation_.size();
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    dart_face_.assign(n, {});
    for (vertex_id v = 0; v < n; ++v) dart_face_[v].assign(rotation_[v].size(), unset);
    faces_.clear();
    if (edge_count_ == 0) {
      faces_.push_back({});
      return;
    }
    for (vertex_id v = 0; v < n; ++v) {
      for (std::size_t i = 0; i < rotation_[v].size(); ++i) {
        if (dart_face_[v][i] != unset) continue;
        const std::size_t f = faces_.size();
        std::vector<vertex_id> walk;
        dart d{v, rotation_[v][i]};
        while (true) {
          auto& slot = dart_face_[d.tail][position(d.tail, d.head)];
          if (slot != unset) break;
          slot = f;
          walk.push_back(d.tail);
          d = next_in_face(d);
        }
        faces_.push_back(std::move(walk));
      }
    }
  }

  std::vector<std::string> names_;
  std::vector<std::vector<vertex_id>> rotation_;
  std::vector<std::vector<vertex_id>> sorted_;
  std::vector<std::vector<std::size_t>> dart_face_;
  std::vector<std::vector<vertex_id>> faces_;
  std::size_t edge_count_ = 0;
  std::size_t outer_ = 0;
};

/// A cycle stored in canonical form: it starts at its least vertex and runs
/// in the direction whose second vertex is smaller than the last.
struct cycle {
  std::vector<vertex_id> vertices;

  std::size_t size() const noexcept { return vertices.size(); }
  vertex_id operator[](std::size_t i) const { return vertices[i % vertices.size()]; }
  bool contains(vertex_id v) const {
    return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
  }
  bool has_edge(vertex_id a, vertex_id b) const {
    const std::size_t n = vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
      vertex_id x = vertices[i], y = vertices[(i + 1) % n];
      if ((x == a && y == b) || (x == b && y == a)) return true;
    }
    return false;
  }
  friend auto operator<=>(const cycle&, const cycle&) = default;
};

inline std::vector<vertex_id> canonical_form(std::span<const vertex_id> seq) {
  const std::size_t n = seq.size();
  if (n == 0) return {};
  const std::size_t start =
      static_cast<std::size_t>(std::min_element(seq.begin(), seq.end()) - seq.begin());
  std::vector<vertex_id> fwd(n), bwd(n);
  for (std::size_t i = 0; i < n; ++i) {
    fwd[i] = seq[(start + i) % n];
    bwd[i] = seq[(start + n - i) % n];
  }
  return (n < 3 || fwd[1] < bwd[1]) ? fwd : bwd;
}

/// Validates `seq` as a cycle of `g` and returns it in canonical form.
template <graph_like G>
cycle make_cycle(const G& g, std::span<const vertex_id> seq) {
  if (seq.size() < 3) throw graph_error("not_a_cycle", "a cycle needs at least three vertices");
  std::vector<vertex_id> sorted(seq.begin(), seq.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw graph_error("not_a_cycle", "cycle repeats a vertex");
  if (sorted.back() >= g.vertex_count())
    throw graph_error("not_a_cycle", "cycle names an unknown vertex");
  for (std::size_t i = 0; i < seq.size(); ++i)
    if (!g.has_edge(seq[i], seq[(i + 1) % seq.size()]))
      throw graph_error("not_a_cycle", "consecutive cycle vertices are not adjacent",
                        {std::to_string(seq[i]), std::to_string(seq[(i + 1) % seq.size()])});
  return cycle{canonical_form(seq)};
}

template <graph_like G>
cycle make_cycle(const G& g, std::initializer_list<vertex_id> seq) {
  std::vector<vertex_id> v(seq);
  return make_cycle(g, std::span<const vertex_id>(v));
}

template <graph_like G>
bool is_triangle_free(const G& g) {
  for (vertex_id u = 0; u < g.vertex_count(); ++u)
    for (vertex_id v : g.neighbors(u)) {
      if (v <= u) continue;
      for (vertex_id w : g.neighbors(v))
        if (w > v && g.has_edge(u, w)) return false;
    }
  return true;
}

/// D_k(G): vertices of degree at most k, ascending.
template <graph_like G>
std::vector<vertex_id> low_degree_set(const G& g, std::size_t k) {
  std::vector<vertex_id> out;
  for (vertex_id v = 0; v < g.vertex_count(); ++v)
    if (g.neighbors(v).size() <= k) out.push_back(v);
  return out;
}

/// G_v: delete v, identify its neighbours into one vertex, drop parallel
/// edges. Surviving vertices keep their relative order; the merged vertex
/// comes last. An isolated v simply disappears.
template <graph_like G>
abstract_graph identify_neighbors(const G& g, vertex_id v) {
  const std::size_t n = g.vertex_count();
  const auto nbrs = g.neighbors(v);
  constexpr vertex_id gone = static_cast<vertex_id>(-1);
  std::vector<vertex_id> map(n, gone);
  vertex_id next = 0;
  for (vertex_id u = 0; u < n; ++u)
    if (u != v && std::find(nbrs.begin(), nbrs.end(), u) == nbrs.end()) map[u] = next++;
  if (!nbrs.empty()) {
    for (vertex_id u : nbrs) map[u] = next;
    ++next;
  }
  abstract_graph out(next);
  for (vertex_id a = 0; a < n; ++a) {
    if (a == v) continue;
    for (vertex_id b : g.neighbors(a)) {
      if (b == v || b <= a) continue;
      if (map[a] != map[b]) out.add_edge(map[a], map[b]);
    }
  }
  return out;
}

/// All cycles of the given length, each once, in canonical form and sorted.
template <graph_like G>
std::vector<cycle> enumerate_cycles(const G& g, std::size_t length) {
  std::vector<cycle> out;
  if (length < 3) return out;
  std::vector<vertex_id> path;
  std::vector<bool> on_path(g.vertex_count(), false);
  auto extend = [&](auto&& self, vertex_id s) -> void {
    const vertex_id last = path.back();
    if (path.size() == length) {
      if (g.has_edge(last, s) && path[1] < last) out.push_back(cycle{path});
      return;
    }
    for (vertex_id w : g.neighbors(last)) {
      if (w <= s || on_path[w]) continue;
      path.push_back(w);
      on_path[w] = true;
      self(self, s);
      on_path[w] = false;
      path.pop_back();
    }
  };
  for (vertex_id s = 0; s < g.vertex_count(); ++s) {
    path.assign(1, s);
    on_path[s] = true;
    extend(extend, s);
    on_path[s] = false;
  }
  std::sort(out.begin(), out.end());
#ifndef NDEBUG
  // A chord of a 5-cycle always closes a triangle.
  if (length == 5)
    for (const cycle& c : out)
      for (std::size_t i = 0; i < 5; ++i)
        if (g.has_edge(c[i], c[i + 2])) assert(!is_triangle_free(g));
#endif
  return out;
}

/// Int(C), Ext(C) and V(C) as vertex sets, plus the faces lying in Int(C).
struct region_partition {
  std::vector<vertex_id> interior;
  std::vector<vertex_id> exterior;
  std::vector<vertex_id> boundary;
  std::vector<bool> interior_faces;

  std::size_t interior_face_count() const {
    return static_cast<std::size_t>(std::count(interior_faces.begin(), interior_faces.end(), true));
  }
};

inline region_partition compute_regions(const plane_graph& g, const cycle& c) {
  make_cycle(g, std::span<const vertex_id>(c.vertices));
  const std::size_t nf = g.face_count();
  std::vector<bool> outside(nf, false);
  std::vector<std::size_t> stack{g.outer_face()};
  outside[g.outer_face()] = true;
  while (!stack.empty()) {
    const std::size_t f = stack.back();
    stack.pop_back();
    const auto& walk = g.faces()[f];
    for (std::size_t i = 0; i < walk.size(); ++i) {
      const vertex_id a = walk[i], b = walk[(i + 1) % walk.size()];
      if (c.has_edge(a, b)) continue;
      const std::size_t h = g.face_of({b, a});
      if (!outside[h]) {
        outside[h] = true;
        stack.push_back(h);
      }
    }
  }
  region_partition r;
  r.interior_faces.resize(nf);
  for (std::size_t f = 0; f < nf; ++f) r.interior_faces[f] = !outside[f];
  for (vertex_id v = 0; v < g.vertex_count(); ++v) {
    if (c.contains(v)) {
      r.boundary.push_back(v);
      continue;
    }
    const vertex_id w = g.rotation(v).front();
    (r.interior_faces[g.face_of({v, w})] ? r.interior : r.exterior).push_back(v);
  }
  return r;
}

// Two cycle interiors are compared as open regions. Since faces are dense in
// each open region and interiors of cycles are regular open sets, every
// set-theoretic relation reduces to the corresponding relation on face sets;
// the unbounded face lies in neither interior.

inline bool interior_contains(const region_partition& outer, const region_partition& inner) {
  for (std::size_t f = 0; f < inner.interior_faces.size(); ++f)
    if (inner.interior_faces[f] && !outer.interior_faces[f]) return false;
  return true;
}

inline bool interiors_disjoint(const region_partition& a, const region_partition& b) {
  for (std::size_t f = 0; f < a.interior_faces.size(); ++f)
    if (a.interior_faces[f] && b.interior_faces[f]) return false;
  return true;
}

inline bool crosses(const region_partition& a, const region_partition& b) {
  bool both = false, only_a = false, only_b = false;
  for (std::size_t f = 0; f < a.interior_faces.size(); ++f) {
    both |= a.interior_faces[f] && b.interior_faces[f];
    only_a |= a.interior_faces[f] && !b.interior_faces[f];
    only_b |= !a.interior_faces[f] && b.interior_faces[f];
  }
  return both && only_a && only_b;
}

inline bool crosses(const plane_graph& g, const cycle& a, const cycle& b) {
  return crosses(compute_regions(g, a), compute_regions(g, b));
}

inline bool is_laminar(const plane_graph& g, std::span<const cycle> family) {
  std::vector<region_partition> regions;
  regions.reserve(family.size());
  for (const cycle& c : family) regions.push_back(compute_regions(g, c));
  for (std::size_t i = 0; i < regions.size(); ++i)
    for (std::size_t j = i + 1; j < regions.size(); ++j)
      if (crosses(regions[i], regions[j])) return false;
  return true;
}

/// Faces bounded by a cycle of length in [3, max_length].
inline std::vector<cycle> facial_cycles(const plane_graph& g, std::size_t max_length) {
  std::vector<cycle> out;
  for (const auto& walk : g.faces()) {
    if (walk.size() < 3 || walk.size() > max_length) continue;
    std::vector<vertex_id> s(walk);
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) continue;
    out.push_back(cycle{canonical_form(walk)});
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline bool is_facial(const plane_graph& g, const cycle& c) {
  for (const auto& walk : g.faces())
    if (walk.size() == c.size() && canonical_form(walk) == c.vertices) return true;
  return false;
}

/// Cycle vertices in clockwise order (interior on the right), starting at
/// the least vertex id.
inline std::vector<vertex_id> clockwise_order(const plane_graph& g, const cycle& c,
                                              const region_partition& r) {
  const std::size_t n = c.size();
  // The face left of b -> a is the one right of a -> b.
  const bool forward = r.interior_faces[g.face_of({c[1], c[0]})];
  std::vector<vertex_id> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = forward ? c[i] : c[n - i];
  return out;
}

/// A plane subgraph together with the parent id of each of its vertices.
struct subgraph {
  plane_graph graph;
  std::vector<vertex_id> to_parent;

  std::optional<vertex_id> from_parent(vertex_id p) const {
    auto it = std::find(to_parent.begin(), to_parent.end(), p);
    if (it == to_parent.end()) return std::nullopt;
    return static_cast<vertex_id>(it - to_parent.begin());
  }
  cycle map_from_parent(const cycle& c) const {
    std::vector<vertex_id> s;
    for (vertex_id v : c.vertices) s.push_back(from_parent(v).value());
    return cycle{canonical_form(s)};
  }
  cycle map_to_parent(const cycle& c) const {
    std::vector<vertex_id> s;
    for (vertex_id v : c.vertices) s.push_back(to_parent[v]);
    return cycle{canonical_form(s)};
  }
};

/// Restriction of g to the kept vertices and edges with the induced
/// rotation system. `outer` is a parent dart that survives and whose face in
/// the result becomes the outer face.
template <class EdgePred>
subgraph restrict_graph(const plane_graph& g, const std::vector<bool>& keep_vertex,
                        EdgePred keep_edge, dart outer) {
  constexpr vertex_id gone = static_cast<vertex_id>(-1);
  std::vector<vertex_id> map(g.vertex_count(), gone), back;
  std::vector<std::string> names;
  for (vertex_id v = 0; v < g.vertex_count(); ++v)
    if (keep_vertex[v]) {
      map[v] = static_cast<vertex_id>(back.size());
      back.push_back(v);
      names.push_back(g.name(v));
    }
  std::vector<std::vector<vertex_id>> rot(back.size());
  for (vertex_id i = 0; i < back.size(); ++i)
    for (vertex_id w : g.rotation(back[i]))
      if (map[w] != gone && keep_edge(back[i], w)) rot[i].push_back(map[w]);
  std::optional<dart> od;
  if (map[outer.tail] != gone && map[outer.head] != gone)
    od = dart{map[outer.tail], map[outer.head]};
  return subgraph{plane_graph(std::move(names), std::move(rot), od), std::move(back)};
}

/// The closed side of a cycle: C together with everything inside it (or
/// outside it when `inside` is false). The inside piece has C as outer face.
inline subgraph side_subgraph(const plane_graph& g, const cycle& c, const region_partition& r,
                              bool inside) {
  std::vector<bool> keep(g.vertex_count(), false);
  for (vertex_id v : r.boundary) keep[v] = true;
  for (vertex_id v : inside ? r.interior : r.exterior) keep[v] = true;
  auto edge_ok = [&](vertex_id a, vertex_id b) {
    if (c.has_edge(a, b)) return true;
    return r.interior_faces[g.face_of({a, b})] == inside;
  };
  dart outer{};
  if (inside) {
    const auto cw = clockwise_order(g, c, r);
    outer = {cw[0], cw[1]};
  } else {
    const auto& walk = g.faces()[g.outer_face()];
    outer = {walk[0], walk[1 % walk.size()]};
  }
  return restrict_graph(g, keep, edge_ok, outer);
}

/// G' for nested cycles: the part of g in the closed annulus between c1 and
/// c2, with c1 bounding the outer face.
inline subgraph annulus_subgraph(const plane_graph& g, const cycle& c1, const cycle& c2) {
  if (c1 == c2) throw graph_error("not_nested", "annulus needs two distinct cycles");
  const region_partition r1 = compute_regions(g, c1), r2 = compute_regions(g, c2);
  if (!interior_contains(r1, r2))
    throw graph_error("not_nested", "inner cycle interior is not contained in the outer one");
  std::vector<bool> keep(g.vertex_count(), false);
  for (vertex_id v : r1.boundary) keep[v] = true;
  for (vertex_id v : r1.interior) keep[v] = true;
  for (vertex_id v : r2.interior) keep[v] = false;
  for (vertex_id v : r2.boundary) keep[v] = true;
  auto in_annulus = [&](std::size_t f) { return r1.interior_faces[f] && !r2.interior_faces[f]; };
  auto edge_ok = [&](vertex_id a, vertex_id b) {
    if (c1.has_edge(a, b) || c2.has_edge(a, b)) return true;
    return in_annulus(g.face_of({a, b})) || in_annulus(g.face_of({b, a}));
  };
  const auto cw = clockwise_order(g, c1, r1);
  return restrict_graph(g, keep, edge_ok, dart{cw[0], cw[1]});
}

}  // namespace threecol
