#pragma once

// Exact 3-colouring enumeration and counting, special vertices of coloured
// pentagons, extension of boundary colourings and Kempe-style switching.

#include <atomic>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <thread>
#include <vector>

#include "threecol/plane_graph.hpp"

namespace threecol {

/// 1, 2, 3 are colours; 0 marks an uncoloured vertex in partial assignments.
using color = std::uint8_t;
using coloring = std::vector<color>;

struct count_options {
  std::uint64_t budget = 1'000'000'000;  // partial assignments visited
  unsigned threads = 1;
};

struct count_result {
  std::uint64_t count = 0;
  std::uint64_t nodes = 0;  // partial assignments visited
};

class budget_exceeded : public std::runtime_error {
 public:
  explicit budget_exceeded(std::uint64_t budget)
      : std::runtime_error("counting budget of " + std::to_string(budget) + " nodes exceeded"),
        budget_(budget) {}
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t budget_;
};

template <graph_like G>
bool is_proper(const G& g, std::span<const color> phi) {
  if (phi.size() != g.vertex_count()) return false;
  for (vertex_id v = 0; v < g.vertex_count(); ++v) {
    if (phi[v] < 1 || phi[v] > 3) return false;
    for (vertex_id w : g.neighbors(v))
      if (phi[v] == phi[w]) return false;
  }
  return true;
}

namespace detail {

constexpr std::uint8_t color_bit(color c) { return static_cast<std::uint8_t>(1u << (c - 1)); }

/// Free vertices in BFS order (seeded from the precoloured ones), with the
/// forward adjacency and the starting domains induced by the precolouring.
struct search_plan {
  std::vector<vertex_id> order;
  std::vector<std::vector<std::uint32_t>> forward;
  std::vector<std::uint8_t> domains;
  bool feasible = true;

  std::size_t size() const noexcept { return order.size(); }
};

template <graph_like G>
search_plan make_plan(const G& g, std::span<const color> pre) {
  const std::size_t n = g.vertex_count();
  if (!pre.empty() && pre.size() != n)
    throw std::invalid_argument("precolouring does not cover the vertex set");
  auto fixed = [&](vertex_id v) { return !pre.empty() && pre[v] != 0; };
  for (vertex_id v = 0; v < n; ++v)
    if (fixed(v) && pre[v] > 3) throw std::invalid_argument("colour out of range");

  search_plan plan;
  std::vector<bool> seen(n, false);
  std::vector<vertex_id> queue;
  for (vertex_id v = 0; v < n; ++v)
    if (fixed(v)) {
      seen[v] = true;
      queue.push_back(v);
    }
  std::size_t head = 0;
  vertex_id restart = 0;
  while (true) {
    while (head < queue.size()) {
      const vertex_id v = queue[head++];
      if (!fixed(v)) plan.order.push_back(v);
      for (vertex_id w : g.neighbors(v))
        if (!seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
    }
    while (restart < n && seen[restart]) ++restart;
    if (restart == n) break;
    seen[restart] = true;
    queue.push_back(restart);
  }

  constexpr std::uint32_t none = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> pos(n, none);
  for (std::uint32_t i = 0; i < plan.order.size(); ++i) pos[plan.order[i]] = i;
  plan.forward.resize(plan.order.size());
  plan.domains.assign(plan.order.size(), 0b111);
  for (vertex_id v = 0; v < n; ++v) {
    for (vertex_id w : g.neighbors(v)) {
      if (fixed(v) && fixed(w) && pre[v] == pre[w]) plan.feasible = false;
      if (fixed(v) && !fixed(w)) plan.domains[pos[w]] &= static_cast<std::uint8_t>(~color_bit(pre[v]));
      if (!fixed(v) && !fixed(w) && pos[w] > pos[v]) plan.forward[pos[v]].push_back(pos[w]);
    }
  }
  for (auto d : plan.domains)
    if (d == 0) plan.feasible = false;
  return plan;
}

/// Shared node accounting. Workers flush their local tallies in batches; the
/// final total does not depend on how the tree was split.
class node_budget {
 public:
  explicit node_budget(std::uint64_t limit) : limit_(limit) {}

  bool charge(std::uint64_t n) {
    const std::uint64_t now = used_.fetch_add(n, std::memory_order_relaxed) + n;
    if (now > limit_) exhausted_.store(true, std::memory_order_relaxed);
    return !exhausted();
  }
  bool exhausted() const { return exhausted_.load(std::memory_order_relaxed); }
  std::uint64_t used() const { return used_.load(std::memory_order_relaxed); }
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t limit_;
  std::atomic<std::uint64_t> used_{0};
  std::atomic<bool> exhausted_{false};
};

/// Depth-first counter with forward checking on colour domains. Row d of
/// `rows_` holds the domains of positions >= d once positions < d are fixed.
/// At the last position the remaining domain size is added directly.
class subtree_counter {
 public:
  static constexpr std::uint64_t flush_every = 1u << 12;

  subtree_counter(const search_plan& plan, node_budget& budget)
      : plan_(plan), budget_(budget), m_(plan.size()), rows_((m_ + 1) * m_) {}

  std::span<std::uint8_t> row(std::size_t d) { return {rows_.data() + d * m_, m_}; }

  /// Counts completions of row `d`. With a non-null `prefixes`, descent
  /// stops at depth `split` and row snapshots are collected instead.
  std::uint64_t run(std::size_t d, std::size_t split = static_cast<std::size_t>(-1),
                    std::vector<std::vector<std::uint8_t>>* prefixes = nullptr) {
    if (aborted_) return 0;
    if (d == split && prefixes) {
      auto r = row(d);
      prefixes->emplace_back(r.begin(), r.end());
      return 0;
    }
    std::uint8_t mask = row(d)[d];
    if (d + 1 == m_) {
      const auto leaves = static_cast<std::uint64_t>(std::popcount(mask));
      tick(leaves);
      return leaves;
    }
    std::uint64_t total = 0;
    while (mask) {
      const std::uint8_t bit = mask & static_cast<std::uint8_t>(-mask);
      mask &= static_cast<std::uint8_t>(mask - 1);
      tick(1);
      if (aborted_) return 0;
      auto cur = row(d), next = row(d + 1);
      std::copy(cur.begin() + static_cast<std::ptrdiff_t>(d + 1), cur.end(),
                next.begin() + static_cast<std::ptrdiff_t>(d + 1));
      bool dead = false;
      for (std::uint32_t f : plan_.forward[d]) {
        next[f] &= static_cast<std::uint8_t>(~bit);
        if (next[f] == 0) {
          dead = true;
          break;
        }
      }
      if (!dead) total += run(d + 1, split, prefixes);
    }
    return total;
  }

  void flush() {
    if (pending_) {
      if (!budget_.charge(pending_)) aborted_ = true;
      pending_ = 0;
    }
  }
  bool aborted() const { return aborted_ || budget_.exhausted(); }

 private:
  void tick(std::uint64_t n) {
    pending_ += n;
    if (pending_ >= flush_every) {
      flush();
      if (budget_.exhausted()) aborted_ = true;
    }
  }

  const search_plan& plan_;
  node_budget& budget_;
  std::size_t m_;
  std::vector<std::uint8_t> rows_;
  std::uint64_t pending_ = 0;
  bool aborted_ = false;
};

constexpr std::size_t split_depth = 8;

}  // namespace detail

/// Number of proper 3-colourings of g agreeing with `pre` (an empty span or
/// one entry per vertex, 0 meaning free). The tree is always split at a
/// fixed depth, so counts and node totals are identical for every thread
/// count.
template <graph_like G>
count_result count_extensions(const G& g, std::span<const color> pre, const count_options& opt = {}) {
  const detail::search_plan plan = detail::make_plan(g, pre);
  count_result res;
  if (!plan.feasible) return res;
  const std::size_t m = plan.size();
  if (m == 0) {
    res.count = 1;
    return res;
  }
  detail::node_budget budget(opt.budget);
  std::vector<std::vector<std::uint8_t>> prefixes;
  std::uint64_t total = 0;
  {
    detail::subtree_counter root(plan, budget);
    std::copy(plan.domains.begin(), plan.domains.end(), root.row(0).begin());
    total += root.run(0, std::min(detail::split_depth, m - 1), &prefixes);
    root.flush();
    if (root.aborted()) throw budget_exceeded(opt.budget);
  }

  std::vector<std::uint64_t> partial(prefixes.size(), 0);
  std::atomic<std::size_t> next{0};
  const std::size_t depth = std::min(detail::split_depth, m - 1);
  auto work = [&] {
    detail::subtree_counter counter(plan, budget);
    for (std::size_t i = next.fetch_add(1); i < prefixes.size(); i = next.fetch_add(1)) {
      std::copy(prefixes[i].begin(), prefixes[i].end(), counter.row(depth).begin());
      partial[i] = counter.run(depth);
      if (counter.aborted()) break;
    }
    counter.flush();
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(opt.threads, static_cast<unsigned>(prefixes.size())));
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
  }
  if (budget.exhausted() || budget.used() > opt.budget) throw budget_exceeded(opt.budget);
  for (auto p : partial) total += p;
  res.count = total;
  res.nodes = budget.used();
  return res;
}

template <graph_like G>
count_result count_3_colorings(const G& g, const count_options& opt = {}) {
  return count_extensions(g, std::span<const color>{}, opt);
}

/// Calls `visit(phi)` for every proper 3-colouring extending `pre`, in
/// lexicographic order of the search. Returning false from `visit` stops.
template <graph_like G, class Visitor>
std::uint64_t for_each_coloring(const G& g, std::span<const color> pre, Visitor&& visit,
                                const count_options& opt = {}) {
  const detail::search_plan plan = detail::make_plan(g, pre);
  if (!plan.feasible) return 0;
  coloring phi(g.vertex_count(), 0);
  if (!pre.empty()) std::copy(pre.begin(), pre.end(), phi.begin());
  const std::size_t m = plan.size();
  std::vector<std::uint8_t> rows((m + 1) * m);
  std::copy(plan.domains.begin(), plan.domains.end(), rows.begin());
  std::uint64_t nodes = 0, seen = 0;
  bool stop = false;
  auto rec = [&](auto&& self, std::size_t d) -> void {
    if (d == m) {
      ++seen;
      if (!visit(static_cast<const coloring&>(phi))) stop = true;
      return;
    }
    const std::uint8_t mask = rows[d * m + d];
    for (color c = 1; c <= 3 && !stop; ++c) {
      const std::uint8_t bit = detail::color_bit(c);
      if (!(mask & bit)) continue;
      if (++nodes > opt.budget) throw budget_exceeded(opt.budget);
      std::uint8_t* next = rows.data() + (d + 1) * m;
      std::copy(rows.data() + d * m + d + 1, rows.data() + (d + 1) * m, next + d + 1);
      bool dead = false;
      for (std::uint32_t f : plan.forward[d]) {
        next[f] &= static_cast<std::uint8_t>(~bit);
        if (next[f] == 0) dead = true;
      }
      if (dead) continue;
      phi[plan.order[d]] = c;
      self(self, d + 1);
      phi[plan.order[d]] = 0;
    }
  };
  rec(rec, 0);
  return seen;
}

template <graph_like G, class Visitor>
std::uint64_t for_each_coloring(const G& g, Visitor&& visit, const count_options& opt = {}) {
  return for_each_coloring(g, std::span<const color>{}, std::forward<Visitor>(visit), opt);
}

template <graph_like G>
std::vector<coloring> enumerate_3_colorings(const G& g, const count_options& opt = {}) {
  std::vector<coloring> out;
  for_each_coloring(g, [&](const coloring& phi) {
    out.push_back(phi);
    return true;
  }, opt);
  return out;
}

/// Some proper 3-colouring extending `pre`, if one exists.
template <graph_like G>
std::optional<coloring> find_extension(const G& g, std::span<const color> pre,
                                       const count_options& opt = {}) {
  std::optional<coloring> found;
  for_each_coloring(g, pre, [&](const coloring& phi) {
    found = phi;
    return false;
  }, opt);
  return found;
}

struct special_data {
  std::size_t index;  // position on the cycle
  vertex_id vertex;
  std::pair<vertex_id, vertex_id> edge;
};

/// Position of the unique vertex whose colour appears once on a properly
/// coloured pentagon.
inline std::size_t special_index(std::span<const color> boundary) {
  if (boundary.size() != 5) throw std::invalid_argument("special vertex needs a 5-cycle");
  int tally[4] = {0, 0, 0, 0};
  for (std::size_t i = 0; i < 5; ++i) {
    const color c = boundary[i];
    if (c < 1 || c > 3 || c == boundary[(i + 1) % 5])
      throw std::invalid_argument("colouring is not proper on the cycle");
    ++tally[c];
  }
  for (std::size_t i = 0; i < 5; ++i)
    if (tally[boundary[i]] == 1) return i;
  throw std::logic_error("proper pentagon colouring without a special vertex");
}

/// `phi` colours the host graph; only the cycle's vertices are read.
inline special_data find_special(const cycle& c, std::span<const color> phi) {
  if (c.size() != 5) throw std::invalid_argument("special vertex needs a 5-cycle");
  color b[5];
  for (std::size_t i = 0; i < 5; ++i) b[i] = phi[c[i]];
  const std::size_t i = special_index(b);
  return {i, c[i], {c[i + 2], c[i + 3]}};
}

/// Whether the colouring `boundary` of the facial cycle c (aligned with
/// c.vertices) extends to a proper 3-colouring of g.
inline bool extends(const plane_graph& g, const cycle& c, std::span<const color> boundary,
                    const count_options& opt = {}) {
  if (c.size() > 5) throw std::invalid_argument("extension check is for cycles of length <= 5");
  if (boundary.size() != c.size()) throw std::invalid_argument("boundary colouring size mismatch");
  if (!is_facial(g, c)) throw graph_error("not_facial", "cycle does not bound a face");
  coloring pre(g.vertex_count(), 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (boundary[i] < 1 || boundary[i] > 3 || boundary[i] == boundary[(i + 1) % c.size()])
      throw std::invalid_argument("boundary colouring is not proper on the cycle");
    pre[c[i]] = boundary[i];
  }
  return find_extension(g, pre, opt).has_value();
}

/// Proper colourings of a bare cycle of the given length, lexicographic.
inline std::vector<coloring> cycle_colorings(std::size_t length) {
  std::vector<coloring> out;
  coloring cur(length, 1);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == length) {
      if (length < 2 || cur[length - 1] != cur[0]) out.push_back(cur);
      return;
    }
    for (color c = 1; c <= 3; ++c) {
      if (i > 0 && cur[i - 1] == c) continue;
      cur[i] = c;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

struct bichromatic_component {
  color first;
  color second;
  std::vector<vertex_id> vertices;  // ascending
};

/// Components of the subgraph induced by the vertices coloured i or j,
/// ordered by least vertex.
template <graph_like G>
std::vector<bichromatic_component> bichromatic_components(const G& g, std::span<const color> phi,
                                                          color i, color j) {
  if (i == j) throw std::invalid_argument("bichromatic components need two distinct colours");
  std::vector<bichromatic_component> out;
  std::vector<bool> seen(g.vertex_count(), false);
  auto in = [&](vertex_id v) { return phi[v] == i || phi[v] == j; };
  for (vertex_id s = 0; s < g.vertex_count(); ++s) {
    if (seen[s] || !in(s)) continue;
    bichromatic_component comp{i, j, {}};
    std::vector<vertex_id> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      const vertex_id v = stack.back();
      stack.pop_back();
      comp.vertices.push_back(v);
      for (vertex_id w : g.neighbors(v))
        if (!seen[w] && in(w)) {
          seen[w] = true;
          stack.push_back(w);
        }
    }
    std::sort(comp.vertices.begin(), comp.vertices.end());
    out.push_back(std::move(comp));
  }
  return out;
}

inline coloring switch_component(std::span<const color> phi, const bichromatic_component& comp) {
  coloring out(phi.begin(), phi.end());
  for (vertex_id v : comp.vertices) {
    if (out[v] == comp.first)
      out[v] = comp.second;
    else if (out[v] == comp.second)
      out[v] = comp.first;
  }
  return out;
}

struct switching_family {
  color first = 1;
  color second = 2;
  std::size_t components = 0;
  std::vector<coloring> colorings;
};

/// The 2^t colourings obtained by switching every subset of the t
/// components of G_ij, in binary-counter order.
template <graph_like G>
switching_family colorings_from_switching(const G& g, std::span<const color> phi, color i, color j,
                                          std::size_t max_components = 20) {
  const auto comps = bichromatic_components(g, phi, i, j);
  switching_family fam;
  fam.first = i;
  fam.second = j;
  fam.components = comps.size();
  if (fam.components > max_components)
    throw std::length_error("too many components to list all switchings");
  const std::uint64_t total = std::uint64_t{1} << fam.components;
  fam.colorings.reserve(total);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    coloring cur(phi.begin(), phi.end());
    for (std::size_t b = 0; b < fam.components; ++b)
      if (mask >> b & 1) cur = switch_component(cur, comps[b]);
    fam.colorings.push_back(std::move(cur));
  }
  return fam;
}

/// Same, for the colour pair whose bichromatic subgraph has the most
/// components (ties: least pair).
template <graph_like G>
switching_family colorings_from_switching(const G& g, std::span<const color> phi,
                                          std::size_t max_components = 20) {
  color bi = 1, bj = 2;
  std::size_t best = 0;
  bool have = false;
  for (color i = 1; i <= 3; ++i)
    for (color j = i + 1; j <= 3; ++j) {
      const std::size_t t = bichromatic_components(g, phi, i, j).size();
      if (!have || t > best) {
        have = true;
        best = t;
        bi = i;
        bj = j;
      }
    }
  return colorings_from_switching(g, phi, bi, bj, max_components);
}

}  // namespace threecol
