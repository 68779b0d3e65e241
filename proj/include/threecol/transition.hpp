#pragma once

// Colour transition matrices between nested pentagons.

#include <array>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "threecol/coloring.hpp"
#include "threecol/matrix.hpp"
#include "threecol/plane_graph.hpp"

namespace threecol {

/// M(i, j) is one sixth of the number of colourings of the annulus between
/// the two cycles in which rows[i] is special on the outer cycle and cols[j]
/// is special on the inner one. Labels are parent-graph vertex ids in
/// clockwise order from the least id.
struct transition_matrix {
  matrix5<big_int> entries;
  std::array<vertex_id, 5> rows{};
  std::array<vertex_id, 5> cols{};
  std::optional<matrix5<std::uint64_t>> raw_cells;  // colouring counts before division
  std::optional<std::uint64_t> raw_count;           // colourings of the annulus
  std::uint64_t nodes = 0;
};

inline std::array<vertex_id, 5> pentagon_labels(const plane_graph& g, const cycle& c) {
  if (c.size() != 5) throw std::invalid_argument("transition matrices need 5-cycles");
  const auto cw = clockwise_order(g, c, compute_regions(g, c));
  return {cw[0], cw[1], cw[2], cw[3], cw[4]};
}

inline transition_matrix compute_transition(const plane_graph& g, const cycle& outer,
                                            const cycle& inner, const count_options& opt = {}) {
  if (outer.size() != 5 || inner.size() != 5)
    throw std::invalid_argument("transition matrices need 5-cycles");
  if (!is_triangle_free(g)) throw std::invalid_argument("graph contains a triangle");
  const subgraph ann = annulus_subgraph(g, outer, inner);

  transition_matrix tm;
  tm.rows = pentagon_labels(g, outer);
  tm.cols = pentagon_labels(g, inner);

  std::array<vertex_id, 5> row_local{}, col_local{};
  for (std::size_t i = 0; i < 5; ++i) {
    row_local[i] = ann.from_parent(tm.rows[i]).value();
    col_local[i] = ann.from_parent(tm.cols[i]).value();
  }
  std::vector<vertex_id> boundary(row_local.begin(), row_local.end());
  for (vertex_id v : col_local)
    if (std::find(boundary.begin(), boundary.end(), v) == boundary.end()) boundary.push_back(v);

  const plane_graph& h = ann.graph;
  matrix5<std::uint64_t> raw;
  std::uint64_t total = 0;
  coloring pre(h.vertex_count(), 0);
  count_options inner_opt = opt;

  // Colour the two boundary pentagons, then count completions of each.
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == boundary.size()) {
      inner_opt.budget = opt.budget - std::min(opt.budget, tm.nodes);
      const count_result r = count_extensions(h, pre, inner_opt);
      tm.nodes += r.nodes;
      if (r.count == 0) return;
      color rc[5], cc[5];
      for (std::size_t i = 0; i < 5; ++i) {
        rc[i] = pre[row_local[i]];
        cc[i] = pre[col_local[i]];
      }
      raw(special_index(rc), special_index(cc)) += r.count;
      total += r.count;
      return;
    }
    const vertex_id v = boundary[k];
    for (color c = 1; c <= 3; ++c) {
      bool ok = true;
      for (vertex_id w : h.neighbors(v)) ok = ok && pre[w] != c;
      if (!ok) continue;
      pre[v] = c;
      self(self, k + 1);
      pre[v] = 0;
    }
  };
  rec(rec, 0);

  for (std::size_t k = 0; k < 25; ++k) {
    if (raw.a[k] % 6 != 0)
      throw std::logic_error("transition cell count not divisible by 6");
    tm.entries.a[k] = raw.a[k] / 6;
  }
  tm.raw_cells = raw;
  tm.raw_count = total;
  return tm;
}

/// Product along a chain; each matrix's columns must be labelled like the
/// next one's rows.
inline transition_matrix compose(std::span<const transition_matrix> ms) {
  if (ms.empty()) throw std::invalid_argument("compose needs at least one matrix");
  if (ms.size() == 1) return ms.front();
  transition_matrix out;
  out.entries = ms.front().entries;
  out.rows = ms.front().rows;
  for (std::size_t i = 1; i < ms.size(); ++i) {
    if (ms[i - 1].cols != ms[i].rows)
      throw std::invalid_argument("transition matrix labels do not match along the chain");
    out.entries = out.entries * ms[i].entries;
    out.nodes += ms[i].nodes;
  }
  out.nodes += ms.front().nodes;
  out.cols = ms.back().cols;
  return out;
}

inline matrix_class classify(const transition_matrix& m) { return classify(m.entries); }

}  // namespace threecol
