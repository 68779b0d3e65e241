#pragma once

// Exact comparisons against the lower bounds 2^sqrt(n/212), 2^(m/7) and
// 2^(m/6), and the end-to-end verification harness.

#include <bit>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "threecol/coloring.hpp"
#include "threecol/laminar.hpp"
#include "threecol/matrix.hpp"
#include "threecol/transition.hpp"

namespace threecol {

/// count >= 2^sqrt(n / 212). Decided by integer brackets on log2(count)
/// when possible, otherwise by a 100-digit evaluation with an explicit
/// error margin; a result inside the margin is accepted, so a failure is
/// only reported when it is certain.
inline bool meets_main_bound(std::uint64_t count, std::size_t n) {
  if (count == 0) return false;
  const auto floor_log = static_cast<std::uint64_t>(std::bit_width(count) - 1);
  const big_int lo = big_int(212) * floor_log * floor_log;
  if (lo >= n) return true;
  if (std::has_single_bit(count)) return false;
  const big_int hi = big_int(212) * (floor_log + 1) * (floor_log + 1);
  if (hi <= n) return false;
  using real = boost::multiprecision::cpp_bin_float_100;
  const real log2c = boost::multiprecision::log(real(count)) / boost::multiprecision::log(real(2));
  const real margin("1e-80");
  const real upper = log2c + margin;
  return real(212) * upper * upper >= real(n);
}

inline double main_bound_value(std::size_t n) {
  return std::exp2(std::sqrt(static_cast<double>(n) / 212.0));
}

/// count >= 2^(m / 7), as count^7 >= 2^m.
inline bool meets_chain_bound(std::uint64_t count, std::size_t m) {
  return boost::multiprecision::pow(big_int(count), 7) >= (big_int(1) << m);
}

/// count >= 2^(m / 6), as count^6 >= 2^m.
inline bool meets_antichain_bound(std::uint64_t count, std::size_t m) {
  return boost::multiprecision::pow(big_int(count), 6) >= (big_int(1) << m);
}

/// (k - 1) |D_k| >= (k - 3) n.
inline bool meets_low_degree_share(std::size_t low, std::size_t n, std::size_t k) {
  if (k < 3) return true;
  return (k - 1) * low >= (k - 3) * n;
}

/// G' for an antichain: the graph with the strict interiors of the members
/// removed, so every member bounds a face.
inline subgraph antichain_skeleton(const plane_graph& g, std::span<const cycle> antichain) {
  std::vector<bool> keep(g.vertex_count(), true);
  for (const cycle& c : antichain)
    for (vertex_id v : compute_regions(g, c).interior) keep[v] = false;
  const auto& walk = g.faces()[g.outer_face()];
  const dart outer = walk.size() > 1 ? dart{walk[0], walk[1]} : dart{0, 0};
  return restrict_graph(g, keep, [](vertex_id, vertex_id) { return true; }, outer);
}

struct switching_witness {
  std::size_t components = 0;   // t for the best colour pair
  std::size_t distinct = 0;     // distinct proper colourings of g obtained, 0 if not listed
  bool listed = false;
};

/// Colours the antichain skeleton, switches bichromatic components and
/// extends each result back to g. Listing stops above 2^max_listed.
inline switching_witness antichain_switching(const plane_graph& g, std::span<const cycle> antichain,
                                             const count_options& opt = {},
                                             std::size_t max_listed = 12) {
  switching_witness w;
  const subgraph sk = antichain_skeleton(g, antichain);
  const auto phi = find_extension(sk.graph, std::span<const color>{}, opt);
  if (!phi) return w;
  std::size_t best = 0;
  for (color i = 1; i <= 3; ++i)
    for (color j = i + 1; j <= 3; ++j)
      best = std::max(best, bichromatic_components(sk.graph, *phi, i, j).size());
  w.components = best;
  if (best > max_listed) return w;
  const switching_family fam = colorings_from_switching(sk.graph, *phi, max_listed);
  std::vector<coloring> lifted;
  for (const coloring& psi : fam.colorings) {
    if (!is_proper(sk.graph, psi)) return w;
    coloring pre(g.vertex_count(), 0);
    for (vertex_id v = 0; v < sk.to_parent.size(); ++v) pre[sk.to_parent[v]] = psi[v];
    const auto full = find_extension(g, pre, opt);
    if (!full || !is_proper(g, *full)) return w;
    lifted.push_back(*full);
  }
  std::sort(lifted.begin(), lifted.end());
  w.distinct = static_cast<std::size_t>(std::unique(lifted.begin(), lifted.end()) - lifted.begin());
  w.listed = true;
  return w;
}

struct bound_options {
  std::size_t k = 213;
  count_options counting;
};

struct chain_check {
  std::vector<cycle> cycles;  // outermost first
  bool bound_pass = true;     // count >= 2^(|chain|/7)
  std::vector<matrix_class> layer_classes;
  std::optional<big_int> product_total;  // 1^T M 1 of the composed chain matrix
  bool product_pass = true;              // 6 * 1^T M 1 <= count
  bool matrix_lemma_pass = true;         // 1^T M 1 >= (3/2)^((|chain|-1)/4)
};

struct antichain_check {
  std::vector<cycle> cycles;
  bool bound_pass = true;  // count >= 2^(|antichain|/6)
  switching_witness switching;
  bool switching_pass = true;  // 6 t >= |antichain|, and 2^t colourings listed when small
};

struct bound_report {
  std::string graph_id;
  std::size_t n = 0;
  std::size_t k = 213;
  std::uint64_t exact_count = 0;
  std::uint64_t nodes = 0;
  bool main_pass = false;
  std::optional<vertex_id> reducible;
  std::size_t family_size = 0;
  bool balance_pass = true;  // chain * antichain >= m and one of the sqrt thresholds
  std::optional<chain_check> chain;
  std::optional<antichain_check> antichain;

  bool all_pass() const {
    bool ok = main_pass && balance_pass;
    if (chain) ok = ok && chain->bound_pass && chain->product_pass && chain->matrix_lemma_pass;
    if (antichain) ok = ok && antichain->bound_pass && antichain->switching_pass;
    return ok;
  }
};

/// Counts g exactly and checks every bound that applies to it: the main
/// bound always, and when extract yields a laminar family, the chain and
/// antichain bounds of its decomposition together with the transition
/// matrix and switching witnesses behind them.
inline bound_report verify(const plane_graph& g, const bound_options& opt = {},
                           std::string graph_id = {}) {
  bound_report rep;
  rep.graph_id = std::move(graph_id);
  rep.n = g.vertex_count();
  rep.k = opt.k;
  const count_result counted = count_3_colorings(g, opt.counting);
  rep.exact_count = counted.count;
  rep.nodes = counted.nodes;
  rep.main_pass = meets_main_bound(rep.exact_count, rep.n);

  const laminar_outcome lam = extract(g, opt.k);
  if (lam.reducible()) {
    rep.reducible = lam.vertex();
    return rep;
  }
  const auto& fam = lam.covering().family.cycles;
  rep.family_size = fam.size();
  const chain_antichain dec = dilworth_decompose(g, fam);
  const std::size_t m = fam.size(), c = dec.chain.size(), a = dec.antichain.size();
  rep.balance_pass = c * a >= m && (antichain_meets_balance(a, m) || chain_meets_balance(c, m));

  chain_check ch;
  ch.cycles = dec.chain.cycles;
  ch.bound_pass = meets_chain_bound(rep.exact_count, c);
  if (c >= 2) {
    std::vector<transition_matrix> layers;
    for (std::size_t i = 0; i + 1 < c; ++i) {
      layers.push_back(compute_transition(g, ch.cycles[i], ch.cycles[i + 1], opt.counting));
      ch.layer_classes.push_back(classify(layers.back()));
    }
    const transition_matrix total = compose(layers);
    ch.product_total = total.entries.sum();
    ch.product_pass = 6 * *ch.product_total <= big_int(rep.exact_count);
    std::vector<matrix5<big_int>> ms;
    for (const auto& l : layers) ms.push_back(l.entries);
    ch.matrix_lemma_pass = verify_product_bound<big_int>(ms).holds;
  }
  rep.chain = std::move(ch);

  antichain_check an;
  an.cycles = dec.antichain.cycles;
  an.bound_pass = meets_antichain_bound(rep.exact_count, a);
  an.switching = antichain_switching(g, an.cycles, opt.counting);
  an.switching_pass = 6 * an.switching.components >= a &&
                      (!an.switching.listed ||
                       an.switching.distinct == (std::size_t{1} << an.switching.components));
  rep.antichain = std::move(an);
  return rep;
}

}  // namespace threecol
