#pragma once

// JSON file formats: graphs, colourings and the machine-readable reports.

#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <unordered_map>
#include <string>

#include <json.hpp>

#include "threecol/bounds.hpp"
#include "threecol/coloring.hpp"
#include "threecol/laminar.hpp"
#include "threecol/plane_graph.hpp"
#include "threecol/transition.hpp"

namespace threecol {

using json = nlohmann::ordered_json;

/// {"vertices": [...], "rotation": {"a": [...], ...}, "outer_face": [...]}.
/// Names are mapped to dense ids in the order of "vertices".
inline plane_graph graph_from_json(const json& doc) {
  if (!doc.is_object()) throw graph_error("schema", "graph document must be an object");
  for (const char* key : {"vertices", "rotation", "outer_face"})
    if (!doc.contains(key)) throw graph_error("schema", std::string("missing field '") + key + "'");
  const json& vs = doc["vertices"];
  const json& rot = doc["rotation"];
  const json& outer = doc["outer_face"];
  if (!vs.is_array() || !rot.is_object() || !outer.is_array())
    throw graph_error("schema", "fields have the wrong JSON types");

  std::vector<std::string> names;
  std::unordered_map<std::string, vertex_id> ids;
  for (const json& v : vs) {
    if (!v.is_string()) throw graph_error("schema", "vertex identifiers must be strings");
    const std::string name = v.get<std::string>();
    if (ids.count(name)) throw graph_error("duplicate_vertex", "duplicate vertex " + name, {name});
    ids.emplace(name, static_cast<vertex_id>(names.size()));
    names.push_back(name);
  }
  auto lookup = [&](const json& v, const std::string& context) {
    if (!v.is_string()) throw graph_error("schema", "vertex identifiers must be strings");
    const std::string name = v.get<std::string>();
    auto it = ids.find(name);
    if (it == ids.end())
      throw graph_error("unknown_vertex", context + " names unknown vertex " + name, {name});
    return it->second;
  };

  std::vector<std::vector<vertex_id>> rotation(names.size());
  for (auto it = rot.begin(); it != rot.end(); ++it) {
    const vertex_id v = lookup(json(it.key()), "rotation");
    if (!it.value().is_array()) throw graph_error("schema", "rotation of " + it.key() + " must be an array");
    for (const json& w : it.value()) rotation[v].push_back(lookup(w, "rotation of " + it.key()));
  }
  for (const auto& name : names)
    if (!rot.contains(name) && names.size() > 1)
      throw graph_error("missing_rotation", "vertex " + name + " has no rotation", {name});

  std::vector<vertex_id> walk;
  for (const json& v : outer) walk.push_back(lookup(v, "outer_face"));
  return plane_graph::with_outer_walk(std::move(names), std::move(rotation), walk);
}

inline plane_graph load_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw graph_error("io", "cannot open " + path.string(), {path.string()});
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw graph_error("parse", path.string() + ": " + e.what(), {path.string()});
  }
  return graph_from_json(doc);
}

inline json graph_to_json(const plane_graph& g) {
  json doc;
  doc["vertices"] = g.names();
  json rot = json::object();
  for (vertex_id v = 0; v < g.vertex_count(); ++v) {
    json ns = json::array();
    for (vertex_id w : g.rotation(v)) ns.push_back(g.name(w));
    rot[g.name(v)] = std::move(ns);
  }
  doc["rotation"] = std::move(rot);
  json outer = json::array();
  if (g.edge_count() == 0)
    outer.push_back(g.name(0));
  else
    for (vertex_id v : g.faces()[g.outer_face()]) outer.push_back(g.name(v));
  doc["outer_face"] = std::move(outer);
  return doc;
}

inline void save_graph(const plane_graph& g, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw graph_error("io", "cannot write " + path.string(), {path.string()});
  out << graph_to_json(g).dump(2) << "\n";
}

inline json error_to_json(const graph_error& e) {
  json doc;
  doc["error"] = e.kind();
  doc["message"] = e.what();
  doc["where"] = e.where();
  return doc;
}

/// {"colors": {"a": 1, ...}}; every vertex must be coloured 1..3.
inline coloring coloring_from_json(const plane_graph& g, const json& doc) {
  if (!doc.is_object() || !doc.contains("colors") || !doc["colors"].is_object())
    throw graph_error("schema", "colouring document needs a 'colors' object");
  coloring phi(g.vertex_count(), 0);
  for (auto it = doc["colors"].begin(); it != doc["colors"].end(); ++it) {
    const auto v = g.find(it.key());
    if (!v) throw graph_error("unknown_vertex", "colouring names unknown vertex " + it.key(), {it.key()});
    if (!it.value().is_number_integer() || it.value().get<int>() < 1 || it.value().get<int>() > 3)
      throw graph_error("schema", "colours must be 1, 2 or 3", {it.key()});
    phi[*v] = static_cast<color>(it.value().get<int>());
  }
  for (vertex_id v = 0; v < g.vertex_count(); ++v)
    if (phi[v] == 0) throw graph_error("schema", "vertex " + g.name(v) + " is uncoloured", {g.name(v)});
  return phi;
}

inline json coloring_to_json(const plane_graph& g, std::span<const color> phi) {
  json colors = json::object();
  for (vertex_id v = 0; v < g.vertex_count(); ++v) colors[g.name(v)] = static_cast<int>(phi[v]);
  json doc;
  doc["colors"] = std::move(colors);
  return doc;
}

/// Exact integers: JSON numbers while they fit in 64 bits, decimal strings
/// beyond.
inline json big_to_json(const big_int& x) {
  if (x >= 0 && x <= std::numeric_limits<std::uint64_t>::max())
    return json(static_cast<std::uint64_t>(x));
  return json(x.str());
}

inline json names_of(const plane_graph& g, std::span<const vertex_id> vs) {
  json out = json::array();
  for (vertex_id v : vs) out.push_back(g.name(v));
  return out;
}

inline json cycles_to_json(const plane_graph& g, std::span<const cycle> cs) {
  json out = json::array();
  for (const cycle& c : cs) out.push_back(names_of(g, c.vertices));
  return out;
}

inline json count_to_json(const std::string& graph, const count_result& r) {
  json doc;
  doc["graph"] = graph;
  doc["count"] = r.count;
  doc["budget_used"] = r.nodes;
  return doc;
}

inline json transition_to_json(const plane_graph& g, const transition_matrix& m) {
  json doc;
  doc["rows"] = names_of(g, m.rows);
  doc["cols"] = names_of(g, m.cols);
  json entries = json::array();
  for (std::size_t i = 0; i < 5; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < 5; ++j) row.push_back(big_to_json(m.entries(i, j)));
    entries.push_back(std::move(row));
  }
  doc["entries"] = std::move(entries);
  doc["classification"] = std::string(to_string(classify(m)));
  doc["raw_count"] = m.raw_count ? json(*m.raw_count) : json(nullptr);
  return doc;
}

inline json outcome_to_json(const plane_graph& g, const laminar_outcome& out) {
  json doc;
  doc["outcome"] = out.reducible() ? "reducible" : "family";
  doc["vertex"] = out.reducible() ? json(g.name(out.vertex())) : json(nullptr);
  if (out.reducible()) {
    doc["family"] = json::array();
    doc["chain"] = json::array();
    doc["antichain"] = json::array();
  } else {
    const auto& fam = out.covering().family.cycles;
    const chain_antichain dec = dilworth_decompose(g, fam);
    doc["family"] = cycles_to_json(g, fam);
    doc["chain"] = cycles_to_json(g, dec.chain.cycles);
    doc["antichain"] = cycles_to_json(g, dec.antichain.cycles);
  }
  doc["k"] = out.k;
  return doc;
}

inline json report_to_json(const plane_graph& g, const bound_report& r) {
  json doc;
  doc["graph"] = r.graph_id;
  doc["n"] = r.n;
  doc["k"] = r.k;
  doc["exact_count"] = r.exact_count;
  doc["budget_used"] = r.nodes;
  doc["main_bound"] = main_bound_value(r.n);
  doc["main_pass"] = r.main_pass;
  doc["outcome"] = r.reducible ? "reducible" : "family";
  doc["vertex"] = r.reducible ? json(g.name(*r.reducible)) : json(nullptr);
  doc["family_size"] = r.family_size;
  doc["balance_pass"] = r.balance_pass;
  if (r.chain) {
    json ch;
    ch["cycles"] = cycles_to_json(g, r.chain->cycles);
    ch["size"] = r.chain->cycles.size();
    ch["bound_pass"] = r.chain->bound_pass;
    json classes = json::array();
    for (auto c : r.chain->layer_classes) classes.push_back(std::string(to_string(c)));
    ch["layer_classes"] = std::move(classes);
    ch["product_total"] = r.chain->product_total ? big_to_json(*r.chain->product_total) : json(nullptr);
    ch["product_pass"] = r.chain->product_pass;
    ch["matrix_lemma_pass"] = r.chain->matrix_lemma_pass;
    doc["chain"] = std::move(ch);
  } else {
    doc["chain"] = nullptr;
  }
  if (r.antichain) {
    json an;
    an["cycles"] = cycles_to_json(g, r.antichain->cycles);
    an["size"] = r.antichain->cycles.size();
    an["bound_pass"] = r.antichain->bound_pass;
    an["switching_components"] = r.antichain->switching.components;
    an["switching_colorings"] =
        r.antichain->switching.listed ? json(r.antichain->switching.distinct) : json(nullptr);
    an["switching_pass"] = r.antichain->switching_pass;
    doc["antichain"] = std::move(an);
  } else {
    doc["antichain"] = nullptr;
  }
  doc["all_pass"] = r.all_pass();
  return doc;
}

}  // namespace threecol
