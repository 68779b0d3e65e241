#pragma once

// Subcommand front end. Exit codes: 0 success, 1 a bound or property
// failed, 2 bad input, 3 counting budget exhausted. Machine-readable
// reports go to `out`, human-readable diagnostics to `err`.

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "threecol/bounds.hpp"
#include "threecol/generators.hpp"
#include "threecol/io.hpp"
#include "threecol/laminar.hpp"
#include "threecol/matrix.hpp"
#include "threecol/transition.hpp"

#ifndef THREECOL_VERSION
#define THREECOL_VERSION "0.0.0"
#endif

namespace threecol::cli {

enum exit_code : int { success = 0, bound_failure = 1, input_error = 2, budget_exhausted = 3 };

inline std::string version_string() {
  std::ostringstream s;
  s << "threecol " << THREECOL_VERSION << " (C++" << __cplusplus / 100 % 100;
#if defined(__clang__)
  s << ", clang " << __clang_major__ << "." << __clang_minor__;
#elif defined(__GNUC__)
  s << ", gcc " << __GNUC__ << "." << __GNUC_MINOR__;
#endif
#ifdef NDEBUG
  s << ", release";
#else
  s << ", debug";
#endif
  s << ")";
  return s.str();
}

namespace detail {

inline std::vector<std::string> split_names(const std::string& list) {
  std::vector<std::string> out;
  std::stringstream s(list);
  for (std::string item; std::getline(s, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

inline cycle cycle_from_names(const plane_graph& g, const std::string& list) {
  std::vector<vertex_id> ids;
  for (const auto& name : split_names(list)) {
    const auto v = g.find(name);
    if (!v) throw graph_error("unknown_vertex", "unknown vertex " + name, {name});
    ids.push_back(*v);
  }
  return make_cycle(g, std::span<const vertex_id>(ids));
}

inline void emit(std::ostream& out, const json& doc, bool single_line = false) {
  out << (single_line ? doc.dump() : doc.dump(2)) << "\n";
}

inline std::string names_text(const plane_graph& g, const cycle& c) {
  std::string s;
  for (vertex_id v : c.vertices) s += (s.empty() ? "" : " ") + g.name(v);
  return s;
}

inline void print_matrix(std::ostream& out, const plane_graph& g, const transition_matrix& m) {
  out << "rows:";
  for (vertex_id v : m.rows) out << " " << g.name(v);
  out << "\ncols:";
  for (vertex_id v : m.cols) out << " " << g.name(v);
  out << "\n";
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 5; ++j) out << (j ? " " : "  ") << m.entries(i, j);
    out << "\n";
  }
  out << "classification: " << to_string(classify(m)) << "\n";
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
  CLI::App app{"Exact 3-colouring counts and colour transition matrices of triangle-free plane graphs",
               "threecol"};
  app.set_version_flag("--version", version_string());
  app.require_subcommand(1);

  // generate
  generator_spec gen;
  std::string gen_out;
  auto* generate_cmd = app.add_subcommand("generate", "Write a generated plane graph as JSON");
  generate_cmd->add_option("--family", gen.family, "tower | shared | dodeca | garden | perturbed")
      ->required()
      ->check(CLI::IsMember({"tower", "shared", "dodeca", "garden", "perturbed"}));
  generate_cmd->add_option("--k", gen.k, "Height of a tower, number of garden pentagons")
      ->capture_default_str();
  generate_cmd->add_option("--seed", gen.seed, "Seed for perturbed towers")->capture_default_str();
  generate_cmd->add_option("--ops", gen.ops, "Perturbation steps")->capture_default_str();
  generate_cmd->add_option("--out", gen_out, "Output file (default: stdout)");

  // shared counting flags
  count_options counting;
  bool as_json = false;
  auto counting_flags = [&](CLI::App* cmd) {
    cmd->add_option("--budget", counting.budget, "Maximum search nodes")->capture_default_str();
    cmd->add_option("--threads", counting.threads, "Worker threads for counting")
        ->capture_default_str()
        ->check(CLI::Range(1u, 1024u));
    cmd->add_flag("--json", as_json, "Print JSON reports");
  };

  std::vector<std::string> files;
  auto* count_cmd = app.add_subcommand("count", "Count proper 3-colourings exactly");
  count_cmd->add_option("files", files, "Graph files")->required()->check(CLI::ExistingFile);
  counting_flags(count_cmd);

  std::size_t k = 213;
  std::string file;
  auto* analyze_cmd = app.add_subcommand("analyze", "Reducible vertex or laminar 5-cycle family");
  analyze_cmd->add_option("file", file, "Graph file")->required()->check(CLI::ExistingFile);
  analyze_cmd->add_option("--k", k, "Degree threshold")->capture_default_str();
  analyze_cmd->add_flag("--json", as_json, "Print JSON reports");

  std::string outer_names, inner_names;
  auto* transition_cmd = app.add_subcommand(
      "transition", "Transition matrix between two nested pentagons, or along the extracted chain");
  transition_cmd->add_option("file", file, "Graph file")->required()->check(CLI::ExistingFile);
  auto* outer_opt = transition_cmd->add_option("--outer", outer_names, "Outer pentagon, comma-separated");
  auto* inner_opt = transition_cmd->add_option("--inner", inner_names, "Inner pentagon, comma-separated");
  outer_opt->needs(inner_opt);
  inner_opt->needs(outer_opt);
  transition_cmd->add_option("--k", k, "Degree threshold for chain extraction")->capture_default_str();
  counting_flags(transition_cmd);

  std::size_t lemma_n = 12, lemma_trials = 100;
  std::uint64_t lemma_seed = 0;
  auto* lemma_cmd = app.add_subcommand("matrix-lemma", "Random dominant/doubling chains against the product bound");
  lemma_cmd->add_option("--n", lemma_n, "Chain length")->capture_default_str();
  lemma_cmd->add_option("--seed", lemma_seed, "Random seed")->capture_default_str();
  lemma_cmd->add_option("--trials", lemma_trials, "Number of chains")->capture_default_str();
  lemma_cmd->add_flag("--json", as_json, "Print JSON reports");

  auto* verify_cmd = app.add_subcommand("verify-bounds", "Check every lower bound on each graph");
  verify_cmd->add_option("files", files, "Graph files")->required()->check(CLI::ExistingFile);
  verify_cmd->add_option("--k", k, "Degree threshold")->capture_default_str();
  counting_flags(verify_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? success : input_error;
  }

  try {
    if (*generate_cmd) {
      const plane_graph g = generate(gen);
      json doc = graph_to_json(g);
      json meta;
      meta["family"] = gen.family;
      meta["k"] = gen.k;
      meta["seed"] = gen.seed;
      meta["ops"] = gen.ops;
      doc["generator"] = std::move(meta);
      if (gen_out.empty()) {
        detail::emit(out, doc);
      } else {
        std::ofstream f(gen_out);
        if (!f) throw graph_error("io", "cannot write " + gen_out, {gen_out});
        f << doc.dump(2) << "\n";
        json summary;
        summary["out"] = gen_out;
        summary["n"] = g.vertex_count();
        summary["generator"] = doc["generator"];
        detail::emit(out, summary, true);
      }
      return success;
    }

    if (*count_cmd) {
      json all = json::array();
      for (const auto& path : files) {
        const plane_graph g = load_graph(path);
        const count_result r = count_3_colorings(g, counting);
        if (as_json)
          all.push_back(count_to_json(path, r));
        else
          out << path << ": " << r.count << " colourings (" << r.nodes << " nodes)\n";
      }
      if (as_json) detail::emit(out, all.size() == 1 ? all[0] : all);
      return success;
    }

    if (*analyze_cmd) {
      const plane_graph g = load_graph(file);
      const laminar_outcome res = extract(g, k);
      if (as_json) {
        detail::emit(out, outcome_to_json(g, res));
      } else if (res.reducible()) {
        out << "reducible vertex " << g.name(res.vertex()) << " (k = " << k << ")\n";
      } else {
        const auto& fam = res.covering().family.cycles;
        const chain_antichain dec = dilworth_decompose(g, fam);
        out << "laminar family of " << fam.size() << " pentagons (k = " << k << ")\n";
        for (const auto& c : fam) out << "  " << detail::names_text(g, c) << "\n";
        out << "chain " << dec.chain.size() << ", antichain " << dec.antichain.size() << "\n";
      }
      return success;
    }

    if (*transition_cmd) {
      const plane_graph g = load_graph(file);
      if (!outer_names.empty()) {
        const transition_matrix m = compute_transition(g, detail::cycle_from_names(g, outer_names),
                                                       detail::cycle_from_names(g, inner_names), counting);
        if (as_json)
          detail::emit(out, transition_to_json(g, m));
        else
          detail::print_matrix(out, g, m);
        return success;
      }
      const laminar_outcome res = extract(g, k);
      if (res.reducible())
        throw graph_error("no_chain", "graph has a reducible vertex " + g.name(res.vertex()) +
                                          "; pass --outer and --inner");
      const chain_antichain dec = dilworth_decompose(g, res.covering().family.cycles);
      const auto& chain = dec.chain.cycles;
      if (chain.size() < 2) throw graph_error("no_chain", "the extracted chain has fewer than 2 pentagons");
      std::vector<transition_matrix> layers;
      for (std::size_t i = 0; i + 1 < chain.size(); ++i)
        layers.push_back(compute_transition(g, chain[i], chain[i + 1], counting));
      const transition_matrix total = compose(layers);
      if (as_json) {
        json doc;
        doc["chain"] = cycles_to_json(g, chain);
        json ls = json::array();
        for (const auto& l : layers) ls.push_back(transition_to_json(g, l));
        doc["layers"] = std::move(ls);
        doc["composed"] = transition_to_json(g, total);
        detail::emit(out, doc);
      } else {
        for (std::size_t i = 0; i < layers.size(); ++i) {
          out << "layer " << i + 1 << "\n";
          detail::print_matrix(out, g, layers[i]);
        }
        out << "composed\n";
        detail::print_matrix(out, g, total);
      }
      return success;
    }

    if (*lemma_cmd) {
      const matrix_lemma_report r = run_matrix_lemma(lemma_n, lemma_seed, lemma_trials);
      if (as_json) {
        json doc;
        doc["n"] = r.n;
        doc["seed"] = r.seed;
        doc["trials"] = r.trials;
        doc["dominant_steps"] = r.dominant_steps;
        doc["doubling_steps"] = r.doubling_steps;
        doc["violations"] = r.violations;
        doc["first_failing_trial"] = r.first_failing_trial ? json(*r.first_failing_trial) : json(nullptr);
        doc["result"] = r.pass() ? "PASS" : "FAIL";
        detail::emit(out, doc);
      } else {
        out << (r.pass() ? "PASS" : "FAIL") << ": " << r.trials << " chains of length " << r.n
            << " (seed " << r.seed << "), " << r.violations << " violations\n";
        if (!r.pass()) out << "first failure in trial " << *r.first_failing_trial << ": " << r.first_reason << "\n";
      }
      return r.pass() ? success : bound_failure;
    }

    if (*verify_cmd) {
      json reports = json::array();
      bool all_pass = true;
      for (const auto& path : files) {
        const plane_graph g = load_graph(path);
        const bound_report r = verify(g, bound_options{k, counting}, path);
        all_pass = all_pass && r.all_pass();
        if (as_json) {
          reports.push_back(report_to_json(g, r));
        } else {
          out << (r.all_pass() ? "PASS " : "FAIL ") << path << ": n = " << r.n << ", count = " << r.exact_count;
          if (r.reducible) out << ", reducible vertex " << g.name(*r.reducible);
          if (r.chain) out << ", chain " << r.chain->cycles.size();
          if (r.antichain) out << ", antichain " << r.antichain->cycles.size();
          out << "\n";
        }
      }
      if (as_json) {
        json doc;
        doc["reports"] = std::move(reports);
        doc["all_pass"] = all_pass;
        detail::emit(out, doc);
      }
      return all_pass ? success : bound_failure;
    }
  } catch (const graph_error& e) {
    err << "error: " << e.what() << "\n";
    detail::emit(out, error_to_json(e), true);
    return input_error;
  } catch (const budget_exceeded& e) {
    err << "error: " << e.what() << "\n";
    json doc;
    doc["error"] = "budget_exceeded";
    doc["message"] = e.what();
    doc["budget"] = e.budget();
    detail::emit(out, doc, true);
    return budget_exhausted;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    json doc;
    doc["error"] = "invalid_argument";
    doc["message"] = e.what();
    detail::emit(out, doc, true);
    return input_error;
  } catch (const std::logic_error& e) {
    err << "internal check failed: " << e.what() << "\n";
    json doc;
    doc["error"] = "check_failed";
    doc["message"] = e.what();
    detail::emit(out, doc, true);
    return bound_failure;
  }
  return success;
}

}  // namespace threecol::cli
