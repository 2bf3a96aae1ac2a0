// plumbhf: command-line front end.
//
// Exit codes: 0 success, 1 oracle mismatch, 2 invalid input,
// 3 not negative definite, 4 not almost rational, 5 unstabilized cutoff.

#include <chrono>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "plumbhf/io.hpp"
#include "plumbhf/seifert.hpp"

using namespace plumbhf;

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitNotDefinite = 3;
constexpr int kExitNotAlmostRational = 4;
constexpr int kExitUnstabilized = 5;

struct Loaded {
  GraphDocument doc;
  std::string digest;
};

Loaded load_graph(const std::string& path) {
  const std::string text = read_file(path);
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw StructuralError("'" + path + "' is not valid JSON: " + e.what());
  }
  return {graph_document_from_json(doc), digest(text)};
}

std::string manifold_name(const PlumbingGraph& graph) {
  if (const auto a = recognize_brieskorn(graph)) {
    return "Sigma(" + std::to_string((*a)[0]) + "," + std::to_string((*a)[1]) + "," + std::to_string((*a)[2]) + ")";
  }
  return "plumbed manifold";
}

std::string arm_lists(const PlumbingGraph& graph, std::size_t center) {
  const auto shape = star_shape(graph, center);
  std::string out;
  for (const auto& arm : shape->arms) {
    out += out.empty() ? "[" : " [";
    for (std::size_t i = 0; i < arm.size(); ++i) out += (i ? "," : "") + std::to_string(graph.weight(arm[i]));
    out += "]";
  }
  return out;
}

// Everything downstream of a graph: AR center, tau-sequence, root, basis.
struct Pipeline {
  std::int64_t center;
  TauSequence tau;
  GradedRoot root;
};

Pipeline run_pipeline(const GraphDocument& doc, std::optional<std::size_t> cutoff) {
  if (!is_negative_definite(doc.graph)) throw NotNegativeDefiniteError("plumbing form is not negative definite");
  std::int64_t center;
  if (doc.center) {
    center = *doc.center;
  } else {
    const auto found = is_almost_rational(doc.graph);
    if (!found) throw NotAlmostRationalError("no almost-rational vertex found within the search bound");
    center = *found;
  }
  const std::size_t n = cutoff.value_or(default_cutoff(doc.graph, center));
  auto tau = tau_sequence(doc.graph, center, n);
  auto root = graded_root(tau, doc.graph);
  return {center, std::move(tau), std::move(root)};
}

std::string leaves_line(const GradedRoot& root) {
  std::map<Rational, std::size_t, std::greater<>> counts;
  for (const auto& g : root.leaf_gradings()) ++counts[g];
  std::string out = "leaves: ";
  bool first = true;
  for (const auto& [g, c] : counts) {
    out += (first ? "" : ", ") + std::to_string(c) + " @ grading " + to_string(g);
    first = false;
  }
  return out + "; d = " + to_string(d_invariant(root));
}

json report(const std::string& command, const std::string& inputs_digest, json results, json citations,
            std::optional<double> millis) {
  json out;
  out["command"] = command;
  out["inputs_digest"] = inputs_digest;
  out["results"] = std::move(results);
  out["citations"] = std::move(citations);
  if (millis) out["timing_ms"] = static_cast<std::int64_t>(*millis);
  return out;
}

std::optional<TauSet> parse_tau_set(const std::string& text) {
  if (text == "unknown") return std::nullopt;
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw StructuralError("tau set must be 'a,b' or 'unknown'");
  return TauSet{parse_rational(text.substr(0, comma)), parse_rational(text.substr(comma + 1))};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Heegaard Floer invariants of negative-definite plumbed 3-manifolds"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  bool timing = false;
  app.add_flag("--json", as_json, "Print a JSON run report");
  app.add_flag("--timing", timing, "Include wall-clock timing in JSON reports");

  std::string command_echo;
  for (int i = 1; i < argc; ++i) command_echo += (i > 1 ? " " : "") + std::string(argv[i]);

  auto* brieskorn = app.add_subcommand("brieskorn", "Write the star-shaped plumbing graph of Sigma(a1,a2,a3)");
  std::int64_t a1 = 0, a2 = 0, a3 = 0;
  std::string out_path;
  brieskorn->add_option("a1", a1)->required();
  brieskorn->add_option("a2", a2)->required();
  brieskorn->add_option("a3", a3)->required();
  brieskorn->add_option("-o,--out", out_path, "Output graph JSON (default: stdout)");

  auto* root_cmd = app.add_subcommand("root", "Graded root, leaves and d-invariant of an almost-rational graph");
  auto* d_cmd = app.add_subcommand("d", "d-invariant of an almost-rational graph");
  std::string graph_path;
  std::optional<std::size_t> cutoff;
  std::string dot_path;
  bool oracle = false;
  bool only_d = false;
  std::optional<std::int64_t> box;
  for (auto* sub : {root_cmd, d_cmd}) {
    sub->add_option("graph", graph_path, "Graph JSON")->required()->check(CLI::ExistingFile);
    sub->add_option("-N,--cutoff", cutoff, "tau-sequence cutoff (default: derived from the graph)");
  }
  root_cmd->add_option("--dot", dot_path, "Write the graded root as DOT");
  root_cmd->add_flag("--oracle", oracle, "Cross-check against lattice-point enumeration");
  root_cmd->add_option("--box", box, "Oracle box radius (default: floor of the canonical cycle)");
  root_cmd->add_flag("--d", only_d, "Print only the d-invariant");

  auto* tau_cmd = app.add_subcommand("tau", "tau-invariants from a Legendrian surgery presentation");
  std::string presentation_path;
  tau_cmd->add_option("presentation", presentation_path, "Presentation JSON")->required()->check(CLI::ExistingFile);

  auto* obstruct = app.add_subcommand("obstruct", "Cobordism-class obstruction to symplectic structures");
  std::string tau_text = "unknown";
  std::int64_t g4 = 0;
  obstruct->add_option("graph", graph_path, "Graph JSON")->required()->check(CLI::ExistingFile);
  obstruct->add_option("--tau-set", tau_text, "Tau values 'a,b' or 'unknown'");
  obstruct->add_option("--g4", g4, "Slice genus bound of the knot in the Mazur manifold");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  }

  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&]() -> std::optional<double> {
    if (!timing) return std::nullopt;
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  };

  try {
    if (*brieskorn) {
      const PlumbingGraph graph = brieskorn_graph(a1, a2, a3);
      const std::string text = to_json(GraphDocument{graph, 0}).dump(2) + "\n";
      if (out_path.empty()) {
        std::cout << text;
      } else {
        write_file(out_path, text);
      }
      (out_path.empty() ? std::cerr : std::cout)
          << "central " << graph.weight(0) << ", arms " << arm_lists(graph, 0) << "\n";
      return 0;
    }

    if (*root_cmd || *d_cmd) {
      const Loaded loaded = load_graph(graph_path);
      const Pipeline p = run_pipeline(loaded.doc, cutoff);
      const Rational d = d_invariant(p.root);
      std::optional<bool> match;
      json oracle_json;
      if (*root_cmd && oracle) {
        const std::int64_t radius = box.value_or(suggested_box_radius(loaded.doc.graph));
        const GradedRoot reference =
            oracle_graded_root(loaded.doc.graph, radius, std::nullopt, max_lattice_points_from_env());
        match = reference.isomorphic_to(p.root);
        oracle_json = {{"box_radius", radius}, {"match", *match}, {"root", to_json(reference)}};
      }
      if (*root_cmd && !dot_path.empty()) write_file(dot_path, to_dot(p.root));

      if (as_json) {
        json results = {{"manifold", manifold_name(loaded.doc.graph)},
                        {"center", p.center},
                        {"cutoff", p.tau.cutoff()},
                        {"stabilization_index", p.tau.stabilization_index},
                        {"window", p.tau.window},
                        {"heuristic_window", p.tau.heuristic_window},
                        {"root", to_json(p.root)},
                        {"basis", to_json(canonical_basis(p.root, loaded.doc.graph, p.center))}};
        if (match) results["oracle"] = oracle_json;
        std::cout << report(command_echo, loaded.digest, results, json::array(), elapsed()).dump(2) << "\n";
      } else if (*d_cmd || only_d) {
        std::cout << "d = " << to_string(d) << "\n";
      } else {
        std::cout << manifold_name(loaded.doc.graph) << ": center " << p.center << ", tau cutoff "
                  << p.tau.cutoff() << ", stable from " << p.tau.stabilization_index << " (window "
                  << p.tau.window << (p.tau.heuristic_window ? ", heuristic" : ", certified") << ")\n";
        std::cout << leaves_line(p.root) << "\n";
        if (match) std::cout << "oracle: " << (*match ? "MATCH" : "MISMATCH") << "\n";
      }
      return match.value_or(true) ? 0 : kExitMismatch;
    }

    if (*tau_cmd) {
      const std::string text = read_file(presentation_path);
      json doc;
      try {
        doc = json::parse(text);
      } catch (const json::exception& e) {
        throw StructuralError("'" + presentation_path + "' is not valid JSON: " + e.what());
      }
      const TauPair pair = tau_pair(presentation_from_json(doc));
      if (as_json) {
        std::cout << report(command_echo, digest(text), to_json(pair), json::array(), elapsed()).dump(2) << "\n";
      } else {
        const auto [lo, hi] = pair.as_set();
        std::cout << "L^T Lambda^-1 L = " << to_string(pair.self_pairing) << "\n";
        std::cout << "L^T Lambda^-1 V = " << to_string(pair.rotation_pairing) << "\n";
        std::cout << "tau+ = " << to_string(pair.tau_plus) << ", tau- = " << to_string(pair.tau_minus) << "\n";
        std::cout << "set {" << to_string(lo) << ", " << to_string(hi) << "}"
                  << (pair.integral() ? "" : " (non-integral)") << "\n";
      }
      return 0;
    }

    if (*obstruct) {
      const Loaded loaded = load_graph(graph_path);
      const auto tau_set = parse_tau_set(tau_text);
      const Pipeline p = run_pipeline(loaded.doc, std::nullopt);
      const ObstructionContext ctx(canonical_basis(p.root, loaded.doc.graph, p.center));
      const ObstructionRun run = run_obstruction(ctx, manifold_name(loaded.doc.graph), tau_set, g4);
      if (as_json) {
        std::cout << report(command_echo, loaded.digest, to_json(run, ctx), run.citations, elapsed()).dump(2) << "\n";
      } else {
        std::cout << run.manifold << "\n";
        for (const auto& line : run.transcript) std::cout << "  " << line << "\n";
        std::cout << "verdict: " << to_string(run.verdict) << "\n";
        for (const auto& c : run.citations) std::cout << "  cite: " << c << "\n";
      }
      return 0;
    }
  } catch (const NotNegativeDefiniteError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNotDefinite;
  } catch (const NotAlmostRationalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNotAlmostRational;
  } catch (const UnstabilizedError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUnstabilized;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return 0;
}
