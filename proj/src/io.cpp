#include "plumbhf/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace plumbhf {

namespace {

std::int64_t get_int(const json& value, const char* what) {
  if (!value.is_number_integer()) throw StructuralError(std::string(what) + " must be an integer");
  return value.get<std::int64_t>();
}

std::vector<std::int64_t> get_int_list(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_array()) throw StructuralError(std::string("missing array '") + key + "'");
  std::vector<std::int64_t> out;
  for (const auto& v : doc[key]) out.push_back(get_int(v, key));
  return out;
}

Rational get_rational(const json& value) {
  if (value.is_number_integer()) return Rational(value.get<std::int64_t>());
  if (value.is_string()) return parse_rational(value.get<std::string>());
  throw StructuralError("matrix entries must be integers or \"p/q\" strings");
}

template <typename Scalar, typename Read>
Matrix<Scalar> get_matrix(const json& rows, Read read) {
  if (!rows.is_array()) throw StructuralError("matrix must be an array of rows");
  const auto n = static_cast<Eigen::Index>(rows.size());
  Matrix<Scalar> m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) throw StructuralError("matrix must be square");
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = read(row[static_cast<std::size_t>(j)]);
  }
  return m;
}

json rational_json(const Rational& r) { return to_string(r); }

}  // namespace

GraphDocument graph_document_from_json(const json& doc) {
  if (!doc.is_object()) throw StructuralError("graph document must be a JSON object");
  if (!doc.contains("format_version") || get_int(doc["format_version"], "format_version") != kGraphFormatVersion) {
    throw StructuralError("graph document must have format_version 1");
  }
  if (!doc.contains("vertices") || !doc["vertices"].is_array()) throw StructuralError("missing array 'vertices'");
  if (!doc.contains("edges") || !doc["edges"].is_array()) throw StructuralError("missing array 'edges'");
  std::vector<Vertex> vertices;
  for (const auto& v : doc["vertices"]) {
    if (!v.is_object() || !v.contains("id") || !v.contains("weight")) {
      throw StructuralError("each vertex needs 'id' and 'weight'");
    }
    vertices.push_back({get_int(v["id"], "vertex id"), get_int(v["weight"], "vertex weight")});
  }
  std::vector<PlumbingGraph::Edge> edges;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2) throw StructuralError("each edge must be a pair of ids");
    edges.emplace_back(get_int(e[0], "edge endpoint"), get_int(e[1], "edge endpoint"));
  }
  GraphDocument out{PlumbingGraph(std::move(vertices), std::move(edges)), std::nullopt};
  if (doc.contains("center") && !doc["center"].is_null()) {
    out.center = get_int(doc["center"], "center");
    out.graph.index_of(*out.center);
  }
  return out;
}

json to_json(const GraphDocument& doc) {
  json out;
  out["format_version"] = kGraphFormatVersion;
  out["vertices"] = json::array();
  for (const auto& v : doc.graph.vertices()) out["vertices"].push_back({{"id", v.id}, {"weight", v.weight}});
  out["edges"] = json::array();
  for (const auto& [a, b] : doc.graph.edge_ids()) out["edges"].push_back({a, b});
  if (doc.center) out["center"] = *doc.center;
  return out;
}

SurgeryPresentation presentation_from_json(const json& doc) {
  if (!doc.is_object()) throw StructuralError("presentation must be a JSON object");
  const bool has_lambda = doc.contains("lambda");
  const bool has_inverse = doc.contains("lambda_inverse");
  if (has_lambda == has_inverse) throw StructuralError("give exactly one of 'lambda' and 'lambda_inverse'");
  auto tb = get_int_list(doc, "tb");
  auto rot = get_int_list(doc, "rot");
  auto linking = get_int_list(doc, "linking");
  if (!doc.contains("knot_tb")) throw StructuralError("missing 'knot_tb'");
  const std::int64_t knot_tb = get_int(doc["knot_tb"], "knot_tb");
  if (has_lambda) {
    auto lambda = get_matrix<BigInt>(doc["lambda"], [](const json& v) { return BigInt(get_int(v, "lambda entry")); });
    return SurgeryPresentation::from_lambda(std::move(lambda), std::move(tb), std::move(rot), std::move(linking), knot_tb);
  }
  const auto inverse = get_matrix<Rational>(doc["lambda_inverse"], get_rational);
  return SurgeryPresentation::from_lambda_inverse(inverse, std::move(tb), std::move(rot), std::move(linking), knot_tb);
}

json to_json(const SurgeryPresentation& presentation) {
  json out;
  json rows = json::array();
  if (presentation.given_as_inverse()) {
    const auto& m = presentation.lambda_inverse();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      json row = json::array();
      for (Eigen::Index j = 0; j < m.cols(); ++j) {
        if (is_integer(m(i, j))) {
          row.push_back(boost::multiprecision::numerator(m(i, j)).convert_to<std::int64_t>());
        } else {
          row.push_back(to_string(m(i, j)));
        }
      }
      rows.push_back(row);
    }
    out["lambda_inverse"] = rows;
  } else {
    const auto& m = presentation.lambda();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      json row = json::array();
      for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).convert_to<std::int64_t>());
      rows.push_back(row);
    }
    out["lambda"] = rows;
  }
  out["tb"] = presentation.tb();
  out["rot"] = presentation.rot();
  out["linking"] = presentation.linking();
  out["knot_tb"] = presentation.knot_tb();
  return out;
}

json to_json(const GradedRoot& root) {
  auto gradings = root.leaf_gradings();
  std::sort(gradings.begin(), gradings.end());
  json leaves = json::array();
  for (const auto& g : gradings) leaves.push_back(rational_json(g));
  json out;
  out["d"] = rational_json(d_invariant(root));
  out["leaf_count"] = gradings.size();
  out["leaves"] = leaves;
  out["shift"] = rational_json(root.shift());
  out["structure"] = root.canonical_form();
  out["vertex_count"] = root.vertex_count();
  return out;
}

json to_json(const CanonicalBasis& basis) {
  json elements = json::array();
  for (std::size_t p = 0; p < basis.size(); ++p) {
    const auto& e = basis.elements[p];
    elements.push_back({{"label", "V" + std::to_string(e.label)},
                        {"grading", rational_json(e.grading)},
                        {"tau_range", {e.plateau.first, e.plateau.second}},
                        {"j_image", "V" + std::to_string(basis.elements[basis.j_action[p]].label)}});
  }
  return {{"elements", elements}, {"self_conjugate", basis.self_conjugate}};
}

json to_json(const TauPair& pair) {
  const auto [lo, hi] = pair.as_set();
  return {{"tau_plus", rational_json(pair.tau_plus)},
          {"tau_minus", rational_json(pair.tau_minus)},
          {"as_set", {rational_json(lo), rational_json(hi)}},
          {"self_pairing", rational_json(pair.self_pairing)},
          {"rotation_pairing", rational_json(pair.rotation_pairing)},
          {"integral", pair.integral()}};
}

json to_json(const ObstructionRun& run, const ObstructionContext& ctx) {
  auto classes = [&](const std::vector<F2Class>& list) {
    json out = json::array();
    for (const auto& c : list) out.push_back(ctx.label(c));
    return out;
  };
  json out;
  out["manifold"] = run.manifold;
  out["basis_size"] = run.basis_size;
  out["candidates"] = classes(run.candidates);
  out["filtered"] = classes(run.filtered);
  out["verdict"] = to_string(run.verdict);
  if (run.exotic) out["exotic_pair"] = to_string(*run.exotic);
  out["citations"] = run.citations;
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << contents;
}

std::string digest(const std::string& bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  char text[17];
  std::snprintf(text, sizeof text, "%016llx", static_cast<unsigned long long>(hash));
  return text;
}

}  // namespace plumbhf
