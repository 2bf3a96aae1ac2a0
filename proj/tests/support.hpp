#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "plumbhf/io.hpp"
#include "plumbhf/seifert.hpp"

namespace testing {

using namespace plumbhf;

inline std::string data_path(const std::string& name) { return std::string(PLUMBHF_DATA_DIR) + "/" + name; }

inline GraphDocument load_graph(const std::string& name) {
  return graph_document_from_json(json::parse(read_file(data_path(name))));
}

inline SurgeryPresentation load_presentation(const std::string& name) {
  return presentation_from_json(json::parse(read_file(data_path(name))));
}

inline const std::vector<std::string>& brieskorn_fixtures() {
  static const std::vector<std::string> names{"sigma_2_3_13.json", "sigma_2_5_7.json", "sigma_3_4_5.json"};
  return names;
}

inline std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

// Three arms of length 1 or 2 around vertex 0, weights drawn from [lo, hi].
inline PlumbingGraph random_star(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi, std::int64_t max_arm = 2) {
  std::vector<Vertex> vertices{{0, uniform(rng, lo, hi)}};
  std::vector<PlumbingGraph::Edge> edges;
  std::int64_t next = 1;
  for (int arm = 0; arm < 3; ++arm) {
    std::int64_t prev = 0;
    const std::int64_t length = uniform(rng, 1, max_arm);
    for (std::int64_t k = 0; k < length; ++k) {
      vertices.push_back({next, uniform(rng, lo, hi)});
      edges.emplace_back(prev, next);
      prev = next++;
    }
  }
  return PlumbingGraph(std::move(vertices), std::move(edges));
}

// Random labelled tree on n vertices (each vertex attaches to an earlier one).
inline PlumbingGraph random_tree(std::mt19937_64& rng, std::size_t n, std::int64_t lo, std::int64_t hi) {
  std::vector<Vertex> vertices;
  std::vector<PlumbingGraph::Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    vertices.push_back({static_cast<std::int64_t>(i), uniform(rng, lo, hi)});
    if (i > 0) edges.emplace_back(uniform(rng, 0, static_cast<std::int64_t>(i) - 1), static_cast<std::int64_t>(i));
  }
  return PlumbingGraph(std::move(vertices), std::move(edges));
}

// Determinant by cofactor expansion; only for the small matrices in tests.
inline BigInt laplace_det(const IntMatrix& m) {
  const auto n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  BigInt acc = 0;
  for (Eigen::Index c = 0; c < n; ++c) {
    if (m(0, c) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (Eigen::Index i = 1; i < n; ++i) {
      for (Eigen::Index j = 0, k = 0; j < n; ++j) {
        if (j != c) minor(i - 1, k++) = m(i, j);
      }
    }
    const BigInt term = m(0, c) * laplace_det(minor);
    acc += (c % 2 == 0) ? term : BigInt(-term);
  }
  return acc;
}

// Sylvester: negative definite iff (-1)^k times the k-th leading minor is positive for all k.
inline bool sylvester_negative_definite(const IntMatrix& m) {
  for (Eigen::Index k = 1; k <= m.rows(); ++k) {
    const BigInt minor = laplace_det(m.topLeftCorner(k, k));
    if ((k % 2 == 1 ? BigInt(-minor) : minor) <= 0) return false;
  }
  return true;
}

// chi(x) = -(x.x + K.x)/2 straight from the BigInt form.
inline BigInt chi_oracle(const IntMatrix& form, const std::vector<std::int64_t>& x) {
  const IntVector v = to_vector<BigInt>(x);
  BigInt kx = 0;
  for (Eigen::Index i = 0; i < form.rows(); ++i) kx += (-form(i, i) - 2) * v(i);
  const BigInt xx = v.dot(form * v);
  return -(xx + kx) / 2;
}

}  // namespace testing
