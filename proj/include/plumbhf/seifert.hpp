#pragma once

// Brieskorn spheres as star-shaped plumbings.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "plumbhf/lattice.hpp"

namespace plumbhf {

struct SeifertLeg {
  std::int64_t a;  // multiplicity, > 1
  std::int64_t b;  // 0 < b < a
  bool operator==(const SeifertLeg&) const = default;
};

/// Normalized Seifert invariants of an integral homology sphere:
/// e0 * A + sum b_i * A / a_i = -1 with A = prod a_i.
struct SeifertData {
  std::int64_t e0;
  std::vector<SeifertLeg> legs;
  bool operator==(const SeifertData&) const = default;
};

/// Negative continued fraction x_1 - 1/(x_2 - 1/(...)).
struct ContinuedFraction {
  std::vector<std::int64_t> entries;

  Rational value() const;
  bool operator==(const ContinuedFraction&) const = default;
};

Rational evaluate_neg_cont_frac(std::span<const std::int64_t> entries);

SeifertData normalized_seifert(std::int64_t a1, std::int64_t a2, std::int64_t a3);

/// Expansion of p/q (gcd 1, 0 < q < p, or q = 1) with every entry >= 2.
ContinuedFraction neg_cont_frac(std::int64_t p, std::int64_t q);

/// Star-shaped graph with the central vertex id 0 and the arms numbered
/// outward in leg order.
PlumbingGraph seifert_graph(const SeifertData& data);

PlumbingGraph brieskorn_graph(std::int64_t a1, std::int64_t a2, std::int64_t a3);

/// Arms of a star-shaped graph, each listed from the center outward.
struct StarShape {
  std::size_t center;
  std::vector<std::vector<std::size_t>> arms;
};

/// The arms about `center` (an index), or nothing if some branch at the
/// center is not a chain.
std::optional<StarShape> star_shape(const PlumbingGraph& graph, std::size_t center);

/// Leg (a, b) read off an arm: a/b is the continued fraction of the negated
/// arm weights.
SeifertLeg arm_leg(const PlumbingGraph& graph, std::span<const std::size_t> arm);

/// e0 + sum b_i / a_i for the graph made star-shaped about vertex `center_id`.
Rational euler_number(const PlumbingGraph& graph, std::int64_t center_id);

/// (a1, a2, a3), ascending, when the graph is the normalized star of a
/// Brieskorn homology sphere.
std::optional<std::array<std::int64_t, 3>> recognize_brieskorn(const PlumbingGraph& graph);

}  // namespace plumbhf
