#pragma once

// Graded roots: the merge tree of the sublevel sets of a weight function,
// either the tau-sequence of an almost-rational graph or chi on a box of the
// lattice itself (the brute-force oracle).
//
// A vertex of the full root at level n sits at Maslov grading
// 2n - (K^2 + |V|) / 4. Only leaves and merge points are stored; the chains
// between them, and the infinite stem above the top node, are implicit.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "plumbhf/laufer.hpp"

namespace plumbhf {

struct RootNode {
  std::int64_t level;
  std::vector<std::size_t> children;  // empty for a leaf
  // Index range of the flat local minimum in the tau-sequence (tau roots only).
  std::optional<std::pair<std::size_t, std::size_t>> plateau;

  bool is_leaf() const { return children.empty(); }
};

class GradedRoot {
 public:
  GradedRoot(std::vector<RootNode> nodes, std::size_t top, Rational shift);

  const std::vector<RootNode>& nodes() const { return nodes_; }
  std::size_t top() const { return top_; }
  /// Additive grading constant -(K^2 + |V|) / 4.
  const Rational& shift() const { return shift_; }
  Rational grading(std::int64_t level) const { return Rational(2 * level) + shift_; }

  /// Leaves in depth-first order, children visited in stored order. For a
  /// tau root this is left to right along the sequence.
  std::vector<std::size_t> leaves() const;
  std::vector<Rational> leaf_gradings() const;
  std::int64_t min_level() const;
  /// Number of vertices of the full root between the leaves and the top node.
  std::size_t vertex_count() const;

  /// Order-independent encoding of the merge structure with levels.
  std::string canonical_form() const;
  bool isomorphic_to(const GradedRoot& other) const {
    return shift_ == other.shift_ && canonical_form() == other.canonical_form();
  }

 private:
  std::string encode(std::size_t node) const;

  std::vector<RootNode> nodes_;
  std::size_t top_;
  Rational shift_;
};

/// -(K^2 + |V|) / 4 for the canonical class of the graph.
Rational grading_shift(const PlumbingGraph& graph);

GradedRoot graded_root(const TauSequence& tau, const PlumbingGraph& graph);

/// Grading of the bottom of the tower: the lowest leaf grading.
Rational d_invariant(const GradedRoot& root);

struct BasisElement {
  int label;  // i in [V_i]
  Rational grading;
  std::pair<std::size_t, std::size_t> plateau;
};

/// One element per leaf, ordered by the leftmost index of its minimum, so
/// the first element is the contact leaf.
struct CanonicalBasis {
  std::vector<BasisElement> elements;
  std::vector<std::size_t> j_action;  // permutation of element positions
  bool self_conjugate;                // false: the canonical class is not J-invariant and j_action is the identity

  std::size_t size() const { return elements.size(); }
};

CanonicalBasis canonical_basis(const GradedRoot& root, const PlumbingGraph& graph, std::int64_t center_id);

/// Default lattice-point cap, overridable with PLUMBHF_MAX_LATTICE_POINTS.
inline constexpr std::uint64_t kDefaultMaxLatticePoints = 10'000'000;
std::uint64_t max_lattice_points_from_env();

/// Smallest box radius containing the floor of the canonical cycle.
std::int64_t suggested_box_radius(const PlumbingGraph& graph);

/// Graded root of chi on the box [0, box_radius]^|V|, built by union-find
/// over the sublevel sets. With a level range, only levels up to
/// min + level_range are swept and the box must be connected by then.
GradedRoot oracle_graded_root(const PlumbingGraph& graph, std::int64_t box_radius,
                              std::optional<std::int64_t> level_range = std::nullopt,
                              std::uint64_t max_points = kDefaultMaxLatticePoints);

/// DOT drawing of the full root up to one step above the top node.
std::string to_dot(const GradedRoot& root, const std::string& name = "graded_root");

}  // namespace plumbhf
