#include "plumbhf/graded_root.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace plumbhf {

GradedRoot::GradedRoot(std::vector<RootNode> nodes, std::size_t top, Rational shift)
    : nodes_(std::move(nodes)), top_(top), shift_(std::move(shift)) {
  if (top_ >= nodes_.size()) throw StructuralError("graded root: top node out of range");
  for (const auto& node : nodes_) {
    for (std::size_t child : node.children) {
      if (child >= nodes_.size() || nodes_[child].level >= node.level) {
        throw StructuralError("graded root: children must sit strictly below their parent");
      }
    }
  }
}

std::vector<std::size_t> GradedRoot::leaves() const {
  std::vector<std::size_t> out;
  std::vector<std::size_t> stack{top_};
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    const auto& node = nodes_[v];
    if (node.is_leaf()) out.push_back(v);
    for (auto it = node.children.rbegin(); it != node.children.rend(); ++it) stack.push_back(*it);
  }
  return out;
}

std::vector<Rational> GradedRoot::leaf_gradings() const {
  std::vector<Rational> out;
  for (std::size_t v : leaves()) out.push_back(grading(nodes_[v].level));
  return out;
}

std::int64_t GradedRoot::min_level() const {
  std::int64_t level = nodes_[top_].level;
  for (std::size_t v : leaves()) level = std::min(level, nodes_[v].level);
  return level;
}

std::size_t GradedRoot::vertex_count() const {
  // Each non-top node owns the chain up to (excluding) its parent.
  std::size_t count = 1;
  std::vector<std::size_t> stack{top_};
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t c : nodes_[v].children) {
      count += static_cast<std::size_t>(nodes_[v].level - nodes_[c].level);
      stack.push_back(c);
    }
  }
  return count;
}

std::string GradedRoot::encode(std::size_t node) const {
  const auto& n = nodes_[node];
  std::vector<std::string> parts;
  for (std::size_t c : n.children) parts.push_back(encode(c));
  std::sort(parts.begin(), parts.end());
  std::string out = "(" + std::to_string(n.level);
  if (!parts.empty()) {
    out += ":";
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "," : "") + parts[i];
  }
  return out + ")";
}

std::string GradedRoot::canonical_form() const { return encode(top_); }

Rational grading_shift(const PlumbingGraph& graph) {
  const IntMatrix form = intersection_form(graph);
  return -(canonical_square(form) + Rational(static_cast<std::int64_t>(graph.size()))) / 4;
}

namespace {

// Merge tree of the path graph 0..n-1 carrying `values`. The interval
// [first, last] is one component at every level >= its maximum.
class PathMergeTree {
 public:
  explicit PathMergeTree(const std::vector<std::int64_t>& values) : values_(values) {}

  std::size_t build(std::size_t first, std::size_t last) {
    while (true) {
      const auto [lo, hi] = std::minmax_element(values_.begin() + first, values_.begin() + last + 1);
      if (*lo == *hi) {
        nodes_.push_back({*lo, {}, std::make_pair(first, last)});
        return nodes_.size() - 1;
      }
      const std::int64_t top = *hi;
      std::vector<std::pair<std::size_t, std::size_t>> pieces;
      std::size_t i = first;
      while (i <= last) {
        if (values_[i] == top) {
          ++i;
          continue;
        }
        std::size_t j = i;
        while (j + 1 <= last && values_[j + 1] != top) ++j;
        pieces.emplace_back(i, j);
        i = j + 1;
      }
      if (pieces.size() == 1) {
        first = pieces[0].first;
        last = pieces[0].second;
        continue;
      }
      std::vector<std::size_t> children;
      for (const auto& [a, b] : pieces) children.push_back(build(a, b));
      nodes_.push_back({top, std::move(children), std::nullopt});
      return nodes_.size() - 1;
    }
  }

  std::vector<RootNode> take() { return std::move(nodes_); }

 private:
  const std::vector<std::int64_t>& values_;
  std::vector<RootNode> nodes_;
};

}  // namespace

GradedRoot graded_root(const TauSequence& tau, const PlumbingGraph& graph) {
  if (!tau.stabilized) {
    throw UnstabilizedError("tau-sequence is not certified stable at cutoff " +
                            std::to_string(tau.cutoff()));
  }
  // Past the stabilization index the sequence only climbs.
  PathMergeTree tree(tau.values);
  const std::size_t top = tree.build(0, tau.stabilization_index);
  return GradedRoot(tree.take(), top, grading_shift(graph));
}

Rational d_invariant(const GradedRoot& root) { return root.grading(root.min_level()); }

CanonicalBasis canonical_basis(const GradedRoot& root, const PlumbingGraph& graph, std::int64_t center_id) {
  CanonicalBasis basis;
  const auto leaves = root.leaves();
  const auto count = static_cast<int>(leaves.size());
  for (int p = 0; p < count; ++p) {
    const auto& node = root.nodes()[leaves[static_cast<std::size_t>(p)]];
    if (!node.plateau) throw StructuralError("canonical basis needs a root built from a tau-sequence");
    int label;
    if (count % 2 == 1) {
      label = (count - 1) / 2 - p;
    } else {
      label = p < count / 2 ? count / 2 - p : count / 2 - 1 - p;
    }
    basis.elements.push_back({label, root.grading(node.level), *node.plateau});
  }

  basis.j_action.resize(leaves.size());
  for (std::size_t p = 0; p < leaves.size(); ++p) basis.j_action[p] = p;

  const RatVector zk = canonical_cycle(intersection_form(graph));
  basis.self_conjugate = std::all_of(zk.begin(), zk.end(), [](const Rational& r) { return is_integer(r); });
  if (!basis.self_conjugate) return basis;

  if (leaves.size() == 1) return basis;

  // k -> -k acts on cycles as x -> Z_K - x, i.e. i -> z0 - i along the
  // sequence. The symmetry only holds on [0, z0]; past z0 tau mirrors the
  // (increasing) negative range, so plateaus are compared after clipping.
  const auto z0_big = boost::multiprecision::numerator(zk(static_cast<Eigen::Index>(graph.index_of(center_id))));
  if (z0_big < 0 || z0_big > BigInt(std::numeric_limits<std::int64_t>::max())) {
    throw Error("canonical cycle has no usable symmetry index at the center");
  }
  const auto z0 = z0_big.convert_to<std::int64_t>();
  auto clipped = [&](std::pair<std::size_t, std::size_t> range) {
    return std::pair{static_cast<std::int64_t>(range.first), std::min(static_cast<std::int64_t>(range.second), z0)};
  };
  for (std::size_t p = 0; p < basis.elements.size(); ++p) {
    const auto [first, last] = clipped(basis.elements[p].plateau);
    bool found = false;
    for (std::size_t q = 0; q < basis.elements.size() && first <= last; ++q) {
      const auto [f, l] = clipped(basis.elements[q].plateau);
      if (f == z0 - last && l == z0 - first && basis.elements[q].grading == basis.elements[p].grading) {
        basis.j_action[p] = q;
        found = true;
        break;
      }
    }
    if (!found) throw Error("conjugation does not act on the tau-sequence by reflection");
  }
  return basis;
}

std::string to_dot(const GradedRoot& root, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n  rankdir=BT;\n  node [shape=circle, fontsize=10];\n";
  std::size_t next = 0;
  auto emit = [&](std::int64_t level) {
    const std::size_t id = next++;
    out << "  v" << id << " [label=\"" << to_string(root.grading(level)) << "\"];\n";
    return id;
  };
  // Walk top-down: each node gets the chain between it and its parent.
  struct Item {
    std::size_t node;
    std::size_t parent_vertex;
    std::int64_t parent_level;
  };
  const auto& nodes = root.nodes();
  const std::size_t top_vertex = emit(nodes[root.top()].level);
  const std::size_t stem = emit(nodes[root.top()].level + 1);
  out << "  v" << top_vertex << " -> v" << stem << ";\n";
  out << "  inf [label=\"...\", shape=plaintext];\n  v" << stem << " -> inf [style=dashed];\n";

  std::vector<Item> stack;
  for (std::size_t c : nodes[root.top()].children) stack.push_back({c, top_vertex, nodes[root.top()].level});
  while (!stack.empty()) {
    const Item item = stack.back();
    stack.pop_back();
    std::size_t above = item.parent_vertex;
    std::size_t vertex = above;
    for (std::int64_t level = item.parent_level - 1; level >= nodes[item.node].level; --level) {
      vertex = emit(level);
      out << "  v" << vertex << " -> v" << above << ";\n";
      above = vertex;
    }
    for (std::size_t c : nodes[item.node].children) stack.push_back({c, vertex, nodes[item.node].level});
  }
  out << "}\n";
  return out.str();
}

}  // namespace plumbhf
