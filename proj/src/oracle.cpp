#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <unordered_map>

#include "plumbhf/graded_root.hpp"

namespace plumbhf {

std::uint64_t max_lattice_points_from_env() {
  const char* text = std::getenv("PLUMBHF_MAX_LATTICE_POINTS");
  if (text == nullptr || *text == '\0') return kDefaultMaxLatticePoints;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(text, &end, 10);
  if (end == text || *end != '\0' || value == 0) {
    throw Error(std::string("PLUMBHF_MAX_LATTICE_POINTS is not a positive integer: ") + text);
  }
  return value;
}

std::int64_t suggested_box_radius(const PlumbingGraph& graph) {
  const RatVector zk = canonical_cycle(intersection_form(graph));
  BigInt radius = 0;
  for (const auto& z : zk) {
    const BigInt num = boost::multiprecision::numerator(z);
    const BigInt den = boost::multiprecision::denominator(z);
    BigInt floor = num / den;
    if (num < 0 && floor * den != num) floor -= 1;
    radius = std::max(radius, floor);
  }
  return radius.convert_to<std::int64_t>();
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0u); }

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Returns the surviving root.
  std::uint32_t unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return a;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    return a;
  }

 private:
  std::vector<std::uint32_t> parent_;
};

}  // namespace

GradedRoot oracle_graded_root(const PlumbingGraph& graph, std::int64_t box_radius,
                              std::optional<std::int64_t> level_range, std::uint64_t max_points) {
  if (!is_negative_definite(graph)) throw NotNegativeDefiniteError("plumbing form is not negative definite");
  if (box_radius < 0) throw Error("box radius must be non-negative");

  const std::size_t n = graph.size();
  const auto side = static_cast<std::uint64_t>(box_radius) + 1;
  std::uint64_t total = 1;
  for (std::size_t v = 0; v < n; ++v) {
    if (total > max_points / side) {
      throw Error("lattice box [0, " + std::to_string(box_radius) + "]^" + std::to_string(n) +
                  " exceeds the cap of " + std::to_string(max_points) + " points");
    }
    total *= side;
  }
  if (total > std::numeric_limits<std::uint32_t>::max()) throw Error("lattice box too large");

  const Form64 form = intersection_form<std::int64_t>(graph);
  std::vector<std::uint64_t> stride(n);
  for (std::size_t v = 0; v < n; ++v) stride[v] = v == 0 ? 1 : stride[v - 1] * side;

  // chi along each line in the first coordinate: chi(x + E_0) = chi(x) + 1 - <x, E_0>.
  std::vector<std::int64_t> chi(total);
  Cycle x(n, 0);
  for (std::uint64_t base = 0; base < total; base += side) {
    std::uint64_t rest = base / side;
    x[0] = 0;
    for (std::size_t v = 1; v < n; ++v) {
      x[v] = static_cast<std::int64_t>(rest % side);
      rest /= side;
    }
    std::int64_t value = riemann_roch(form, x);
    std::int64_t product = 0;
    for (std::size_t u = 1; u < n; ++u) product = checked_add(product, checked_mul(form(0, static_cast<Eigen::Index>(u)), x[u]));
    for (std::uint64_t t = 0; t < side; ++t) {
      chi[base + t] = value;
      value = checked_add(value, 1 - product);
      product = checked_add(product, form(0, 0));
    }
  }

  const auto [lo_it, hi_it] = std::minmax_element(chi.begin(), chi.end());
  const std::int64_t lowest = *lo_it;
  std::int64_t highest = *hi_it;
  if (level_range) highest = std::min(highest, checked_add(lowest, *level_range));

  // Bucket the points by level.
  const auto span = static_cast<std::size_t>(highest - lowest + 1);
  std::vector<std::uint32_t> offset(span + 1, 0);
  for (std::uint64_t p = 0; p < total; ++p) {
    if (chi[p] <= highest) ++offset[static_cast<std::size_t>(chi[p] - lowest) + 1];
  }
  for (std::size_t i = 0; i < span; ++i) offset[i + 1] += offset[i];
  std::vector<std::uint32_t> order(offset.back());
  {
    std::vector<std::uint32_t> fill(offset.begin(), offset.end() - 1);
    for (std::uint64_t p = 0; p < total; ++p) {
      if (chi[p] <= highest) order[fill[static_cast<std::size_t>(chi[p] - lowest)]++] = static_cast<std::uint32_t>(p);
    }
  }

  DisjointSets sets(total);
  std::vector<std::int64_t> node_of(total, -1);  // valid at roots
  std::vector<RootNode> nodes;
  std::unordered_map<std::uint32_t, std::vector<std::size_t>> pending;

  auto old_nodes = [&](std::uint32_t root) -> std::vector<std::size_t> {
    if (auto it = pending.find(root); it != pending.end()) return it->second;
    if (node_of[root] >= 0) return {static_cast<std::size_t>(node_of[root])};
    return {};
  };

  std::vector<std::int64_t> coords(n);
  for (std::size_t bucket = 0; bucket < span; ++bucket) {
    const std::int64_t level = lowest + static_cast<std::int64_t>(bucket);
    pending.clear();
    for (std::uint32_t i = offset[bucket]; i < offset[bucket + 1]; ++i) {
      const std::uint32_t p = order[i];
      std::uint64_t rest = p;
      for (std::size_t v = 0; v < n; ++v) {
        coords[v] = static_cast<std::int64_t>(rest % side);
        rest /= side;
      }
      for (std::size_t v = 0; v < n; ++v) {
        for (int dir : {-1, 1}) {
          const std::int64_t c = coords[v] + dir;
          if (c < 0 || c > box_radius) continue;
          const auto q = static_cast<std::uint32_t>(dir > 0 ? p + stride[v] : p - stride[v]);
          if (chi[q] > level) continue;
          const std::uint32_t ra = sets.find(p);
          const std::uint32_t rb = sets.find(q);
          if (ra == rb) continue;
          auto merged = old_nodes(ra);
          auto other = old_nodes(rb);
          merged.insert(merged.end(), other.begin(), other.end());
          pending.erase(ra);
          pending.erase(rb);
          pending[sets.unite(ra, rb)] = std::move(merged);
        }
      }
    }
    std::vector<std::uint32_t> roots;
    for (std::uint32_t i = offset[bucket]; i < offset[bucket + 1]; ++i) roots.push_back(sets.find(order[i]));
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    for (std::uint32_t r : roots) {
      auto below = old_nodes(r);
      if (below.size() == 1) {
        node_of[r] = static_cast<std::int64_t>(below[0]);
        continue;
      }
      std::sort(below.begin(), below.end());
      nodes.push_back({level, std::move(below), std::nullopt});
      node_of[r] = static_cast<std::int64_t>(nodes.size() - 1);
    }
  }

  std::vector<std::uint32_t> final_roots;
  for (std::uint32_t p : order) final_roots.push_back(sets.find(p));
  std::sort(final_roots.begin(), final_roots.end());
  final_roots.erase(std::unique(final_roots.begin(), final_roots.end()), final_roots.end());
  if (final_roots.size() != 1) {
    throw Error("sublevel set is still disconnected at the top of the level range");
  }
  return GradedRoot(std::move(nodes), static_cast<std::size_t>(node_of[final_roots[0]]), grading_shift(graph));
}

}  // namespace plumbhf
