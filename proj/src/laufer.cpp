#include "plumbhf/laufer.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "plumbhf/seifert.hpp"

namespace plumbhf {

namespace {

void require_negative_definite(const PlumbingGraph& graph) {
  if (!is_negative_definite(graph)) throw NotNegativeDefiniteError("plumbing form is not negative definite");
}

std::int64_t pair_with_basis(const Form64& form, const Cycle& x, std::size_t v) {
  std::int64_t acc = 0;
  for (std::size_t u = 0; u < x.size(); ++u) {
    if (x[u] != 0) {
      acc = checked_add(acc, checked_mul(form(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(u)), x[u]));
    }
  }
  return acc;
}

bool rational_after_decrease(const PlumbingGraph& graph, std::size_t index) {
  std::int64_t bound = static_cast<std::int64_t>(graph.size()) + 1;
  for (const auto& v : graph.vertices()) bound = checked_add(bound, v.weight < 0 ? -v.weight : v.weight);
  return fundamental_cycle(graph.with_weight(index, -bound)).rational;
}

}  // namespace

std::int64_t riemann_roch(const Form64& form, const Cycle& x) {
  std::int64_t quad = 0;
  std::int64_t linear = 0;
  for (std::size_t v = 0; v < x.size(); ++v) {
    if (x[v] == 0) continue;
    const auto e = form(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(v));
    quad = checked_add(quad, checked_mul(x[v], pair_with_basis(form, x, v)));
    linear = checked_add(linear, checked_mul(-e - 2, x[v]));
  }
  return -checked_add(quad, linear) / 2;
}

std::int64_t laufer_run(const Form64& form, Cycle& x, std::optional<std::size_t> fixed) {
  const std::size_t n = x.size();
  std::vector<std::int64_t> products(n);
  for (std::size_t v = 0; v < n; ++v) products[v] = pair_with_basis(form, x, v);

  std::vector<std::size_t> work;
  for (std::size_t v = 0; v < n; ++v) {
    if (v != fixed && products[v] > 0) work.push_back(v);
  }
  std::int64_t steps = 0;
  while (!work.empty()) {
    const std::size_t v = work.back();
    work.pop_back();
    if (products[v] <= 0) continue;
    x[v] = checked_add(x[v], 1);
    if (++steps > kLauferStepCap) throw Error("Laufer sequence exceeded the step cap");
    for (std::size_t u = 0; u < n; ++u) {
      const auto entry = form(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v));
      if (entry == 0) continue;
      products[u] = checked_add(products[u], entry);
      if (u != fixed && products[u] > 0) work.push_back(u);
    }
  }
  return steps;
}

FundamentalCycle fundamental_cycle(const PlumbingGraph& graph) {
  require_negative_definite(graph);
  const Form64 form = intersection_form<std::int64_t>(graph);
  Cycle z(graph.size(), 0);
  z[0] = 1;
  laufer_run(form, z, std::nullopt);
  const std::int64_t chi = riemann_roch(form, z);
  return {std::move(z), chi, chi == 1};
}

std::optional<std::int64_t> is_almost_rational(const PlumbingGraph& graph) {
  require_negative_definite(graph);
  std::vector<std::size_t> order(graph.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return graph.degree(a) > graph.degree(b); });
  for (std::size_t v : order) {
    if (rational_after_decrease(graph, v)) return graph.id(v);
  }
  return std::nullopt;
}

std::optional<std::size_t> period_window(const PlumbingGraph& graph, std::int64_t center_id) {
  const auto shape = star_shape(graph, graph.index_of(center_id));
  if (!shape) return std::nullopt;
  std::int64_t period = 1;
  for (const auto& arm : shape->arms) {
    for (std::size_t v : arm) {
      if (graph.weight(v) > -2) return std::nullopt;
    }
    const std::int64_t a = arm_leg(graph, arm).a;
    period = checked_mul(period / std::gcd(period, a), a);
  }
  return static_cast<std::size_t>(period);
}

std::size_t default_cutoff(const PlumbingGraph& graph, std::int64_t center_id) {
  if (const auto window = period_window(graph, center_id)) {
    const auto arms = graph.degree(graph.index_of(center_id));
    return (arms + 1) * *window + 1;
  }
  return 512;
}

std::vector<Cycle> tau_cycles(const PlumbingGraph& graph, std::int64_t center_id, std::size_t cutoff) {
  require_negative_definite(graph);
  const std::size_t v0 = graph.index_of(center_id);
  const Form64 form = intersection_form<std::int64_t>(graph);
  std::vector<Cycle> cycles;
  cycles.reserve(cutoff + 1);
  Cycle x(graph.size(), 0);
  for (std::size_t i = 0; i <= cutoff; ++i) {
    // x(i) + E_v0 <= x(i+1), so each run continues from the previous cycle.
    if (i > 0) x[v0] = checked_add(x[v0], 1);
    laufer_run(form, x, v0);
    cycles.push_back(x);
  }
  return cycles;
}

TauSequence tau_sequence(const PlumbingGraph& graph, std::int64_t center_id, std::size_t cutoff) {
  require_negative_definite(graph);
  const std::size_t v0 = graph.index_of(center_id);
  if (!rational_after_decrease(graph, v0)) {
    throw NotAlmostRationalError("graph is not almost rational at vertex " + std::to_string(center_id));
  }
  const Form64 form = intersection_form<std::int64_t>(graph);

  TauSequence tau;
  tau.center_id = center_id;
  tau.values.reserve(cutoff + 1);
  tau.values.push_back(0);
  Cycle x(graph.size(), 0);
  laufer_run(form, x, v0);
  for (std::size_t i = 0; i < cutoff; ++i) {
    const std::int64_t delta = 1 - pair_with_basis(form, x, v0);
    tau.values.push_back(checked_add(tau.values.back(), delta));
    x[v0] = checked_add(x[v0], 1);
    laufer_run(form, x, v0);
  }

  const auto period = period_window(graph, center_id);
  tau.heuristic_window = !period.has_value();
  tau.window = period ? *period : std::max<std::size_t>(1, cutoff / 4);

  std::size_t first_good = cutoff;
  while (first_good > 0 && tau.delta(first_good - 1) >= 1) --first_good;
  tau.stabilization_index = first_good;
  tau.stabilized = cutoff >= tau.window && cutoff - first_good >= tau.window;
  return tau;
}

}  // namespace plumbhf
