#pragma once

// Laufer computation sequences, rationality, and the tau-function of an
// almost-rational graph.

#include <cstdint>
#include <optional>
#include <vector>

#include "plumbhf/lattice.hpp"

namespace plumbhf {

/// Hard bound on the number of E_v additions in a single Laufer run.
inline constexpr std::int64_t kLauferStepCap = 100'000'000;

using Cycle = std::vector<std::int64_t>;
using Form64 = Matrix<std::int64_t>;

/// chi(x) = -(<x, x> + <K, x>) / 2 for the canonical class K.
std::int64_t riemann_roch(const Form64& form, const Cycle& x);

/// Adds basis elements E_v (v != fixed) while some <x, E_v> > 0.
/// Returns the number of steps taken; throws past kLauferStepCap.
std::int64_t laufer_run(const Form64& form, Cycle& x, std::optional<std::size_t> fixed);

struct FundamentalCycle {
  Cycle cycle;
  std::int64_t chi;
  bool rational;  // chi(Z) == 1
};

FundamentalCycle fundamental_cycle(const PlumbingGraph& graph);

/// Id of a vertex whose weight decrease makes the graph rational, searching
/// high-degree vertices first. Nothing when no vertex works within the bound.
std::optional<std::int64_t> is_almost_rational(const PlumbingGraph& graph);

struct TauSequence {
  std::vector<std::int64_t> values;  // tau(0), ..., tau(N)
  std::int64_t center_id;
  bool stabilized;
  std::size_t stabilization_index;  // N0: deltas are >= 1 on [N0, N)
  std::size_t window;
  bool heuristic_window;  // window was not derived from a period bound

  std::size_t cutoff() const { return values.size() - 1; }
  std::int64_t delta(std::size_t i) const { return values[i + 1] - values[i]; }
};

/// Certified stabilization window for `center_id`: the lcm of the arm
/// multiplicities when the graph is star-shaped about it with all arm
/// weights <= -2; otherwise nothing.
std::optional<std::size_t> period_window(const PlumbingGraph& graph, std::int64_t center_id);

/// A cutoff large enough to certify stabilization for star-shaped graphs.
std::size_t default_cutoff(const PlumbingGraph& graph, std::int64_t center_id);

/// tau(i+1) - tau(i) = 1 - <x(i), E_v0>, x(i) the minimal cycle with
/// multiplicity i at v0 and <x, E_v> <= 0 off v0.
TauSequence tau_sequence(const PlumbingGraph& graph, std::int64_t center_id, std::size_t cutoff);

/// The cycles x(0), ..., x(cutoff) behind tau_sequence.
std::vector<Cycle> tau_cycles(const PlumbingGraph& graph, std::int64_t center_id, std::size_t cutoff);

}  // namespace plumbhf
