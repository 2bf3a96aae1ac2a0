#pragma once

// Cobordism-class enumeration over the canonical basis and the verdicts that
// follow from the tau / relative adjunction comparison.
//
// Classes live in HF-hat(Y); functionals T_[V] in HF-hat(-Y) pair with them
// by <T_[V_i], [V_j]> = delta_ij. Nothing here is dualized twice.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "plumbhf/graded_root.hpp"

namespace plumbhf {

/// A homogeneous F_2 combination of canonical basis elements.
struct F2Class {
  std::vector<std::size_t> support;  // sorted basis positions
  Rational grading;

  bool contains(std::size_t position) const;
  bool operator==(const F2Class&) const = default;
};

/// Mod-2 pairing of the functional sum_{i in functional} T_[V_i] with a class.
int pair_mod2(const F2Class& functional, const F2Class& cls);

class ObstructionContext {
 public:
  /// Theta^+ is the sum of the functionals of every element at the
  /// d-invariant grading; the contact element defaults to the first leaf.
  ObstructionContext(CanonicalBasis basis, std::size_t contact_index = 0);

  const CanonicalBasis& basis() const { return basis_; }
  std::size_t contact_index() const { return contact_index_; }
  std::size_t contact_image() const { return basis_.j_action[contact_index_]; }
  const F2Class& theta_plus() const { return theta_plus_; }

  std::string label(const F2Class& cls) const;  // "[V1]+[V0]+[V-1]"

 private:
  CanonicalBasis basis_;
  std::size_t contact_index_;
  F2Class theta_plus_;
};

/// Unordered pair of tau values.
using TauSet = std::pair<Rational, Rational>;

/// J-invariant homogeneous classes at `grading` that pair to 1 with Theta^+,
/// ordered by support size, then lexicographically.
std::vector<F2Class> candidate_classes(const ObstructionContext& ctx, const Rational& grading = 0);

/// Drops every candidate containing both the contact element and its
/// J-image once max(tau) exceeds the slice-genus bound. Unknown tau values
/// leave the list untouched.
std::vector<F2Class> adjunction_filter(const std::vector<F2Class>& candidates, const std::optional<TauSet>& tau_set,
                                       std::int64_t g4_bound, const ObstructionContext& ctx);

enum class Verdict { obstructed, not_obstructed, undetermined };
std::string to_string(Verdict verdict);

Verdict symplectic_verdict(const std::vector<F2Class>& remaining, const ObstructionContext& ctx);

/// Image of the generator under the orientation-reversed cobordism map: Theta^+.
F2Class reversed_orientation_class(const ObstructionContext& ctx);

enum class ExoticVerdict { distinct_smooth_structures, inconclusive };
std::string to_string(ExoticVerdict verdict);

ExoticVerdict exotic_pair_check(const ObstructionContext& ctx, const TauSet& tau_set, std::int64_t g4_bound);

/// Every stage of one obstruction run, for reports and transcripts.
struct ObstructionRun {
  std::string manifold;
  std::size_t basis_size;
  std::vector<F2Class> candidates;
  std::vector<F2Class> filtered;
  Verdict verdict;
  std::optional<ExoticVerdict> exotic;
  std::vector<std::string> citations;
  std::vector<std::string> transcript;
};

ObstructionRun run_obstruction(const ObstructionContext& ctx, const std::string& manifold,
                               const std::optional<TauSet>& tau_set, std::int64_t g4_bound);

}  // namespace plumbhf
