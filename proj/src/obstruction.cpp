#include "plumbhf/obstruction.hpp"

#include <algorithm>

namespace plumbhf {

bool F2Class::contains(std::size_t position) const {
  return std::binary_search(support.begin(), support.end(), position);
}

int pair_mod2(const F2Class& functional, const F2Class& cls) {
  int count = 0;
  for (std::size_t p : cls.support) count += functional.contains(p) ? 1 : 0;
  return count % 2;
}

ObstructionContext::ObstructionContext(CanonicalBasis basis, std::size_t contact_index)
    : basis_(std::move(basis)), contact_index_(contact_index) {
  if (basis_.elements.empty()) throw StructuralError("obstruction context needs a non-empty basis");
  if (!basis_.self_conjugate) {
    throw StructuralError("canonical class is not conjugation invariant; J does not act on the basis");
  }
  if (contact_index_ >= basis_.size()) throw StructuralError("contact index out of range");
  Rational bottom = basis_.elements.front().grading;
  for (const auto& e : basis_.elements) bottom = std::min(bottom, e.grading);
  theta_plus_.grading = bottom;
  for (std::size_t p = 0; p < basis_.size(); ++p) {
    if (basis_.elements[p].grading == bottom) theta_plus_.support.push_back(p);
  }
}

std::string ObstructionContext::label(const F2Class& cls) const {
  if (cls.support.empty()) return "0";
  std::string out;
  for (std::size_t p : cls.support) {
    if (!out.empty()) out += "+";
    out += "[V" + std::to_string(basis_.elements[p].label) + "]";
  }
  return out;
}

std::vector<F2Class> candidate_classes(const ObstructionContext& ctx, const Rational& grading) {
  const auto& basis = ctx.basis();
  std::vector<std::vector<std::size_t>> orbits;
  std::vector<bool> seen(basis.size(), false);
  for (std::size_t p = 0; p < basis.size(); ++p) {
    if (seen[p] || basis.elements[p].grading != grading) continue;
    std::vector<std::size_t> orbit{p};
    seen[p] = true;
    const std::size_t image = basis.j_action[p];
    if (!seen[image]) {
      orbit.push_back(image);
      seen[image] = true;
    }
    orbits.push_back(std::move(orbit));
  }
  if (orbits.empty()) throw Error("no basis element at grading " + to_string(grading));
  if (orbits.size() > 24) throw Error("too many J-orbits to enumerate candidate classes");

  std::vector<F2Class> out;
  for (std::uint32_t mask = 1; mask < (1u << orbits.size()); ++mask) {
    F2Class cls{{}, grading};
    for (std::size_t o = 0; o < orbits.size(); ++o) {
      if (mask & (1u << o)) cls.support.insert(cls.support.end(), orbits[o].begin(), orbits[o].end());
    }
    std::sort(cls.support.begin(), cls.support.end());
    if (pair_mod2(ctx.theta_plus(), cls) == 1) out.push_back(std::move(cls));
  }
  std::sort(out.begin(), out.end(), [](const F2Class& a, const F2Class& b) {
    if (a.support.size() != b.support.size()) return a.support.size() < b.support.size();
    return a.support < b.support;
  });
  return out;
}

std::vector<F2Class> adjunction_filter(const std::vector<F2Class>& candidates, const std::optional<TauSet>& tau_set,
                                       std::int64_t g4_bound, const ObstructionContext& ctx) {
  if (g4_bound < 0) throw StructuralError("slice genus bound must be non-negative");
  if (!tau_set || std::max(tau_set->first, tau_set->second) <= g4_bound) return candidates;
  std::vector<F2Class> out;
  for (const auto& cls : candidates) {
    // Such a class pairs to 1 with c(xi) and with J c(xi) = c(conj xi), so
    // max tau <= tau_theta <= g4, which is false here.
    if (cls.contains(ctx.contact_index()) && cls.contains(ctx.contact_image())) continue;
    out.push_back(cls);
  }
  return out;
}

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::obstructed:
      return "obstructed";
    case Verdict::not_obstructed:
      return "not_obstructed";
    case Verdict::undetermined:
      return "undetermined";
  }
  return "?";
}

Verdict symplectic_verdict(const std::vector<F2Class>& remaining, const ObstructionContext& ctx) {
  if (remaining.empty()) throw Error("inconsistent model: no cobordism class survives the filter");
  std::size_t with_contact = 0;
  for (const auto& cls : remaining) with_contact += cls.contains(ctx.contact_index()) ? 1 : 0;
  if (with_contact == 0) return Verdict::obstructed;
  if (with_contact == remaining.size()) return Verdict::not_obstructed;
  return Verdict::undetermined;
}

F2Class reversed_orientation_class(const ObstructionContext& ctx) { return ctx.theta_plus(); }

std::string to_string(ExoticVerdict verdict) {
  return verdict == ExoticVerdict::distinct_smooth_structures ? "distinct_smooth_structures" : "inconclusive";
}

ExoticVerdict exotic_pair_check(const ObstructionContext&, const TauSet& tau_set, std::int64_t g4_bound) {
  if (g4_bound < 0) throw StructuralError("slice genus bound must be non-negative");
  return std::max(tau_set.first, tau_set.second) > g4_bound ? ExoticVerdict::distinct_smooth_structures
                                                           : ExoticVerdict::inconclusive;
}

ObstructionRun run_obstruction(const ObstructionContext& ctx, const std::string& manifold,
                               const std::optional<TauSet>& tau_set, std::int64_t g4_bound) {
  ObstructionRun run;
  run.manifold = manifold;
  run.basis_size = ctx.basis().size();
  const auto& basis = ctx.basis();
  auto element = [&](std::size_t p) { return ctx.label(F2Class{{p}, basis.elements[p].grading}); };

  std::string listing;
  for (std::size_t p = 0; p < basis.size(); ++p) {
    listing += (p ? ", " : "") + element(p) + " @ " + to_string(basis.elements[p].grading);
  }
  run.transcript.push_back("canonical basis: " + listing);
  std::string jline;
  for (std::size_t p = 0; p < basis.size(); ++p) {
    jline += (p ? ", " : "") + element(p) + " -> " + element(basis.j_action[p]);
  }
  run.transcript.push_back("conjugation J: " + jline);
  std::string theta;
  for (std::size_t p : ctx.theta_plus().support) theta += (theta.empty() ? "T" : " + T") + element(p);
  run.transcript.push_back("Theta+ = " + theta);
  run.transcript.push_back("contact class c(xi) = T" + element(ctx.contact_index()) + ", J c(xi) = T" +
                           element(ctx.contact_image()));
  run.transcript.push_back(
      "theta = F(1) is homogeneous of grading 0, J-invariant (unique Spin^c structure on a homology ball), "
      "and <Theta+, theta> = 1");

  run.candidates = candidate_classes(ctx, 0);
  std::string cands;
  for (const auto& c : run.candidates) cands += (cands.empty() ? "" : "; ") + ctx.label(c);
  run.transcript.push_back("candidates: " + cands);

  if (!tau_set) {
    run.transcript.push_back("tau set unknown: no relative adjunction constraint applied");
  } else {
    const Rational top = std::max(tau_set->first, tau_set->second);
    run.transcript.push_back("tau set {" + to_string(tau_set->first) + ", " + to_string(tau_set->second) +
                             "}, max = " + to_string(top) + ", slice genus bound = " + std::to_string(g4_bound));
    if (top > g4_bound) {
      run.transcript.push_back("max tau > g4: a class pairing to 1 with both c(xi) and J c(xi) would force "
                               "max tau <= tau_theta <= g4; such classes are excluded");
    } else {
      run.transcript.push_back("max tau <= g4: no contradiction available");
    }
    run.citations.push_back("Hedden-Raoux, relative adjunction inequality");
  }

  run.filtered = adjunction_filter(run.candidates, tau_set, g4_bound, ctx);
  std::string kept;
  for (const auto& c : run.filtered) kept += (kept.empty() ? "" : "; ") + ctx.label(c);
  run.transcript.push_back("remaining: " + kept);

  run.verdict = symplectic_verdict(run.filtered, ctx);
  switch (run.verdict) {
    case Verdict::obstructed:
      run.transcript.push_back("a symplectic structure would give F(c(xi)) = 1 by naturality, but theta = " +
                               ctx.label(run.filtered.front()) +
                               " pairs to 0 with c(xi): the manifold carries no symplectic structure");
      run.citations.push_back("Ozsvath-Szabo; Ghiggini: naturality of the contact invariant under strong fillings");
      break;
    case Verdict::not_obstructed:
      run.transcript.push_back("every remaining class pairs to 1 with c(xi): no obstruction");
      break;
    case Verdict::undetermined:
      run.transcript.push_back("classes with and without c(xi) survive: undetermined");
      if (!tau_set) {
        run.citations.push_back(
            "[MT2] Seiberg-Witten argument for W^-(2), not mechanized here");
      }
      break;
  }

  if (tau_set) {
    run.exotic = exotic_pair_check(ctx, *tau_set, g4_bound);
    run.transcript.push_back("H-slice check: " + to_string(*run.exotic));
  }
  return run;
}

}  // namespace plumbhf
