#include <doctest.h>

#include <algorithm>
#include <set>

#include "support.hpp"

using namespace plumbhf;
using testing::uniform;

namespace {

// Symmetric basis [V_t], ..., [V_-t] at grading 0 with J[V_i] = [V_-i].
CanonicalBasis symmetric_basis(std::size_t size) {
  CanonicalBasis b;
  const int t = static_cast<int>(size / 2);
  for (std::size_t p = 0; p < size; ++p) {
    b.elements.push_back({t - static_cast<int>(p), 0, {2 * p, 2 * p}});
    b.j_action.push_back(size - 1 - p);
  }
  b.self_conjugate = true;
  return b;
}

// Random involution with exactly one fixed point.
CanonicalBasis shuffled_basis(std::mt19937_64& rng, std::size_t size) {
  CanonicalBasis b = symmetric_basis(size);
  std::vector<std::size_t> perm(size);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  for (std::size_t k = 0; k + 1 < size; k += 2) {
    b.j_action[perm[k]] = perm[k + 1];
    b.j_action[perm[k + 1]] = perm[k];
  }
  b.j_action[perm[size - 1]] = perm[size - 1];
  return b;
}

std::vector<std::vector<std::size_t>> supports(const std::vector<F2Class>& classes) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& c : classes) out.push_back(c.support);
  return out;
}

// All J-invariant subsets of odd size, by exhaustive enumeration.
std::set<std::vector<std::size_t>> subset_oracle(const CanonicalBasis& b) {
  std::set<std::vector<std::size_t>> out;
  const std::size_t n = b.size();
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::size_t> s;
    bool invariant = true;
    for (std::size_t p = 0; p < n; ++p) {
      if (!(mask & (1u << p))) continue;
      s.push_back(p);
      invariant = invariant && (mask & (1u << b.j_action[p]));
    }
    if (invariant && s.size() % 2 == 1) out.insert(s);
  }
  return out;
}

const std::vector<std::size_t> kV0{1};
const std::vector<std::size_t> kAll{0, 1, 2};

}  // namespace

TEST_CASE("candidates for a three-element basis") {
  const ObstructionContext ctx(symmetric_basis(3));
  const auto c = candidate_classes(ctx);
  CHECK(supports(c) == std::vector<std::vector<std::size_t>>{kV0, kAll});
  CHECK(ctx.label(c[0]) == "[V0]");
  CHECK(ctx.label(c[1]) == "[V1]+[V0]+[V-1]");
  for (const auto& cls : c) CHECK(pair_mod2(ctx.theta_plus(), cls) == 1);
}

TEST_CASE("candidates for one and five elements") {
  const ObstructionContext one(symmetric_basis(1));
  CHECK(supports(candidate_classes(one)) == std::vector<std::vector<std::size_t>>{{0}});
  const ObstructionContext five(symmetric_basis(5));
  CHECK(candidate_classes(five).size() == 4);
  CHECK_THROWS_AS(candidate_classes(five, 2), Error);
}

TEST_CASE("candidate count is 2^(pairs), checked against all subsets") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t size = 2 * static_cast<std::size_t>(uniform(rng, 0, 3)) + 1;  // 1, 3, 5, 7
    const auto basis = shuffled_basis(rng, size);
    const ObstructionContext ctx(basis, static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(size) - 1)));
    const auto c = candidate_classes(ctx);
    CHECK(c.size() == (std::size_t{1} << (size / 2)));
    const auto expected = subset_oracle(basis);
    const auto got = supports(c);
    CHECK(std::set<std::vector<std::size_t>>(got.begin(), got.end()) == expected);
    // Shortlex order.
    CHECK(std::is_sorted(c.begin(), c.end(), [](const F2Class& a, const F2Class& b) {
      return a.support.size() != b.support.size() ? a.support.size() < b.support.size() : a.support < b.support;
    }));
    for (const auto& cls : c) {
      CHECK(pair_mod2(ctx.theta_plus(), cls) == 1);
      CHECK(cls.grading == 0);
    }
  }
}

TEST_CASE("adjunction filter") {
  const ObstructionContext ctx(symmetric_basis(3));
  const auto c = candidate_classes(ctx);
  CHECK(supports(adjunction_filter(c, TauSet{0, 1}, 0, ctx)) == std::vector<std::vector<std::size_t>>{kV0});
  CHECK(supports(adjunction_filter(c, TauSet{0, 2}, 0, ctx)) == std::vector<std::vector<std::size_t>>{kV0});
  CHECK(adjunction_filter(c, TauSet{0, 0}, 0, ctx) == c);
  CHECK(adjunction_filter(c, TauSet{0, 0}, 3, ctx) == c);
  CHECK(adjunction_filter(c, TauSet{0, 2}, 2, ctx) == c);
  CHECK(adjunction_filter(c, std::nullopt, 0, ctx) == c);
  CHECK_THROWS_AS(adjunction_filter(c, TauSet{0, 1}, -1, ctx), StructuralError);
}

TEST_CASE("adjunction filter is monotone and idempotent") {
  std::mt19937_64 rng(62);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t size = 2 * static_cast<std::size_t>(uniform(rng, 0, 4)) + 1;
    const ObstructionContext ctx(shuffled_basis(rng, size),
                                 static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(size) - 1)));
    const auto c = candidate_classes(ctx);
    const TauSet tau{uniform(rng, -2, 3), uniform(rng, -2, 3)};
    const auto g4 = uniform(rng, 0, 2);
    const auto once = adjunction_filter(c, tau, g4, ctx);
    for (const auto& cls : once) CHECK(std::find(c.begin(), c.end(), cls) != c.end());
    CHECK(adjunction_filter(once, tau, g4, ctx) == once);
  }
}

TEST_CASE("symplectic verdicts") {
  const ObstructionContext ctx(symmetric_basis(3));
  const F2Class v0{{1}, 0};
  const F2Class all{{0, 1, 2}, 0};
  CHECK(symplectic_verdict({v0}, ctx) == Verdict::obstructed);
  CHECK(symplectic_verdict({all}, ctx) == Verdict::not_obstructed);
  CHECK(symplectic_verdict({v0, all}, ctx) == Verdict::undetermined);
  CHECK_THROWS_AS(symplectic_verdict({}, ctx), Error);
  CHECK(to_string(Verdict::obstructed) == "obstructed");
}

TEST_CASE("reversed orientation and exotic pairs") {
  const ObstructionContext three(symmetric_basis(3));
  CHECK(reversed_orientation_class(three).support == kAll);
  const ObstructionContext one(symmetric_basis(1));
  CHECK(reversed_orientation_class(one).support == std::vector<std::size_t>{0});
  CHECK(exotic_pair_check(three, {0, 1}, 0) == ExoticVerdict::distinct_smooth_structures);
  CHECK(exotic_pair_check(three, {0, 2}, 0) == ExoticVerdict::distinct_smooth_structures);
  CHECK(exotic_pair_check(three, {0, 0}, 0) == ExoticVerdict::inconclusive);
}

TEST_CASE("context requirements") {
  CHECK_THROWS_AS(ObstructionContext{CanonicalBasis{}}, StructuralError);
  auto b = symmetric_basis(3);
  b.self_conjugate = false;
  CHECK_THROWS_AS(ObstructionContext{b}, StructuralError);
  CHECK_THROWS_AS((ObstructionContext{symmetric_basis(3), 3}), StructuralError);
  const ObstructionContext ctx(symmetric_basis(3));
  CHECK(ctx.contact_index() == 0);
  CHECK(ctx.contact_image() == 2);
}

TEST_CASE("theta plus sits at the lowest grading") {
  auto b = symmetric_basis(3);
  b.elements[1].grading = -2;
  const ObstructionContext ctx(b);
  CHECK(ctx.theta_plus().support == std::vector<std::size_t>{1});
  CHECK(ctx.theta_plus().grading == -2);
}

TEST_CASE("end-to-end replay for m = 3 and m = 4") {
  const std::vector<std::pair<std::string, std::string>> runs{{"sigma_2_5_7.json", "tau_m3.json"},
                                                              {"sigma_3_4_5.json", "tau_m4.json"}};
  for (const auto& [graph_file, tau_file] : runs) {
    const auto g = testing::load_graph(graph_file).graph;
    const auto center = is_almost_rational(g);
    REQUIRE(center);
    const auto root = graded_root(tau_sequence(g, *center, default_cutoff(g, *center)), g);
    const ObstructionContext ctx(canonical_basis(root, g, *center));
    const auto t = tau_pair(testing::load_presentation(tau_file)).as_set();
    const auto run = run_obstruction(ctx, "Y", t, 0);
    CHECK(supports(run.candidates) == std::vector<std::vector<std::size_t>>{kV0, kAll});
    CHECK(supports(run.filtered) == std::vector<std::vector<std::size_t>>{kV0});
    CHECK(run.verdict == Verdict::obstructed);
    CHECK(run.exotic == ExoticVerdict::distinct_smooth_structures);
  }
}

TEST_CASE("m = 2 without a tau set is undetermined") {
  const auto g = testing::load_graph("sigma_2_3_13.json").graph;
  const auto root = graded_root(tau_sequence(g, 0, default_cutoff(g, 0)), g);
  const ObstructionContext ctx(canonical_basis(root, g, 0));
  const auto run = run_obstruction(ctx, "Y", std::nullopt, 0);
  CHECK(run.verdict == Verdict::undetermined);
  CHECK_FALSE(run.exotic.has_value());
  REQUIRE(!run.citations.empty());
  CHECK(run.citations.back().rfind("[MT2]", 0) == 0);
}

TEST_CASE("reports are deterministic") {
  const auto g = testing::load_graph("sigma_2_5_7.json").graph;
  auto once = [&] {
    const auto root = graded_root(tau_sequence(g, 0, default_cutoff(g, 0)), g);
    const ObstructionContext ctx(canonical_basis(root, g, 0));
    return to_json(run_obstruction(ctx, "Sigma(2,5,7)", TauSet{0, 1}, 0), ctx).dump();
  };
  CHECK(once() == once());
}
