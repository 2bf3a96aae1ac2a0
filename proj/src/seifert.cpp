#include "plumbhf/seifert.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace plumbhf {

namespace {

void require_coprime_triple(std::int64_t a1, std::int64_t a2, std::int64_t a3) {
  const std::array<std::int64_t, 3> a{a1, a2, a3};
  for (std::int64_t x : a) {
    if (x < 2) throw StructuralError("Brieskorn exponents must be > 1, got " + std::to_string(x));
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (std::gcd(a[i], a[j]) != 1) {
        throw StructuralError("Brieskorn exponents must be pairwise coprime: gcd(" +
                              std::to_string(a[i]) + ", " + std::to_string(a[j]) + ") != 1");
      }
    }
  }
}

std::int64_t mod_positive(std::int64_t x, std::int64_t m) {
  const std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

}  // namespace

Rational evaluate_neg_cont_frac(std::span<const std::int64_t> entries) {
  if (entries.empty()) throw StructuralError("empty continued fraction");
  Rational value = entries.back();
  for (auto it = entries.rbegin() + 1; it != entries.rend(); ++it) {
    if (value == 0) throw StructuralError("continued fraction has a zero tail");
    value = Rational(*it) - 1 / value;
  }
  return value;
}

Rational ContinuedFraction::value() const { return evaluate_neg_cont_frac(entries); }

SeifertData normalized_seifert(std::int64_t a1, std::int64_t a2, std::int64_t a3) {
  require_coprime_triple(a1, a2, a3);
  const std::array<std::int64_t, 3> a{a1, a2, a3};
  const std::int64_t product = checked_mul(checked_mul(a1, a2), a3);

  SeifertData data{0, {}};
  std::int64_t sum = 0;
  for (std::int64_t ai : a) {
    const std::int64_t cofactor = product / ai;
    // b * cofactor = -1 (mod ai); ai is small, so search the residues.
    const std::int64_t c = mod_positive(cofactor, ai);
    std::int64_t b = 1;
    while (b < ai && mod_positive(b * c, ai) != ai - 1) ++b;
    data.legs.push_back({ai, b});
    sum = checked_add(sum, checked_mul(b, cofactor));
  }
  const std::int64_t numerator = -1 - sum;
  data.e0 = numerator / product;  // exact by construction of the b_i
  return data;
}

ContinuedFraction neg_cont_frac(std::int64_t p, std::int64_t q) {
  if (q < 1 || q >= p) {
    throw StructuralError("neg_cont_frac: need 0 < q < p, got " + std::to_string(p) + "/" +
                          std::to_string(q));
  }
  if (std::gcd(p, q) != 1) throw StructuralError("neg_cont_frac: p and q must be coprime");
  ContinuedFraction out;
  while (q != 0) {
    const std::int64_t x = (p + q - 1) / q;  // ceil(p/q)
    out.entries.push_back(x);
    const std::int64_t r = x * q - p;
    p = q;
    q = r;
  }
  return out;
}

PlumbingGraph seifert_graph(const SeifertData& data) {
  std::vector<Vertex> vertices{{0, data.e0}};
  std::vector<PlumbingGraph::Edge> edges;
  std::int64_t next = 1;
  for (const auto& leg : data.legs) {
    const auto cf = neg_cont_frac(leg.a, leg.b);
    std::int64_t previous = 0;
    for (std::int64_t x : cf.entries) {
      vertices.push_back({next, -x});
      edges.emplace_back(previous, next);
      previous = next++;
    }
  }
  return PlumbingGraph(std::move(vertices), std::move(edges));
}

PlumbingGraph brieskorn_graph(std::int64_t a1, std::int64_t a2, std::int64_t a3) {
  return seifert_graph(normalized_seifert(a1, a2, a3));
}

std::optional<StarShape> star_shape(const PlumbingGraph& graph, std::size_t center) {
  StarShape shape{center, {}};
  for (std::size_t start : graph.neighbors(center)) {
    std::vector<std::size_t> arm{start};
    std::size_t previous = center;
    std::size_t current = start;
    while (true) {
      const auto& next = graph.neighbors(current);
      if (next.size() > 2) return std::nullopt;
      std::size_t step = current;
      for (std::size_t u : next) {
        if (u != previous) step = u;
      }
      if (step == current) break;
      arm.push_back(step);
      previous = current;
      current = step;
    }
    shape.arms.push_back(std::move(arm));
  }
  return shape;
}

SeifertLeg arm_leg(const PlumbingGraph& graph, std::span<const std::size_t> arm) {
  std::vector<std::int64_t> entries;
  for (std::size_t v : arm) entries.push_back(-graph.weight(v));
  const Rational value = evaluate_neg_cont_frac(entries);
  if (value <= 0) throw StructuralError("arm does not evaluate to a positive fraction");
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  return {num.convert_to<std::int64_t>(), den.convert_to<std::int64_t>()};
}

Rational euler_number(const PlumbingGraph& graph, std::int64_t center_id) {
  const std::size_t center = graph.index_of(center_id);
  const auto shape = star_shape(graph, center);
  if (!shape) throw StructuralError("graph is not star-shaped about vertex " + std::to_string(center_id));
  Rational e = graph.weight(center);
  for (const auto& arm : shape->arms) {
    const SeifertLeg leg = arm_leg(graph, arm);
    e += Rational(leg.b, leg.a);
  }
  return e;
}

std::optional<std::array<std::int64_t, 3>> recognize_brieskorn(const PlumbingGraph& graph) {
  for (std::size_t c = 0; c < graph.size(); ++c) {
    if (graph.degree(c) != 3) continue;
    const auto shape = star_shape(graph, c);
    if (!shape) return std::nullopt;
    std::array<std::int64_t, 3> a{};
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t v : shape->arms[i]) {
        if (graph.weight(v) > -2) return std::nullopt;
      }
      a[i] = arm_leg(graph, shape->arms[i]).a;
    }
    std::sort(a.begin(), a.end());
    if (std::gcd(a[0], a[1]) != 1 || std::gcd(a[0], a[2]) != 1 || std::gcd(a[1], a[2]) != 1) {
      return std::nullopt;
    }
    const Rational e = euler_number(graph, graph.id(c));
    if (e != Rational(-1, a[0] * a[1] * a[2])) return std::nullopt;
    return a;
  }
  return std::nullopt;
}

}  // namespace plumbhf
