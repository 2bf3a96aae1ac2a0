#include "plumbhf/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <regex>
#include <set>
#include <string>

namespace plumbhf {

Rational parse_rational(const std::string& text) {
  static const std::regex form(R"(\s*([+-]?\d+)(?:\s*/\s*([+-]?\d+))?\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, form)) throw Error("not a rational number: '" + text + "'");
  BigInt num(m[1].str());
  BigInt den = m[2].matched ? BigInt(m[2].str()) : BigInt(1);
  if (den == 0) throw Error("zero denominator in '" + text + "'");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

PlumbingGraph::PlumbingGraph(std::vector<Vertex> vertices, std::vector<Edge> edges) {
  if (vertices.empty()) throw StructuralError("plumbing graph must have at least one vertex");
  std::sort(vertices.begin(), vertices.end(),
            [](const Vertex& a, const Vertex& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    if (vertices[i].id == vertices[i - 1].id) {
      throw StructuralError("vertex ids must be distinct (duplicate id " +
                            std::to_string(vertices[i].id) + ")");
    }
  }
  vertices_ = std::move(vertices);

  if (edges.size() + 1 != vertices_.size()) {
    throw StructuralError("not a tree: |E| = " + std::to_string(edges.size()) +
                          " but |V| - 1 = " + std::to_string(vertices_.size() - 1));
  }

  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& [a, b] : edges) {
    std::size_t i = index_of(a);
    std::size_t j = index_of(b);
    if (i == j) throw StructuralError("not a tree: self-loop at vertex " + std::to_string(a));
    if (i > j) std::swap(i, j);
    if (!seen.emplace(i, j).second) {
      throw StructuralError("not a tree: repeated edge {" + std::to_string(a) + ", " +
                            std::to_string(b) + "}");
    }
  }
  edges_.assign(seen.begin(), seen.end());

  adjacency_.assign(vertices_.size(), {});
  for (const auto& [i, j] : edges_) {
    adjacency_[i].push_back(j);
    adjacency_[j].push_back(i);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());

  // |E| = |V| - 1 plus connectivity gives acyclicity.
  std::vector<bool> reached(vertices_.size(), false);
  std::vector<std::size_t> stack{0};
  reached[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t u : adjacency_[v]) {
      if (!reached[u]) {
        reached[u] = true;
        ++count;
        stack.push_back(u);
      }
    }
  }
  if (count != vertices_.size()) throw StructuralError("not a tree: graph is disconnected");
}

std::size_t PlumbingGraph::index_of(std::int64_t id) const {
  const auto it = std::lower_bound(vertices_.begin(), vertices_.end(), id,
                                   [](const Vertex& v, std::int64_t key) { return v.id < key; });
  if (it == vertices_.end() || it->id != id) {
    throw StructuralError("unknown vertex id " + std::to_string(id));
  }
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::vector<PlumbingGraph::Edge> PlumbingGraph::edge_ids() const {
  std::vector<Edge> out;
  out.reserve(edges_.size());
  for (const auto& [i, j] : edges_) out.emplace_back(vertices_[i].id, vertices_[j].id);
  return out;
}

PlumbingGraph PlumbingGraph::with_weight(std::size_t index, std::int64_t weight) const {
  PlumbingGraph copy = *this;
  copy.vertices_.at(index).weight = weight;
  return copy;
}

std::vector<Rational> ldl_pivots(const IntMatrix& form) {
  const Eigen::Index n = form.rows();
  RatMatrix work = form.cast<Rational>();
  std::vector<Rational> pivots;
  for (Eigen::Index k = 0; k < n; ++k) {
    const Rational pivot = work(k, k);
    pivots.push_back(pivot);
    if (pivot == 0) break;
    for (Eigen::Index i = k + 1; i < n; ++i) {
      if (work(i, k) == 0) continue;
      const Rational factor = work(i, k) / pivot;
      for (Eigen::Index j = k; j < n; ++j) work(i, j) -= factor * work(k, j);
    }
  }
  return pivots;
}

Definiteness definiteness(const IntMatrix& form) {
  if (form.rows() != form.cols() || form != form.transpose()) return Definiteness::other;
  const auto pivots = ldl_pivots(form);
  if (static_cast<Eigen::Index>(pivots.size()) != form.rows()) return Definiteness::other;
  for (const auto& p : pivots) {
    if (p >= 0) return Definiteness::other;
  }
  return Definiteness::negative_definite;
}

BigInt determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw StructuralError("determinant of a non-square matrix");
  const Eigen::Index n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  BigInt sign = 1;
  BigInt previous = 1;
  for (Eigen::Index k = 0; k < n - 1; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      a.row(k).swap(a.row(swap));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / previous;
      }
      a(i, k) = 0;
    }
    previous = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

RatMatrix inverse_exact(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw StructuralError("inverse of a non-square matrix");
  const Eigen::Index n = m.rows();
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::Identity(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index pivot = k;
    while (pivot < n && a(pivot, k) == 0) ++pivot;
    if (pivot == n) throw SingularMatrixError(0);
    if (pivot != k) {
      a.row(k).swap(a.row(pivot));
      inv.row(k).swap(inv.row(pivot));
    }
    const Rational scale = a(k, k);
    a.row(k) /= scale;
    inv.row(k) /= scale;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == k || a(i, k) == 0) continue;
      const Rational factor = a(i, k);
      a.row(i) -= factor * a.row(k);
      inv.row(i) -= factor * inv.row(k);
    }
  }
  return inv;
}

bool is_characteristic(const IntMatrix& form, const IntVector& values) {
  if (values.size() != form.rows()) return false;
  for (Eigen::Index v = 0; v < values.size(); ++v) {
    const BigInt diff = values(v) - form(v, v);
    if (diff % 2 != 0) return false;
  }
  return true;
}

CharVector::CharVector(const IntMatrix& form, IntVector values) : values_(std::move(values)) {
  if (!is_characteristic(form, values_)) {
    throw StructuralError("vector is not characteristic: k_v must equal <E_v, E_v> mod 2");
  }
}

CharVector CharVector::canonical(const IntMatrix& form) {
  CharVector k;
  k.values_.resize(form.rows());
  for (Eigen::Index v = 0; v < form.rows(); ++v) k.values_(v) = -form(v, v) - 2;
  return k;
}

CharVector CharVector::moved(const IntMatrix& form, Eigen::Index v, int sign) const {
  CharVector out = *this;
  out.values_ += BigInt(2 * sign) * form.col(v);
  return out;
}

RatVector canonical_cycle(const IntMatrix& form) {
  RatVector rhs(form.rows());
  for (Eigen::Index v = 0; v < form.rows(); ++v) rhs(v) = Rational(form(v, v) + 2);
  return inverse_exact(form) * rhs;
}

Rational canonical_square(const IntMatrix& form) {
  const RatVector z = canonical_cycle(form);
  return z.dot(form.cast<Rational>() * z);
}

}  // namespace plumbhf
