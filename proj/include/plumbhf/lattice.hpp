#pragma once

// Plumbing graphs and exact linear algebra over their intersection lattice.
//
// Matrices index vertices in ascending vertex-id order. All arithmetic is
// exact: BigInt for integral data, Rational for inverses and pivots.

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "plumbhf/scalar.hpp"

namespace plumbhf {

struct Vertex {
  std::int64_t id;
  std::int64_t weight;
  bool operator==(const Vertex&) const = default;
};

/// A weighted tree. Construction validates the tree invariants and sorts the
/// vertices by id; every index-based accessor refers to that sorted order.
class PlumbingGraph {
 public:
  using Edge = std::pair<std::int64_t, std::int64_t>;

  PlumbingGraph(std::vector<Vertex> vertices, std::vector<Edge> edges);

  std::size_t size() const { return vertices_.size(); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  std::int64_t weight(std::size_t index) const { return vertices_[index].weight; }
  std::int64_t id(std::size_t index) const { return vertices_[index].id; }
  std::size_t index_of(std::int64_t id) const;

  /// Edges as index pairs (i < j), lexicographically sorted.
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
  /// Edges as id pairs, in the same order as edges().
  std::vector<Edge> edge_ids() const;

  const std::vector<std::size_t>& neighbors(std::size_t index) const { return adjacency_[index]; }
  std::size_t degree(std::size_t index) const { return adjacency_[index].size(); }

  PlumbingGraph with_weight(std::size_t index, std::int64_t weight) const;

  bool operator==(const PlumbingGraph& other) const {
    return vertices_ == other.vertices_ && edges_ == other.edges_;
  }

 private:
  std::vector<Vertex> vertices_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

/// Symmetric form with the vertex weights on the diagonal and a 1 for every edge.
template <typename Scalar = BigInt>
Matrix<Scalar> intersection_form(const PlumbingGraph& graph) {
  const auto n = static_cast<Eigen::Index>(graph.size());
  Matrix<Scalar> form = Matrix<Scalar>::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) form(i, i) = Scalar(graph.weight(static_cast<std::size_t>(i)));
  for (const auto& [a, b] : graph.edges()) {
    form(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = Scalar(1);
    form(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(a)) = Scalar(1);
  }
  return form;
}

enum class Definiteness { negative_definite, other };

/// Symmetric elimination pivots d_1, d_2, ... in order; stops after the first
/// zero pivot. The form is negative definite iff all n pivots are negative.
std::vector<Rational> ldl_pivots(const IntMatrix& form);

Definiteness definiteness(const IntMatrix& form);

inline bool is_negative_definite(const PlumbingGraph& graph) {
  return definiteness(intersection_form(graph)) == Definiteness::negative_definite;
}

/// Fraction-free (Bareiss) determinant.
BigInt determinant(const IntMatrix& m);

/// Exact inverse by Gauss-Jordan elimination over the rationals.
/// Throws SingularMatrixError (det = 0) when the matrix is singular.
RatMatrix inverse_exact(const RatMatrix& m);

inline RatMatrix inverse_exact(const IntMatrix& m) { return inverse_exact(RatMatrix(m.cast<Rational>())); }

/// left^T * minv * right, exactly.
template <typename Left, typename Right>
Rational pairing(const Eigen::MatrixBase<Left>& left, const RatMatrix& minv,
                 const Eigen::MatrixBase<Right>& right) {
  if (left.cols() != 1 || right.cols() != 1 || left.rows() != minv.rows() ||
      right.rows() != minv.cols()) {
    throw StructuralError("pairing: dimension mismatch");
  }
  const RatVector l = left.template cast<Rational>();
  const RatVector r = right.template cast<Rational>();
  Rational acc = 0;
  for (Eigen::Index i = 0; i < minv.rows(); ++i) {
    if (l(i) == 0) continue;
    Rational row = 0;
    for (Eigen::Index j = 0; j < minv.cols(); ++j) row += minv(i, j) * r(j);
    acc += l(i) * row;
  }
  return acc;
}

/// A characteristic element, stored by its values k_v = <k, E_v> on the
/// vertex basis. Always satisfies k_v = <E_v, E_v> (mod 2).
class CharVector {
 public:
  CharVector(const IntMatrix& form, IntVector values);

  /// The canonical class: <K, E_v> = -<E_v, E_v> - 2.
  static CharVector canonical(const IntMatrix& form);

  const IntVector& values() const { return values_; }

  /// k + 2 * sign * PD(E_v): shifts every value by 2 * sign * <E_v, E_u>.
  CharVector moved(const IntMatrix& form, Eigen::Index v, int sign = 1) const;

  bool operator==(const CharVector& other) const { return values_ == other.values_; }

 private:
  CharVector() = default;
  IntVector values_;
};

bool is_characteristic(const IntMatrix& form, const IntVector& values);

/// The rational cycle Z_K with <Z_K, E_v> = <E_v, E_v> + 2, i.e. Z_K = -K.
RatVector canonical_cycle(const IntMatrix& form);

/// K^2 = <Z_K, Z_K>.
Rational canonical_square(const IntMatrix& form);

}  // namespace plumbhf
