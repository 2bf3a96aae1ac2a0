#pragma once

// Exact scalar types and the dense Eigen aliases built on them.
//
// Every matrix in the library is an Eigen dense type whose scalar is either an
// arbitrary-precision integer or rational (Boost.Multiprecision) or, in the
// combinatorial hot loops, a checked 64-bit integer. No floating point.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

// Boost 1.74 probes any type with a const_iterator as a byte container; Eigen
// 3.4 matrices declare const_iterator as void, which breaks that probe.
namespace boost::multiprecision::detail {
template <class C>
  requires requires {
    typename C::StorageKind;
    C::RowsAtCompileTime;
  }
struct is_byte_container<C> : boost::false_type {};
}  // namespace boost::multiprecision::detail

namespace plumbhf {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<BigInt>;
using RatMatrix = Matrix<Rational>;
using IntVector = Vector<BigInt>;
using RatVector = Vector<Rational>;

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates a structural invariant (tree shape, ids, dimensions, ...).
class StructuralError : public Error {
 public:
  using Error::Error;
};

class SingularMatrixError : public Error {
 public:
  explicit SingularMatrixError(BigInt det)
      : Error("matrix is singular (det = " + det.str() + ")"), det_(std::move(det)) {}
  const BigInt& det() const { return det_; }

 private:
  BigInt det_;
};

class NotNegativeDefiniteError : public Error {
 public:
  using Error::Error;
};

class NotAlmostRationalError : public Error {
 public:
  using Error::Error;
};

class UnstabilizedError : public Error {
 public:
  using Error::Error;
};

/// Renders a rational as "p/q" in lowest terms, or "p" when integral.
inline std::string to_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline bool is_integer(const Rational& r) { return boost::multiprecision::denominator(r) == 1; }

/// Parses "p", "-p" or "p/q".
Rational parse_rational(const std::string& text);

/// Overflow-checked 64-bit helpers for the lattice enumeration loops.
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw Error("64-bit overflow in lattice arithmetic");
  return out;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw Error("64-bit overflow in lattice arithmetic");
  return out;
}

template <typename Scalar>
Vector<Scalar> to_vector(const std::vector<std::int64_t>& values) {
  Vector<Scalar> out(static_cast<Eigen::Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) out(static_cast<Eigen::Index>(i)) = Scalar(values[i]);
  return out;
}

}  // namespace plumbhf
