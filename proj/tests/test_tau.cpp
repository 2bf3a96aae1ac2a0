#include <doctest.h>

#include "support.hpp"

using namespace plumbhf;
using testing::uniform;

namespace {

struct Draw {
  IntMatrix lambda;
  std::vector<std::int64_t> tb, rot, linking;
  std::int64_t knot_tb;
};

std::vector<std::int64_t> diagonal_tb(const IntMatrix& lambda) {
  std::vector<std::int64_t> tb;
  for (Eigen::Index i = 0; i < lambda.rows(); ++i) tb.push_back(lambda(i, i).convert_to<std::int64_t>() + 1);
  return tb;
}

// Random nonsingular symmetric framing with Legendrian-compatible data:
// rot_i has the parity of tb_i + 1.
Draw random_presentation(std::mt19937_64& rng, bool unimodular) {
  const auto n = uniform(rng, 1, 4);
  IntMatrix lambda(n, n);
  for (;;) {
    if (unimodular) {
      // P^T D P with D = diag(+-1) and P a product of elementary shears.
      IntMatrix p = IntMatrix::Identity(n, n);
      for (int k = 0; k < 6 && n > 1; ++k) {
        const auto i = uniform(rng, 0, n - 1), j = uniform(rng, 0, n - 1);
        if (i != j) p.row(i) += BigInt(uniform(rng, -2, 2)) * p.row(j);
      }
      IntMatrix d = IntMatrix::Zero(n, n);
      for (Eigen::Index i = 0; i < n; ++i) d(i, i) = uniform(rng, 0, 3) ? -1 : 1;
      lambda = p.transpose() * d * p;
    } else {
      for (Eigen::Index i = 0; i < n; ++i) {
        lambda(i, i) = uniform(rng, -6, 1);
        for (Eigen::Index j = i + 1; j < n; ++j) lambda(i, j) = lambda(j, i) = uniform(rng, -3, 3);
      }
    }
    if (testing::laplace_det(lambda) != 0) break;
  }
  Draw out{lambda, diagonal_tb(lambda), {}, {}, 2 * uniform(rng, -3, 3) + 1};
  for (std::size_t i = 0; i < out.tb.size(); ++i) {
    std::int64_t r = uniform(rng, -4, 4);
    if ((r + out.tb[i] + 1) % 2 != 0) ++r;
    out.rot.push_back(r);
    out.linking.push_back(uniform(rng, -3, 3));
  }
  return out;
}

SurgeryPresentation build(const Draw& d) { return SurgeryPresentation::from_lambda(d.lambda, d.tb, d.rot, d.linking, d.knot_tb); }

}  // namespace

TEST_CASE("m = 3 presentation") {
  const auto p = testing::load_presentation("tau_m3.json");
  CHECK(p.given_as_inverse());
  const auto t = tau_pair(p);
  CHECK(t.self_pairing == -1);
  CHECK(t.rotation_pairing == -1);
  CHECK(t.as_set() == std::make_pair(Rational(0), Rational(1)));
  CHECK(t.integral());
  // Legendrian framing: Lambda_ii = tb_i - 1.
  for (Eigen::Index i = 0; i < 3; ++i) CHECK(p.lambda()(i, i) == p.tb()[static_cast<std::size_t>(i)] - 1);
}

TEST_CASE("m = 4 presentation") {
  const auto t = tau_pair(testing::load_presentation("tau_m4.json"));
  CHECK(t.self_pairing == -2);
  // Direct evaluation gives -2; the set does not depend on this sign.
  CHECK(abs(t.rotation_pairing) == 2);
  CHECK(t.as_set() == std::make_pair(Rational(0), Rational(2)));
}

TEST_CASE("empty surgery") {
  const auto t = tau_pair(testing::load_presentation("tau_empty.json"));
  CHECK(t.self_pairing == 0);
  CHECK(t.as_set() == std::make_pair(Rational(0), Rational(0)));
}

TEST_CASE("presentation invariants") {
  IntMatrix lambda(2, 2);
  lambda << -2, 1, 1, -3;
  CHECK_NOTHROW(SurgeryPresentation::from_lambda(lambda, {-1, -2}, {0, 1}, {1, 0}, -1));
  CHECK_THROWS_WITH_AS(SurgeryPresentation::from_lambda(lambda, {-1, -1}, {0, 1}, {1, 0}, -1),
                       doctest::Contains("framing violated"), StructuralError);
  CHECK_THROWS_AS(SurgeryPresentation::from_lambda(lambda, {-1, -2}, {0}, {1, 0}, -1), StructuralError);
  CHECK_THROWS_AS(SurgeryPresentation::from_lambda(lambda, {-1, -2}, {0, 1}, {1, 0, 0}, -1), StructuralError);
  IntMatrix singular(2, 2);
  singular << -1, 1, 1, -1;
  CHECK_THROWS_AS(SurgeryPresentation::from_lambda(singular, {0, 0}, {0, 0}, {0, 0}, -1), SingularMatrixError);
  IntMatrix skew(2, 2);
  skew << -2, 1, 0, -2;
  CHECK_THROWS_AS(SurgeryPresentation::from_lambda(skew, {-1, -1}, {0, 0}, {0, 0}, -1), StructuralError);
  RatMatrix half(1, 1);
  half(0, 0) = Rational(-2, 1);
  CHECK_THROWS_WITH_AS(SurgeryPresentation::from_lambda_inverse(half, {0}, {0}, {0}, -1),
                       doctest::Contains("integer"), StructuralError);
}

TEST_CASE("non-unimodular framings give flagged rational values") {
  IntMatrix lambda(1, 1);
  lambda << -3;
  const auto t = tau_pair(SurgeryPresentation::from_lambda(lambda, {-2}, {1}, {1}, -1));
  // L^T Lambda^-1 L = -1/3.
  CHECK(t.self_pairing == Rational(-1, 3));
  CHECK_FALSE(t.integral());
}

TEST_CASE("sum identity") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 150; ++trial) {
    const auto d = random_presentation(rng, false);
    const auto t = tau_pair(build(d));
    CHECK(t.tau_plus + t.tau_minus == Rational(d.knot_tb) - t.self_pairing + 1);
    CHECK(2 * t.tau_plus - 1 == Rational(d.knot_tb) - t.self_pairing + t.rotation_pairing);
  }
}

TEST_CASE("negating rot swaps tau_plus and tau_minus") {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 150; ++trial) {
    const auto p = build(random_presentation(rng, false));
    const auto t = tau_pair(p);
    const auto c = tau_pair(p.conjugate());
    CHECK(c.tau_plus == t.tau_minus);
    CHECK(c.tau_minus == t.tau_plus);
    CHECK(c.as_set() == t.as_set());
  }
}

TEST_CASE("unimodular framings give integral tau") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 150; ++trial) {
    const auto d = random_presentation(rng, true);
    CHECK(abs(determinant(d.lambda)) == 1);
    CHECK(tau_pair(build(d)).integral());
  }
}

TEST_CASE("inverse and direct inputs agree") {
  std::mt19937_64 rng(54);
  for (int trial = 0; trial < 100; ++trial) {
    const auto d = random_presentation(rng, true);
    const auto direct = build(d);
    const auto inverse =
        SurgeryPresentation::from_lambda_inverse(direct.lambda_inverse(), d.tb, d.rot, d.linking, d.knot_tb);
    CHECK(inverse.lambda() == direct.lambda());
    const auto a = tau_pair(direct), b = tau_pair(inverse);
    CHECK(a.tau_plus == b.tau_plus);
    CHECK(a.tau_minus == b.tau_minus);
  }
}

TEST_CASE("Lagrangian slice genus") {
  CHECK(lagrangian_slice_genus(-1) == 0);
  CHECK(lagrangian_slice_genus(1) == 1);
  CHECK(lagrangian_slice_genus(3) == 2);
  CHECK_THROWS_AS(lagrangian_slice_genus(0), StructuralError);
  CHECK_THROWS_AS(lagrangian_slice_genus(-3), StructuralError);
}
