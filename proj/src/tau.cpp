#include "plumbhf/tau.hpp"

#include <string>

namespace plumbhf {

namespace {

IntVector as_int_vector(const std::vector<std::int64_t>& values) { return to_vector<BigInt>(values); }

}  // namespace

SurgeryPresentation SurgeryPresentation::from_lambda(IntMatrix lambda, std::vector<std::int64_t> tb,
                                                     std::vector<std::int64_t> rot,
                                                     std::vector<std::int64_t> linking, std::int64_t knot_tb) {
  SurgeryPresentation p;
  if (lambda.rows() != lambda.cols()) throw StructuralError("framing matrix must be square");
  if (lambda != lambda.transpose()) throw StructuralError("framing matrix must be symmetric");
  const BigInt det = determinant(lambda);
  if (det == 0) throw SingularMatrixError(det);
  p.lambda_inverse_ = inverse_exact(lambda);
  p.lambda_ = std::move(lambda);
  p.tb_ = std::move(tb);
  p.rot_ = std::move(rot);
  p.linking_ = std::move(linking);
  p.knot_tb_ = knot_tb;
  p.validate();
  return p;
}

SurgeryPresentation SurgeryPresentation::from_lambda_inverse(const RatMatrix& lambda_inverse,
                                                             std::vector<std::int64_t> tb,
                                                             std::vector<std::int64_t> rot,
                                                             std::vector<std::int64_t> linking,
                                                             std::int64_t knot_tb) {
  if (lambda_inverse.rows() != lambda_inverse.cols()) throw StructuralError("inverse framing matrix must be square");
  const RatMatrix lambda = inverse_exact(lambda_inverse);
  IntMatrix integral(lambda.rows(), lambda.cols());
  for (Eigen::Index i = 0; i < lambda.rows(); ++i) {
    for (Eigen::Index j = 0; j < lambda.cols(); ++j) {
      if (!is_integer(lambda(i, j))) throw StructuralError("inverse framing matrix does not invert to an integer matrix");
      integral(i, j) = boost::multiprecision::numerator(lambda(i, j));
    }
  }
  auto p = from_lambda(std::move(integral), std::move(tb), std::move(rot), std::move(linking), knot_tb);
  p.lambda_inverse_ = lambda_inverse;
  p.given_as_inverse_ = true;
  return p;
}

void SurgeryPresentation::validate() const {
  const auto n = static_cast<std::size_t>(lambda_.rows());
  if (tb_.size() != n || rot_.size() != n || linking_.size() != n) {
    throw StructuralError("tb, rot and linking must each have one entry per surgery component (" +
                          std::to_string(n) + ")");
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto ii = static_cast<Eigen::Index>(i);
    if (lambda_(ii, ii) != BigInt(tb_[i] - 1)) {
      throw StructuralError("Legendrian surgery framing violated at component " + std::to_string(i) +
                            ": lambda_ii = " + lambda_(ii, ii).str() + ", tb - 1 = " + std::to_string(tb_[i] - 1));
    }
  }
}

SurgeryPresentation SurgeryPresentation::conjugate() const {
  SurgeryPresentation p = *this;
  for (auto& r : p.rot_) r = -r;
  return p;
}

TauPair tau_pair(const SurgeryPresentation& presentation) {
  const IntVector link = as_int_vector(presentation.linking());
  const IntVector rot = as_int_vector(presentation.rot());
  TauPair out;
  out.self_pairing = pairing(link, presentation.lambda_inverse(), link);
  out.rotation_pairing = pairing(link, presentation.lambda_inverse(), rot);
  const Rational base = Rational(presentation.knot_tb()) - out.self_pairing;
  out.tau_plus = (base + out.rotation_pairing + 1) / 2;
  out.tau_minus = (base - out.rotation_pairing + 1) / 2;
  return out;
}

std::int64_t lagrangian_slice_genus(std::int64_t knot_tb) {
  if (knot_tb % 2 == 0) {
    throw StructuralError("tb = " + std::to_string(knot_tb) + " is even; a Lagrangian filling needs odd tb");
  }
  if (knot_tb < -1) {
    throw StructuralError("tb = " + std::to_string(knot_tb) + " < -1; no Lagrangian filling has negative genus");
  }
  return (knot_tb + 1) / 2;
}

}  // namespace plumbhf
