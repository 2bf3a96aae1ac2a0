#pragma once

// Tau-invariants of knots in Legendrian surgeries on the standard sphere.

#include <cstdint>
#include <optional>
#include <vector>

#include "plumbhf/lattice.hpp"

namespace plumbhf {

/// Framing data of a Legendrian surgery link L together with a knot K in its
/// complement. The framing matrix is stored both ways; either one may be the
/// input.
class SurgeryPresentation {
 public:
  static SurgeryPresentation from_lambda(IntMatrix lambda, std::vector<std::int64_t> tb,
                                         std::vector<std::int64_t> rot,
                                         std::vector<std::int64_t> linking, std::int64_t knot_tb);
  static SurgeryPresentation from_lambda_inverse(const RatMatrix& lambda_inverse, std::vector<std::int64_t> tb,
                                                 std::vector<std::int64_t> rot,
                                                 std::vector<std::int64_t> linking, std::int64_t knot_tb);

  std::size_t components() const { return tb_.size(); }
  const IntMatrix& lambda() const { return lambda_; }
  const RatMatrix& lambda_inverse() const { return lambda_inverse_; }
  const std::vector<std::int64_t>& tb() const { return tb_; }
  const std::vector<std::int64_t>& rot() const { return rot_; }
  const std::vector<std::int64_t>& linking() const { return linking_; }
  std::int64_t knot_tb() const { return knot_tb_; }
  bool given_as_inverse() const { return given_as_inverse_; }

  /// Same presentation with the rotation numbers negated (the conjugate
  /// contact structure).
  SurgeryPresentation conjugate() const;

 private:
  SurgeryPresentation() = default;
  void validate() const;

  IntMatrix lambda_;
  RatMatrix lambda_inverse_;
  std::vector<std::int64_t> tb_;
  std::vector<std::int64_t> rot_;
  std::vector<std::int64_t> linking_;
  std::int64_t knot_tb_ = -1;
  bool given_as_inverse_ = false;
};

/// The two values of 2 tau - 1 = tb(K) - L^T Lambda^-1 L +/- L^T Lambda^-1 V.
struct TauPair {
  Rational tau_plus;
  Rational tau_minus;
  Rational self_pairing;      // L^T Lambda^-1 L
  Rational rotation_pairing;  // L^T Lambda^-1 V

  /// {min, max}.
  std::pair<Rational, Rational> as_set() const {
    return tau_plus <= tau_minus ? std::make_pair(tau_plus, tau_minus) : std::make_pair(tau_minus, tau_plus);
  }
  bool integral() const { return is_integer(tau_plus) && is_integer(tau_minus); }
};

TauPair tau_pair(const SurgeryPresentation& presentation);

/// Genus of a Lagrangian filling of a Legendrian knot in the standard ball:
/// (tb + 1) / 2. Requires tb odd and >= -1.
std::int64_t lagrangian_slice_genus(std::int64_t knot_tb);

}  // namespace plumbhf
