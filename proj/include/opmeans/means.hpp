#pragma once

#include "opmeans/spectral.hpp"

namespace opmeans {

// |upsilon| below this routes power_mean to the geometric mean.
inline constexpr double kUpsilonEps = 1e-6;
// Relative tolerance for identities that pass through spectral calculus.
inline constexpr double kChainTol = 1e-9;
// Relative tolerance for identities built from additions and scalings only.
inline constexpr double kExactTol = 1e-12;

// Interpolation weight in [0, 1].
class Weight {
 public:
  explicit Weight(double value);
  double value() const { return value_; }

 private:
  double value_;
};

// Any real weight. Only the triangle-inequality predicates accept these.
class UnrestrictedWeight {
 public:
  explicit UnrestrictedWeight(double value);
  double value() const { return value_; }

 private:
  double value_;
};

// Selects the power-mean path m_{upsilon, .}: 1 arithmetic, 0 geometric,
// -1 harmonic.
class PathSpec {
 public:
  explicit PathSpec(double upsilon);

  static PathSpec arithmetic() { return PathSpec(1.0); }
  static PathSpec geometric() { return PathSpec(0.0); }
  static PathSpec harmonic() { return PathSpec(-1.0); }

  double upsilon() const { return upsilon_; }

 private:
  double upsilon_;
};

// (1 - alpha) A + alpha B.
PosDefMatrix arithmetic_mean(const PosDefMatrix& a, const PosDefMatrix& b, Weight alpha);

// A^{1/2} (A^{-1/2} B A^{-1/2})^alpha A^{1/2}.
PosDefMatrix geometric_mean(const PosDefMatrix& a, const PosDefMatrix& b, Weight alpha);

// (A^{-1} nabla_alpha B^{-1})^{-1}.
PosDefMatrix harmonic_mean(const PosDefMatrix& a, const PosDefMatrix& b, Weight alpha);

// A^{1/2} ((1 - alpha) I + alpha (A^{-1/2} B A^{-1/2})^upsilon)^{1/upsilon} A^{1/2},
// dispatching to the closed forms at upsilon = 1, -1 and |upsilon| < kUpsilonEps.
PosDefMatrix power_mean(const PosDefMatrix& a, const PosDefMatrix& b, PathSpec path,
                        Weight alpha);

// Weight (1 - gamma) alpha + gamma beta, clamped to [0, 1] against round-off.
Weight compose_weights(Weight alpha, Weight beta, Weight gamma);

// || (A s_alpha B) s_gamma (A s_beta B) - A s_{(1-gamma) alpha + gamma beta} B ||_2
double interpolation_deviation(PathSpec path, const PosDefMatrix& a, const PosDefMatrix& b,
                               Weight alpha, Weight beta, Weight gamma);

// || A nabla_alpha B - ((A nabla_alpha B) nabla_beta A) nabla_alpha ((A nabla_alpha B) nabla_beta B) ||_2
double nabla_identity_deviation(const PosDefMatrix& a, const PosDefMatrix& b, Weight alpha,
                                Weight beta);

// Same identity with every nabla replaced by sharp.
double sharp_identity_deviation(const PosDefMatrix& a, const PosDefMatrix& b, Weight alpha,
                                Weight beta);

namespace detail {
// The generic power-mean formula without any dispatch; upsilon must be
// nonzero. Exposed so the closed forms can be checked against it.
PosDefMatrix power_mean_formula(const PosDefMatrix& a, const PosDefMatrix& b, double upsilon,
                                double alpha);
}  // namespace detail

}  // namespace opmeans
