#pragma once

#include <string>
#include <string_view>

#include "opmeans/spectral.hpp"

namespace opmeans {

// Declared operator-monotonicity class of a catalog function. The class is
// trusted, not inferred.
enum class MonotoneClass { kDecreasing, kIncreasing, kNone };

std::string_view to_string(MonotoneClass klass);

// A scalar function on (0, inf) from a fixed catalog. Parameters are
// validated on construction; every member is strictly positive on (0, inf).
//
//   neg_power(p)          t^{-p},       0 <= p <= 1   decreasing
//   shifted_inverse(s,c)  c / (t + s),  s >= 0, c > 0  decreasing
//   power(p)              t^{p},        0 <= p <= 1   increasing
//   log1p                 log(1 + t)                  increasing
//   scaled_identity(c)    c t,          c > 0         increasing
//   exp_neg               e^{-t}                      none
//
// exp_neg is decreasing and log-convex as a scalar function but not
// operator monotone decreasing; it is kept to exhibit violations.
class ScalarFunctionSpec {
 public:
  enum class Kind { kNegPower, kShiftedInverse, kPower, kLog1p, kScaledIdentity, kExpNeg };

  static ScalarFunctionSpec neg_power(double p);
  static ScalarFunctionSpec shifted_inverse(double s, double c);
  static ScalarFunctionSpec power(double p);
  static ScalarFunctionSpec log1p();
  static ScalarFunctionSpec scaled_identity(double c);
  static ScalarFunctionSpec exp_neg();

  // Textual syntax: "neg_power:0.5", "shifted_inverse:1:2", "power:1",
  // "log1p", "scaled_identity:3", "exp_neg". Throws ParseError.
  static ScalarFunctionSpec parse(std::string_view text);

  Kind kind() const { return kind_; }
  MonotoneClass klass() const;
  double param1() const { return p1_; }
  double param2() const { return p2_; }

  // Canonical text, accepted back by parse().
  std::string to_string() const;

  friend bool operator==(const ScalarFunctionSpec&, const ScalarFunctionSpec&) = default;

 private:
  ScalarFunctionSpec(Kind kind, double p1, double p2) : kind_(kind), p1_(p1), p2_(p2) {}

  Kind kind_;
  double p1_;
  double p2_;
};

// Throws DomainError for t <= 0.
double evaluate(const ScalarFunctionSpec& spec, double t);

// f(A) by spectral calculus.
PosDefMatrix lift(const ScalarFunctionSpec& spec, const PosDefMatrix& a);

}  // namespace opmeans
