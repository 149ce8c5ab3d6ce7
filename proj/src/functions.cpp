#include "opmeans/functions.hpp"

#include <cmath>

#include <fmt/format.h>

#include "text.hpp"

namespace opmeans {

std::string_view to_string(MonotoneClass klass) {
  switch (klass) {
    case MonotoneClass::kDecreasing:
      return "om_decreasing";
    case MonotoneClass::kIncreasing:
      return "om_increasing";
    case MonotoneClass::kNone:
      return "none";
  }
  return "none";
}

ScalarFunctionSpec ScalarFunctionSpec::neg_power(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw DomainError(fmt::format("neg_power requires 0 <= p <= 1, got {}", p));
  }
  return {Kind::kNegPower, p, 0.0};
}

ScalarFunctionSpec ScalarFunctionSpec::shifted_inverse(double s, double c) {
  if (!(s >= 0.0) || !(c > 0.0) || !std::isfinite(s) || !std::isfinite(c)) {
    throw DomainError(fmt::format("shifted_inverse requires s >= 0 and c > 0, got s={}, c={}", s, c));
  }
  return {Kind::kShiftedInverse, s, c};
}

ScalarFunctionSpec ScalarFunctionSpec::power(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw DomainError(fmt::format("power requires 0 <= p <= 1, got {}", p));
  }
  return {Kind::kPower, p, 0.0};
}

ScalarFunctionSpec ScalarFunctionSpec::log1p() { return {Kind::kLog1p, 0.0, 0.0}; }

ScalarFunctionSpec ScalarFunctionSpec::scaled_identity(double c) {
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw DomainError(fmt::format("scaled_identity requires c > 0, got {}", c));
  }
  return {Kind::kScaledIdentity, c, 0.0};
}

ScalarFunctionSpec ScalarFunctionSpec::exp_neg() { return {Kind::kExpNeg, 0.0, 0.0}; }

MonotoneClass ScalarFunctionSpec::klass() const {
  switch (kind_) {
    case Kind::kNegPower:
    case Kind::kShiftedInverse:
      return MonotoneClass::kDecreasing;
    case Kind::kPower:
    case Kind::kLog1p:
    case Kind::kScaledIdentity:
      return MonotoneClass::kIncreasing;
    case Kind::kExpNeg:
      return MonotoneClass::kNone;
  }
  return MonotoneClass::kNone;
}

std::string ScalarFunctionSpec::to_string() const {
  switch (kind_) {
    case Kind::kNegPower:
      return fmt::format("neg_power:{}", p1_);
    case Kind::kShiftedInverse:
      return fmt::format("shifted_inverse:{}:{}", p1_, p2_);
    case Kind::kPower:
      return fmt::format("power:{}", p1_);
    case Kind::kLog1p:
      return "log1p";
    case Kind::kScaledIdentity:
      return fmt::format("scaled_identity:{}", p1_);
    case Kind::kExpNeg:
      return "exp_neg";
  }
  return "?";
}

ScalarFunctionSpec ScalarFunctionSpec::parse(std::string_view input) {
  const auto parts = text::split(input, ':');
  const std::string_view name = parts.front().text;

  auto expect_args = [&](std::size_t n) {
    if (parts.size() != n + 1) {
      const std::size_t pos = parts.size() > n + 1 ? parts[n + 1].offset : input.size();
      throw ParseError(fmt::format("function '{}' takes {} parameter(s), got {}", name, n,
                                   parts.size() - 1),
                       pos);
    }
  };
  auto arg = [&](std::size_t i, std::string_view what) {
    return text::parse_double(parts[i], what);
  };
  // Out-of-range parameters surface as ParseError at the first parameter.
  auto build = [&](auto make) {
    try {
      return make();
    } catch (const DomainError& e) {
      throw ParseError(e.what(), parts.size() > 1 ? parts[1].offset : 0);
    }
  };

  if (name == "neg_power") {
    expect_args(1);
    const double p = arg(1, "neg_power exponent");
    return build([&] { return neg_power(p); });
  }
  if (name == "shifted_inverse") {
    expect_args(2);
    const double s = arg(1, "shifted_inverse shift");
    const double c = arg(2, "shifted_inverse scale");
    return build([&] { return shifted_inverse(s, c); });
  }
  if (name == "power") {
    expect_args(1);
    const double p = arg(1, "power exponent");
    return build([&] { return power(p); });
  }
  if (name == "log1p") {
    expect_args(0);
    return log1p();
  }
  if (name == "scaled_identity") {
    expect_args(1);
    const double c = arg(1, "scaled_identity factor");
    return build([&] { return scaled_identity(c); });
  }
  if (name == "exp_neg") {
    expect_args(0);
    return exp_neg();
  }
  throw ParseError(fmt::format("unknown function '{}'", name), 0);
}

double evaluate(const ScalarFunctionSpec& spec, double t) {
  if (!(t > 0.0)) throw DomainError(fmt::format("catalog functions need t > 0, got {}", t));
  switch (spec.kind()) {
    case ScalarFunctionSpec::Kind::kNegPower:
      return std::pow(t, -spec.param1());
    case ScalarFunctionSpec::Kind::kShiftedInverse:
      return spec.param2() / (t + spec.param1());
    case ScalarFunctionSpec::Kind::kPower:
      return std::pow(t, spec.param1());
    case ScalarFunctionSpec::Kind::kLog1p:
      return std::log1p(t);
    case ScalarFunctionSpec::Kind::kScaledIdentity:
      return spec.param1() * t;
    case ScalarFunctionSpec::Kind::kExpNeg:
      return std::exp(-t);
  }
  return 0.0;
}

PosDefMatrix lift(const ScalarFunctionSpec& spec, const PosDefMatrix& a) {
  if (spec.kind() == ScalarFunctionSpec::Kind::kPower && spec.param1() == 1.0) return a;
  return detail::assume_posdef(apply_scalar(a, [&spec](double t) { return evaluate(spec, t); }));
}

}  // namespace opmeans
