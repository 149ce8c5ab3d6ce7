#include "opmeans/inequalities.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include <fmt/format.h>

namespace opmeans {

namespace {

constexpr std::array<std::string_view, 12> kTheoremNames = {
    "T21", "C22", "R23", "C24", "R25", "T25", "C27", "R27", "T31", "E18", "T32", "R33"};

void require_class(const ScalarFunctionSpec& f, MonotoneClass klass, Hypothesis hyp,
                   std::string_view theorem) {
  if (hyp == Hypothesis::kBypass || f.klass() == klass) return;
  throw HypothesisError(fmt::format("{} is claimed only for {} functions; {} is {}", theorem,
                                    to_string(klass), f.to_string(), to_string(f.klass())));
}

void require_same_dim(const SymMatrix& a, const SymMatrix& b, std::string_view what) {
  if (a.dim() != b.dim()) {
    throw DimensionError(fmt::format("{}: dimension mismatch ({} vs {})", what, a.dim(), b.dim()));
  }
}

PosDefMatrix sum(const PosDefMatrix& a, const PosDefMatrix& b) {
  return detail::assume_posdef(a.sym() + b.sym());
}

PosDefMatrix scaled(double c, const PosDefMatrix& a) { return detail::assume_posdef(c * a.sym()); }

}  // namespace

std::string_view to_string(TheoremId id) { return kTheoremNames[static_cast<std::size_t>(id)]; }

TheoremId parse_theorem_id(std::string_view text) {
  for (std::size_t i = 0; i < kTheoremNames.size(); ++i) {
    if (kTheoremNames[i] == text) return static_cast<TheoremId>(i);
  }
  throw ParseError(fmt::format("unknown theorem id '{}'", text), 0);
}

ChainReport t21_chain(const ScalarFunctionSpec& f, const PosDefMatrix& a, const PosDefMatrix& b,
                      Weight alpha, Weight beta, Hypothesis hyp) {
  require_class(f, MonotoneClass::kDecreasing, hyp, "T21");
  require_same_dim(a, b, "t21_chain");
  const PosDefMatrix m = arithmetic_mean(a, b, alpha);
  const PosDefMatrix x = arithmetic_mean(m, a, beta);
  const PosDefMatrix y = arithmetic_mean(m, b, beta);
  return check_chain(std::vector<SymMatrix>{
      lift(f, m),
      geometric_mean(lift(f, x), lift(f, y), alpha),
      geometric_mean(lift(f, a), lift(f, b), alpha),
  });
}

ChainReport r23_log_convexity(const ScalarFunctionSpec& f, const PosDefMatrix& a,
                              const PosDefMatrix& b, Weight alpha, Hypothesis hyp) {
  require_class(f, MonotoneClass::kDecreasing, hyp, "R23");
  require_same_dim(a, b, "r23_log_convexity");
  return check_chain(std::vector<SymMatrix>{
      lift(f, arithmetic_mean(a, b, alpha)),
      geometric_mean(lift(f, a), lift(f, b), alpha),
  });
}

ChainReport c22_chain(const ScalarFunctionSpec& f, const PosDefMatrix& a, const PosDefMatrix& b,
                      Hypothesis hyp) {
  require_class(f, MonotoneClass::kDecreasing, hyp, "C22");
  require_same_dim(a, b, "c22_chain");
  const Weight half(0.5);
  const PosDefMatrix fa = lift(f, a);
  const PosDefMatrix fb = lift(f, b);
  const PosDefMatrix f2a = lift(f, scaled(2.0, a));
  const PosDefMatrix f2b = lift(f, scaled(2.0, b));
  const PosDefMatrix three_a_b = scaled(0.5, sum(scaled(3.0, a), b));
  const PosDefMatrix a_three_b = scaled(0.5, sum(a, scaled(3.0, b)));
  return check_chain(std::vector<SymMatrix>{
      lift(f, sum(a, b)),
      geometric_mean(lift(f, three_a_b), lift(f, a_three_b), half),
      geometric_mean(f2a, f2b, half),
      arithmetic_mean(f2a, f2b, half),
      arithmetic_mean(fa, fb, half),
  });
}

ChainReport c24_chain(const ScalarFunctionSpec& g, const PosDefMatrix& a, const PosDefMatrix& b,
                      Weight alpha, Weight beta, Hypothesis hyp) {
  require_class(g, MonotoneClass::kIncreasing, hyp, "C24");
  require_same_dim(a, b, "c24_chain");
  const PosDefMatrix m = arithmetic_mean(a, b, alpha);
  const PosDefMatrix x = arithmetic_mean(m, a, beta);
  const PosDefMatrix y = arithmetic_mean(m, b, beta);
  // Descending chain, stored smallest first.
  return check_chain(std::vector<SymMatrix>{
      geometric_mean(lift(g, a), lift(g, b), alpha),
      geometric_mean(lift(g, x), lift(g, y), alpha),
      lift(g, m),
  });
}

ChainReport r25_harmonic_chain(const ScalarFunctionSpec& f, const PosDefMatrix& a,
                               const PosDefMatrix& b, Weight alpha, Weight beta, PathSpec sigma,
                               Hypothesis hyp) {
  require_class(f, MonotoneClass::kDecreasing, hyp, "R25");
  require_same_dim(a, b, "r25_harmonic_chain");
  const PosDefMatrix m = arithmetic_mean(a, b, alpha);
  const PosDefMatrix x = arithmetic_mean(m, a, beta);
  const PosDefMatrix y = arithmetic_mean(m, b, beta);
  const PosDefMatrix fa = lift(f, a);
  const PosDefMatrix fb = lift(f, b);
  const PosDefMatrix harmonic = harmonic_mean(fa, fb, alpha);
  ChainReport report = check_chain(std::vector<SymMatrix>{
      lift(f, m),
      harmonic_mean(lift(f, x), lift(f, y), alpha),
      harmonic,
      power_mean(fa, fb, sigma, alpha),
  });
  const PosDefMatrix symmetric = power_mean(fa, fb, sigma, Weight(0.5));
  OrderVerdict obs = loewner_leq(harmonic, symmetric);
  obs.lhs = 2;
  obs.rhs = report.terms.size();
  report.terms.push_back(symmetric);
  report.observations.push_back(obs);
  return report;
}

ChainReport t25_amgh_chain(const PosDefMatrix& a, const PosDefMatrix& b, Weight alpha,
                           Weight beta) {
  require_same_dim(a, b, "t25_amgh_chain");
  const PosDefMatrix g = geometric_mean(a, b, alpha);
  const PosDefMatrix p = geometric_mean(g, a, beta);
  const PosDefMatrix q = geometric_mean(g, b, beta);
  return check_chain(std::vector<SymMatrix>{
      harmonic_mean(a, b, alpha),
      harmonic_mean(p, q, alpha),
      g,
      arithmetic_mean(p, q, alpha),
      arithmetic_mean(a, b, alpha),
  });
}

ChainReport c27_triangle(const SymMatrix& a, const SymMatrix& b, UnrestrictedWeight alpha) {
  require_same_dim(a, b, "c27_triangle");
  const double t = alpha.value();
  const SymMatrix mid = 0.5 * (a + b);
  const SymMatrix left = t * a + (1.0 - t) * mid;
  const SymMatrix right = t * b + (1.0 - t) * mid;
  ChainReport report = check_scalar_chain({
      operator_norm(a + b),
      operator_norm(left) + operator_norm(right),
      operator_norm(a) + operator_norm(b),
  });
  if (!(t >= 0.0 && t <= 1.0)) demote_link(report, 1);
  return report;
}

ChainReport r27_reverse_triangle(const SymMatrix& a, const SymMatrix& b, UnrestrictedWeight alpha) {
  require_same_dim(a, b, "r27_reverse_triangle");
  const double t = alpha.value();
  const double norm_a = operator_norm(a);
  const double norm_b = operator_norm(b);
  const double norm_diff = operator_norm(a - b);
  // X nabla_s (2Y) = (1 - s) X + 2 s Y.
  auto middle = [t](const SymMatrix& x, const SymMatrix& y, double norm_y) {
    const SymMatrix minus = (1.0 + t) * x + (-2.0 * t) * y;
    const SymMatrix plus = (1.0 - t) * x + (2.0 * t) * y;
    return 0.5 * (operator_norm(minus) + operator_norm(plus) - 2.0 * norm_y);
  };
  ChainReport report = concat_chains(
      check_scalar_chain({norm_a - norm_b, middle(a, b, norm_b), norm_diff}),
      check_scalar_chain({norm_b - norm_a, middle(b, a, norm_a), norm_diff}));
  if (std::abs(t) > 1.0) {
    demote_link(report, 3);
    demote_link(report, 1);
  }
  return report;
}

ChainReport t31_ando(const PositiveLinearMapSpec& phi, const PosDefMatrix& a,
                     const PosDefMatrix& b, Weight alpha, Weight beta) {
  require_same_dim(a, b, "t31_ando");
  const PosDefMatrix g = geometric_mean(a, b, alpha);
  const PosDefMatrix p = geometric_mean(g, a, beta);
  const PosDefMatrix q = geometric_mean(g, b, beta);
  return check_chain(std::vector<SymMatrix>{
      apply_map_posdef(phi, g),
      geometric_mean(apply_map_posdef(phi, p), apply_map_posdef(phi, q), alpha),
      geometric_mean(apply_map_posdef(phi, a), apply_map_posdef(phi, b), alpha),
  });
}

ChainReport e18_sums(std::span<const PosDefMatrix> a_list, std::span<const PosDefMatrix> b_list,
                     Weight alpha, Weight beta) {
  if (a_list.empty() || a_list.size() != b_list.size()) {
    throw DimensionError(fmt::format("e18_sums: need equal-length non-empty lists, got {} and {}",
                                     a_list.size(), b_list.size()));
  }
  const int n = a_list.front().dim();
  SymMatrix sum_g = SymMatrix::zero(n);
  SymMatrix sum_p = SymMatrix::zero(n);
  SymMatrix sum_q = SymMatrix::zero(n);
  SymMatrix sum_a = SymMatrix::zero(n);
  SymMatrix sum_b = SymMatrix::zero(n);
  for (std::size_t j = 0; j < a_list.size(); ++j) {
    const PosDefMatrix& a = a_list[j];
    const PosDefMatrix& b = b_list[j];
    if (a.dim() != n || b.dim() != n) throw DimensionError("e18_sums: mixed dimensions");
    const PosDefMatrix g = geometric_mean(a, b, alpha);
    sum_g = sum_g + g;
    sum_p = sum_p + geometric_mean(g, a, beta);
    sum_q = sum_q + geometric_mean(g, b, beta);
    sum_a = sum_a + a;
    sum_b = sum_b + b;
  }
  return check_chain(std::vector<SymMatrix>{
      sum_g,
      geometric_mean(detail::assume_posdef(sum_p), detail::assume_posdef(sum_q), alpha),
      geometric_mean(detail::assume_posdef(sum_a), detail::assume_posdef(sum_b), alpha),
  });
}

PosDefMatrix block_diagonal(std::span<const PosDefMatrix> blocks) {
  if (blocks.empty()) throw DimensionError("block_diagonal: no blocks");
  int n = 0;
  for (const auto& b : blocks) n += b.dim();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  int start = 0;
  for (const auto& b : blocks) {
    m.block(start, start, b.dim(), b.dim()) = b.matrix();
    start += b.dim();
  }
  return detail::assume_posdef(SymMatrix(m));
}

Weight r33_weight(Weight alpha, Weight beta, Weight gamma, Weight delta) {
  const double a = alpha.value();
  const double b = beta.value();
  const double p = a * (1.0 - b) + b * ((1.0 - a) * gamma.value() + a * delta.value());
  return Weight(std::clamp(p, 0.0, 1.0));
}

ChainReport r33_general(const PositiveLinearMapSpec& phi, const PosDefMatrix& a,
                        const PosDefMatrix& b, PathSpec path, Weight alpha, Weight beta,
                        Weight gamma, Weight delta) {
  require_same_dim(a, b, "r33_general");
  const Weight p = r33_weight(alpha, beta, gamma, delta);
  const PosDefMatrix base = power_mean(a, b, path, alpha);
  const PosDefMatrix left = power_mean(base, power_mean(a, b, path, gamma), path, beta);
  const PosDefMatrix right = power_mean(base, power_mean(a, b, path, delta), path, beta);
  const PosDefMatrix phi_a = apply_map_posdef(phi, a);
  const PosDefMatrix phi_b = apply_map_posdef(phi, b);
  return check_chain(std::vector<SymMatrix>{
      apply_map_posdef(phi, power_mean(a, b, path, p)),
      power_mean(apply_map_posdef(phi, left), apply_map_posdef(phi, right), path, alpha),
      power_mean(phi_a, phi_b, path, p),
  });
}

ChainReport t32_uhlmann(const PositiveLinearMapSpec& phi, const PosDefMatrix& a,
                        const PosDefMatrix& b, PathSpec path, Weight alpha, Weight beta) {
  return r33_general(phi, a, b, path, alpha, beta, Weight(0.0), Weight(1.0));
}

void TheoremInstance::validate() const {
  const std::string_view name = to_string(id);
  auto fail = [&](std::string_view why) {
    throw DomainError(fmt::format("{} instance: {}", name, why));
  };

  bool wants_function = false, wants_map = false, wants_path = false;
  bool wants_alpha = false, wants_beta = false, wants_gd = false;
  bool positive = true, multi = false;
  MonotoneClass klass = MonotoneClass::kNone;
  switch (id) {
    case TheoremId::kT21:
      wants_function = wants_alpha = wants_beta = true;
      klass = MonotoneClass::kDecreasing;
      break;
    case TheoremId::kC22:
      wants_function = true;
      klass = MonotoneClass::kDecreasing;
      break;
    case TheoremId::kR23:
      wants_function = wants_alpha = true;
      klass = MonotoneClass::kDecreasing;
      break;
    case TheoremId::kC24:
      wants_function = wants_alpha = wants_beta = true;
      klass = MonotoneClass::kIncreasing;
      break;
    case TheoremId::kR25:
      wants_function = wants_alpha = wants_beta = wants_path = true;
      klass = MonotoneClass::kDecreasing;
      break;
    case TheoremId::kT25:
      wants_alpha = wants_beta = true;
      break;
    case TheoremId::kC27:
    case TheoremId::kR27:
      wants_alpha = true;
      positive = false;
      break;
    case TheoremId::kT31:
      wants_map = wants_alpha = wants_beta = true;
      break;
    case TheoremId::kE18:
      wants_alpha = wants_beta = true;
      multi = true;
      break;
    case TheoremId::kT32:
      wants_map = wants_path = wants_alpha = wants_beta = true;
      break;
    case TheoremId::kR33:
      wants_map = wants_path = wants_alpha = wants_beta = wants_gd = true;
      break;
  }

  if (function.has_value() != wants_function) fail(wants_function ? "needs a function" : "takes no function");
  if (map.has_value() != wants_map) fail(wants_map ? "needs a positive linear map" : "takes no map");
  if (path.has_value() != wants_path) fail(wants_path ? "needs a path" : "takes no path");
  if (alpha.has_value() != wants_alpha) fail(wants_alpha ? "needs alpha" : "takes no alpha");
  if (beta.has_value() != wants_beta) fail(wants_beta ? "needs beta" : "takes no beta");
  if (gamma.has_value() != wants_gd || delta.has_value() != wants_gd) {
    fail(wants_gd ? "needs gamma and delta" : "takes no gamma or delta");
  }
  if (wants_function) require_class(*function, klass, hypothesis, name);

  if (a_list.empty() || a_list.size() != b_list.size()) fail("needs matching non-empty a/b lists");
  if (!multi && a_list.size() != 1) fail("takes exactly one pair");
  const int n = a_list.front().dim();
  for (std::size_t j = 0; j < a_list.size(); ++j) {
    if (a_list[j].dim() != n || b_list[j].dim() != n) {
      throw DimensionError(fmt::format("{} instance: mixed dimensions", name));
    }
  }
  if (wants_map && map->in_dim() != n) {
    throw DimensionError(fmt::format("{} instance: map {} expects dimension {}, pair has {}", name,
                                     map->to_string(), map->in_dim(), n));
  }

  // Weight ranges; the triangle theorems accept any real alpha.
  auto check_weight = [&](const std::optional<double>& w) {
    if (w) (void)Weight(*w);
  };
  if (positive) check_weight(alpha);
  else if (alpha) (void)UnrestrictedWeight(*alpha);
  check_weight(beta);
  check_weight(gamma);
  check_weight(delta);
}

ChainReport evaluate(const TheoremInstance& in) {
  in.validate();
  const auto& sa = in.a_list.front();
  const auto& sb = in.b_list.front();
  auto pd_pair = [&] { return std::pair{PosDefMatrix(sa), PosDefMatrix(sb)}; };
  auto w = [](const std::optional<double>& x) { return Weight(*x); };

  switch (in.id) {
    case TheoremId::kT21: {
      auto [a, b] = pd_pair();
      return t21_chain(*in.function, a, b, w(in.alpha), w(in.beta), in.hypothesis);
    }
    case TheoremId::kC22: {
      auto [a, b] = pd_pair();
      return c22_chain(*in.function, a, b, in.hypothesis);
    }
    case TheoremId::kR23: {
      auto [a, b] = pd_pair();
      return r23_log_convexity(*in.function, a, b, w(in.alpha), in.hypothesis);
    }
    case TheoremId::kC24: {
      auto [a, b] = pd_pair();
      return c24_chain(*in.function, a, b, w(in.alpha), w(in.beta), in.hypothesis);
    }
    case TheoremId::kR25: {
      auto [a, b] = pd_pair();
      return r25_harmonic_chain(*in.function, a, b, w(in.alpha), w(in.beta), *in.path,
                                in.hypothesis);
    }
    case TheoremId::kT25: {
      auto [a, b] = pd_pair();
      return t25_amgh_chain(a, b, w(in.alpha), w(in.beta));
    }
    case TheoremId::kC27:
      return c27_triangle(sa, sb, UnrestrictedWeight(*in.alpha));
    case TheoremId::kR27:
      return r27_reverse_triangle(sa, sb, UnrestrictedWeight(*in.alpha));
    case TheoremId::kT31: {
      auto [a, b] = pd_pair();
      return t31_ando(*in.map, a, b, w(in.alpha), w(in.beta));
    }
    case TheoremId::kE18: {
      std::vector<PosDefMatrix> as, bs;
      for (const auto& x : in.a_list) as.emplace_back(x);
      for (const auto& x : in.b_list) bs.emplace_back(x);
      return e18_sums(as, bs, w(in.alpha), w(in.beta));
    }
    case TheoremId::kT32: {
      auto [a, b] = pd_pair();
      return t32_uhlmann(*in.map, a, b, *in.path, w(in.alpha), w(in.beta));
    }
    case TheoremId::kR33: {
      auto [a, b] = pd_pair();
      return r33_general(*in.map, a, b, *in.path, w(in.alpha), w(in.beta), w(in.gamma),
                         w(in.delta));
    }
  }
  throw Error("evaluate: unknown theorem id");
}

}  // namespace opmeans
