#include "opmeans/means.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "opmeans/loewner.hpp"

namespace opmeans {

namespace {

void require_same_dim(const PosDefMatrix& a, const PosDefMatrix& b, const char* op) {
  if (a.dim() != b.dim()) {
    throw DimensionError(fmt::format("{}: dimension mismatch ({} vs {})", op, a.dim(), b.dim()));
  }
}

Eigen::MatrixXd symmetrized(const Eigen::MatrixXd& m) { return 0.5 * (m + m.transpose()); }

// A sigma B = L f(L^{-1} B L^{-T}) L^T with A = L L^T. Every Kubo-Ando mean is
// invariant under this congruence, so one eigendecomposition of the
// whitened B suffices; f is the representing function of the mean.
template <typename F>
PosDefMatrix whitened_mean(const PosDefMatrix& a, const PosDefMatrix& b, F f) {
  Eigen::LLT<Eigen::MatrixXd> llt(a.matrix());
  if (llt.info() != Eigen::Success) throw NotPositiveDefinite("mean: Cholesky of A failed");
  const auto l = llt.matrixL();
  Eigen::MatrixXd half = l.solve(b.matrix());
  Eigen::MatrixXd whitened = l.solve(half.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(symmetrized(whitened),
                                                        Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw SolverError("mean: eigensolver did not converge", whitened);
  }
  Eigen::VectorXd fv(solver.eigenvalues().size());
  for (Eigen::Index i = 0; i < fv.size(); ++i) fv(i) = f(solver.eigenvalues()(i));
  Eigen::MatrixXd lu = l * solver.eigenvectors();
  return detail::assume_posdef(SymMatrix(lu * fv.asDiagonal() * lu.transpose()));
}

}  // namespace

Weight::Weight(double value) : value_(value) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw DomainError(fmt::format("Weight {} is outside [0, 1]", value));
  }
}

UnrestrictedWeight::UnrestrictedWeight(double value) : value_(value) {
  if (!std::isfinite(value)) throw DomainError("UnrestrictedWeight must be finite");
}

PathSpec::PathSpec(double upsilon) : upsilon_(upsilon) {
  if (!(upsilon >= -1.0 && upsilon <= 1.0)) {
    throw DomainError(fmt::format("path parameter upsilon = {} is outside [-1, 1]", upsilon));
  }
}

PosDefMatrix arithmetic_mean(const PosDefMatrix& a, const PosDefMatrix& b, Weight alpha) {
  require_same_dim(a, b, "arithmetic_mean");
  const double t = alpha.value();
  if (t == 0.0) return a;
  if (t == 1.0) return b;
  return detail::assume_posdef(SymMatrix((1.0 - t) * a.matrix() + t * b.matrix()));
}

PosDefMatrix geometric_mean(const PosDefMatrix& a, const PosDefMatrix& b, Weight alpha) {
  require_same_dim(a, b, "geometric_mean");
  const double t = alpha.value();
  if (t == 0.0) return a;
  if (t == 1.0) return b;
  return whitened_mean(a, b, [t](double x) { return std::pow(x, t); });
}

PosDefMatrix harmonic_mean(const PosDefMatrix& a, const PosDefMatrix& b, Weight alpha) {
  require_same_dim(a, b, "harmonic_mean");
  const double t = alpha.value();
  if (t == 0.0) return a;
  if (t == 1.0) return b;
  return inverse(arithmetic_mean(inverse(a), inverse(b), alpha));
}

PosDefMatrix detail::power_mean_formula(const PosDefMatrix& a, const PosDefMatrix& b,
                                        double upsilon, double alpha) {
  require_same_dim(a, b, "power_mean");
  if (upsilon == 0.0) throw DomainError("power_mean_formula: upsilon must be nonzero");
  // ((1 - alpha) + alpha x^u)^{1/u} = exp(log1p(alpha expm1(u log x)) / u),
  // which keeps its accuracy for small |u|.
  return whitened_mean(a, b, [upsilon, alpha](double x) {
    return std::exp(std::log1p(alpha * std::expm1(upsilon * std::log(x))) / upsilon);
  });
}

PosDefMatrix power_mean(const PosDefMatrix& a, const PosDefMatrix& b, PathSpec path,
                        Weight alpha) {
  require_same_dim(a, b, "power_mean");
  const double u = path.upsilon();
  if (u == 1.0) return arithmetic_mean(a, b, alpha);
  if (u == -1.0) return harmonic_mean(a, b, alpha);
  if (std::abs(u) < kUpsilonEps) return geometric_mean(a, b, alpha);
  const double t = alpha.value();
  if (t == 0.0) return a;
  if (t == 1.0) return b;
  return detail::power_mean_formula(a, b, u, t);
}

Weight compose_weights(Weight alpha, Weight beta, Weight gamma) {
  const double p = (1.0 - gamma.value()) * alpha.value() + gamma.value() * beta.value();
  return Weight(std::clamp(p, 0.0, 1.0));
}

double interpolation_deviation(PathSpec path, const PosDefMatrix& a, const PosDefMatrix& b,
                               Weight alpha, Weight beta, Weight gamma) {
  const PosDefMatrix left = power_mean(a, b, path, alpha);
  const PosDefMatrix right = power_mean(a, b, path, beta);
  const PosDefMatrix composed = power_mean(left, right, path, gamma);
  const PosDefMatrix direct = power_mean(a, b, path, compose_weights(alpha, beta, gamma));
  return operator_norm(composed.sym() - direct.sym());
}

double nabla_identity_deviation(const PosDefMatrix& a, const PosDefMatrix& b, Weight alpha,
                                Weight beta) {
  const PosDefMatrix m = arithmetic_mean(a, b, alpha);
  const PosDefMatrix rhs =
      arithmetic_mean(arithmetic_mean(m, a, beta), arithmetic_mean(m, b, beta), alpha);
  return operator_norm(m.sym() - rhs.sym());
}

double sharp_identity_deviation(const PosDefMatrix& a, const PosDefMatrix& b, Weight alpha,
                                Weight beta) {
  const PosDefMatrix m = geometric_mean(a, b, alpha);
  const PosDefMatrix rhs =
      geometric_mean(geometric_mean(m, a, beta), geometric_mean(m, b, beta), alpha);
  return operator_norm(m.sym() - rhs.sym());
}

}  // namespace opmeans
