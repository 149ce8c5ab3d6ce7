#include "opmeans/spectral.hpp"

#include <cmath>
#include <string>

#include <fmt/format.h>

namespace opmeans {

namespace {

Eigen::MatrixXd symmetrized(const Eigen::MatrixXd& m) {
  Eigen::MatrixXd s = m + m.transpose();
  s *= 0.5;
  return s;
}

// Relative slack used to break ties between equal-magnitude components.
constexpr double kSignTieTol = 1e-10;

void normalize_signs(Eigen::MatrixXd& basis) {
  for (Eigen::Index j = 0; j < basis.cols(); ++j) {
    const double max_abs = basis.col(j).cwiseAbs().maxCoeff();
    for (Eigen::Index i = 0; i < basis.rows(); ++i) {
      if (std::abs(basis(i, j)) >= max_abs * (1.0 - kSignTieTol)) {
        if (basis(i, j) < 0.0) basis.col(j) *= -1.0;
        break;
      }
    }
  }
}

}  // namespace

SymMatrix::SymMatrix(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) {
    throw DimensionError(fmt::format("SymMatrix: matrix is {}x{}, not square", m.rows(), m.cols()));
  }
  if (m.rows() < 1) throw DimensionError("SymMatrix: dimension must be at least 1");
  if (!m.allFinite()) throw DomainError("SymMatrix: non-finite entry");
  m_ = symmetrized(m);
}

SymMatrix SymMatrix::identity(int n) {
  return SymMatrix(Eigen::MatrixXd::Identity(n, n));
}

SymMatrix SymMatrix::zero(int n) {
  return SymMatrix(Eigen::MatrixXd::Zero(n, n));
}

SymMatrix SymMatrix::scalar(double value) {
  return SymMatrix(Eigen::MatrixXd::Constant(1, 1, value));
}

SymMatrix SymMatrix::diagonal(const Eigen::VectorXd& d) {
  return SymMatrix(Eigen::MatrixXd(d.asDiagonal()));
}

SymMatrix SymMatrix::diagonal(std::initializer_list<double> d) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(d.size()));
  Eigen::Index i = 0;
  for (double x : d) v(i++) = x;
  return diagonal(v);
}

SymMatrix SymMatrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  Eigen::MatrixXd m(n, n);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Eigen::Index>(row.size()) != n) {
      throw DimensionError("SymMatrix::from_rows: ragged rows");
    }
    Eigen::Index j = 0;
    for (double x : row) m(i, j++) = x;
    ++i;
  }
  return SymMatrix(m);
}

SymMatrix operator+(const SymMatrix& x, const SymMatrix& y) {
  if (x.dim() != y.dim()) throw DimensionError("SymMatrix +: dimension mismatch");
  return SymMatrix(x.m_ + y.m_, SymMatrix::Trusted{});
}

SymMatrix operator-(const SymMatrix& x, const SymMatrix& y) {
  if (x.dim() != y.dim()) throw DimensionError("SymMatrix -: dimension mismatch");
  return SymMatrix(x.m_ - y.m_, SymMatrix::Trusted{});
}

SymMatrix operator*(double c, const SymMatrix& x) {
  return SymMatrix(c * x.m_, SymMatrix::Trusted{});
}

PosDefMatrix::PosDefMatrix(SymMatrix m) : m_(std::move(m)) {
  const Eigen::VectorXd ev = eigenvalues(m_);
  const double lo = ev(0);
  const double hi = ev(ev.size() - 1);
  if (!(hi > 0.0) || !(lo > kPdFloor * hi)) {
    throw NotPositiveDefinite(fmt::format(
        "matrix is not positive definite: lambda_min = {:.6g}, lambda_max = {:.6g}", lo, hi));
  }
}

PosDefMatrix PosDefMatrix::identity(int n) {
  return PosDefMatrix(SymMatrix::identity(n), Unchecked{});
}

PosDefMatrix PosDefMatrix::scalar(double value) {
  return PosDefMatrix(SymMatrix::scalar(value));
}

PosDefMatrix PosDefMatrix::diagonal(std::initializer_list<double> d) {
  return PosDefMatrix(SymMatrix::diagonal(d));
}

PosDefMatrix PosDefMatrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  return PosDefMatrix(SymMatrix::from_rows(rows));
}

PosDefMatrix detail::assume_posdef(SymMatrix m) {
  return PosDefMatrix(std::move(m), PosDefMatrix::Unchecked{});
}

Eigen::MatrixXd EigenSystem::reconstruct() const {
  return basis * eigenvalues.asDiagonal() * basis.transpose();
}

EigenSystem eigh(const SymMatrix& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m.matrix(), Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw SolverError("eigh: symmetric eigensolver did not converge", m.matrix());
  }
  EigenSystem es{solver.eigenvalues(), solver.eigenvectors()};
  normalize_signs(es.basis);
  return es;
}

Eigen::VectorXd eigenvalues(const SymMatrix& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m.matrix(), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw SolverError("eigenvalues: symmetric eigensolver did not converge", m.matrix());
  }
  return solver.eigenvalues();
}

SymMatrix apply_scalar(const EigenSystem& es, const std::function<double(double)>& f) {
  Eigen::VectorXd fv(es.eigenvalues.size());
  for (Eigen::Index i = 0; i < fv.size(); ++i) {
    fv(i) = f(es.eigenvalues(i));
    if (!std::isfinite(fv(i))) {
      throw DomainError(fmt::format("apply_scalar: function undefined at eigenvalue {:.17g}",
                                    es.eigenvalues(i)));
    }
  }
  return SymMatrix(es.basis * fv.asDiagonal() * es.basis.transpose());
}

SymMatrix apply_scalar(const PosDefMatrix& m, const std::function<double(double)>& f) {
  return apply_scalar(eigh(m), f);
}

SymMatrix congruence(const Eigen::MatrixXd& c, const SymMatrix& x) {
  if (c.rows() != c.cols() || c.rows() != x.dim()) {
    throw DimensionError("congruence: c must be square with the dimension of x");
  }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(c);
  if (!lu.isInvertible()) throw SingularMatrix("congruence: c is singular");
  return SymMatrix(c.transpose() * x.matrix() * c);
}

PosDefMatrix congruence(const Eigen::MatrixXd& c, const PosDefMatrix& x) {
  return detail::assume_posdef(congruence(c, x.sym()));
}

PosDefMatrix frac_power(const PosDefMatrix& m, double t) {
  if (t == 0.0) return PosDefMatrix::identity(m.dim());
  if (t == 1.0) return m;
  return detail::assume_posdef(apply_scalar(m, [t](double s) { return std::pow(s, t); }));
}

PosDefMatrix inverse(const PosDefMatrix& m) {
  Eigen::LLT<Eigen::MatrixXd> llt(m.matrix());
  if (llt.info() != Eigen::Success) throw NotPositiveDefinite("inverse: Cholesky failed");
  const auto n = m.matrix().rows();
  return detail::assume_posdef(SymMatrix(llt.solve(Eigen::MatrixXd::Identity(n, n))));
}

}  // namespace opmeans
