#pragma once

#include <functional>
#include <initializer_list>

#include <Eigen/Dense>

#include "opmeans/error.hpp"

namespace opmeans {

// Relative floor on lambda_min / lambda_max for positive definiteness.
inline constexpr double kPdFloor = 1e-10;
// Reconstruction / orthogonality tolerance of the eigensolver.
inline constexpr double kReconTol = 1e-10;

// Real symmetric matrix. The entries are symmetrized as (M + M^T) / 2 on
// construction, so entry (i, j) equals entry (j, i) bit for bit.
class SymMatrix {
 public:
  explicit SymMatrix(const Eigen::MatrixXd& m);

  static SymMatrix identity(int n);
  static SymMatrix zero(int n);
  static SymMatrix scalar(double value);
  static SymMatrix diagonal(const Eigen::VectorXd& d);
  static SymMatrix diagonal(std::initializer_list<double> d);
  static SymMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows);

  int dim() const { return static_cast<int>(m_.rows()); }
  const Eigen::MatrixXd& matrix() const { return m_; }
  double operator()(int i, int j) const { return m_(i, j); }

  friend SymMatrix operator+(const SymMatrix& x, const SymMatrix& y);
  friend SymMatrix operator-(const SymMatrix& x, const SymMatrix& y);
  friend SymMatrix operator*(double c, const SymMatrix& x);

 private:
  struct Trusted {};
  SymMatrix(Eigen::MatrixXd m, Trusted) : m_(std::move(m)) {}

  Eigen::MatrixXd m_;
};

class PosDefMatrix;

namespace detail {
// Wraps a matrix that is positive definite by construction (a mean or a
// positive function of positive definite arguments) without re-checking.
PosDefMatrix assume_posdef(SymMatrix m);
}  // namespace detail

// Symmetric matrix with lambda_min > kPdFloor * lambda_max.
class PosDefMatrix {
 public:
  // Throws NotPositiveDefinite when the floor is violated.
  explicit PosDefMatrix(SymMatrix m);

  static PosDefMatrix identity(int n);
  static PosDefMatrix scalar(double value);
  static PosDefMatrix diagonal(std::initializer_list<double> d);
  static PosDefMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows);

  const SymMatrix& sym() const { return m_; }
  operator const SymMatrix&() const { return m_; }  // NOLINT(google-explicit-constructor)
  int dim() const { return m_.dim(); }
  const Eigen::MatrixXd& matrix() const { return m_.matrix(); }
  double operator()(int i, int j) const { return m_(i, j); }

 private:
  struct Unchecked {};
  PosDefMatrix(SymMatrix m, Unchecked) : m_(std::move(m)) {}
  friend PosDefMatrix detail::assume_posdef(SymMatrix m);

  SymMatrix m_;
};

// Eigenvalues ascending; columns of basis are the matching unit
// eigenvectors, each signed so that its largest-magnitude component is
// positive (the first such component on ties).
struct EigenSystem {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXd basis;

  Eigen::MatrixXd reconstruct() const;
};

EigenSystem eigh(const SymMatrix& m);

// Eigenvalues only, ascending. Cheaper than eigh.
Eigen::VectorXd eigenvalues(const SymMatrix& m);

// basis * diag(f(lambda_i)) * basis^T. Throws DomainError when f is not
// finite at some eigenvalue.
SymMatrix apply_scalar(const EigenSystem& es, const std::function<double(double)>& f);
SymMatrix apply_scalar(const PosDefMatrix& m, const std::function<double(double)>& f);

// c^T x c. Throws SingularMatrix when c is not invertible.
SymMatrix congruence(const Eigen::MatrixXd& c, const SymMatrix& x);
PosDefMatrix congruence(const Eigen::MatrixXd& c, const PosDefMatrix& x);

// m^t by spectral calculus; t = 0 gives the identity and t = 1 gives m.
PosDefMatrix frac_power(const PosDefMatrix& m, double t);

// Inverse of a positive definite matrix.
PosDefMatrix inverse(const PosDefMatrix& m);

}  // namespace opmeans
