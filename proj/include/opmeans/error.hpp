#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace opmeans {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

// A value outside the domain of an operation: a weight outside [0,1], a
// scalar function evaluated at t <= 0, a non-finite spectral value.
class DomainError : public Error {
 public:
  using Error::Error;
};

class NotPositiveDefinite : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

// The symmetric eigensolver did not converge. Carries the offending matrix.
class SolverError : public Error {
 public:
  SolverError(const std::string& what, Eigen::MatrixXd matrix)
      : Error(what), matrix_(std::move(matrix)) {}
  const Eigen::MatrixXd& matrix() const { return matrix_; }

 private:
  Eigen::MatrixXd matrix_;
};

// A theorem predicate was called with a function or map outside the class
// for which it is claimed.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

// Malformed textual input. position() is a 0-based offset into the text.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace opmeans
