#pragma once

#include <algorithm>

#include "doctest.h"
#include "opmeans/loewner.hpp"
#include "opmeans/random.hpp"
#include "opmeans/spectral.hpp"

namespace testing {

inline double max_abs_diff(const Eigen::MatrixXd& x, const Eigen::MatrixXd& y) {
  return (x - y).cwiseAbs().maxCoeff();
}

inline double scale_of(const opmeans::SymMatrix& x, const opmeans::SymMatrix& y) {
  return std::max({opmeans::operator_norm(x), opmeans::operator_norm(y), 1.0});
}

inline double rel_dist(const opmeans::SymMatrix& x, const opmeans::SymMatrix& y) {
  return opmeans::operator_norm(x - y) / scale_of(x, y);
}

}  // namespace testing
