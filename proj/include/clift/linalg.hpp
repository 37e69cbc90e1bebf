#pragma once

#include <Eigen/Core>

#include "clift/errors.hpp"

namespace clift {

// Plants in this library are tiny (n <= 3 in the bundled examples); fixing a
// small compile-time capacity keeps every vector and matrix on the stack,
// which matters in the RK4 stage loop.
inline constexpr int kMaxDim = 8;

using Vec = Eigen::Matrix<double, Eigen::Dynamic, 1, Eigen::ColMajor, kMaxDim, 1>;
using Mat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::ColMajor, kMaxDim, kMaxDim>;

/// Componentwise reciprocal of a diagonal (stored as its entry vector).
/// Throws SingularError if any entry is zero.
Vec diag_inv(const Vec& q);

/// Inverse of a small dense matrix. Closed-form adjugate for n <= 3 with a
/// 1e-12 determinant threshold; pivoted LU for larger n.
/// Throws SingularError when the matrix is singular to working precision.
Mat invert(const Mat& m);

/// Smallest singular value (assumption audits).
double min_singular_value(const Mat& m);

/// 2-norm condition number; +inf when the matrix is numerically singular.
double condition_number(const Mat& m);

inline void require_dim(const Vec& v, Eigen::Index n, const char* what) {
  if (v.size() != n) {
    throw DimensionError(std::string(what) + ": expected length " +
                         std::to_string(n) + ", got " + std::to_string(v.size()));
  }
}

}  // namespace clift
