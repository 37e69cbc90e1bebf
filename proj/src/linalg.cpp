#include "clift/linalg.hpp"

#include <cmath>
#include <limits>

#include <Eigen/LU>
#include <Eigen/SVD>

namespace clift {

namespace {
constexpr double kDetTol = 1e-12;
}

Vec diag_inv(const Vec& q) {
  Vec out(q.size());
  for (Eigen::Index i = 0; i < q.size(); ++i) {
    if (q[i] == 0.0) {
      throw SingularError("diag_inv: zero entry at index " + std::to_string(i));
    }
    out[i] = 1.0 / q[i];
  }
  return out;
}

Mat invert(const Mat& m) {
  const Eigen::Index n = m.rows();
  if (n != m.cols()) throw DimensionError("invert: matrix not square");

  if (n == 1) {
    if (std::abs(m(0, 0)) < kDetTol) throw SingularError("invert: 1x1 determinant below threshold");
    Mat r(1, 1);
    r(0, 0) = 1.0 / m(0, 0);
    return r;
  }
  if (n == 2) {
    const double det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    if (std::abs(det) < kDetTol) throw SingularError("invert: 2x2 determinant below threshold");
    Mat r(2, 2);
    r << m(1, 1), -m(0, 1), -m(1, 0), m(0, 0);
    return r / det;
  }
  if (n == 3) {
    // Adjugate divided by determinant.
    const double c00 = m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
    const double c01 = m(1, 2) * m(2, 0) - m(1, 0) * m(2, 2);
    const double c02 = m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0);
    const double det = m(0, 0) * c00 + m(0, 1) * c01 + m(0, 2) * c02;
    if (std::abs(det) < kDetTol) throw SingularError("invert: 3x3 determinant below threshold");
    Mat r(3, 3);
    r(0, 0) = c00;
    r(1, 0) = c01;
    r(2, 0) = c02;
    r(0, 1) = m(0, 2) * m(2, 1) - m(0, 1) * m(2, 2);
    r(1, 1) = m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0);
    r(2, 1) = m(0, 1) * m(2, 0) - m(0, 0) * m(2, 1);
    r(0, 2) = m(0, 1) * m(1, 2) - m(0, 2) * m(1, 1);
    r(1, 2) = m(0, 2) * m(1, 0) - m(0, 0) * m(1, 2);
    r(2, 2) = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    return r / det;
  }

  Eigen::FullPivLU<Mat> lu(m);
  lu.setThreshold(kDetTol);
  if (!lu.isInvertible()) throw SingularError("invert: LU reports singular matrix");
  return lu.inverse();
}

double min_singular_value(const Mat& m) {
  Eigen::JacobiSVD<Mat> svd(m);
  return svd.singularValues().tail(1)(0);
}

double condition_number(const Mat& m) {
  Eigen::JacobiSVD<Mat> svd(m);
  const auto& sv = svd.singularValues();
  const double smin = sv(sv.size() - 1);
  if (smin <= 0.0) return std::numeric_limits<double>::infinity();
  return sv(0) / smin;
}

}  // namespace clift
