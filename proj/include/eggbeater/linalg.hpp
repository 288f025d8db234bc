#pragma once

#include <string>

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>

#include "eggbeater/rational.hpp"

namespace eggbeater {

using Mat2 = Eigen::Matrix<Rational, 2, 2>;
using Vec2 = Eigen::Matrix<Rational, 2, 1>;

inline Mat2 mat2(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  Mat2 m;
  m << a, b, c, d;
  return m;
}

inline Vec2 vec2(const Rational& x, const Rational& y) { return Vec2(x, y); }

inline Mat2 identity2() { return Mat2::Identity(); }

inline Rational det2(const Mat2& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

inline Rational trace2(const Mat2& m) { return m(0, 0) + m(1, 1); }

/// Exact inverse; throws SingularSystem when the determinant vanishes.
Mat2 inverse2(const Mat2& m);

/// Solves m * x = rhs exactly (Cramer's rule).
Vec2 solve2(const Mat2& m, const Vec2& rhs);

/// Signature of a symmetric 2x2 form counted as positive squares minus negative squares.
int signature_pos_minus_neg(const Mat2& q);

/// "[[a, b], [c, d]]" with exact entries.
std::string format(const Mat2& m);
std::string format(const Vec2& v);

}  // namespace eggbeater
