#include "eggbeater/linalg.hpp"

namespace eggbeater {

Mat2 inverse2(const Mat2& m) {
  const Rational d = det2(m);
  if (d == 0) throw Error(ErrorKind::SingularSystem, "matrix " + format(m) + " is singular");
  return mat2(m(1, 1) / d, -m(0, 1) / d, -m(1, 0) / d, m(0, 0) / d);
}

Vec2 solve2(const Mat2& m, const Vec2& rhs) { return inverse2(m) * rhs; }

int signature_pos_minus_neg(const Mat2& q) {
  if (q(0, 1) != q(1, 0)) throw Error(ErrorKind::InvalidArgument, "form " + format(q) + " is not symmetric");
  const Rational d = det2(q);
  // Two eigenvalues of opposite sign.
  if (d < 0) return 0;
  const int t = sign(trace2(q));
  if (d > 0) return 2 * t;
  // Rank at most one: the single nonzero eigenvalue equals the trace.
  return t;
}

std::string format(const Mat2& m) {
  return "[[" + format(m(0, 0)) + ", " + format(m(0, 1)) + "], [" + format(m(1, 0)) + ", " +
         format(m(1, 1)) + "]]";
}

std::string format(const Vec2& v) { return "(" + format(v(0)) + ", " + format(v(1)) + ")"; }

}  // namespace eggbeater
