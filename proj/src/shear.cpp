#include "eggbeater/shear.hpp"

#include <algorithm>

namespace eggbeater {

Rational u0(const Rational& s) {
  if (abs(s) > 1) throw Error(ErrorKind::OutOfDomain, "u0 is defined on [-1, 1], got " + format(s));
  return 1 - abs(s);
}

Rational h0(const Rational& x, const Rational& L) {
  if (abs(x) > 1) throw Error(ErrorKind::OutOfDomain, "h0 is defined on [-1, 1], got " + format(x));
  return 2 * L * x - L * x * abs(x);
}

Rational ProfilePiece::value(const Rational& x) const {
  const Rational t = x - a;
  return c[0] + t * (c[1] + t * (c[2] + t * c[3]));
}

Rational ProfilePiece::slope(const Rational& x) const {
  const Rational t = x - a;
  return c[1] + t * (2 * c[2] + t * 3 * c[3]);
}

Rational ProfilePiece::integral_to(const Rational& x) const {
  const Rational t = x - a;
  return t * (c[0] + t * (c[1] / 2 + t * (c[2] / 3 + t * c[3] / 4)));
}

namespace {

ProfilePiece hermite(const Rational& a, const Rational& b, const Rational& p0, const Rational& m0,
                     const Rational& p1, const Rational& m1) {
  const Rational h = b - a;
  const Rational c2 = (3 * (p1 - p0) / h - 2 * m0 - m1) / h;
  const Rational c3 = (2 * (p0 - p1) / h + m0 + m1) / (h * h);
  return {a, b, {p0, m0, c2, c3}};
}

ProfilePiece line(const Rational& a, const Rational& b, const Rational& value_at_a, const Rational& slope) {
  return {a, b, {value_at_a, slope, Rational(0), Rational(0)}};
}

// u(-x) = P(x): the mirrored cubic is fixed by its values and slopes at the ends.
ProfilePiece mirror(const ProfilePiece& p) {
  return hermite(-p.b, -p.a, p.value(p.b), -p.slope(p.b), p.value(p.a), -p.slope(p.a));
}

}  // namespace

SmoothingProfile SmoothingProfile::piecewise_linear() {
  SmoothingProfile out;
  out.pieces_ = {line(-1, 0, 0, 1), line(0, 1, 1, -1)};
  out.finish();
  return out;
}

SmoothingProfile SmoothingProfile::build(const Rational& delta) {
  if (delta <= 0 || delta >= Rational(1, 4))
    throw Error(ErrorKind::InvalidArgument, "smoothing width must lie in (0, 1/4), got " + format(delta));
  const Rational& d = delta;
  // Right half. The centre cap starts at 1 - d/6 so that its area equals
  // that of u0 on [0, d]; the outer blend drops from d to a shoulder of height
  // 13d/18 and then to zero, again matching the area d^2/2 of u0 on [1-d, 1].
  std::vector<ProfilePiece> right = {
      hermite(0, d, 1 - d / 6, 0, 1 - d, -1),
      line(d, 1 - d, 1 - d, -1),
      hermite(1 - d, 1 - d / 2, d, -1, Rational(13, 18) * d, 0),
      hermite(1 - d / 2, 1 - d / 4, Rational(13, 18) * d, 0, 0, 0),
      line(1 - d / 4, 1, 0, 0),
  };
  SmoothingProfile out;
  out.delta_ = delta;
  for (auto it = right.rbegin(); it != right.rend(); ++it) out.pieces_.push_back(mirror(*it));
  out.pieces_.insert(out.pieces_.end(), right.begin(), right.end());
  out.finish();
  return out;
}

SmoothingProfile SmoothingProfile::for_params(const ModelParams& params) {
  return params.delta == 0 ? piecewise_linear() : build(params.delta);
}

void SmoothingProfile::finish() {
  prefix_.clear();
  Rational acc = 0;
  for (const auto& p : pieces_) {
    prefix_.push_back(acc);
    acc += p.integral_to(p.b);
  }
}

const ProfilePiece& SmoothingProfile::locate(const Rational& x, std::size_t* index) const {
  if (abs(x) > 1) throw Error(ErrorKind::OutOfDomain, "profile is defined on [-1, 1], got " + format(x));
  auto it = std::lower_bound(pieces_.begin(), pieces_.end(), x,
                             [](const ProfilePiece& p, const Rational& v) { return p.b < v; });
  if (it == pieces_.end()) --it;
  if (index) *index = static_cast<std::size_t>(it - pieces_.begin());
  return *it;
}

Rational SmoothingProfile::operator()(const Rational& x) const { return locate(x).value(x); }

Rational SmoothingProfile::slope(const Rational& x) const { return locate(x).slope(x); }

Rational SmoothingProfile::integral_from_minus_one(const Rational& x) const {
  std::size_t i = 0;
  const ProfilePiece& p = locate(x, &i);
  return prefix_[i] + p.integral_to(x);
}

Rational SmoothingProfile::hamiltonian(const Rational& x, const Rational& L) const {
  return -L + 2 * L * integral_from_minus_one(x);
}

bool SmoothingProfile::in_smoothing_region(const Rational& x) const {
  if (delta_ == 0) return false;
  const Rational ax = abs(x);
  return ax < delta_ || (ax > 1 - delta_ && ax < 1);
}

SmoothingProfile build_smoothing(const Rational& delta) { return SmoothingProfile::build(delta); }

PlanePoint shear_lift_power(const PlanePoint& p, std::int64_t m, const Rational& L, const SmoothingProfile& u) {
  return {p.x, p.y + 2 * L * m * u(p.x)};
}

PlanePoint shear_lift_power(const PlanePoint& p, std::int64_t m, const ModelParams& params) {
  return shear_lift_power(p, m, params.L, SmoothingProfile::for_params(params));
}

PlanePoint deck_translate(const PlanePoint& p, std::int64_t n, const Rational& L) { return {p.x, p.y - n * L}; }

namespace {
void require_open_square(const PlanePoint& p) {
  if (abs(p.x) >= 1 || abs(p.y) >= 1)
    throw Error(ErrorKind::OutOfDomain, "point (" + format(p.x) + ", " + format(p.y) + ") is outside (-1,1)^2");
}
}  // namespace

PlanePoint plane_VH(const PlanePoint& p) {
  require_open_square(p);
  return {-p.y, p.x};
}

PlanePoint plane_HV(const PlanePoint& p) {
  require_open_square(p);
  return {p.y, -p.x};
}

std::int64_t trace_winding(const PlanePoint& p, std::int64_t m, const Rational& L, const SmoothingProfile& u) {
  require_open_square(p);
  const Rational end = shear_lift_power(p, m, L, u).y;
  const Rational q = end / L + Rational(1, 2);
  Integer n = numerator(q) / denominator(q);
  if (q < 0 && Rational(n) != q) n -= 1;
  const Rational n_r(n);
  if (abs(end - n_r * L) >= 1)
    throw Error(ErrorKind::AmbiguousWinding, "endpoint y = " + format(end) + " is not within 1 of a multiple of L");
  return n.convert_to<std::int64_t>();
}

std::int64_t trace_winding(const PlanePoint& p, std::int64_t m, const ModelParams& params) {
  return trace_winding(p, m, params.L, SmoothingProfile::for_params(params));
}

}  // namespace eggbeater
