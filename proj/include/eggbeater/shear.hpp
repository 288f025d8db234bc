#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "eggbeater/geometry.hpp"
#include "eggbeater/rational.hpp"

namespace eggbeater {

/// Point of the universal cover [-1,1] x R of an annulus.
struct PlanePoint {
  Rational x;
  Rational y;
  friend bool operator==(const PlanePoint&, const PlanePoint&) = default;
};

Rational u0(const Rational& s);

/// -L + 2L * integral of u0 from -1 to x, i.e. 2Lx - Lx|x|.
Rational h0(const Rational& x, const Rational& L);

/// Cubic on [a, b] in the local variable x - a.
struct ProfilePiece {
  Rational a;
  Rational b;
  std::array<Rational, 4> c;

  Rational value(const Rational& x) const;
  Rational slope(const Rational& x) const;
  /// Integral of the piece from a to x.
  Rational integral_to(const Rational& x) const;
};

/// Piecewise-cubic shear profile on [-1, 1]. With delta = 0 it is u0 itself.
/// For delta > 0 it is a C^1 smoothing that agrees with u0 off
/// U_delta = (-1,-1+delta) u (-delta,delta) u (1-delta,1), is even, stays in
/// [0, 1], vanishes near the boundary and has zero net area change on each
/// component of U_delta.
class SmoothingProfile {
 public:
  static SmoothingProfile piecewise_linear();
  /// Throws InvalidArgument unless 0 < delta < 1/4.
  static SmoothingProfile build(const Rational& delta);
  /// Profile for the given parameters: u0 when delta = 0.
  static SmoothingProfile for_params(const ModelParams& params);

  const Rational& delta() const { return delta_; }
  const std::vector<ProfilePiece>& pieces() const { return pieces_; }

  Rational operator()(const Rational& x) const;
  Rational slope(const Rational& x) const;
  /// Integral of the profile from -1 to x.
  Rational integral_from_minus_one(const Rational& x) const;
  /// -L + 2L * integral_from_minus_one(x).
  Rational hamiltonian(const Rational& x, const Rational& L) const;
  bool in_smoothing_region(const Rational& x) const;

 private:
  Rational delta_{0};
  std::vector<ProfilePiece> pieces_;
  std::vector<Rational> prefix_;  // integral from -1 to the start of each piece

  void finish();
  const ProfilePiece& locate(const Rational& x, std::size_t* index = nullptr) const;
};

SmoothingProfile build_smoothing(const Rational& delta);

/// m-th iterate of the lifted time-one shear: (x, y + 2Lm u(x)).
PlanePoint shear_lift_power(const PlanePoint& p, std::int64_t m, const ModelParams& params);
PlanePoint shear_lift_power(const PlanePoint& p, std::int64_t m, const Rational& L, const SmoothingProfile& u);

/// (x, y - nL).
PlanePoint deck_translate(const PlanePoint& p, std::int64_t n, const Rational& L);

/// (x, y) -> (-y, x) and its inverse (x, y) -> (y, -x); both require the open square.
PlanePoint plane_VH(const PlanePoint& p);
PlanePoint plane_HV(const PlanePoint& p);

/// The n with y + 2Lm u(x) in (nL - 1, nL + 1); AmbiguousWinding otherwise.
std::int64_t trace_winding(const PlanePoint& p, std::int64_t m, const ModelParams& params);
std::int64_t trace_winding(const PlanePoint& p, std::int64_t m, const Rational& L, const SmoothingProfile& u);

}  // namespace eggbeater
