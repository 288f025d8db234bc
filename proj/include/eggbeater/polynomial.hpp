#pragma once

#include <string>
#include <vector>

#include "eggbeater/rational.hpp"

namespace eggbeater {

/// Dense univariate polynomial with exact rational coefficients, c[i] * t^i.
class Poly {
 public:
  Poly() = default;
  Poly(const Rational& constant);  // NOLINT: implicit on purpose, constants mix freely
  explicit Poly(std::vector<Rational> coeffs);
  static Poly t() { return Poly(std::vector<Rational>{0, 1}); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Rational& coeff(int i) const;
  const Rational& leading() const { return c_.back(); }

  Rational operator()(const Rational& x) const;
  Poly derivative() const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly&, const Poly&) = default;

  /// Euclidean division; throws InvalidArgument on division by zero.
  static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
  /// Monic greatest common divisor (zero if both are zero).
  static Poly gcd(Poly a, Poly b);

  std::string str() const;

 private:
  std::vector<Rational> c_;
  void trim();
};

/// Sturm chain p, p', -rem(p, p'), ... used to count distinct real roots.
class SturmChain {
 public:
  explicit SturmChain(const Poly& p);
  /// Number of distinct roots in the half-open interval (a, b].
  int count(const Rational& a, const Rational& b) const;

 private:
  std::vector<Poly> chain_;
  int variations(const Rational& x) const;
};

/// A real root located either exactly or inside an isolating open interval
/// (lo, hi) containing no other root, with the polynomial nonzero at both ends.
struct RootLocation {
  bool exact = false;
  Rational value;  // when exact
  Rational lo;
  Rational hi;
};

/// Distinct roots of a nonzero squarefree polynomial in [a, b], in increasing order.
std::vector<RootLocation> isolate_roots(const Poly& p, const Rational& a, const Rational& b);

/// Sign of q at the root of p located by loc (p squarefree, loc produced by
/// isolate_roots for p). Exact when the root is irrational: a shared factor is
/// detected through gcd, otherwise the interval is narrowed until q has no root in it.
int sign_at_root(const Poly& p, RootLocation loc, const Poly& q);

/// p / gcd(p, p').
Poly squarefree_part(const Poly& p);

}  // namespace eggbeater
