#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace eggbeater {

/// Exact rational scalar. Expression templates are disabled so values compose
/// cleanly inside Eigen expressions.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

enum class ErrorKind {
  Parse,
  InvalidArgument,
  TrivialWord,
  NotAPower,
  OutOfDomain,
  AmbiguousWinding,
  SingularSystem,
  CapExceeded,
  ChartAmbiguity,
  ZeroStrength,
  DegenerateP,
  NotInSpPsi,
  DegenerateEnd,
  TangentialCrossing,
  KTooSmall,
  MissingRecords,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library carries a kind so front ends can map
/// it to an exit status without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse error with the 0-based character offset of the offending token.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Accepts "p", "p/q", "-p/q" (q > 0 after normalization).
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string format(const Rational& value);

inline int sign(const Rational& value) { return value.sign(); }

inline Rational abs(const Rational& value) { return value.sign() < 0 ? Rational(-value) : value; }

inline double to_double(const Rational& value) { return value.convert_to<double>(); }

inline Rational rational(std::int64_t p, std::int64_t q = 1) { return Rational(p, q); }

/// A half-integer stored as twice its value.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  static constexpr HalfInt from_twice(std::int64_t twice) { return HalfInt(twice); }
  static constexpr HalfInt integer(std::int64_t value) { return HalfInt(2 * value); }
  static constexpr HalfInt half(std::int64_t halves) { return HalfInt(halves); }

  constexpr std::int64_t twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  std::int64_t as_integer() const;
  Rational as_rational() const { return Rational(twice_, 2); }

  constexpr HalfInt operator-() const { return HalfInt(-twice_); }
  constexpr HalfInt& operator+=(HalfInt other) {
    twice_ += other.twice_;
    return *this;
  }
  constexpr HalfInt& operator-=(HalfInt other) {
    twice_ -= other.twice_;
    return *this;
  }
  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return a += b; }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return a -= b; }
  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

 private:
  constexpr explicit HalfInt(std::int64_t twice) : twice_(twice) {}
  std::int64_t twice_ = 0;
};

std::string format(HalfInt value);
std::ostream& operator<<(std::ostream& os, HalfInt value);

}  // namespace eggbeater
