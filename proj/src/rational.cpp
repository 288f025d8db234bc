#include "eggbeater/rational.hpp"

#include <cctype>

namespace eggbeater {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::TrivialWord: return "TrivialWord";
    case ErrorKind::NotAPower: return "NotAPower";
    case ErrorKind::OutOfDomain: return "OutOfDomain";
    case ErrorKind::AmbiguousWinding: return "AmbiguousWinding";
    case ErrorKind::SingularSystem: return "SingularSystem";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::ChartAmbiguity: return "ChartAmbiguity";
    case ErrorKind::ZeroStrength: return "ZeroStrength";
    case ErrorKind::DegenerateP: return "DegenerateP";
    case ErrorKind::NotInSpPsi: return "NotInSpPsi";
    case ErrorKind::DegenerateEnd: return "DegenerateEnd";
    case ErrorKind::TangentialCrossing: return "TangentialCrossing";
    case ErrorKind::KTooSmall: return "KTooSmall";
    case ErrorKind::MissingRecords: return "MissingRecords";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

ParseError::ParseError(std::size_t position, const std::string& what)
    : Error(ErrorKind::Parse, what + " at position " + std::to_string(position)),
      position_(position) {}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? "1" : body.substr(slash + 1);
  if (!all_digits(num)) throw ParseError(0, "malformed rational '" + std::string(text) + "'");
  if (!all_digits(den))
    throw ParseError(slash + (text.size() - body.size()) + 1,
                     "malformed denominator in '" + std::string(text) + "'");
  const Integer q{std::string(den)};
  if (q == 0) throw ParseError(0, "zero denominator in '" + std::string(text) + "'");
  Rational value{Integer{std::string(num)}, q};
  return negative ? Rational(-value) : value;
}

std::string format(const Rational& value) { return value.str(); }

std::int64_t HalfInt::as_integer() const {
  if (!is_integer()) throw Error(ErrorKind::InvalidArgument, "half-integer " + format(*this) + " is not integral");
  return twice_ / 2;
}

std::string format(HalfInt value) {
  if (value.is_integer()) return std::to_string(value.twice() / 2);
  return std::to_string(value.twice()) + "/2";
}

std::ostream& operator<<(std::ostream& os, HalfInt value) { return os << format(value); }

}  // namespace eggbeater
