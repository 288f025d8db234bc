#include "eggbeater/geometry.hpp"

#include <cstdlib>

namespace eggbeater {

void ModelParams::validate() const {
  if (L <= 4) throw Error(ErrorKind::InvalidArgument, "L must exceed 4, got " + format(L));
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "k must be positive, got " + std::to_string(k));
  if (delta < 0 || delta >= Rational(1, 4))
    throw Error(ErrorKind::InvalidArgument, "delta must lie in [0, 1/4), got " + format(delta));
}

DeltaPolicy DeltaPolicy::parse(std::string_view text) {
  if (text == "1/k") return one_over_k();
  const Rational d = parse_rational(text);
  if (d == 0) return zero();
  return fixed(d);
}

Rational DeltaPolicy::at(std::int64_t k) const {
  switch (kind) {
    case Kind::Zero: return Rational(0);
    case Kind::OneOverK: return Rational(1, k);
    case Kind::Fixed: return value;
  }
  return Rational(0);
}

std::string DeltaPolicy::str() const {
  switch (kind) {
    case Kind::Zero: return "0";
    case Kind::OneOverK: return "1/k";
    case Kind::Fixed: return format(value);
  }
  return "?";
}

Rational mod_L(const Rational& y, const Rational& L) {
  const Rational q = y / L;
  // floor of a rational via integer division of numerator by denominator
  Integer num = numerator(q);
  Integer den = denominator(q);
  Integer fl = num / den;
  if (num < 0 && fl * den != num) fl -= 1;
  return y - Rational(fl) * L;
}

AnnulusPoint AnnulusPoint::make(Annulus a, const Rational& x, const Rational& y, const Rational& L) {
  if (abs(x) > 1) throw Error(ErrorKind::OutOfDomain, "x = " + format(x) + " outside [-1, 1]");
  return {a, x, mod_L(y, L)};
}

namespace {

// Signed offset of y from a square centre c, taken in (-L/2, L/2].
Rational offset(const Rational& y, const Rational& c, const Rational& L) {
  Rational d = mod_L(y - c, L);
  if (d > L / 2) d -= L;
  return d;
}

bool in_square(const AnnulusPoint& p, const Rational& centre, const Rational& L) {
  return abs(p.x) <= 1 && abs(offset(p.y, centre, L)) <= 1;
}

}  // namespace

AnnulusPoint glue_VH(const AnnulusPoint& p, const Rational& L) {
  if (p.annulus != Annulus::V) throw Error(ErrorKind::OutOfDomain, "glue_VH expects a point of C_V");
  if (in_square(p, 0, L)) return AnnulusPoint::make(Annulus::H, -offset(p.y, 0, L), p.x, L);
  if (in_square(p, L / 2, L)) return AnnulusPoint::make(Annulus::H, -offset(p.y, L / 2, L), L / 2 + p.x, L);
  throw Error(ErrorKind::OutOfDomain, "point is outside the gluing squares of C_V");
}

AnnulusPoint glue_HV(const AnnulusPoint& p, const Rational& L) {
  if (p.annulus != Annulus::H) throw Error(ErrorKind::OutOfDomain, "glue_HV expects a point of C_H");
  if (in_square(p, 0, L)) return AnnulusPoint::make(Annulus::V, offset(p.y, 0, L), -p.x, L);
  if (in_square(p, L / 2, L)) return AnnulusPoint::make(Annulus::V, offset(p.y, L / 2, L), L / 2 - p.x, L);
  throw Error(ErrorKind::OutOfDomain, "point is outside the gluing squares of C_H");
}

const char* to_string(Region r) {
  switch (r) {
    case Region::A: return "A";
    case Region::B: return "B";
    case Region::CVOnly: return "C_V only";
    case Region::CHOnly: return "C_H only";
  }
  return "?";
}

Region classify_region(const AnnulusPoint& p, const Rational& L) {
  if (in_square(p, 0, L)) return Region::A;
  if (in_square(p, L / 2, L)) return Region::B;
  return p.annulus == Annulus::V ? Region::CVOnly : Region::CHOnly;
}

AnnulusPoint canonical_chart(const AnnulusPoint& p, const Rational& L) {
  if (p.annulus == Annulus::H && classify_region(p, L) != Region::CHOnly) return glue_HV(p, L);
  return p;
}

HomotopyWord HomotopyWord::reduce(const std::vector<HomotopySyllable>& raw) {
  HomotopyWord out;
  auto& st = out.syllables_;
  for (const auto& s : raw) {
    if (s.exponent == 0) continue;
    if (!st.empty() && st.back().gen == s.gen) {
      st.back().exponent += s.exponent;
      if (st.back().exponent == 0) st.pop_back();
    } else {
      st.push_back(s);
    }
  }
  return out;
}

std::string HomotopyWord::str() const {
  if (syllables_.empty()) return "1";
  std::string out;
  for (const auto& s : syllables_) {
    if (!out.empty()) out += ' ';
    out += static_cast<char>(s.gen);
    if (s.exponent != 1) out += "^" + std::to_string(s.exponent);
  }
  return out;
}

namespace {
std::int64_t sgn(std::int64_t v) { return (v > 0) - (v < 0); }
}  // namespace

HomotopyWord compatible_class(const BalancedWord& w, std::int64_t k) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "k must be positive");
  std::vector<HomotopySyllable> raw;
  for (std::size_t j = 0; j < w.r(); ++j) {
    raw.push_back({Generator::a, k * sgn(w.N[j])});
    raw.push_back({Generator::b, k * sgn(w.M[j])});
  }
  return HomotopyWord::reduce(raw);
}

bool is_compatible(const HomotopyWord& h, const BalancedWord& w) {
  const auto& s = h.syllables();
  if (s.size() != 2 * w.r()) return false;
  for (std::size_t j = 0; j < w.r(); ++j) {
    const auto& sa = s[2 * j];
    const auto& sb = s[2 * j + 1];
    if (sa.gen != Generator::a || sb.gen != Generator::b) return false;
    if (sgn(sa.exponent) != sgn(w.N[j]) || sgn(sb.exponent) != sgn(w.M[j])) return false;
  }
  return true;
}

namespace {

LoopSegment core_path(int index, bool reversed, const Rational& L) {
  const Annulus annulus = index <= 2 ? Annulus::V : Annulus::H;
  const Rational y0 = (index % 2 == 1) ? Rational(0) : L / 2;
  AnnulusPoint a = AnnulusPoint::make(annulus, 0, y0, L);
  AnnulusPoint b = AnnulusPoint::make(annulus, 0, y0 + L / 2, L);
  if (reversed) std::swap(a, b);
  return {index, reversed, a, b};
}

}  // namespace

std::vector<LoopSegment> reference_loop(const HomotopyWord& h, const ModelParams& params) {
  params.validate();
  std::vector<LoopSegment> out;
  for (const auto& s : h.syllables()) {
    if (s.gen == Generator::c) throw Error(ErrorKind::InvalidArgument, "reference loops are defined for a and b only");
    const int first = s.gen == Generator::a ? 1 : 3;
    for (std::int64_t i = 0; i < std::abs(s.exponent); ++i) {
      if (s.exponent > 0) {
        out.push_back(core_path(first, false, params.L));
        out.push_back(core_path(first + 1, false, params.L));
      } else {
        out.push_back(core_path(first + 1, true, params.L));
        out.push_back(core_path(first, true, params.L));
      }
    }
  }
  return out;
}

}  // namespace eggbeater
