#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eggbeater/rational.hpp"
#include "eggbeater/word.hpp"

namespace eggbeater {

/// L is the annulus length, k the iteration parameter, delta the smoothing width.
struct ModelParams {
  Rational L{5};
  std::int64_t k = 1;
  Rational delta{0};

  /// Throws InvalidArgument unless L > 4, k >= 1 and 0 <= delta < 1/4.
  void validate() const;
};

/// How delta is chosen for a given k.
struct DeltaPolicy {
  enum class Kind { Zero, OneOverK, Fixed };
  Kind kind = Kind::OneOverK;
  Rational value{0};

  static DeltaPolicy zero() { return {Kind::Zero, Rational(0)}; }
  static DeltaPolicy one_over_k() { return {Kind::OneOverK, Rational(0)}; }
  static DeltaPolicy fixed(const Rational& d) { return {Kind::Fixed, d}; }
  /// Accepts "0", "1/k" or a rational literal.
  static DeltaPolicy parse(std::string_view text);

  Rational at(std::int64_t k) const;
  std::string str() const;
  ModelParams params(const Rational& L, std::int64_t k) const { return {L, k, at(k)}; }
};

enum class Annulus : char { V = 'V', H = 'H' };

/// Point (x, [y]) of C_V or C_H; y is kept in [0, L).
struct AnnulusPoint {
  Annulus annulus;
  Rational x;
  Rational y;

  static AnnulusPoint make(Annulus a, const Rational& x, const Rational& y, const Rational& L);
  friend bool operator==(const AnnulusPoint&, const AnnulusPoint&) = default;
};

Rational mod_L(const Rational& y, const Rational& L);

/// Maps a point of S_{V,0} or S_{V,1} to the corresponding point of the H annulus.
AnnulusPoint glue_VH(const AnnulusPoint& p, const Rational& L);
/// Inverse of glue_VH.
AnnulusPoint glue_HV(const AnnulusPoint& p, const Rational& L);

enum class Region { A, B, CVOnly, CHOnly };
const char* to_string(Region r);
Region classify_region(const AnnulusPoint& p, const Rational& L);

/// Expresses a square point in V coordinates; other points are returned unchanged.
AnnulusPoint canonical_chart(const AnnulusPoint& p, const Rational& L);

enum class Generator : char { a = 'a', b = 'b', c = 'c' };

struct HomotopySyllable {
  Generator gen;
  std::int64_t exponent;
  friend bool operator==(const HomotopySyllable&, const HomotopySyllable&) = default;
};

/// Reduced word in the generators a, b, c of the fundamental group of C based at A.
class HomotopyWord {
 public:
  HomotopyWord() = default;
  static HomotopyWord reduce(const std::vector<HomotopySyllable>& raw);
  const std::vector<HomotopySyllable>& syllables() const { return syllables_; }
  std::string str() const;
  friend bool operator==(const HomotopyWord&, const HomotopyWord&) = default;

 private:
  std::vector<HomotopySyllable> syllables_;
};

/// a^{n_1} b^{m_1} ... a^{n_r} b^{m_r} with n_j = k sign(N_j), m_j = k sign(M_j).
HomotopyWord compatible_class(const BalancedWord& w, std::int64_t k);
bool is_compatible(const HomotopyWord& h, const BalancedWord& w);

/// One of the four core paths, possibly traversed backwards.
struct LoopSegment {
  int index;  // 1..4
  bool reversed;
  AnnulusPoint start;
  AnnulusPoint end;
};

std::vector<LoopSegment> reference_loop(const HomotopyWord& h, const ModelParams& params);

}  // namespace eggbeater
