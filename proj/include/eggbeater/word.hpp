#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace eggbeater {

enum class Letter : char { V = 'V', H = 'H' };

struct Syllable {
  Letter letter;
  std::int64_t exponent;
  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// Reduced word in the free group on V and H, stored by syllables. Words read
/// left to right and act right to left, so the rightmost syllable is applied first.
class FreeWord {
 public:
  FreeWord() = default;

  /// Merges equal neighbours and drops zero exponents until stable.
  static FreeWord reduce(const std::vector<Syllable>& raw);

  /// Literal syntax "H^2 V^3 H^-1 V"; whitespace between syllables is optional.
  /// "1" and the empty string denote the identity.
  static FreeWord parse(std::string_view text);

  const std::vector<Syllable>& syllables() const { return syllables_; }
  std::size_t size() const { return syllables_.size(); }
  bool is_identity() const { return syllables_.empty(); }

  /// Sum of absolute exponents.
  std::int64_t letter_length() const;

  FreeWord inverse() const;
  FreeWord operator*(const FreeWord& rhs) const;

  std::string str() const;

  friend bool operator==(const FreeWord&, const FreeWord&) = default;

 private:
  std::vector<Syllable> syllables_;
};

FreeWord cyclically_reduce(const FreeWord& w);
bool are_conjugate(const FreeWord& a, const FreeWord& b);
bool is_long(const FreeWord& w);

/// Exponent form H^{M_r} V^{N_r} ... H^{M_1} V^{N_1} of a long word. N[0] is N_1.
struct BalancedWord {
  std::vector<std::int64_t> N;
  std::vector<std::int64_t> M;

  std::size_t r() const { return N.size(); }

  /// Reads a cyclically reduced word that already has balanced shape, keeping
  /// its rotation. Throws InvalidArgument otherwise.
  static BalancedWord from_word(const FreeWord& w);

  FreeWord to_word() const;
  std::string str() const { return to_word().str(); }

  friend bool operator==(const BalancedWord&, const BalancedWord&) = default;
};

/// Balanced representative of the conjugacy class, canonicalized to the
/// lexicographically least rotation of (N_1, M_1, N_2, M_2, ...). Absent for
/// words that are not long.
std::optional<BalancedWord> to_balanced(const FreeWord& w);

std::int64_t tau(const BalancedWord& w);
std::int64_t eta(const FreeWord& w);

struct NormBounds {
  std::int64_t lower;
  std::int64_t upper;
};

NormBounds triple_norm_bounds(const FreeWord& w);

}  // namespace eggbeater
