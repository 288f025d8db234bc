#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "eggbeater/word.hpp"

// Reference implementations that work on single letters, written without
// reusing any of the syllable-level algorithms they check.
namespace eggbeater::oracles {

// Letter alphabet: 'V', 'H' and their inverses 'v', 'h'.
std::string expand(const FreeWord& w);
FreeWord collapse(std::string_view letters);

std::string reduce_letters(std::string_view raw);
std::string inverse_letters(std::string_view w);

/// Every freely reduced word of length <= max_len, shortest first.
std::vector<std::string> enumerate_reduced(std::size_t max_len);

/// Conjugacy classes restricted to the ball of radius max_len, obtained as
/// connected components of the graph whose edges are conjugations by a single
/// letter. Peeling a letter off both ends shortens a word and rotating a
/// cyclically reduced word keeps its length, so every class meets the ball in
/// one component.
class ConjugacyClosure {
 public:
  explicit ConjugacyClosure(std::size_t max_len);

  const std::vector<std::string>& words() const { return words_; }
  int class_of(const std::string& w) const;
  bool conjugate(const std::string& a, const std::string& b) const { return class_of(a) == class_of(b); }
  std::vector<std::string> members(int cls) const;

 private:
  std::vector<std::string> words_;
  std::unordered_map<std::string, int> index_;
  std::vector<int> parent_;
  int find(int i) const;
};

/// Is there g with |g| <= max_conj_len and g a g^-1 = b?
bool conjugate_by_search(const std::string& a, const std::string& b, std::size_t max_conj_len);

/// The balanced representative chosen by scanning the class for words of the
/// shape H^{M_r} V^{N_r} ... H^{M_1} V^{N_1}.
std::optional<BalancedWord> balanced_by_search(const ConjugacyClosure& closure, const std::string& w);

struct WordOracleReport {
  std::size_t words = 0;
  std::size_t pairs = 0;
  std::size_t checks = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Exhaustive comparison of reduce, cyclically_reduce, are_conjugate, is_long,
/// to_balanced, tau and eta against the letter-level references.
WordOracleReport run_word_oracle(std::size_t max_len = 6);

}  // namespace eggbeater::oracles
