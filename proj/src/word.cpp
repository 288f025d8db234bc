#include "eggbeater/word.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <limits>

#include "eggbeater/rational.hpp"

namespace eggbeater {

FreeWord FreeWord::reduce(const std::vector<Syllable>& raw) {
  // A single stack pass is enough: a merge can only expose the new top to the
  // next incoming syllable.
  FreeWord out;
  auto& st = out.syllables_;
  for (const Syllable& s : raw) {
    if (s.exponent == 0) continue;
    if (!st.empty() && st.back().letter == s.letter) {
      st.back().exponent += s.exponent;
      if (st.back().exponent == 0) st.pop_back();
    } else {
      st.push_back(s);
    }
  }
  return out;
}

FreeWord FreeWord::parse(std::string_view text) {
  std::vector<Syllable> raw;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  if (i < text.size() && text[i] == '1') {
    ++i;
    skip_space();
    if (i != text.size()) throw ParseError(i, "unexpected input after identity literal");
    return {};
  }
  while (true) {
    skip_space();
    if (i == text.size()) break;
    const char c = text[i];
    if (c != 'V' && c != 'H') throw ParseError(i, std::string("expected V or H, found '") + c + "'");
    const Letter letter = c == 'V' ? Letter::V : Letter::H;
    ++i;
    std::int64_t exponent = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      const std::size_t start = i;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
      const std::size_t digits = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == digits) throw ParseError(start, "expected integer exponent");
      if (i - digits > 18) throw ParseError(start, "exponent too large");
      exponent = std::strtoll(std::string(text.substr(start, i - start)).c_str(), nullptr, 10);
      if (exponent == 0) throw ParseError(start, "zero exponent");
    }
    raw.push_back({letter, exponent});
  }
  return reduce(raw);
}

std::int64_t FreeWord::letter_length() const {
  std::int64_t n = 0;
  for (const auto& s : syllables_) n += std::abs(s.exponent);
  return n;
}

FreeWord FreeWord::inverse() const {
  FreeWord out;
  out.syllables_.reserve(syllables_.size());
  for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it)
    out.syllables_.push_back({it->letter, -it->exponent});
  return out;
}

FreeWord FreeWord::operator*(const FreeWord& rhs) const {
  std::vector<Syllable> raw = syllables_;
  raw.insert(raw.end(), rhs.syllables_.begin(), rhs.syllables_.end());
  return reduce(raw);
}

std::string FreeWord::str() const {
  if (syllables_.empty()) return "1";
  std::string out;
  for (const auto& s : syllables_) {
    if (!out.empty()) out += ' ';
    out += static_cast<char>(s.letter);
    if (s.exponent != 1) out += "^" + std::to_string(s.exponent);
  }
  return out;
}

FreeWord cyclically_reduce(const FreeWord& w) {
  FreeWord cur = w;
  // Conjugating by the first syllable moves it onto the end, where it merges
  // with the last syllable whenever the two share a letter.
  while (cur.size() >= 2 && cur.syllables().front().letter == cur.syllables().back().letter) {
    std::vector<Syllable> raw(cur.syllables().begin() + 1, cur.syllables().end());
    raw.push_back(cur.syllables().front());
    cur = FreeWord::reduce(raw);
  }
  return cur;
}

bool are_conjugate(const FreeWord& a, const FreeWord& b) {
  const FreeWord ca = cyclically_reduce(a);
  const FreeWord cb = cyclically_reduce(b);
  if (ca.size() != cb.size()) return false;
  if (ca.size() <= 1) return ca == cb;
  // With at least two syllables the first and last letters differ, so every
  // letter-level rotation that keeps the word cyclically reduced is a syllable rotation.
  const auto& sa = ca.syllables();
  const auto& sb = cb.syllables();
  const std::size_t n = sa.size();
  for (std::size_t shift = 0; shift < n; ++shift) {
    bool same = true;
    for (std::size_t i = 0; i < n && same; ++i) same = sa[(i + shift) % n] == sb[i];
    if (same) return true;
  }
  return false;
}

bool is_long(const FreeWord& w) { return cyclically_reduce(w).size() >= 2; }

BalancedWord BalancedWord::from_word(const FreeWord& w) {
  const auto& s = w.syllables();
  if (s.size() < 2 || s.size() % 2 != 0 || s.front().letter != Letter::H || s.back().letter != Letter::V)
    throw Error(ErrorKind::InvalidArgument, "'" + w.str() + "' is not of the form H^M_r V^N_r ... H^M_1 V^N_1");
  BalancedWord out;
  for (std::size_t i = s.size(); i >= 2; i -= 2) {
    out.N.push_back(s[i - 1].exponent);
    out.M.push_back(s[i - 2].exponent);
  }
  return out;
}

FreeWord BalancedWord::to_word() const {
  std::vector<Syllable> raw;
  for (std::size_t j = r(); j-- > 0;) {
    raw.push_back({Letter::H, M[j]});
    raw.push_back({Letter::V, N[j]});
  }
  return FreeWord::reduce(raw);
}

std::optional<BalancedWord> to_balanced(const FreeWord& w) {
  const FreeWord c = cyclically_reduce(w);
  if (c.size() < 2) return std::nullopt;
  const auto& s = c.syllables();
  const std::size_t n = s.size();
  std::optional<BalancedWord> best;
  for (std::size_t shift = 0; shift < n; ++shift) {
    if (s[shift].letter != Letter::H) continue;
    std::vector<Syllable> rotated;
    for (std::size_t i = 0; i < n; ++i) rotated.push_back(s[(i + shift) % n]);
    BalancedWord candidate = BalancedWord::from_word(FreeWord::reduce(rotated));
    auto key = [](const BalancedWord& b) {
      std::vector<std::int64_t> k;
      for (std::size_t j = 0; j < b.r(); ++j) {
        k.push_back(b.N[j]);
        k.push_back(b.M[j]);
      }
      return k;
    };
    if (!best || key(candidate) < key(*best)) best = std::move(candidate);
  }
  return best;
}

std::int64_t tau(const BalancedWord& w) {
  std::int64_t m = std::numeric_limits<std::int64_t>::max();
  for (std::size_t j = 0; j < w.r(); ++j) m = std::min({m, std::abs(w.N[j]), std::abs(w.M[j])});
  return m;
}

std::int64_t eta(const FreeWord& w) {
  std::int64_t v = 0;
  std::int64_t h = 0;
  for (const auto& s : w.syllables()) (s.letter == Letter::V ? v : h) += s.exponent;
  return std::abs(v) + std::abs(h);
}

NormBounds triple_norm_bounds(const FreeWord& w) {
  return {eta(w), cyclically_reduce(w).letter_length()};
}

}  // namespace eggbeater
