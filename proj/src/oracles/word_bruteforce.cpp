#include "eggbeater/oracles/word_bruteforce.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <numeric>

#include "eggbeater/rational.hpp"

namespace eggbeater::oracles {

namespace {

char inv(char c) { return std::isupper(static_cast<unsigned char>(c)) ? static_cast<char>(std::tolower(c)) : static_cast<char>(std::toupper(c)); }

constexpr char kLetters[4] = {'V', 'v', 'H', 'h'};

}  // namespace

std::string expand(const FreeWord& w) {
  std::string out;
  for (const auto& s : w.syllables()) {
    const char up = static_cast<char>(s.letter);
    const char c = s.exponent > 0 ? up : inv(up);
    out.append(static_cast<std::size_t>(std::abs(s.exponent)), c);
  }
  return out;
}

FreeWord collapse(std::string_view letters) {
  std::vector<Syllable> raw;
  for (char c : letters) {
    const Letter l = std::toupper(static_cast<unsigned char>(c)) == 'V' ? Letter::V : Letter::H;
    raw.push_back({l, std::isupper(static_cast<unsigned char>(c)) ? 1 : -1});
  }
  return FreeWord::reduce(raw);
}

std::string reduce_letters(std::string_view raw) {
  std::string st;
  for (char c : raw) {
    if (!st.empty() && st.back() == inv(c)) st.pop_back();
    else st.push_back(c);
  }
  return st;
}

std::string inverse_letters(std::string_view w) {
  std::string out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inv(*it));
  return out;
}

std::vector<std::string> enumerate_reduced(std::size_t max_len) {
  std::vector<std::string> out{""};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (char c : kLetters) {
        if (!out[i].empty() && out[i].back() == inv(c)) continue;
        out.push_back(out[i] + c);
      }
    }
    begin = end;
  }
  return out;
}

ConjugacyClosure::ConjugacyClosure(std::size_t max_len) : words_(enumerate_reduced(max_len)) {
  parent_.resize(words_.size());
  std::iota(parent_.begin(), parent_.end(), 0);
  for (std::size_t i = 0; i < words_.size(); ++i) index_.emplace(words_[i], static_cast<int>(i));
  for (std::size_t i = 0; i < words_.size(); ++i) {
    for (char c : kLetters) {
      const std::string conj = reduce_letters(std::string(1, c) + words_[i] + inv(c));
      auto it = index_.find(conj);
      if (it == index_.end()) continue;
      const int a = find(static_cast<int>(i));
      const int b = find(it->second);
      if (a != b) parent_[static_cast<std::size_t>(a)] = b;
    }
  }
}

int ConjugacyClosure::find(int i) const {
  while (parent_[static_cast<std::size_t>(i)] != i) i = parent_[static_cast<std::size_t>(i)];
  return i;
}

int ConjugacyClosure::class_of(const std::string& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) throw Error(ErrorKind::OutOfDomain, "word '" + w + "' is outside the enumerated ball");
  return find(it->second);
}

std::vector<std::string> ConjugacyClosure::members(int cls) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (find(static_cast<int>(i)) == cls) out.push_back(words_[i]);
  return out;
}

bool conjugate_by_search(const std::string& a, const std::string& b, std::size_t max_conj_len) {
  const std::string ra = reduce_letters(a);
  const std::string rb = reduce_letters(b);
  for (const std::string& g : enumerate_reduced(max_conj_len))
    if (reduce_letters(g + ra + inverse_letters(g)) == rb) return true;
  return false;
}

namespace {

// Balanced shape read directly from letters: starts with an H-type letter,
// ends with a V-type letter, and has at least two letter runs.
bool balanced_shape(const std::string& w) {
  if (w.size() < 2) return false;
  const bool starts_h = std::toupper(static_cast<unsigned char>(w.front())) == 'H';
  const bool ends_v = std::toupper(static_cast<unsigned char>(w.back())) == 'V';
  return starts_h && ends_v;
}

// (N_1, M_1, N_2, M_2, ...) read from the right end of the letter string.
std::vector<std::int64_t> exponent_key(const std::string& w) {
  std::vector<std::int64_t> runs;
  char type = 0;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    const char t = static_cast<char>(std::toupper(static_cast<unsigned char>(*it)));
    const int s = std::isupper(static_cast<unsigned char>(*it)) ? 1 : -1;
    if (t != type) {
      runs.push_back(0);
      type = t;
    }
    runs.back() += s;
  }
  return runs;
}

}  // namespace

std::optional<BalancedWord> balanced_by_search(const ConjugacyClosure& closure, const std::string& w) {
  std::optional<std::vector<std::int64_t>> best;
  for (const std::string& m : closure.members(closure.class_of(w))) {
    if (!balanced_shape(m)) continue;
    auto key = exponent_key(m);
    if (!best || key < *best) best = std::move(key);
  }
  if (!best) return std::nullopt;
  BalancedWord out;
  for (std::size_t i = 0; i + 1 < best->size(); i += 2) {
    out.N.push_back((*best)[i]);
    out.M.push_back((*best)[i + 1]);
  }
  return out;
}

WordOracleReport run_word_oracle(std::size_t max_len) {
  WordOracleReport rep;
  auto fail = [&](const std::string& msg) {
    if (rep.failures.size() < 50) rep.failures.push_back(msg);
  };

  // Reduction: round trips, idempotence and w w^-1 = 1 on the ball of radius max_len + 2.
  for (const std::string& w : enumerate_reduced(max_len + 2)) {
    const FreeWord f = collapse(w);
    ++rep.checks;
    if (expand(f) != w) fail("collapse/expand round trip for " + w);
    if (FreeWord::reduce(f.syllables()) != f) fail("reduce not idempotent on " + f.str());
    if (!(f * f.inverse()).is_identity()) fail("w w^-1 != 1 for " + f.str());
    if (FreeWord::parse(f.str()) != f) fail("parse/print round trip for " + f.str());
  }
  // Unreduced letter strings against the stack reduction.
  std::vector<std::string> raw{""};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::string> next;
    for (const auto& s : raw)
      if (s.size() == len - 1)
        for (char c : kLetters) next.push_back(s + c);
    for (const auto& s : next) {
      std::vector<Syllable> syl;
      for (char c : s)
        syl.push_back({std::toupper(static_cast<unsigned char>(c)) == 'V' ? Letter::V : Letter::H,
                       std::isupper(static_cast<unsigned char>(c)) ? 1 : -1});
      ++rep.checks;
      if (expand(FreeWord::reduce(syl)) != reduce_letters(s)) fail("reduce disagrees on raw " + s);
    }
    raw.insert(raw.end(), next.begin(), next.end());
  }

  const ConjugacyClosure closure(max_len);
  const auto& words = closure.words();
  rep.words = words.size();
  std::vector<FreeWord> fw;
  std::vector<int> cls;
  for (const auto& w : words) {
    fw.push_back(collapse(w));
    cls.push_back(closure.class_of(w));
  }

  // Per-class reference data.
  std::map<int, bool> class_long;
  std::map<int, std::int64_t> class_eta;
  std::map<int, std::int64_t> class_tau;
  for (std::size_t i = 0; i < words.size(); ++i) {
    const bool one_syllable = fw[i].size() <= 1;
    auto [it, inserted] = class_long.emplace(cls[i], !one_syllable);
    if (!inserted && one_syllable) it->second = false;
  }

  for (std::size_t i = 0; i < words.size(); ++i) {
    const std::string& w = words[i];
    const FreeWord& f = fw[i];
    const std::string cr = expand(cyclically_reduce(f));
    ++rep.checks;
    const bool cyc_reduced = cr.size() <= 1 || cr.front() != inv(cr.back());
    if (!cyc_reduced || !closure.conjugate(w, cr)) fail("cyclically_reduce(" + f.str() + ") = " + collapse(cr).str());

    if (is_long(f) != class_long[cls[i]]) fail("is_long(" + f.str() + ")");

    const auto got = to_balanced(f);
    const auto want = balanced_by_search(closure, w);
    if (got.has_value() != want.has_value() || (got && !(*got == *want)))
      fail("to_balanced(" + f.str() + ") = " + (got ? got->str() : std::string("absent")) +
           ", reference " + (want ? want->str() : std::string("absent")));

    auto [e_it, e_new] = class_eta.emplace(cls[i], eta(f));
    if (!e_new && e_it->second != eta(f)) fail("eta not conjugation invariant at " + f.str());
    if (got) {
      auto [t_it, t_new] = class_tau.emplace(cls[i], tau(*got));
      if (!t_new && t_it->second != tau(*got)) fail("tau not conjugation invariant at " + f.str());
    }
    const NormBounds nb = triple_norm_bounds(f);
    if (nb.lower > nb.upper) fail("norm bounds out of order for " + f.str());
  }

  // All unordered pairs, including each word with itself.
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i; j < words.size(); ++j) {
      ++rep.pairs;
      const bool got = are_conjugate(fw[i], fw[j]);
      if (got != (cls[i] == cls[j])) fail("are_conjugate(" + fw[i].str() + ", " + fw[j].str() + ")");
      if (got != are_conjugate(fw[j], fw[i])) fail("are_conjugate not symmetric");
    }
  }
  rep.checks += rep.pairs;
  return rep;
}

}  // namespace eggbeater::oracles
