#pragma once

#include <vector>

#include "eggbeater/word.hpp"

namespace eggbeater::testing {

inline const std::vector<const char*>& corpus_literals() {
  static const std::vector<const char*> words{"H V", "H^2 V", "H V^-1", "H^2 V^3 H^-1 V", "H V H^-1 V^-1",
                                              "H^3 V^-2 H^-1 V^4"};
  return words;
}

inline std::vector<BalancedWord> corpus() {
  std::vector<BalancedWord> out;
  for (const char* s : corpus_literals()) out.push_back(*to_balanced(FreeWord::parse(s)));
  return out;
}

}  // namespace eggbeater::testing
