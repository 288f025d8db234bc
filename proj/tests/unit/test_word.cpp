#include <doctest.h>

#include "eggbeater/word.hpp"
#include "eggbeater/rational.hpp"

using namespace eggbeater;

namespace {
FreeWord W(const char* s) { return FreeWord::parse(s); }
}  // namespace

TEST_CASE("reduce merges and cancels syllables") {
  CHECK(FreeWord::reduce({{Letter::V, 1}, {Letter::V, -1}}).is_identity());
  CHECK(FreeWord::reduce({{Letter::H, 2}, {Letter::H, 3}, {Letter::V, 1}}).str() == "H^5 V");
  CHECK(FreeWord::reduce({{Letter::H, 1}, {Letter::V, 2}, {Letter::V, -2}, {Letter::H, -1}, {Letter::V, 3}}).str() ==
        "V^3");
  CHECK(FreeWord::reduce({{Letter::V, 0}, {Letter::H, 4}}).str() == "H^4");
  const FreeWord w = W("H^2 V^3 H^-1 V");
  CHECK(FreeWord::reduce(w.syllables()) == w);
  CHECK((w * w.inverse()).is_identity());
  CHECK(w.letter_length() == 7);
}

TEST_CASE("literal syntax round-trips and reports error positions") {
  for (const char* s : {"H^2 V^3 H^-1 V", "V", "H^-12", "H V H^-1 V^-1"}) CHECK(W(s).str() == s);
  CHECK(W("H^2V^3H^-1V").str() == "H^2 V^3 H^-1 V");
  CHECK(W("").is_identity());
  CHECK(W("1").is_identity());
  CHECK(W("1").str() == "1");
  CHECK(W("H V V^-1 H").str() == "H^2");
  try {
    W("H^x");
    FAIL("no parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 2);
  }
  try {
    W("H V Q");
    FAIL("no parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("cyclic reduction") {
  CHECK(cyclically_reduce(W("V H V^-1")).str() == "H");
  CHECK(cyclically_reduce(W("H V")).str() == "H V");
  CHECK(cyclically_reduce(W("V^-2 H^3 V^5")).str() == "H^3 V^3");
  CHECK(cyclically_reduce(W("V H V")).str() == "H V^2");
}

TEST_CASE("conjugacy") {
  CHECK(are_conjugate(W("H V"), W("V H")));
  CHECK_FALSE(are_conjugate(W("H V"), W("H V^-1")));
  CHECK_FALSE(are_conjugate(W("V H V^-1 H^2"), W("H^3")));
  CHECK(are_conjugate(W("V^-2 H^3 V^5"), W("H^3 V^3")));
  CHECK(are_conjugate(W("H^2 V H V"), W("H V H^2 V")));
  CHECK_FALSE(are_conjugate(W("H^2 V H V"), W("H^2 V^2 H")));
}

TEST_CASE("long words") {
  CHECK(is_long(W("H V")));
  CHECK_FALSE(is_long(W("V H^5 V^-1")));
  CHECK_FALSE(is_long(W("")));
  CHECK(is_long(W("H V H^-1 V^-1")));
}

TEST_CASE("balanced representatives") {
  auto hv = to_balanced(W("H V"));
  REQUIRE(hv);
  CHECK(hv->N == std::vector<std::int64_t>{1});
  CHECK(hv->M == std::vector<std::int64_t>{1});
  CHECK(to_balanced(W("V H")) == hv);

  // Lexicographically least rotation of (N_1, M_1, N_2, M_2).
  auto b = to_balanced(W("H^2 V^3 H^-1 V"));
  REQUIRE(b);
  CHECK(b->N == std::vector<std::int64_t>{1, 3});
  CHECK(b->M == std::vector<std::int64_t>{-1, 2});
  CHECK(are_conjugate(b->to_word(), W("H^2 V^3 H^-1 V")));

  auto c = to_balanced(W("H V H^-1 V^-1"));
  REQUIRE(c);
  CHECK(c->N == std::vector<std::int64_t>{-1, 1});
  CHECK(c->M == std::vector<std::int64_t>{-1, 1});

  auto d = to_balanced(W("H^3 V^-2 H^-1 V^4"));
  REQUIRE(d);
  CHECK(d->N == std::vector<std::int64_t>{-2, 4});
  CHECK(d->M == std::vector<std::int64_t>{3, -1});

  CHECK_FALSE(to_balanced(W("V^3")));
  CHECK_FALSE(to_balanced(W("")));
}

TEST_CASE("from_word keeps the given rotation") {
  const BalancedWord b = BalancedWord::from_word(W("H^3 V^-2 H^-1 V^4"));
  CHECK(b.N == std::vector<std::int64_t>{4, -2});
  CHECK(b.M == std::vector<std::int64_t>{-1, 3});
  CHECK(b.str() == "H^3 V^-2 H^-1 V^4");
  CHECK_THROWS_AS(BalancedWord::from_word(W("V H")), Error);
}

TEST_CASE("tau, eta and norm bounds") {
  CHECK(tau(*to_balanced(W("H V"))) == 1);
  CHECK(tau(*to_balanced(W("H^2 V^3 H^-1 V"))) == 1);
  CHECK(tau(*to_balanced(W("H^4 V^-6 H^-3 V^5"))) == 3);
  CHECK(eta(W("H V H^-1 V^-1")) == 0);
  CHECK(eta(W("H^2 V^3")) == 5);
  CHECK(eta(W("H^2 V^3 H^-1 V")) == 5);

  auto nb = triple_norm_bounds(W("H^3"));
  CHECK(nb.lower == 3);
  CHECK(nb.upper == 3);
  nb = triple_norm_bounds(W("H V H^-1 V^-1"));
  CHECK(nb.lower == 0);
  CHECK(nb.upper == 4);
  nb = triple_norm_bounds(W("H V"));
  CHECK(nb.lower == 2);
  CHECK(nb.upper == 2);
  nb = triple_norm_bounds(W("V H^2 V^-1"));
  CHECK(nb.lower == 2);
  CHECK(nb.upper == 2);
}

TEST_CASE("invariants are constant under conjugation") {
  const std::vector<const char*> words{"H^2 V^3 H^-1 V", "H V H^-1 V^-1", "H^3 V^-2 H^-1 V^4", "H^-2 V"};
  const std::vector<const char*> conjugators{"V", "H^-2", "V^3 H", "H V^-1 H^2"};
  for (const char* s : words) {
    const FreeWord w = W(s);
    for (const char* g : conjugators) {
      const FreeWord c = W(g) * w * W(g).inverse();
      CHECK(are_conjugate(w, c));
      CHECK(eta(c) == eta(w));
      CHECK(to_balanced(c) == to_balanced(w));
      CHECK(tau(*to_balanced(c)) == tau(*to_balanced(w)));
      CHECK(triple_norm_bounds(c).upper == triple_norm_bounds(w).upper);
    }
  }
}
