#include <doctest.h>

#include "eggbeater/polynomial.hpp"

using namespace eggbeater;

namespace {
const Poly t = Poly::t();
}

TEST_CASE("polynomial arithmetic") {
  const Poly p = t * t - Poly(2);
  CHECK(p.degree() == 2);
  CHECK(p(Rational(3)) == 7);
  CHECK(p.derivative() == Poly(2) * t);
  CHECK((p - p).is_zero());
  CHECK(Poly().degree() == -1);
  CHECK((t + Poly(1)) * (t - Poly(1)) == t * t - Poly(1));

  Poly q, r;
  Poly::divmod(t * t * t - Poly(1), t - Poly(1), q, r);
  CHECK(q == t * t + t + Poly(1));
  CHECK(r.is_zero());
  CHECK_THROWS_AS(Poly::divmod(t, Poly(), q, r), Error);

  const Poly g = Poly::gcd((t - Poly(1)) * (t - Poly(2)), (t - Poly(1)) * (t + Poly(3)) * Poly(Rational(5)));
  CHECK(g == t - Poly(1));
  CHECK(squarefree_part((t - Poly(1)) * (t - Poly(1)) * (t + Poly(1))).degree() == 2);
}

TEST_CASE("Sturm counting and root isolation") {
  const Poly p = t * t - Poly(2);
  CHECK(SturmChain(p).count(0, 2) == 1);
  CHECK(SturmChain(p).count(-2, 2) == 2);
  CHECK(SturmChain(p).count(2, 3) == 0);

  const auto roots = isolate_roots(p, 0, 2);
  REQUIRE(roots.size() == 1);
  CHECK_FALSE(roots[0].exact);
  CHECK(roots[0].lo * roots[0].lo < 2);
  CHECK(roots[0].hi * roots[0].hi > 2);
  CHECK(sign_at_root(p, roots[0], t - Poly(1)) == 1);
  CHECK(sign_at_root(p, roots[0], t - Poly(Rational(3, 2))) == -1);
  // q shares the root with p.
  CHECK(sign_at_root(p, roots[0], p * (t + Poly(7))) == 0);

  const auto exact = isolate_roots(t * t - Poly(Rational(1, 4)), 0, 1);
  REQUIRE(exact.size() == 1);
  CHECK(exact[0].exact);
  CHECK(exact[0].value == Rational(1, 2));

  // Roots at the interval ends are included.
  const auto ends = isolate_roots(t * (t - Poly(1)), 0, 1);
  REQUIRE(ends.size() == 2);
  CHECK(ends[0].value == 0);
  CHECK(ends[1].value == 1);
}
