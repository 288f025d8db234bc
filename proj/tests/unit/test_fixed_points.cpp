#include <doctest.h>

#include "corpus.hpp"
#include "eggbeater/fixed_points.hpp"
#include "eggbeater/oracles/forward_iteration.hpp"

using namespace eggbeater;

namespace {
const Rational L{5};
BalancedWord hv() { return BalancedWord::from_word(FreeWord::parse("H V")); }
}  // namespace

TEST_CASE("sign vectors") {
  const SignVector e = SignVector::parse("+-+-");
  CHECK(e.size() == 4);
  CHECK(e[0] == 1);
  CHECK(e[1] == -1);
  CHECK(e[4] == 1);
  CHECK(e[-1] == -1);
  CHECK(e.negated().str() == "-+-+");
  CHECK(e.flipped(2).str() == "+---");
  CHECK(SignVector::all(1).size() == 4);
  CHECK(SignVector::all(2).size() == 16);
  CHECK(SignVector::all(1).front().str() == "++");
  CHECK(SignVector::all(1).back().str() == "--");
  CHECK(SignVector::top(*to_balanced(FreeWord::parse("H^2 V^3 H^-1 V"))).str() == "+-++");
  CHECK_THROWS_AS(SignVector::parse("+0"), Error);
}

TEST_CASE("one-step matrices and translations") {
  const ModelParams p{L, 1, 0};
  CHECK(build_Aj(1, SignVector::parse("++"), hv(), p) == mat2(1 - 100, 10, -10, 1));
  CHECK(build_Aj(1, SignVector::parse("+-"), hv(), p) == mat2(101, -10, -10, 1));
  const Vec2 v = build_vj(1, SignVector::parse("++"), hv(), p);
  CHECK(v == vec2(55, 5));
  for (const char* s : {"+-", "-+", "--"}) CHECK(build_vj(1, SignVector::parse(s), hv(), p)(1) == 5);
  // A^{-1} v has first coordinate 2 L k M (1 - mu).
  CHECK((inverse2(build_Aj(1, SignVector::parse("++"), hv(), p)) * v)(0) == 5);

  int checked = 0;
  for (const BalancedWord& w : testing::corpus())
    for (std::int64_t k : {1, 3, 17})
      for (const SignVector& eps : SignVector::all(w.r()))
        for (std::size_t j = 1; j <= w.r(); ++j) {
          CHECK(det2(build_Aj(j, eps, w, {L, k, 0})) == 1);
          ++checked;
        }
  CHECK(checked >= 100);
}

TEST_CASE("composition of the affine steps") {
  const ModelParams p{L, 2, 0};
  const AffineMap one = compose_Abar_vbar(SignVector::parse("+-"), hv(), p);
  CHECK(one.A == build_Aj(1, SignVector::parse("+-"), hv(), p));
  CHECK(one.v == build_vj(1, SignVector::parse("+-"), hv(), p));

  const BalancedWord w = *to_balanced(FreeWord::parse("H^2 V^3 H^-1 V"));
  for (const SignVector& eps : SignVector::all(2)) {
    const AffineMap bar = compose_Abar_vbar(eps, w, p);
    CHECK(det2(bar.A) == 1);
    for (int i = 0; i < 10; ++i) {
      const Vec2 z = vec2(Rational(i - 5, 7), Rational(2 * i + 1, 9));
      const Vec2 step1 = build_Aj(1, eps, w, p) * z + build_vj(1, eps, w, p);
      const Vec2 step2 = build_Aj(2, eps, w, p) * step1 + build_vj(2, eps, w, p);
      CHECK(bar(z) == step2);
    }
  }
}

TEST_CASE("solved fixed points for H V") {
  const ModelParams p{L, 10, Rational(1, 10)};
  const FixedPointRecord rec = solve_fixed_point(SignVector::parse("++"), hv(), p);
  CHECK(rec.valid());
  CHECK(rec.z0() == PlanePoint{Rational(1, 2), Rational(-1, 2)});
  CHECK(rec.det_Abar_minus_one == 10000);
  CHECK(rec.points.size() == 2);
  CHECK(rec.nu == std::vector<Rational>{Rational(1, 2)});
  CHECK(rec.windings == std::vector<std::int64_t>{10, 10});
  CHECK(oracles::check_record(rec, hv(), p).ok());

  const auto all = solve_all(hv(), p);
  REQUIRE(all.size() == 4);
  CHECK(all[1].z0() == PlanePoint{Rational(1, 2), Rational(1, 2)});
  CHECK(all[2].z0() == PlanePoint{Rational(-1, 2), Rational(-1, 2)});
  CHECK(all[3].z0() == PlanePoint{Rational(-1, 2), Rational(1, 2)});
  CHECK(all[1].det_Abar_minus_one == -10000);
}

TEST_CASE("minimal valid k") {
  const std::vector<std::int64_t> expected{5, 5, 5, 7, 5, 9};
  const auto words = testing::corpus();
  for (std::size_t i = 0; i < words.size(); ++i) {
    CAPTURE(words[i].str());
    const std::int64_t k_min = minimal_valid_k(words[i], L, DeltaPolicy::one_over_k());
    CHECK(k_min == expected[i]);
    CHECK(minimal_valid_k(words[i], L, DeltaPolicy::zero()) == 1);
    // Validity persists on the scanned range (monotone there).
    for (std::int64_t k = k_min; k <= 4 * k_min; ++k) CHECK(all_valid(words[i], DeltaPolicy::one_over_k().params(L, k)));
    // Below k_min either some record is invalid or delta = 1/k leaves its domain.
    if (k_min - 1 > 4) CHECK_FALSE(all_valid(words[i], DeltaPolicy::one_over_k().params(L, k_min - 1)));
    else CHECK_THROWS_AS(all_valid(words[i], DeltaPolicy::one_over_k().params(L, k_min - 1)), Error);
  }
  try {
    minimal_valid_k(words[3], L, DeltaPolicy::one_over_k(), 6);
    FAIL("expected CapExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CapExceeded);
  }
}

TEST_CASE("records are exact, nondegenerate and reproduced by forward iteration") {
  for (const BalancedWord& w : testing::corpus()) {
    const std::int64_t k_min = minimal_valid_k(w, L, DeltaPolicy::one_over_k());
    for (std::int64_t k : {k_min, 3 * k_min}) {
      const ModelParams p = DeltaPolicy::one_over_k().params(L, k);
      for (const auto& rec : solve_all(w, p)) {
        CAPTURE(w.str());
        CAPTURE(rec.eps.str());
        CHECK(rec.valid());
        CHECK(rec.det_Abar_minus_one != 0);
        CHECK_FALSE(rec.on_kink);
        CHECK(oracles::check_record(rec, w, p).ok());
        for (std::size_t i = 0; i < rec.points.size(); ++i) CHECK(sign(rec.points[i].x) == rec.eps[static_cast<std::int64_t>(i)]);
      }
    }
  }
}

TEST_CASE("invalid sign patterns show up in the flags") {
  // k = 5 is below k_min = 7 for this word under delta = 1/k, so some orbit
  // fails a check; the failure is reported through the flags, not thrown.
  const BalancedWord w = *to_balanced(FreeWord::parse("H^2 V^3 H^-1 V"));
  bool any_invalid = false;
  for (const auto& rec : solve_all(w, {L, 5, Rational(1, 5)})) any_invalid |= !rec.valid();
  CHECK(any_invalid);
  CHECK_FALSE(all_valid(w, {L, 5, Rational(1, 5)}));
}

TEST_CASE("asymptotic predictions") {
  const BalancedWord hvw = hv();
  const ModelParams p{L, 40, Rational(1, 40)};
  const auto rep = asymptotic_checks(solve_fixed_point(SignVector::parse("++"), hvw, p), hvw, p);
  CHECK(rep.trace_identity);
  // For r = 1 the leading terms are exact.
  CHECK(rep.det_rel_error == 0);
  CHECK(rep.max_point_error == 0);

  const BalancedWord w = *to_balanced(FreeWord::parse("H^2 V^3 H^-1 V"));
  Rational prev_det = -1;
  for (std::int64_t k : {7, 14, 28, 56}) {
    const ModelParams pk{L, k, Rational(1, k)};
    const auto r = asymptotic_checks(solve_fixed_point(SignVector::top(w), w, pk), w, pk);
    CHECK(r.trace_identity);
    if (prev_det >= 0) CHECK(r.det_rel_error < prev_det);
    prev_det = r.det_rel_error;
  }
  CHECK(prev_det < Rational(1, 10));
}
