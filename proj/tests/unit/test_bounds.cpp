#include <doctest.h>

#include "corpus.hpp"
#include "eggbeater/bounds.hpp"

using namespace eggbeater;

namespace {
const Rational L{5};
FreeWord W(const char* s) { return FreeWord::parse(s); }
}  // namespace

TEST_CASE("boundary depth bound") {
  const BalancedWord hv = *to_balanced(W("H V"));
  CHECK(boundary_depth_bound(hv, 100, L, 5) == 125);
  CHECK(boundary_depth_bound(hv, 100, L, DeltaPolicy::one_over_k()) == 125);
  const BalancedWord w = *to_balanced(W("H^2 V^3 H^-1 V"));
  for (std::int64_t k : {7, 8, 50}) CHECK(boundary_depth_bound(w, k, L, 7) == L * k / 4);
  try {
    boundary_depth_bound(w, 6, L, DeltaPolicy::one_over_k());
    FAIL("expected KTooSmall");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::KTooSmall);
  }
}

TEST_CASE("action gap") {
  const BalancedWord hv = *to_balanced(W("H V"));
  const ModelParams p{L, 10, Rational(1, 10)};
  const GapReport g = action_gap(solve_all(hv, p), hv, p);
  CHECK(g.gap == 25);  // L k / 2
  CHECK(g.bound == Rational(25, 2));
  CHECK(g.exceeds_bound);
  CHECK(g.top.str() == "++");

  for (const BalancedWord& w : testing::corpus()) {
    const std::int64_t k_min = minimal_valid_k(w, L, DeltaPolicy::one_over_k());
    for (std::int64_t k = k_min; k <= 8 * k_min; k *= 2) {
      const ModelParams pk = DeltaPolicy::one_over_k().params(L, k);
      CHECK(action_gap(solve_all(w, pk), w, pk).exceeds_bound);
    }
  }

  auto partial = solve_all(hv, p);
  partial.pop_back();
  try {
    action_gap(partial, hv, p);
    FAIL("expected MissingRecords");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MissingRecords);
  }
}

TEST_CASE("power words") {
  const Rational area = default_total_area(L);
  CHECK(area_of_C(L) == 12);
  CHECK(area == 48);
  const PowerBound v = power_word_bound(W("V"), 1, L, area);
  CHECK(v.letter == Letter::V);
  CHECK(v.n == 1);
  CHECK(v.shift == 0);
  CHECK(v.c_minus == -L);
  CHECK(v.c_plus == L);
  CHECK(v.bound == L);
  CHECK(power_word_bound(W("V^-1"), 7, L, area).bound == power_word_bound(W("V"), 7, L, area).bound);
  CHECK(power_word_bound(W("H V^3 H^-1"), 2, L, area).bound == 30);
  CHECK(power_word_bound(W("V^3"), 4, L, area).bound == 4 * power_word_bound(W("V^3"), 1, L, area).bound);
  CHECK_THROWS_AS(power_word_bound(W("H V"), 1, L, area), Error);
  CHECK_THROWS_AS(power_word_bound(W("V"), 1, L, 2 * L), Error);
}

TEST_CASE("grids and slopes") {
  CHECK(geometric_grid(5, 320, 2) == std::vector<std::int64_t>{5, 10, 20, 40, 80, 160, 320});
  CHECK(geometric_grid(3, 10, 3) == std::vector<std::int64_t>{3, 9});
  CHECK_THROWS_AS(geometric_grid(0, 10, 2), Error);
  CHECK(least_squares_slope({1, 2, 3}, {Rational(2), Rational(4), Rational(6)}) == 2);
  CHECK(least_squares_slope({1, 2, 3}, {Rational(1), Rational(1), Rational(4)}) == Rational(3, 2));
  CHECK(least_squares_slope({4}, {Rational(2)}) == Rational(1, 2));
}

TEST_CASE("growth scans") {
  ScanOptions opts;
  const auto grid = [](std::int64_t k_min) { return geometric_grid(k_min, 64 * k_min, 2); };

  const GrowthScan hv = growth_scan(W("H V"), grid(5), opts);
  CHECK(hv.branch == "long");
  CHECK(hv.k_min == 5);
  CHECK(hv.fitted_slope == Rational(5, 4));
  CHECK(hv.theoretical_slope == Rational(5, 4));
  REQUIRE(hv.rows.back().action_gap);
  CHECK(*hv.rows.back().action_gap / hv.rows.back().k == Rational(5, 2));

  const GrowthScan comm = growth_scan(W("H V H^-1 V^-1"), grid(5), opts);
  CHECK(eta(W("H V H^-1 V^-1")) == 0);
  CHECK(comm.fitted_slope > 0);
  CHECK(comm.fitted_slope == Rational(5, 4));

  const GrowthScan v3 = growth_scan(W("V^3"), grid(1), opts);
  CHECK(v3.branch == "power");
  CHECK(v3.fitted_slope == 15);
  CHECK(v3.rows.front().c_minus.has_value());

  CHECK_THROWS_AS(growth_scan(W(""), grid(1), opts), Error);

  // Below k_min rows are kept but marked invalid and left out of the fit.
  const GrowthScan low = growth_scan(W("H^2 V^3 H^-1 V"), {5, 7, 14}, opts);
  CHECK_FALSE(low.rows[0].valid);
  CHECK(low.rows[1].valid);
  CHECK(low.fitted_slope == Rational(5, 4));

  // Conjugation invariance through the balanced form.
  const GrowthScan a = growth_scan(W("H^2 V^3 H^-1 V"), grid(7), opts);
  const GrowthScan b = growth_scan(W("V^2 H H^2 V^3 H^-1 V H^-1 V^-2"), grid(7), opts);
  REQUIRE(a.rows.size() == b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(a.rows[i].bound == b.rows[i].bound);
    CHECK(a.rows[i].action_gap == b.rows[i].action_gap);
  }
  for (std::size_t i = 1; i < a.rows.size(); ++i) CHECK(a.rows[i].bound >= a.rows[i - 1].bound);
}
