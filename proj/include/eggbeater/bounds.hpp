#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eggbeater/fixed_points.hpp"
#include "eggbeater/floer.hpp"

namespace eggbeater {

/// (L k / 4) tau(w); KTooSmall when k < k_min.
Rational boundary_depth_bound(const BalancedWord& w, std::int64_t k, const Rational& L, std::int64_t k_min);
Rational boundary_depth_bound(const BalancedWord& w, std::int64_t k, const Rational& L, const DeltaPolicy& policy);

struct GapReport {
  Rational gap;    // action of the top-index record minus the best index-r action
  Rational bound;  // (L k / 4) tau(w)
  SignVector top;
  SignVector runner_up;
  bool exceeds_bound = false;
};

/// Needs the full set of 2^{2r} valid records (MissingRecords otherwise).
GapReport action_gap(const std::vector<FixedPointRecord>& records, const BalancedWord& w, const ModelParams& params);

/// Area of C = C_V u C_H: two annuli of area 2L sharing two unit squares of area 4.
Rational area_of_C(const Rational& L);
Rational default_total_area(const Rational& L);

struct PowerBound {
  Letter letter;
  std::int64_t n;
  Rational shift;  // added to the Hamiltonian to make its mean zero
  Rational c_minus;
  Rational c_plus;
  Rational bound;  // (c_plus - c_minus) / 2
};

/// For w conjugate to V^n or H^n: the normalized autonomous Hamiltonian k n h
/// extended by constants (the two sides of the annulus receive equal shares of
/// the remaining area) has spectrum {k min, k max}; the bound is k (max - min) / 2.
PowerBound power_word_bound(const FreeWord& w, std::int64_t k, const Rational& L, const Rational& total_area);

struct GrowthRow {
  std::int64_t k;
  bool valid;  // k >= k_min
  Rational bound;
  std::optional<Rational> action_gap;
  std::optional<Rational> c_minus;
  std::optional<Rational> c_plus;
};

struct GrowthScan {
  FreeWord word;
  std::string branch;  // "long" or "power"
  std::int64_t k_min;
  std::vector<GrowthRow> rows;
  Rational fitted_slope;  // least squares over the valid rows
  Rational theoretical_slope;
};

struct ScanOptions {
  Rational L{5};
  DeltaPolicy policy = DeltaPolicy::one_over_k();
  std::optional<Rational> total_area;  // default_total_area(L) when absent
  bool with_action_gap = true;
  std::int64_t k_cap = 10000;
};

/// Geometric grid k_lo, k_lo f, k_lo f^2, ... up to k_hi.
std::vector<std::int64_t> geometric_grid(std::int64_t k_lo, std::int64_t k_hi, std::int64_t factor);

/// TrivialWord for the identity.
GrowthScan growth_scan(const FreeWord& w, const std::vector<std::int64_t>& k_grid, const ScanOptions& opts);

/// Exact least-squares slope of (x, y) with intercept; through the origin for one point.
Rational least_squares_slope(const std::vector<std::int64_t>& xs, const std::vector<Rational>& ys);

}  // namespace eggbeater
