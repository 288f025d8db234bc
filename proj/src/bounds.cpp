#include "eggbeater/bounds.hpp"

#include <cstdlib>

namespace eggbeater {

Rational boundary_depth_bound(const BalancedWord& w, std::int64_t k, const Rational& L, std::int64_t k_min) {
  if (k < k_min)
    throw Error(ErrorKind::KTooSmall, "k = " + std::to_string(k) + " is below k_min = " + std::to_string(k_min));
  return L * k * tau(w) / 4;
}

Rational boundary_depth_bound(const BalancedWord& w, std::int64_t k, const Rational& L, const DeltaPolicy& policy) {
  return boundary_depth_bound(w, k, L, minimal_valid_k(w, L, policy));
}

GapReport action_gap(const std::vector<FixedPointRecord>& records, const BalancedWord& w, const ModelParams& params) {
  const std::size_t expected = std::size_t{1} << (2 * w.r());
  if (records.size() != expected)
    throw Error(ErrorKind::MissingRecords,
                "expected " + std::to_string(expected) + " records, got " + std::to_string(records.size()));
  for (const auto& rec : records)
    if (!rec.valid()) throw Error(ErrorKind::MissingRecords, "record " + rec.eps.str() + " is not valid");

  const SignVector top = SignVector::top(w);
  const auto find = [&](const SignVector& eps) -> const FixedPointRecord& {
    for (const auto& rec : records)
      if (rec.eps == eps) return rec;
    throw Error(ErrorKind::MissingRecords, "no record for " + eps.str());
  };
  const FixedPointRecord& top_rec = find(top);
  const auto r = static_cast<std::int64_t>(w.r());
  if (cz_index(top_rec, w) != HalfInt::integer(1 + r))
    throw Error(ErrorKind::InvalidArgument, "top record does not have index 1 + r");

  GapReport rep;
  rep.top = top;
  rep.bound = params.L * params.k * tau(w) / 4;
  bool first = true;
  // Index r is reached exactly by flipping one sign of the top vector; actions
  // are measured relative to the top record, so the gap is minus the largest.
  for (const auto& rec : records) {
    if (cz_index(rec, w) != HalfInt::integer(r)) continue;
    const Rational rel = action_exact_relative(rec, top_rec, w, params);
    if (first || -rel < rep.gap) {
      rep.gap = -rel;
      rep.runner_up = rec.eps;
      first = false;
    }
  }
  if (first) throw Error(ErrorKind::MissingRecords, "no record of index r");
  rep.exceeds_bound = rep.gap > rep.bound;
  return rep;
}

Rational area_of_C(const Rational& L) { return 4 * L - 8; }

Rational default_total_area(const Rational& L) { return 4 * area_of_C(L); }

PowerBound power_word_bound(const FreeWord& w, std::int64_t k, const Rational& L, const Rational& total_area) {
  const FreeWord c = cyclically_reduce(w);
  if (c.size() != 1) throw Error(ErrorKind::NotAPower, "'" + w.str() + "' is not conjugate to a power of V or H");
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "k must be positive");
  const Rational annulus_area = 2 * L;
  if (total_area <= annulus_area)
    throw Error(ErrorKind::InvalidArgument, "total area must exceed the annulus area 2L");
  PowerBound out;
  out.letter = c.syllables().front().letter;
  out.n = c.syllables().front().exponent;
  // n h with h odd in x has zero integral over the annulus; the constants -nL
  // and nL are taken on the two complementary pieces, each of area
  // (total - 2L) / 2.
  const Rational side = (total_area - annulus_area) / 2;
  const Rational mean = (Rational(-out.n) * L * side + Rational(out.n) * L * side) / total_area;
  out.shift = -mean;
  const Rational lo = -L * std::abs(out.n) + out.shift;
  const Rational hi = L * std::abs(out.n) + out.shift;
  out.c_minus = k * lo;
  out.c_plus = k * hi;
  out.bound = (out.c_plus - out.c_minus) / 2;
  return out;
}

std::vector<std::int64_t> geometric_grid(std::int64_t k_lo, std::int64_t k_hi, std::int64_t factor) {
  if (k_lo < 1 || k_hi < k_lo || factor < 2)
    throw Error(ErrorKind::InvalidArgument, "grid needs 1 <= k_min <= k_max and factor >= 2");
  std::vector<std::int64_t> out;
  for (std::int64_t k = k_lo; k <= k_hi; k *= factor) {
    out.push_back(k);
    if (k > k_hi / factor) break;
  }
  return out;
}

Rational least_squares_slope(const std::vector<std::int64_t>& xs, const std::vector<Rational>& ys) {
  if (xs.empty() || xs.size() != ys.size()) throw Error(ErrorKind::InvalidArgument, "slope fit needs matching data");
  if (xs.size() == 1) return ys.front() / xs.front();
  Rational mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= static_cast<long long>(xs.size());
  my /= static_cast<long long>(xs.size());
  Rational sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  if (sxx == 0) return ys.front() / xs.front();
  return sxy / sxx;
}

GrowthScan growth_scan(const FreeWord& w, const std::vector<std::int64_t>& k_grid, const ScanOptions& opts) {
  if (w.is_identity()) throw Error(ErrorKind::TrivialWord, "the identity has no growth");
  GrowthScan scan;
  scan.word = w;
  std::vector<std::int64_t> xs;
  std::vector<Rational> ys;
  if (const auto bal = to_balanced(w)) {
    scan.branch = "long";
    scan.k_min = minimal_valid_k(*bal, opts.L, opts.policy, opts.k_cap);
    scan.theoretical_slope = opts.L * tau(*bal) / 4;
    for (std::int64_t k : k_grid) {
      GrowthRow row{k, k >= scan.k_min, Rational(0), std::nullopt, std::nullopt, std::nullopt};
      if (row.valid) {
        row.bound = boundary_depth_bound(*bal, k, opts.L, scan.k_min);
        if (opts.with_action_gap) {
          const ModelParams params = opts.policy.params(opts.L, k);
          row.action_gap = action_gap(solve_all(*bal, params), *bal, params).gap;
        }
        xs.push_back(k);
        ys.push_back(row.bound);
      }
      scan.rows.push_back(row);
    }
  } else {
    scan.branch = "power";
    scan.k_min = 1;
    const Rational area = opts.total_area.value_or(default_total_area(opts.L));
    for (std::int64_t k : k_grid) {
      const PowerBound pb = power_word_bound(w, k, opts.L, area);
      scan.rows.push_back({k, true, pb.bound, std::nullopt, pb.c_minus, pb.c_plus});
      xs.push_back(k);
      ys.push_back(pb.bound);
    }
    scan.theoretical_slope = power_word_bound(w, 1, opts.L, area).bound;
  }
  if (xs.empty()) throw Error(ErrorKind::KTooSmall, "no grid point reaches k_min = " + std::to_string(scan.k_min));
  scan.fitted_slope = least_squares_slope(xs, ys);
  return scan;
}

}  // namespace eggbeater
