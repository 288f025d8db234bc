#include "eggbeater/fixed_points.hpp"

#include <cstdlib>

namespace eggbeater {

namespace {
int sgn(std::int64_t v) { return (v > 0) - (v < 0); }
}  // namespace

SignVector::SignVector(std::vector<int> eps) : eps_(std::move(eps)) {
  for (int e : eps_)
    if (e != 1 && e != -1) throw Error(ErrorKind::InvalidArgument, "sign vector entries must be +1 or -1");
}

std::vector<SignVector> SignVector::all(std::size_t r) {
  const std::size_t n = 2 * r;
  std::vector<SignVector> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<int> e(n);
    for (std::size_t i = 0; i < n; ++i) e[i] = (mask >> (n - 1 - i)) & 1 ? -1 : 1;
    out.emplace_back(std::move(e));
  }
  return out;
}

SignVector SignVector::top(const BalancedWord& w) {
  std::vector<int> e;
  for (std::size_t j = 0; j < w.r(); ++j) {
    e.push_back(sgn(w.N[j]));
    e.push_back(sgn(w.M[j]));
  }
  return SignVector(std::move(e));
}

SignVector SignVector::parse(std::string_view text) {
  std::vector<int> e;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '+') e.push_back(1);
    else if (text[i] == '-') e.push_back(-1);
    else throw ParseError(i, "sign vector accepts only '+' and '-'");
  }
  return SignVector(std::move(e));
}

int SignVector::operator[](std::int64_t j) const {
  const auto n = static_cast<std::int64_t>(eps_.size());
  return eps_[static_cast<std::size_t>(((j % n) + n) % n)];
}

SignVector SignVector::negated() const {
  std::vector<int> e = eps_;
  for (int& v : e) v = -v;
  return SignVector(std::move(e));
}

SignVector SignVector::flipped(std::size_t j) const {
  std::vector<int> e = eps_;
  e.at(j) = -e.at(j);
  return SignVector(std::move(e));
}

std::string SignVector::str() const {
  std::string s;
  for (int e : eps_) s += e > 0 ? '+' : '-';
  return s;
}

namespace {

void check_shapes(std::size_t j, const SignVector& eps, const BalancedWord& w) {
  if (w.r() == 0) throw Error(ErrorKind::InvalidArgument, "balanced word must have r >= 1");
  if (eps.size() != 2 * w.r())
    throw Error(ErrorKind::InvalidArgument, "sign vector length " + std::to_string(eps.size()) + " != 2r");
  if (j < 1 || j > w.r()) throw Error(ErrorKind::InvalidArgument, "syllable index out of range");
}

Rational nu_of(std::int64_t N) { return Rational(1, 2 * std::abs(N)); }

}  // namespace

Mat2 build_Aj(std::size_t j, const SignVector& eps, const BalancedWord& w, const ModelParams& params) {
  check_shapes(j, eps, w);
  const auto i = static_cast<std::int64_t>(j - 1);
  const Rational Lk = params.L * params.k;
  const std::int64_t N = w.N[j - 1];
  const std::int64_t M = w.M[j - 1];
  const int e0 = eps[2 * i];
  const int e1 = eps[2 * i + 1];
  return mat2(1 - 4 * Lk * Lk * N * M * e0 * e1, 2 * Lk * M * e1, -2 * Lk * N * e0, 1);
}

Vec2 build_vj(std::size_t j, const SignVector& eps, const BalancedWord& w, const ModelParams& params) {
  check_shapes(j, eps, w);
  const auto i = static_cast<std::int64_t>(j - 1);
  const Rational Lk = params.L * params.k;
  const std::int64_t N = w.N[j - 1];
  const std::int64_t M = w.M[j - 1];
  const Rational one_nu = 1 - nu_of(N);
  const Rational one_mu = 1 - nu_of(M);
  return vec2(4 * Lk * Lk * eps[2 * i + 1] * M * N * one_nu + 2 * Lk * M * one_mu, 2 * Lk * N * one_nu);
}

AffineMap compose_Abar_vbar(const SignVector& eps, const BalancedWord& w, const ModelParams& params) {
  AffineMap out{identity2(), vec2(0, 0)};
  for (std::size_t j = 1; j <= w.r(); ++j) {
    const Mat2 A = build_Aj(j, eps, w, params);
    out.v = A * out.v + build_vj(j, eps, w, params);
    out.A = A * out.A;
  }
  return out;
}

FixedPointRecord solve_fixed_point(const SignVector& eps, const BalancedWord& w, const ModelParams& params) {
  params.validate();
  const std::size_t r = w.r();
  const AffineMap bar = compose_Abar_vbar(eps, w, params);
  FixedPointRecord rec;
  rec.eps = eps;
  rec.k = params.k;
  rec.delta = params.delta;
  rec.Abar = bar.A;
  const Mat2 shifted = bar.A - identity2();
  rec.det_Abar_minus_one = det2(shifted);
  if (rec.det_Abar_minus_one == 0)
    throw Error(ErrorKind::SingularSystem, "det(Abar - 1) = 0 for signs " + eps.str() + " at k = " +
                                               std::to_string(params.k) + "; increase k");
  const Vec2 z0 = solve2(shifted, Vec2(-bar.v));

  // Even points from the affine recursion; each odd point is read off its
  // neighbours as (-y_{2j+2}, x_{2j}).
  std::vector<Vec2> even{z0};
  for (std::size_t j = 1; j <= r; ++j)
    even.push_back(build_Aj(j, eps, w, params) * even.back() + build_vj(j, eps, w, params));
  rec.flags.closure = even.back() == z0;
  for (std::size_t j = 0; j < r; ++j) {
    rec.points.push_back({even[j](0), even[j](1)});
    rec.points.push_back({-even[j + 1](1), even[j](0)});
  }
  for (std::size_t j = 0; j < r; ++j) {
    rec.nu.push_back(nu_of(w.N[j]));
    rec.mu.push_back(nu_of(w.M[j]));
    rec.windings.push_back(params.k * sgn(w.N[j]));
    rec.windings.push_back(params.k * sgn(w.M[j]));
  }

  rec.flags.signs = true;
  rec.flags.inside_square = true;
  rec.flags.outside_smoothing = true;
  for (std::size_t i = 0; i < rec.points.size(); ++i) {
    const PlanePoint& p = rec.points[i];
    if (p.x == 0) rec.on_kink = true;
    if (sign(p.x) != eps[static_cast<std::int64_t>(i)]) rec.flags.signs = false;
    if (abs(p.x) >= 1 || abs(p.y) >= 1) rec.flags.inside_square = false;
    if (params.delta > 0) {
      const Rational ax = abs(p.x);
      if (!(ax > params.delta && ax < 1 - params.delta)) rec.flags.outside_smoothing = false;
    }
  }

  // Each shear must end within distance 1 of its expected lattice level.
  rec.flags.windows = true;
  for (std::size_t i = 0; i < rec.points.size(); ++i) {
    const PlanePoint& p = rec.points[i];
    if (abs(p.x) > 1) {
      rec.flags.windows = false;
      continue;
    }
    const std::int64_t exponent = i % 2 == 0 ? w.N[i / 2] : w.M[i / 2];
    const Rational end = p.y + 2 * params.L * params.k * exponent * u0(p.x);
    const Rational level = params.L * rec.windings[i];
    if (!(end > level - 1 && end < level + 1)) rec.flags.windows = false;
  }
  return rec;
}

std::vector<FixedPointRecord> solve_all(const BalancedWord& w, const ModelParams& params) {
  std::vector<FixedPointRecord> out;
  for (const SignVector& eps : SignVector::all(w.r())) out.push_back(solve_fixed_point(eps, w, params));
  return out;
}

bool all_valid(const BalancedWord& w, const ModelParams& params) {
  for (const SignVector& eps : SignVector::all(w.r())) {
    try {
      if (!solve_fixed_point(eps, w, params).valid()) return false;
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::SingularSystem) return false;
      throw;
    }
  }
  return true;
}

std::int64_t minimal_valid_k(const BalancedWord& w, const Rational& L, const DeltaPolicy& policy, std::int64_t cap) {
  for (std::int64_t k = 1; k <= cap; ++k) {
    const ModelParams params = policy.params(L, k);
    if (params.delta >= Rational(1, 4)) continue;
    params.validate();
    if (all_valid(w, params)) return k;
  }
  throw Error(ErrorKind::CapExceeded, "no k <= " + std::to_string(cap) + " validates all sign vectors of " + w.str());
}

namespace {

AsymptoticQuantity quantity(std::string name, const Rational& predicted, const Rational& actual) {
  AsymptoticQuantity q{std::move(name), predicted, actual, abs(actual - predicted), Rational(0)};
  q.rel_error = predicted == 0 ? q.abs_error : Rational(q.abs_error / abs(predicted));
  return q;
}

Rational pow_k(std::int64_t k, std::int64_t e) {
  Rational out = 1;
  for (std::int64_t i = 0; i < e; ++i) out *= k;
  return out;
}

}  // namespace

AsymptoticReport asymptotic_checks(const FixedPointRecord& record, const BalancedWord& w, const ModelParams& params) {
  const std::size_t r = w.r();
  const auto ri = static_cast<std::int64_t>(r);
  const SignVector& eps = record.eps;
  const Rational& L = params.L;
  const std::int64_t k = params.k;

  // alpha_j and beta_j are the k-free shear strengths read from the record's signs.
  std::vector<Rational> alpha, beta;
  Rational gamma = 1;
  for (std::int64_t j = 0; j < ri; ++j) {
    alpha.push_back(-2 * L * w.N[j] * eps[2 * j]);
    beta.push_back(2 * L * w.M[j] * eps[2 * j + 1]);
    gamma *= alpha.back() * beta.back();
  }

  AsymptoticReport rep;
  const Mat2& A = record.Abar;
  rep.matrix.push_back(quantity("Abar_11", pow_k(k, 2 * ri) * gamma, A(0, 0)));
  rep.matrix.push_back(quantity("Abar_12", pow_k(k, 2 * ri - 1) * gamma / alpha.front(), A(0, 1)));
  rep.matrix.push_back(quantity("Abar_21", pow_k(k, 2 * ri - 1) * gamma / beta.back(), A(1, 0)));
  rep.matrix.push_back(
      quantity("Abar_22", pow_k(k, 2 * ri - 2) * gamma / (alpha.front() * beta.back()), A(1, 1)));
  rep.matrix.push_back(quantity("det(Abar-1)", -pow_k(k, 2 * ri) * gamma, record.det_Abar_minus_one));
  rep.det_rel_error = rep.matrix.back().rel_error;
  rep.trace_identity = record.det_Abar_minus_one == 2 - trace2(A);

  rep.max_point_error = 0;
  for (std::int64_t j = 0; j < ri; ++j) {
    const Rational one_nu = 1 - nu_of(w.N[j]);
    const Rational one_mu = 1 - nu_of(w.M[j]);
    const Rational one_mu_prev = 1 - nu_of(w.M[((j - 1) % ri + ri) % ri]);
    const PlanePoint& pe = record.points[2 * j];
    const PlanePoint& po = record.points[2 * j + 1];
    const std::string e = std::to_string(2 * j), o = std::to_string(2 * j + 1);
    rep.points.push_back(quantity("x_" + e, eps[2 * j] * one_nu, pe.x));
    rep.points.push_back(quantity("y_" + e, -eps[2 * j - 1] * one_mu_prev, pe.y));
    rep.points.push_back(quantity("x_" + o, eps[2 * j + 1] * one_mu, po.x));
    rep.points.push_back(quantity("y_" + o, eps[2 * j] * one_nu, po.y));
  }
  for (const auto& q : rep.points)
    if (q.abs_error > rep.max_point_error) rep.max_point_error = q.abs_error;
  return rep;
}

}  // namespace eggbeater
