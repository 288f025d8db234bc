#include "eggbeater/polynomial.hpp"

#include <algorithm>

namespace eggbeater {

Poly::Poly(const Rational& constant) : c_{constant} { trim(); }

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rational& Poly::coeff(int i) const {
  static const Rational zero(0);
  return i >= 0 && i < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(i)] : zero;
}

Rational Poly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long long>(i));
  return Poly(std::move(d));
}

Poly Poly::operator-() const {
  std::vector<Rational> d = c_;
  for (auto& v : d) v = -v;
  return Poly(std::move(d));
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rational> d(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  return Poly(std::move(d));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> d(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) d[i + j] += a.c_[i] * b.c_[j];
  return Poly(std::move(d));
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  if (b.is_zero()) throw Error(ErrorKind::InvalidArgument, "polynomial division by zero");
  std::vector<Rational> quot(a.degree() >= b.degree() ? static_cast<std::size_t>(a.degree() - b.degree() + 1) : 0);
  std::vector<Rational> rem = a.c_;
  const int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    const Rational f = rem[static_cast<std::size_t>(i)] / b.leading();
    quot[static_cast<std::size_t>(i - db)] = f;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= f * b.coeff(j);
  }
  q = Poly(std::move(quot));
  r = Poly(std::move(rem));
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  const Rational lead = a.leading();
  for (auto& v : a.c_) v /= lead;
  return a;
}

std::string Poly::str() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!out.empty()) out += " + ";
    out += "(" + format(c_[i]) + ")";
    if (i >= 1) out += "t";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

Poly squarefree_part(const Poly& p) {
  if (p.degree() <= 0) return p;
  const Poly g = Poly::gcd(p, p.derivative());
  Poly q, r;
  Poly::divmod(p, g, q, r);
  return q;
}

SturmChain::SturmChain(const Poly& p) {
  if (p.is_zero()) return;
  chain_.push_back(p);
  Poly prev = p;
  Poly cur = p.derivative();
  while (!cur.is_zero()) {
    chain_.push_back(cur);
    Poly q, r;
    Poly::divmod(prev, cur, q, r);
    prev = std::move(cur);
    cur = -r;
  }
}

int SturmChain::variations(const Rational& x) const {
  int changes = 0;
  int last = 0;
  for (const Poly& p : chain_) {
    const int s = sign(p(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int SturmChain::count(const Rational& a, const Rational& b) const {
  if (chain_.empty()) return 0;
  return variations(a) - variations(b);
}

namespace {

void isolate(const Poly& p, const SturmChain& sc, const Rational& lo, const Rational& hi,
             std::vector<RootLocation>& out) {
  const int inside = sc.count(lo, hi) - (p(hi) == 0 ? 1 : 0);
  if (inside <= 0) return;
  const Rational mid = (lo + hi) / 2;
  const bool mid_root = p(mid) == 0;
  if (inside == 1 && !mid_root && p(lo) != 0 && p(hi) != 0) {
    out.push_back({false, Rational(0), lo, hi});
    return;
  }
  isolate(p, sc, lo, mid, out);
  if (mid_root) out.push_back({true, mid, mid, mid});
  isolate(p, sc, mid, hi, out);
}

}  // namespace

std::vector<RootLocation> isolate_roots(const Poly& p, const Rational& a, const Rational& b) {
  if (p.is_zero()) throw Error(ErrorKind::InvalidArgument, "cannot isolate roots of the zero polynomial");
  std::vector<RootLocation> out;
  if (p.degree() == 0) return out;
  const SturmChain sc(p);
  if (p(a) == 0) out.push_back({true, a, a, a});
  isolate(p, sc, a, b, out);
  if (b != a && p(b) == 0) out.push_back({true, b, b, b});
  return out;
}

int sign_at_root(const Poly& p, RootLocation loc, const Poly& q) {
  if (loc.exact) return sign(q(loc.value));
  if (q.is_zero()) return 0;
  const Poly g = Poly::gcd(p, q);
  if (g.degree() >= 1 && SturmChain(g).count(loc.lo, loc.hi) > 0) return 0;
  const SturmChain sq(q);
  while (true) {
    if (sq.count(loc.lo, loc.hi) == 0) return sign(q(loc.hi));
    const Rational mid = (loc.lo + loc.hi) / 2;
    const Rational pm = p(mid);
    if (pm == 0) return sign(q(mid));
    if (sign(p(loc.lo)) * sign(pm) < 0) loc.hi = mid;
    else loc.lo = mid;
  }
}

}  // namespace eggbeater
