#include "eggbeater/floer.hpp"

#include <array>
#include <cstdlib>
#include <optional>

namespace eggbeater {

namespace {
int sgn(std::int64_t v) { return (v > 0) - (v < 0); }
}  // namespace

// ---------------------------------------------------------------- actions

Rational action_leading(const FixedPointRecord& record, const BalancedWord& w, const ModelParams& params) {
  Rational sum = 0;
  for (std::size_t j = 0; j < w.r(); ++j) {
    const auto i = static_cast<std::int64_t>(j);
    const Rational a = 1 - record.nu[j];
    const Rational b = 1 - record.mu[j];
    sum += record.eps[2 * i] * w.N[j] * a * a + record.eps[2 * i + 1] * w.M[j] * b * b;
  }
  return params.L * params.k * sum;
}

namespace {

struct ActionParts {
  Rational hamiltonian;
  Rational area;
};

ActionParts action_parts(const FixedPointRecord& rec, const BalancedWord& w, const ModelParams& params) {
  for (const PlanePoint& p : rec.points)
    if (abs(p.x) >= 1 || abs(p.y) >= 1)
      throw Error(ErrorKind::ChartAmbiguity, "orbit of " + rec.eps.str() + " touches a gluing-square boundary");
  const SmoothingProfile u = SmoothingProfile::for_params(params);
  const Rational& L = params.L;
  const std::int64_t k = params.k;
  const std::size_t n = rec.points.size();
  ActionParts out{0, 0};
  for (std::size_t j = 0; j < w.r(); ++j) {
    const PlanePoint& ze = rec.points[2 * j];
    const PlanePoint& zo = rec.points[2 * j + 1];
    const PlanePoint& zn = rec.points[(2 * j + 2) % n];
    out.hamiltonian += k * w.N[j] * u.hamiltonian(ze.x, L) + k * w.M[j] * u.hamiltonian(zo.x, L);
    // x dy along each vertical shear, then the transition from the H chart
    // back to the V chart, where x dy changes by d(xy).
    out.area -= ze.x * 2 * L * k * w.N[j] * u(ze.x);
    out.area -= zo.x * 2 * L * k * w.M[j] * u(zo.x) + zn.x * zn.y + zo.x * zo.y;
  }
  return out;
}

}  // namespace

Rational action_exact_relative(const FixedPointRecord& record, const FixedPointRecord& base, const BalancedWord& w,
                               const ModelParams& params) {
  const ActionData d = action_data(record, base, w, params);
  return d.exact_relative;
}

ActionData action_data(const FixedPointRecord& record, const FixedPointRecord& base, const BalancedWord& w,
                       const ModelParams& params) {
  if (record.eps.size() != base.eps.size() || record.k != base.k)
    throw Error(ErrorKind::InvalidArgument, "relative actions need records of the same word and k");
  const ActionParts a = action_parts(record, w, params);
  const ActionParts b = action_parts(base, w, params);
  ActionData out;
  out.leading = action_leading(record, w, params);
  out.hamiltonian_term = a.hamiltonian - b.hamiltonian;
  out.area_term = a.area - b.area;
  out.exact_relative = out.hamiltonian_term + out.area_term;
  return out;
}

// ------------------------------------------------------------ CZ indices

HalfInt cz_index(const FixedPointRecord& record, const BalancedWord& w, std::int64_t offset) {
  std::int64_t halves = 0;
  for (std::size_t j = 0; j < w.r(); ++j) {
    const auto i = static_cast<std::int64_t>(j);
    halves += record.eps[2 * i] * sgn(w.N[j]) + record.eps[2 * i + 1] * sgn(w.M[j]);
  }
  return HalfInt::integer(1 + offset) + HalfInt::half(halves);
}

HalfInt rs_index_shear(const Rational& alpha) {
  if (alpha == 0) throw Error(ErrorKind::ZeroStrength, "shear strength must be nonzero");
  return HalfInt::half(-sign(alpha));
}

// ------------------------------------------------------------ shear paths

Mat2 shear_A(const Rational& a) { return mat2(1, 0, -a, 1); }
Mat2 shear_B(const Rational& b) { return mat2(1, b, 0, 1); }
Mat2 shear_matrix(ShearKind kind, const Rational& s) { return kind == ShearKind::A ? shear_A(s) : shear_B(s); }

Mat2 ShearSegment::value(const Rational& t) const {
  const Rational tau = reversed ? Rational(1 - t) : t;
  return shear_matrix(kind, strength * tau) * left;
}

Mat2 Sp2Path::start() const { return segments_.empty() ? identity2() : segments_.front().start(); }

Mat2 Sp2Path::end() const { return segments_.empty() ? identity2() : segments_.back().end(); }

bool Sp2Path::is_continuous() const {
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    const ShearSegment& s = segments_[i];
    for (const Rational& t : {Rational(0), Rational(1, 3), Rational(1)})
      if (det2(s.value(t)) != 1) return false;
    if (i > 0 && segments_[i - 1].end() != s.start()) return false;
  }
  return true;
}

Sp2Path Sp2Path::reversed() const {
  std::vector<ShearSegment> out;
  for (auto it = segments_.rbegin(); it != segments_.rend(); ++it) {
    ShearSegment s = *it;
    s.reversed = !s.reversed;
    out.push_back(s);
  }
  return Sp2Path(std::move(out));
}

Sp2Path linearized_path(const FixedPointRecord& record, const BalancedWord& w, const ModelParams& params) {
  Sp2Path path;
  Mat2 acc = identity2();
  const Rational Lk = params.L * params.k;
  for (std::size_t j = 0; j < w.r(); ++j) {
    const auto i = static_cast<std::int64_t>(j);
    const Rational alpha = 2 * Lk * w.N[j] * record.eps[2 * i];
    path.append({ShearKind::A, alpha, acc, false});
    acc = shear_A(alpha) * acc;
    const Rational beta = 2 * Lk * w.M[j] * record.eps[2 * i + 1];
    path.append({ShearKind::B, beta, acc, false});
    acc = shear_B(beta) * acc;
  }
  return path;
}

HalfInt rs_index_additive(const Sp2Path& path) {
  HalfInt sum;
  for (const ShearSegment& s : path.segments()) sum += rs_index_shear(s.strength);
  return sum;
}

namespace {

// 2x2 matrix of polynomials in t.
struct PolyMat {
  std::array<Poly, 4> e;  // row-major

  static PolyMat constant(const Mat2& m) { return {{Poly(m(0, 0)), Poly(m(0, 1)), Poly(m(1, 0)), Poly(m(1, 1))}}; }
  PolyMat operator*(const PolyMat& o) const {
    return {{e[0] * o.e[0] + e[1] * o.e[2], e[0] * o.e[1] + e[1] * o.e[3], e[2] * o.e[0] + e[3] * o.e[2],
             e[2] * o.e[1] + e[3] * o.e[3]}};
  }
  PolyMat derivative() const {
    return {{e[0].derivative(), e[1].derivative(), e[2].derivative(), e[3].derivative()}};
  }
  Mat2 operator()(const Rational& t) const { return mat2(e[0](t), e[1](t), e[2](t), e[3](t)); }
};

PolyMat shear_poly(ShearKind kind, const Poly& s) {
  const Poly one(Rational(1)), zero;
  if (kind == ShearKind::A) return {{one, zero, -s, one}};
  return {{one, s, zero, one}};
}

// Standard complex structure for the crossing-form convention Psi' = J S Psi.
Mat2 rs_J() { return mat2(0, -1, 1, 0); }

Vec2 kernel_vector(const Mat2& n) {
  if (n(0, 0) != 0 || n(0, 1) != 0) return vec2(-n(0, 1), n(0, 0));
  return vec2(-n(1, 1), n(1, 0));
}

// Crossings of a polynomial path on [0, 1]; empty optional when the path is
// not regular (degenerate on an interval, or some crossing form vanishes).
std::optional<std::vector<Crossing>> crossings_of(const PolyMat& psi, std::size_t segment, bool perturbed) {
  const Poly f = Poly(Rational(2)) - (psi.e[0] + psi.e[3]);
  if (f.is_zero()) return std::nullopt;
  const Poly g = squarefree_part(f);
  const Poly repeated = Poly::gcd(f, f.derivative());
  const PolyMat dpsi = psi.derivative();
  const Poly n01 = psi.e[1];
  const Poly n10 = psi.e[2];
  const Poly n00 = psi.e[0] - Poly(Rational(1));
  const Poly n11 = psi.e[3] - Poly(Rational(1));

  std::vector<Crossing> out;
  for (const RootLocation& loc : isolate_roots(g, 0, 1)) {
    Crossing c{segment, loc.exact, loc.exact ? loc.value : Rational((loc.lo + loc.hi) / 2), 0, false, perturbed};
    if (loc.exact) {
      c.endpoint = loc.value == 0 || loc.value == 1;
      const Mat2 P = psi(loc.value);
      const Mat2 S = Mat2(-(rs_J() * dpsi(loc.value) * inverse2(P)));
      if (S(0, 1) != S(1, 0)) throw Error(ErrorKind::InvalidArgument, "path is not symplectic");
      const Mat2 N = P - identity2();
      if (N == Mat2::Zero()) {
        if (det2(S) == 0) return std::nullopt;
        c.signature = signature_pos_minus_neg(S);
      } else {
        const Vec2 u = kernel_vector(N);
        const Rational q = u.dot(S * u);
        if (q == 0) return std::nullopt;
        c.signature = sign(q);
      }
    } else {
      // Irrational crossing. Psi - 1 = c u (J u)^T with u spanning the kernel,
      // and f'(t0) = -c <u, S u>, so the crossing form has sign -sign(f') sign(c).
      if (sign_at_root(g, loc, n00) == 0 && sign_at_root(g, loc, n01) == 0 && sign_at_root(g, loc, n10) == 0 &&
          sign_at_root(g, loc, n11) == 0)
        return std::nullopt;
      if (repeated.degree() >= 1 && sign_at_root(g, loc, repeated) == 0) return std::nullopt;
      const int fprime = sign_at_root(g, loc, f.derivative());
      int cs = sign_at_root(g, loc, n01);
      if (cs == 0) cs = -sign_at_root(g, loc, n10);
      if (fprime == 0 || cs == 0) return std::nullopt;
      c.signature = -fprime * cs;
    }
    out.push_back(c);
  }
  return out;
}

PolyMat segment_poly(const ShearSegment& s) {
  const Poly tau = s.reversed ? Poly(std::vector<Rational>{1, -1}) : Poly::t();
  return shear_poly(s.kind, Poly(s.strength) * tau) * PolyMat::constant(s.left);
}

}  // namespace

RsReport rs_crossings(const Sp2Path& path) {
  RsReport rep;
  std::int64_t halves = 0;
  const Poly bump = Poly::t() * Poly(std::vector<Rational>{1, -1});  // t(1 - t)
  for (std::size_t i = 0; i < path.segments().size(); ++i) {
    const ShearSegment& seg = path.segments()[i];
    const PolyMat base = segment_poly(seg);
    std::optional<std::vector<Crossing>> found = crossings_of(base, i, false);
    if (!found) {
      // Right-multiplying by a transverse shear of size s t(1-t) is a homotopy
      // with fixed endpoints, so the index is unchanged.
      const ShearKind transverse = seg.kind == ShearKind::A ? ShearKind::B : ShearKind::A;
      for (const Rational& s : {Rational(1), Rational(-1), Rational(1, 2), Rational(-1, 2), Rational(3),
                               Rational(-3), Rational(1, 7), Rational(-1, 7)}) {
        found = crossings_of(base * shear_poly(transverse, Poly(s) * bump), i, true);
        if (found) break;
      }
    }
    if (!found)
      throw Error(ErrorKind::TangentialCrossing, "segment " + std::to_string(i) + " has a vanishing crossing form");
    for (const Crossing& c : *found) {
      halves += c.endpoint ? c.signature : 2 * c.signature;
      rep.crossings.push_back(c);
    }
  }
  rep.index = HalfInt::half(halves);
  return rep;
}

HalfInt rs_index_numeric(const Sp2Path& path) { return rs_crossings(path).index; }

HalfInt cz_index_numeric(const Sp2Path& path, std::int64_t offset) {
  if (det2(path.end() - identity2()) == 0)
    throw Error(ErrorKind::DegenerateEnd, "path ends on the Maslov cycle (det(end - 1) = 0)");
  return HalfInt::integer(1 + offset) - rs_index_numeric(path);
}

// --------------------------------------------------- concatenation terms

Mat2 cayley_J() { return mat2(0, 1, -1, 0); }
Mat2 psi_matrix() { return mat2(0, 1, -1, 0); }

Mat2 cayley_transform(const Mat2& P) {
  const Mat2 I = identity2();
  if (det2(I - P) == 0) throw Error(ErrorKind::DegenerateP, "1 - P is singular for P = " + format(P));
  const Mat2 M = Mat2(cayley_J() * (I + P) * inverse2(I - P) / Rational(2));
  if (M(0, 1) != M(1, 0)) throw Error(ErrorKind::InvalidArgument, "Cayley transform is not symmetric; P is not symplectic");
  return M;
}

Mat2 c_psi(const Mat2& Phi) {
  const Mat2 I = identity2();
  const Mat2 psi = psi_matrix();
  if (det2(Phi - psi) == 0) throw Error(ErrorKind::NotInSpPsi, "Phi - psi is singular for Phi = " + format(Phi));
  return cayley_J() * (psi - I) * inverse2(Phi - psi) * (Phi - I);
}

namespace {

Mat2 symmetric_part(const Mat2& q) { return Mat2((q + q.transpose()) / Rational(2)); }

}  // namespace

int signature_neg_minus_pos(const Mat2& q) { return -signature_pos_minus_neg(symmetric_part(q)); }

Correction concat_correction_D(const Mat2& P1_end, const Mat2& P2_end) {
  const Mat2 sum = cayley_transform(P1_end) + cayley_transform(P2_end);
  Correction c;
  c.singular_form = det2(sum) == 0;
  c.value = -HalfInt::half(signature_neg_minus_pos(sum));
  return c;
}

Correction concat_correction_Z(const Mat2& P1_end, const Mat2& P2_end) {
  const Mat2 c1 = c_psi(P1_end);
  const Mat2 c2 = c_psi(P2_end);
  const Mat2 diff = c2 - c1;
  Correction c;
  c.singular_form =
      det2(symmetric_part(diff)) == 0 || det2(symmetric_part(c1)) == 0 || det2(symmetric_part(c2)) == 0;
  c.value = HalfInt::half(signature_neg_minus_pos(diff) - signature_neg_minus_pos(c2) + signature_neg_minus_pos(c1));
  return c;
}

std::vector<JointCorrection> joint_corrections(const FixedPointRecord& record, const BalancedWord& w,
                                               const ModelParams& params) {
  std::vector<JointCorrection> out;
  const Rational Lk = params.L * params.k;
  Mat2 gamma = identity2();
  for (std::size_t j = 0; j < w.r(); ++j) {
    const auto i = static_cast<std::int64_t>(j);
    const Mat2 A = shear_A(2 * Lk * w.N[j] * record.eps[2 * i]);
    const Mat2 B = shear_B(2 * Lk * w.M[j] * record.eps[2 * i + 1]);
    out.push_back({'Z', j + 1, concat_correction_Z(A, B)});
    const Mat2 psi_end = B * A;
    if (j > 0) out.push_back({'D', j + 1, concat_correction_D(gamma, psi_end)});
    gamma = psi_end * gamma;
  }
  return out;
}

}  // namespace eggbeater
