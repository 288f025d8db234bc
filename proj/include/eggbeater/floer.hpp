#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eggbeater/fixed_points.hpp"
#include "eggbeater/linalg.hpp"
#include "eggbeater/polynomial.hpp"

namespace eggbeater {

// ---------------------------------------------------------------- actions

struct ActionData {
  Rational leading;
  Rational exact_relative;
  Rational hamiltonian_term;
  Rational area_term;
};

/// Lk * sum_j [eps_{2j-2} N_j (1 - nu_j)^2 + eps_{2j-1} M_j (1 - mu_j)^2].
Rational action_leading(const FixedPointRecord& record, const BalancedWord& w, const ModelParams& params);

/// Action difference record - base. Hamiltonian terms are k N_j h(x) per shear
/// (x is constant along a shear); area terms integrate x dy in each chart and
/// add the d(xy) transition term at each square crossing.
Rational action_exact_relative(const FixedPointRecord& record, const FixedPointRecord& base, const BalancedWord& w,
                               const ModelParams& params);

ActionData action_data(const FixedPointRecord& record, const FixedPointRecord& base, const BalancedWord& w,
                       const ModelParams& params);

// ------------------------------------------------------------ CZ indices

/// 1 + offset + (1/2) sum_j [eps_{2j-2} sign(N_j) + eps_{2j-1} sign(M_j)].
/// offset models the shift by half the dimension of a stabilizing factor.
HalfInt cz_index(const FixedPointRecord& record, const BalancedWord& w, std::int64_t offset = 0);

/// -(1/2) sign(alpha); ZeroStrength for alpha = 0.
HalfInt rs_index_shear(const Rational& alpha);

// ------------------------------------------------------------ shear paths

enum class ShearKind : char { A = 'A', B = 'B' };

/// A(a) = [[1, 0], [-a, 1]].
Mat2 shear_A(const Rational& a);
/// B(b) = [[1, b], [0, 1]].
Mat2 shear_B(const Rational& b);
Mat2 shear_matrix(ShearKind kind, const Rational& s);

/// t -> Shear(strength * t) * left, or with t replaced by 1 - t when reversed.
struct ShearSegment {
  ShearKind kind;
  Rational strength;
  Mat2 left;
  bool reversed = false;

  Mat2 value(const Rational& t) const;
  Mat2 start() const { return value(0); }
  Mat2 end() const { return value(1); }
};

class Sp2Path {
 public:
  Sp2Path() = default;
  explicit Sp2Path(std::vector<ShearSegment> segments) : segments_(std::move(segments)) {}

  const std::vector<ShearSegment>& segments() const { return segments_; }
  void append(const ShearSegment& s) { segments_.push_back(s); }

  Mat2 start() const;
  Mat2 end() const;
  bool starts_at_identity() const { return start() == identity2(); }
  /// Each segment starts where the previous one ends, and every sampled value has det 1.
  bool is_continuous() const;
  Sp2Path reversed() const;

 private:
  std::vector<ShearSegment> segments_;
};

/// The 2r-segment path: for each j an A-shear of strength 2LkN_j eps_{2j-2}
/// followed by a B-shear of strength 2LkM_j eps_{2j-1}, each acting on the
/// product accumulated so far.
Sp2Path linearized_path(const FixedPointRecord& record, const BalancedWord& w, const ModelParams& params);

/// Sum of rs_index_shear over the segments (the additive formula for the catenation).
HalfInt rs_index_additive(const Sp2Path& path);

/// Crossing found by the numeric oracle.
struct Crossing {
  std::size_t segment;
  bool exact;
  Rational t;  // exact value, or the midpoint of the isolating interval
  int signature;
  bool endpoint;
  bool perturbed;
};

struct RsReport {
  HalfInt index;
  std::vector<Crossing> crossings;
};

/// Robbin-Salamon index by crossing forms: Psi' = J S Psi with J = [[0,-1],[1,0]],
/// crossing form <u, S u> on ker(Psi - 1), signature positive minus negative,
/// endpoints weighted by 1/2. Segments that are degenerate along an interval or
/// have a vanishing crossing form are replaced by a homotopy with fixed endpoints.
RsReport rs_crossings(const Sp2Path& path);
HalfInt rs_index_numeric(const Sp2Path& path);

/// 1 + offset - rs_index_numeric(path); DegenerateEnd if det(end - 1) = 0.
HalfInt cz_index_numeric(const Sp2Path& path, std::int64_t offset = 0);

// --------------------------------------------------- concatenation terms

/// The complex structure used by the Cayley transform and C_psi: [[0, 1], [-1, 0]].
Mat2 cayley_J();
/// psi = [[0, 1], [-1, 0]].
Mat2 psi_matrix();

/// M_P = (1/2) J (1 + P)(1 - P)^{-1}; DegenerateP if det(1 - P) = 0.
Mat2 cayley_transform(const Mat2& P);

/// C_psi(Phi) = J (psi - 1)(Phi - psi)^{-1}(Phi - 1); NotInSpPsi if det(Phi - psi) = 0.
Mat2 c_psi(const Mat2& Phi);

/// Signature counted as negative squares minus positive squares.
int signature_neg_minus_pos(const Mat2& q);

struct Correction {
  HalfInt value;
  bool singular_form = false;  // some form entering the value was degenerate
};

/// D = -(1/2) sign(M_{P1} + M_{P2}).
Correction concat_correction_D(const Mat2& P1_end, const Mat2& P2_end);

/// Z = (1/2) sign(C(P2) - C(P1)) - (1/2) sign(C(P2)) + (1/2) sign(C(P1)).
Correction concat_correction_Z(const Mat2& P1_end, const Mat2& P2_end);

struct JointCorrection {
  char kind;          // 'D' between Gamma_{l-1} and Psi_l, 'Z' inside Psi_j
  std::size_t index;  // l or j, 1-based
  Correction correction;
};

/// Every joint of the linearized path with its correction term.
std::vector<JointCorrection> joint_corrections(const FixedPointRecord& record, const BalancedWord& w,
                                               const ModelParams& params);

}  // namespace eggbeater
