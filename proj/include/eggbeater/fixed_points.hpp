#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eggbeater/geometry.hpp"
#include "eggbeater/linalg.hpp"
#include "eggbeater/shear.hpp"
#include "eggbeater/word.hpp"

namespace eggbeater {

/// Signs (eps_0, ..., eps_{2r-1}); indices are reduced modulo 2r on access.
class SignVector {
 public:
  SignVector() = default;
  explicit SignVector(std::vector<int> eps);

  /// All 2^{2r} sign vectors, ordered with +1 before -1 at every position.
  static std::vector<SignVector> all(std::size_t r);
  /// The vector eps_{2j} = sign(N_j), eps_{2j+1} = sign(M_j).
  static SignVector top(const BalancedWord& w);
  static SignVector parse(std::string_view text);

  int operator[](std::int64_t j) const;
  std::size_t size() const { return eps_.size(); }
  const std::vector<int>& values() const { return eps_; }
  SignVector negated() const;
  SignVector flipped(std::size_t j) const;
  /// "+-+-" style.
  std::string str() const;

  friend bool operator==(const SignVector&, const SignVector&) = default;

 private:
  std::vector<int> eps_;
};

// j is 1-based, as in the product A_r ... A_1.
Mat2 build_Aj(std::size_t j, const SignVector& eps, const BalancedWord& w, const ModelParams& params);
Vec2 build_vj(std::size_t j, const SignVector& eps, const BalancedWord& w, const ModelParams& params);

struct AffineMap {
  Mat2 A;
  Vec2 v;
  Vec2 operator()(const Vec2& z) const { return A * z + v; }
};

/// Abar = A_r ... A_1 and vbar = v_r + sum_j A_r ... A_{j+1} v_j.
AffineMap compose_Abar_vbar(const SignVector& eps, const BalancedWord& w, const ModelParams& params);

struct ValidityFlags {
  bool closure = false;
  bool signs = false;
  bool windows = false;
  bool inside_square = false;
  bool outside_smoothing = false;  // vacuous when delta = 0

  bool all() const { return closure && signs && windows && inside_square && outside_smoothing; }
};

struct FixedPointRecord {
  SignVector eps;
  std::int64_t k = 0;
  Rational delta{0};
  /// z_0, z_1, ..., z_{2r-1}; even points in V coordinates, odd points in H coordinates.
  std::vector<PlanePoint> points;
  std::vector<Rational> nu;
  std::vector<Rational> mu;
  /// Expected lattice windings k sign(N_1), k sign(M_1), ..., k sign(M_r).
  std::vector<std::int64_t> windings;
  Mat2 Abar;
  Rational det_Abar_minus_one{0};
  ValidityFlags flags;
  bool on_kink = false;

  const PlanePoint& z0() const { return points.front(); }
  bool valid() const { return flags.all(); }
};

/// Solves (Abar - 1) z = -vbar exactly and validates the orbit. Throws
/// SingularSystem when det(Abar - 1) = 0.
FixedPointRecord solve_fixed_point(const SignVector& eps, const BalancedWord& w, const ModelParams& params);

std::vector<FixedPointRecord> solve_all(const BalancedWord& w, const ModelParams& params);

/// True when every sign vector yields a valid record at these parameters.
bool all_valid(const BalancedWord& w, const ModelParams& params);

/// Smallest k (from 1 up to cap) at which all_valid holds under the delta policy.
std::int64_t minimal_valid_k(const BalancedWord& w, const Rational& L, const DeltaPolicy& policy,
                             std::int64_t cap = 10000);

struct AsymptoticQuantity {
  std::string name;
  Rational predicted;
  Rational actual;
  Rational abs_error;
  Rational rel_error;
};

struct AsymptoticReport {
  std::vector<AsymptoticQuantity> matrix;  // Abar entries and det(Abar - 1)
  std::vector<AsymptoticQuantity> points;  // coordinates of the intermediate points
  Rational det_rel_error;
  Rational max_point_error;
  bool trace_identity = false;
};

AsymptoticReport asymptotic_checks(const FixedPointRecord& record, const BalancedWord& w, const ModelParams& params);

}  // namespace eggbeater
