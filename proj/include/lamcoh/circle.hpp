// Exact arc sets on R/Z with endpoints in Q(sqrt d), and the Z/2 cohomological
// equation of a circle rotation.
#pragma once

#include "lamcoh/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lamcoh {

/// a + b sqrt(d) with d square-free and positive. Values with b = 0 combine
/// with any d; mixing two different d with nonzero b throws DomainError.
class QuadReal {
 public:
  QuadReal() = default;
  QuadReal(Rational a, Rational b = Rational(0), int d = 5);
  QuadReal(int a) : QuadReal(Rational(a)) {}

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  int d() const { return d_; }
  bool is_rational() const { return b_ == 0; }

  /// -1, 0 or 1, decided exactly.
  int sign() const;
  double to_double() const;
  /// Largest integer <= value.
  Integer floor() const;
  /// value - floor(value), in [0, 1).
  QuadReal frac() const;
  std::string str() const;

  friend QuadReal operator+(const QuadReal& x, const QuadReal& y);
  friend QuadReal operator-(const QuadReal& x, const QuadReal& y);
  friend QuadReal operator-(const QuadReal& x);
  friend QuadReal operator*(const QuadReal& x, const QuadReal& y);
  friend QuadReal operator/(const QuadReal& x, const Rational& r);
  friend bool operator==(const QuadReal& x, const QuadReal& y);
  friend bool operator<(const QuadReal& x, const QuadReal& y) { return (x - y).sign() < 0; }
  friend bool operator<=(const QuadReal& x, const QuadReal& y) { return (x - y).sign() <= 0; }
  friend bool operator>(const QuadReal& x, const QuadReal& y) { return (x - y).sign() > 0; }
  friend bool operator>=(const QuadReal& x, const QuadReal& y) { return (x - y).sign() >= 0; }

 private:
  Rational a_{0};
  Rational b_{0};
  int d_ = 5;
};

/// (sqrt 5 - 1) / 2
QuadReal golden_angle();

struct Arc {
  QuadReal lo, hi;
  friend bool operator==(const Arc& x, const Arc& y) { return x.lo == y.lo && x.hi == y.hi; }
};

/// Finite union of half-open arcs [lo, hi) of [0, 1), sorted, disjoint and
/// with no two arcs touching.
class ArcSet {
 public:
  ArcSet() = default;

  static ArcSet empty() { return {}; }
  static ArcSet full();
  /// Arc from lo counterclockwise to hi, endpoints taken mod 1. A span of
  /// length >= 1 gives the full circle; lo == hi gives the empty set.
  static ArcSet arc(const QuadReal& lo, const QuadReal& hi);
  /// Union of arbitrary arcs given by their endpoints (same convention as arc).
  static ArcSet from_arcs(const std::vector<Arc>& arcs);

  const std::vector<Arc>& arcs() const { return arcs_; }
  bool is_empty() const { return arcs_.empty(); }
  bool is_full() const;
  QuadReal length() const;
  bool contains(const QuadReal& x) const;

  friend bool operator==(const ArcSet& x, const ArcSet& y);

 private:
  static ArcSet normalized(std::vector<Arc> pieces);
  std::vector<Arc> arcs_;
};

enum class BoolOp { Xor, And, Or, Minus };

ArcSet rotate(const ArcSet& a, const QuadReal& theta);
ArcSet boolean(const ArcSet& a, const ArcSet& b, BoolOp op);
ArcSet complement(const ArcSet& a);

/// (R_{-alpha} B) xor B, the support of chi_B o R_alpha + chi_B.
ArcSet indicator_coboundary(const ArcSet& b, const QuadReal& alpha);

/// Complement of the xor of the indicator coboundaries.
ArcSet zero_set(const std::vector<ArcSet>& bs, const std::vector<QuadReal>& alphas);

/// Union of B with [hi, hi + eps) after every arc: an open-ish neighbourhood
/// adding at most count * eps.
ArcSet thicken(const ArcSet& b, const QuadReal& eps);

/// length(Z_n) for n = 1..levels, where Z_n uses thickenings of every B_i
/// adding less than 2^-n.
std::vector<QuadReal> approximation_lengths(const std::vector<ArcSet>& bs, const std::vector<QuadReal>& alphas,
                                            int levels);

struct InvarianceCertificate {
  bool invariant = false;
  /// A point of rotate(A, theta) xor A when not invariant.
  std::optional<QuadReal> witness;
};

InvarianceCertificate is_rotation_invariant(const ArcSet& a, const QuadReal& theta);

struct CoboundaryAnswer {
  bool coboundary = false;
  /// f with f(t + p) - f(t) = 1 mod 2, when it exists.
  std::vector<int> witness;
  /// Parity argument when no f exists.
  std::string obstruction;
};

/// Decides whether the constant 1 is f o R - f over Z/2 for R(t) = t + p mod q.
/// Requires gcd(p, q) = 1.
CoboundaryAnswer one_is_coboundary(int q, int p);

}  // namespace lamcoh
