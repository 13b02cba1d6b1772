// Coefficient fields: Z/2, Q (exact) and R (double, tolerance-based).
#pragma once

#include "lamcoh/rational.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

namespace lamcoh {

struct Z2 {
  bool bit = false;

  Z2() = default;
  constexpr explicit Z2(bool b) : bit(b) {}

  friend constexpr Z2 operator+(Z2 a, Z2 b) { return Z2(a.bit != b.bit); }
  friend constexpr Z2 operator-(Z2 a, Z2 b) { return Z2(a.bit != b.bit); }
  friend constexpr Z2 operator-(Z2 a) { return a; }
  friend constexpr Z2 operator*(Z2 a, Z2 b) { return Z2(a.bit && b.bit); }
  friend Z2 operator/(Z2 a, Z2 b) {
    if (!b.bit) throw std::domain_error("division by zero in Z/2");
    return a;
  }
  Z2& operator+=(Z2 o) { bit = bit != o.bit; return *this; }
  Z2& operator-=(Z2 o) { bit = bit != o.bit; return *this; }
  Z2& operator*=(Z2 o) { bit = bit && o.bit; return *this; }
  friend constexpr bool operator==(Z2 a, Z2 b) { return a.bit == b.bit; }
};

enum class CoefficientKind { Z2, Q, R };

CoefficientKind parse_coefficient_kind(const std::string& name);
std::string to_string(CoefficientKind kind);

/// Per-field constants and predicates used by the generic elimination code.
template <class F>
struct FieldTraits;

template <>
struct FieldTraits<Z2> {
  static constexpr CoefficientKind kind = CoefficientKind::Z2;
  static Z2 zero() { return Z2(false); }
  static Z2 one() { return Z2(true); }
  static bool is_zero(const Z2& v) { return !v.bit; }
  static Z2 from_int(long long v) { return Z2((v % 2) != 0); }
};

template <>
struct FieldTraits<Rational> {
  static constexpr CoefficientKind kind = CoefficientKind::Q;
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static bool is_zero(const Rational& v) { return v == 0; }
  static Rational from_int(long long v) { return Rational(v); }
};

template <>
struct FieldTraits<double> {
  static constexpr CoefficientKind kind = CoefficientKind::R;
  static double zero() { return 0.0; }
  static double one() { return 1.0; }
  static bool is_zero(double v) { return v == 0.0; }
  static double from_int(long long v) { return static_cast<double>(v); }
};

/// A field element tagged with its field. Mixed-kind arithmetic is an error.
class Coefficient {
 public:
  Coefficient() : value_(Rational(0)) {}
  explicit Coefficient(Z2 v) : value_(v) {}
  explicit Coefficient(Rational v) : value_(std::move(v)) {}
  explicit Coefficient(double v) : value_(v) {}

  static Coefficient zero(CoefficientKind kind);
  static Coefficient one(CoefficientKind kind);
  static Coefficient from_int(CoefficientKind kind, long long v);

  CoefficientKind kind() const { return static_cast<CoefficientKind>(value_.index()); }
  bool is_zero() const;

  const Z2& as_z2() const { return std::get<Z2>(value_); }
  const Rational& as_rational() const { return std::get<Rational>(value_); }
  double as_double() const { return std::get<double>(value_); }
  double approx() const;

  template <class F>
  F get() const { return std::get<F>(value_); }

  friend Coefficient operator+(const Coefficient& a, const Coefficient& b);
  friend Coefficient operator-(const Coefficient& a, const Coefficient& b);
  friend Coefficient operator*(const Coefficient& a, const Coefficient& b);
  friend bool operator==(const Coefficient& a, const Coefficient& b) { return a.value_ == b.value_; }

  std::string str() const;

 private:
  std::variant<Z2, Rational, double> value_;
};

template <class F>
Coefficient make_coefficient(const F& v) { return Coefficient(v); }

}  // namespace lamcoh
