#include "lamcoh/field.hpp"

#include <sstream>

namespace lamcoh {

CoefficientKind parse_coefficient_kind(const std::string& name) {
  if (name == "z2" || name == "Z2") return CoefficientKind::Z2;
  if (name == "q" || name == "Q") return CoefficientKind::Q;
  if (name == "r" || name == "R") return CoefficientKind::R;
  throw std::invalid_argument("unknown coefficient kind '" + name + "' (expected z2, q or r)");
}

std::string to_string(CoefficientKind kind) {
  switch (kind) {
    case CoefficientKind::Z2: return "z2";
    case CoefficientKind::Q: return "q";
    case CoefficientKind::R: return "r";
  }
  return "?";
}

Coefficient Coefficient::zero(CoefficientKind kind) { return from_int(kind, 0); }
Coefficient Coefficient::one(CoefficientKind kind) { return from_int(kind, 1); }

Coefficient Coefficient::from_int(CoefficientKind kind, long long v) {
  switch (kind) {
    case CoefficientKind::Z2: return Coefficient(FieldTraits<Z2>::from_int(v));
    case CoefficientKind::Q: return Coefficient(Rational(v));
    case CoefficientKind::R: return Coefficient(static_cast<double>(v));
  }
  throw std::logic_error("bad coefficient kind");
}

bool Coefficient::is_zero() const {
  return std::visit([](const auto& v) {
    using T = std::decay_t<decltype(v)>;
    return FieldTraits<T>::is_zero(v);
  }, value_);
}

double Coefficient::approx() const {
  switch (kind()) {
    case CoefficientKind::Z2: return as_z2().bit ? 1.0 : 0.0;
    case CoefficientKind::Q: return to_double(as_rational());
    case CoefficientKind::R: return as_double();
  }
  return 0.0;
}

namespace {

template <class Op>
Coefficient combine(const Coefficient& a, const Coefficient& b, Op op) {
  if (a.kind() != b.kind()) throw std::invalid_argument("mixed coefficient kinds");
  switch (a.kind()) {
    case CoefficientKind::Z2: return Coefficient(op(a.as_z2(), b.as_z2()));
    case CoefficientKind::Q: return Coefficient(Rational(op(a.as_rational(), b.as_rational())));
    case CoefficientKind::R: return Coefficient(op(a.as_double(), b.as_double()));
  }
  throw std::logic_error("bad coefficient kind");
}

}  // namespace

Coefficient operator+(const Coefficient& a, const Coefficient& b) {
  return combine(a, b, [](const auto& x, const auto& y) { return x + y; });
}
Coefficient operator-(const Coefficient& a, const Coefficient& b) {
  return combine(a, b, [](const auto& x, const auto& y) { return x - y; });
}
Coefficient operator*(const Coefficient& a, const Coefficient& b) {
  return combine(a, b, [](const auto& x, const auto& y) { return x * y; });
}

std::string Coefficient::str() const {
  switch (kind()) {
    case CoefficientKind::Z2: return as_z2().bit ? "1" : "0";
    case CoefficientKind::Q: return to_string(as_rational());
    case CoefficientKind::R: {
      std::ostringstream os;
      os.precision(17);
      os << as_double();
      return os.str();
    }
  }
  return "?";
}

}  // namespace lamcoh
