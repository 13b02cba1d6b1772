#include "lamcoh/circle.hpp"

#include "lamcoh/complex.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace lamcoh {

namespace {

int rsign(const Rational& r) { return r.sign(); }

int common_d(const QuadReal& x, const QuadReal& y) {
  if (x.b() == 0) return y.d();
  if (y.b() == 0) return x.d();
  if (x.d() != y.d()) throw DomainError("mixing sqrt(" + std::to_string(x.d()) + ") and sqrt(" +
                                        std::to_string(y.d()) + ")");
  return x.d();
}

bool square_free(int d) {
  for (int k = 2; k * k <= d; ++k)
    if (d % (k * k) == 0) return false;
  return true;
}

}  // namespace

QuadReal::QuadReal(Rational a, Rational b, int d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
  if (d < 2 || !square_free(d)) throw DomainError("sqrt(" + std::to_string(d) + ") is not a square-free irrational");
}

int QuadReal::sign() const {
  int sa = rsign(a_), sb = rsign(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  Rational lhs = a_ * a_, rhs = b_ * b_ * d_;
  if (lhs > rhs) return sa;
  if (lhs < rhs) return sb;
  return 0;
}

double QuadReal::to_double() const {
  return lamcoh::to_double(a_) + lamcoh::to_double(b_) * std::sqrt(static_cast<double>(d_));
}

Integer QuadReal::floor() const {
  if (b_ == 0) return lamcoh::floor(a_);
  Integer n(static_cast<long long>(std::floor(to_double())));
  while (*this < QuadReal(Rational(n))) n -= 1;
  while (*this >= QuadReal(Rational(n + 1))) n += 1;
  return n;
}

QuadReal QuadReal::frac() const { return *this - QuadReal(Rational(floor())); }

std::string QuadReal::str() const {
  if (b_ == 0) return to_string(a_);
  std::string s = a_ == 0 ? "" : to_string(a_) + (b_ > 0 ? " + " : " - ");
  if (a_ == 0 && b_ < 0) s = "-";
  Rational mag = b_ < 0 ? Rational(-b_) : b_;
  if (mag != 1) s += to_string(mag) + "*";
  return s + "sqrt(" + std::to_string(d_) + ")";
}

QuadReal operator+(const QuadReal& x, const QuadReal& y) {
  return QuadReal(x.a_ + y.a_, x.b_ + y.b_, common_d(x, y));
}
QuadReal operator-(const QuadReal& x, const QuadReal& y) {
  return QuadReal(x.a_ - y.a_, x.b_ - y.b_, common_d(x, y));
}
QuadReal operator-(const QuadReal& x) { return QuadReal(-x.a_, -x.b_, x.d_); }
QuadReal operator*(const QuadReal& x, const QuadReal& y) {
  int d = common_d(x, y);
  return QuadReal(x.a_ * y.a_ + x.b_ * y.b_ * d, x.a_ * y.b_ + x.b_ * y.a_, d);
}
QuadReal operator/(const QuadReal& x, const Rational& r) {
  if (r == 0) throw DomainError("division by zero");
  return QuadReal(x.a_ / r, x.b_ / r, x.d_);
}
bool operator==(const QuadReal& x, const QuadReal& y) {
  return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_ == 0 || x.d_ == y.d_);
}

QuadReal golden_angle() { return QuadReal(Rational(-1, 2), Rational(1, 2), 5); }

// ---------------------------------------------------------------- ArcSet

ArcSet ArcSet::full() {
  ArcSet s;
  s.arcs_.push_back({QuadReal(0), QuadReal(1)});
  return s;
}

bool ArcSet::is_full() const { return arcs_.size() == 1 && arcs_[0].lo == QuadReal(0) && arcs_[0].hi == QuadReal(1); }

ArcSet ArcSet::normalized(std::vector<Arc> pieces) {
  std::sort(pieces.begin(), pieces.end(), [](const Arc& x, const Arc& y) { return x.lo < y.lo; });
  ArcSet out;
  for (auto& p : pieces) {
    if (p.hi <= p.lo) continue;
    if (!out.arcs_.empty() && p.lo <= out.arcs_.back().hi) {
      if (p.hi > out.arcs_.back().hi) out.arcs_.back().hi = p.hi;
    } else {
      out.arcs_.push_back(std::move(p));
    }
  }
  return out;
}

namespace {

void append_arc(std::vector<Arc>& pieces, const QuadReal& lo, const QuadReal& hi) {
  QuadReal span = hi - lo;
  if (span.sign() == 0) return;
  if (span >= QuadReal(1)) {
    pieces.push_back({QuadReal(0), QuadReal(1)});
    return;
  }
  if (span.sign() < 0) span = span.frac();
  if (span.sign() == 0) return;
  QuadReal s = lo.frac();
  QuadReal e = s + span;
  if (e <= QuadReal(1)) {
    pieces.push_back({s, e});
  } else {
    pieces.push_back({s, QuadReal(1)});
    pieces.push_back({QuadReal(0), e - QuadReal(1)});
  }
}

}  // namespace

ArcSet ArcSet::arc(const QuadReal& lo, const QuadReal& hi) { return from_arcs({{lo, hi}}); }

ArcSet ArcSet::from_arcs(const std::vector<Arc>& arcs) {
  std::vector<Arc> pieces;
  for (const auto& a : arcs) append_arc(pieces, a.lo, a.hi);
  return normalized(std::move(pieces));
}

QuadReal ArcSet::length() const {
  QuadReal total(0);
  for (const auto& a : arcs_) total = total + (a.hi - a.lo);
  return total;
}

bool ArcSet::contains(const QuadReal& x) const {
  QuadReal t = x.frac();
  for (const auto& a : arcs_) {
    if (t < a.lo) return false;
    if (t < a.hi) return true;
  }
  return false;
}

bool operator==(const ArcSet& x, const ArcSet& y) { return x.arcs_ == y.arcs_; }

ArcSet rotate(const ArcSet& a, const QuadReal& theta) {
  std::vector<Arc> shifted;
  for (const auto& arc : a.arcs()) shifted.push_back({arc.lo + theta, arc.hi + theta});
  return ArcSet::from_arcs(shifted);
}

ArcSet boolean(const ArcSet& a, const ArcSet& b, BoolOp op) {
  std::vector<QuadReal> cuts{QuadReal(0), QuadReal(1)};
  for (const auto* s : {&a, &b})
    for (const auto& arc : s->arcs()) {
      cuts.push_back(arc.lo);
      cuts.push_back(arc.hi);
    }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::vector<Arc> pieces;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    bool x = a.contains(cuts[i]), y = b.contains(cuts[i]);
    bool in = false;
    switch (op) {
      case BoolOp::Xor: in = x != y; break;
      case BoolOp::And: in = x && y; break;
      case BoolOp::Or: in = x || y; break;
      case BoolOp::Minus: in = x && !y; break;
    }
    if (in) pieces.push_back({cuts[i], cuts[i + 1]});
  }
  return ArcSet::from_arcs(pieces);
}

ArcSet complement(const ArcSet& a) { return boolean(ArcSet::full(), a, BoolOp::Minus); }

ArcSet indicator_coboundary(const ArcSet& b, const QuadReal& alpha) {
  return boolean(rotate(b, -alpha), b, BoolOp::Xor);
}

ArcSet zero_set(const std::vector<ArcSet>& bs, const std::vector<QuadReal>& alphas) {
  if (bs.size() != alphas.size()) throw DomainError("need one angle per arc set");
  ArcSet acc;
  for (std::size_t i = 0; i < bs.size(); ++i) acc = boolean(acc, indicator_coboundary(bs[i], alphas[i]), BoolOp::Xor);
  return complement(acc);
}

ArcSet thicken(const ArcSet& b, const QuadReal& eps) {
  std::vector<Arc> pieces = b.arcs();
  for (const auto& a : b.arcs()) pieces.push_back({a.hi, a.hi + eps});
  return ArcSet::from_arcs(pieces);
}

std::vector<QuadReal> approximation_lengths(const std::vector<ArcSet>& bs, const std::vector<QuadReal>& alphas,
                                            int levels) {
  std::vector<QuadReal> out;
  Rational scale(1);
  for (int n = 1; n <= levels; ++n) {
    scale /= 2;
    std::vector<ArcSet> us;
    for (const auto& b : bs) {
      auto m = static_cast<long>(b.arcs().size());
      us.push_back(m == 0 ? b : thicken(b, QuadReal(scale / (m + 1))));
    }
    out.push_back(zero_set(us, alphas).length());
  }
  return out;
}

InvarianceCertificate is_rotation_invariant(const ArcSet& a, const QuadReal& theta) {
  ArcSet diff = boolean(rotate(a, theta), a, BoolOp::Xor);
  InvarianceCertificate c;
  c.invariant = diff.is_empty();
  if (!c.invariant) c.witness = diff.arcs().front().lo;
  return c;
}

CoboundaryAnswer one_is_coboundary(int q, int p) {
  if (q < 1) throw DomainError("q must be positive");
  int r = ((p % q) + q) % q;
  if (std::gcd(r, q) != 1) throw DomainError("gcd(p, q) must be 1");
  CoboundaryAnswer ans;
  if (q % 2 == 0) {
    ans.coboundary = true;
    ans.witness.assign(static_cast<std::size_t>(q), 0);
    int t = 0;
    for (int k = 0; k < q; ++k, t = (t + r) % q) ans.witness[static_cast<std::size_t>(t)] = k % 2;
  } else {
    ans.obstruction = "summing f(t + p) - f(t) = 1 over the single orbit of " + std::to_string(q) +
                      " points gives 0 = " + std::to_string(q) + " = 1 mod 2";
  }
  return ans;
}

}  // namespace lamcoh
