#include "doctest.h"

#include "lamcoh/circle.hpp"
#include "lamcoh/cohomology.hpp"
#include "lamcoh/constructions.hpp"
#include "oracle.hpp"

#include <cmath>
#include <random>

using namespace lamcoh;

namespace {

QuadReal q(int a, int b = 1) { return QuadReal(Rational(a, b)); }
QuadReal s5(int a, int an, int b, int bn) { return QuadReal(Rational(a, an), Rational(b, bn), 5); }

// Oracle: membership on a fine grid of doubles.
bool grid_contains(const ArcSet& a, double x) {
  for (const auto& arc : a.arcs())
    if (arc.lo.to_double() <= x && x < arc.hi.to_double()) return true;
  return false;
}

ArcSet random_arcs(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-20, 20), count(1, 3);
  std::vector<Arc> arcs;
  int n = count(rng);
  for (int i = 0; i < n; ++i) {
    QuadReal lo = s5(num(rng), 7, num(rng), 11);
    arcs.push_back({lo, lo + s5(std::abs(num(rng)) + 1, 60, 0, 1)});
  }
  return ArcSet::from_arcs(arcs);
}

}  // namespace

TEST_CASE("quadratic reals") {
  auto phi = golden_angle();
  CHECK(phi.sign() > 0);
  CHECK(phi < q(5, 8));
  CHECK(phi > q(3, 5));
  CHECK(phi.to_double() == doctest::Approx((std::sqrt(5.0) - 1) / 2));
  CHECK(phi * phi + phi == q(1));
  CHECK((q(7, 3) - s5(0, 1, 1, 1)).floor() == 0);
  CHECK((-phi).floor() == -1);
  CHECK((-phi).frac() == q(1) - phi);
  CHECK(s5(9, 4, -1, 1).sign() > 0);
  CHECK(s5(-9, 4, 1, 1).sign() < 0);
  CHECK_THROWS_AS(QuadReal(Rational(1), Rational(1), 4), DomainError);
  CHECK_THROWS_AS(s5(0, 1, 1, 1) + QuadReal(Rational(0), Rational(1), 2), DomainError);
  CHECK_NOTHROW(q(1) + QuadReal(Rational(0), Rational(1), 2));
}

TEST_CASE("arc construction") {
  auto a = ArcSet::arc(q(3, 4), q(5, 4));
  REQUIRE(a.arcs().size() == 2);
  CHECK(a.arcs()[0] == Arc{q(0), q(1, 4)});
  CHECK(a.arcs()[1] == Arc{q(3, 4), q(1)});
  CHECK(a.length() == q(1, 2));
  CHECK(ArcSet::arc(q(1, 3), q(1, 3)).is_empty());
  CHECK(ArcSet::arc(q(1, 3), q(7, 3)).is_full());
  CHECK(ArcSet::from_arcs({{q(0), q(1, 2)}, {q(1, 2), q(1)}}).is_full());
  CHECK(a.contains(q(3, 4)));
  CHECK(!a.contains(q(1, 4)));
  CHECK(a.contains(q(-1, 8)));
}

TEST_CASE("booleans and rotation agree with a grid oracle") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    auto a = random_arcs(rng), b = random_arcs(rng);
    auto theta = s5(trial, 13, 1, 3);
    auto x = boolean(a, b, BoolOp::Xor), n = boolean(a, b, BoolOp::And), u = boolean(a, b, BoolOp::Or);
    auto r = rotate(a, theta);
    CHECK(x.length() == a.length() + b.length() - n.length() - n.length());
    CHECK(u.length() == a.length() + b.length() - n.length());
    CHECK(r.length() == a.length());
    CHECK(rotate(r, -theta) == a);
    CHECK(complement(complement(a)) == a);
    double th = theta.to_double();
    for (int k = 0; k < 997; ++k) {
      double t = (k + 0.5) / 997.0;
      bool ia = grid_contains(a, t), ib = grid_contains(b, t);
      CHECK(grid_contains(x, t) == (ia != ib));
      CHECK(grid_contains(n, t) == (ia && ib));
      double back = t - th;
      back -= std::floor(back);
      CHECK(grid_contains(r, t) == grid_contains(a, back));
    }
  }
}

TEST_CASE("indicator coboundary and zero set") {
  auto b = ArcSet::arc(q(0), q(1, 2));
  auto alpha = q(1, 4);
  auto d = indicator_coboundary(b, alpha);
  // chi_B(z + 1/4) + chi_B(z) is 1 on [1/4, 1/2) and [3/4, 1).
  CHECK(d == ArcSet::from_arcs({{q(1, 4), q(1, 2)}, {q(3, 4), q(1)}}));
  CHECK(zero_set({b}, {alpha}) == complement(d));
  CHECK(indicator_coboundary(b, q(1, 2)).is_full());
  CHECK(zero_set({b}, {q(1, 2)}).is_empty());

  std::mt19937 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<ArcSet> bs{random_arcs(rng), random_arcs(rng)};
    std::vector<QuadReal> alphas{golden_angle(), s5(1, 3, 1, 7)};
    auto z = zero_set(bs, alphas);
    auto lengths = approximation_lengths(bs, alphas, 8);
    Rational bound(2 * 2);
    for (const auto& len : lengths) {
      bound /= 2;
      CHECK((len - z.length()).to_double() <= bound.convert_to<double>() + 1e-15);
      CHECK((z.length() - len).to_double() <= bound.convert_to<double>() + 1e-15);
    }
  }
}

TEST_CASE("rotation invariance") {
  auto b = ArcSet::from_arcs({{q(0), q(1, 6)}, {q(1, 3), q(1, 2)}, {q(2, 3), q(5, 6)}});
  CHECK(is_rotation_invariant(b, q(1, 3)).invariant);
  CHECK(rotate(b, -q(1, 6)) == complement(b));
  auto no = is_rotation_invariant(b, golden_angle());
  CHECK(!no.invariant);
  REQUIRE(no.witness);
  CHECK(rotate(b, golden_angle()).contains(*no.witness) != b.contains(*no.witness));
  CHECK(is_rotation_invariant(ArcSet::full(), golden_angle()).invariant);
}

TEST_CASE("constant one as a coboundary of a finite rotation") {
  auto four = one_is_coboundary(4, 1);
  CHECK(four.coboundary);
  CHECK(four.witness == std::vector<int>{0, 1, 0, 1});
  CHECK(one_is_coboundary(2, 1).witness == std::vector<int>{0, 1});
  CHECK(!one_is_coboundary(3, 1).coboundary);
  CHECK(!one_is_coboundary(3, 1).obstruction.empty());
  CHECK_THROWS_AS(one_is_coboundary(4, 2), DomainError);
  for (int qq = 1; qq <= 10; ++qq) {
    for (int p = 1; p <= qq; ++p) {
      if (std::gcd(p, qq) != 1) continue;
      auto ans = one_is_coboundary(qq, p);
      CHECK(ans.coboundary == oracle::one_is_coboundary_brute(qq, p));
      auto k = kronecker_model(qq, p);
      CHECK(ans.coboundary == is_coboundary(k, Cochain::constant(k, 1, Coefficient(Z2(true)))));
      for (int t = 0; t < qq && ans.coboundary; ++t)
        CHECK((ans.witness[static_cast<std::size_t>((t + p) % qq)] ^ ans.witness[static_cast<std::size_t>(t)]) == 1);
    }
  }
}
