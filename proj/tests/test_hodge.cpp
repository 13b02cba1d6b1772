#include "doctest.h"

#include "lamcoh/constructions.hpp"
#include "lamcoh/hodge.hpp"
#include "lamcoh/subdivision.hpp"

#include <cmath>

using namespace lamcoh;

namespace {

FiberedComplex single(const BaseComplex& base) { return product_complex(base, Transversal::uniform(1)); }

FiberedComplex weighted_circle() {
  return product_complex(BaseComplex::circle(3), Transversal{{Rational(1, 2), Rational(1, 3)}});
}

}  // namespace

TEST_CASE("inner products") {
  auto p = product_complex(BaseComplex::point(), Transversal{{Rational(1, 2)}});
  auto one = Cochain::constant(p, 0, Coefficient(Rational(1)));
  CHECK(inner_product(p, one, one) == Coefficient(Rational(1, 2)));
  auto zero = Cochain::zero(p, 0, CoefficientKind::Q);
  CHECK(inner_product(p, zero, zero) == Coefficient(Rational(0)));

  auto k = kronecker_model(4, 1);
  auto w = Cochain::constant(k, 1, Coefficient(Rational(1)));
  CHECK(inner_product(k, w, w) == Coefficient(Rational(1)));
  CHECK_THROWS_AS(inner_product(k, w, one), DomainError);
}

TEST_CASE("laplacians") {
  auto v = single(BaseComplex::point());
  CHECK(laplacian(v, 0)(0, 0) == 0.0);

  auto e = single(BaseComplex::from_tuples({{0, 1}}));
  Eigen::Matrix2d expected;
  expected << 1, -1, -1, 1;
  CHECK(laplacian(e, 0).isApprox(expected));

  // Oracle: graph Laplacian of the 3-cycle, degree - adjacency.
  auto c = single(BaseComplex::circle(3));
  Eigen::Matrix3d graph;
  graph << 2, -1, -1, -1, 2, -1, -1, -1, 2;
  CHECK(laplacian(c, 0).isApprox(graph));
  auto rep = hodge_report(c, 0);
  REQUIRE(rep.eigenvalues.size() == 3);
  CHECK(std::abs(rep.eigenvalues[0]) < 1e-12);
  CHECK(rep.eigenvalues[1] == doctest::Approx(3.0));
  CHECK(rep.eigenvalues[2] == doctest::Approx(3.0));
}

TEST_CASE("laplacian is self-adjoint in the weighted product") {
  auto c = kronecker_model(5, 2, Transversal::uniform(5, Rational(1, 5)));
  auto x = product_complex(BaseComplex::torus7(), Transversal{{Rational(1, 2), Rational(1, 3), Rational(2, 7)}});
  for (const auto& cx : {c, x}) {
    for (int n = 0; n <= cx.top_dim(); ++n) {
      auto lap = laplacian_exact(cx, n);
      std::vector<Rational> a, b;
      for (int i = 0; i < lap.cols(); ++i) {
        a.emplace_back(i % 4 - 1, 3);
        b.emplace_back((i * i) % 5, 2);
      }
      auto la = dense_from_sparse(lap.apply(sparse_from_dense(a)), a.size());
      auto lb = dense_from_sparse(lap.apply(sparse_from_dense(b)), b.size());
      auto ca = unflatten<Rational>(cx, n, a), cb = unflatten<Rational>(cx, n, b);
      auto cla = unflatten<Rational>(cx, n, la), clb = unflatten<Rational>(cx, n, lb);
      CHECK(inner_product(cx, cla, cb) == inner_product(cx, ca, clb));
    }
  }
}

TEST_CASE("hodge decomposition") {
  auto c = single(BaseComplex::circle(3));
  std::vector<double> w{1.0, 0.0, 0.0};
  auto omega = unflatten<double>(c, 1, w);
  auto d = hodge_decompose(c, omega);
  // Edges are [0,1], [0,2], [1,2]; [0,2] runs against the cycle.
  auto h = flatten<double>(c, d.harmonic);
  CHECK(h[0] == doctest::Approx(1.0 / 3.0));
  CHECK(h[1] == doctest::Approx(-1.0 / 3.0));
  CHECK(h[2] == doctest::Approx(1.0 / 3.0));
  CHECK(d.reconstruction_residual < 1e-12);

  auto rep = hodge_report(c, 1);
  auto back = hodge_decompose(c, rep.harmonic_basis.at(0));
  CHECK(back.reconstruction_residual < 1e-12);
  auto diff = flatten<double>(c, back.harmonic);
  auto orig = flatten<double>(c, rep.harmonic_basis.at(0));
  for (std::size_t i = 0; i < diff.size(); ++i) CHECK(diff[i] == doctest::Approx(orig[i]));

  auto alpha = unflatten<Rational>(c, 0, {Rational(1), Rational(-2), Rational(5, 3)});
  auto exact = hodge_decompose(c, apply_coboundary(c, alpha));
  for (double h : flatten<double>(c, exact.harmonic)) CHECK(std::abs(h) < 1e-12);
  CHECK(exact.orthogonality_residual < 1e-12);
}

TEST_CASE("lambda betti numbers") {
  auto c = weighted_circle();
  CHECK(l2_betti_exact(c, 0) == Rational(5, 6));
  CHECK(l2_betti_exact(c, 1) == Rational(5, 6));
  CHECK(l2_betti(c, 0) == doctest::Approx(5.0 / 6.0).epsilon(1e-12));
  CHECK(l2_betti(c, 1) == doctest::Approx(5.0 / 6.0).epsilon(1e-12));
  CHECK(l2_betti_exact(c, 2) == 0);

  for (int q : {2, 3, 5, 7}) {
    auto k = kronecker_model(q, 1);
    CHECK(l2_betti_exact(k, 1) == Rational(1, q));
    CHECK(l2_betti(k, 1) == doctest::Approx(1.0 / q));
  }

  auto bad = kronecker_model(2, 1);
  bad.transversal.weights = {Rational(1, 2), Rational(1, 3)};
  CHECK_THROWS_AS(l2_betti_exact(bad, 0), InvarianceError);

  auto zero = product_complex(BaseComplex::circle(3), Transversal{{Rational(0), Rational(1)}});
  CHECK(l2_betti_exact(zero, 1) == 1);
}

TEST_CASE("betti numbers survive subdivision and match the euler characteristic") {
  auto cases = {weighted_circle(), kronecker_model(4, 1),
                suspension(SuspensionData::torus_of({1, 2, 0}, {2, 0, 1}), Transversal::uniform(3, Rational(1, 3)))};
  for (const auto& c : cases) {
    auto sd = barycentric_subdivide(c).complex;
    Rational alt = 0;
    for (int n = 0; n <= c.top_dim(); ++n) {
      CHECK(l2_betti_exact(sd, n) == l2_betti_exact(c, n));
      CHECK(std::abs(l2_betti(sd, n) - l2_betti(c, n)) < 1e-8);
      CHECK(hodge_report(c, n).kernel_dim == cohomology_dim(c, n, CoefficientKind::Q).dimension);
      alt += (n % 2 == 0 ? 1 : -1) * l2_betti_exact(c, n);
    }
    CHECK(alt == weighted_euler_characteristic(c));
  }
}
