#include "doctest.h"

#include "lamcoh/geometry.hpp"

#include <random>

using namespace lamcoh;

namespace {

Point pt(std::initializer_list<int> xs) {
  Point p;
  for (int x : xs) p.emplace_back(x);
  return p;
}

struct Box {
  Point lo, hi;
};

// Oracle: volume of a union of boxes by inclusion-exclusion.
Rational union_volume(const std::vector<Box>& boxes) {
  Rational total(0);
  const std::size_t m = boxes.size();
  for (std::size_t mask = 1; mask < (std::size_t(1) << m); ++mask) {
    Point lo, hi;
    int bits = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (!(mask >> i & 1u)) continue;
      ++bits;
      if (lo.empty()) {
        lo = boxes[i].lo;
        hi = boxes[i].hi;
      }
      for (std::size_t k = 0; k < lo.size(); ++k) {
        lo[k] = std::max(lo[k], boxes[i].lo[k]);
        hi[k] = std::min(hi[k], boxes[i].hi[k]);
      }
    }
    Rational v(1);
    for (std::size_t k = 0; k < lo.size(); ++k) v *= hi[k] > lo[k] ? hi[k] - lo[k] : Rational(0);
    total += bits % 2 ? v : -v;
  }
  return total;
}

std::vector<Box> random_boxes(std::mt19937& rng, int n, int count) {
  std::uniform_int_distribution<int> coord(0, 4);
  std::vector<Box> out;
  for (int b = 0; b < count; ++b) {
    Box box;
    for (int k = 0; k < n; ++k) {
      int x = coord(rng), y = coord(rng);
      while (y == x) y = coord(rng);
      box.lo.emplace_back(std::min(x, y), 2);
      box.hi.emplace_back(std::max(x, y), 2);
    }
    out.push_back(box);
  }
  return out;
}

}  // namespace

TEST_CASE("half-spaces are canonical") {
  auto h = HalfSpace::make({Rational(-2), Rational(4, 3)}, Rational(1));
  CHECK(h.normal == std::vector<Integer>{3, -2});
  CHECK(h.offset == Rational(-3, 2));
  CHECK(h.sense == HalfSpace::Sense::Ge);
  CHECK(h.contains(pt({0, 0})));
  CHECK(!h.contains(pt({0, 2})));
  CHECK(h == HalfSpace::at_least({Rational(6), Rational(-4)}, Rational(-3)));
  CHECK_THROWS_AS(HalfSpace::make({Rational(0)}, Rational(1)), DomainError);
}

TEST_CASE("regions") {
  auto sq = LinearRegion::box(pt({0, 0}), pt({1, 1}));
  CHECK(piece_vertices(2, sq.pieces[0]).size() == 4);
  CHECK(region_volume(sq) == 1);
  CHECK(mass_center(2, sq.pieces[0]) == Point{Rational(1, 2), Rational(1, 2)});
  ConvexPiece tri{HalfSpace::at_least({Rational(1), Rational(0)}, 0), HalfSpace::at_least({Rational(0), Rational(1)}, 0),
                  HalfSpace::make({Rational(1), Rational(1)}, 1)};
  CHECK(piece_volume(2, tri) == Rational(1, 2));
  CHECK(mass_center(2, tri) == Point{Rational(1, 3), Rational(1, 3)});
  // Trapezoid: the mass center is not the vertex average.
  ConvexPiece trap{HalfSpace::at_least({Rational(0), Rational(1)}, 0), HalfSpace::make({Rational(0), Rational(1)}, 1),
                   HalfSpace::at_least({Rational(1), Rational(0)}, 0), HalfSpace::make({Rational(1), Rational(1)}, 2)};
  CHECK(piece_volume(2, trap) == Rational(3, 2));
  CHECK(mass_center(2, trap) == Point{Rational(7, 9), Rational(4, 9)});

  ConvexPiece slab{HalfSpace::at_least({Rational(1), Rational(0)}, 0), HalfSpace::make({Rational(1), Rational(0)}, 1)};
  CHECK_THROWS_AS(piece_vertices(2, slab), DomainError);
  auto bad = validate_region({2, {slab}});
  REQUIRE(bad.size() == 1);
  CHECK(bad[0].kind == "bounded");
  LinearRegion apart{2, {sq.pieces[0], LinearRegion::box(pt({3, 3}), pt({4, 4})).pieces[0]}};
  auto split = validate_region(apart);
  REQUIRE(split.size() == 1);
  CHECK(split[0].kind == "connected");
  CHECK(validate_region(sq).empty());
}

TEST_CASE("attach decompose") {
  auto r1 = LinearRegion::box(pt({0, 0}), pt({2, 1}));
  auto r2 = LinearRegion::box(pt({1, 0}), pt({3, 1}));
  auto out = attach_decompose({r1, r2});
  REQUIRE(out.size() == 3);
  std::vector<std::vector<Point>> seen;
  for (const auto& r : out) {
    REQUIRE(r.pieces.size() == 1);
    seen.push_back(piece_vertices(2, r.pieces[0]));
  }
  std::sort(seen.begin(), seen.end());
  for (int i = 0; i < 3; ++i) {
    auto expected = piece_vertices(2, LinearRegion::box(pt({i, 0}), pt({i + 1, 1})).pieces[0]);
    CHECK(seen[static_cast<std::size_t>(i)] == expected);
  }

  CHECK(attach_decompose({r1}).size() == 1);
  CHECK(attach_decompose({r1}).front().pieces == r1.pieces);
  auto far = LinearRegion::box(pt({5, 5}), pt({6, 7}));
  auto pair = attach_decompose({r1, far});
  REQUIRE(pair.size() == 2);
  CHECK(pair[0].pieces == r1.pieces);
  CHECK(pair[1].pieces == far.pieces);

  CHECK(!attached_or_disjoint(r1, r2));
  CHECK(attached_or_disjoint(LinearRegion::box(pt({0, 0}), pt({1, 1})), LinearRegion::box(pt({1, 0}), pt({2, 1}))));
  // Touching along half of an edge is not attached.
  CHECK(!attached_or_disjoint(r1, LinearRegion::box(pt({0, 1}), pt({1, 2}))));
}

TEST_CASE("convex decompose") {
  auto sq = LinearRegion::box(pt({0, 0}), pt({1, 1}));
  CHECK(convex_decompose(sq).size() == 1);
  LinearRegion ell{2, {LinearRegion::box(pt({0, 0}), pt({2, 1})).pieces[0],
                       LinearRegion::box(pt({0, 0}), pt({1, 2})).pieces[0]}};
  auto parts = convex_decompose(ell);
  CHECK(parts.size() == 3);
  Rational area(0);
  for (const auto& p : parts) area += region_volume(p);
  CHECK(area == 3);
  LinearRegion edge{2, {sq.pieces[0], LinearRegion::box(pt({1, 0}), pt({2, 1})).pieces[0]}};
  auto halves = convex_decompose(edge);
  REQUIRE(halves.size() == 2);
  CHECK(attached_or_disjoint(halves[0], halves[1]));
}

TEST_CASE("triangulate counts and volumes") {
  auto sq = triangulate({LinearRegion::box(pt({0, 0}), pt({1, 1}))});
  CHECK(sq.simplices.size() == 8);
  ConvexPiece tri{HalfSpace::at_least({Rational(1), Rational(0)}, 0), HalfSpace::at_least({Rational(0), Rational(1)}, 0),
                  HalfSpace::make({Rational(1), Rational(1)}, 1)};
  CHECK(triangulate({LinearRegion::convex(2, tri)}).simplices.size() == 6);
  CHECK(triangulate({LinearRegion::box(pt({0, 0, 0}), pt({1, 1, 1}))}).simplices.size() == 48);
  CHECK(triangulate({LinearRegion::box(pt({0}), pt({3}))}).simplices.size() == 2);
  CHECK_THROWS_AS(triangulate({LinearRegion::box(pt({0, 0}), pt({2, 1})), LinearRegion::box(pt({1, 0}), pt({3, 1}))}),
                  DomainError);

  std::mt19937 rng(3);
  for (int trial = 0; trial < 12; ++trial) {
    int n = 1 + trial % 3;
    auto boxes = random_boxes(rng, n, 1 + trial % 4);
    std::vector<LinearRegion> regions;
    for (const auto& b : boxes) regions.push_back(LinearRegion::box(b.lo, b.hi));
    auto parts = attach_decompose(regions);
    Rational vol(0);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      vol += region_volume(parts[i]);
      for (std::size_t j = i + 1; j < parts.size(); ++j) CHECK(attached_or_disjoint(parts[i], parts[j]));
    }
    CHECK(vol == union_volume(boxes));
    auto t = triangulate(parts);
    Rational tv(0);
    for (std::size_t i = 0; i < t.simplices.size(); ++i) {
      tv += t.simplices[i].volume();
      for (const auto& v : t.simplices[i].vertices) CHECK(parts[static_cast<std::size_t>(t.owner[i])].contains(v));
    }
    CHECK(!find_overlap(t.simplices));
    if (trial < 4) {
      for (std::size_t i = 0; i < t.simplices.size(); ++i)
        for (std::size_t j = i + 1; j < t.simplices.size(); ++j)
          CHECK(interiors_disjoint(t.simplices[i], t.simplices[j]));
    }
    CHECK(tv == vol);
  }
}

TEST_CASE("separating axes") {
  auto a = Simplex::make({pt({0, 0}), pt({1, 0}), pt({0, 1})});
  auto b = Simplex::make({pt({1, 0}), pt({0, 1}), pt({1, 1})});
  auto c = Simplex::make({pt({0, 0}), pt({1, 0}), pt({1, 1})});
  CHECK(interiors_disjoint(a, b));
  CHECK(!interiors_disjoint(a, c));
  auto t1 = Simplex::make({pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1})});
  auto t2 = Simplex::make({pt({1, 1, 1}), pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1})});
  CHECK(interiors_disjoint(t1, t2));
  auto t3 = Simplex::make({pt({0, 0, 0}), pt({2, 0, 0}), pt({0, 2, 0}), pt({0, 0, 2})});
  CHECK(!interiors_disjoint(t2, t3));
  CHECK(find_overlap({t1, t2}) == std::nullopt);
  CHECK(find_overlap({t1, t2, t3}) == std::pair{0, 2});
  CHECK_THROWS_AS(Simplex::make({pt({0, 0}), pt({1, 1}), pt({2, 2})}), DomainError);
}

TEST_CASE("prism decomposition") {
  Rational simplex_volume(1);
  for (int n = 0; n <= 3; ++n) {
    if (n > 0) simplex_volume /= n;
    auto p = prism_decompose(n);
    CHECK(static_cast<int>(p.simplices.size()) == n + 1);
    Rational total(0);
    for (int i = 0; i <= n; ++i) {
      CHECK(p.signs[static_cast<std::size_t>(i)] == (i % 2 == 0 ? 1 : -1));
      total += p.simplices[static_cast<std::size_t>(i)].volume();
    }
    CHECK(total == simplex_volume);
    CHECK(prism_telescopes(p));
    auto broken = p;
    if (n > 0) {
      broken.signs[0] = -broken.signs[0];
      CHECK(!prism_telescopes(broken));
    }
  }
  for (const auto& s : prism_decompose(2).simplices) CHECK(s.volume() == Rational(1, 6));
}

TEST_CASE("adapted subdivision") {
  auto iv = [](int lo, int ld, bool lc, int hi, int hd, bool hc) {
    return Interval{Rational(lo, ld), Rational(hi, hd), lc, hc};
  };
  auto one = adapted_subdivision(2, 3, {{{iv(-1, 1, false, 2, 1, false), iv(-1, 1, false, 2, 1, false)}, {0, 1, 2}}});
  CHECK(one.blocks == std::vector<std::vector<int>>{{0, 1, 2}});
  REQUIRE(one.triangulation.size() == 1);
  CHECK(one.triangulation[0].size() == 1);

  std::vector<CoverElement> cover{{{iv(0, 1, true, 3, 5, false)}, {0, 1}},
                                  {{iv(2, 5, false, 1, 1, true)}, {0}},
                                  {{iv(3, 10, false, 1, 1, true)}, {1}}};
  auto ad = adapted_subdivision(1, 2, cover);
  CHECK(ad.blocks == std::vector<std::vector<int>>{{0}, {1}});
  REQUIRE(ad.triangulation[0].size() == 2);
  CHECK(ad.triangulation[0][0].vertices[1] == Point{Rational(1, 2)});
  REQUIRE(ad.triangulation[1].size() == 2);
  Rational cut = ad.triangulation[1][0].vertices[1][0];
  CHECK(cut > Rational(3, 10));
  CHECK(cut < Rational(3, 5));
  for (std::size_t b = 0; b < ad.blocks.size(); ++b)
    for (std::size_t s = 0; s < ad.triangulation[b].size(); ++s) {
      const auto& el = cover[static_cast<std::size_t>(ad.element[b][s])];
      for (int atom : ad.blocks[b]) CHECK(std::find(el.atoms.begin(), el.atoms.end(), atom) != el.atoms.end());
      for (const auto& v : ad.triangulation[b][s].vertices) CHECK(el.contains(v));
    }

  CHECK(adapted_subdivision(1, 2, {{{iv(0, 1, true, 1, 1, true)}, {0, 1}}}).blocks.size() == 1);
  CHECK_THROWS_AS(adapted_subdivision(1, 2, {{{iv(0, 1, true, 1, 1, true)}, {0}}}), CoverageError);
  CHECK_THROWS_AS(adapted_subdivision(1, 1, {{{iv(0, 1, true, 1, 2, false)}, {0}}, {{iv(1, 2, false, 1, 1, true)}, {0}}}),
                  CoverageError);

  // Two dimensions: the triangle split by two boxes.
  std::vector<CoverElement> plane{{{iv(-1, 1, false, 2, 3, false), iv(-1, 1, false, 2, 1, false)}, {0}},
                                  {{iv(1, 3, false, 2, 1, false), iv(-1, 1, false, 2, 1, false)}, {0}}};
  auto two = adapted_subdivision(2, 1, plane);
  Rational area(0);
  for (std::size_t s = 0; s < two.triangulation[0].size(); ++s) {
    area += two.triangulation[0][s].volume();
    for (const auto& v : two.triangulation[0][s].vertices)
      CHECK(plane[static_cast<std::size_t>(two.element[0][s])].contains(v));
  }
  CHECK(area == Rational(1, 2));
}
