// Exact polyhedral geometry in dimension <= 3: linear regions, attached
// decompositions, barycentric triangulations, prisms and adapted subdivisions.
#pragma once

#include "lamcoh/complex.hpp"
#include "lamcoh/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lamcoh {

using Point = std::vector<Rational>;

/// normal . x <= offset (or >=). The normal is a primitive integer vector whose
/// first nonzero entry is positive; the sense absorbs the sign.
struct HalfSpace {
  enum class Sense { Le, Ge };
  std::vector<Integer> normal;
  Rational offset;
  Sense sense = Sense::Le;

  /// a . x <= c in canonical form.
  static HalfSpace make(const std::vector<Rational>& a, const Rational& c);
  /// a . x >= c
  static HalfSpace at_least(const std::vector<Rational>& a, const Rational& c);

  int dim() const { return static_cast<int>(normal.size()); }
  /// normal . x - offset
  Rational eval(const Point& x) const;
  bool contains(const Point& x) const;
  bool on_boundary(const Point& x) const { return eval(x) == 0; }
  /// Closure of the complement.
  HalfSpace opposite() const;
  bool same_hyperplane(const HalfSpace& o) const { return normal == o.normal && offset == o.offset; }

  friend bool operator==(const HalfSpace& x, const HalfSpace& y) {
    return x.same_hyperplane(y) && x.sense == y.sense;
  }
  friend bool operator<(const HalfSpace& x, const HalfSpace& y);
};

using ConvexPiece = std::vector<HalfSpace>;

/// Union of bounded convex pieces in R^n, n <= 3.
struct LinearRegion {
  int ambient_dim = 0;
  std::vector<ConvexPiece> pieces;

  static LinearRegion box(const Point& lo, const Point& hi);
  static LinearRegion convex(int n, ConvexPiece piece);
  bool contains(const Point& x) const;
};

/// n+1 affinely independent points of R^n; orientation is the sign of
/// det(v1 - v0, ..., vn - v0).
struct Simplex {
  std::vector<Point> vertices;
  int orientation = 1;

  /// Throws DomainError on affinely dependent vertices.
  static Simplex make(std::vector<Point> vertices);
  int dim() const { return static_cast<int>(vertices.size()) - 1; }
  Rational volume() const;
  bool contains(const Point& x) const;
};

/// Vertices of a convex piece, sorted lexicographically. Throws DomainError if
/// the piece is unbounded.
std::vector<Point> piece_vertices(int n, const ConvexPiece& piece);
int affine_dim(const std::vector<Point>& points);
bool piece_contains(const ConvexPiece& piece, const Point& x);

/// Problems with a region: dimension, boundedness, full dimension of pieces
/// and connectedness of the piece intersection graph.
std::vector<Diagnostic> validate_region(const LinearRegion& region);

Rational piece_volume(int n, const ConvexPiece& piece);
/// Exact mass center of a full-dimensional piece.
Point mass_center(int n, const ConvexPiece& piece);
/// Volume of the union.
Rational region_volume(const LinearRegion& region);

/// Pieces of different regions meet in a common face of both, or not at all.
bool attached_or_disjoint(const LinearRegion& a, const LinearRegion& b);

/// Regions made of arrangement cells, grouped by which inputs contain them and
/// split into facet-connected components. A component equal to an input piece
/// is returned as that piece when this keeps the output attached.
std::vector<LinearRegion> attach_decompose(const std::vector<LinearRegion>& regions);

/// Convex cells of the sign patterns of all bounding hyperplanes that lie in
/// the region.
std::vector<LinearRegion> convex_decompose(const LinearRegion& region);

struct Triangulation {
  std::vector<Simplex> simplices;
  std::vector<int> owner;  // region index of each simplex
};

/// Barycentric subdivision, by exact mass centers, of the common cell
/// decomposition of the regions. Throws DomainError unless the regions are
/// pairwise attached or disjoint.
Triangulation triangulate(const std::vector<LinearRegion>& regions);

/// Exact separating-axis test.
bool interiors_disjoint(const Simplex& a, const Simplex& b);
/// First pair of simplices whose interiors meet, by a bounding-box sweep and
/// the same exact test.
std::optional<std::pair<int, int>> find_overlap(const std::vector<Simplex>& simplices);

/// Shuffle decomposition of Delta^n x [0, 1] in coordinates (t, x); Delta^n is
/// the hull of 0, e_1, ..., e_n.
struct PrismDecomposition {
  int n = 0;
  std::vector<Simplex> simplices;  // Pi_i = [a_0 .. a_i, b_i .. b_n]
  std::vector<int> signs;          // orientation of Pi_i
};

PrismDecomposition prism_decompose(int n);

/// d(sum I_i Pi_i) = top - bottom - prism over the boundary of Delta^n, as
/// ordered simplices with exact vertex coordinates.
bool prism_telescopes(const PrismDecomposition& prism);

struct Interval {
  Rational lo, hi;
  bool lo_closed = false, hi_closed = false;
  bool contains(const Rational& x) const;
};

/// A box V (one interval per coordinate) over a set of atoms.
struct CoverElement {
  std::vector<Interval> box;
  std::vector<int> atoms;
  bool contains(const Point& x) const;
};

struct AdaptedSubdivision {
  std::vector<std::vector<int>> blocks;             // atoms, by least atom
  std::vector<std::vector<Simplex>> triangulation;  // per block, of Delta^n
  std::vector<std::vector<int>> element;            // cover element holding each simplex
};

/// Throws CoverageError naming an uncovered point of Delta^n x T, or a point
/// no closed refinement can avoid.
AdaptedSubdivision adapted_subdivision(int n, int atoms, const std::vector<CoverElement>& cover);

}  // namespace lamcoh
