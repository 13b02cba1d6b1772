// Seeded random instances for the property suites and the CLI.
#pragma once

#include "lamcoh/circle.hpp"
#include "lamcoh/constructions.hpp"
#include "lamcoh/geometry.hpp"
#include "lamcoh/homotopy.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace lamcoh {

using Rng = std::mt19937_64;

/// Valid fibered complex of dimension <= 2 with at most 5 families per
/// dimension and at most 8 atoms: a twisted product over a random base with
/// edge twists g_b g_a^-1 on triangle edges and free twists elsewhere, and
/// random partial bases closed under faces.
FiberedComplex random_complex(Rng& rng);

BaseComplex random_base(Rng& rng, int max_vertices = 5, int max_per_dim = 5);
Transversal random_transversal(Rng& rng, int atoms);
/// Reweights atoms so that each leaf carries one random weight.
FiberedComplex with_leaf_weights(FiberedComplex complex, Rng& rng);

/// Face-closed selections: closure of random instances that are faces of
/// nothing.
Subcomplex random_closed(const FiberedComplex& complex, Rng& rng, double keep = 0.5);
/// U, V covering X, each the closure of a part of the maximal instances.
std::pair<Subcomplex, Subcomplex> random_cover(const FiberedComplex& complex, Rng& rng);
/// U face-closed and Z an open star of vertices whose stars lie in U.
std::pair<Subcomplex, Subcomplex> random_excision(const FiberedComplex& complex, Rng& rng);

struct WedgeCase {
  FiberedComplex left, right;
  int left_family = 0, right_family = 0;
  PartialHolonomy gamma;
};
WedgeCase random_wedge(Rng& rng);

struct HomotopyCase {
  std::string name;
  FiberedComplex k, l;
  PatternComplex prism;
  SimplicialMap f, g, h;
};
/// name: identity, projection, fold-top, fold-bottom or fold-projection.
HomotopyCase make_homotopy(FiberedComplex k, const std::string& name);
/// One of the above over a random K.
HomotopyCase random_homotopy(Rng& rng);
/// The circle's inclusions at the two ends of the cylinder.
HomotopyCase circle_into_cylinder();

/// 1..4 integer-corner boxes in [0, 2]^n with half-integer coordinates.
std::vector<LinearRegion> random_boxes(Rng& rng, int n, int count);

QuadReal random_quad(Rng& rng, int d, bool irrational);
/// Nonempty proper union of 1..3 arcs with endpoints in Q(sqrt d) and total
/// length below max_total.
ArcSet random_arcset(Rng& rng, int d, const Rational& max_total = Rational(1, 7));

}  // namespace lamcoh
