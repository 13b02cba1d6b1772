// Builders for products, suspensions, Kronecker models and wedges, plus the
// Mayer-Vietoris and excision checkers.
#pragma once

#include "lamcoh/cohomology.hpp"
#include "lamcoh/complex.hpp"

#include <stdexcept>
#include <vector>

namespace lamcoh {

/// A finite ordered Delta-complex: faces[n][s] lists the n+1 faces (ids of
/// (n-1)-simplices) of simplex s, face i omitting vertex i.
struct BaseComplex {
  std::vector<std::vector<std::vector<int>>> faces;

  int top_dim() const { return static_cast<int>(faces.size()) - 1; }
  int count(int n) const {
    return n < 0 || n > top_dim() ? 0 : static_cast<int>(faces[static_cast<std::size_t>(n)].size());
  }
  int euler_characteristic() const;

  /// Closes the given vertex tuples under deletion of entries and identifies
  /// equal tuples. Strictly increasing tuples give an ordered simplicial
  /// complex; repeated labels give quotient Delta-complexes.
  static BaseComplex from_tuples(const std::vector<std::vector<int>>& tuples);

  static BaseComplex point();
  /// Boundary of a polygon with `vertices` >= 3 vertices, as a simplicial complex.
  static BaseComplex circle(int vertices);
  /// One vertex and one loop edge.
  static BaseComplex loop();
  /// One vertex, three loop edges (a, b, diagonal c) and two triangles.
  static BaseComplex torus();
  /// The 7-vertex triangulation of the torus.
  static BaseComplex torus7();
};

/// Product of a base complex with a transversal, twisted by one atom
/// permutation per edge (empty entry = identity). Instances are anchored at
/// their first vertex; face 0 moves the anchor along the edge [v0, v1].
/// Optional per-family base atom sets are enlarged to be closed under faces.
FiberedComplex twisted_product(const BaseComplex& base, const Transversal& transversal,
                               const std::vector<std::vector<int>>& edge_permutations,
                               const std::vector<std::vector<std::vector<int>>>& bases = {});

/// Smallest regularity bound the complex satisfies (at least 1).
int minimal_regularity_bound(const FiberedComplex& complex);

FiberedComplex product_complex(const BaseComplex& base, const Transversal& transversal);

/// Base complex with generator loops and a permutation of the atoms for each
/// generator. edge_words[e] lists the generators applied, in order, along edge
/// e (empty = identity).
struct SuspensionData {
  BaseComplex base;
  std::vector<std::vector<int>> edge_words;
  std::vector<std::vector<int>> permutations;
  bool torus = false;

  static SuspensionData circle(std::vector<int> permutation);
  static SuspensionData torus_of(std::vector<int> first, std::vector<int> second);
};

/// Checks bijectivity and, for torus bases, commutation. Throws DomainError.
void check_suspension_data(const SuspensionData& data);

FiberedComplex suspension(const SuspensionData& data, const Transversal& transversal);

/// Circle suspension of the rotation t -> t + p (mod q) on q atoms; uniform
/// weights 1/q unless weights are given.
FiberedComplex kronecker_model(int q, int p);
FiberedComplex kronecker_model(int q, int p, const Transversal& transversal);

/// Identification of a 0-instance of the left complex with one of the right.
struct WedgePoint {
  Instance left;
  Instance right;
};

struct WedgeResult {
  FiberedComplex complex;
  /// Wedge points as 0-instances of the result.
  std::vector<Instance> points;
  /// Image of every left / right instance, indexed [n][canonical index].
  std::vector<std::vector<Instance>> left_instance, right_instance;
  int right_atom_offset = 0;
};

/// Disjoint union with the listed 0-instances identified. Families whose faces
/// touch a glued vertex are split so every face record stays a single family.
WedgeResult wedge(const FiberedComplex& left, const FiberedComplex& right, const std::vector<WedgePoint>& points);

/// Wedge over a single vertex family on each side, with the identification
/// given as a partial holonomy from left atoms to right atoms.
WedgeResult wedge(const FiberedComplex& left, const FiberedComplex& right, int left_vertex_family,
                  int right_vertex_family, const PartialHolonomy& gamma);

/// The complex spanned by a face-closed selection; family ids are preserved.
FiberedComplex induced_complex(const FiberedComplex& complex, const Subcomplex& selection);

/// Mayer-Vietoris sequence of X = U ∪ V over Q and Z/2. Throws CoverageError
/// when U and V do not cover X.
std::vector<ExactnessReport> mayer_vietoris_check(const FiberedComplex& x, const Subcomplex& u, const Subcomplex& v);

struct ExcisionReport {
  std::vector<int> dims_pair_q, dims_excised_q;
  std::vector<int> dims_pair_z2, dims_excised_z2;
  bool equal = false;
};

/// Compares H*(X, U) with H*(X \ Z, U \ Z). Throws DomainError when Z is not in
/// U or when removing Z breaks face-closure.
ExcisionReport excision_check(const FiberedComplex& x, const Subcomplex& u, const Subcomplex& z);

}  // namespace lamcoh
