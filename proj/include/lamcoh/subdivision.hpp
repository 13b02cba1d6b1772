// Complexes obtained by replacing every simplex with a fixed local pattern:
// barycentric subdivision and the prism K x [0,1].
#pragma once

#include "lamcoh/complex.hpp"

#include <map>
#include <tuple>
#include <utility>
#include <vector>

namespace lamcoh {

/// Vertex of a local pattern inside the standard n-simplex. support lists the
/// vertices of the smallest face containing it; tag separates vertices with
/// equal support (the prism's two ends).
struct PatternVertex {
  std::vector<int> support;
  int tag = 0;
  friend bool operator==(const PatternVertex&, const PatternVertex&) = default;
  friend auto operator<=>(const PatternVertex&, const PatternVertex&) = default;
};

using PatternChain = std::vector<PatternVertex>;

struct FamilyOrigin {
  int dim = 0;
  int family = 0;
  PatternChain chain;
};

/// Face of instance (n, inst) spanned by the sorted vertex subset `support`,
/// reached by deleting the missing vertices from the top down.
std::pair<int, Instance> face_spanned(const FiberedComplex& complex, int n, Instance inst,
                                      const std::vector<int>& support);

class PatternComplex {
 public:
  FiberedComplex complex;
  /// Original atom of every atom of the new transversal.
  std::vector<int> atom_origin;
  /// origin[k][family] for the new k-families.
  std::vector<std::vector<FamilyOrigin>> origin;

  /// The new simplex given by `chain` inside instance (n, sigma) of the
  /// original complex; chains that miss vertices are moved to the face they span.
  std::pair<int, Instance> locate(const FiberedComplex& original, int n, const Instance& sigma,
                                  const PatternChain& chain) const;

  std::map<std::tuple<int, int, PatternChain>, int> family_of;
  std::map<std::tuple<int, int, int>, int> barycenter_atom;
};

/// Barycentric subdivision. Barycenters of positive-dimensional families get
/// fresh atoms, one per (family, atom), with the weight of the original atom.
PatternComplex barycentric_subdivide(const FiberedComplex& complex);

/// K x [0,1] triangulated by the shuffle prisms; no new atoms.
PatternComplex prism_complex(const FiberedComplex& complex);

/// Full-support chains of the two patterns in dimension n, in generation order.
std::vector<PatternChain> subdivision_patterns(int n);
std::vector<PatternChain> prism_patterns(int n);

/// The shuffle simplex [(0,0)..(i,0),(i,1)..(n,1)] of the prism over an n-simplex.
PatternChain shuffle_chain(int n, int i);
/// The bottom (end = 0) or top (end = 1) copy of the n-simplex.
PatternChain end_chain(int n, int end);

}  // namespace lamcoh
