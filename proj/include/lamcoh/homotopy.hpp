// Simplicial maps between fibered complexes and the prism cochain homotopy.
#pragma once

#include "lamcoh/cohomology.hpp"
#include "lamcoh/subdivision.hpp"

#include <array>
#include <vector>

namespace lamcoh {

/// Image of one source n-simplex: a target simplex of dimension dim <= n and
/// the monotone surjection of vertices {0..n} -> {0..dim}. dim < n means the
/// image is degenerate.
struct SimplexImage {
  int dim = 0;
  Instance instance;
  std::vector<int> vertex_map;
  friend bool operator==(const SimplexImage&, const SimplexImage&) = default;
};

/// images[n][k] is the image of the k-th n-instance in canonical order.
struct SimplicialMap {
  std::vector<std::vector<SimplexImage>> images;
  friend bool operator==(const SimplicialMap&, const SimplicialMap&) = default;
};

/// Brings (dim, instance, vertex_map) into normal form: when the vertex map is
/// not onto, the image moves to the face spanned by its range.
SimplexImage normalize_image(const FiberedComplex& target, int dim, const Instance& instance,
                             std::vector<int> vertex_map);

SimplicialMap identity_map(const FiberedComplex& complex);

/// Checks monotone vertex maps and compatibility with every face map.
std::vector<Diagnostic> check_simplicial_map(const FiberedComplex& source, const FiberedComplex& target,
                                             const SimplicialMap& map);

/// second . first, where first: X -> Y and second: Y -> Z.
SimplicialMap compose(const FiberedComplex& x, const FiberedComplex& y, const FiberedComplex& z,
                      const SimplicialMap& first, const SimplicialMap& second);

/// Inclusion of K as the bottom (end = 0) or top (end = 1) of the prism.
SimplicialMap end_inclusion(const FiberedComplex& k, const PatternComplex& prism, int end);

/// The projection K x I -> K.
SimplicialMap prism_projection(const FiberedComplex& k, const PatternComplex& prism);

/// K x I -> K x I, (x, e) -> (x, phi[e]) for a monotone phi on {0, 1}.
SimplicialMap prism_fold(const FiberedComplex& k, const PatternComplex& prism, std::array<int, 2> phi);

/// Matrix of the pullback C^n(target) -> C^n(source); degenerate images give 0.
template <class F>
SparseMatrix<F> pullback_matrix(const FiberedComplex& source, const FiberedComplex& target,
                                const SimplicialMap& map, int n) {
  SparseMatrix<F> m(source.instance_count(n), target.instance_count(n));
  if (n < 0 || n >= static_cast<int>(map.images.size())) return m;
  InstanceIndex ti = target.index(n);
  const auto& imgs = map.images[static_cast<std::size_t>(n)];
  for (std::size_t k = 0; k < imgs.size(); ++k) {
    if (imgs[k].dim != n) continue;
    m.add(static_cast<int>(k), ti.index(imgs[k].instance.family, imgs[k].instance.atom), FieldTraits<F>::one());
  }
  return m;
}

struct HomotopyResult {
  /// operator_q[n]: C^n(L) -> C^{n-1}(K), n = 0..top.
  std::vector<SparseMatrix<Rational>> operator_q;
  std::vector<SparseMatrix<Z2>> operator_z2;
  bool certificate_q = false;
  bool certificate_z2 = false;
  /// f* and g* agree on H*(L; Q) -> H*(K; Q) in every degree.
  bool induced_equal = false;
  bool ok() const { return certificate_q && certificate_z2 && induced_equal; }
};

/// P(w)(s) = sum_i (-1)^i w(H(Pi_i s)) for H: K x I -> L, and the certificate
/// g* - f* = dP + Pd. Throws StructuralError when H is not simplicial or its
/// ends differ from f and g.
HomotopyResult homotopy_operator(const FiberedComplex& k, const FiberedComplex& l, const SimplicialMap& f,
                                 const SimplicialMap& g, const PatternComplex& prism, const SimplicialMap& h);

}  // namespace lamcoh
