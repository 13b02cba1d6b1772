// Weighted L2 structure on cochains, the Hodge Laplacian and Lambda-Betti numbers.
#pragma once

#include "lamcoh/cohomology.hpp"

#include <Eigen/Dense>

#include <vector>

namespace lamcoh {

/// Raised when the transverse measure is not constant along leaves.
class InvarianceError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Per-instance weights of one degree; instances over zero-weight atoms are
/// left out of the L2 space.
struct WeightedInnerProduct {
  int degree = 0;
  std::vector<Rational> weights;  // canonical instance order
  std::vector<int> retained;      // canonical indices with positive weight
  std::vector<int> local;         // canonical index -> position in retained, or -1

  static WeightedInnerProduct of(const FiberedComplex& complex, int degree);
  int size() const { return static_cast<int>(retained.size()); }
  Eigen::VectorXd sqrt_weights() const;
};

/// <w, t> = sum over instances of Lambda(atom) w t. Q inputs give an exact Q
/// value, R inputs a double. Z2 is rejected.
Coefficient inner_product(const FiberedComplex& complex, const Cochain& a, const Cochain& b);

/// Delta_n = d*d + dd* on the retained instances, d* = W^-1 d^T W. Exact.
SparseMatrix<Rational> laplacian_exact(const FiberedComplex& complex, int n);
Eigen::MatrixXd laplacian(const FiberedComplex& complex, int n);

struct HodgeDecomposition {
  Cochain harmonic, exact, coexact;
  /// omega = harmonic + d(alpha) + d*(beta)
  Cochain alpha, beta;
  double reconstruction_residual = 0.0;  // |omega - sum| / |omega|
  double orthogonality_residual = 0.0;   // max |<x, y>| / (|x| |y|) over pairs
};

HodgeDecomposition hodge_decompose(const FiberedComplex& complex, const Cochain& omega);

struct HodgeReport {
  int degree = 0;
  std::vector<Cochain> harmonic_basis;  // weighted-orthonormal, R coefficients
  int kernel_dim = 0;
  double lambda_betti = 0.0;
  bool has_exact = false;
  Rational lambda_betti_exact;
  double orthogonality_residual = 0.0;
  double eigen_residual = 0.0;  // max |d h| + |d* h| over the basis
  std::vector<double> eigenvalues;
};

/// Float path: eigen-decomposition with kernel threshold tol * max(lambda_max, 1).
/// With exact = true the exact Betti number is filled in as well.
HodgeReport hodge_report(const FiberedComplex& complex, int n, double tol = 1e-9, bool exact = false);

/// Lambda-Betti number sum_i Lambda(atom_i) P_ii, P the harmonic projector.
/// Exact path: per leaf, Lambda(leaf) * dim ker Delta over Q.
Rational l2_betti_exact(const FiberedComplex& complex, int n);
double l2_betti(const FiberedComplex& complex, int n, double tol = 1e-9);

/// Sum over leaves of Lambda(leaf) * (alternating instance count of the leaf).
Rational weighted_euler_characteristic(const FiberedComplex& complex);

/// Throws InvarianceError when some leaf carries two different weights.
void require_leaf_constant(const FiberedComplex& complex);

}  // namespace lamcoh
