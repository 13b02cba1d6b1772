#include "lamcoh/hodge.hpp"

#include <algorithm>
#include <cmath>

namespace lamcoh {

namespace {

std::vector<int> atoms_of(const FiberedComplex& complex, int n) {
  std::vector<int> out;
  for (const auto& fam : complex.families_of(n)) out.insert(out.end(), fam.base.begin(), fam.base.end());
  return out;
}

/// Rows/columns of m restricted to the retained instances of the two degrees.
SparseMatrix<Rational> restrict(const SparseMatrix<Rational>& m, const WeightedInnerProduct& rows,
                                const WeightedInnerProduct& cols) {
  SparseMatrix<Rational> out(rows.size(), cols.size());
  for (int j = 0; j < cols.size(); ++j) {
    for (const auto& [i, v] : m.column(cols.retained[static_cast<std::size_t>(j)])) {
      int li = rows.local[static_cast<std::size_t>(i)];
      if (li >= 0) out.add(li, j, v);
    }
  }
  return out;
}

SparseMatrix<Rational> scale_rows(SparseMatrix<Rational> m, const std::vector<Rational>& s) {
  for (int j = 0; j < m.cols(); ++j) {
    for (auto& [i, v] : m.column(j)) v *= s[static_cast<std::size_t>(i)];
  }
  return m;
}

SparseMatrix<Rational> scale_cols(SparseMatrix<Rational> m, const std::vector<Rational>& s) {
  for (int j = 0; j < m.cols(); ++j) scale(m.column(j), s[static_cast<std::size_t>(j)]);
  return m;
}

std::vector<Rational> retained_weights(const WeightedInnerProduct& w, bool inverse) {
  std::vector<Rational> out;
  for (int k : w.retained) {
    const Rational& x = w.weights[static_cast<std::size_t>(k)];
    out.push_back(inverse ? Rational(1) / x : x);
  }
  return out;
}

/// W_rows^{1/2} d W_cols^{-1/2} as a dense double matrix.
Eigen::MatrixXd balanced(const FiberedComplex& complex, int n, const WeightedInnerProduct& cols,
                         const WeightedInnerProduct& rows) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(rows.size(), cols.size());
  if (rows.size() == 0 || cols.size() == 0) return a;
  auto d = restrict(coboundary_matrix<Rational>(complex, n), rows, cols);
  Eigen::VectorXd sr = rows.sqrt_weights();
  Eigen::VectorXd sc = cols.sqrt_weights();
  for (int j = 0; j < d.cols(); ++j) {
    for (const auto& [i, v] : d.column(j)) a(i, j) = sr(i) * to_double(v) / sc(j);
  }
  return a;
}

Eigen::VectorXd real_vector(const FiberedComplex& complex, const Cochain& c) {
  check_shape(complex, c);
  std::vector<double> flat;
  for (const auto& fam : c.values) {
    for (const auto& v : fam) {
      switch (v.kind()) {
        case CoefficientKind::Q: flat.push_back(to_double(v.get<Rational>())); break;
        case CoefficientKind::R: flat.push_back(v.get<double>()); break;
        case CoefficientKind::Z2: throw DomainError("Z/2 cochains have no L2 structure");
      }
    }
  }
  return Eigen::Map<Eigen::VectorXd>(flat.data(), static_cast<Eigen::Index>(flat.size()));
}

/// Cochain from balanced coordinates x' on the retained instances: x = W^{-1/2} x'.
Cochain from_balanced(const FiberedComplex& complex, const WeightedInnerProduct& w, const Eigen::VectorXd& x) {
  std::vector<double> flat(w.weights.size(), 0.0);
  Eigen::VectorXd s = w.sqrt_weights();
  for (int k = 0; k < w.size(); ++k) flat[static_cast<std::size_t>(w.retained[static_cast<std::size_t>(k)])] = x(k) / s(k);
  return unflatten<double>(complex, w.degree, flat);
}

Eigen::VectorXd to_balanced(const WeightedInnerProduct& w, const Eigen::VectorXd& full) {
  Eigen::VectorXd out(w.size());
  Eigen::VectorXd s = w.sqrt_weights();
  for (int k = 0; k < w.size(); ++k) out(k) = s(k) * full(w.retained[static_cast<std::size_t>(k)]);
  return out;
}

struct Spectrum {
  Eigen::MatrixXd a, b;  // balanced d_n and d_{n-1}
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;
  Eigen::MatrixXd kernel;
};

Spectrum spectrum(const FiberedComplex& complex, int n, double tol) {
  auto wm = WeightedInnerProduct::of(complex, n - 1);
  auto w = WeightedInnerProduct::of(complex, n);
  auto wp = WeightedInnerProduct::of(complex, n + 1);
  Spectrum s;
  s.a = balanced(complex, n, w, wp);
  s.b = balanced(complex, n - 1, wm, w);
  if (w.size() == 0) {
    s.kernel = Eigen::MatrixXd(0, 0);
    return s;
  }
  Eigen::MatrixXd lap = s.a.transpose() * s.a + s.b * s.b.transpose();
  lap = 0.5 * (lap + lap.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(lap);
  s.values = solver.eigenvalues();
  s.vectors = solver.eigenvectors();
  const double cutoff = tol * std::max(s.values.cwiseAbs().maxCoeff(), 1.0);
  std::vector<int> cols;
  for (int k = 0; k < s.values.size(); ++k) {
    if (s.values(k) < cutoff) cols.push_back(k);
  }
  s.kernel = Eigen::MatrixXd(w.size(), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t k = 0; k < cols.size(); ++k) s.kernel.col(static_cast<Eigen::Index>(k)) = s.vectors.col(cols[k]);
  return s;
}

}  // namespace

WeightedInnerProduct WeightedInnerProduct::of(const FiberedComplex& complex, int degree) {
  WeightedInnerProduct w;
  w.degree = degree;
  for (int atom : atoms_of(complex, degree)) {
    const Rational& x = complex.transversal.weight(atom);
    if (x < 0) throw DomainError("negative transverse weight");
    w.local.push_back(x > 0 ? static_cast<int>(w.retained.size()) : -1);
    if (x > 0) w.retained.push_back(static_cast<int>(w.weights.size()));
    w.weights.push_back(x);
  }
  return w;
}

Eigen::VectorXd WeightedInnerProduct::sqrt_weights() const {
  Eigen::VectorXd s(size());
  for (int k = 0; k < size(); ++k) s(k) = std::sqrt(to_double(weights[static_cast<std::size_t>(retained[static_cast<std::size_t>(k)])]));
  return s;
}

Coefficient inner_product(const FiberedComplex& complex, const Cochain& a, const Cochain& b) {
  if (a.degree != b.degree) throw DomainError("inner product of cochains of different degrees");
  if (a.kind != b.kind) throw StructuralError("inner product of cochains with different coefficient kinds");
  check_shape(complex, a);
  check_shape(complex, b);
  auto atoms = atoms_of(complex, a.degree);
  if (a.kind == CoefficientKind::Z2) throw DomainError("Z/2 cochains have no L2 structure");
  if (a.kind == CoefficientKind::Q) {
    auto x = flatten<Rational>(complex, a);
    auto y = flatten<Rational>(complex, b);
    Rational s = 0;
    for (std::size_t k = 0; k < x.size(); ++k) s += complex.transversal.weight(atoms[k]) * x[k] * y[k];
    return Coefficient(s);
  }
  auto x = flatten<double>(complex, a);
  auto y = flatten<double>(complex, b);
  double s = 0;
  for (std::size_t k = 0; k < x.size(); ++k) s += to_double(complex.transversal.weight(atoms[k])) * x[k] * y[k];
  return Coefficient(s);
}

SparseMatrix<Rational> laplacian_exact(const FiberedComplex& complex, int n) {
  auto wm = WeightedInnerProduct::of(complex, n - 1);
  auto w = WeightedInnerProduct::of(complex, n);
  auto wp = WeightedInnerProduct::of(complex, n + 1);
  SparseMatrix<Rational> up(w.size(), w.size());
  if (wp.size() > 0) {
    auto d = restrict(coboundary_matrix<Rational>(complex, n), wp, w);
    // W^-1 d^T W' d
    up = scale_rows(d.transpose(), retained_weights(w, true)) * scale_rows(d, retained_weights(wp, false));
  }
  SparseMatrix<Rational> down(w.size(), w.size());
  if (wm.size() > 0) {
    auto d = restrict(coboundary_matrix<Rational>(complex, n - 1), w, wm);
    // d W''^-1 d^T W
    down = d * scale_cols(scale_rows(d.transpose(), retained_weights(wm, true)), retained_weights(w, false));
  }
  return up + down;
}

Eigen::MatrixXd laplacian(const FiberedComplex& complex, int n) {
  auto exact = laplacian_exact(complex, n);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(exact.rows(), exact.cols());
  for (int j = 0; j < exact.cols(); ++j) {
    for (const auto& [i, v] : exact.column(j)) m(i, j) = to_double(v);
  }
  return m;
}

HodgeDecomposition hodge_decompose(const FiberedComplex& complex, const Cochain& omega) {
  const int n = omega.degree;
  auto wm = WeightedInnerProduct::of(complex, n - 1);
  auto w = WeightedInnerProduct::of(complex, n);
  auto wp = WeightedInnerProduct::of(complex, n + 1);
  Eigen::VectorXd r = to_balanced(w, real_vector(complex, omega));
  Spectrum s = spectrum(complex, n, 1e-9);

  Eigen::VectorXd h = Eigen::VectorXd::Zero(w.size());
  if (s.kernel.cols() > 0) h = s.kernel * (s.kernel.transpose() * r);
  Eigen::VectorXd rest = r - h;

  Eigen::VectorXd alpha = Eigen::VectorXd::Zero(wm.size());
  Eigen::VectorXd e = Eigen::VectorXd::Zero(w.size());
  if (s.b.cols() > 0 && s.b.rows() > 0) {
    alpha = s.b.completeOrthogonalDecomposition().solve(rest);
    e = s.b * alpha;
  }
  Eigen::VectorXd beta = Eigen::VectorXd::Zero(wp.size());
  Eigen::VectorXd c = Eigen::VectorXd::Zero(w.size());
  if (s.a.cols() > 0 && s.a.rows() > 0) {
    Eigen::MatrixXd at = s.a.transpose();
    beta = at.completeOrthogonalDecomposition().solve(rest);
    c = at * beta;
  }

  HodgeDecomposition out;
  out.harmonic = from_balanced(complex, w, h);
  out.exact = from_balanced(complex, w, e);
  out.coexact = from_balanced(complex, w, c);
  out.alpha = from_balanced(complex, wm, alpha);
  out.beta = from_balanced(complex, wp, beta);
  const double norm = r.norm();
  if (norm > 0) {
    out.reconstruction_residual = (r - h - e - c).norm() / norm;
    const double n2 = norm * norm;
    out.orthogonality_residual =
        std::max({std::abs(h.dot(e)), std::abs(h.dot(c)), std::abs(e.dot(c))}) / n2;
  }
  return out;
}

void require_leaf_constant(const FiberedComplex& complex) {
  for (const auto& d : validate(complex)) {
    if (d.kind == "leaf-weight") throw InvarianceError(d.message);
  }
}

HodgeReport hodge_report(const FiberedComplex& complex, int n, double tol, bool exact) {
  require_leaf_constant(complex);
  HodgeReport rep;
  rep.degree = n;
  auto w = WeightedInnerProduct::of(complex, n);
  if (n < 0 || n > complex.top_dim() || w.size() == 0) {
    if (exact) rep.has_exact = true;
    return rep;
  }
  Spectrum s = spectrum(complex, n, tol);
  rep.kernel_dim = static_cast<int>(s.kernel.cols());
  rep.eigenvalues.assign(s.values.data(), s.values.data() + s.values.size());
  for (int i = 0; i < w.size(); ++i) {
    const double wi = to_double(w.weights[static_cast<std::size_t>(w.retained[static_cast<std::size_t>(i)])]);
    rep.lambda_betti += wi * s.kernel.row(i).squaredNorm();
  }
  for (int k = 0; k < s.kernel.cols(); ++k) {
    Eigen::VectorXd v = s.kernel.col(k);
    rep.harmonic_basis.push_back(from_balanced(complex, w, v));
    double res = 0;
    if (s.a.rows() > 0) res += (s.a * v).norm();
    if (s.b.cols() > 0) res += (s.b.transpose() * v).norm();
    rep.eigen_residual = std::max(rep.eigen_residual, res);
  }
  if (s.kernel.cols() > 0) {
    Eigen::MatrixXd gram = s.kernel.transpose() * s.kernel;
    rep.orthogonality_residual = (gram - Eigen::MatrixXd::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
  }
  if (exact) {
    rep.has_exact = true;
    rep.lambda_betti_exact = l2_betti_exact(complex, n);
  }
  return rep;
}

Rational l2_betti_exact(const FiberedComplex& complex, int n) {
  require_leaf_constant(complex);
  if (n < 0 || n > complex.top_dim()) return Rational(0);
  auto w = WeightedInnerProduct::of(complex, n);
  if (w.size() == 0) return Rational(0);
  auto lap = laplacian_exact(complex, n);
  auto leaf = leaf_of_atoms(complex);
  auto atoms = atoms_of(complex, n);
  std::vector<std::vector<int>> by_leaf;
  for (int k = 0; k < w.size(); ++k) {
    int l = leaf[static_cast<std::size_t>(atoms[static_cast<std::size_t>(w.retained[static_cast<std::size_t>(k)])])];
    if (l >= static_cast<int>(by_leaf.size())) by_leaf.resize(static_cast<std::size_t>(l + 1));
    by_leaf[static_cast<std::size_t>(l)].push_back(k);
  }
  Rational total = 0;
  for (const auto& members : by_leaf) {
    if (members.empty()) continue;
    std::vector<int> pos(static_cast<std::size_t>(w.size()), -1);
    for (std::size_t k = 0; k < members.size(); ++k) pos[static_cast<std::size_t>(members[k])] = static_cast<int>(k);
    SparseMatrix<Rational> block(static_cast<int>(members.size()), static_cast<int>(members.size()));
    for (std::size_t k = 0; k < members.size(); ++k) {
      for (const auto& [i, v] : lap.column(members[k])) {
        if (pos[static_cast<std::size_t>(i)] >= 0) block.add(pos[static_cast<std::size_t>(i)], static_cast<int>(k), v);
      }
    }
    const int dim = block.cols() - rank(block);
    const Rational& weight = w.weights[static_cast<std::size_t>(w.retained[static_cast<std::size_t>(members.front())])];
    total += weight * dim;
  }
  return total;
}

double l2_betti(const FiberedComplex& complex, int n, double tol) { return hodge_report(complex, n, tol).lambda_betti; }

Rational weighted_euler_characteristic(const FiberedComplex& complex) {
  require_leaf_constant(complex);
  Rational chi = 0;
  for (int n = 0; n <= complex.top_dim(); ++n) {
    for (int atom : atoms_of(complex, n)) chi += (n % 2 == 0 ? 1 : -1) * complex.transversal.weight(atom);
  }
  return chi;
}

}  // namespace lamcoh
