// Coboundary operators, exact cohomology over Z/2 and Q, cup products and the
// long exact sequences of pairs.
#pragma once

#include "lamcoh/complex.hpp"
#include "lamcoh/sparse.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace lamcoh {

/// Matrix of delta_n from n-instances (columns) to (n+1)-instances (rows) in
/// the canonical enumeration. Face i contributes (-1)^i.
template <class F>
SparseMatrix<F> coboundary_matrix(const FiberedComplex& complex, int n) {
  const int cols = complex.instance_count(n);
  const int rows = complex.instance_count(n + 1);
  SparseMatrix<F> m(rows, cols);
  if (rows == 0 || cols == 0) return m;
  InstanceIndex lower = complex.index(n);
  InstanceIndex upper = complex.index(n + 1);
  const auto& fams = complex.families_of(n + 1);
  const F one = FieldTraits<F>::one();
  const F minus_one = FieldTraits<F>::zero() - one;
  for (int f = 0; f < static_cast<int>(fams.size()); ++f) {
    for (int atom : fams[static_cast<std::size_t>(f)].base) {
      int row = upper.index(f, atom);
      for (int i = 0; i <= n + 1; ++i) {
        Instance face = complex.face_of(n + 1, Instance{f, atom}, i);
        m.add(row, lower.index(face.family, face.atom), i % 2 == 0 ? one : minus_one);
      }
    }
  }
  return m;
}

/// delta applied to a cochain; the result has degree n+1 and the same kind.
Cochain apply_coboundary(const FiberedComplex& complex, const Cochain& cochain);

/// Cochain complex as a sequence of sparse differentials d[n]: C^n -> C^{n+1}.
template <class F>
struct CochainComplex {
  std::vector<int> dims;
  std::vector<SparseMatrix<F>> d;

  int top() const { return static_cast<int>(dims.size()) - 1; }
  int dim(int n) const { return n < 0 || n > top() ? 0 : dims[static_cast<std::size_t>(n)]; }
  SparseMatrix<F> differential(int n) const {
    if (n >= 0 && n < static_cast<int>(d.size())) return d[static_cast<std::size_t>(n)];
    return SparseMatrix<F>(dim(n + 1), dim(n));
  }
};

/// Per-degree instance masks over the canonical enumeration.
using InstanceMask = std::vector<std::vector<bool>>;

InstanceMask mask_of(const FiberedComplex& complex, const Subcomplex& sub);
InstanceMask complement(const InstanceMask& mask);

template <class F>
CochainComplex<F> full_cochain_complex(const FiberedComplex& complex) {
  CochainComplex<F> cc;
  for (int n = 0; n <= complex.top_dim(); ++n) {
    cc.dims.push_back(complex.instance_count(n));
    cc.d.push_back(coboundary_matrix<F>(complex, n));
  }
  return cc;
}

/// Local index (position among selected instances) for every instance, -1 when
/// not selected.
std::vector<int> local_indices(const std::vector<bool>& mask);

/// Sub-complex of cochains living on the masked instances. With the mask of a
/// face-closed A this is C*(A); with its complement it is C*(X, A).
template <class F>
CochainComplex<F> restrict_complex(const CochainComplex<F>& cc, const InstanceMask& mask) {
  CochainComplex<F> out;
  for (int n = 0; n <= cc.top(); ++n) {
    const auto& m = mask[static_cast<std::size_t>(n)];
    out.dims.push_back(static_cast<int>(std::count(m.begin(), m.end(), true)));
  }
  for (int n = 0; n <= cc.top(); ++n) {
    auto cols = local_indices(mask[static_cast<std::size_t>(n)]);
    std::vector<int> rows = n + 1 <= cc.top() ? local_indices(mask[static_cast<std::size_t>(n + 1)]) : std::vector<int>{};
    SparseMatrix<F> sub(out.dim(n + 1), out.dim(n));
    SparseMatrix<F> full = cc.differential(n);
    for (int j = 0; j < full.cols(); ++j) {
      int lj = cols[static_cast<std::size_t>(j)];
      if (lj < 0) continue;
      for (const auto& [i, v] : full.column(j)) {
        int li = rows[static_cast<std::size_t>(i)];
        if (li >= 0) sub.add(li, lj, v);
      }
    }
    out.d.push_back(std::move(sub));
  }
  return out;
}

/// Matrix restricting cochains on instances selected by `from` to those
/// selected by `to` (requires to ⊆ from); transposed, it extends by zero.
template <class F>
SparseMatrix<F> restriction_matrix(const std::vector<bool>& from, const std::vector<bool>& to) {
  auto lf = local_indices(from);
  auto lt = local_indices(to);
  int rows = static_cast<int>(std::count(to.begin(), to.end(), true));
  int cols = static_cast<int>(std::count(from.begin(), from.end(), true));
  SparseMatrix<F> m(rows, cols);
  for (std::size_t k = 0; k < to.size(); ++k) {
    if (!to[k]) continue;
    if (!from[k]) throw StructuralError("restriction target is not contained in the source");
    m.add(lt[k], lf[k], FieldTraits<F>::one());
  }
  return m;
}

/// H^n of a cochain complex with chosen representatives and a coordinate map.
template <class F>
class CohomologySpace {
 public:
  CohomologySpace(const CochainComplex<F>& cc, int n) : degree_(n) {
    SparseMatrix<F> out = cc.differential(n);
    SparseMatrix<F> in = cc.differential(n - 1);
    for (int j = 0; j < in.cols(); ++j) echelon_.insert(in.column(j));
    boundary_rank_ = echelon_.rank();
    for (auto& z : kernel_basis(out)) {
      int k = static_cast<int>(reps_.size());
      if (!echelon_.insert(z, unit_vector<F>(k))) reps_.push_back(std::move(z));
    }
    cocycle_rank_ = boundary_rank_ + static_cast<int>(reps_.size());
    cochain_dim_ = cc.dim(n);
  }

  int degree() const { return degree_; }
  int dim() const { return static_cast<int>(reps_.size()); }
  int boundary_rank() const { return boundary_rank_; }
  int cocycle_dim() const { return cocycle_rank_; }
  int cochain_dim() const { return cochain_dim_; }
  const std::vector<SparseVector<F>>& representatives() const { return reps_; }

  /// Coordinates of [z] in the representative basis. Throws when z is not a
  /// cocycle of this complex.
  SparseVector<F> coordinates(const SparseVector<F>& z) const {
    auto r = echelon_.reduce(z);
    if (!r.remainder.empty()) throw DomainError("vector is not a cocycle");
    F minus_one = FieldTraits<F>::zero() - FieldTraits<F>::one();
    scale(r.tag, minus_one);
    return std::move(r.tag);
  }

  bool is_coboundary(const SparseVector<F>& z) const { return coordinates(z).empty(); }

 private:
  int degree_ = 0;
  int boundary_rank_ = 0;
  int cocycle_rank_ = 0;
  int cochain_dim_ = 0;
  Echelon<F> echelon_;
  std::vector<SparseVector<F>> reps_;
};

/// Matrix of the map induced on cohomology by a cochain map phi: C(source) -> C(target).
template <class F>
SparseMatrix<F> induced_map(const CohomologySpace<F>& source, const CohomologySpace<F>& target,
                            const SparseMatrix<F>& phi) {
  SparseMatrix<F> m(target.dim(), source.dim());
  for (int k = 0; k < source.dim(); ++k) {
    m.column(k) = target.coordinates(phi.apply(source.representatives()[static_cast<std::size_t>(k)]));
  }
  return m;
}

struct CohomologyResult {
  int dimension = 0;
  std::vector<Cochain> basis;
};

/// dim H^n (absolute, or relative to a face-closed subcomplex) with
/// representative cocycles. R coefficients are rejected; use l2_hodge.
CohomologyResult cohomology_dim(const FiberedComplex& complex, int n, CoefficientKind kind,
                                const Subcomplex* rel = nullptr);

/// Dimensions of H^0..H^top.
std::vector<int> cohomology_dims(const FiberedComplex& complex, CoefficientKind kind,
                                 const Subcomplex* rel = nullptr);

/// True when the cocycle represents the zero class.
bool is_coboundary(const FiberedComplex& complex, const Cochain& cocycle);

/// Front-face / back-face product.
Cochain cup_product(const FiberedComplex& complex, const Cochain& a, const Cochain& b);

/// Rank bookkeeping for one node of a long exact sequence.
struct SequenceNode {
  std::string label;
  int degree = 0;
  int dimension = 0;
  int rank_in = 0;
  int rank_out = 0;
  bool composite_zero = true;
  bool exact = true;
};

struct ExactnessReport {
  CoefficientKind kind = CoefficientKind::Q;
  bool cochain_level_exact = true;
  std::vector<SequenceNode> nodes;
  bool exact() const;
};

/// Long exact cohomology sequence of 0 -> A -f-> B -g-> C -> 0.
template <class F>
ExactnessReport long_exact_sequence(const CochainComplex<F>& a, const CochainComplex<F>& b,
                                    const CochainComplex<F>& c, const std::vector<SparseMatrix<F>>& f,
                                    const std::vector<SparseMatrix<F>>& g, const std::string& la,
                                    const std::string& lb, const std::string& lc) {
  ExactnessReport report;
  report.kind = FieldTraits<F>::kind;
  const int top = std::max({a.top(), b.top(), c.top()});

  // Cochain level: f injective, g surjective, im f = ker g.
  for (int n = 0; n <= top; ++n) {
    const auto& fn = f[static_cast<std::size_t>(n)];
    const auto& gn = g[static_cast<std::size_t>(n)];
    int rf = rank(fn);
    int rg = rank(gn);
    bool zero = (gn * fn).is_zero();
    if (rf != a.dim(n) || rg != c.dim(n) || !zero || rf != b.dim(n) - rg) report.cochain_level_exact = false;
  }

  std::vector<CohomologySpace<F>> ha, hb, hc;
  for (int n = 0; n <= top + 1; ++n) {
    ha.emplace_back(a, n);
    hb.emplace_back(b, n);
    hc.emplace_back(c, n);
  }
  auto map_at = [](const std::vector<SparseMatrix<F>>& maps, int n, int rows, int cols) {
    if (n < static_cast<int>(maps.size())) return maps[static_cast<std::size_t>(n)];
    return SparseMatrix<F>(rows, cols);
  };

  // Maps in sequence order: f*_n, g*_n, conn_n for n = 0..top.
  std::vector<SparseMatrix<F>> maps;
  std::vector<const CohomologySpace<F>*> spaces;
  std::vector<std::string> labels;
  for (int n = 0; n <= top; ++n) {
    const auto& sa = ha[static_cast<std::size_t>(n)];
    const auto& sb = hb[static_cast<std::size_t>(n)];
    const auto& sc = hc[static_cast<std::size_t>(n)];
    const auto& sa_next = ha[static_cast<std::size_t>(n + 1)];
    auto fn = map_at(f, n, b.dim(n), a.dim(n));
    auto gn = map_at(g, n, c.dim(n), b.dim(n));
    auto fnext = map_at(f, n + 1, b.dim(n + 1), a.dim(n + 1));
    maps.push_back(induced_map(sa, sb, fn));
    maps.push_back(induced_map(sb, sc, gn));
    SparseMatrix<F> conn(sa_next.dim(), sc.dim());
    SparseMatrix<F> db = b.differential(n);
    for (int k = 0; k < sc.dim(); ++k) {
      auto lift = solve(gn, sc.representatives()[static_cast<std::size_t>(k)]);
      if (!lift) throw DomainError("cochain map g is not surjective");
      auto pulled = solve(fnext, db.apply(*lift));
      if (!pulled) throw DomainError("connecting map: coboundary of the lift is not in the image of f");
      conn.column(k) = sa_next.coordinates(*pulled);
    }
    maps.push_back(std::move(conn));
    spaces.push_back(&sa);
    spaces.push_back(&sb);
    spaces.push_back(&sc);
    labels.push_back(la);
    labels.push_back(lb);
    labels.push_back(lc);
  }

  for (std::size_t k = 0; k < spaces.size(); ++k) {
    SequenceNode node;
    node.label = labels[k];
    node.degree = spaces[k]->degree();
    node.dimension = spaces[k]->dim();
    node.rank_out = rank(maps[k]);
    node.rank_in = k == 0 ? 0 : rank(maps[k - 1]);
    node.composite_zero = k == 0 ? true : (maps[k] * maps[k - 1]).is_zero();
    node.exact = node.composite_zero && node.rank_in == node.dimension - node.rank_out;
    report.nodes.push_back(std::move(node));
  }
  return report;
}

/// Long exact sequence of the pair (X, A), over Q and Z/2.
std::vector<ExactnessReport> pair_sequence_check(const FiberedComplex& complex, const Subcomplex& a);

}  // namespace lamcoh
