#include "lamcoh/cohomology.hpp"

namespace lamcoh {

namespace {

template <class F>
Cochain apply_coboundary_t(const FiberedComplex& complex, const Cochain& cochain) {
  auto flat = flatten<F>(complex, cochain);
  auto m = coboundary_matrix<F>(complex, cochain.degree);
  auto image = dense_from_sparse(m.apply(sparse_from_dense(flat)), static_cast<std::size_t>(m.rows()));
  return unflatten<F>(complex, cochain.degree + 1, image);
}

template <class F>
CohomologyResult cohomology_t(const FiberedComplex& complex, int n, const Subcomplex* rel) {
  CochainComplex<F> cc = full_cochain_complex<F>(complex);
  std::vector<int> global;
  if (rel) {
    rel->check_shape(complex);
    if (!rel->is_face_closed(complex)) throw DomainError("relative subcomplex is not face-closed");
    InstanceMask free = complement(mask_of(complex, *rel));
    cc = restrict_complex(cc, free);
    if (n >= 0 && n <= complex.top_dim()) {
      const auto& m = free[static_cast<std::size_t>(n)];
      for (std::size_t k = 0; k < m.size(); ++k) {
        if (m[k]) global.push_back(static_cast<int>(k));
      }
    }
  } else {
    for (int k = 0; k < complex.instance_count(n); ++k) global.push_back(k);
  }
  CohomologySpace<F> h(cc, n);
  CohomologyResult result;
  result.dimension = h.dim();
  const auto total = static_cast<std::size_t>(complex.instance_count(n));
  for (const auto& rep : h.representatives()) {
    std::vector<F> flat(total, FieldTraits<F>::zero());
    for (const auto& [i, v] : rep) flat[static_cast<std::size_t>(global[static_cast<std::size_t>(i)])] = v;
    result.basis.push_back(unflatten<F>(complex, n, flat));
  }
  return result;
}

template <class F>
F field_value(const Coefficient& c) { return c.template get<F>(); }

template <class F>
Cochain cup_t(const FiberedComplex& complex, const Cochain& a, const Cochain& b) {
  const int p = a.degree;
  const int q = b.degree;
  const int n = p + q;
  Cochain out = Cochain::zero(complex, n, FieldTraits<F>::kind);
  const auto& fams = complex.families_of(n);
  for (int f = 0; f < static_cast<int>(fams.size()); ++f) {
    for (int atom : fams[static_cast<std::size_t>(f)].base) {
      // Front p-face: drop the last vertex q times. Back q-face: drop vertex 0 p times.
      Instance front{f, atom};
      for (int k = n; k > p; --k) front = complex.face_of(k, front, k);
      Instance back{f, atom};
      for (int k = n; k > q; --k) back = complex.face_of(k, back, 0);
      F value = field_value<F>(a.at(complex, front)) * field_value<F>(b.at(complex, back));
      out.set(complex, Instance{f, atom}, Coefficient(value));
    }
  }
  return out;
}

template <class F>
bool is_coboundary_t(const FiberedComplex& complex, const Cochain& z) {
  auto cc = full_cochain_complex<F>(complex);
  CohomologySpace<F> h(cc, z.degree);
  return h.is_coboundary(sparse_from_dense(flatten<F>(complex, z)));
}

template <class F>
ExactnessReport pair_sequence_t(const FiberedComplex& complex, const Subcomplex& a) {
  auto x = full_cochain_complex<F>(complex);
  InstanceMask in_a = mask_of(complex, a);
  InstanceMask out_a = complement(in_a);
  InstanceMask all = complement(InstanceMask(in_a.size()));
  for (std::size_t n = 0; n < in_a.size(); ++n) all[n] = std::vector<bool>(in_a[n].size(), true);
  auto rel = restrict_complex(x, out_a);
  auto sub = restrict_complex(x, in_a);
  std::vector<SparseMatrix<F>> f, g;
  for (int n = 0; n <= complex.top_dim(); ++n) {
    const auto k = static_cast<std::size_t>(n);
    f.push_back(restriction_matrix<F>(all[k], out_a[k]).transpose());
    g.push_back(restriction_matrix<F>(all[k], in_a[k]));
  }
  return long_exact_sequence(rel, x, sub, f, g, "H(X,A)", "H(X)", "H(A)");
}

}  // namespace

InstanceMask mask_of(const FiberedComplex& complex, const Subcomplex& sub) {
  sub.check_shape(complex);
  InstanceMask mask;
  for (int n = 0; n <= complex.top_dim(); ++n) {
    std::vector<bool> m;
    const auto& fams = complex.families_of(n);
    for (int f = 0; f < static_cast<int>(fams.size()); ++f) {
      for (int atom : fams[static_cast<std::size_t>(f)].base) m.push_back(sub.contains(n, f, atom));
    }
    mask.push_back(std::move(m));
  }
  return mask;
}

InstanceMask complement(const InstanceMask& mask) {
  InstanceMask out = mask;
  for (auto& m : out) m.flip();
  return out;
}

std::vector<int> local_indices(const std::vector<bool>& mask) {
  std::vector<int> out(mask.size(), -1);
  int next = 0;
  for (std::size_t k = 0; k < mask.size(); ++k) {
    if (mask[k]) out[k] = next++;
  }
  return out;
}

Cochain apply_coboundary(const FiberedComplex& complex, const Cochain& cochain) {
  switch (cochain.kind) {
    case CoefficientKind::Z2: return apply_coboundary_t<Z2>(complex, cochain);
    case CoefficientKind::Q: return apply_coboundary_t<Rational>(complex, cochain);
    case CoefficientKind::R: return apply_coboundary_t<double>(complex, cochain);
  }
  throw std::logic_error("bad coefficient kind");
}

CohomologyResult cohomology_dim(const FiberedComplex& complex, int n, CoefficientKind kind, const Subcomplex* rel) {
  if (n < 0) throw DomainError("negative degree");
  switch (kind) {
    case CoefficientKind::Z2: return cohomology_t<Z2>(complex, n, rel);
    case CoefficientKind::Q: return cohomology_t<Rational>(complex, n, rel);
    case CoefficientKind::R:
      throw DomainError("real coefficients have no exact rank computation; use the L2/Hodge backend");
  }
  throw std::logic_error("bad coefficient kind");
}

std::vector<int> cohomology_dims(const FiberedComplex& complex, CoefficientKind kind, const Subcomplex* rel) {
  std::vector<int> dims;
  for (int n = 0; n <= complex.top_dim(); ++n) dims.push_back(cohomology_dim(complex, n, kind, rel).dimension);
  return dims;
}

bool is_coboundary(const FiberedComplex& complex, const Cochain& cocycle) {
  switch (cocycle.kind) {
    case CoefficientKind::Z2: return is_coboundary_t<Z2>(complex, cocycle);
    case CoefficientKind::Q: return is_coboundary_t<Rational>(complex, cocycle);
    case CoefficientKind::R: throw DomainError("real coefficients have no exact coboundary test");
  }
  throw std::logic_error("bad coefficient kind");
}

Cochain cup_product(const FiberedComplex& complex, const Cochain& a, const Cochain& b) {
  check_shape(complex, a);
  check_shape(complex, b);
  if (a.kind != b.kind) throw StructuralError("cup product of cochains with different coefficient kinds");
  switch (a.kind) {
    case CoefficientKind::Z2: return cup_t<Z2>(complex, a, b);
    case CoefficientKind::Q: return cup_t<Rational>(complex, a, b);
    case CoefficientKind::R: return cup_t<double>(complex, a, b);
  }
  throw std::logic_error("bad coefficient kind");
}

bool ExactnessReport::exact() const {
  if (!cochain_level_exact) return false;
  for (const auto& node : nodes) {
    if (!node.exact) return false;
  }
  return true;
}

std::vector<ExactnessReport> pair_sequence_check(const FiberedComplex& complex, const Subcomplex& a) {
  if (!a.is_face_closed(complex)) throw DomainError("subcomplex A is not face-closed");
  return {pair_sequence_t<Rational>(complex, a), pair_sequence_t<Z2>(complex, a)};
}

}  // namespace lamcoh
