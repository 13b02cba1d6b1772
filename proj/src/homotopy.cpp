#include "lamcoh/homotopy.hpp"

#include <algorithm>
#include <string>

namespace lamcoh {

SimplexImage normalize_image(const FiberedComplex& target, int dim, const Instance& instance,
                             std::vector<int> vertex_map) {
  std::vector<int> range = vertex_map;
  range.erase(std::unique(range.begin(), range.end()), range.end());
  SimplexImage img{dim, instance, std::move(vertex_map)};
  if (static_cast<int>(range.size()) == dim + 1) return img;
  auto [d, face] = face_spanned(target, dim, instance, range);
  for (auto& v : img.vertex_map) v = static_cast<int>(std::lower_bound(range.begin(), range.end(), v) - range.begin());
  img.dim = d;
  img.instance = face;
  return img;
}

SimplicialMap identity_map(const FiberedComplex& complex) {
  SimplicialMap m;
  for (int n = 0; n <= complex.top_dim(); ++n) {
    std::vector<SimplexImage> imgs;
    InstanceIndex idx = complex.index(n);
    std::vector<int> vm(static_cast<std::size_t>(n + 1));
    for (int v = 0; v <= n; ++v) vm[static_cast<std::size_t>(v)] = v;
    for (int k = 0; k < idx.size(); ++k) imgs.push_back(SimplexImage{n, idx.instance(k), vm});
    m.images.push_back(std::move(imgs));
  }
  return m;
}

std::vector<Diagnostic> check_simplicial_map(const FiberedComplex& source, const FiberedComplex& target,
                                             const SimplicialMap& map) {
  std::vector<Diagnostic> out;
  if (static_cast<int>(map.images.size()) != source.top_dim() + 1) {
    out.push_back({"shape", "map covers " + std::to_string(map.images.size()) + " degrees"});
    return out;
  }
  for (int n = 0; n <= source.top_dim(); ++n) {
    InstanceIndex idx = source.index(n);
    const auto& imgs = map.images[static_cast<std::size_t>(n)];
    if (static_cast<int>(imgs.size()) != idx.size()) {
      out.push_back({"shape", "degree " + std::to_string(n) + " has the wrong number of images"});
      continue;
    }
    for (int k = 0; k < idx.size(); ++k) {
      const auto& img = imgs[static_cast<std::size_t>(k)];
      const std::string who = "instance " + std::to_string(k) + " of degree " + std::to_string(n);
      bool shape_ok = static_cast<int>(img.vertex_map.size()) == n + 1 && img.dim >= 0 && img.dim <= n &&
                      std::is_sorted(img.vertex_map.begin(), img.vertex_map.end()) && !img.vertex_map.empty() &&
                      img.vertex_map.front() == 0 && img.vertex_map.back() == img.dim;
      for (std::size_t v = 1; shape_ok && v < img.vertex_map.size(); ++v) {
        if (img.vertex_map[v] - img.vertex_map[v - 1] > 1) shape_ok = false;
      }
      if (!shape_ok) {
        out.push_back({"vertex-map", who + " has a vertex map that is not a monotone surjection"});
        continue;
      }
      const auto& fam = target.family(img.dim, img.instance.family);
      if (!fam.contains(img.instance.atom)) {
        out.push_back({"structure", who + " maps to a missing target instance"});
        continue;
      }
      if (n == 0) continue;
      InstanceIndex lower = source.index(n - 1);
      for (int i = 0; i <= n; ++i) {
        std::vector<int> vm = img.vertex_map;
        vm.erase(vm.begin() + i);
        SimplexImage expected = normalize_image(target, img.dim, img.instance, vm);
        Instance face = source.face_of(n, idx.instance(k), i);
        const auto& actual = map.images[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(lower.index(face.family, face.atom))];
        if (!(expected == actual)) {
          out.push_back({"face", who + ": image of face " + std::to_string(i) + " is not the face of the image"});
        }
      }
    }
  }
  return out;
}

SimplicialMap compose(const FiberedComplex&, const FiberedComplex& y, const FiberedComplex& z,
                      const SimplicialMap& first, const SimplicialMap& second) {
  SimplicialMap out;
  for (const auto& imgs : first.images) {
    std::vector<SimplexImage> row;
    for (const auto& a : imgs) {
      const auto& b = second.images.at(static_cast<std::size_t>(a.dim))
                          .at(static_cast<std::size_t>(y.index(a.dim).index(a.instance.family, a.instance.atom)));
      std::vector<int> vm;
      for (int v : a.vertex_map) vm.push_back(b.vertex_map.at(static_cast<std::size_t>(v)));
      row.push_back(normalize_image(z, b.dim, b.instance, std::move(vm)));
    }
    out.images.push_back(std::move(row));
  }
  return out;
}

SimplicialMap end_inclusion(const FiberedComplex& k, const PatternComplex& prism, int end) {
  SimplicialMap m;
  for (int n = 0; n <= k.top_dim(); ++n) {
    std::vector<SimplexImage> imgs;
    InstanceIndex idx = k.index(n);
    std::vector<int> vm(static_cast<std::size_t>(n + 1));
    for (int v = 0; v <= n; ++v) vm[static_cast<std::size_t>(v)] = v;
    for (int j = 0; j < idx.size(); ++j) {
      auto [d, inst] = prism.locate(k, n, idx.instance(j), end_chain(n, end));
      imgs.push_back(SimplexImage{d, inst, vm});
    }
    m.images.push_back(std::move(imgs));
  }
  return m;
}

namespace {

template <class Fn>
SimplicialMap map_prism(const PatternComplex& prism, Fn image_of) {
  SimplicialMap m;
  const FiberedComplex& c = prism.complex;
  for (int n = 0; n <= c.top_dim(); ++n) {
    std::vector<SimplexImage> imgs;
    InstanceIndex idx = c.index(n);
    for (int j = 0; j < idx.size(); ++j) {
      Instance inst = idx.instance(j);
      const FamilyOrigin& o = prism.origin[static_cast<std::size_t>(n)][static_cast<std::size_t>(inst.family)];
      imgs.push_back(image_of(o, Instance{o.family, prism.atom_origin[static_cast<std::size_t>(inst.atom)]}));
    }
    m.images.push_back(std::move(imgs));
  }
  return m;
}

// Removes consecutive repeats; vertex_map records where each entry went.
PatternChain collapse(const PatternChain& chain, std::vector<int>& vertex_map) {
  PatternChain out;
  vertex_map.clear();
  for (const auto& v : chain) {
    if (out.empty() || !(out.back() == v)) out.push_back(v);
    vertex_map.push_back(static_cast<int>(out.size()) - 1);
  }
  return out;
}

}  // namespace

SimplicialMap prism_projection(const FiberedComplex& k, const PatternComplex& prism) {
  return map_prism(prism, [&](const FamilyOrigin& o, const Instance& sigma) {
    std::vector<int> vm;
    for (const auto& v : o.chain) vm.push_back(v.support.front());
    return normalize_image(k, o.dim, sigma, vm);
  });
}

SimplicialMap prism_fold(const FiberedComplex& k, const PatternComplex& prism, std::array<int, 2> phi) {
  if (phi[0] > phi[1] || phi[0] < 0 || phi[1] > 1) throw DomainError("prism fold needs a monotone map of {0, 1}");
  return map_prism(prism, [&](const FamilyOrigin& o, const Instance& sigma) {
    PatternChain image = o.chain;
    for (auto& v : image) v.tag = phi[static_cast<std::size_t>(v.tag)];
    std::vector<int> vm;
    PatternChain collapsed = collapse(image, vm);
    auto [d, inst] = prism.locate(k, o.dim, sigma, collapsed);
    return SimplexImage{d, inst, vm};
  });
}

namespace {

template <class F>
std::vector<SparseMatrix<F>> prism_operator(const FiberedComplex& k, const FiberedComplex& l,
                                            const PatternComplex& prism, const SimplicialMap& h, int top) {
  std::vector<SparseMatrix<F>> ops;
  const F one = FieldTraits<F>::one();
  const F minus_one = FieldTraits<F>::zero() - one;
  for (int n = 0; n <= top; ++n) {
    SparseMatrix<F> p(k.instance_count(n - 1), l.instance_count(n));
    if (n >= 1) {
      InstanceIndex ki = k.index(n - 1);
      InstanceIndex pi = prism.complex.index(n);
      InstanceIndex li = l.index(n);
      for (int row = 0; row < ki.size(); ++row) {
        Instance sigma = ki.instance(row);
        for (int i = 0; i <= n - 1; ++i) {
          auto [d, cell] = prism.locate(k, n - 1, sigma, shuffle_chain(n - 1, i));
          const auto& img = h.images.at(static_cast<std::size_t>(d)).at(static_cast<std::size_t>(pi.index(cell.family, cell.atom)));
          if (img.dim != n) continue;
          p.add(row, li.index(img.instance.family, img.instance.atom), i % 2 == 0 ? one : minus_one);
        }
      }
    }
    ops.push_back(std::move(p));
  }
  return ops;
}

template <class F>
bool certificate(const FiberedComplex& k, const FiberedComplex& l, const SimplicialMap& f, const SimplicialMap& g,
                 const std::vector<SparseMatrix<F>>& p, int top) {
  for (int n = 0; n <= top; ++n) {
    SparseMatrix<F> lhs = pullback_matrix<F>(k, l, g, n) - pullback_matrix<F>(k, l, f, n);
    SparseMatrix<F> rhs(k.instance_count(n), l.instance_count(n));
    rhs = rhs + coboundary_matrix<F>(k, n - 1) * p[static_cast<std::size_t>(n)];
    if (n + 1 <= top) rhs = rhs + p[static_cast<std::size_t>(n + 1)] * coboundary_matrix<F>(l, n);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

}  // namespace

HomotopyResult homotopy_operator(const FiberedComplex& k, const FiberedComplex& l, const SimplicialMap& f,
                                 const SimplicialMap& g, const PatternComplex& prism, const SimplicialMap& h) {
  auto diag = check_simplicial_map(prism.complex, l, h);
  if (!diag.empty()) throw StructuralError("homotopy is not simplicial: " + diag.front().message);
  for (const auto* m : {&f, &g}) {
    auto d = check_simplicial_map(k, l, *m);
    if (!d.empty()) throw StructuralError("end map is not simplicial: " + d.front().message);
  }
  if (!(compose(k, prism.complex, l, end_inclusion(k, prism, 0), h) == f)) {
    throw StructuralError("homotopy restricted to end 0 differs from f");
  }
  if (!(compose(k, prism.complex, l, end_inclusion(k, prism, 1), h) == g)) {
    throw StructuralError("homotopy restricted to end 1 differs from g");
  }
  const int top = std::max(k.top_dim(), l.top_dim()) + 1;
  HomotopyResult r;
  r.operator_q = prism_operator<Rational>(k, l, prism, h, top);
  r.operator_z2 = prism_operator<Z2>(k, l, prism, h, top);
  r.certificate_q = certificate(k, l, f, g, r.operator_q, top);
  r.certificate_z2 = certificate(k, l, f, g, r.operator_z2, top);

  r.induced_equal = true;
  auto ck = full_cochain_complex<Rational>(k);
  auto cl = full_cochain_complex<Rational>(l);
  for (int n = 0; n <= std::min(k.top_dim(), l.top_dim()); ++n) {
    CohomologySpace<Rational> hk(ck, n), hl(cl, n);
    auto fi = induced_map(hl, hk, pullback_matrix<Rational>(k, l, f, n));
    auto gi = induced_map(hl, hk, pullback_matrix<Rational>(k, l, g, n));
    if (!(fi == gi)) r.induced_equal = false;
  }
  return r;
}

}  // namespace lamcoh
