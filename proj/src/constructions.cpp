#include "lamcoh/constructions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace lamcoh {

int BaseComplex::euler_characteristic() const {
  int chi = 0;
  for (int n = 0; n <= top_dim(); ++n) chi += (n % 2 == 0 ? 1 : -1) * count(n);
  return chi;
}

BaseComplex BaseComplex::from_tuples(const std::vector<std::vector<int>>& tuples) {
  std::vector<std::set<std::vector<int>>> by_dim;
  std::vector<std::vector<int>> pending = tuples;
  while (!pending.empty()) {
    std::vector<int> t = std::move(pending.back());
    pending.pop_back();
    if (t.empty()) continue;
    const auto n = t.size() - 1;
    if (by_dim.size() <= n) by_dim.resize(n + 1);
    if (!by_dim[n].insert(t).second) continue;
    if (n == 0) continue;
    for (std::size_t i = 0; i < t.size(); ++i) {
      std::vector<int> face = t;
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
      pending.push_back(std::move(face));
    }
  }
  BaseComplex base;
  std::vector<std::map<std::vector<int>, int>> ids(by_dim.size());
  for (std::size_t n = 0; n < by_dim.size(); ++n) {
    int next = 0;
    for (const auto& t : by_dim[n]) ids[n][t] = next++;
  }
  base.faces.resize(by_dim.size());
  for (std::size_t n = 0; n < by_dim.size(); ++n) {
    for (const auto& t : by_dim[n]) {
      std::vector<int> faces;
      if (n > 0) {
        for (std::size_t i = 0; i < t.size(); ++i) {
          std::vector<int> face = t;
          face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
          faces.push_back(ids[n - 1].at(face));
        }
      }
      base.faces[n].push_back(std::move(faces));
    }
  }
  return base;
}

BaseComplex BaseComplex::point() { return from_tuples({{0}}); }

BaseComplex BaseComplex::circle(int vertices) {
  if (vertices < 3) throw DomainError("a simplicial circle needs at least 3 vertices");
  std::vector<std::vector<int>> edges;
  for (int i = 0; i + 1 < vertices; ++i) edges.push_back({i, i + 1});
  edges.push_back({0, vertices - 1});
  return from_tuples(edges);
}

BaseComplex BaseComplex::loop() {
  BaseComplex b;
  b.faces = {{{}}, {{0, 0}}};
  return b;
}

BaseComplex BaseComplex::torus() {
  BaseComplex b;
  // Edges: 0 = a (horizontal), 1 = b (vertical), 2 = c (diagonal).
  // Lower triangle: faces (b, c, a); upper triangle: faces (a, c, b).
  b.faces = {{{}}, {{0, 0}, {0, 0}, {0, 0}}, {{1, 2, 0}, {0, 2, 1}}};
  return b;
}

BaseComplex BaseComplex::torus7() {
  std::vector<std::vector<int>> triangles;
  for (int i = 0; i < 7; ++i) {
    for (auto shifts : {std::vector<int>{0, 1, 3}, std::vector<int>{0, 2, 3}}) {
      std::vector<int> t;
      for (int s : shifts) t.push_back((i + s) % 7);
      std::sort(t.begin(), t.end());
      triangles.push_back(t);
    }
  }
  return from_tuples(triangles);
}

namespace {

int apply_permutation(const std::vector<int>& perm, int atom) {
  if (perm.empty()) return atom;
  return perm.at(static_cast<std::size_t>(atom));
}

/// Edge [v0, v1] of simplex s in dimension n >= 1.
int leading_edge(const BaseComplex& base, int n, int s) {
  for (int k = n; k >= 2; --k) s = base.faces[static_cast<std::size_t>(k)][static_cast<std::size_t>(s)][static_cast<std::size_t>(k)];
  return s;
}

}  // namespace

FiberedComplex twisted_product(const BaseComplex& base, const Transversal& transversal,
                               const std::vector<std::vector<int>>& edge_permutations,
                               const std::vector<std::vector<std::vector<int>>>& bases) {
  const int atoms = transversal.size();
  if (base.top_dim() >= 1 && !edge_permutations.empty() &&
      static_cast<int>(edge_permutations.size()) != base.count(1)) {
    throw StructuralError("one permutation per base edge is required");
  }
  for (const auto& perm : edge_permutations) {
    if (!perm.empty() && static_cast<int>(perm.size()) != atoms) throw StructuralError("permutation size mismatch");
  }
  auto edge_perm = [&](int e) -> const std::vector<int>& {
    static const std::vector<int> identity;
    return edge_permutations.empty() ? identity : edge_permutations[static_cast<std::size_t>(e)];
  };

  // Face map of (n, s): atom -> atom.
  auto face_image = [&](int n, int s, int i, int atom) {
    if (i != 0) return atom;
    return apply_permutation(edge_perm(leading_edge(base, n, s)), atom);
  };

  std::vector<std::vector<std::set<int>>> chosen(static_cast<std::size_t>(base.top_dim() + 1));
  for (int n = 0; n <= base.top_dim(); ++n) {
    chosen[static_cast<std::size_t>(n)].resize(static_cast<std::size_t>(base.count(n)));
    for (int s = 0; s < base.count(n); ++s) {
      auto& set = chosen[static_cast<std::size_t>(n)][static_cast<std::size_t>(s)];
      if (bases.empty()) {
        for (int a = 0; a < atoms; ++a) set.insert(a);
      } else {
        for (int a : bases.at(static_cast<std::size_t>(n)).at(static_cast<std::size_t>(s))) set.insert(a);
      }
    }
  }
  for (int n = base.top_dim(); n >= 1; --n) {
    for (int s = 0; s < base.count(n); ++s) {
      const auto& faces = base.faces[static_cast<std::size_t>(n)][static_cast<std::size_t>(s)];
      for (int i = 0; i <= n; ++i) {
        auto& target = chosen[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(faces[static_cast<std::size_t>(i)])];
        for (int a : chosen[static_cast<std::size_t>(n)][static_cast<std::size_t>(s)]) target.insert(face_image(n, s, i, a));
      }
    }
  }

  FiberedComplex c;
  c.transversal = transversal;
  c.families.resize(static_cast<std::size_t>(base.top_dim() + 1));
  for (int n = 0; n <= base.top_dim(); ++n) {
    for (int s = 0; s < base.count(n); ++s) {
      SimplexFamily fam;
      fam.dim = n;
      const auto& set = chosen[static_cast<std::size_t>(n)][static_cast<std::size_t>(s)];
      fam.base.assign(set.begin(), set.end());
      if (n > 0) {
        const auto& faces = base.faces[static_cast<std::size_t>(n)][static_cast<std::size_t>(s)];
        for (int i = 0; i <= n; ++i) {
          Face face;
          face.target = faces[static_cast<std::size_t>(i)];
          for (int a : fam.base) face.map.push_back(face_image(n, s, i, a));
          fam.faces.push_back(std::move(face));
        }
      }
      c.families[static_cast<std::size_t>(n)].push_back(std::move(fam));
    }
  }
  c.regularity_bound = minimal_regularity_bound(c);
  return c;
}

int minimal_regularity_bound(const FiberedComplex& complex) {
  int bound = 1;
  for (int n = 1; n <= complex.top_dim(); ++n) {
    std::map<Instance, std::set<Instance>> cofaces;
    const auto& fams = complex.families_of(n);
    for (int f = 0; f < static_cast<int>(fams.size()); ++f) {
      for (int atom : fams[static_cast<std::size_t>(f)].base) {
        for (int i = 0; i <= n; ++i) cofaces[complex.face_of(n, Instance{f, atom}, i)].insert(Instance{f, atom});
      }
    }
    for (const auto& [face, cos] : cofaces) bound = std::max(bound, static_cast<int>(cos.size()));
  }
  return bound;
}

FiberedComplex product_complex(const BaseComplex& base, const Transversal& transversal) {
  return twisted_product(base, transversal, {});
}

SuspensionData SuspensionData::circle(std::vector<int> permutation) {
  SuspensionData d;
  d.base = BaseComplex::loop();
  d.edge_words = {{0}};
  d.permutations = {std::move(permutation)};
  return d;
}

SuspensionData SuspensionData::torus_of(std::vector<int> first, std::vector<int> second) {
  SuspensionData d;
  d.base = BaseComplex::torus();
  d.edge_words = {{0}, {1}, {0, 1}};
  d.permutations = {std::move(first), std::move(second)};
  d.torus = true;
  return d;
}

namespace {

std::vector<int> compose_word(const SuspensionData& data, const std::vector<int>& word, int atoms) {
  std::vector<int> perm(static_cast<std::size_t>(atoms));
  std::iota(perm.begin(), perm.end(), 0);
  for (int g : word) {
    if (g < 0 || g >= static_cast<int>(data.permutations.size())) throw DomainError("edge word uses unknown generator");
    const auto& p = data.permutations[static_cast<std::size_t>(g)];
    for (auto& a : perm) a = p.at(static_cast<std::size_t>(a));
  }
  return perm;
}

}  // namespace

void check_suspension_data(const SuspensionData& data) {
  if (data.permutations.empty()) throw DomainError("suspension needs at least one generator");
  const auto atoms = data.permutations.front().size();
  for (const auto& p : data.permutations) {
    if (p.size() != atoms) throw DomainError("generator permutations act on different atom sets");
    std::vector<bool> hit(atoms, false);
    for (int a : p) {
      if (a < 0 || static_cast<std::size_t>(a) >= atoms || hit[static_cast<std::size_t>(a)]) {
        throw DomainError("generator is not a bijection of the atoms");
      }
      hit[static_cast<std::size_t>(a)] = true;
    }
  }
  if (static_cast<int>(data.edge_words.size()) != data.base.count(1)) {
    throw DomainError("one generator word per base edge is required");
  }
  if (data.torus) {
    if (data.permutations.size() != 2) throw DomainError("torus suspension needs exactly two generators");
    if (compose_word(data, {0, 1}, static_cast<int>(atoms)) != compose_word(data, {1, 0}, static_cast<int>(atoms))) {
      throw DomainError("torus suspension generators do not commute");
    }
  }
  for (int s = 0; s < data.base.count(2); ++s) {
    const auto& faces = data.base.faces[2][static_cast<std::size_t>(s)];
    auto along = [&](int edge) { return compose_word(data, data.edge_words[static_cast<std::size_t>(edge)], static_cast<int>(atoms)); };
    std::vector<int> first = along(faces[2]);
    std::vector<int> second = along(faces[0]);
    std::vector<int> composite(atoms);
    for (std::size_t a = 0; a < atoms; ++a) composite[a] = second[static_cast<std::size_t>(first[a])];
    if (composite != along(faces[1])) throw DomainError("generator words are not flat around base triangle " + std::to_string(s));
  }
}

FiberedComplex suspension(const SuspensionData& data, const Transversal& transversal) {
  check_suspension_data(data);
  const int atoms = transversal.size();
  if (static_cast<int>(data.permutations.front().size()) != atoms) throw DomainError("transversal size mismatch");
  std::vector<std::vector<int>> perms;
  for (const auto& word : data.edge_words) perms.push_back(compose_word(data, word, atoms));
  return twisted_product(data.base, transversal, perms);
}

FiberedComplex kronecker_model(int q, int p) {
  if (q < 1) throw DomainError("q must be positive");
  return kronecker_model(q, p, Transversal::uniform(q, Rational(1, q)));
}

FiberedComplex kronecker_model(int q, int p, const Transversal& transversal) {
  if (q < 1) throw DomainError("q must be positive");
  std::vector<int> rotation(static_cast<std::size_t>(q));
  for (int t = 0; t < q; ++t) rotation[static_cast<std::size_t>(t)] = (((t + p) % q) + q) % q;
  return suspension(SuspensionData::circle(std::move(rotation)), transversal);
}

WedgeResult wedge(const FiberedComplex& left, const FiberedComplex& right, const std::vector<WedgePoint>& points) {
  const int top = std::max(left.top_dim(), right.top_dim());
  const int offset = left.transversal.size();
  std::set<Instance> seen_left, seen_right;
  std::map<Instance, Instance> glue;  // right 0-instance -> left 0-instance
  for (const auto& p : points) {
    if (!left.family(0, p.left.family).contains(p.left.atom)) throw DomainError("wedge point missing on the left");
    if (!right.family(0, p.right.family).contains(p.right.atom)) throw DomainError("wedge point missing on the right");
    if (!seen_left.insert(p.left).second) throw DomainError("wedge points repeat a left vertex");
    if (!seen_right.insert(p.right).second) throw DomainError("wedge identification is not injective");
    glue.emplace(p.right, p.left);
  }

  // Instance-level graph: node = (side, family, atom) with face node ids.
  struct Node {
    int side;
    int family;
    int atom;
    std::vector<int> faces;
  };
  std::vector<std::vector<Node>> nodes(static_cast<std::size_t>(top + 1));
  WedgeResult result;
  result.right_atom_offset = offset;
  std::vector<std::vector<int>> left_node(static_cast<std::size_t>(top + 1)), right_node(static_cast<std::size_t>(top + 1));
  for (int n = 0; n <= top; ++n) {
    const auto k = static_cast<std::size_t>(n);
    InstanceIndex li = left.index(n);
    InstanceIndex ri = right.index(n);
    for (int idx = 0; idx < li.size(); ++idx) {
      Instance inst = li.instance(idx);
      Node node{0, inst.family, inst.atom, {}};
      for (int i = 0; n > 0 && i <= n; ++i) {
        Instance face = left.face_of(n, inst, i);
        node.faces.push_back(left_node[k - 1][static_cast<std::size_t>(left.index(n - 1).index(face.family, face.atom))]);
      }
      left_node[k].push_back(static_cast<int>(nodes[k].size()));
      nodes[k].push_back(std::move(node));
    }
    for (int idx = 0; idx < ri.size(); ++idx) {
      Instance inst = ri.instance(idx);
      if (n == 0) {
        auto it = glue.find(inst);
        if (it != glue.end()) {
          right_node[k].push_back(left_node[k][static_cast<std::size_t>(left.index(0).index(it->second.family, it->second.atom))]);
          continue;
        }
      }
      Node node{1, inst.family, inst.atom + offset, {}};
      for (int i = 0; n > 0 && i <= n; ++i) {
        Instance face = right.face_of(n, inst, i);
        node.faces.push_back(right_node[k - 1][static_cast<std::size_t>(right.index(n - 1).index(face.family, face.atom))]);
      }
      right_node[k].push_back(static_cast<int>(nodes[k].size()));
      nodes[k].push_back(std::move(node));
    }
  }

  // Regroup nodes into families keyed by origin family and face families.
  FiberedComplex& c = result.complex;
  c.transversal = left.transversal;
  for (const auto& w : right.transversal.weights) c.transversal.weights.push_back(w);
  c.families.resize(static_cast<std::size_t>(top + 1));
  std::vector<std::vector<Instance>> node_instance(static_cast<std::size_t>(top + 1));
  for (int n = 0; n <= top; ++n) {
    const auto k = static_cast<std::size_t>(n);
    std::map<std::vector<int>, int> family_of_key;
    std::vector<std::vector<int>> members;
    for (std::size_t id = 0; id < nodes[k].size(); ++id) {
      const Node& node = nodes[k][id];
      std::vector<int> key{node.side, node.family};
      for (int face : node.faces) key.push_back(node_instance[k - 1][static_cast<std::size_t>(face)].family);
      auto [it, inserted] = family_of_key.emplace(key, static_cast<int>(members.size()));
      if (inserted) members.emplace_back();
      members[static_cast<std::size_t>(it->second)].push_back(static_cast<int>(id));
    }
    node_instance[k].resize(nodes[k].size());
    for (std::size_t f = 0; f < members.size(); ++f) {
      auto& ids = members[f];
      std::sort(ids.begin(), ids.end(), [&](int a, int b) { return nodes[k][static_cast<std::size_t>(a)].atom < nodes[k][static_cast<std::size_t>(b)].atom; });
      SimplexFamily fam;
      fam.dim = n;
      const Node& first = nodes[k][static_cast<std::size_t>(ids.front())];
      const FiberedComplex& origin = first.side == 0 ? left : right;
      fam.label = origin.family(n, first.family).label;
      for (int id : ids) {
        fam.base.push_back(nodes[k][static_cast<std::size_t>(id)].atom);
        node_instance[k][static_cast<std::size_t>(id)] = Instance{static_cast<int>(f), nodes[k][static_cast<std::size_t>(id)].atom};
      }
      for (int i = 0; n > 0 && i <= n; ++i) {
        Face face;
        face.target = node_instance[k - 1][static_cast<std::size_t>(first.faces[static_cast<std::size_t>(i)])].family;
        for (int id : ids) {
          face.map.push_back(node_instance[k - 1][static_cast<std::size_t>(nodes[k][static_cast<std::size_t>(id)].faces[static_cast<std::size_t>(i)])].atom);
        }
        fam.faces.push_back(std::move(face));
      }
      c.families[k].push_back(std::move(fam));
    }
  }
  c.regularity_bound = minimal_regularity_bound(c);

  result.left_instance.resize(static_cast<std::size_t>(top + 1));
  result.right_instance.resize(static_cast<std::size_t>(top + 1));
  for (int n = 0; n <= top; ++n) {
    const auto k = static_cast<std::size_t>(n);
    for (int id : left_node[k]) result.left_instance[k].push_back(node_instance[k][static_cast<std::size_t>(id)]);
    for (int id : right_node[k]) result.right_instance[k].push_back(node_instance[k][static_cast<std::size_t>(id)]);
  }
  for (const auto& p : points) {
    result.points.push_back(result.left_instance[0][static_cast<std::size_t>(left.index(0).index(p.left.family, p.left.atom))]);
  }
  return result;
}

WedgeResult wedge(const FiberedComplex& left, const FiberedComplex& right, int left_vertex_family,
                  int right_vertex_family, const PartialHolonomy& gamma) {
  if (!gamma.injective()) throw DomainError("wedge identification is not injective");
  std::vector<WedgePoint> points;
  for (const auto& [from, to] : gamma.pairs()) {
    points.push_back(WedgePoint{Instance{left_vertex_family, from}, Instance{right_vertex_family, to}});
  }
  return wedge(left, right, points);
}

FiberedComplex induced_complex(const FiberedComplex& complex, const Subcomplex& selection) {
  selection.check_shape(complex);
  if (!selection.is_face_closed(complex)) throw DomainError("selection is not face-closed");
  FiberedComplex out;
  out.transversal = complex.transversal;
  out.families.resize(complex.families.size());
  for (int n = 0; n <= complex.top_dim(); ++n) {
    const auto& fams = complex.families_of(n);
    for (int f = 0; f < static_cast<int>(fams.size()); ++f) {
      const auto& fam = fams[static_cast<std::size_t>(f)];
      SimplexFamily kept;
      kept.dim = n;
      kept.label = fam.label;
      kept.faces.resize(fam.faces.size());
      for (std::size_t i = 0; i < fam.faces.size(); ++i) kept.faces[i].target = fam.faces[i].target;
      for (std::size_t pos = 0; pos < fam.base.size(); ++pos) {
        if (!selection.contains(n, f, fam.base[pos])) continue;
        kept.base.push_back(fam.base[pos]);
        for (std::size_t i = 0; i < fam.faces.size(); ++i) kept.faces[i].map.push_back(fam.faces[i].map[pos]);
      }
      out.families[static_cast<std::size_t>(n)].push_back(std::move(kept));
    }
  }
  out.regularity_bound = std::max(1, complex.regularity_bound);
  return out;
}

namespace {

template <class F>
SparseMatrix<F> stack(const SparseMatrix<F>& top, const SparseMatrix<F>& bottom) {
  if (top.cols() != bottom.cols()) throw std::invalid_argument("stack: column mismatch");
  SparseMatrix<F> m(top.rows() + bottom.rows(), top.cols());
  for (int j = 0; j < top.cols(); ++j) {
    m.column(j) = top.column(j);
    for (const auto& [i, v] : bottom.column(j)) m.column(j).emplace_back(i + top.rows(), v);
  }
  return m;
}

template <class F>
SparseMatrix<F> side_by_side(const SparseMatrix<F>& a, const SparseMatrix<F>& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("side_by_side: row mismatch");
  SparseMatrix<F> m(a.rows(), a.cols() + b.cols());
  for (int j = 0; j < a.cols(); ++j) m.column(j) = a.column(j);
  for (int j = 0; j < b.cols(); ++j) m.column(a.cols() + j) = b.column(j);
  return m;
}

template <class F>
SparseMatrix<F> block_diagonal(const SparseMatrix<F>& a, const SparseMatrix<F>& b) {
  SparseMatrix<F> m(a.rows() + b.rows(), a.cols() + b.cols());
  for (int j = 0; j < a.cols(); ++j) m.column(j) = a.column(j);
  for (int j = 0; j < b.cols(); ++j) {
    for (const auto& [i, v] : b.column(j)) m.column(a.cols() + j).emplace_back(i + a.rows(), v);
  }
  return m;
}

template <class F>
ExactnessReport mayer_vietoris_t(const FiberedComplex& x, const Subcomplex& u, const Subcomplex& v) {
  auto full = full_cochain_complex<F>(x);
  InstanceMask mu = mask_of(x, u);
  InstanceMask mv = mask_of(x, v);
  InstanceMask muv = mask_of(x, u.intersected(v));
  InstanceMask all = mu;
  for (auto& m : all) m.assign(m.size(), true);
  auto cu = restrict_complex(full, mu);
  auto cv = restrict_complex(full, mv);
  auto cuv = restrict_complex(full, muv);
  CochainComplex<F> sum;
  for (int n = 0; n <= x.top_dim(); ++n) {
    sum.dims.push_back(cu.dim(n) + cv.dim(n));
    sum.d.push_back(block_diagonal(cu.differential(n), cv.differential(n)));
  }
  std::vector<SparseMatrix<F>> f, g;
  const F minus_one = FieldTraits<F>::zero() - FieldTraits<F>::one();
  for (int n = 0; n <= x.top_dim(); ++n) {
    const auto k = static_cast<std::size_t>(n);
    f.push_back(stack(restriction_matrix<F>(all[k], mu[k]), restriction_matrix<F>(all[k], mv[k])));
    SparseMatrix<F> from_v = restriction_matrix<F>(mv[k], muv[k]);
    for (int j = 0; j < from_v.cols(); ++j) scale(from_v.column(j), minus_one);
    g.push_back(side_by_side(restriction_matrix<F>(mu[k], muv[k]), from_v));
  }
  return long_exact_sequence(full, sum, cuv, f, g, "H(X)", "H(U)+H(V)", "H(U∩V)");
}

}  // namespace

std::vector<ExactnessReport> mayer_vietoris_check(const FiberedComplex& x, const Subcomplex& u, const Subcomplex& v) {
  u.check_shape(x);
  v.check_shape(x);
  if (!u.is_face_closed(x) || !v.is_face_closed(x)) throw DomainError("cover members must be face-closed");
  if (!(u.united(v) == Subcomplex::full(x))) throw CoverageError("U and V do not cover X");
  return {mayer_vietoris_t<Rational>(x, u, v), mayer_vietoris_t<Z2>(x, u, v)};
}

ExcisionReport excision_check(const FiberedComplex& x, const Subcomplex& u, const Subcomplex& z) {
  u.check_shape(x);
  z.check_shape(x);
  if (!u.is_face_closed(x)) throw DomainError("U is not face-closed");
  if (!z.subset_of(u)) throw DomainError("Z is not contained in U");
  Subcomplex rest = Subcomplex::full(x).minus(z);
  if (!rest.is_face_closed(x)) throw DomainError("X \\ Z is not face-closed");
  Subcomplex u_rest = u.minus(z);
  if (!u_rest.is_face_closed(x)) throw DomainError("U \\ Z is not face-closed");
  FiberedComplex excised = induced_complex(x, rest);
  ExcisionReport r;
  r.dims_pair_q = cohomology_dims(x, CoefficientKind::Q, &u);
  r.dims_excised_q = cohomology_dims(excised, CoefficientKind::Q, &u_rest);
  r.dims_pair_z2 = cohomology_dims(x, CoefficientKind::Z2, &u);
  r.dims_excised_z2 = cohomology_dims(excised, CoefficientKind::Z2, &u_rest);
  r.equal = r.dims_pair_q == r.dims_excised_q && r.dims_pair_z2 == r.dims_excised_z2;
  return r;
}

}  // namespace lamcoh
