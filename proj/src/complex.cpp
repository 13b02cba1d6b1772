#include "lamcoh/complex.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace lamcoh {

Transversal Transversal::uniform(int atoms, const Rational& weight) {
  return Transversal{std::vector<Rational>(static_cast<std::size_t>(atoms), weight)};
}

std::optional<int> PartialHolonomy::operator()(int atom) const {
  auto it = pairs_.find(atom);
  if (it == pairs_.end()) return std::nullopt;
  return it->second;
}

bool PartialHolonomy::injective() const {
  std::set<int> seen;
  for (const auto& [from, to] : pairs_) {
    if (!seen.insert(to).second) return false;
  }
  return true;
}

std::vector<int> PartialHolonomy::domain() const {
  std::vector<int> d;
  for (const auto& [from, to] : pairs_) d.push_back(from);
  return d;
}

PartialHolonomy PartialHolonomy::then(const PartialHolonomy& after) const {
  std::map<int, int> out;
  for (const auto& [from, mid] : pairs_) {
    if (auto to = after(mid)) out.emplace(from, *to);
  }
  return PartialHolonomy(std::move(out));
}

int SimplexFamily::position(int atom) const {
  auto it = std::lower_bound(base.begin(), base.end(), atom);
  if (it == base.end() || *it != atom) return -1;
  return static_cast<int>(it - base.begin());
}

int SimplexFamily::face_atom(int i, int atom) const {
  int pos = position(atom);
  if (pos < 0) throw StructuralError("atom " + std::to_string(atom) + " is not in the family base");
  if (i < 0 || i >= static_cast<int>(faces.size())) throw StructuralError("face index out of range");
  const Face& face = faces[static_cast<std::size_t>(i)];
  if (face.map.size() != base.size()) throw StructuralError("face map size does not match base");
  return face.map[static_cast<std::size_t>(pos)];
}

InstanceIndex::InstanceIndex(const std::vector<SimplexFamily>& families) {
  offsets_.reserve(families.size());
  for (const auto& fam : families) {
    offsets_.push_back(total_);
    bases_.push_back(fam.base);
    total_ += static_cast<int>(fam.base.size());
  }
}

int InstanceIndex::index(int family, int atom) const {
  if (family < 0 || family >= static_cast<int>(bases_.size())) {
    throw StructuralError("unknown family id " + std::to_string(family));
  }
  const auto& base = bases_[static_cast<std::size_t>(family)];
  auto it = std::lower_bound(base.begin(), base.end(), atom);
  if (it == base.end() || *it != atom) {
    throw StructuralError("atom " + std::to_string(atom) + " not in base of family " + std::to_string(family));
  }
  return offsets_[static_cast<std::size_t>(family)] + static_cast<int>(it - base.begin());
}

Instance InstanceIndex::instance(int index) const {
  if (index < 0 || index >= total_) throw std::out_of_range("instance index");
  auto it = std::upper_bound(offsets_.begin(), offsets_.end(), index);
  // Empty families share offsets with their successor, so step back to the
  // last family whose range actually contains index.
  auto f = static_cast<int>(it - offsets_.begin()) - 1;
  while (index - offsets_[static_cast<std::size_t>(f)] >= static_cast<int>(bases_[static_cast<std::size_t>(f)].size())) ++f;
  const auto& base = bases_[static_cast<std::size_t>(f)];
  return Instance{f, base[static_cast<std::size_t>(index - offsets_[static_cast<std::size_t>(f)])]};
}

const std::vector<SimplexFamily>& FiberedComplex::families_of(int n) const {
  static const std::vector<SimplexFamily> none;
  if (n < 0 || n > top_dim()) return none;
  return families[static_cast<std::size_t>(n)];
}

const SimplexFamily& FiberedComplex::family(int n, int f) const {
  const auto& fams = families_of(n);
  if (f < 0 || f >= static_cast<int>(fams.size())) {
    throw StructuralError("unknown family " + std::to_string(f) + " in degree " + std::to_string(n));
  }
  return fams[static_cast<std::size_t>(f)];
}

int FiberedComplex::instance_count(int n) const {
  int total = 0;
  for (const auto& fam : families_of(n)) total += static_cast<int>(fam.base.size());
  return total;
}

Instance FiberedComplex::face_of(int n, const Instance& inst, int i) const {
  const SimplexFamily& fam = family(n, inst.family);
  int atom = fam.face_atom(i, inst.atom);
  return Instance{fam.faces[static_cast<std::size_t>(i)].target, atom};
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) std::swap(a, b);
    parent[static_cast<std::size_t>(a)] = b;  // root is always the least atom
  }
};

std::string describe(int n, int f, const SimplexFamily& fam) {
  std::ostringstream os;
  os << "family " << n << ":" << f;
  if (!fam.label.empty()) os << " (" << fam.label << ")";
  return os.str();
}

void check_structure(const FiberedComplex& c, std::vector<Diagnostic>& out) {
  const int atoms = c.transversal.size();
  for (int a = 0; a < atoms; ++a) {
    if (c.transversal.weight(a) < 0) {
      out.push_back({"structure", "atom " + std::to_string(a) + " has negative weight"});
    }
  }
  if (c.regularity_bound < 1) out.push_back({"structure", "regularity bound must be positive"});
  for (int n = 0; n <= c.top_dim(); ++n) {
    const auto& fams = c.families_of(n);
    for (int f = 0; f < static_cast<int>(fams.size()); ++f) {
      const auto& fam = fams[static_cast<std::size_t>(f)];
      const std::string who = describe(n, f, fam);
      if (fam.dim != n) out.push_back({"structure", who + " declares dimension " + std::to_string(fam.dim)});
      if (!std::is_sorted(fam.base.begin(), fam.base.end()) ||
          std::adjacent_find(fam.base.begin(), fam.base.end()) != fam.base.end()) {
        out.push_back({"structure", who + " base is not sorted and duplicate-free"});
      }
      for (int a : fam.base) {
        if (a < 0 || a >= atoms) out.push_back({"structure", who + " references unknown atom " + std::to_string(a)});
      }
      const std::size_t expected_faces = n == 0 ? 0 : static_cast<std::size_t>(n + 1);
      if (fam.faces.size() != expected_faces) {
        out.push_back({"structure", who + " has " + std::to_string(fam.faces.size()) + " faces, expected " +
                                        std::to_string(expected_faces)});
        continue;
      }
      for (std::size_t i = 0; i < fam.faces.size(); ++i) {
        const Face& face = fam.faces[i];
        const auto& lower = c.families_of(n - 1);
        if (face.target < 0 || face.target >= static_cast<int>(lower.size())) {
          out.push_back({"structure", who + " face " + std::to_string(i) + " targets unknown family"});
          continue;
        }
        if (face.map.size() != fam.base.size()) {
          out.push_back({"structure", who + " face " + std::to_string(i) + " map is not total on the base"});
          continue;
        }
        const auto& target = lower[static_cast<std::size_t>(face.target)];
        for (std::size_t k = 0; k < face.map.size(); ++k) {
          if (!target.contains(face.map[k])) {
            out.push_back({"structure", who + " face " + std::to_string(i) + " sends atom " +
                                            std::to_string(fam.base[k]) + " to atom " + std::to_string(face.map[k]) +
                                            " outside the target base"});
          }
        }
      }
    }
  }
}

void check_simplicial_identities(const FiberedComplex& c, std::vector<Diagnostic>& out) {
  for (int n = 2; n <= c.top_dim(); ++n) {
    const auto& fams = c.families_of(n);
    for (int f = 0; f < static_cast<int>(fams.size()); ++f) {
      const auto& fam = fams[static_cast<std::size_t>(f)];
      for (int j = 1; j <= n; ++j) {
        for (int i = 0; i < j; ++i) {
          for (int atom : fam.base) {
            Instance self{f, atom};
            Instance a = c.face_of(n - 1, c.face_of(n, self, j), i);
            Instance b = c.face_of(n - 1, c.face_of(n, self, i), j - 1);
            if (a != b) {
              std::ostringstream os;
              os << describe(n, f, fam) << " at atom " << atom << ": face " << i << " of face " << j
                 << " is (" << a.family << "," << a.atom << ") but face " << (j - 1) << " of face " << i << " is ("
                 << b.family << "," << b.atom << ")";
              out.push_back({"simplicial-identity", os.str()});
            }
          }
        }
      }
    }
  }
}

void check_regularity(const FiberedComplex& c, std::vector<Diagnostic>& out) {
  for (int n = 1; n <= c.top_dim(); ++n) {
    std::map<Instance, std::set<Instance>> cofaces;
    const auto& fams = c.families_of(n);
    for (int f = 0; f < static_cast<int>(fams.size()); ++f) {
      for (int atom : fams[static_cast<std::size_t>(f)].base) {
        for (int i = 0; i <= n; ++i) cofaces[c.face_of(n, Instance{f, atom}, i)].insert(Instance{f, atom});
      }
    }
    for (const auto& [face, cos] : cofaces) {
      if (static_cast<int>(cos.size()) > c.regularity_bound) {
        std::ostringstream os;
        os << "instance (" << (n - 1) << "," << face.family << "," << face.atom << ") is a face of " << cos.size()
           << " simplices, above the regularity bound " << c.regularity_bound;
        out.push_back({"regularity", os.str()});
      }
    }
  }
}

UnionFind leaf_union(const FiberedComplex& c) {
  UnionFind uf(c.transversal.size());
  const int atoms = c.transversal.size();
  for (int n = 1; n <= c.top_dim(); ++n) {
    for (const auto& fam : c.families_of(n)) {
      for (const auto& face : fam.faces) {
        for (std::size_t k = 0; k < fam.base.size() && k < face.map.size(); ++k) {
          int a = fam.base[k];
          int b = face.map[k];
          if (a >= 0 && a < atoms && b >= 0 && b < atoms) uf.unite(a, b);
        }
      }
    }
  }
  return uf;
}

}  // namespace

std::vector<Diagnostic> validate(const FiberedComplex& complex) {
  std::vector<Diagnostic> out;
  check_structure(complex, out);
  if (!out.empty()) return out;
  check_simplicial_identities(complex, out);
  check_regularity(complex, out);
  for (const auto& block : leaf_decomposition(complex)) {
    const Rational& w = complex.transversal.weight(block.front());
    for (int a : block) {
      if (complex.transversal.weight(a) != w) {
        out.push_back({"leaf-weight", "atoms " + std::to_string(block.front()) + " and " + std::to_string(a) +
                                          " share a leaf but have weights " + to_string(w) + " and " +
                                          to_string(complex.transversal.weight(a))});
      }
    }
  }
  return out;
}

std::vector<std::vector<int>> leaf_decomposition(const FiberedComplex& complex) {
  UnionFind uf = leaf_union(complex);
  std::map<int, std::vector<int>> blocks;
  for (int a = 0; a < complex.transversal.size(); ++a) blocks[uf.find(a)].push_back(a);
  std::vector<std::vector<int>> out;
  for (auto& [root, atoms] : blocks) out.push_back(std::move(atoms));
  return out;
}

std::vector<int> leaf_of_atoms(const FiberedComplex& complex) {
  std::vector<int> leaf(static_cast<std::size_t>(complex.transversal.size()), -1);
  auto blocks = leaf_decomposition(complex);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (int a : blocks[b]) leaf[static_cast<std::size_t>(a)] = static_cast<int>(b);
  }
  return leaf;
}

Cochain Cochain::zero(const FiberedComplex& complex, int degree, CoefficientKind kind) {
  return constant(complex, degree, Coefficient::zero(kind));
}

Cochain Cochain::constant(const FiberedComplex& complex, int degree, const Coefficient& value) {
  Cochain c;
  c.degree = degree;
  c.kind = value.kind();
  for (const auto& fam : complex.families_of(degree)) c.values.emplace_back(fam.base.size(), value);
  return c;
}

void check_shape(const FiberedComplex& complex, const Cochain& cochain) {
  const auto& fams = complex.families_of(cochain.degree);
  if (cochain.values.size() != fams.size()) {
    throw StructuralError("cochain of degree " + std::to_string(cochain.degree) + " has " +
                          std::to_string(cochain.values.size()) + " families, complex has " +
                          std::to_string(fams.size()));
  }
  for (std::size_t f = 0; f < fams.size(); ++f) {
    if (cochain.values[f].size() != fams[f].base.size()) {
      throw StructuralError("cochain values for family " + std::to_string(f) + " do not match its base");
    }
    for (const auto& v : cochain.values[f]) {
      if (v.kind() != cochain.kind) throw StructuralError("cochain mixes coefficient kinds");
    }
  }
}

const Coefficient& Cochain::at(const FiberedComplex& complex, const Instance& inst) const {
  const auto& fam = complex.family(degree, inst.family);
  int pos = fam.position(inst.atom);
  if (pos < 0) throw StructuralError("cochain lookup outside family base");
  return values.at(static_cast<std::size_t>(inst.family)).at(static_cast<std::size_t>(pos));
}

void Cochain::set(const FiberedComplex& complex, const Instance& inst, Coefficient value) {
  const auto& fam = complex.family(degree, inst.family);
  int pos = fam.position(inst.atom);
  if (pos < 0) throw StructuralError("cochain assignment outside family base");
  if (value.kind() != kind) throw StructuralError("coefficient kind mismatch");
  values.at(static_cast<std::size_t>(inst.family)).at(static_cast<std::size_t>(pos)) = std::move(value);
}

bool Cochain::is_zero() const {
  for (const auto& fam : values) {
    for (const auto& v : fam) {
      if (!v.is_zero()) return false;
    }
  }
  return true;
}

Cochain Cochain::restricted(const FiberedComplex& complex, int family, const std::vector<int>& atoms) const {
  check_shape(complex, *this);
  Cochain out = zero(complex, degree, kind);
  const auto& fam = complex.family(degree, family);
  for (int a : atoms) {
    int pos = fam.position(a);
    if (pos < 0) continue;
    out.values[static_cast<std::size_t>(family)][static_cast<std::size_t>(pos)] =
        values[static_cast<std::size_t>(family)][static_cast<std::size_t>(pos)];
  }
  return out;
}

Subcomplex Subcomplex::empty(const FiberedComplex& complex) {
  Subcomplex s;
  const auto atoms = static_cast<std::size_t>(complex.transversal.size());
  for (int n = 0; n <= complex.top_dim(); ++n) {
    s.selected_.emplace_back(complex.families_of(n).size(), std::vector<bool>(atoms, false));
  }
  return s;
}

Subcomplex Subcomplex::full(const FiberedComplex& complex) {
  Subcomplex s = empty(complex);
  for (int n = 0; n <= complex.top_dim(); ++n) {
    const auto& fams = complex.families_of(n);
    for (std::size_t f = 0; f < fams.size(); ++f) {
      for (int a : fams[f].base) s.selected_[static_cast<std::size_t>(n)][f][static_cast<std::size_t>(a)] = true;
    }
  }
  return s;
}

Subcomplex Subcomplex::from_instances(const FiberedComplex& complex,
                                      const std::vector<std::pair<int, Instance>>& items) {
  Subcomplex s = empty(complex);
  for (const auto& [n, inst] : items) {
    if (!complex.family(n, inst.family).contains(inst.atom)) {
      throw StructuralError("subcomplex instance (" + std::to_string(n) + "," + std::to_string(inst.family) + "," +
                            std::to_string(inst.atom) + ") does not exist");
    }
    s.set(n, inst.family, inst.atom, true);
  }
  return s;
}

Subcomplex Subcomplex::closure(const FiberedComplex& complex, const std::vector<std::pair<int, Instance>>& seeds) {
  Subcomplex s = from_instances(complex, seeds);
  for (int n = complex.top_dim(); n >= 1; --n) {
    const auto& fams = complex.families_of(n);
    for (int f = 0; f < static_cast<int>(fams.size()); ++f) {
      for (int a : fams[static_cast<std::size_t>(f)].base) {
        if (!s.contains(n, f, a)) continue;
        for (int i = 0; i <= n; ++i) {
          Instance face = complex.face_of(n, Instance{f, a}, i);
          s.set(n - 1, face.family, face.atom, true);
        }
      }
    }
  }
  return s;
}

Subcomplex Subcomplex::star(const FiberedComplex& complex, const std::vector<std::pair<int, Instance>>& seeds) {
  Subcomplex s = from_instances(complex, seeds);
  for (int n = 1; n <= complex.top_dim(); ++n) {
    const auto& fams = complex.families_of(n);
    for (int f = 0; f < static_cast<int>(fams.size()); ++f) {
      for (int a : fams[static_cast<std::size_t>(f)].base) {
        for (int i = 0; i <= n; ++i) {
          if (s.contains(n - 1, complex.face_of(n, Instance{f, a}, i))) {
            s.set(n, f, a, true);
            break;
          }
        }
      }
    }
  }
  return s;
}

bool Subcomplex::contains(int n, int family, int atom) const {
  if (n < 0 || n >= static_cast<int>(selected_.size())) return false;
  const auto& fams = selected_[static_cast<std::size_t>(n)];
  if (family < 0 || family >= static_cast<int>(fams.size())) return false;
  const auto& atoms = fams[static_cast<std::size_t>(family)];
  if (atom < 0 || atom >= static_cast<int>(atoms.size())) return false;
  return atoms[static_cast<std::size_t>(atom)];
}

void Subcomplex::set(int n, int family, int atom, bool value) {
  selected_.at(static_cast<std::size_t>(n)).at(static_cast<std::size_t>(family)).at(static_cast<std::size_t>(atom)) =
      value;
}

int Subcomplex::count(int n) const {
  if (n < 0 || n >= static_cast<int>(selected_.size())) return 0;
  int total = 0;
  for (const auto& fam : selected_[static_cast<std::size_t>(n)]) total += static_cast<int>(std::count(fam.begin(), fam.end(), true));
  return total;
}

int Subcomplex::count() const {
  int total = 0;
  for (int n = 0; n < static_cast<int>(selected_.size()); ++n) total += count(n);
  return total;
}

bool Subcomplex::is_face_closed(const FiberedComplex& complex) const {
  for (int n = 1; n <= complex.top_dim(); ++n) {
    const auto& fams = complex.families_of(n);
    for (int f = 0; f < static_cast<int>(fams.size()); ++f) {
      for (int a : fams[static_cast<std::size_t>(f)].base) {
        if (!contains(n, f, a)) continue;
        for (int i = 0; i <= n; ++i) {
          if (!contains(n - 1, complex.face_of(n, Instance{f, a}, i))) return false;
        }
      }
    }
  }
  return true;
}

namespace {

template <class Op>
Subcomplex combine(const Subcomplex& a, const Subcomplex& b, Op op) {
  if (a.selection().size() != b.selection().size()) throw StructuralError("subcomplexes of different complexes");
  Subcomplex out = a;
  for (std::size_t n = 0; n < a.selection().size(); ++n) {
    const auto& fa = a.selection()[n];
    const auto& fb = b.selection()[n];
    if (fa.size() != fb.size()) throw StructuralError("subcomplexes of different complexes");
    for (std::size_t f = 0; f < fa.size(); ++f) {
      if (fa[f].size() != fb[f].size()) throw StructuralError("subcomplexes of different complexes");
      for (std::size_t t = 0; t < fa[f].size(); ++t) {
        out.set(static_cast<int>(n), static_cast<int>(f), static_cast<int>(t), op(fa[f][t], fb[f][t]));
      }
    }
  }
  return out;
}

}  // namespace

Subcomplex Subcomplex::united(const Subcomplex& other) const {
  return combine(*this, other, [](bool x, bool y) { return x || y; });
}
Subcomplex Subcomplex::intersected(const Subcomplex& other) const {
  return combine(*this, other, [](bool x, bool y) { return x && y; });
}
Subcomplex Subcomplex::minus(const Subcomplex& other) const {
  return combine(*this, other, [](bool x, bool y) { return x && !y; });
}
bool Subcomplex::subset_of(const Subcomplex& other) const { return minus(other).count() == 0; }

void Subcomplex::check_shape(const FiberedComplex& complex) const {
  if (static_cast<int>(selected_.size()) != complex.top_dim() + 1) {
    throw StructuralError("subcomplex dimension does not match complex");
  }
  for (int n = 0; n <= complex.top_dim(); ++n) {
    const auto& fams = selected_[static_cast<std::size_t>(n)];
    if (fams.size() != complex.families_of(n).size()) throw StructuralError("subcomplex family count mismatch");
    for (std::size_t f = 0; f < fams.size(); ++f) {
      if (static_cast<int>(fams[f].size()) != complex.transversal.size()) {
        throw StructuralError("subcomplex atom count mismatch");
      }
      for (int a = 0; a < complex.transversal.size(); ++a) {
        if (fams[f][static_cast<std::size_t>(a)] && !complex.families_of(n)[f].contains(a)) {
          throw StructuralError("subcomplex selects an instance outside a family base");
        }
      }
    }
  }
}

}  // namespace lamcoh
