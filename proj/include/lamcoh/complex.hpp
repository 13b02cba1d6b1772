// Fibered simplicial complexes: families of ordered simplices parametrized by
// the atoms of a finite measured transversal, with face maps given by leafwise
// holonomy between atom sets.
#pragma once

#include "lamcoh/field.hpp"
#include "lamcoh/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lamcoh {

/// Raised when a cochain, subcomplex or map does not match the complex it is
/// used with.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an operation's precondition on otherwise well-formed data fails.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a cover misses part of the space it should cover.
class CoverageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Finite set of atoms 0..k-1 with nonnegative rational weights.
struct Transversal {
  std::vector<Rational> weights;

  static Transversal uniform(int atoms, const Rational& weight = Rational(1));

  int size() const { return static_cast<int>(weights.size()); }
  const Rational& weight(int atom) const { return weights.at(static_cast<std::size_t>(atom)); }
};

/// Finite partial map between atom sets.
class PartialHolonomy {
 public:
  PartialHolonomy() = default;
  explicit PartialHolonomy(std::map<int, int> pairs) : pairs_(std::move(pairs)) {}

  const std::map<int, int>& pairs() const { return pairs_; }
  std::optional<int> operator()(int atom) const;
  bool injective() const;
  std::vector<int> domain() const;

  /// (after . this): defined where this is defined and after is defined on the image.
  PartialHolonomy then(const PartialHolonomy& after) const;

  friend bool operator==(const PartialHolonomy&, const PartialHolonomy&) = default;

 private:
  std::map<int, int> pairs_;
};

/// Face record of an n-family: the (n-1)-family it lands in and the atom map,
/// stored positionally (map[k] is the image of base[k]).
struct Face {
  int target = 0;
  std::vector<int> map;
};

/// n-simplices parametrized by the atoms in `base` (sorted, unique). Face i
/// omits vertex i of the ordered simplex and carries sign (-1)^i.
struct SimplexFamily {
  int dim = 0;
  std::vector<int> base;
  std::vector<Face> faces;
  std::string label;

  /// Index of atom in base, or -1.
  int position(int atom) const;
  bool contains(int atom) const { return position(atom) >= 0; }
  /// Image atom of `atom` under face i. Throws StructuralError when undefined.
  int face_atom(int i, int atom) const;
};

struct Instance {
  int family = 0;
  int atom = 0;
  friend bool operator==(const Instance&, const Instance&) = default;
  friend auto operator<=>(const Instance&, const Instance&) = default;
};

/// Canonical enumeration of the instances of one degree: families in order,
/// then base atoms in order.
class InstanceIndex {
 public:
  InstanceIndex() = default;
  explicit InstanceIndex(const std::vector<SimplexFamily>& families);

  int size() const { return total_; }
  int index(int family, int atom) const;
  int offset(int family) const { return offsets_.at(static_cast<std::size_t>(family)); }
  Instance instance(int index) const;

 private:
  std::vector<std::vector<int>> bases_;
  std::vector<int> offsets_;
  int total_ = 0;
};

class FiberedComplex {
 public:
  Transversal transversal;
  /// families[n] holds the n-dimensional families.
  std::vector<std::vector<SimplexFamily>> families;
  int regularity_bound = 1;

  int top_dim() const { return static_cast<int>(families.size()) - 1; }
  const std::vector<SimplexFamily>& families_of(int n) const;
  const SimplexFamily& family(int n, int f) const;
  int instance_count(int n) const;
  InstanceIndex index(int n) const { return InstanceIndex(families_of(n)); }

  /// Follows face i of instance (n, family, atom).
  Instance face_of(int n, const Instance& inst, int i) const;
};

struct Diagnostic {
  std::string kind;
  std::string message;
};

/// Lists every violated invariant; an empty result means the complex is valid.
std::vector<Diagnostic> validate(const FiberedComplex& complex);

/// Atoms grouped into leaves (connected through face maps), blocks ordered by
/// their least atom.
std::vector<std::vector<int>> leaf_decomposition(const FiberedComplex& complex);

/// leaf id per atom, matching the block order of leaf_decomposition.
std::vector<int> leaf_of_atoms(const FiberedComplex& complex);

/// A degree-n cochain: one coefficient per base atom of every n-family.
struct Cochain {
  int degree = 0;
  CoefficientKind kind = CoefficientKind::Q;
  std::vector<std::vector<Coefficient>> values;

  static Cochain zero(const FiberedComplex& complex, int degree, CoefficientKind kind);
  static Cochain constant(const FiberedComplex& complex, int degree, const Coefficient& value);

  const Coefficient& at(const FiberedComplex& complex, const Instance& inst) const;
  void set(const FiberedComplex& complex, const Instance& inst, Coefficient value);
  bool is_zero() const;

  /// Keeps the values on the listed atoms of one family, zero elsewhere.
  Cochain restricted(const FiberedComplex& complex, int family, const std::vector<int>& atoms) const;

  friend bool operator==(const Cochain&, const Cochain&) = default;
};

/// Throws StructuralError when the cochain's shape does not match the complex.
void check_shape(const FiberedComplex& complex, const Cochain& cochain);

template <class F>
std::vector<F> flatten(const FiberedComplex& complex, const Cochain& cochain) {
  check_shape(complex, cochain);
  std::vector<F> out;
  out.reserve(static_cast<std::size_t>(complex.instance_count(cochain.degree)));
  for (const auto& fam : cochain.values) {
    for (const auto& c : fam) out.push_back(c.template get<F>());
  }
  return out;
}

template <class F>
Cochain unflatten(const FiberedComplex& complex, int degree, const std::vector<F>& flat) {
  Cochain c;
  c.degree = degree;
  c.kind = FieldTraits<F>::kind;
  std::size_t k = 0;
  if (degree >= 0 && degree <= complex.top_dim()) {
    for (const auto& fam : complex.families_of(degree)) {
      std::vector<Coefficient> vals;
      for (std::size_t a = 0; a < fam.base.size(); ++a) vals.emplace_back(flat.at(k++));
      c.values.push_back(std::move(vals));
    }
  }
  if (k != flat.size()) throw StructuralError("cochain vector length does not match instance count");
  return c;
}

/// Selection of simplex instances, stored as selected[n][family][atom]. Most
/// operations expect it to be face-closed.
class Subcomplex {
 public:
  static Subcomplex empty(const FiberedComplex& complex);
  static Subcomplex full(const FiberedComplex& complex);
  /// Smallest face-closed subcomplex containing the given (dim, instance) list.
  static Subcomplex closure(const FiberedComplex& complex, const std::vector<std::pair<int, Instance>>& seeds);
  /// Open star: every instance having one of the seeds as an iterated face.
  static Subcomplex star(const FiberedComplex& complex, const std::vector<std::pair<int, Instance>>& seeds);
  static Subcomplex from_instances(const FiberedComplex& complex, const std::vector<std::pair<int, Instance>>& items);

  bool contains(int n, int family, int atom) const;
  bool contains(int n, const Instance& inst) const { return contains(n, inst.family, inst.atom); }
  void set(int n, int family, int atom, bool value);
  int count(int n) const;
  int count() const;

  bool is_face_closed(const FiberedComplex& complex) const;

  Subcomplex united(const Subcomplex& other) const;
  Subcomplex intersected(const Subcomplex& other) const;
  Subcomplex minus(const Subcomplex& other) const;
  bool subset_of(const Subcomplex& other) const;
  void check_shape(const FiberedComplex& complex) const;

  const std::vector<std::vector<std::vector<bool>>>& selection() const { return selected_; }

  friend bool operator==(const Subcomplex&, const Subcomplex&) = default;

 private:
  std::vector<std::vector<std::vector<bool>>> selected_;
};

}  // namespace lamcoh
