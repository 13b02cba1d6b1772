#include "lamcoh/corpus.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace lamcoh {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

std::vector<int> random_permutation(Rng& rng, int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

Rational random_weight(Rng& rng) {
  static const int num[] = {1, 1, 2, 1, 3, 1, 5};
  static const int den[] = {1, 2, 3, 3, 2, 5, 4};
  int k = uniform(rng, 0, 6);
  return Rational(num[k], den[k]);
}

// Non-decreasing vertex tuples; repeated labels give Delta-complex quotients.
std::vector<int> random_tuple(Rng& rng, int size, int vertices, bool strict) {
  std::vector<int> t;
  if (strict) {
    std::vector<int> all(static_cast<std::size_t>(vertices));
    std::iota(all.begin(), all.end(), 0);
    std::shuffle(all.begin(), all.end(), rng);
    t.assign(all.begin(), all.begin() + size);
  } else {
    for (int i = 0; i < size; ++i) t.push_back(uniform(rng, 0, vertices - 1));
  }
  std::sort(t.begin(), t.end());
  return t;
}

// Vertex label sequence of every simplex, recovered from the face lists.
std::vector<int> vertices_of(const BaseComplex& base, int n, int s) {
  if (n == 0) return {s};
  const auto& faces = base.faces[static_cast<std::size_t>(n)][static_cast<std::size_t>(s)];
  auto rest = vertices_of(base, n - 1, faces[0]);  // drops vertex 0
  auto head = vertices_of(base, n - 1, faces[static_cast<std::size_t>(n)]);
  rest.insert(rest.begin(), head.front());
  return rest;
}

}  // namespace

BaseComplex random_base(Rng& rng, int max_vertices, int max_per_dim) {
  for (;;) {
    int top = uniform(rng, 0, 9) < 2 ? uniform(rng, 0, 3) : uniform(rng, 1, 2);
    bool strict = coin(rng, 0.7);
    if (strict && top == 3) strict = false;  // a tetrahedron already has 6 edges
    int vertices = uniform(rng, strict ? top + 1 : 1, max_vertices);
    std::vector<std::vector<int>> tuples;
    int count = uniform(rng, 1, 3);
    for (int k = 0; k < count; ++k) tuples.push_back(random_tuple(rng, top + 1, vertices, strict));
    if (coin(rng, 0.3)) tuples.push_back(random_tuple(rng, uniform(rng, 1, top + 1), vertices, strict));
    auto base = BaseComplex::from_tuples(tuples);
    bool small = true;
    for (int n = 0; n <= base.top_dim(); ++n) small = small && base.count(n) <= max_per_dim;
    if (small) return base;
  }
}

Transversal random_transversal(Rng& rng, int atoms) {
  Transversal t;
  for (int a = 0; a < atoms; ++a) t.weights.push_back(random_weight(rng));
  return t;
}

FiberedComplex with_leaf_weights(FiberedComplex complex, Rng& rng) {
  for (const auto& leaf : leaf_decomposition(complex)) {
    Rational w = random_weight(rng);
    for (int a : leaf) complex.transversal.weights[static_cast<std::size_t>(a)] = w;
  }
  return complex;
}

FiberedComplex random_complex(Rng& rng) {
  for (;;) {
    auto base = random_base(rng);
    int atoms = uniform(rng, 1, 8);
    std::vector<std::vector<int>> vertex_perm;
    for (int v = 0; v < base.count(0); ++v) vertex_perm.push_back(random_permutation(rng, atoms));

    std::set<int> in_triangle;
    for (int s = 0; s < base.count(2); ++s)
      for (int e : base.faces[2][static_cast<std::size_t>(s)]) in_triangle.insert(e);

    std::vector<std::vector<int>> twists;
    for (int e = 0; e < base.count(1); ++e) {
      if (!in_triangle.count(e)) {
        twists.push_back(coin(rng) ? random_permutation(rng, atoms) : std::vector<int>{});
        continue;
      }
      // g_b o g_a^-1 keeps the twist a cocycle on every triangle.
      auto ends = vertices_of(base, 1, e);
      const auto& ga = vertex_perm[static_cast<std::size_t>(ends[0])];
      const auto& gb = vertex_perm[static_cast<std::size_t>(ends[1])];
      std::vector<int> inverse(static_cast<std::size_t>(atoms)), perm(static_cast<std::size_t>(atoms));
      for (int a = 0; a < atoms; ++a) inverse[static_cast<std::size_t>(ga[static_cast<std::size_t>(a)])] = a;
      for (int a = 0; a < atoms; ++a) perm[static_cast<std::size_t>(a)] = gb[static_cast<std::size_t>(inverse[static_cast<std::size_t>(a)])];
      twists.push_back(std::move(perm));
    }

    std::vector<std::vector<std::vector<int>>> bases;
    if (coin(rng, 0.4)) {
      bases.resize(static_cast<std::size_t>(base.top_dim() + 1));
      for (int n = 0; n <= base.top_dim(); ++n) {
        for (int s = 0; s < base.count(n); ++s) {
          std::vector<int> pick;
          for (int a = 0; a < atoms; ++a)
            if (coin(rng, 0.5)) pick.push_back(a);
          if (pick.empty()) pick.push_back(uniform(rng, 0, atoms - 1));
          bases[static_cast<std::size_t>(n)].push_back(std::move(pick));
        }
      }
    }
    auto complex = with_leaf_weights(twisted_product(base, random_transversal(rng, atoms), twists, bases), rng);
    complex.regularity_bound = minimal_regularity_bound(complex);
    if (validate(complex).empty()) return complex;
  }
}

namespace {

std::vector<std::pair<int, Instance>> maximal_instances(const FiberedComplex& complex) {
  std::vector<std::pair<int, Instance>> out;
  for (int n = complex.top_dim(); n >= 0; --n) {
    std::set<Instance> faces;
    if (n < complex.top_dim()) {
      const auto& up = complex.families_of(n + 1);
      for (int f = 0; f < static_cast<int>(up.size()); ++f)
        for (int a : up[static_cast<std::size_t>(f)].base)
          for (int i = 0; i <= n + 1; ++i) faces.insert(complex.face_of(n + 1, Instance{f, a}, i));
    }
    const auto& fams = complex.families_of(n);
    for (int f = 0; f < static_cast<int>(fams.size()); ++f)
      for (int a : fams[static_cast<std::size_t>(f)].base)
        if (!faces.count(Instance{f, a})) out.push_back({n, Instance{f, a}});
  }
  return out;
}

}  // namespace

Subcomplex random_closed(const FiberedComplex& complex, Rng& rng, double keep) {
  std::vector<std::pair<int, Instance>> seeds;
  for (const auto& m : maximal_instances(complex))
    if (coin(rng, keep)) seeds.push_back(m);
  return Subcomplex::closure(complex, seeds);
}

std::pair<Subcomplex, Subcomplex> random_cover(const FiberedComplex& complex, Rng& rng) {
  std::vector<std::pair<int, Instance>> u, v;
  for (const auto& m : maximal_instances(complex)) {
    int side = uniform(rng, 0, 2);
    if (side != 1) u.push_back(m);
    if (side != 0) v.push_back(m);
  }
  return {Subcomplex::closure(complex, u), Subcomplex::closure(complex, v)};
}

std::pair<Subcomplex, Subcomplex> random_excision(const FiberedComplex& complex, Rng& rng) {
  auto u = random_closed(complex, rng, 0.7);
  std::vector<std::pair<int, Instance>> seeds;
  const auto& vertices = complex.families_of(0);
  for (int f = 0; f < static_cast<int>(vertices.size()); ++f) {
    for (int a : vertices[static_cast<std::size_t>(f)].base) {
      std::pair<int, Instance> v{0, Instance{f, a}};
      if (Subcomplex::star(complex, {v}).subset_of(u) && coin(rng, 0.6)) seeds.push_back(v);
    }
  }
  return {u, Subcomplex::star(complex, seeds)};
}

WedgeCase random_wedge(Rng& rng) {
  Rational w = random_weight(rng);
  auto pick = [&]() {
    for (;;) {
      auto c = random_complex(rng);
      for (auto& x : c.transversal.weights) x = w;
      if (!c.families_of(0).empty()) return c;
    }
  };
  WedgeCase out;
  out.left = pick();
  out.right = pick();
  out.left_family = uniform(rng, 0, static_cast<int>(out.left.families_of(0).size()) - 1);
  out.right_family = uniform(rng, 0, static_cast<int>(out.right.families_of(0).size()) - 1);
  auto from = out.left.family(0, out.left_family).base;
  auto to = out.right.family(0, out.right_family).base;
  std::shuffle(from.begin(), from.end(), rng);
  std::shuffle(to.begin(), to.end(), rng);
  int k = uniform(rng, 1, static_cast<int>(std::min(from.size(), to.size())));
  std::map<int, int> pairs;
  for (int i = 0; i < k; ++i) pairs[from[static_cast<std::size_t>(i)]] = to[static_cast<std::size_t>(i)];
  out.gamma = PartialHolonomy(std::move(pairs));
  return out;
}

HomotopyCase make_homotopy(FiberedComplex k, const std::string& name) {
  HomotopyCase c;
  c.name = name;
  c.k = std::move(k);
  c.prism = prism_complex(c.k);
  const auto& p = c.prism.complex;
  if (name == "identity") {
    c.l = p;
    c.f = end_inclusion(c.k, c.prism, 0);
    c.g = end_inclusion(c.k, c.prism, 1);
    c.h = identity_map(p);
  } else if (name == "projection") {
    c.l = c.k;
    c.f = c.g = identity_map(c.k);
    c.h = prism_projection(c.k, c.prism);
  } else if (name == "fold-top" || name == "fold-bottom") {
    std::array<int, 2> phi = name == "fold-top" ? std::array<int, 2>{1, 1} : std::array<int, 2>{0, 0};
    c.l = p;
    c.h = prism_fold(c.k, c.prism, phi);
    c.f = compose(c.k, p, p, end_inclusion(c.k, c.prism, 0), c.h);
    c.g = compose(c.k, p, p, end_inclusion(c.k, c.prism, 1), c.h);
  } else if (name == "fold-projection") {
    c.l = c.k;
    c.h = compose(p, p, c.k, prism_fold(c.k, c.prism, {0, 1}), prism_projection(c.k, c.prism));
    c.f = c.g = identity_map(c.k);
  } else {
    throw DomainError("unknown homotopy '" + name + "'");
  }
  return c;
}

HomotopyCase random_homotopy(Rng& rng) {
  static const char* names[] = {"identity", "projection", "fold-top", "fold-bottom", "fold-projection"};
  auto k = random_complex(rng);
  return make_homotopy(std::move(k), names[uniform(rng, 0, 4)]);
}

HomotopyCase circle_into_cylinder() {
  HomotopyCase c;
  c.name = "circle-into-cylinder";
  c.k = product_complex(BaseComplex::circle(3), Transversal::uniform(1));
  c.prism = prism_complex(c.k);
  c.l = c.prism.complex;
  c.f = end_inclusion(c.k, c.prism, 0);
  c.g = end_inclusion(c.k, c.prism, 1);
  c.h = identity_map(c.l);
  return c;
}

std::vector<LinearRegion> random_boxes(Rng& rng, int n, int count) {
  std::vector<LinearRegion> out;
  for (int b = 0; b < count; ++b) {
    Point lo, hi;
    for (int i = 0; i < n; ++i) {
      int x = uniform(rng, 0, 3), y = uniform(rng, x + 1, 4);
      lo.push_back(Rational(x, 2));
      hi.push_back(Rational(y, 2));
    }
    out.push_back(LinearRegion::box(lo, hi));
  }
  return out;
}

QuadReal random_quad(Rng& rng, int d, bool irrational) {
  int q = uniform(rng, 2, 12);
  Rational a(uniform(rng, 0, q - 1), q);
  Rational b(0);
  if (irrational) {
    int s = uniform(rng, 1, 9);
    b = Rational(coin(rng) ? s : -s, uniform(rng, 2, 17));
  }
  return QuadReal(a, b, d).frac();
}

ArcSet random_arcset(Rng& rng, int d, const Rational& max_total) {
  for (;;) {
    int count = uniform(rng, 1, 3);
    std::vector<Arc> arcs;
    for (int k = 0; k < count; ++k) {
      auto lo = random_quad(rng, d, coin(rng, 0.7));
      // Length a fraction of max_total / count, possibly irrational.
      Rational share = max_total / Rational(count);
      int m = uniform(rng, 1, 5);
      QuadReal len(share * Rational(m, 6));
      if (coin(rng, 0.5)) len = len + QuadReal(Rational(0), share * Rational(1, 40), d);
      arcs.push_back({lo, lo + len});
    }
    auto set = ArcSet::from_arcs(arcs);
    if (!set.is_empty() && !set.is_full()) return set;
  }
}

}  // namespace lamcoh
