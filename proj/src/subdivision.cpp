#include "lamcoh/subdivision.hpp"

#include "lamcoh/constructions.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace lamcoh {

namespace {

std::vector<int> chain_support(const PatternChain& chain) {
  std::set<int> s;
  for (const auto& v : chain) s.insert(v.support.begin(), v.support.end());
  return {s.begin(), s.end()};
}

PatternChain relabel(const PatternChain& chain, const std::vector<int>& kept) {
  PatternChain out = chain;
  for (auto& v : out) {
    for (auto& x : v.support) {
      x = static_cast<int>(std::lower_bound(kept.begin(), kept.end(), x) - kept.begin());
    }
  }
  return out;
}

bool strictly_below(const PatternVertex& a, const PatternVertex& b) {
  // prism order: (i, e) <= (i', e') componentwise, not equal
  return a.support[0] <= b.support[0] && a.tag <= b.tag && !(a == b);
}

// Family-level locate; works for families with an empty base.
int locate_family(const PatternComplex& pc, const FiberedComplex& original, int n, int family,
                  const PatternChain& chain) {
  auto support = chain_support(chain);
  if (static_cast<int>(support.size()) < n + 1) {
    int dim = n;
    for (int j = n; j >= 0; --j) {
      if (std::binary_search(support.begin(), support.end(), j)) continue;
      family = original.family(dim, family).faces.at(static_cast<std::size_t>(j)).target;
      --dim;
    }
    return locate_family(pc, original, dim, family, relabel(chain, support));
  }
  return pc.family_of.at({n, family, chain});
}

using PatternFn = std::vector<PatternChain> (*)(int);

PatternComplex build(const FiberedComplex& complex, PatternFn patterns, const char* tag) {
  PatternComplex pc;
  const int top = complex.top_dim();
  pc.complex.transversal = complex.transversal;
  pc.complex.families.resize(static_cast<std::size_t>(std::max(top + 1, 0)));
  pc.origin.resize(pc.complex.families.size());
  for (int a = 0; a < complex.transversal.size(); ++a) pc.atom_origin.push_back(a);

  std::vector<std::vector<PatternChain>> by_dim;
  for (int n = 0; n <= top; ++n) by_dim.push_back(patterns(n));
  // Prism patterns reach one dimension higher than the original simplex.
  int out_top = top;
  for (int n = 0; n <= top; ++n) {
    for (const auto& p : by_dim[static_cast<std::size_t>(n)]) out_top = std::max(out_top, static_cast<int>(p.size()) - 1);
  }
  pc.complex.families.resize(static_cast<std::size_t>(out_top + 1));
  pc.origin.resize(static_cast<std::size_t>(out_top + 1));

  for (int n = 0; n <= top; ++n) {
    const auto& fams = complex.families_of(n);
    for (int f = 0; f < static_cast<int>(fams.size()); ++f) {
      const auto& fam = fams[static_cast<std::size_t>(f)];
      for (const auto& p : by_dim[static_cast<std::size_t>(n)]) {
        const int k = static_cast<int>(p.size()) - 1;
        auto& slot = pc.complex.families[static_cast<std::size_t>(k)];
        pc.family_of[{n, f, p}] = static_cast<int>(slot.size());
        pc.origin[static_cast<std::size_t>(k)].push_back(FamilyOrigin{n, f, p});
        SimplexFamily nf;
        nf.dim = k;
        nf.label = fam.label.empty() ? "" : fam.label + "/" + tag + std::to_string(pc.family_of[{n, f, p}]);
        if (k == 0 && n >= 1) {
          for (int t : fam.base) {
            const int id = pc.complex.transversal.size();
            pc.barycenter_atom[{n, f, t}] = id;
            pc.complex.transversal.weights.push_back(complex.transversal.weight(t));
            pc.atom_origin.push_back(t);
            nf.base.push_back(id);
          }
        } else {
          nf.base = fam.base;
        }
        slot.push_back(std::move(nf));
      }
    }
  }

  for (int n = 0; n <= top; ++n) {
    const auto& fams = complex.families_of(n);
    for (int f = 0; f < static_cast<int>(fams.size()); ++f) {
      const auto& fam = fams[static_cast<std::size_t>(f)];
      for (const auto& p : by_dim[static_cast<std::size_t>(n)]) {
        const int k = static_cast<int>(p.size()) - 1;
        if (k == 0) continue;
        auto& nf = pc.complex.families[static_cast<std::size_t>(k)][static_cast<std::size_t>(pc.family_of.at({n, f, p}))];
        for (int i = 0; i <= k; ++i) {
          PatternChain face = p;
          face.erase(face.begin() + i);
          Face record;
          record.target = locate_family(pc, complex, n, f, face);
          for (int t : fam.base) {
            auto [d, inst] = pc.locate(complex, n, Instance{f, t}, face);
            if (d != k - 1 || inst.family != record.target) throw std::logic_error("pattern face mislocated");
            record.map.push_back(inst.atom);
          }
          nf.faces.push_back(std::move(record));
        }
      }
    }
  }
  pc.complex.regularity_bound = minimal_regularity_bound(pc.complex);
  return pc;
}

}  // namespace

std::pair<int, Instance> face_spanned(const FiberedComplex& complex, int n, Instance inst,
                                      const std::vector<int>& support) {
  int dim = n;
  for (int j = n; j >= 0; --j) {
    if (std::binary_search(support.begin(), support.end(), j)) continue;
    inst = complex.face_of(dim, inst, j);
    --dim;
  }
  return {dim, inst};
}

std::pair<int, Instance> PatternComplex::locate(const FiberedComplex& original, int n, const Instance& sigma,
                                                const PatternChain& chain) const {
  auto support = chain_support(chain);
  if (static_cast<int>(support.size()) < n + 1) {
    auto [d, face] = face_spanned(original, n, sigma, support);
    return locate(original, d, face, relabel(chain, support));
  }
  const int k = static_cast<int>(chain.size()) - 1;
  const int family = family_of.at({n, sigma.family, chain});
  int atom = sigma.atom;
  if (k == 0 && n >= 1) atom = barycenter_atom.at({n, sigma.family, sigma.atom});
  return {k, Instance{family, atom}};
}

std::vector<PatternChain> subdivision_patterns(int n) {
  std::vector<std::vector<int>> subsets;
  for (int mask = 1; mask < (1 << (n + 1)); ++mask) {
    std::vector<int> s;
    for (int v = 0; v <= n; ++v) {
      if (mask & (1 << v)) s.push_back(v);
    }
    subsets.push_back(std::move(s));
  }
  auto proper_subset = [](const std::vector<int>& a, const std::vector<int>& b) {
    return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  std::vector<PatternChain> out;
  std::function<void(PatternChain&)> grow = [&](PatternChain& chain) {
    out.push_back(chain);
    const std::vector<int> lowest = chain.front().support;
    for (const auto& s : subsets) {
      if (!proper_subset(s, lowest)) continue;
      chain.insert(chain.begin(), PatternVertex{s, 0});
      grow(chain);
      chain.erase(chain.begin());
    }
  };
  std::vector<int> full(static_cast<std::size_t>(n + 1));
  for (int v = 0; v <= n; ++v) full[static_cast<std::size_t>(v)] = v;
  PatternChain start{PatternVertex{full, 0}};
  grow(start);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PatternChain> prism_patterns(int n) {
  std::vector<PatternVertex> vertices;
  for (int i = 0; i <= n; ++i) {
    for (int e = 0; e <= 1; ++e) vertices.push_back(PatternVertex{{i}, e});
  }
  std::vector<PatternChain> out;
  std::function<void(PatternChain&)> grow = [&](PatternChain& chain) {
    if (static_cast<int>(chain_support(chain).size()) == n + 1) out.push_back(chain);
    for (const auto& v : vertices) {
      if (!strictly_below(chain.back(), v)) continue;
      chain.push_back(v);
      grow(chain);
      chain.pop_back();
    }
  };
  for (const auto& v : vertices) {
    PatternChain chain{v};
    grow(chain);
  }
  std::sort(out.begin(), out.end());
  return out;
}

PatternChain shuffle_chain(int n, int i) {
  PatternChain chain;
  for (int j = 0; j <= i; ++j) chain.push_back(PatternVertex{{j}, 0});
  for (int j = i; j <= n; ++j) chain.push_back(PatternVertex{{j}, 1});
  return chain;
}

PatternChain end_chain(int n, int end) {
  PatternChain chain;
  for (int j = 0; j <= n; ++j) chain.push_back(PatternVertex{{j}, end});
  return chain;
}

PatternComplex barycentric_subdivide(const FiberedComplex& complex) {
  return build(complex, &subdivision_patterns, "sd");
}

PatternComplex prism_complex(const FiberedComplex& complex) { return build(complex, &prism_patterns, "pr"); }

}  // namespace lamcoh
