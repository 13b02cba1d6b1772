// One line per acceptance criterion; exit status 1 when any fails.

#include "lamcoh/corpus.hpp"
#include "lamcoh/hodge.hpp"
#include "lamcoh/homotopy.hpp"
#include "lamcoh/subdivision.hpp"

#include "oracle.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>

using namespace lamcoh;

namespace {

using Dense = std::vector<std::vector<Rational>>;

struct Verdict {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

// delta_n from the face maps: (dw)(s) = sum_i (-1)^i w(face_i s).
Dense oracle_coboundary(const FiberedComplex& c, int n) {
  const int rows = n + 1 <= c.top_dim() ? c.instance_count(n + 1) : 0;
  const int cols = c.instance_count(n);
  Dense m(static_cast<std::size_t>(rows), std::vector<Rational>(static_cast<std::size_t>(cols)));
  if (rows == 0) return m;
  auto lower = c.index(n), upper = c.index(n + 1);
  for (int r = 0; r < rows; ++r) {
    Instance s = upper.instance(r);
    for (int i = 0; i <= n + 1; ++i) {
      Instance f = c.face_of(n + 1, s, i);
      m[static_cast<std::size_t>(r)][static_cast<std::size_t>(lower.index(f.family, f.atom))] += i % 2 ? -1 : 1;
    }
  }
  return m;
}

Dense multiply(const Dense& a, const Dense& b, int inner) {
  Dense out(a.size(), std::vector<Rational>(b.empty() ? 0 : b[0].size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (int k = 0; k < inner; ++k) {
      if (a[i][static_cast<std::size_t>(k)] == 0) continue;
      for (std::size_t j = 0; j < out[i].size(); ++j)
        out[i][j] += a[i][static_cast<std::size_t>(k)] * b[static_cast<std::size_t>(k)][j];
    }
  return out;
}

bool is_zero(const Dense& m) {
  for (const auto& row : m)
    for (const auto& x : row)
      if (x != 0) return false;
  return true;
}

std::vector<std::vector<int>> mod2(const Dense& m) {
  std::vector<std::vector<int>> out;
  for (const auto& row : m) {
    std::vector<int> r;
    for (const auto& x : row) r.push_back(static_cast<int>(boost::multiprecision::numerator(x) % 2 != 0));
    out.push_back(r);
  }
  return out;
}

// dim H^n over Q (or Z/2) from oracle ranks.
std::vector<int> oracle_dims(const FiberedComplex& c, bool z2) {
  std::vector<int> ranks;
  for (int n = 0; n <= c.top_dim(); ++n) {
    auto d = oracle_coboundary(c, n);
    ranks.push_back(d.empty() ? 0 : (z2 ? oracle::z2_rank(mod2(d)) : oracle::dense_rank(d)));
  }
  std::vector<int> dims;
  for (int n = 0; n <= c.top_dim(); ++n)
    dims.push_back(c.instance_count(n) - ranks[static_cast<std::size_t>(n)] - (n ? ranks[static_cast<std::size_t>(n - 1)] : 0));
  return dims;
}

// Betti numbers of a plain Delta-complex.
std::vector<int> base_betti(const BaseComplex& b) {
  std::vector<int> ranks;
  for (int n = 0; n <= b.top_dim(); ++n) {
    if (n == b.top_dim()) {
      ranks.push_back(0);
      continue;
    }
    Dense m(static_cast<std::size_t>(b.count(n + 1)), std::vector<Rational>(static_cast<std::size_t>(b.count(n))));
    for (int s = 0; s < b.count(n + 1); ++s)
      for (int i = 0; i <= n + 1; ++i)
        m[static_cast<std::size_t>(s)][static_cast<std::size_t>(b.faces[static_cast<std::size_t>(n + 1)][static_cast<std::size_t>(s)][static_cast<std::size_t>(i)])] += i % 2 ? -1 : 1;
    ranks.push_back(oracle::dense_rank(m));
  }
  std::vector<int> out;
  for (int n = 0; n <= b.top_dim(); ++n)
    out.push_back(b.count(n) - ranks[static_cast<std::size_t>(n)] - (n ? ranks[static_cast<std::size_t>(n - 1)] : 0));
  return out;
}

template <class F>
Dense dense_of(const SparseMatrix<F>& m) {
  Dense out(static_cast<std::size_t>(m.rows()), std::vector<Rational>(static_cast<std::size_t>(m.cols())));
  for (int j = 0; j < m.cols(); ++j)
    for (const auto& [i, v] : m.column(j)) out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
  return out;
}

Dense sized(int rows, int cols) {
  return Dense(static_cast<std::size_t>(std::max(rows, 0)), std::vector<Rational>(static_cast<std::size_t>(std::max(cols, 0))));
}

std::vector<FiberedComplex> complex_corpus(std::uint64_t seed, int count) {
  Rng rng(seed);
  std::vector<FiberedComplex> out;
  for (int i = 0; i < count; ++i) out.push_back(random_complex(rng));
  return out;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ------------------------------------------------------------ criteria

Verdict coboundary_squares_to_zero(const std::vector<FiberedComplex>& corpus, double& elapsed) {
  Verdict v;
  auto t0 = std::chrono::steady_clock::now();
  for (std::size_t k = 0; k < corpus.size(); ++k) {
    const auto& c = corpus[k];
    for (int n = 0; n + 2 <= c.top_dim(); ++n) {
      auto dq = (coboundary_matrix<Rational>(c, n + 1) * coboundary_matrix<Rational>(c, n)).is_zero();
      auto dz = (coboundary_matrix<Z2>(c, n + 1) * coboundary_matrix<Z2>(c, n)).is_zero();
      auto o1 = oracle_coboundary(c, n), o2 = oracle_coboundary(c, n + 1);
      bool oracle_zero = is_zero(multiply(o2, o1, c.instance_count(n + 1)));
      v.require(dq && dz && oracle_zero, "complex " + std::to_string(k) + " degree " + std::to_string(n));
    }
    // The library matrices agree with the oracle entrywise.
    for (int n = 0; n < c.top_dim(); ++n)
      v.require(dense_of(coboundary_matrix<Rational>(c, n)) == oracle_coboundary(c, n),
                "matrix mismatch in complex " + std::to_string(k));
  }
  elapsed = seconds_since(t0);
  v.require(elapsed < 10.0, "runtime " + std::to_string(elapsed) + " s");
  return v;
}

Verdict euler_identity(const std::vector<FiberedComplex>& corpus) {
  Verdict v;
  for (std::size_t k = 0; k < corpus.size(); ++k) {
    const auto& c = corpus[k];
    auto dims = cohomology_dims(c, CoefficientKind::Q);
    v.require(dims == oracle_dims(c, false), "Q dims differ from oracle in complex " + std::to_string(k));
    v.require(cohomology_dims(c, CoefficientKind::Z2) == oracle_dims(c, true),
              "Z2 dims differ from oracle in complex " + std::to_string(k));
    int chi_cells = 0, chi_h = 0;
    for (int n = 0; n <= c.top_dim(); ++n) {
      chi_cells += (n % 2 ? -1 : 1) * c.instance_count(n);
      chi_h += (n % 2 ? -1 : 1) * dims[static_cast<std::size_t>(n)];
    }
    v.require(chi_cells == chi_h, "Euler characteristic differs in complex " + std::to_string(k));
  }
  return v;
}

Verdict product_example() {
  Verdict v;
  auto c = product_complex(BaseComplex::circle(3), Transversal{{Rational(1, 2), Rational(1, 3)}});
  for (int n = 0; n <= 1; ++n) {
    v.require(l2_betti_exact(c, n) == Rational(5, 6), "exact b" + std::to_string(n));
    v.require(std::abs(l2_betti(c, n) - 5.0 / 6.0) < 1e-8, "float b" + std::to_string(n));
  }
  Rng rng(303);
  for (int trial = 0; trial < 20; ++trial) {
    auto base = random_base(rng);
    auto t = random_transversal(rng, std::uniform_int_distribution<int>(1, 8)(rng));
    auto p = product_complex(base, t);
    auto dims = cohomology_dims(p, CoefficientKind::Q);
    auto b = base_betti(base);
    for (std::size_t n = 0; n < dims.size(); ++n)
      v.require(dims[n] == t.size() * b[n], "product trial " + std::to_string(trial));
  }
  return v;
}

Verdict kronecker(double& elapsed) {
  Verdict v;
  auto t0 = std::chrono::steady_clock::now();
  int cases = 0;
  for (int q = 1; q <= 20; ++q) {
    for (int p = 0; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      ++cases;
      auto ans = one_is_coboundary(q, p);
      std::string tag = "q=" + std::to_string(q) + " p=" + std::to_string(p);
      v.require(ans.coboundary == (q % 2 == 0), tag);
      if (ans.coboundary) {
        bool ok = static_cast<int>(ans.witness.size()) == q;
        for (int t = 0; ok && t < q; ++t)
          ok = (ans.witness[static_cast<std::size_t>((t + p) % q)] + ans.witness[static_cast<std::size_t>(t)]) % 2 == 1;
        v.require(ok, "witness " + tag);
      }
      if (q <= 12) v.require(oracle::one_is_coboundary_brute(q, p) == ans.coboundary, "brute force " + tag);
      auto model = kronecker_model(q, p);
      auto one = Cochain::constant(model, 1, Coefficient::one(CoefficientKind::Z2));
      v.require(is_coboundary(model, one) == ans.coboundary, "suspension flag " + tag);
      v.require(cohomology_dims(model, CoefficientKind::Z2) == std::vector<int>{1, 1}, "H* of suspension " + tag);
    }
  }
  elapsed = seconds_since(t0);
  v.require(elapsed < 30.0, "runtime " + std::to_string(elapsed) + " s");
  v.detail = v.pass ? std::to_string(cases) + " coprime pairs" : v.detail;
  return v;
}

// Points where membership in R_{-alpha} B equals membership in B: then
// R_{-alpha} B is not the complement. Candidates are midpoints between
// consecutive breakpoints of B and B - alpha.
bool differs_from_complement_oracle(const ArcSet& b, const QuadReal& alpha) {
  std::vector<QuadReal> pts{QuadReal(Rational(0)), QuadReal(Rational(1))};
  for (const auto& a : b.arcs()) {
    for (const auto& x : {a.lo, a.hi}) {
      pts.push_back(x);
      pts.push_back((x - alpha).frac());
    }
  }
  std::sort(pts.begin(), pts.end());
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    if (pts[i] == pts[i + 1]) continue;
    QuadReal mid = (pts[i] + pts[i + 1]) / Rational(2);
    if (b.contains((mid + alpha).frac()) == b.contains(mid)) return true;
  }
  return false;
}

Verdict irrational_rotation() {
  Verdict v;
  Rng rng(505);
  auto alpha = golden_angle();
  for (int i = 0; i < 50; ++i) {
    auto b = random_arcset(rng, 5, Rational(1, 2));
    bool differs = !(rotate(b, QuadReal(Rational(0)) - alpha) == complement(b));
    v.require(differs, "set " + std::to_string(i) + " is flipped by the golden rotation");
    v.require(differs_from_complement_oracle(b, alpha), "oracle disagrees on set " + std::to_string(i));
  }
  // Rational half-period rotations flip periodic sets.
  for (int i = 0; i < 20; ++i) {
    int k = std::uniform_int_distribution<int>(1, 6)(rng);
    int odd = 2 * std::uniform_int_distribution<int>(0, 3)(rng) + 1;
    QuadReal shift = random_quad(rng, 5, true);
    std::vector<Arc> arcs;
    for (int j = 0; j < k; ++j) {
      QuadReal lo = shift + QuadReal(Rational(j, k));
      arcs.push_back({lo, lo + QuadReal(Rational(1, 2 * k))});
    }
    auto b = ArcSet::from_arcs(arcs);
    QuadReal a(Rational(odd, 2 * k));
    bool forced = rotate(b, QuadReal(Rational(0)) - a) == complement(b);
    v.require(forced, "construction " + std::to_string(i) + " is not flipped");
    v.require(!differs_from_complement_oracle(b, a), "oracle disagrees on construction " + std::to_string(i));
    v.require(rotate(b, QuadReal(Rational(0)) - a * Rational(2)) == b, "double rotation " + std::to_string(i));
  }
  return v;
}

Verdict wedge_identity() {
  Verdict v;
  Rng rng(606);
  for (int i = 0; i < 20; ++i) {
    auto w = random_wedge(rng);
    auto res = wedge(w.left, w.right, w.left_family, w.right_family, w.gamma);
    v.require(validate(res.complex).empty(), "wedge " + std::to_string(i) + " is invalid");
    std::vector<std::pair<int, Instance>> tl, tr, tw;
    for (const auto& [a, b] : w.gamma.pairs()) {
      tl.push_back({0, Instance{w.left_family, a}});
      tr.push_back({0, Instance{w.right_family, b}});
    }
    for (const auto& p : res.points) tw.push_back({0, p});
    auto sl = Subcomplex::from_instances(w.left, tl);
    auto sr = Subcomplex::from_instances(w.right, tr);
    auto sw = Subcomplex::from_instances(res.complex, tw);
    for (auto kind : {CoefficientKind::Q, CoefficientKind::Z2}) {
      auto lhs = cohomology_dims(res.complex, kind, &sw);
      auto a = cohomology_dims(w.left, kind, &sl);
      auto b = cohomology_dims(w.right, kind, &sr);
      for (std::size_t n = 0; n < lhs.size(); ++n) {
        int rhs = (n < a.size() ? a[n] : 0) + (n < b.size() ? b[n] : 0);
        v.require(lhs[n] == rhs, "wedge " + std::to_string(i) + " degree " + std::to_string(n));
      }
    }
  }
  return v;
}

Verdict hodge_suite(const std::vector<FiberedComplex>& corpus) {
  Verdict v;
  Rng rng(707);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  double worst = 0.0;
  for (std::size_t k = 0; k < corpus.size(); ++k) {
    const auto& c = corpus[k];
    auto dims = oracle_dims(c, false);
    auto sd = barycentric_subdivide(c).complex;
    for (int n = 0; n <= c.top_dim(); ++n) {
      std::string tag = "complex " + std::to_string(k) + " degree " + std::to_string(n);
      auto rep = hodge_report(c, n);
      v.require(rep.kernel_dim == dims[static_cast<std::size_t>(n)], "kernel dim " + tag);
      std::vector<double> values(static_cast<std::size_t>(c.instance_count(n)));
      for (auto& x : values) x = unit(rng);
      auto dec = hodge_decompose(c, unflatten<double>(c, n, values));
      double r = std::max({dec.reconstruction_residual, dec.orthogonality_residual, rep.orthogonality_residual,
                           rep.eigen_residual});
      worst = std::max(worst, r);
      v.require(r < 1e-8, "residual " + tag);
      Rational exact = l2_betti_exact(c, n);
      v.require(std::abs(rep.lambda_betti - exact.convert_to<double>()) < 1e-8, "float Betti " + tag);
      v.require(l2_betti_exact(sd, n) == exact, "subdivision changes Betti " + tag);
    }
  }
  if (v.pass) {
    std::ostringstream os;
    os << "worst residual " << worst;
    v.detail = os.str();
  }
  return v;
}

Verdict exact_sequences(const std::vector<FiberedComplex>& corpus) {
  Verdict v;
  Rng rng(808);
  int mv = 0, pair = 0, exc = 0;
  for (std::size_t k = 0; k < corpus.size(); ++k) {
    const auto& c = corpus[k];
    auto [u, w] = random_cover(c, rng);
    for (const auto& rep : mayer_vietoris_check(c, u, w)) v.require(rep.exact(), "MV on complex " + std::to_string(k));
    ++mv;
    auto a = random_closed(c, rng);
    for (const auto& rep : pair_sequence_check(c, a)) v.require(rep.exact(), "pair on complex " + std::to_string(k));
    ++pair;
    auto [uu, z] = random_excision(c, rng);
    v.require(excision_check(c, uu, z).equal, "excision on complex " + std::to_string(k));
    exc += z.count() > 0;
  }
  // A corrupted face map is caught by validate.
  auto bad = product_complex(BaseComplex::torus7(), Transversal::uniform(2));
  std::swap(bad.families[2][0].faces[0].map[0], bad.families[2][0].faces[0].map[1]);
  v.require(!validate(bad).empty(), "corrupted face map passes validate");
  if (v.pass) v.detail = std::to_string(mv) + " MV, " + std::to_string(pair) + " pair, " + std::to_string(exc) + " nonempty excisions";
  return v;
}

bool operator_identity(const HomotopyCase& h, const HomotopyResult& r) {
  for (int n = 0; n <= h.k.top_dim(); ++n) {
    const int ln = h.l.instance_count(n), kn = h.k.instance_count(n);
    Dense lhs = sized(kn, ln);
    if (n >= 1 && static_cast<std::size_t>(n) < r.operator_q.size()) {
      auto dk = oracle_coboundary(h.k, n - 1);  // C^{n-1}(K) -> C^n(K)
      lhs = multiply(dk, dense_of(r.operator_q[static_cast<std::size_t>(n)]), h.k.instance_count(n - 1));
    }
    if (static_cast<std::size_t>(n + 1) < r.operator_q.size() && n + 1 <= h.l.top_dim()) {
      auto p = dense_of(r.operator_q[static_cast<std::size_t>(n + 1)]);  // C^{n+1}(L) -> C^n(K)
      auto dl = oracle_coboundary(h.l, n);
      auto pd = multiply(p, dl, h.l.instance_count(n + 1));
      for (std::size_t i = 0; i < lhs.size(); ++i)
        for (std::size_t j = 0; j < lhs[i].size(); ++j) lhs[i][j] += pd[i][j];
    }
    auto g = dense_of(pullback_matrix<Rational>(h.k, h.l, h.g, n));
    auto f = dense_of(pullback_matrix<Rational>(h.k, h.l, h.f, n));
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t j = 0; j < g[i].size(); ++j)
        if (lhs[i][j] != g[i][j] - f[i][j]) return false;
  }
  return true;
}

Verdict homotopies() {
  Verdict v;
  std::vector<HomotopyCase> cases{circle_into_cylinder()};
  Rng rng(909);
  for (int i = 0; i < 10; ++i) cases.push_back(random_homotopy(rng));
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const auto& h = cases[i];
    auto r = homotopy_operator(h.k, h.l, h.f, h.g, h.prism, h.h);
    std::string tag = h.name + " case " + std::to_string(i);
    v.require(r.certificate_q && r.certificate_z2, "certificate " + tag);
    v.require(operator_identity(h, r), "oracle identity " + tag);
  }
  return v;
}

Verdict geometry() {
  Verdict v;
  Rng rng(1010);
  std::uniform_int_distribution<int> coord(0, 4), count(1, 4), dim(1, 3);
  int simplices = 0;
  for (int trial = 0; trial < 50; ++trial) {
    int n = 1 + trial % 3;
    int m = count(rng);
    std::vector<std::vector<Rational>> lo, hi;
    std::vector<LinearRegion> regions;
    for (int b = 0; b < m; ++b) {
      Point l, h;
      for (int k = 0; k < n; ++k) {
        int x = coord(rng), y = coord(rng);
        while (y == x) y = coord(rng);
        l.emplace_back(std::min(x, y), 2);
        h.emplace_back(std::max(x, y), 2);
      }
      lo.push_back(l);
      hi.push_back(h);
      regions.push_back(LinearRegion::box(l, h));
    }
    std::string tag = "trial " + std::to_string(trial);
    Rational expected = oracle::grid_union_volume(lo, hi);
    auto parts = attach_decompose(regions);
    Rational vol(0);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      vol += region_volume(parts[i]);
      for (std::size_t j = i + 1; j < parts.size(); ++j)
        v.require(attached_or_disjoint(parts[i], parts[j]), "attached " + tag);
    }
    v.require(vol == expected, "decomposition volume " + tag);
    auto t = triangulate(parts);
    Rational tv(0);
    for (const auto& s : t.simplices) tv += s.volume();
    simplices += static_cast<int>(t.simplices.size());
    v.require(tv == expected, "triangulation volume " + tag);
    v.require(!find_overlap(t.simplices), "overlapping simplices " + tag);
  }
  for (int n = 0; n <= 3; ++n) v.require(prism_telescopes(prism_decompose(n)), "prism n=" + std::to_string(n));
  if (v.pass) v.detail = std::to_string(simplices) + " simplices";
  return v;
}

Verdict zero_sets() {
  Verdict v;
  Rng rng(1111);
  const int dvals[] = {2, 3, 5, 7};
  const int levels = 12;
  for (int i = 0; i < 30; ++i) {
    int d = dvals[i % 4];
    int k = 1 + i % 3;
    std::vector<ArcSet> bs;
    std::vector<QuadReal> alphas;
    while (static_cast<int>(alphas.size()) < k) {
      auto a = random_quad(rng, d, true);
      if (std::find(alphas.begin(), alphas.end(), a) == alphas.end()) alphas.push_back(a);
    }
    for (int j = 0; j < k; ++j) bs.push_back(random_arcset(rng, d));
    std::string tag = "instance " + std::to_string(i);
    auto z = zero_set(bs, alphas);
    QuadReal len = z.length();
    v.require(len.sign() > 0, "empty zero set " + tag);
    // Membership oracle at scattered exact points.
    for (int s = 0; s < 64; ++s) {
      QuadReal x = random_quad(rng, d, s % 2 == 1);
      int parity = 0;
      for (int j = 0; j < k; ++j)
        parity += bs[static_cast<std::size_t>(j)].contains((x + alphas[static_cast<std::size_t>(j)]).frac()) +
                  bs[static_cast<std::size_t>(j)].contains(x);
      v.require(z.contains(x) == (parity % 2 == 0), "membership " + tag);
    }
    auto approx = approximation_lengths(bs, alphas, levels);
    Rational bound(2 * k);
    for (int n = 1; n <= levels; ++n) {
      bound /= 2;
      QuadReal err = approx[static_cast<std::size_t>(n - 1)] - len;
      if (err.sign() < 0) err = QuadReal(Rational(0)) - err;
      v.require(err <= QuadReal(bound), tag + " level " + std::to_string(n));
    }
  }
  return v;
}

}  // namespace

int main() {
  auto corpus = complex_corpus(101, 100);
  int failed = 0;
  auto report = [&](int id, const char* name, const Verdict& v, double secs) {
    std::printf("criterion %2d %-26s %s  %s (%.2f s)\n", id, name, v.pass ? "PASS" : "FAIL", v.detail.c_str(), secs);
    std::fflush(stdout);
    failed += v.pass ? 0 : 1;
  };
  auto timed = [&](int id, const char* name, const std::function<Verdict()>& f) {
    auto t0 = std::chrono::steady_clock::now();
    auto v = f();
    report(id, name, v, seconds_since(t0));
  };

  double t1 = 0, t4 = 0;
  {
    auto v = coboundary_squares_to_zero(corpus, t1);
    if (v.pass) v.detail = std::to_string(corpus.size()) + " complexes";
    report(1, "coboundary squares to zero", v, t1);
  }
  timed(2, "Euler characteristic", [&] { return euler_identity(corpus); });
  timed(3, "product Betti numbers", product_example);
  {
    auto v = kronecker(t4);
    report(4, "Kronecker coboundary", v, t4);
  }
  timed(5, "irrational rotation", irrational_rotation);
  timed(6, "wedge relative dims", wedge_identity);
  std::vector<FiberedComplex> hodge_corpus(corpus.begin(), corpus.begin() + 40);
  hodge_corpus.push_back(product_complex(BaseComplex::circle(3), Transversal{{Rational(1, 2), Rational(1, 3)}}));
  hodge_corpus.push_back(kronecker_model(5, 2));
  hodge_corpus.push_back(suspension(SuspensionData::torus_of({1, 2, 0}, {2, 0, 1}), Transversal::uniform(3)));
  timed(7, "Hodge suite", [&] { return hodge_suite(hodge_corpus); });
  std::vector<FiberedComplex> seq_corpus(corpus.begin(), corpus.begin() + 40);
  timed(8, "exact sequences", [&] { return exact_sequences(seq_corpus); });
  timed(9, "homotopy operator", homotopies);
  timed(10, "geometry", geometry);
  timed(11, "zero sets", zero_sets);
  std::printf("%d of 11 criteria failed\n", failed);
  return failed ? 1 : 0;
}
