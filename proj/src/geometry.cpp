#include "lamcoh/geometry.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

namespace lamcoh {

namespace {

namespace mp = boost::multiprecision;

using Matrix = std::vector<std::vector<Rational>>;

void require_dim(int n) {
  if (n < 1 || n > 3) throw DomainError("ambient dimension must be 1, 2 or 3, got " + std::to_string(n));
}

// Gauss-Jordan; returns the unique solution or nothing.
std::optional<Point> solve(Matrix a, Point b) {
  const std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  for (std::size_t r = 0; r < n; ++r) b[r] /= a[r][r];
  return b;
}

int rank_of(Matrix m) {
  int rank = 0;
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && static_cast<std::size_t>(rank) < rows; ++c) {
    std::size_t p = static_cast<std::size_t>(rank);
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[static_cast<std::size_t>(rank)]);
    const auto& piv = m[static_cast<std::size_t>(rank)];
    for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < rows; ++r) {
      if (m[r][c] == 0) continue;
      Rational f = m[r][c] / piv[c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * piv[k];
    }
    ++rank;
  }
  return rank;
}

Rational det(Matrix m) {
  const std::size_t n = m.size();
  Rational d(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      std::swap(m[p], m[c]);
      d = -d;
    }
    d *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return d;
}

Point sub(const Point& x, const Point& y) {
  Point r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] - y[i];
  return r;
}

Rational dot(const Point& x, const Point& y) {
  Rational s(0);
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

Integer factorial(int n) {
  Integer f(1);
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

// a . x <= c
std::pair<Point, Rational> le_form(const HalfSpace& h) {
  Point a(h.normal.size());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = Rational(h.normal[i]);
  if (h.sense == HalfSpace::Sense::Le) return {a, h.offset};
  for (auto& v : a) v = -v;
  return {a, -h.offset};
}

HalfSpace hyperplane_key(const HalfSpace& h) {
  HalfSpace k = h;
  k.sense = HalfSpace::Sense::Le;
  return k;
}

// Vertices without a boundedness check.
std::vector<Point> raw_vertices(int n, const ConvexPiece& piece) {
  std::set<Point> found;
  const int m = static_cast<int>(piece.size());
  std::vector<std::pair<Point, Rational>> forms;
  for (const auto& h : piece) forms.push_back(le_form(h));
  std::vector<int> pick(static_cast<std::size_t>(n));
  std::function<void(int, int)> rec = [&](int depth, int start) {
    if (depth == n) {
      Matrix a;
      Point b;
      for (int i : pick) {
        a.push_back(forms[static_cast<std::size_t>(i)].first);
        b.push_back(forms[static_cast<std::size_t>(i)].second);
      }
      auto x = solve(a, b);
      if (!x) return;
      for (const auto& h : piece)
        if (!h.contains(*x)) return;
      found.insert(*x);
      return;
    }
    for (int i = start; i < m; ++i) {
      pick[static_cast<std::size_t>(depth)] = i;
      rec(depth + 1, i + 1);
    }
  };
  rec(0, 0);
  return {found.begin(), found.end()};
}

ConvexPiece joined(const ConvexPiece& a, const ConvexPiece& b) {
  ConvexPiece r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

bool subset_of(const std::vector<Point>& small, const std::vector<Point>& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

Point average(const std::vector<Point>& pts) {
  Point c(pts.front().size(), Rational(0));
  for (const auto& p : pts)
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += p[i];
  for (auto& v : c) v /= static_cast<int>(pts.size());
  return c;
}

std::string point_str(const Point& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? ", " : "") + to_string(p[i]);
  return s + ")";
}

// ------------------------------------------------------------- face lattice

using Mask = std::uint64_t;

struct Lattice {
  std::vector<Point> vertices;
  std::vector<Mask> faces;  // sorted
  std::map<Mask, int> dim;
  std::map<Mask, Point> center;

  std::vector<Point> points(Mask m) const {
    std::vector<Point> out;
    for (std::size_t i = 0; i < vertices.size(); ++i)
      if (m >> i & 1u) out.push_back(vertices[i]);
    return out;
  }
  std::vector<Mask> children(Mask f) const {
    std::vector<Mask> out;
    for (Mask g : faces)
      if (g != f && (g & f) == g && dim.at(g) == dim.at(f) - 1) out.push_back(g);
    return out;
  }
};

Lattice build_lattice(const std::vector<Point>& vertices, const ConvexPiece& piece) {
  if (vertices.size() > 64) throw DomainError("too many vertices for the face lattice");
  Lattice lat;
  lat.vertices = vertices;
  const Mask full = vertices.size() == 64 ? ~Mask(0) : (Mask(1) << vertices.size()) - 1;
  std::vector<Mask> tight;
  for (const auto& h : piece) {
    Mask m = 0;
    for (std::size_t i = 0; i < vertices.size(); ++i)
      if (h.on_boundary(vertices[i])) m |= Mask(1) << i;
    if (m != 0 && m != full) tight.push_back(m);
  }
  std::set<Mask> seen{full};
  std::vector<Mask> frontier{full};
  while (!frontier.empty()) {
    Mask f = frontier.back();
    frontier.pop_back();
    for (Mask t : tight) {
      Mask g = f & t;
      if (g != 0 && seen.insert(g).second) frontier.push_back(g);
    }
  }
  lat.faces.assign(seen.begin(), seen.end());
  for (Mask f : lat.faces) lat.dim[f] = affine_dim(lat.points(f));
  return lat;
}

// Pulling triangulation of a face: lists of dim+1 points.
std::vector<std::vector<Point>> pull(const Lattice& lat, Mask f) {
  int d = lat.dim.at(f);
  int low = 0;
  while (!(f >> low & 1u)) ++low;
  const Point& v0 = lat.vertices[static_cast<std::size_t>(low)];
  if (d == 0) return {{v0}};
  std::vector<std::vector<Point>> out;
  for (Mask g : lat.children(f)) {
    if (g >> low & 1u) continue;
    for (auto s : pull(lat, g)) {
      s.insert(s.begin(), v0);
      out.push_back(std::move(s));
    }
  }
  return out;
}

// Coordinates on which the face's d-volume projects without collapse.
std::vector<int> chart(const std::vector<Point>& pts, int d) {
  const int n = static_cast<int>(pts.front().size());
  Matrix diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(sub(pts[i], pts[0]));
  std::vector<int> pick;
  std::function<bool(int)> rec = [&](int start) {
    if (static_cast<int>(pick.size()) == d) {
      Matrix proj;
      for (const auto& row : diffs) {
        Point r;
        for (int c : pick) r.push_back(row[static_cast<std::size_t>(c)]);
        proj.push_back(r);
      }
      return rank_of(proj) == d;
    }
    for (int c = start; c < n; ++c) {
      pick.push_back(c);
      if (rec(c + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  rec(0);
  return pick;
}

Rational projected_content(const std::vector<Point>& s, const std::vector<int>& coords) {
  Matrix m;
  for (std::size_t i = 1; i < s.size(); ++i) {
    Point r;
    for (int c : coords) r.push_back(s[i][static_cast<std::size_t>(c)] - s[0][static_cast<std::size_t>(c)]);
    m.push_back(r);
  }
  Rational v = det(m);
  return v < 0 ? Rational(-v) : v;
}

const Point& face_center(Lattice& lat, Mask f) {
  auto it = lat.center.find(f);
  if (it != lat.center.end()) return it->second;
  int d = lat.dim.at(f);
  auto pts = lat.points(f);
  Point c;
  if (d == 0) {
    c = pts.front();
  } else {
    auto coords = chart(pts, d);
    c.assign(pts.front().size(), Rational(0));
    Rational total(0);
    for (const auto& s : pull(lat, f)) {
      Rational w = projected_content(s, coords);
      Point g = average(s);
      for (std::size_t i = 0; i < c.size(); ++i) c[i] += w * g[i];
      total += w;
    }
    for (auto& v : c) v /= total;
  }
  return lat.center.emplace(f, std::move(c)).first->second;
}

// ------------------------------------------------------------- cells

struct Cell {
  ConvexPiece piece;
  std::vector<Point> vertices;
};

Cell make_cell(int n, const ConvexPiece& piece) {
  Cell c;
  c.vertices = raw_vertices(n, piece);
  std::set<HalfSpace> kept;
  for (const auto& h : piece) {
    std::vector<Point> on;
    for (const auto& v : c.vertices)
      if (h.on_boundary(v)) on.push_back(v);
    if (!on.empty() && affine_dim(on) == n - 1) kept.insert(h);
  }
  c.piece.assign(kept.begin(), kept.end());
  return c;
}

std::vector<Cell> split_all(int n, std::vector<Cell> cells, const std::vector<HalfSpace>& planes) {
  for (const auto& h : planes) {
    std::vector<Cell> next;
    for (auto& c : cells) {
      bool pos = false, neg = false;
      for (const auto& v : c.vertices) {
        int s = h.eval(v).sign();
        pos = pos || s > 0;
        neg = neg || s < 0;
      }
      if (pos && neg) {
        ConvexPiece lo = c.piece, hi = c.piece;
        lo.push_back(h);
        hi.push_back(h.opposite());
        next.push_back(make_cell(n, lo));
        next.push_back(make_cell(n, hi));
      } else {
        next.push_back(std::move(c));
      }
    }
    cells = std::move(next);
  }
  std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) { return a.vertices < b.vertices; });
  return cells;
}

std::vector<HalfSpace> planes_of(const std::vector<LinearRegion>& regions) {
  std::set<HalfSpace> keys;
  for (const auto& r : regions)
    for (const auto& p : r.pieces)
      for (const auto& h : p) keys.insert(hyperplane_key(h));
  return {keys.begin(), keys.end()};
}

void require_maximal(const LinearRegion& r) {
  require_dim(r.ambient_dim);
  if (r.pieces.empty()) throw DomainError("region has no pieces");
  for (const auto& p : r.pieces) {
    for (const auto& h : p)
      if (h.dim() != r.ambient_dim) throw DomainError("half-space dimension does not match the region");
    auto v = piece_vertices(r.ambient_dim, p);
    if (v.empty() || affine_dim(v) != r.ambient_dim) throw DomainError("region piece is not full-dimensional");
  }
}

// Cells of the common arrangement that lie in at least one region.
std::vector<Cell> common_cells(const std::vector<LinearRegion>& regions) {
  const int n = regions.front().ambient_dim;
  Point lo, hi;
  for (const auto& r : regions) {
    if (r.ambient_dim != n) throw DomainError("regions live in different dimensions");
    require_maximal(r);
    for (const auto& p : r.pieces)
      for (const auto& v : raw_vertices(n, p)) {
        if (lo.empty()) lo = hi = v;
        for (int i = 0; i < n; ++i) {
          auto k = static_cast<std::size_t>(i);
          lo[k] = std::min(lo[k], v[k]);
          hi[k] = std::max(hi[k], v[k]);
        }
      }
  }
  auto start = make_cell(n, LinearRegion::box(lo, hi).pieces.front());
  auto cells = split_all(n, {start}, planes_of(regions));
  std::vector<Cell> kept;
  for (auto& c : cells) {
    Point mid = average(c.vertices);
    for (const auto& r : regions)
      if (r.contains(mid)) {
        kept.push_back(std::move(c));
        break;
      }
  }
  return kept;
}

bool is_face(int n, const ConvexPiece& piece, const std::vector<Point>& face) {
  auto verts = raw_vertices(n, piece);
  if (!subset_of(face, verts)) return false;
  ConvexPiece tight;
  for (const auto& h : piece)
    if (std::all_of(face.begin(), face.end(), [&](const Point& v) { return h.on_boundary(v); })) tight.push_back(h);
  std::vector<Point> spanned;
  for (const auto& v : verts)
    if (std::all_of(tight.begin(), tight.end(), [&](const HalfSpace& h) { return h.on_boundary(v); }))
      spanned.push_back(v);
  return spanned == face;
}

std::vector<Simplex> barycentric(int n, const Cell& cell) {
  Lattice lat = build_lattice(cell.vertices, cell.piece);
  Mask top = lat.faces.back();
  std::vector<Simplex> out;
  std::vector<Mask> chain;
  std::function<void(Mask)> rec = [&](Mask f) {
    chain.push_back(f);
    if (lat.dim.at(f) == 0) {
      std::vector<Point> pts;
      for (auto it = chain.rbegin(); it != chain.rend(); ++it) pts.push_back(face_center(lat, *it));
      out.push_back(Simplex::make(std::move(pts)));
    } else {
      for (Mask g : lat.children(f)) rec(g);
    }
    chain.pop_back();
  };
  if (lat.dim.at(top) != n) throw DomainError("cell is not full-dimensional");
  rec(top);
  return out;
}

}  // namespace

// ------------------------------------------------------------- HalfSpace

HalfSpace HalfSpace::make(const std::vector<Rational>& a, const Rational& c) {
  if (a.empty() || std::all_of(a.begin(), a.end(), [](const Rational& v) { return v == 0; }))
    throw DomainError("half-space normal must be nonzero");
  Integer l(1);
  for (const auto& v : a) l = mp::lcm(l, Integer(mp::denominator(v)));
  std::vector<Integer> ints;
  Integer g(0);
  for (const auto& v : a) {
    Integer k = Integer(mp::numerator(v)) * (l / Integer(mp::denominator(v)));
    ints.push_back(k);
    g = mp::gcd(g, k);
  }
  HalfSpace h;
  Rational scale = Rational(l) / Rational(g);
  for (auto& k : ints) k /= g;
  h.normal = ints;
  h.offset = c * scale;
  auto first = std::find_if(ints.begin(), ints.end(), [](const Integer& k) { return k != 0; });
  if (*first < 0) {
    for (auto& k : h.normal) k = -k;
    h.offset = -h.offset;
    h.sense = Sense::Ge;
  }
  return h;
}

HalfSpace HalfSpace::at_least(const std::vector<Rational>& a, const Rational& c) {
  std::vector<Rational> neg;
  for (const auto& v : a) neg.push_back(-v);
  return make(neg, -c);
}

Rational HalfSpace::eval(const Point& x) const {
  Rational s = -offset;
  for (std::size_t i = 0; i < normal.size(); ++i) s += Rational(normal[i]) * x[i];
  return s;
}

bool HalfSpace::contains(const Point& x) const {
  int s = eval(x).sign();
  return sense == Sense::Le ? s <= 0 : s >= 0;
}

HalfSpace HalfSpace::opposite() const {
  HalfSpace h = *this;
  h.sense = sense == Sense::Le ? Sense::Ge : Sense::Le;
  return h;
}

bool operator<(const HalfSpace& x, const HalfSpace& y) {
  return std::tie(x.normal, x.offset, x.sense) < std::tie(y.normal, y.offset, y.sense);
}

// ------------------------------------------------------------- regions

LinearRegion LinearRegion::box(const Point& lo, const Point& hi) {
  if (lo.size() != hi.size()) throw DomainError("box corners differ in dimension");
  const int n = static_cast<int>(lo.size());
  require_dim(n);
  ConvexPiece p;
  for (int i = 0; i < n; ++i) {
    auto k = static_cast<std::size_t>(i);
    if (!(lo[k] < hi[k])) throw DomainError("box must have lo < hi in every coordinate");
    std::vector<Rational> e(lo.size(), Rational(0));
    e[k] = 1;
    p.push_back(HalfSpace::at_least(e, lo[k]));
    p.push_back(HalfSpace::make(e, hi[k]));
  }
  std::sort(p.begin(), p.end());
  return {n, {p}};
}

LinearRegion LinearRegion::convex(int n, ConvexPiece piece) {
  std::sort(piece.begin(), piece.end());
  return {n, {std::move(piece)}};
}

bool LinearRegion::contains(const Point& x) const {
  return std::any_of(pieces.begin(), pieces.end(), [&](const ConvexPiece& p) { return piece_contains(p, x); });
}

bool piece_contains(const ConvexPiece& piece, const Point& x) {
  return std::all_of(piece.begin(), piece.end(), [&](const HalfSpace& h) { return h.contains(x); });
}

int affine_dim(const std::vector<Point>& points) {
  if (points.empty()) return -1;
  Matrix diffs;
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(sub(points[i], points[0]));
  return diffs.empty() ? 0 : rank_of(diffs);
}

std::vector<Point> piece_vertices(int n, const ConvexPiece& piece) {
  require_dim(n);
  auto verts = raw_vertices(n, piece);
  Rational bound(1);
  for (const auto& v : verts)
    for (const auto& x : v) bound = std::max(bound, x < 0 ? Rational(-x) : x);
  bound += 1;
  ConvexPiece boxed = piece;
  for (int i = 0; i < n; ++i) {
    std::vector<Rational> e(static_cast<std::size_t>(n), Rational(0));
    e[static_cast<std::size_t>(i)] = 1;
    boxed.push_back(HalfSpace::make(e, bound));
    boxed.push_back(HalfSpace::at_least(e, -bound));
  }
  for (const auto& v : raw_vertices(n, boxed))
    for (const auto& x : v)
      if (x == bound || x == -bound) throw DomainError("linear region is unbounded");
  return verts;
}

std::vector<Diagnostic> validate_region(const LinearRegion& region) {
  std::vector<Diagnostic> out;
  if (region.ambient_dim < 1 || region.ambient_dim > 3) {
    out.push_back({"dimension", "ambient dimension must be 1, 2 or 3"});
    return out;
  }
  const int n = region.ambient_dim;
  if (region.pieces.empty()) out.push_back({"empty", "region has no pieces"});
  for (std::size_t i = 0; i < region.pieces.size(); ++i) {
    const auto& p = region.pieces[i];
    if (std::any_of(p.begin(), p.end(), [&](const HalfSpace& h) { return h.dim() != n; })) {
      out.push_back({"dimension", "piece " + std::to_string(i) + " has a half-space of the wrong dimension"});
      continue;
    }
    try {
      auto v = piece_vertices(n, p);
      if (v.empty())
        out.push_back({"empty", "piece " + std::to_string(i) + " is empty"});
      else if (affine_dim(v) != n)
        out.push_back({"maximal", "piece " + std::to_string(i) + " is not full-dimensional"});
    } catch (const DomainError&) {
      out.push_back({"bounded", "piece " + std::to_string(i) + " is unbounded"});
    }
  }
  if (!out.empty()) return out;
  // Pieces are convex, so the union is connected iff the meeting graph is.
  const std::size_t m = region.pieces.size();
  std::vector<int> comp(m);
  std::iota(comp.begin(), comp.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return comp[static_cast<std::size_t>(x)] == x ? x : comp[static_cast<std::size_t>(x)] = find(comp[static_cast<std::size_t>(x)]);
  };
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (!raw_vertices(n, joined(region.pieces[i], region.pieces[j])).empty())
        comp[static_cast<std::size_t>(find(static_cast<int>(i)))] = find(static_cast<int>(j));
  for (std::size_t i = 1; i < m; ++i)
    if (find(static_cast<int>(i)) != find(0)) {
      out.push_back({"connected", "piece " + std::to_string(i) + " does not meet piece 0's component"});
      break;
    }
  return out;
}

Rational piece_volume(int n, const ConvexPiece& piece) {
  auto verts = piece_vertices(n, piece);
  if (verts.empty() || affine_dim(verts) < n) return Rational(0);
  Lattice lat = build_lattice(verts, piece);
  std::vector<int> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 0);
  Rational v(0);
  for (const auto& s : pull(lat, lat.faces.back())) v += projected_content(s, all);
  return v / Rational(factorial(n));
}

Point mass_center(int n, const ConvexPiece& piece) {
  auto verts = piece_vertices(n, piece);
  if (verts.empty() || affine_dim(verts) < n) throw DomainError("mass center needs a full-dimensional piece");
  Lattice lat = build_lattice(verts, piece);
  return face_center(lat, lat.faces.back());
}

Rational region_volume(const LinearRegion& region) {
  Rational v(0);
  for (const auto& c : common_cells({region})) v += piece_volume(region.ambient_dim, c.piece);
  return v;
}

bool attached_or_disjoint(const LinearRegion& a, const LinearRegion& b) {
  if (a.ambient_dim != b.ambient_dim) throw DomainError("regions live in different dimensions");
  const int n = a.ambient_dim;
  for (const auto& pa : a.pieces)
    for (const auto& pb : b.pieces) {
      auto common = raw_vertices(n, joined(pa, pb));
      if (common.empty()) continue;
      if (affine_dim(common) == n) return false;
      if (!is_face(n, pa, common) || !is_face(n, pb, common)) return false;
    }
  return true;
}

std::vector<LinearRegion> attach_decompose(const std::vector<LinearRegion>& regions) {
  if (regions.empty()) return {};
  const int n = regions.front().ambient_dim;
  auto cells = common_cells(regions);
  const std::size_t m = cells.size();

  std::vector<std::vector<bool>> sig(m);
  for (std::size_t i = 0; i < m; ++i) {
    Point mid = average(cells[i].vertices);
    for (const auto& r : regions) sig[i].push_back(r.contains(mid));
  }
  std::vector<int> comp(m);
  std::iota(comp.begin(), comp.end(), 0);
  std::function<int(int)> find = [&](int x) {
    auto k = static_cast<std::size_t>(x);
    return comp[k] == x ? x : comp[k] = find(comp[k]);
  };
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      if (sig[i] != sig[j]) continue;
      auto common = raw_vertices(n, joined(cells[i].piece, cells[j].piece));
      if (!common.empty() && affine_dim(common) == n - 1)
        comp[static_cast<std::size_t>(find(static_cast<int>(i)))] = find(static_cast<int>(j));
    }

  std::vector<LinearRegion> out;
  std::vector<std::vector<std::size_t>> members;
  std::map<int, std::size_t> slot;
  for (std::size_t i = 0; i < m; ++i) {
    int root = find(static_cast<int>(i));
    auto [it, fresh] = slot.emplace(root, out.size());
    if (fresh) {
      out.push_back({n, {}});
      members.emplace_back();
    }
    out[it->second].pieces.push_back(cells[i].piece);
    members[it->second].push_back(i);
  }

  // Replace a component by the input piece it fills when that stays attached.
  for (std::size_t k = 0; k < out.size(); ++k) {
    Rational vol(0);
    for (auto i : members[k]) vol += piece_volume(n, cells[i].piece);
    for (const auto& r : regions) {
      bool done = false;
      for (const auto& p : r.pieces) {
        bool inside = std::all_of(members[k].begin(), members[k].end(), [&](std::size_t i) {
          return std::all_of(cells[i].vertices.begin(), cells[i].vertices.end(),
                             [&](const Point& v) { return piece_contains(p, v); });
        });
        if (!inside || piece_volume(n, p) != vol) continue;
        LinearRegion whole = LinearRegion::convex(n, make_cell(n, p).piece);
        bool ok = true;
        for (std::size_t j = 0; j < out.size() && ok; ++j)
          if (j != k) ok = attached_or_disjoint(whole, out[j]);
        if (ok) out[k] = whole;
        done = true;
        break;
      }
      if (done) break;
    }
  }
  return out;
}

std::vector<LinearRegion> convex_decompose(const LinearRegion& region) {
  std::vector<LinearRegion> out;
  for (const auto& c : common_cells({region})) out.push_back(LinearRegion::convex(region.ambient_dim, c.piece));
  return out;
}

Triangulation triangulate(const std::vector<LinearRegion>& regions) {
  Triangulation t;
  if (regions.empty()) return t;
  for (std::size_t i = 0; i < regions.size(); ++i)
    for (std::size_t j = i + 1; j < regions.size(); ++j)
      if (!attached_or_disjoint(regions[i], regions[j]))
        throw DomainError("regions " + std::to_string(i) + " and " + std::to_string(j) +
                          " are neither attached nor disjoint");
  const int n = regions.front().ambient_dim;
  for (const auto& c : common_cells(regions)) {
    Point mid = average(c.vertices);
    int owner = 0;
    while (!regions[static_cast<std::size_t>(owner)].contains(mid)) ++owner;
    for (auto& s : barycentric(n, c)) {
      t.simplices.push_back(std::move(s));
      t.owner.push_back(owner);
    }
  }
  return t;
}

// ------------------------------------------------------------- simplices

Simplex Simplex::make(std::vector<Point> vertices) {
  if (vertices.empty()) throw DomainError("simplex needs vertices");
  const std::size_t n = vertices.size() - 1;
  Matrix m;
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    if (vertices[i].size() != n) throw DomainError("simplex must have dim + 1 vertices in R^dim");
    m.push_back(sub(vertices[i], vertices[0]));
  }
  Simplex s;
  if (n == 0) {
    s.vertices = std::move(vertices);
    return s;
  }
  Rational d = det(m);
  if (d == 0) throw DomainError("simplex vertices are affinely dependent");
  s.orientation = d > 0 ? 1 : -1;
  s.vertices = std::move(vertices);
  return s;
}

Rational Simplex::volume() const {
  Matrix m;
  for (std::size_t i = 1; i < vertices.size(); ++i) m.push_back(sub(vertices[i], vertices[0]));
  Rational d = m.empty() ? Rational(1) : det(m);
  if (d < 0) d = -d;
  return d / Rational(factorial(dim()));
}

bool Simplex::contains(const Point& x) const {
  const std::size_t n = vertices.size() - 1;
  if (n == 0) return x == vertices[0];
  Matrix a(n, Point(n));
  for (std::size_t c = 0; c < n; ++c) {
    auto col = sub(vertices[c + 1], vertices[0]);
    for (std::size_t r = 0; r < n; ++r) a[r][c] = col[r];
  }
  auto lambda = solve(a, sub(x, vertices[0]));
  if (!lambda) return false;
  Rational total(0);
  for (const auto& l : *lambda) {
    if (l < 0) return false;
    total += l;
  }
  return total <= 1;
}

namespace {

template <class T>
using Coords = std::vector<std::vector<T>>;

template <class T>
std::vector<T> diff(const std::vector<T>& x, const std::vector<T>& y) {
  std::vector<T> r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] - y[i];
  return r;
}

template <class T>
std::vector<T> cross3(const std::vector<T>& u, const std::vector<T>& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

template <class T>
Coords<T> edge_vectors(const Coords<T>& s) {
  Coords<T> e;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) e.push_back(diff(s[j], s[i]));
  return e;
}

// Separating axes: facet normals of both, plus edge cross products in R^3.
template <class T>
bool separated(const Coords<T>& a, const Coords<T>& b) {
  const std::size_t n = a.size() - 1;
  Coords<T> axes;
  if (n == 1) {
    axes.push_back({T(1)});
  } else if (n == 2) {
    for (const auto* s : {&a, &b})
      for (const auto& e : edge_vectors(*s)) axes.push_back({T(0) - e[1], e[0]});
  } else {
    for (const auto* s : {&a, &b})
      for (std::size_t skip = 0; skip < 4; ++skip) {
        Coords<T> f;
        for (std::size_t i = 0; i < 4; ++i)
          if (i != skip) f.push_back((*s)[i]);
        axes.push_back(cross3(diff(f[1], f[0]), diff(f[2], f[0])));
      }
    auto ea = edge_vectors(a), eb = edge_vectors(b);
    for (const auto& u : ea)
      for (const auto& v : eb) axes.push_back(cross3(u, v));
  }
  for (const auto& u : axes) {
    if (std::all_of(u.begin(), u.end(), [](const T& x) { return x == T(0); })) continue;
    auto range = [&](const Coords<T>& s) {
      T lo{}, hi{};
      for (std::size_t k = 0; k < s.size(); ++k) {
        T x(0);
        for (std::size_t i = 0; i < n; ++i) x += u[i] * s[k][i];
        if (k == 0 || x < lo) lo = x;
        if (k == 0 || x > hi) hi = x;
      }
      return std::pair{lo, hi};
    };
    auto [alo, ahi] = range(a);
    auto [blo, bhi] = range(b);
    if (!(blo < ahi) || !(alo < bhi)) return true;
  }
  return false;
}

void require_sat_dim(int n) {
  if (n < 1 || n > 3) throw DomainError("separating-axis test supports dimensions 1 to 3");
}

}  // namespace

bool interiors_disjoint(const Simplex& a, const Simplex& b) {
  if (b.dim() != a.dim()) throw DomainError("simplices of different dimension");
  require_sat_dim(a.dim());
  return separated(a.vertices, b.vertices);
}

std::optional<std::pair<int, int>> find_overlap(const std::vector<Simplex>& simplices) {
  if (simplices.empty()) return std::nullopt;
  const int n = simplices.front().dim();
  require_sat_dim(n);
  for (const auto& s : simplices)
    if (s.dim() != n) throw DomainError("simplices of different dimension");

  // Scale to integers when products stay far inside 128 bits.
  Integer l(1), big(0);
  for (const auto& s : simplices)
    for (const auto& v : s.vertices)
      for (const auto& x : v) l = mp::lcm(l, Integer(mp::denominator(x)));
  for (const auto& s : simplices)
    for (const auto& v : s.vertices)
      for (const auto& x : v) big = std::max(big, mp::abs(Integer(mp::numerator(x))) * (l / Integer(mp::denominator(x))));
  const bool exact_ints = big < (Integer(1) << 28);

  const std::size_t m = simplices.size();
  std::vector<Coords<__int128>> ints(exact_ints ? m : 0);
  std::vector<Point> lo(m), hi(m);
  for (std::size_t k = 0; k < m; ++k) {
    const auto& vs = simplices[k].vertices;
    lo[k] = hi[k] = vs[0];
    for (const auto& v : vs)
      for (std::size_t i = 0; i < v.size(); ++i) {
        lo[k][i] = std::min(lo[k][i], v[i]);
        hi[k][i] = std::max(hi[k][i], v[i]);
      }
    if (exact_ints)
      for (const auto& v : vs) {
        std::vector<__int128> row;
        for (const auto& x : v) row.push_back(static_cast<__int128>((Integer(mp::numerator(x)) * (l / Integer(mp::denominator(x)))).convert_to<long long>()));
        ints[k].push_back(row);
      }
  }
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return lo[x][0] < lo[y][0]; });
  for (std::size_t p = 0; p < m; ++p) {
    std::size_t i = order[p];
    for (std::size_t q = p + 1; q < m; ++q) {
      std::size_t j = order[q];
      if (!(lo[j][0] < hi[i][0])) break;
      bool boxes_meet = true;
      for (int c = 1; c < n && boxes_meet; ++c) {
        auto k = static_cast<std::size_t>(c);
        boxes_meet = lo[j][k] < hi[i][k] && lo[i][k] < hi[j][k];
      }
      if (!boxes_meet) continue;
      bool apart = exact_ints ? separated(ints[i], ints[j]) : separated(simplices[i].vertices, simplices[j].vertices);
      if (!apart) return std::pair{static_cast<int>(std::min(i, j)), static_cast<int>(std::max(i, j))};
    }
  }
  return std::nullopt;
}

// ------------------------------------------------------------- prisms

namespace {

Point prism_point(int n, int j, int t) {
  Point p(static_cast<std::size_t>(n + 1), Rational(0));
  p[0] = t;
  if (j > 0) p[static_cast<std::size_t>(j)] = 1;
  return p;
}

using Chain = std::map<std::vector<Point>, int>;

void add(Chain& c, const std::vector<Point>& s, int k) {
  int& v = c[s];
  v += k;
  if (v == 0) c.erase(s);
}

// Sum over i of (-1)^i [a_w0 .. a_wi, b_wi .. b_wk] for the vertices w.
void add_prism(Chain& c, int n, const std::vector<int>& w, int k) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    std::vector<Point> s;
    for (std::size_t j = 0; j <= i; ++j) s.push_back(prism_point(n, w[j], 0));
    for (std::size_t j = i; j < w.size(); ++j) s.push_back(prism_point(n, w[j], 1));
    add(c, s, i % 2 == 0 ? k : -k);
  }
}

}  // namespace

PrismDecomposition prism_decompose(int n) {
  if (n < 0) throw DomainError("prism dimension must be nonnegative");
  PrismDecomposition p;
  p.n = n;
  for (int i = 0; i <= n; ++i) {
    std::vector<Point> v;
    for (int j = 0; j <= i; ++j) v.push_back(prism_point(n, j, 0));
    for (int j = i; j <= n; ++j) v.push_back(prism_point(n, j, 1));
    auto s = Simplex::make(std::move(v));
    p.signs.push_back(s.orientation);
    p.simplices.push_back(std::move(s));
  }
  return p;
}

bool prism_telescopes(const PrismDecomposition& prism) {
  const int n = prism.n;
  Chain lhs, rhs;
  for (std::size_t i = 0; i < prism.simplices.size(); ++i) {
    const auto& v = prism.simplices[i].vertices;
    for (std::size_t k = 0; k < v.size(); ++k) {
      std::vector<Point> face;
      for (std::size_t j = 0; j < v.size(); ++j)
        if (j != k) face.push_back(v[j]);
      add(lhs, face, prism.signs[i] * (k % 2 == 0 ? 1 : -1));
    }
  }
  std::vector<Point> top, bottom;
  for (int j = 0; j <= n; ++j) {
    top.push_back(prism_point(n, j, 1));
    bottom.push_back(prism_point(n, j, 0));
  }
  add(rhs, top, 1);
  add(rhs, bottom, -1);
  if (n > 0) {
    for (int k = 0; k <= n; ++k) {
      std::vector<int> w;
      for (int j = 0; j <= n; ++j)
        if (j != k) w.push_back(j);
      add_prism(rhs, n, w, k % 2 == 0 ? -1 : 1);
    }
  }
  return lhs == rhs;
}

// ------------------------------------------------------------- adapted subdivision

bool Interval::contains(const Rational& x) const {
  bool above = lo_closed ? x >= lo : x > lo;
  bool below = hi_closed ? x <= hi : x < hi;
  return above && below;
}

bool CoverElement::contains(const Point& x) const {
  for (std::size_t k = 0; k < box.size(); ++k)
    if (!box[k].contains(x[k])) return false;
  return true;
}

namespace {

ConvexPiece standard_simplex(int n) {
  ConvexPiece p;
  std::vector<Rational> ones(static_cast<std::size_t>(n), Rational(1));
  for (int i = 0; i < n; ++i) {
    std::vector<Rational> e(static_cast<std::size_t>(n), Rational(0));
    e[static_cast<std::size_t>(i)] = 1;
    p.push_back(HalfSpace::at_least(e, Rational(0)));
  }
  p.push_back(HalfSpace::make(ones, Rational(1)));
  return p;
}

std::vector<Cell> grid_cells(int n, const std::vector<std::vector<Rational>>& cuts) {
  std::vector<HalfSpace> planes;
  for (int k = 0; k < n; ++k)
    for (const auto& c : cuts[static_cast<std::size_t>(k)]) {
      std::vector<Rational> e(static_cast<std::size_t>(n), Rational(0));
      e[static_cast<std::size_t>(k)] = 1;
      planes.push_back(HalfSpace::make(e, c));
    }
  return split_all(n, {make_cell(n, standard_simplex(n))}, planes);
}

int holder(const Cell& c, const std::vector<CoverElement>& cover, const std::vector<int>& trace) {
  for (int e : trace) {
    const auto& el = cover[static_cast<std::size_t>(e)];
    if (std::all_of(c.vertices.begin(), c.vertices.end(), [&](const Point& v) { return el.contains(v); })) return e;
  }
  return -1;
}

bool all_held(const std::vector<Cell>& cells, const std::vector<CoverElement>& cover, const std::vector<int>& trace) {
  return std::all_of(cells.begin(), cells.end(), [&](const Cell& c) { return holder(c, cover, trace) >= 0; });
}

}  // namespace

AdaptedSubdivision adapted_subdivision(int n, int atoms, const std::vector<CoverElement>& cover) {
  require_dim(n);
  if (atoms < 1) throw DomainError("transversal needs at least one atom");
  for (const auto& el : cover) {
    if (static_cast<int>(el.box.size()) != n) throw DomainError("cover box has the wrong dimension");
    for (int a : el.atoms)
      if (a < 0 || a >= atoms) throw DomainError("cover element names atom " + std::to_string(a) + " out of range");
  }

  std::map<std::vector<int>, std::vector<int>> by_trace;
  std::vector<std::vector<int>> traces(static_cast<std::size_t>(atoms));
  for (std::size_t e = 0; e < cover.size(); ++e)
    for (int a : cover[e].atoms) traces[static_cast<std::size_t>(a)].push_back(static_cast<int>(e));
  for (auto& t : traces) {
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());
  }
  AdaptedSubdivision out;
  std::map<std::vector<int>, std::size_t> block_of;
  for (int a = 0; a < atoms; ++a) {
    auto [it, fresh] = block_of.emplace(traces[static_cast<std::size_t>(a)], out.blocks.size());
    if (fresh) out.blocks.emplace_back();
    out.blocks[it->second].push_back(a);
  }

  for (const auto& block : out.blocks) {
    const auto& trace = traces[static_cast<std::size_t>(block.front())];
    std::string who = "atom " + std::to_string(block.front());

    std::vector<std::vector<Rational>> breaks(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
      std::set<Rational> b{Rational(0), Rational(1)};
      for (int e : trace) {
        const auto& iv = cover[static_cast<std::size_t>(e)].box[static_cast<std::size_t>(k)];
        for (const auto& x : {iv.lo, iv.hi})
          if (x > 0 && x < 1) b.insert(x);
      }
      breaks[static_cast<std::size_t>(k)].assign(b.begin(), b.end());
    }

    // Membership is constant on products of breakpoints and open gaps.
    struct Piece {
      Rational lo, hi;
      bool point;
    };
    std::vector<std::vector<Piece>> pieces(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
      const auto& b = breaks[static_cast<std::size_t>(k)];
      for (std::size_t i = 0; i < b.size(); ++i) {
        pieces[static_cast<std::size_t>(k)].push_back({b[i], b[i], true});
        if (i + 1 < b.size()) pieces[static_cast<std::size_t>(k)].push_back({b[i], b[i + 1], false});
      }
    }
    std::vector<const Piece*> pick(static_cast<std::size_t>(n));
    std::function<void(int)> check = [&](int k) {
      if (k == n) {
        Rational low(0);
        int open = 0;
        for (const auto* p : pick) {
          low += p->lo;
          open += p->point ? 0 : 1;
        }
        if (low > 1 || (low == 1 && open > 0)) return;
        Rational step = open ? (1 - low) / (open + 1) : Rational(0);
        for (const auto* p : pick)
          if (!p->point) step = std::min(step, (p->hi - p->lo) / 2);
        Point x;
        for (const auto* p : pick) x.push_back(p->point ? p->lo : p->lo + step);
        for (int e : trace)
          if (cover[static_cast<std::size_t>(e)].contains(x)) return;
        throw CoverageError(who + " at " + point_str(x) + " is not covered");
      }
      for (const auto& p : pieces[static_cast<std::size_t>(k)]) {
        pick[static_cast<std::size_t>(k)] = &p;
        check(k + 1);
      }
    };
    check(0);

    std::vector<std::vector<Rational>> cuts(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
      const auto& b = breaks[static_cast<std::size_t>(k)];
      std::set<Rational> c;
      for (std::size_t i = 0; i < b.size(); ++i) {
        if (b[i] > 0 && b[i] < 1) c.insert(b[i]);
        if (i + 1 < b.size()) c.insert((b[i] + b[i + 1]) / 2);
      }
      cuts[static_cast<std::size_t>(k)].assign(c.begin(), c.end());
    }
    auto cells = grid_cells(n, cuts);
    for (const auto& c : cells)
      if (holder(c, cover, trace) < 0)
        throw CoverageError(who + " near " + point_str(average(c.vertices)) +
                            ": no closed cell around this point fits one cover element");
    for (int k = 0; k < n; ++k) {
      auto& ck = cuts[static_cast<std::size_t>(k)];
      for (std::size_t i = 0; i < ck.size();) {
        auto trial = cuts;
        trial[static_cast<std::size_t>(k)].erase(trial[static_cast<std::size_t>(k)].begin() + static_cast<long>(i));
        auto coarser = grid_cells(n, trial);
        if (all_held(coarser, cover, trace)) {
          ck.erase(ck.begin() + static_cast<long>(i));
          cells = std::move(coarser);
        } else {
          ++i;
        }
      }
    }

    std::vector<Simplex> simplices;
    std::vector<int> element;
    bool simplicial = std::all_of(cells.begin(), cells.end(),
                                  [&](const Cell& c) { return static_cast<int>(c.vertices.size()) == n + 1; });
    for (const auto& c : cells) {
      int e = holder(c, cover, trace);
      std::vector<Simplex> parts = simplicial ? std::vector<Simplex>{Simplex::make(c.vertices)} : barycentric(n, c);
      for (auto& s : parts) {
        simplices.push_back(std::move(s));
        element.push_back(e);
      }
    }
    out.triangulation.push_back(std::move(simplices));
    out.element.push_back(std::move(element));
  }
  return out;
}

}  // namespace lamcoh
