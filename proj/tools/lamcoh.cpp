// lamcoh COMMAND RECIPE [flags]: builds the recipe and runs one computation.
// Tables go to stdout as TSV, or a JSON report with --json.

#include "lamcoh/corpus.hpp"
#include "lamcoh/hodge.hpp"
#include "lamcoh/homotopy.hpp"
#include "lamcoh/recipe.hpp"
#include "lamcoh/serialize.hpp"
#include "lamcoh/subdivision.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace lamcoh;

namespace {

struct Options {
  std::string command, recipe_path;
  std::optional<std::string> coeff;
  std::optional<int> degree;
  bool json = false;
  std::uint64_t seed = 0;
  double tol = 1e-9;
  std::string out;
};

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void add(std::vector<std::string> row) { rows.push_back(std::move(row)); }
  std::string str() const {
    std::string s;
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) s += (i ? "\t" : "") + cells[i];
      s += "\n";
    };
    line(header);
    for (const auto& r : rows) line(r);
    return s;
  }
};

struct Output {
  Json report = Json::object();
  std::vector<Table> tables;
  int status = 0;
  std::string errors;  // stderr lines for check failures
};

// Usage problems that are not tied to a position in the recipe.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string yes(bool b) { return b ? "yes" : "no"; }

std::string point_str(const Point& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? ", " : "") + to_string(p[i]);
  return s + ")";
}

const FiberedComplex& need_complex(const Recipe& r) {
  if (!r.complex) throw UsageError("this command needs a complex recipe, got kind '" + r.kind + "'");
  return *r.complex;
}

// Stops with status 1 when the complex breaks an identity.
bool require_valid(const FiberedComplex& c, Output& out) {
  auto diags = validate(c);
  if (diags.empty()) return true;
  for (const auto& d : diags) out.errors += "invalid complex: " + d.kind + ": " + d.message + "\n";
  out.status = 1;
  return false;
}

CoefficientKind coefficient(const Recipe& r, const Options& o, CoefficientKind fallback) {
  if (o.coeff) return parse_coefficient_kind(*o.coeff);
  return r.coefficients.value_or(fallback);
}

std::vector<int> degrees(const FiberedComplex& c, const Options& o) {
  if (o.degree) {
    if (*o.degree < 0 || *o.degree > c.top_dim())
      throw UsageError("--degree must be between 0 and " + std::to_string(c.top_dim()));
    return {*o.degree};
  }
  std::vector<int> out;
  for (int n = 0; n <= c.top_dim(); ++n) out.push_back(n);
  return out;
}

// ---------------------------------------------------------------- commands

Output cmd_validate(const Recipe& r, const Options&) {
  Output out;
  Table t{{"kind", "message"}, {}};
  if (r.complex) {
    const auto& c = *r.complex;
    auto diags = validate(c);
    Json list = Json::array();
    for (const auto& d : diags) {
      t.add({d.kind, d.message});
      list.push_back(Json{{"kind", d.kind}, {"message", d.message}});
    }
    out.report["valid"] = diags.empty();
    out.report["diagnostics"] = list;
    Table counts{{"degree", "families", "instances"}, {}};
    for (int n = 0; n <= c.top_dim(); ++n)
      counts.add({std::to_string(n), std::to_string(c.families_of(n).size()), std::to_string(c.instance_count(n))});
    out.report["leaves"] = static_cast<int>(leaf_decomposition(c).size());
    out.status = diags.empty() ? 0 : 1;
    if (diags.empty()) t.add({"valid", "no violations"});
    out.tables = {t, counts};
    return out;
  }
  Json list = Json::array();
  for (std::size_t i = 0; i < r.regions.size(); ++i) {
    for (const auto& d : validate_region(r.regions[i])) {
      t.add({d.kind, "region " + std::to_string(i) + ": " + d.message});
      list.push_back(Json{{"region", static_cast<int>(i)}, {"kind", d.kind}, {"message", d.message}});
    }
  }
  out.status = list.empty() ? 0 : 1;
  if (list.empty()) t.add({"valid", "no violations"});
  out.report["valid"] = list.empty();
  out.report["diagnostics"] = list;
  out.tables = {t};
  return out;
}

Output cmd_cohomology(const Recipe& r, const Options& o) {
  Output out;
  const auto& c = need_complex(r);
  if (!require_valid(c, out)) return out;
  auto requested = coefficient(r, o, CoefficientKind::Q);
  // Dimensions over R agree with those over Q for these integral complexes.
  auto kind = requested == CoefficientKind::R ? CoefficientKind::Q : requested;
  const Subcomplex* rel = r.selections.count("a") ? &r.selections.at("a") : nullptr;
  Table t{{"degree", "dim", "constant_one"}, {}};
  Json rows = Json::array();
  for (int n : degrees(c, o)) {
    int dim = cohomology_dim(c, n, kind, rel).dimension;
    std::string one = "not-cocycle";
    if (!rel && c.instance_count(n) > 0) {
      auto w = Cochain::constant(c, n, Coefficient::one(kind));
      if (apply_coboundary(c, w).is_zero()) one = is_coboundary(c, w) ? "trivial" : "nontrivial";
    } else if (rel) {
      one = "-";
    }
    t.add({std::to_string(n), std::to_string(dim), one});
    rows.push_back(Json{{"degree", n}, {"dim", dim}, {"constant_one", one}});
  }
  out.report["coefficients"] = kind_name(requested);
  out.report["relative"] = rel != nullptr;
  out.report["degrees"] = rows;
  out.tables = {t};
  return out;
}

Output cmd_betti(const Recipe& r, const Options& o) {
  Output out;
  const auto& c = need_complex(r);
  if (!require_valid(c, out)) return out;
  bool exact = coefficient(r, o, CoefficientKind::Q) != CoefficientKind::R;
  Table t{{"degree", "betti", "value"}, {}};
  Json rows = Json::array();
  for (int n : degrees(c, o)) {
    if (exact) {
      Rational b = l2_betti_exact(c, n);
      t.add({std::to_string(n), to_string(b), num(b.convert_to<double>())});
      rows.push_back(Json{{"degree", n}, {"betti", to_string(b)}, {"value", b.convert_to<double>()}});
    } else {
      double b = l2_betti(c, n, o.tol);
      t.add({std::to_string(n), num(b), num(b)});
      rows.push_back(Json{{"degree", n}, {"value", b}});
    }
  }
  out.report["path"] = exact ? "exact" : "float";
  out.report["degrees"] = rows;
  out.report["euler_characteristic"] = to_string(weighted_euler_characteristic(c));
  out.tables = {t};
  return out;
}

Output cmd_hodge(const Recipe& r, const Options& o) {
  Output out;
  const auto& c = need_complex(r);
  if (!require_valid(c, out)) return out;
  Rng rng(o.seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  Table t{{"degree", "kernel_dim", "rank_q", "betti", "betti_exact", "orthogonality", "eigen_residual",
           "decomposition_residual"},
          {}};
  Json rows = Json::array();
  constexpr double limit = 1e-8;
  for (int n : degrees(c, o)) {
    auto rep = hodge_report(c, n, o.tol, true);
    int rank = cohomology_dim(c, n, CoefficientKind::Q).dimension;
    std::vector<double> values(static_cast<std::size_t>(c.instance_count(n)));
    for (auto& v : values) v = unit(rng);
    auto dec = hodge_decompose(c, unflatten<double>(c, n, values));
    double residual = std::max(dec.reconstruction_residual, dec.orthogonality_residual);
    bool ok = rep.kernel_dim == rank && rep.orthogonality_residual < limit && rep.eigen_residual < limit &&
              residual < limit && std::abs(rep.lambda_betti - rep.lambda_betti_exact.convert_to<double>()) < limit;
    if (!ok) {
      out.status = 1;
      out.errors += "hodge check failed in degree " + std::to_string(n) + "\n";
    }
    t.add({std::to_string(n), std::to_string(rep.kernel_dim), std::to_string(rank), num(rep.lambda_betti),
           to_string(rep.lambda_betti_exact), num(rep.orthogonality_residual), num(rep.eigen_residual), num(residual)});
    Json j = to_json(rep);
    j["rank_q"] = rank;
    j["decomposition_residual"] = residual;
    j["ok"] = ok;
    rows.push_back(j);
  }
  out.report["tolerance"] = o.tol;
  out.report["degrees"] = rows;
  out.tables = {t};
  return out;
}

void add_sequences(Output& out, const std::vector<ExactnessReport>& reports) {
  Table t{{"coefficients", "label", "degree", "dim", "rank_in", "rank_out", "exact"}, {}};
  Json list = Json::array();
  for (const auto& rep : reports) {
    for (const auto& n : rep.nodes)
      t.add({kind_name(rep.kind), n.label, std::to_string(n.degree), std::to_string(n.dimension),
             std::to_string(n.rank_in), std::to_string(n.rank_out), yes(n.exact)});
    if (!rep.exact()) {
      out.status = 1;
      for (const auto& n : rep.nodes)
        if (!n.exact)
          out.errors += std::string("not exact over ") + kind_name(rep.kind) + " at " + n.label + " in degree " +
                        std::to_string(n.degree) + "\n";
    }
    list.push_back(to_json(rep));
  }
  out.report["sequences"] = list;
  out.tables.push_back(t);
}

Output cmd_check_mv(const Recipe& r, const Options& o) {
  Output out;
  const auto& c = need_complex(r);
  if (!require_valid(c, out)) return out;
  Subcomplex u, v;
  if (r.selections.count("u") && r.selections.count("v")) {
    u = r.selections.at("u");
    v = r.selections.at("v");
  } else {
    Rng rng(o.seed);
    std::tie(u, v) = random_cover(c, rng);
  }
  out.report["u"] = to_json(u, c);
  out.report["v"] = to_json(v, c);
  try {
    add_sequences(out, mayer_vietoris_check(c, u, v));
  } catch (const CoverageError& e) {
    out.status = 1;
    out.errors += std::string("cover check failed: ") + e.what() + "\n";
  }
  return out;
}

Output cmd_check_pair(const Recipe& r, const Options& o) {
  Output out;
  const auto& c = need_complex(r);
  if (!require_valid(c, out)) return out;
  Subcomplex a;
  if (r.selections.count("a")) {
    a = r.selections.at("a");
  } else {
    Rng rng(o.seed);
    a = random_closed(c, rng);
  }
  if (!a.is_face_closed(c)) throw UsageError("selection 'a' is not face-closed");
  out.report["a"] = to_json(a, c);
  add_sequences(out, pair_sequence_check(c, a));
  return out;
}

Output cmd_check_excision(const Recipe& r, const Options& o) {
  Output out;
  const auto& c = need_complex(r);
  if (!require_valid(c, out)) return out;
  Subcomplex u, z;
  if (r.selections.count("u") && r.selections.count("z")) {
    u = r.selections.at("u");
    z = r.selections.at("z");
  } else {
    Rng rng(o.seed);
    std::tie(u, z) = random_excision(c, rng);
  }
  ExcisionReport rep;
  try {
    rep = excision_check(c, u, z);
  } catch (const DomainError& e) {
    auto it = r.selection_positions.find("z");
    if (it == r.selection_positions.end()) throw;
    throw InputError(e.what(), it->second.first, it->second.second);
  }
  auto dims = [](const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
  };
  Table t{{"coefficients", "pair", "excised", "equal"}, {}};
  t.add({"q", dims(rep.dims_pair_q), dims(rep.dims_excised_q), yes(rep.dims_pair_q == rep.dims_excised_q)});
  t.add({"z2", dims(rep.dims_pair_z2), dims(rep.dims_excised_z2), yes(rep.dims_pair_z2 == rep.dims_excised_z2)});
  out.report = to_json(rep);
  out.report["u"] = to_json(u, c);
  out.report["z"] = to_json(z, c);
  if (!rep.equal) {
    out.status = 1;
    out.errors += "excision failed: dimension vectors differ\n";
  }
  out.tables = {t};
  return out;
}

Output cmd_homotopy(const Recipe& r, const Options&) {
  Output out;
  const auto& c = need_complex(r);
  if (!require_valid(c, out)) return out;
  auto h = make_homotopy(c, r.homotopy);
  auto res = homotopy_operator(h.k, h.l, h.f, h.g, h.prism, h.h);
  Table t{{"check", "value"}, {}};
  t.add({"homotopy", h.name});
  t.add({"certificate_q", yes(res.certificate_q)});
  t.add({"certificate_z2", yes(res.certificate_z2)});
  t.add({"induced_equal", yes(res.induced_equal)});
  out.report = Json{{"homotopy", h.name},
                    {"certificate_q", res.certificate_q},
                    {"certificate_z2", res.certificate_z2},
                    {"induced_equal", res.induced_equal}};
  Table sizes{{"degree", "rows", "cols", "nonzeros_q"}, {}};
  for (std::size_t n = 0; n < res.operator_q.size(); ++n) {
    const auto& m = res.operator_q[n];
    std::size_t nz = 0;
    for (int j = 0; j < m.cols(); ++j) nz += m.column(j).size();
    sizes.add({std::to_string(n), std::to_string(m.rows()), std::to_string(m.cols()), std::to_string(nz)});
  }
  if (!res.ok()) {
    out.status = 1;
    out.errors += "homotopy certificate failed\n";
  }
  out.tables = {t, sizes};
  return out;
}

Output cmd_subdivide(const Recipe& r, const Options& o) {
  Output out;
  const auto& c = need_complex(r);
  if (!require_valid(c, out)) return out;
  auto sd = barycentric_subdivide(c);
  if (!require_valid(sd.complex, out)) return out;
  Table t{{"degree", "instances", "instances_sd", "betti", "betti_sd", "equal"}, {}};
  Json rows = Json::array();
  for (int n : degrees(c, o)) {
    Rational a = l2_betti_exact(c, n), b = l2_betti_exact(sd.complex, n);
    t.add({std::to_string(n), std::to_string(c.instance_count(n)), std::to_string(sd.complex.instance_count(n)),
           to_string(a), to_string(b), yes(a == b)});
    rows.push_back(Json{{"degree", n}, {"betti", to_string(a)}, {"betti_sd", to_string(b)}, {"equal", a == b}});
    if (a != b) {
      out.status = 1;
      out.errors += "Betti number changed under subdivision in degree " + std::to_string(n) + "\n";
    }
  }
  out.report["degrees"] = rows;
  out.report["complex"] = to_json(sd.complex);
  out.tables = {t};
  return out;
}

Output cmd_geometry(const Recipe& r, const Options&) {
  Output out;
  if (r.kind != "regions") throw UsageError("geometry needs a regions recipe");
  Table summary{{"check", "value"}, {}};
  auto fail = [&](const std::string& what) {
    out.status = 1;
    out.errors += what + "\n";
  };
  if (!r.regions.empty()) {
    for (std::size_t i = 0; i < r.regions.size(); ++i) {
      auto diags = validate_region(r.regions[i]);
      if (!diags.empty()) throw UsageError("region " + std::to_string(i) + ": " + diags[0].message);
    }
    const int n = r.regions.front().ambient_dim;
    LinearRegion all;
    all.ambient_dim = n;
    for (const auto& reg : r.regions) all.pieces.insert(all.pieces.end(), reg.pieces.begin(), reg.pieces.end());
    Rational volume = region_volume(all);
    auto parts = attach_decompose(r.regions);

    Table pieces{{"part", "piece", "volume", "mass_center"}, {}};
    Json jparts = Json::array();
    Rational sum(0);
    bool attached = true;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      for (std::size_t k = 0; k < parts[i].pieces.size(); ++k) {
        const auto& pc = parts[i].pieces[k];
        Rational v = piece_volume(n, pc);
        sum += v;
        pieces.add({std::to_string(i), std::to_string(k), to_string(v), point_str(mass_center(n, pc))});
      }
      for (std::size_t j = i + 1; j < parts.size(); ++j)
        if (!attached_or_disjoint(parts[i], parts[j])) {
          attached = false;
          fail("parts " + std::to_string(i) + " and " + std::to_string(j) + " are neither attached nor disjoint");
        }
      jparts.push_back(to_json(parts[i]));
    }
    auto tri = triangulate(parts);
    Rational tv(0);
    for (const auto& s : tri.simplices) tv += s.volume();
    auto overlap = find_overlap(tri.simplices);
    if (sum != volume) fail("decomposition volume " + to_string(sum) + " differs from " + to_string(volume));
    if (tv != volume) fail("triangulation volume " + to_string(tv) + " differs from " + to_string(volume));
    if (overlap)
      fail("simplices " + std::to_string(overlap->first) + " and " + std::to_string(overlap->second) +
           " have overlapping interiors");
    summary.add({"volume", to_string(volume)});
    summary.add({"parts", std::to_string(parts.size())});
    summary.add({"attached_or_disjoint", yes(attached)});
    summary.add({"decomposition_volume", to_string(sum)});
    summary.add({"simplices", std::to_string(tri.simplices.size())});
    summary.add({"triangulation_volume", to_string(tv)});
    summary.add({"interiors_disjoint", yes(!overlap)});
    out.report["volume"] = to_string(volume);
    out.report["parts"] = jparts;
    Json simplices = Json::array();
    for (std::size_t i = 0; i < tri.simplices.size(); ++i) {
      auto js = to_json(tri.simplices[i]);
      js["owner"] = tri.owner[i];
      simplices.push_back(js);
    }
    out.report["triangulation"] = simplices;
    out.tables.push_back(pieces);
  }
  Json prisms = Json::array();
  for (int n : r.prism_dims) {
    auto p = prism_decompose(n);
    bool ok = prism_telescopes(p);
    summary.add({"prism_" + std::to_string(n) + "_telescopes", yes(ok)});
    prisms.push_back(Json{{"n", n}, {"simplices", static_cast<int>(p.simplices.size())}, {"telescopes", ok}});
    if (!ok) fail("prism over the " + std::to_string(n) + "-simplex does not telescope");
  }
  if (!r.prism_dims.empty()) out.report["prisms"] = prisms;
  out.tables.push_back(summary);
  return out;
}

Output cmd_arcs(const Recipe& r, const Options&) {
  Output out;
  if (!r.arcs) throw UsageError("arcs needs an arcs recipe");
  const auto& a = *r.arcs;
  Table sets{{"set", "angle", "length", "coboundary_length", "rotation_is_complement"}, {}};
  Json jsets = Json::array();
  for (std::size_t i = 0; i < a.sets.size(); ++i) {
    auto cob = indicator_coboundary(a.sets[i], a.angles[i]);
    bool flip = rotate(a.sets[i], QuadReal(Rational(0)) - a.angles[i]) == complement(a.sets[i]);
    sets.add({std::to_string(i), a.angles[i].str(), a.sets[i].length().str(), cob.length().str(), yes(flip)});
    auto j = to_json(a.sets[i]);
    j["angle"] = to_json(a.angles[i]);
    j["coboundary"] = to_json(cob);
    j["rotation_is_complement"] = flip;
    jsets.push_back(j);
  }
  auto z = zero_set(a.sets, a.angles);
  QuadReal len = z.length();
  auto approx = approximation_lengths(a.sets, a.angles, a.levels);
  Table levels{{"level", "length", "length_approx", "error", "bound", "within"}, {}};
  Json jlev = Json::array();
  for (std::size_t k = 0; k < approx.size(); ++k) {
    int n = static_cast<int>(k) + 1;
    QuadReal err = approx[k] - len;
    if (err.sign() < 0) err = QuadReal(Rational(0)) - err;
    // Each thickening adds less than 2^-n, which moves its coboundary set by
    // less than twice that.
    Rational bound(2 * static_cast<int>(a.sets.size()));
    for (int i = 0; i < n; ++i) bound /= 2;
    bool within = err <= QuadReal(bound);
    if (!within) {
      out.status = 1;
      out.errors += "approximation at level " + std::to_string(n) + " is outside the bound\n";
    }
    levels.add({std::to_string(n), approx[k].str(), num(approx[k].to_double()), num(err.to_double()), to_string(bound),
                yes(within)});
    jlev.push_back(Json{{"level", n}, {"length", approx[k].str()}, {"bound", to_string(bound)}, {"within", within}});
  }
  Table zt{{"zero_set_length", "zero_set_length_approx", "arcs"}, {}};
  zt.add({len.str(), num(len.to_double()), std::to_string(z.arcs().size())});
  out.report["sets"] = jsets;
  out.report["zero_set"] = to_json(z);
  out.report["levels"] = jlev;
  out.tables = {sets, zt, levels};
  return out;
}

Output cmd_kronecker(const Recipe& r, const Options&) {
  Output out;
  if (r.kind != "kronecker") throw UsageError("kronecker needs a kronecker recipe");
  const auto& c = *r.complex;
  if (!require_valid(c, out)) return out;
  auto ans = one_is_coboundary(r.q, r.p);
  auto dims = cohomology_dims(c, CoefficientKind::Z2);
  auto one = Cochain::constant(c, 1, Coefficient::one(CoefficientKind::Z2));
  bool trivial = is_coboundary(c, one);
  std::string witness;
  for (std::size_t i = 0; i < ans.witness.size(); ++i) witness += (i ? " " : "") + std::to_string(ans.witness[i]);
  Table t{{"check", "value"}, {}};
  t.add({"q", std::to_string(r.q)});
  t.add({"p", std::to_string(r.p)});
  t.add({"one_is_coboundary", yes(ans.coboundary)});
  t.add({ans.coboundary ? "witness" : "obstruction", ans.coboundary ? witness : ans.obstruction});
  t.add({"h0_z2", std::to_string(dims[0])});
  t.add({"h1_z2", std::to_string(dims.size() > 1 ? dims[1] : 0)});
  t.add({"constant_one_class", trivial ? "trivial" : "nontrivial"});
  bool agree = trivial == ans.coboundary;
  t.add({"agree", yes(agree)});
  out.report = Json{{"q", r.q},
                    {"p", r.p},
                    {"one_is_coboundary", ans.coboundary},
                    {"witness", ans.witness},
                    {"obstruction", ans.obstruction},
                    {"dims_z2", dims},
                    {"constant_one_class", trivial ? "trivial" : "nontrivial"},
                    {"agree", agree}};
  if (!agree) {
    out.status = 1;
    out.errors += "cohomology of the suspension disagrees with the circle computation\n";
  }
  out.tables = {t};
  return out;
}

Output run(const Recipe& r, const Options& o) {
  const std::string& cmd = o.command;
  if (cmd == "validate") return cmd_validate(r, o);
  if (cmd == "cohomology") return cmd_cohomology(r, o);
  if (cmd == "betti") return cmd_betti(r, o);
  if (cmd == "hodge") return cmd_hodge(r, o);
  if (cmd == "check-mv") return cmd_check_mv(r, o);
  if (cmd == "check-pair") return cmd_check_pair(r, o);
  if (cmd == "check-excision") return cmd_check_excision(r, o);
  if (cmd == "homotopy") return cmd_homotopy(r, o);
  if (cmd == "subdivide") return cmd_subdivide(r, o);
  if (cmd == "geometry") return cmd_geometry(r, o);
  if (cmd == "arcs") return cmd_arcs(r, o);
  return cmd_kronecker(r, o);
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Cohomology of fibered complexes, circle rotations and linear regions"};
  app.add_option("command", o.command, "Computation to run")
      ->required()
      ->check(CLI::IsMember({"validate", "cohomology", "betti", "hodge", "check-mv", "check-excision", "check-pair",
                             "homotopy", "subdivide", "geometry", "arcs", "kronecker"}));
  app.add_option("recipe", o.recipe_path, "Recipe file (JSON)")->required();
  app.add_option("--coeff", o.coeff, "Coefficients")->check(CLI::IsMember({"z2", "q", "r"}));
  app.add_option("--degree", o.degree, "Single degree");
  app.add_flag("--json", o.json, "Print the full report as JSON");
  app.add_option("--seed", o.seed, "Seed for generated selections and random recipes");
  app.add_option("--tol", o.tol, "Kernel tolerance of the float path")->check(CLI::PositiveNumber);
  app.add_option("--out", o.out, "Write the output to this file");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  Output result;
  try {
    auto recipe = read_recipe(o.recipe_path, o.seed);
    result = run(recipe, o);
  } catch (const FileInputError& e) {
    if (e.line() > 0)
      std::cerr << e.file() << ":" << e.line() << ":" << e.column() << ": " << e.detail() << "\n";
    else
      std::cerr << e.file() << ": " << e.detail() << "\n";
    return 2;
  } catch (const InputError& e) {
    std::cerr << o.recipe_path << ":" << e.line() << ":" << e.column() << ": " << e.detail() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << o.recipe_path << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << o.recipe_path << ": " << e.what() << "\n";
    return 2;
  }

  std::string text;
  if (o.json) {
    Json doc{{"command", o.command}, {"status", result.status == 0 ? "ok" : "failed"}};
    for (auto it = result.report.begin(); it != result.report.end(); ++it) doc[it.key()] = it.value();
    text = dump(doc) + "\n";
  } else {
    for (std::size_t i = 0; i < result.tables.size(); ++i) text += (i ? "\n" : "") + result.tables[i].str();
  }
  if (o.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) {
      std::cerr << o.out << ": cannot write\n";
      return 2;
    }
    f << text;
  }
  std::cerr << result.errors;
  return result.status;
}
