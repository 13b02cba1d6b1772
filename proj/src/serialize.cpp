#include "lamcoh/serialize.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

namespace lamcoh {

InputError::InputError(const std::string& message, int line, int column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      detail_(message) {}

// ------------------------------------------------------------- positions

namespace {

void skip_ws(const std::string& t, std::size_t& i) {
  while (i < t.size() && (t[i] == ' ' || t[i] == '\t' || t[i] == '\n' || t[i] == '\r')) ++i;
}

void put_utf8(std::string& out, unsigned cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

std::string read_string(const std::string& t, std::size_t& i) {
  std::string out;
  ++i;  // opening quote
  while (i < t.size() && t[i] != '"') {
    if (t[i] == '\\' && i + 1 < t.size()) {
      char c = t[i + 1];
      i += 2;
      switch (c) {
        case 'n': out += '\n'; break;
        case 't': out += '\t'; break;
        case 'r': out += '\r'; break;
        case 'b': out += '\b'; break;
        case 'f': out += '\f'; break;
        case 'u':
          put_utf8(out, static_cast<unsigned>(std::stoul(t.substr(i, 4), nullptr, 16)));
          i += 4;
          break;
        default: out += c;
      }
    } else {
      out += t[i++];
    }
  }
  ++i;  // closing quote
  return out;
}

std::string escape_token(const std::string& key) {
  std::string out;
  for (char c : key) {
    if (c == '~') out += "~0";
    else if (c == '/') out += "~1";
    else out += c;
  }
  return out;
}

// The text is already known to be valid JSON.
void scan(const std::string& t, std::size_t& i, const std::string& path, std::map<std::string, std::size_t>& out) {
  skip_ws(t, i);
  out[path] = i;
  if (i >= t.size()) return;
  if (t[i] == '{') {
    ++i;
    skip_ws(t, i);
    if (t[i] == '}') {
      ++i;
      return;
    }
    while (true) {
      skip_ws(t, i);
      std::string key = read_string(t, i);
      skip_ws(t, i);
      ++i;  // colon
      scan(t, i, path + "/" + escape_token(key), out);
      skip_ws(t, i);
      if (t[i++] == '}') return;
    }
  }
  if (t[i] == '[') {
    ++i;
    skip_ws(t, i);
    if (t[i] == ']') {
      ++i;
      return;
    }
    for (std::size_t k = 0;; ++k) {
      scan(t, i, path + "/" + std::to_string(k), out);
      skip_ws(t, i);
      if (t[i++] == ']') return;
    }
  }
  if (t[i] == '"') {
    read_string(t, i);
    return;
  }
  while (i < t.size() && std::string(",]} \t\r\n").find(t[i]) == std::string::npos) ++i;
}

std::pair<int, int> line_col(const std::string& t, std::size_t offset) {
  int line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < t.size(); ++i) {
    if (t[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

JsonDocument JsonDocument::parse(std::string text) {
  JsonDocument doc;
  doc.text_ = std::move(text);
  try {
    doc.root_ = Json::parse(doc.text_);
  } catch (const Json::parse_error& e) {
    std::size_t at = e.byte > 0 ? e.byte - 1 : 0;
    auto [line, col] = line_col(doc.text_, at);
    std::string what = e.what();
    auto colon = what.rfind(": ");
    throw InputError("syntax error: " + (colon == std::string::npos ? what : what.substr(colon + 2)), line, col);
  }
  std::size_t i = 0;
  scan(doc.text_, i, "", doc.offsets_);
  return doc;
}

std::pair<int, int> JsonDocument::position(const Json::json_pointer& at) const {
  Json::json_pointer p = at;
  while (true) {
    auto it = offsets_.find(p.to_string());
    if (it != offsets_.end()) return line_col(text_, it->second);
    if (p.empty()) return {1, 1};
    p = p.parent_pointer();
  }
}

void JsonDocument::fail(const Json::json_pointer& at, const std::string& message) const {
  auto [line, col] = position(at);
  std::string where = at.empty() ? "" : " (at " + at.to_string() + ")";
  throw InputError(message + where, line, col);
}

// ------------------------------------------------------------- views

JsonView::JsonView(const JsonDocument& doc, Json::json_pointer at)
    : doc_(&doc), at_(std::move(at)), value_(doc.root().at(at_)) {}

void JsonView::expect_keys(std::initializer_list<const char*> required,
                           std::initializer_list<const char*> optional) const {
  if (!value_.is_object()) fail("expected an object");
  std::set<std::string> allowed;
  for (const char* k : required) {
    allowed.insert(k);
    if (!value_.contains(k)) fail(std::string("missing key '") + k + "'");
  }
  for (const char* k : optional) allowed.insert(k);
  for (const auto& item : value_.items())
    if (!allowed.count(item.key())) doc_->fail(at_ / item.key(), "unknown key '" + item.key() + "'");
}

bool JsonView::has(const std::string& key) const { return value_.is_object() && value_.contains(key); }

JsonView JsonView::operator[](const std::string& key) const {
  if (!value_.is_object()) fail("expected an object");
  if (!value_.contains(key)) fail("missing key '" + key + "'");
  return JsonView(*doc_, at_ / key);
}

JsonView JsonView::operator[](std::size_t index) const {
  if (index >= size()) fail("index " + std::to_string(index) + " out of range");
  return JsonView(*doc_, at_ / index);
}

std::size_t JsonView::size() const {
  if (!value_.is_array()) fail("expected an array");
  return value_.size();
}

int JsonView::as_int() const {
  if (!value_.is_number_integer()) fail("expected an integer");
  auto v = value_.get<long long>();
  if (v < -2147483647LL || v > 2147483647LL) fail("integer out of range");
  return static_cast<int>(v);
}

bool JsonView::as_bool() const {
  if (!value_.is_boolean()) fail("expected true or false");
  return value_.get<bool>();
}

double JsonView::as_double() const {
  if (!value_.is_number()) fail("expected a number");
  return value_.get<double>();
}

std::string JsonView::as_string() const {
  if (!value_.is_string()) fail("expected a string");
  return value_.get<std::string>();
}

Rational JsonView::as_rational() const {
  if (!value_.is_string()) fail("expected a rational as a \"p/q\" string");
  try {
    return parse_rational(value_.get<std::string>());
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
}

// ------------------------------------------------------------- dump

namespace {

void write(std::string& out, const Json& v, int indent, int depth) {
  auto newline = [&](int d) {
    if (indent < 0) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * d), ' ');
  };
  if (v.is_object()) {
    if (v.empty()) {
      out += "{}";
      return;
    }
    out += '{';
    bool first = true;
    for (const auto& item : v.items()) {
      if (!first) out += ',';
      first = false;
      newline(depth + 1);
      out += Json(item.key()).dump();
      out += indent < 0 ? ":" : ": ";
      write(out, item.value(), indent, depth + 1);
    }
    newline(depth);
    out += '}';
  } else if (v.is_array()) {
    if (v.empty()) {
      out += "[]";
      return;
    }
    // Arrays of scalars stay on one line.
    bool flat = std::none_of(v.begin(), v.end(), [](const Json& x) { return x.is_structured(); });
    out += '[';
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out += flat && indent >= 0 ? ", " : ",";
      if (!flat) newline(depth + 1);
      write(out, v[i], indent, depth + 1);
    }
    if (!flat) newline(depth);
    out += ']';
  } else if (v.is_number_float()) {
    double d = v.get<double>();
    if (!std::isfinite(d)) {
      out += "null";
      return;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", d);
    std::string s = buf;
    if (s.find_first_of(".eE") == std::string::npos) s += ".0";
    out += s;
  } else {
    out += v.dump();
  }
}

}  // namespace

std::string dump(const Json& value, int indent) {
  std::string out;
  write(out, value, indent, 0);
  return out;
}

// ------------------------------------------------------------- complexes

const char* kind_name(CoefficientKind kind) {
  switch (kind) {
    case CoefficientKind::Z2: return "Z2";
    case CoefficientKind::Q: return "Q";
    case CoefficientKind::R: return "R";
  }
  return "?";
}

Json to_json(const Rational& value) { return to_string(value); }

Json to_json(const Transversal& transversal) {
  Json w = Json::array();
  for (const auto& x : transversal.weights) w.push_back(to_string(x));
  return Json{{"atoms", transversal.size()}, {"weights", w}};
}

Json to_json(const FiberedComplex& complex) {
  Json fams = Json::array();
  for (const auto& level : complex.families) {
    Json l = Json::array();
    for (const auto& fam : level) {
      Json f;
      if (!fam.label.empty()) f["label"] = fam.label;
      f["base"] = fam.base;
      Json faces = Json::array();
      for (const auto& face : fam.faces) {
        Json map = Json::array();
        for (std::size_t k = 0; k < fam.base.size() && k < face.map.size(); ++k)
          map.push_back(Json::array({fam.base[k], face.map[k]}));
        faces.push_back(Json{{"target", face.target}, {"map", map}});
      }
      f["faces"] = faces;
      l.push_back(f);
    }
    fams.push_back(l);
  }
  return Json{{"transversal", to_json(complex.transversal)},
              {"families", fams},
              {"regularity_bound", complex.regularity_bound}};
}

FiberedComplex complex_from_json(const JsonView& view) {
  view.expect_keys({"transversal", "families"}, {"regularity_bound"});
  FiberedComplex c;
  auto tv = view["transversal"];
  tv.expect_keys({"weights"}, {"atoms"});
  auto wv = tv["weights"];
  for (std::size_t i = 0; i < wv.size(); ++i) {
    Rational w = wv[i].as_rational();
    if (w < 0) wv[i].fail("weights must be nonnegative");
    c.transversal.weights.push_back(w);
  }
  if (tv.has("atoms") && tv["atoms"].as_int() != c.transversal.size())
    tv["atoms"].fail("atom count does not match the number of weights");
  const int atoms = c.transversal.size();

  auto fv = view["families"];
  for (std::size_t n = 0; n < fv.size(); ++n) {
    auto level = fv[n];
    std::vector<SimplexFamily> fams;
    for (std::size_t f = 0; f < level.size(); ++f) {
      auto famv = level[f];
      famv.expect_keys({"base", "faces"}, {"label"});
      SimplexFamily fam;
      fam.dim = static_cast<int>(n);
      if (famv.has("label")) fam.label = famv["label"].as_string();
      auto bv = famv["base"];
      for (std::size_t k = 0; k < bv.size(); ++k) {
        int a = bv[k].as_int();
        if (a < 0 || a >= atoms) bv[k].fail("atom " + std::to_string(a) + " is not in the transversal");
        fam.base.push_back(a);
      }
      if (!std::is_sorted(fam.base.begin(), fam.base.end()) ||
          std::adjacent_find(fam.base.begin(), fam.base.end()) != fam.base.end())
        bv.fail("base atoms must be strictly increasing");
      auto facev = famv["faces"];
      for (std::size_t i = 0; i < facev.size(); ++i) {
        auto one = facev[i];
        one.expect_keys({"target", "map"});
        Face face;
        face.target = one["target"].as_int();
        face.map.assign(fam.base.size(), -1);
        auto mv = one["map"];
        for (std::size_t k = 0; k < mv.size(); ++k) {
          auto pair = mv[k];
          if (pair.size() != 2) pair.fail("expected [atom, image]");
          int from = pair[0].as_int(), to = pair[1].as_int();
          int pos = fam.position(from);
          if (pos < 0) pair[0].fail("atom " + std::to_string(from) + " is not in the family base");
          if (face.map[static_cast<std::size_t>(pos)] != -1) pair[0].fail("atom mapped twice");
          face.map[static_cast<std::size_t>(pos)] = to;
        }
        if (std::find(face.map.begin(), face.map.end(), -1) != face.map.end())
          mv.fail("face map must cover every base atom");
        fam.faces.push_back(std::move(face));
      }
      fams.push_back(std::move(fam));
    }
    c.families.push_back(std::move(fams));
  }
  c.regularity_bound = view.has("regularity_bound") ? view["regularity_bound"].as_int()
                                                    : std::max(1, minimal_regularity_bound(c));
  return c;
}

Json to_json(const Subcomplex& sub, const FiberedComplex& complex) {
  Json out = Json::array();
  for (int n = 0; n <= complex.top_dim(); ++n)
    for (std::size_t f = 0; f < complex.families_of(n).size(); ++f)
      for (int a : complex.families_of(n)[f].base)
        if (sub.contains(n, static_cast<int>(f), a)) out.push_back(Json::array({n, static_cast<int>(f), a}));
  return out;
}

Subcomplex subcomplex_from_json(const JsonView& view, const FiberedComplex& complex) {
  view.expect_keys({"instances"}, {"mode"});
  std::string mode = view.has("mode") ? view["mode"].as_string() : "exact";
  std::vector<std::pair<int, Instance>> items;
  auto iv = view["instances"];
  for (std::size_t i = 0; i < iv.size(); ++i) {
    auto t = iv[i];
    if (t.size() != 3) t.fail("expected [dim, family, atom]");
    int n = t[0].as_int(), f = t[1].as_int(), a = t[2].as_int();
    if (n < 0 || n > complex.top_dim() || f < 0 || f >= static_cast<int>(complex.families_of(n).size()) ||
        !complex.family(n, f).contains(a))
      t.fail("no such simplex instance");
    items.push_back({n, Instance{f, a}});
  }
  if (mode == "exact") return Subcomplex::from_instances(complex, items);
  if (mode == "closure") return Subcomplex::closure(complex, items);
  if (mode == "star") return Subcomplex::star(complex, items);
  view["mode"].fail("mode must be exact, closure or star");
}

Json to_json(const Cochain& cochain) {
  Json values = Json::array();
  for (const auto& fam : cochain.values) {
    Json row = Json::array();
    for (const auto& c : fam) {
      switch (c.kind()) {
        case CoefficientKind::Z2: row.push_back(c.as_z2().bit ? 1 : 0); break;
        case CoefficientKind::Q: row.push_back(to_string(c.as_rational())); break;
        case CoefficientKind::R: row.push_back(c.as_double()); break;
      }
    }
    values.push_back(row);
  }
  return Json{{"degree", cochain.degree}, {"coefficients", kind_name(cochain.kind)}, {"values", values}};
}

Cochain cochain_from_json(const JsonView& view, const FiberedComplex& complex) {
  view.expect_keys({"degree", "coefficients", "values"});
  Cochain c;
  c.degree = view["degree"].as_int();
  std::string k = view["coefficients"].as_string();
  if (k == "Z2") c.kind = CoefficientKind::Z2;
  else if (k == "Q") c.kind = CoefficientKind::Q;
  else if (k == "R") c.kind = CoefficientKind::R;
  else view["coefficients"].fail("coefficients must be Z2, Q or R");
  if (c.degree < 0 || c.degree > complex.top_dim()) view["degree"].fail("degree out of range");
  auto vv = view["values"];
  const auto& fams = complex.families_of(c.degree);
  if (vv.size() != fams.size()) vv.fail("expected one list per family");
  for (std::size_t f = 0; f < fams.size(); ++f) {
    auto row = vv[f];
    if (row.size() != fams[f].base.size()) row.fail("expected one value per base atom");
    std::vector<Coefficient> vals;
    for (std::size_t a = 0; a < row.size(); ++a) {
      auto x = row[a];
      if (c.kind == CoefficientKind::Z2) {
        int b = x.as_int();
        if (b != 0 && b != 1) x.fail("Z2 values are 0 or 1");
        vals.emplace_back(Z2(b == 1));
      } else if (c.kind == CoefficientKind::Q) {
        vals.emplace_back(x.as_rational());
      } else {
        vals.emplace_back(x.as_double());
      }
    }
    c.values.push_back(std::move(vals));
  }
  return c;
}

// ------------------------------------------------------------- arcs

Json to_json(const QuadReal& value) {
  return Json{{"a", to_string(value.a())}, {"b", to_string(value.b())}, {"d", value.d()}};
}

QuadReal quad_from_json(const JsonView& view) {
  if (view.is_string()) return QuadReal(view.as_rational());
  view.expect_keys({"a"}, {"b", "d"});
  Rational a = view["a"].as_rational();
  Rational b = view.has("b") ? view["b"].as_rational() : Rational(0);
  int d = view.has("d") ? view["d"].as_int() : 5;
  try {
    return QuadReal(a, b, d);
  } catch (const DomainError& e) {
    view.fail(e.what());
  }
}

Json to_json(const ArcSet& arcs) {
  Json list = Json::array();
  for (const auto& a : arcs.arcs()) list.push_back(Json::array({to_json(a.lo), to_json(a.hi)}));
  QuadReal len = arcs.length();
  return Json{{"arcs", list}, {"length", len.str()}, {"length_exact", to_json(len)}, {"length_approx", len.to_double()}};
}

ArcSet arcs_from_json(const JsonView& view) {
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < view.size(); ++i) {
    auto pair = view[i];
    if (pair.size() != 2) pair.fail("expected [lo, hi]");
    arcs.push_back({quad_from_json(pair[0]), quad_from_json(pair[1])});
  }
  try {
    return ArcSet::from_arcs(arcs);
  } catch (const DomainError& e) {
    view.fail(e.what());
  }
}

// ------------------------------------------------------------- geometry

Json to_json(const Point& point) {
  Json p = Json::array();
  for (const auto& x : point) p.push_back(to_string(x));
  return p;
}

Json to_json(const HalfSpace& h) {
  Json normal = Json::array();
  for (const auto& k : h.normal) normal.push_back(k.str());
  return Json{{"normal", normal},
              {"offset", to_string(h.offset)},
              {"sense", h.sense == HalfSpace::Sense::Le ? "<=" : ">="}};
}

Json to_json(const LinearRegion& region) {
  Json pieces = Json::array();
  for (const auto& p : region.pieces) {
    Json piece = Json::array();
    for (const auto& h : p) piece.push_back(to_json(h));
    pieces.push_back(piece);
  }
  return Json{{"dim", region.ambient_dim}, {"pieces", pieces}};
}

namespace {

Point point_from_json(const JsonView& view, int n) {
  if (static_cast<int>(view.size()) != n) view.fail("expected " + std::to_string(n) + " coordinates");
  Point p;
  for (std::size_t i = 0; i < view.size(); ++i) p.push_back(view[i].as_rational());
  return p;
}

}  // namespace

LinearRegion region_from_json(const JsonView& view) {
  view.expect_keys({"dim"}, {"boxes", "pieces"});
  int n = view["dim"].as_int();
  if (n < 1 || n > 3) view["dim"].fail("dim must be 1, 2 or 3");
  LinearRegion r;
  r.ambient_dim = n;
  if (view.has("boxes")) {
    auto bv = view["boxes"];
    for (std::size_t i = 0; i < bv.size(); ++i) {
      bv[i].expect_keys({"lo", "hi"});
      try {
        r.pieces.push_back(LinearRegion::box(point_from_json(bv[i]["lo"], n), point_from_json(bv[i]["hi"], n)).pieces[0]);
      } catch (const DomainError& e) {
        bv[i].fail(e.what());
      }
    }
  }
  if (view.has("pieces")) {
    auto pv = view["pieces"];
    for (std::size_t i = 0; i < pv.size(); ++i) {
      ConvexPiece piece;
      for (std::size_t j = 0; j < pv[i].size(); ++j) {
        auto h = pv[i][j];
        h.expect_keys({"normal", "offset"}, {"sense"});
        Point a = point_from_json(h["normal"], n);
        Rational c = h["offset"].as_rational();
        std::string sense = h.has("sense") ? h["sense"].as_string() : "<=";
        if (sense != "<=" && sense != ">=") h["sense"].fail("sense must be <= or >=");
        try {
          piece.push_back(sense == "<=" ? HalfSpace::make(a, c) : HalfSpace::at_least(a, c));
        } catch (const DomainError& e) {
          h.fail(e.what());
        }
      }
      std::sort(piece.begin(), piece.end());
      r.pieces.push_back(std::move(piece));
    }
  }
  if (r.pieces.empty()) view.fail("region needs boxes or pieces");
  return r;
}

Json to_json(const Simplex& simplex) {
  Json v = Json::array();
  for (const auto& p : simplex.vertices) v.push_back(to_json(p));
  return Json{{"vertices", v}, {"orientation", simplex.orientation}};
}

// ------------------------------------------------------------- reports

Json to_json(const HodgeReport& report) {
  Json basis = Json::array();
  for (const auto& h : report.harmonic_basis) basis.push_back(to_json(h));
  Json out{{"degree", report.degree},
           {"kernel_dim", report.kernel_dim},
           {"lambda_betti", report.lambda_betti}};
  if (report.has_exact) out["lambda_betti_exact"] = to_string(report.lambda_betti_exact);
  out["orthogonality_residual"] = report.orthogonality_residual;
  out["eigen_residual"] = report.eigen_residual;
  out["eigenvalues"] = report.eigenvalues;
  out["harmonic_basis"] = basis;
  return out;
}

Json to_json(const ExactnessReport& report) {
  Json nodes = Json::array();
  for (const auto& n : report.nodes)
    nodes.push_back(Json{{"label", n.label},
                         {"degree", n.degree},
                         {"dimension", n.dimension},
                         {"rank_in", n.rank_in},
                         {"rank_out", n.rank_out},
                         {"composite_zero", n.composite_zero},
                         {"exact", n.exact}});
  return Json{{"coefficients", kind_name(report.kind)},
              {"exact", report.exact()},
              {"cochain_level_exact", report.cochain_level_exact},
              {"nodes", nodes}};
}

Json to_json(const ExcisionReport& report) {
  return Json{{"dims_pair_q", report.dims_pair_q},
              {"dims_excised_q", report.dims_excised_q},
              {"dims_pair_z2", report.dims_pair_z2},
              {"dims_excised_z2", report.dims_excised_z2},
              {"equal", report.equal}};
}

}  // namespace lamcoh
