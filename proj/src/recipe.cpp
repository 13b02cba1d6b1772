#include "lamcoh/recipe.hpp"

#include "lamcoh/corpus.hpp"

#include <fstream>
#include <sstream>

namespace lamcoh {

namespace {

namespace fs = std::filesystem;

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileInputError(path.string(), InputError("cannot open file", 0, 0));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

JsonDocument parse_file(const fs::path& path) {
  auto text = slurp(path);
  try {
    return JsonDocument::parse(std::move(text));
  } catch (const FileInputError&) {
    throw;
  } catch (const InputError& e) {
    throw FileInputError(path.string(), e);
  }
}

Transversal transversal_from(const JsonView& v, int default_atoms) {
  if (v.has("weights")) {
    Transversal t;
    auto wv = v["weights"];
    for (std::size_t i = 0; i < wv.size(); ++i) {
      Rational w = wv[i].as_rational();
      if (w < 0) wv[i].fail("weights must be nonnegative");
      t.weights.push_back(w);
    }
    if (t.weights.empty()) wv.fail("at least one weight is required");
    if (v.has("atoms") && v["atoms"].as_int() != t.size()) v["atoms"].fail("atom count does not match the weights");
    return t;
  }
  int atoms = v.has("atoms") ? v["atoms"].as_int() : default_atoms;
  if (atoms < 1) (v.has("atoms") ? v["atoms"] : v).fail("at least one atom is required");
  return Transversal::uniform(atoms);
}

std::vector<int> int_list(const JsonView& v) {
  std::vector<int> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(v[i].as_int());
  return out;
}

Instance instance_pair(const JsonView& v) {
  if (v.size() != 2) v.fail("expected [family, atom]");
  return Instance{v[0].as_int(), v[1].as_int()};
}

struct Builder {
  fs::path dir;
  std::uint64_t seed;
  Recipe* top = nullptr;

  void keys(const JsonView& v, bool is_top, std::initializer_list<const char*> required,
            std::vector<const char*> optional) {
    optional.push_back("kind");
    // Keys every top-level recipe may carry besides the kind's own.
    if (is_top) optional.insert(optional.end(), {"coefficients", "selections", "homotopy"});
    // expect_keys takes initializer lists; check by hand.
    if (!v.is_object()) v.fail("expected an object");
    for (const char* k : required)
      if (!v.has(k)) v.fail(std::string("missing key '") + k + "'");
    for (auto it = v.value().begin(); it != v.value().end(); ++it) {
      bool known = std::find_if(required.begin(), required.end(), [&](const char* k) { return it.key() == k; }) !=
                       required.end() ||
                   std::find_if(optional.begin(), optional.end(), [&](const char* k) { return it.key() == k; }) !=
                       optional.end();
      if (!known) v[it.key()].fail("unknown key '" + it.key() + "'");
    }
  }

  template <class F>
  auto guarded(const JsonView& v, F&& f) -> decltype(f()) {
    try {
      return f();
    } catch (const InputError&) {
      throw;
    } catch (const DomainError& e) {
      v.fail(e.what());
    } catch (const StructuralError& e) {
      v.fail(e.what());
    } catch (const std::out_of_range&) {
      v.fail("index out of range");
    }
  }

  FiberedComplex complex(const JsonView& v, bool is_top) {
    if (!v.is_object()) v.fail("expected a recipe object");
    if (!v.has("kind")) v.fail("missing key 'kind'");
    std::string kind = v["kind"].as_string();
    if (kind == "explicit-complex") {
      keys(v, is_top, {}, {"complex", "file"});
      if (v.has("complex") == v.has("file")) v.fail("give exactly one of 'complex' and 'file'");
      if (v.has("complex")) return complex_from_json(v["complex"]);
      auto path = dir / v["file"].as_string();
      if (!fs::exists(path)) v["file"].fail("file not found: " + path.string());
      auto doc = parse_file(path);
      try {
        return complex_from_json(JsonView(doc));
      } catch (const FileInputError&) {
        throw;
      } catch (const InputError& e) {
        throw FileInputError(path.string(), e);
      }
    }
    if (kind == "product") {
      keys(v, is_top, {"base"}, {"weights", "atoms"});
      auto base = base_from_json(v["base"]);
      auto t = transversal_from(v, 1);
      return guarded(v, [&] { return product_complex(base, t); });
    }
    if (kind == "suspension") {
      keys(v, is_top, {"base", "permutations"}, {"weights", "atoms"});
      std::string b = v["base"].as_string();
      auto pv = v["permutations"];
      std::vector<std::vector<int>> perms;
      for (std::size_t i = 0; i < pv.size(); ++i) perms.push_back(int_list(pv[i]));
      SuspensionData data;
      if (b == "circle") {
        if (perms.size() != 1) pv.fail("a circle suspension takes one permutation");
        data = SuspensionData::circle(perms[0]);
      } else if (b == "torus") {
        if (perms.size() != 2) pv.fail("a torus suspension takes two permutations");
        data = SuspensionData::torus_of(perms[0], perms[1]);
      } else {
        v["base"].fail("suspension base must be circle or torus");
      }
      guarded(pv, [&] {
        check_suspension_data(data);
        return 0;
      });
      auto t = transversal_from(v, static_cast<int>(perms[0].size()));
      if (t.size() != static_cast<int>(perms[0].size())) v.fail("weights must match the permutation size");
      return guarded(v, [&] { return suspension(data, t); });
    }
    if (kind == "kronecker") {
      keys(v, is_top, {"q", "p"}, {"weights"});
      int q = v["q"].as_int(), p = v["p"].as_int();
      if (q < 1) v["q"].fail("q must be positive");
      if (is_top) {
        top->q = q;
        top->p = p;
      }
      if (!v.has("weights")) return guarded(v, [&] { return kronecker_model(q, p); });
      auto t = transversal_from(v, q);
      if (t.size() != q) v["weights"].fail("expected q weights");
      return guarded(v, [&] { return kronecker_model(q, p, t); });
    }
    if (kind == "wedge") {
      keys(v, is_top, {"left", "right"}, {"points", "left_family", "right_family", "gamma"});
      auto left = complex(v["left"], false);
      auto right = complex(v["right"], false);
      if (v.has("points")) {
        if (v.has("gamma")) v.fail("give either 'points' or 'gamma'");
        std::vector<WedgePoint> pts;
        auto pv = v["points"];
        for (std::size_t i = 0; i < pv.size(); ++i) {
          pv[i].expect_keys({"left", "right"});
          pts.push_back({instance_pair(pv[i]["left"]), instance_pair(pv[i]["right"])});
        }
        return guarded(v, [&] { return wedge(left, right, pts).complex; });
      }
      if (!v.has("gamma")) v.fail("missing key 'points' or 'gamma'");
      int lf = v.has("left_family") ? v["left_family"].as_int() : 0;
      int rf = v.has("right_family") ? v["right_family"].as_int() : 0;
      std::map<int, int> pairs;
      auto gv = v["gamma"];
      for (std::size_t i = 0; i < gv.size(); ++i) {
        if (gv[i].size() != 2) gv[i].fail("expected [left atom, right atom]");
        pairs[gv[i][0].as_int()] = gv[i][1].as_int();
      }
      return guarded(v, [&] { return wedge(left, right, lf, rf, PartialHolonomy(pairs)).complex; });
    }
    if (kind == "random") {
      keys(v, is_top, {}, {});
      Rng rng(seed);
      return random_complex(rng);
    }
    v["kind"].fail("unknown recipe kind '" + kind + "'");
  }

  void selections(const JsonView& v) {
    if (!v.is_object()) v.fail("expected an object");
    for (auto it = v.value().begin(); it != v.value().end(); ++it) {
      const std::string& name = it.key();
      if (name != "u" && name != "v" && name != "a" && name != "z") v[name].fail("unknown key '" + name + "'");
      top->selections.emplace(name, subcomplex_from_json(v[name], *top->complex));
      top->selection_positions[name] = {0, 0};
    }
  }
};

}  // namespace

BaseComplex base_from_json(const JsonView& view) {
  if (view.is_string()) {
    std::string s = view.as_string();
    if (s == "point") return BaseComplex::point();
    if (s == "loop") return BaseComplex::loop();
    if (s == "torus") return BaseComplex::torus();
    if (s == "torus7") return BaseComplex::torus7();
    view.fail("unknown base '" + s + "'");
  }
  if (!view.is_object()) view.fail("expected a base name or object");
  if (view.has("circle")) {
    view.expect_keys({"circle"});
    int n = view["circle"].as_int();
    if (n < 3) view["circle"].fail("a simplicial circle needs at least 3 vertices");
    return BaseComplex::circle(n);
  }
  view.expect_keys({"tuples"});
  auto tv = view["tuples"];
  std::vector<std::vector<int>> tuples;
  for (std::size_t i = 0; i < tv.size(); ++i) {
    auto t = int_list(tv[i]);
    if (t.empty()) tv[i].fail("empty tuple");
    for (int x : t)
      if (x < 0) tv[i].fail("vertex labels must be nonnegative");
    if (!std::is_sorted(t.begin(), t.end())) tv[i].fail("tuple labels must be non-decreasing");
    tuples.push_back(std::move(t));
  }
  if (tuples.empty()) tv.fail("at least one tuple is required");
  return BaseComplex::from_tuples(tuples);
}

Recipe parse_recipe(const std::string& text, const std::filesystem::path& dir, std::uint64_t seed) {
  auto doc = JsonDocument::parse(text);
  JsonView root(doc);
  Recipe r;
  Builder b{dir, seed, &r};
  if (!root.is_object()) root.fail("a recipe is a JSON object");
  if (!root.has("kind")) root.fail("missing key 'kind'");
  r.kind = root["kind"].as_string();

  if (r.kind == "arcs") {
    b.keys(root, true, {"sets", "angles"}, {"levels"});
    ArcProblem problem;
    auto sv = root["sets"], av = root["angles"];
    for (std::size_t i = 0; i < sv.size(); ++i) problem.sets.push_back(arcs_from_json(sv[i]));
    for (std::size_t i = 0; i < av.size(); ++i) problem.angles.push_back(quad_from_json(av[i]));
    if (problem.sets.size() != problem.angles.size()) av.fail("one angle per arc set is required");
    if (problem.sets.empty()) sv.fail("at least one arc set is required");
    if (root.has("levels")) {
      problem.levels = root["levels"].as_int();
      if (problem.levels < 1 || problem.levels > 60) root["levels"].fail("levels must be between 1 and 60");
    }
    r.arcs = std::move(problem);
  } else if (r.kind == "regions") {
    b.keys(root, true, {"regions"}, {"prism"});
    auto rv = root["regions"];
    for (std::size_t i = 0; i < rv.size(); ++i) {
      r.regions.push_back(region_from_json(rv[i]));
      if (r.regions.back().ambient_dim != r.regions.front().ambient_dim) rv[i].fail("regions must share a dimension");
    }
    if (root.has("prism")) {
      r.prism_dims = int_list(root["prism"]);
      for (int n : r.prism_dims)
        if (n < 0 || n > 3) root["prism"].fail("prism dimensions must be between 0 and 3");
    }
  } else {
    r.complex = b.complex(root, true);
  }

  if (root.has("coefficients")) {
    try {
      r.coefficients = parse_coefficient_kind(root["coefficients"].as_string());
    } catch (const std::exception&) {
      root["coefficients"].fail("coefficients must be z2, q or r");
    }
  }
  if (root.has("homotopy")) {
    r.homotopy = root["homotopy"].as_string();
    static const char* names[] = {"identity", "projection", "fold-top", "fold-bottom", "fold-projection"};
    if (std::find(std::begin(names), std::end(names), r.homotopy) == std::end(names))
      root["homotopy"].fail("homotopy must be identity, projection, fold-top, fold-bottom or fold-projection");
  }
  if (root.has("selections")) {
    if (!r.complex) root["selections"].fail("selections need a complex");
    b.selections(root["selections"]);
    for (auto& [name, pos] : r.selection_positions)
      pos = doc.position(Json::json_pointer("/selections/" + name));
  }
  return r;
}

Recipe read_recipe(const std::filesystem::path& path, std::uint64_t seed) {
  auto text = slurp(path);
  try {
    return parse_recipe(text, path.parent_path(), seed);
  } catch (const FileInputError&) {
    throw;
  } catch (const InputError& e) {
    throw FileInputError(path.string(), e);
  }
}

}  // namespace lamcoh
