// Python module: complexes by recipe or JSON, cohomology, Betti numbers, the
// Kronecker check, arc zero sets and box triangulation. Rationals cross the
// boundary as "p/q" strings.

#include "lamcoh/corpus.hpp"
#include "lamcoh/hodge.hpp"
#include "lamcoh/recipe.hpp"
#include "lamcoh/serialize.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace lamcoh;

namespace {

FiberedComplex from_text(const std::string& text) {
  auto doc = JsonDocument::parse(text);
  return complex_from_json(JsonView(doc));
}

Transversal transversal_of(const std::vector<std::string>& weights) {
  Transversal t;
  for (const auto& w : weights) t.weights.push_back(parse_rational(w));
  return t;
}

BaseComplex base_named(const std::string& name, int vertices) {
  if (name == "point") return BaseComplex::point();
  if (name == "loop") return BaseComplex::loop();
  if (name == "circle") return BaseComplex::circle(vertices);
  if (name == "torus") return BaseComplex::torus();
  if (name == "torus7") return BaseComplex::torus7();
  throw DomainError("unknown base '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_lamcoh, m) {
  m.doc() = "Cohomology of fibered simplicial complexes";

  py::register_exception<StructuralError>(m, "StructuralError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

  py::class_<FiberedComplex>(m, "FiberedComplex")
      .def_property_readonly("top_dim", &FiberedComplex::top_dim)
      .def("instance_count", &FiberedComplex::instance_count)
      .def_property_readonly("weights",
                             [](const FiberedComplex& c) {
                               std::vector<std::string> out;
                               for (const auto& w : c.transversal.weights) out.push_back(to_string(w));
                               return out;
                             })
      .def("to_json", [](const FiberedComplex& c) { return dump(to_json(c)); })
      .def("__repr__", [](const FiberedComplex& c) {
        std::string s = "<FiberedComplex dim=" + std::to_string(c.top_dim()) + " instances=";
        for (int n = 0; n <= c.top_dim(); ++n) s += (n ? "," : "") + std::to_string(c.instance_count(n));
        return s + ">";
      });

  m.def("complex_from_json", &from_text, py::arg("text"));
  m.def(
      "read_recipe",
      [](const std::string& path, std::uint64_t seed) {
        auto r = read_recipe(path, seed);
        if (!r.complex) throw DomainError("recipe of kind '" + r.kind + "' does not describe a complex");
        return *r.complex;
      },
      py::arg("path"), py::arg("seed") = 0);
  m.def(
      "product_complex",
      [](const std::string& base, const std::vector<std::string>& weights, int vertices) {
        return product_complex(base_named(base, vertices), transversal_of(weights));
      },
      py::arg("base"), py::arg("weights"), py::arg("vertices") = 3);
  m.def("kronecker_model", py::overload_cast<int, int>(&kronecker_model), py::arg("q"), py::arg("p"));
  m.def(
      "random_complex",
      [](std::uint64_t seed) {
        Rng rng(seed);
        return random_complex(rng);
      },
      py::arg("seed"));

  m.def("validate", [](const FiberedComplex& c) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& d : validate(c)) out.emplace_back(d.kind, d.message);
    return out;
  });
  m.def(
      "cohomology_dims",
      [](const FiberedComplex& c, const std::string& coeff) {
        return cohomology_dims(c, parse_coefficient_kind(coeff));
      },
      py::arg("complex"), py::arg("coeff") = "q");
  m.def(
      "constant_one_is_coboundary",
      [](const FiberedComplex& c, int degree, const std::string& coeff) {
        auto w = Cochain::constant(c, degree, Coefficient::one(parse_coefficient_kind(coeff)));
        if (!apply_coboundary(c, w).is_zero()) throw DomainError("the constant cochain is not a cocycle");
        return is_coboundary(c, w);
      },
      py::arg("complex"), py::arg("degree"), py::arg("coeff") = "z2");
  m.def("l2_betti_exact", [](const FiberedComplex& c, int n) { return to_string(l2_betti_exact(c, n)); });
  m.def("l2_betti", &l2_betti, py::arg("complex"), py::arg("degree"), py::arg("tol") = 1e-9);

  m.def("one_is_coboundary", [](int q, int p) {
    auto a = one_is_coboundary(q, p);
    py::dict d;
    d["coboundary"] = a.coboundary;
    d["witness"] = a.witness;
    d["obstruction"] = a.obstruction;
    return d;
  });

  m.def(
      "zero_set",
      [](const std::string& sets_json, const std::string& angles_json, int levels) {
        auto sdoc = JsonDocument::parse(sets_json);
        auto adoc = JsonDocument::parse(angles_json);
        JsonView sv(sdoc), av(adoc);
        std::vector<ArcSet> sets;
        std::vector<QuadReal> angles;
        for (std::size_t i = 0; i < sv.size(); ++i) sets.push_back(arcs_from_json(sv[i]));
        for (std::size_t i = 0; i < av.size(); ++i) angles.push_back(quad_from_json(av[i]));
        if (sets.size() != angles.size()) throw DomainError("one angle per arc set is required");
        auto z = zero_set(sets, angles);
        py::dict d;
        d["length"] = z.length().str();
        d["length_approx"] = z.length().to_double();
        std::vector<double> approx;
        for (const auto& x : approximation_lengths(sets, angles, levels)) approx.push_back(x.to_double());
        d["approximations"] = approx;
        return d;
      },
      py::arg("sets"), py::arg("angles"), py::arg("levels") = 8);

  m.def("triangulate_boxes", [](const std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>>& boxes) {
    std::vector<LinearRegion> regions;
    for (const auto& [lo, hi] : boxes) {
      Point l, h;
      for (const auto& x : lo) l.push_back(parse_rational(x));
      for (const auto& x : hi) h.push_back(parse_rational(x));
      regions.push_back(LinearRegion::box(l, h));
    }
    auto parts = attach_decompose(regions);
    auto t = triangulate(parts);
    Rational vol(0);
    for (const auto& s : t.simplices) vol += s.volume();
    py::dict d;
    d["parts"] = parts.size();
    d["simplices"] = t.simplices.size();
    d["volume"] = to_string(vol);
    d["overlap"] = find_overlap(t.simplices).has_value();
    return d;
  });
}
