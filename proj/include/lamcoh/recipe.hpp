// Recipe files: a JSON object naming a construction and its parameters.
#pragma once

#include "lamcoh/serialize.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace lamcoh {

/// An InputError located in a particular file.
class FileInputError : public InputError {
 public:
  FileInputError(std::string file, const InputError& e)
      : InputError(e.detail(), e.line(), e.column()), file_(std::move(file)) {}
  const std::string& file() const { return file_; }

 private:
  std::string file_;
};

struct ArcProblem {
  std::vector<ArcSet> sets;
  std::vector<QuadReal> angles;
  int levels = 8;
};

struct Recipe {
  std::string kind;
  std::optional<FiberedComplex> complex;
  std::optional<CoefficientKind> coefficients;
  /// Named subcomplexes ("u", "v", "a", "z").
  std::map<std::string, Subcomplex> selections;
  std::map<std::string, std::pair<int, int>> selection_positions;
  std::string homotopy = "identity";
  std::optional<ArcProblem> arcs;
  std::vector<LinearRegion> regions;
  std::vector<int> prism_dims;
  /// Kronecker parameters when kind == "kronecker".
  int q = 0, p = 0;
};

/// Kinds: explicit-complex, product, wedge, suspension, kronecker, arcs,
/// regions, random. "random" draws a corpus complex from the seed. Paths in
/// the recipe are relative to the recipe's directory.
Recipe read_recipe(const std::filesystem::path& path, std::uint64_t seed = 0);
Recipe parse_recipe(const std::string& text, const std::filesystem::path& dir, std::uint64_t seed = 0);

/// The complex described by a base spec: "point", "loop", "torus", "torus7",
/// {"circle": n} or {"tuples": [[...], ...]}.
BaseComplex base_from_json(const JsonView& view);

}  // namespace lamcoh
