// JSON text form of complexes, cochains, regions, arcs and reports. Rationals
// are "p/q" strings, doubles carry 17 significant digits.
#pragma once

#include "lamcoh/circle.hpp"
#include "lamcoh/cohomology.hpp"
#include "lamcoh/constructions.hpp"
#include "lamcoh/geometry.hpp"
#include "lamcoh/hodge.hpp"

#include "json.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace lamcoh {

using Json = nlohmann::ordered_json;

/// Malformed input, with a 1-based position in the source text.
class InputError : public std::runtime_error {
 public:
  InputError(const std::string& message, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& detail() const { return detail_; }

 private:
  int line_, column_;
  std::string detail_;
};

/// Parsed JSON text that remembers where every value starts.
class JsonDocument {
 public:
  /// Throws InputError on a syntax error.
  static JsonDocument parse(std::string text);

  const Json& root() const { return root_; }
  /// Line and column of the value at `at`, or of its nearest located ancestor.
  std::pair<int, int> position(const Json::json_pointer& at) const;
  [[noreturn]] void fail(const Json::json_pointer& at, const std::string& message) const;

 private:
  std::string text_;
  Json root_;
  std::map<std::string, std::size_t> offsets_;
};

/// Checked access to one value of a document.
class JsonView {
 public:
  explicit JsonView(const JsonDocument& doc) : JsonView(doc, Json::json_pointer()) {}
  JsonView(const JsonDocument& doc, Json::json_pointer at);

  const Json& value() const { return value_; }
  const Json::json_pointer& pointer() const { return at_; }
  [[noreturn]] void fail(const std::string& message) const { doc_->fail(at_, message); }

  /// Requires an object with all `required` keys and nothing outside
  /// required + optional.
  void expect_keys(std::initializer_list<const char*> required, std::initializer_list<const char*> optional = {}) const;
  bool has(const std::string& key) const;
  JsonView operator[](const std::string& key) const;
  JsonView operator[](std::size_t index) const;
  /// Array length; fails when the value is not an array.
  std::size_t size() const;
  bool is_string() const { return value_.is_string(); }
  bool is_object() const { return value_.is_object(); }

  int as_int() const;
  bool as_bool() const;
  double as_double() const;
  std::string as_string() const;
  /// A "p/q" string.
  Rational as_rational() const;

 private:
  const JsonDocument* doc_;
  Json::json_pointer at_;
  const Json& value_;
};

/// Pretty text with doubles at 17 significant digits.
std::string dump(const Json& value, int indent = 2);

Json to_json(const Rational& value);
Json to_json(const Transversal& transversal);
Json to_json(const FiberedComplex& complex);
FiberedComplex complex_from_json(const JsonView& view);

/// [[dim, family, atom], ...] in canonical order.
Json to_json(const Subcomplex& sub, const FiberedComplex& complex);
/// {"instances": [[dim, family, atom], ...], "mode": "exact" | "closure" | "star"}
Subcomplex subcomplex_from_json(const JsonView& view, const FiberedComplex& complex);

Json to_json(const Cochain& cochain);
Cochain cochain_from_json(const JsonView& view, const FiberedComplex& complex);

Json to_json(const QuadReal& value);
/// {"a": "p/q", "b": "r/s", "d": int} or a plain "p/q".
QuadReal quad_from_json(const JsonView& view);
Json to_json(const ArcSet& arcs);
/// [[lo, hi], ...]
ArcSet arcs_from_json(const JsonView& view);

Json to_json(const HalfSpace& h);
Json to_json(const LinearRegion& region);
/// {"dim": n, "boxes": [{"lo": [...], "hi": [...]}]} or {"dim": n, "pieces": [[half-space, ...]]}
LinearRegion region_from_json(const JsonView& view);
Json to_json(const Point& point);
Json to_json(const Simplex& simplex);

Json to_json(const HodgeReport& report);
Json to_json(const ExactnessReport& report);
Json to_json(const ExcisionReport& report);

const char* kind_name(CoefficientKind kind);

}  // namespace lamcoh
