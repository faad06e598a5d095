#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "itrig/lattice.hpp"

namespace itrig::cli {

using Json = nlohmann::json;

// A cone as read from disk: plain text matrix (columns are edges) or JSON.
struct ConeDocument {
  IntVector vertex;
  IntMatrix edges;
  std::map<std::string, std::string> metadata;
  std::optional<IntMatrix> grid;                   // expected normal form, if supplied
  std::optional<std::vector<IntVector>> simplex;   // explicit simplex vertices, if supplied

  Cone cone() const { return Cone(vertex, edges); }
};

std::string read_input(const std::string& path, std::istream& stdin_stream);

// Auto-detects JSON by a leading '{'. Throws Error(ParseError) on malformed input.
ConeDocument parse_document(std::string_view text);

Json to_json(const Integer& x);
Json to_json(const IntVector& v);
Json to_json(const std::vector<Integer>& v);
// Row-major list of rows.
Json matrix_to_json(const IntMatrix& m);
Json cone_to_json(const Cone& c, const std::map<std::string, std::string>& metadata = {});

Integer integer_from_json(const Json& j);

// Sorted keys, no insignificant whitespace.
std::string canonical(const Json& j);
// Indented "key: value" lines.
std::string as_text(const Json& j);

}  // namespace itrig::cli
