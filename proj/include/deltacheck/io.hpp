#pragma once

// JSON files and reports. Polytope files look like
//   {"name": "cube", "vertices": [[0,0,0],[1,0,0],...]}
// and pair files like {"P": {...}, "Q": {...}}.

#include <filesystem>
#include <string>
#include <utility>

#include "json.hpp"

#include "deltacheck/monotone.hpp"
#include "deltacheck/poly.hpp"
#include "deltacheck/polytope.hpp"

namespace deltacheck {

using Json = nlohmann::ordered_json;

/// Parses a polytope body; diagnostics name the offending field, prefixed by `where`.
LatticePolytope polytope_from_json(const Json& body, const std::string& where = "");
LatticePolytope parse_polytope(const std::string& text, const std::string& source = "<input>");
LatticePolytope load_polytope_file(const std::filesystem::path& path);

/// (P, Q); rejects Q ⊄ P at load.
std::pair<LatticePolytope, LatticePolytope> parse_pair(const std::string& text,
                                                       const std::string& source = "<input>");
std::pair<LatticePolytope, LatticePolytope> load_pair_file(const std::filesystem::path& path);

/// Integer as a JSON number when it fits in 64 bits, else as a decimal string.
Json to_json(const Int& x);
Json to_json(std::span<const Int> v);
/// Coefficients, lowest degree first.
Json to_json(const IntPoly& p);
Json to_json(const LatticePolytope& p);
Json pair_to_json(const LatticePolytope& p, const LatticePolytope& q);
Json to_json(const PairReport& r, bool with_timing = false);

/// Compact single-line dump plus newline.
std::string render(const Json& j);

}  // namespace deltacheck
