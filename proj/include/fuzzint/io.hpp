#ifndef FUZZINT_IO_HPP
#define FUZZINT_IO_HPP

#include <filesystem>
#include <memory>
#include <optional>
#include <string>

#include <json.hpp>

#include "fuzzint/continuity.hpp"
#include "fuzzint/interior.hpp"
#include "fuzzint/lattice.hpp"
#include "fuzzint/monoid.hpp"
#include "fuzzint/powerset.hpp"

namespace fuzzint::io {

using json = nlohmann::ordered_json;

/// Directory against which string-valued file references are resolved.
struct Context {
  std::filesystem::path base = ".";
};

/// Throws ParseError on unreadable files or malformed JSON.
json read_json(const std::filesystem::path& path);
json parse_json(const std::string& text);
/// Pretty JSON with two-space indent and a trailing newline.
std::string dump(const json& j);

/// Resolves a string reference to the JSON object in that file (relative to
/// ctx.base); objects are returned unchanged. `ctx` is updated to the file's
/// directory.
json resolve(const json& j, Context& ctx);

/// { "elements": [...], "leq": [[a,b],...], "closure": bool }
std::shared_ptr<const FiniteLattice> lattice_from_json(const json& j, Context ctx = {});
json to_json(const FiniteLattice& l);

/// { "lattice": <object|path>, "tensor": [[a,b,c],...], "kind": "gl"|"cqml",
///   "label": ... } or { "builtin": "godel"|"lukasiewicz", "n": k }.
/// "tensor": "meet" or "join" selects ∧ or ∨. Kind defaults to "gl", in
/// which case the GL axioms are validated too.
struct MonoidDef {
  std::shared_ptr<const Cqml> cqml;
  std::optional<GlMonoid> gl;
};
MonoidDef monoid_from_json(const json& j, Context ctx = {});
json to_json(const Cqml& m);

/// { "points": [...], "algebra": <monoid> }
Ground ground_from_json(const json& j, Context ctx = {});
json to_json(const Ground& g);

/// Accepts an array of element names in point order, an object mapping point
/// names to element names, a rendered string "(a,b)", or a file-style object
/// { "carrier": [...], "values": {...} }.
FuzzySet fuzzy_set_from_json(const json& j, const Ground& g);
/// Array of element names in point order.
json to_json(const Ground& g, const FuzzySet& u);

/// { "domain": <ground>, "codomain": <ground>, "f": {x: y}, "phi_op": {m: l} }
GroundMorphism morphism_from_json(const json& j, Context ctx = {});
json to_json(const GroundMorphism& g);

/// { "ground": <ground>, "table": [[u, i(u)], ...] } listing every u, or
/// { "ground": ..., "operator": "discrete"|"least" }, or
/// { "ground": ..., "opens": [...] } for the interior of a topology.
FuzzyOperator operator_from_json(const json& j, Context ctx = {});
InteriorMap interior_from_json(const json& j, Context ctx = {});
json to_json(const InteriorMap& i);
json operator_table_json(const FuzzyOperator& op);

/// { "ground": <ground>, "opens": [u, ...] }
LTopology topology_from_json(const json& j, Context ctx = {});
json to_json(const LTopology& t);

/// { "domain": <ground>, "members": [ { "morphism": <morphism>, "target":
/// <space> }, ... ] }. Member morphisms may omit "domain".
StructuredSource source_from_json(const json& j, Context ctx = {});
json to_json(const StructuredSource& s);

}  // namespace fuzzint::io

#endif  // FUZZINT_IO_HPP
