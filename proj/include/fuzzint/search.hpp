#ifndef FUZZINT_SEARCH_HPP
#define FUZZINT_SEARCH_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "fuzzint/enumerate.hpp"
#include "fuzzint/io.hpp"

namespace fuzzint {

struct PropertyInfo {
  std::string name;
  std::string description;
};

/// Registered properties in a fixed order.
const std::vector<PropertyInfo>& registered_properties();

/// Outcome of a search. A counterexample carries a self-contained instance
/// and the witness inside it; a summary carries neither.
struct SearchResult {
  std::string property;
  bool counterexample = false;
  std::size_t instances_checked = 0;
  SearchBounds bounds;
  io::json instance;
  io::json witness;
  /// Side observations that do not decide the verdict (e.g. how many
  /// instances needed a meet interchange that failed).
  io::json notes = io::json::object();
};

/// Exhaustive search within bounds. Deterministic for fixed property and
/// bounds, independent of bounds.workers: the reported counterexample is
/// the first in enumeration order and instances_checked counts everything
/// enumerated before it. Throws UnknownProperty or BoundsExceeded.
SearchResult search(const std::string& property, const SearchBounds& bounds);

/// { "property", "status": "fail"|"ok", "bounds", "instances_checked",
///   "instance", "witness", "notes" }
io::json to_bundle(const SearchResult& r);
io::json bounds_to_json(const SearchBounds& b);

struct ReplayResult {
  std::string property;
  bool counterexample = false;  // the witness still falsifies the property
  std::string detail;
};

/// Re-evaluates the property on the bundle's witness alone. Throws
/// MalformedBundle for summaries or bundles that do not parse.
ReplayResult replay(const io::json& bundle);

}  // namespace fuzzint

#endif  // FUZZINT_SEARCH_HPP
