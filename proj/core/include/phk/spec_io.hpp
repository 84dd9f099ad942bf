#pragma once

#include <string>
#include <string_view>

#include "phk/catalog.hpp"

namespace phk {

/// JSON algebra files:
///
///   { "name": "...", "variables": ["x","y"], "weights": [1,1],
///     "bracket":   { "x,y": "x*y" },
///     "coproduct": { "x": "x@1 + y@x", "y": "y@y" },
///     "counit":    { "y": "1" },
///     "antipode":  { ... },
///     "metadata":  { "key": "value" } }
///
/// Bracket keys name two declared variables in declaration order. Counit
/// entries default to 0. The antipode, when present, lists every variable.
/// Catalog exports add "presentation" and "expected" objects.
///
/// Loaders throw InputError (schema violations, malformed JSON with its byte
/// offset, expression errors tagged with the offending key).
PoissonHopfAlgebra algebra_from_json(std::string_view text);
FilteredPresentation presentation_from_json(std::string_view text);
CatalogEntry entry_from_json(std::string_view text);

/// Canonical JSON, two-space indented, keys in schema order.
std::string to_json(const PoissonHopfAlgebra& H);
std::string to_json(const FilteredPresentation& F);
std::string to_json(const CatalogEntry& e);

/// Reads a whole file. Throws InputError if it cannot be opened.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace phk
