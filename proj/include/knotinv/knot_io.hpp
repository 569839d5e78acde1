#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "knotinv/knot.hpp"

namespace knotinv {

// Text format: one "x y z" triple per line, closure implied. '#' starts a
// comment that runs to the end of the line; blank lines are skipped.
DiscreteKnot parse_knot_text(std::istream& in, std::string name = {});
void write_knot_text(const DiscreteKnot& knot, std::ostream& out);

// JSON format: {"name": str, "vertices": [[x,y,z],...], "lattice": bool}.
// "lattice" is informational on input; it is recomputed from the geometry.
DiscreteKnot parse_knot_json(std::string_view text);
std::string knot_to_json(const DiscreteKnot& knot);

// Dispatches on the extension: ".json" is JSON, anything else is text.
DiscreteKnot load_knot(const std::filesystem::path& path);
void save_knot(const DiscreteKnot& knot, const std::filesystem::path& path);

}  // namespace knotinv
