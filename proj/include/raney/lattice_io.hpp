#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "raney/lattice.hpp"

namespace raney {

/// Parses the lattice file format:
///   { "elements": [name, ...], "covers": [[i, j], ...] }   (i covered by j)
/// or
///   { "elements": [...optional...], "leq": [[bool, ...], ...] }.
/// Unknown keys are rejected. Errors: parse_error, not_a_partial_order,
/// not_a_lattice, no_bounded_element, size_limit.
Lattice parse_lattice(std::string_view text, std::size_t max_size = kDefaultMaxLattice);

nlohmann::json lattice_to_json(const Lattice& lattice);

/// Cover-relation form, one trailing newline.
std::string to_lattice_file(const Lattice& lattice);

}  // namespace raney
