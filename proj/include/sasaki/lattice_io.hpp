#pragma once

// Lattice file format (JSON):
//
//   {
//     "elements": ["0", "a", "a'", "1"],
//     "leq":      [["0", "a"], ["a", "1"], ...],   // closed reflexively and transitively on load
//     "ortho":    {"0": "1", "a": "a'", ...},      // total
//     "bottom":   "0",
//     "top":      "1"
//   }
//
// See docs/formats.md for the full schema.

#include <filesystem>
#include <string>

#include "sasaki/oml.hpp"

namespace sasaki {

// Throws Error(Format) on malformed documents, duplicate names or a partial
// ortho map.
RawOml parse_lattice(const std::string& text);
RawOml load_lattice_file(const std::filesystem::path& path);

// Writes elements in index order and the covering pairs as "leq".
std::string serialize_lattice(const RawOml& raw);
std::string serialize_lattice(const FiniteOml& lattice);

}  // namespace sasaki
