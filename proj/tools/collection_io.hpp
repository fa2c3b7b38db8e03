#pragma once

#include <istream>
#include <string>
#include <string_view>

#include "ecc/collection.hpp"

namespace ecc::io {

/// Parses a collection file.
///
/// CSV: one real vector per row, comma separated, with an optional header
/// line. JSON: {"field": "real"|"complex", "vectors": [[...], ...],
/// "weights": [...]}, complex entries written as [re, im] pairs. The format is
/// JSON when the first non-blank character is '{'.
///
/// Throws Error(Parse) with a line diagnostic for malformed input and
/// Error(Validation) for vectors off the unit sphere (unless `renormalize`).
UnitVectorCollection parse_collection(std::string_view text, bool renormalize);

UnitVectorCollection parse_collection_csv(std::string_view text, bool renormalize);
UnitVectorCollection parse_collection_json(std::string_view text, bool renormalize);

/// Reads a whole file, or standard input for "-".
std::string read_input(const std::string& path, std::istream& stdin_stream);

}  // namespace ecc::io
