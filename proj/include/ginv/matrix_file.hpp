#pragma once

// Plain-text matrix files:
//
//   # optional comment lines
//   m n
//   a11 a12 ... a1n
//   ...
//   am1 am2 ... amn
//
// Entries use the rational syntax `[+-]digits[/digits]`. Lines starting
// with '#' and blank lines are ignored. Canonical output has lowest-terms
// entries, single spaces, and LF line endings.

#include <filesystem>
#include <istream>
#include <string>
#include <string_view>

#include "ginv/matrix.hpp"

namespace ginv {

/// Throws ParseError with 1-based line and column.
RMatrix parse_matrix(std::istream& in);
RMatrix parse_matrix(std::string_view text);

/// Throws ParseError (with source() set) on unreadable or malformed files.
RMatrix read_matrix_file(const std::filesystem::path& path);

/// Canonical MatrixFile text.
std::string format_matrix(const RMatrix& a);

/// Right-aligned table for humans; not meant to be parsed back.
std::string format_pretty(const RMatrix& a);

}  // namespace ginv
