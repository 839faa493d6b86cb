#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "fastdiam/point_set.hpp"

namespace fastdiam {

// Dataset text format:
//
//   n m
//   x_11 x_12 ... x_1m
//   ...
//   x_n1 x_n2 ... x_nm
//
// Fields are whitespace separated decimal reals, parsed without regard to
// the process locale. Blank lines after the last row are ignored; anything
// else is a ParseError naming the 1-based line.

PointSet parse_points(std::istream& in, std::string_view source = "<stream>");
PointSet load_points(const std::string& path);

/// Writes with 17 significant digits so that load_points restores every
/// coordinate bit for bit.
void write_points(const PointSet& set, std::ostream& out);
void save_points(const PointSet& set, const std::string& path);

/// 17 significant digits, "." decimal point, independent of locale.
std::string format_real(double value);

}  // namespace fastdiam
