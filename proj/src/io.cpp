#include "fastdiam/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <vector>

#include "fastdiam/errors.hpp"

namespace fastdiam {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    const std::size_t begin = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    if (i > begin) fields.push_back(line.substr(begin, i - begin));
  }
  return fields;
}

template <typename T>
bool parse_field(std::string_view text, T& out) {
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

}  // namespace

std::string format_real(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 17);
  if (ec != std::errc()) throw IoError("format_real: conversion failed");
  return std::string(buf, ptr);
}

PointSet parse_points(std::istream& in, std::string_view source_view) {
  const std::string source(source_view);
  std::string line;
  std::size_t line_no = 0;

  // Header, skipping leading blank lines.
  std::vector<std::string_view> fields;
  while (std::getline(in, line)) {
    ++line_no;
    fields = split_fields(line);
    if (!fields.empty()) break;
  }
  if (fields.empty()) throw ParseError(source, line_no, "missing 'n m' header");
  std::size_t n = 0;
  std::size_t m = 0;
  if (fields.size() != 2 || !parse_field(fields[0], n) || !parse_field(fields[1], m)) {
    throw ParseError(source, line_no, "header must be two non-negative integers 'n m'");
  }
  if (n == 0) throw ParseError(source, line_no, "point count must be at least 1");
  if (m == 0) throw ParseError(source, line_no, "dimension must be at least 1");

  std::vector<double> coords;
  coords.reserve(n * m);
  for (std::size_t row = 0; row < n; ++row) {
    if (!std::getline(in, line)) {
      throw ParseError(source, line_no + 1,
                       "expected " + std::to_string(n) + " rows, found " + std::to_string(row));
    }
    ++line_no;
    fields = split_fields(line);
    if (fields.size() != m) {
      throw ParseError(source, line_no,
                       "expected " + std::to_string(m) + " fields, found " +
                           std::to_string(fields.size()));
    }
    for (std::string_view field : fields) {
      double value = 0.0;
      if (!parse_field(field, value)) {
        throw ParseError(source, line_no, "malformed number '" + std::string(field) + "'");
      }
      if (!std::isfinite(value)) {
        throw ParseError(source, line_no, "non-finite value '" + std::string(field) + "'");
      }
      coords.push_back(value);
    }
  }
  while (std::getline(in, line)) {
    ++line_no;
    if (!split_fields(line).empty()) {
      throw ParseError(source, line_no, "unexpected data after " + std::to_string(n) + " rows");
    }
  }
  return PointSet(n, m, std::move(coords));
}

PointSet load_points(const std::string& path) {
  if (path.empty()) throw IoError("load_points: empty path");
  std::ifstream in(path);
  if (!in) throw IoError("load_points: cannot open '" + path + "'");
  return parse_points(in, path);
}

void write_points(const PointSet& set, std::ostream& out) {
  out << set.size() << ' ' << set.dim() << '\n';
  for (std::size_t i = 0; i < set.size(); ++i) {
    const auto p = set[i];
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (k) out << ' ';
      out << format_real(p[k]);
    }
    out << '\n';
  }
}

void save_points(const PointSet& set, const std::string& path) {
  if (path.empty()) throw IoError("save_points: empty path");
  std::ofstream out(path);
  if (!out) throw IoError("save_points: cannot open '" + path + "' for writing");
  write_points(set, out);
  out.flush();
  if (!out) throw IoError("save_points: write to '" + path + "' failed");
}

}  // namespace fastdiam
