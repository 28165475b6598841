#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "sysgraph/colored_graph.hpp"
#include "sysgraph/simplicial.hpp"

namespace sysgraph::io {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::string_view kGraphFormat = "pcg-1";
inline constexpr std::string_view kComplexFormat = "scx-1";

/// Canonical pcg-1 text: no whitespace, edges in canonical order, one
/// trailing newline.
std::string graph_to_json(const ColoredGraph& g);
/// Parses pcg-1 and validates. Throws FormatError or GraphError.
ColoredGraph graph_from_json(std::string_view text);

std::string complex_to_json(const RawComplex& c);
RawComplex complex_from_json(std::string_view text);

/// Sniffs the "format" field.
std::string detect_format(std::string_view text);

std::string graph_to_dot(const ColoredGraph& g);
std::string complex_to_dot(const ChromaticComplex& c);
std::string graph_to_csv_edges(const ColoredGraph& g);
std::string complex_to_csv_edges(const ChromaticComplex& c);

/// Palette entry for a 1-based color; cycles through 12 names.
std::string_view palette(Color c);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace sysgraph::io
