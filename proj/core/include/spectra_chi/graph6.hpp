#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "spectra_chi/graph.hpp"

namespace spectra_chi {

/// Decodes one graph6 line. A leading ">>graph6<<" header and trailing
/// whitespace are tolerated. Throws ParseError on a malformed size header,
/// a byte outside 63..126, a wrong body length or nonzero padding bits.
Graph parse_graph6(std::string_view line);

/// Encodes g as a graph6 line (no trailing newline).
std::string write_graph6(const Graph& g);

struct Graph6Record {
  std::size_t line_number = 0;  // 1-based
  std::string text;
};

/// Non-blank lines of a graph6 stream, with line numbers for diagnostics.
std::vector<Graph6Record> read_graph6_lines(std::istream& in);

}  // namespace spectra_chi
