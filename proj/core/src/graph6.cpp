#include "spectra_chi/graph6.hpp"

#include <cstdint>
#include <stdexcept>

#include "spectra_chi/error.hpp"

namespace spectra_chi {
namespace {

constexpr int kOffset = 63;
constexpr int kMaxChar = 126;
constexpr std::string_view kHeader = ">>graph6<<";
constexpr std::uint64_t kMaxOrder = 68719476735ULL;  // 2^36 - 1

int sextet(char ch, std::size_t pos) {
  const int value = static_cast<unsigned char>(ch);
  if (value < kOffset || value > kMaxChar) {
    throw ParseError("graph6: byte " + std::to_string(value) + " at offset " +
                     std::to_string(pos) + " is outside 63..126");
  }
  return value - kOffset;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  if (line.substr(0, kHeader.size()) == kHeader) line.remove_prefix(kHeader.size());
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r' ||
                           line.back() == ' ' || line.back() == '\t')) {
    line.remove_suffix(1);
  }
  if (line.empty()) throw ParseError("graph6: empty line");

  // N(n): one byte for n <= 62, 126 + 3 bytes for n <= 258047, else 126 126 + 6 bytes.
  std::size_t pos = 0;
  std::uint64_t n = 0;
  const auto read_header = [&](std::size_t bytes) {
    if (line.size() < pos + bytes) throw ParseError("graph6: truncated size header");
    for (std::size_t i = 0; i < bytes; ++i, ++pos) {
      n = (n << 6) | static_cast<std::uint64_t>(sextet(line[pos], pos));
    }
  };
  if (static_cast<unsigned char>(line[0]) != kMaxChar) {
    read_header(1);
  } else if (line.size() >= 2 && static_cast<unsigned char>(line[1]) == kMaxChar) {
    pos = 2;
    read_header(6);
    if (n <= 258047) throw ParseError("graph6: non-canonical 8-byte size header");
  } else {
    pos = 1;
    read_header(3);
    if (n <= 62) throw ParseError("graph6: non-canonical 4-byte size header");
  }

  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t body = (bits + 5) / 6;
  if (line.size() - pos != body) {
    throw ParseError("graph6: expected " + std::to_string(body) + " adjacency bytes for n=" +
                     std::to_string(n) + ", found " + std::to_string(line.size() - pos));
  }

  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (std::uint64_t j = 1; j < n; ++j) {
    for (std::uint64_t i = 0; i < j; ++i, ++k) {
      const int byte = sextet(line[pos + k / 6], pos + k / 6);
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (bits % 6 != 0) {
    const int last = sextet(line.back(), line.size() - 1);
    const int pad = static_cast<int>(6 - bits % 6);
    if ((last & ((1 << pad) - 1)) != 0) throw ParseError("graph6: nonzero padding bits");
  }
  return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

std::string write_graph6(const Graph& g) {
  const std::uint64_t n = g.order();
  if (n > kMaxOrder) throw std::invalid_argument("graph6: order exceeds 2^36 - 1");
  std::string out;
  const auto put = [&](std::uint64_t value, int sextets) {
    for (int s = sextets - 1; s >= 0; --s) {
      out.push_back(static_cast<char>(((value >> (6 * s)) & 63U) + kOffset));
    }
  };
  if (n <= 62) {
    put(n, 1);
  } else if (n <= 258047) {
    out.push_back(static_cast<char>(kMaxChar));
    put(n, 3);
  } else {
    out.append(2, static_cast<char>(kMaxChar));
    put(n, 6);
  }
  int acc = 0;
  int filled = 0;
  for (std::uint64_t j = 1; j < n; ++j) {
    for (std::uint64_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kOffset));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kOffset));
  return out;
}

std::vector<Graph6Record> read_graph6_lines(std::istream& in) {
  std::vector<Graph6Record> records;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    records.push_back({number, line});
  }
  return records;
}

}  // namespace spectra_chi
