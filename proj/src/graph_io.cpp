#include <algorithm>
#include <cctype>
#include <charconv>

#include "qspectra/graph.hpp"

namespace qspectra {

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + what),
      line_(line),
      column_(column) {}

namespace {

constexpr char kGraph6Offset = 63;
constexpr std::string_view kGraph6Header = ">>graph6<<";
constexpr std::size_t kMaxLongOrder = 258047;

}  // namespace

Graph parse_graph6(std::string_view text, std::size_t line_number) {
  std::size_t column = 1;
  if (text.starts_with(kGraph6Header)) {
    text.remove_prefix(kGraph6Header.size());
    column += kGraph6Header.size();
  }
  while (!text.empty() && (text.back() == '\r' || text.back() == '\n')) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty graph6 line", line_number, column);

  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) {
      throw ParseError("character out of graph6 range (63..126)", line_number, column + i);
    }
  }

  auto value = [&](std::size_t i) { return static_cast<std::size_t>(text[i] - kGraph6Offset); };
  std::size_t n = 0;
  std::size_t pos = 0;
  if (value(0) < 63) {
    n = value(0);
    pos = 1;
  } else {
    if (text.size() < 4) throw ParseError("truncated order header", line_number, column);
    if (value(1) == 63) {
      throw ParseError("orders above 258047 are not supported", line_number, column + 1);
    }
    n = (value(1) << 12) | (value(2) << 6) | value(3);
    if (n < 63) throw ParseError("long order header used for n < 63", line_number, column);
    pos = 4;
  }
  if (n == 0) throw ParseError("graph6 encodes an empty vertex set", line_number, column);

  const std::size_t bits = n * (n - 1) / 2;
  const std::size_t expected = (bits + 5) / 6;
  if (text.size() - pos != expected) {
    throw ParseError("length header says n=" + std::to_string(n) + " (" + std::to_string(expected) +
                         " data bytes) but found " + std::to_string(text.size() - pos),
                     line_number, column + pos);
  }

  std::vector<VertexPair> pairs;
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      const std::size_t byte = value(pos + k / 6);
      if ((byte >> (5 - k % 6)) & 1U) {
        pairs.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  if (bits % 6 != 0) {
    const std::size_t last = value(text.size() - 1);
    const std::size_t pad = 6 - bits % 6;
    if ((last & ((1U << pad) - 1)) != 0) {
      throw ParseError("nonzero padding bits", line_number, column + text.size() - 1);
    }
  }
  return Graph::from_edges(n, pairs);
}

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kMaxLongOrder) throw std::invalid_argument("graph too large for graph6");
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + kGraph6Offset));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + kGraph6Offset));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kGraph6Offset));
    out.push_back(static_cast<char>((n & 63) + kGraph6Offset));
  }
  const std::size_t bits = n * (n - 1) / 2;
  std::vector<unsigned char> groups((bits + 5) / 6, 0);
  // Column-major upper triangle: bit index of (i, j), i < j, is j(j-1)/2 + i.
  for (const auto& e : g.edges()) {
    const std::size_t k = static_cast<std::size_t>(e.v) * (e.v - 1) / 2 + e.u;
    groups[k / 6] |= static_cast<unsigned char>(1U << (5 - k % 6));
  }
  for (auto b : groups) out.push_back(static_cast<char>(b + kGraph6Offset));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::optional<std::size_t> n;
  std::vector<VertexPair> pairs;
  std::vector<std::pair<std::size_t, std::size_t>> where;  // line/column of each pair
  std::size_t line_number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_number;
    start = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::vector<std::pair<std::uint64_t, std::size_t>> fields;  // value, column
    std::size_t i = 0;
    while (i < line.size()) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      std::uint64_t v = 0;
      auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), v);
      if (ec != std::errc() || (ptr != line.data() + line.size() &&
                                !std::isspace(static_cast<unsigned char>(*ptr)))) {
        throw ParseError("expected a non-negative integer", line_number, i + 1);
      }
      fields.emplace_back(v, i + 1);
      i = static_cast<std::size_t>(ptr - line.data());
    }
    if (fields.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (!n) {
      if (fields.size() != 1) throw ParseError("first line must hold the vertex count", line_number, 1);
      if (fields[0].first == 0 || fields[0].first > 10000) {
        throw ParseError("vertex count must be in 1..10000", line_number, fields[0].second);
      }
      n = static_cast<std::size_t>(fields[0].first);
    } else {
      if (fields.size() != 2) throw ParseError("expected an edge 'u v'", line_number, fields[0].second);
      for (const auto& [v, col] : fields) {
        if (v >= *n) throw ParseError("endpoint out of range", line_number, col);
      }
      if (fields[0].first == fields[1].first) {
        throw ParseError("loop edge", line_number, fields[0].second);
      }
      pairs.emplace_back(static_cast<Vertex>(fields[0].first), static_cast<Vertex>(fields[1].first));
    }
    if (end == text.size()) break;
  }
  if (!n) throw ParseError("missing vertex count", std::max<std::size_t>(line_number, 1), 1);
  return Graph::from_edges(*n, pairs);
}

std::string to_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + "\n";
  for (const auto& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

std::vector<Graph> parse_graphs(std::string_view text, GraphFormat format) {
  if (format == GraphFormat::Auto) {
    // graph6 bytes live in 63..126, so a leading digit means an edge list.
    format = GraphFormat::Graph6;
    for (char c : text) {
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      if (c == '#' || std::isdigit(static_cast<unsigned char>(c))) format = GraphFormat::EdgeList;
      break;
    }
  }
  if (format == GraphFormat::EdgeList) return {parse_edge_list(text)};

  std::vector<Graph> graphs;
  std::size_t line_number = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_number;
    start = end + 1;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
    if (line.empty()) continue;
    graphs.push_back(parse_graph6(line, line_number));
  }
  if (graphs.empty()) throw ParseError("empty line", 1, 1);
  return graphs;
}

}  // namespace qspectra
