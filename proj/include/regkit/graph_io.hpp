#pragma once

#include <charconv>
#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "regkit/errors.hpp"
#include "regkit/graph.hpp"

namespace regkit {

enum class GraphFormat { edge_list, graph6 };

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    if (i >= s.size()) break;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::size_t parse_index(std::string_view tok, std::size_t line) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError("line " + std::to_string(line) + ": malformed token '" + std::string(tok) + "'");
  return value;
}

inline std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      if (start < text.size()) lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  return lines;
}

}  // namespace detail

/// Edge list: lines "u v" (0-based), '#' comments, blank lines, optional
/// header "n <count>". Without a header the order is max index + 1.
inline Graph parse_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  std::optional<std::size_t> declared;
  std::size_t max_index = 0;
  bool any = false;
  const auto lines = detail::split_lines(text);
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    auto line = lines[ln];
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto toks = detail::split_ws(detail::trim(line));
    if (toks.empty()) continue;
    if (toks[0] == "n") {
      if (toks.size() != 2 || declared || any)
        throw ParseError("line " + std::to_string(ln + 1) + ": malformed header");
      declared = detail::parse_index(toks[1], ln + 1);
      if (*declared > kMaxVertices)
        throw ParseError("line " + std::to_string(ln + 1) + ": more than 1024 vertices");
      continue;
    }
    if (toks.size() != 2)
      throw ParseError("line " + std::to_string(ln + 1) + ": expected two vertex indices");
    const auto u = detail::parse_index(toks[0], ln + 1);
    const auto v = detail::parse_index(toks[1], ln + 1);
    if (u == v) throw ParseError("line " + std::to_string(ln + 1) + ": self-loop " + std::to_string(u));
    if (declared && (u >= *declared || v >= *declared))
      throw ParseError("line " + std::to_string(ln + 1) + ": vertex index exceeds header count");
    if (u >= kMaxVertices || v >= kMaxVertices)
      throw ParseError("line " + std::to_string(ln + 1) + ": vertex index exceeds 1023");
    max_index = std::max({max_index, u, v});
    any = true;
    edges.emplace_back(u, v);
  }
  const std::size_t n = declared ? *declared : (any ? max_index + 1 : 0);
  return Graph::from_edges(n, edges);
}

/// Decodes one graph6 string (optional ">>graph6<<" prefix).
inline Graph parse_graph6(std::string_view text) {
  std::string_view s = detail::trim(text);
  if (s.starts_with(">>graph6<<")) s.remove_prefix(10);
  std::size_t pos = 0;
  auto byte_at = [&](std::size_t i) -> unsigned {
    if (i >= s.size()) throw ParseError("byte " + std::to_string(i) + ": unexpected end of graph6 data");
    const auto c = static_cast<unsigned char>(s[i]);
    if (c < 63 || c > 126) throw ParseError("byte " + std::to_string(i) + ": character outside the graph6 range");
    return c - 63U;
  };
  std::size_t n = 0;
  if (s.empty()) throw ParseError("byte 0: empty graph6 string");
  if (static_cast<unsigned char>(s[0]) == 126) {
    if (s.size() > 1 && static_cast<unsigned char>(s[1]) == 126)
      throw ParseError("byte 1: graph6 orders above 258047 are not supported");
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | byte_at(i);
    pos = 4;
  } else {
    n = byte_at(0);
    pos = 1;
  }
  if (n > kMaxVertices) throw ParseError("byte 0: more than 1024 vertices");
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t need = (bits + 5) / 6;
  if (s.size() != pos + need)
    throw ParseError("byte " + std::to_string(std::min(s.size(), pos + need)) + ": graph6 length mismatch (expected " +
                     std::to_string(pos + need) + " bytes, got " + std::to_string(s.size()) + ")");
  Graph g(n);
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      const unsigned chunk = byte_at(pos + k / 6);
      if ((chunk >> (5 - k % 6)) & 1U) g.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    const unsigned last = byte_at(pos + need - 1);
    const unsigned pad_mask = (1U << (6 - bits % 6)) - 1;
    if (last & pad_mask) throw ParseError("byte " + std::to_string(pos + need - 1) + ": nonzero graph6 padding bits");
  }
  return g;
}

inline std::string encode_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63U) + 63));
  }
  unsigned chunk = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.has_edge(i, j) ? 1U : 0U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + 63));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + 63));
  return out;
}

inline Graph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::graph6 ? parse_graph6(text) : parse_edge_list(text);
}

/// One graph6 string per non-blank line; '#' lines skipped.
inline std::vector<Graph> parse_graph6_corpus(std::string_view text) {
  std::vector<Graph> out;
  const auto lines = detail::split_lines(text);
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    const auto line = detail::trim(lines[ln]);
    if (line.empty() || line.front() == '#') continue;
    try {
      out.push_back(parse_graph6(line));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(ln + 1) + ": " + e.what());
    }
  }
  return out;
}

/// Edge-list text for `g`, always with an "n" header.
inline std::string format_edge_list(const Graph& g) {
  std::ostringstream os;
  os << "n " << g.order() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

}  // namespace regkit
