#include "iset/graph_io.hpp"

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

namespace iset {

namespace {

constexpr std::string_view kGraph6Prefix = ">>graph6<<";

bool valid_graph6_byte(char c) {
  return c >= 63 && c <= 126;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  // Trailing line terminators are tolerated; offsets refer to the original text.
  std::size_t base = 0;
  if (text.substr(0, kGraph6Prefix.size()) == kGraph6Prefix) {
    base = kGraph6Prefix.size();
    text.remove_prefix(base);
  }
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);

  if (text.empty()) throw ParseError("empty graph6 input", base);
  std::size_t pos = 0;
  long n = 0;
  if (text[0] == 126) {
    // Long size form: '~' followed by three 6-bit bytes (18-bit n). A second
    // '~' would start the 36-bit form, far beyond our capacity.
    if (text.size() < 4) throw ParseError("truncated graph6 size header", base + text.size());
    if (text[1] == 126) throw CapacityError("graph6 input beyond 64 vertices");
    n = 0;
    for (std::size_t k = 1; k <= 3; ++k) {
      if (!valid_graph6_byte(text[k])) {
        throw ParseError("invalid graph6 size byte", base + k);
      }
      n = (n << 6) | (text[k] - 63);
    }
    pos = 4;
  } else {
    if (!valid_graph6_byte(text[0])) throw ParseError("invalid graph6 leading byte", base);
    n = text[0] - 63;
    pos = 1;
  }
  if (n > kMaxVertices) {
    throw CapacityError("graph6 input has " + std::to_string(n) + " vertices; capacity is " +
                        std::to_string(kMaxVertices));
  }

  Graph g(static_cast<int>(n));
  long total_bits = n * (n - 1) / 2;
  std::size_t need = static_cast<std::size_t>((total_bits + 5) / 6);
  if (text.size() - pos < need) {
    throw ParseError("truncated graph6 bitstream", base + text.size());
  }
  if (text.size() - pos > need) {
    throw ParseError("trailing bytes after graph6 bitstream", base + pos + need);
  }

  long bit_index = 0;
  int column = 1, row = 0;
  for (std::size_t k = pos; k < pos + need; ++k) {
    char c = text[k];
    if (!valid_graph6_byte(c)) throw ParseError("graph6 byte out of range", base + k);
    int group = c - 63;
    for (int b = 5; b >= 0 && bit_index < total_bits; --b, ++bit_index) {
      if ((group >> b) & 1) g.add_edge(row, column);
      if (++row == column) {
        row = 0;
        ++column;
      }
    }
  }
  return g;
}

std::string emit_graph6(const Graph& g) {
  int n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int group = 0, bits = 0;
  for (int column = 1; column < n; ++column) {
    for (int row = 0; row < column; ++row) {
      group = (group << 1) | (g.has_edge(row, column) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(group + 63));
        group = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((group << (6 - bits)) + 63));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::vector<std::pair<std::string, std::size_t>> lines;  // content, byte offset
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(start, end - start));
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
    if (!blank) lines.emplace_back(line, start);
    if (end == text.size()) break;
    start = end + 1;
  }
  if (lines.empty()) throw ParseError("edge list has no header line", 0);

  auto parse_two_ints = [](const std::string& line, std::size_t offset, long& a, long& b) {
    std::istringstream in(line);
    std::string extra;
    if (!(in >> a >> b) || (in >> extra)) {
      throw ParseError("expected two integers: '" + line + "'", offset);
    }
  };

  long n = 0, m = 0;
  parse_two_ints(lines[0].first, lines[0].second, n, m);
  if (n < 0 || n > kMaxVertices) {
    throw CapacityError("edge list declares " + std::to_string(n) + " vertices");
  }
  if (m < 0 || static_cast<std::size_t>(m) + 1 != lines.size()) {
    throw ParseError("edge list declares " + std::to_string(m) + " edges but has " +
                         std::to_string(lines.size() - 1) + " edge lines",
                     lines[0].second);
  }
  Graph g(static_cast<int>(n));
  for (std::size_t k = 1; k < lines.size(); ++k) {
    long u = 0, v = 0;
    parse_two_ints(lines[k].first, lines[k].second, u, v);
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw ParseError("edge endpoint out of range: '" + lines[k].first + "'", lines[k].second);
    }
    if (u == v) throw ParseError("self-loop: '" + lines[k].first + "'", lines[k].second);
    if (g.has_edge(static_cast<int>(u), static_cast<int>(v))) {
      throw ParseError("duplicate edge: '" + lines[k].first + "'", lines[k].second);
    }
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  return g;
}

std::string emit_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for_each_edge(g, [&](int u, int v) { out << u << ' ' << v << '\n'; });
  return out.str();
}

Graph parse_graph_auto(std::string_view text) {
  // First data character decides: digits can only start an edge list, since
  // graph6 payload bytes are all >= '?'. Comment-only lines are skipped.
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    std::size_t data = line.find_first_not_of(" \t\r");
    if (data != std::string_view::npos && line[data] != '#') {
      if (std::isdigit(static_cast<unsigned char>(line[data]))) return parse_edge_list(text);
      return parse_graph6(text.substr(pos + data));
    }
    pos = end + 1;
  }
  throw ParseError("empty graph input", 0);
}

}  // namespace iset
