#include "lexconn/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace lexconn {

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

bool to_number(std::string_view tok, std::uint64_t& out) {
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc{} && ptr == tok.data() + tok.size();
}

[[noreturn]] void fail_at(std::size_t line, const std::string& msg) {
  throw ParseError("line " + std::to_string(line) + ": " + msg);
}

constexpr int kOffset = 63;

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  std::optional<std::uint64_t> n;
  std::uint64_t m = 0, seen = 0;
  Graph g;

  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    auto line = trim(text.substr(pos, nl - pos));
    pos = nl + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    auto tokens = split_ws(line);
    if (tokens.size() != 2) fail_at(line_no, "expected two integers");
    std::uint64_t a = 0, b = 0;
    if (!to_number(tokens[0], a) || !to_number(tokens[1], b))
      fail_at(line_no, "expected two non-negative integers");

    if (!n) {
      if (a > 1'000'000) fail_at(line_no, "vertex count too large");
      n = a;
      m = b;
      g = Graph(a);
      continue;
    }
    if (seen == m) fail_at(line_no, "more edge lines than declared (" + std::to_string(m) + ")");
    if (a >= *n || b >= *n) fail_at(line_no, "vertex id out of range");
    if (a == b) fail_at(line_no, "self-loop");
    g.add_edge(static_cast<Vertex>(a), static_cast<Vertex>(b));
    ++seen;
  }
  if (!n) throw ParseError("line 1: missing \"n m\" header");
  if (seen != m)
    throw ParseError("line " + std::to_string(line_no) + ": expected " + std::to_string(m) +
                     " edge lines, found " + std::to_string(seen));
  return g;
}

std::string serialize_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  constexpr std::string_view header = ">>graph6<<";
  if (text.starts_with(header)) text.remove_prefix(header.size());
  if (text.empty()) throw ParseError("graph6: empty input");

  for (char c : text)
    if (c < kOffset || c > 126)
      throw ParseError(std::string("graph6: invalid character '") + c + "'");

  std::size_t i = 0;
  auto take = [&](std::size_t count) {
    if (i + count > text.size()) throw ParseError("graph6: truncated vertex count");
    std::uint64_t v = 0;
    for (std::size_t k = 0; k < count; ++k) v = (v << 6) | std::uint64_t(text[i++] - kOffset);
    return v;
  };

  std::uint64_t n;
  if (text[0] != 126) {
    n = take(1);
  } else if (text.size() > 1 && text[1] != 126) {
    ++i;
    n = take(3);
  } else {
    i += 2;
    n = take(6);
  }
  if (n > 1'000'000) throw ParseError("graph6: vertex count too large");

  const std::uint64_t bits = n * (n - (n ? 1 : 0)) / 2;
  const std::uint64_t chars = (bits + 5) / 6;
  if (text.size() - i < chars) throw ParseError("graph6: truncated bit stream");
  if (text.size() - i > chars) throw ParseError("graph6: trailing characters");

  Graph g(n);
  std::uint64_t k = 0;
  for (Vertex col = 1; col < n; ++col) {
    for (Vertex row = 0; row < col; ++row, ++k) {
      int chunk = text[i + k / 6] - kOffset;
      if (chunk & (1 << (5 - k % 6))) g.add_edge(row, col);
    }
  }
  return g;
}

std::string serialize_graph6(const Graph& g) {
  const std::uint64_t n = g.order();
  std::string out;
  auto put = [&](std::uint64_t value, int chunks) {
    for (int c = chunks - 1; c >= 0; --c) out += char(kOffset + ((value >> (6 * c)) & 63));
  };
  if (n <= 62) {
    put(n, 1);
  } else if (n <= 258047) {
    out += char(126);
    put(n, 3);
  } else {
    out += "~~";
    put(n, 6);
  }

  int chunk = 0, used = 0;
  for (Vertex col = 1; col < n; ++col) {
    for (Vertex row = 0; row < col; ++row) {
      chunk = (chunk << 1) | (g.adjacent(row, col) ? 1 : 0);
      if (++used == 6) {
        out += char(kOffset + chunk);
        chunk = used = 0;
      }
    }
  }
  if (used) out += char(kOffset + (chunk << (6 - used)));
  return out;
}

GraphFormat format_from_extension(const std::filesystem::path& path) {
  auto ext = path.extension().string();
  if (ext == ".g6") return GraphFormat::graph6;
  if (ext == ".el") return GraphFormat::edge_list;
  throw ParseError("cannot infer format from extension '" + ext + "' (use .g6 or .el)");
}

Graph read_graph_file(const std::filesystem::path& path, GraphFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  auto text = buf.str();
  try {
    if (format == GraphFormat::edge_list) return parse_edge_list(text);
    auto first = text.substr(0, text.find('\n'));
    return parse_graph6(first);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

}  // namespace lexconn
