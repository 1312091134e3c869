#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "lexconn/graph.hpp"

namespace lexconn {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Edge-list text: a "n m" header followed by m "u v" lines. Lines starting
/// with '#' and blank lines are ignored. Duplicate edges are accepted.
/// Errors carry the 1-based line number.
Graph parse_edge_list(std::string_view text);
std::string serialize_edge_list(const Graph& g);

/// graph6 (printable ASCII, 63 offset, upper triangle in column order).
/// Accepts an optional ">>graph6<<" header and trailing newline.
Graph parse_graph6(std::string_view text);
std::string serialize_graph6(const Graph& g);

enum class GraphFormat { graph6, edge_list };

/// ".g6" -> graph6, ".el" -> edge list; anything else throws ParseError.
GraphFormat format_from_extension(const std::filesystem::path& path);

/// Throws ParseError for unreadable files as well as malformed content.
Graph read_graph_file(const std::filesystem::path& path, GraphFormat format);

}  // namespace lexconn
