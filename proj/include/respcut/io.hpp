#ifndef RESPCUT_IO_HPP
#define RESPCUT_IO_HPP

// Text formats.
//
// Graph file: UTF-8, `#` starts a comment, blank lines ignored. The first
// remaining line is `n m`, followed by exactly m lines `u v [w]` with 0-based
// vertex ids and w defaulting to 1.
//
// Tree spec: `bfs`, `dfs`, `uniform`, an edge list `u,v;u,v;...`, or
// `@path` naming a file holding such an edge list (pairs may also be split
// by newlines and whitespace there).
//
// Vertex list: ids separated by commas and/or whitespace, `#` comments.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "respcut/graph.hpp"
#include "respcut/rooted_tree.hpp"

namespace respcut {

/// Throws kParse (detail = 1-based line number) or any Graph construction
/// error re-raised with the line number in its message.
Graph parse_graph(std::istream& in);
Graph load_graph_file(const std::filesystem::path& path);

void write_graph(std::ostream& out, const Graph& g);

/// Throws kParse on malformed ids.
std::vector<Vertex> parse_vertex_list(std::string_view text);

/// Reads a whole file; throws kIo when it cannot be opened.
std::string read_text_file(const std::filesystem::path& path);

/// `@path` loads the file, anything else is parsed inline.
std::vector<Vertex> vertex_list_argument(std::string_view arg);

/// Resolves a vertex pair list to edge ids, each pair claiming the lowest
/// unused edge id joining those endpoints. Throws kInvalidArgument for a
/// pair with no remaining edge.
std::vector<EdgeId> resolve_tree_edges(const Graph& g,
                                       const std::vector<std::pair<Vertex, Vertex>>& pairs);

RootedSpanningTree tree_from_spec(const Graph& g, std::string_view spec, Vertex root,
                                  std::uint64_t seed);

}  // namespace respcut

#endif  // RESPCUT_IO_HPP
