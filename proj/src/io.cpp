#include "respcut/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "respcut/generators.hpp"

namespace respcut {

namespace {

std::string_view strip_comment(std::string_view line) {
  if (auto pos = line.find('#'); pos != std::string_view::npos) line = line.substr(0, pos);
  return line;
}

std::vector<std::string_view> tokens(std::string_view text, std::string_view separators) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && separators.find(text[i]) != std::string_view::npos) ++i;
    std::size_t j = i;
    while (j < text.size() && separators.find(text[j]) == std::string_view::npos) ++j;
    if (j > i) out.push_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

template <class T>
bool parse_number(std::string_view token, T& value) {
  const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  return ec == std::errc{} && end == token.data() + token.size();
}

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::kParse, "line " + std::to_string(line) + ": " + what, line);
}

constexpr std::string_view kSpace = " \t\r\n";

}  // namespace

Graph parse_graph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t n = 0, m = 0;
  std::vector<EdgeSpec> edges;
  std::vector<std::size_t> edge_lines;

  while (std::getline(in, line)) {
    ++line_no;
    const auto fields = tokens(strip_comment(line), kSpace);
    if (fields.empty()) continue;
    if (!have_header) {
      if (fields.size() != 2 || !parse_number(fields[0], n) || !parse_number(fields[1], m))
        parse_error(line_no, "expected header 'n m'");
      have_header = true;
      edges.reserve(m);
      continue;
    }
    if (edges.size() == m) parse_error(line_no, "more than m = " + std::to_string(m) + " edges");
    EdgeSpec e;
    if (fields.size() < 2 || fields.size() > 3 || !parse_number(fields[0], e.u) ||
        !parse_number(fields[1], e.v) || (fields.size() == 3 && !parse_number(fields[2], e.weight)))
      parse_error(line_no, "expected edge 'u v [w]'");
    edges.push_back(e);
    edge_lines.push_back(line_no);
  }
  if (!have_header) parse_error(line_no, "missing header 'n m'");
  if (edges.size() != m)
    parse_error(line_no, "expected " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));

  try {
    return Graph(n, edges);
  } catch (const Error& err) {
    if (err.detail() && *err.detail() < edge_lines.size()) {
      const auto at = edge_lines[*err.detail()];
      throw Error(err.code(), "line " + std::to_string(at) + ": " + err.what(), *err.detail());
    }
    throw;
  }
}

Graph load_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open graph file '" + path.string() + "'");
  return parse_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) {
    out << e.u << ' ' << e.v;
    if (e.weight != 1) out << ' ' << e.weight;
    out << '\n';
  }
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<Vertex> parse_vertex_list(std::string_view text) {
  std::vector<Vertex> out;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    for (auto tok : tokens(strip_comment(text.substr(start, end - start)), ", \t\r")) {
      Vertex v = 0;
      if (!parse_number(tok, v)) parse_error(line_no, "bad vertex id '" + std::string(tok) + "'");
      out.push_back(v);
    }
    start = end + 1;
  }
  return out;
}

std::vector<Vertex> vertex_list_argument(std::string_view arg) {
  if (!arg.empty() && arg.front() == '@') return parse_vertex_list(read_text_file(arg.substr(1)));
  return parse_vertex_list(arg);
}

std::vector<EdgeId> resolve_tree_edges(const Graph& g,
                                       const std::vector<std::pair<Vertex, Vertex>>& pairs) {
  std::map<std::pair<Vertex, Vertex>, std::vector<EdgeId>> available;
  for (std::size_t i = g.edge_count(); i-- > 0;) {
    const auto& e = g.edge(static_cast<EdgeId>(i));
    available[{std::min(e.u, e.v), std::max(e.u, e.v)}].push_back(static_cast<EdgeId>(i));
  }
  std::vector<EdgeId> out;
  out.reserve(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto [u, v] = pairs[i];
    auto it = available.find({std::min(u, v), std::max(u, v)});
    if (it == available.end() || it->second.empty())
      throw Error(ErrorCode::kInvalidArgument,
                  "tree edge " + std::to_string(u) + "," + std::to_string(v) + " is not in the graph",
                  i);
    out.push_back(it->second.back());
    it->second.pop_back();
  }
  return out;
}

RootedSpanningTree tree_from_spec(const Graph& g, std::string_view spec, Vertex root,
                                  std::uint64_t seed) {
  if (spec == "bfs" || spec == "dfs" || spec == "uniform")
    return gen_spanning_tree(g, root, seed, parse_tree_strategy(spec));

  std::string text;
  if (!spec.empty() && spec.front() == '@') {
    text = read_text_file(spec.substr(1));
  } else {
    text = std::string(spec);
  }

  std::vector<std::pair<Vertex, Vertex>> pairs;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    ++line_no;
    const auto line = strip_comment(std::string_view(text).substr(start, end - start));
    for (auto item : tokens(line, ";")) {
      const auto ends = tokens(item, ", \t\r");
      if (ends.empty()) continue;
      Vertex u = 0, v = 0;
      if (ends.size() != 2 || !parse_number(ends[0], u) || !parse_number(ends[1], v))
        parse_error(line_no, "bad tree edge '" + std::string(item) + "'");
      pairs.emplace_back(u, v);
    }
    start = end + 1;
  }
  return RootedSpanningTree(g, resolve_tree_edges(g, pairs), root);
}

}  // namespace respcut
