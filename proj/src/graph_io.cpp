#include "bcx/graph_io.hpp"

#include <charconv>
#include <set>
#include <sstream>
#include <vector>

#include "bcx/errors.hpp"

namespace bcx {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

Vertex parse_label(std::string_view field, std::size_t line_no) {
  Vertex v = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw ParseError("line " + std::to_string(line_no) + ": bad vertex label '" +
                     std::string(field) + "'");
  }
  return v;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::set<Vertex> vertices;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto fields = split_fields(line);
    if (fields.empty()) continue;
    if (fields.size() > 2) {
      throw ParseError("line " + std::to_string(line_no) + ": expected 'u v' or 'v'");
    }
    const Vertex u = parse_label(fields[0], line_no);
    vertices.insert(u);
    if (fields.size() == 2) {
      const Vertex v = parse_label(fields[1], line_no);
      if (u == v) throw ParseError("line " + std::to_string(line_no) + ": self-loop");
      vertices.insert(v);
      edges.emplace_back(u, v);
    }
  }
  if (vertices.size() > kMaxVertices) throw ParseError("more than 64 vertices");
  return Graph(std::vector<Vertex>(vertices.begin(), vertices.end()), edges);
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream os;
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  for (Vertex v : g.vertices()) {
    if (g.degree(v) == 0) os << v << '\n';
  }
  return os.str();
}

}  // namespace bcx
