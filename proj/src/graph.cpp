#include "bcx/graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "bcx/errors.hpp"

namespace bcx {

namespace {

VertexMask bit(std::size_t i) { return VertexMask{1} << i; }

std::string edge_name(EdgeRef e) {
  return "{" + std::to_string(e.s) + "," + std::to_string(e.t) + "}";
}

void require_edge(const Graph& g, EdgeRef e) {
  if (!g.has_edge(e.s, e.t)) {
    throw InvalidEdge("not an edge of the graph: " + edge_name(e));
  }
}

}  // namespace

Graph::Graph(std::vector<Vertex> vertices,
             std::span<const std::pair<Vertex, Vertex>> edges)
    : labels_(std::move(vertices)) {
  std::sort(labels_.begin(), labels_.end());
  if (std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end()) {
    throw InvalidInput("duplicate vertex label");
  }
  if (labels_.size() > kMaxVertices) {
    throw BudgetExceeded("graphs are limited to 64 vertices");
  }
  adj_.assign(labels_.size(), 0);
  for (auto [a, b] : edges) {
    if (a == b) throw InvalidInput("self-loop at vertex " + std::to_string(a));
    const std::size_t i = index_of(a);
    const std::size_t j = index_of(b);
    adj_[i] |= bit(j);
    adj_[j] |= bit(i);
  }
}

bool Graph::has_vertex(Vertex v) const noexcept {
  return std::binary_search(labels_.begin(), labels_.end(), v);
}

std::size_t Graph::index_of(Vertex v) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), v);
  if (it == labels_.end() || *it != v) {
    throw UnknownVertex("unknown vertex " + std::to_string(v));
  }
  return static_cast<std::size_t>(it - labels_.begin());
}

bool Graph::has_edge(Vertex a, Vertex b) const noexcept {
  if (a == b || !has_vertex(a) || !has_vertex(b)) return false;
  return (adj_[index_of(a)] & bit(index_of(b))) != 0;
}

VertexMask Graph::all_mask() const noexcept {
  return size() == 64 ? ~VertexMask{0} : bit(size()) - 1;
}

std::size_t Graph::degree(Vertex v) const {
  return static_cast<std::size_t>(std::popcount(adj_[index_of(v)]));
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = i + 1; j < size(); ++j) {
      if (adj_[i] & bit(j)) out.emplace_back(labels_[i], labels_[j]);
    }
  }
  return out;
}

std::size_t Graph::edge_count() const noexcept {
  std::size_t twice = 0;
  for (auto row : adj_) twice += static_cast<std::size_t>(std::popcount(row));
  return twice / 2;
}

bool Graph::has_isolated_vertex() const noexcept {
  return std::any_of(adj_.begin(), adj_.end(), [](VertexMask m) { return m == 0; });
}

bool Graph::is_connected() const noexcept {
  if (empty()) return true;
  VertexMask seen = 1, frontier = 1;
  while (frontier) {
    VertexMask next = 0;
    for (VertexMask f = frontier; f; f &= f - 1) {
      next |= adj_[static_cast<std::size_t>(std::countr_zero(f))];
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == all_mask();
}

bool Graph::is_tree() const noexcept {
  return !empty() && is_connected() && edge_count() + 1 == size();
}

Graph Graph::with_edge(Vertex a, Vertex b) const {
  if (a == b) throw InvalidInput("self-loop at vertex " + std::to_string(a));
  Graph out = *this;
  const std::size_t i = index_of(a);
  const std::size_t j = index_of(b);
  out.adj_[i] |= bit(j);
  out.adj_[j] |= bit(i);
  return out;
}

Graph induced_subgraph(const Graph& g, VertexMask keep) {
  keep &= g.all_mask();
  Graph out;
  std::vector<std::size_t> old_index;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (keep & bit(i)) {
      out.labels_.push_back(g.labels_[i]);
      old_index.push_back(i);
    }
  }
  out.adj_.assign(old_index.size(), 0);
  for (std::size_t a = 0; a < old_index.size(); ++a) {
    for (std::size_t b = 0; b < old_index.size(); ++b) {
      if (g.adj_[old_index[a]] & bit(old_index[b])) out.adj_[a] |= bit(b);
    }
  }
  return out;
}

Graph delete_edge(const Graph& g, EdgeRef e) {
  require_edge(g, e);
  auto edges = g.edges();
  const auto key = std::minmax(e.s, e.t);
  std::erase(edges, std::pair<Vertex, Vertex>{key.first, key.second});
  return Graph(std::vector<Vertex>(g.vertices().begin(), g.vertices().end()), edges);
}

Graph contract_edge_simple(const Graph& g, EdgeRef e) {
  require_edge(g, e);
  const std::size_t keep = g.index_of(std::min(e.s, e.t));
  const std::size_t drop = g.index_of(std::max(e.s, e.t));
  Graph merged = g;
  VertexMask row = (g.adj_[keep] | g.adj_[drop]) & ~bit(keep) & ~bit(drop);
  merged.adj_[keep] = row;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i == keep) continue;
    if (row & bit(i)) {
      merged.adj_[i] |= bit(keep);
    } else {
      merged.adj_[i] &= ~bit(keep);
    }
  }
  return induced_subgraph(merged, g.all_mask() & ~bit(drop));
}

Graph extract_edge(const Graph& g, EdgeRef e) {
  require_edge(g, e);
  return induced_subgraph(g, g.all_mask() & ~bit(g.index_of(e.s)) & ~bit(g.index_of(e.t)));
}

Graph delete_vertex(const Graph& g, Vertex s) {
  return induced_subgraph(g, g.all_mask() & ~bit(g.index_of(s)));
}

std::vector<Graph> components(const Graph& g) {
  std::vector<Graph> out;
  VertexMask remaining = g.all_mask();
  while (remaining) {
    VertexMask seen = remaining & (~remaining + 1);
    VertexMask frontier = seen;
    while (frontier) {
      VertexMask next = 0;
      for (VertexMask f = frontier; f; f &= f - 1) {
        next |= g.neighbors(static_cast<std::size_t>(std::countr_zero(f)));
      }
      frontier = next & ~seen;
      seen |= next;
    }
    out.push_back(induced_subgraph(g, seen));
    remaining &= ~seen;
  }
  return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Vertex> vertices(a.vertices().begin(), a.vertices().end());
  for (Vertex v : b.vertices()) {
    if (a.has_vertex(v)) throw InvalidInput("labels overlap at " + std::to_string(v));
    vertices.push_back(v);
  }
  auto edges = a.edges();
  auto more = b.edges();
  edges.insert(edges.end(), more.begin(), more.end());
  return Graph(std::move(vertices), edges);
}

Graph relabel(const Graph& g, std::span<const Vertex> new_labels) {
  if (new_labels.size() != g.size()) {
    throw InvalidInput("relabel needs one label per vertex");
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (auto [u, v] : g.edges()) {
    edges.emplace_back(new_labels[g.index_of(u)], new_labels[g.index_of(v)]);
  }
  return Graph(std::vector<Vertex>(new_labels.begin(), new_labels.end()), edges);
}

std::string to_string(const Graph& g) {
  std::ostringstream os;
  os << "V={";
  for (std::size_t i = 0; i < g.size(); ++i) os << (i ? "," : "") << g.label(i);
  os << "} E={";
  bool first = true;
  for (auto [u, v] : g.edges()) {
    os << (first ? "" : ",") << u << "-" << v;
    first = false;
  }
  os << "}";
  return os.str();
}

}  // namespace bcx
