#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace bcx {

/// External vertex label. Labels are kept stable across edge operations so
/// that words over one graph can be compared with words over another.
using Vertex = std::uint32_t;

/// Subset of vertex *indices* of a graph (bit i = i-th smallest label).
using VertexMask = std::uint64_t;

inline constexpr std::size_t kMaxVertices = 64;

/// A pair of vertices. Graph operations treat it as unordered; the
/// trace-order membership test `in_b_e` reads it as ordered (s, t).
struct EdgeRef {
  Vertex s;
  Vertex t;
};

/// Finite simple graph. Storage is dense: vertex i is the i-th smallest
/// label and adjacency rows are bitsets over indices. Immutable once built.
class Graph {
 public:
  Graph() = default;

  /// Vertices may be given in any order; duplicates are rejected. Each edge
  /// must join two distinct listed vertices; repeated edges collapse.
  Graph(std::vector<Vertex> vertices,
        std::span<const std::pair<Vertex, Vertex>> edges);
  explicit Graph(std::vector<Vertex> vertices)
      : Graph(std::move(vertices), {}) {}

  std::size_t size() const noexcept { return labels_.size(); }
  bool empty() const noexcept { return labels_.empty(); }

  std::span<const Vertex> vertices() const noexcept { return labels_; }
  Vertex label(std::size_t index) const { return labels_.at(index); }
  bool has_vertex(Vertex v) const noexcept;
  /// Throws UnknownVertex.
  std::size_t index_of(Vertex v) const;

  bool has_edge(Vertex a, Vertex b) const noexcept;
  /// Adjacency row of the vertex at `index`, as an index mask.
  VertexMask neighbors(std::size_t index) const noexcept { return adj_[index]; }
  VertexMask all_mask() const noexcept;
  std::size_t degree(Vertex v) const;

  /// Edges as (smaller label, larger label), sorted.
  std::vector<std::pair<Vertex, Vertex>> edges() const;
  std::size_t edge_count() const noexcept;

  bool has_isolated_vertex() const noexcept;
  bool is_connected() const noexcept;
  bool is_tree() const noexcept;

  Graph with_edge(Vertex a, Vertex b) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<Vertex> labels_;
  std::vector<VertexMask> adj_;

  friend Graph induced_subgraph(const Graph& g, VertexMask keep);
  friend Graph contract_edge_simple(const Graph& g, EdgeRef e);
};

/// G - e. Throws InvalidEdge.
Graph delete_edge(const Graph& g, EdgeRef e);

/// G / e with loops and parallel edges removed. The merged vertex keeps the
/// smaller label of {s, t}. Throws InvalidEdge.
Graph contract_edge_simple(const Graph& g, EdgeRef e);

/// G - [e]: removes both endpoints. Throws InvalidEdge.
Graph extract_edge(const Graph& g, EdgeRef e);

/// G \ s. Throws UnknownVertex.
Graph delete_vertex(const Graph& g, Vertex s);

Graph induced_subgraph(const Graph& g, VertexMask keep);

/// Connected components, ordered by their smallest label.
std::vector<Graph> components(const Graph& g);

/// Union of two graphs on disjoint label sets. Throws InvalidInput on overlap.
Graph disjoint_union(const Graph& a, const Graph& b);

/// Same graph with vertex index i renamed to new_labels[i].
Graph relabel(const Graph& g, std::span<const Vertex> new_labels);

/// Default maximum size for exact canonical keys.
inline constexpr std::size_t kCanonicalLimit = 10;

/// Byte string that is equal for two graphs iff they are isomorphic.
/// Throws BudgetExceeded when |G| > limit.
std::string canonical_key(const Graph& g, std::size_t limit = kCanonicalLimit);

/// One representative per isomorphism class of graphs on exactly n
/// vertices (labels 1..n). n <= 7.
std::vector<Graph> isomorphism_classes(std::size_t n);

std::string to_string(const Graph& g);

}  // namespace bcx
