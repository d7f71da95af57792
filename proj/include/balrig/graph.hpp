#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace balrig {

inline constexpr int kSideA = 0;
inline constexpr int kSideB = 1;

/// A vertex of a colored vertex set: color (side) and 0-based index within
/// that color. For bipartite graphs color 0 is side A and color 1 is side B.
struct Vertex {
  int color = 0;
  int index = 0;
  auto operator<=>(const Vertex&) const = default;
};

/// Edge ab' with a in A and b in B, both 0-based.
struct Edge {
  int a = 0;
  int b = 0;
  auto operator<=>(const Edge&) const = default;
};

/// Old-to-new index maps for each side; -1 marks a removed vertex.
struct VertexMap {
  std::vector<int> a;
  std::vector<int> b;
};

/// Simple bipartite graph on sides A = {0..a_size-1}, B = {0..b_size-1}.
/// Edges are kept sorted and unique.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  /// Throws InvalidInput on out-of-range endpoints, duplicate edges, or
  /// negative side sizes.
  BipartiteGraph(int a_size, int b_size, std::vector<Edge> edges);

  /// Like the constructor but silently drops duplicate edges.
  static BipartiteGraph from_edges_dedup(int a_size, int b_size,
                                         std::vector<Edge> edges);

  int a_size() const { return a_size_; }
  int b_size() const { return b_size_; }
  int side_size(int side) const { return side == kSideA ? a_size_ : b_size_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_edge(int a, int b) const {
    return adjacency_[static_cast<std::size_t>(a) * b_size_ + b] != 0;
  }
  bool has_vertex(const Vertex& v) const;
  int degree(const Vertex& v) const;
  /// Neighbors of v (indices on the opposite side), ascending.
  std::vector<int> neighbors(const Vertex& v) const;

  bool operator==(const BipartiteGraph& other) const {
    return a_size_ == other.a_size_ && b_size_ == other.b_size_ &&
           edges_ == other.edges_;
  }

 private:
  int a_size_ = 0;
  int b_size_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint8_t> adjacency_;
};

struct GraphWithMap {
  BipartiteGraph graph;
  VertexMap map;
};

struct Contraction {
  BipartiteGraph graph;
  VertexMap map;
  std::size_t common_neighbors = 0;
};

/// Induced subgraph on all vertices except v; survivors are reindexed densely
/// in their original relative order.
GraphWithMap delete_vertex(const BipartiteGraph& g, const Vertex& v);

/// Identifies u with v (same side, u != v): u's edges move to v, duplicates
/// are dropped, u is removed. Also reports |C|, the number of common
/// neighbors of u and v in g.
Contraction contract(const BipartiteGraph& g, const Vertex& u, const Vertex& v);

/// Adds a new A-vertex joined to all of B. The new vertex gets index 0 and
/// existing A-vertices shift up by one, matching the convention that the
/// cone apex is the smallest vertex.
BipartiteGraph cone_left(const BipartiteGraph& g);
/// Adds a new B-vertex 0' joined to all of A (B indices shift up by one).
BipartiteGraph cone_right(const BipartiteGraph& g);

/// Identification of some g2-vertices with g1-vertices, per side:
/// ident.a[i] = index in g1's A that g2's A-vertex i merges into, or -1.
using Identification = VertexMap;

/// Union of g1 and g2 with identified vertices merged. g1 keeps its indices;
/// unidentified g2-vertices are appended after g1's. The returned map sends
/// g2's vertices into the union.
GraphWithMap glue(const BipartiteGraph& g1, const BipartiteGraph& g2,
                  const Identification& ident);

/// Restriction to the chosen vertices, reindexed in ascending order.
GraphWithMap induced_subgraph(const BipartiteGraph& g, const std::vector<int>& a_subset,
                              const std::vector<int>& b_subset);

/// Same vertex sets, edges present in both graphs (sides must match).
BipartiteGraph edge_intersection(const BipartiteGraph& g1, const BipartiteGraph& g2);

/// Whether every edge of h is an edge of g (sides must match).
bool is_subgraph(const BipartiteGraph& h, const BipartiteGraph& g);

}  // namespace balrig
