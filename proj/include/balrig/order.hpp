#pragma once

#include <cstddef>
#include <vector>

#include "balrig/graph.hpp"

namespace balrig {

/// Total order on a colored vertex set that restricts to the natural index
/// order on every color. For graphs there are two colors (A, B).
class VertexOrder {
 public:
  VertexOrder() = default;
  /// Throws InvalidInput unless `sequence` lists every vertex exactly once and
  /// each color appears in increasing index order.
  VertexOrder(std::vector<int> color_sizes, std::vector<Vertex> sequence);

  /// Round-robin by rank: first vertex of each color, then the second of each
  /// color, and so on. It is (l,...,l)-admissible for every l.
  static VertexOrder interleaved(std::vector<int> color_sizes);

  /// Graph order listing 1..k, then 1'..l', then the remaining A and B
  /// vertices interleaved. Requires k <= a_size and l <= b_size.
  static VertexOrder admissible(int a_size, int b_size, int k, int l);

  const std::vector<int>& color_sizes() const { return color_sizes_; }
  const std::vector<Vertex>& sequence() const { return sequence_; }
  std::size_t size() const { return sequence_.size(); }
  int position(const Vertex& v) const { return position_[v.color][v.index]; }

  /// [k] u [l'] is an initial segment (two-color orders only).
  bool is_admissible(int k, int l) const;
  /// The least l vertices of every color form an initial segment.
  bool is_uniformly_admissible(int l) const;

  bool operator==(const VertexOrder& other) const {
    return color_sizes_ == other.color_sizes_ && sequence_ == other.sequence_;
  }

 private:
  std::vector<int> color_sizes_;
  std::vector<Vertex> sequence_;
  std::vector<std::vector<int>> position_;
};

/// Order for cone_left(g): the new A-vertex 0 first, then `order` with A
/// indices shifted by one.
VertexOrder cone_left_order(const VertexOrder& order);
VertexOrder cone_right_order(const VertexOrder& order);

/// <_lex key of edge ab': positions of the earlier and later endpoint.
struct EdgeKey {
  int first;
  int second;
  auto operator<=>(const EdgeKey&) const = default;
};
EdgeKey lex_key(const VertexOrder& order, const Edge& e);

/// All pairs of K_{a_size,b_size} sorted by <_lex.
std::vector<Edge> lex_sorted_pairs(const VertexOrder& order);

}  // namespace balrig
