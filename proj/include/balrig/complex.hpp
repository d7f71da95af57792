#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "balrig/graph.hpp"

namespace balrig {

inline constexpr int kAbsent = -1;

/// A colorful face: for every color either the index of its vertex of that
/// color or kAbsent. Ordering is lexicographic on the (color, index) list,
/// which is the canonical serialization order.
class Face {
 public:
  Face() = default;
  explicit Face(int num_colors) : slots_(static_cast<std::size_t>(num_colors), kAbsent) {}
  explicit Face(std::vector<int> slots) : slots_(std::move(slots)) {}

  int num_colors() const { return static_cast<int>(slots_.size()); }
  int operator[](int color) const { return slots_[static_cast<std::size_t>(color)]; }
  bool has(int color) const { return (*this)[color] != kAbsent; }
  void set(int color, int index) { slots_[static_cast<std::size_t>(color)] = index; }
  void clear(int color) { slots_[static_cast<std::size_t>(color)] = kAbsent; }
  const std::vector<int>& slots() const { return slots_; }

  std::size_t size() const;
  std::uint32_t colorset() const;
  std::vector<Vertex> vertices() const;
  /// Every vertex of this face is a vertex of `other`.
  bool subset_of(const Face& other) const;
  bool disjoint_from(const Face& other) const;
  Face with(int color, int index) const;
  Face without(int color) const;
  /// Keeps only the colors in `mask`.
  Face restricted(std::uint32_t mask) const;

  bool operator==(const Face& other) const { return slots_ == other.slots_; }
  bool operator<(const Face& other) const;

 private:
  std::vector<int> slots_;
};

using FaceSet = std::set<Face>;

/// Balanced simplicial complex stored by its facets (maximal faces). Vertices
/// of color c are 0..color_sizes[c]-1; the nominal dimension is
/// num_colors - 1. Inputs are pure; shifted outputs need not be, so purity is
/// a predicate rather than a construction invariant.
class BalancedComplex {
 public:
  BalancedComplex() = default;
  /// Normalizes: drops duplicates and non-maximal entries. Throws
  /// InvalidInput for out-of-range vertices or mismatched color counts.
  BalancedComplex(std::vector<int> color_sizes, std::vector<Face> facets);

  int num_colors() const { return static_cast<int>(color_sizes_.size()); }
  int dim() const { return num_colors() - 1; }
  const std::vector<int>& color_sizes() const { return color_sizes_; }
  const std::vector<Face>& facets() const { return facets_; }

  bool is_pure() const;
  bool contains(const Face& f) const;
  /// Every face, including the empty face.
  FaceSet faces() const;
  /// Faces whose colorset is exactly `mask`, sorted.
  std::vector<Face> faces_with_colorset(std::uint32_t mask) const;
  /// Faces of size num_colors - 1 contained in some full facet (sorted).
  std::vector<Face> ridges() const;

  bool operator==(const BalancedComplex& other) const {
    return color_sizes_ == other.color_sizes_ && facets_ == other.facets_;
  }

 private:
  std::vector<int> color_sizes_;
  std::vector<Face> facets_;
};

/// Maximal elements of a family of faces, sorted.
std::vector<Face> maximal_faces(std::vector<Face> faces);

/// f_{-1}, f_0, ..., f_{dim}.
std::vector<std::size_t> f_vector(const BalancedComplex& k);

/// Faces not containing sigma. Throws InvalidInput if sigma is not a face.
BalancedComplex antistar(const BalancedComplex& k, const Face& sigma);

/// Link of sigma, as a complex on the colors sigma misses (renumbered in
/// increasing order, vertex indices unchanged).
BalancedComplex link(const BalancedComplex& k, const Face& sigma);

/// Restriction K_T to the colors in `mask`, colors renumbered in order.
BalancedComplex restrict_colors(const BalancedComplex& k, std::uint32_t mask);

/// Join with k2's colors placed after k1's.
BalancedComplex join(const BalancedComplex& k1, const BalancedComplex& k2);

/// Facet-ridge graph: one vertex per facet, edges between facets sharing a
/// ridge, sides by breadth-first 2-coloring (each component's least facet
/// goes to A). a_facets[i] / b_facets[j] give the facet behind vertex i / j'.
struct FacetRidgeGraph {
  BipartiteGraph graph;
  std::vector<Face> a_facets;
  std::vector<Face> b_facets;
};
/// Throws InvalidInput if k is not pure, a ridge lies in more than two
/// facets, or the facet adjacency has an odd cycle.
FacetRidgeGraph facet_ridge_graph(const BalancedComplex& k);

/// K' = antistar(sigma) u (S * lk(sigma)). S lives on |sigma| colors, mapped
/// in increasing order onto sigma's colors; the vertices of the missing facet
/// x are identified with sigma's vertices and S's other vertices become new
/// vertices appended to their colors.
BalancedComplex subdivide_star(const BalancedComplex& k, const Face& sigma,
                               const BalancedComplex& s, const Face& x);

/// A missing face of k: not a face, but every proper subset is.
bool is_missing_face(const BalancedComplex& k, const Face& f);

/// Bipartite graph viewed as a balanced 1-complex (isolated vertices become
/// 0-dimensional facets) and back. The reverse direction requires 2 colors.
BalancedComplex graph_to_complex(const BipartiteGraph& g);
BipartiteGraph complex_to_graph(const BalancedComplex& k);

}  // namespace balrig
