#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "balrig/complex.hpp"
#include "balrig/graph.hpp"

namespace balrig::families {

BipartiteGraph complete_bipartite(int n, int m);
/// The cycle on 2n vertices, 1 - 1' - 2 - 2' - ... - n - n' - 1. Needs n >= 2.
BipartiteGraph cycle(int n);
/// Uniform spanning tree of K_{n,m} (Wilson's algorithm).
BipartiteGraph random_tree(int n, int m, std::uint64_t seed);

/// K_{3,3} minus the edge 33'.
BipartiteGraph k33_minus();
/// Two copies of K_{3,3} minus an edge glued along the endpoints of the
/// missing edge: 5 + 5 vertices, 16 edges.
BipartiteGraph doubled_k33_minus();

/// A facet of a cube in a cubical complex: the vertices of cube `cube` whose
/// coordinate `coord` equals `value`.
struct CubeFacet {
  int cube = 0;
  int coord = 0;
  int value = 0;
  bool operator==(const CubeFacet&) const = default;
};

/// Graph of a stacked cubical complex with its combinatorial bookkeeping.
/// cubes[c][x] is the vertex at local coordinates x (bit i = coordinate i);
/// the side of a vertex is the parity of its coordinates in any cube
/// containing it, up to a per-cube flip that gluing keeps consistent.
struct CubicalGraph {
  int d = 0;
  BipartiteGraph graph;
  std::vector<std::vector<Vertex>> cubes;
  std::vector<CubeFacet> boundary;  // facets not used for gluing

  /// Chart of a facet: y in {0,1}^{d-1} -> vertex.
  std::vector<Vertex> facet_vertices(const CubeFacet& f) const;
};

/// The d-cube: A = even coordinate sum, indexed by increasing coordinate
/// vector; boundary lists coordinate facets (coord, 0), (coord, 1) in order.
CubicalGraph cube(int d);
BipartiteGraph cube_graph(int d);

/// Starts from a d-cube and glues t-1 further cubes, each onto a boundary
/// facet chosen uniformly at random. The new cube's facet (0, 0) is
/// identified with the chosen facet; its other 2d-1 facets join the boundary.
CubicalGraph stacked_cubical(int d, int t, std::uint64_t seed);

enum class AugmentMode {
  kTwoVertex,       // u, w in F n A joined to every b in F n B
  kOppositeFacets,  // v in F, v* in the opposite facet, sharing a 2-face
  kLaman,           // 2^{d-1} - d edges inside F making the cube (1,d)-Laman
};

AugmentMode parse_augment_mode(const std::string& name);
const char* to_string(AugmentMode mode);

/// Adds edges on boundary facet `facet` (index into g.boundary). Vertex
/// choices are the least admissible ones in chart order. Existing edges are
/// not added twice.
BipartiteGraph augment_facet(const CubicalGraph& g, int facet, AugmentMode mode);

/// Two-vertex augmentation with explicit u, w (both in F n A).
BipartiteGraph augment_two_vertex(const CubicalGraph& g, int facet, Vertex u, Vertex w);

/// Number of edges kLaman adds to a facet of a d-cube: 2^{d-1} - d.
long long laman_added_edges(int d);

/// (d-1)|A| + 2|B| - 2(d-1), the edge count of a minimally
/// (2,d-1)-rigid graph on the sides of g.
long long stacked_target_edges(int d, const BipartiteGraph& g);

/// [2]^{*d}: d colors with two vertices each; facet bits give the indices.
BalancedComplex cross_polytope_boundary(int d);

/// One gluing: facet `host_facet` of copy `host` (odd bitmask, side B)
/// receives the next copy along its facet `guest_facet` (even bitmask,
/// side A). The guest is copy i + 1 for the i-th gluing.
struct Gluing {
  int host = 0;
  std::uint32_t host_facet = 0;
  std::uint32_t guest_facet = 0;
};

/// Copies of [2]^{*d} glued as in `pattern`; same-color vertices of the
/// paired facets are identified and the common facet is removed. Copy 0
/// keeps vertex indices 0 and 1 in every color; every guest adds one vertex
/// per color.
BalancedComplex glued_cross_polytopes(int d, const std::vector<Gluing>& pattern);

/// Gluings producing 2d - 1 leaf copies: guests go onto the odd facets of
/// copy 0 and, once those run out, onto the odd facets of copy 1.
std::vector<Gluing> default_gluing_pattern(int d);

/// Colorful facets on d+1 colors that use index 0 or 1 in some color.
BalancedComplex gamma_complex(int d, const std::vector<int>& sizes);

/// [l+1]^{*(d+1)}.
BalancedComplex van_kampen_complex(int l, int d);

/// A quadrangulation of the 2-sphere held as a rotation system. Vertex ids
/// are global; side[v] and index[v] place them in the bipartite graph.
class Quadrangulation {
 public:
  /// The 4-cycle 1 1' 2 2', which splits the sphere into two 4-gons.
  Quadrangulation();

  std::size_t num_vertices() const { return rot_.size(); }
  std::size_t num_faces() const;
  const std::vector<int>& rotation(int v) const { return rot_[static_cast<std::size_t>(v)]; }

  /// Splits w into w and a new vertex v: w keeps the cyclic arc of its
  /// rotation from position i to position j, v takes the arc from j back to
  /// i, and w n_i v n_j becomes a new 4-gon. Returns v.
  int split_vertex(int w, int i, int j);

  /// Boundary walks of all faces (each a cyclic vertex list).
  std::vector<std::vector<int>> faces() const;
  BipartiteGraph graph() const;
  Vertex vertex(int v) const { return {side_[static_cast<std::size_t>(v)], index_[static_cast<std::size_t>(v)]}; }

  /// Throws InternalError unless every face is a 4-gon and |E| = 2N - 4.
  void validate() const;

 private:
  std::vector<std::vector<int>> rot_;
  std::vector<int> side_;
  std::vector<int> index_;
  std::vector<int> side_count_{0, 0};
};

/// Quadrangulation with n_faces faces (N = n_faces + 2 vertices) grown from
/// the 4-cycle by random vertex splits.
Quadrangulation random_quadrangulation_system(int n_faces, std::uint64_t seed);
BipartiteGraph random_quadrangulation(int n_faces, std::uint64_t seed);

/// Polygon on 2n vertices cut into 4-gons by random chords (3n - 2 edges),
/// with `pendants` leaves attached at random and then `deletions` random
/// edges removed. Outerplanar and bipartite.
BipartiteGraph random_outerplanar(int n, int pendants, int deletions, std::uint64_t seed);

/// Grows a graph on n vertices (sides chosen at random, both nonempty) where
/// each new vertex joins at most `max_back` earlier vertices of the other
/// side. Edges are only added while |E| stays below 4n.
BipartiteGraph random_degenerate(int n, int max_back, std::uint64_t seed);

/// Random bipartite graph with each of the n*m pairs present with
/// probability num/den.
BipartiteGraph random_bipartite(int n, int m, int num, int den, std::uint64_t seed);

/// Random balanced complex: `facets` distinct colorful facets drawn
/// uniformly from [sizes[0]] x ... x [sizes[c]].
BalancedComplex random_balanced_complex(const std::vector<int>& sizes, int facets,
                                        std::uint64_t seed);

}  // namespace balrig::families
