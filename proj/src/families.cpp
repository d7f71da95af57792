#include "balrig/families.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <random>
#include <set>
#include <string>

#include "balrig/errors.hpp"
#include "rng.hpp"

namespace balrig::families {
namespace {

using detail::uniform_below;
using detail::uniform_int;

Edge edge_between(const Vertex& u, const Vertex& v) {
  if (u.color == v.color) throw InternalError("edge inside one side");
  return u.color == kSideA ? Edge{u.index, v.index} : Edge{v.index, u.index};
}

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidInput(what);
}

}  // namespace

BipartiteGraph complete_bipartite(int n, int m) {
  require(n >= 1 && m >= 1, "complete_bipartite needs n, m >= 1");
  std::vector<Edge> edges;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < m; ++b) edges.push_back({a, b});
  }
  return BipartiteGraph(n, m, std::move(edges));
}

BipartiteGraph cycle(int n) {
  require(n >= 2, "cycle needs n >= 2");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    edges.push_back({i, i});
    edges.push_back({(i + 1) % n, i});
  }
  return BipartiteGraph(n, n, std::move(edges));
}

BipartiteGraph random_tree(int n, int m, std::uint64_t seed) {
  require(n >= 1 && m >= 1, "random_tree needs n, m >= 1");
  std::mt19937_64 rng(seed);
  const int total = n + m;
  auto random_neighbor = [&](int u) {
    return u < n ? n + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(m)))
                 : static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n)));
  };
  std::vector<char> in_tree(static_cast<std::size_t>(total), 0);
  std::vector<int> next(static_cast<std::size_t>(total), -1);
  in_tree[0] = 1;
  std::vector<Edge> edges;
  for (int start = 1; start < total; ++start) {
    int u = start;
    while (!in_tree[u]) {
      next[u] = random_neighbor(u);
      u = next[u];
    }
    for (u = start; !in_tree[u]; u = next[u]) {
      in_tree[u] = 1;
      const int v = next[u];
      edges.push_back(u < n ? Edge{u, v - n} : Edge{v, u - n});
    }
  }
  return BipartiteGraph(n, m, std::move(edges));
}

BipartiteGraph k33_minus() {
  std::vector<Edge> edges;
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      if (a != 2 || b != 2) edges.push_back({a, b});
    }
  }
  return BipartiteGraph(3, 3, std::move(edges));
}

BipartiteGraph doubled_k33_minus() {
  const BipartiteGraph g = k33_minus();
  Identification ident{{-1, -1, 2}, {-1, -1, 2}};
  return glue(g, g, ident).graph;
}

std::vector<Vertex> CubicalGraph::facet_vertices(const CubeFacet& f) const {
  const std::uint32_t low_mask = (1u << f.coord) - 1;
  std::vector<Vertex> chart;
  for (std::uint32_t y = 0; y < (1u << (d - 1)); ++y) {
    const std::uint32_t x = (y & low_mask) | (static_cast<std::uint32_t>(f.value) << f.coord) |
                            ((y >> f.coord) << (f.coord + 1));
    chart.push_back(cubes[f.cube][x]);
  }
  return chart;
}

namespace {

void add_cube_edges(int d, const std::vector<Vertex>& cube, std::vector<Edge>& edges) {
  for (std::uint32_t x = 0; x < (1u << d); ++x) {
    for (int i = 0; i < d; ++i) {
      const std::uint32_t y = x ^ (1u << i);
      if (x < y) edges.push_back(edge_between(cube[x], cube[y]));
    }
  }
}

}  // namespace

CubicalGraph cube(int d) {
  require(d >= 1 && d <= 16, "cube needs 1 <= d <= 16");
  CubicalGraph out;
  out.d = d;
  std::vector<Vertex> verts;
  int counts[2] = {0, 0};
  for (std::uint32_t x = 0; x < (1u << d); ++x) {
    const int side = std::popcount(x) % 2 == 0 ? kSideA : kSideB;
    verts.push_back({side, counts[side]++});
  }
  std::vector<Edge> edges;
  add_cube_edges(d, verts, edges);
  out.graph = BipartiteGraph(counts[0], counts[1], std::move(edges));
  out.cubes.push_back(std::move(verts));
  for (int c = 0; c < d; ++c) {
    out.boundary.push_back({0, c, 0});
    out.boundary.push_back({0, c, 1});
  }
  return out;
}

BipartiteGraph cube_graph(int d) { return cube(d).graph; }

CubicalGraph stacked_cubical(int d, int t, std::uint64_t seed) {
  require(d >= 2 && d <= 12, "stacked_cubical needs 2 <= d <= 12");
  require(t >= 1, "stacked_cubical needs t >= 1");
  CubicalGraph out = cube(d);
  std::mt19937_64 rng(seed);
  int counts[2] = {out.graph.a_size(), out.graph.b_size()};
  std::vector<Edge> edges = out.graph.edges();
  for (int step = 1; step < t; ++step) {
    if (out.boundary.empty()) throw InternalError("boundary registry is empty");
    const std::size_t pick = uniform_below(rng, out.boundary.size());
    const std::vector<Vertex> chart = out.facet_vertices(out.boundary[pick]);
    out.boundary.erase(out.boundary.begin() + static_cast<std::ptrdiff_t>(pick));
    std::vector<Vertex> verts(static_cast<std::size_t>(1) << d);
    for (std::uint32_t x = 0; x < (1u << d); ++x) {
      const Vertex& base = chart[x >> 1];
      if ((x & 1u) == 0) {
        verts[x] = base;
      } else {
        const int side = 1 - base.color;
        verts[x] = {side, counts[side]++};
      }
    }
    add_cube_edges(d, verts, edges);
    const int c = static_cast<int>(out.cubes.size());
    out.cubes.push_back(std::move(verts));
    for (int coord = 0; coord < d; ++coord) {
      for (int value = 0; value < 2; ++value) {
        if (coord != 0 || value != 0) out.boundary.push_back({c, coord, value});
      }
    }
  }
  out.graph = BipartiteGraph::from_edges_dedup(counts[0], counts[1], std::move(edges));

  const long long half = 1LL << (d - 1);
  const long long vertices = 2 * half + (t - 1) * half;
  const long long raw_edges = d * half + (t - 1) * (d + 1) * (half / 2);
  if (counts[0] + counts[1] != vertices || static_cast<long long>(out.graph.num_edges()) != raw_edges ||
      counts[0] != counts[1]) {
    throw InternalError("stacked cubical counts are off");
  }
  return out;
}

AugmentMode parse_augment_mode(const std::string& name) {
  if (name == "two-vertex") return AugmentMode::kTwoVertex;
  if (name == "opposite-facets") return AugmentMode::kOppositeFacets;
  if (name == "laman") return AugmentMode::kLaman;
  throw InvalidInput("unknown augmentation mode '" + name + "'");
}

const char* to_string(AugmentMode mode) {
  switch (mode) {
    case AugmentMode::kTwoVertex: return "two-vertex";
    case AugmentMode::kOppositeFacets: return "opposite-facets";
    case AugmentMode::kLaman: return "laman";
  }
  return "two-vertex";
}

long long laman_added_edges(int d) { return (1LL << (d - 1)) - d; }

long long stacked_target_edges(int d, const BipartiteGraph& g) {
  return static_cast<long long>(d - 1) * g.a_size() + 2LL * g.b_size() - 2LL * (d - 1);
}

namespace {

const CubeFacet& facet_at(const CubicalGraph& g, int facet) {
  require(facet >= 0 && facet < static_cast<int>(g.boundary.size()), "facet index is not in the registry");
  return g.boundary[facet];
}

BipartiteGraph with_edges(const BipartiteGraph& g, const std::vector<Edge>& extra) {
  std::vector<Edge> edges = g.edges();
  edges.insert(edges.end(), extra.begin(), extra.end());
  return BipartiteGraph::from_edges_dedup(g.a_size(), g.b_size(), std::move(edges));
}

std::vector<Edge> star_into(const Vertex& u, const std::vector<Vertex>& chart) {
  std::vector<Edge> out;
  for (const Vertex& b : chart) {
    if (b.color != u.color) out.push_back(edge_between(u, b));
  }
  return out;
}

// Edges making the cube on `chart` (dimension m = log2 size) (1, m+1)-Laman.
void laman_edges(const std::vector<Vertex>& chart, const BipartiteGraph& g, std::set<Edge>& added) {
  const int m = std::countr_zero(chart.size());
  if (m == 3) {
    for (std::uint32_t y = 0; y < 8; ++y) {
      if (chart[y].color == kSideA) added.insert(edge_between(chart[y], chart[y ^ 7u]));
    }
    return;
  }
  const std::size_t half = chart.size() / 2;
  const std::vector<Vertex> low(chart.begin(), chart.begin() + static_cast<std::ptrdiff_t>(half));
  const std::vector<Vertex> high(chart.begin() + static_cast<std::ptrdiff_t>(half), chart.end());
  laman_edges(low, g, added);
  laman_edges(high, g, added);
  int need = m - 1;
  for (std::size_t i = 0; i < half && need > 0; ++i) {
    for (std::size_t j = 0; j < half && need > 0; ++j) {
      if (low[i].color == high[j].color) continue;
      const Edge e = edge_between(low[i], high[j]);
      if (g.has_edge(e.a, e.b) || added.count(e)) continue;
      added.insert(e);
      --need;
    }
  }
  if (need > 0) throw InternalError("not enough absent cross edges");
}

}  // namespace

BipartiteGraph augment_two_vertex(const CubicalGraph& g, int facet, Vertex u, Vertex w) {
  const std::vector<Vertex> chart = g.facet_vertices(facet_at(g, facet));
  auto in_facet = [&](const Vertex& v) { return std::find(chart.begin(), chart.end(), v) != chart.end(); };
  require(u != w, "u and w must differ");
  require(u.color == kSideA && w.color == kSideA, "u and w must lie in side A");
  require(in_facet(u) && in_facet(w), "u and w must lie in the facet");
  std::vector<Edge> extra = star_into(u, chart);
  const auto more = star_into(w, chart);
  extra.insert(extra.end(), more.begin(), more.end());
  return with_edges(g.graph, extra);
}

BipartiteGraph augment_facet(const CubicalGraph& g, int facet, AugmentMode mode) {
  const CubeFacet& f = facet_at(g, facet);
  const std::vector<Vertex> chart = g.facet_vertices(f);
  switch (mode) {
    case AugmentMode::kTwoVertex: {
      std::vector<Vertex> a_side;
      for (const Vertex& v : chart) {
        if (v.color == kSideA) a_side.push_back(v);
      }
      require(a_side.size() >= 2, "two-vertex augmentation needs d >= 3");
      return augment_two_vertex(g, facet, a_side[0], a_side[1]);
    }
    case AugmentMode::kOppositeFacets: {
      require(g.d >= 3, "opposite-facets augmentation needs d >= 3");
      const CubeFacet opposite{f.cube, f.coord, 1 - f.value};
      const auto& cube_verts = g.cubes[f.cube];
      const int j = f.coord == 0 ? 1 : 0;
      std::uint32_t x = 0;
      while (!(((x >> f.coord) & 1u) == static_cast<std::uint32_t>(f.value) && cube_verts[x].color == kSideA)) ++x;
      const Vertex v = cube_verts[x];
      const Vertex v_star = cube_verts[x ^ (1u << f.coord) ^ (1u << j)];
      std::vector<Edge> extra = star_into(v, chart);
      const auto more = star_into(v_star, g.facet_vertices(opposite));
      extra.insert(extra.end(), more.begin(), more.end());
      return with_edges(g.graph, extra);
    }
    case AugmentMode::kLaman: {
      require(g.d >= 4, "laman augmentation needs d >= 4");
      std::set<Edge> added;
      laman_edges(chart, g.graph, added);
      if (static_cast<long long>(added.size()) != laman_added_edges(g.d)) {
        throw InternalError("laman augmentation added the wrong number of edges");
      }
      return with_edges(g.graph, {added.begin(), added.end()});
    }
  }
  throw InvalidInput("unknown augmentation mode");
}

BalancedComplex cross_polytope_boundary(int d) {
  require(d >= 1 && d <= 20, "cross polytope needs 1 <= d <= 20");
  std::vector<Face> facets;
  for (std::uint32_t mask = 0; mask < (1u << d); ++mask) {
    std::vector<int> slots;
    for (int c = 0; c < d; ++c) slots.push_back(static_cast<int>(mask >> c & 1u));
    facets.emplace_back(std::move(slots));
  }
  return BalancedComplex(std::vector<int>(static_cast<std::size_t>(d), 2), std::move(facets));
}

BalancedComplex glued_cross_polytopes(int d, const std::vector<Gluing>& pattern) {
  require(d >= 2 && d <= 20, "glued cross polytopes need 2 <= d <= 20");
  const std::uint32_t full = 1u << d;
  std::vector<int> sizes(static_cast<std::size_t>(d), 2);
  // vmap[copy][c][j]: global index of the copy's vertex j of color c.
  std::vector<std::vector<std::array<int, 2>>> vmap(1, std::vector<std::array<int, 2>>(d, {0, 1}));
  std::vector<std::set<std::uint32_t>> used(1);
  auto global_face = [&](int copy, std::uint32_t mask) {
    std::vector<int> slots;
    for (int c = 0; c < d; ++c) slots.push_back(vmap[copy][c][mask >> c & 1u]);
    return Face(std::move(slots));
  };
  std::set<Face> removed;
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    const Gluing& gl = pattern[i];
    const int guest = static_cast<int>(i) + 1;
    require(gl.host >= 0 && gl.host < guest, "gluing host must be an earlier copy");
    require(gl.host_facet < full && gl.guest_facet < full, "gluing facet out of range");
    require(std::popcount(gl.host_facet) % 2 == 1, "host facet must lie on side B (odd)");
    require(std::popcount(gl.guest_facet) % 2 == 0, "guest facet must lie on side A (even)");
    require(!used[gl.host].count(gl.host_facet), "pattern glues onto one facet twice");
    used[gl.host].insert(gl.host_facet);
    std::vector<std::array<int, 2>> m(static_cast<std::size_t>(d));
    for (int c = 0; c < d; ++c) {
      const int g_bit = static_cast<int>(gl.guest_facet >> c & 1u);
      m[c][g_bit] = vmap[gl.host][c][gl.host_facet >> c & 1u];
      m[c][1 - g_bit] = sizes[c]++;
    }
    vmap.push_back(std::move(m));
    used.push_back({gl.guest_facet});
    removed.insert(global_face(gl.host, gl.host_facet));
  }
  std::vector<Face> facets;
  std::set<Face> seen;
  for (std::size_t copy = 0; copy < vmap.size(); ++copy) {
    for (std::uint32_t mask = 0; mask < full; ++mask) {
      Face f = global_face(static_cast<int>(copy), mask);
      if (removed.count(f)) continue;
      require(seen.insert(f).second, "pattern produces a repeated facet");
      facets.push_back(std::move(f));
    }
  }
  BalancedComplex out(std::move(sizes), std::move(facets));
  const std::size_t expected = vmap.size() * full - 2 * pattern.size();
  if (out.facets().size() != expected) throw InternalError("glued cross polytope has the wrong facet count");
  return out;
}

std::vector<Gluing> default_gluing_pattern(int d) {
  require(d >= 2 && d <= 20, "gluing pattern needs 2 <= d <= 20");
  const int want_leaves = 2 * d - 1;
  std::vector<Gluing> out;
  int leaves = 0;
  for (int host = 0; leaves < want_leaves; ++host) {
    bool first = true;
    for (std::uint32_t mask = 0; mask < (1u << d) && leaves < want_leaves; ++mask) {
      if (std::popcount(mask) % 2 == 0) continue;
      out.push_back({host, mask, 0});
      if (host == 0 || !first) ++leaves;
      first = false;
    }
  }
  return out;
}

namespace {

std::vector<Face> all_tuples(const std::vector<int>& sizes) {
  std::vector<Face> out;
  std::vector<int> cur(sizes.size(), 0);
  if (std::any_of(sizes.begin(), sizes.end(), [](int s) { return s <= 0; })) return out;
  for (;;) {
    out.emplace_back(cur);
    std::size_t c = 0;
    while (c < sizes.size() && ++cur[c] == sizes[c]) cur[c++] = 0;
    if (c == sizes.size()) break;
  }
  return out;
}

}  // namespace

BalancedComplex gamma_complex(int d, const std::vector<int>& sizes) {
  require(d >= 0 && static_cast<int>(sizes.size()) == d + 1, "gamma complex needs d+1 color sizes");
  require(std::all_of(sizes.begin(), sizes.end(), [](int s) { return s >= 2; }), "gamma complex needs sizes >= 2");
  std::vector<Face> facets;
  for (const Face& f : all_tuples(sizes)) {
    const auto& s = f.slots();
    if (std::any_of(s.begin(), s.end(), [](int i) { return i < 2; })) facets.push_back(f);
  }
  return BalancedComplex(sizes, std::move(facets));
}

BalancedComplex van_kampen_complex(int l, int d) {
  require(l >= 1 && d >= 0, "van Kampen complex needs l >= 1 and d >= 0");
  std::vector<int> sizes(static_cast<std::size_t>(d + 1), l + 1);
  return BalancedComplex(sizes, all_tuples(sizes));
}

Quadrangulation::Quadrangulation() {
  rot_ = {{1, 3}, {0, 2}, {1, 3}, {0, 2}};
  side_ = {kSideA, kSideB, kSideA, kSideB};
  index_ = {0, 0, 1, 1};
  side_count_ = {2, 2};
}

int Quadrangulation::split_vertex(int w, int i, int j) {
  require(w >= 0 && w < static_cast<int>(rot_.size()), "split_vertex: unknown vertex");
  const int deg = static_cast<int>(rot_[w].size());
  require(i >= 0 && i < deg && j >= 0 && j < deg && i != j, "split_vertex: bad rotation positions");
  const std::vector<int> old = rot_[w];
  const int ni = old[i];
  const int nj = old[j];
  std::vector<int> arc_w, arc_v;
  for (int p = i;; p = (p + 1) % deg) {
    arc_w.push_back(old[p]);
    if (p == j) break;
  }
  for (int p = j;; p = (p + 1) % deg) {
    arc_v.push_back(old[p]);
    if (p == i) break;
  }
  const int v = static_cast<int>(rot_.size());
  const int side = side_[w];
  rot_.push_back(arc_v);
  side_.push_back(side);
  index_.push_back(side_count_[side]++);
  rot_[w] = arc_w;

  auto pos = [&](int x, int y) {
    auto& r = rot_[x];
    return static_cast<std::ptrdiff_t>(std::find(r.begin(), r.end(), y) - r.begin());
  };
  rot_[ni].insert(rot_[ni].begin() + pos(ni, w) + 1, v);
  rot_[nj].insert(rot_[nj].begin() + pos(nj, w), v);
  for (std::size_t p = 1; p + 1 < arc_v.size(); ++p) {
    const int x = arc_v[p];
    rot_[x][pos(x, w)] = v;
  }
  return v;
}

std::vector<std::vector<int>> Quadrangulation::faces() const {
  std::set<std::pair<int, int>> seen;
  std::vector<std::vector<int>> out;
  for (int u = 0; u < static_cast<int>(rot_.size()); ++u) {
    for (int v : rot_[u]) {
      if (seen.count({u, v})) continue;
      std::vector<int> face;
      int a = u, b = v;
      while (seen.insert({a, b}).second) {
        face.push_back(a);
        const auto& r = rot_[b];
        const std::size_t k = static_cast<std::size_t>(std::find(r.begin(), r.end(), a) - r.begin());
        const int c = r[(k + 1) % r.size()];
        a = b;
        b = c;
      }
      out.push_back(std::move(face));
    }
  }
  return out;
}

std::size_t Quadrangulation::num_faces() const { return faces().size(); }

BipartiteGraph Quadrangulation::graph() const {
  std::vector<Edge> edges;
  for (int u = 0; u < static_cast<int>(rot_.size()); ++u) {
    if (side_[u] != kSideA) continue;
    for (int v : rot_[u]) edges.push_back({index_[u], index_[v]});
  }
  return BipartiteGraph(side_count_[0], side_count_[1], std::move(edges));
}

void Quadrangulation::validate() const {
  const auto fs = faces();
  for (const auto& f : fs) {
    if (f.size() != 4) throw InternalError("quadrangulation has a face that is not a 4-gon");
  }
  const long long n = static_cast<long long>(rot_.size());
  const long long e = static_cast<long long>(graph().num_edges());
  if (e != 2 * n - 4) throw InternalError("quadrangulation edge count is not 2N - 4");
  if (n - e + static_cast<long long>(fs.size()) != 2) throw InternalError("quadrangulation is not a sphere");
}

Quadrangulation random_quadrangulation_system(int n_faces, std::uint64_t seed) {
  require(n_faces >= 2, "random_quadrangulation needs at least 2 faces");
  std::mt19937_64 rng(seed);
  Quadrangulation q;
  for (int step = 2; step < n_faces; ++step) {
    const int w = static_cast<int>(uniform_below(rng, q.num_vertices()));
    const int deg = static_cast<int>(q.rotation(w).size());
    const int i = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(deg)));
    int j = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(deg - 1)));
    if (j >= i) ++j;
    q.split_vertex(w, i, j);
  }
  q.validate();
  return q;
}

BipartiteGraph random_quadrangulation(int n_faces, std::uint64_t seed) {
  return random_quadrangulation_system(n_faces, seed).graph();
}

BipartiteGraph random_outerplanar(int n, int pendants, int deletions, std::uint64_t seed) {
  require(n >= 2, "random_outerplanar needs n >= 2");
  require(pendants >= 0 && deletions >= 0, "negative pendant or deletion count");
  std::mt19937_64 rng(seed);
  std::vector<Vertex> verts;
  int counts[2] = {0, 0};
  for (int i = 0; i < 2 * n; ++i) {
    const int side = i % 2 == 0 ? kSideA : kSideB;
    verts.push_back({side, counts[side]++});
  }
  std::vector<Edge> edges;
  for (int i = 0; i < 2 * n; ++i) edges.push_back(edge_between(verts[i], verts[(i + 1) % (2 * n)]));

  std::vector<int> poly(static_cast<std::size_t>(2 * n));
  const int shift = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(2 * n)));
  for (int i = 0; i < 2 * n; ++i) poly[i] = (i + shift) % (2 * n);
  std::vector<std::vector<int>> stack{poly};
  while (!stack.empty()) {
    std::vector<int> p = std::move(stack.back());
    stack.pop_back();
    const int len = static_cast<int>(p.size());
    if (len <= 4) continue;
    // Odd offsets keep both pieces of even length.
    const int choices = (len - 4) / 2;
    const int off = 3 + 2 * static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(choices)));
    edges.push_back(edge_between(verts[p[0]], verts[p[off]]));
    stack.emplace_back(p.begin(), p.begin() + off + 1);
    std::vector<int> rest(p.begin() + off, p.end());
    rest.push_back(p[0]);
    stack.push_back(std::move(rest));
  }
  for (int t = 0; t < pendants; ++t) {
    const Vertex& u = verts[uniform_below(rng, verts.size())];
    const int side = 1 - u.color;
    const Vertex leaf{side, counts[side]++};
    edges.push_back(edge_between(u, leaf));
    verts.push_back(leaf);
  }
  for (int t = 0; t < deletions && !edges.empty(); ++t) {
    edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(uniform_below(rng, edges.size())));
  }
  return BipartiteGraph(counts[0], counts[1], std::move(edges));
}

BipartiteGraph random_degenerate(int n, int max_back, std::uint64_t seed) {
  require(n >= 2, "random_degenerate needs n >= 2");
  require(max_back >= 1, "random_degenerate needs max_back >= 1");
  std::mt19937_64 rng(seed);
  std::vector<Vertex> verts;
  int counts[2] = {0, 0};
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) {
    const int side = v < 2 ? v : static_cast<int>(uniform_below(rng, 2));
    const Vertex me{side, counts[side]++};
    std::vector<Vertex> cand;
    for (const Vertex& u : verts) {
      if (u.color != side) cand.push_back(u);
    }
    verts.push_back(me);
    if (cand.empty()) continue;
    const int hi = std::min<int>(max_back, static_cast<int>(cand.size()));
    int want = uniform_int(rng, 1, hi);
    want = std::min<long long>(want, 4LL * n - 1 - static_cast<long long>(edges.size()));
    for (int t = 0; t < want; ++t) {
      const std::size_t r = t + uniform_below(rng, cand.size() - t);
      std::swap(cand[t], cand[r]);
      edges.push_back(edge_between(me, cand[t]));
    }
  }
  return BipartiteGraph(counts[0], counts[1], std::move(edges));
}

BipartiteGraph random_bipartite(int n, int m, int num, int den, std::uint64_t seed) {
  require(n >= 0 && m >= 0, "negative side size");
  require(den >= 1 && num >= 0 && num <= den, "edge probability must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < m; ++b) {
      if (uniform_below(rng, static_cast<std::uint64_t>(den)) < static_cast<std::uint64_t>(num)) edges.push_back({a, b});
    }
  }
  return BipartiteGraph(n, m, std::move(edges));
}

BalancedComplex random_balanced_complex(const std::vector<int>& sizes, int facets, std::uint64_t seed) {
  require(!sizes.empty(), "random complex needs at least one color");
  require(std::all_of(sizes.begin(), sizes.end(), [](int s) { return s >= 1; }), "color sizes must be positive");
  std::vector<Face> all = all_tuples(sizes);
  require(facets >= 1 && facets <= static_cast<int>(all.size()), "facet count out of range");
  std::mt19937_64 rng(seed);
  for (int t = 0; t < facets; ++t) {
    const std::size_t r = t + uniform_below(rng, all.size() - t);
    std::swap(all[t], all[r]);
  }
  all.resize(static_cast<std::size_t>(facets));
  return BalancedComplex(sizes, std::move(all));
}

}  // namespace balrig::families
