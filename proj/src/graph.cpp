#include "balrig/graph.hpp"

#include <algorithm>
#include <iterator>
#include <string>

#include "balrig/errors.hpp"

namespace balrig {
namespace {

std::string edge_text(const Edge& e) {
  return std::to_string(e.a + 1) + "," + std::to_string(e.b + 1) + "'";
}

void require_vertex(const BipartiteGraph& g, const Vertex& v) {
  if (!g.has_vertex(v)) {
    throw InvalidInput("vertex (" + std::to_string(v.color) + ", " + std::to_string(v.index) +
                       ") is not in the graph");
  }
}

}  // namespace

BipartiteGraph::BipartiteGraph(int a_size, int b_size, std::vector<Edge> edges)
    : a_size_(a_size), b_size_(b_size), edges_(std::move(edges)) {
  if (a_size < 0 || b_size < 0) throw InvalidInput("side sizes must be non-negative");
  adjacency_.assign(static_cast<std::size_t>(a_size) * static_cast<std::size_t>(b_size), 0);
  for (const Edge& e : edges_) {
    if (e.a < 0 || e.a >= a_size || e.b < 0 || e.b >= b_size) {
      throw InvalidInput("edge " + edge_text(e) + " is out of range");
    }
    auto& cell = adjacency_[static_cast<std::size_t>(e.a) * b_size + e.b];
    if (cell) throw InvalidInput("duplicate edge " + edge_text(e));
    cell = 1;
  }
  std::sort(edges_.begin(), edges_.end());
}

BipartiteGraph BipartiteGraph::from_edges_dedup(int a_size, int b_size, std::vector<Edge> edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return BipartiteGraph(a_size, b_size, std::move(edges));
}

bool BipartiteGraph::has_vertex(const Vertex& v) const {
  return (v.color == kSideA || v.color == kSideB) && v.index >= 0 && v.index < side_size(v.color);
}

int BipartiteGraph::degree(const Vertex& v) const { return static_cast<int>(neighbors(v).size()); }

std::vector<int> BipartiteGraph::neighbors(const Vertex& v) const {
  require_vertex(*this, v);
  std::vector<int> out;
  if (v.color == kSideA) {
    for (int b = 0; b < b_size_; ++b) {
      if (has_edge(v.index, b)) out.push_back(b);
    }
  } else {
    for (int a = 0; a < a_size_; ++a) {
      if (has_edge(a, v.index)) out.push_back(a);
    }
  }
  return out;
}

GraphWithMap delete_vertex(const BipartiteGraph& g, const Vertex& v) {
  require_vertex(g, v);
  std::vector<int> a, b;
  for (int i = 0; i < g.a_size(); ++i) {
    if (!(v.color == kSideA && v.index == i)) a.push_back(i);
  }
  for (int j = 0; j < g.b_size(); ++j) {
    if (!(v.color == kSideB && v.index == j)) b.push_back(j);
  }
  return induced_subgraph(g, a, b);
}

Contraction contract(const BipartiteGraph& g, const Vertex& u, const Vertex& v) {
  require_vertex(g, u);
  require_vertex(g, v);
  if (u.color != v.color) throw InvalidInput("contracted vertices must lie on the same side");
  if (u.index == v.index) throw InvalidInput("cannot contract a vertex with itself");

  const auto nu = g.neighbors(u);
  const auto nv = g.neighbors(v);
  std::vector<int> common;
  std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(), std::back_inserter(common));

  Contraction out;
  const int side = u.color;
  std::vector<int>& moved = side == kSideA ? out.map.a : out.map.b;
  std::vector<int>& fixed = side == kSideA ? out.map.b : out.map.a;
  moved.resize(static_cast<std::size_t>(g.side_size(side)));
  for (int i = 0, next = 0; i < g.side_size(side); ++i) {
    moved[i] = i == u.index ? -1 : next++;
  }
  moved[u.index] = moved[v.index];
  fixed.resize(static_cast<std::size_t>(g.side_size(1 - side)));
  for (int i = 0; i < g.side_size(1 - side); ++i) fixed[i] = i;

  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.push_back({out.map.a[e.a], out.map.b[e.b]});
  // u merges into v; report u as removed in the map.
  moved[u.index] = -1;
  const int a_size = g.a_size() - (side == kSideA ? 1 : 0);
  const int b_size = g.b_size() - (side == kSideB ? 1 : 0);
  out.graph = BipartiteGraph::from_edges_dedup(a_size, b_size, std::move(edges));
  out.common_neighbors = common.size();
  return out;
}

BipartiteGraph cone_left(const BipartiteGraph& g) {
  std::vector<Edge> edges;
  for (int b = 0; b < g.b_size(); ++b) edges.push_back({0, b});
  for (const Edge& e : g.edges()) edges.push_back({e.a + 1, e.b});
  return BipartiteGraph(g.a_size() + 1, g.b_size(), std::move(edges));
}

BipartiteGraph cone_right(const BipartiteGraph& g) {
  std::vector<Edge> edges;
  for (int a = 0; a < g.a_size(); ++a) edges.push_back({a, 0});
  for (const Edge& e : g.edges()) edges.push_back({e.a, e.b + 1});
  return BipartiteGraph(g.a_size(), g.b_size() + 1, std::move(edges));
}

GraphWithMap glue(const BipartiteGraph& g1, const BipartiteGraph& g2, const Identification& ident) {
  GraphWithMap out;
  int sizes[2] = {g1.a_size(), g1.b_size()};
  for (int side : {kSideA, kSideB}) {
    const std::vector<int>& id = side == kSideA ? ident.a : ident.b;
    std::vector<int>& map = side == kSideA ? out.map.a : out.map.b;
    const int n2 = g2.side_size(side);
    if (!id.empty() && static_cast<int>(id.size()) != n2) {
      throw InvalidInput("identification map has the wrong length");
    }
    std::vector<char> used(static_cast<std::size_t>(g1.side_size(side)), 0);
    map.resize(static_cast<std::size_t>(n2));
    for (int i = 0; i < n2; ++i) {
      const int target = id.empty() ? -1 : id[i];
      if (target == -1) {
        map[i] = sizes[side]++;
        continue;
      }
      if (target < 0 || target >= g1.side_size(side)) {
        throw InvalidInput("identification targets a vertex outside the first graph");
      }
      if (used[target]) throw InvalidInput("identification is not injective");
      used[target] = 1;
      map[i] = target;
    }
  }
  std::vector<Edge> edges = g1.edges();
  for (const Edge& e : g2.edges()) edges.push_back({out.map.a[e.a], out.map.b[e.b]});
  out.graph = BipartiteGraph::from_edges_dedup(sizes[0], sizes[1], std::move(edges));
  return out;
}

GraphWithMap induced_subgraph(const BipartiteGraph& g, const std::vector<int>& a_subset,
                              const std::vector<int>& b_subset) {
  GraphWithMap out;
  out.map.a.assign(static_cast<std::size_t>(g.a_size()), -1);
  out.map.b.assign(static_cast<std::size_t>(g.b_size()), -1);
  for (int i : a_subset) {
    if (i < 0 || i >= g.a_size()) throw InvalidInput("induced subgraph: A-vertex out of range");
    out.map.a[i] = 0;
  }
  for (int j : b_subset) {
    if (j < 0 || j >= g.b_size()) throw InvalidInput("induced subgraph: B-vertex out of range");
    out.map.b[j] = 0;
  }
  int na = 0, nb = 0;
  for (auto& x : out.map.a) x = x == 0 ? na++ : -1;
  for (auto& x : out.map.b) x = x == 0 ? nb++ : -1;
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (out.map.a[e.a] >= 0 && out.map.b[e.b] >= 0) edges.push_back({out.map.a[e.a], out.map.b[e.b]});
  }
  out.graph = BipartiteGraph(na, nb, std::move(edges));
  return out;
}

BipartiteGraph edge_intersection(const BipartiteGraph& g1, const BipartiteGraph& g2) {
  if (g1.a_size() != g2.a_size() || g1.b_size() != g2.b_size()) {
    throw InvalidInput("edge intersection needs graphs on the same sides");
  }
  std::vector<Edge> edges;
  for (const Edge& e : g1.edges()) {
    if (g2.has_edge(e.a, e.b)) edges.push_back(e);
  }
  return BipartiteGraph(g1.a_size(), g1.b_size(), std::move(edges));
}

bool is_subgraph(const BipartiteGraph& h, const BipartiteGraph& g) {
  if (h.a_size() != g.a_size() || h.b_size() != g.b_size()) {
    throw InvalidInput("subgraph test needs graphs on the same sides");
  }
  return std::all_of(h.edges().begin(), h.edges().end(),
                     [&](const Edge& e) { return g.has_edge(e.a, e.b); });
}

}  // namespace balrig
