#include "balrig/complex.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <string>

#include "balrig/errors.hpp"

namespace balrig {

std::size_t Face::size() const {
  return static_cast<std::size_t>(std::count_if(slots_.begin(), slots_.end(), [](int x) { return x != kAbsent; }));
}

std::uint32_t Face::colorset() const {
  std::uint32_t mask = 0;
  for (int c = 0; c < num_colors(); ++c) {
    if (has(c)) mask |= 1u << c;
  }
  return mask;
}

std::vector<Vertex> Face::vertices() const {
  std::vector<Vertex> out;
  for (int c = 0; c < num_colors(); ++c) {
    if (has(c)) out.push_back({c, (*this)[c]});
  }
  return out;
}

bool Face::subset_of(const Face& other) const {
  if (num_colors() != other.num_colors()) return false;
  for (int c = 0; c < num_colors(); ++c) {
    if (has(c) && other[c] != (*this)[c]) return false;
  }
  return true;
}

bool Face::disjoint_from(const Face& other) const {
  for (int c = 0; c < std::min(num_colors(), other.num_colors()); ++c) {
    if (has(c) && other[c] == (*this)[c]) return false;
  }
  return true;
}

Face Face::with(int color, int index) const {
  Face f = *this;
  f.set(color, index);
  return f;
}

Face Face::without(int color) const {
  Face f = *this;
  f.clear(color);
  return f;
}

Face Face::restricted(std::uint32_t mask) const {
  Face f = *this;
  for (int c = 0; c < num_colors(); ++c) {
    if (!(mask >> c & 1u)) f.clear(c);
  }
  return f;
}

bool Face::operator<(const Face& other) const {
  const auto a = vertices();
  const auto b = other.vertices();
  if (a != b) return a < b;
  return slots_.size() < other.slots_.size();
}

std::vector<Face> maximal_faces(std::vector<Face> faces) {
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  std::vector<Face> out;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < faces.size() && maximal; ++j) {
      if (i != j && faces[i].size() < faces[j].size() && faces[i].subset_of(faces[j])) maximal = false;
    }
    if (maximal) out.push_back(faces[i]);
  }
  return out;
}

BalancedComplex::BalancedComplex(std::vector<int> color_sizes, std::vector<Face> facets)
    : color_sizes_(std::move(color_sizes)) {
  if (color_sizes_.size() > 31) throw InvalidInput("at most 31 colors are supported");
  for (int s : color_sizes_) {
    if (s < 0) throw InvalidInput("negative color size");
  }
  for (const Face& f : facets) {
    if (f.num_colors() != num_colors()) throw InvalidInput("face has the wrong number of colors");
    for (int c = 0; c < num_colors(); ++c) {
      if (f.has(c) && (f[c] < 0 || f[c] >= color_sizes_[c])) {
        throw InvalidInput("face vertex (" + std::to_string(c + 1) + ", " + std::to_string(f[c] + 1) +
                           ") is out of range");
      }
    }
  }
  facets_ = maximal_faces(std::move(facets));
}

bool BalancedComplex::is_pure() const {
  if (facets_.empty()) return false;
  return std::all_of(facets_.begin(), facets_.end(), [&](const Face& f) {
    return f.size() == static_cast<std::size_t>(num_colors());
  });
}

bool BalancedComplex::contains(const Face& f) const {
  return std::any_of(facets_.begin(), facets_.end(), [&](const Face& g) { return f.subset_of(g); });
}

FaceSet BalancedComplex::faces() const {
  FaceSet out;
  for (const Face& f : facets_) {
    const std::uint32_t mask = f.colorset();
    for (std::uint32_t sub = mask;; sub = (sub - 1) & mask) {
      out.insert(f.restricted(sub));
      if (sub == 0) break;
    }
  }
  return out;
}

std::vector<Face> BalancedComplex::faces_with_colorset(std::uint32_t mask) const {
  std::vector<Face> out;
  for (const Face& f : facets_) {
    if ((f.colorset() & mask) == mask) out.push_back(f.restricted(mask));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Face> BalancedComplex::ridges() const {
  std::vector<Face> out;
  for (const Face& f : facets_) {
    if (f.size() != static_cast<std::size_t>(num_colors())) continue;
    for (int c = 0; c < num_colors(); ++c) out.push_back(f.without(c));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::size_t> f_vector(const BalancedComplex& k) {
  std::vector<std::size_t> f(static_cast<std::size_t>(k.num_colors()) + 1, 0);
  for (const Face& face : k.faces()) ++f[face.size()];
  return f;
}

BalancedComplex antistar(const BalancedComplex& k, const Face& sigma) {
  if (!k.contains(sigma)) throw InvalidInput("antistar: sigma is not a face");
  std::vector<Face> out;
  for (const Face& f : k.facets()) {
    if (!sigma.subset_of(f)) {
      out.push_back(f);
      continue;
    }
    for (const Vertex& v : sigma.vertices()) out.push_back(f.without(v.color));
  }
  return BalancedComplex(k.color_sizes(), std::move(out));
}

namespace {

// Keeps the colors in `mask`, renumbered in increasing order.
Face compress(const Face& f, std::uint32_t mask) {
  std::vector<int> slots;
  for (int c = 0; c < f.num_colors(); ++c) {
    if (mask >> c & 1u) slots.push_back(f[c]);
  }
  return Face(std::move(slots));
}

std::vector<int> compress_sizes(const std::vector<int>& sizes, std::uint32_t mask) {
  std::vector<int> out;
  for (std::size_t c = 0; c < sizes.size(); ++c) {
    if (mask >> c & 1u) out.push_back(sizes[c]);
  }
  return out;
}

std::uint32_t all_colors(int n) { return n >= 32 ? ~0u : (1u << n) - 1; }

}  // namespace

BalancedComplex link(const BalancedComplex& k, const Face& sigma) {
  if (!k.contains(sigma)) throw InvalidInput("link: sigma is not a face");
  const std::uint32_t rest = all_colors(k.num_colors()) & ~sigma.colorset();
  std::vector<Face> out;
  for (const Face& f : k.facets()) {
    if (sigma.subset_of(f)) out.push_back(compress(f, rest));
  }
  return BalancedComplex(compress_sizes(k.color_sizes(), rest), std::move(out));
}

BalancedComplex restrict_colors(const BalancedComplex& k, std::uint32_t mask) {
  mask &= all_colors(k.num_colors());
  std::vector<Face> out;
  for (const Face& f : k.facets()) out.push_back(compress(f, mask));
  return BalancedComplex(compress_sizes(k.color_sizes(), mask), std::move(out));
}

BalancedComplex join(const BalancedComplex& k1, const BalancedComplex& k2) {
  std::vector<int> sizes = k1.color_sizes();
  sizes.insert(sizes.end(), k2.color_sizes().begin(), k2.color_sizes().end());
  std::vector<Face> out;
  for (const Face& f : k1.facets()) {
    for (const Face& g : k2.facets()) {
      std::vector<int> slots = f.slots();
      slots.insert(slots.end(), g.slots().begin(), g.slots().end());
      out.emplace_back(std::move(slots));
    }
  }
  return BalancedComplex(std::move(sizes), std::move(out));
}

FacetRidgeGraph facet_ridge_graph(const BalancedComplex& k) {
  if (!k.is_pure()) throw InvalidInput("facet-ridge graph needs a pure complex");
  const auto& facets = k.facets();
  std::map<Face, std::vector<int>> by_ridge;
  for (int i = 0; i < static_cast<int>(facets.size()); ++i) {
    for (int c = 0; c < k.num_colors(); ++c) by_ridge[facets[i].without(c)].push_back(i);
  }
  std::vector<std::vector<int>> adj(facets.size());
  for (const auto& [ridge, owners] : by_ridge) {
    if (owners.size() > 2) throw InvalidInput("a ridge lies in more than two facets");
    if (owners.size() == 2) {
      adj[owners[0]].push_back(owners[1]);
      adj[owners[1]].push_back(owners[0]);
    }
  }
  std::vector<int> side(facets.size(), -1);
  for (int root = 0; root < static_cast<int>(facets.size()); ++root) {
    if (side[root] != -1) continue;
    side[root] = kSideA;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int v : adj[u]) {
        if (side[v] == -1) {
          side[v] = 1 - side[u];
          q.push(v);
        } else if (side[v] == side[u]) {
          throw InvalidInput("facet adjacency is not bipartite");
        }
      }
    }
  }
  FacetRidgeGraph out;
  std::vector<int> index(facets.size());
  for (std::size_t i = 0; i < facets.size(); ++i) {
    auto& list = side[i] == kSideA ? out.a_facets : out.b_facets;
    index[i] = static_cast<int>(list.size());
    list.push_back(facets[i]);
  }
  std::vector<Edge> edges;
  for (const auto& [ridge, owners] : by_ridge) {
    if (owners.size() != 2) continue;
    const int a = side[owners[0]] == kSideA ? owners[0] : owners[1];
    const int b = a == owners[0] ? owners[1] : owners[0];
    edges.push_back({index[a], index[b]});
  }
  // Two facets share at most one ridge, so edges are distinct.
  out.graph = BipartiteGraph(static_cast<int>(out.a_facets.size()), static_cast<int>(out.b_facets.size()),
                             std::move(edges));
  return out;
}

bool is_missing_face(const BalancedComplex& k, const Face& f) {
  if (f.num_colors() != k.num_colors() || k.contains(f)) return false;
  for (const Vertex& v : f.vertices()) {
    if (!k.contains(f.without(v.color))) return false;
  }
  return true;
}

BalancedComplex subdivide_star(const BalancedComplex& k, const Face& sigma, const BalancedComplex& s,
                               const Face& x) {
  if (sigma.num_colors() != k.num_colors() || !k.contains(sigma)) {
    throw InvalidInput("subdivide_star: sigma is not a face");
  }
  if (sigma.size() < 2) throw InvalidInput("subdivide_star: sigma must have at least two vertices");
  const std::vector<Vertex> sv = sigma.vertices();
  if (s.num_colors() != static_cast<int>(sv.size())) {
    throw InvalidInput("subdivide_star: S must have one color per vertex of sigma");
  }
  if (!s.is_pure()) throw InvalidInput("subdivide_star: S must be pure");
  if (x.num_colors() != s.num_colors() || x.size() != sv.size() || !is_missing_face(s, x)) {
    throw InvalidInput("subdivide_star: x is not a missing facet of S");
  }

  std::vector<int> sizes = k.color_sizes();
  // vertex_map[i][j]: index in K' of S's vertex j of color i.
  std::vector<std::vector<int>> vertex_map(sv.size());
  for (std::size_t i = 0; i < sv.size(); ++i) {
    const int color = sv[i].color;
    for (int j = 0; j < s.color_sizes()[i]; ++j) {
      vertex_map[i].push_back(j == x[static_cast<int>(i)] ? sv[i].index : sizes[color]++);
    }
  }

  const BalancedComplex lk = link(k, sigma);
  const std::uint32_t rest = all_colors(k.num_colors()) & ~sigma.colorset();
  std::vector<int> rest_colors;
  for (int c = 0; c < k.num_colors(); ++c) {
    if (rest >> c & 1u) rest_colors.push_back(c);
  }

  std::vector<Face> out = antistar(k, sigma).facets();
  for (const Face& fs : s.facets()) {
    Face base(k.num_colors());
    for (std::size_t i = 0; i < sv.size(); ++i) base.set(sv[i].color, vertex_map[i][fs[static_cast<int>(i)]]);
    for (const Face& fl : lk.facets()) {
      Face f = base;
      for (std::size_t i = 0; i < rest_colors.size(); ++i) {
        if (fl.has(static_cast<int>(i))) f.set(rest_colors[i], fl[static_cast<int>(i)]);
      }
      out.push_back(f);
    }
  }
  return BalancedComplex(std::move(sizes), std::move(out));
}

BalancedComplex graph_to_complex(const BipartiteGraph& g) {
  std::vector<Face> facets;
  for (const Edge& e : g.edges()) facets.emplace_back(std::vector<int>{e.a, e.b});
  for (int a = 0; a < g.a_size(); ++a) {
    if (g.degree({kSideA, a}) == 0) facets.emplace_back(std::vector<int>{a, kAbsent});
  }
  for (int b = 0; b < g.b_size(); ++b) {
    if (g.degree({kSideB, b}) == 0) facets.emplace_back(std::vector<int>{kAbsent, b});
  }
  return BalancedComplex({g.a_size(), g.b_size()}, std::move(facets));
}

BipartiteGraph complex_to_graph(const BalancedComplex& k) {
  if (k.num_colors() != 2) throw InvalidInput("only 2-colored complexes are graphs");
  std::vector<Edge> edges;
  for (const Face& f : k.facets()) {
    if (f.size() == 2) edges.push_back({f[0], f[1]});
  }
  return BipartiteGraph(k.color_sizes()[0], k.color_sizes()[1], std::move(edges));
}

}  // namespace balrig
