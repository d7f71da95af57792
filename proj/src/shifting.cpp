#include "balrig/shifting.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "balrig/errors.hpp"

namespace balrig {
namespace {

void require_graph_order(const BipartiteGraph& g, const VertexOrder& order) {
  if (order.color_sizes() != std::vector<int>{g.a_size(), g.b_size()}) {
    throw InvalidInput("vertex order does not match the graph's sides");
  }
}

void require_theta(const Theta& theta, const std::vector<int>& sizes) {
  if (theta.num_blocks() != sizes.size()) throw InvalidInput("theta has the wrong number of blocks");
  for (std::size_t c = 0; c < sizes.size(); ++c) {
    if (theta.block_size(c) < static_cast<std::size_t>(sizes[c])) {
      throw InvalidInput("theta block is smaller than its color class");
    }
  }
}

std::vector<std::size_t> as_sizes(const std::vector<int>& v) {
  return {v.begin(), v.end()};
}

}  // namespace

BipartiteGraph shift_graph(const BipartiteGraph& g, const VertexOrder& order, const Theta& theta) {
  require_graph_order(g, order);
  require_theta(theta, {g.a_size(), g.b_size()});
  const PrimeField field(theta.prime());
  const auto& basis_edges = g.edges();
  IncrementalBasis basis(field, basis_edges.size());
  std::vector<Edge> kept;
  std::vector<Residue> row(basis_edges.size());
  for (const Edge& cand : lex_sorted_pairs(order)) {
    if (kept.size() == basis_edges.size()) break;
    for (std::size_t t = 0; t < basis_edges.size(); ++t) {
      const Edge& e = basis_edges[t];
      row[t] = field.mul(theta.at(kSideA, cand.a, e.a), theta.at(kSideB, cand.b, e.b));
    }
    if (basis.try_insert(row)) kept.push_back(cand);
  }
  if (kept.size() != basis_edges.size()) throw InternalError("graph shifting lost edges");
  return BipartiteGraph(g.a_size(), g.b_size(), std::move(kept));
}

GraphShift shift_graph(const BipartiteGraph& g, const VertexOrder& order, const TrialPolicy& policy) {
  require_graph_order(g, order);
  const auto sizes = as_sizes({g.a_size(), g.b_size()});
  const std::size_t pairs = static_cast<std::size_t>(g.a_size()) * g.b_size();
  const double degree = 2.0 * static_cast<double>(g.num_edges()) * static_cast<double>(pairs);
  auto [graph, meta] = run_trials<BipartiteGraph>(
      policy, degree, [&](const PrimeField& field, std::uint64_t seed) {
        return shift_graph(g, order, sample_theta(field, seed, sizes));
      });
  if (!check_shifted(graph)) throw InternalError("shifted graph is not shifted");
  return {std::move(graph), order, meta};
}

namespace {

// Colorful tuples on the colors of `mask`, as faces, in <_lex order.
std::vector<Face> lex_sorted_tuples(const VertexOrder& order, std::uint32_t mask) {
  const auto& sizes = order.color_sizes();
  const int n = static_cast<int>(sizes.size());
  std::vector<Face> out;
  Face cur(n);
  std::function<void(int)> rec = [&](int c) {
    if (c == n) {
      out.push_back(cur);
      return;
    }
    if (!(mask >> c & 1u)) {
      rec(c + 1);
      return;
    }
    for (int i = 0; i < sizes[c]; ++i) {
      cur.set(c, i);
      rec(c + 1);
    }
    cur.clear(c);
  };
  rec(0);
  auto key = [&](const Face& f) {
    std::vector<int> pos;
    for (const Vertex& v : f.vertices()) pos.push_back(order.position(v));
    std::sort(pos.begin(), pos.end());
    return pos;
  };
  std::vector<std::pair<std::vector<int>, Face>> keyed;
  keyed.reserve(out.size());
  for (auto& f : out) keyed.emplace_back(key(f), std::move(f));
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  out.clear();
  for (auto& [k, f] : keyed) out.push_back(std::move(f));
  return out;
}

}  // namespace

BalancedComplex shift_complex(const BalancedComplex& k, const VertexOrder& order, const Theta& theta) {
  if (order.color_sizes() != k.color_sizes()) {
    throw InvalidInput("vertex order does not match the complex's color classes");
  }
  require_theta(theta, k.color_sizes());
  const PrimeField field(theta.prime());
  const int n = k.num_colors();
  std::vector<Face> kept;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const std::vector<Face> basis_faces = k.faces_with_colorset(mask);
    if (basis_faces.empty()) continue;
    IncrementalBasis basis(field, basis_faces.size());
    std::vector<Residue> row(basis_faces.size());
    std::size_t found = 0;
    for (const Face& cand : lex_sorted_tuples(order, mask)) {
      if (found == basis_faces.size()) break;
      for (std::size_t t = 0; t < basis_faces.size(); ++t) {
        Residue coeff = 1;
        for (int c = 0; c < n; ++c) {
          if (mask >> c & 1u) coeff = field.mul(coeff, theta.at(c, cand[c], basis_faces[t][c]));
        }
        row[t] = coeff;
      }
      if (basis.try_insert(row)) {
        kept.push_back(cand);
        ++found;
      }
    }
    if (found != basis_faces.size()) throw InternalError("complex shifting lost faces");
  }
  if (kept.empty() && !k.facets().empty()) kept.emplace_back(n);
  return BalancedComplex(k.color_sizes(), std::move(kept));
}

ComplexShift shift_complex(const BalancedComplex& k, const VertexOrder& order, const TrialPolicy& policy) {
  std::size_t faces = k.faces().size();
  const double degree = 2.0 * static_cast<double>(k.num_colors()) * static_cast<double>(faces * faces);
  auto [complex, meta] = run_trials<BalancedComplex>(
      policy, degree, [&](const PrimeField& field, std::uint64_t seed) {
        return shift_complex(k, order, sample_theta(field, seed, as_sizes(k.color_sizes())));
      });
  if (f_vector(complex) != f_vector(k)) throw InternalError("shifting changed the f-vector");
  if (!check_shifted(complex)) throw InternalError("shifted complex is not shifted");
  return {std::move(complex), order, meta};
}

bool check_shifted(const BipartiteGraph& g) {
  for (const Edge& e : g.edges()) {
    if (e.a > 0 && !g.has_edge(e.a - 1, e.b)) return false;
    if (e.b > 0 && !g.has_edge(e.a, e.b - 1)) return false;
  }
  return true;
}

bool check_shifted(const BalancedComplex& k) {
  // Single decrements on facets generate every replacement on every face.
  for (const Face& f : k.facets()) {
    for (int c = 0; c < k.num_colors(); ++c) {
      if (f.has(c) && f[c] > 0 && !k.contains(f.with(c, f[c] - 1))) return false;
    }
  }
  return true;
}

bool contains_complete_bipartite(const BipartiteGraph& g, int r, int s) {
  if (r < 0 || s < 0) throw InvalidInput("negative subgraph size");
  if (r > g.a_size() || s > g.b_size()) return false;
  if (r == 0 || s == 0) return true;
  if (check_shifted(g)) return g.has_edge(r - 1, s - 1);
  // Choose s vertices of B; count A-vertices adjacent to all of them.
  std::vector<int> pick;
  std::function<bool(int)> rec = [&](int from) {
    if (static_cast<int>(pick.size()) == s) {
      int common = 0;
      for (int a = 0; a < g.a_size(); ++a) {
        bool all = std::all_of(pick.begin(), pick.end(), [&](int b) { return g.has_edge(a, b); });
        common += all ? 1 : 0;
      }
      return common >= r;
    }
    for (int b = from; b < g.b_size(); ++b) {
      if (g.degree({kSideB, b}) < r) continue;
      pick.push_back(b);
      if (rec(b + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  return rec(0);
}

bool contains_join(const BalancedComplex& k, int points) {
  if (points < 0) throw InvalidInput("negative point count");
  const int n = k.num_colors();
  for (int c = 0; c < n; ++c) {
    if (k.color_sizes()[c] < points) return false;
  }
  if (points == 0) return true;
  if (check_shifted(k)) return k.contains(Face(std::vector<int>(static_cast<std::size_t>(n), points - 1)));

  // Backtracking over one `points`-subset per color; every colorful choice
  // among the colors fixed so far must be a face.
  std::vector<std::vector<int>> chosen(static_cast<std::size_t>(n));
  std::function<bool(int, const Face&, int)> all_faces = [&](int upto, const Face& cur, int c) {
    if (c == upto) return k.contains(cur);
    for (int v : chosen[c]) {
      if (!all_faces(upto, cur.with(c, v), c + 1)) return false;
    }
    return true;
  };
  std::function<bool(int)> rec;
  std::function<bool(int, int)> pick = [&](int c, int from) {
    if (static_cast<int>(chosen[c].size()) == points) {
      if (!all_faces(c + 1, Face(n), 0)) return false;
      return rec(c + 1);
    }
    for (int v = from; v < k.color_sizes()[c]; ++v) {
      chosen[c].push_back(v);
      if (pick(c, v + 1)) return true;
      chosen[c].pop_back();
    }
    return false;
  };
  rec = [&](int c) { return c == n ? true : pick(c, 0); };
  return rec(0);
}

}  // namespace balrig
