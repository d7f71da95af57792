#include "balrig/rigidity.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "balrig/errors.hpp"
#include "balrig/order.hpp"
#include "balrig/shifting.hpp"

namespace balrig {
namespace {

void require_slots(int k, int l) {
  if (k < 1 || l < 1) throw InvalidInput("k and l must be at least 1");
}

std::string vertex_label(int side, int index) {
  return std::to_string(index + 1) + (side == kSideB ? "'" : "");
}

}  // namespace

long long max_rank(const BipartiteGraph& g, int k, int l) {
  return static_cast<long long>(l) * g.a_size() + static_cast<long long>(k) * g.b_size() -
         static_cast<long long>(k) * l;
}

std::vector<std::size_t> rigidity_theta_sizes(const BipartiteGraph& g, int k, int l) {
  return {static_cast<std::size_t>(std::max(g.a_size(), k)), static_cast<std::size_t>(std::max(g.b_size(), l))};
}

GenericMatrix build_rigidity_matrix(const BipartiteGraph& g, int k, int l, const Theta& theta) {
  require_slots(k, l);
  const auto need = rigidity_theta_sizes(g, k, l);
  if (theta.num_blocks() != 2 || theta.block_size(0) < need[0] || theta.block_size(1) < need[1]) {
    throw InvalidInput("theta is too small for this rigidity matrix");
  }
  std::vector<std::string> rows, cols;
  for (const Edge& e : g.edges()) rows.push_back(vertex_label(kSideA, e.a) + vertex_label(kSideB, e.b));
  for (int a = 0; a < g.a_size(); ++a) {
    for (int s = 0; s < l; ++s) cols.push_back(vertex_label(kSideA, a) + "#" + std::to_string(s + 1));
  }
  for (int b = 0; b < g.b_size(); ++b) {
    for (int s = 0; s < k; ++s) cols.push_back(vertex_label(kSideB, b) + "#" + std::to_string(s + 1));
  }
  GenericMatrix m(theta.prime(), std::move(rows), std::move(cols));
  m.seed = theta.seed();
  const std::size_t b_offset = static_cast<std::size_t>(g.a_size()) * l;
  for (std::size_t r = 0; r < g.edges().size(); ++r) {
    const Edge& e = g.edges()[r];
    for (int s = 0; s < l; ++s) m.at(r, static_cast<std::size_t>(e.a) * l + s) = theta.at(kSideB, s, e.b);
    for (int s = 0; s < k; ++s) m.at(r, b_offset + static_cast<std::size_t>(e.b) * k + s) = theta.at(kSideA, s, e.a);
  }
  return m;
}

namespace {

RigidityReport report_from_rank(const BipartiteGraph& g, int k, int l, std::size_t r) {
  RigidityReport rep;
  rep.k = k;
  rep.l = l;
  rep.rank = r;
  rep.num_edges = g.num_edges();
  rep.max_rank = max_rank(g, k, l);
  rep.is_stress_free = r == g.num_edges();
  rep.is_rigid = static_cast<long long>(r) == rep.max_rank;
  rep.stress_dim = g.num_edges() - r;
  rep.size_warning = k > g.a_size() || l > g.b_size();
  return rep;
}

}  // namespace

RigidityReport analyze(const BipartiteGraph& g, int k, int l, const Theta& theta) {
  const std::size_t r = rank(build_rigidity_matrix(g, k, l, theta));
  RigidityReport rep = report_from_rank(g, k, l, r);
  rep.meta.prime = theta.prime();
  rep.meta.seed = theta.seed();
  rep.meta.trials = 1;
  return rep;
}

RigidityReport analyze(const BipartiteGraph& g, int k, int l, const TrialPolicy& policy) {
  require_slots(k, l);
  const auto sizes = rigidity_theta_sizes(g, k, l);
  auto [r, meta] = run_trials<std::size_t>(
      policy, static_cast<double>(g.num_edges()), [&](const PrimeField& field, std::uint64_t seed) {
        return rank(build_rigidity_matrix(g, k, l, sample_theta(field, seed, sizes)));
      });
  RigidityReport rep = report_from_rank(g, k, l, r);
  rep.meta = meta;
  return rep;
}

std::vector<std::vector<Residue>> stress_space(const BipartiteGraph& g, int k, int l, const Theta& theta) {
  return left_kernel(build_rigidity_matrix(g, k, l, theta));
}

StressSpace stress_space(const BipartiteGraph& g, int k, int l, const TrialPolicy& policy) {
  const RigidityReport rep = analyze(g, k, l, policy);
  const PrimeField field(policy.prime);
  StressSpace out;
  out.meta = rep.meta;
  out.theta_seed = trial_seed(policy.seed, 0);
  const Theta theta = sample_theta(field, out.theta_seed, rigidity_theta_sizes(g, k, l));
  out.basis = stress_space(g, k, l, theta);
  if (out.basis.size() != rep.stress_dim) throw InternalError("stress space dimension disagrees with rank");
  for (const auto& w : out.basis) {
    if (!satisfies_equilibrium(g, k, l, theta, w)) throw InternalError("stress fails vertex equilibrium");
  }
  return out;
}

bool satisfies_equilibrium(const BipartiteGraph& g, int k, int l, const Theta& theta,
                           const std::vector<Residue>& weights) {
  if (weights.size() != g.num_edges()) throw InvalidInput("one weight per edge is required");
  const PrimeField field(theta.prime());
  // sums_a[a][s] = sum_b w_ab theta_{s'b};  sums_b[b][s] = sum_a w_ab theta_{sa}.
  std::vector<std::vector<Residue>> sums_a(g.a_size(), std::vector<Residue>(l, 0));
  std::vector<std::vector<Residue>> sums_b(g.b_size(), std::vector<Residue>(k, 0));
  for (std::size_t t = 0; t < g.num_edges(); ++t) {
    const Edge& e = g.edges()[t];
    for (int s = 0; s < l; ++s) sums_a[e.a][s] = field.add(sums_a[e.a][s], field.mul(weights[t], theta.at(kSideB, s, e.b)));
    for (int s = 0; s < k; ++s) sums_b[e.b][s] = field.add(sums_b[e.b][s], field.mul(weights[t], theta.at(kSideA, s, e.a)));
  }
  auto zero = [](const std::vector<Residue>& v) { return std::all_of(v.begin(), v.end(), [](Residue x) { return x == 0; }); };
  return std::all_of(sums_a.begin(), sums_a.end(), zero) && std::all_of(sums_b.begin(), sums_b.end(), zero);
}

LamanReport laman_check(const BipartiteGraph& g, int k, int l) {
  require_slots(k, l);
  const int n = g.a_size();
  const int m = g.b_size();
  if (n + m > kLamanVertexCap) {
    throw SizeCapExceeded("laman check is exhaustive and limited to " + std::to_string(kLamanVertexCap) +
                          " vertices (got " + std::to_string(n + m) + ")");
  }
  if (n < k || m < l) throw InvalidInput("laman check needs |A| >= k and |B| >= l");

  LamanReport rep;
  rep.k = k;
  rep.l = l;
  rep.edges = g.num_edges();
  rep.required = max_rank(g, k, l);
  rep.count_holds = static_cast<long long>(rep.edges) == rep.required;

  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
  for (const Edge& e : g.edges()) adj[e.a] |= 1u << e.b;

  for (std::uint32_t bmask = 0; bmask < (1u << m); ++bmask) {
    const int nb = std::popcount(bmask);
    if (nb < l) continue;
    for (std::uint32_t amask = 0; amask < (1u << n); ++amask) {
      const int na = std::popcount(amask);
      if (na < k) continue;
      ++rep.subsets_checked;
      std::size_t edges = 0;
      for (std::uint32_t rest = amask; rest; rest &= rest - 1) {
        edges += static_cast<std::size_t>(std::popcount(adj[std::countr_zero(rest)] & bmask));
      }
      const long long bound = static_cast<long long>(l) * na + static_cast<long long>(k) * nb -
                              static_cast<long long>(k) * l;
      if (static_cast<long long>(edges) > bound) {
        LamanWitness w;
        for (int i = 0; i < n; ++i) {
          if (amask >> i & 1u) w.a.push_back(i);
        }
        for (int j = 0; j < m; ++j) {
          if (bmask >> j & 1u) w.b.push_back(j);
        }
        w.edges = edges;
        w.bound = bound;
        rep.witness = std::move(w);
        rep.holds = false;
        return rep;
      }
    }
  }
  rep.holds = rep.count_holds;
  return rep;
}

std::vector<std::size_t> facet_ridge_theta_sizes(const BalancedComplex& k, int l) {
  std::vector<std::size_t> sizes;
  for (int s : k.color_sizes()) sizes.push_back(static_cast<std::size_t>(std::max(s, l)));
  return sizes;
}

GenericMatrix build_facet_ridge_matrix(const BalancedComplex& k, int l, const Theta& theta) {
  if (l < 1) throw InvalidInput("l must be at least 1");
  if (!k.is_pure()) throw InvalidInput("the facet-ridge matrix needs a pure complex");
  const auto need = facet_ridge_theta_sizes(k, l);
  if (theta.num_blocks() != need.size()) throw InvalidInput("theta has the wrong number of blocks");
  for (std::size_t c = 0; c < need.size(); ++c) {
    if (theta.block_size(c) < need[c]) throw InvalidInput("theta is too small for this matrix");
  }
  auto face_label = [](const Face& f) {
    std::string s = "{";
    for (const Vertex& v : f.vertices()) {
      if (s.size() > 1) s += ",";
      s += std::to_string(v.color + 1) + ":" + std::to_string(v.index + 1);
    }
    return s + "}";
  };
  const std::vector<Face> ridges = k.ridges();
  std::vector<std::string> rows, cols;
  for (const Face& f : k.facets()) rows.push_back(face_label(f));
  for (const Face& r : ridges) {
    for (int s = 0; s < l; ++s) cols.push_back(face_label(r) + "#" + std::to_string(s + 1));
  }
  GenericMatrix m(theta.prime(), std::move(rows), std::move(cols));
  m.seed = theta.seed();
  for (std::size_t i = 0; i < k.facets().size(); ++i) {
    const Face& f = k.facets()[i];
    for (int c = 0; c < k.num_colors(); ++c) {
      const Face ridge = f.without(c);
      const auto it = std::lower_bound(ridges.begin(), ridges.end(), ridge);
      const std::size_t j = static_cast<std::size_t>(it - ridges.begin());
      for (int s = 0; s < l; ++s) m.at(i, j * l + s) = theta.at(c, s, f[c]);
    }
  }
  return m;
}

bool rows_independent_M(const BalancedComplex& k, int l, const Theta& theta) {
  const GenericMatrix m = build_facet_ridge_matrix(k, l, theta);
  return rank(m) == m.rows();
}

MatrixIndependence rows_independent_M(const BalancedComplex& k, int l, const TrialPolicy& policy) {
  const auto sizes = facet_ridge_theta_sizes(k, l);
  auto [r, meta] = run_trials<std::size_t>(
      policy, static_cast<double>(k.facets().size()), [&](const PrimeField& field, std::uint64_t seed) {
        return rank(build_facet_ridge_matrix(k, l, sample_theta(field, seed, sizes)));
      });
  MatrixIndependence out;
  out.rank = r;
  out.rows = k.facets().size();
  out.independent = r == out.rows;
  out.meta = meta;
  return out;
}

HeawoodReport heawood_check(const BalancedComplex& k, const TrialPolicy& policy) {
  const ComplexShift shifted = shift_complex(k, VertexOrder::interleaved(k.color_sizes()), policy);
  const auto f = f_vector(k);
  HeawoodReport rep;
  rep.meta = shifted.meta;
  rep.avoids_van_kampen = !contains_join(shifted.complex, 3);
  rep.facets = f.back();
  rep.ridges = f.size() >= 2 ? f[f.size() - 2] : 0;
  rep.holds = rep.facets <= 2 * rep.ridges;
  if (rep.avoids_van_kampen && !rep.holds) {
    throw InternalError("shifted complex avoids [3]^{*(d+1)} but f_d > 2 f_{d-1}");
  }
  return rep;
}

}  // namespace balrig
