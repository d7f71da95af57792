#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "balrig/complex.hpp"
#include "balrig/graph.hpp"
#include "balrig/matrix.hpp"
#include "balrig/trial.hpp"

namespace balrig {

struct RigidityReport {
  int k = 0;
  int l = 0;
  std::size_t rank = 0;
  std::size_t num_edges = 0;
  bool is_rigid = false;
  bool is_stress_free = false;
  std::size_t stress_dim = 0;
  long long max_rank = 0;  // l|A| + k|B| - kl
  /// k > |A| or l > |B|: the max_rank formula is applied verbatim anyway.
  bool size_warning = false;
  TrialMeta meta;
};

/// Bipartite (k,l)-rigidity matrix: one row per edge, l columns per A-vertex
/// followed by k columns per B-vertex. Row ab' carries theta_{i'b'} (i < l)
/// in a's block and theta_{ia} (i < k) in b's block. Theta needs blocks of at
/// least max(a_size, k) and max(b_size, l).
GenericMatrix build_rigidity_matrix(const BipartiteGraph& g, int k, int l,
                                    const Theta& theta);

/// Theta block sizes suitable for build_rigidity_matrix.
std::vector<std::size_t> rigidity_theta_sizes(const BipartiteGraph& g, int k, int l);

long long max_rank(const BipartiteGraph& g, int k, int l);

/// Report for a single Theta draw (used by cross-checks sharing Theta).
RigidityReport analyze(const BipartiteGraph& g, int k, int l, const Theta& theta);
RigidityReport analyze(const BipartiteGraph& g, int k, int l, const TrialPolicy& policy);

struct StressSpace {
  /// Each vector has one weight per edge of g, in g.edges() order.
  std::vector<std::vector<Residue>> basis;
  TrialMeta meta;
  std::uint64_t theta_seed = 0;  // draw the basis was computed from
};

/// Left kernel of R^{(k,l)}(g). The dimension is checked across trials; the
/// basis comes from the first draw and is verified against the vertex
/// equilibrium equations.
StressSpace stress_space(const BipartiteGraph& g, int k, int l, const TrialPolicy& policy);
std::vector<std::vector<Residue>> stress_space(const BipartiteGraph& g, int k, int l,
                                               const Theta& theta);

/// Evaluates sum_{v : uv in E} w_uv phi(v) at every vertex u for the
/// embedding phi(a) = (theta_{ia})_{i<k}, phi(b) = (theta_{i'b})_{i<l}.
/// Returns true iff every vertex is in equilibrium.
bool satisfies_equilibrium(const BipartiteGraph& g, int k, int l, const Theta& theta,
                           const std::vector<Residue>& weights);

struct LamanWitness {
  std::vector<int> a;  // induced A-vertices (0-based)
  std::vector<int> b;
  std::size_t edges = 0;
  long long bound = 0;
};

struct LamanReport {
  int k = 0;
  int l = 0;
  bool holds = false;
  bool count_holds = false;  // condition (i): |E| = l|A| + k|B| - kl
  std::size_t edges = 0;
  long long required = 0;
  std::optional<LamanWitness> witness;  // first violator of condition (ii)
  std::size_t subsets_checked = 0;
};

/// Largest |A| + |B| laman_check accepts.
inline constexpr int kLamanVertexCap = 24;

/// Exhaustive (k,l)-Laman test. Induced subgraphs are enumerated in colex
/// order of their vertex sets and the first violator is reported. Throws
/// SizeCapExceeded above kLamanVertexCap vertices and InvalidInput if
/// |A| < k or |B| < l.
LamanReport laman_check(const BipartiteGraph& g, int k, int l);

/// Facet-ridge matrix M(K,l): one row per facet, l columns per ridge; block
/// (F, G) is theta_{F-G} (first l slots of the vertex F-G) when G is in F.
/// Requires a pure complex.
GenericMatrix build_facet_ridge_matrix(const BalancedComplex& k, int l, const Theta& theta);

/// Theta block sizes for build_facet_ridge_matrix.
std::vector<std::size_t> facet_ridge_theta_sizes(const BalancedComplex& k, int l);

struct MatrixIndependence {
  bool independent = false;
  std::size_t rank = 0;
  std::size_t rows = 0;
  TrialMeta meta;
};

MatrixIndependence rows_independent_M(const BalancedComplex& k, int l,
                                      const TrialPolicy& policy);
bool rows_independent_M(const BalancedComplex& k, int l, const Theta& theta);

struct HeawoodReport {
  bool avoids_van_kampen = false;  // K^b has no [3]^{*(d+1)}
  std::size_t facets = 0;          // f_d
  std::size_t ridges = 0;          // f_{d-1}
  bool holds = false;              // f_d <= 2 f_{d-1}
  TrialMeta meta;
};

/// Shifts k with a (2,...,2)-admissible order; when K^b avoids
/// [3]^{*(d+1)}, the inequality f_d <= 2 f_{d-1} must hold (InternalError
/// otherwise). Returns whether it holds.
HeawoodReport heawood_check(const BalancedComplex& k, const TrialPolicy& policy);

}  // namespace balrig
