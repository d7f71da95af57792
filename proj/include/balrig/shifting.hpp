#pragma once

#include <cstdint>

#include "balrig/complex.hpp"
#include "balrig/graph.hpp"
#include "balrig/matrix.hpp"
#include "balrig/order.hpp"
#include "balrig/trial.hpp"

namespace balrig {

struct GraphShift {
  BipartiteGraph graph;
  VertexOrder order;
  TrialMeta meta;
};

struct ComplexShift {
  BalancedComplex complex;
  VertexOrder order;
  TrialMeta meta;
};

/// Balanced shifting G^{b,<} for one Theta draw: pairs ij' are scanned in
/// <_lex order and kept iff the expansion of theta_i theta_j' over the edge
/// monomials {x_p y_q : pq' in E} is independent of the expansions kept so
/// far. Theta must have blocks of sizes (a_size, b_size).
BipartiteGraph shift_graph(const BipartiteGraph& g, const VertexOrder& order,
                           const Theta& theta);

/// Same, with Theta drawn per the policy; every draw must give the same graph.
GraphShift shift_graph(const BipartiteGraph& g, const VertexOrder& order,
                       const TrialPolicy& policy);

/// Balanced shifting K^{b,<}: for every colorset T the colorful theta
/// monomials on T are scanned in <_lex order against the basis of faces of K
/// with colorset T (coefficient of prod theta_{v_c} on face F is
/// prod Theta_c[v_c][F_c]); K^b is the set of supports kept.
BalancedComplex shift_complex(const BalancedComplex& k, const VertexOrder& order,
                              const Theta& theta);
ComplexShift shift_complex(const BalancedComplex& k, const VertexOrder& order,
                           const TrialPolicy& policy);

/// If ij' is an edge, so is pq' for all p <= i, q <= j.
bool check_shifted(const BipartiteGraph& g);
/// Replacing any vertex of a face by a smaller vertex of the same color gives
/// a face.
bool check_shifted(const BalancedComplex& k);

/// Whether g has a K_{r,s} subgraph (r vertices in A, s in B). Shifted graphs
/// need one membership test; others are searched exhaustively.
bool contains_complete_bipartite(const BipartiteGraph& g, int r, int s);

/// Whether k contains the join of (num_colors) sets of `points` vertices,
/// i.e. [points]^{*(d+1)}. Shifted complexes need one membership test;
/// others are searched exhaustively.
bool contains_join(const BalancedComplex& k, int points);

}  // namespace balrig
