#include "balrig/selftest.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "balrig/complex.hpp"
#include "balrig/errors.hpp"
#include "balrig/families.hpp"
#include "balrig/graph.hpp"
#include "balrig/order.hpp"
#include "balrig/rigidity.hpp"
#include "balrig/shifting.hpp"
#include "rng.hpp"

namespace balrig {
namespace {

namespace fam = families;
using detail::uniform_below;
using detail::uniform_int;

std::uint64_t corpus_seed(const TrialPolicy& p, int criterion, int i) {
  return detail::splitmix64(detail::splitmix64(p.seed) ^ (static_cast<std::uint64_t>(criterion) << 32) ^
                            static_cast<std::uint64_t>(i));
}

CriterionResult result(int id, bool ok, const std::string& detail) {
  CriterionResult r;
  r.id = id;
  r.passed = ok;
  r.detail = detail;
  return r;
}

// Uniformly random interleaving of the color classes.
VertexOrder random_order(const std::vector<int>& sizes, std::mt19937_64& rng) {
  std::vector<int> colors;
  for (int c = 0; c < static_cast<int>(sizes.size()); ++c) colors.insert(colors.end(), sizes[c], c);
  for (std::size_t i = colors.size(); i > 1; --i) std::swap(colors[i - 1], colors[uniform_below(rng, i)]);
  std::vector<int> next(sizes.size(), 0);
  std::vector<Vertex> seq;
  for (int c : colors) seq.push_back({c, next[c]++});
  return VertexOrder(sizes, std::move(seq));
}

// The shared corpus of criteria 2 and 3.
BipartiteGraph corpus_graph(const TrialPolicy& p, int i) {
  std::mt19937_64 rng(corpus_seed(p, 2, i));
  const int n = uniform_int(rng, 1, 6);
  const int m = uniform_int(rng, 1, 6);
  const int num = uniform_int(rng, 1, 3);
  return fam::random_bipartite(n, m, num, 4, rng());
}

CriterionResult rank_law(const TrialPolicy& p) {
  int cases = 0;
  for (int k = 1; k <= 3; ++k) {
    for (int l = 1; l <= 3; ++l) {
      for (int n = k; n <= 6; ++n) {
        for (int m = l; m <= 6; ++m) {
          const RigidityReport r = analyze(fam::complete_bipartite(n, m), k, l, p);
          if (static_cast<long long>(r.rank) != static_cast<long long>(l) * n + k * m - k * l) {
            std::ostringstream os;
            os << "K_{" << n << "," << m << "} (" << k << "," << l << "): rank " << r.rank;
            return result(1, false, os.str());
          }
          ++cases;
        }
      }
    }
  }
  return result(1, true, std::to_string(cases) + " (k,l,n,m) cases");
}

CriterionResult shifting_conservation(const TrialPolicy& p) {
  for (int i = 0; i < 200; ++i) {
    const BipartiteGraph g = corpus_graph(p, i);
    std::mt19937_64 rng(corpus_seed(p, 102, i));
    const VertexOrder order = random_order({g.a_size(), g.b_size()}, rng);
    const GraphShift s = shift_graph(g, order, p);
    if (s.graph.num_edges() != g.num_edges() || !check_shifted(s.graph)) {
      return result(2, false, "graph " + std::to_string(i) + " breaks conservation");
    }
  }
  return result(2, true, "200 graphs");
}

CriterionResult shifting_rigidity(const TrialPolicy& p) {
  const PrimeField field(p.prime);
  int checks = 0;
  for (int i = 0; i < 200; ++i) {
    const BipartiteGraph g = corpus_graph(p, i);
    for (int k = 1; k <= std::min(3, g.a_size()); ++k) {
      for (int l = 1; l <= std::min(3, g.b_size()); ++l) {
        const Theta theta = sample_theta(field, trial_seed(corpus_seed(p, 3, i), k * 4 + l),
                                         rigidity_theta_sizes(g, k, l));
        const BipartiteGraph gb = shift_graph(g, VertexOrder::admissible(g.a_size(), g.b_size(), k, l), theta);
        const RigidityReport r = analyze(g, k, l, theta);
        const bool free_b = !(k < g.a_size() && l < g.b_size() && gb.has_edge(k, l));
        bool rigid_b = true;
        for (int a = 0; a < g.a_size(); ++a) {
          for (int b = 0; b < g.b_size(); ++b) {
            if ((a < k || b < l) && !gb.has_edge(a, b)) rigid_b = false;
          }
        }
        if (free_b != r.is_stress_free || rigid_b != r.is_rigid) {
          std::ostringstream os;
          os << "graph " << i << " (" << k << "," << l << "): shifted says rigid=" << rigid_b
             << " free=" << free_b << ", rank says rigid=" << r.is_rigid << " free=" << r.is_stress_free;
          return result(3, false, os.str());
        }
        ++checks;
      }
    }
  }
  return result(3, true, std::to_string(checks) + " (graph,k,l) comparisons");
}

CriterionResult planar(const TrialPolicy& p) {
  int deleted = 0;
  for (int i = 0; i < 50; ++i) {
    std::mt19937_64 rng(corpus_seed(p, 4, i));
    const int faces = uniform_int(rng, 2, 18);
    const BipartiteGraph g = fam::random_quadrangulation(faces, rng());
    const RigidityReport r = analyze(g, 2, 2, p);
    if (!r.is_rigid || !r.is_stress_free) {
      return result(4, false, "quadrangulation " + std::to_string(i) + " is not (2,2)-rigid and stress free");
    }
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<Edge> edges = g.edges();
      const int drop = uniform_int(rng, 1, 3);
      for (int t = 0; t < drop; ++t) edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(uniform_below(rng, edges.size())));
      const BipartiteGraph h(g.a_size(), g.b_size(), std::move(edges));
      if (!analyze(h, 2, 2, p).is_stress_free) {
        return result(4, false, "edge-deleted quadrangulation " + std::to_string(i) + " has a stress");
      }
      ++deleted;
    }
  }
  return result(4, true, "50 quadrangulations, " + std::to_string(deleted) + " deletion subgraphs");
}

CriterionResult trees_outerplanar(const TrialPolicy& p) {
  for (int i = 0; i < 100; ++i) {
    std::mt19937_64 rng(corpus_seed(p, 5, i));
    const BipartiteGraph t = fam::random_tree(uniform_int(rng, 1, 8), uniform_int(rng, 1, 8), rng());
    if (!analyze(t, 1, 1, p).is_stress_free) return result(5, false, "tree " + std::to_string(i) + " has a stress");
  }
  int maximal = 0;
  for (int i = 0; i < 100; ++i) {
    std::mt19937_64 rng(corpus_seed(p, 105, i));
    const int n = uniform_int(rng, 2, 8);
    const bool plain = i % 4 == 0;
    const int pendants = plain ? 0 : uniform_int(rng, 0, 4);
    const int deletions = plain ? 0 : uniform_int(rng, 0, 2);
    const BipartiteGraph g = fam::random_outerplanar(n, pendants, deletions, rng());
    const RigidityReport r21 = analyze(g, 2, 1, p);
    const RigidityReport r12 = analyze(g, 1, 2, p);
    if (!r21.is_stress_free || !r12.is_stress_free) {
      return result(5, false, "outerplanar graph " + std::to_string(i) + " has a stress");
    }
    if (plain) {
      if (g.num_edges() != static_cast<std::size_t>(3 * n - 2) || !r21.is_rigid) {
        return result(5, false, "quadrangulated polygon " + std::to_string(i) + " is not minimally (2,1)-rigid");
      }
      ++maximal;
    }
  }
  return result(5, true, "100 trees, 100 outerplanar graphs (" + std::to_string(maximal) + " maximal)");
}

CriterionResult cone(const TrialPolicy& p) {
  int predicates = 0;
  for (int i = 0; i < 100; ++i) {
    std::mt19937_64 rng(corpus_seed(p, 6, i));
    const int n = uniform_int(rng, 1, 5);
    const int m = uniform_int(rng, 1, 5);
    const BipartiteGraph g = fam::random_bipartite(n, m, uniform_int(rng, 1, 3), 4, rng());
    const VertexOrder order = random_order({n, m}, rng);
    const BipartiteGraph gb = shift_graph(g, order, p).graph;
    if (shift_graph(cone_left(g), cone_left_order(order), p).graph != cone_left(gb) ||
        shift_graph(cone_right(g), cone_right_order(order), p).graph != cone_right(gb)) {
      return result(6, false, "coning and shifting do not commute on graph " + std::to_string(i));
    }
    for (int k = 1; k <= std::min(2, n); ++k) {
      for (int l = 1; l <= std::min(2, m); ++l) {
        const RigidityReport base = analyze(g, k, l, p);
        const RigidityReport left = analyze(cone_left(g), k + 1, l, p);
        const RigidityReport right = analyze(cone_right(g), k, l + 1, p);
        if (base.is_rigid != left.is_rigid || base.is_stress_free != left.is_stress_free ||
            base.is_rigid != right.is_rigid || base.is_stress_free != right.is_stress_free) {
          return result(6, false, "cone predicate mismatch on graph " + std::to_string(i));
        }
        predicates += 4;
      }
    }
  }
  return result(6, true, "100 graphs, " + std::to_string(predicates) + " predicate equivalences");
}

struct LemmaTally {
  int instances = 0;
  std::vector<int> parts;
};

// Samples instances until 200 meet a hypothesis of each lemma; parts are
// tallied separately.
CriterionResult lemmas(const TrialPolicy& p) {
  std::ostringstream detail;
  auto sides_ok = [](const BipartiteGraph& g, int k, int l) { return g.a_size() >= k && g.b_size() >= l; };

  // Deletion.
  LemmaTally del{0, {0, 0}};
  for (int i = 0; del.instances < 200 && i < 20000; ++i) {
    std::mt19937_64 rng(corpus_seed(p, 7, i));
    const int n = uniform_int(rng, 2, 5), m = uniform_int(rng, 2, 5);
    const BipartiteGraph g = fam::random_bipartite(n, m, uniform_int(rng, 1, 7), 8, rng());
    const int side = static_cast<int>(uniform_below(rng, 2));
    const Vertex v{side, static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(g.side_size(side))))};
    const BipartiteGraph gp = delete_vertex(g, v).graph;
    const int k = uniform_int(rng, 1, 3), l = uniform_int(rng, 1, 3);
    if (!sides_ok(gp, k, l)) continue;
    const int d = g.degree(v);
    const int bound = side == kSideA ? l : k;
    const RigidityReport rp = analyze(gp, k, l, p);
    bool hit = false;
    if (rp.is_stress_free && d <= bound) {
      hit = true;
      ++del.parts[0];
      if (!analyze(g, k, l, p).is_stress_free) return result(7, false, "deletion lemma part 1 fails, sample " + std::to_string(i));
    }
    if (rp.is_rigid && d >= bound) {
      hit = true;
      ++del.parts[1];
      if (!analyze(g, k, l, p).is_rigid) return result(7, false, "deletion lemma part 2 fails, sample " + std::to_string(i));
    }
    del.instances += hit ? 1 : 0;
  }

  // Contraction.
  LemmaTally con{0, {0, 0}};
  for (int i = 0; con.instances < 200 && i < 20000; ++i) {
    std::mt19937_64 rng(corpus_seed(p, 107, i));
    const int n = uniform_int(rng, 2, 5), m = uniform_int(rng, 2, 5);
    const BipartiteGraph g = fam::random_bipartite(n, m, uniform_int(rng, 1, 7), 8, rng());
    const int side = static_cast<int>(uniform_below(rng, 2));
    const int size = g.side_size(side);
    const int u = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(size)));
    int w = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(size - 1)));
    if (w >= u) ++w;
    const Contraction c = contract(g, {side, u}, {side, w});
    const int k = uniform_int(rng, 1, 3), l = uniform_int(rng, 1, 3);
    if (!sides_ok(c.graph, k, l)) continue;
    const int bound = side == kSideA ? l : k;
    const int common = static_cast<int>(c.common_neighbors);
    const RigidityReport rp = analyze(c.graph, k, l, p);
    bool hit = false;
    if (rp.is_stress_free && common <= bound) {
      hit = true;
      ++con.parts[0];
      if (!analyze(g, k, l, p).is_stress_free) return result(7, false, "contraction lemma part 1 fails, sample " + std::to_string(i));
    }
    if (rp.is_rigid && common >= bound) {
      hit = true;
      ++con.parts[1];
      if (!analyze(g, k, l, p).is_rigid) return result(7, false, "contraction lemma part 2 fails, sample " + std::to_string(i));
    }
    con.instances += hit ? 1 : 0;
  }

  // Gluing.
  LemmaTally glu{0, {0, 0, 0}};
  for (int i = 0; glu.instances < 200 && i < 20000; ++i) {
    std::mt19937_64 rng(corpus_seed(p, 207, i));
    const int k = uniform_int(rng, 1, 2), l = uniform_int(rng, 1, 2);
    const int n1 = uniform_int(rng, 1, 4), m1 = uniform_int(rng, 1, 4);
    const int n2 = uniform_int(rng, 1, 4), m2 = uniform_int(rng, 1, 4);
    const BipartiteGraph g1 = fam::random_bipartite(n1, m1, uniform_int(rng, 2, 8), 8, rng());
    const BipartiteGraph g2 = fam::random_bipartite(n2, m2, uniform_int(rng, 2, 8), 8, rng());
    const int sa = uniform_int(rng, 0, std::min(n1, n2));
    const int sb = uniform_int(rng, 0, std::min(m1, m2));
    Identification ident{std::vector<int>(n2, -1), std::vector<int>(m2, -1)};
    for (int t = 0; t < sa; ++t) ident.a[t] = n1 - sa + t;
    for (int t = 0; t < sb; ++t) ident.b[t] = m1 - sb + t;
    const GraphWithMap glued = glue(g1, g2, ident);
    const BipartiteGraph& g = glued.graph;
    // G1 n G2: the shared vertices with the edges both graphs have.
    std::vector<Edge> both;
    for (const Edge& e : g2.edges()) {
      if (e.a < sa && e.b < sb && g1.has_edge(ident.a[e.a], ident.b[e.b])) both.push_back({e.a, e.b});
    }
    const BipartiteGraph inter(sa, sb, std::move(both));

    if (!sides_ok(g1, k, l) || !sides_ok(g2, k, l)) continue;
    const RigidityReport r1 = analyze(g1, k, l, p);
    const RigidityReport r2 = analyze(g2, k, l, p);
    bool hit = false;
    if (r1.is_rigid && r2.is_rigid && sa >= k && sb >= l) {
      hit = true;
      ++glu.parts[0];
      if (!analyze(g, k, l, p).is_rigid) return result(7, false, "gluing lemma part 1 fails, sample " + std::to_string(i));
    }
    if (r1.is_stress_free && r2.is_stress_free) {
      const bool inter_rigid = sides_ok(inter, k, l) && analyze(inter, k, l, p).is_rigid;
      const bool small = (sa <= k && sb == 0) || (sa == 0 && sb <= l);
      if (inter_rigid || small) {
        hit = true;
        ++glu.parts[inter_rigid ? 1 : 2];
        if (!analyze(g, k, l, p).is_stress_free) {
          return result(7, false, std::string("gluing lemma part ") + (inter_rigid ? "2" : "3") + " fails, sample " +
                                      std::to_string(i));
        }
      }
    }
    glu.instances += hit ? 1 : 0;
  }

  const bool enough = del.instances >= 200 && con.instances >= 200 && glu.instances >= 200;
  detail << "deletion " << del.instances << " (" << del.parts[0] << "/" << del.parts[1] << "), contraction "
         << con.instances << " (" << con.parts[0] << "/" << con.parts[1] << "), gluing " << glu.instances << " ("
         << glu.parts[0] << "/" << glu.parts[1] << "/" << glu.parts[2] << ")";
  if (!enough) return result(7, false, "too few instances met a hypothesis: " + detail.str());
  return result(7, true, detail.str() + ", 0 counterexamples");
}

CriterionResult example_laman_stressed(const TrialPolicy& p) {
  const BipartiteGraph g = fam::doubled_k33_minus();
  const LamanReport lam = laman_check(g, 2, 2);
  const RigidityReport r = analyze(g, 2, 2, p);
  std::ostringstream os;
  os << g.a_size() << "+" << g.b_size() << " vertices, " << g.num_edges() << " edges, laman=" << lam.holds
     << ", stress_dim=" << r.stress_dim;
  return result(8, lam.holds && r.stress_dim >= 1, os.str());
}

CriterionResult cube_diagonals(const TrialPolicy& p) {
  const fam::CubicalGraph c3 = fam::cube(3);
  std::vector<Edge> edges = c3.graph.edges();
  for (std::uint32_t x = 0; x < 8; ++x) {
    const Vertex& u = c3.cubes[0][x];
    if (u.color == kSideA) edges.push_back({u.index, c3.cubes[0][x ^ 7u].index});
  }
  const BipartiteGraph g(4, 4, std::move(edges));
  const bool complete = g == fam::complete_bipartite(4, 4);
  const bool laman = laman_check(g, 1, 4).holds;
  const RigidityReport r = analyze(g, 1, 4, p);
  // The same diagonals inside a facet of the 4-cube.
  const BipartiteGraph g4 = fam::augment_facet(fam::cube(4), 0, fam::AugmentMode::kLaman);
  const bool laman4 = laman_check(g4, 1, 4).holds;
  const RigidityReport r4 = analyze(g4, 1, 4, p);
  std::ostringstream os;
  os << "K44=" << complete << " laman=" << laman << " rigid=" << r.is_rigid << " free=" << r.is_stress_free
     << "; 4-cube+diagonals: " << g4.num_edges() << " edges, laman=" << laman4 << " rigid=" << r4.is_rigid
     << " free=" << r4.is_stress_free;
  const bool ok = complete && laman && r.is_rigid && r.is_stress_free && laman4 && r4.is_rigid && r4.is_stress_free;
  return result(9, ok, os.str());
}

CriterionResult stacked_cubical(const TrialPolicy& p) {
  std::ostringstream os;
  bool ok = true;
  int graphs = 0;
  for (int d : {3, 4}) {
    const int max_t = d == 3 ? 5 : 3;
    for (int t = 1; t <= max_t; ++t) {
      std::mt19937_64 rng(corpus_seed(p, 10, d * 16 + t));
      const fam::CubicalGraph sc = fam::stacked_cubical(d, t, rng());
      const int facet = static_cast<int>(uniform_below(rng, sc.boundary.size()));
      const BipartiteGraph g = fam::augment_facet(sc, facet, fam::AugmentMode::kTwoVertex);
      const RigidityReport r = analyze(g, 2, d - 1, p);
      const long long count = static_cast<long long>(g.num_edges());
      const long long sides = fam::stacked_target_edges(d, g);
      const long long closed = static_cast<long long>(d + 1) * t * (1LL << (d - 1)) - 2LL * (d - 1);
      if (!r.is_rigid || !r.is_stress_free || count != closed) {
        ok = false;
        os << "d=" << d << " t=" << t << ": rigid=" << r.is_rigid << " free=" << r.is_stress_free << " edges="
           << count << " (d-1)|A|+2|B|-2(d-1)=" << sides << " (d+1)t2^(d-1)-2(d-1)=" << closed << "; ";
      }
      ++graphs;
    }
  }
  if (ok) os << graphs << " stacks (d=3: t<=5, d=4: t<=3)";
  return result(10, ok, os.str());
}

CriterionResult glued_cross(const TrialPolicy& p) {
  std::ostringstream os;
  bool ok = true;
  for (int d : {3, 4}) {
    const auto pattern = fam::default_gluing_pattern(d);
    const BalancedComplex k = fam::glued_cross_polytopes(d, pattern);
    const FacetRidgeGraph frg = facet_ridge_graph(k);
    const RigidityReport r = analyze(frg.graph, 1, d - 1, p);
    bool regular = true;
    for (int a = 0; a < frg.graph.a_size(); ++a) regular &= frg.graph.degree({kSideA, a}) == d;
    for (int b = 0; b < frg.graph.b_size(); ++b) regular &= frg.graph.degree({kSideB, b}) == d;
    os << "d=" << d << ": " << pattern.size() + 1 << " copies, " << k.facets().size() << " facets, rank " << r.rank
       << "/" << r.max_rank << ", rigid=" << r.is_rigid << "; ";
    ok = ok && regular && !r.is_rigid;
  }
  return result(11, ok, os.str());
}

CriterionResult octahedron(const TrialPolicy& p) {
  const FacetRidgeGraph frg = facet_ridge_graph(fam::cross_polytope_boundary(3));
  const RigidityReport r = analyze(frg.graph, 1, 2, p);
  return result(12, r.is_rigid, "rank " + std::to_string(r.rank) + "/" + std::to_string(r.max_rank));
}

CriterionResult matrix_vs_shift(const TrialPolicy& p) {
  int independent = 0;
  for (int i = 0; i < 30; ++i) {
    std::mt19937_64 rng(corpus_seed(p, 13, i));
    const bool dense = i % 2 == 1;
    const int lo = dense ? 3 : 2;
    std::vector<int> sizes{uniform_int(rng, lo, 4), uniform_int(rng, lo, 4), uniform_int(rng, lo, 4)};
    const int total = sizes[0] * sizes[1] * sizes[2];
    const int facets = dense ? uniform_int(rng, total * 3 / 4, total) : uniform_int(rng, 1, total);
    const BalancedComplex k = fam::random_balanced_complex(sizes, facets, rng());
    const bool m_independent = rows_independent_M(k, 2, p).independent;
    const ComplexShift s = shift_complex(k, VertexOrder::interleaved(sizes), p);
    if (m_independent == contains_join(s.complex, 3)) {
      return result(13, false, "complex " + std::to_string(i) + " disagrees");
    }
    independent += m_independent ? 1 : 0;
  }
  return result(13, true, "30 complexes (" + std::to_string(independent) + " independent, " +
                              std::to_string(30 - independent) + " dependent)");
}

CriterionResult join_shift(const TrialPolicy& p) {
  int pairs = 0;
  for (int i = 0; i < 40; ++i) {
    std::mt19937_64 rng(corpus_seed(p, 14, i));
    auto make = [&]() {
      std::vector<int> sizes(static_cast<std::size_t>(uniform_int(rng, 1, 2)));
      int total = 1;
      for (int& s : sizes) total *= (s = uniform_int(rng, 2, 3));
      return fam::random_balanced_complex(sizes, uniform_int(rng, 1, total), rng());
    };
    const BalancedComplex k = make();
    const BalancedComplex l = make();
    const VertexOrder ok_order = VertexOrder::interleaved(k.color_sizes());
    const VertexOrder ol_order = VertexOrder::interleaved(l.color_sizes());
    // A random linear extension of the two orders side by side.
    const int ck = k.num_colors();
    std::vector<int> which(ok_order.size(), 0);
    which.insert(which.end(), ol_order.size(), 1);
    for (std::size_t t = which.size(); t > 1; --t) std::swap(which[t - 1], which[uniform_below(rng, t)]);
    std::vector<Vertex> seq;
    std::size_t ik = 0, il = 0;
    for (int w : which) {
      if (w == 0) {
        seq.push_back(ok_order.sequence()[ik++]);
      } else {
        Vertex v = ol_order.sequence()[il++];
        v.color += ck;
        seq.push_back(v);
      }
    }
    const BalancedComplex kl = join(k, l);
    const VertexOrder merged(kl.color_sizes(), std::move(seq));
    const BalancedComplex lhs = shift_complex(kl, merged, p).complex;
    const BalancedComplex rhs = join(shift_complex(k, ok_order, p).complex, shift_complex(l, ol_order, p).complex);
    if (lhs != rhs) return result(14, false, "pair " + std::to_string(i) + " breaks join compatibility");
    ++pairs;
  }
  return result(14, true, std::to_string(pairs) + " pairs with random merged orders");
}

CriterionResult gamma(const TrialPolicy&) {
  int complexes = 0, additions = 0;
  for (int d = 1; d <= 3; ++d) {
    for (int variant = 0; variant < 3; ++variant) {
      std::vector<int> sizes(static_cast<std::size_t>(d + 1), variant == 0 ? 3 : 4);
      if (variant == 2) {
        for (std::size_t c = 0; c < sizes.size(); c += 2) sizes[c] = 3;
      }
      const BalancedComplex g = fam::gamma_complex(d, sizes);
      if (!check_shifted(g) || contains_join(g, 3)) {
        return result(15, false, "gamma(" + std::to_string(d) + ") is not shifted or contains [3]^{*(d+1)}");
      }
      std::vector<int> cur(sizes.size(), 0);
      for (;;) {
        const Face f(cur);
        if (!g.contains(f)) {
          std::vector<Face> facets = g.facets();
          facets.push_back(f);
          if (!contains_join(BalancedComplex(sizes, std::move(facets)), 3)) {
            return result(15, false, "adding a facet to gamma(" + std::to_string(d) + ") keeps it [3]^{*(d+1)}-free");
          }
          ++additions;
        }
        std::size_t c = 0;
        while (c < cur.size() && ++cur[c] == sizes[c]) cur[c++] = 0;
        if (c == cur.size()) break;
      }
      ++complexes;
    }
  }
  return result(15, true, std::to_string(complexes) + " complexes, " + std::to_string(additions) + " single-facet additions");
}

CriterionResult degenerate(const TrialPolicy& p) {
  int graphs = 0;
  for (int i = 0; i < 40; ++i) {
    std::mt19937_64 rng(corpus_seed(p, 16, i));
    const int n = uniform_int(rng, 8, 20);
    const BipartiteGraph g = fam::random_degenerate(n, 7, rng());
    if (static_cast<long long>(g.num_edges()) >= 4LL * n) return result(16, false, "graph has 4N edges or more");
    if (!analyze(g, 7, 7, p).is_stress_free) return result(16, false, "graph " + std::to_string(i) + " has a (7,7) stress");
    ++graphs;
  }
  return result(16, true, std::to_string(graphs) + " graphs with N <= 20");
}

}  // namespace

const std::vector<Criterion>& acceptance_criteria() {
  static const std::vector<Criterion> all = {
      {1, "rank of complete bipartite graphs", rank_law},
      {2, "shifting keeps |E| and yields a shifted graph", shifting_conservation},
      {3, "shifted-graph verdicts equal rank verdicts", shifting_rigidity},
      {4, "planar bipartite graphs are (2,2)-stress free", planar},
      {5, "forests (1,1) and outerplanar (2,1) stress free", trees_outerplanar},
      {6, "cone lemma", cone},
      {7, "deletion, contraction and gluing lemmas", lemmas},
      {8, "doubled K33 minus an edge: Laman with a stress", example_laman_stressed},
      {9, "3-cube plus long diagonals is (1,4)-Laman", cube_diagonals},
      {10, "augmented stacked cubical graphs: (2,d-1)-rigid, stress free, closed-form edge count", stacked_cubical},
      {11, "glued cross-polytopes: facet-ridge graph not (1,d-1)-rigid", glued_cross},
      {12, "octahedron facet-ridge graph is (1,2)-rigid", octahedron},
      {13, "M(K,2) independence equals shifted avoidance", matrix_vs_shift},
      {14, "join commutes with shifting", join_shift},
      {15, "Gamma(d) is maximal without [3]^{*(d+1)}", gamma},
      {16, "7-degenerate graphs are (7,7)-stress free", degenerate},
  };
  return all;
}

CriterionResult run_criterion(const Criterion& c, const TrialPolicy& policy) {
  CriterionResult r;
  try {
    r = c.run(policy);
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.id = c.id;
  r.name = c.name;
  return r;
}

}  // namespace balrig
