#include "doctest.h"
#include "oracles.hpp"

#include <functional>
#include <queue>

#include "balrig/errors.hpp"
#include "balrig/families.hpp"
#include "balrig/rigidity.hpp"
#include "balrig/shifting.hpp"

using namespace balrig;
namespace fam = balrig::families;

namespace {

bool connected(const BipartiteGraph& g) {
  const int n = g.a_size() + g.b_size();
  if (n == 0) return true;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::queue<Vertex> q;
  q.push({kSideA, 0});
  seen[0] = true;
  int count = 1;
  while (!q.empty()) {
    const Vertex v = q.front();
    q.pop();
    for (int w : g.neighbors(v)) {
      const Vertex u{1 - v.color, w};
      const int id = u.color == kSideA ? w : g.a_size() + w;
      if (!seen[static_cast<std::size_t>(id)]) {
        seen[static_cast<std::size_t>(id)] = true;
        ++count;
        q.push(u);
      }
    }
  }
  return count == n;
}

}  // namespace

TEST_CASE("basic graphs") {
  CHECK(fam::cycle(2) == fam::complete_bipartite(2, 2));
  CHECK(fam::complete_bipartite(3, 3).num_edges() == 9);
  CHECK(fam::cycle(5).num_edges() == 10);
  for (std::uint64_t s = 0; s < 50; ++s) {
    const BipartiteGraph t = fam::random_tree(3, 3, s);
    CHECK(t.num_edges() == 5);
    CHECK(connected(t));
  }
  CHECK(fam::random_tree(3, 3, 9) == fam::random_tree(3, 3, 9));
  CHECK(fam::k33_minus() == BipartiteGraph(3, 3, {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2}, {2, 0}, {2, 1}}));
}

TEST_CASE("cubes") {
  const BipartiteGraph q3 = fam::cube_graph(3);
  CHECK(q3.a_size() == 4);
  CHECK(q3.num_edges() == 12);
  for (int i = 0; i < 4; ++i) CHECK(q3.degree({kSideA, i}) == 3);
  CHECK(oracle::isomorphic(fam::cube_graph(2), fam::cycle(2)));
  const BipartiteGraph q4 = fam::cube_graph(4);
  CHECK(q4.a_size() == 8);
  CHECK(q4.b_size() == 8);
  CHECK(q4.num_edges() == 32);
}

TEST_CASE("stacked cubical graphs") {
  CHECK(fam::stacked_cubical(3, 1, 5).graph == fam::cube_graph(3));
  for (std::uint64_t s = 0; s < 10; ++s) {
    const fam::CubicalGraph g = fam::stacked_cubical(3, 2, s);
    CHECK(g.graph.a_size() + g.graph.b_size() == 12);
    CHECK(g.graph.num_edges() == 20);
    CHECK(g.boundary.size() == 10);
    CHECK(fam::stacked_target_edges(3, fam::augment_facet(g, 0, fam::AugmentMode::kTwoVertex)) == 20);
  }
  // On a 3-cube the augmentation adds nothing.
  const fam::CubicalGraph c3 = fam::cube(3);
  for (std::size_t f = 0; f < c3.boundary.size(); ++f) {
    CHECK(fam::augment_facet(c3, static_cast<int>(f), fam::AugmentMode::kTwoVertex) == c3.graph);
  }
}

TEST_CASE("augmentations") {
  const TrialPolicy p;
  const fam::CubicalGraph c4 = fam::cube(4);
  const BipartiteGraph two = fam::augment_facet(c4, 0, fam::AugmentMode::kTwoVertex);
  CHECK(two.num_edges() == 32 + 2);
  const RigidityReport r = analyze(two, 2, 3, p);
  CHECK(r.is_rigid);
  CHECK(r.is_stress_free);

  const BipartiteGraph opp = fam::augment_facet(c4, 0, fam::AugmentMode::kOppositeFacets);
  CHECK(opp.num_edges() == 34);
  CHECK(static_cast<long long>(opp.num_edges()) == fam::stacked_target_edges(4, opp));
  const RigidityReport ro = analyze(opp, 2, 3, p);
  CHECK(ro.is_rigid);
  CHECK(ro.is_stress_free);
  CHECK(fam::augment_facet(fam::cube(3), 0, fam::AugmentMode::kOppositeFacets) == fam::cube_graph(3));

  const BipartiteGraph lam = fam::augment_facet(c4, 0, fam::AugmentMode::kLaman);
  CHECK(lam.num_edges() == 32 + 4);
  CHECK(fam::laman_added_edges(4) == 4);
  // The augmented facet is a 3-cube that has become K_{4,4}.
  const auto chart = c4.facet_vertices(c4.boundary[0]);
  std::vector<int> fa, fb;
  for (const Vertex& v : chart) (v.color == kSideA ? fa : fb).push_back(v.index);
  std::sort(fa.begin(), fa.end());
  std::sort(fb.begin(), fb.end());
  CHECK(induced_subgraph(lam, fa, fb).graph == fam::complete_bipartite(4, 4));
  CHECK(laman_check(lam, 1, 4).holds);

  const BipartiteGraph lam5 = fam::augment_facet(fam::cube(5), 0, fam::AugmentMode::kLaman);
  CHECK(lam5.num_edges() == 80 + 11);
  const RigidityReport r5 = analyze(lam5, 1, 5, p);
  CHECK(r5.is_rigid);
  CHECK(r5.is_stress_free);

  CHECK(fam::parse_augment_mode("opposite-facets") == fam::AugmentMode::kOppositeFacets);
  CHECK(std::string(fam::to_string(fam::AugmentMode::kLaman)) == "laman");
  CHECK_THROWS_AS(fam::parse_augment_mode("nope"), InvalidInput);
}

TEST_CASE("cross-polytopes") {
  CHECK(f_vector(fam::cross_polytope_boundary(3)) == std::vector<std::size_t>{1, 6, 12, 8});
  for (int d = 3; d <= 5; ++d) {
    const BalancedComplex pair = fam::glued_cross_polytopes(d, {fam::Gluing{0, 1, 0}});
    CHECK(pair.facets().size() == 2 * (std::size_t{1} << d) - 2);
  }
  for (int d = 4; d <= 5; ++d) {
    const BalancedComplex k = fam::glued_cross_polytopes(d, fam::default_gluing_pattern(d));
    CHECK(k.facets().size() == static_cast<std::size_t>(2 * d * (1 << d) - 2 * (2 * d - 1)));
    const FacetRidgeGraph g = facet_ridge_graph(k);
    CHECK(g.graph.a_size() == d * (1 << d) - (2 * d - 1));
    CHECK(g.graph.b_size() == g.graph.a_size());
    CHECK(static_cast<long long>(g.graph.num_edges()) == 1LL * d * d * (1 << d) - 2 * d * d + d);
  }
  const auto pattern3 = fam::default_gluing_pattern(3);
  const BalancedComplex k3 = fam::glued_cross_polytopes(3, pattern3);
  CHECK(k3.facets().size() == 8 * (pattern3.size() + 1) - 2 * pattern3.size());
  CHECK_THROWS_AS(fam::glued_cross_polytopes(3, {fam::Gluing{0, 0, 0}}), InvalidInput);
}

TEST_CASE("gamma and van Kampen complexes") {
  CHECK(complex_to_graph(fam::gamma_complex(1, {3, 3})) == fam::k33_minus());
  CHECK(complex_to_graph(fam::van_kampen_complex(2, 1)) == fam::complete_bipartite(3, 3));
  for (int d = 1; d <= 3; ++d) {
    const BalancedComplex g = fam::gamma_complex(d, std::vector<int>(static_cast<std::size_t>(d + 1), 4));
    CHECK(check_shifted(g));
    CHECK_FALSE(contains_join(g, 3));
  }
}

TEST_CASE("quadrangulations") {
  CHECK(oracle::isomorphic(fam::random_quadrangulation(2, 1), fam::cycle(2)));
  for (int faces = 2; faces <= 18; ++faces) {
    const fam::Quadrangulation q = fam::random_quadrangulation_system(faces, static_cast<std::uint64_t>(faces) * 7);
    CHECK_NOTHROW(q.validate());
    CHECK(q.num_faces() == static_cast<std::size_t>(faces));
    const BipartiteGraph g = q.graph();
    CHECK(static_cast<int>(g.num_edges()) == 2 * (g.a_size() + g.b_size()) - 4);
    CHECK(connected(g));
  }
}

TEST_CASE("the cube is reachable by vertex splits") {
  const BipartiteGraph q3 = fam::cube_graph(3);
  bool found = false;
  std::function<void(const fam::Quadrangulation&, int)> grow = [&](const fam::Quadrangulation& q, int depth) {
    if (found) return;
    if (depth == 0) {
      found = oracle::isomorphic(q.graph(), q3);
      return;
    }
    for (int w = 0; w < static_cast<int>(q.num_vertices()) && !found; ++w) {
      const int deg = static_cast<int>(q.rotation(w).size());
      for (int i = 0; i < deg && !found; ++i) {
        for (int j = 0; j < deg && !found; ++j) {
          if (i == j) continue;
          fam::Quadrangulation next = q;
          next.split_vertex(w, i, j);
          next.validate();
          grow(next, depth - 1);
        }
      }
    }
  };
  grow(fam::Quadrangulation(), 4);
  CHECK(found);
}

TEST_CASE("outerplanar and degenerate generators") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const BipartiteGraph g = fam::random_outerplanar(4, 0, 0, s);
    CHECK(g.num_edges() == 10);
    CHECK(g.a_size() == 4);
    const BipartiteGraph d = fam::random_degenerate(15, 7, s);
    CHECK(d.a_size() + d.b_size() == 15);
    CHECK(d.num_edges() < 60);
  }
  const BipartiteGraph r = fam::random_bipartite(4, 5, 1, 1, 3);
  CHECK(r == fam::complete_bipartite(4, 5));
  const BalancedComplex c = fam::random_balanced_complex({3, 3}, 5, 1);
  CHECK(c.facets().size() == 5);
  CHECK_THROWS_AS(fam::random_balanced_complex({2, 2}, 5, 1), InvalidInput);
}
