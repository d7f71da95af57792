#include "doctest.h"
#include "oracles.hpp"

#include "balrig/errors.hpp"
#include "balrig/families.hpp"
#include "balrig/rigidity.hpp"
#include "balrig/shifting.hpp"

using namespace balrig;
namespace fam = balrig::families;

namespace {

constexpr std::uint64_t kSmall = 1000003;

Theta draw_for(const BipartiteGraph& g, int k, int l, std::uint64_t seed) {
  return sample_theta(PrimeField(kSmall), seed, rigidity_theta_sizes(g, k, l));
}

}  // namespace

TEST_CASE("matrix shape and entries") {
  const BipartiteGraph e(1, 1, {{0, 0}});
  const Theta th = draw_for(e, 1, 1, 1);
  const GenericMatrix m = build_rigidity_matrix(e, 1, 1, th);
  CHECK(m.rows() == 1);
  CHECK(m.cols() == 2);
  CHECK(m.at(0, 0) == th.at(1, 0, 0));
  CHECK(m.at(0, 1) == th.at(0, 0, 0));
  CHECK(rank(m) == 1);

  const BipartiteGraph c4 = fam::cycle(2);
  const GenericMatrix r = build_rigidity_matrix(c4, 2, 2, draw_for(c4, 2, 2, 2));
  CHECK(r.rows() == 4);
  CHECK(r.cols() == 8);
  CHECK(oracle::rank_by_minors(oracle::rows_of(r), kSmall) == 4);

  oracle::Gen gen(41);
  for (int t = 0; t < 60; ++t) {
    const BipartiteGraph g = gen.graph(5, 0.5);
    const int k = gen.range(1, 3), l = gen.range(1, 3);
    const Theta th2 = draw_for(g, k, l, static_cast<std::uint64_t>(t));
    const GenericMatrix mm = build_rigidity_matrix(g, k, l, th2);
    CHECK(mm.cols() == static_cast<std::size_t>(l * g.a_size() + k * g.b_size()));
    CHECK(oracle::rows_of(mm) == oracle::rigidity_rows(g, k, l, th2));
  }
}

TEST_CASE("analyze examples") {
  const TrialPolicy p;
  const RigidityReport k33 = analyze(fam::complete_bipartite(3, 3), 2, 2, p);
  CHECK(k33.rank == 8);
  CHECK(k33.is_rigid);
  CHECK_FALSE(k33.is_stress_free);
  CHECK(k33.stress_dim == 1);

  const RigidityReport q3 = analyze(fam::cube_graph(3), 2, 2, p);
  CHECK(q3.rank == 12);
  CHECK(q3.is_rigid);
  CHECK(q3.is_stress_free);

  oracle::Gen gen(43);
  for (int t = 0; t < 20; ++t) {
    CHECK(analyze(fam::random_tree(gen.range(1, 7), gen.range(1, 7), static_cast<std::uint64_t>(t)), 1, 1, p).is_stress_free);
  }

  const RigidityReport big = analyze(fam::complete_bipartite(1, 3), 2, 1, p);
  CHECK(big.size_warning);
  CHECK_THROWS_AS(analyze(fam::cycle(2), 0, 1, p), InvalidInput);
}

TEST_CASE("report invariants against the oracle rank") {
  oracle::Gen gen(47);
  for (int t = 0; t < 80; ++t) {
    const BipartiteGraph g = gen.graph(5, 0.5);
    const int k = gen.range(1, 3), l = gen.range(1, 3);
    const Theta th = draw_for(g, k, l, static_cast<std::uint64_t>(t) + 7);
    const RigidityReport r = analyze(g, k, l, th);
    const std::size_t expect = oracle::rank(oracle::rigidity_rows(g, k, l, th), kSmall);
    CHECK(r.rank == expect);
    CHECK(r.is_stress_free == (r.rank == g.num_edges()));
    CHECK(r.is_rigid == (static_cast<long long>(r.rank) == r.max_rank));
    CHECK(r.stress_dim == g.num_edges() - r.rank);
    CHECK(r.max_rank == static_cast<long long>(l) * g.a_size() + static_cast<long long>(k) * g.b_size() - k * l);
  }
}

TEST_CASE("stress spaces") {
  const TrialPolicy p;
  CHECK(stress_space(fam::cycle(2), 2, 2, p).basis.empty());

  const BipartiteGraph k33 = fam::complete_bipartite(3, 3);
  const StressSpace s = stress_space(k33, 2, 2, p);
  REQUIRE(s.basis.size() == 1);
  for (Residue w : s.basis[0]) CHECK(w != 0);

  CHECK(stress_space(fam::doubled_k33_minus(), 2, 2, p).basis.size() >= 1);

  oracle::Gen gen(53);
  for (int t = 0; t < 40; ++t) {
    const BipartiteGraph g = gen.graph(4, 0.8);
    const int k = gen.range(1, 2), l = gen.range(1, 2);
    const Theta th = draw_for(g, k, l, static_cast<std::uint64_t>(t));
    const auto basis = stress_space(g, k, l, th);
    const auto rows = oracle::rigidity_rows(g, k, l, th);
    CHECK(basis.size() == g.num_edges() - oracle::rank(rows, kSmall));
    for (const auto& w : basis) {
      CHECK(satisfies_equilibrium(g, k, l, th, w));
      for (std::size_t c = 0; c < (rows.empty() ? 0 : rows[0].size()); ++c) {
        std::uint64_t sum = 0;
        for (std::size_t i = 0; i < rows.size(); ++i) sum = (sum + oracle::mulmod(w[i], rows[i][c], kSmall)) % kSmall;
        CHECK(sum == 0);
      }
    }
  }
}

TEST_CASE("laman examples") {
  const LamanReport ex = laman_check(fam::doubled_k33_minus(), 2, 2);
  CHECK(ex.holds);
  CHECK(ex.count_holds);

  const LamanReport k33 = laman_check(fam::complete_bipartite(3, 3), 2, 2);
  CHECK_FALSE(k33.holds);
  CHECK_FALSE(k33.count_holds);
  CHECK(k33.edges == 9);
  CHECK(k33.required == 8);

  CHECK(laman_check(fam::complete_bipartite(4, 4), 1, 4).holds);

  // Condition (ii) fails on the K_{2,2} inside; the witness is the first
  // violator in colex order.
  const BipartiteGraph dense(3, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  const LamanReport w = laman_check(dense, 1, 1);
  CHECK(w.count_holds);
  CHECK_FALSE(w.holds);
  REQUIRE(w.witness.has_value());
  CHECK(w.witness->a == std::vector<int>{0, 1});
  CHECK(w.witness->b == std::vector<int>{0, 1});
  CHECK(w.witness->edges == 4);
  CHECK(w.witness->bound == 3);

  CHECK_THROWS_AS(laman_check(fam::cube_graph(5), 1, 4), SizeCapExceeded);
  CHECK_THROWS_AS(laman_check(fam::complete_bipartite(1, 3), 2, 1), InvalidInput);
}

TEST_CASE("laman agrees with the oracle") {
  oracle::Gen gen(59);
  int holds = 0;
  for (int t = 0; t < 300; ++t) {
    const int k = gen.range(1, 2), l = gen.range(1, 2);
    const int n = gen.range(k, 5), m = gen.range(l, 5);
    // Random graphs with exactly the Laman edge count.
    std::vector<Edge> all;
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < m; ++b) all.push_back({a, b});
    }
    std::shuffle(all.begin(), all.end(), gen.rng);
    const long long count = 1LL * l * n + 1LL * k * m - 1LL * k * l;
    if (count > static_cast<long long>(all.size())) continue;
    all.resize(static_cast<std::size_t>(count));
    const BipartiteGraph g(n, m, all);
    const bool expect = oracle::laman(g, k, l);
    CHECK(laman_check(g, k, l).holds == expect);
    holds += expect;
    // (k,1)-Laman graphs are rigid and stress free.
    if (expect && l == 1) {
      const RigidityReport r = analyze(g, k, l, TrialPolicy{});
      CHECK(r.is_rigid);
      CHECK(r.is_stress_free);
    }
  }
  CHECK(holds > 20);
}

TEST_CASE("facet-ridge matrix") {
  const TrialPolicy p;
  const BalancedComplex single({1, 1, 1}, {Face(std::vector<int>{0, 0, 0})});
  const MatrixIndependence s = rows_independent_M(single, 2, p);
  CHECK(s.rows == 1);
  CHECK(s.rank == 1);
  CHECK(s.independent);
  const Theta th = sample_theta(PrimeField(), 3, facet_ridge_theta_sizes(single, 2));
  CHECK(build_facet_ridge_matrix(single, 2, th).cols() == 6);

  const BalancedComplex oct = fam::cross_polytope_boundary(3);
  const Theta th8 = sample_theta(PrimeField(), 3, facet_ridge_theta_sizes(oct, 2));
  const GenericMatrix m = build_facet_ridge_matrix(oct, 2, th8);
  CHECK(m.rows() == 8);
  CHECK(m.cols() == 24);
  CHECK(rows_independent_M(oct, 2, p).independent);

  CHECK_FALSE(rows_independent_M(fam::van_kampen_complex(2, 1), 2, p).independent);
  const BalancedComplex apart({2, 2, 2}, {Face(std::vector<int>{0, 0, 0}), Face(std::vector<int>{1, 1, 1})});
  CHECK(rows_independent_M(apart, 1, p).independent);
  CHECK_THROWS_AS(rows_independent_M(BalancedComplex({2, 2}, {Face(std::vector<int>{0, 0}), Face(std::vector<int>{1, -1})}), 1, p),
                  InvalidInput);

  // In dimension one the matrix is the (l,l)-rigidity matrix.
  oracle::Gen gen(61);
  for (int t = 0; t < 30; ++t) {
    BipartiteGraph g = gen.graph(4, 0.6);
    if (g.num_edges() == 0) continue;
    std::vector<int> used_a, used_b;
    for (int a = 0; a < g.a_size(); ++a) {
      if (g.degree({kSideA, a}) > 0) used_a.push_back(a);
    }
    for (int b = 0; b < g.b_size(); ++b) {
      if (g.degree({kSideB, b}) > 0) used_b.push_back(b);
    }
    g = induced_subgraph(g, used_a, used_b).graph;
    const int l = gen.range(1, 2);
    CHECK(rows_independent_M(graph_to_complex(g), l, p).rank == analyze(g, l, l, p).rank);
  }
}

TEST_CASE("heawood check") {
  const TrialPolicy p;
  const HeawoodReport oct = heawood_check(fam::cross_polytope_boundary(3), p);
  CHECK(oct.avoids_van_kampen);
  CHECK(oct.facets == 8);
  CHECK(oct.ridges == 12);
  CHECK(oct.holds);

  for (int faces = 2; faces <= 12; faces += 2) {
    const BipartiteGraph q = fam::random_quadrangulation(faces, static_cast<std::uint64_t>(faces));
    const HeawoodReport h = heawood_check(graph_to_complex(q), p);
    CHECK(h.facets == 2 * (q.a_size() + q.b_size()) - 4);
    CHECK(h.holds);
  }

  const HeawoodReport one = heawood_check(BalancedComplex({1, 1, 1}, {Face(std::vector<int>{0, 0, 0})}), p);
  CHECK(one.facets == 1);
  CHECK(one.ridges == 3);
  CHECK(one.holds);
}

TEST_CASE("shift verdicts and rank verdicts share a draw") {
  oracle::Gen gen(67);
  for (int t = 0; t < 60; ++t) {
    const BipartiteGraph g = gen.graph(5, 0.5);
    const int k = gen.range(1, g.a_size()), l = gen.range(1, g.b_size());
    const Theta th = sample_theta(PrimeField(), static_cast<std::uint64_t>(t), rigidity_theta_sizes(g, k, l));
    const BipartiteGraph gb = shift_graph(g, VertexOrder::admissible(g.a_size(), g.b_size(), k, l), th);
    const RigidityReport r = analyze(g, k, l, th);
    const bool free_b = !(k < g.a_size() && l < g.b_size() && gb.has_edge(k, l));
    CHECK(free_b == r.is_stress_free);
    CHECK(contains_complete_bipartite(gb, k + 1, l + 1) == !r.is_stress_free);
  }
}
