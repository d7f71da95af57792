#include "doctest.h"
#include "oracles.hpp"

#include "balrig/errors.hpp"
#include "balrig/families.hpp"
#include "balrig/rigidity.hpp"
#include "balrig/shifting.hpp"

using namespace balrig;
namespace fam = balrig::families;

namespace {

Theta draw(const std::vector<std::size_t>& sizes, std::uint64_t seed, std::uint64_t p = 1000003) {
  return sample_theta(PrimeField(p), seed, sizes);
}

std::vector<std::size_t> sizes_of(const BalancedComplex& k) {
  return {k.color_sizes().begin(), k.color_sizes().end()};
}

}  // namespace

TEST_CASE("complete bipartite graphs are fixed points") {
  oracle::Gen gen(5);
  const TrialPolicy policy;
  for (int n = 1; n <= 4; ++n) {
    for (int m = 1; m <= 4; ++m) {
      const BipartiteGraph k = fam::complete_bipartite(n, m);
      CHECK(shift_graph(k, gen.order({n, m}), policy).graph == k);
    }
  }
}

TEST_CASE("shifting examples") {
  const TrialPolicy policy;
  const BipartiteGraph km = fam::k33_minus();
  CHECK(shift_graph(km, VertexOrder::admissible(3, 3, 2, 2), policy).graph == km);
  CHECK(shift_graph(km, VertexOrder::interleaved({3, 3}), policy).graph == km);

  const BipartiteGraph path(2, 1, {{0, 0}, {1, 0}});
  CHECK(shift_graph(path, VertexOrder::interleaved({2, 1}), policy).graph == path);

  const BipartiteGraph single(2, 2, {{1, 1}});
  const GraphShift s = shift_graph(single, VertexOrder::interleaved({2, 2}), policy);
  CHECK(s.graph == BipartiteGraph(2, 2, {{0, 0}}));
  CHECK(s.meta.trials == 3);
  CHECK_FALSE(s.meta.escalated);

  const BalancedComplex oct = fam::cross_polytope_boundary(3);
  CHECK(shift_complex(oct, VertexOrder::interleaved({2, 2, 2}), policy).complex == oct);
  const BalancedComplex one({3, 3, 3}, {Face(std::vector<int>{2, 1, 2})});
  CHECK(shift_complex(one, VertexOrder::interleaved({3, 3, 3}), policy).complex ==
        BalancedComplex({3, 3, 3}, {Face(std::vector<int>{0, 0, 0})}));
}

TEST_CASE("graph shifting matches the rank-recomputing oracle") {
  oracle::Gen gen(17);
  for (int t = 0; t < 150; ++t) {
    const BipartiteGraph g = gen.graph(4, 0.45);
    const VertexOrder o = gen.order({g.a_size(), g.b_size()});
    const Theta th = draw({static_cast<std::size_t>(g.a_size()), static_cast<std::size_t>(g.b_size())},
                          static_cast<std::uint64_t>(t));
    const BipartiteGraph gb = shift_graph(g, o, th);
    CHECK(gb == oracle::shift_graph(g, o, th));
    CHECK(gb.num_edges() == g.num_edges());
    CHECK(check_shifted(gb) == oracle::check_shifted(gb));
    CHECK(oracle::check_shifted(gb));
  }
}

TEST_CASE("complex shifting matches the oracle and keeps f-vectors") {
  oracle::Gen gen(23);
  for (int t = 0; t < 80; ++t) {
    const BalancedComplex k = gen.complex(gen.range(1, 3), 3, 0.35);
    const VertexOrder o = gen.order(k.color_sizes());
    const Theta th = draw(sizes_of(k), static_cast<std::uint64_t>(t) + 1000);
    const BalancedComplex kb = shift_complex(k, o, th);
    CHECK(kb == oracle::shift_complex(k, o, th));
    CHECK(oracle::f_vector(kb) == oracle::f_vector(k));
    CHECK(check_shifted(kb));
  }
}

TEST_CASE("shifted predicates") {
  CHECK(check_shifted(fam::k33_minus()));
  CHECK_FALSE(check_shifted(BipartiteGraph(2, 2, {{1, 1}})));
  CHECK_FALSE(check_shifted(BipartiteGraph(2, 2, {{0, 0}, {1, 1}})));
  for (int d = 1; d <= 3; ++d) CHECK(check_shifted(fam::gamma_complex(d, std::vector<int>(static_cast<std::size_t>(d + 1), 3))));
  CHECK_FALSE(check_shifted(BalancedComplex({2, 2}, {Face(std::vector<int>{1, 0})})));

  CHECK(contains_complete_bipartite(fam::k33_minus(), 2, 2));
  CHECK_FALSE(contains_complete_bipartite(fam::k33_minus(), 3, 3));
  CHECK_FALSE(contains_join(fam::gamma_complex(1, {3, 3}), 3));
  CHECK(contains_join(fam::van_kampen_complex(2, 1), 3));

  oracle::Gen gen(29);
  for (int t = 0; t < 100; ++t) {
    const BipartiteGraph g = gen.graph(5, 0.6);
    const int r = gen.range(1, 3), s = gen.range(1, 3);
    CHECK(contains_complete_bipartite(g, r, s) == oracle::contains_complete_bipartite(g, r, s));
    const BipartiteGraph gb = shift_graph(g, VertexOrder::interleaved({g.a_size(), g.b_size()}), TrialPolicy{}).graph;
    CHECK(contains_complete_bipartite(gb, r, s) == oracle::contains_complete_bipartite(gb, r, s));
  }
  for (int t = 0; t < 40; ++t) {
    const BalancedComplex k = gen.complex(gen.range(1, 3), 4, 0.7);
    CHECK(contains_join(k, 2) == oracle::contains_join(k, 2));
    CHECK(contains_join(k, 3) == oracle::contains_join(k, 3));
  }
}

TEST_CASE("trial policy") {
  TrialPolicy p;
  p.trials = 0;
  CHECK_THROWS_AS(p.validate(), InvalidInput);
  p.trials = 1;
  p.prime = 15;
  CHECK_THROWS_AS(p.validate(), InvalidInput);

  TrialPolicy q;
  q.trials = 2;
  q.prime = 1000003;
  const auto [value, meta] = run_trials<int>(q, 4.0, [](const PrimeField&, std::uint64_t) { return 7; });
  CHECK(value == 7);
  CHECK(meta.trials == 2);
  CHECK(meta.failure_bound == doctest::Approx(4.0 / 1000003));

  // Draw-dependent verdicts never settle.
  CHECK_THROWS_AS(run_trials<std::uint64_t>(q, 1.0, [](const PrimeField&, std::uint64_t s) { return s; }),
                  TrialDisagreement);

  // One odd draw in the first round is outvoted by a unanimous second round.
  const std::uint64_t odd = trial_seed(q.seed, 1);
  const auto [v2, m2] = run_trials<bool>(q, 1.0, [&](const PrimeField&, std::uint64_t s) { return s != odd; });
  CHECK(v2);
  CHECK(m2.escalated);
  CHECK(m2.trials == 6);
}

TEST_CASE("same seed gives the same shift") {
  oracle::Gen gen(31);
  const BipartiteGraph g = gen.graph(6, 0.5);
  TrialPolicy p;
  p.seed = 42;
  const VertexOrder o = VertexOrder::interleaved({g.a_size(), g.b_size()});
  CHECK(shift_graph(g, o, p).graph == shift_graph(g, o, p).graph);
}
