#include "doctest.h"
#include "oracles.hpp"

#include "balrig/complex.hpp"
#include "balrig/errors.hpp"
#include "balrig/families.hpp"

using namespace balrig;
namespace fam = balrig::families;

namespace {
Face F(std::vector<int> s) { return Face(std::move(s)); }
}  // namespace

TEST_CASE("construction normalizes and validates") {
  const BalancedComplex k({2, 2}, {F({0, 0}), F({0, 0}), F({0, -1})});
  CHECK(k.facets().size() == 1);
  CHECK(k.is_pure());
  CHECK_THROWS_AS(BalancedComplex({2, 2}, {F({0, 2})}), InvalidInput);
  CHECK_THROWS_AS(BalancedComplex({2, 2}, {F({0, 0, 0})}), InvalidInput);
  CHECK_FALSE(BalancedComplex({2, 2}, {F({0, 0}), F({1, -1})}).is_pure());
}

TEST_CASE("octahedron") {
  const BalancedComplex oct = fam::cross_polytope_boundary(3);
  CHECK(f_vector(oct) == std::vector<std::size_t>{1, 6, 12, 8});
  CHECK(oct.ridges().size() == 12);

  const BalancedComplex lk = link(oct, F({0, -1, -1}));
  CHECK(lk.num_colors() == 2);
  CHECK(oracle::isomorphic(complex_to_graph(lk), fam::cycle(2)));

  const BalancedComplex as = antistar(oct, F({0, 0, 0}));
  CHECK(as.facets().size() == 7);
  CHECK_FALSE(as.contains(F({0, 0, 0})));
  CHECK(as.contains(F({0, 0, -1})));
  CHECK_THROWS_AS(antistar(as, F({0, 0, 0})), InvalidInput);

  const FacetRidgeGraph frg = facet_ridge_graph(oct);
  CHECK(frg.graph.a_size() == 4);
  CHECK(frg.graph.b_size() == 4);
  CHECK(oracle::isomorphic(frg.graph, fam::cube_graph(3)));
}

TEST_CASE("facet-ridge graph preconditions") {
  const FacetRidgeGraph two = facet_ridge_graph(BalancedComplex({2, 1}, {F({0, 0}), F({1, 0})}));
  CHECK(two.graph.num_edges() == 1);
  CHECK_THROWS_AS(facet_ridge_graph(BalancedComplex({3, 1}, {F({0, 0}), F({1, 0}), F({2, 0})})), InvalidInput);
  CHECK_THROWS_AS(facet_ridge_graph(BalancedComplex({2, 2}, {F({0, 0}), F({1, -1})})), InvalidInput);
}

TEST_CASE("joins") {
  const BalancedComplex two({2}, {F({0}), F({1})});
  const BalancedComplex three({3}, {F({0}), F({1}), F({2})});
  CHECK(complex_to_graph(join(two, two)) == fam::complete_bipartite(2, 2));
  CHECK(complex_to_graph(join(three, three)) == fam::complete_bipartite(3, 3));
  CHECK(join(join(two, two), two) == fam::cross_polytope_boundary(3));
  CHECK(f_vector(join(join(two, two), two)) == std::vector<std::size_t>{1, 6, 12, 8});
}

TEST_CASE("restriction and graph round trip") {
  const BalancedComplex oct = fam::cross_polytope_boundary(3);
  CHECK(restrict_colors(oct, 0b101) == fam::cross_polytope_boundary(2));
  const BipartiteGraph g(3, 2, {{0, 0}, {1, 1}});
  const BalancedComplex k = graph_to_complex(g);
  CHECK(k.facets().size() == 3);  // two edges and the isolated vertex 3
  CHECK(complex_to_graph(k) == g);
}

TEST_CASE("missing faces") {
  const BalancedComplex c4 = fam::cross_polytope_boundary(2);
  const BalancedComplex path({2, 2}, {F({0, 0}), F({1, 0}), F({1, 1})});
  CHECK(is_missing_face(path, F({0, 1})));
  CHECK_FALSE(is_missing_face(path, F({0, 0})));
  CHECK_FALSE(is_missing_face(c4, F({0, 1})));
  const BalancedComplex oct = fam::cross_polytope_boundary(3);
  CHECK(is_missing_face(antistar(oct, F({0, 0, 0})), F({0, 0, 0})));
}

TEST_CASE("stellar replacement of an edge by a path") {
  const BalancedComplex c4 = fam::cross_polytope_boundary(2);
  const BalancedComplex path({2, 2}, {F({0, 0}), F({1, 0}), F({1, 1})});
  const BalancedComplex k = subdivide_star(c4, F({0, 0}), path, F({0, 1}));
  CHECK(f_vector(k)[2] == 6);
  CHECK(oracle::isomorphic(complex_to_graph(k), fam::cycle(3)));
}

TEST_CASE("replacing a facet star by a cross-polytope antistar") {
  const BalancedComplex oct = fam::cross_polytope_boundary(3);
  const Face sigma = F({0, 0, 0});
  const BalancedComplex s = antistar(oct, sigma);
  const BalancedComplex k = subdivide_star(oct, sigma, s, sigma);
  const std::size_t expect = antistar(oct, sigma).facets().size() + s.facets().size() * 1;
  CHECK(k.facets().size() == expect);
  CHECK(k.facets().size() == 14);
  const BalancedComplex glued = fam::glued_cross_polytopes(3, {fam::Gluing{0, 0b001, 0b000}});
  CHECK(f_vector(k) == f_vector(glued));
}

TEST_CASE("faces and f-vector agree with subset enumeration") {
  oracle::Gen gen(3);
  for (int t = 0; t < 100; ++t) {
    const BalancedComplex k = gen.complex(gen.range(1, 4), 3, 0.3);
    CHECK(f_vector(k) == oracle::f_vector(k));
    const auto expect = oracle::faces(k);
    const FaceSet got = k.faces();
    CHECK(got.size() == expect.size());
    for (const Face& f : got) CHECK(expect.count(f.slots()) == 1);
    for (const auto& s : expect) CHECK(k.contains(Face(s)));
  }
}
