#include "doctest.h"
#include "oracles.hpp"

#include "balrig/errors.hpp"
#include "balrig/field.hpp"
#include "balrig/matrix.hpp"

using namespace balrig;

TEST_CASE("primality") {
  CHECK(is_prime(kDefaultPrime));
  CHECK(is_prime(2));
  CHECK(is_prime(1000003));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(15));
  CHECK_FALSE(is_prime(kDefaultPrime - 2));
  CHECK_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
  for (std::uint64_t n = 0; n < 2000; ++n) {
    bool trial = n >= 2;
    for (std::uint64_t d = 2; d * d <= n; ++d) trial = trial && n % d != 0;
    CHECK(is_prime(n) == trial);
  }
}

TEST_CASE("field arithmetic") {
  const PrimeField f;
  CHECK(f.mul(f.inv(12345), 12345) == 1);
  CHECK(f.from_int(-1) == kDefaultPrime - 1);
  CHECK(f.add(kDefaultPrime - 1, 5) == 4);
  CHECK(f.pow(3, kDefaultPrime - 1) == 1);
  CHECK_THROWS_AS(PrimeField(15), InvalidInput);
  CHECK(field_self_check(kDefaultPrime));
  CHECK_FALSE(field_self_check(15));
  CHECK_FALSE(field_self_check(kDefaultPrime - 2));
}

TEST_CASE("rank and kernel examples") {
  GenericMatrix zero(kDefaultPrime, {"r0", "r1"}, {"c0", "c1", "c2"});
  CHECK(rank(zero) == 0);
  CHECK(left_kernel(zero).size() == 2);

  std::vector<std::string> labels{"0", "1", "2", "3", "4"};
  GenericMatrix id(kDefaultPrime, labels, labels);
  for (std::size_t i = 0; i < 5; ++i) id.at(i, i) = 1;
  CHECK(rank(id) == 5);
  CHECK(left_kernel(id).empty());

  GenericMatrix dup(kDefaultPrime, {"x", "y", "z"}, {"a", "b"});
  dup.at(0, 0) = 3;
  dup.at(0, 1) = 7;
  dup.at(1, 0) = 3;
  dup.at(1, 1) = 7;
  dup.at(2, 1) = 1;
  const auto ker = left_kernel(dup);
  REQUIRE(ker.size() == 1);
  CHECK(ker[0][2] == 0);
  CHECK(ker[0][0] != 0);
  CHECK(PrimeField().add(ker[0][0], ker[0][1]) == 0);
}

TEST_CASE("greedy rows keep the first of proportional rows") {
  GenericMatrix m(kDefaultPrime, {"a", "b", "c"}, {"0", "1"});
  m.at(0, 0) = 2;
  m.at(0, 1) = 4;
  m.at(1, 0) = 1;
  m.at(1, 1) = 2;
  m.at(2, 0) = 1;
  CHECK(greedy_independent_rows(m) == std::vector<std::size_t>{0, 2});
}

TEST_CASE("rank, kernel and greedy rows agree with oracles on random matrices") {
  const std::uint64_t p = 1000003;
  const PrimeField f(p);
  oracle::Gen gen(7);
  for (int t = 0; t < 200; ++t) {
    const int rows = gen.range(0, 7), cols = gen.range(0, 7);
    std::vector<std::string> rl(static_cast<std::size_t>(rows)), cl(static_cast<std::size_t>(cols));
    GenericMatrix m(p, rl, cl);
    // Low-rank structure: rows drawn from a few random generators.
    const int gens = gen.range(1, 4);
    oracle::Rows basis(static_cast<std::size_t>(gens), std::vector<std::uint64_t>(static_cast<std::size_t>(cols)));
    for (auto& row : basis) {
      for (auto& x : row) x = static_cast<std::uint64_t>(gen.range(0, 4));
    }
    for (int i = 0; i < rows; ++i) {
      for (int g = 0; g < gens; ++g) {
        const std::uint64_t c = static_cast<std::uint64_t>(gen.range(0, 2));
        for (int j = 0; j < cols; ++j) m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = f.add(m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)), f.mul(c, basis[static_cast<std::size_t>(g)][static_cast<std::size_t>(j)]));
      }
    }
    const auto rows_m = oracle::rows_of(m);
    const std::size_t r = oracle::rank(rows_m, p);
    CHECK(rank(m) == r);
    if (rows <= 5 && cols <= 5) CHECK(oracle::rank_by_minors(rows_m, p) == r);

    const auto ker = left_kernel(m);
    CHECK(ker.size() == static_cast<std::size_t>(rows) - r);
    CHECK(oracle::rank(ker, p) == ker.size());
    for (const auto& w : ker) {
      for (int j = 0; j < cols; ++j) {
        std::uint64_t s = 0;
        for (int i = 0; i < rows; ++i) s = f.add(s, f.mul(w[static_cast<std::size_t>(i)], m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j))));
        CHECK(s == 0);
      }
    }

    oracle::Rows kept;
    std::vector<std::size_t> expect;
    for (std::size_t i = 0; i < rows_m.size(); ++i) {
      if (!oracle::in_span(kept, rows_m[i], p)) {
        kept.push_back(rows_m[i]);
        expect.push_back(i);
      }
    }
    CHECK(greedy_independent_rows(m) == expect);
  }
}

TEST_CASE("incremental basis") {
  const PrimeField f(1000003);
  IncrementalBasis b(f, 3);
  const std::vector<Residue> u{1, 2, 3}, v{2, 4, 6}, w{0, 1, 0};
  CHECK(b.try_insert(u));
  CHECK_FALSE(b.try_insert(v));
  CHECK(b.in_span(v));
  CHECK(b.try_insert(w));
  CHECK(b.rank() == 2);
}

TEST_CASE("theta sampling") {
  const PrimeField f;
  const std::vector<std::size_t> ones{1, 1};
  const Theta t = sample_theta(f, 5, ones);
  CHECK(t.at(0, 0, 0) != 0);
  CHECK(t.at(1, 0, 0) != 0);

  const std::vector<std::size_t> sizes{3, 4};
  const Theta a = sample_theta(f, 99, sizes);
  const Theta b = sample_theta(f, 99, sizes);
  const Theta c = sample_theta(f, 100, sizes);
  bool same = true, differs = false;
  for (std::size_t blk = 0; blk < 2; ++blk) {
    oracle::Rows m(sizes[blk], std::vector<std::uint64_t>(sizes[blk]));
    for (std::size_t i = 0; i < sizes[blk]; ++i) {
      for (std::size_t j = 0; j < sizes[blk]; ++j) {
        m[i][j] = a.at(blk, i, j);
        same = same && a.at(blk, i, j) == b.at(blk, i, j);
        differs = differs || a.at(blk, i, j) != c.at(blk, i, j);
      }
    }
    CHECK(oracle::det(m, kDefaultPrime) != 0);
  }
  CHECK(same);
  CHECK(differs);
}
