#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <sepsym/io.hpp>
#include <sepsym/orbits.hpp>

#include "oracles.hpp"

using namespace sepsym;

namespace {

std::vector<Fe> fes(std::initializer_list<std::uint32_t> xs) {
  std::vector<Fe> v;
  for (auto x : xs) v.push_back(Fe{x});
  return v;
}

}  // namespace

TEST_CASE("orbit_from_vector") {
  Field f3 = Field::make(3, 1);
  auto o = orbit_from_vector(f3, fes({1, 2}));
  CHECK(o.counts() == std::vector<std::uint32_t>{1, 1});
  CHECK(o.zeros() == 0);

  Field f5 = Field::make(5, 1);
  auto z = orbit_from_vector(f5, fes({0, 0, 0, 0}));
  CHECK(z.weight() == 0);
  CHECK(z.zeros() == 4);

  Field f11 = Field::make(11, 1);
  auto big = orbit_from_vector(f11, fes({1, 2, 2, 2, 2, 4, 4, 5}));
  CHECK(big.count(Fe{1}) == 1);
  CHECK(big.count(Fe{2}) == 4);
  CHECK(big.count(Fe{4}) == 2);
  CHECK(big.count(Fe{5}) == 1);
  CHECK(big.count(Fe{3}) == 0);
}

TEST_CASE("canonical_vector") {
  Field f3 = Field::make(3, 1);
  CHECK(canonical_vector(OrbitMultiplicity(f3, 2, {1, 1})) == fes({1, 2}));
  CHECK(canonical_vector(OrbitMultiplicity(f3, 3)) == fes({0, 0, 0}));
  CHECK(canonical_vector(OrbitMultiplicity(f3, 3, {0, 2})) == fes({0, 2, 2}));
}

TEST_CASE("round trips and permutation invariance") {
  std::mt19937 rng(7);
  for (unsigned q : {2u, 3u, 4u, 5u, 9u}) {
    Field f = Field::make_q(q);
    for (int iter = 0; iter < 50; ++iter) {
      unsigned n = std::uniform_int_distribution<unsigned>(0, 9)(rng);
      std::vector<Fe> v(n);
      for (auto& x : v) x = Fe{std::uniform_int_distribution<std::uint32_t>(0, q - 1)(rng)};
      auto orbit = orbit_from_vector(f, v);
      CHECK(orbit_from_vector(f, canonical_vector(orbit)) == orbit);
      std::shuffle(v.begin(), v.end(), rng);
      CHECK(orbit_from_vector(f, v) == orbit);
    }
  }
}

TEST_CASE("enumeration counts") {
  Field f2 = Field::make(2, 1);
  {
    OrbitStream s(f2, 3);
    std::uint64_t c = 0;
    while (s.next()) ++c;
    CHECK(c == 4);
  }
  Field f3 = Field::make(3, 1);
  {
    OrbitStream s(f3, 9);
    std::uint64_t c = 0;
    while (s.next()) ++c;
    CHECK(c == 55);
  }
  Field f11 = Field::make(11, 1);
  {
    OrbitStream s(f11, 10);
    std::uint64_t c = 0;
    while (s.next()) ++c;
    CHECK(c == 184756);
    CHECK(orbit_count(f11, 10) == 184756);
  }
}

TEST_CASE("stream length equals the binomial count") {
  for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    Field f = Field::make_q(q);
    for (unsigned n = 0; n <= 12; ++n) {
      OrbitStream s(f, n);
      std::uint64_t c = 0;
      while (s.next()) ++c;
      CHECK(BigInt(c) == oracles::pascal(n + q - 1, q - 1));
    }
  }
}

TEST_CASE("lexicographic order and positions") {
  Field f3 = Field::make(3, 1);
  OrbitStream s(f3, 2);
  std::vector<std::vector<std::uint32_t>> seen;
  while (s.next()) {
    CHECK(s.position() == seen.size());
    seen.push_back(s.counts());
  }
  std::vector<std::vector<std::uint32_t>> expected = {{0, 0}, {0, 1}, {0, 2},
                                                      {1, 0}, {1, 1}, {2, 0}};
  CHECK(seen == expected);
  CHECK(std::is_sorted(seen.begin(), seen.end()));
}

TEST_CASE("shards partition the stream") {
  Field f4 = Field::make(2, 2);
  unsigned n = 6;
  std::vector<std::vector<std::uint32_t>> full;
  {
    OrbitStream s(f4, n);
    while (s.next()) full.push_back(s.counts());
  }
  std::vector<std::vector<std::uint32_t>> sharded;
  for (std::uint32_t first = 0; first <= n; ++first) {
    OrbitStream s(f4, n, first);
    CHECK(OrbitStream::shard_start(f4, n, first) == sharded.size());
    while (s.next()) {
      CHECK(s.position() == sharded.size());
      sharded.push_back(s.counts());
    }
  }
  CHECK(full == sharded);
}

TEST_CASE("enumeration cap") {
  Field f11 = Field::make(11, 1);
  CHECK_THROWS_AS(checked_orbit_count(f11, 10, 1000), Error);
  CHECK(checked_orbit_count(f11, 10, 200000) == 184756);
}

TEST_CASE("digit_slice") {
  Field f3 = Field::make(3, 1);
  auto slice = digit_slice(OrbitMultiplicity(f3, 9, {5, 0}), 0);
  CHECK(slice.low.counts() == std::vector<std::uint32_t>{2, 0});
  CHECK(slice.high.counts() == std::vector<std::uint32_t>{3, 0});
  CHECK(slice.shifted.counts() == std::vector<std::uint32_t>{1, 0});

  Field f2 = Field::make(2, 1);
  auto s2 = digit_slice(OrbitMultiplicity(f2, 6, {6}), 1);
  CHECK(s2.low.counts() == std::vector<std::uint32_t>{2});
  CHECK(s2.high.counts() == std::vector<std::uint32_t>{4});
  CHECK(s2.shifted.counts() == std::vector<std::uint32_t>{1});
}

TEST_CASE("digit_slice reassembles every orbit") {
  for (unsigned q : {2u, 3u, 5u}) {
    Field f = Field::make_q(q);
    for (unsigned n : {4u, 9u}) {
      OrbitStream s(f, n);
      while (s.next()) {
        auto orbit = s.orbit();
        std::uint64_t pk1 = f.p();
        for (unsigned k = 0; pk1 <= n * 2; ++k, pk1 *= f.p()) {
          auto slice = digit_slice(orbit, k);
          for (std::uint32_t a = 1; a < q; ++a) {
            CHECK(slice.low.count(Fe{a}) + slice.high.count(Fe{a}) == orbit.count(Fe{a}));
            CHECK(slice.high.count(Fe{a}) % pk1 == 0);
            CHECK(slice.shifted.count(Fe{a}) * pk1 == slice.high.count(Fe{a}));
          }
        }
        // all digits consumed at the top level
        auto top = digit_slice(orbit, n == 0 ? 0 : floor_log(f.p(), std::max(1u, n)));
        CHECK(top.high.weight() == 0);
      }
    }
  }
}

TEST_CASE("scale_by_p") {
  Field f3 = Field::make(3, 1);
  auto o = OrbitMultiplicity(f3, 2, {1, 1});
  CHECK(scale_by_p(o, 1, 6).counts() == std::vector<std::uint32_t>{3, 3});
  CHECK(scale_by_p(o, 0, 2) == o);
  CHECK_THROWS_AS(scale_by_p(o, 1, 5), Error);

  Field f2 = Field::make(2, 1);
  CHECK(scale_by_p(OrbitMultiplicity(f2, 2, {2}), 2, 8).counts() == std::vector<std::uint32_t>{8});
}

TEST_CASE("ambient too small") {
  Field f3 = Field::make(3, 1);
  CHECK_THROWS_AS(OrbitMultiplicity(f3, 2, {2, 1}), Error);
}

TEST_CASE("big integer helpers") {
  CHECK(binomial(20, 10) == 184756);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 9) == 0);
  CHECK(binomial(212, 12) == BigInt("12530699840199599786"));
  for (unsigned n = 0; n <= 30; ++n)
    for (unsigned k = 0; k <= 30; ++k) CHECK(binomial(n, k) == oracles::pascal(n, k));

  CHECK(ceil_log(3, 55) == 4);   // 27 < 55 <= 81
  CHECK(ceil_log(3, 81) == 4);   // exact powers stay exact
  CHECK(ceil_log(3, 82) == 5);
  CHECK(ceil_log(2, 1) == 0);

  CHECK(floor_log(3, 1) == 0);
  CHECK(floor_log(3, 9) == 2);
  CHECK(floor_log(3, 8) == 1);
  CHECK(floor_log(2, 1024) == 10);
}
