#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sepsym/gf.hpp>

#include "oracles.hpp"

using namespace sepsym;

namespace {

const std::vector<unsigned> kSmallPrimePowers = {2, 3, 4, 5, 7, 8, 9, 16, 25, 27};

}  // namespace

TEST_CASE("field construction") {
  Field f3 = Field::make(3, 1);
  CHECK(f3.q() == 3);
  CHECK(f3.modulus().empty());

  Field f4 = Field::make(2, 2);
  CHECK(f4.q() == 4);
  CHECK(f4.modulus() == std::vector<unsigned>{1, 1, 1});
  {
    // t^2 + t + 1 is the only monic quadratic over Z_2 without a root
    unsigned irreducible = 0;
    for (unsigned c0 = 0; c0 < 2; ++c0)
      for (unsigned c1 = 0; c1 < 2; ++c1) {
        bool root0 = c0 == 0;
        bool root1 = (1 + c1 + c0) % 2 == 0;
        if (!root0 && !root1) {
          ++irreducible;
          CHECK(c0 == 1);
          CHECK(c1 == 1);
        }
      }
    CHECK(irreducible == 1);
  }

  CHECK_THROWS_AS(Field::make(4, 1), Error);
  CHECK_THROWS_WITH_AS(Field::make(4, 1), "NotPrime: 4 is not prime", Error);
  CHECK_THROWS_AS(Field::make(2, 17), Error);       // 2^17 over the default limit
  CHECK_THROWS_AS(Field::make(13, 2), Error);       // no table entry for 169
  CHECK_THROWS_AS(Field::make_q(12), Error);        // not a prime power

  CHECK(factor_prime_power(49) == std::pair(7u, 2u));
  CHECK(factor_prime_power(64) == std::pair(2u, 6u));
}

TEST_CASE("arithmetic examples") {
  Field f7 = Field::make(7, 1);
  CHECK(f7.mul(Fe{3}, Fe{5}) == fe_one);  // 15 = 1 mod 7

  Field f4 = Field::make(2, 2);
  CHECK(f4.mul(Fe{2}, Fe{2}) == Fe{3});  // t * t = t + 1

  for (unsigned q : kSmallPrimePowers) {
    Field f = Field::make_q(q);
    for (std::uint32_t x = 0; x < q; ++x) CHECK(f.add(Fe{x}, fe_zero) == Fe{x});
  }

  CHECK_THROWS_AS(f7.div(Fe{1}, fe_zero), Error);
  CHECK_THROWS_AS(f7.inv(fe_zero), Error);
}

TEST_CASE("field axioms hold exhaustively on small fields") {
  for (unsigned q : kSmallPrimePowers) {
    CAPTURE(q);
    Field f = Field::make_q(q);
    for (std::uint32_t a = 0; a < q; ++a) {
      CHECK(f.add(Fe{a}, f.neg(Fe{a})) == fe_zero);
      if (a != 0) CHECK(f.mul(Fe{a}, f.inv(Fe{a})) == fe_one);
      for (std::uint32_t b = 0; b < q; ++b) {
        CHECK(f.add(Fe{a}, Fe{b}) == f.add(Fe{b}, Fe{a}));
        CHECK(f.mul(Fe{a}, Fe{b}) == f.mul(Fe{b}, Fe{a}));
        for (std::uint32_t c = 0; c < q; ++c) {
          Fe A{a}, B{b}, C{c};
          CHECK(f.add(f.add(A, B), C) == f.add(A, f.add(B, C)));
          CHECK(f.mul(f.mul(A, B), C) == f.mul(A, f.mul(B, C)));
          CHECK(f.mul(A, f.add(B, C)) == f.add(f.mul(A, B), f.mul(A, C)));
        }
      }
    }
  }
}

TEST_CASE("pow") {
  Field f5 = Field::make(5, 1);
  CHECK(f5.pow(Fe{2}, 4) == fe_one);
  CHECK(f5.pow(fe_zero, 0) == fe_one);  // empty product
  CHECK(f5.pow(fe_zero, 3) == fe_zero);

  for (unsigned q : {4u, 8u, 9u, 27u}) {
    Field f = Field::make_q(q);
    for (std::uint32_t a = 0; a < q; ++a) CHECK(f.pow(Fe{a}, q) == Fe{a});
  }

  // large exponents reduce through the group order
  Field f9 = Field::make(3, 2);
  for (std::uint32_t a = 1; a < 9; ++a)
    CHECK(f9.pow(Fe{a}, 8'000'000'000'000ULL) == f9.pow(Fe{a}, 8'000'000'000'000ULL % 8));
}

TEST_CASE("pth_root") {
  Field f9 = Field::make(3, 2);
  for (std::uint32_t a = 0; a < 9; ++a) CHECK(f9.pth_root(Fe{a}, 0) == Fe{a});

  Field f3 = Field::make(3, 1);
  CHECK(f3.pth_root(Fe{2}, 1) == Fe{2});  // 2^3 = 8 = 2

  Field f4 = Field::make(2, 2);
  CHECK(f4.pth_root(Fe{3}, 1) == Fe{2});  // t^2 = t + 1

  for (unsigned q : kSmallPrimePowers) {
    Field f = Field::make_q(q);
    std::uint64_t pk = 1;
    for (unsigned k = 0; k <= f.e() + 4; ++k) {
      for (std::uint32_t a = 0; a < q; ++a) {
        CHECK(f.pth_root(f.pow(Fe{a}, pk), k) == Fe{a});
        CHECK(f.pow(f.pth_root(Fe{a}, k), pk) == Fe{a});
      }
      pk *= f.p();
    }
  }
}

TEST_CASE("large fields exercise the non-tabled arithmetic paths") {
  // every shipped extension modulus loads and passes the root round-trip
  for (unsigned q : {81u, 121u, 125u}) {
    Field f = Field::make_q(q);
    CHECK(f.modulus().size() == f.e() + 1);
    for (std::uint32_t a : {0u, 1u, q / 2, q - 1}) {
      CHECK(f.pow(Fe{a}, q) == Fe{a});
      CHECK(f.pth_root(f.frobenius(Fe{a}), 1) == Fe{a});
    }
  }

  // a prime field above the discrete-log table limit
  Field big = Field::make(65521, 1);
  CHECK(big.mul(Fe{65520}, Fe{65520}) == fe_one);  // (-1)^2
  CHECK(big.mul(Fe{12345}, big.inv(Fe{12345})) == fe_one);
  CHECK(big.pow(Fe{3}, 65520) == fe_one);

  // an extension field wide enough to skip the addition table, via a custom
  // table entry (x^11 + x^2 + 1 over Z_2)
  std::string path = "gf2048_table.txt";
  {
    std::ofstream out(path);
    out << "2048 1 0 1 0 0 0 0 0 0 0 0 1\n";
  }
  setenv("SEPSYM_MODULUS_TABLE", path.c_str(), 1);
  Field f2048 = Field::make(2, 11);
  for (std::uint32_t a : {1u, 77u, 2047u}) {
    CHECK(f2048.add(Fe{a}, Fe{a}) == fe_zero);  // char 2
    CHECK(f2048.pth_root(f2048.pow(Fe{a}, 2), 1) == Fe{a});
    CHECK(f2048.mul(Fe{a}, f2048.inv(Fe{a})) == fe_one);
  }
  unsetenv("SEPSYM_MODULUS_TABLE");
  std::remove(path.c_str());

  CHECK_THROWS_AS(Field::make(2, 4, 10), Error);  // custom size limit
}

TEST_CASE("lucas binomials against pascal") {
  for (unsigned p : {2u, 3u, 5u, 7u}) {
    Field f = Field::make(p, 1);
    for (unsigned c = 0; c <= 40; ++c)
      for (unsigned j = 0; j <= 40; ++j) {
        BigInt expected = oracles::pascal(c, j) % p;
        CHECK(f.binom_mod_p(c, j).v == expected.convert_to<std::uint32_t>());
      }
  }
}

TEST_CASE("modulus table override") {
  // t^2 + 1 is irreducible over Z_3 and differs from the built-in choice
  std::string path = "gf9_table.txt";
  {
    std::ofstream out(path);
    out << "# local override\n9 1 0 1\n";
  }
  setenv("SEPSYM_MODULUS_TABLE", path.c_str(), 1);
  Field f9 = Field::make(3, 2);
  CHECK(f9.modulus() == std::vector<unsigned>{1, 0, 1});
  CHECK(f9.mul(Fe{3}, Fe{3}) == Fe{2});  // t^2 = -1 = 2

  // a table without the requested q
  CHECK_THROWS_AS(Field::make(2, 2), Error);

  // a reducible modulus is rejected
  {
    std::ofstream out(path);
    out << "9 0 0 1\n";  // t^2
  }
  CHECK_THROWS_AS(Field::make(3, 2), Error);

  // malformed line
  {
    std::ofstream out(path);
    out << "9 1 x 1\n";
  }
  CHECK_THROWS_AS(Field::make(3, 2), Error);

  unsetenv("SEPSYM_MODULUS_TABLE");
  Field builtin = Field::make(3, 2);
  CHECK(builtin.modulus() == std::vector<unsigned>{2, 2, 1});
  std::remove(path.c_str());
}

TEST_CASE("modulus table text format") {
  auto entries = detail::parse_modulus_table("# comment\n4 1 1 1\n\n9 2 2 1 # trailing\n");
  REQUIRE(entries.size() == 2);
  CHECK(entries[0].first == 4);
  CHECK(entries[1].second == std::vector<unsigned>{2, 2, 1});
}
