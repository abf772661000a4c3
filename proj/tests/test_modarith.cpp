#include "nichols/modarith.hpp"

#include <random>
#include <vector>

#include "doctest.h"

using namespace nichols;

namespace {

std::vector<i64> brute_quadratic(i64 a, i64 b, i64 c, i64 m) {
  std::vector<i64> out;
  for (i64 x = 0; x < m; ++x) {
    i64 v = mod_reduce(mul_mod(mod_reduce(a, m), mul_mod(x, x, m), m) +
                           mul_mod(mod_reduce(b, m), x, m) + mod_reduce(c, m),
                       m);
    if (v == 0) out.push_back(x);
  }
  return out;
}

}  // namespace

TEST_CASE("factorize small numbers") {
  auto f60 = factorize(60);
  REQUIRE(f60.factors.size() == 3);
  CHECK(f60.factors[0] == PrimePower{2, 2});
  CHECK(f60.factors[1] == PrimePower{3, 1});
  CHECK(f60.factors[2] == PrimePower{5, 1});
  CHECK(f60.exponent_of(2) == 2);
  CHECK(f60.exponent_of(7) == 0);

  CHECK(factorize(1).factors.empty());

  auto f24 = factorize(24);
  REQUIRE(f24.factors.size() == 2);
  CHECK(f24.factors[0] == PrimePower{2, 3});
  CHECK(f24.factors[1] == PrimePower{3, 1});

  CHECK_THROWS_AS(factorize(0), std::invalid_argument);
}

TEST_CASE("legendre symbol basics") {
  CHECK(legendre(-3, 7) == 1);   // -3 == 4 == 2^2 mod 7
  CHECK(legendre(-3, 5) == -1);  // squares mod 5 are {1, 4}
  CHECK(legendre(0, 7) == 0);
  CHECK(legendre(14, 7) == 0);
  for (i64 p : {3, 5, 7, 11, 13, 97}) CHECK(legendre(1, p) == 1);
  CHECK_THROWS_AS(legendre(3, 2), std::invalid_argument);
  CHECK_THROWS_AS(legendre(3, 15), std::invalid_argument);
}

TEST_CASE("legendre multiplicativity for p <= 100") {
  for (i64 p = 3; p <= 100; ++p) {
    if (!is_prime(p)) continue;
    for (i64 a = 1; a < p; ++a)
      for (i64 b = 1; b < p; ++b)
        CHECK(legendre(a * b, p) == legendre(a, p) * legendre(b, p));
  }
}

TEST_CASE("solve_linear examples") {
  auto s = solve_linear(4, 2, 6);
  CHECK(s.residues == std::vector<i64>{1, 4});

  CHECK(solve_linear(2, 1, 4).empty());

  // Unit leading coefficient: the single residue (-b) mod m.
  for (i64 m : {2, 5, 12}) {
    for (i64 b = 0; b < m; ++b) {
      auto u = solve_linear(1, b, m);
      REQUIRE(u.residues.size() == 1);
      CHECK(u.residues[0] == mod_reduce(-b, m));
    }
  }

  CHECK(solve_linear(0, 0, 5).residues == std::vector<i64>{0, 1, 2, 3, 4});
  CHECK(solve_linear(0, 3, 5).empty());
  CHECK(solve_linear(7, 3, 1).residues == std::vector<i64>{0});
}

TEST_CASE("solve_linear matches exhaustive enumeration, m <= 40") {
  for (i64 m = 1; m <= 40; ++m) {
    for (i64 a = 0; a < m; ++a) {
      for (i64 b = 0; b < m; ++b) {
        std::vector<i64> expect;
        for (i64 x = 0; x < m; ++x)
          if ((a * x + b) % m == 0) expect.push_back(x);
        auto got = solve_linear(a, b, m);
        CHECK(got.residues == expect);
        if (!expect.empty()) CHECK(got.residues.size() ==
                                   static_cast<std::size_t>(std::gcd(a == 0 ? m : a, m)));
      }
    }
  }
}

TEST_CASE("sqrt_mod_prime_power: the p = 2 case split") {
  CHECK(sqrt_mod_prime_power(1, 2, 3).residues == std::vector<i64>{1, 3, 5, 7});
  CHECK(sqrt_mod_prime_power(5, 2, 3).empty());  // 5 != 1 mod 8
  CHECK(sqrt_mod_prime_power(3, 2, 1).residues == std::vector<i64>{1});
  CHECK(sqrt_mod_prime_power(5, 2, 2).residues == std::vector<i64>{1, 3});
  CHECK(sqrt_mod_prime_power(3, 2, 2).empty());
  CHECK(sqrt_mod_prime_power(17, 2, 5).residues ==
        std::vector<i64>{7, 9, 23, 25});  // 7^2 = 49 = 32 + 17
}

TEST_CASE("sqrt_mod_prime_power: odd p") {
  CHECK(sqrt_mod_prime_power(2, 7, 1).residues == std::vector<i64>{3, 4});
  CHECK(sqrt_mod_prime_power(3, 7, 1).empty());
  CHECK_THROWS_AS(sqrt_mod_prime_power(7, 7, 2), std::invalid_argument);
  CHECK_THROWS_AS(sqrt_mod_prime_power(2, 6, 1), std::invalid_argument);

  // Count law: 1 + (a/p) solutions mod p for units a.
  for (i64 p : {3, 5, 7, 11, 13}) {
    for (i64 a = 1; a < p; ++a) {
      auto s = sqrt_mod_prime_power(a, p, 1);
      CHECK(static_cast<int>(s.residues.size()) == 1 + legendre(a, p));
    }
  }
}

TEST_CASE("sqrt_mod_prime_power matches exhaustive scan up to 1000") {
  for (i64 p : {2, 3, 5, 7, 11, 13}) {
    for (i64 k = 1;; ++k) {
      i64 pk = 1;
      for (i64 i = 0; i < k; ++i) pk *= p;
      if (pk > 1000) break;
      for (i64 a = 1; a < pk; ++a) {
        if (a % p == 0) continue;
        std::vector<i64> expect;
        for (i64 x = 0; x < pk; ++x)
          if (x * x % pk == a) expect.push_back(x);
        CHECK(sqrt_mod_prime_power(a, p, k).residues == expect);
      }
    }
  }
}

TEST_CASE("hensel_lift") {
  // x^2 + x + 1, root 2 mod 7: 30^2 + 30 + 1 = 931 = 19 * 49.
  std::vector<i64> f = {1, 1, 1};
  CHECK(hensel_lift(f, 2, 7, 2) == 30);
  CHECK(hensel_lift(f, 2, 7, 1) == 2);
  i64 lifted = hensel_lift(f, 2, 7, 6);
  CHECK(lifted % 7 == 2);
  i64 p6 = 7 * 7 * 7 * 7 * 7 * 7;
  CHECK((static_cast<__int128>(lifted) * lifted + lifted + 1) % p6 == 0);

  // x^2 - 1 at root 1 mod 2: derivative 2 vanishes.
  CHECK_THROWS_AS(hensel_lift({-1, 0, 1}, 1, 2, 2), std::domain_error);
  // Not a root at all.
  CHECK_THROWS_AS(hensel_lift(f, 3, 7, 2), std::invalid_argument);
}

TEST_CASE("crt_combine") {
  auto r = crt_combine({{1, 3}, {2, 4}});
  CHECK(r.value == 10);
  CHECK(r.modulus == 12);

  auto single = crt_combine({{0, 9}});
  CHECK(single.value == 0);
  CHECK(single.modulus == 9);

  auto eq = crt_combine({{1, 3}, {1, 5}});
  CHECK(eq.value == 1);
  CHECK(eq.modulus == 15);

  CHECK_THROWS_AS(crt_combine({{1, 4}, {0, 6}}), std::invalid_argument);
}

TEST_CASE("solve_quadratic frozen examples") {
  CHECK(solve_quadratic(2, 3, 3, 6).contains(3));
  CHECK(solve_quadratic(4, -9, 8, 12).contains(4));
  CHECK(solve_quadratic(1, 3, 7, 14).empty());
  CHECK(solve_quadratic(1, 1, 1, 2).empty());
  CHECK(solve_quadratic(5, 0, -1, 1).residues == std::vector<i64>{0});
}

TEST_CASE("solve_quadratic count law mod an odd prime") {
  for (i64 p : {3, 5, 7, 11, 13, 17}) {
    for (i64 a = 1; a < p; ++a) {
      for (i64 b = 0; b < p; ++b) {
        for (i64 c = 0; c < p; ++c) {
          i64 disc = mod_reduce(b * b - 4 * a * c, p);
          if (disc == 0) continue;
          auto s = solve_quadratic(a, b, c, p);
          CHECK(static_cast<int>(s.residues.size()) == 1 + legendre(disc, p));
        }
      }
    }
  }
}

TEST_CASE("solve_quadratic equals exhaustive enumeration, all m <= 40") {
  for (i64 m = 1; m <= 40; ++m)
    for (i64 a = 0; a < m; ++a)
      for (i64 b = 0; b < m; ++b)
        for (i64 c = 0; c < m; ++c)
          CHECK(solve_quadratic(a, b, c, m).residues ==
                brute_quadratic(a, b, c, m));
}

TEST_CASE("solve_quadratic equals exhaustive enumeration, random m <= 500") {
  std::mt19937_64 rng(20240811);
  std::uniform_int_distribution<i64> mdist(1, 500);
  std::uniform_int_distribution<i64> coef(-1000, 1000);
  for (int trial = 0; trial < 2000; ++trial) {
    i64 m = mdist(rng);
    i64 a = coef(rng), b = coef(rng), c = coef(rng);
    CHECK(solve_quadratic(a, b, c, m).residues == brute_quadratic(a, b, c, m));
  }
}

TEST_CASE("solve_quadratic rejects oversized degenerate components") {
  // 103 divides the leading coefficient, forcing the exhaustive path over a
  // component of size 103^2, past the tightened bound.
  QuadSolveOptions tight;
  tight.exhaustive_bound = 100;
  CHECK_THROWS_AS(solve_quadratic(103, 0, 1, 103 * 103, tight),
                  UnsupportedModulus);
}

TEST_CASE("solve_quadratic solutions restrict consistently mod prime powers") {
  for (i64 m : {12, 18, 24, 30, 60}) {
    auto whole = solve_quadratic(1, -5, 6, m);
    for (const auto& pp : factorize(m).factors) {
      i64 pk = 1;
      for (i64 i = 0; i < pp.alpha; ++i) pk *= pp.p;
      auto part = solve_quadratic(1, -5, 6, pk);
      for (i64 x : whole.residues) CHECK(part.contains(x % pk));
    }
  }
}
