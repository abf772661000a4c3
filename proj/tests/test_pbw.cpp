#include "doctest.h"
#include "nichols/pbw.hpp"

using namespace nichols;

TEST_CASE("bracket words render and measure degrees") {
  const auto w = bracket(bracket(gen(1), gen(3)), gen(2));
  CHECK(to_string(w) == "[[x1,x3],x2]");
  CHECK(well_formed(w, 3));
  CHECK(!well_formed(w, 2));
  CHECK(degree_vector(w, 3) == std::vector<i64>{1, 1, 1});
  CHECK(to_string(gen(2)) == "x2");
  CHECK_THROWS_AS(gen(0), std::invalid_argument);
}

TEST_CASE("rank-3 dimensions follow the class formulas") {
  CHECK(rank3_dimension(CaseLabel::Rank3_i, 3) == 144);
  CHECK(rank3_dimension(CaseLabel::Rank3_i, 4) == 256);
  CHECK(rank3_dimension(CaseLabel::Rank3_i, 5) == 400);
  CHECK(rank3_dimension(CaseLabel::Rank3_ii, 0) == 10368);
  CHECK(rank3_dimension(CaseLabel::Rank3_iii, 3, 2) == 576);
  CHECK(rank3_dimension(CaseLabel::Rank3_iii, 2, 3) == 576);
  // equal orders collapse the gcd: 2^4 m^3
  for (i64 m = 2; m <= 9; ++m)
    CHECK(rank3_dimension(CaseLabel::Rank3_iii, m, m) == 16 * m * m * m);
  CHECK_THROWS_AS(rank3_dimension(CaseLabel::Rank3_i, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(rank3_dimension(CaseLabel::Rank3_iii, 1, 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(rank3_dimension(CaseLabel::T2_1, 5), std::invalid_argument);
}

TEST_CASE("rank-3 generator lists have the published shapes") {
  const auto a = rank3_pbw(CaseLabel::Rank3_i);
  REQUIRE(a.size() == 6);
  CHECK(to_string(a.back()) == "[[x1,x3],x2]");

  const auto c = rank3_pbw(CaseLabel::Rank3_iii);
  REQUIRE(c.size() == 7);
  CHECK(to_string(c.back()) == "[[x1,x2],[x1,x3]]");

  const auto b = rank3_pbw(CaseLabel::Rank3_ii);
  REQUIRE(b.size() == 10);
  CHECK(to_string(b.back()) == "[[[x1,x2],[[x1,x3],x2]],[x1,x3]]");
  const std::vector<std::vector<i64>> degrees = {
      {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1},
      {1, 1, 1}, {2, 1, 1}, {2, 2, 1}, {2, 1, 2}, {3, 2, 2}};
  for (std::size_t i = 0; i < b.size(); ++i) {
    CHECK(well_formed(b[i], 3));
    CHECK(degree_vector(b[i], 3) == degrees[i]);
  }
  CHECK_THROWS_AS(rank3_pbw(CaseLabel::Infinite), std::invalid_argument);
}

TEST_CASE("rank-2 special PBW list fires exactly on its hypothesis") {
  // q11 = q22 = -1 over Z4, connected
  const auto both = rank2_pbw_special(braiding_matrix(4, {{2, 1}, {0, 2}}));
  REQUIRE(both.size() == 3);
  CHECK(to_string(both[2]) == "[x1,x2]");
  // q11 = -1, q22 q12 q21 = 1: exponents 4 + 1 + 1 = 6 == 0 mod 6
  const auto twist = rank2_pbw_special(braiding_matrix(6, {{3, 1}, {1, 4}}));
  CHECK(twist.size() == 3);
  // q11 != -1: no claim
  CHECK(rank2_pbw_special(braiding_matrix(6, {{2, 2}, {1, 1}})).empty());
  // q11 = -1 but neither factor vanishes: no claim
  CHECK(rank2_pbw_special(braiding_matrix(6, {{3, 1}, {1, 1}})).empty());
  // disconnected: no claim
  CHECK(rank2_pbw_special(braiding_matrix(4, {{2, 1}, {3, 2}})).empty());
  CHECK_THROWS_AS(rank2_pbw_special(braiding_matrix(4, {{2}})),
                  std::invalid_argument);
}

TEST_CASE("quantum linear spaces are the edge-free matrices") {
  CHECK(is_quantum_linear_space(braiding_matrix(6, {{2, 1}, {5, 3}})));
  CHECK(!is_quantum_linear_space(braiding_matrix(6, {{2, 1}, {4, 3}})));
  CHECK(is_quantum_linear_space(braiding_matrix(5, {{3}})));
  CHECK(is_quantum_linear_space(
      braiding_matrix(4, {{1, 1, 2}, {3, 2, 3}, {2, 1, 3}})));
}

TEST_CASE("summaries carry dimension only where the source gives one") {
  const auto s = nichols_summary(CaseLabel::Rank3_iii, 3, 2);
  CHECK(s.pbw.size() == 7);
  REQUIRE(s.dimension.has_value());
  CHECK(*s.dimension == 576);
  const auto t = nichols_summary(CaseLabel::T4_1, 12);
  CHECK(t.pbw.empty());
  CHECK(!t.dimension.has_value());
  CHECK(t.m == 12);
}
