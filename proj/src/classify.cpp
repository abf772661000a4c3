#include "nichols/classify.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "nichols/modarith.hpp"

namespace nichols {

std::string to_string(CaseLabel label) {
  switch (label) {
    case CaseLabel::T2_1: return "T2(1)";
    case CaseLabel::T2_2a: return "T2(2)_1";
    case CaseLabel::T2_2b: return "T2(2)_2";
    case CaseLabel::T2_3: return "T2(3)";
    case CaseLabel::T3_1a: return "T3(1)_1";
    case CaseLabel::T3_1b: return "T3(1)_2";
    case CaseLabel::T3_2a: return "T3(2)_1";
    case CaseLabel::T3_2b: return "T3(2)_2";
    case CaseLabel::T3_3: return "T3(3)";
    case CaseLabel::T4_1: return "T4(1)";
    case CaseLabel::T4_2: return "T4(2)";
    case CaseLabel::T5_1: return "T5(1)";
    case CaseLabel::T5_2: return "T5(2)";
    case CaseLabel::T6: return "T6";
    case CaseLabel::T7_1: return "T7(1)";
    case CaseLabel::T7_2: return "T7(2)";
    case CaseLabel::T8_1: return "T8(1)";
    case CaseLabel::T8_2a: return "T8(2)_1";
    case CaseLabel::T8_2b: return "T8(2)_2";
    case CaseLabel::T8_3: return "T8(3)";
    case CaseLabel::T9: return "T9";
    case CaseLabel::T10: return "T10";
    case CaseLabel::T11_1: return "T11(1)";
    case CaseLabel::T11_2: return "T11(2)";
    case CaseLabel::T12: return "T12";
    case CaseLabel::T13: return "T13";
    case CaseLabel::T14: return "T14";
    case CaseLabel::T15: return "T15";
    case CaseLabel::T16_1: return "T16(1)";
    case CaseLabel::T16_2: return "T16(2)";
    case CaseLabel::T17: return "T17";
    case CaseLabel::T18: return "T18";
    case CaseLabel::T20: return "T20";
    case CaseLabel::T21: return "T21";
    case CaseLabel::Rank3_i: return "rank3(i)";
    case CaseLabel::Rank3_ii: return "rank3(ii)";
    case CaseLabel::Rank3_iii: return "rank3(iii)";
    case CaseLabel::Infinite: return "infinite";
    case CaseLabel::NotRealizable: return "not-realizable";
    case CaseLabel::Disconnected: return "disconnected";
  }
  return "?";
}

bool is_rank2_case(CaseLabel label) {
  return static_cast<int>(label) <= static_cast<int>(CaseLabel::T21);
}

bool is_rank3_case(CaseLabel label) {
  return label == CaseLabel::Rank3_i || label == CaseLabel::Rank3_ii ||
         label == CaseLabel::Rank3_iii;
}

bool is_finite_case(CaseLabel label) {
  return is_rank2_case(label) || is_rank3_case(label);
}

namespace {

using Sys = Rank2System;

bool cg(const Sys& s, i64 a, i64 b) { return mod_reduce(a - b, s.n) == 0; }

i64 ordx(const Sys& s, i64 v) { return order_of_exponent(v, s.n); }

// is v the exponent of -1 (possible only for even n)
bool half(const Sys& s, i64 v) { return s.n % 2 == 0 && mod_reduce(v, s.n) == s.n / 2; }

i64 alpha1(i64 m) { return factorize(m).exponent_of(2); }
i64 alpha2(i64 m) { return factorize(m).exponent_of(3); }

bool minus3_square_mod_all(i64 m) {
  for (const auto& f : factorize(m).factors)
    if (f.p > 3 && legendre(mod_reduce(-3, f.p), f.p) != 1) return false;
  return true;
}

bool all_1_mod_4(i64 m) {
  for (const auto& f : factorize(m).factors)
    if (f.p > 3 && f.p % 4 != 1) return false;
  return true;
}

bool side_none(const Sys&, const CaseInstance&) { return true; }

bool side_half_free(const Sys&, const CaseInstance& c) { return alpha1(c.m) != 1; }

bool side_cartan1(const Sys&, const CaseInstance& c) {
  return alpha1(c.m) == 0 && alpha2(c.m) <= 1 && minus3_square_mod_all(c.m);
}

std::vector<CaseConditions> build_rank2_table() {
  std::vector<CaseConditions> t;

  // T2 family: both Cartan relations, then its -1 degenerations
  t.push_back({CaseLabel::T2_1, false,
               [](const Sys& s, std::vector<CaseInstance>& out) {
                 if (cg(s, s.d1 + s.e, 0) && cg(s, s.d2 + s.e, 0))
                   out.push_back({ordx(s, s.e), 0, 0});
               },
               side_cartan1});
  t.push_back({CaseLabel::T2_2a, true,
               [](const Sys& s, std::vector<CaseInstance>& out) {
                 if (half(s, s.d1) && cg(s, s.d2 + s.e, 0))
                   out.push_back({ordx(s, s.e), 0, 0});
               },
               side_half_free});
  t.push_back({CaseLabel::T2_2b, true,
               [](const Sys& s, std::vector<CaseInstance>& out) {
                 if (half(s, s.d2) && cg(s, s.d1 + s.e, 0))
                   out.push_back({ordx(s, s.e), 0, 0});
               },
               side_half_free});
  t.push_back({CaseLabel::T2_3, true,
               [](const Sys& s, std::vector<CaseInstance>& out) {
                 if (half(s, s.d1) && half(s, s.d2))
                   out.push_back({ordx(s, s.e), 0, 0});
               },
               side_half_free});

  // T3 family
  t.push_back({CaseLabel::T3_1a, false,
               [](const Sys& s, std::vector<CaseInstance>& out) {
                 const i64 m = ordx(s, s.d1);
                 if (m > 2 && cg(s, s.e, -2 * s.d1) && cg(s, s.d2, 2 * s.d1))
                   out.push_back({m, 0, 0});
               },
               [](const Sys&, const CaseInstance& c) {
                 return alpha1(c.m) <= 1 && alpha2(c.m) == 0 && all_1_mod_4(c.m);
               }});
  t.push_back({CaseLabel::T3_1b, false,
               [](const Sys& s, std::vector<CaseInstance>& out) {
                 const i64 m = ordx(s, s.d1);
                 if (m > 2 && cg(s, s.e, -2 * s.d1) && half(s, s.d2))
                   out.push_back({m, 0, 0});
               },
               [](const Sys&, const CaseInstance& c) {
                 const i64 a1 = alpha1(c.m);
                 return a1 != 2 && a1 != 3;
               }});
  t.push_back({CaseLabel::T3_2a, false,
               [](const Sys& s, std::vector<CaseInstance>& out) {
                 if (s.n % 3 != 0) return;
                 const i64 m = ordx(s, s.d2);
                 if (m <= 3 || !cg(s, s.e, -s.d2)) return;
                 for (i64 u = 1; u < s.n; ++u) {
                   if (std::gcd(u, s.n) != 1) continue;
                   if (!cg(s, mul_mod(u, s.n / m, s.n), s.d2)) continue;
                   for (i64 sv = 1; sv <= 2; ++sv)
                     if (cg(s, mul_mod(mul_mod(u, s.n / 3, s.n), sv, s.n), s.d1))
                       out.push_back({m, sv, u});
                 }
               },
               [](const Sys&, const CaseInstance& c) {
                 return c.m % 3 != 0 || mod_reduce(c.m / 3 * c.s, 3) != 2;
               }});
  t.push_back({CaseLabel::T3_2b, false,
               [](const Sys& s, std::vector<CaseInstance>& out) {
                 if (ordx(s, s.d1) == 3 && half(s, s.d2) && half(s, s.e))
                   out.push_back({6, 0, 0});
               },
               side_none});
  t.push_back({CaseLabel::T3_3, false,
               [](const Sys& s, std::vector<CaseInstance>& out) {
                 if (ordx(s, s.d1) == 3 && half(s, s.d2) && s.n % 2 == 0 &&
                     cg(s, s.e, s.n / 2 + s.d1))
                   out.push_back({6, 0, 0});
               },
               side_none});

  // fixed-order cases; every remaining side condition is vacuous
  t.push_back({CaseLabel::T4_1, false,
               [](const Sys& s, std::vector<CaseInstance>& out) {
                 if (s.n % 2 != 0) return;
                 const i64 g = mod_reduce(s.d1 + s.e, s.n);
                 if (ordx(s, g) == 12 && cg(s, s.d1, 4 * g) &&
                     cg(s, s.d2, s.n / 2 + 2 * g))
                   out.push_back({12, 0, 0});
               },
               side_none});
  t.push_back({CaseLabel::T4_2, false,
               [](const Sys& s, std::vector<CaseInstance>& out) {
                 if (s.n % 2 != 0 || ordx(s, s.e) != 12) return;
                 if (cg(s, s.d1, s.n / 2 + 2 * s.e) && cg(s, s.d2, s.n / 2 + 2 * s.e))
                   out.push_back({12, 0, 0});
               },
               side_none});
  t.push_back({CaseLabel::T5_1, false,
               [](const Sys& s, std::vector<CaseInstance>& out) {
                 if (s.n % 2 != 0 || ordx(s, s.e) != 12) return;
                 if (cg(s, s.d1, s.n / 2 + 2 * s.e) && half(s, s.d2))
                   out.push_back({12, 0, 0});
               },
               side_none});
  t.push_back({CaseLabel::T5_2, false,
               [](const Sys& s, std::vector<CaseInstance>& out) {
                 const i64 g = mod_reduce(s.d1 + s.e, s.n);
                 if (ordx(s, g) == 12 && cg(s, s.d1, 4 * g) && half(s, s.d2))
                   out.push_back({12, 0, 0});
               },
               side_none});
  t.push_back({CaseLabel::T6, false,
               [](const Sys& s, std::vector<CaseInstance>& out) {
                 if (s.n % 2 != 0 || ordx(s, s.d1) != 18) return;
                 if (cg(s, s.e, -2 * s.d1) && cg(s, s.d2, s.n / 2 + 3 * s.d1))
                   out.push_back({18, 0, 0});
               },
               side_none});
  t.push_back({CaseLabel::T7_1, false,
               [](const Sys& s, std::vector<CaseInstance>& out) {
                 if (ordx(s, s.d1) == 12 && cg(s, s.e, -3 * s.d1) && half(s, s.d2))
                   out.push_back({12, 0, 0});
               },
               side_none});
  t.push_back({CaseLabel::T7_2, false,
               [](const Sys& s, std::vector<CaseInstance>& out) {
                 if (ordx(s, s.e) == 12 && cg(s, s.d1, -3 * s.e) && half(s, s.d2))
                   out.push_back({12, 0, 0});
               },
               side_none});
  t.push_back({CaseLabel::T8_1, false,
               [](const Sys& s, std::vector<CaseInstance>& out) {
                 const i64 m = ordx(s, s.d1);
                 if (m > 3 && cg(s, s.e, -3 * s.d1) && cg(s, s.d2, 3 * s.d1))
                   out.push_back({m, 0, 0});
               },
               side_cartan1});
  t.push_back({CaseLabel::T8_2a, false,
               [](const Sys& s, std::vector<CaseInstance>& out) {
                 if (s.n % 2 != 0 || ordx(s, s.e) != 8) return;
                 if (half(s, s.d2) && cg(s, s.e, s.n / 2 + s.d1))
                   out.push_back({8, 0, 0});
               },
               side_none});
  t.push_back({CaseLabel::T8_2b, false,
               [](const Sys& s, std::vector<CaseInstance>& out) {
                 if (ordx(s, s.e) == 8 && half(s, s.d2) && cg(s, s.d1, -2 * s.e))
                   out.push_back({8, 0, 0});
               },
               side_none});
  t.push_back({CaseLabel::T8_3, false,
               [](const Sys& s, std::vector<CaseInstance>& out) {
                 if (ordx(s, s.e) == 8 && cg(s, s.d1, 2 * s.e) && cg(s, s.d2, -s.e))
                   out.push_back({8, 0, 0});
               },
               side_none});
  t.push_back({CaseLabel::T9, false,
               [](const Sys& s, std::vector<CaseInstance>& out) {
                 if (ordx(s, s.e) == 9 && half(s, s.d2) && cg(s, s.d1, -3 * s.e))
                   out.push_back({18, 0, 0});
               },
               side_none});
  t.push_back({CaseLabel::T10, false,
               [](const Sys& s, std::vector<CaseInstance>& out) {
                 if (ordx(s, s.e) == 24 && cg(s, s.d1, -6 * s.e) && cg(s, s.d2, -8 * s.e))
                   out.push_back({24, 0, 0});
               },
               side_none});
  t.push_back({CaseLabel::T11_1, false,
               [](const Sys& s, std::vector<CaseInstance>& out) {
                 if (ordx(s, s.d1) == 5 && half(s, s.d2) && cg(s, s.e, -3 * s.d1))
                   out.push_back({10, 0, 0});
               },
               side_none});
  t.push_back({CaseLabel::T11_2, false,
               [](const Sys& s, std::vector<CaseInstance>& out) {
                 if (ordx(s, s.d1) == 20 && half(s, s.d2) && cg(s, s.e, -3 * s.d1))
                   out.push_back({20, 0, 0});
               },
               side_none});
  t.push_back({CaseLabel::T12, false,
               [](const Sys& s, std::vector<CaseInstance>& out) {
                 if (s.n % 2 != 0 || ordx(s, s.d1) != 30) return;
                 if (cg(s, s.e, -3 * s.d1) && cg(s, s.d2, s.n / 2 + 5 * s.d1))
                   out.push_back({30, 0, 0});
               },
               side_none});
  t.push_back({CaseLabel::T13, false,
               [](const Sys& s, std::vector<CaseInstance>& out) {
                 if (ordx(s, s.e) == 24 && cg(s, s.d1, 6 * s.e) && cg(s, s.d2, -s.e))
                   out.push_back({24, 0, 0});
               },
               side_none});
  t.push_back({CaseLabel::T14, false,
               [](const Sys& s, std::vector<CaseInstance>& out) {
                 if (ordx(s, s.d1) == 18 && half(s, s.d2) && cg(s, s.e, -4 * s.d1))
                   out.push_back({18, 0, 0});
               },
               side_none});
  t.push_back({CaseLabel::T15, false,
               [](const Sys& s, std::vector<CaseInstance>& out) {
                 if (s.n % 2 != 0 || ordx(s, s.e) != 30) return;
                 if (cg(s, s.d1, s.n / 2 - 3 * s.e) && cg(s, s.d2, -s.e))
                   out.push_back({30, 0, 0});
               },
               side_none});
  t.push_back({CaseLabel::T16_1, false,
               [](const Sys& s, std::vector<CaseInstance>& out) {
                 if (ordx(s, s.d1) == 10 && half(s, s.d2) && cg(s, s.e, -4 * s.d1))
                   out.push_back({10, 0, 0});
               },
               side_none});
  t.push_back({CaseLabel::T16_2, false,
               [](const Sys& s, std::vector<CaseInstance>& out) {
                 if (ordx(s, s.e) == 20 && half(s, s.d2) && cg(s, s.d1, -4 * s.e))
                   out.push_back({20, 0, 0});
               },
               side_none});
  t.push_back({CaseLabel::T17, false,
               [](const Sys& s, std::vector<CaseInstance>& out) {
                 if (ordx(s, s.e) == 24 && half(s, s.d2) && cg(s, s.d1, s.n / 2 + 4 * s.e))
                   out.push_back({24, 0, 0});
               },
               side_none});
  t.push_back({CaseLabel::T18, false,
               [](const Sys& s, std::vector<CaseInstance>& out) {
                 if (ordx(s, s.e) == 30 && half(s, s.d2) && cg(s, s.d1, s.n / 2 + 5 * s.e))
                   out.push_back({30, 0, 0});
               },
               side_none});
  t.push_back({CaseLabel::T20, false,
               [](const Sys& s, std::vector<CaseInstance>& out) {
                 if (ordx(s, s.e) == 30 && half(s, s.d2) && cg(s, s.d1, -6 * s.e))
                   out.push_back({30, 0, 0});
               },
               side_none});
  t.push_back({CaseLabel::T21, false,
               [](const Sys& s, std::vector<CaseInstance>& out) {
                 if (ordx(s, s.d1) == 24 && half(s, s.d2) && cg(s, s.e, -5 * s.d1))
                   out.push_back({24, 0, 0});
               },
               side_none});
  return t;
}

std::optional<Rank2Match> match_row(const CaseConditions& row, const Sys& sy,
                                    bool swapped) {
  std::vector<CaseInstance> cands;
  row.base(sy, cands);
  for (const auto& c : cands)
    if (row.side(sy, c)) return Rank2Match{row.label, c.m, swapped};
  return std::nullopt;
}

std::vector<Rank2Match> collect_matches(const Sys& sy) {
  std::vector<Rank2Match> out;
  const Sys sw{sy.n, sy.d2, sy.d1, sy.e};
  for (const auto& row : rank2_case_table()) {
    if (auto m = match_row(row, sy, false)) {
      out.push_back(*m);
    } else if (!row.oriented) {
      if (auto ms = match_row(row, sw, true)) out.push_back(*ms);
    }
  }
  return out;
}

Sys rank2_system(const Gdd& g, const char* who) {
  if (g.rank != 2) throw std::invalid_argument(std::string(who) + ": rank must be 2");
  return Sys{g.n, g.diag[0], g.diag[1], g.e(0, 1)};
}

}  // namespace

const std::vector<CaseConditions>& rank2_case_table() {
  static const std::vector<CaseConditions> table = build_rank2_table();
  return table;
}

Rank2Verdict rank2_case(const Gdd& g, const SearchBudget& budget) {
  const Sys sy = rank2_system(g, "rank2_case");
  Rank2Verdict v;
  if (sy.e == 0) {
    v.label = CaseLabel::Disconnected;
    return v;
  }
  v.matches = collect_matches(sy);
  if (!v.matches.empty()) {
    v.label = v.matches.front().label;
    v.m = v.matches.front().m;
    v.swapped = v.matches.front().swapped;
    return v;
  }
  v.label = oracle_realize(system_of(g), budget) ? CaseLabel::Infinite
                                                 : CaseLabel::NotRealizable;
  return v;
}

bool rank2_base_any(const Gdd& g) {
  const Sys sy = rank2_system(g, "rank2_base_any");
  if (sy.e == 0) return false;
  const Sys sw{sy.n, sy.d2, sy.d1, sy.e};
  std::vector<CaseInstance> cands;
  for (const auto& row : rank2_case_table()) {
    cands.clear();
    row.base(sy, cands);
    if (!cands.empty()) return true;
    if (!row.oriented) {
      cands.clear();
      row.base(sw, cands);
      if (!cands.empty()) return true;
    }
  }
  return false;
}

bool reflection_defined(const Gdd& g, int vertex) {
  if (vertex < 0 || vertex >= g.rank)
    throw std::invalid_argument("reflection_defined: vertex out of range");
  if (g.diag[vertex] != 0) return true;
  for (int j = 0; j < g.rank; ++j)
    if (j != vertex && g.e(vertex, j) != 0) return false;
  return true;
}

ReflectionData reflection_data(const Gdd& g, int vertex) {
  if (vertex < 0 || vertex >= g.rank)
    throw std::invalid_argument("reflection_data: vertex out of range");
  ReflectionData rd;
  rd.vertex = vertex;
  rd.m.assign(static_cast<std::size_t>(g.rank), 0);
  rd.m[vertex] = -2;
  const i64 di = g.diag[vertex];
  for (int j = 0; j < g.rank; ++j) {
    if (j == vertex) continue;
    const i64 eij = g.e(vertex, j);
    if (di == 0) {
      if (eij != 0)
        throw std::domain_error("reflection undefined at vertex " +
                                std::to_string(vertex));
      rd.m[j] = 0;
      continue;
    }
    const i64 o = order_of_exponent(di, g.n);
    for (i64 mm = 0;; ++mm) {
      // either the q-bracket closes (q_ii^mm q_ij q_ji = 1) or the
      // q-integer (mm+1)_{q_ii} vanishes; the latter at mm = o-1 at latest
      if (mod_reduce(mul_mod(mm, di, g.n) + eij, g.n) == 0 || (mm + 1) % o == 0) {
        rd.m[j] = mm;
        break;
      }
    }
  }
  return rd;
}

BraidingMatrix weyl_reflect(const BraidingMatrix& b, int vertex) {
  const ReflectionData rd = reflection_data(gdd_of(b), vertex);
  const i64 n = b.n;
  auto mm = [n](i64 a, i64 c) { return mul_mod(mod_reduce(a, n), mod_reduce(c, n), n); };
  std::vector<std::vector<i64>> a(static_cast<std::size_t>(b.rank),
                                  std::vector<i64>(static_cast<std::size_t>(b.rank)));
  for (int j = 0; j < b.rank; ++j)
    for (int l = 0; l < b.rank; ++l)
      a[j][l] = mod_reduce(b.at(j, l) + mm(rd.m[j], b.at(vertex, l)) +
                               mm(rd.m[l], b.at(j, vertex)) +
                               mm(mm(rd.m[j], rd.m[l]), b.at(vertex, vertex)),
                           n);
  return braiding_matrix(n, std::move(a));
}

Gdd weyl_reflect_gdd(const Gdd& g, int vertex) {
  const ReflectionData rd = reflection_data(g, vertex);
  const i64 n = g.n;
  const i64 di = g.diag[vertex];
  auto mm = [n](i64 a, i64 c) { return mul_mod(mod_reduce(a, n), mod_reduce(c, n), n); };
  std::vector<i64> diag(static_cast<std::size_t>(g.rank));
  for (int j = 0; j < g.rank; ++j) {
    if (j == vertex) {
      diag[j] = di;
      continue;
    }
    diag[j] = mod_reduce(g.diag[j] + mm(rd.m[j], g.e(vertex, j)) +
                             mm(mm(rd.m[j], rd.m[j]), di),
                         n);
  }
  std::vector<GddEdge> edges;
  for (int j = 0; j < g.rank; ++j) {
    for (int l = j + 1; l < g.rank; ++l) {
      i64 val;
      if (j == vertex || l == vertex) {
        const int o = j == vertex ? l : j;
        val = mod_reduce(-(g.e(vertex, o) + 2 * mm(rd.m[o], di)), n);
      } else {
        val = mod_reduce(g.e(j, l) + mm(rd.m[j], g.e(vertex, l)) +
                             mm(rd.m[l], g.e(vertex, j)) +
                             2 * mm(mm(rd.m[j], rd.m[l]), di),
                         n);
      }
      if (val != 0) edges.push_back({j, l, val});
    }
  }
  return gdd(n, std::move(diag), edges);
}

namespace {

std::vector<i64> gdd_key(const Gdd& g) {
  std::vector<i64> k;
  k.reserve(static_cast<std::size_t>(g.rank) * (g.rank + 1));
  for (int i = 0; i < g.rank; ++i) k.push_back(g.diag[i]);
  for (int i = 0; i < g.rank; ++i)
    for (int j = i + 1; j < g.rank; ++j) k.push_back(g.e(i, j));
  return k;
}

}  // namespace

WeylOrbit weyl_orbit(const Gdd& g, std::size_t max_members) {
  WeylOrbit orb;
  std::set<std::vector<i64>> seen;
  const Gdd seed = canonical_gdd(g);
  seen.insert(gdd_key(seed));
  orb.members.push_back(seed);
  for (std::size_t head = 0; head < orb.members.size(); ++head) {
    const Gdd cur = orb.members[head];
    for (int i = 0; i < cur.rank; ++i) {
      if (!reflection_defined(cur, i)) continue;
      Gdd nx = canonical_gdd(weyl_reflect_gdd(cur, i));
      if (!seen.insert(gdd_key(nx)).second) continue;
      if (orb.members.size() >= max_members) {
        orb.truncated = true;
        return orb;
      }
      orb.members.push_back(std::move(nx));
    }
  }
  return orb;
}

WeylOrbit weyl_orbit(const BraidingMatrix& b, std::size_t max_members) {
  return weyl_orbit(gdd_of(b), max_members);
}

namespace {

struct ChainHit {
  int cls;  // 1, 2, 3 for the three finite chain shapes
  i64 m;
  i64 m2;
};

// Match one orbit member against the finite chains: all-half vertices with
// opposite (cls 1) or equal order-3 (cls 2) edges, or a half middle vertex
// with Cartan-tied ends whose exponent pair passes the two-sided congruence
// test (cls 3).
std::optional<ChainHit> chain_match_member(const Gdd& g) {
  const i64 n = g.n;
  if (n % 2 != 0) return std::nullopt;
  const i64 h = n / 2;
  std::optional<ChainHit> best;
  for (int b = 0; b < 3; ++b) {
    const int a = b == 0 ? 1 : 0;
    const int c = b == 2 ? 1 : 2;
    if (g.e(a, c) != 0 || g.e(a, b) == 0 || g.e(b, c) == 0) continue;
    const i64 da = g.diag[a], db = g.diag[b], dc = g.diag[c];
    const i64 eab = g.e(a, b), ebc = g.e(b, c);
    if (da == h && db == h && dc == h) {
      if (mod_reduce(eab + ebc, n) == 0) {
        const i64 m = order_of_exponent(eab, n);
        if (m > 2 && (!best || best->cls > 1)) best = ChainHit{1, m, 0};
      }
      if (eab == ebc && order_of_exponent(eab, n) == 3)
        if (!best || best->cls > 2) best = ChainHit{2, 3, 0};
    } else if (db == h) {
      if (mod_reduce(eab + da, n) != 0 || mod_reduce(ebc + dc, n) != 0) continue;
      if (da == dc || mod_reduce(da + dc, n) == 0) continue;
      const i64 m = order_of_exponent(da, n);
      const i64 m2 = order_of_exponent(dc, n);
      if (m <= 1 || m2 <= 1) continue;
      const i64 s = da / (n / m);
      const i64 s2 = dc / (n / m2);
      if (lemma_2_2pp_solvable(m, m2, s, s2, n))
        if (!best || best->cls > 3) best = ChainHit{3, m, m2};
    }
  }
  return best;
}

}  // namespace

Rank3Verdict rank3_case(const Gdd& g, const SearchBudget& budget,
                        std::size_t max_orbit) {
  if (g.rank != 3) throw std::invalid_argument("rank3_case: rank must be 3");
  if (!is_connected(g))
    throw std::invalid_argument("rank3_case: diagram must be connected");
  Rank3Verdict v;
  std::optional<ChainHit> hit;
  bool truncated = false;
  if (g.n % 2 == 0) {
    const WeylOrbit orb = weyl_orbit(g, max_orbit);
    truncated = orb.truncated;
    for (const auto& member : orb.members) {
      const auto h = chain_match_member(member);
      if (h && (!hit || h->cls < hit->cls)) {
        hit = h;
        if (hit->cls == 1) break;
      }
    }
  }
  auto w = oracle_realize(system_of(g), budget);
  if (hit) {
    if (w) {
      v.label = hit->cls == 1   ? CaseLabel::Rank3_i
                : hit->cls == 2 ? CaseLabel::Rank3_ii
                                : CaseLabel::Rank3_iii;
      v.m = hit->m;
      v.m2 = hit->m2;
      v.witness = std::move(w);
    } else {
      v.label = CaseLabel::NotRealizable;
    }
    return v;
  }
  if (!w) {
    v.label = CaseLabel::NotRealizable;
    return v;
  }
  if (truncated)
    throw BudgetExceeded("rank3_case: reflection orbit truncated before classification");
  v.label = CaseLabel::Infinite;
  v.witness = std::move(w);
  return v;
}

CaseLabel rank_ge4_verdict(const Gdd& g) {
  if (g.rank < 4)
    throw std::invalid_argument("rank_ge4_verdict: rank must be at least 4");
  if (!is_connected(g))
    throw std::invalid_argument("rank_ge4_verdict: diagram must be connected");
  return CaseLabel::Infinite;
}

std::vector<Rank2Entry> enumerate_rank2(i64 n, const SearchBudget& budget) {
  if (n < 1) throw std::invalid_argument("enumerate_rank2: n must be positive");
  StepCounter steps(budget);
  std::vector<Rank2Entry> rows;
  for (i64 d1 = 0; d1 < n; ++d1) {
    for (i64 d2 = d1; d2 < n; ++d2) {
      for (i64 e = 1; e < n; ++e) {
        steps.spend();
        const auto matches = collect_matches(Sys{n, d1, d2, e});
        if (matches.empty()) continue;
        Gdd g = gdd(n, {d1, d2}, {{0, 1, e}});
        auto w = oracle_realize(system_of(g), budget);
        if (!w)
          throw std::logic_error("enumerate_rank2: matched case is not realizable");
        rows.push_back({std::move(g), matches.front().label, matches.front().m,
                        std::move(*w)});
      }
    }
  }
  return rows;
}

std::vector<Rank3Entry> enumerate_rank3(i64 n, const SearchBudget& budget) {
  if (n < 1) throw std::invalid_argument("enumerate_rank3: n must be positive");
  StepCounter steps(budget);
  std::vector<Rank3Entry> rows;
  std::vector<i64> diag(3);
  for (diag[0] = 0; diag[0] < n; ++diag[0]) {
    for (diag[1] = 0; diag[1] < n; ++diag[1]) {
      for (diag[2] = 0; diag[2] < n; ++diag[2]) {
        for (i64 e12 = 0; e12 < n; ++e12) {
          for (i64 e13 = 0; e13 < n; ++e13) {
            for (i64 e23 = 0; e23 < n; ++e23) {
              steps.spend();
              // connected on three vertices = at least two edges present
              const int live = (e12 != 0) + (e13 != 0) + (e23 != 0);
              if (live < 2) continue;
              Gdd g = gdd(n, diag, {{0, 1, e12}, {0, 2, e13}, {1, 2, e23}});
              if (!(canonical_gdd(g) == g)) continue;  // one visit per class
              auto v = rank3_case(g, budget);
              if (!is_rank3_case(v.label)) continue;
              rows.push_back({std::move(g), v.label, v.m, v.m2,
                              std::move(*v.witness)});
            }
          }
        }
      }
    }
  }
  return rows;
}

const std::vector<ProofTuple>& fixed_case_proof_tuples() {
  static const std::vector<ProofTuple> tuples = {
      {CaseLabel::T3_2b, 6, 2, 3, -3, 3, false},
      {CaseLabel::T3_3, 6, 2, 3, 5, 1, false},
      {CaseLabel::T4_1, 12, 4, 8, 9, 4, false},
      {CaseLabel::T4_2, 12, 8, 8, 1, 4, false},
      {CaseLabel::T5_1, 12, 8, 6, 1, 2, false},
      {CaseLabel::T5_2, 12, 4, 6, 9, 6, false},
      {CaseLabel::T6, 18, 1, 12, 16, 12, false},
      {CaseLabel::T7_1, 12, 1, 6, -3, 3, false},
      {CaseLabel::T7_2, 12, -3, 6, 1, 3, false},
      {CaseLabel::T8_2a, 8, 5, 4, 1, 4, false},
      {CaseLabel::T8_2b, 8, -2, 4, 1, 4, false},
      {CaseLabel::T8_3, 8, 2, -1, 1, 1, false},
      {CaseLabel::T9, 18, -6, 9, 2, 6, true},
      {CaseLabel::T10, 24, -6, -8, 1, 16, false},
      {CaseLabel::T11_1, 10, 2, 5, -6, 8, true},
      {CaseLabel::T11_2, 20, 1, 10, -3, 7, false},
      {CaseLabel::T12, 30, 1, 20, -3, 10, false},
      {CaseLabel::T13, 24, 6, -1, 1, 5, false},
      {CaseLabel::T14, 18, 1, 9, -4, 9, false},
      {CaseLabel::T15, 30, 12, -1, 1, 11, false},
      {CaseLabel::T16_1, 10, 1, 5, -4, 5, false},
      {CaseLabel::T16_2, 20, -4, 10, 1, 10, false},
      {CaseLabel::T17, 24, 16, 12, 1, 4, false},
      {CaseLabel::T18, 30, 20, 15, 1, 5, false},
      {CaseLabel::T20, 30, -6, 15, 1, 15, false},
      {CaseLabel::T21, 24, 1, 12, -5, 7, false},
  };
  return tuples;
}

}  // namespace nichols
