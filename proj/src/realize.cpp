#include "nichols/realize.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "nichols/modarith.hpp"

namespace nichols {

BilinearSystem system_of(const Gdd& g) {
  return {g.n, g.rank, g.diag, g.edge};
}

bool verify_realization(const BilinearSystem& s, const Realization& r) {
  if (r.n != s.n) return false;
  if (static_cast<int>(r.x.size()) != s.rank ||
      static_cast<int>(r.y.size()) != s.rank)
    return false;
  for (int i = 0; i < s.rank; ++i) {
    if (mod_reduce(mul_mod(r.x[i], r.y[i], s.n) - s.d[i], s.n) != 0)
      return false;
    for (int j = i + 1; j < s.rank; ++j) {
      i64 cross = mod_reduce(
          mul_mod(r.x[i], r.y[j], s.n) + mul_mod(r.x[j], r.y[i], s.n), s.n);
      if (cross != mod_reduce(s.e[i][j], s.n)) return false;
    }
  }
  return true;
}

namespace {

BilinearSystem reduce_system(const BilinearSystem& s, i64 pk) {
  BilinearSystem out{pk, s.rank, s.d, s.e};
  for (auto& v : out.d) v = mod_reduce(v, pk);
  for (auto& row : out.e)
    for (auto& v : row) v = mod_reduce(v, pk);
  return out;
}

/// y-levels: candidates for y_j come from x_j y_j == d_j, filtered by the
/// cross constraints against the already-fixed y_i.  First leaf reached is
/// the lexicographically smallest y for this x.
bool extend_y(const BilinearSystem& s, const std::vector<i64>& x, int j,
              std::vector<i64>& y, StepCounter& steps) {
  if (j == s.rank) return true;
  auto cands = solve_linear(x[j], -s.d[j], s.n);
  for (i64 c : cands.residues) {
    steps.spend();
    bool ok = true;
    for (int i = 0; i < j && ok; ++i) {
      i64 cross =
          mod_reduce(mul_mod(x[i], c, s.n) + mul_mod(x[j], y[i], s.n), s.n);
      if (cross != s.e[i][j]) ok = false;
    }
    if (!ok) continue;
    y[j] = c;
    if (extend_y(s, x, j + 1, y, steps)) return true;
  }
  return false;
}

bool extend_x(const BilinearSystem& s, int i, std::vector<i64>& x,
              std::vector<i64>& y, StepCounter& steps) {
  if (i == s.rank) return extend_y(s, x, 0, y, steps);
  for (i64 v = 0; v < s.n; ++v) {
    steps.spend();
    i64 g = std::gcd(v, s.n);
    if (g == 0) g = s.n;
    if (s.d[i] % g != 0) continue;  // x_i y_i == d_i would be unsolvable
    x[i] = v;
    if (extend_x(s, i + 1, x, y, steps)) return true;
  }
  return false;
}

std::optional<Realization> search_lexmin(const BilinearSystem& s,
                                         StepCounter& steps) {
  std::vector<i64> x(s.rank), y(s.rank);
  if (!extend_x(s, 0, x, y, steps)) return std::nullopt;
  Realization r{s.n, std::move(x), std::move(y)};
  if (!verify_realization(s, r))
    throw std::logic_error("realize: search produced an invalid witness");
  return r;
}

/// Solvable over Z_n iff solvable over every prime-power component of n:
/// the constraints are polynomial identities, preserved both ways by the
/// residue isomorphism.
bool components_solvable(const BilinearSystem& s, StepCounter& steps) {
  for (const auto& pp : factorize(s.n).factors) {
    i64 pk = 1;
    for (i64 i = 0; i < pp.alpha; ++i) pk *= pp.p;
    if (pk == s.n) continue;  // no split available
    if (!search_lexmin(reduce_system(s, pk), steps).has_value()) return false;
  }
  return true;
}

BilinearSystem validated(const BilinearSystem& s) {
  if (s.n < 1) throw std::invalid_argument("bilinear system: n must be >= 1");
  if (s.rank < 1 || static_cast<int>(s.d.size()) != s.rank ||
      static_cast<int>(s.e.size()) != s.rank)
    throw std::invalid_argument("bilinear system: shape mismatch");
  for (const auto& row : s.e)
    if (static_cast<int>(row.size()) != s.rank)
      throw std::invalid_argument("bilinear system: shape mismatch");
  return reduce_system(s, s.n);
}

}  // namespace

std::optional<Realization> oracle_realize(const BilinearSystem& sys,
                                          SearchBudget budget) {
  BilinearSystem s = validated(sys);
  StepCounter steps(budget);
  if (!components_solvable(s, steps)) return std::nullopt;
  return search_lexmin(s, steps);
}

bool bilinear_solvable(const BilinearSystem& sys, SearchBudget budget) {
  BilinearSystem s = validated(sys);
  StepCounter steps(budget);
  if (!components_solvable(s, steps)) return false;
  if (factorize(s.n).factors.size() <= 1)
    return search_lexmin(s, steps).has_value();
  return true;  // every component checked out above
}

std::optional<Realization> oracle_realize_fullscan(const BilinearSystem& sys,
                                                   SearchBudget budget) {
  BilinearSystem s = validated(sys);
  if (s.n > 12 || s.rank > 3)
    throw std::invalid_argument("fullscan: restricted to n <= 12, rank <= 3");
  StepCounter steps(budget);
  std::vector<i64> v(2 * s.rank, 0);
  Realization r{s.n, std::vector<i64>(s.rank), std::vector<i64>(s.rank)};
  while (true) {
    steps.spend();
    std::copy(v.begin(), v.begin() + s.rank, r.x.begin());
    std::copy(v.begin() + s.rank, v.end(), r.y.begin());
    if (verify_realization(s, r)) return r;
    int pos = 2 * s.rank - 1;
    while (pos >= 0 && v[pos] == s.n - 1) v[pos--] = 0;
    if (pos < 0) return std::nullopt;
    ++v[pos];
  }
}

namespace {

Realization reduced_witness(i64 n, std::vector<i64> x, std::vector<i64> y) {
  for (auto& v : x) v = mod_reduce(v, n);
  for (auto& v : y) v = mod_reduce(v, n);
  return {n, std::move(x), std::move(y)};
}

}  // namespace

std::optional<Realization> rank2_solve(i64 t1, i64 t2, i64 t3, i64 k, i64 s,
                                       i64 m) {
  if (m < 1 || k < 1) throw std::invalid_argument("rank2_solve: need k, m >= 1");
  if (std::gcd(mod_reduce(s, m), m) != 1 && m > 1)
    throw std::invalid_argument("rank2_solve: s must be a unit mod m");
  i64 n = k * m;
  BilinearSystem target{n, 2,
                        {mod_reduce(t1 * s % n * k, n), mod_reduce(t2 * s % n * k, n)},
                        {{0, mod_reduce(t3 * s % n * k, n)},
                         {mod_reduce(t3 * s % n * k, n), 0}}};

  for (i64 d : solve_quadratic(t1, -t3, t2, m).residues) {
    auto r = reduced_witness(n, {1, d}, {t1 * s % n * k, (t3 - d * t1) % n * s % n * k});
    if (verify_realization(target, r)) return r;
  }
  // Mirrored form: swap the roles of the two vertices.
  for (i64 d : solve_quadratic(t2, -t3, t1, m).residues) {
    auto r = reduced_witness(n, {d, 1}, {(t3 - d * t2) % n * s % n * k, t2 * s % n * k});
    if (verify_realization(target, r)) return r;
  }
  return std::nullopt;
}

bool rank2_solvable(i64 t1, i64 t2, i64 t3, i64 m, SearchBudget budget) {
  if (m < 1) throw std::invalid_argument("rank2_solvable: m must be >= 1");
  if (std::gcd(mod_reduce(t1, m), m) == 1)
    return !solve_quadratic(t1, -t3, t2, m).empty();
  if (std::gcd(mod_reduce(t2, m), m) == 1)
    return !solve_quadratic(t2, -t3, t1, m).empty();
  BilinearSystem s{m, 2,
                   {mod_reduce(t1, m), mod_reduce(t2, m)},
                   {{0, mod_reduce(t3, m)}, {mod_reduce(t3, m), 0}}};
  return bilinear_solvable(s, budget);
}

namespace {

std::optional<Realization> rank3_two_quadratics(i64 t1, i64 t2, i64 t3, i64 t4,
                                                i64 t5, i64 t6, i64 k, i64 s,
                                                i64 m) {
  i64 n = k * m;
  auto scale = [&](i64 t) { return mod_reduce(mod_reduce(t, n) * s % n * k, n); };
  i64 s4 = scale(t4), s5 = scale(t5), s6 = scale(t6);
  BilinearSystem target{n, 3,
                        {scale(t1), scale(t2), scale(t3)},
                        {{0, s4, s5}, {s4, 0, s6}, {s5, s6, 0}}};

  auto roots2 = solve_quadratic(t1, -t4, t2, m);
  auto roots3 = solve_quadratic(t1, -t5, t3, m);
  for (i64 x2 : roots2.residues) {
    for (i64 x3 : roots3.residues) {
      i64 cross = mod_reduce(
          2 * mul_mod(mod_reduce(t1, m), mul_mod(x2, x3, m), m) -
              mul_mod(mod_reduce(t4, m), x3, m) -
              mul_mod(mod_reduce(t5, m), x2, m) + mod_reduce(t6, m),
          m);
      if (cross != 0) continue;
      auto r = reduced_witness(
          n, {1, x2, x3},
          {mod_reduce(t1, n) * s % n * k,
           mod_reduce(t4 - x2 * t1, n) * s % n * k,
           mod_reduce(t5 - x3 * t1, n) * s % n * k});
      if (verify_realization(target, r)) return r;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Realization> rank3_solve_t1_unit(i64 t1, i64 t2, i64 t3, i64 t4,
                                               i64 t5, i64 t6, i64 k, i64 s,
                                               i64 m) {
  if (m < 1 || k < 1)
    throw std::invalid_argument("rank3_solve_t1_unit: need k, m >= 1");
  i64 n = k * m;
  if (mod_reduce(t1, n) != 1 % n)
    throw std::invalid_argument("rank3_solve_t1_unit: t1 must be 1 mod n");
  if (m > 1 && std::gcd(mod_reduce(s, m), m) != 1)
    throw std::invalid_argument("rank3_solve_t1_unit: s must be a unit mod m");
  return rank3_two_quadratics(t1, t2, t3, t4, t5, t6, k, s, m);
}

std::optional<Realization> rank3_solve_coprime(i64 t1, i64 t2, i64 t3, i64 t4,
                                               i64 t5, i64 t6, i64 m) {
  if (m < 1) throw std::invalid_argument("rank3_solve_coprime: m must be >= 1");
  if (std::gcd(mod_reduce(t1, m), m) != 1 && m > 1)
    throw std::invalid_argument("rank3_solve_coprime: t1 must be a unit mod m");
  return rank3_two_quadratics(t1, t2, t3, t4, t5, t6, 1, 1, m);
}

BilinearSystem chain_system(i64 m, i64 mp, i64 s, i64 sp, i64 n) {
  if (n < 2 || n % 2 != 0 || n % m != 0 || n % mp != 0)
    throw std::invalid_argument("chain_system: need lcm(2, m, m') | n");
  i64 a = mod_reduce(s * (n / m), n);
  i64 b = mod_reduce(sp * (n / mp), n);
  BilinearSystem out{n, 3,
                     {n / 2, a, b},
                     {{0, mod_reduce(-a, n), mod_reduce(-b, n)},
                      {mod_reduce(-a, n), 0, 0},
                      {mod_reduce(-b, n), 0, 0}}};
  return out;
}

bool lemma_2_2pp_solvable(i64 m, i64 mp, i64 s, i64 sp, i64 n) {
  if (m <= 1 || mp <= 1)
    throw std::invalid_argument("lemma_2_2pp_solvable: need m, m' > 1");
  if (std::gcd(mod_reduce(s, m), m) != 1 ||
      std::gcd(mod_reduce(sp, mp), mp) != 1)
    throw std::invalid_argument("lemma_2_2pp_solvable: s, s' must be units");
  if (n < 2 || n % 2 != 0 || n % m != 0 || n % mp != 0)
    throw std::invalid_argument("lemma_2_2pp_solvable: need lcm(2, m, m') | n");

  auto fm = factorize(m);
  auto fmp = factorize(mp);
  std::vector<i64> primes;
  for (const auto& f : fm.factors) primes.push_back(f.p);
  for (const auto& f : fmp.factors) primes.push_back(f.p);
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());

  for (i64 p : primes) {
    i64 u = fm.exponent_of(p);
    i64 up = fmp.exponent_of(p);
    if (u == 0 || up == 0) {
      // One-sided prime: always fine except the single factor of 2, which
      // collides with the x1 y1 == n/2 constraint.
      if (p == 2 && std::max(u, up) == 1) return false;
      continue;
    }
    if (u != up) return false;
    if (p == 2 && u < 2) return false;
    i64 pu = 1;
    for (i64 i = 0; i < u; ++i) pu *= p;
    i64 cof = mod_reduce(m / pu, pu);    // unit: the other primes of m
    i64 cofp = mod_reduce(mp / pu, pu);
    if (mod_reduce(s * cofp + sp * cof, pu) != 0) return false;
  }
  return true;
}

std::optional<Realization> realize_matrix(const BraidingMatrix& b,
                                          SearchBudget budget) {
  i64 n = b.n;
  int r = b.rank;
  StepCounter steps(budget);

  // Necessary 2x2 minor identities: a_ij a_kl == a_il a_kj (mod n).
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < r; ++k)
      for (int j = 0; j < r; ++j)
        for (int l = 0; l < r; ++l)
          if (mul_mod(b.at(i, j), b.at(k, l), n) !=
              mul_mod(b.at(i, l), b.at(k, j), n))
            return std::nullopt;

  auto exists_mod = [&](i64 modulus) -> std::optional<Realization> {
    std::vector<i64> x(r, 0);
    std::vector<i64> y(r, 0);
    // Walk x lexicographically; for fixed x, each y_j is the intersection
    // of the r linear congruences x_i y_j == a_ij, independent across j.
    auto rec = [&](auto&& self, int i) -> bool {
      if (i == r) {
        for (int j = 0; j < r; ++j) {
          auto cands = solve_linear(x[0], -mod_reduce(b.at(0, j), modulus),
                                    modulus);
          i64 pick = -1;
          for (i64 c : cands.residues) {
            steps.spend();
            bool ok = true;
            for (int ii = 1; ii < r && ok; ++ii)
              if (mul_mod(x[ii], c, modulus) !=
                  mod_reduce(b.at(ii, j), modulus))
                ok = false;
            if (ok) {
              pick = c;
              break;
            }
          }
          if (pick < 0) return false;
          y[j] = pick;
        }
        return true;
      }
      for (i64 v = 0; v < modulus; ++v) {
        steps.spend();
        i64 g = std::gcd(v, modulus);
        if (g == 0) g = modulus;
        bool feasible = true;
        for (int j = 0; j < r && feasible; ++j)
          if (mod_reduce(b.at(i, j), modulus) % g != 0) feasible = false;
        if (!feasible) continue;
        x[i] = v;
        if (self(self, i + 1)) return true;
      }
      return false;
    };
    if (!rec(rec, 0)) return std::nullopt;
    return Realization{modulus, x, y};
  };

  // Prime-power screen, then the lex-min search over the full modulus.
  for (const auto& pp : factorize(n).factors) {
    i64 pk = 1;
    for (i64 i = 0; i < pp.alpha; ++i) pk *= pp.p;
    if (pk == n) continue;
    if (!exists_mod(pk).has_value()) return std::nullopt;
  }
  auto found = exists_mod(n);
  if (found && !verify_matrix_realization(b, *found))
    throw std::logic_error("realize_matrix: search produced an invalid witness");
  return found;
}

bool verify_matrix_realization(const BraidingMatrix& b, const Realization& r) {
  if (r.n != b.n) return false;
  if (static_cast<int>(r.x.size()) != b.rank ||
      static_cast<int>(r.y.size()) != b.rank)
    return false;
  for (int i = 0; i < b.rank; ++i)
    for (int j = 0; j < b.rank; ++j)
      if (mul_mod(r.x[i], r.y[j], b.n) != b.at(i, j)) return false;
  return true;
}

}  // namespace nichols
