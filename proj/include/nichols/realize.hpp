#pragma once

#include <optional>
#include <vector>

#include "nichols/braiding.hpp"
#include "nichols/common.hpp"

namespace nichols {

/// A witness pair: x_i is the exponent of the grading group element g_i,
/// y_i the exponent of the character chi_i, so that the braiding comes out
/// as q_ij = omega^{x_i y_j}.
struct Realization {
  i64 n = 1;
  std::vector<i64> x;
  std::vector<i64> y;
  bool operator==(const Realization&) const = default;
};

/// The symmetrized congruence system attached to a diagram: unknowns
/// x_1..x_r, y_1..y_r with x_i y_i == d_i and x_i y_j + x_j y_i == e_ij
/// (mod n).  This is the realizability question at diagram level; distinct
/// braiding matrices over one diagram share it.
struct BilinearSystem {
  i64 n = 1;
  int rank = 1;
  std::vector<i64> d;
  std::vector<std::vector<i64>> e;
};

BilinearSystem system_of(const Gdd& g);

bool verify_realization(const BilinearSystem& s, const Realization& r);

/// Exhaustive decision procedure.  Walks x-vectors in lexicographic order
/// (pruning x_i with gcd(x_i, n) not dividing d_i); for a fixed x every y_j
/// is cut out by linear congruences, handled by solve_linear plus the cross
/// constraints against already-chosen y_i.  Returns the lexicographically
/// smallest witness under the (x_1..x_r, y_1..y_r) order, or definitive
/// absence.  Composite n is pre-screened per prime power: the system is
/// solvable iff every component is, which makes absences cheap.
std::optional<Realization> oracle_realize(const BilinearSystem& s,
                                          SearchBudget budget = {});

/// Solvability only, via the prime-power screen; skips the final lex-min
/// search.  The fast path for bulk grids.
bool bilinear_solvable(const BilinearSystem& s, SearchBudget budget = {});

/// Plain scan over all (x, y) in [0, n)^{2r}.  Cross-validation mode for
/// tests; restricted to n <= 12 and rank <= 3 where the scan is affordable.
std::optional<Realization> oracle_realize_fullscan(const BilinearSystem& s,
                                                   SearchBudget budget = {});

/// Rank-2 structured solver over n = k*m with gcd(s, m) = 1: targets
/// x1 y1 == t1 s k, x2 y2 == t2 s k, x1 y2 + x2 y1 == t3 s k (mod n).
/// Any root d of t1 x^2 - t3 x + t2 (mod m) yields the witness
/// x = (1, d), y = (t1 s k, (t3 - d t1) s k); when that quadratic has no
/// root the symmetric form t2 x^2 - t3 x + t1 is tried with the mirrored
/// witness.  Every returned witness is re-verified.
std::optional<Realization> rank2_solve(i64 t1, i64 t2, i64 t3, i64 k, i64 s,
                                       i64 m);

/// Solvability of the rank-2 system with k = s = 1, n = m.  Quadratic
/// criterion when t1 (or, mirrored, t2) is a unit mod m; otherwise the
/// oracle decides.
bool rank2_solvable(i64 t1, i64 t2, i64 t3, i64 m, SearchBudget budget = {});

/// Rank-3 structured solver for t1 == 1 (mod n), n = k*m, gcd(s, m) = 1:
/// targets x_i y_i == t_i s k and x1 y2 + x2 y1 == t4 s k,
/// x1 y3 + x3 y1 == t5 s k, x2 y3 + x3 y2 == t6 s k (mod n).  Scans root
/// pairs (x2, x3) of the two quadratics t1 x^2 - t4 x + t2 and
/// t1 x^2 - t5 x + t3 (mod m) for one satisfying the cross condition
/// 2 t1 x2 x3 - t4 x3 - t5 x2 == -t6 (mod m).
std::optional<Realization> rank3_solve_t1_unit(i64 t1, i64 t2, i64 t3, i64 t4,
                                               i64 t5, i64 t6, i64 k, i64 s,
                                               i64 m);

/// Same two-quadratics-plus-cross strategy for the mod-m reduced system
/// (k = s = 1, n = m) under gcd(m, t1) = 1.
std::optional<Realization> rank3_solve_coprime(i64 t1, i64 t2, i64 t3, i64 t4,
                                               i64 t5, i64 t6, i64 m);

/// The three-vertex chain system with targets x1 y1 == n/2,
/// x2 y2 == s n/m, x3 y3 == s' n/m', x1 y2 + x2 y1 == -s n/m,
/// x1 y3 + x3 y1 == -s' n/m', x2 y3 + x3 y2 == 0 (mod n).
BilinearSystem chain_system(i64 m, i64 mp, i64 s, i64 sp, i64 n);

/// Solvability of chain_system by per-prime exponent matching, no search.
/// For every prime p | lcm(m, m'): let u = v_p(m), u' = v_p(m').  When only
/// one of u, u' is nonzero the component is solvable unless p = 2 with
/// max(u, u') = 1.  When both are nonzero it needs u == u' (and u >= 2 for
/// p = 2) together with s*(m'/p^u) + s'*(m/p^u) == 0 (mod p^u).
/// Requires m, m' > 1, gcd(s, m) = gcd(s', m') = 1, and lcm(2, m, m') | n.
bool lemma_2_2pp_solvable(i64 m, i64 mp, i64 s, i64 sp, i64 n);

/// Matrix-level realization: x_i * y_j == a_ij (mod n) entrywise.
std::optional<Realization> realize_matrix(const BraidingMatrix& b,
                                          SearchBudget budget = {});

bool verify_matrix_realization(const BraidingMatrix& b, const Realization& r);

}  // namespace nichols
