#pragma once

#include <vector>

#include "nichols/common.hpp"

namespace nichols {

struct PrimePower {
  i64 p;
  i64 alpha;
  bool operator==(const PrimePower&) const = default;
};

/// Prime factorization, primes ascending.  factorize(1) is empty.
struct Factorization {
  std::vector<PrimePower> factors;

  /// Exponent of p in the factored number (0 if p does not divide it).
  i64 exponent_of(i64 p) const;
};

Factorization factorize(i64 n);

/// Legendre symbol (a/p) for an odd prime p: +1 for nonzero squares,
/// -1 for non-squares, 0 when p | a.
int legendre(i64 a, i64 p);

/// The full solution set of a congruence in one variable x mod `modulus`:
/// all residues in [0, modulus) satisfying it, sorted ascending.
struct SolutionSet {
  i64 modulus = 1;
  std::vector<i64> residues;

  bool empty() const { return residues.empty(); }
  bool contains(i64 r) const;
};

/// All x with a*x + b == 0 (mod m).  Solvable iff gcd(a, m) divides -b,
/// in which case there are exactly gcd(a, m) residues.
SolutionSet solve_linear(i64 a, i64 b, i64 m);

/// Square roots of a mod p^k for prime p with p not dividing a.
/// Odd p: zero or two roots.  p = 2: zero, one, two, or four roots.
SolutionSet sqrt_mod_prime_power(i64 a, i64 p, i64 k);

/// Lift a simple root of the polynomial f (coefficients ascending, so
/// f = {c0, c1, c2, ...} means c0 + c1 x + c2 x^2 + ...) from mod p to
/// mod p^k.  Requires f(root) == 0 (mod p) and f'(root) != 0 (mod p);
/// throws std::domain_error when the root is not simple.
i64 hensel_lift(const std::vector<i64>& f, i64 root, i64 p, i64 k);

/// Combine residues (r_i mod m_i) with pairwise coprime moduli into the
/// unique residue mod prod(m_i).  Throws std::invalid_argument when the
/// moduli are not pairwise coprime.
struct CrtResidue {
  i64 value;
  i64 modulus;
};
CrtResidue crt_combine(const std::vector<CrtResidue>& parts);

struct QuadSolveOptions {
  /// Largest prime-power component allowed on the exhaustive fallback path.
  i64 exhaustive_bound = 1'000'000;
};

/// All x in [0, m) with a*x^2 + b*x + c == 0 (mod m).  Exact for every
/// modulus: structured (root scan mod p + Hensel lift) whenever the leading
/// coefficient and the discriminant are units at a prime component, and an
/// exhaustive scan over that component otherwise.  Throws UnsupportedModulus
/// when an exhaustive component exceeds opts.exhaustive_bound.
SolutionSet solve_quadratic(i64 a, i64 b, i64 c, i64 m,
                            QuadSolveOptions opts = {});

}  // namespace nichols
