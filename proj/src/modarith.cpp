#include "nichols/modarith.hpp"

#include <algorithm>
#include <stdexcept>

namespace nichols {

namespace {

/// f(x) mod m with coefficients ascending, overflow-safe.
i64 poly_eval_mod(const std::vector<i64>& f, i64 x, i64 m) {
  __int128 acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) {
    acc = (acc * x + *it) % m;
  }
  i64 r = static_cast<i64>(acc % m);
  return r < 0 ? r + m : r;
}

/// f'(x) mod m.
i64 poly_deriv_eval_mod(const std::vector<i64>& f, i64 x, i64 m) {
  std::vector<i64> d;
  for (std::size_t i = 1; i < f.size(); ++i) {
    d.push_back(mul_mod(mod_reduce(f[i], m), static_cast<i64>(i), m));
  }
  if (d.empty()) return 0;
  return poly_eval_mod(d, x, m);
}

i64 checked_pow(i64 p, i64 k) {
  i64 r = 1;
  for (i64 i = 0; i < k; ++i) {
    if (r > (i64{1} << 62) / p)
      throw std::overflow_error("prime power does not fit in 64 bits");
    r *= p;
  }
  return r;
}

}  // namespace

i64 Factorization::exponent_of(i64 p) const {
  for (const auto& f : factors)
    if (f.p == p) return f.alpha;
  return 0;
}

Factorization factorize(i64 n) {
  if (n < 1) throw std::invalid_argument("factorize: argument must be >= 1");
  Factorization out;
  for (i64 p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    i64 alpha = 0;
    while (n % p == 0) {
      n /= p;
      ++alpha;
    }
    out.factors.push_back({p, alpha});
  }
  if (n > 1) out.factors.push_back({n, 1});
  return out;
}

int legendre(i64 a, i64 p) {
  if (p == 2 || !is_prime(p))
    throw std::invalid_argument("legendre: modulus must be an odd prime");
  a = mod_reduce(a, p);
  if (a == 0) return 0;
  return pow_mod(a, (p - 1) / 2, p) == 1 ? +1 : -1;
}

bool SolutionSet::contains(i64 r) const {
  r = mod_reduce(r, modulus);
  return std::binary_search(residues.begin(), residues.end(), r);
}

SolutionSet solve_linear(i64 a, i64 b, i64 m) {
  if (m < 1) throw std::invalid_argument("solve_linear: modulus must be >= 1");
  SolutionSet out{m, {}};
  if (m == 1) {
    out.residues = {0};
    return out;
  }
  a = mod_reduce(a, m);
  b = mod_reduce(b, m);
  i64 g = std::gcd(a, m);
  if (g == 0) g = m;  // a == 0
  if (b % g != 0) return out;
  if (a == 0) {
    // Every residue solves 0*x + 0 == 0.
    out.residues.resize(static_cast<std::size_t>(m));
    for (i64 r = 0; r < m; ++r) out.residues[static_cast<std::size_t>(r)] = r;
    return out;
  }
  i64 mg = m / g;
  // (a/g) x == -(b/g) (mod m/g) has the unique solution x0.
  i64 x0 = mul_mod(mod_reduce(-(b / g), mg), inv_mod(a / g, mg), mg);
  out.residues.reserve(static_cast<std::size_t>(g));
  for (i64 t = 0; t < g; ++t) out.residues.push_back(x0 + t * mg);
  return out;
}

i64 hensel_lift(const std::vector<i64>& f, i64 root, i64 p, i64 k) {
  if (!is_prime(p)) throw std::invalid_argument("hensel_lift: p must be prime");
  if (k < 1) throw std::invalid_argument("hensel_lift: k must be >= 1");
  if (poly_eval_mod(f, mod_reduce(root, p), p) != 0)
    throw std::invalid_argument("hensel_lift: not a root mod p");
  i64 fp = poly_deriv_eval_mod(f, mod_reduce(root, p), p);
  if (fp == 0)
    throw std::domain_error("hensel_lift: derivative vanishes, root not simple");
  i64 fp_inv = inv_mod(fp, p);

  i64 x = mod_reduce(root, p);
  i64 pj = p;  // p^j, with x a root mod p^j
  for (i64 j = 1; j < k; ++j) {
    i64 pj1 = pj * p;
    i64 val = poly_eval_mod(f, x, pj1);
    // val is divisible by p^j; correct x by delta * p^j.
    i64 delta = mul_mod(mod_reduce(-(val / pj), p), fp_inv, p);
    x = x + delta * pj;
    pj = pj1;
  }
  return mod_reduce(x, pj);
}

SolutionSet sqrt_mod_prime_power(i64 a, i64 p, i64 k) {
  if (!is_prime(p))
    throw std::invalid_argument("sqrt_mod_prime_power: p must be prime");
  if (k < 1) throw std::invalid_argument("sqrt_mod_prime_power: k must be >= 1");
  i64 pk = checked_pow(p, k);
  a = mod_reduce(a, pk);
  if (a % p == 0)
    throw std::invalid_argument("sqrt_mod_prime_power: a must be a unit");

  SolutionSet out{pk, {}};
  if (p == 2) {
    if (k == 1) {
      out.residues = {1};
      return out;
    }
    if (k == 2) {
      if (a % 4 == 1) out.residues = {1, 3};
      return out;
    }
    if (a % 8 != 1) return out;
    // Lift x = 1 from mod 8 one bit at a time: x^2 == a (mod 2^j).
    i64 x = 1;
    for (i64 j = 3; j < k; ++j) {
      i64 mod_next = i64{1} << (j + 1);
      if (mul_mod(x, x, mod_next) != a % mod_next) x += i64{1} << (j - 1);
    }
    out.residues = {x, pk - x, mod_reduce(x + pk / 2, pk),
                    mod_reduce(pk - x + pk / 2, pk)};
  } else {
    if (legendre(a, p) != 1) return out;
    i64 r = -1;
    for (i64 x = 1; x < p; ++x) {
      if (mul_mod(x, x, p) == a % p) {
        r = x;
        break;
      }
    }
    r = hensel_lift({mod_reduce(-a, pk), 0, 1}, r, p, k);
    out.residues = {r, pk - r};
  }
  std::sort(out.residues.begin(), out.residues.end());
  out.residues.erase(std::unique(out.residues.begin(), out.residues.end()),
                     out.residues.end());
  return out;
}

CrtResidue crt_combine(const std::vector<CrtResidue>& parts) {
  if (parts.empty()) return {0, 1};
  CrtResidue acc{mod_reduce(parts[0].value, parts[0].modulus),
                 parts[0].modulus};
  for (std::size_t i = 1; i < parts.size(); ++i) {
    i64 m2 = parts[i].modulus;
    i64 r2 = mod_reduce(parts[i].value, m2);
    if (std::gcd(acc.modulus, m2) != 1)
      throw std::invalid_argument("crt_combine: moduli not pairwise coprime");
    i64 t = mul_mod(mod_reduce(r2 - acc.value, m2), inv_mod(acc.modulus, m2),
                    m2);
    __int128 combined =
        static_cast<__int128>(acc.modulus) * t + acc.value;
    __int128 mod = static_cast<__int128>(acc.modulus) * m2;
    if (mod > (static_cast<__int128>(1) << 62))
      throw std::overflow_error("crt_combine: combined modulus too large");
    acc = {static_cast<i64>(combined % mod), static_cast<i64>(mod)};
  }
  return acc;
}

namespace {

/// Roots of a x^2 + b x + c mod p^k on the structured path: p does not
/// divide a or the discriminant, so every root mod p is simple and lifts
/// uniquely.
std::vector<i64> quad_roots_structured(i64 a, i64 b, i64 c, i64 p, i64 k) {
  std::vector<i64> roots;
  std::vector<i64> f = {c, b, a};
  for (i64 x = 0; x < p; ++x) {
    if (poly_eval_mod(f, x, p) == 0) roots.push_back(x);
  }
  std::vector<i64> lifted;
  for (i64 r : roots) lifted.push_back(hensel_lift(f, r, p, k));
  return lifted;
}

std::vector<i64> quad_roots_exhaustive(i64 a, i64 b, i64 c, i64 pk) {
  std::vector<i64> roots;
  std::vector<i64> f = {c, b, a};
  for (i64 x = 0; x < pk; ++x) {
    if (poly_eval_mod(f, x, pk) == 0) roots.push_back(x);
  }
  return roots;
}

}  // namespace

SolutionSet solve_quadratic(i64 a, i64 b, i64 c, i64 m, QuadSolveOptions opts) {
  if (m < 1)
    throw std::invalid_argument("solve_quadratic: modulus must be >= 1");
  SolutionSet out{m, {}};
  if (m == 1) {
    out.residues = {0};
    return out;
  }
  a = mod_reduce(a, m);
  b = mod_reduce(b, m);
  c = mod_reduce(c, m);
  if (a == 0) return solve_linear(b, c, m);

  __int128 disc_wide =
      static_cast<__int128>(b) * b - static_cast<__int128>(4) * a * c;

  Factorization fac = factorize(m);
  std::vector<std::vector<i64>> component_roots;
  std::vector<i64> component_moduli;
  for (const auto& pp : fac.factors) {
    i64 pk = checked_pow(pp.p, pp.alpha);
    i64 disc_mod_p = static_cast<i64>(((disc_wide % pp.p) + pp.p) % pp.p);
    std::vector<i64> roots;
    if (a % pp.p != 0 && disc_mod_p != 0) {
      if (pp.p > opts.exhaustive_bound)
        throw UnsupportedModulus("solve_quadratic: prime too large to scan");
      roots = quad_roots_structured(a % pk, b % pk, c % pk, pp.p, pp.alpha);
    } else {
      if (pk > opts.exhaustive_bound)
        throw UnsupportedModulus(
            "solve_quadratic: degenerate component too large to scan");
      roots = quad_roots_exhaustive(a % pk, b % pk, c % pk, pk);
    }
    if (roots.empty()) return out;
    component_roots.push_back(std::move(roots));
    component_moduli.push_back(pk);
  }

  // Cartesian product of the per-component roots, recombined by CRT.
  std::vector<std::size_t> idx(component_roots.size(), 0);
  while (true) {
    std::vector<CrtResidue> parts;
    for (std::size_t i = 0; i < idx.size(); ++i)
      parts.push_back({component_roots[i][idx[i]], component_moduli[i]});
    out.residues.push_back(crt_combine(parts).value);
    std::size_t i = 0;
    while (i < idx.size() && ++idx[i] == component_roots[i].size()) {
      idx[i] = 0;
      ++i;
    }
    if (i == idx.size()) break;
  }
  std::sort(out.residues.begin(), out.residues.end());
  return out;
}

}  // namespace nichols
