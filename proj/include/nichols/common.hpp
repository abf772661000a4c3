#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace nichols {

using i64 = std::int64_t;

/// Thrown when a search or solver would exceed its step budget.  Callers see
/// an explicit error instead of a silently truncated (and possibly wrong)
/// answer.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when a modulus is too large for the exhaustive fallback paths.
class UnsupportedModulus : public std::runtime_error {
 public:
  explicit UnsupportedModulus(const std::string& what) : std::runtime_error(what) {}
};

/// Step budget for the exhaustive searches.  One step is one candidate
/// examined (a loop iteration of the innermost search).  The default is large
/// enough for every desk-scale input in the test suite.
struct SearchBudget {
  i64 max_steps = 100'000'000;
};

class StepCounter {
 public:
  explicit StepCounter(SearchBudget budget) : limit_(budget.max_steps) {}

  void spend(i64 k = 1) {
    used_ += k;
    if (used_ > limit_)
      throw BudgetExceeded("search budget exceeded (" + std::to_string(limit_) +
                           " steps)");
  }

  i64 used() const { return used_; }

 private:
  i64 used_ = 0;
  i64 limit_;
};

/// Representative of v mod n in [0, n).  n must be positive.
inline i64 mod_reduce(i64 v, i64 n) {
  v %= n;
  return v < 0 ? v + n : v;
}

inline i64 mul_mod(i64 a, i64 b, i64 n) {
  return static_cast<i64>(static_cast<__int128>(a) * b % n);
}

inline i64 pow_mod(i64 base, i64 exp, i64 n) {
  if (n <= 0) throw std::invalid_argument("pow_mod: modulus must be positive");
  base = mod_reduce(base, n);
  i64 acc = 1 % n;
  while (exp > 0) {
    if (exp & 1) acc = mul_mod(acc, base, n);
    base = mul_mod(base, base, n);
    exp >>= 1;
  }
  return acc;
}

/// Extended gcd: returns g = gcd(a, b) and (x, y) with a*x + b*y = g.
struct Egcd {
  i64 g, x, y;
};

inline Egcd egcd(i64 a, i64 b) {
  if (b == 0) return {a >= 0 ? a : -a, a >= 0 ? 1 : -1, 0};
  Egcd sub = egcd(b, a % b);
  return {sub.g, sub.y, sub.x - (a / b) * sub.y};
}

/// Inverse of a mod n; requires gcd(a, n) = 1.
inline i64 inv_mod(i64 a, i64 n) {
  a = mod_reduce(a, n);
  Egcd e = egcd(a, n);
  if (e.g != 1) throw std::invalid_argument("inv_mod: argument not a unit");
  return mod_reduce(e.x, n);
}

inline bool is_prime(i64 p) {
  if (p < 2) return false;
  for (i64 d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

/// Multiplicative order of omega^a where omega is a fixed primitive n-th root
/// of unity: n / gcd(a, n).
inline i64 order_of_exponent(i64 a, i64 n) {
  if (n <= 0) throw std::invalid_argument("order_of_exponent: bad modulus");
  return n / std::gcd(mod_reduce(a, n), n);
}

}  // namespace nichols
