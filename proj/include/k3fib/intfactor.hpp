#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace k3fib {

// Integer factorization utilities used by the exact root finders.  Trial
// division handles the small primes; Pollard's rho with Brent cycling takes
// care of the remaining composites.  Primality is certified with GMP's
// Miller-Rabin (mpz_probab_prime_p, 40 rounds), which is beyond reproach for
// the magnitudes arising here.

namespace intfactor_detail {

inline mpz_class rho_f(const mpz_class& x, const mpz_class& c, const mpz_class& n) {
  mpz_class r = (x * x + c) % n;
  return r;
}

// One Pollard-rho attempt; returns a nontrivial factor or 0 on failure.
inline mpz_class pollard_rho_once(const mpz_class& n, unsigned long seed) {
  if (n % 2 == 0) return mpz_class(2);
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(seed);
  mpz_class c = rng.get_z_range(n - 1) + 1;
  mpz_class x = rng.get_z_range(n);
  mpz_class y = x, d = 1;
  mpz_class saved_x, saved_y;
  unsigned long iterations = 0;
  const unsigned long kMaxIterations = 2000000;
  while (d == 1) {
    if (++iterations > kMaxIterations) return mpz_class(0);
    x = rho_f(x, c, n);
    y = rho_f(rho_f(y, c, n), c, n);
    if (x == y) return mpz_class(0);  // cycle without factor; retry with new c
    mpz_class diff = x > y ? x - y : y - x;
    mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
  }
  if (d == n) return mpz_class(0);
  return d;
}

inline bool factor_into(mpz_class n, std::map<mpz_class, unsigned>& out, int depth) {
  if (n == 1) return true;
  if (depth > 64) return false;
  if (mpz_probab_prime_p(n.get_mpz_t(), 40) != 0) {
    out[n] += 1;
    return true;
  }
  // Perfect powers first: rho struggles on them.
  if (mpz_perfect_power_p(n.get_mpz_t()) != 0) {
    for (unsigned k = 2; k <= mpz_sizeinbase(n.get_mpz_t(), 2); ++k) {
      mpz_class r;
      if (mpz_root(r.get_mpz_t(), n.get_mpz_t(), k) != 0) {
        std::map<mpz_class, unsigned> base;
        if (!factor_into(r, base, depth + 1)) return false;
        for (const auto& [p, e] : base) out[p] += e * k;
        return true;
      }
    }
  }
  mpz_class d = 0;
  for (unsigned long seed = 1; seed <= 32 && d == 0; ++seed) {
    d = pollard_rho_once(n, 0x9e3779b9ul * seed + 12345);
  }
  if (d == 0) return false;
  return factor_into(d, out, depth + 1) && factor_into(n / d, out, depth + 1);
}

}  // namespace intfactor_detail

// Factors |n| (n != 0).  Returns std::nullopt if the factorization could not
// be completed within budget (astronomically unlikely for inputs in range).
inline std::optional<std::map<mpz_class, unsigned>> factor_integer(const mpz_class& n) {
  mpz_class a = ::abs(n);
  if (a == 0) return std::nullopt;
  std::map<mpz_class, unsigned> out;
  // Trial division by small primes.
  for (unsigned long p = 2; p < 100000ul && a > 1; p += (p == 2 ? 1 : 2)) {
    if (mpz_class(a % p) == 0) {
      unsigned e = 0;
      while (mpz_class(a % p) == 0) {
        a /= p;
        ++e;
      }
      out[mpz_class(static_cast<long>(p))] += e;
    }
    if (mpz_class(p) * mpz_class(p) > a) break;
  }
  if (a > 1) {
    if (!intfactor_detail::factor_into(a, out, 0)) return std::nullopt;
  }
  return out;
}

// Enumerates the positive divisors of |n| in no particular order, up to `cap`
// many.  Returns std::nullopt if n could not be factored or has more than
// `cap` divisors.
inline std::optional<std::vector<mpz_class>> positive_divisors(const mpz_class& n,
                                                              std::size_t cap = 500000) {
  auto fac = factor_integer(n);
  if (!fac) return std::nullopt;
  std::vector<mpz_class> divs{mpz_class(1)};
  for (const auto& [p, e] : *fac) {
    const std::size_t base = divs.size();
    if (base * (e + 1) > cap) return std::nullopt;
    mpz_class pk = 1;
    std::vector<mpz_class> next;
    next.reserve(base * (e + 1));
    for (unsigned k = 0; k <= e; ++k) {
      for (std::size_t i = 0; i < base; ++i) next.push_back(divs[i] * pk);
      pk *= p;
    }
    divs.swap(next);
  }
  return divs;
}

}  // namespace k3fib
