#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "frobshield/errors.hpp"

namespace frobshield {

// All exact scalars in the library are GMP-backed. BigRat values are kept
// canonical (gcd(num, den) = 1, den > 0); mpq arithmetic preserves that as
// long as inputs are canonical, so only raw num/den construction needs care.
using BigInt = mpz_class;
using BigRat = mpq_class;

inline BigRat make_rat(const BigInt& n, const BigInt& d) {
  if (sgn(d) == 0) throw Error("rational with zero denominator");
  BigRat r(n, d);
  r.canonicalize();
  return r;
}

inline const BigInt rat_num(const BigRat& r) { return r.get_num(); }
inline const BigInt rat_den(const BigRat& r) { return r.get_den(); }
inline bool rat_is_int(const BigRat& r) { return r.get_den() == 1; }

inline BigInt pow_ui(const BigInt& base, unsigned long e) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

inline BigRat pow_rat(const BigRat& base, long e) {
  if (e == 0) return BigRat(1);
  if (sgn(base) == 0) {
    if (e < 0) throw Error("zero to negative power");
    return BigRat(0);
  }
  BigRat b = e < 0 ? BigRat(1) / base : base;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  BigRat out(1);
  while (k) {
    if (k & 1) out *= b;
    b *= b;
    k >>= 1;
  }
  return out;
}

inline std::size_t bit_size(const BigInt& n) {
  return mpz_sizeinbase(n.get_mpz_t(), 2);
}

// v_p(n) for n != 0.
inline unsigned long int_valuation(BigInt n, const BigInt& p) {
  FROB_CHECK(sgn(n) != 0, "valuation of zero");
  BigInt out;
  return mpz_remove(out.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
}

inline bool divides(const BigInt& d, const BigInt& n) {
  return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline BigInt exact_div(const BigInt& n, const BigInt& d) {
  FROB_CHECK(divides(d, n), "inexact division");
  BigInt q;
  mpz_divexact(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

inline BigInt fdiv(const BigInt& n, const BigInt& d) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

inline BigInt mod_positive(const BigInt& n, const BigInt& m) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t());
  return r;
}

// Symmetric remainder in (-m/2, m/2].
inline BigInt mod_symmetric(const BigInt& n, const BigInt& m) {
  BigInt r = mod_positive(n, m);
  if (2 * r > m) r -= m;
  return r;
}

inline BigInt isqrt(const BigInt& n) {
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

inline bool is_square(const BigInt& n) {
  return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline bool is_probable_prime(const BigInt& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

inline BigInt next_prime(const BigInt& n) {
  BigInt r;
  mpz_nextprime(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

inline BigInt powmod(const BigInt& b, const BigInt& e, const BigInt& m) {
  BigInt r;
  mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  return r;
}

namespace detail {

// Pollard-Brent with fixed parameters; deterministic across runs.
inline BigInt pollard_brent(const BigInt& n) {
  if (divides(BigInt(2), n)) return BigInt(2);
  for (unsigned long c = 1;; ++c) {
    BigInt x(2), y(2), d(1);
    BigInt saved_x;
    unsigned long power = 1, lam = 0;
    while (d == 1) {
      if (lam == power) {
        saved_x = x;
        power *= 2;
        lam = 0;
      }
      x = (x * x + c) % n;
      ++lam;
      BigInt diff = abs(x - saved_x);
      if (sgn(diff) == 0) break;
      d = gcd(diff, n);
    }
    if (d != 1 && d != n) return d;
    // cycle collapsed or trivial factor; retry with next c
  }
}

inline void factor_rec(const BigInt& n, std::vector<BigInt>& primes) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    primes.push_back(n);
    return;
  }
  BigInt d = pollard_brent(n);
  factor_rec(d, primes);
  factor_rec(n / d, primes);
}

} // namespace detail

// Factorization of |n| (n != 0), sorted ascending. Trial division below 10^5
// then Pollard-Brent.
inline std::vector<std::pair<BigInt, unsigned long>> factor_integer(BigInt n) {
  FROB_CHECK(sgn(n) != 0, "factor of zero");
  n = abs(n);
  std::vector<std::pair<BigInt, unsigned long>> out;
  if (n == 1) return out;
  for (BigInt p(2); p * p <= n && p < 100000; p = (p == 2 ? BigInt(3) : p + 2)) {
    if (divides(p, n)) {
      unsigned long e = mpz_remove(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
      out.emplace_back(p, e);
    }
  }
  if (n > 1) {
    std::vector<BigInt> rest;
    detail::factor_rec(n, rest);
    std::sort(rest.begin(), rest.end());
    for (std::size_t i = 0; i < rest.size();) {
      std::size_t j = i;
      while (j < rest.size() && rest[j] == rest[i]) ++j;
      out.emplace_back(rest[i], j - i);
      i = j;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct PrimePower {
  BigInt p;
  unsigned long f = 0;
};

inline std::optional<PrimePower> as_prime_power(const BigInt& q) {
  if (q < 2) return std::nullopt;
  auto fs = factor_integer(q);
  if (fs.size() != 1) return std::nullopt;
  return PrimePower{fs[0].first, fs[0].second};
}

inline unsigned long euler_phi(unsigned long n) {
  unsigned long result = n;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

inline std::string to_string(const BigInt& n) { return n.get_str(); }
inline std::string to_string(const BigRat& r) { return r.get_str(); }

} // namespace frobshield
