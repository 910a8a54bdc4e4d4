#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "frobshield/bigint.hpp"
#include "frobshield/errors.hpp"
#include "frobshield/poly.hpp"

namespace frobshield {

// Polynomials over F_p for word-sized primes p < 2^31, constant term first.
using FpPoly = std::vector<std::uint64_t>;

namespace fp {

inline std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}
inline std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + p - b;
}
inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return (a * b) % p;
}
inline std::uint64_t pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = mul(r, b, p);
    b = mul(b, b, p);
    e >>= 1;
  }
  return r;
}
inline std::uint64_t inv(std::uint64_t a, std::uint64_t p) {
  FROB_CHECK(a % p != 0, "inverse of zero mod p");
  return pow(a % p, p - 2, p);
}

} // namespace fp

inline void fppoly_trim(FpPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline FpPoly fppoly_from_int(const IntPoly& f, std::uint64_t p) {
  FpPoly g(f.size());
  for (std::size_t i = 0; i < f.size(); ++i)
    g[i] = mpz_fdiv_ui(f[i].get_mpz_t(), static_cast<unsigned long>(p));
  fppoly_trim(g);
  return g;
}

inline FpPoly fppoly_mul(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  FpPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  }
  fppoly_trim(c);
  return c;
}

inline FpPoly fppoly_add(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
  FpPoly c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    std::uint64_t x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
    c[i] = fp::add(x, y, p);
  }
  fppoly_trim(c);
  return c;
}

inline FpPoly fppoly_sub(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
  FpPoly c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    std::uint64_t x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
    c[i] = fp::sub(x, y, p);
  }
  fppoly_trim(c);
  return c;
}

inline FpPoly fppoly_make_monic(FpPoly f, std::uint64_t p) {
  fppoly_trim(f);
  if (f.empty()) return f;
  std::uint64_t s = fp::inv(f.back(), p);
  for (auto& c : f) c = fp::mul(c, s, p);
  return f;
}

inline std::pair<FpPoly, FpPoly> fppoly_divrem(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
  FROB_CHECK(!b.empty(), "mod-p division by zero");
  FpPoly r = a, q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, 0);
  std::uint64_t ilc = fp::inv(b.back(), p);
  while (r.size() >= b.size() && !r.empty()) {
    std::uint64_t c = fp::mul(r.back(), ilc, p);
    std::size_t shift = r.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] = fp::sub(r[shift + i], fp::mul(c, b[i], p), p);
    fppoly_trim(r);
  }
  fppoly_trim(q);
  return {q, r};
}

inline FpPoly fppoly_mod(const FpPoly& a, const FpPoly& m, std::uint64_t p) {
  return fppoly_divrem(a, m, p).second;
}

inline FpPoly fppoly_gcd(FpPoly a, FpPoly b, std::uint64_t p) {
  fppoly_trim(a);
  fppoly_trim(b);
  while (!b.empty()) {
    FpPoly r = fppoly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return fppoly_make_monic(a, p);
}

inline FpPoly fppoly_powmod(FpPoly base, BigInt e, const FpPoly& m, std::uint64_t p) {
  FpPoly r{1};
  base = fppoly_mod(base, m, p);
  while (sgn(e) > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = fppoly_mod(fppoly_mul(r, base, p), m, p);
    base = fppoly_mod(fppoly_mul(base, base, p), m, p);
    e >>= 1;
  }
  return r;
}

inline FpPoly fppoly_derivative(const FpPoly& f, std::uint64_t p) {
  if (f.size() <= 1) return {};
  FpPoly d(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) d[i - 1] = (f[i] * (i % p)) % p;
  fppoly_trim(d);
  return d;
}

inline bool fppoly_is_squarefree(const FpPoly& f, std::uint64_t p) {
  FpPoly d = fppoly_derivative(f, p);
  if (d.empty()) return degree(f) <= 0;
  return degree(fppoly_gcd(f, d, p)) == 0;
}

namespace detail {

// Equal-degree splitting (Cantor-Zassenhaus; Artin-Schreier traces for p=2).
// Deterministically seeded so factorizations are reproducible.
inline void edf(const FpPoly& f, std::size_t d, std::uint64_t p, std::mt19937_64& rng,
                std::vector<FpPoly>& out) {
  const std::size_t n = static_cast<std::size_t>(degree(f));
  if (n == d) {
    out.push_back(f);
    return;
  }
  for (;;) {
    FpPoly u(n);
    for (auto& c : u) c = rng() % p;
    fppoly_trim(u);
    if (degree(u) < 1) continue;
    FpPoly t;
    if (p == 2) {
      // trace map sum_{i<d} u^(2^i)
      t = u;
      FpPoly acc = u;
      for (std::size_t i = 1; i < d; ++i) {
        acc = fppoly_mod(fppoly_mul(acc, acc, p), f, p);
        t = fppoly_add(t, acc, p);
      }
    } else {
      BigInt e = (pow_ui(BigInt(static_cast<unsigned long>(p)), static_cast<unsigned long>(d)) - 1) / 2;
      t = fppoly_powmod(u, e, f, p);
      if (!t.empty()) t[0] = fp::sub(t[0], 1, p);
      fppoly_trim(t);
    }
    FpPoly g = fppoly_gcd(t, f, p);
    if (degree(g) > 0 && g.size() < f.size()) {
      edf(g, d, p, rng, out);
      edf(fppoly_divrem(f, g, p).first, d, p, rng, out);
      return;
    }
  }
}

} // namespace detail

// Factorization of a squarefree monic polynomial over F_p into monic
// irreducibles, sorted by (degree, coefficient vector).
inline std::vector<FpPoly> fppoly_factor_squarefree(FpPoly f, std::uint64_t p) {
  f = fppoly_make_monic(f, p);
  FROB_CHECK(fppoly_is_squarefree(f, p), "factor_squarefree requires squarefree input");
  std::vector<FpPoly> out;
  if (degree(f) <= 0) return out;
  std::mt19937_64 rng(0x5eedf00dULL ^ (p * 0x9e3779b97f4a7c15ULL) ^ f.size());

  // distinct-degree stage
  FpPoly x{0, 1};
  FpPoly h = x;  // x^(p^d) mod f, built incrementally
  std::vector<std::pair<FpPoly, std::size_t>> stages;
  FpPoly rest = f;
  for (std::size_t d = 1; 2 * d <= static_cast<std::size_t>(degree(rest)); ++d) {
    h = fppoly_powmod(h, BigInt(static_cast<unsigned long>(p)), rest, p);
    FpPoly g = fppoly_gcd(fppoly_sub(h, x, p), rest, p);
    if (degree(g) > 0) {
      stages.emplace_back(g, d);
      rest = fppoly_divrem(rest, g, p).first;
      h = fppoly_mod(h, rest, p);
    }
  }
  if (degree(rest) > 0) stages.emplace_back(rest, static_cast<std::size_t>(degree(rest)));

  for (auto& [g, d] : stages) detail::edf(g, d, p, rng, out);
  std::sort(out.begin(), out.end(), [](const FpPoly& a, const FpPoly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  });
  return out;
}

inline std::vector<std::uint64_t> fppoly_roots(const FpPoly& f_in, std::uint64_t p) {
  std::vector<std::uint64_t> roots;
  FpPoly f = fppoly_make_monic(f_in, p);
  if (degree(f) <= 0) return roots;
  // strip repeated factors, then keep the part splitting over F_p
  FpPoly d = fppoly_derivative(f, p);
  if (!d.empty()) {
    FpPoly g = fppoly_gcd(f, d, p);
    if (degree(g) > 0) f = fppoly_divrem(f, g, p).first;
  }
  FpPoly xp_minus_x = fppoly_sub(fppoly_powmod(FpPoly{0, 1}, BigInt(static_cast<unsigned long>(p)), f, p), FpPoly{0, 1}, p);
  FpPoly lin = fppoly_gcd(xp_minus_x, f, p);
  for (const FpPoly& fac : degree(lin) > 0 ? fppoly_factor_squarefree(lin, p) : std::vector<FpPoly>{})
    if (fac.size() == 2) roots.push_back(fp::sub(0, fac[0], p));
  std::sort(roots.begin(), roots.end());
  return roots;
}

// --- Hensel lifting ---------------------------------------------------------

namespace detail {

inline IntPoly poly_mod_m(IntPoly f, const BigInt& m) {
  for (auto& c : f) c = mod_positive(c, m);
  poly_trim(f);
  return f;
}

// division with remainder by a monic polynomial, coefficients mod m
inline std::pair<IntPoly, IntPoly> poly_divrem_monic_mod(const IntPoly& a, const IntPoly& b,
                                                         const BigInt& m) {
  FROB_CHECK(!b.empty() && mod_positive(b.back(), m) == 1, "divisor must be monic mod m");
  IntPoly r = poly_mod_m(a, m), q;
  if (r.size() >= b.size()) q.assign(r.size() - b.size() + 1, BigInt(0));
  while (r.size() >= b.size() && !r.empty()) {
    BigInt c = r.back();
    std::size_t shift = r.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i)
      r[shift + i] = mod_positive(r[shift + i] - c * b[i], m);
    poly_trim(r);
  }
  poly_trim(q);
  return {q, r};
}

inline IntPoly poly_mul_mod(const IntPoly& a, const IntPoly& b, const BigInt& m) {
  return poly_mod_m(poly_mul(a, b), m);
}

struct HenselPair {
  IntPoly g, h, s, t;  // f = g*h, s*g + t*h = 1 (mod the current modulus)
};

// One quadratic step: from mod m to mod m^2.
inline HenselPair hensel_step(const IntPoly& f, HenselPair in, const BigInt& m) {
  BigInt m2 = m * m;
  IntPoly e = poly_mod_m(poly_sub(f, poly_mul(in.g, in.h)), m2);
  auto [q, r] = poly_divrem_monic_mod(poly_mul_mod(in.s, e, m2), in.g, m2);
  IntPoly g2 = poly_mod_m(poly_add(in.g, r), m2);
  IntPoly h2 = poly_mod_m(poly_add(in.h, poly_add(poly_mul_mod(in.t, e, m2), poly_mul_mod(q, in.h, m2))), m2);
  IntPoly b = poly_mod_m(poly_sub(poly_add(poly_mul(in.s, g2), poly_mul(in.t, h2)), IntPoly{1}), m2);
  auto [c, d] = poly_divrem_monic_mod(poly_mul_mod(in.s, b, m2), g2, m2);
  IntPoly s2 = poly_mod_m(poly_sub(in.s, d), m2);
  IntPoly t2 = poly_mod_m(poly_sub(in.t, poly_add(poly_mul_mod(in.t, b, m2), poly_mul_mod(c, h2, m2))), m2);
  return {g2, h2, s2, t2};
}

inline IntPoly from_fp(const FpPoly& f) {
  IntPoly g(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) g[i] = BigInt(static_cast<unsigned long>(f[i]));
  return g;
}

// extended euclid over F_p: s*a + t*b = 1 for coprime a, b
inline std::pair<FpPoly, FpPoly> fp_bezout(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
  FpPoly r0 = a, r1 = b;
  FpPoly s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = fppoly_divrem(r0, r1, p);
    FpPoly s2 = fppoly_sub(s0, fppoly_mul(q, s1, p), p);
    FpPoly t2 = fppoly_sub(t0, fppoly_mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  FROB_CHECK(degree(r0) == 0 && !r0.empty(), "bezout of non-coprime polynomials");
  std::uint64_t ilc = fp::inv(r0[0], p);
  for (auto& c : s0) c = fp::mul(c, ilc, p);
  for (auto& c : t0) c = fp::mul(c, ilc, p);
  return {s0, t0};
}

// Lift monic f = prod(parts) mod p to mod M = p^(2^t), by binary splitting.
inline void hensel_tree(const IntPoly& f, const std::vector<FpPoly>& parts, std::uint64_t p,
                        const BigInt& M, std::vector<IntPoly>& out) {
  if (parts.size() == 1) {
    out.push_back(poly_mod_m(f, M));
    return;
  }
  std::size_t half = parts.size() / 2;
  FpPoly gp{1}, hp{1};
  for (std::size_t i = 0; i < half; ++i) gp = fppoly_mul(gp, parts[i], p);
  for (std::size_t i = half; i < parts.size(); ++i) hp = fppoly_mul(hp, parts[i], p);
  auto [sp, tp] = fp_bezout(gp, hp, p);

  HenselPair pair{from_fp(gp), from_fp(hp), from_fp(sp), from_fp(tp)};
  BigInt m(static_cast<unsigned long>(p));
  while (m < M) {
    pair = hensel_step(f, pair, m);
    m = m * m;
  }
  std::vector<FpPoly> left(parts.begin(), parts.begin() + half);
  std::vector<FpPoly> right(parts.begin() + half, parts.end());
  hensel_tree(pair.g, left, p, M, out);
  hensel_tree(pair.h, right, p, M, out);
}

} // namespace detail

// Lifts the monic mod-p factors of squarefree f (coprime pairwise) to monic
// factors mod M = p^(2^t) >= target, so that monic(f) = prod(out) mod M.
inline std::vector<IntPoly> hensel_lift(const IntPoly& f, const std::vector<FpPoly>& parts,
                                        std::uint64_t p, const BigInt& target, BigInt* modulus_out) {
  BigInt M(static_cast<unsigned long>(p));
  while (M < target) M = M * M;
  if (modulus_out) *modulus_out = M;
  BigInt lc_inv;
  FROB_CHECK(mpz_invert(lc_inv.get_mpz_t(), f.back().get_mpz_t(), M.get_mpz_t()) != 0,
             "leading coefficient not invertible mod p^k");
  IntPoly fm = f;
  for (auto& c : fm) c = mod_positive(c * lc_inv, M);
  std::vector<IntPoly> out;
  if (parts.size() == 1) {
    out.push_back(fm);
    return out;
  }
  detail::hensel_tree(fm, parts, p, M, out);
  return out;
}

} // namespace frobshield
