#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "frobshield/bigint.hpp"
#include "frobshield/errors.hpp"
#include "frobshield/intmat.hpp"

namespace frobshield {

// Univariate polynomials, constant term first. The zero polynomial is the
// empty vector; degree(zero) = -1.
using IntPoly = std::vector<BigInt>;
using RatPoly = std::vector<BigRat>;

template <typename P>
inline void poly_trim(P& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

template <typename P>
inline int degree(const P& p) {
  return static_cast<int>(p.size()) - 1;
}

template <typename P>
inline bool poly_is_zero(const P& p) {
  return p.empty();
}

template <typename P>
inline auto poly_lc(const P& p) {
  FROB_CHECK(!p.empty(), "leading coefficient of zero polynomial");
  return p.back();
}

inline RatPoly to_rat(const IntPoly& p) {
  RatPoly q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[i] = BigRat(p[i]);
  return q;
}

template <typename P>
inline P poly_add(const P& a, const P& b) {
  P c(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < a.size()) c[i] += a[i];
    if (i < b.size()) c[i] += b[i];
  }
  poly_trim(c);
  return c;
}

template <typename P>
inline P poly_sub(const P& a, const P& b) {
  P c(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < a.size()) c[i] += a[i];
    if (i < b.size()) c[i] -= b[i];
  }
  poly_trim(c);
  return c;
}

template <typename P>
inline P poly_neg(P a) {
  for (auto& c : a) c = -c;
  return a;
}

template <typename P>
inline P poly_mul(const P& a, const P& b) {
  if (a.empty() || b.empty()) return P{};
  P c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  poly_trim(c);
  return c;
}

template <typename P, typename S>
inline P poly_scale(P a, const S& s) {
  for (auto& c : a) c *= s;
  poly_trim(a);
  return a;
}

template <typename P, typename X>
inline X poly_eval(const P& p, const X& x) {
  X acc(0);
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + X(p[i]);
  return acc;
}

inline BigRat poly_eval_rat(const RatPoly& p, const BigRat& x) {
  BigRat acc(0);
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

inline BigInt poly_eval_int(const IntPoly& p, const BigInt& x) {
  BigInt acc(0);
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

template <typename P>
inline P poly_derivative(const P& p) {
  if (p.size() <= 1) return P{};
  P d(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * static_cast<long>(i);
  poly_trim(d);
  return d;
}

inline std::pair<RatPoly, RatPoly> poly_divrem(const RatPoly& a, const RatPoly& b) {
  FROB_CHECK(!b.empty(), "division by zero polynomial");
  RatPoly r = a, q;
  if (degree(a) >= degree(b)) q.assign(a.size() - b.size() + 1, BigRat(0));
  const BigRat inv_lc = BigRat(1) / b.back();
  while (!r.empty() && r.size() >= b.size()) {
    BigRat c = r.back() * inv_lc;
    std::size_t shift = r.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
    poly_trim(r);
  }
  poly_trim(q);
  return {q, r};
}

inline RatPoly poly_exact_div(const RatPoly& a, const RatPoly& b) {
  auto [q, r] = poly_divrem(a, b);
  FROB_CHECK(r.empty(), "inexact polynomial division");
  return q;
}

inline RatPoly poly_monic(RatPoly p) {
  if (p.empty()) return p;
  BigRat inv = BigRat(1) / p.back();
  for (auto& c : p) c *= inv;
  return p;
}

inline BigInt int_content(const IntPoly& p) {
  BigInt g(0);
  for (const BigInt& c : p) g = gcd(g, c);
  return g;
}

// Clears denominators and divides by content; returns the primitive integer
// polynomial with positive leading coefficient (sign returned separately).
inline IntPoly primitive_part(const RatPoly& p, int* sign_out = nullptr) {
  if (p.empty()) {
    if (sign_out) *sign_out = 0;
    return IntPoly{};
  }
  BigInt den(1);
  for (const BigRat& c : p) den = lcm(den, rat_den(c));
  IntPoly q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[i] = rat_num(p[i]) * exact_div(den, rat_den(p[i]));
  BigInt cont = int_content(q);
  for (auto& c : q) c = exact_div(c, cont);
  int s = sgn(q.back());
  if (s < 0)
    for (auto& c : q) c = -c;
  if (sign_out) *sign_out = s;
  return q;
}

inline IntPoly int_primitive(const IntPoly& p) { return primitive_part(to_rat(p)); }

inline bool poly_is_monic_int(const IntPoly& p) { return !p.empty() && p.back() == 1; }

// gcd over Q via primitive pseudo-remainder sequence; returns the primitive
// integer gcd with positive leading coefficient.
inline IntPoly int_gcd(IntPoly a, IntPoly b) {
  poly_trim(a);
  poly_trim(b);
  if (a.empty()) return b.empty() ? IntPoly{} : int_primitive(b);
  if (b.empty()) return int_primitive(a);
  a = int_primitive(a);
  b = int_primitive(b);
  if (degree(a) < degree(b)) std::swap(a, b);
  while (!b.empty()) {
    // pseudo-remainder of a by b
    long d = degree(a) - degree(b);
    IntPoly r = poly_scale(a, pow_ui(b.back(), static_cast<unsigned long>(d) + 1));
    while (!r.empty() && r.size() >= b.size()) {
      BigInt c = exact_div(r.back(), b.back());
      std::size_t shift = r.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
      poly_trim(r);
    }
    a = std::move(b);
    b = r.empty() ? IntPoly{} : int_primitive(r);
  }
  return a;
}

inline RatPoly rat_gcd(const RatPoly& a, const RatPoly& b) {
  if (a.empty()) return poly_monic(b);
  if (b.empty()) return poly_monic(a);
  return poly_monic(to_rat(int_gcd(primitive_part(a), primitive_part(b))));
}

// Squarefree part. For a monic integer polynomial the radical is again a
// monic integer polynomial.
inline IntPoly radical(const IntPoly& f) {
  IntPoly g = int_gcd(f, poly_derivative(f));
  if (degree(g) == 0) return int_primitive(f);
  RatPoly q = poly_exact_div(to_rat(f), to_rat(g));
  return primitive_part(q);
}

// Yun squarefree decomposition of a primitive integer polynomial:
// f = c * prod f_i^i with the f_i pairwise coprime and squarefree.
inline std::vector<std::pair<IntPoly, unsigned>> squarefree_decomposition(const IntPoly& f_in) {
  std::vector<std::pair<IntPoly, unsigned>> out;
  IntPoly f = int_primitive(f_in);
  if (degree(f) <= 0) return out;
  IntPoly fp = poly_derivative(f);
  IntPoly u = int_gcd(f, fp);
  RatPoly v = poly_exact_div(to_rat(f), to_rat(u));
  RatPoly w = poly_exact_div(to_rat(fp), to_rat(u));
  unsigned i = 1;
  while (degree(v) > 0) {
    RatPoly z = poly_sub(w, poly_derivative(v));
    IntPoly h = poly_is_zero(z) ? primitive_part(v)
                                : int_gcd(primitive_part(v), primitive_part(z));
    if (degree(h) > 0) out.emplace_back(h, i);
    v = poly_exact_div(v, to_rat(h));
    w = poly_is_zero(z) ? RatPoly{} : poly_exact_div(z, to_rat(h));
    ++i;
  }
  return out;
}

// Sylvester-matrix resultant (Bareiss determinant); exact.
inline BigInt int_resultant(const IntPoly& a, const IntPoly& b) {
  const int da = degree(a), db = degree(b);
  if (da < 0 || db < 0) return BigInt(0);
  if (da == 0) return pow_ui(a[0], static_cast<unsigned long>(db));
  if (db == 0) return pow_ui(b[0], static_cast<unsigned long>(da));
  const std::size_t n = static_cast<std::size_t>(da + db);
  IntMat s(n, n);
  for (int r = 0; r < db; ++r)
    for (int i = 0; i <= da; ++i) s.at(r, r + i) = a[da - i];
  for (int r = 0; r < da; ++r)
    for (int i = 0; i <= db; ++i) s.at(db + r, r + i) = b[db - i];
  return det(s);
}

inline BigRat rat_resultant(const RatPoly& a, const RatPoly& b) {
  const int da = degree(a), db = degree(b);
  if (da < 0 || db < 0) return BigRat(0);
  // Res(c*f, g) = c^deg(g) * Res(f, g)
  BigInt dena(1), denb(1);
  for (const auto& c : a) dena = lcm(dena, rat_den(c));
  for (const auto& c : b) denb = lcm(denb, rat_den(c));
  IntPoly ia(a.size()), ib(b.size());
  for (std::size_t i = 0; i < a.size(); ++i) ia[i] = rat_num(a[i]) * exact_div(dena, rat_den(a[i]));
  for (std::size_t i = 0; i < b.size(); ++i) ib[i] = rat_num(b[i]) * exact_div(denb, rat_den(b[i]));
  BigRat r(int_resultant(ia, ib));
  r /= BigRat(pow_ui(dena, static_cast<unsigned long>(db)));
  r /= BigRat(pow_ui(denb, static_cast<unsigned long>(da)));
  return r;
}

// Discriminant of a monic integer polynomial.
inline BigInt discriminant_monic(const IntPoly& f) {
  FROB_CHECK(poly_is_monic_int(f), "discriminant requires monic input");
  const int n = degree(f);
  if (n <= 0) return BigInt(1);
  BigInt res = int_resultant(f, poly_derivative(f));
  return (static_cast<long>(n) * (n - 1) / 2) % 2 == 0 ? res : -res;
}

// p(x + c)
inline IntPoly poly_shift_int(const IntPoly& p, const BigInt& c) {
  IntPoly out;
  for (std::size_t i = p.size(); i-- > 0;) {
    // out = out * (x + c) + p[i]
    IntPoly next(out.size() + 1);
    for (std::size_t j = 0; j < out.size(); ++j) {
      next[j + 1] += out[j];
      next[j] += out[j] * c;
    }
    if (next.empty()) next.resize(1);
    next[0] += p[i];
    poly_trim(next);
    out = std::move(next);
  }
  return out;
}

// --- Sturm sequences -------------------------------------------------------

inline std::vector<RatPoly> sturm_sequence(const RatPoly& p) {
  std::vector<RatPoly> seq;
  RatPoly a = p;
  poly_trim(a);
  if (a.empty()) return seq;
  seq.push_back(a);
  RatPoly b = poly_derivative(a);
  while (!b.empty()) {
    seq.push_back(b);
    RatPoly r = poly_divrem(a, b).second;
    a = std::move(b);
    b = poly_neg(std::move(r));
  }
  return seq;
}

namespace detail {
inline int sign_at_rat(const RatPoly& p, const BigRat& x) { return sgn(poly_eval_rat(p, x)); }
inline int sign_at_pos_inf(const RatPoly& p) { return p.empty() ? 0 : sgn(p.back()); }
inline int sign_at_neg_inf(const RatPoly& p) {
  if (p.empty()) return 0;
  int s = sgn(p.back());
  return degree(p) % 2 == 0 ? s : -s;
}

template <typename SignFn>
inline int sign_variations(const std::vector<RatPoly>& seq, SignFn f) {
  int var = 0, last = 0;
  for (const auto& p : seq) {
    int s = f(p);
    if (s == 0) continue;
    if (last != 0 && s != last) ++var;
    last = s;
  }
  return var;
}
} // namespace detail

// Number of distinct real roots of squarefree p in the half-open interval
// (a, b]. Pass std::nullopt for an infinite endpoint.
inline long sturm_count(const RatPoly& p, const std::optional<BigRat>& a,
                        const std::optional<BigRat>& b) {
  RatPoly q = p;
  poly_trim(q);
  if (degree(q) <= 0) return 0;
  auto seq = sturm_sequence(q);
  int va = a ? detail::sign_variations(seq, [&](const RatPoly& s) { return detail::sign_at_rat(s, *a); })
             : detail::sign_variations(seq, detail::sign_at_neg_inf);
  int vb = b ? detail::sign_variations(seq, [&](const RatPoly& s) { return detail::sign_at_rat(s, *b); })
             : detail::sign_variations(seq, detail::sign_at_pos_inf);
  return va - vb;
}

inline long count_real_roots(const RatPoly& p) {
  return sturm_count(p, std::nullopt, std::nullopt);
}

// n-th cyclotomic polynomial, by exact division of x^n - 1.
inline IntPoly cyclotomic(unsigned long n) {
  FROB_CHECK(n >= 1, "cyclotomic index must be positive");
  std::vector<unsigned long> divs;
  for (unsigned long d = 1; d <= n; ++d)
    if (n % d == 0) divs.push_back(d);
  std::vector<IntPoly> cache;
  for (unsigned long m : divs) {
    IntPoly xm(m + 1);
    xm[0] = -1;
    xm[m] = 1;
    RatPoly q = to_rat(xm);
    for (std::size_t k = 0; k + 1 < divs.size() && divs[k] < m; ++k)
      if (m % divs[k] == 0) q = poly_exact_div(q, to_rat(cache[k]));
    cache.push_back(primitive_part(q));
  }
  return cache.back();
}

inline std::string poly_to_string(const IntPoly& p) {
  if (p.empty()) return "0";
  std::string s;
  for (std::size_t i = p.size(); i-- > 0;) {
    if (!s.empty()) s += sgn(p[i]) >= 0 ? "+" : "";
    if (i == 0)
      s += p[i].get_str();
    else if (p[i] == 1)
      s += "x^" + std::to_string(i);
    else if (p[i] == -1)
      s += "-x^" + std::to_string(i);
    else if (sgn(p[i]) != 0)
      s += p[i].get_str() + "*x^" + std::to_string(i);
    else
      s.pop_back();
  }
  return s;
}

} // namespace frobshield
