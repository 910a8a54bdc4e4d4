#pragma once

#include <cmath>
#include <cstdint>

#include "frobshield/bigint.hpp"
#include "frobshield/errors.hpp"

namespace frobshield {

// Exact dyadic rational man * 2^exp. Addition and multiplication are exact;
// rounding only happens through the explicit round_* helpers, so interval
// bounds built from Dyadic values are rigorous.
struct Dyadic {
  BigInt man;
  long exp = 0;

  Dyadic() : man(0) {}
  explicit Dyadic(const BigInt& m, long e = 0) : man(m), exp(e) { normalize(); }
  explicit Dyadic(long v) : man(v) { normalize(); }

  void normalize() {
    if (sgn(man) == 0) {
      exp = 0;
      return;
    }
    unsigned long tz = mpz_scan1(man.get_mpz_t(), 0);
    if (tz > 0) {
      man >>= tz;
      exp += static_cast<long>(tz);
    }
  }

  bool is_zero() const { return sgn(man) == 0; }
  int sign() const { return sgn(man); }

  BigRat to_rat() const {
    BigRat r(man);
    if (exp >= 0)
      r *= BigRat(BigInt(1) << static_cast<unsigned long>(exp));
    else
      r /= BigRat(BigInt(1) << static_cast<unsigned long>(-exp));
    return r;
  }

  static Dyadic from_double(double d) {
    FROB_CHECK(std::isfinite(d), "non-finite double");
    int e = 0;
    double m = std::frexp(d, &e);
    // 53-bit mantissa
    long long mi = static_cast<long long>(std::ldexp(m, 53));
    return Dyadic(BigInt(mi), e - 53);
  }

  std::size_t mantissa_bits() const { return is_zero() ? 0 : bit_size(man); }
};

inline Dyadic operator-(const Dyadic& a) { return Dyadic(-a.man, a.exp); }

inline Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  long e = std::min(a.exp, b.exp);
  BigInt m = (a.man << static_cast<unsigned long>(a.exp - e)) +
             (b.man << static_cast<unsigned long>(b.exp - e));
  return Dyadic(m, e);
}

inline Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }

inline Dyadic operator*(const Dyadic& a, const Dyadic& b) {
  return Dyadic(a.man * b.man, a.exp + b.exp);
}

inline Dyadic mul_2exp(const Dyadic& a, long k) {
  return a.is_zero() ? a : Dyadic(a.man, a.exp + k);
}

inline int cmp(const Dyadic& a, const Dyadic& b) {
  if (a.is_zero() || b.is_zero() || sgn(a.man) != sgn(b.man)) {
    int sa = a.sign(), sb = b.sign();
    return sa < sb ? -1 : (sa > sb ? 1 : 0);
  }
  return sgn((a - b).man);
}

inline bool operator<(const Dyadic& a, const Dyadic& b) { return cmp(a, b) < 0; }
inline bool operator<=(const Dyadic& a, const Dyadic& b) { return cmp(a, b) <= 0; }
inline bool operator>(const Dyadic& a, const Dyadic& b) { return cmp(a, b) > 0; }
inline bool operator>=(const Dyadic& a, const Dyadic& b) { return cmp(a, b) >= 0; }
inline bool operator==(const Dyadic& a, const Dyadic& b) { return cmp(a, b) == 0; }

inline Dyadic dyadic_abs(const Dyadic& a) { return Dyadic(abs(a.man), a.exp); }

// Round to at most prec mantissa bits, up = toward +infinity.
inline Dyadic round_dir(const Dyadic& a, std::size_t prec, bool up) {
  if (a.is_zero() || a.mantissa_bits() <= prec) return a;
  unsigned long drop = static_cast<unsigned long>(a.mantissa_bits() - prec);
  BigInt m;
  if (up)
    mpz_cdiv_q_2exp(m.get_mpz_t(), a.man.get_mpz_t(), drop);
  else
    mpz_fdiv_q_2exp(m.get_mpz_t(), a.man.get_mpz_t(), drop);
  return Dyadic(m, a.exp + static_cast<long>(drop));
}

inline Dyadic round_up(const Dyadic& a, std::size_t prec) { return round_dir(a, prec, true); }
inline Dyadic round_down(const Dyadic& a, std::size_t prec) { return round_dir(a, prec, false); }

// Absolute rounding error bound for rounding to prec bits.
inline Dyadic round_err(const Dyadic& a, std::size_t prec) {
  if (a.is_zero() || a.mantissa_bits() <= prec) return Dyadic();
  long drop = static_cast<long>(a.mantissa_bits() - prec);
  return Dyadic(BigInt(1), a.exp + drop);
}

// Dyadic bound of a rational with ~prec bits; up = toward +infinity
// (mpz_cdiv/fdiv handle signed numerators, so this is correct for any sign).
inline Dyadic dyadic_from_rat(const BigRat& r, std::size_t prec, bool up) {
  if (sgn(r) == 0) return Dyadic();
  const BigInt a = rat_num(r), b = rat_den(r);
  long shift = static_cast<long>(prec) + static_cast<long>(bit_size(b)) -
               static_cast<long>(bit_size(abs(a)));
  if (shift < 0) shift = 0;
  BigInt num = a << static_cast<unsigned long>(shift);
  BigInt q;
  if (up)
    mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), b.get_mpz_t());
  else
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), b.get_mpz_t());
  return Dyadic(q, -shift);
}

// Upper bound for sqrt(d), d >= 0, with ~prec significant bits.
inline Dyadic sqrt_upper(const Dyadic& d, std::size_t prec) {
  FROB_CHECK(d.sign() >= 0, "sqrt of negative");
  if (d.is_zero()) return Dyadic();
  BigInt m = d.man;
  long e = d.exp;
  // raise precision so the integer sqrt has >= prec bits
  long want = 2 * static_cast<long>(prec);
  long have = static_cast<long>(bit_size(m));
  long shift = want > have ? want - have : 0;
  if ((e - shift) % 2 != 0) ++shift;
  m <<= static_cast<unsigned long>(shift);
  e -= shift;
  BigInt r = isqrt(m);
  if (r * r < m) r += 1;
  return Dyadic(r, e / 2);
}

inline Dyadic sqrt_lower(const Dyadic& d, std::size_t prec) {
  FROB_CHECK(d.sign() >= 0, "sqrt of negative");
  if (d.is_zero()) return Dyadic();
  BigInt m = d.man;
  long e = d.exp;
  long want = 2 * static_cast<long>(prec);
  long have = static_cast<long>(bit_size(m));
  long shift = want > have ? want - have : 0;
  if ((e - shift) % 2 != 0) ++shift;
  m <<= static_cast<unsigned long>(shift);
  e -= shift;
  BigInt r = isqrt(m);  // floor
  return Dyadic(r, e / 2);
}

// --- complex balls ----------------------------------------------------------

// Closed disk: center (re, im), radius rad >= 0. Every operation
// over-approximates, so containment is preserved.
struct BallC {
  Dyadic re, im, rad;

  BallC() = default;
  BallC(Dyadic r, Dyadic i, Dyadic rd) : re(std::move(r)), im(std::move(i)), rad(std::move(rd)) {
    FROB_CHECK(rad.sign() >= 0, "negative ball radius");
  }
};

// |mid| upper bound
inline Dyadic ball_mid_abs_upper(const BallC& b, std::size_t prec) {
  return sqrt_upper(b.re * b.re + b.im * b.im, prec);
}

inline Dyadic ball_abs_upper(const BallC& b, std::size_t prec) {
  return round_up(ball_mid_abs_upper(b, prec) + b.rad, prec);
}

inline Dyadic ball_abs_lower(const BallC& b, std::size_t prec) {
  Dyadic lo = sqrt_lower(b.re * b.re + b.im * b.im, prec) - b.rad;
  return lo.sign() > 0 ? lo : Dyadic();
}

// Coarsen to ~prec bits; rounding slack goes into the radius.
inline BallC ball_round(const BallC& b, std::size_t prec) {
  BallC out;
  out.re = round_down(b.re, prec);
  out.im = round_down(b.im, prec);
  out.rad = round_up(b.rad + round_err(b.re, prec) + round_err(b.im, prec), prec);
  return out;
}

inline BallC ball_add(const BallC& a, const BallC& b, std::size_t prec) {
  return ball_round({a.re + b.re, a.im + b.im, a.rad + b.rad}, prec);
}

inline BallC ball_sub(const BallC& a, const BallC& b, std::size_t prec) {
  return ball_round({a.re - b.re, a.im - b.im, a.rad + b.rad}, prec);
}

inline BallC ball_neg(const BallC& a) { return {-a.re, -a.im, a.rad}; }
inline BallC ball_conj(const BallC& a) { return {a.re, -a.im, a.rad}; }

inline BallC ball_mul(const BallC& a, const BallC& b, std::size_t prec) {
  Dyadic re = a.re * b.re - a.im * b.im;
  Dyadic im = a.re * b.im + a.im * b.re;
  Dyadic am = ball_mid_abs_upper(a, prec), bm = ball_mid_abs_upper(b, prec);
  Dyadic rad = am * b.rad + bm * a.rad + a.rad * b.rad;
  return ball_round({re, im, rad}, prec);
}

inline BallC ball_from_int(const BigInt& n) { return {Dyadic(n), Dyadic(), Dyadic()}; }

// Tight enclosure of an exact rational point.
inline BallC ball_from_rat(const BigRat& x, const BigRat& y, std::size_t prec) {
  Dyadic rx = dyadic_from_rat(x, prec + 8, false);
  Dyadic ry = dyadic_from_rat(y, prec + 8, false);
  BigRat ex = abs(x - rx.to_rat()), ey = abs(y - ry.to_rat());
  Dyadic rad = dyadic_from_rat(ex + ey, 16, true);
  return {rx, ry, rad};
}

inline BallC ball_pow(const BallC& b, const BigInt& e_in, std::size_t prec) {
  FROB_CHECK(sgn(e_in) >= 0, "ball_pow needs nonnegative exponent");
  BallC acc = ball_from_int(BigInt(1));
  BallC base = b;
  BigInt e = e_in;
  while (sgn(e) > 0) {
    if (mpz_odd_p(e.get_mpz_t())) acc = ball_mul(acc, base, prec);
    base = ball_mul(base, base, prec);
    e >>= 1;
  }
  return acc;
}

template <typename Poly>
inline BallC ball_eval(const Poly& p, const BallC& x, std::size_t prec) {
  BallC acc;
  for (std::size_t i = p.size(); i-- > 0;) {
    acc = ball_mul(acc, x, prec);
    BallC c = ball_from_int(BigInt(0));
    if constexpr (std::is_same_v<typename Poly::value_type, BigInt>) {
      c = ball_from_int(p[i]);
    } else {
      c = ball_from_rat(p[i], BigRat(0), prec);
    }
    acc = ball_add(acc, c, prec);
  }
  return acc;
}

// squared distance between centers, exact
inline Dyadic ball_center_dist2(const BallC& a, const BallC& b) {
  Dyadic dx = a.re - b.re, dy = a.im - b.im;
  return dx * dx + dy * dy;
}

inline bool balls_disjoint(const BallC& a, const BallC& b) {
  Dyadic s = a.rad + b.rad;
  return ball_center_dist2(a, b) > s * s;
}

// Is the exact point (x, y) inside the closed disk?
inline bool ball_contains_point(const BallC& b, const BigRat& x, const BigRat& y) {
  BigRat dx = x - b.re.to_rat(), dy = y - b.im.to_rat();
  BigRat r = b.rad.to_rat();
  return dx * dx + dy * dy <= r * r;
}

inline bool ball_contains_ball(const BallC& outer, const BallC& inner) {
  // dist(centers) + r_inner <= r_outer  <=>  dist^2 <= (r_outer - r_inner)^2
  Dyadic gap = outer.rad - inner.rad;
  if (gap.sign() < 0) return false;
  return ball_center_dist2(outer, inner) <= gap * gap;
}

// Might the ball contain 1? (exact test against the closed disk)
inline bool ball_possibly_one(const BallC& b) {
  Dyadic dx = b.re - Dyadic(1);
  return dx * dx + b.im * b.im <= b.rad * b.rad;
}

} // namespace frobshield
