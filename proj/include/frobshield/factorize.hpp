#pragma once

#include <algorithm>
#include <vector>

#include "frobshield/bigint.hpp"
#include "frobshield/errors.hpp"
#include "frobshield/modpoly.hpp"
#include "frobshield/poly.hpp"

namespace frobshield {

// Hard ceilings for the exact-arithmetic substrate. Exceeding them raises
// ResourceLimit instead of running unbounded.
struct ResourceCaps {
  int max_field_degree = 48;
  std::size_t max_coeff_bits = 4096;
  long max_recombination_trials = 200000;
};

inline void check_coeff_bits(const IntPoly& f, const ResourceCaps& caps) {
  for (const BigInt& c : f)
    if (bit_size(c) > caps.max_coeff_bits)
      throw ResourceLimit("coefficient exceeds " + std::to_string(caps.max_coeff_bits) + " bits");
}

namespace detail {

inline bool poly_lex_less(const IntPoly& a, const IntPoly& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

// Zassenhaus: factor a squarefree primitive integer polynomial into
// irreducible primitive integer factors (positive leading coefficients).
inline std::vector<IntPoly> zassenhaus(IntPoly f, const ResourceCaps& caps) {
  std::vector<IntPoly> out;
  poly_trim(f);
  const int n = degree(f);
  FROB_CHECK(n >= 1, "zassenhaus needs positive degree");
  check_coeff_bits(f, caps);
  if (n == 1) {
    out.push_back(f);
    return out;
  }

  // pick an odd prime p with lc != 0 and f squarefree mod p; among the first
  // few candidates keep the one giving the fewest modular factors
  std::uint64_t best_p = 0;
  std::vector<FpPoly> best_parts;
  int tried = 0;
  for (BigInt pz(3); tried < 5; pz = next_prime(pz)) {
    std::uint64_t p = pz.get_ui();
    if (divides(pz, f.back())) continue;
    FpPoly fp_red = fppoly_from_int(f, p);
    if (degree(fp_red) != n || !fppoly_is_squarefree(fp_red, p)) continue;
    auto parts = fppoly_factor_squarefree(fp_red, p);
    ++tried;
    if (best_parts.empty() || parts.size() < best_parts.size()) {
      best_p = p;
      best_parts = std::move(parts);
    }
    if (best_parts.size() == 1) break;
  }
  if (best_parts.size() == 1) {
    out.push_back(f);
    return out;
  }

  // Landau-Mignotte style bound on coefficients of lc(f) * (any factor)
  BigInt norm2(0);
  for (const BigInt& c : f) norm2 += c * c;
  BigInt bound = (isqrt(norm2) + 1) * abs(f.back());
  bound <<= static_cast<unsigned>(n + 1);

  BigInt modulus;
  std::vector<IntPoly> lifted = hensel_lift(f, best_parts, best_p, 2 * bound + 1, &modulus);

  // subset recombination over the lifted factors
  std::vector<std::size_t> live(lifted.size());
  for (std::size_t i = 0; i < live.size(); ++i) live[i] = i;
  IntPoly rem = f;
  long trials = 0;

  auto try_subset = [&](const std::vector<std::size_t>& subset) -> bool {
    if (++trials > caps.max_recombination_trials)
      throw ResourceLimit("factor recombination attempts exhausted");
    IntPoly cand{rem.back()};
    for (std::size_t idx : subset) {
      cand = poly_mul(cand, lifted[idx]);
      for (auto& c : cand) c = mod_positive(c, modulus);
    }
    for (auto& c : cand) c = mod_symmetric(c, modulus);
    poly_trim(cand);
    IntPoly g = int_primitive(cand);
    if (degree(g) < 1) return false;
    auto [q, r] = poly_divrem(to_rat(rem), to_rat(g));
    if (!r.empty()) return false;
    out.push_back(g);
    rem = primitive_part(q);
    return true;
  };

  std::size_t card = 1;
  while (2 * card <= live.size()) {
    // enumerate size-card subsets of live in lexicographic index order
    std::vector<std::size_t> pick(card);
    for (std::size_t i = 0; i < card; ++i) pick[i] = i;
    bool removed = false;
    for (;;) {
      std::vector<std::size_t> subset(card);
      for (std::size_t i = 0; i < card; ++i) subset[i] = live[pick[i]];
      if (try_subset(subset)) {
        std::vector<std::size_t> next_live;
        for (std::size_t idx : live)
          if (std::find(subset.begin(), subset.end(), idx) == subset.end())
            next_live.push_back(idx);
        live = std::move(next_live);
        removed = true;
        break;
      }
      // advance combination
      std::size_t i = card;
      while (i-- > 0) {
        if (pick[i] + (card - i) < live.size()) {
          ++pick[i];
          for (std::size_t j = i + 1; j < card; ++j) pick[j] = pick[j - 1] + 1;
          break;
        }
        if (i == 0) {
          i = card + 1;
          break;
        }
      }
      if (i == card + 1) break;  // combinations exhausted
    }
    if (!removed) ++card;
  }
  if (degree(rem) >= 1) out.push_back(int_primitive(rem));
  std::sort(out.begin(), out.end(), poly_lex_less);
  return out;
}

} // namespace detail

// Factorization over Q. Returns monic irreducible rational factors with
// multiplicities, sorted by degree then lexicographic coefficients; the
// product of factors^multiplicities equals the input up to a scalar.
inline std::vector<std::pair<RatPoly, unsigned>> factor_rationals(const RatPoly& p,
                                                                  const ResourceCaps& caps = {}) {
  FROB_CHECK(!poly_is_zero(p), "factor of zero polynomial");
  std::vector<std::pair<RatPoly, unsigned>> out;
  if (degree(p) == 0) return out;
  IntPoly f = primitive_part(p);
  check_coeff_bits(f, caps);
  for (const auto& [part, mult] : squarefree_decomposition(f)) {
    for (const IntPoly& irr : detail::zassenhaus(part, caps))
      out.emplace_back(poly_monic(to_rat(irr)), mult);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    for (std::size_t i = a.first.size(); i-- > 0;) {
      if (a.first[i] != b.first[i]) return a.first[i] < b.first[i];
    }
    return a.second < b.second;
  });
  return out;
}

inline bool is_irreducible_over_q(const IntPoly& f, const ResourceCaps& caps = {}) {
  if (degree(f) <= 0) return false;
  if (degree(f) == 1) return true;
  auto fs = factor_rationals(to_rat(f), caps);
  return fs.size() == 1 && fs[0].second == 1;
}

} // namespace frobshield
