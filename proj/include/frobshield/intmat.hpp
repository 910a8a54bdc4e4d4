#pragma once

#include <algorithm>
#include <tuple>
#include <vector>

#include "frobshield/bigint.hpp"
#include "frobshield/errors.hpp"

namespace frobshield {

// Dense integer matrix, row-major, arbitrary-precision entries. No modular
// shortcuts anywhere: every caller needs exactness, not speed.
class IntMat {
 public:
  IntMat() = default;
  IntMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols, BigInt(0)) {}
  IntMat(std::size_t rows, std::size_t cols, std::vector<BigInt> entries)
      : rows_(rows), cols_(cols), e_(std::move(entries)) {
    FROB_CHECK(e_.size() == rows_ * cols_, "entry count mismatch");
  }

  static IntMat identity(std::size_t n) {
    IntMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  static IntMat from_rows(const std::vector<std::vector<BigInt>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows[0].size() : 0;
    IntMat m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      FROB_CHECK(rows[i].size() == c, "ragged rows");
      for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigInt& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const BigInt& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  std::vector<BigInt> row(std::size_t i) const {
    return std::vector<BigInt>(e_.begin() + i * cols_, e_.begin() + (i + 1) * cols_);
  }

  bool operator==(const IntMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
  }

  IntMat transpose() const {
    IntMat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  IntMat operator*(const IntMat& o) const {
    FROB_CHECK(cols_ == o.rows_, "dimension mismatch in product");
    IntMat p(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const BigInt& a = at(i, k);
        if (sgn(a) == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) p.at(i, j) += a * o.at(k, j);
      }
    return p;
  }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
  }
  // row i -= q * row j
  void row_axpy(std::size_t i, std::size_t j, const BigInt& q) {
    if (sgn(q) == 0) return;
    for (std::size_t c = 0; c < cols_; ++c) at(i, c) -= q * at(j, c);
  }
  void col_axpy(std::size_t i, std::size_t j, const BigInt& q) {
    if (sgn(q) == 0) return;
    for (std::size_t r = 0; r < rows_; ++r) at(r, i) -= q * at(r, j);
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
  }
  void negate_col(std::size_t j) {
    for (std::size_t r = 0; r < rows_; ++r) at(r, j) = -at(r, j);
  }

  bool row_is_zero(std::size_t i) const {
    for (std::size_t c = 0; c < cols_; ++c)
      if (sgn(at(i, c)) != 0) return false;
    return true;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<BigInt> e_;
};

// Row-style Hermite normal form: row echelon, positive pivots, entries above
// each pivot reduced into [0, pivot). Pivot selection is fixed (smallest
// nonzero absolute value, ties by position) so results are deterministic.
inline IntMat hnf(IntMat a) {
  const std::size_t m = a.rows(), n = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    // Euclidean elimination in column c on rows >= r.
    for (;;) {
      std::size_t piv = m;
      for (std::size_t i = r; i < m; ++i) {
        if (sgn(a.at(i, c)) == 0) continue;
        if (piv == m || abs(a.at(i, c)) < abs(a.at(piv, c))) piv = i;
      }
      if (piv == m) break;  // column is zero below r
      a.swap_rows(r, piv);
      bool clean = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (sgn(a.at(i, c)) == 0) continue;
        BigInt q = fdiv(a.at(i, c), a.at(r, c));
        a.row_axpy(i, r, q);
        if (sgn(a.at(i, c)) != 0) clean = false;
      }
      if (clean) {
        if (sgn(a.at(r, c)) < 0) a.negate_row(r);
        for (std::size_t i = 0; i < r; ++i) {
          BigInt q = fdiv(a.at(i, c), a.at(r, c));
          a.row_axpy(i, r, q);
        }
        ++r;
        break;
      }
    }
  }
  return a;
}

// Smith normal form: returns (U, D, V) with U*A*V = D, U and V unimodular,
// D diagonal with nonnegative entries d1 | d2 | ...
inline std::tuple<IntMat, IntMat, IntMat> snf(const IntMat& a_in) {
  IntMat d = a_in;
  const std::size_t m = d.rows(), n = d.cols();
  IntMat u = IntMat::identity(m);
  IntMat v = IntMat::identity(n);

  std::size_t t = 0;
  const std::size_t lim = std::min(m, n);
  while (t < lim) {
    // pivot: smallest |entry| in the trailing block, ties by position
    std::size_t pi = m, pj = n;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j) {
        if (sgn(d.at(i, j)) == 0) continue;
        if (pi == m || abs(d.at(i, j)) < abs(d.at(pi, pj))) {
          pi = i;
          pj = j;
        }
      }
    if (pi == m) break;  // trailing block zero
    d.swap_rows(t, pi);
    u.swap_rows(t, pi);
    d.swap_cols(t, pj);
    v.swap_cols(t, pj);

    bool again = false;
    for (std::size_t i = t + 1; i < m; ++i) {
      if (sgn(d.at(i, t)) == 0) continue;
      BigInt q = fdiv(d.at(i, t), d.at(t, t));
      d.row_axpy(i, t, q);
      u.row_axpy(i, t, q);
      if (sgn(d.at(i, t)) != 0) again = true;
    }
    for (std::size_t j = t + 1; j < n; ++j) {
      if (sgn(d.at(t, j)) == 0) continue;
      BigInt q = fdiv(d.at(t, j), d.at(t, t));
      d.col_axpy(j, t, q);
      v.col_axpy(j, t, q);
      if (sgn(d.at(t, j)) != 0) again = true;
    }
    if (again) continue;

    // pivot must divide the whole trailing block
    bool fixed = false;
    for (std::size_t i = t + 1; i < m && !fixed; ++i)
      for (std::size_t j = t + 1; j < n && !fixed; ++j) {
        if (!divides(d.at(t, t), d.at(i, j))) {
          // fold row i into row t and restart the reduction
          for (std::size_t c = 0; c < n; ++c) d.at(t, c) += d.at(i, c);
          for (std::size_t c = 0; c < m; ++c) u.at(t, c) += u.at(i, c);
          fixed = true;
        }
      }
    if (fixed) continue;

    if (sgn(d.at(t, t)) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
    ++t;
  }
  return {u, d, v};
}

inline std::vector<BigInt> snf_diagonal(const IntMat& a) {
  auto [u, d, v] = snf(a);
  std::vector<BigInt> out;
  for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) out.push_back(d.at(i, i));
  return out;
}

// Order of the torsion subgroup of Z^rows / (column space of A): the product
// of the nonzero Smith invariants.
inline BigInt cokernel_torsion(const IntMat& a) {
  BigInt prod(1);
  for (const BigInt& di : snf_diagonal(a))
    if (sgn(di) != 0) prod *= di;
  return prod;
}

inline std::size_t int_rank(const IntMat& a) {
  IntMat h = hnf(a);
  std::size_t r = 0;
  for (std::size_t i = 0; i < h.rows(); ++i)
    if (!h.row_is_zero(i)) ++r;
  return r;
}

inline BigInt det(const IntMat& a) {
  FROB_CHECK(a.rows() == a.cols(), "determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return BigInt(1);
  // Bareiss fraction-free elimination.
  IntMat m = a;
  BigInt prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m.at(k, k)) == 0) {
      std::size_t piv = n;
      for (std::size_t i = k + 1; i < n; ++i)
        if (sgn(m.at(i, k)) != 0) {
          piv = i;
          break;
        }
      if (piv == n) return BigInt(0);
      m.swap_rows(k, piv);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m.at(i, j) = exact_div(m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j), prev);
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

// Sublattice of Z^ambient given by an HNF basis with zero rows removed.
// Canonical: two lattices are equal iff their stored bases are equal.
class IntLattice {
 public:
  IntLattice() = default;
  explicit IntLattice(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

  // Lattice generated by arbitrary integer row vectors.
  static IntLattice from_generators(std::size_t ambient, const IntMat& gens) {
    FROB_CHECK(gens.cols() == ambient || gens.rows() == 0, "generator width mismatch");
    IntMat h = hnf(gens);
    std::size_t r = 0;
    for (std::size_t i = 0; i < h.rows(); ++i)
      if (!h.row_is_zero(i)) ++r;
    IntMat b(r, ambient);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < ambient; ++j) b.at(i, j) = h.at(i, j);
    IntLattice l;
    l.ambient_ = ambient;
    l.basis_ = std::move(b);
    return l;
  }

  static IntLattice full(std::size_t ambient) {
    return from_generators(ambient, IntMat::identity(ambient));
  }

  std::size_t ambient_rank() const { return ambient_; }
  std::size_t rank() const { return basis_.rows(); }
  const IntMat& basis() const { return basis_; }

  bool operator==(const IntLattice& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
  }

  // Exact membership via back-substitution against the HNF basis.
  bool contains(std::vector<BigInt> e) const {
    FROB_CHECK(e.size() == ambient_, "vector dimension mismatch");
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
      std::size_t p = 0;
      while (p < ambient_ && sgn(basis_.at(i, p)) == 0) ++p;
      FROB_CHECK(p < ambient_, "zero basis row");
      if (sgn(e[p]) == 0) continue;
      if (!divides(basis_.at(i, p), e[p])) return false;
      BigInt q = exact_div(e[p], basis_.at(i, p));
      for (std::size_t j = 0; j < ambient_; ++j) e[j] -= q * basis_.at(i, j);
    }
    for (const BigInt& x : e)
      if (sgn(x) != 0) return false;
    return true;
  }

  bool contains_lattice(const IntLattice& o) const {
    if (o.ambient_ != ambient_) return false;
    for (std::size_t i = 0; i < o.basis_.rows(); ++i)
      if (!contains(o.basis_.row(i))) return false;
    return true;
  }

 private:
  std::size_t ambient_ = 0;
  IntMat basis_;
};

// Basis of {e in Z^cols : A e = 0}. Kernels are saturated by construction.
inline IntLattice integer_kernel(const IntMat& a) {
  const std::size_t n = a.cols();
  // HNF of [A^T | I]; rows with zero left part carry a kernel basis.
  IntMat ext(n, a.rows() + n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < a.rows(); ++j) ext.at(i, j) = a.at(j, i);
    ext.at(i, a.rows() + i) = 1;
  }
  IntMat h = hnf(ext);
  std::vector<std::vector<BigInt>> ker;
  for (std::size_t i = 0; i < n; ++i) {
    bool left_zero = true;
    for (std::size_t j = 0; j < a.rows(); ++j)
      if (sgn(h.at(i, j)) != 0) {
        left_zero = false;
        break;
      }
    if (!left_zero) continue;
    std::vector<BigInt> v(n);
    for (std::size_t j = 0; j < n; ++j) v[j] = h.at(i, a.rows() + j);
    ker.push_back(std::move(v));
  }
  return IntLattice::from_generators(n, IntMat::from_rows(ker));
}

// Smallest lattice containing L with torsion-free quotient: the rational row
// span of L intersected with Z^n, computed as the kernel of the kernel.
inline IntLattice saturation(const IntLattice& l) {
  if (l.rank() == 0) return l;
  IntLattice orth = integer_kernel(l.basis());
  if (orth.rank() == 0) return IntLattice::full(l.ambient_rank());
  return integer_kernel(orth.basis());
}

inline bool lattice_equal(const IntLattice& a, const IntLattice& b) { return a == b; }

inline bool lattice_contains(const IntLattice& l, const std::vector<BigInt>& e) {
  return l.contains(e);
}

} // namespace frobshield
