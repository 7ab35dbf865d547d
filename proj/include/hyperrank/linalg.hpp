// Exact integer/rational linear algebra: Hermite normal form, lattice kernels,
// minor gcds, determinants, ranks, and integer linear solving.
#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hyperrank/int_matrix.hpp"
#include "hyperrank/rational.hpp"

namespace hyperrank {

struct NotFullRank : std::runtime_error {
  explicit NotFullRank(const std::string& what) : std::runtime_error(what) {}
};

struct HnfResult {
  IntMatrix h;  // row-style Hermite normal form
  IntMatrix u;  // unimodular, u * input = h
};

namespace detail {

inline void add_row_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Int& q) {
  for (std::size_t j = 0; j < m.cols(); ++j) m.at(dst, j) += q * m.at(src, j);
}

inline void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

inline void negate_row(IntMatrix& m, std::size_t i) {
  for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = -m.at(i, j);
}

// Replaces rows (r, i) by the unimodular image ((s,t),(-b/g, a/g)) * (row r, row i),
// where g = s*a + t*b = gcd(a, b); afterwards column j holds (g, 0) in those rows.
inline void gcd_rows(IntMatrix& m, IntMatrix& u, std::size_t r, std::size_t i, std::size_t j) {
  Int a = m.at(r, j), b = m.at(i, j), g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  Int ag = a / g, bg = b / g;
  for (IntMatrix* mat : {&m, &u}) {
    for (std::size_t c = 0; c < mat->cols(); ++c) {
      Int x = mat->at(r, c), y = mat->at(i, c);
      mat->at(r, c) = s * x + t * y;
      mat->at(i, c) = ag * y - bg * x;
    }
  }
}

}  // namespace detail

/// Row-style HNF: pivots positive, entries above each pivot reduced into [0, pivot).
inline HnfResult hermite_normal_form(const IntMatrix& m) {
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  std::size_t r = 0;
  for (std::size_t j = 0; j < m.cols() && r < m.rows(); ++j) {
    std::size_t p = r;
    while (p < m.rows() && h.at(p, j) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      detail::swap_rows(h, r, p);
      detail::swap_rows(u, r, p);
    }
    for (std::size_t i = r + 1; i < m.rows(); ++i)
      if (h.at(i, j) != 0) detail::gcd_rows(h, u, r, i, j);
    if (h.at(r, j) < 0) {
      detail::negate_row(h, r);
      detail::negate_row(u, r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), h.at(i, j).get_mpz_t(), h.at(r, j).get_mpz_t());
      if (q != 0) {
        detail::add_row_multiple(h, i, r, -q);
        detail::add_row_multiple(u, i, r, -q);
      }
    }
    ++r;
  }
  return {std::move(h), std::move(u)};
}

/// Bareiss fraction-free determinant of a square matrix.
inline Int determinant(IntMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Int denom = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m.at(p, k) == 0) ++p;
      if (p == n) return 0;
      detail::swap_rows(m, k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        mpz_divexact(m.at(i, j).get_mpz_t(), num.get_mpz_t(), denom.get_mpz_t());
      }
    denom = m.at(k, k);
  }
  return sign < 0 ? Int(-m.at(n - 1, n - 1)) : m.at(n - 1, n - 1);
}

inline std::size_t integer_rank(const IntMatrix& m) {
  IntMatrix h = hermite_normal_form(m).h;
  std::size_t rank = 0;
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = 0; j < h.cols(); ++j)
      if (h.at(i, j) != 0) {
        ++rank;
        break;
      }
  return rank;
}

/// Columns form a lattice basis of ker_Z(m): the unimodular-cofactor rows of the
/// transpose's HNF that map to zero. Every integer kernel vector is an integer
/// combination of the returned columns.
inline IntMatrix integer_kernel_basis(const IntMatrix& m) {
  const std::size_t n = m.cols();
  HnfResult hu = hermite_normal_form(m.transpose());
  std::vector<std::size_t> zero_rows;
  for (std::size_t i = 0; i < n; ++i) {
    bool zero = true;
    for (std::size_t j = 0; j < hu.h.cols(); ++j)
      if (hu.h.at(i, j) != 0) {
        zero = false;
        break;
      }
    if (zero) zero_rows.push_back(i);
  }
  IntMatrix k(n, zero_rows.size());
  for (std::size_t c = 0; c < zero_rows.size(); ++c)
    for (std::size_t i = 0; i < n; ++i) k.at(i, c) = hu.u.at(zero_rows[c], i);
  if (abs(determinant(hu.u)) != 1)
    throw std::logic_error("integer_kernel_basis: transform not unimodular");
  for (std::size_t c = 0; c < k.cols(); ++c)
    for (const Int& x : m.mul(k.col(c)))
      if (x != 0) throw std::logic_error("integer_kernel_basis: column not in kernel");
  return k;
}

/// gcd over all k x k minors' absolute values; 0 if every minor vanishes.
inline Int gcd_maximal_minors(const IntMatrix& m, std::size_t k) {
  if (k > m.rows() || k > m.cols())
    throw std::invalid_argument("gcd_maximal_minors: k exceeds matrix dimensions");
  if (k == 0) return 1;
  std::vector<std::size_t> ri(k), ci(k);
  Int g = 0;
  auto next_combination = [](std::vector<std::size_t>& idx, std::size_t limit) {
    std::size_t k2 = idx.size();
    for (std::size_t i = k2; i-- > 0;) {
      if (idx[i] + (k2 - i) < limit) {
        ++idx[i];
        for (std::size_t j = i + 1; j < k2; ++j) idx[j] = idx[j - 1] + 1;
        return true;
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < k; ++i) ri[i] = i;
  do {
    for (std::size_t i = 0; i < k; ++i) ci[i] = i;
    do {
      IntMatrix sub(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub.at(i, j) = m.at(ri[i], ci[j]);
      Int d = determinant(sub);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      if (g == 1) return g;
    } while (next_combination(ci, m.cols()));
  } while (next_combination(ri, m.rows()));
  return g;
}

/// Rank over Q by exact Gaussian elimination on a row list.
inline std::size_t rational_rank(std::vector<RatVector> rows) {
  if (rows.empty()) return 0;
  const std::size_t ncols = rows[0].size();
  for (const auto& r : rows)
    if (r.size() != ncols) throw std::invalid_argument("rational_rank: ragged rows");
  std::size_t rank = 0;
  for (std::size_t j = 0; j < ncols && rank < rows.size(); ++j) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][j].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[rank], rows[p]);
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      if (rows[i][j].is_zero()) continue;
      Rat f = rows[i][j] / rows[rank][j];
      for (std::size_t c = j; c < ncols; ++c) rows[i][c] -= f * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

inline std::size_t rational_rank(const IntMatrix& m) {
  std::vector<RatVector> rows(m.rows(), RatVector(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = Rat(m.at(i, j));
  return rational_rank(std::move(rows));
}

/// One integer solution x of m * x = rhs, or nullopt when rhs is outside the
/// column lattice. Greedy descent on the HNF of the transpose.
inline std::optional<std::vector<Int>> solve_integer(const IntMatrix& m,
                                                     const std::vector<Int>& rhs) {
  if (rhs.size() != m.rows()) throw std::invalid_argument("solve_integer: size mismatch");
  HnfResult hu = hermite_normal_form(m.transpose());
  std::vector<Int> w = rhs;
  std::vector<Int> q(m.cols());
  for (std::size_t i = 0; i < hu.h.rows(); ++i) {
    std::size_t piv = hu.h.cols();
    for (std::size_t j = 0; j < hu.h.cols(); ++j)
      if (hu.h.at(i, j) != 0) {
        piv = j;
        break;
      }
    if (piv == hu.h.cols()) continue;
    Int rem;
    mpz_tdiv_qr(q[i].get_mpz_t(), rem.get_mpz_t(), w[piv].get_mpz_t(),
                hu.h.at(i, piv).get_mpz_t());
    if (rem != 0) return std::nullopt;
    for (std::size_t j = 0; j < hu.h.cols(); ++j) w[j] -= q[i] * hu.h.at(i, j);
  }
  for (const Int& x : w)
    if (x != 0) return std::nullopt;
  std::vector<Int> sol(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.cols(); ++i) sol[j] += hu.u.at(i, j) * q[i];
  return sol;
}

inline bool in_column_lattice(const IntMatrix& basis, const std::vector<Int>& v) {
  return solve_integer(basis, v).has_value();
}

/// True when the two column sets generate the same integer lattice.
inline bool lattice_equal(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) return false;
  for (std::size_t j = 0; j < b.cols(); ++j)
    if (!in_column_lattice(a, b.col(j))) return false;
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (!in_column_lattice(b, a.col(j))) return false;
  return true;
}

}  // namespace hyperrank
