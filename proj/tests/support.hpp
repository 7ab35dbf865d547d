// Shared test helpers: random generators and independent oracles kept separate
// from the library code paths they check.
#pragma once

#include <random>
#include <vector>

#include "hyperrank/hyperrank.hpp"

namespace testsupport {

using hyperrank::ExpVec;
using hyperrank::Int;
using hyperrank::IntMatrix;
using hyperrank::PuiseuxPoly;
using hyperrank::Rat;
using hyperrank::RatVector;

inline long rand_long(std::mt19937& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline Rat rand_rat(std::mt19937& rng, long span = 20, long den = 8) {
  return {rand_long(rng, -span, span), rand_long(rng, 1, den)};
}

inline IntMatrix rand_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols,
                             long lo = -4, long hi = 4) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rand_long(rng, lo, hi);
  return m;
}

inline PuiseuxPoly rand_poly(std::mt19937& rng, std::size_t nvars, int nterms,
                             long exp_span = 3) {
  PuiseuxPoly p(nvars);
  for (int t = 0; t < nterms; ++t) {
    ExpVec e(nvars);
    for (auto& x : e) x = Rat(rand_long(rng, -exp_span, exp_span));
    p.add_term(e, rand_rat(rng, 9, 3));
  }
  return p;
}

// Closed-form 2d x d kernel basis of the family matrix: columns (1,-2,2,-1,0,...), (1,-1,-1,1,0,...),
// and for j = 3..d the column with 1,-1 on top and the -1/+1 pair in rows 2j-1, 2j.
inline IntMatrix family_kernel_matrix(int d) {
  IntMatrix b(2 * static_cast<std::size_t>(d), static_cast<std::size_t>(d));
  b.at(0, 0) = 1;
  b.at(1, 0) = -2;
  b.at(2, 0) = 2;
  b.at(3, 0) = -1;
  b.at(0, 1) = 1;
  b.at(1, 1) = -1;
  b.at(2, 1) = -1;
  b.at(3, 1) = 1;
  for (int j = 3; j <= d; ++j) {
    auto c = static_cast<std::size_t>(j - 1);
    b.at(0, c) = 1;
    b.at(1, c) = -1;
    b.at(2 * static_cast<std::size_t>(j) - 2, c) = -1;
    b.at(2 * static_cast<std::size_t>(j) - 1, c) = 1;
  }
  return b;
}

inline bool is_row_hnf(const IntMatrix& h) {
  std::size_t last_pivot = 0;
  bool seen_zero_row = false;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    std::size_t piv = h.cols();
    for (std::size_t j = 0; j < h.cols(); ++j)
      if (h.at(i, j) != 0) {
        piv = j;
        break;
      }
    if (piv == h.cols()) {
      seen_zero_row = true;
      continue;
    }
    if (seen_zero_row) return false;                     // nonzero row after a zero row
    if (i > 0 && piv <= last_pivot) return false;        // pivots strictly right-moving
    if (h.at(i, piv) <= 0) return false;                 // pivots positive
    for (std::size_t k = 0; k < i; ++k)                  // entries above reduced
      if (h.at(k, piv) < 0 || h.at(k, piv) >= h.at(i, piv)) return false;
    last_pivot = piv;
  }
  return true;
}

inline Rat det_recursive(const std::vector<RatVector>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Rat det(0);
  int sign = 1;
  for (std::size_t c = 0; c < n; ++c) {
    if (!m[0][c].is_zero()) {
      std::vector<RatVector> minor;
      for (std::size_t i = 1; i < n; ++i) {
        RatVector row;
        for (std::size_t j = 0; j < n; ++j)
          if (j != c) row.push_back(m[i][j]);
        minor.push_back(std::move(row));
      }
      Rat term = m[0][c] * det_recursive(minor);
      det += sign > 0 ? term : -term;
    }
    sign = -sign;
  }
  return det;
}

// Independent rank oracle: largest k with a nonvanishing k x k minor.
inline std::size_t rank_by_minor_scan(const std::vector<RatVector>& rows) {
  if (rows.empty() || rows[0].empty()) return 0;
  const std::size_t r = rows.size(), c = rows[0].size();
  auto next_combination = [](std::vector<std::size_t>& idx, std::size_t limit) {
    std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
      if (idx[i] + (k - i) < limit) {
        ++idx[i];
        for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        return true;
      }
    }
    return false;
  };
  for (std::size_t k = std::min(r, c); k >= 1; --k) {
    std::vector<std::size_t> ri(k), ci(k);
    for (std::size_t i = 0; i < k; ++i) ri[i] = i;
    do {
      for (std::size_t i = 0; i < k; ++i) ci[i] = i;
      do {
        std::vector<RatVector> sub(k, RatVector(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub[i][j] = rows[ri[i]][ci[j]];
        if (!det_recursive(sub).is_zero()) return k;
      } while (next_combination(ci, c));
    } while (next_combination(ri, r));
  }
  return 0;
}

// All nonzero v in the box [-span, span]^n with m v = 0, by full enumeration.
inline std::vector<std::vector<Int>> kernel_vectors_by_box_search(const IntMatrix& m,
                                                                  long span) {
  std::vector<std::vector<Int>> found;
  std::vector<Int> v(m.cols(), Int(-span));
  while (true) {
    bool zero = true, trivial = true;
    for (const Int& x : v)
      if (x != 0) {
        trivial = false;
        break;
      }
    if (!trivial) {
      for (const Int& x : m.mul(v))
        if (x != 0) {
          zero = false;
          break;
        }
      if (zero) found.push_back(v);
    }
    std::size_t j = 0;
    while (j < v.size() && v[j] == span) v[j++] = -span;
    if (j == v.size()) break;
    v[j] += 1;
  }
  return found;
}

// Single differentiation step, written independently of falling factorials.
inline PuiseuxPoly single_partial(const PuiseuxPoly& p, std::size_t var) {
  PuiseuxPoly r(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    if (e[var].is_zero()) continue;
    ExpVec shifted = e;
    shifted[var] -= Rat(1);
    r.add_term(shifted, c * e[var]);
  }
  return r;
}

}  // namespace testsupport
