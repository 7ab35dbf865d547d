// The rank-jump family (A_d, beta_d), hypergeometric system assembly, Laurent
// solutions, the three Puiseux series for the 4-column base case, and the
// quadratic-root demo series.
#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperrank/int_matrix.hpp"
#include "hyperrank/linalg.hpp"
#include "hyperrank/puiseux.hpp"
#include "hyperrank/rational.hpp"
#include "hyperrank/toric.hpp"

namespace hyperrank {

struct InvalidDimension : std::runtime_error {
  explicit InvalidDimension(const std::string& what) : std::runtime_error(what) {}
};

struct Family {
  IntMatrix a;     // d x 2d, full rank d
  RatVector beta;  // (1, 0, ..., 0, 2)
};

/// Columns: a1 = e1, a2 = e1 + e_d, a3 = e1 + 3 e_d, a4 = e1 + 4 e_d, and for
/// k = 3..d the pair a_{2k-1} = e1 + e_{k-1}, a_{2k} = e1 + e_{k-1} + e_d.
inline Family build_family(int d) {
  if (d < 2) throw InvalidDimension("build_family: need d >= 2");
  const auto dd = static_cast<std::size_t>(d);
  IntMatrix a(dd, 2 * dd);
  for (std::size_t j = 0; j < 2 * dd; ++j) a.at(0, j) = 1;
  a.at(dd - 1, 1) = 1;
  a.at(dd - 1, 2) = 3;
  a.at(dd - 1, 3) = 4;
  for (int k = 3; k <= d; ++k) {
    const auto row = static_cast<std::size_t>(k - 2);  // e_{k-1}, 0-based
    a.at(row, 2 * static_cast<std::size_t>(k) - 2) = 1;
    a.at(row, 2 * static_cast<std::size_t>(k) - 1) = 1;
    a.at(dd - 1, 2 * static_cast<std::size_t>(k) - 1) += 1;
  }
  RatVector beta(dd);
  beta[0] = Rat(1);
  beta[dd - 1] = Rat(2);
  return {std::move(a), std::move(beta)};
}

/// H_A(beta): Euler operators from the rows of A, toric operators from a
/// finite generating set of the toric ideal.
struct HyperSystem {
  IntMatrix a;
  RatVector beta;
  std::vector<ToricBinomial> toric_gens;
  std::vector<EulerOperator> euler_ops;
};

inline HyperSystem build_system(const IntMatrix& a, const RatVector& beta) {
  if (beta.size() != a.rows()) throw std::invalid_argument("build_system: beta length");
  HyperSystem sys{a, beta, {}, {}};
  for (const Binomial& b : toric_generating_set(a))
    sys.toric_gens.emplace_back(b.lead, b.trail);
  for (std::size_t i = 0; i < a.rows(); ++i)
    sys.euler_ops.push_back(EulerOperator{a.row(i), beta[i]});
  return sys;
}

/// The 2(d-1) Laurent solutions [p_1, p_4, p_5, ..., p_{2d}] in 2d variables.
/// For i = 3..d:
///   p_{2i-1} = x_2 x_{2i} / x_{2i-1} - 1/2 x_1 x_{2i}^2 / x_{2i-1}^2
///   p_{2i}   = x_3 x_{2i-1} / x_{2i} - 1/2 x_4 x_{2i-1}^2 / x_{2i}^2
inline std::vector<PuiseuxPoly> laurent_solutions(int d) {
  if (d < 3) throw InvalidDimension("laurent_solutions: need d >= 3");
  const std::size_t n = 2 * static_cast<std::size_t>(d);
  std::vector<PuiseuxPoly> sols;
  auto mono = [n](std::initializer_list<std::pair<std::size_t, long>> exps, Rat c) {
    ExpVec e(n, Rat(0));
    for (auto [var, k] : exps) e[var] = Rat(k);
    return PuiseuxPoly::monomial(n, e, c);
  };
  sols.push_back(mono({{0, -1}, {1, 2}}, Rat(1)));  // p_1 = x2^2 / x1
  sols.push_back(mono({{2, 2}, {3, -1}}, Rat(1)));  // p_4 = x3^2 / x4
  for (int i = 3; i <= d; ++i) {
    const std::size_t odd = 2 * static_cast<std::size_t>(i) - 2;  // x_{2i-1}, 0-based
    const std::size_t even = odd + 1;                             // x_{2i}
    sols.push_back(mono({{1, 1}, {even, 1}, {odd, -1}}, Rat(1)) +
                   mono({{0, 1}, {even, 2}, {odd, -2}}, Rat(-1, 2)));
    sols.push_back(mono({{2, 1}, {odd, 1}, {even, -1}}, Rat(1)) +
                   mono({{3, 1}, {odd, 2}, {even, -2}}, Rat(-1, 2)));
  }
  return sols;
}

/// All integer alpha with A alpha = beta, alpha_pole < 0, alpha_j >= 0 for
/// j != pole, |alpha_j| <= bound. Exhaustive box search with per-row interval
/// pruning; results in lexicographic order.
inline std::vector<std::vector<Int>> exponent_candidates(const IntMatrix& a,
                                                         const RatVector& beta,
                                                         std::size_t pole, long bound) {
  if (pole >= a.cols()) throw std::invalid_argument("exponent_candidates: bad pole index");
  if (bound < 1) return {};
  const std::size_t n = a.cols(), d = a.rows();
  std::vector<Int> target(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (!beta[i].is_integer()) return {};
    target[i] = beta[i].num();
  }
  // remaining contribution range per row for columns >= j
  std::vector<std::vector<Int>> lo(n + 1, std::vector<Int>(d)), hi(n + 1, std::vector<Int>(d));
  for (std::size_t j = n; j-- > 0;) {
    Int vmin = (j == pole) ? Int(-bound) : Int(0);
    Int vmax = (j == pole) ? Int(-1) : Int(bound);
    for (std::size_t i = 0; i < d; ++i) {
      Int c1 = vmin * a.at(i, j), c2 = vmax * a.at(i, j);
      lo[j][i] = lo[j + 1][i] + std::min(c1, c2);
      hi[j][i] = hi[j + 1][i] + std::max(c1, c2);
    }
  }
  std::vector<std::vector<Int>> found;
  std::vector<Int> alpha(n), partial(d);
  auto feasible = [&](std::size_t j) {
    for (std::size_t i = 0; i < d; ++i)
      if (partial[i] + lo[j][i] > target[i] || partial[i] + hi[j][i] < target[i])
        return false;
    return true;
  };
  auto rec = [&](auto&& self, std::size_t j) -> void {
    if (!feasible(j)) return;
    if (j == n) {
      found.push_back(alpha);
      return;
    }
    long from = (j == pole) ? -bound : 0;
    long to = (j == pole) ? -1 : bound;
    for (long v = from; v <= to; ++v) {
      alpha[j] = v;
      for (std::size_t i = 0; i < d; ++i) partial[i] += Int(v) * a.at(i, j);
      self(self, j + 1);
      for (std::size_t i = 0; i < d; ++i) partial[i] -= Int(v) * a.at(i, j);
    }
    alpha[j] = 0;
  };
  rec(rec, 0);
  return found;
}

/// Data of one Puiseux series solution of the 4-column base system: starting
/// exponent, the two lattice directions, the support region (two affine
/// inequalities in the lattice coordinates (a,b)), and the truncation bound.
struct SeriesSpec {
  ExpVec start;                                  // u, length 4
  std::array<std::vector<Int>, 2> directions;    // (-3,4,0,-1), (2,-3,1,0)
  long region_u2 = 0;                            // u2 + 4a >= 3b
  long region_u3 = 0;                            // u3 + b  >= 0
  int truncation = 0;                            // |a| + |b| <= truncation

  bool in_region(long a, long b) const {
    return region_u2 + 4 * a >= 3 * b && region_u3 + b >= 0;
  }
};

inline SeriesSpec series_spec(int i, int order) {
  if (i < 1 || i > 3) throw std::invalid_argument("series_spec: index must be 1, 2 or 3");
  if (order < 0) throw std::invalid_argument("series_spec: negative truncation");
  SeriesSpec s;
  switch (i) {
    case 1:
      s.start = {Rat(1, 2), Rat(0), Rat(0), Rat(1, 2)};
      s.region_u2 = 0;
      s.region_u3 = 0;
      break;
    case 2:
      s.start = {Rat(-1, 4), Rat(1), Rat(0), Rat(1, 4)};
      s.region_u2 = 1;
      s.region_u3 = 0;
      break;
    default:
      s.start = {Rat(1, 4), Rat(0), Rat(1), Rat(-1, 4)};
      s.region_u2 = 0;
      s.region_u3 = 1;
      break;
  }
  s.directions = {std::vector<Int>{-3, 4, 0, -1}, std::vector<Int>{2, -3, 1, 0}};
  s.truncation = order;
  return s;
}

/// Gamma(x) / Gamma(x + k) as an exact rational, for x > 0. For k < 0 the
/// product (x-1)(x-2)...(x+k) may vanish; that encodes 1/Gamma = 0 at
/// nonpositive integers.
inline Rat gamma_ratio(const Rat& x, long k) {
  if (x.sign() <= 0) throw std::domain_error("gamma_ratio: need x > 0");
  if (k == 0) return Rat(1);
  if (k > 0) {
    Rat denom(1);
    for (long m = 0; m < k; ++m) denom *= x + Rat(m);
    return Rat(1) / denom;
  }
  Rat prod(1);
  for (long m = 1; m <= -k; ++m) {
    prod *= x - Rat(m);
    if (prod.is_zero()) break;
  }
  return prod;
}

/// Truncation of f_i: sum over region points with |a| + |b| <= order of
/// c_{a,b}/c_{0,0} x^{u + a(-3,4,0,-1) + b(2,-3,1,0)}, the coefficient ratio
/// evaluated exactly through Gamma-ratio products per argument.
inline PuiseuxPoly series_solution(int i, int order) {
  SeriesSpec s = series_spec(i, order);
  PuiseuxPoly f(4);
  for (long a = -order; a <= order; ++a)
    for (long b = -(order - std::abs(a)); b <= order - std::abs(a); ++b) {
      if (!s.in_region(a, b)) continue;
      const std::array<long, 4> shift = {-3 * a + 2 * b, 4 * a - 3 * b, b, -a};
      Rat c(1);
      for (std::size_t j = 0; j < 4; ++j) {
        c *= gamma_ratio(s.start[j] + Rat(1), shift[j]);
        if (c.is_zero()) break;
      }
      if (c.is_zero()) continue;
      ExpVec e(4);
      for (std::size_t j = 0; j < 4; ++j) e[j] = s.start[j] + Rat(shift[j]);
      f.add_term(e, c);
    }
  return f;
}

/// Same terms, exponent vectors zero-padded to n variables.
inline PuiseuxPoly pad_variables(const PuiseuxPoly& p, std::size_t n) {
  if (n < p.nvars()) throw std::invalid_argument("pad_variables: cannot shrink");
  PuiseuxPoly r(n);
  for (const auto& [e, c] : p.terms()) {
    ExpVec padded = e;
    padded.resize(n, Rat(0));
    r.add_term(padded, c);
  }
  return r;
}

/// Coefficient matrix of the quadratic x1 z^2 + x2 z + x3 demo.
inline IntMatrix quadratic_demo_matrix() {
  return IntMatrix::from_rows({{1, 1, 1}, {2, 1, 0}});
}

/// Truncated series branch of the quadratic root:
///   -(x3/x2) sum_{t=0}^{order} 1/(t+1) C(2t,t) (x1 x3 / x2^2)^t.
inline PuiseuxPoly quadratic_demo(int order) {
  if (order < 0) throw std::invalid_argument("quadratic_demo: negative truncation");
  PuiseuxPoly p(3);
  for (long t = 0; t <= order; ++t) {
    Int binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(2 * t),
                 static_cast<unsigned long>(t));
    p.add_term({Rat(t), Rat(-1 - 2 * t), Rat(1 + t)}, -Rat(binom, Int(t + 1)));
  }
  return p;
}

}  // namespace hyperrank
