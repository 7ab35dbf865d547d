// Toric ideals from lattice kernel bases: a Buchberger engine specialized to
// pure-difference binomials, plus iterated single-variable saturation.
#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "hyperrank/int_matrix.hpp"
#include "hyperrank/linalg.hpp"

namespace hyperrank {

struct NonBinomialReduction : std::runtime_error {
  explicit NonBinomialReduction(const std::string& what) : std::runtime_error(what) {}
};

using Monomial = std::vector<int>;

/// x^lead − x^trail with lead ≠ trail; oriented so lead is order-largest.
struct Binomial {
  Monomial lead, trail;

  friend bool operator==(const Binomial& a, const Binomial& b) {
    return a.lead == b.lead && a.trail == b.trail;
  }
};

/// Total order on monomials refining divisibility. Grevlex takes a designated
/// cheapest variable (the revlex-last one); graded-lex breaks degree ties by
/// the leftmost differing variable.
class MonomialOrder {
 public:
  enum class Kind { grevlex, graded_lex };

  static MonomialOrder grevlex(std::size_t nvars) {
    return MonomialOrder(Kind::grevlex, nvars, nvars == 0 ? 0 : nvars - 1);
  }
  static MonomialOrder grevlex_cheapest(std::size_t nvars, std::size_t cheapest) {
    if (cheapest >= nvars) throw std::invalid_argument("MonomialOrder: bad cheapest index");
    return MonomialOrder(Kind::grevlex, nvars, cheapest);
  }
  static MonomialOrder graded_lex(std::size_t nvars) {
    return MonomialOrder(Kind::graded_lex, nvars, 0);
  }

  std::size_t nvars() const { return nvars_; }

  int compare(const Monomial& a, const Monomial& b) const {
    long da = std::accumulate(a.begin(), a.end(), 0L);
    long db = std::accumulate(b.begin(), b.end(), 0L);
    if (da != db) return da < db ? -1 : 1;
    if (kind_ == Kind::graded_lex) {
      for (std::size_t i = 0; i < nvars_; ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      return 0;
    }
    // revlex scan, cheapest variable first
    if (a[cheapest_] != b[cheapest_]) return a[cheapest_] > b[cheapest_] ? -1 : 1;
    for (std::size_t i = nvars_; i-- > 0;) {
      if (i == cheapest_) continue;
      if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
  }

  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

 private:
  MonomialOrder(Kind k, std::size_t n, std::size_t cheapest)
      : kind_(k), nvars_(n), cheapest_(cheapest) {}
  Kind kind_;
  std::size_t nvars_;
  std::size_t cheapest_;
};

namespace detail {

inline bool divides(const Monomial& m, const Monomial& target) {
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] > target[i]) return false;
  return true;
}

inline long total_degree(const Monomial& m) {
  return std::accumulate(m.begin(), m.end(), 0L);
}

// target - divisor + complement; throws if divisor does not divide target,
// which would mean a reduction step left the binomial world.
inline Monomial reduce_monomial(const Monomial& target, const Monomial& divisor,
                                const Monomial& complement) {
  Monomial r(target.size());
  for (std::size_t i = 0; i < target.size(); ++i) {
    r[i] = target[i] - divisor[i] + complement[i];
    if (target[i] < divisor[i])
      throw NonBinomialReduction("reduction by a non-dividing lead term");
  }
  return r;
}

inline std::optional<Binomial> make_binomial(Monomial a, Monomial b,
                                             const MonomialOrder& ord) {
  if (a == b) return std::nullopt;
  if (ord.greater(b, a)) std::swap(a, b);
  return Binomial{std::move(a), std::move(b)};
}

}  // namespace detail

/// Full normal form of a binomial modulo gens; nullopt means it reduced to zero.
inline std::optional<Binomial> normal_form(Binomial h, const std::vector<Binomial>& gens,
                                           const MonomialOrder& ord) {
  bool progress = true;
  while (progress) {
    progress = false;
    for (const Binomial& g : gens) {
      if (!detail::divides(g.lead, h.lead)) continue;
      Monomial next = detail::reduce_monomial(h.lead, g.lead, g.trail);
      if (next == h.trail) return std::nullopt;
      h.lead = std::move(next);
      if (ord.greater(h.trail, h.lead)) std::swap(h.lead, h.trail);
      progress = true;
      break;
    }
  }
  progress = true;
  while (progress) {
    progress = false;
    for (const Binomial& g : gens) {
      if (!detail::divides(g.lead, h.trail)) continue;
      Monomial next = detail::reduce_monomial(h.trail, g.lead, g.trail);
      if (next == h.lead) return std::nullopt;
      h.trail = std::move(next);
      progress = true;
      break;
    }
  }
  return h;
}

inline bool reduces_to_zero(const Monomial& a, const Monomial& b,
                            const std::vector<Binomial>& gb, const MonomialOrder& ord) {
  auto h = detail::make_binomial(a, b, ord);
  if (!h) return true;
  return !normal_form(*h, gb, ord).has_value();
}

inline bool reduces_to_zero(const Binomial& b, const std::vector<Binomial>& gb,
                            const MonomialOrder& ord) {
  return reduces_to_zero(b.lead, b.trail, gb, ord);
}

/// Reduced Gröbner basis of the binomial ideal generated by gens. Normal
/// selection strategy (smallest lcm degree first), coprime-lead pairs skipped.
inline std::vector<Binomial> buchberger_binomial(const std::vector<Binomial>& gens,
                                                 const MonomialOrder& ord) {
  std::vector<Binomial> basis;
  for (const Binomial& g : gens) {
    auto b = detail::make_binomial(g.lead, g.trail, ord);
    if (b && std::find(basis.begin(), basis.end(), *b) == basis.end())
      basis.push_back(std::move(*b));
  }

  using PairKey = std::tuple<long, std::size_t, std::size_t>;
  std::priority_queue<PairKey, std::vector<PairKey>, std::greater<>> pairs;
  auto push_pairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      long deg = 0;
      for (std::size_t v = 0; v < ord.nvars(); ++v)
        deg += std::max(basis[i].lead[v], basis[j].lead[v]);
      pairs.emplace(deg, i, j);
    }
  };
  for (std::size_t j = 0; j < basis.size(); ++j) push_pairs(j);

  while (!pairs.empty()) {
    auto [deg, i, j] = pairs.top();
    pairs.pop();
    const Binomial &f = basis[i], &g = basis[j];
    bool coprime = true;
    Monomial lcm(ord.nvars());
    for (std::size_t v = 0; v < ord.nvars(); ++v) {
      lcm[v] = std::max(f.lead[v], g.lead[v]);
      if (f.lead[v] > 0 && g.lead[v] > 0) coprime = false;
    }
    if (coprime) continue;
    Monomial a = detail::reduce_monomial(lcm, f.lead, f.trail);
    Monomial b = detail::reduce_monomial(lcm, g.lead, g.trail);
    auto s = detail::make_binomial(std::move(a), std::move(b), ord);
    if (!s) continue;
    auto r = normal_form(std::move(*s), basis, ord);
    if (!r) continue;
    basis.push_back(std::move(*r));
    push_pairs(basis.size() - 1);
  }

  // minimalize
  std::sort(basis.begin(), basis.end(), [&](const Binomial& x, const Binomial& y) {
    return ord.greater(y.lead, x.lead);
  });
  std::vector<Binomial> minimal;
  for (const Binomial& g : basis) {
    bool redundant = false;
    for (const Binomial& h : minimal)
      if (detail::divides(h.lead, g.lead)) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(g);
  }

  // tail-reduce for the unique reduced basis
  std::vector<Binomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Binomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    auto nf = normal_form(minimal[i], others, ord);
    if (nf) reduced.push_back(std::move(*nf));
  }

  std::sort(reduced.begin(), reduced.end(), [](const Binomial& x, const Binomial& y) {
    long dx = detail::total_degree(x.lead), dy = detail::total_degree(y.lead);
    if (dx != dy) return dx < dy;
    if (x.lead != y.lead) return x.lead > y.lead;
    return x.trail > y.trail;
  });
  return reduced;
}

/// One binomial ∂^{k_+} − ∂^{k_−} per column of the kernel basis.
inline std::vector<Binomial> lattice_ideal_generators(const IntMatrix& kernel) {
  std::vector<Binomial> gens;
  for (std::size_t c = 0; c < kernel.cols(); ++c) {
    Monomial plus(kernel.rows(), 0), minus(kernel.rows(), 0);
    for (std::size_t i = 0; i < kernel.rows(); ++i) {
      long v = kernel.at(i, c).get_si();
      if (v > 0) plus[i] = static_cast<int>(v);
      if (v < 0) minus[i] = static_cast<int>(-v);
    }
    if (plus != minus) gens.push_back(Binomial{std::move(plus), std::move(minus)});
  }
  return gens;
}

/// Generators of (ideal : x_var^∞): compute a Gröbner basis in a grevlex order
/// with x_var cheapest, then divide every element by its maximal x_var power.
inline std::vector<Binomial> saturate_variable(const std::vector<Binomial>& gens,
                                               std::size_t var) {
  if (gens.empty()) return {};
  const std::size_t n = gens[0].lead.size();
  MonomialOrder ord = MonomialOrder::grevlex_cheapest(n, var);
  std::vector<Binomial> gb = buchberger_binomial(gens, ord);
  for (Binomial& g : gb) {
    int common = std::min(g.lead[var], g.trail[var]);
    g.lead[var] -= common;
    g.trail[var] -= common;
  }
  return gb;
}

/// Finite binomial generating set of the toric ideal I_A, as the reduced
/// grevlex Gröbner basis of (I_K : (x_1 ... x_n)^∞) for a kernel lattice
/// basis K. Every output exponent difference is checked to lie in ker_Z(A).
inline std::vector<Binomial> toric_generating_set(const IntMatrix& a) {
  if (integer_rank(a) < a.rows())
    throw NotFullRank("toric_generating_set: matrix rank below row count");
  const std::size_t n = a.cols();
  IntMatrix kernel = integer_kernel_basis(a);
  std::vector<Binomial> gens = lattice_ideal_generators(kernel);
  for (std::size_t var = 0; var < n; ++var) gens = saturate_variable(gens, var);
  std::vector<Binomial> gb = buchberger_binomial(gens, MonomialOrder::grevlex(n));
  for (const Binomial& g : gb) {
    std::vector<Int> diff(n);
    for (std::size_t i = 0; i < n; ++i) diff[i] = Int(g.lead[i]) - Int(g.trail[i]);
    for (const Int& x : a.mul(diff))
      if (x != 0) throw std::logic_error("toric_generating_set: generator outside kernel");
    for (std::size_t i = 0; i < n; ++i)
      if (g.lead[i] > 0 && g.trail[i] > 0)
        throw std::logic_error("toric_generating_set: generator terms share a variable");
  }
  return gb;
}

/// "d1^a1*...*dn^an - d1^b1*...*dn^bn", zero exponents omitted; the constant
/// monomial prints as "1".
inline std::string binomial_str(const Binomial& b) {
  auto side = [](const Monomial& m) {
    std::ostringstream os;
    bool any = false;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (any) os << '*';
      os << 'd' << (i + 1) << '^' << m[i];
      any = true;
    }
    return any ? os.str() : std::string("1");
  };
  return side(b.lead) + " - " + side(b.trail);
}

}  // namespace hyperrank
