// Finite Laurent/Puiseux polynomials (rational exponents, rational coefficients)
// and the action of constant-coefficient monomial operators and Euler operators.
#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperrank/int_matrix.hpp"
#include "hyperrank/rational.hpp"

namespace hyperrank {

using ExpVec = std::vector<Rat>;  // compared lexicographically as a map key

inline ExpVec exp_vec(std::initializer_list<long> xs) {
  ExpVec e;
  e.reserve(xs.size());
  for (long x : xs) e.emplace_back(x);
  return e;
}

/// Finite map exponent vector -> coefficient; zero coefficients are never stored.
class PuiseuxPoly {
 public:
  explicit PuiseuxPoly(std::size_t nvars) : nvars_(nvars) {}

  static PuiseuxPoly monomial(std::size_t nvars, const ExpVec& e, const Rat& c) {
    PuiseuxPoly p(nvars);
    p.add_term(e, c);
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  const std::map<ExpVec, Rat>& terms() const { return terms_; }

  void add_term(const ExpVec& e, const Rat& c) {
    if (e.size() != nvars_) throw std::invalid_argument("PuiseuxPoly: exponent length");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Rat coeff(const ExpVec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  PuiseuxPoly& operator+=(const PuiseuxPoly& o) {
    if (o.nvars_ != nvars_) throw std::invalid_argument("PuiseuxPoly: nvars mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  PuiseuxPoly& operator-=(const PuiseuxPoly& o) {
    if (o.nvars_ != nvars_) throw std::invalid_argument("PuiseuxPoly: nvars mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend PuiseuxPoly operator+(PuiseuxPoly a, const PuiseuxPoly& b) { return a += b; }
  friend PuiseuxPoly operator-(PuiseuxPoly a, const PuiseuxPoly& b) { return a -= b; }

  PuiseuxPoly scaled(const Rat& f) const {
    PuiseuxPoly r(nvars_);
    if (f.is_zero()) return r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * f);
    return r;
  }

  friend bool operator==(const PuiseuxPoly& a, const PuiseuxPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const PuiseuxPoly& a, const PuiseuxPoly& b) { return !(a == b); }

  /// Terms in graded-lex order (degree, then lex), each "c * x1^(a1) x2^(a2) ...",
  /// zero exponents omitted, joined by " + ".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::vector<const std::pair<const ExpVec, Rat>*> order;
    order.reserve(terms_.size());
    for (const auto& t : terms_) order.push_back(&t);
    auto degree = [](const ExpVec& e) {
      return std::accumulate(e.begin(), e.end(), Rat(0));
    };
    std::sort(order.begin(), order.end(), [&](const auto* a, const auto* b) {
      Rat da = degree(a->first), db = degree(b->first);
      if (da != db) return da < db;
      return a->first < b->first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto* t : order) {
      if (!first) os << " + ";
      first = false;
      os << t->second.str();
      bool any = false;
      for (std::size_t j = 0; j < nvars_; ++j) {
        if (t->first[j].is_zero()) continue;
        os << (any ? " " : " * ") << 'x' << (j + 1) << "^(" << t->first[j].str() << ')';
        any = true;
      }
    }
    return os.str();
  }

 private:
  std::size_t nvars_;
  std::map<ExpVec, Rat> terms_;
};

/// The operator ∂^{u_plus} − ∂^{u_minus}; the two exponent vectors have
/// disjoint supports.
struct ToricBinomial {
  std::vector<int> u_plus, u_minus;

  ToricBinomial(std::vector<int> plus, std::vector<int> minus)
      : u_plus(std::move(plus)), u_minus(std::move(minus)) {
    if (u_plus.size() != u_minus.size())
      throw std::invalid_argument("ToricBinomial: length mismatch");
    for (std::size_t i = 0; i < u_plus.size(); ++i) {
      if (u_plus[i] < 0 || u_minus[i] < 0)
        throw std::invalid_argument("ToricBinomial: negative exponent");
      if (u_plus[i] != 0 && u_minus[i] != 0)
        throw std::invalid_argument("ToricBinomial: supports not disjoint");
    }
  }

  static ToricBinomial from_kernel_vector(const std::vector<Int>& u) {
    std::vector<int> plus(u.size(), 0), minus(u.size(), 0);
    for (std::size_t i = 0; i < u.size(); ++i) {
      long v = u[i].get_si();
      if (v > 0) plus[i] = static_cast<int>(v);
      if (v < 0) minus[i] = static_cast<int>(-v);
    }
    return {std::move(plus), std::move(minus)};
  }
};

/// E = sum_j coeffs_j x_j ∂_j − shift, acting diagonally on monomials.
struct EulerOperator {
  std::vector<Int> coeffs;
  Rat shift;
};

/// alpha (alpha-1) ... (alpha-m+1); zero exactly when alpha is an integer in [0, m).
inline Rat falling_factorial(const Rat& alpha, int m) {
  if (m < 0) throw std::invalid_argument("falling_factorial: negative order");
  Rat r(1);
  for (int t = 0; t < m; ++t) {
    r *= alpha - Rat(t);
    if (r.is_zero()) break;
  }
  return r;
}

/// (∂_var)^m acting term by term: x^α ↦ α_var(α_var−1)...(α_var−m+1) x^{α − m e_var}.
inline PuiseuxPoly apply_partial_power(const PuiseuxPoly& p, std::size_t var, int m) {
  if (var >= p.nvars()) throw std::invalid_argument("apply_partial_power: bad variable");
  if (m == 0) return p;
  PuiseuxPoly r(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    Rat f = falling_factorial(e[var], m);
    if (f.is_zero()) continue;
    ExpVec shifted = e;
    shifted[var] -= Rat(m);
    r.add_term(shifted, c * f);
  }
  return r;
}

/// ∂^{exps} as the composition of single-variable powers.
inline PuiseuxPoly apply_monomial_derivative(const PuiseuxPoly& p,
                                             const std::vector<int>& exps) {
  if (exps.size() != p.nvars())
    throw std::invalid_argument("apply_monomial_derivative: length mismatch");
  PuiseuxPoly r = p;
  for (std::size_t v = 0; v < exps.size(); ++v)
    if (exps[v] > 0) r = apply_partial_power(r, v, exps[v]);
  return r;
}

inline PuiseuxPoly apply_toric(const ToricBinomial& op, const PuiseuxPoly& p) {
  if (op.u_plus.size() != p.nvars())
    throw std::invalid_argument("apply_toric: nvars mismatch");
  return apply_monomial_derivative(p, op.u_plus) - apply_monomial_derivative(p, op.u_minus);
}

inline PuiseuxPoly apply_euler(const EulerOperator& op, const PuiseuxPoly& p) {
  if (op.coeffs.size() != p.nvars())
    throw std::invalid_argument("apply_euler: nvars mismatch");
  PuiseuxPoly r(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    Rat eigen = -op.shift;
    for (std::size_t j = 0; j < e.size(); ++j) eigen += Rat(op.coeffs[j]) * e[j];
    r.add_term(e, c * eigen);
  }
  return r;
}

/// The set {A·α : α in support(p)}.
inline std::set<RatVector> support_degrees(const PuiseuxPoly& p, const IntMatrix& a) {
  if (a.cols() != p.nvars()) throw std::invalid_argument("support_degrees: shape mismatch");
  std::set<RatVector> degs;
  for (const auto& [e, c] : p.terms()) degs.insert(a.mul(e));
  return degs;
}

}  // namespace hyperrank
