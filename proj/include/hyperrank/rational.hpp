// Exact scalar types: arbitrary-precision integers and canonical rationals.
#pragma once

#include <gmpxx.h>

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperrank {

using Int = mpz_class;

/// Rational number kept in canonical form: gcd(|num|, den) = 1, den >= 1.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(long n) : v_(n) {}            // NOLINT: implicit by design of scalar type
  Rat(const Int& n) : v_(n) {}      // NOLINT
  Rat(const Int& num, const Int& den) : v_(num, den) {
    if (den == 0) throw std::domain_error("Rat: zero denominator");
    v_.canonicalize();
  }
  Rat(long num, long den) : Rat(Int(num), Int(den)) {}

  Int num() const { return v_.get_num(); }
  Int den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) throw std::domain_error("Rat: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) == 0; }
  friend bool operator!=(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) != 0; }
  friend bool operator<(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) >= 0; }

  /// Prints "p/q", or just "p" when q = 1.
  std::string str() const { return v_.get_str(); }

 private:
  explicit Rat(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

inline Rat abs(const Rat& a) { return a.sign() < 0 ? -a : a; }

using RatVector = std::vector<Rat>;

inline RatVector rat_vector(std::initializer_list<long> xs) {
  RatVector v;
  v.reserve(xs.size());
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace hyperrank
