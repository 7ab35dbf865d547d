// Dense integer matrices with the CLI text format ("rows cols" header line).
#pragma once

#include <cstddef>
#include <initializer_list>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperrank/rational.hpp"

namespace hyperrank {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    IntMatrix m(rows.size(), rows.size() ? rows.begin()->size() : 0);
    std::size_t i = 0;
    for (const auto& r : rows) {
      if (r.size() != m.cols_) throw std::invalid_argument("IntMatrix: ragged rows");
      std::size_t j = 0;
      for (long x : r) m.at(i, j++) = x;
      ++i;
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  std::vector<Int> row(std::size_t i) const {
    return {e_.begin() + static_cast<long>(i * cols_),
            e_.begin() + static_cast<long>((i + 1) * cols_)};
  }
  std::vector<Int> col(std::size_t j) const {
    std::vector<Int> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  bool is_zero() const {
    for (const Int& x : e_)
      if (x != 0) return false;
    return true;
  }

  std::vector<Int> mul(const std::vector<Int>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("IntMatrix::mul: size mismatch");
    std::vector<Int> r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
    return r;
  }

  RatVector mul(const RatVector& v) const {
    if (v.size() != cols_) throw std::invalid_argument("IntMatrix::mul: size mismatch");
    RatVector r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r[i] += Rat(at(i, j)) * v[j];
    return r;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("IntMatrix: product shape mismatch");
    IntMatrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a.at(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) p.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    return p;
  }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }
  friend bool operator!=(const IntMatrix& a, const IntMatrix& b) { return !(a == b); }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> e_;
};

/// Text format: first line "rows cols", then one line of entries per row.
inline std::string to_text(const IntMatrix& m) {
  std::ostringstream os;
  os << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ' ';
      os << m.at(i, j).get_str();
    }
    os << '\n';
  }
  return os.str();
}

inline IntMatrix int_matrix_from_text(std::istream& in) {
  long rows = -1, cols = -1;
  if (!(in >> rows >> cols) || rows < 0 || cols < 0)
    throw std::runtime_error("matrix text: bad header (want \"rows cols\")");
  IntMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      std::string tok;
      if (!(in >> tok)) throw std::runtime_error("matrix text: not enough entries");
      try {
        m.at(i, j) = Int(tok);
      } catch (const std::invalid_argument&) {
        throw std::runtime_error("matrix text: bad integer '" + tok + "'");
      }
    }
  return m;
}

inline IntMatrix int_matrix_from_text(const std::string& s) {
  std::istringstream in(s);
  return int_matrix_from_text(in);
}

}  // namespace hyperrank
