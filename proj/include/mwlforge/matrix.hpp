#pragma once
#include <cstddef>
#include <initializer_list>

#include "mwlforge/rational.hpp"

namespace mwlforge {

// Dense row-major matrices. Sizes here never exceed a few dozen rows, so the
// implementations favour clarity over asymptotics.

struct IntMat {
  size_t rows = 0, cols = 0;
  IntVec a;

  IntMat() = default;
  IntMat(size_t r, size_t c) : rows(r), cols(c), a(r * c) {}
  IntMat(std::initializer_list<std::initializer_list<long>> init) {
    rows = init.size();
    cols = rows ? init.begin()->size() : 0;
    a.reserve(rows * cols);
    for (const auto& row : init) {
      if (row.size() != cols) throw std::invalid_argument("ragged IntMat literal");
      for (long v : row) a.emplace_back(v);
    }
  }

  Int& operator()(size_t i, size_t j) { return a[i * cols + j]; }
  const Int& operator()(size_t i, size_t j) const { return a[i * cols + j]; }

  static IntMat identity(size_t n) {
    IntMat m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  IntMat transposed() const {
    IntMat t(cols, rows);
    for (size_t i = 0; i < rows; ++i)
      for (size_t j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  IntVec row(size_t i) const { return IntVec(a.begin() + i * cols, a.begin() + (i + 1) * cols); }

  bool operator==(const IntMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

inline IntMat operator*(const IntMat& x, const IntMat& y) {
  if (x.cols != y.rows) throw std::invalid_argument("IntMat product shape mismatch");
  IntMat z(x.rows, y.cols);
  for (size_t i = 0; i < x.rows; ++i)
    for (size_t k = 0; k < x.cols; ++k) {
      const Int& v = x(i, k);
      if (v == 0) continue;
      for (size_t j = 0; j < y.cols; ++j) z(i, j) += v * y(k, j);
    }
  return z;
}

struct RatMat {
  size_t rows = 0, cols = 0;
  RatVec a;

  RatMat() = default;
  RatMat(size_t r, size_t c) : rows(r), cols(c), a(r * c) {}
  RatMat(std::initializer_list<std::initializer_list<Rat>> init) {
    rows = init.size();
    cols = rows ? init.begin()->size() : 0;
    a.reserve(rows * cols);
    for (const auto& row : init) {
      if (row.size() != cols) throw std::invalid_argument("ragged RatMat literal");
      for (const Rat& v : row) a.push_back(v);
    }
  }
  explicit RatMat(const IntMat& m) : rows(m.rows), cols(m.cols), a(m.rows * m.cols) {
    for (size_t i = 0; i < a.size(); ++i) a[i] = rat_of(m.a[i]);
  }

  Rat& operator()(size_t i, size_t j) { return a[i * cols + j]; }
  const Rat& operator()(size_t i, size_t j) const { return a[i * cols + j]; }

  static RatMat identity(size_t n) {
    RatMat m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  RatMat transposed() const {
    RatMat t(cols, rows);
    for (size_t i = 0; i < rows; ++i)
      for (size_t j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  RatVec row(size_t i) const { return RatVec(a.begin() + i * cols, a.begin() + (i + 1) * cols); }

  bool is_symmetric() const {
    if (rows != cols) return false;
    for (size_t i = 0; i < rows; ++i)
      for (size_t j = i + 1; j < cols; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  bool operator==(const RatMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

inline RatMat operator*(const RatMat& x, const RatMat& y) {
  if (x.cols != y.rows) throw std::invalid_argument("RatMat product shape mismatch");
  RatMat z(x.rows, y.cols);
  for (size_t i = 0; i < x.rows; ++i)
    for (size_t k = 0; k < x.cols; ++k) {
      const Rat& v = x(i, k);
      if (v == 0) continue;
      for (size_t j = 0; j < y.cols; ++j) z(i, j) += v * y(k, j);
    }
  return z;
}

inline RatVec operator*(const RatMat& m, const RatVec& v) {
  if (m.cols != v.size()) throw std::invalid_argument("RatMat*vec shape mismatch");
  RatVec out(m.rows);
  for (size_t i = 0; i < m.rows; ++i)
    for (size_t j = 0; j < m.cols; ++j) out[i] += m(i, j) * v[j];
  return out;
}

inline Rat dot(const RatVec& x, const RatVec& y) {
  if (x.size() != y.size()) throw std::invalid_argument("dot: size mismatch");
  Rat s;
  for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

// Exact determinant by fraction-full Gaussian elimination.
Rat det(const RatMat& m);
Int det(const IntMat& m);

// Particular solution of a*x = b, or nullopt when inconsistent. Free
// variables are set to zero.
std::optional<RatVec> solve_rational(const RatMat& a, const RatVec& b);

size_t rank(const RatMat& m);

// Inverse of a square nonsingular matrix; throws on singular input.
RatMat inverse(const RatMat& m);

}  // namespace mwlforge
