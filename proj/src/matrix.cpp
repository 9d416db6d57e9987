#include "mwlforge/matrix.hpp"

namespace mwlforge {

Rat det(const RatMat& m) {
  if (m.rows != m.cols) throw std::invalid_argument("det: non-square matrix");
  size_t n = m.rows;
  RatMat w = m;
  Rat d = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && w(piv, col) == 0) ++piv;
    if (piv == n) return Rat(0);
    if (piv != col) {
      for (size_t j = 0; j < n; ++j) std::swap(w(piv, j), w(col, j));
      d = -d;
    }
    d *= w(col, col);
    Rat inv = 1 / w(col, col);
    for (size_t i = col + 1; i < n; ++i) {
      if (w(i, col) == 0) continue;
      Rat f = w(i, col) * inv;
      for (size_t j = col; j < n; ++j) w(i, j) -= f * w(col, j);
    }
  }
  return d;
}

Int det(const IntMat& m) {
  Rat d = det(RatMat(m));
  return d.get_num();  // denominator is 1 for integer input
}

std::optional<RatVec> solve_rational(const RatMat& a, const RatVec& b) {
  if (a.rows != b.size()) throw std::invalid_argument("solve_rational: shape mismatch");
  size_t nr = a.rows, nc = a.cols;
  RatMat w(nr, nc + 1);
  for (size_t i = 0; i < nr; ++i) {
    for (size_t j = 0; j < nc; ++j) w(i, j) = a(i, j);
    w(i, nc) = b[i];
  }
  std::vector<size_t> pivot_col;
  size_t r = 0;
  for (size_t c = 0; c < nc && r < nr; ++c) {
    size_t piv = r;
    while (piv < nr && w(piv, c) == 0) ++piv;
    if (piv == nr) continue;
    if (piv != r)
      for (size_t j = 0; j <= nc; ++j) std::swap(w(piv, j), w(r, j));
    Rat inv = 1 / w(r, c);
    for (size_t j = c; j <= nc; ++j) w(r, j) *= inv;
    for (size_t i = 0; i < nr; ++i) {
      if (i == r || w(i, c) == 0) continue;
      Rat f = w(i, c);
      for (size_t j = c; j <= nc; ++j) w(i, j) -= f * w(r, j);
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (size_t i = r; i < nr; ++i)
    if (w(i, nc) != 0) return std::nullopt;
  RatVec x(nc);
  for (size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = w(i, nc);
  return x;
}

size_t rank(const RatMat& m) {
  RatMat w = m;
  size_t r = 0;
  for (size_t c = 0; c < w.cols && r < w.rows; ++c) {
    size_t piv = r;
    while (piv < w.rows && w(piv, c) == 0) ++piv;
    if (piv == w.rows) continue;
    if (piv != r)
      for (size_t j = 0; j < w.cols; ++j) std::swap(w(piv, j), w(r, j));
    Rat inv = 1 / w(r, c);
    for (size_t i = r + 1; i < w.rows; ++i) {
      if (w(i, c) == 0) continue;
      Rat f = w(i, c) * inv;
      for (size_t j = c; j < w.cols; ++j) w(i, j) -= f * w(r, j);
    }
    ++r;
  }
  return r;
}

RatMat inverse(const RatMat& m) {
  if (m.rows != m.cols) throw std::invalid_argument("inverse: non-square matrix");
  size_t n = m.rows;
  RatMat w(n, 2 * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) w(i, j) = m(i, j);
    w(i, n + i) = 1;
  }
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && w(piv, c) == 0) ++piv;
    if (piv == n) throw std::invalid_argument("inverse: singular matrix");
    if (piv != c)
      for (size_t j = 0; j < 2 * n; ++j) std::swap(w(piv, j), w(c, j));
    Rat inv = 1 / w(c, c);
    for (size_t j = 0; j < 2 * n; ++j) w(c, j) *= inv;
    for (size_t i = 0; i < n; ++i) {
      if (i == c || w(i, c) == 0) continue;
      Rat f = w(i, c);
      for (size_t j = 0; j < 2 * n; ++j) w(i, j) -= f * w(c, j);
    }
  }
  RatMat out(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) out(i, j) = w(i, n + j);
  return out;
}

}  // namespace mwlforge
