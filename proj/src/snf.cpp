#include "mwlforge/snf.hpp"

namespace mwlforge {

namespace {

// g = gcd(a,b) = s*a + t*b
void gcdext(const Int& a, const Int& b, Int& g, Int& s, Int& t) {
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

struct SnfWork {
  IntMat a, u, v, uinv, vinv;

  // Row ops on A are mirrored on U (and inverted on Uinv); column ops on V.
  void row_swap(size_t i, size_t j) {
    for (size_t k = 0; k < a.cols; ++k) std::swap(a(i, k), a(j, k));
    for (size_t k = 0; k < u.cols; ++k) std::swap(u(i, k), u(j, k));
    for (size_t k = 0; k < uinv.rows; ++k) std::swap(uinv(k, i), uinv(k, j));
  }
  void col_swap(size_t i, size_t j) {
    for (size_t k = 0; k < a.rows; ++k) std::swap(a(k, i), a(k, j));
    for (size_t k = 0; k < v.rows; ++k) std::swap(v(k, i), v(k, j));
    for (size_t k = 0; k < vinv.cols; ++k) std::swap(vinv(i, k), vinv(j, k));
  }
  void row_addmul(size_t dst, size_t src, const Int& f) {
    if (f == 0) return;
    for (size_t k = 0; k < a.cols; ++k) a(dst, k) += f * a(src, k);
    for (size_t k = 0; k < u.cols; ++k) u(dst, k) += f * u(src, k);
    for (size_t k = 0; k < uinv.rows; ++k) uinv(k, src) -= f * uinv(k, dst);
  }
  void col_addmul(size_t dst, size_t src, const Int& f) {
    if (f == 0) return;
    for (size_t k = 0; k < a.rows; ++k) a(k, dst) += f * a(k, src);
    for (size_t k = 0; k < v.rows; ++k) v(k, dst) += f * v(k, src);
    for (size_t k = 0; k < vinv.cols; ++k) vinv(src, k) -= f * vinv(dst, k);
  }
  void row_negate(size_t i) {
    for (size_t k = 0; k < a.cols; ++k) a(i, k) = -a(i, k);
    for (size_t k = 0; k < u.cols; ++k) u(i, k) = -u(i, k);
    for (size_t k = 0; k < uinv.rows; ++k) uinv(k, i) = -uinv(k, i);
  }
  // Replace rows i,j by unimodular combinations realizing the extended gcd in
  // column c.
  void row_gcd_step(size_t i, size_t j, size_t c) {
    Int g, s, t;
    gcdext(a(i, c), a(j, c), g, s, t);
    Int p = a(i, c) / g, q = a(j, c) / g;
    // [s t; -q p] has determinant 1
    for (size_t k = 0; k < a.cols; ++k) {
      Int x = a(i, k), y = a(j, k);
      a(i, k) = s * x + t * y;
      a(j, k) = p * y - q * x;
    }
    for (size_t k = 0; k < u.cols; ++k) {
      Int x = u(i, k), y = u(j, k);
      u(i, k) = s * x + t * y;
      u(j, k) = p * y - q * x;
    }
    // inverse of [s t; -q p] is [p -t; q s]
    for (size_t k = 0; k < uinv.rows; ++k) {
      Int x = uinv(k, i), y = uinv(k, j);
      uinv(k, i) = p * x + q * y;
      uinv(k, j) = s * y - t * x;
    }
  }
  void col_gcd_step(size_t i, size_t j, size_t r) {
    Int g, s, t;
    gcdext(a(r, i), a(r, j), g, s, t);
    Int p = a(r, i) / g, q = a(r, j) / g;
    for (size_t k = 0; k < a.rows; ++k) {
      Int x = a(k, i), y = a(k, j);
      a(k, i) = s * x + t * y;
      a(k, j) = p * y - q * x;
    }
    for (size_t k = 0; k < v.rows; ++k) {
      Int x = v(k, i), y = v(k, j);
      v(k, i) = s * x + t * y;
      v(k, j) = p * y - q * x;
    }
    for (size_t k = 0; k < vinv.cols; ++k) {
      Int x = vinv(i, k), y = vinv(j, k);
      vinv(i, k) = p * x + q * y;
      vinv(j, k) = s * y - t * x;
    }
  }
};

bool already_smith(const IntMat& a) {
  size_t n = std::min(a.rows, a.cols);
  for (size_t i = 0; i < a.rows; ++i)
    for (size_t j = 0; j < a.cols; ++j)
      if (i != j && a(i, j) != 0) return false;
  Int prev = -1;
  for (size_t i = 0; i < n; ++i) {
    const Int& d = a(i, i);
    if (d < 0) return false;
    if (prev == 0 && d != 0) return false;
    if (prev > 0 && (d != 0 && d % prev != 0)) return false;
    if (prev > 0 && d == 0) prev = 0;
    if (d == 0) prev = 0; else prev = d;
  }
  return true;
}

}  // namespace

SnfResult snf(const IntMat& a) {
  SnfResult out;
  size_t m = a.rows, n = a.cols;
  if (already_smith(a)) {
    out.u = IntMat::identity(m);
    out.uinv = out.u;
    out.v = IntMat::identity(n);
    out.vinv = out.v;
    out.diag.resize(std::min(m, n));
    for (size_t i = 0; i < out.diag.size(); ++i) out.diag[i] = a(i, i);
    return out;
  }
  SnfWork w{a, IntMat::identity(m), IntMat::identity(n), IntMat::identity(m),
            IntMat::identity(n)};
  size_t k = 0;
  while (k < m && k < n) {
    // find a nonzero pivot
    size_t pi = m, pj = n;
    for (size_t i = k; i < m && pi == m; ++i)
      for (size_t j = k; j < n; ++j)
        if (w.a(i, j) != 0) { pi = i; pj = j; break; }
    if (pi == m) break;
    w.row_swap(k, pi);
    w.col_swap(k, pj);
    for (;;) {
      for (size_t i = k + 1; i < m; ++i)
        if (w.a(i, k) != 0) {
          if (w.a(i, k) % w.a(k, k) == 0)
            w.row_addmul(i, k, -(w.a(i, k) / w.a(k, k)));
          else
            w.row_gcd_step(k, i, k);
        }
      for (size_t j = k + 1; j < n; ++j)
        if (w.a(k, j) != 0) {
          if (w.a(k, j) % w.a(k, k) == 0)
            w.col_addmul(j, k, -(w.a(k, j) / w.a(k, k)));
          else
            w.col_gcd_step(k, j, k);
        }
      bool clean = true;
      for (size_t i = k + 1; i < m && clean; ++i) clean = (w.a(i, k) == 0);
      for (size_t j = k + 1; j < n && clean; ++j) clean = (w.a(k, j) == 0);
      if (!clean) continue;
      // divisibility sweep: pivot must divide the remaining block
      size_t bi = m, bj = n;
      for (size_t i = k + 1; i < m && bi == m; ++i)
        for (size_t j = k + 1; j < n; ++j)
          if (w.a(i, j) % w.a(k, k) != 0) { bi = i; bj = j; break; }
      if (bi == m) break;
      w.row_addmul(k, bi, Int(1));
    }
    if (w.a(k, k) < 0) w.row_negate(k);
    ++k;
  }
  out.diag.resize(std::min(m, n));
  for (size_t i = 0; i < out.diag.size(); ++i) out.diag[i] = w.a(i, i);
  out.u = std::move(w.u);
  out.v = std::move(w.v);
  out.uinv = std::move(w.uinv);
  out.vinv = std::move(w.vinv);
  return out;
}

HnfResult hnf(const IntMat& a) {
  size_t m = a.rows, n = a.cols;
  SnfWork w{a, IntMat::identity(m), {}, IntMat::identity(m), {}};
  size_t r = 0;
  for (size_t c = 0; c < n && r < m; ++c) {
    size_t piv = m;
    for (size_t i = r; i < m; ++i)
      if (w.a(i, c) != 0) { piv = i; break; }
    if (piv == m) continue;
    w.row_swap(r, piv);
    for (size_t i = r + 1; i < m; ++i)
      if (w.a(i, c) != 0) w.row_gcd_step(r, i, c);
    if (w.a(r, c) < 0) w.row_negate(r);
    for (size_t i = 0; i < r; ++i) {
      Int f = floor_div(w.a(i, c), w.a(r, c));
      w.row_addmul(i, r, -f);
    }
    ++r;
  }
  HnfResult out;
  out.h = std::move(w.a);
  out.u = std::move(w.u);
  out.rank = r;
  return out;
}

IntMat integer_kernel(const IntMat& a) {
  size_t n = a.cols;
  if (a.rows == 0) return IntMat::identity(n);
  HnfResult h = hnf(a.transposed());  // U * A^T = H
  size_t r = h.rank;
  IntMat ker(n - r, n);
  for (size_t i = r; i < n; ++i)
    for (size_t j = 0; j < n; ++j) ker(i - r, j) = h.u(i, j);
  if (ker.rows == 0) return ker;
  return hnf(ker).h;  // canonical form (already full rank)
}

IntMat saturate(const IntMat& sub, size_t ambient) {
  if (sub.rows > 0 && sub.cols != ambient)
    throw std::invalid_argument("saturate: ambient mismatch");
  if (sub.rows == 0) return IntMat(0, ambient);
  return integer_kernel(integer_kernel(sub));
}

std::optional<IntVec> solve_integer(const IntMat& a, const IntVec& b) {
  if (a.rows != b.size()) throw std::invalid_argument("solve_integer: shape mismatch");
  SnfResult s = snf(a);
  // a = uinv * D * vinv, solve D y = u*b, x = v*y
  IntVec ub(a.rows);
  for (size_t i = 0; i < a.rows; ++i)
    for (size_t j = 0; j < a.rows; ++j) ub[i] += s.u(i, j) * b[j];
  IntVec y(a.cols);
  for (size_t i = 0; i < std::min(a.rows, a.cols); ++i) {
    if (s.diag[i] == 0) {
      if (ub[i] != 0) return std::nullopt;
    } else {
      if (ub[i] % s.diag[i] != 0) return std::nullopt;
      y[i] = ub[i] / s.diag[i];
    }
  }
  for (size_t i = a.cols; i < a.rows; ++i)
    if (ub[i] != 0) return std::nullopt;
  IntVec x(a.cols);
  for (size_t i = 0; i < a.cols; ++i)
    for (size_t j = 0; j < a.cols; ++j) x[i] += s.v(i, j) * y[j];
  return x;
}

IntMat coords_in_basis(const IntMat& sub, const IntMat& basis) {
  IntMat bt = basis.transposed();
  IntMat out(sub.rows, basis.rows);
  for (size_t i = 0; i < sub.rows; ++i) {
    auto sol = solve_integer(bt, sub.row(i));
    if (!sol) throw std::invalid_argument("coords_in_basis: row not in integer span");
    for (size_t j = 0; j < basis.rows; ++j) out(i, j) = (*sol)[j];
  }
  return out;
}

IntVec quotient_invariants(const IntMat& small, const IntMat& big) {
  IntMat c = coords_in_basis(small, big);
  SnfResult s = snf(c);
  IntVec inv;
  for (const Int& d : s.diag)
    if (d > 1) inv.push_back(d);
  if (small.rows < big.rows)
    throw std::invalid_argument("quotient_invariants: infinite quotient");
  return inv;
}

}  // namespace mwlforge
