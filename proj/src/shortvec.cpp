#include "mwlforge/shortvec.hpp"

namespace mwlforge {

namespace {

// G = L * diag(d) * L^T with L unit lower triangular. Throws unless G is
// positive definite.
void ldl(const RatMat& g, RatMat& l, RatVec& d) {
  size_t n = g.rows;
  if (!g.is_symmetric()) throw std::invalid_argument("ldl: non-symmetric matrix");
  l = RatMat::identity(n);
  d.assign(n, Rat(0));
  for (size_t j = 0; j < n; ++j) {
    Rat dj = g(j, j);
    for (size_t k = 0; k < j; ++k) dj -= l(j, k) * l(j, k) * d[k];
    if (dj <= 0) throw std::invalid_argument("ldl: matrix not positive definite");
    d[j] = dj;
    for (size_t i = j + 1; i < n; ++i) {
      Rat v = g(i, j);
      for (size_t k = 0; k < j; ++k) v -= l(i, k) * l(j, k) * d[k];
      l(i, j) = v / dj;
    }
  }
}

struct Enumerator {
  const RatMat& l;
  const RatVec& d;
  RatVec offset;
  Rat bound;
  size_t n;
  std::vector<IntVec> out;
  IntVec x;
  bool homogeneous;

  void run() {
    x.assign(n, Int(0));
    descend(n, Rat(0));
  }

  // levels n-1 .. 0; `used` is the partial sum of the already-fixed levels.
  void descend(size_t level, const Rat& used) {
    if (level == 0) {
      if (homogeneous) {
        bool zero = true;
        for (const auto& v : x)
          if (v != 0) { zero = false; break; }
        if (zero) return;
      }
      out.push_back(x);
      return;
    }
    size_t j = level - 1;
    Rat c = offset.empty() ? Rat(0) : offset[j];
    for (size_t i = level; i < n; ++i)
      c += l(i, j) * (rat_of(x[i]) + (offset.empty() ? Rat(0) : offset[i]));
    Rat budget = bound - used;
    if (budget < 0) return;
    Rat t = budget / d[j];
    Int lo = sqrt_shift_ceil(t, c), hi = sqrt_shift_floor(t, c);
    for (Int k = lo; k <= hi; ++k) {
      x[j] = k;
      Rat term = (rat_of(k) + c);
      descend(j, used + d[j] * term * term);
    }
    x[j] = 0;
  }
};

}  // namespace

LllResult lll_reduce(const RatMat& gram) {
  size_t n = gram.rows;
  if (!gram.is_symmetric()) throw std::invalid_argument("lll_reduce: non-symmetric matrix");
  IntMat u = IntMat::identity(n);
  RatMat g = gram;
  auto row_op = [&](size_t dst, size_t src, const Int& f) {
    // basis_dst += f * basis_src, applied symmetrically to the Gram matrix
    if (f == 0) return;
    Rat rf = rat_of(f);
    for (size_t k = 0; k < n; ++k) u(dst, k) += f * u(src, k);
    for (size_t k = 0; k < n; ++k) g(dst, k) += rf * g(src, k);
    for (size_t k = 0; k < n; ++k) g(k, dst) += rf * g(k, src);
  };
  auto swap_rows = [&](size_t i, size_t j) {
    for (size_t k = 0; k < n; ++k) std::swap(u(i, k), u(j, k));
    for (size_t k = 0; k < n; ++k) std::swap(g(i, k), g(j, k));
    for (size_t k = 0; k < n; ++k) std::swap(g(k, i), g(k, j));
  };
  // Gram-Schmidt data recomputed from g on demand
  RatMat mu(n, n);
  RatVec bstar(n);
  auto recompute = [&]() {
    for (size_t i = 0; i < n; ++i) {
      bstar[i] = g(i, i);
      for (size_t j = 0; j < i; ++j) {
        Rat m = g(i, j);
        for (size_t k = 0; k < j; ++k) m -= mu(i, k) * mu(j, k) * bstar[k];
        mu(i, j) = m / bstar[j];
        bstar[i] -= mu(i, j) * mu(i, j) * bstar[j];
      }
      if (bstar[i] <= 0) throw std::invalid_argument("lll_reduce: not positive definite");
    }
  };
  recompute();
  size_t k = 1;
  const Rat delta = rat(3, 4);
  while (k < n) {
    for (size_t j = k; j-- > 0;) {
      Rat m = mu(k, j);
      Int r = rat_floor(m + rat(1, 2));
      if (r != 0) {
        row_op(k, j, -r);
        recompute();
      }
    }
    if (bstar[k] >= (delta - mu(k, k - 1) * mu(k, k - 1)) * bstar[k - 1]) {
      ++k;
    } else {
      swap_rows(k, k - 1);
      recompute();
      k = k > 1 ? k - 1 : 1;
    }
  }
  // The enumerator treats the last index as the outermost level, so put the
  // large Gram-Schmidt norms there: reverse the row order.
  IntMat ur(n, n);
  RatMat gr(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      ur(i, j) = u(n - 1 - i, j);
      gr(i, j) = g(n - 1 - i, n - 1 - j);
    }
  return LllResult{std::move(ur), std::move(gr)};
}

std::vector<IntVec> enumerate_short(const RatMat& gram, const Rat& bound,
                                    const RatVec& offset) {
  size_t n = gram.rows;
  if (!offset.empty() && offset.size() != n)
    throw std::invalid_argument("enumerate_short: offset size mismatch");
  if (n == 0) return {};
  RatMat l;
  RatVec d;
  ldl(gram, l, d);
  bool homog = offset.empty();
  if (!homog) {
    homog = true;
    for (const auto& v : offset)
      if (v != 0) { homog = false; break; }
  }
  Enumerator e{l, d, offset, bound, n, {}, {}, homog};
  if (bound >= 0) e.run();
  return e.out;
}

CosetMinimum coset_minimum(const RatMat& gram, const RatVec& offset, const Rat& seed) {
  auto val = [&](const IntVec& x) {
    RatVec v(x.size());
    for (size_t i = 0; i < x.size(); ++i)
      v[i] = rat_of(x[i]) + (offset.empty() ? Rat(0) : offset[i]);
    return dot(v, gram * v);
  };
  auto cands = enumerate_short(gram, seed, offset);
  CosetMinimum best;
  best.value = seed;
  for (const auto& x : cands) {
    Rat q = val(x);
    if (q < best.value) best.value = q;
  }
  for (const auto& x : cands)
    if (val(x) == best.value) best.argmins.push_back(x);
  if (best.argmins.empty()) {
    // seed itself attained only by the implicit zero vector
    best.argmins.push_back(IntVec(gram.rows, Int(0)));
  }
  return best;
}

}  // namespace mwlforge
