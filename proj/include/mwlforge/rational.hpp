#pragma once
#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mwlforge {

// Exact scalars. mpq_class keeps values reduced with positive denominator,
// which is exactly the Rat contract used throughout.
using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat rat_of(const Int& num, const Int& den = 1) {
  if (den == 0) throw std::invalid_argument("rat_of: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// "num/den" with den > 0, or a bare integer.
inline Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  Rat r;
  if (slash == std::string::npos) {
    r = Rat(Int(s));
  } else {
    Int num(s.substr(0, slash)), den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("parse_rat: zero denominator");
    r = Rat(num, den);
  }
  r.canonicalize();
  return r;
}

// Canonical machine form: always "num/den", den >= 1.
inline std::string rat_string(const Rat& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// Human form: integers print bare.
inline std::string rat_pretty(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int rat_floor(const Rat& r) { return floor_div(r.get_num(), r.get_den()); }

inline Int rat_ceil(const Rat& r) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

inline Int isqrt(const Int& n) {
  if (n < 0) throw std::invalid_argument("isqrt of negative");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

// Largest integer m with (m + c)^2 <= t, t >= 0.
inline Int sqrt_shift_floor(const Rat& t, const Rat& c) {
  if (t < 0) throw std::invalid_argument("sqrt_shift_floor: negative bound");
  // sqrt(t) = sqrt(num*den)/den up to one ulp.
  Int s = isqrt(t.get_num() * t.get_den());
  Int m = rat_floor(rat_of(s, t.get_den()) - c);
  // m + c <= sqrt(t), covering the negative side as well
  auto ok = [&](const Int& k) {
    Rat v = rat_of(k) + c;
    return v <= 0 || v * v <= t;
  };
  while (ok(m + 1)) ++m;
  while (!ok(m)) --m;
  return m;
}

// Smallest integer m with (m + c)^2 <= t.
inline Int sqrt_shift_ceil(const Rat& t, const Rat& c) {
  return -sqrt_shift_floor(t, -c);
}

inline RatVec rat_vec(const IntVec& v) {
  RatVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = rat_of(v[i]);
  return out;
}

inline bool is_integral(const Rat& r) { return r.get_den() == 1; }

inline bool is_integral(const RatVec& v) {
  for (const auto& x : v)
    if (!is_integral(x)) return false;
  return true;
}

}  // namespace mwlforge
