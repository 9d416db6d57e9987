#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mwlforge/shortvec.hpp"
#include "mwlforge/snf.hpp"

using namespace mwlforge;

namespace {

IntMat random_matrix(std::mt19937_64& rng, size_t r, size_t c, int span) {
  std::uniform_int_distribution<int> d(-span, span);
  IntMat m(r, c);
  for (auto& v : m.a) v = d(rng);
  return m;
}

IntMat diag_from(const SnfResult& s, size_t r, size_t c) {
  IntMat d(r, c);
  for (size_t i = 0; i < s.diag.size(); ++i) d(i, i) = s.diag[i];
  return d;
}

void check_snf(const IntMat& a) {
  SnfResult s = snf(a);
  CHECK(s.u * a * s.v == diag_from(s, a.rows, a.cols));
  CHECK(s.u * s.uinv == IntMat::identity(a.rows));
  CHECK(s.v * s.vinv == IntMat::identity(a.cols));
  CHECK(abs(det(s.u)) == 1);
  CHECK(abs(det(s.v)) == 1);
  for (size_t i = 0; i + 1 < s.diag.size(); ++i) {
    if (s.diag[i] == 0) CHECK(s.diag[i + 1] == 0);
    else CHECK(s.diag[i + 1] % s.diag[i] == 0);
    CHECK(s.diag[i] >= 0);
  }
}

}  // namespace

TEST_CASE("snf identity and fixed points") {
  SnfResult s = snf(IntMat::identity(2));
  CHECK(s.diag == IntVec{1, 1});
  CHECK(s.u == IntMat::identity(2));

  SnfResult d = snf(IntMat{{2, 0}, {0, 4}});
  CHECK(d.diag == IntVec{2, 4});
  CHECK(d.u == IntMat::identity(2));
  CHECK(d.v == IntMat::identity(2));
}

TEST_CASE("snf zero matrix") {
  IntMat z(3, 2);
  SnfResult s = snf(z);
  CHECK(s.diag == IntVec{0, 0});
  check_snf(z);
}

TEST_CASE("snf reconstruction on random matrices") {
  std::mt19937_64 rng(20240811);
  for (int trial = 0; trial < 60; ++trial) {
    size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    check_snf(random_matrix(rng, r, c, 9));
  }
}

TEST_CASE("snf exhaustive 2x2 small entries") {
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b)
      for (int c = -2; c <= 2; ++c)
        for (int d = -2; d <= 2; ++d) check_snf(IntMat{{a, b}, {c, d}});
}

TEST_CASE("rational determinants") {
  RatMat h{{rat(61, 40), rat(1, 20)}, {rat(1, 20), rat(1, 10)}};
  CHECK(det(h) == rat(3, 20));
  RatMat d2{{rat(5, 2), rat(0)}, {rat(0), rat(6)}};
  CHECK(det(d2) == rat(15));
  RatMat one{{rat(7, 3)}};
  CHECK(det(one) == rat(7, 3));
  CHECK_THROWS_AS(det(RatMat(2, 3)), std::invalid_argument);
}

TEST_CASE("det multiplicativity") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  for (int trial = 0; trial < 40; ++trial) {
    size_t n = 1 + rng() % 4;
    RatMat a(n, n), b(n, n);
    for (auto& v : a.a) v = rat(num(rng), den(rng));
    for (auto& v : b.a) v = rat(num(rng), den(rng));
    CHECK(det(a * b) == det(a) * det(b));
  }
}

TEST_CASE("solve_rational") {
  RatMat id = RatMat::identity(3);
  RatVec b{rat(1), rat(-2), rat(5, 3)};
  auto x = solve_rational(id, b);
  REQUIRE(x.has_value());
  CHECK(*x == b);

  RatMat h{{rat(61, 40), rat(1, 20)}, {rat(1, 20), rat(1, 10)}};
  auto sol = solve_rational(h, {rat(63, 40), rat(3, 20)});
  REQUIRE(sol.has_value());
  CHECK((*sol)[0] == 1);
  CHECK((*sol)[1] == 1);

  RatMat sing{{rat(1), rat(1)}, {rat(1), rat(1)}};
  CHECK(!solve_rational(sing, {rat(0), rat(1)}).has_value());
}

TEST_CASE("solve substitution reproduces rhs") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
  for (int trial = 0; trial < 40; ++trial) {
    size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    RatMat a(r, c);
    for (auto& v : a.a) v = rat(num(rng), den(rng));
    RatVec b(r);
    for (auto& v : b) v = rat(num(rng), den(rng));
    auto x = solve_rational(a, b);
    if (!x) continue;
    RatVec back = a * *x;
    CHECK(back == b);
  }
}

TEST_CASE("integer kernel basics") {
  IntMat k1 = integer_kernel(IntMat{{1, 1}});
  REQUIRE(k1.rows == 1);
  CHECK(k1.row(0) == IntVec{1, -1});

  IntMat k2 = integer_kernel(IntMat{{2, 4}});
  REQUIRE(k2.rows == 1);
  CHECK(k2.row(0) == IntVec{2, -1});
}

TEST_CASE("kernel orthogonality and saturation") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 50; ++trial) {
    size_t r = 1 + rng() % 3, c = 2 + rng() % 4;
    IntMat a = random_matrix(rng, r, c, 6);
    IntMat k = integer_kernel(a);
    for (size_t i = 0; i < k.rows; ++i)
      for (size_t j = 0; j < a.rows; ++j) {
        Int s = 0;
        for (size_t t = 0; t < c; ++t) s += a(j, t) * k(i, t);
        CHECK(s == 0);
      }
    if (k.rows > 0) CHECK(saturate(k, c) == k);
  }
}

TEST_CASE("saturate examples and idempotence") {
  CHECK(saturate(IntMat{{2, 0}}, 2) == IntMat{{1, 0}});
  CHECK(saturate(IntMat{{2, 2}}, 2) == IntMat{{1, 1}});
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 50; ++trial) {
    size_t r = 1 + rng() % 3, c = 2 + rng() % 4;
    IntMat sub = random_matrix(rng, r, c, 7);
    IntMat s1 = saturate(sub, c);
    if (s1.rows == 0) continue;
    CHECK(saturate(s1, c) == s1);
  }
}

TEST_CASE("integer solve") {
  auto sol = solve_integer(IntMat{{2, 0}, {0, 3}}, IntVec{4, 9});
  REQUIRE(sol.has_value());
  CHECK(*sol == IntVec{2, 3});
  CHECK(!solve_integer(IntMat{{2}}, IntVec{3}).has_value());
}

TEST_CASE("short vector enumeration: A2 roots") {
  // positive-definite A2 form
  RatMat g{{rat(2), rat(-1)}, {rat(-1), rat(2)}};
  auto v = enumerate_short(g, rat(2));
  CHECK(v.size() == 6);
}

TEST_CASE("short vector enumeration with offset") {
  RatMat g{{rat(2), rat(0)}, {rat(0), rat(2)}};
  RatVec off{rat(1, 2), rat(0)};
  auto v = enumerate_short(g, rat(1, 2), off);
  // (x+1/2)^2*2 + 2y^2 <= 1/2: x in {0,-1}, y = 0
  CHECK(v.size() == 2);
}
