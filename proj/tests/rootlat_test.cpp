#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mwlforge/rootlat.hpp"

using namespace mwlforge;

TEST_CASE("gram matrices and determinants") {
  RootLattice a1 = build_root_lattice(Family::A, 1);
  CHECK(a1.gram == IntMat{{-2}});

  RootLattice d6 = build_root_lattice(Family::D, 6);
  // d4 is the trivalent node, d5 and d6 the fork
  CHECK(d6.gram(3, 4) == 1);
  CHECK(d6.gram(3, 5) == 1);
  CHECK(d6.gram(4, 5) == 0);
  CHECK(d6.gram(2, 3) == 1);
  CHECK(abs(det(d6.gram)) == 4);

  RootLattice a9 = build_root_lattice(Family::A, 9);
  CHECK(abs(det(a9.gram)) == 10);

  CHECK(abs(det(build_root_lattice(Family::E, 6).gram)) == 3);
  CHECK(abs(det(build_root_lattice(Family::E, 7).gram)) == 2);
  CHECK(abs(det(build_root_lattice(Family::E, 8).gram)) == 1);

  CHECK_THROWS_AS(build_root_lattice(Family::D, 3), std::invalid_argument);
  CHECK_THROWS_AS(build_root_lattice(Family::E, 9), std::invalid_argument);
}

TEST_CASE("negative definiteness") {
  for (auto l : {build_root_lattice(Family::A, 5), build_root_lattice(Family::D, 6),
                 build_root_lattice(Family::E, 7)}) {
    RatMat g(l.gram);
    // leading principal minors alternate: (-1)^k minor_k > 0
    for (size_t k = 1; k <= l.rank; ++k) {
      RatMat sub(k, k);
      for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) sub(i, j) = g(i, j);
      Rat d = det(sub);
      if (k % 2 == 0) CHECK(d > 0);
      else CHECK(d < 0);
    }
  }
}

TEST_CASE("D6 glue classes") {
  RootLattice d6 = build_root_lattice(Family::D, 6);
  DiscClass c1 = glue_class(d6, 1);
  CHECK(c1.self_pairing() == rat(-3, 2));
  // delta6 = (d1+2d2+3d3+4d4+2d5+3d6)/2
  CHECK(c1.representative == RatVec{rat(1, 2), rat(1), rat(3, 2), rat(2), rat(1), rat(3, 2)});

  DiscClass c2 = glue_class(d6, 2);
  CHECK(c2.self_pairing() == rat(-1));
  DiscClass c3 = glue_class(d6, 3);
  CHECK(c3.self_pairing() == rat(-3, 2));
  CHECK(c3.representative ==
        RatVec{rat(1, 2), rat(1), rat(3, 2), rat(2), rat(3, 2), rat(1)});

  CHECK(d6.disc_add(1, 3) == 2);
  CHECK(d6.disc_add(1, 1) == 0);
  CHECK(d6.disc_add(2, 3) == 1);
  CHECK_THROWS_AS(glue_class(d6, 4), std::invalid_argument);
}

TEST_CASE("A9 glue classes") {
  RootLattice a9 = build_root_lattice(Family::A, 9);
  DiscClass c5 = glue_class(a9, 5);
  CHECK(c5.self_pairing() == rat(-5, 2));
  DiscClass c1 = glue_class(a9, 1);
  // alpha = (9a1+8a2+...+a9)/10
  RatVec alpha(9);
  for (size_t i = 0; i < 9; ++i) alpha[i] = rat(long(9 - i), 10);
  CHECK(c1.representative == alpha);
  CHECK(a9.disc_label_of(alpha) == 1);
}

TEST_CASE("dual gram") {
  RootLattice a9 = build_root_lattice(Family::A, 9);
  RatMat dg = a9.dual_gram();
  CHECK(dg(0, 0) == rat(-9, 10));
  CHECK(dg(0, 8) == rat(-1, 10));
  CHECK(dg(4, 4) == rat(-5, 2));
  CHECK(dg(3, 3) == rat(-12, 5));

  RootLattice a1 = build_root_lattice(Family::A, 1);
  CHECK(a1.dual_gram() == RatMat{{rat(-1, 2)}});

  // dual_gram * gram = identity
  CHECK(dg * RatMat(a9.gram) == RatMat::identity(9));
}

TEST_CASE("dual basis vectors") {
  RootLattice a9 = build_root_lattice(Family::A, 9);
  for (size_t j = 1; j <= 9; ++j) {
    RatVec aj = a9.dual_basis_vector(j);
    for (size_t i = 1; i <= 9; ++i) {
      RatVec ei(9);
      ei[i - 1] = 1;
      CHECK(a9.pair(aj, ei) == (i == j ? rat(1) : rat(0)));
    }
  }
  CHECK(a9.pair(a9.dual_basis_vector(9), a9.dual_basis_vector(9)) == rat(-9, 10));
  CHECK(a9.pair(a9.dual_basis_vector(4), a9.dual_basis_vector(4)) == rat(-12, 5));
  CHECK_THROWS_AS(a9.dual_basis_vector(10), std::invalid_argument);
}

TEST_CASE("disc group order matches determinant") {
  for (auto l : {build_root_lattice(Family::A, 4), build_root_lattice(Family::A, 9),
                 build_root_lattice(Family::D, 4), build_root_lattice(Family::D, 5),
                 build_root_lattice(Family::D, 6), build_root_lattice(Family::E, 6),
                 build_root_lattice(Family::E, 7)}) {
    CHECK(Int(l.disc_order()) == abs(det(l.gram)));
  }
}

TEST_CASE("class addition matches representative addition") {
  for (auto l : {build_root_lattice(Family::A, 5), build_root_lattice(Family::D, 6),
                 build_root_lattice(Family::D, 5), build_root_lattice(Family::E, 6)}) {
    size_t ord = l.disc_order();
    for (int x = 0; size_t(x) < ord; ++x)
      for (int y = 0; size_t(y) < ord; ++y) {
        int z = l.disc_add(x, y);
        // associativity against a third element
        for (int w = 0; size_t(w) < ord; ++w)
          CHECK(l.disc_add(z, w) == l.disc_add(x, l.disc_add(y, w)));
        RatVec sum(l.rank);
        RatVec rx = l.disc_rep(x), ry = l.disc_rep(y), rz = l.disc_rep(z);
        bool integral = true;
        for (size_t i = 0; i < l.rank; ++i)
          integral = integral && is_integral(rx[i] + ry[i] - rz[i]);
        CHECK(integral);
        CHECK(l.disc_label_of(rx) == x);
      }
  }
}
