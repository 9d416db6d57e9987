#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "mwlforge/frame.hpp"

using namespace mwlforge;

namespace {

// subgroup of the glue code generated by label tuples
std::set<GlueLabels> span_of(const GluedRootLattice& l, std::vector<GlueLabels> gens) {
  std::set<GlueLabels> out{GlueLabels(l.components.size(), 0)};
  std::vector<GlueLabels> frontier(out.begin(), out.end());
  while (!frontier.empty()) {
    auto v = frontier.back();
    frontier.pop_back();
    for (const auto& g : gens) {
      auto w = l.add(v, g);
      if (out.insert(w).second) frontier.push_back(w);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("orthogonal complements inside single components") {
  RootLattice d6 = build_root_lattice(Family::D, 6);
  // i1(A5) = (d5,d4,d3,d2,d1)
  IntMat img(5, 6);
  size_t chain[5] = {4, 3, 2, 1, 0};
  for (size_t i = 0; i < 5; ++i) img(i, chain[i]) = 1;
  IntMat k = integer_kernel(img * d6.gram);
  REQUIRE(k.rows == 1);
  CHECK(k.row(0) == IntVec{1, 2, 3, 4, 2, 3});  // z6 = 2*delta6
  CHECK(d6.pair(rat_vec(k.row(0)), rat_vec(k.row(0))) == rat(-6));

  // i2(A5) = (d6,d4,d3,d2,d1)
  IntMat img2(5, 6);
  size_t chain2[5] = {5, 3, 2, 1, 0};
  for (size_t i = 0; i < 5; ++i) img2(i, chain2[i]) = 1;
  IntMat k2 = integer_kernel(img2 * d6.gram);
  REQUIRE(k2.rows == 1);
  CHECK(k2.row(0) == IntVec{1, 2, 3, 4, 3, 2});  // z6~ = 2*delta6~

  // a1 inside A9: complement <a1+2a2, a3, ..., a9> of determinant 20
  RootLattice a9 = build_root_lattice(Family::A, 9);
  IntMat a1img(1, 9);
  a1img(0, 0) = 1;
  IntMat kn = integer_kernel(a1img * a9.gram);
  REQUIRE(kn.rows == 8);
  RatMat g = RatMat(kn) * RatMat(a9.gram) * RatMat(kn).transposed();
  CHECK(det(g) == rat(20));
}

TEST_CASE("lattice_roots counts") {
  RootLattice a1 = build_root_lattice(Family::A, 1);
  auto r = lattice_roots(RatMat::identity(1), a1.gram);
  CHECK(r.size() == 2);

  // the z6 line has no roots
  RootLattice d6 = build_root_lattice(Family::D, 6);
  RatMat z6(1, 6);
  RatVec v{rat(1), rat(2), rat(3), rat(4), rat(2), rat(3)};
  for (size_t i = 0; i < 6; ++i) z6(0, i) = v[i];
  CHECK(lattice_roots(z6, d6.gram).empty());
}

TEST_CASE("classify empty and simple systems") {
  RootLattice d6 = build_root_lattice(Family::D, 6);
  CHECK(classify_root_system({}, d6.gram).empty());
  auto roots = lattice_roots(RatMat::identity(6), d6.gram);
  std::vector<IntVec> iv;
  for (auto& r : roots) {
    IntVec x(6);
    for (size_t i = 0; i < 6; ++i) x[i] = r[i].get_num();
    iv.push_back(x);
  }
  CHECK(iv.size() == 60);
  auto comps = classify_root_system(iv, d6.gram);
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].name() == "D6");
}

TEST_CASE("frame of N(D6^4)") {
  GluedRootLattice d64 = make_niemeier_d64();
  Frame f = compute_frame(d64_embedding(d64, 1));

  CHECK(f.root_type == std::vector<std::string>{"A1", "D4", "D6", "D6"});
  CHECK(f.det_w == rat(12));
  CHECK(f.det_n == 768);  // 12 * 4^3
  CHECK(f.wn_invariants == IntVec{2, 2, 2});
  CHECK(f.torsion == IntVec{2, 2});
  CHECK(f.mw_rank == 1);

  // |W/N|^2 * det W = det N
  Rat order = 1;
  for (const auto& d : f.wn_invariants) order *= rat_of(d);
  CHECK(order * order * f.det_w == rat_of(f.det_n));

  // positional fiber order: D4, A1, D6, D6
  std::vector<std::string> positional;
  for (const auto& c : f.components) positional.push_back(c.name());
  CHECK(positional == std::vector<std::string>{"D4", "A1", "D6", "D6"});

  // the W/N classes are exactly the glue words starting with 0 or 1
  auto cosets = span_of(d64, {f.wn_gens[0].labels, f.wn_gens[1].labels, f.wn_gens[2].labels});
  std::set<GlueLabels> expected;
  for (const auto& g : d64.glue_code)
    if (g[0] == 0 || g[0] == 1) expected.insert(g);
  CHECK(cosets == expected);

  // the class [1,0,3,2] carries the Mordell-Weil generator of height 3/2
  RatVec w1 = d64.glue_rep({1, 0, 3, 2});
  REQUIRE(f.in_w(w1));
  CHECK(f.mw_pairing(w1, w1) == rat(3, 2));
  RatMat gram = f.mw_gram({w1});
  CHECK(gram == RatMat{{rat(3, 2)}});
  CHECK(f.disc_ns(gram) == rat(-12));

  // torsion representatives lie in the span of the roots
  RatVec q1 = d64.glue_rep({0, 2, 3, 1});
  CHECK(f.in_w(q1));
  CHECK(f.in_span_w_root(q1));
  CHECK(f.mw_pairing(q1, q1) == 0);
}

TEST_CASE("frames of N(A9^2 D6)") {
  GluedRootLattice l = make_niemeier_a92d6();

  Frame f1 = compute_frame(a92d6_embedding(l, 1));
  CHECK(f1.root_type == std::vector<std::string>{"A7", "A9"});
  CHECK(f1.det_n == 1200);  // 2*10*10*6
  CHECK(f1.det_w == rat(12));
  CHECK(f1.torsion.empty());
  CHECK(f1.mw_rank == 2);
  CHECK(f1.wn_invariants == IntVec{10});
  auto wn1 = span_of(l, {f1.wn_gens[0].labels});
  CHECK(wn1 == span_of(l, {{2, 4, 0}, {5, 0, 1}}));

  Frame f2 = compute_frame(a92d6_embedding(l, 2));
  CHECK(f2.root_type == std::vector<std::string>{"A7", "A9"});
  CHECK(f2.torsion.empty());
  CHECK(f2.mw_rank == 2);
  CHECK(f2.wn_invariants == IntVec{10});
  auto wn2 = span_of(l, {f2.wn_gens[0].labels});
  CHECK(wn2 == span_of(l, {{2, 4, 0}, {0, 5, 3}}));
  CHECK(wn1 != wn2);

  // root counts: 56 + 90
  size_t total = 0;
  for (const auto& c : f1.components) total += c.root_count;
  CHECK(total == 146);

  // explicit generating sections
  RatVec v1 = l.glue_rep({9, 8, 1});
  RatVec v2 = l.glue_rep({8, 6, 0});
  REQUIRE(f1.in_w(v1));
  REQUIRE(f1.in_w(v2));
  RatMat g1 = f1.mw_gram({v1, v2});
  CHECK(g1 == RatMat{{rat(61, 40), rat(1, 20)}, {rat(1, 20), rat(1, 10)}});
  CHECK(det(g1) == rat(3, 20));
  CHECK(f1.disc_ns(g1) == rat(-12));

  RatVec z2 = l.glue_rep({8, 6, 0});
  RatVec z5 = l.glue_rep({0, 5, 3});
  REQUIRE(f2.in_w(z2));
  REQUIRE(f2.in_w(z5));
  RatMat g2 = f2.mw_gram({z2, z5});
  CHECK(g2 == RatMat{{rat(1, 10), rat(0)}, {rat(0), rat(3, 2)}});
  CHECK(f2.disc_ns(g2) == rat(-12));
}

TEST_CASE("frame invariants under a verified automorphism") {
  GluedRootLattice d64 = make_niemeier_d64();
  GlueAut a = identity_aut(d64);
  std::swap(a.perm[2], a.perm[3]);
  a.flip.assign(4, true);
  REQUIRE(is_glue_automorphism(d64, a));
  auto p = coordinate_permutation(d64, a);

  Embedding e1 = d64_embedding(d64, 1);
  IntMat moved(6, d64.total_rank);
  for (size_t i = 0; i < 6; ++i)
    for (size_t j = 0; j < d64.total_rank; ++j) moved(i, p[j]) = e1.images(i, j);
  Embedding e2 = make_embedding(d64, moved, "moved");
  Frame f1 = compute_frame(e1);
  Frame f2 = compute_frame(e2);
  CHECK(f1.root_type == f2.root_type);
  CHECK(f1.torsion == f2.torsion);
  CHECK(f1.mw_rank == f2.mw_rank);
  CHECK(f1.det_n == f2.det_n);
}

TEST_CASE("non-primitive embedding rejected") {
  GluedRootLattice d64 = make_niemeier_d64();
  IntMat img(6, 24);
  size_t chain[5] = {4, 3, 2, 1, 0};
  for (size_t i = 0; i < 5; ++i) img(i, chain[i]) = 1;
  img(5, 6 + 5) = 1;
  // break the A5 chain pairing
  img(0, 4) = 2;
  CHECK_THROWS_AS(make_embedding(d64, img, "broken"), std::invalid_argument);
}
