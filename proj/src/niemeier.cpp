#include "mwlforge/niemeier.hpp"

#include <algorithm>
#include <set>

namespace mwlforge {

size_t GluedRootLattice::component_of(size_t coord) const {
  for (size_t c = components.size(); c-- > 0;)
    if (coord >= offsets[c]) return c;
  throw std::invalid_argument("component_of: bad coordinate");
}

GlueLabels GluedRootLattice::add(const GlueLabels& x, const GlueLabels& y) const {
  if (x.size() != components.size() || y.size() != components.size())
    throw std::invalid_argument("glue add: arity mismatch");
  GlueLabels z(x.size());
  for (size_t c = 0; c < x.size(); ++c) z[c] = components[c].disc_add(x[c], y[c]);
  return z;
}

GlueLabels GluedRootLattice::neg(const GlueLabels& x) const {
  GlueLabels z(x.size());
  for (size_t c = 0; c < x.size(); ++c) z[c] = components[c].disc_neg(x[c]);
  return z;
}

bool GluedRootLattice::code_contains(const GlueLabels& x) const {
  return std::find(glue_code.begin(), glue_code.end(), x) != glue_code.end();
}

RatVec GluedRootLattice::glue_rep(const GlueLabels& labels) const {
  if (labels.size() != components.size())
    throw std::invalid_argument("glue_rep: arity mismatch");
  RatVec v(total_rank);
  for (size_t c = 0; c < components.size(); ++c) {
    RatVec r = components[c].disc_rep(labels[c]);
    for (size_t i = 0; i < r.size(); ++i) v[offsets[c] + i] = r[i];
  }
  return v;
}

GlueLabels GluedRootLattice::labels_of(const RatVec& x) const {
  if (x.size() != total_rank) throw std::invalid_argument("labels_of: dimension mismatch");
  GlueLabels out(components.size());
  for (size_t c = 0; c < components.size(); ++c) {
    RatVec part(x.begin() + offsets[c], x.begin() + offsets[c] + components[c].rank);
    out[c] = components[c].disc_label_of(part);
  }
  return out;
}

Rat GluedRootLattice::pair(const RatVec& x, const RatVec& y) const {
  return dot(x, RatMat(gram) * y);
}

RatMat GluedRootLattice::lattice_basis() const {
  // common denominator over all glue representatives
  Int den = 1;
  std::vector<RatVec> reps;
  reps.reserve(glue_code.size());
  for (const auto& g : glue_code) {
    reps.push_back(glue_rep(g));
    for (const auto& v : reps.back()) den = lcm(den, v.get_den());
  }
  IntMat gens(total_rank + reps.size(), total_rank);
  for (size_t i = 0; i < total_rank; ++i) gens(i, i) = den;
  for (size_t r = 0; r < reps.size(); ++r)
    for (size_t j = 0; j < total_rank; ++j) {
      Rat scaled = reps[r][j] * rat_of(den);
      gens(total_rank + r, j) = scaled.get_num();
    }
  HnfResult h = hnf(gens);
  if (h.rank != total_rank) throw std::logic_error("lattice_basis: rank defect");
  RatMat basis(total_rank, total_rank);
  for (size_t i = 0; i < total_rank; ++i)
    for (size_t j = 0; j < total_rank; ++j) basis(i, j) = rat_of(h.h(i, j), den);
  return basis;
}

GluedRootLattice make_glued(std::vector<RootLattice> components,
                            std::vector<GlueLabels> generators, std::string name,
                            bool require_unimodular) {
  GluedRootLattice l;
  l.components = std::move(components);
  l.name = std::move(name);
  l.offsets.resize(l.components.size());
  for (size_t c = 0; c < l.components.size(); ++c) {
    l.offsets[c] = l.total_rank;
    l.total_rank += l.components[c].rank;
  }
  l.gram = IntMat(l.total_rank, l.total_rank);
  for (size_t c = 0; c < l.components.size(); ++c) {
    const auto& g = l.components[c].gram;
    for (size_t i = 0; i < g.rows; ++i)
      for (size_t j = 0; j < g.cols; ++j) l.gram(l.offsets[c] + i, l.offsets[c] + j) = g(i, j);
  }
  // close the generators into a group
  std::set<GlueLabels> code;
  GlueLabels zero(l.components.size(), 0);
  code.insert(zero);
  std::vector<GlueLabels> frontier{zero};
  for (const auto& g : generators)
    if (code.insert(g).second) frontier.push_back(g);
  while (!frontier.empty()) {
    GlueLabels v = frontier.back();
    frontier.pop_back();
    for (const auto& g : generators) {
      GlueLabels w = l.add(v, g);
      if (code.insert(w).second) frontier.push_back(w);
    }
  }
  l.glue_code.assign(code.begin(), code.end());

  // integral, even pairwise inner products
  std::vector<RatVec> reps;
  for (const auto& g : l.glue_code) reps.push_back(l.glue_rep(g));
  for (size_t i = 0; i < reps.size(); ++i) {
    for (size_t j = i; j < reps.size(); ++j) {
      Rat p = l.pair(reps[i], reps[j]);
      if (!is_integral(p)) throw std::invalid_argument("glue code not integral: " + l.name);
      if (i == j && p.get_num() % 2 != 0)
        throw std::invalid_argument("glue vector of odd norm: " + l.name);
    }
  }
  Int det_root = det(l.gram);
  Int det_abs = abs(det_root);
  Int sq = Int(l.glue_code.size()) * Int(l.glue_code.size());
  l.unimodular = (sq == det_abs);
  if (require_unimodular && !l.unimodular)
    throw std::invalid_argument("glue code does not give a unimodular lattice: " + l.name);
  return l;
}

GluedRootLattice make_niemeier_d64() {
  std::vector<RootLattice> comps(4, build_root_lattice(Family::D, 6));
  // even permutations of [0,1,2,3]; closure adds the four constant words
  std::vector<GlueLabels> gens = {{0, 1, 2, 3}, {0, 2, 3, 1}, {1, 0, 3, 2}, {2, 0, 1, 3}};
  GluedRootLattice l = make_glued(std::move(comps), gens, "N(D6^4)", true);
  if (l.glue_code.size() != 16) throw std::logic_error("N(D6^4): glue code size != 16");
  if (l.total_rank != 24) throw std::logic_error("N(D6^4): rank != 24");
  return l;
}

GluedRootLattice make_niemeier_a92d6() {
  std::vector<RootLattice> comps{build_root_lattice(Family::A, 9),
                                 build_root_lattice(Family::A, 9),
                                 build_root_lattice(Family::D, 6)};
  std::vector<GlueLabels> gens = {{2, 4, 0}, {5, 0, 1}, {0, 5, 3}};
  GluedRootLattice l = make_glued(std::move(comps), gens, "N(A9^2D6)", true);
  if (l.total_rank != 24) throw std::logic_error("N(A9^2D6): rank != 24");
  // |code| = sqrt(10*10*4) by unimodularity
  if (l.glue_code.size() != 20) throw std::logic_error("N(A9^2D6): glue code size != 20");
  return l;
}

namespace {

void check_shape(const GluedRootLattice& l, const GlueAut& aut) {
  size_t k = l.components.size();
  if (aut.perm.size() != k || aut.flip.size() != k)
    throw std::invalid_argument("glue automorphism arity mismatch");
  std::vector<bool> seen(k, false);
  for (size_t i = 0; i < k; ++i) {
    size_t j = aut.perm[i];
    if (j >= k || seen[j]) throw std::invalid_argument("glue automorphism: bad permutation");
    seen[j] = true;
    if (l.components[i].family != l.components[j].family ||
        l.components[i].rank != l.components[j].rank)
      throw std::invalid_argument("glue automorphism permutes non-isomorphic components");
  }
}

int flip_label(const RootLattice& c, int x) {
  switch (c.family) {
    case Family::A: return c.disc_neg(x);
    case Family::D:
      if (x == 1) return 3;
      if (x == 3) return 1;
      return x;
    case Family::E: return c.rank == 6 ? c.disc_neg(x) : x;
  }
  throw std::logic_error("bad family");
}

// coordinate images of the simple roots under the diagram flip
std::vector<size_t> flip_perm(const RootLattice& c) {
  std::vector<size_t> p(c.rank);
  for (size_t i = 0; i < c.rank; ++i) p[i] = i;
  switch (c.family) {
    case Family::A:
      for (size_t i = 0; i < c.rank; ++i) p[i] = c.rank - 1 - i;
      break;
    case Family::D:
      std::swap(p[c.rank - 2], p[c.rank - 1]);
      break;
    case Family::E:
      if (c.rank == 6) {
        p[0] = 4; p[4] = 0;
        p[1] = 3; p[3] = 1;
      }
      break;
  }
  return p;
}

}  // namespace

GlueAut identity_aut(const GluedRootLattice& l) {
  GlueAut a;
  a.perm.resize(l.components.size());
  for (size_t i = 0; i < a.perm.size(); ++i) a.perm[i] = i;
  a.flip.assign(l.components.size(), false);
  a.name = "id";
  return a;
}

GlueLabels apply_glue_aut(const GluedRootLattice& l, const GlueAut& aut,
                          const GlueLabels& v) {
  check_shape(l, aut);
  if (v.size() != l.components.size())
    throw std::invalid_argument("apply_glue_aut: arity mismatch");
  GlueLabels w(v.size());
  for (size_t i = 0; i < v.size(); ++i) w[aut.perm[i]] = v[i];
  for (size_t i = 0; i < w.size(); ++i)
    if (aut.flip[i]) w[i] = flip_label(l.components[i], w[i]);
  return w;
}

std::vector<size_t> coordinate_permutation(const GluedRootLattice& l, const GlueAut& aut) {
  check_shape(l, aut);
  std::vector<size_t> p(l.total_rank);
  for (size_t c = 0; c < l.components.size(); ++c) {
    size_t dst = aut.perm[c];
    std::vector<size_t> fp = aut.flip[dst]
                                 ? flip_perm(l.components[dst])
                                 : std::vector<size_t>();
    for (size_t i = 0; i < l.components[c].rank; ++i) {
      size_t local = fp.empty() ? i : fp[i];
      p[l.offsets[c] + i] = l.offsets[dst] + local;
    }
  }
  return p;
}

GlueAut compose(const GluedRootLattice& l, const GlueAut& f, const GlueAut& g) {
  // result = f after g
  check_shape(l, f);
  check_shape(l, g);
  GlueAut r;
  size_t k = l.components.size();
  r.perm.resize(k);
  r.flip.assign(k, false);
  for (size_t i = 0; i < k; ++i) r.perm[i] = f.perm[g.perm[i]];
  // flip in final slot j: g's flip at slot f^{-1}(j) composed with f's at j
  for (size_t j = 0; j < k; ++j) {
    size_t mid = 0;
    for (size_t t = 0; t < k; ++t)
      if (f.perm[t] == j) { mid = t; break; }
    bool gf = g.flip[mid];
    r.flip[j] = gf != f.flip[j];
  }
  r.name = f.name + "*" + g.name;
  return r;
}

bool is_glue_automorphism(const GluedRootLattice& l, const GlueAut& aut) {
  check_shape(l, aut);
  for (const auto& v : l.glue_code)
    if (!l.code_contains(apply_glue_aut(l, aut, v))) return false;
  return true;
}

GlueAut d64_aut_from_s4(const std::vector<size_t>& perm) {
  if (perm.size() != 4) throw std::invalid_argument("d64_aut_from_s4: need 4 entries");
  // parity by counting inversions
  int inv = 0;
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = i + 1; j < 4; ++j)
      if (perm[i] > perm[j]) ++inv;
  GlueAut a;
  a.perm = perm;
  a.flip.assign(4, inv % 2 == 1);
  a.name = "s4";
  return a;
}

Embedding make_embedding(const GluedRootLattice& l, const IntMat& images,
                         std::string name) {
  if (images.rows != 6 || images.cols != l.total_rank)
    throw std::invalid_argument("embedding: need 6 image rows in lattice coordinates");
  // Gram must be the A5 chain plus an orthogonal A1, all roots of norm -2.
  RatMat g = RatMat(images) * RatMat(l.gram) * RatMat(images).transposed();
  for (size_t i = 0; i < 6; ++i)
    for (size_t j = 0; j < 6; ++j) {
      Rat expect = 0;
      if (i == j) expect = -2;
      else if (i < 5 && j < 5 && (i + 1 == j || j + 1 == i)) expect = 1;
      if (g(i, j) != expect)
        throw std::invalid_argument("embedding images do not span A5+A1: " + name);
    }
  // primitivity: all elementary divisors of the image matrix are 1
  SnfResult s = snf(images);
  for (const Int& d : s.diag)
    if (d != 1) throw std::invalid_argument("embedding not primitive: " + name);
  return Embedding{&l, images, std::move(name)};
}

namespace {

IntMat apply_coord_perm(const std::vector<size_t>& p, const IntMat& m) {
  IntMat out(m.rows, m.cols);
  for (size_t i = 0; i < m.rows; ++i)
    for (size_t j = 0; j < m.cols; ++j) out(i, p[j]) = m(i, j);
  return out;
}

}  // namespace

bool embedding_orbit_equivalent(const Embedding& e1, const Embedding& e2,
                                const GluedRootLattice& l,
                                const std::vector<GlueAut>& auts) {
  if (e1.lattice != &l || e2.lattice != &l)
    throw std::invalid_argument("orbit test: embeddings of a different lattice");
  IntMat target = hnf(e2.images).h;
  // generate the group of coordinate permutations
  std::set<std::vector<size_t>> group;
  std::vector<std::vector<size_t>> frontier;
  std::vector<size_t> id(l.total_rank);
  for (size_t i = 0; i < id.size(); ++i) id[i] = i;
  group.insert(id);
  frontier.push_back(id);
  std::vector<std::vector<size_t>> gens;
  for (const auto& a : auts) {
    if (!is_glue_automorphism(l, a))
      throw std::invalid_argument("orbit test: generator is not a glue automorphism");
    gens.push_back(coordinate_permutation(l, a));
  }
  while (!frontier.empty()) {
    auto cur = frontier.back();
    frontier.pop_back();
    for (const auto& g : gens) {
      std::vector<size_t> nxt(cur.size());
      for (size_t i = 0; i < cur.size(); ++i) nxt[i] = g[cur[i]];
      if (group.insert(nxt).second) frontier.push_back(nxt);
    }
    if (group.size() > 10000) throw std::runtime_error("orbit test: group too large");
  }
  for (const auto& p : group)
    if (hnf(apply_coord_perm(p, e1.images)).h == target) return true;
  return false;
}

}  // namespace mwlforge
