#pragma once
#include <functional>

#include "mwlforge/rootlat.hpp"
#include "mwlforge/snf.hpp"

namespace mwlforge {

using GlueLabels = std::vector<int>;

// Root lattice sum glued by a code of discriminant classes. The glue code is
// verified to be a group with pairwise integral (and even) inner products;
// `unimodular` records whether |code|^2 equals |det| of the root part.
struct GluedRootLattice {
  std::vector<RootLattice> components;
  std::vector<size_t> offsets;  // first coordinate of each component block
  size_t total_rank = 0;
  std::vector<GlueLabels> glue_code;
  std::string name;
  bool unimodular = false;
  IntMat gram;  // block diagonal, total_rank x total_rank

  size_t component_of(size_t coord) const;

  GlueLabels add(const GlueLabels& x, const GlueLabels& y) const;
  GlueLabels neg(const GlueLabels& x) const;
  bool code_contains(const GlueLabels& x) const;

  // Canonical rational representative: concatenation of the per-component
  // standard representatives.
  RatVec glue_rep(const GlueLabels& labels) const;

  // Per-component discriminant classes of a vector of the dual lattice.
  GlueLabels labels_of(const RatVec& x) const;

  Rat pair(const RatVec& x, const RatVec& y) const;

  // Basis of the glued lattice: total_rank rows, rational entries in
  // simple-root coordinates, in Hermite form with respect to the scaled
  // integer coordinates.
  RatMat lattice_basis() const;
};

GluedRootLattice make_glued(std::vector<RootLattice> components,
                            std::vector<GlueLabels> generators, std::string name,
                            bool require_unimodular);

// N(D6^4): the 16 glue vectors, the even permutations of [0,1,2,3] together
// with their group closure.
GluedRootLattice make_niemeier_d64();

// N(A9^2 D6): glue code generated by [2,4,0], [5,0,1], [0,5,3].
GluedRootLattice make_niemeier_a92d6();

// Automorphism acting on components: contents of component i move to
// component perm[i], then the diagram flip is applied in every slot whose
// flag is set.(The flip flags refer to final slots, so e.g. the lattice map
// gamma1*h has perm = swap and the flip on slot 0.)
struct GlueAut {
  std::vector<size_t> perm;
  std::vector<bool> flip;
  std::string name;
};

GlueAut identity_aut(const GluedRootLattice& l);
GlueAut compose(const GluedRootLattice& l, const GlueAut& f, const GlueAut& g);

GlueLabels apply_glue_aut(const GluedRootLattice& l, const GlueAut& aut,
                          const GlueLabels& v);

// Coordinate realization: a permutation p of the simple-root coordinates,
// x -> x with coordinates rearranged (image[i] = p[i]).
std::vector<size_t> coordinate_permutation(const GluedRootLattice& l, const GlueAut& aut);

bool is_glue_automorphism(const GluedRootLattice& l, const GlueAut& aut);

// The map sigma -> sigma o g^{e(sigma)} for S4 on N(D6^4): flips on all
// components when the permutation is odd.
GlueAut d64_aut_from_s4(const std::vector<size_t>& perm);

// Primitive embedding of A5+A1 given by the images of the six generators
// (five chain roots, then the orthogonal root) in global simple-root
// coordinates. Validated on construction.
struct Embedding {
  const GluedRootLattice* lattice;
  IntMat images;  // 6 x total_rank
  std::string name;
};

Embedding make_embedding(const GluedRootLattice& l, const IntMat& images,
                         std::string name);

// True iff some element of the group generated by `auts` maps the image
// lattice of e1 onto the image lattice of e2.
bool embedding_orbit_equivalent(const Embedding& e1, const Embedding& e2,
                                const GluedRootLattice& l,
                                const std::vector<GlueAut>& auts);

}  // namespace mwlforge
