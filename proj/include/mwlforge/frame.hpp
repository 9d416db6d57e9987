#pragma once
#include "mwlforge/niemeier.hpp"
#include "mwlforge/shortvec.hpp"

namespace mwlforge {

struct RootSystemComponent {
  Family family = Family::A;
  size_t rank = 0;
  IntMat simple_roots;  // rank x ambient, canonical chain/fork order
  size_t root_count = 0;

  std::string name() const { return family_name(family) + std::to_string(rank); }
};

// All norm -2 vectors of the negative-definite lattice spanned by the rows of
// `basis` (rational ambient coordinates, Gram `ambient_gram`).
std::vector<RatVec> lattice_roots(const RatMat& basis, const IntMat& ambient_gram);

// Decomposition of a finite root system into irreducible ADE components with
// canonically ordered simple roots. Components are returned sorted by the
// smallest ambient coordinate they touch; `sorted_names` of a frame reports
// them in (family, rank) order instead.
std::vector<RootSystemComponent> classify_root_system(const std::vector<IntVec>& roots,
                                                      const IntMat& ambient_gram);

struct CosetGenerator {
  RatVec vec;   // a W-vector generating the cyclic factor
  Int order;    // order in W/N
  GlueLabels labels;
};

struct Frame {
  const GluedRootLattice* lattice = nullptr;
  Embedding embedding;

  RatMat l_basis;       // 24 x 24
  RatMat w_basis;       // 18 x 24
  IntMat n_basis;       // 18 x 24, integer simple-root coordinates
  Rat det_w;            // Gram determinants (positive here: even ranks)
  Int det_n;

  std::vector<RootSystemComponent> components;  // positional order
  IntMat w_root_basis;                          // stacked root lattice basis
  std::vector<std::string> root_type;           // names sorted by (family, rank)
  IntVec torsion;                               // invariants of Wbar_root/W_root
  size_t mw_rank = 0;

  IntVec wn_invariants;                  // invariants of W/N
  std::vector<CosetGenerator> wn_gens;   // generators of the nontrivial factors

  Rat pair(const RatVec& x, const RatVec& y) const;
  // orthogonal projection away from the span of W_root
  RatVec project_off_roots(const RatVec& x) const;
  // positive-definite Mordell-Weil pairing of classes given by W-vectors
  Rat mw_pairing(const RatVec& x, const RatVec& y) const;
  RatMat mw_gram(const std::vector<RatVec>& reps) const;

  bool in_l(const RatVec& x) const;
  bool in_w(const RatVec& x) const;
  bool in_span_w_root(const RatVec& x) const;

  Int torsion_order() const;
  // disc NS(X) = (-1)^rank disc(T(X)) disc(MWL) / |tors|^2, with
  // T(X) = U + W_root
  Rat disc_ns(const RatMat& mwgram) const;
};

Frame compute_frame(const Embedding& e);

// Finite abelian invariants of Wbar_root/W_root.
IntVec torsion_group(const Frame& f);

// Built-in embeddings of the paper's two Niemeier lattices. For N(D6^4) the
// A5 chain sits in the first D6 (i1 = (d5,d4,d3,d2,d1), i2 = (d6,...)) and
// the A1 is d6 resp. d5 of the second. For N(A9^2 D6) the A1 is a root of an
// A9 copy and the A5 chain sits in the D6.
Embedding d64_embedding(const GluedRootLattice& d64, int which);
Embedding a92d6_embedding(const GluedRootLattice& l, int which);
Embedding a92d6_embedding_at(const GluedRootLattice& l, size_t a9_component,
                             size_t a1_root_index, int which_d6);

}  // namespace mwlforge
