#pragma once
#include <string>

#include "mwlforge/matrix.hpp"

namespace mwlforge {

enum class Family { A, D, E };

std::string family_name(Family f);

// Irreducible root lattice in the sign convention <r,r> = -2 for roots:
// the Gram matrix has -2 on the diagonal and +1 for adjacent simple roots.
//
// Node numbering: A_n is the chain a1-...-an. D_n is the chain d1-...-d(n-2)
// with the fork d(n-1), dn attached to d(n-2). E_n uses the chain
// e1-...-e(n-1) with en attached to e3.
struct RootLattice {
  Family family;
  size_t rank;
  IntMat gram;

  std::string name() const { return family_name(family) + std::to_string(rank); }

  // order of the discriminant group L*/L
  size_t disc_order() const;

  // Addition and negation of discriminant-class labels.
  int disc_add(int x, int y) const;
  int disc_neg(int x) const;

  // The standard minimal representative of a class, in simple-root
  // coordinates. For A_n the class j is represented by the j-th dual basis
  // vector; for D_n classes [1],[2],[3] by the duals of d_n, d_1, d_(n-1).
  RatVec disc_rep(int label) const;

  // Gram matrix of the dual basis: the inverse of `gram`, negative definite.
  RatMat dual_gram() const;

  // Dual basis vector: the unique v with <v, a_j> = -1 and <v, a_i> = 0
  // otherwise, i.e. column j of -gram^{-1}. 1-based j.
  RatVec dual_basis_vector(size_t j) const;

  // Class label of a dual vector (simple-root coordinates with denominators
  // dividing the discriminant order). Throws if x is not in the dual lattice.
  int disc_label_of(const RatVec& x) const;

  Rat pair(const RatVec& x, const RatVec& y) const;
};

// Valid pairs: A n>=1, D n>=4, E n in {6,7,8}.
RootLattice build_root_lattice(Family family, size_t rank);

struct DiscClass {
  const RootLattice* lattice;
  int label;
  RatVec representative;

  Rat self_pairing() const { return lattice->pair(representative, representative); }
};

DiscClass glue_class(const RootLattice& lattice, int label);

}  // namespace mwlforge
