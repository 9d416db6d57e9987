#pragma once
#include "mwlforge/matrix.hpp"

namespace mwlforge {

// Smith normal form U*A*V = diag(d1,...,dk) with d1 | d2 | ... and U, V
// unimodular. Diagonal entries are nonnegative; zeros trail.
struct SnfResult {
  IntVec diag;
  IntMat u, v;        // transforms
  IntMat uinv, vinv;  // their exact inverses, tracked during elimination
};

SnfResult snf(const IntMat& a);

// Row-style Hermite normal form H = U*A with U unimodular: row echelon,
// positive pivots, entries above each pivot reduced into [0, pivot).
struct HnfResult {
  IntMat h, u;
  size_t rank = 0;
};

HnfResult hnf(const IntMat& a);

// Basis of {x in Z^n : a * x^T = 0}, rows in Hermite-reduced form. The basis
// spans the full kernel lattice (it is saturated).
IntMat integer_kernel(const IntMat& a);

// Basis of (Q-span of the rows of `sub`) intersected with Z^ambient.
IntMat saturate(const IntMat& sub, size_t ambient);

// One integer solution of a*x = b, or nullopt if none exists.
std::optional<IntVec> solve_integer(const IntMat& a, const IntVec& b);

// Rows of `sub` rewritten in terms of the rows of `basis` (exact integer
// coordinates); throws if a row is not in the integer row span.
IntMat coords_in_basis(const IntMat& sub, const IntMat& basis);

// Elementary divisors > 1 of the quotient (Z-span of big) / (Z-span of small),
// both given by basis rows in the same ambient coordinates.
IntVec quotient_invariants(const IntMat& small, const IntMat& big);

}  // namespace mwlforge
