#pragma once
#include "mwlforge/matrix.hpp"

namespace mwlforge {

// Exact short-vector enumeration for positive-definite rational Gram
// matrices, Fincke-Pohst style with a rational LDL^T decomposition. All
// interval bounds are computed with exact integer square roots, so the
// enumeration is complete.

// All x in Z^n (excluding 0 when offset is zero) with Q(x + offset) <= bound,
// Q the form of `gram`. Pass an empty offset for the homogeneous problem.
std::vector<IntVec> enumerate_short(const RatMat& gram, const Rat& bound,
                                    const RatVec& offset = {});

// Minimal value of Q(x + offset) over x in Z^n, together with the list of
// minimizers; for offset 0 the zero vector is excluded. `seed` must be an
// attained value (used as the initial search radius).
struct CosetMinimum {
  Rat value;
  std::vector<IntVec> argmins;
};
CosetMinimum coset_minimum(const RatMat& gram, const RatVec& offset, const Rat& seed);

// Exact LLL reduction (delta = 3/4) of a positive-definite Gram matrix.
// Returns unimodular U with U * gram * U^T reduced.
struct LllResult {
  IntMat u;
  RatMat reduced;
};
LllResult lll_reduce(const RatMat& gram);

}  // namespace mwlforge
