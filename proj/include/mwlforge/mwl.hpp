#pragma once
#include "mwlforge/frame.hpp"

namespace mwlforge {

// Kodaira fiber of an elliptic surface. Only types that can carry reducible
// fibers of our surfaces appear on the lattice side; the Weierstrass side
// also uses the additive types I0*, II, III, IV through `weier`.
struct FiberSpec {
  enum class Kind { In, InStar, IVStar, IIIStar, IIStar };
  Kind kind = Kind::In;
  size_t n = 0;  // the n of I_n / I_n*
  std::string position;

  std::string name() const;
  size_t component_count() const;
  size_t euler_number() const;
};

FiberSpec parse_fiber_type(const std::string& type, std::string position = "");

// A_{n-1} -> I_n, D_{n+4} -> I_n*, E6 -> IV*, E7 -> III*, E8 -> II*
FiberSpec fiber_for_ade(Family family, size_t rank, std::string position = "");

// Table of local height-pairing corrections. Component slots:
//   I_n:   0..n-1, cyclic, 0 meets the zero section
//   I_n*:  0 = zero, 1 = near, 2 and 3 = the far components
//   IV*:   0, 1, 2 the discriminant classes; III*: 0, 1; II*: 0 only
Rat contribution(const FiberSpec& fiber, int i, int j);

struct SectionSpec {
  std::string name;
  Int k = 0;              // V = kF + O + omega
  GlueLabels labels;      // class in W/N (all zero for sections inside N)
  RatVec rep;             // chosen representative omega
  std::vector<int> meets; // component slot per fiber
  Int meets_zero = 0;     // intersection with the zero section
  Int order = 0;          // order of the class in W/N; 0 marks omega in N
  bool torsion = false;
};

// Shioda's formulas. `pq` is the intersection number of the two sections.
Rat shioda_height(const SectionSpec& p, const std::vector<FiberSpec>& fibers);
Rat shioda_pairing(const SectionSpec& p, const SectionSpec& q,
                   const std::vector<FiberSpec>& fibers, const Int& pq);

// A lattice-side elliptic fibration: the frame together with its reducible
// fibers and the sections synthesized from the classes of W/N.
struct LatticeFibration {
  Frame frame;
  std::vector<FiberSpec> fibers;      // one per frame root component
  std::vector<SectionSpec> sections;  // zero class first, then coset order

  const SectionSpec* find(const GlueLabels& labels) const;
};

// Chooses in every class of W/N a representative that meets each reducible
// fiber in a single component (all fiber projections of minimal length in
// their local classes), with deterministic tie-breaking.
LatticeFibration sections_from_cosets(const Frame& frame);

// Canonical minimal representative of omega0 + (lattice spanned by the rows
// of `translations`), requiring minimal local projections on every frame
// component; used for sections inside N as well.
SectionSpec section_from_vector(const LatticeFibration& fib, const RatVec& omega,
                                std::string name);

// Integer coordinates of `target` in the basis, via the pairing system;
// throws when the solution is not integral.
IntVec express_in_basis(const RatMat& basis_gram, const RatVec& pairings);

// Equivalence of positive-definite binary quadratic forms over Z:
// a unimodular M with M g1 M^T = g2, or a proof that none exists. The proof
// is by complete enumeration of the finitely many vectors representing the
// diagonal values; when a diagonal value of g2 is not represented by g1 at
// all, a modular certificate is attached when one exists.
struct QformResult {
  std::optional<IntMat> transform;
  // set when inequivalence was established by non-representability
  std::optional<Rat> unrepresented;
  std::optional<Int> obstruction_modulus;
};
QformResult qform_equivalent(const RatMat& g1, const RatMat& g2, long search_bound = 50);

}  // namespace mwlforge
