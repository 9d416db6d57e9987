#include "mwlforge/rootlat.hpp"

namespace mwlforge {

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::D: return "D";
    case Family::E: return "E";
  }
  throw std::logic_error("bad family");
}

namespace {

std::vector<std::pair<size_t, size_t>> edges(Family f, size_t n) {
  std::vector<std::pair<size_t, size_t>> e;
  switch (f) {
    case Family::A:
      for (size_t i = 1; i < n; ++i) e.push_back({i, i + 1});
      break;
    case Family::D:
      for (size_t i = 1; i + 2 < n; ++i) e.push_back({i, i + 1});
      e.push_back({n - 2, n - 1});
      e.push_back({n - 2, n});
      break;
    case Family::E:
      for (size_t i = 1; i + 1 < n; ++i) e.push_back({i, i + 1});
      e.push_back({3, n});
      break;
  }
  return e;
}

}  // namespace

RootLattice build_root_lattice(Family family, size_t rank) {
  bool ok = (family == Family::A && rank >= 1) || (family == Family::D && rank >= 4) ||
            (family == Family::E && rank >= 6 && rank <= 8);
  if (!ok) throw std::invalid_argument("build_root_lattice: invalid (family, rank)");
  RootLattice l{family, rank, IntMat(rank, rank)};
  for (size_t i = 0; i < rank; ++i) l.gram(i, i) = -2;
  for (auto [i, j] : edges(family, rank)) {
    l.gram(i - 1, j - 1) = 1;
    l.gram(j - 1, i - 1) = 1;
  }
  return l;
}

size_t RootLattice::disc_order() const {
  switch (family) {
    case Family::A: return rank + 1;
    case Family::D: return 4;
    case Family::E: return rank == 6 ? 3 : (rank == 7 ? 2 : 1);
  }
  throw std::logic_error("bad family");
}

int RootLattice::disc_add(int x, int y) const {
  size_t ord = disc_order();
  if (x < 0 || y < 0 || size_t(x) >= ord || size_t(y) >= ord)
    throw std::invalid_argument("disc_add: label out of range");
  if (family == Family::D && rank % 2 == 0) {
    // Klein group: [1]+[3]=[2] and every class has order 2
    if (x == 0) return y;
    if (y == 0) return x;
    if (x == y) return 0;
    return 6 - x - y;
  }
  if (family == Family::D) return (x + y) % 4;  // Z/4, [1] generates
  return int((x + y) % ord);
}

int RootLattice::disc_neg(int x) const {
  size_t ord = disc_order();
  if (x < 0 || size_t(x) >= ord) throw std::invalid_argument("disc_neg: label out of range");
  if (family == Family::D && rank % 2 == 0) return x;
  if (family == Family::D) return (4 - x) % 4;
  return int((ord - size_t(x)) % ord);
}

RatMat RootLattice::dual_gram() const { return inverse(RatMat(gram)); }

RatVec RootLattice::dual_basis_vector(size_t j) const {
  if (j < 1 || j > rank) throw std::invalid_argument("dual_basis_vector: index out of range");
  RatMat gi = inverse(RatMat(gram));
  RatVec v(rank);
  for (size_t i = 0; i < rank; ++i) v[i] = gi(i, j - 1);
  return v;
}

namespace {

RatVec negated(RatVec v) {
  for (auto& x : v) x = -x;
  return v;
}

}  // namespace

RatVec RootLattice::disc_rep(int label) const {
  size_t ord = disc_order();
  if (label < 0 || size_t(label) >= ord)
    throw std::invalid_argument("disc_rep: label out of range");
  if (label == 0) return RatVec(rank, Rat(0));
  switch (family) {
    case Family::A:
      // class j is represented by minus the j-th dual basis vector: the
      // minimal vector j*alpha - (j-1)a1 - ... - a_{j-1}
      return negated(dual_basis_vector(size_t(label)));
    case Family::D:
      // [1], [2], [3] are the duals of d_n, d_1, d_{n-1}
      if (label == 1) return negated(dual_basis_vector(rank));
      if (label == 2) return negated(dual_basis_vector(1));
      return negated(dual_basis_vector(rank - 1));
    case Family::E: {
      if (rank == 8) throw std::invalid_argument("disc_rep: E8 has trivial discriminant");
      RatVec r1 = negated(dual_basis_vector(1));
      if (label == 1) return r1;
      // E6 label 2 = inverse class, represented by the mirror-end dual
      return negated(dual_basis_vector(rank - 1));
    }
  }
  throw std::logic_error("bad family");
}

Rat RootLattice::pair(const RatVec& x, const RatVec& y) const {
  if (x.size() != rank || y.size() != rank)
    throw std::invalid_argument("pair: dimension mismatch");
  return dot(x, RatMat(gram) * y);
}

int RootLattice::disc_label_of(const RatVec& x) const {
  if (x.size() != rank) throw std::invalid_argument("disc_label_of: dimension mismatch");
  // membership in the dual: integral pairing with every simple root
  RatVec pr = RatMat(gram) * x;
  if (!is_integral(pr)) throw std::invalid_argument("disc_label_of: not a dual vector");
  for (int label = 0; size_t(label) < disc_order(); ++label) {
    RatVec rep = disc_rep(label);
    bool integral = true;
    for (size_t i = 0; i < rank && integral; ++i) integral = is_integral(x[i] - rep[i]);
    if (integral) return label;
  }
  throw std::logic_error("disc_label_of: no class matched");
}

DiscClass glue_class(const RootLattice& lattice, int label) {
  return DiscClass{&lattice, label, lattice.disc_rep(label)};
}

}  // namespace mwlforge
