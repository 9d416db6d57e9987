#include "mwlforge/frame.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace mwlforge {

namespace {

Rat pair_with(const IntMat& gram, const RatVec& x, const RatVec& y) {
  return dot(x, RatMat(gram) * y);
}

bool lex_less(const IntVec& a, const IntVec& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

// generic functional with strictly separated weights; exact since root
// coordinates are far smaller than the base
Int functional(const IntVec& v) {
  Int t = 1, f = 0;
  for (const auto& c : v) {
    f += c * t;
    t *= 1000000;
  }
  return f;
}

IntVec vec_sub(const IntVec& a, const IntVec& b) {
  IntVec c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

size_t min_support(const IntMat& rows) {
  for (size_t j = 0; j < rows.cols; ++j)
    for (size_t i = 0; i < rows.rows; ++i)
      if (rows(i, j) != 0) return j;
  return rows.cols;
}

}  // namespace

std::vector<RatVec> lattice_roots(const RatMat& basis, const IntMat& ambient_gram) {
  size_t r = basis.rows;
  RatMat g = basis * RatMat(ambient_gram) * basis.transposed();
  RatMat neg(r, r);
  for (size_t i = 0; i < r * r; ++i) neg.a[i] = -g.a[i];
  // ldl inside enumerate_short rejects indefinite input; LLL keeps the
  // enumeration tree small
  LllResult red = lll_reduce(neg);
  RatMat rbasis = RatMat(red.u) * basis;
  auto coords = enumerate_short(red.reduced, Rat(2));
  std::vector<RatVec> out;
  for (const auto& c : coords) {
    RatVec cc = rat_vec(c);
    Rat norm = dot(cc, red.reduced * cc);
    if (norm != 2) continue;
    RatVec amb(basis.cols);
    for (size_t i = 0; i < r; ++i)
      for (size_t j = 0; j < basis.cols; ++j) amb[j] += cc[i] * rbasis(i, j);
    out.push_back(std::move(amb));
  }
  return out;
}

std::vector<RootSystemComponent> classify_root_system(const std::vector<IntVec>& roots,
                                                      const IntMat& ambient_gram) {
  if (roots.empty()) return {};
  size_t n = roots.size();
  size_t dim = roots[0].size();
  // cache G*root for O(dim) pairings
  std::vector<IntVec> gr(n, IntVec(dim));
  for (size_t i = 0; i < n; ++i)
    for (size_t r = 0; r < dim; ++r)
      for (size_t c = 0; c < dim; ++c) gr[i][r] += ambient_gram(r, c) * roots[i][c];
  auto pr_idx = [&](size_t i, size_t j) {
    Int s = 0;
    for (size_t k = 0; k < dim; ++k) s += roots[i][k] * gr[j][k];
    return s;
  };
  for (size_t i = 0; i < n; ++i)
    if (pr_idx(i, i) != -2) throw std::invalid_argument("classify_root_system: not a root");

  // closure under reflection (root system check)
  std::set<IntVec> root_set(roots.begin(), roots.end());
  for (size_t ia = 0; ia < n; ++ia)
    for (size_t ib = 0; ib < n; ++ib) {
      // s_a(b) = b - 2<a,b>/<a,a> a = b + <a,b> a
      Int p = pr_idx(ia, ib);
      IntVec img(dim);
      for (size_t i = 0; i < dim; ++i) img[i] = roots[ib][i] + p * roots[ia][i];
      if (!root_set.count(img))
        throw std::invalid_argument("classify_root_system: not closed under reflection");
    }

  auto pr = [&](const IntVec& x, const IntVec& y) {
    return pair_with(ambient_gram, rat_vec(x), rat_vec(y));
  };

  // split into orthogonal components (union-find)
  std::vector<size_t> parent(n);
  for (size_t i = 0; i < n; ++i) parent[i] = i;
  std::function<size_t(size_t)> find = [&](size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (pr_idx(i, j) != 0) parent[find(i)] = find(j);
  std::map<size_t, std::vector<IntVec>> groups;
  for (size_t i = 0; i < n; ++i) groups[find(i)].push_back(roots[i]);

  std::vector<RootSystemComponent> comps;
  for (auto& [key, grp] : groups) {
    // positive roots and simple roots
    std::set<IntVec> positive;
    for (const auto& r : grp)
      if (functional(r) > 0) positive.insert(r);
    std::vector<IntVec> simple;
    for (const auto& r : positive) {
      bool decomposable = false;
      for (const auto& p : positive) {
        if (p == r) continue;
        if (positive.count(vec_sub(r, p))) { decomposable = true; break; }
      }
      if (!decomposable) simple.push_back(r);
    }
    size_t rank = simple.size();
    size_t count = grp.size();
    Family fam;
    if (count == size_t(rank * (rank + 1))) fam = Family::A;
    else if (rank >= 4 && count == 2 * rank * (rank - 1)) fam = Family::D;
    else if ((rank == 6 && count == 72) || (rank == 7 && count == 126) ||
             (rank == 8 && count == 240)) fam = Family::E;
    else throw std::invalid_argument("classify_root_system: unrecognized component");

    // order the simple roots canonically
    std::vector<std::vector<size_t>> adj(rank);
    for (size_t i = 0; i < rank; ++i)
      for (size_t j = 0; j < rank; ++j)
        if (i != j && pr(simple[i], simple[j]) != 0) adj[i].push_back(j);
    std::vector<IntVec> ordered;
    auto walk = [&](size_t from, size_t start) {
      // path away from `from` starting at `start`
      std::vector<size_t> path{start};
      size_t prev = from, cur = start;
      for (;;) {
        size_t nxt = rank;
        for (size_t a : adj[cur])
          if (a != prev) { nxt = a; break; }
        if (nxt == rank) break;
        path.push_back(nxt);
        prev = cur;
        cur = nxt;
      }
      return path;
    };
    if (fam == Family::A) {
      if (rank == 1) {
        ordered.push_back(simple[0]);
      } else {
        std::vector<size_t> ends;
        for (size_t i = 0; i < rank; ++i)
          if (adj[i].size() == 1) ends.push_back(i);
        size_t b1 = ends[0];
        for (size_t e : ends)
          if (lex_less(simple[b1], simple[e])) b1 = e;
        size_t second = adj[b1][0];
        ordered.push_back(simple[b1]);
        for (size_t idx : walk(b1, second)) ordered.push_back(simple[idx]);
      }
    } else {
      size_t z = rank;
      for (size_t i = 0; i < rank; ++i)
        if (adj[i].size() == 3) z = i;
      if (z == rank) throw std::logic_error("classify: no trivalent node in D/E component");
      std::vector<std::vector<size_t>> branches;
      for (size_t a : adj[z]) branches.push_back(walk(z, a));
      std::sort(branches.begin(), branches.end(), [&](const auto& x, const auto& y) {
        if (x.size() != y.size()) return x.size() > y.size();
        return lex_less(simple[y[0]], simple[x[0]]);
      });
      if (fam == Family::D) {
        // chain d1..d_{n-2} ends at the trivalent node, then the two forks
        const auto& tail = branches[0];
        for (size_t i = tail.size(); i-- > 0;) ordered.push_back(simple[tail[i]]);
        ordered.push_back(simple[z]);
        ordered.push_back(simple[branches[1][0]]);
        ordered.push_back(simple[branches[2][0]]);
      } else {
        // e1..e_{n-1} along the two long branches, then the short node at e3
        const auto& head = branches[1];  // length-2 side: e1, e2
        const auto& tail = branches[0];  // long side: e4, ...
        if (head.size() != 2 || branches[2].size() != 1)
          throw std::logic_error("classify: unexpected E-shape");
        ordered.push_back(simple[head[1]]);
        ordered.push_back(simple[head[0]]);
        ordered.push_back(simple[z]);
        for (size_t idx : tail) ordered.push_back(simple[idx]);
        ordered.push_back(simple[branches[2][0]]);
      }
    }
    RootSystemComponent comp;
    comp.family = fam;
    comp.rank = rank;
    comp.root_count = count;
    comp.simple_roots = IntMat(rank, roots[0].size());
    for (size_t i = 0; i < rank; ++i)
      for (size_t j = 0; j < roots[0].size(); ++j) comp.simple_roots(i, j) = ordered[i][j];
    comps.push_back(std::move(comp));
  }
  std::sort(comps.begin(), comps.end(), [](const auto& x, const auto& y) {
    return min_support(x.simple_roots) < min_support(y.simple_roots);
  });
  return comps;
}

Rat Frame::pair(const RatVec& x, const RatVec& y) const {
  return pair_with(lattice->gram, x, y);
}

RatVec Frame::project_off_roots(const RatVec& x) const {
  if (w_root_basis.rows == 0) return x;
  RatMat r(w_root_basis);
  RatMat g = r * RatMat(lattice->gram) * r.transposed();
  RatVec rhs = r * (RatMat(lattice->gram) * x);
  auto c = solve_rational(g, rhs);
  if (!c) throw std::logic_error("project_off_roots: degenerate root gram");
  RatVec p(x.size());
  for (size_t i = 0; i < r.rows; ++i)
    for (size_t j = 0; j < x.size(); ++j) p[j] += (*c)[i] * r(i, j);
  RatVec out(x.size());
  for (size_t j = 0; j < x.size(); ++j) out[j] = x[j] - p[j];
  return out;
}

Rat Frame::mw_pairing(const RatVec& x, const RatVec& y) const {
  return -pair(x, project_off_roots(y));
}

RatMat Frame::mw_gram(const std::vector<RatVec>& reps) const {
  std::vector<RatVec> proj;
  proj.reserve(reps.size());
  for (const auto& r : reps) proj.push_back(project_off_roots(r));
  RatMat g(reps.size(), reps.size());
  for (size_t i = 0; i < reps.size(); ++i)
    for (size_t j = 0; j < reps.size(); ++j) g(i, j) = -pair(reps[i], proj[j]);
  if (det(g) == 0)
    throw std::invalid_argument("mw_gram: representatives dependent modulo roots");
  return g;
}

namespace {

bool integral_coords(const RatMat& basis_t, const RatVec& x) {
  auto c = solve_rational(basis_t, x);
  if (!c) return false;
  return is_integral(*c);
}

}  // namespace

bool Frame::in_l(const RatVec& x) const { return integral_coords(l_basis.transposed(), x); }

bool Frame::in_w(const RatVec& x) const {
  if (!in_l(x)) return false;
  for (size_t i = 0; i < embedding.images.rows; ++i)
    if (pair(x, rat_vec(embedding.images.row(i))) != 0) return false;
  return true;
}

bool Frame::in_span_w_root(const RatVec& x) const {
  if (w_root_basis.rows == 0) {
    for (const auto& v : x)
      if (v != 0) return false;
    return true;
  }
  RatMat rt = RatMat(w_root_basis).transposed();
  return solve_rational(rt, x).has_value();
}

Int Frame::torsion_order() const {
  Int t = 1;
  for (const auto& d : torsion) t *= d;
  return t;
}

Rat Frame::disc_ns(const RatMat& mwgram) const {
  RatMat r(w_root_basis);
  RatMat g = r * RatMat(lattice->gram) * r.transposed();
  Rat disc_t = -det(g);  // hyperbolic summand contributes -1
  Rat val = disc_t * det(mwgram);
  Rat t2 = rat_of(torsion_order() * torsion_order());
  val /= t2;
  if (mw_rank % 2 == 1) val = -val;
  return val;
}

Frame compute_frame(const Embedding& e) {
  Frame f;
  f.lattice = e.lattice;
  f.embedding = e;
  const auto& lat = *e.lattice;
  size_t n = lat.total_rank;
  f.l_basis = lat.lattice_basis();

  // W: kernel of the pairing of L against the images
  RatMat pw = f.l_basis * RatMat(lat.gram) * RatMat(e.images).transposed();  // n x 6
  IntMat a(e.images.rows, n);
  for (size_t i = 0; i < e.images.rows; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (!is_integral(pw(j, i))) throw std::logic_error("compute_frame: non-integral pairing");
      a(i, j) = pw(j, i).get_num();
    }
  IntMat wcoeff = integer_kernel(a);
  f.w_basis = RatMat(wcoeff) * f.l_basis;

  // N = W intersect L_root: kernel inside integer coordinates
  IntMat ar = e.images * lat.gram;
  f.n_basis = integer_kernel(ar);

  RatMat gw = f.w_basis * RatMat(lat.gram) * f.w_basis.transposed();
  f.det_w = det(gw);
  f.det_n = det(RatMat(f.n_basis) * RatMat(lat.gram) * RatMat(f.n_basis).transposed()).get_num();

  // roots and their classification
  auto roots_rat = lattice_roots(f.w_basis, lat.gram);
  std::vector<IntVec> roots;
  for (const auto& r : roots_rat) {
    if (!is_integral(r)) throw std::logic_error("compute_frame: non-integral root");
    IntVec v(r.size());
    for (size_t i = 0; i < r.size(); ++i) v[i] = r[i].get_num();
    roots.push_back(std::move(v));
  }
  f.components = classify_root_system(roots, lat.gram);
  for (const auto& c : f.components) f.root_type.push_back(c.name());
  std::sort(f.root_type.begin(), f.root_type.end(), [](const auto& x, const auto& y) {
    if (x[0] != y[0]) return x[0] < y[0];
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  });

  IntMat root_stack(roots.size(), n);
  for (size_t i = 0; i < roots.size(); ++i)
    for (size_t j = 0; j < n; ++j) root_stack(i, j) = roots[i][j];
  f.w_root_basis = roots.empty() ? IntMat(0, n) : hnf(root_stack).h;
  size_t root_rank = 0;
  for (size_t i = 0; i < f.w_root_basis.rows; ++i) {
    bool nonzero = false;
    for (size_t j = 0; j < n; ++j)
      if (f.w_root_basis(i, j) != 0) nonzero = true;
    if (nonzero) ++root_rank;
  }
  IntMat trimmed(root_rank, n);
  for (size_t i = 0; i < root_rank; ++i)
    for (size_t j = 0; j < n; ++j) trimmed(i, j) = f.w_root_basis(i, j);
  f.w_root_basis = trimmed;
  f.mw_rank = f.w_basis.rows - root_rank;

  // torsion: Wbar_root/W_root computed in W-coordinates
  f.torsion = torsion_group(f);

  // W/N: rewrite N in L-basis coefficients, then against the W coefficients
  RatMat lb_t = f.l_basis.transposed();
  IntMat n_in_l(f.n_basis.rows, n);
  for (size_t i = 0; i < f.n_basis.rows; ++i) {
    auto c = solve_rational(lb_t, rat_vec(f.n_basis.row(i)));
    if (!c || !is_integral(*c)) throw std::logic_error("compute_frame: N not inside L");
    for (size_t j = 0; j < n; ++j) n_in_l(i, j) = (*c)[j].get_num();
  }
  IntMat m = coords_in_basis(n_in_l, wcoeff);
  SnfResult s = snf(m);
  RatMat wprime = RatMat(s.vinv) * f.w_basis;
  for (size_t i = 0; i < s.diag.size(); ++i) {
    if (s.diag[i] <= 1) continue;
    f.wn_invariants.push_back(s.diag[i]);
    CosetGenerator g;
    g.vec = wprime.row(i);
    g.order = s.diag[i];
    g.labels = lat.labels_of(g.vec);
    f.wn_gens.push_back(std::move(g));
  }
  return f;
}

IntVec torsion_group(const Frame& f) {
  if (f.w_root_basis.rows == 0) return {};
  // coordinates of the root basis inside W
  RatMat wt = f.w_basis.transposed();
  IntMat c(f.w_root_basis.rows, f.w_basis.rows);
  for (size_t i = 0; i < f.w_root_basis.rows; ++i) {
    auto sol = solve_rational(wt, rat_vec(f.w_root_basis.row(i)));
    if (!sol || !is_integral(*sol)) throw std::logic_error("torsion_group: root not in W");
    for (size_t j = 0; j < f.w_basis.rows; ++j) c(i, j) = (*sol)[j].get_num();
  }
  IntMat sat = saturate(c, f.w_basis.rows);
  return quotient_invariants(c, sat);
}

Embedding d64_embedding(const GluedRootLattice& d64, int which) {
  if (which != 1 && which != 2) throw std::invalid_argument("d64_embedding: which must be 1 or 2");
  IntMat img(6, d64.total_rank);
  // A5 chain in the first D6: (d5,d4,d3,d2,d1) or (d6,d4,d3,d2,d1)
  size_t head = which == 1 ? 4 : 5;
  size_t chain[5] = {head, 3, 2, 1, 0};
  for (size_t i = 0; i < 5; ++i) img(i, chain[i]) = 1;
  // A1 in the second D6: d6 for i1, d5 for i2
  img(5, 6 + (which == 1 ? 5 : 4)) = 1;
  return make_embedding(d64, img, which == 1 ? "i1" : "i2");
}

Embedding a92d6_embedding(const GluedRootLattice& l, int which) {
  return a92d6_embedding_at(l, 0, 1, which);
}

Embedding a92d6_embedding_at(const GluedRootLattice& l, size_t a9_component,
                             size_t a1_root_index, int which_d6) {
  if (which_d6 != 1 && which_d6 != 2)
    throw std::invalid_argument("a92d6_embedding: which must be 1 or 2");
  if (a9_component > 1 || a1_root_index < 1 || a1_root_index > 9)
    throw std::invalid_argument("a92d6_embedding: bad A1 placement");
  IntMat img(6, l.total_rank);
  size_t d6_off = 18;
  size_t head = which_d6 == 1 ? 4 : 5;
  size_t chain[5] = {head, 3, 2, 1, 0};
  for (size_t i = 0; i < 5; ++i) img(i, d6_off + chain[i]) = 1;
  img(5, 9 * a9_component + (a1_root_index - 1)) = 1;
  std::string nm = std::string(which_d6 == 1 ? "i1" : "i2") + ",a" +
                   std::to_string(a1_root_index) + "@A9#" + std::to_string(a9_component + 1);
  return make_embedding(l, img, nm);
}

}  // namespace mwlforge
