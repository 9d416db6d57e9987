#include "mwlforge/mwl.hpp"

#include <algorithm>
#include <map>

namespace mwlforge {

std::string FiberSpec::name() const {
  switch (kind) {
    case Kind::In: return "I" + std::to_string(n);
    case Kind::InStar: return "I" + std::to_string(n) + "*";
    case Kind::IVStar: return "IV*";
    case Kind::IIIStar: return "III*";
    case Kind::IIStar: return "II*";
  }
  throw std::logic_error("bad fiber kind");
}

size_t FiberSpec::component_count() const {
  switch (kind) {
    case Kind::In: return n;
    case Kind::InStar: return n + 5;
    case Kind::IVStar: return 7;
    case Kind::IIIStar: return 8;
    case Kind::IIStar: return 9;
  }
  throw std::logic_error("bad fiber kind");
}

size_t FiberSpec::euler_number() const {
  switch (kind) {
    case Kind::In: return n;
    case Kind::InStar: return n + 6;
    case Kind::IVStar: return 8;
    case Kind::IIIStar: return 9;
    case Kind::IIStar: return 10;
  }
  throw std::logic_error("bad fiber kind");
}

FiberSpec parse_fiber_type(const std::string& type, std::string position) {
  FiberSpec f;
  f.position = std::move(position);
  if (type == "IV*") { f.kind = FiberSpec::Kind::IVStar; return f; }
  if (type == "III*") { f.kind = FiberSpec::Kind::IIIStar; return f; }
  if (type == "II*") { f.kind = FiberSpec::Kind::IIStar; return f; }
  if (type.size() >= 2 && type[0] == 'I') {
    bool star = type.back() == '*';
    std::string num = type.substr(1, type.size() - 1 - (star ? 1 : 0));
    f.kind = star ? FiberSpec::Kind::InStar : FiberSpec::Kind::In;
    f.n = std::stoul(num);
    if (!star && f.n < 1) throw std::invalid_argument("parse_fiber_type: bad I_n");
    return f;
  }
  throw std::invalid_argument("parse_fiber_type: unknown type " + type);
}

FiberSpec fiber_for_ade(Family family, size_t rank, std::string position) {
  FiberSpec f;
  f.position = std::move(position);
  switch (family) {
    case Family::A:
      f.kind = FiberSpec::Kind::In;
      f.n = rank + 1;
      return f;
    case Family::D:
      f.kind = FiberSpec::Kind::InStar;
      f.n = rank - 4;
      return f;
    case Family::E:
      f.kind = rank == 6 ? FiberSpec::Kind::IVStar
                         : (rank == 7 ? FiberSpec::Kind::IIIStar : FiberSpec::Kind::IIStar);
      return f;
  }
  throw std::logic_error("bad family");
}

Rat contribution(const FiberSpec& fiber, int i, int j) {
  auto bad = [&]() {
    return std::invalid_argument("contribution: invalid component pair for " + fiber.name());
  };
  if (i < 0 || j < 0) throw bad();
  if (i > j) std::swap(i, j);
  switch (fiber.kind) {
    case FiberSpec::Kind::In: {
      if (size_t(j) >= fiber.n) throw bad();
      if (i == 0) return Rat(0);
      return rat_of(Int(i) * Int(fiber.n - j), Int(fiber.n));
    }
    case FiberSpec::Kind::InStar: {
      if (j > 3) throw bad();
      if (i == 0) return Rat(0);
      Rat quarter = rat_of(Int(fiber.n), 4);
      if (i == 1 && j == 1) return Rat(1);
      if (i == 1) return rat(1, 2);
      if (i == j) return Rat(1) + quarter;  // same far component
      return rat(1, 2) + quarter;           // the two far components
    }
    case FiberSpec::Kind::IVStar: {
      if (j > 2) throw bad();
      if (i == 0) return Rat(0);
      return i == j ? rat(4, 3) : rat(2, 3);
    }
    case FiberSpec::Kind::IIIStar: {
      if (j > 1) throw bad();
      if (i == 0) return Rat(0);
      return rat(3, 2);
    }
    case FiberSpec::Kind::IIStar: {
      if (j > 0) throw bad();
      return Rat(0);
    }
  }
  throw std::logic_error("bad fiber kind");
}

Rat shioda_height(const SectionSpec& p, const std::vector<FiberSpec>& fibers) {
  if (p.meets.size() != fibers.size())
    throw std::invalid_argument("shioda_height: missing fiber data");
  if (p.k == 0) return Rat(0);  // the zero section itself
  Rat h = 4 + 2 * rat_of(p.meets_zero);
  for (size_t v = 0; v < fibers.size(); ++v)
    h -= contribution(fibers[v], p.meets[v], p.meets[v]);
  return h;
}

Rat shioda_pairing(const SectionSpec& p, const SectionSpec& q,
                   const std::vector<FiberSpec>& fibers, const Int& pq) {
  if (p.meets.size() != fibers.size() || q.meets.size() != fibers.size())
    throw std::invalid_argument("shioda_pairing: missing fiber data");
  if (p.k == 0 || q.k == 0) return Rat(0);
  Rat s = 2 + rat_of(p.meets_zero) + rat_of(q.meets_zero) - rat_of(pq);
  for (size_t v = 0; v < fibers.size(); ++v)
    s -= contribution(fibers[v], p.meets[v], q.meets[v]);
  return s;
}

namespace {

// frame root components lying inside Niemeier component c
std::vector<size_t> summands_in_component(const Frame& f, size_t c) {
  std::vector<size_t> out;
  size_t lo = f.lattice->offsets[c];
  size_t hi = lo + f.lattice->components[c].rank;
  for (size_t i = 0; i < f.components.size(); ++i) {
    bool inside = true;
    const auto& sr = f.components[i].simple_roots;
    for (size_t r = 0; r < sr.rows && inside; ++r)
      for (size_t j = 0; j < sr.cols && inside; ++j)
        if (sr(r, j) != 0 && (j < lo || j >= hi)) inside = false;
    if (inside) out.push_back(i);
  }
  return out;
}

struct SummandData {
  RatMat gram;  // standard ADE gram of the ordered simple roots
  RootLattice abstract;
};

struct SectionContext {
  const Frame* frame;
  std::vector<SummandData> summands;
  std::map<std::pair<size_t, int>, Rat> class_min;  // (summand, label) -> min norm
};

SectionContext make_context(const Frame& f) {
  SectionContext ctx;
  ctx.frame = &f;
  for (const auto& comp : f.components) {
    SummandData d{RatMat(), build_root_lattice(comp.family, comp.rank)};
    RatMat s(comp.simple_roots);
    d.gram = s * RatMat(f.lattice->gram) * s.transposed();
    if (d.gram != RatMat(d.abstract.gram))
      throw std::logic_error("section context: non-standard simple-root gram");
    ctx.summands.push_back(std::move(d));
  }
  return ctx;
}

// coordinates of the orthogonal projection of x into the summand span
RatVec summand_projection_coords(const SectionContext& ctx, size_t idx, const RatVec& x) {
  const auto& comp = ctx.frame->components[idx];
  RatMat s(comp.simple_roots);
  RatVec rhs = s * (RatMat(ctx.frame->lattice->gram) * x);
  auto c = solve_rational(ctx.summands[idx].gram, rhs);
  if (!c) throw std::logic_error("summand projection failed");
  return *c;
}

Rat class_min_norm(SectionContext& ctx, size_t idx, int label) {
  auto key = std::make_pair(idx, label);
  auto it = ctx.class_min.find(key);
  if (it != ctx.class_min.end()) return it->second;
  Rat val = 0;
  if (label != 0) {
    const RatMat& g = ctx.summands[idx].gram;
    RatMat neg(g.rows, g.cols);
    for (size_t i = 0; i < g.a.size(); ++i) neg.a[i] = -g.a[i];
    RatVec rep = ctx.summands[idx].abstract.disc_rep(label);
    Rat seed = -ctx.summands[idx].abstract.pair(rep, rep);
    val = coset_minimum(neg, rep, seed).value;
  }
  ctx.class_min.emplace(key, val);
  return val;
}

bool projections_minimal(SectionContext& ctx, const RatVec& omega) {
  for (size_t i = 0; i < ctx.frame->components.size(); ++i) {
    RatVec c = summand_projection_coords(ctx, i, omega);
    int label = ctx.summands[i].abstract.disc_label_of(c);
    Rat norm = -dot(c, ctx.summands[i].gram * c);
    if (norm != class_min_norm(ctx, i, label)) return false;
  }
  return true;
}

// component slot the section meets at the fiber of summand idx
int fiber_slot(SectionContext& ctx, size_t idx, const RatVec& omega) {
  const auto& comp = ctx.frame->components[idx];
  RatMat g(ctx.frame->lattice->gram);
  if (comp.family == Family::A) {
    // homomorphism A_m^* -> Z/(m+1), normalized so the class of the dual
    // vector of node j maps to j
    Rat acc = 0;
    for (size_t i = 0; i < comp.rank; ++i)
      acc -= rat_of(Int(i + 1)) * dot(omega, g * rat_vec(comp.simple_roots.row(i)));
    if (!is_integral(acc)) throw std::logic_error("fiber_slot: non-integral pairing");
    Int m = acc.get_num() % Int(comp.rank + 1);
    if (m < 0) m += Int(comp.rank + 1);
    return int(m.get_si());
  }
  RatVec c = summand_projection_coords(ctx, idx, omega);
  int label = ctx.summands[idx].abstract.disc_label_of(c);
  if (comp.family == Family::D) {
    // [2], the vector class, meets the near component
    static const int slot[4] = {0, 2, 1, 3};
    return slot[label];
  }
  return label;  // E6 / E7 / E8
}

struct Shell {
  Rat norm;
  RatVec vec;
};

bool lex_less_vec(const RatVec& a, const RatVec& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

// vectors of omega0 + rowspan(translations) with |norm| <= max_norm,
// ordered by (norm, lex)
std::vector<Shell> affine_shells(const Frame& f, const RatVec& omega0,
                                 const IntMat& translations, const Rat& max_norm) {
  std::vector<Shell> out;
  if (translations.rows == 0) {
    Rat n = -f.pair(omega0, omega0);
    if (n <= max_norm) out.push_back({n, omega0});
    return out;
  }
  RatMat r(translations);
  RatMat g = r * RatMat(f.lattice->gram) * r.transposed();
  RatMat neg(g.rows, g.cols);
  for (size_t i = 0; i < g.a.size(); ++i) neg.a[i] = -g.a[i];
  LllResult red = lll_reduce(neg);
  RatMat rbasis = RatMat(red.u) * r;
  // omega0 = projection onto the span + residue
  RatVec rhs = rbasis * (RatMat(f.lattice->gram) * omega0);
  RatMat span_gram(red.reduced.rows, red.reduced.cols);
  for (size_t i = 0; i < red.reduced.a.size(); ++i) span_gram.a[i] = -red.reduced.a[i];
  auto c = solve_rational(span_gram, rhs);
  if (!c) throw std::logic_error("affine_shells: degenerate translation lattice");
  RatVec proj(omega0.size());
  for (size_t i = 0; i < rbasis.rows; ++i)
    for (size_t j = 0; j < omega0.size(); ++j) proj[j] += (*c)[i] * rbasis(i, j);
  RatVec resid(omega0.size());
  for (size_t j = 0; j < omega0.size(); ++j) resid[j] = omega0[j] - proj[j];
  Rat resid_norm = -f.pair(resid, resid);
  if (resid_norm > max_norm) return out;
  // |omega0 + y*B|^2 = resid_norm + Q(y + c), Q the negated span form
  auto ys = enumerate_short(red.reduced, max_norm - resid_norm, *c);
  bool offset_zero =
      std::all_of(c->begin(), c->end(), [](const Rat& v) { return v == 0; });
  std::vector<IntVec> all = std::move(ys);
  if (offset_zero) all.push_back(IntVec(red.reduced.rows, Int(0)));
  for (const auto& y : all) {
    RatVec v = omega0;
    for (size_t i = 0; i < rbasis.rows; ++i)
      for (size_t j = 0; j < v.size(); ++j) v[j] += rat_of(y[i]) * rbasis(i, j);
    Rat n = -f.pair(v, v);
    if (n <= max_norm) out.push_back({n, std::move(v)});
  }
  std::sort(out.begin(), out.end(), [](const Shell& a, const Shell& b) {
    if (a.norm != b.norm) return a.norm < b.norm;
    return lex_less_vec(a.vec, b.vec);
  });
  return out;
}

RatVec canonical_rep(SectionContext& ctx, const RatVec& omega0, const IntMat& translations) {
  const Frame& f = *ctx.frame;
  for (Rat bound = 4;; bound += 2) {
    auto shells = affine_shells(f, omega0, translations, bound);
    for (const auto& s : shells)
      if (projections_minimal(ctx, s.vec)) return s.vec;
    if (bound > 40)
      throw std::runtime_error("canonical_rep: no admissible representative found");
  }
}

SectionSpec finish_section(SectionContext& ctx, RatVec omega, std::string name) {
  const Frame& f = *ctx.frame;
  SectionSpec s;
  s.name = std::move(name);
  s.labels = f.lattice->labels_of(omega);
  s.rep = std::move(omega);
  bool zero = std::all_of(s.rep.begin(), s.rep.end(), [](const Rat& v) { return v == 0; });
  if (zero) {
    s.k = 0;
    s.meets.assign(f.components.size(), 0);
    s.meets_zero = 0;
    s.order = 1;
    s.torsion = true;
    return s;
  }
  Rat k = -f.pair(s.rep, s.rep) / 2;
  if (!is_integral(k)) throw std::logic_error("finish_section: odd representative norm");
  s.k = k.get_num();
  s.meets_zero = s.k - 2;
  for (size_t i = 0; i < f.components.size(); ++i)
    s.meets.push_back(fiber_slot(ctx, i, s.rep));
  s.torsion = f.in_span_w_root(s.rep);
  return s;
}

Int labels_order(const GluedRootLattice& lat, const GlueLabels& cls) {
  GlueLabels zero(cls.size(), 0);
  if (cls == zero) return 1;
  GlueLabels acc = cls;
  Int o = 1;
  while (acc != zero) {
    acc = lat.add(acc, cls);
    ++o;
    if (o > 1000) throw std::logic_error("labels_order: runaway order");
  }
  return o;
}

}  // namespace

LatticeFibration sections_from_cosets(const Frame& frame) {
  LatticeFibration fib;
  fib.frame = frame;
  for (size_t i = 0; i < frame.components.size(); ++i)
    fib.fibers.push_back(fiber_for_ade(frame.components[i].family, frame.components[i].rank,
                                       "F" + std::to_string(i)));
  SectionContext ctx = make_context(fib.frame);
  const auto& lat = *fib.frame.lattice;

  // per-component images and their orthogonal sublattices N_c
  std::vector<IntMat> local_kernels, local_images;
  for (size_t c = 0; c < lat.components.size(); ++c) {
    size_t off = lat.offsets[c], rk = lat.components[c].rank;
    std::vector<IntVec> rows;
    for (size_t i = 0; i < fib.frame.embedding.images.rows; ++i) {
      IntVec loc(rk);
      bool in_c = false, outside = false;
      for (size_t j = 0; j < lat.total_rank; ++j) {
        if (fib.frame.embedding.images(i, j) == 0) continue;
        if (j >= off && j < off + rk) {
          loc[j - off] = fib.frame.embedding.images(i, j);
          in_c = true;
        } else {
          outside = true;
        }
      }
      if (in_c && outside)
        throw std::invalid_argument("sections_from_cosets: image crosses components");
      if (in_c) rows.push_back(std::move(loc));
    }
    IntMat img(rows.size(), rk);
    for (size_t i = 0; i < rows.size(); ++i)
      for (size_t j = 0; j < rk; ++j) img(i, j) = rows[i][j];
    local_images.push_back(img);
    local_kernels.push_back(rows.empty() ? IntMat::identity(rk)
                                         : integer_kernel(img * lat.components[c].gram));
  }

  // classes of W/N as coefficient tuples over the cyclic generators
  std::vector<IntVec> coeffs{IntVec(fib.frame.wn_gens.size(), Int(0))};
  for (size_t g = 0; g < fib.frame.wn_gens.size(); ++g) {
    std::vector<IntVec> next;
    for (const auto& c : coeffs)
      for (Int v = 0; v < fib.frame.wn_gens[g].order; ++v) {
        IntVec cc = c;
        cc[g] = v;
        next.push_back(cc);
      }
    coeffs = std::move(next);
  }

  size_t counter = 0;
  for (const auto& co : coeffs) {
    GlueLabels cls(lat.components.size(), 0);
    for (size_t g = 0; g < fib.frame.wn_gens.size(); ++g)
      for (Int v = 0; v < co[g]; ++v) cls = lat.add(cls, fib.frame.wn_gens[g].labels);
    bool zero_class =
        std::all_of(co.begin(), co.end(), [](const Int& v) { return v == 0; });
    RatVec omega(lat.total_rank);
    if (!zero_class) {
      size_t total_rows = 0;
      for (const auto& k : local_kernels) total_rows += k.rows;
      IntMat translations(total_rows, lat.total_rank);
      size_t at = 0;
      for (size_t comp = 0; comp < lat.components.size(); ++comp) {
        size_t off = lat.offsets[comp], rk = lat.components[comp].rank;
        RatVec v0 = lat.components[comp].disc_rep(cls[comp]);
        const IntMat& img = local_images[comp];
        if (img.rows > 0) {
          IntVec q(img.rows);
          RatMat g(lat.components[comp].gram);
          for (size_t i = 0; i < img.rows; ++i) {
            Rat p = dot(rat_vec(img.row(i)), g * v0);
            if (!is_integral(p)) throw std::logic_error("sections: fractional image pairing");
            q[i] = -p.get_num();
          }
          auto z = solve_integer(img * lat.components[comp].gram, q);
          if (!z)
            throw std::runtime_error("sections_from_cosets: class without representative in W");
          for (size_t j = 0; j < rk; ++j) v0[j] += rat_of((*z)[j]);
        }
        for (size_t j = 0; j < rk; ++j) omega[off + j] = v0[j];
        for (size_t i = 0; i < local_kernels[comp].rows; ++i, ++at)
          for (size_t j = 0; j < rk; ++j)
            translations(at, off + j) = local_kernels[comp](i, j);
      }
      omega = canonical_rep(ctx, omega, translations);
    }
    SectionSpec s = finish_section(ctx, std::move(omega), "S" + std::to_string(counter++));
    s.order = labels_order(lat, cls);
    Rat h = shioda_height(s, fib.fibers);
    if (s.torsion != (h == 0))
      throw std::logic_error("sections_from_cosets: torsion/height mismatch");
    fib.sections.push_back(std::move(s));
  }
  return fib;
}

SectionSpec section_from_vector(const LatticeFibration& fib, const RatVec& omega,
                                std::string name) {
  SectionContext ctx = make_context(fib.frame);
  const Frame& f = fib.frame;
  if (!f.in_w(omega)) throw std::invalid_argument("section_from_vector: not in W");
  RatVec rep = canonical_rep(ctx, omega, f.w_root_basis);
  SectionSpec s = finish_section(ctx, std::move(rep), std::move(name));
  bool in_n = std::all_of(s.labels.begin(), s.labels.end(), [](int l) { return l == 0; });
  s.order = in_n ? 0 : labels_order(*f.lattice, s.labels);
  return s;
}

IntVec express_in_basis(const RatMat& basis_gram, const RatVec& pairings) {
  auto c = solve_rational(basis_gram, pairings);
  if (!c) throw std::invalid_argument("express_in_basis: singular height matrix");
  if (!is_integral(*c)) throw std::invalid_argument("express_in_basis: non-integral solution");
  IntVec out(c->size());
  for (size_t i = 0; i < c->size(); ++i) out[i] = (*c)[i].get_num();
  return out;
}

namespace {

bool solvable_mod(const Int& a, const Int& b, const Int& c, const Int& r, long m) {
  for (long x = 0; x < m; ++x)
    for (long y = 0; y < m; ++y) {
      Int v = a * x * x + b * x * y + c * y * y - r;
      if (v % m == 0) return true;
    }
  return false;
}

}  // namespace

QformResult qform_equivalent(const RatMat& g1, const RatMat& g2, long search_bound) {
  if (g1.rows != 2 || g1.cols != 2 || g2.rows != 2 || g2.cols != 2)
    throw std::invalid_argument("qform_equivalent: need 2x2 matrices");
  for (const auto* g : {&g1, &g2})
    if (!g->is_symmetric() || (*g)(0, 0) <= 0 || det(*g) <= 0)
      throw std::invalid_argument("qform_equivalent: forms must be positive definite");
  QformResult res;
  auto reps_of = [&](const Rat& value) {
    std::vector<IntVec> out;
    for (auto& v : enumerate_short(g1, value)) {
      RatVec rv = rat_vec(v);
      if (dot(rv, g1 * rv) == value && abs(v[0]) <= search_bound && abs(v[1]) <= search_bound)
        out.push_back(v);
    }
    std::sort(out.begin(), out.end(), [](const IntVec& a, const IntVec& b) {
      Int ma = std::max(abs(a[0]), abs(a[1])), mb = std::max(abs(b[0]), abs(b[1]));
      if (ma != mb) return ma < mb;
      if (a[0] != b[0]) return a[0] > b[0];
      return a[1] > b[1];
    });
    return out;
  };
  auto us = reps_of(g2(0, 0));
  if (us.empty()) {
    res.unrepresented = g2(0, 0);
    Int den = g1(0, 0).get_den();
    den = lcm(den, (2 * g1(0, 1)).get_den());
    den = lcm(den, g1(1, 1).get_den());
    den = lcm(den, g2(0, 0).get_den());
    Int a = (g1(0, 0) * rat_of(den)).get_num();
    Int b = (2 * g1(0, 1) * rat_of(den)).get_num();
    Int c = (g1(1, 1) * rat_of(den)).get_num();
    Int r = (g2(0, 0) * rat_of(den)).get_num();
    for (long m : {3, 4, 5, 7, 8, 9, 16, 25})
      if (!solvable_mod(a, b, c, r, m)) {
        res.obstruction_modulus = Int(m);
        break;
      }
    return res;
  }
  auto vs = reps_of(g2(1, 1));
  for (const auto& u : us)
    for (const auto& v : vs) {
      Int d = u[0] * v[1] - u[1] * v[0];
      if (d != 1 && d != -1) continue;
      RatVec ru = rat_vec(u), rv = rat_vec(v);
      if (dot(ru, g1 * rv) != g2(0, 1)) continue;
      IntMat m(2, 2);
      m(0, 0) = u[0];
      m(0, 1) = u[1];
      m(1, 0) = v[0];
      m(1, 1) = v[1];
      res.transform = m;
      return res;
    }
  if (vs.empty()) res.unrepresented = g2(1, 1);
  return res;
}

const SectionSpec* LatticeFibration::find(const GlueLabels& labels) const {
  for (const auto& s : sections)
    if (s.labels == labels) return &s;
  return nullptr;
}

}  // namespace mwlforge
