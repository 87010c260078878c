#include "arq/degree.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace arq {

namespace {

std::size_t idx(VertexId v) { return static_cast<std::size_t>(v); }

QuiverRep sum_of(const ARQuiver& ar, const std::vector<VertexId>& vs) {
  if (vs.empty()) return QuiverRep::zero(ar.quiver_ptr());
  std::vector<QuiverRep> parts;
  for (auto v : vs) parts.push_back(ar.module(v));
  return direct_sum(parts);
}

// One block of the searched space: the radical pieces of Hom between the
// fixed end and a summand on the h side.
struct Block {
  const HomSpace* hom;
  RadicalSpace v;
  RadicalSpace w;
  std::size_t offset;
};

struct Output {
  const HomSpace* hom;
  RadicalSpace r;
};

struct Attempt {
  bool has_layer = false;
  std::optional<Vector> witness;
  std::optional<Vector> zero_witness;
  bool partial = false;
  Subspace kernel{0};
  Subspace w{0};
};

class Search {
 public:
  Search(const ArMorphism& f, const RadicalFiltration& rf, Side side) : f_(f), rf_(rf), side_(side) {}

  // h side summands and other side summands.
  const std::vector<VertexId>& hside() const { return side_ == Side::left ? f_.domain : f_.codomain; }
  const std::vector<VertexId>& oside() const { return side_ == Side::left ? f_.codomain : f_.domain; }

  RadicalSpace rad(VertexId fixed_end, VertexId z, std::size_t n, bool z_is_source) const {
    return z_is_source ? rf_.rad(z, fixed_end, n, Anchor::target) : rf_.rad(fixed_end, z, n, Anchor::source);
  }

  Attempt attempt(VertexId z, std::size_t n) const {
    Attempt out;
    const bool left = side_ == Side::left;
    std::vector<Block> blocks;
    std::size_t total = 0;
    bool any = false;
    for (auto e : hside()) {
      const HomSpace& h = left ? rf_.hom(z, e) : rf_.hom(e, z);
      RadicalSpace v = rad(e, z, n, left);
      RadicalSpace w = rad(e, z, n + 1, left);
      out.partial = out.partial || !v.exact || !w.exact;
      any = any || v.space.dim() != w.space.dim();
      blocks.push_back({&h, v, w, total});
      total += h.dim();
    }
    if (!any) return out;
    out.has_layer = true;
    std::vector<Output> outputs;
    std::size_t rows = 0;
    for (auto o : oside()) {
      const HomSpace& h = left ? rf_.hom(z, o) : rf_.hom(o, z);
      RadicalSpace r = rad(o, z, n + 2, left);
      out.partial = out.partial || !r.exact;
      outputs.push_back({&h, r});
      rows += h.dim();
    }
    // Basis of V in total coordinates, with the images of each element.
    std::vector<Vector> vbasis;
    std::vector<Vector> images;
    std::vector<Vector> exact_images;
    Subspace w(total);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      for (const auto& c : blocks[b].w.space.basis()) {
        Vector e(total);
        std::copy(c.begin(), c.end(), e.begin() + static_cast<std::ptrdiff_t>(blocks[b].offset));
        w.add(e);
      }
      for (const auto& c : blocks[b].v.space.basis()) {
        Vector e(total);
        std::copy(c.begin(), c.end(), e.begin() + static_cast<std::ptrdiff_t>(blocks[b].offset));
        vbasis.push_back(e);
        Morphism h = blocks[b].hom->element(c);
        Vector img, raw;
        for (std::size_t o = 0; o < outputs.size(); ++o) {
          const Morphism& part = left ? f_.parts[o][b] : f_.parts[b][o];
          Morphism comp = left ? compose(part, h) : compose(h, part);
          Vector coords = outputs[o].hom->coordinates(comp);
          Vector red = outputs[o].r.space.reduce(coords);
          raw.insert(raw.end(), coords.begin(), coords.end());
          img.insert(img.end(), red.begin(), red.end());
        }
        images.push_back(std::move(img));
        exact_images.push_back(std::move(raw));
      }
    }
    auto kernel_of = [&](const std::vector<Vector>& cols) {
      Subspace k(total);
      if (rows == 0) {
        for (const auto& v : vbasis) k.add(v);
        return k;
      }
      Matrix m = Matrix::from_columns(cols, rows);
      Matrix kb = kernel_basis(m);
      for (std::size_t r = 0; r < kb.rows(); ++r) {
        Vector v(total);
        for (std::size_t c = 0; c < vbasis.size(); ++c)
          if (sgn(kb(r, c)) != 0)
            for (std::size_t t = 0; t < total; ++t) v[t] += kb(r, c) * vbasis[c][t];
        k.add(v);
      }
      return k;
    };
    auto pick = [&](const Subspace& k) -> std::optional<Vector> {
      for (const auto& v : k.basis())
        if (!w.contains(v)) return v;
      return std::nullopt;
    };
    out.kernel = kernel_of(images);
    out.w = w;
    out.witness = pick(out.kernel);
    if (out.witness) out.zero_witness = pick(kernel_of(exact_images));
    return out;
  }

  // Morphism on the h side from total coordinates.
  Morphism element(VertexId z, const Vector& coords) const {
    const bool left = side_ == Side::left;
    std::vector<Morphism> parts;
    std::vector<QuiverRep> mods;
    std::size_t off = 0;
    for (auto e : hside()) {
      const HomSpace& h = left ? rf_.hom(z, e) : rf_.hom(e, z);
      Vector c(coords.begin() + static_cast<std::ptrdiff_t>(off),
               coords.begin() + static_cast<std::ptrdiff_t>(off + h.dim()));
      parts.push_back(h.element(c));
      mods.push_back(rf_.ar().module(e));
      off += h.dim();
    }
    if (parts.size() == 1) return parts.front();
    const QuiverRep& zm = rf_.ar().module(z);
    return left ? stack_targets(parts, zm, mods) : stack_sources(parts, mods, zm);
  }

  // Composites of knitted arrows along paths of length n between z and the
  // single h side vertex, tested against the kernel.
  bool path_witness(VertexId z, std::size_t n, const Attempt& a) const {
    if (hside().size() != 1) return false;
    const ARQuiver& ar = rf_.ar();
    const VertexId from = side_ == Side::left ? z : hside()[0];
    const VertexId to = side_ == Side::left ? hside()[0] : z;
    const HomSpace& h = rf_.hom(from, to);
    std::size_t budget = 4096;
    bool found = false;
    std::function<void(VertexId, std::size_t, const Morphism&)> walk = [&](VertexId at, std::size_t len,
                                                                         const Morphism& acc) {
      if (found || budget == 0) return;
      if (len == n) {
        --budget;
        if (at != to) return;
        Vector c = h.coordinates(acc);
        if (a.kernel.contains(c) && !a.w.contains(c)) found = true;
        return;
      }
      for (auto e : ar.out_arrows(at)) {
        const auto& arr = ar.arrow(e);
        walk(arr.target, len + 1, compose(arr.morphism, acc));
        if (found) return;
      }
    };
    walk(from, 0, Morphism::identity(ar.module(from)));
    return found;
  }

 private:
  const ArMorphism& f_;
  const RadicalFiltration& rf_;
  Side side_;
};

DegreeReport degree_search(const ArMorphism& f, const RadicalFiltration& rf, std::size_t bound,
                           std::optional<VertexId> only_z, Side side) {
  const ARQuiver& ar = rf.ar();
  const auto& fixed = side == Side::left ? f.domain : f.codomain;
  const auto& other = side == Side::left ? f.codomain : f.domain;
  if (fixed.size() != 1)
    throw Error(side == Side::left ? "left degree needs an indecomposable domain"
                                   : "right degree needs an indecomposable codomain");
  for (auto v : f.domain)
    if (idx(v) >= ar.vertex_count()) throw Error("degree: module outside the component");
  for (auto v : f.codomain)
    if (idx(v) >= ar.vertex_count()) throw Error("degree: module outside the component");
  if (!other.empty() && !is_irreducible(f, rf)) throw Error("degree: morphism is not irreducible");
  DegreeReport r;
  r.side = side;
  r.bound = bound;
  r.truncated = ar.truncated();
  Search s(f, rf, side);
  for (std::size_t n = 1; n <= bound; ++n) {
    for (std::size_t zi = 0; zi < ar.vertex_count(); ++zi) {
      const VertexId z = static_cast<VertexId>(zi);
      if (only_z && *only_z != z) continue;
      Attempt a = s.attempt(z, n);
      if (!a.has_layer) continue;
      r.partial = r.partial || a.partial;
      if (!a.witness) continue;
      r.degree = n;
      r.witness = DegreeWitness{z, n, s.element(z, *a.witness)};
      if (a.zero_witness) r.zero_witness = DegreeWitness{z, n, s.element(z, *a.zero_witness)};
      r.path_witness = s.path_witness(z, n, a);
      return r;
    }
  }
  return r;
}

}  // namespace

DegreeReport left_degree(const ArMorphism& f, const RadicalFiltration& rf, std::size_t bound,
                         std::optional<VertexId> only_z) {
  return degree_search(f, rf, bound, only_z, Side::left);
}

DegreeReport right_degree(const ArMorphism& f, const RadicalFiltration& rf, std::size_t bound,
                          std::optional<VertexId> only_z) {
  return degree_search(f, rf, bound, only_z, Side::right);
}

Morphism module_morphism(const ArMorphism& f, const ARQuiver& ar) {
  const Quiver& q = ar.quiver();
  std::vector<Matrix> parts;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    std::size_t rows = 0, cols = 0;
    for (auto y : f.codomain) rows += ar.module(y).dim(v);
    for (auto x : f.domain) cols += ar.module(x).dim(v);
    Matrix m(rows, cols);
    std::size_t r0 = 0;
    for (std::size_t j = 0; j < f.codomain.size(); ++j) {
      std::size_t c0 = 0;
      for (std::size_t k = 0; k < f.domain.size(); ++k) {
        const Matrix& b = f.parts[j][k].at(v);
        for (std::size_t r = 0; r < b.rows(); ++r)
          for (std::size_t c = 0; c < b.cols(); ++c) m(r0 + r, c0 + c) = b(r, c);
        c0 += ar.module(f.domain[k]).dim(v);
      }
      r0 += ar.module(f.codomain[j]).dim(v);
    }
    parts.push_back(std::move(m));
  }
  return Morphism(std::move(parts));
}

KernelReport kernel_characterization(const ArMorphism& f, const RadicalFiltration& rf, std::size_t bound) {
  const ARQuiver& ar = rf.ar();
  if (f.codomain.empty()) throw Error("kernel characterization needs a non-zero codomain");
  KernelReport r;
  r.degree = left_degree(f, rf, bound);
  r.partial = r.degree.partial;
  const VertexId x = f.domain.at(0);
  Morphism fm = module_morphism(f, ar);
  r.mono = is_mono(fm);
  r.epi = is_epi(fm);
  std::optional<KernelResult> ker;
  bool b_holds = false;
  if (!r.mono) {
    ker = kernel(fm, ar.module(x), sum_of(ar, f.codomain));
    r.kernel_vertex = ar.find_vertex(ker->module);
    if (r.kernel_vertex) {
      auto iso = find_isomorphism(ar.module(*r.kernel_vertex), ker->module);
      Morphism incl = compose(ker->inclusion, *iso);
      r.kernel_depth = rf.depth(*r.kernel_vertex, x, incl, bound + 2);
      b_holds = r.kernel_depth && *r.kernel_depth >= 1;
    }
  } else {
    r.kernel_zero = true;
  }
  if (r.degree.degree) {
    r.ab_equivalent = b_holds && *r.kernel_depth == *r.degree.degree;
  } else {
    // Not found within bound: (b) must not hold at a depth the search covered.
    r.ab_equivalent = !(b_holds && *r.kernel_depth <= bound) || r.partial;
  }
  r.b_implies_c = !b_holds || (!r.mono && r.kernel_vertex.has_value());
  if (!ar.truncated()) {
    const bool c = !r.mono && r.kernel_vertex.has_value();
    r.c_implies_a = !c || r.degree.finite();
  }
  if (r.degree.zero_witness && ker) {
    const auto& w = *r.degree.zero_witness;
    bool same = r.kernel_vertex && *r.kernel_vertex == w.z;
    if (same) {
      // Solve incl g = h vertexwise; g must be an isomorphism Z -> Ker f.
      std::vector<Matrix> gp;
      for (std::size_t v = 0; v < ar.quiver().vertex_count() && same; ++v) {
        auto g = solve(ker->inclusion.at(v), w.h.at(v));
        if (!g) same = false;
        else gp.push_back(*g);
      }
      if (same) {
        Morphism g(std::move(gp));
        same = is_intertwiner(g, ar.module(w.z), ker->module) && is_iso(g);
      }
    }
    r.witness_is_kernel = same;
  }
  return r;
}

ShiftReport degree_shift(const RadicalFiltration& rf, VertexId y, std::size_t arm, std::size_t bound) {
  const ARQuiver& ar = rf.ar();
  const Mesh* mesh = ar.mesh_ending(y);
  if (!mesh) throw Error("degree shift needs a non-projective end with a recorded mesh");
  if (arm >= mesh->arms.size()) throw Error("degree shift: no such arm");
  if (mesh->arms.size() < 2) throw Error("hypothesis X' != 0 violated");
  ShiftReport r{y, arm, {}, {}, false};
  ArMorphism f = ArMorphism::from_arrow(ar, mesh->arms[arm].second);
  ArMorphism g{{mesh->start}, {}, {}};
  for (std::size_t k = 0; k < mesh->arms.size(); ++k) {
    if (k == arm) continue;
    const auto& a = ar.arrow(mesh->arms[k].first);
    g.codomain.push_back(a.target);
    g.parts.push_back({a.morphism});
  }
  r.f_degree = left_degree(f, rf, bound);
  r.g_degree = left_degree(g, rf, bound);
  const auto& df = r.f_degree.degree;
  const auto& dg = r.g_degree.degree;
  if (df && dg)
    r.law_holds = *df == *dg + 1;
  else if (df)
    r.law_holds = false;
  else if (dg)
    r.law_holds = *dg + 1 > bound;
  else
    r.law_holds = true;
  return r;
}

namespace {

std::vector<VertexId> mesh_middle(const ARQuiver& ar, const Mesh& m) {
  std::vector<VertexId> out;
  for (const auto& arm : m.arms) out.push_back(ar.arrow(arm.first).target);
  std::sort(out.begin(), out.end());
  return out;
}

// Removes `part` from `whole` as multisets.
std::optional<std::vector<VertexId>> remove_all(std::vector<VertexId> whole, std::vector<VertexId> part) {
  for (auto v : part) {
    auto it = std::find(whole.begin(), whole.end(), v);
    if (it == whole.end()) return std::nullopt;
    whole.erase(it);
  }
  return whole;
}

}  // namespace

DegreeTwoReport classify_degree_two(const ArMorphism& f, const RadicalFiltration& rf, std::size_t bound) {
  const ARQuiver& ar = rf.ar();
  if (f.domain.size() != 1) throw Error("degree two classification needs an indecomposable domain");
  const VertexId x = f.domain[0];
  DegreeTwoReport r;
  if (f.codomain.size() == 1) {
    const auto& ins = ar.in_arrows(f.codomain[0]);
    r.minimal_right_almost_split = ins.size() == 1 && ar.arrow(ins[0]).source == x;
  }
  if (auto t = ar.tau_inverse(x)) {
    if (const Mesh* m = ar.mesh_ending(*t)) {
      auto rest = remove_all(mesh_middle(ar, *m), f.codomain);
      if (rest && rest->size() == 1) {
        if (auto t2 = ar.tau_inverse(rest->front())) {
          const Mesh* m2 = ar.mesh_ending(*t2);
          r.right_pattern = m2 && mesh_middle(ar, *m2) == std::vector<VertexId>{*t};
        }
      }
    }
  }
  if (!r.minimal_right_almost_split && f.codomain.size() == 1) {
    if (const Mesh* m = ar.mesh_ending(f.codomain[0])) {
      auto rest = remove_all(mesh_middle(ar, *m), {x});
      if (rest && rest->size() == 1) {
        const Mesh* m2 = ar.mesh_ending(rest->front());
        if (m2 && mesh_middle(ar, *m2) == std::vector<VertexId>{m->start}) r.left_pattern = 1;
      }
    }
  } else if (f.codomain.size() == 2) {
    const Mesh* m1 = ar.mesh_ending(f.codomain[0]);
    const Mesh* m2 = ar.mesh_ending(f.codomain[1]);
    const Mesh* mx = ar.mesh_ending(x);
    if (m1 && m2 && mx && mesh_middle(ar, *m1) == std::vector<VertexId>{x} &&
        mesh_middle(ar, *m2) == std::vector<VertexId>{x}) {
      std::vector<VertexId> want{m1->start, m2->start};
      std::sort(want.begin(), want.end());
      if (mesh_middle(ar, *mx) == want) r.left_pattern = 2;
    }
  }
  r.left = left_degree(f, rf, bound);
  r.agree_left = (r.left.degree == std::optional<std::size_t>(2)) == (r.left_pattern != 0);
  if (f.codomain.size() == 1) {
    r.right = right_degree(f, rf, bound);
    r.agree_right = (r.right.degree == std::optional<std::size_t>(2)) == r.right_pattern;
  } else {
    r.right.side = Side::right;
    r.right.bound = bound;
    r.agree_right = true;
  }
  return r;
}

CompositeReport composite_analysis(const std::vector<ArMorphism>& path, const RadicalFiltration& rf) {
  const ARQuiver& ar = rf.ar();
  if (path.empty()) throw Error("composite analysis: empty path");
  for (std::size_t i = 0; i < path.size(); ++i) {
    const auto& h = path[i];
    if (h.domain.size() != 1 || h.codomain.size() != 1)
      throw Error("composite analysis: step " + std::to_string(i + 1) + " is not a map between indecomposables");
    if (i > 0 && path[i - 1].codomain[0] != h.domain[0])
      throw Error("composite analysis: path is not composable at step " + std::to_string(i + 1));
    if (!is_irreducible(h, rf)) throw Error("composite analysis: step " + std::to_string(i + 1) + " is not irreducible");
  }
  CompositeReport r;
  const std::size_t n = path.size();
  r.length = n;
  const VertexId first = path.front().domain[0];
  const VertexId last = path.back().codomain[0];
  Morphism comp = path[0].parts[0][0];
  for (std::size_t i = 1; i < n; ++i) comp = compose(path[i].parts[0][0], comp);
  r.zero = comp.is_zero();
  r.depth = rf.depth(first, last, comp, n + 64);
  r.in_rad_n_plus_1 = !r.zero && rf.in_rad(first, last, n + 1, comp);
  r.trivial_valuation = true;
  std::vector<ArrowId> arrows;
  for (const auto& h : path) {
    std::vector<ArrowId> between;
    for (auto a : ar.out_arrows(h.domain[0]))
      if (ar.arrow(a).target == h.codomain[0]) between.push_back(a);
    if (between.size() != 1) r.trivial_valuation = false;
    else arrows.push_back(between[0]);
  }
  if (!r.in_rad_n_plus_1 || !r.trivial_valuation || n > 16) return r;
  std::vector<Morphism> rest;
  for (std::size_t i = 0; i < n; ++i) {
    const VertexId a = path[i].domain[0], b = path[i].codomain[0];
    const HomSpace& h = rf.hom(a, b);
    Subspace r2 = rf.rad(a, b, 2).space;
    const Morphism& fi = ar.arrow(arrows[i]).morphism;
    Vector ch = r2.reduce(h.coordinates(path[i].parts[0][0]));
    Vector cf = r2.reduce(h.coordinates(fi));
    std::size_t p = 0;
    while (p < cf.size() && sgn(cf[p]) == 0) ++p;
    if (p == cf.size()) return r;
    Rational lambda = ch[p] / cf[p];
    r.f.push_back(fi);
    rest.push_back(path[i].parts[0][0] - lambda * fi);
  }
  Morphism fc = r.f[0];
  for (std::size_t i = 1; i < n; ++i) fc = compose(r.f[i], fc);
  r.f_composite_zero = fc.is_zero();
  std::vector<std::uint32_t> masks;
  for (std::uint32_t m = 1; m < (1u << n); ++m) masks.push_back(m);
  std::stable_sort(masks.begin(), masks.end(),
                   [](std::uint32_t a, std::uint32_t b) { return __builtin_popcount(a) < __builtin_popcount(b); });
  for (auto m : masks) {
    auto pick = [&](std::size_t i) -> const Morphism& { return (m >> i) & 1u ? rest[i] : r.f[i]; };
    Morphism e = pick(0);
    for (std::size_t i = 1; i < n; ++i) e = compose(pick(i), e);
    if (e.is_zero()) continue;
    r.eps_composite_nonzero = true;
    for (std::size_t i = 0; i < n; ++i) {
      r.eps.push_back(pick(i));
      r.perturbed.push_back((m >> i) & 1u);
    }
    break;
  }
  r.decomposed = r.f_composite_zero && r.eps_composite_nonzero;
  return r;
}

FamilySumReport sectional_family_sum(const SectionalFamily& family, const RadicalFiltration& rf) {
  FamilyCheck check = check_sectional_family(family, rf);
  if (!check.ok) throw Error("invalid sectional family (" + check.condition + "): " + check.message);
  const VertexId y = family.paths.front().back().codomain[0];
  std::size_t n = family.paths.front().size();
  for (const auto& p : family.paths) {
    if (p.back().codomain[0] != y) throw Error("sectional family sum: paths end at different modules");
    n = std::min(n, p.size());
  }
  std::optional<ArMorphism> sum;
  for (const auto& p : family.paths) {
    ArMorphism c = p[0];
    for (std::size_t j = 1; j < p.size(); ++j) c = compose(p[j], c);
    sum = sum ? *sum + c : c;
  }
  FamilySumReport r{n, y, *sum, false, false};
  r.in_rad_n = rf.in_rad(r.sum, n);
  r.in_rad_n_plus_1 = rf.in_rad(r.sum, n + 1);
  return r;
}

std::vector<std::optional<std::size_t>> directed_distances(const ARQuiver& ar, VertexId x) {
  std::vector<std::optional<std::size_t>> d(ar.vertex_count());
  std::deque<VertexId> queue{x};
  d[idx(x)] = 0;
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (auto a : ar.out_arrows(v)) {
      VertexId t = ar.arrow(a).target;
      if (d[idx(t)]) continue;
      d[idx(t)] = *d[idx(v)] + 1;
      queue.push_back(t);
    }
  }
  return d;
}

std::size_t diameter(const ARQuiver& ar) {
  std::size_t best = 0;
  for (std::size_t s = 0; s < ar.vertex_count(); ++s) {
    std::vector<std::optional<std::size_t>> d(ar.vertex_count());
    std::deque<std::size_t> queue{s};
    d[s] = 0;
    while (!queue.empty()) {
      std::size_t v = queue.front();
      queue.pop_front();
      auto visit = [&](VertexId t) {
        if (d[idx(t)]) return;
        d[idx(t)] = *d[v] + 1;
        best = std::max(best, *d[idx(t)]);
        queue.push_back(idx(t));
      };
      for (auto a : ar.out_arrows(static_cast<VertexId>(v))) visit(ar.arrow(a).target);
      for (auto a : ar.in_arrows(static_cast<VertexId>(v))) visit(ar.arrow(a).source);
    }
  }
  return best;
}

FiniteTypeReport finite_type_check(const QuiverPtr& q, std::size_t bound) {
  FiniteTypeReport r;
  r.bound = bound;
  ARQuiver ap = knit_ar_component(q, KnitDirection::from_projectives, bound);
  ARQuiver ai = knit_ar_component(q, KnitDirection::from_injectives, bound);
  r.truncated = ap.truncated() || ai.truncated();
  RadicalFiltration rp(ap);
  RadicalFiltration ri(ai);
  const auto& ids = q->vertex_ids();
  r.finite_type = true;
  for (std::size_t i = 0; i < q->vertex_count(); ++i) {
    auto p = ap.projective_vertex(i);
    if (!p) throw Error("finite type check: projective missing from the knitted component");
    auto rep = right_degree(ArMorphism::in_map(ap, *p), rp, bound);
    rep.label = "rad P" + std::to_string(ids[i]) + " -> P" + std::to_string(ids[i]);
    r.finite_type = r.finite_type && rep.finite();
    r.projective_degrees.push_back(std::move(rep));
  }
  for (std::size_t i = 0; i < q->vertex_count(); ++i) {
    auto v = ai.injective_vertex(i);
    if (!v) throw Error("finite type check: injective missing from the knitted component");
    auto rep = left_degree(ArMorphism::out_map(ai, *v), ri, bound);
    rep.label = "I" + std::to_string(ids[i]) + " -> I" + std::to_string(ids[i]) + "/soc";
    r.finite_type = r.finite_type && rep.finite();
    r.injective_degrees.push_back(std::move(rep));
  }
  if (!r.finite_type || ap.truncated()) {
    r.path_bounds_ok = r.finite_type;
    return r;
  }
  r.diameter = diameter(ap);
  for (const auto* list : {&r.projective_degrees, &r.injective_degrees})
    for (const auto& d : *list) r.within_diameter = r.within_diameter && *d.degree <= *r.diameter;
  // A path S ~> X ~> I of length at most d_l(I -> I/soc I) for every X
  // with S in its socle.
  for (std::size_t i = 0; i < q->vertex_count(); ++i) {
    SimplePathCheck c;
    c.quiver_vertex = i;
    c.degree = r.injective_degrees[i].degree;
    auto s = ap.find_vertex(simple(q, i));
    auto inj = ap.injective_vertex(i);
    if (!s || !inj) {
      c.ok = false;
      c.problem = "simple or injective missing";
    } else {
      auto from_s = directed_distances(ap, *s);
      const auto outs = q->out_arrows(i);
      for (std::size_t x = 0; x < ap.vertex_count() && c.ok; ++x) {
        const QuiverRep& m = ap.module(static_cast<VertexId>(x));
        if (m.dim(i) == 0) continue;
        std::vector<Matrix> maps;
        for (auto a : outs) maps.push_back(m.map(a));
        std::size_t socle = m.dim(i);
        if (!maps.empty()) socle = m.dim(i) - rank(vstack(maps, m.dim(i)));
        if (socle == 0) continue;
        ++c.modules_checked;
        auto from_x = directed_distances(ap, static_cast<VertexId>(x));
        if (!from_s[x] || !from_x[idx(*inj)] || *from_s[x] + *from_x[idx(*inj)] > *c.degree) {
          c.ok = false;
          c.problem = "no short path through " + ap.vertex(static_cast<VertexId>(x)).label;
        }
      }
    }
    r.path_bounds_ok = r.path_bounds_ok && c.ok;
    r.path_bounds.push_back(std::move(c));
  }
  return r;
}

}  // namespace arq
