#include "arq/generic_cover.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "arq/degree.hpp"

namespace arq {

namespace {

std::string vname(VertexId v) { return "vertex " + std::to_string(v); }

struct Key {
  bool in;
  VertexId neighbour;
  friend auto operator<=>(const Key&, const Key&) = default;
};

// Walk classes as a union-find quotient of a growing graph; adjacency is keyed
// by direction and base neighbour, so parallel arrows share one neighbour.
class Builder {
 public:
  explicit Builder(const TranslationQuiver& base) : base_(base) {}

  std::size_t make(VertexId b) {
    parent_.push_back(parent_.size());
    over_.push_back(b);
    adj_.emplace_back();
    return parent_.size() - 1;
  }

  std::size_t find(std::size_t u) {
    while (parent_[u] != u) {
      parent_[u] = parent_[parent_[u]];
      u = parent_[u];
    }
    return u;
  }

  std::optional<std::size_t> step(std::size_t u, Key k) {
    u = find(u);
    auto it = adj_[u].find(k);
    if (it == adj_[u].end()) return std::nullopt;
    return find(it->second);
  }

  void link(std::size_t u, Key k, std::size_t v) {
    u = find(u);
    v = find(v);
    set(u, k, v);
    set(v, Key{!k.in, over_[u]}, u);
    settle();
  }

  std::vector<Key> keys(VertexId b) const {
    std::set<Key> ks;
    for (ArrowId a : base_.out_arrows(b)) ks.insert(Key{false, base_.arrow(a).target});
    for (ArrowId a : base_.in_arrows(b)) ks.insert(Key{true, base_.arrow(a).source});
    return {ks.begin(), ks.end()};
  }

  // Mesh identifications at every node over a translate.
  void close_meshes() {
    std::size_t before;
    do {
      before = changes_;
      for (std::size_t t = 0; t < parent_.size(); ++t) {
        if (find(t) != t) continue;
        auto x = base_.tau_inverse(over_[t]);
        if (!x) continue;
        Mesh mesh = base_.mesh(*x);
        std::vector<VertexId> middles;
        for (auto [s, b] : mesh.arms) middles.push_back(base_.arrow(s).target);
        std::optional<std::size_t> end;
        for (VertexId mid : middles)
          if (auto n = step(t, Key{false, mid}))
            if (auto m = step(*n, Key{false, *x})) {
              if (!end) end = m;
              else if (find(*end) != find(*m)) unite(*end, *m);
            }
        if (!end) continue;
        for (VertexId mid : middles) {
          auto n = step(t, Key{false, mid});
          if (n) {
            if (!step(*n, Key{false, *x})) link(*n, Key{false, *x}, *end);
          } else if (auto back = step(*end, Key{true, mid})) {
            link(t, Key{false, mid}, *back);
          }
        }
      }
    } while (changes_ != before);
  }

  std::vector<std::optional<std::size_t>> distances(std::size_t root) {
    std::vector<std::optional<std::size_t>> d(parent_.size());
    root = find(root);
    d[root] = 0;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      for (const auto& [k, v0] : adj_[u]) {
        std::size_t v = find(v0);
        if (!d[v]) {
          d[v] = *d[u] + 1;
          queue.push_back(v);
        }
      }
    }
    return d;
  }

  // Adds missing neighbours of every node closer than `reach`; true if any.
  bool expand(std::size_t root, std::size_t reach) {
    auto d = distances(root);
    bool grew = false;
    const std::size_t n = parent_.size();
    for (std::size_t u = 0; u < n; ++u) {
      if (find(u) != u || !d[u] || *d[u] >= reach) continue;
      for (Key k : keys(over_[u])) {
        if (step(u, k)) continue;
        std::size_t v = make(k.neighbour);
        link(u, k, v);
        grew = true;
      }
    }
    return grew;
  }

  VertexId over(std::size_t u) const { return over_[u]; }

 private:
  void set(std::size_t u, Key k, std::size_t v) {
    auto it = adj_[u].find(k);
    if (it == adj_[u].end()) {
      adj_[u].emplace(k, v);
      ++changes_;
    } else if (find(it->second) != find(v)) {
      pending_.emplace_back(it->second, v);
    }
  }

  void unite(std::size_t a, std::size_t b) {
    pending_.emplace_back(a, b);
    settle();
  }

  void settle() {
    while (!pending_.empty()) {
      auto [a, b] = pending_.front();
      pending_.pop_front();
      a = find(a);
      b = find(b);
      if (a == b) continue;
      if (over_[a] != over_[b]) throw Error("generic cover: identified walks end at different vertices");
      if (b < a) std::swap(a, b);
      parent_[b] = a;
      ++changes_;
      auto moved = std::move(adj_[b]);
      adj_[b].clear();
      for (const auto& [k, v] : moved) set(a, k, v);
    }
  }

  const TranslationQuiver& base_;
  std::vector<std::size_t> parent_;
  std::vector<VertexId> over_;
  std::vector<std::map<Key, std::size_t>> adj_;
  std::deque<std::pair<std::size_t, std::size_t>> pending_;
  std::size_t changes_ = 0;
};

// Cover arrow out of (or into) x lying over base arrow a.
std::optional<ArrowId> lift_arrow(const GenericCover& gc, VertexId x, ArrowId a, bool inverse) {
  const auto& arrows = inverse ? gc.cover.in_arrows(x) : gc.cover.out_arrows(x);
  for (ArrowId c : arrows)
    if (gc.pi_arrows.at(c) == a) return c;
  return std::nullopt;
}

}  // namespace

VertexId walk_end(const TranslationQuiver& q, const Walk& w) {
  VertexId cur = w.start;
  for (std::size_t i = 0; i < w.steps.size(); ++i) {
    const Arrow& a = q.arrow(w.steps[i].arrow);
    VertexId from = w.steps[i].inverse ? a.target : a.source;
    if (from != cur) throw Error("walk is not composable at step " + std::to_string(i + 1));
    cur = w.steps[i].inverse ? a.source : a.target;
  }
  return cur;
}

std::vector<VertexId> GenericCover::lifts(VertexId base_v) const {
  std::vector<VertexId> out;
  for (const auto& [c, b] : pi_vertices)
    if (b == base_v) out.push_back(c);
  return out;
}

GenericCover build_cover(const TranslationQuiver& base, VertexId base_vertex, std::size_t radius, std::size_t slack) {
  if (!base.has_vertex(base_vertex)) throw Error("generic cover: unknown base " + vname(base_vertex));
  auto report = validate(base);
  if (!report.ok()) throw Error("generic cover: invalid base: " + report.violations.front());
  if (connected_components(base).size() != 1) throw Error("generic cover: base is not connected");

  Builder b(base);
  const std::size_t root = b.make(base_vertex);
  const std::size_t reach = radius + slack;
  while (b.expand(root, reach)) b.close_meshes();
  b.close_meshes();

  // Canonical walks: breadth first, steps in (arrow, inverse) order.
  std::map<std::size_t, VertexId> id_of;
  std::vector<std::size_t> node_of;
  GenericCover gc;
  gc.base = base;
  gc.radius = radius;
  gc.base_vertex = base_vertex;
  gc.base_lift = 0;
  {
    std::size_t r = b.find(root);
    id_of[r] = 0;
    node_of.push_back(r);
    gc.walks.push_back(Walk{base_vertex, {}});
    gc.distance.push_back(0);
    for (std::size_t i = 0; i < node_of.size(); ++i) {
      if (gc.distance[i] >= radius) continue;
      std::size_t u = node_of[i];
      VertexId bu = b.over(u);
      std::vector<WalkStep> steps;
      for (ArrowId a : base.out_arrows(bu)) steps.push_back({a, false});
      for (ArrowId a : base.in_arrows(bu)) steps.push_back({a, true});
      std::sort(steps.begin(), steps.end());
      for (const auto& s : steps) {
        const Arrow& a = base.arrow(s.arrow);
        auto v = b.step(u, s.inverse ? Key{true, a.source} : Key{false, a.target});
        if (!v || id_of.count(*v)) continue;
        id_of[*v] = static_cast<VertexId>(node_of.size());
        node_of.push_back(*v);
        Walk w = gc.walks[i];
        w.steps.push_back(s);
        gc.walks.push_back(std::move(w));
        gc.distance.push_back(gc.distance[i] + 1);
      }
    }
  }
  const std::size_t n = node_of.size();
  auto kept = [&](std::optional<std::size_t> node) -> std::optional<VertexId> {
    if (!node) return std::nullopt;
    auto it = id_of.find(b.find(*node));
    if (it == id_of.end()) return std::nullopt;
    return it->second;
  };
  auto neighbour = [&](VertexId x, Key k) { return kept(b.step(node_of[static_cast<std::size_t>(x)], k)); };

  // Translates: the whole mesh must survive the cut.
  std::map<VertexId, VertexId> tau;
  for (std::size_t i = 0; i < n; ++i) {
    const VertexId x = static_cast<VertexId>(i);
    const VertexId bx = b.over(node_of[i]);
    if (base.is_projective(bx)) continue;
    Mesh mesh = base.mesh(bx);
    std::optional<VertexId> t;
    bool whole = true;
    for (auto [s, beta] : mesh.arms) {
      VertexId mid = base.arrow(beta).source;
      auto nm = neighbour(x, Key{true, mid});
      if (!nm) {
        whole = false;
        break;
      }
      auto tm = neighbour(*nm, Key{true, mesh.start});
      if (!tm || (t && *t != *tm)) {
        whole = false;
        break;
      }
      t = tm;
    }
    if (whole && t) tau[x] = *t;
  }
  std::set<VertexId> has_tau_inverse;
  for (const auto& [x, t] : tau) has_tau_inverse.insert(t);

  for (std::size_t i = 0; i < n; ++i) {
    const VertexId x = static_cast<VertexId>(i);
    const VertexId bx = b.over(node_of[i]);
    gc.pi_vertices[x] = bx;
    const bool proj = base.is_projective(bx) || !tau.count(x);
    const bool inj = base.is_injective(bx) || !has_tau_inverse.count(x);
    gc.cover.add_vertex(x, proj, inj);
    if (proj != base.is_projective(bx) || inj != base.is_injective(bx) || gc.distance[i] == radius)
      gc.boundary.insert(x);
  }
  ArrowId next = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const VertexId x = static_cast<VertexId>(i);
    const VertexId bx = gc.pi_vertices[x];
    for (ArrowId a : base.out_arrows(bx)) {
      auto y = neighbour(x, Key{false, base.arrow(a).target});
      if (!y) continue;
      gc.cover.add_arrow(next, x, *y);
      gc.pi_arrows[next] = a;
      ++next;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const VertexId x = static_cast<VertexId>(i);
    const VertexId bx = gc.pi_vertices[x];
    for (Key k : b.keys(bx))
      if (!neighbour(x, k)) gc.boundary.insert(x);
  }
  for (const auto& [x, t] : tau) {
    gc.cover.set_tau(x, t);
    for (ArrowId c : gc.cover.in_arrows(x)) {
      auto s = gc.base.sigma(gc.pi_arrows[c]);
      if (!s) continue;
      const VertexId mid = gc.cover.arrow(c).source;
      for (ArrowId d : gc.cover.out_arrows(t))
        if (gc.cover.arrow(d).target == mid && gc.pi_arrows[d] == *s) gc.cover.set_sigma(c, d);
    }
  }
  return gc;
}

CoverReport verify_cover(const GenericCover& gc) {
  CoverReport r;
  auto add = [&r](std::string axiom, VertexId v, std::string msg) {
    r.violations.push_back({std::move(axiom), v, vname(v) + ": " + msg});
  };
  for (VertexId x : gc.cover.vertices()) {
    if (!gc.pi_vertices.count(x)) {
      add("pi", x, "no image under pi");
      continue;
    }
    if (!gc.interior(x)) continue;
    ++r.checked;
    const VertexId bx = gc.pi(x);
    if (!gc.base.has_vertex(bx)) {
      add("pi", x, "image is not a base vertex");
      continue;
    }
    if (gc.cover.is_projective(x) != gc.base.is_projective(bx)) add("marks", x, "projective mark differs from its image");
    if (gc.cover.is_injective(x) != gc.base.is_injective(bx)) add("marks", x, "injective mark differs from its image");
    auto t = gc.cover.tau(x);
    auto bt = gc.base.tau(bx);
    if (t && (!bt || gc.pi(*t) != *bt)) add("tau", x, "pi does not commute with tau");
    if (!t && bt && !gc.cover.is_projective(x)) add("tau", x, "translate missing");
    for (int side = 0; side < 2; ++side) {
      const bool in = side == 1;
      const auto& cover_arrows = in ? gc.cover.in_arrows(x) : gc.cover.out_arrows(x);
      const auto& base_arrows = in ? gc.base.in_arrows(bx) : gc.base.out_arrows(bx);
      std::vector<ArrowId> images;
      std::map<VertexId, VertexId> by_base;
      for (ArrowId c : cover_arrows) {
        auto it = gc.pi_arrows.find(c);
        if (it == gc.pi_arrows.end()) {
          add("pi", x, "arrow " + std::to_string(c) + " has no image");
          continue;
        }
        const Arrow& ca = gc.cover.arrow(c);
        const Arrow& ba = gc.base.arrow(it->second);
        const VertexId other = in ? ca.source : ca.target;
        if (ba.source != gc.pi(ca.source) || ba.target != gc.pi(ca.target))
          add("arrows", x, "arrow " + std::to_string(c) + " is not mapped onto an arrow between the images");
        images.push_back(it->second);
        auto [pos, fresh] = by_base.emplace(gc.pi(other), other);
        if (!fresh && pos->second != other)
          add("fibres", x, std::string(in ? "two predecessors" : "two successors") + " over the same base vertex");
      }
      std::sort(images.begin(), images.end());
      std::vector<ArrowId> expected(base_arrows.begin(), base_arrows.end());
      std::sort(expected.begin(), expected.end());
      if (images != expected)
        add("arrows", x, std::string(in ? "arrows ending" : "arrows starting") + " here are not in bijection with the base");
    }
    std::map<VertexId, std::size_t> counts;
    for (ArrowId c : gc.cover.out_arrows(x)) ++counts[gc.cover.arrow(c).target];
    for (const auto& [y, k] : counts)
      if (gc.base.arrows_between(bx, gc.pi(y)).size() != k) add("parallel", x, "parallel arrows to " + vname(y) + " differ in number");
    if (t)
      for (ArrowId c : gc.cover.in_arrows(x)) {
        auto s = gc.cover.sigma(c);
        auto bs = gc.base.sigma(gc.pi_arrows.at(c));
        if (!s || !bs || gc.pi_arrows.at(*s) != *bs) add("sigma", x, "pi does not commute with sigma");
      }
  }
  r.has_length_function = length_function(gc.cover).has_value();
  return r;
}

VertexId lift_walk(const GenericCover& gc, const Walk& w) {
  if (w.start != gc.base_vertex) throw Error("walk does not start at the base point");
  walk_end(gc.base, w);
  VertexId cur = gc.base_lift;
  for (const auto& s : w.steps) {
    auto c = lift_arrow(gc, cur, s.arrow, s.inverse);
    if (!c) throw Error("radius exceeded");
    const Arrow& a = gc.cover.arrow(*c);
    cur = s.inverse ? a.source : a.target;
  }
  return cur;
}

Walk canonical_walk(const GenericCover& gc, const Walk& w) { return gc.walks.at(static_cast<std::size_t>(lift_walk(gc, w))); }

PathWord lift_path(const GenericCover& gc, const PathWord& p, VertexId start_lift) {
  if (!gc.cover.has_vertex(start_lift)) throw Error("unknown cover " + vname(start_lift));
  if (gc.pi(start_lift) != p.start) throw Error("start lift does not lie over the start of the path");
  check_composable(gc.base, p);
  PathWord out{start_lift, {}};
  VertexId cur = start_lift;
  for (ArrowId a : p.arrows) {
    auto c = lift_arrow(gc, cur, a, false);
    if (!c) throw Error("radius exceeded");
    out.arrows.push_back(*c);
    cur = gc.cover.arrow(*c).target;
  }
  return out;
}

std::vector<PathWord> lift_sectional_family(const GenericCover& gc, const SectionalFamily& family,
                                            const RadicalFiltration& rf, std::optional<VertexId> start_lift) {
  FamilyCheck check = check_sectional_family(family, rf);
  if (!check.ok) throw Error("invalid sectional family (" + check.condition + "): " + check.message);
  VertexId x;
  if (start_lift) {
    if (!gc.cover.has_vertex(*start_lift) || gc.pi(*start_lift) != family.root)
      throw Error("start lift does not lie over the root");
    x = *start_lift;
  } else if (family.root == gc.base_vertex) {
    x = gc.base_lift;
  } else {
    auto ls = gc.lifts(family.root);
    if (ls.empty()) throw Error("radius exceeded");
    auto it = std::find_if(ls.begin(), ls.end(), [&](VertexId v) { return gc.interior(v); });
    x = it == ls.end() ? ls.front() : *it;
  }
  std::map<std::pair<VertexId, VertexId>, std::size_t> used;
  std::vector<PathWord> out;
  for (const auto& path : family.paths) {
    PathWord w{x, {}};
    VertexId cur = x;
    for (const auto& f : path) {
      const VertexId target = f.codomain[0];
      std::vector<ArrowId> cands;
      for (ArrowId c : gc.cover.out_arrows(cur))
        if (gc.pi(gc.cover.arrow(c).target) == target) cands.push_back(c);
      if (cands.empty()) throw Error("radius exceeded");
      std::sort(cands.begin(), cands.end());
      const VertexId next = gc.cover.arrow(cands.front()).target;
      std::size_t& k = used[{cur, next}];
      if (k >= cands.size()) throw Error("sectional family needs more arrows " + vname(cur) + " -> " + vname(next) + " than exist");
      w.arrows.push_back(cands[k++]);
      cur = next;
    }
    out.push_back(std::move(w));
  }
  return out;
}

WellBehavedAssignment well_behaved_assignment(const GenericCover& gc, const RadicalFiltration& rf,
                                              const std::map<ArrowId, Morphism>& pinned) {
  const ARQuiver& ar = rf.ar();
  if (gc.base.vertex_count() != ar.vertex_count() || gc.base.arrow_count() != ar.arrow_count())
    throw Error("well-behaved assignment: cover base is not the knitted component");
  for (const auto& [c, f] : pinned) {
    if (!gc.cover.has_arrow(c)) throw Error("pinned arrow " + std::to_string(c) + " is not in the cover");
    const Arrow& a = gc.cover.arrow(c);
    ArMorphism m = ArMorphism::single(gc.pi(a.source), gc.pi(a.target), f);
    if (!is_irreducible(m, rf)) throw Error("pinned morphism at arrow " + std::to_string(c) + " is not irreducible");
  }
  auto len = length_function(gc.cover);
  if (!len) throw Error("well-behaved assignment: cover has no length function");
  std::vector<VertexId> order = gc.cover.vertices();
  std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    return std::pair(len->at(a), a) < std::pair(len->at(b), b);
  });

  WellBehavedAssignment out;
  for (VertexId y : order) {
    const auto& ins = gc.cover.in_arrows(y);
    if (ins.empty()) continue;
    auto t = gc.cover.tau(y);
    bool ready = t.has_value();
    if (ready)
      for (ArrowId c : ins)
        if (!out.morphisms.count(*gc.cover.sigma(c))) ready = false;
    if (!ready) {
      for (ArrowId c : ins) {
        auto p = pinned.find(c);
        out.morphisms[c] = p != pinned.end() ? p->second : ar.arrow(gc.pi_arrows.at(c)).morphism;
      }
      continue;
    }
    // v with sum v_a u_a = 0, matching the pins.
    const VertexId by = gc.pi(y);
    const VertexId bt = gc.pi(*t);
    std::vector<const HomSpace*> spaces;
    std::vector<std::size_t> offset;
    std::size_t unknowns = 0;
    const std::size_t rows = Morphism::zero(ar.module(bt), ar.module(by)).flatten().size();
    std::vector<Vector> cols;
    Vector rhs(rows);
    for (ArrowId c : ins) {
      const HomSpace& h = rf.hom(gc.pi(gc.cover.arrow(c).source), by);
      spaces.push_back(&h);
      offset.push_back(unknowns);
      const Morphism& u = out.morphisms.at(*gc.cover.sigma(c));
      auto p = pinned.find(c);
      if (p != pinned.end()) {
        Vector img = compose(p->second, u).flatten();
        for (std::size_t i = 0; i < rows; ++i) rhs[i] -= img[i];
        continue;
      }
      for (const auto& g : h.basis()) cols.push_back(compose(g, u).flatten());
      unknowns += h.dim();
    }
    std::vector<Vector> candidates;
    if (cols.empty()) {
      if (!is_zero(rhs)) throw Error("well-behaved extension blocked at " + vname(y));
      candidates.push_back({});
    } else {
      Matrix a = Matrix::from_columns(cols, rows);
      Matrix bm(rows, 1);
      for (std::size_t i = 0; i < rows; ++i) bm(i, 0) = rhs[i];
      auto sol = solve(a, bm);
      if (!sol) throw Error("well-behaved extension blocked at " + vname(y));
      Vector p(unknowns);
      for (std::size_t i = 0; i < unknowns; ++i) p[i] = (*sol)(i, 0);
      Matrix kb = kernel_basis(a);
      if (!is_zero(p)) candidates.push_back(p);
      Vector all = p;
      for (std::size_t k = 0; k < kb.rows(); ++k) {
        Vector v = p;
        for (std::size_t i = 0; i < unknowns; ++i) {
          v[i] += kb(k, i);
          all[i] += kb(k, i);
        }
        candidates.push_back(v);
      }
      candidates.push_back(all);
    }
    std::vector<QuiverRep> sources;
    for (ArrowId c : ins) sources.push_back(ar.module(gc.pi(gc.cover.arrow(c).source)));
    bool placed = false;
    for (const auto& v : candidates) {
      std::vector<Morphism> parts;
      for (std::size_t j = 0; j < ins.size(); ++j) {
        auto p = pinned.find(ins[j]);
        if (p != pinned.end()) {
          parts.push_back(p->second);
          continue;
        }
        const HomSpace& h = *spaces[j];
        Vector coords(v.begin() + static_cast<std::ptrdiff_t>(offset[j]),
                      v.begin() + static_cast<std::ptrdiff_t>(offset[j] + h.dim()));
        parts.push_back(h.element(coords));
      }
      if (!is_epi(stack_sources(parts, sources, ar.module(by)))) continue;
      for (std::size_t j = 0; j < ins.size(); ++j) out.morphisms[ins[j]] = parts[j];
      placed = true;
      break;
    }
    if (!placed) throw Error("well-behaved extension blocked at " + vname(y));
  }
  return out;
}

AssignmentCheck verify_assignment(const GenericCover& gc, const RadicalFiltration& rf, const WellBehavedAssignment& f) {
  const ARQuiver& ar = rf.ar();
  AssignmentCheck r;
  auto problem = [&r](VertexId v, const std::string& msg) { r.problems.push_back(vname(v) + ": " + msg); };
  for (VertexId x : gc.cover.vertices()) {
    if (!gc.interior(x)) continue;
    ++r.vertices_checked;
    const VertexId bx = gc.pi(x);
    bool complete = true;
    for (const auto* arrows : {&gc.cover.out_arrows(x), &gc.cover.in_arrows(x)})
      for (ArrowId c : *arrows)
        if (!f.morphisms.count(c)) {
          problem(x, "arrow " + std::to_string(c) + " has no morphism");
          complete = false;
        }
    if (!complete) continue;
    if (!gc.cover.out_arrows(x).empty()) {
      ArMorphism m{{bx}, {}, {}};
      for (ArrowId c : gc.cover.out_arrows(x)) {
        m.codomain.push_back(gc.pi(gc.cover.arrow(c).target));
        m.parts.push_back({f.morphisms.at(c)});
      }
      if (!is_irreducible(m, rf)) problem(x, "arrows starting here are not minimal left almost split");
    }
    if (!gc.cover.in_arrows(x).empty()) {
      ArMorphism m{{}, {bx}, {{}}};
      for (ArrowId c : gc.cover.in_arrows(x)) {
        m.domain.push_back(gc.pi(gc.cover.arrow(c).source));
        m.parts[0].push_back(f.morphisms.at(c));
      }
      if (!is_irreducible(m, rf)) problem(x, "arrows ending here are not minimal right almost split");
    }
    auto t = gc.cover.tau(x);
    if (!t) continue;
    ++r.meshes_checked;
    std::vector<Morphism> us, vs;
    std::vector<QuiverRep> mids;
    bool have = true;
    for (ArrowId c : gc.cover.in_arrows(x)) {
      auto s = gc.cover.sigma(c);
      if (!s || !f.morphisms.count(*s)) {
        have = false;
        break;
      }
      us.push_back(f.morphisms.at(*s));
      vs.push_back(f.morphisms.at(c));
      mids.push_back(ar.module(gc.pi(gc.cover.arrow(c).source)));
    }
    if (!have) {
      problem(x, "mesh arrows without morphisms");
      continue;
    }
    const QuiverRep& tm = ar.module(gc.pi(*t));
    const QuiverRep& xm = ar.module(bx);
    Morphism u = stack_targets(us, tm, mids);
    Morphism v = stack_sources(vs, mids, xm);
    std::size_t middle = 0;
    for (const auto& m : mids) middle += m.total_dim();
    if (!compose(v, u).is_zero()) problem(x, "mesh does not compose to zero");
    if (!is_mono(u) || !is_epi(v) || tm.total_dim() + xm.total_dim() != middle)
      problem(x, "mesh is not a short exact sequence");
  }
  return r;
}

QuiverFile export_cover(const GenericCover& gc) {
  QuiverFile f;
  f.quiver = gc.cover;
  f.pi_vertices = gc.pi_vertices;
  f.pi_arrows = gc.pi_arrows;
  return f;
}

}  // namespace arq
