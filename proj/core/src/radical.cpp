#include "arq/radical.hpp"

#include <algorithm>
#include <set>

namespace arq {

namespace {

std::size_t idx(VertexId v) { return static_cast<std::size_t>(v); }

}  // namespace

bool ArMorphism::is_zero() const {
  for (const auto& row : parts)
    for (const auto& f : row)
      if (!f.is_zero()) return false;
  return true;
}

ArMorphism ArMorphism::single(VertexId x, VertexId y, Morphism f) {
  return ArMorphism{{x}, {y}, {{std::move(f)}}};
}

ArMorphism ArMorphism::from_arrow(const ARQuiver& ar, ArrowId a) {
  const auto& arr = ar.arrow(a);
  return single(arr.source, arr.target, arr.morphism);
}

ArMorphism ArMorphism::zero(const ARQuiver& ar, std::vector<VertexId> domain, std::vector<VertexId> codomain) {
  ArMorphism out{std::move(domain), std::move(codomain), {}};
  for (auto y : out.codomain) {
    std::vector<Morphism> row;
    for (auto x : out.domain) row.push_back(Morphism::zero(ar.module(x), ar.module(y)));
    out.parts.push_back(std::move(row));
  }
  return out;
}

ArMorphism ArMorphism::out_map(const ARQuiver& ar, VertexId x) {
  ArMorphism out{{x}, {}, {}};
  for (auto a : ar.out_arrows(x)) {
    out.codomain.push_back(ar.arrow(a).target);
    out.parts.push_back({ar.arrow(a).morphism});
  }
  return out;
}

ArMorphism ArMorphism::in_map(const ARQuiver& ar, VertexId x) {
  ArMorphism out{{}, {x}, {{}}};
  for (auto a : ar.in_arrows(x)) {
    out.domain.push_back(ar.arrow(a).source);
    out.parts[0].push_back(ar.arrow(a).morphism);
  }
  return out;
}

ArMorphism operator+(const ArMorphism& a, const ArMorphism& b) {
  if (a.domain != b.domain || a.codomain != b.codomain) throw Error("morphism sum: shapes differ");
  ArMorphism out = a;
  for (std::size_t j = 0; j < out.parts.size(); ++j)
    for (std::size_t k = 0; k < out.parts[j].size(); ++k) out.parts[j][k] += b.parts[j][k];
  return out;
}

ArMorphism operator*(const Rational& s, ArMorphism a) {
  for (auto& row : a.parts)
    for (auto& f : row) f = s * std::move(f);
  return a;
}

ArMorphism compose(const ArMorphism& g, const ArMorphism& f) {
  if (f.codomain != g.domain) throw Error("morphism composite: codomain and domain differ");
  ArMorphism out{f.domain, g.codomain, {}};
  for (std::size_t j = 0; j < g.codomain.size(); ++j) {
    std::vector<Morphism> row;
    for (std::size_t k = 0; k < f.domain.size(); ++k) {
      std::optional<Morphism> acc;
      for (std::size_t m = 0; m < f.codomain.size(); ++m) {
        Morphism c = compose(g.parts[j][m], f.parts[m][k]);
        if (acc)
          *acc += c;
        else
          acc = std::move(c);
      }
      if (!acc) throw Error("morphism composite: empty middle term");
      row.push_back(std::move(*acc));
    }
    out.parts.push_back(std::move(row));
  }
  return out;
}

Subspace radical_of(const QuiverRep& x, const QuiverRep& y, const HomSpace& h) {
  if (x.dims() != y.dims()) return Subspace::full(h.dim());
  auto iso = find_isomorphism(x, y);
  if (!iso) return Subspace::full(h.dim());
  HomSpace end = hom(x, x);
  Subspace r = endomorphism_radical(end);
  Subspace out(h.dim());
  for (const auto& v : r.basis()) out.add(h.coordinates(compose(*iso, end.element(v))));
  return out;
}

const HomSpace& RadicalFiltration::hom(VertexId x, VertexId y) const {
  std::lock_guard lock(mu_);
  auto& slot = homs_[{x, y}];
  if (!slot) slot = std::make_unique<HomSpace>(arq::hom(ar_.module(x), ar_.module(y)));
  return *slot;
}

RadicalSpace RadicalFiltration::rad(VertexId x, VertexId y, std::size_t n, Anchor anchor) const {
  std::lock_guard lock(mu_);
  auto key = std::make_tuple(x, y, n);
  if (auto it = rads_.find(key); it != rads_.end()) return it->second;
  const HomSpace& h = hom(x, y);
  RadicalSpace out{Subspace(h.dim()), true};
  if (n == 0) {
    out.space = Subspace::full(h.dim());
  } else if (n == 1) {
    if (x == y) {
      out.space = endomorphism_radical(h);
    } else {
      out.space = Subspace::full(h.dim());
    }
  } else if (h.dim() > 0) {
    if (anchor == Anchor::automatic)
      anchor = ar_.direction() == KnitDirection::from_projectives ? Anchor::source : Anchor::target;
    // via_source walks the out-arrows of x, via_target the in-arrows of y.
    const bool can_source = v(x).right_complete;
    const bool can_target = v(y).left_complete;
    bool via_source = can_source && (anchor == Anchor::target || !can_target);
    bool via_target = can_target && !via_source;
    if (!can_source && !can_target) via_source = via_target = true;
    if (via_source) {
      for (auto a : ar_.out_arrows(x)) {
        const auto& arr = ar_.arrow(a);
        RadicalSpace inner = rad(arr.target, y, n - 1, anchor);
        out.exact = out.exact && inner.exact;
        const HomSpace& hi = hom(arr.target, y);
        for (const auto& c : inner.space.basis()) out.space.add(h.coordinates(compose(hi.element(c), arr.morphism)));
      }
    }
    if (via_target) {
      for (auto a : ar_.in_arrows(y)) {
        const auto& arr = ar_.arrow(a);
        RadicalSpace inner = rad(x, arr.source, n - 1, anchor);
        out.exact = out.exact && inner.exact;
        const HomSpace& hi = hom(x, arr.source);
        for (const auto& c : inner.space.basis()) out.space.add(h.coordinates(compose(arr.morphism, hi.element(c))));
      }
    }
    if (!can_source && !can_target) out.exact = false;
  }
  rads_.emplace(key, out);
  return out;
}

bool RadicalFiltration::in_rad(VertexId x, VertexId y, std::size_t n, const Morphism& f) const {
  return rad(x, y, n).space.contains(hom(x, y).coordinates(f));
}

std::vector<std::size_t> RadicalFiltration::dims(VertexId x, VertexId y, std::size_t cap) const {
  std::vector<std::size_t> out;
  for (std::size_t n = 0; n <= cap; ++n) {
    out.push_back(rad(x, y, n).space.dim());
    if (out.back() == 0) break;
  }
  return out;
}

std::optional<std::size_t> RadicalFiltration::depth(VertexId x, VertexId y, const Morphism& f, std::size_t cap) const {
  if (f.is_zero()) return std::nullopt;
  Vector c = hom(x, y).coordinates(f);
  for (std::size_t n = 1; n <= cap; ++n)
    if (!rad(x, y, n).space.contains(c)) return n - 1;
  return std::nullopt;
}

std::optional<std::size_t> RadicalFiltration::depth(const ArMorphism& f, std::size_t cap) const {
  std::optional<std::size_t> best;
  for (std::size_t j = 0; j < f.codomain.size(); ++j)
    for (std::size_t k = 0; k < f.domain.size(); ++k) {
      const auto& part = f.parts[j][k];
      if (part.is_zero()) continue;
      auto d = depth(f.domain[k], f.codomain[j], part, cap);
      if (!d) d = cap + 1;
      if (!best || *d < *best) best = d;
    }
  if (best && *best > cap) return std::nullopt;
  return best;
}

bool RadicalFiltration::in_rad(const ArMorphism& f, std::size_t n) const {
  for (std::size_t j = 0; j < f.codomain.size(); ++j)
    for (std::size_t k = 0; k < f.domain.size(); ++k)
      if (!in_rad(f.domain[k], f.codomain[j], n, f.parts[j][k])) return false;
  return true;
}

UniverseRadical rad_power(const QuiverRep& m, const QuiverRep& n, std::size_t power,
                          std::span<const QuiverRep> universe, bool universe_complete) {
  UniverseRadical out{hom(m, n), Subspace(0), !universe_complete};
  if (power == 0) {
    out.space = Subspace::full(out.hom.dim());
    return out;
  }
  const std::size_t u = universe.size();
  // Targets: the universe, then n.
  std::vector<const QuiverRep*> targets;
  for (const auto& x : universe) targets.push_back(&x);
  targets.push_back(&n);
  std::vector<HomSpace> from_m;
  std::vector<Subspace> level;
  for (const auto* t : targets) {
    from_m.push_back(hom(m, *t));
    level.push_back(radical_of(m, *t, from_m.back()));
  }
  // rad(U_a, T_b) as explicit morphisms.
  std::vector<std::vector<std::vector<Morphism>>> step(u);
  for (std::size_t a = 0; a < u; ++a)
    for (const auto* t : targets) {
      HomSpace h = hom(universe[a], *t);
      Subspace r = radical_of(universe[a], *t, h);
      std::vector<Morphism> gens;
      for (const auto& c : r.basis()) gens.push_back(h.element(c));
      step[a].push_back(std::move(gens));
    }
  for (std::size_t k = 2; k <= power; ++k) {
    std::vector<Subspace> next;
    for (std::size_t b = 0; b < targets.size(); ++b) {
      Subspace s(from_m[b].dim());
      for (std::size_t a = 0; a < u; ++a) {
        if (step[a][b].empty()) continue;
        for (const auto& c : level[a].basis()) {
          Morphism h = from_m[a].element(c);
          for (const auto& g : step[a][b]) s.add(from_m[b].coordinates(compose(g, h)));
        }
      }
      next.push_back(std::move(s));
    }
    level = std::move(next);
  }
  out.space = level.back();
  return out;
}

namespace {

// Components f_i: x -> y, radical and independent modulo rad^2.
bool independent_mod_rad2(const RadicalFiltration& rf, VertexId x, VertexId y, const std::vector<const Morphism*>& fs) {
  const HomSpace& h = rf.hom(x, y);
  Subspace r1 = rf.rad(x, y, 1).space;
  Subspace acc = rf.rad(x, y, 2).space;
  for (const auto* f : fs) {
    Vector c = h.coordinates(*f);
    if (!r1.contains(c)) return false;
    if (!acc.add(c)) return false;
  }
  return true;
}

}  // namespace

bool is_irreducible(const ArMorphism& f, const RadicalFiltration& rf) {
  if (f.domain.empty() || f.codomain.empty()) return false;
  if (f.domain.size() == 1) {
    std::set<VertexId> seen;
    for (auto y : f.codomain) {
      if (!seen.insert(y).second) continue;
      std::vector<const Morphism*> group;
      for (std::size_t j = 0; j < f.codomain.size(); ++j)
        if (f.codomain[j] == y) group.push_back(&f.parts[j][0]);
      if (!independent_mod_rad2(rf, f.domain[0], y, group)) return false;
    }
    return true;
  }
  if (f.codomain.size() == 1) {
    std::set<VertexId> seen;
    for (auto x : f.domain) {
      if (!seen.insert(x).second) continue;
      std::vector<const Morphism*> group;
      for (std::size_t k = 0; k < f.domain.size(); ++k)
        if (f.domain[k] == x) group.push_back(&f.parts[0][k]);
      if (!independent_mod_rad2(rf, x, f.codomain[0], group)) return false;
    }
    return true;
  }
  throw Error("irreducibility test needs an indecomposable domain or codomain");
}

FamilyCheck check_sectional_family(const SectionalFamily& family, const RadicalFiltration& rf) {
  const ARQuiver& ar = rf.ar();
  auto fail = [](std::string cond, std::size_t i, std::size_t j, std::string msg) {
    return FamilyCheck{false, std::move(cond), i, j, std::move(msg)};
  };
  auto pos = [](std::size_t i, std::size_t j) {
    return "f(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
  };
  if (family.paths.empty()) return fail("composable", 0, 0, "family has no paths");
  if (idx(family.root) >= ar.vertex_count()) throw Error("sectional family: root outside the component");
  for (std::size_t i = 0; i < family.paths.size(); ++i) {
    const auto& path = family.paths[i];
    if (path.empty()) return fail("composable", i, 0, "path " + std::to_string(i + 1) + " is empty");
    VertexId at = family.root;
    for (std::size_t j = 0; j < path.size(); ++j) {
      const auto& f = path[j];
      if (f.domain.size() != 1 || f.codomain.size() != 1)
        return fail("composable", i, j, pos(i, j) + " is not a map between indecomposables");
      if (idx(f.codomain[0]) >= ar.vertex_count()) throw Error("sectional family: module outside the component");
      if (f.domain[0] != at) return fail("composable", i, j, pos(i, j) + " does not start where the path stands");
      at = f.codomain[0];
    }
  }
  // Grouped independence, per step and pair of vertices.
  std::size_t longest = 0;
  for (const auto& p : family.paths) longest = std::max(longest, p.size());
  for (std::size_t l = 0; l < longest; ++l) {
    std::map<std::pair<VertexId, VertexId>, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < family.paths.size(); ++i)
      if (l < family.paths[i].size()) {
        const auto& f = family.paths[i][l];
        groups[{f.domain[0], f.codomain[0]}].push_back(i);
      }
    for (const auto& [key, members] : groups) {
      std::vector<const Morphism*> fs;
      for (auto i : members) fs.push_back(&family.paths[i][l].parts[0][0]);
      if (!independent_mod_rad2(rf, key.first, key.second, fs))
        return fail("independence", members.front(), l,
                    "morphisms at step " + std::to_string(l + 1) + " from " + ar.vertex(key.first).label + " to " +
                        ar.vertex(key.second).label + " are not independent modulo rad^2");
    }
  }
  // Hooks f(i,j) then f(i',j+1).
  for (std::size_t i = 0; i < family.paths.size(); ++i)
    for (std::size_t j = 0; j + 1 < longest && j < family.paths[i].size(); ++j) {
      const auto& f = family.paths[i][j];
      for (std::size_t i2 = 0; i2 < family.paths.size(); ++i2) {
        if (j + 1 >= family.paths[i2].size()) continue;
        const auto& g = family.paths[i2][j + 1];
        if (g.domain[0] != f.codomain[0]) continue;
        auto t = ar.tau(g.codomain[0]);
        if (t && *t == f.domain[0])
          return fail("hook", i2, j + 1, "hook " + pos(i, j) + " then " + pos(i2, j + 1));
      }
    }
  return {};
}

}  // namespace arq
