#include "arq/probe.hpp"

#include <algorithm>
#include <random>

namespace arq {

namespace {

constexpr std::size_t kCap = 64;

std::size_t at_or_zero(const std::vector<std::size_t>& v, std::size_t i) { return i < v.size() ? v[i] : 0; }

// Vertices reachable from x along at most `depth` arrows, with their distance.
std::map<VertexId, std::size_t> forward_cone(const TranslationQuiver& q, VertexId x, std::size_t depth) {
  std::map<VertexId, std::size_t> seen{{x, 0}};
  std::vector<VertexId> frontier{x};
  for (std::size_t d = 1; d <= depth && !frontier.empty(); ++d) {
    std::vector<VertexId> next;
    for (VertexId v : frontier)
      for (ArrowId a : q.out_arrows(v)) {
        VertexId t = q.arrow(a).target;
        if (seen.emplace(t, d).second) next.push_back(t);
      }
    frontier = std::move(next);
  }
  return seen;
}

Morphism image(const GenericCover& gc, const ARQuiver& ar, const WellBehavedAssignment& F, const PathWord& p) {
  Morphism m = Morphism::identity(ar.module(gc.pi(p.start)));
  for (ArrowId c : p.arrows) {
    auto it = F.morphisms.find(c);
    if (it == F.morphisms.end()) throw Error("probe: assignment misses arrow " + std::to_string(c));
    m = compose(it->second, m);
  }
  return m;
}

}  // namespace

bool ProbePair::equal() const noexcept {
  if (skipped) return true;
  if (hom_dim != cover_dim || component_layers != cover_layers) return false;
  for (std::size_t n = 0; n < induced_ranks.size(); ++n)
    if (induced_ranks[n] != at_or_zero(component_layers, n)) return false;
  return true;
}

ProbeReport generalized_standard_probe(const RadicalFiltration& rf, const GenericCover& gc,
                                       const WellBehavedAssignment& F, const ProbeOptions& opt) {
  const ARQuiver& ar = rf.ar();
  if (gc.base.vertex_count() != ar.vertex_count()) throw Error("probe: cover base does not match the component");
  MeshCategory mc(gc.cover);
  const auto& len = mc.lengths();

  std::vector<std::pair<VertexId, VertexId>> todo;
  for (VertexId x : gc.cover.vertices())
    if (gc.interior(x))
      for (std::size_t b = 0; b < ar.vertex_count(); ++b) todo.emplace_back(x, static_cast<VertexId>(b));
  if (opt.sample && opt.sample < todo.size()) {
    std::mt19937_64 rng(opt.seed);
    std::shuffle(todo.begin(), todo.end(), rng);
    todo.resize(opt.sample);
    std::sort(todo.begin(), todo.end());
  }

  ProbeReport rep;
  for (auto [x, b] : todo) {
    ProbePair p;
    p.x = x;
    p.y = b;
    const VertexId bx = gc.pi(x);
    auto dims = rf.dims(bx, b, kCap);
    if (dims.size() > kCap && dims.back() != 0) {
      p.skipped = true;
      p.reason = "radical filtration does not vanish within " + std::to_string(kCap) + " levels";
    }
    // Top nonzero level plus one, so that stray cover classes just above it show up.
    const std::size_t depth = dims.empty() || dims[0] == 0 ? 0 : dims.size() - 1;
    for (std::size_t n = 1; !p.skipped && n <= depth; ++n)
      if (!rf.rad(bx, b, n).exact) {
        p.skipped = true;
        p.reason = "radical layer " + std::to_string(n) + " is only a lower bound";
      }
    auto cone = forward_cone(gc.cover, x, depth);
    for (const auto& [v, d] : cone)
      if (!p.skipped && !gc.interior(v)) {
        p.skipped = true;
        p.reason = "forward cone leaves the window at vertex " + std::to_string(v);
      }
    if (p.skipped) {
      ++rep.skipped;
      rep.pairs.push_back(std::move(p));
      continue;
    }

    p.hom_dim = at_or_zero(dims, 0);
    p.component_layers.assign(depth + 1, 0);
    p.cover_layers.assign(depth + 1, 0);
    for (std::size_t n = 0; n <= depth; ++n) p.component_layers[n] = at_or_zero(dims, n) - at_or_zero(dims, n + 1);

    const std::size_t levels = std::min(depth, opt.max_level);
    std::vector<std::vector<PathWord>> by_level(levels + 1);
    for (VertexId z : gc.lifts(b)) {
      if (!cone.count(z)) continue;
      p.cover_dim += mc.hom_dim(x, z);
      auto rd = mc.radical_dims(x, z);
      for (std::size_t n = 0; n <= depth; ++n) p.cover_layers[n] += at_or_zero(rd, n) - at_or_zero(rd, n + 1);
      const auto l = static_cast<std::size_t>(len.at(z) - len.at(x));
      if (l <= levels)
        for (auto& path : mc.hom_basis(x, z)) by_level[l].push_back(std::move(path));
    }

    const HomSpace& h = rf.hom(bx, b);
    p.induced_ranks.assign(levels + 1, 0);
    for (std::size_t n = 0; n <= levels; ++n) {
      Subspace s = n + 1 <= depth ? rf.rad(bx, b, n + 1).space : Subspace(h.dim());
      for (const auto& path : by_level[n]) p.induced_ranks[n] += s.add(h.coordinates(image(gc, ar, F, path)));
    }

    ++rep.compared;
    if (!p.equal()) ++rep.mismatches;
    rep.pairs.push_back(std::move(p));
  }
  return rep;
}

}  // namespace arq
