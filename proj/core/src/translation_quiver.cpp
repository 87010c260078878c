#include "arq/translation_quiver.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace arq {

namespace {

const std::vector<ArrowId> kNoArrows;

std::string vname(VertexId v) { return std::to_string(v); }

}  // namespace

void TranslationQuiver::add_vertex(VertexId v, bool projective, bool injective) {
  if (!vertices_.emplace(v, VertexMarks{projective, injective}).second)
    throw Error("duplicate vertex " + vname(v));
}

void TranslationQuiver::set_marks(VertexId v, bool projective, bool injective) {
  auto it = vertices_.find(v);
  if (it == vertices_.end()) throw Error("unknown vertex " + vname(v));
  it->second = VertexMarks{projective, injective};
}

void TranslationQuiver::add_arrow(ArrowId a, VertexId source, VertexId target) {
  if (!arrows_.emplace(a, Arrow{a, source, target}).second) throw Error("duplicate arrow " + std::to_string(a));
  out_[source].push_back(a);
  in_[target].push_back(a);
  std::sort(out_[source].begin(), out_[source].end());
  std::sort(in_[target].begin(), in_[target].end());
}

void TranslationQuiver::set_tau(VertexId x, VertexId tau_x) {
  if (!tau_.emplace(x, tau_x).second) throw Error("tau already defined at " + vname(x));
  tau_inv_.emplace(tau_x, x);
}

void TranslationQuiver::set_sigma(ArrowId a, ArrowId sigma_a) {
  if (!sigma_.emplace(a, sigma_a).second) throw Error("sigma already defined at arrow " + std::to_string(a));
}

std::vector<VertexId> TranslationQuiver::vertices() const {
  std::vector<VertexId> out;
  out.reserve(vertices_.size());
  for (const auto& [v, m] : vertices_) out.push_back(v);
  return out;
}

std::vector<Arrow> TranslationQuiver::arrows() const {
  std::vector<Arrow> out;
  out.reserve(arrows_.size());
  for (const auto& [id, a] : arrows_) out.push_back(a);
  return out;
}

const Arrow& TranslationQuiver::arrow(ArrowId a) const {
  auto it = arrows_.find(a);
  if (it == arrows_.end()) throw Error("unknown arrow " + std::to_string(a));
  return it->second;
}

bool TranslationQuiver::is_projective(VertexId v) const {
  auto it = vertices_.find(v);
  if (it == vertices_.end()) throw Error("unknown vertex " + vname(v));
  return it->second.projective;
}

bool TranslationQuiver::is_injective(VertexId v) const {
  auto it = vertices_.find(v);
  if (it == vertices_.end()) throw Error("unknown vertex " + vname(v));
  return it->second.injective;
}

std::optional<VertexId> TranslationQuiver::tau(VertexId x) const {
  auto it = tau_.find(x);
  if (it == tau_.end()) return std::nullopt;
  return it->second;
}

std::optional<VertexId> TranslationQuiver::tau_inverse(VertexId x) const {
  auto it = tau_inv_.find(x);
  if (it == tau_inv_.end()) return std::nullopt;
  return it->second;
}

std::optional<ArrowId> TranslationQuiver::sigma(ArrowId a) const {
  auto it = sigma_.find(a);
  if (it == sigma_.end()) return std::nullopt;
  return it->second;
}

const std::vector<ArrowId>& TranslationQuiver::out_arrows(VertexId v) const {
  auto it = out_.find(v);
  return it == out_.end() ? kNoArrows : it->second;
}

const std::vector<ArrowId>& TranslationQuiver::in_arrows(VertexId v) const {
  auto it = in_.find(v);
  return it == in_.end() ? kNoArrows : it->second;
}

std::vector<ArrowId> TranslationQuiver::arrows_between(VertexId x, VertexId y) const {
  std::vector<ArrowId> out;
  for (ArrowId a : out_arrows(x))
    if (arrows_.at(a).target == y) out.push_back(a);
  return out;
}

Mesh TranslationQuiver::mesh(VertexId x) const {
  auto t = tau(x);
  if (!t || is_projective(x)) throw Error("vertex " + vname(x) + " is projective");
  Mesh m{x, *t, {}};
  for (ArrowId b : in_arrows(x)) {
    auto s = sigma(b);
    if (!s) throw Error("sigma undefined at arrow " + std::to_string(b));
    m.arms.emplace_back(*s, b);
  }
  return m;
}

bool operator==(const TranslationQuiver& a, const TranslationQuiver& b) {
  return a.vertices_ == b.vertices_ && a.arrows_ == b.arrows_ && a.tau_ == b.tau_ && a.sigma_ == b.sigma_;
}

ValidationReport validate(const TranslationQuiver& q) {
  ValidationReport r;
  auto add = [&r](std::string s) { r.violations.push_back(std::move(s)); };
  for (const Arrow& a : q.arrows()) {
    if (!q.has_vertex(a.source)) add("arrow " + std::to_string(a.id) + ": unknown source " + vname(a.source));
    if (!q.has_vertex(a.target)) add("arrow " + std::to_string(a.id) + ": unknown target " + vname(a.target));
    if (a.source == a.target) add("arrow " + std::to_string(a.id) + " at " + vname(a.source) + ": loops forbidden");
  }
  if (!r.ok()) return r;

  std::map<VertexId, VertexId> preimage;
  for (const auto& [x, tx] : q.tau_map()) {
    if (!q.has_vertex(x)) {
      add("tau defined at unknown vertex " + vname(x));
      continue;
    }
    if (!q.has_vertex(tx)) {
      add("tau(" + vname(x) + ") is unknown vertex " + vname(tx));
      continue;
    }
    if (q.is_projective(x)) add("vertex " + vname(x) + " is marked projective but tau is defined");
    if (q.is_injective(tx)) add("vertex " + vname(tx) + " is marked injective but lies in the image of tau");
    auto [it, fresh] = preimage.emplace(tx, x);
    if (!fresh) add("tau is not injective: tau(" + vname(it->second) + ") = tau(" + vname(x) + ") = " + vname(tx));
  }
  for (VertexId v : q.vertices()) {
    if (!q.is_projective(v) && !q.tau(v)) add("vertex " + vname(v) + " is non-projective but tau is undefined");
    if (!q.is_injective(v) && !preimage.count(v))
      add("vertex " + vname(v) + " is non-injective but not in the image of tau");
  }

  // Arrow bijection y -> x versus tau(x) -> y, and sigma.
  for (const auto& [x, tx] : q.tau_map()) {
    if (!q.has_vertex(x) || !q.has_vertex(tx)) continue;
    std::map<VertexId, std::size_t> into, outof;
    for (ArrowId b : q.in_arrows(x)) ++into[q.arrow(b).source];
    for (ArrowId a : q.out_arrows(tx)) ++outof[q.arrow(a).target];
    if (into != outof) add("mesh at " + vname(x) + ": arrows into " + vname(x) + " do not match arrows out of " + vname(tx));
    std::set<ArrowId> images;
    for (ArrowId b : q.in_arrows(x)) {
      auto s = q.sigma(b);
      if (!s) {
        add("sigma undefined at arrow " + std::to_string(b) + " ending in non-projective " + vname(x));
        continue;
      }
      if (!q.has_arrow(*s)) {
        add("sigma(" + std::to_string(b) + ") is unknown arrow " + std::to_string(*s));
        continue;
      }
      const Arrow& sa = q.arrow(*s);
      if (sa.source != tx || sa.target != q.arrow(b).source)
        add("sigma(" + std::to_string(b) + ") = " + std::to_string(*s) + " is not an arrow " + vname(tx) + " -> " +
            vname(q.arrow(b).source));
      if (!images.insert(*s).second) add("sigma is not injective at mesh " + vname(x));
    }
  }
  for (const auto& [b, s] : q.sigma_map()) {
    if (!q.has_arrow(b)) {
      add("sigma defined at unknown arrow " + std::to_string(b));
      continue;
    }
    if (!q.tau(q.arrow(b).target)) add("sigma defined at arrow " + std::to_string(b) + " whose target is projective");
  }
  return r;
}

std::vector<std::vector<VertexId>> connected_components(const TranslationQuiver& q) {
  std::set<VertexId> seen;
  std::vector<std::vector<VertexId>> comps;
  for (VertexId start : q.vertices()) {
    if (seen.count(start)) continue;
    std::vector<VertexId> comp;
    std::deque<VertexId> queue{start};
    seen.insert(start);
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop_front();
      comp.push_back(v);
      auto visit = [&](VertexId w) {
        if (q.has_vertex(w) && seen.insert(w).second) queue.push_back(w);
      };
      for (ArrowId a : q.out_arrows(v)) visit(q.arrow(a).target);
      for (ArrowId a : q.in_arrows(v)) visit(q.arrow(a).source);
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

std::optional<LengthFunction> length_function(const TranslationQuiver& q) {
  auto comps = connected_components(q);
  if (comps.size() > 1) {
    std::ostringstream os;
    os << "translation quiver is disconnected:";
    for (const auto& c : comps) {
      os << " {";
      for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
      os << "}";
    }
    throw Error(os.str());
  }
  LengthFunction l;
  if (comps.empty()) return l;
  std::deque<VertexId> queue{comps[0].front()};
  l[comps[0].front()] = 0;
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    const auto lv = l[v];
    auto visit = [&](VertexId w, std::int64_t want) -> bool {
      auto it = l.find(w);
      if (it == l.end()) {
        l[w] = want;
        queue.push_back(w);
        return true;
      }
      return it->second == want;
    };
    for (ArrowId a : q.out_arrows(v))
      if (!visit(q.arrow(a).target, lv + 1)) return std::nullopt;
    for (ArrowId a : q.in_arrows(v))
      if (!visit(q.arrow(a).source, lv - 1)) return std::nullopt;
  }
  for (const auto& [x, tx] : q.tau_map())
    if (l.count(x) && l.count(tx) && l[tx] != l[x] - 2) return std::nullopt;
  return l;
}

void check_composable(const TranslationQuiver& q, const PathWord& p) {
  if (!q.has_vertex(p.start)) throw Error("path starts at unknown vertex " + vname(p.start));
  VertexId cur = p.start;
  for (std::size_t i = 0; i < p.arrows.size(); ++i) {
    const Arrow& a = q.arrow(p.arrows[i]);
    if (a.source != cur)
      throw Error("path is not composable at position " + std::to_string(i) + ": arrow " + std::to_string(a.id) +
                  " starts at " + vname(a.source) + ", expected " + vname(cur));
    cur = a.target;
  }
}

VertexId path_end(const TranslationQuiver& q, const PathWord& p) {
  check_composable(q, p);
  return p.arrows.empty() ? p.start : q.arrow(p.arrows.back()).target;
}

std::vector<std::size_t> hook_positions(const TranslationQuiver& q, const PathWord& p) {
  check_composable(q, p);
  std::vector<std::size_t> hooks;
  for (std::size_t i = 0; i + 1 < p.arrows.size(); ++i) {
    const Arrow& a = q.arrow(p.arrows[i]);
    const Arrow& b = q.arrow(p.arrows[i + 1]);
    if (q.is_projective(b.target)) continue;
    auto t = q.tau(b.target);
    if (t && *t == a.source) hooks.push_back(i);
  }
  return hooks;
}

bool is_sectional(const TranslationQuiver& q, const PathWord& p) { return hook_positions(q, p).empty(); }

std::map<std::pair<VertexId, VertexId>, std::int64_t> directed_distances(const TranslationQuiver& q) {
  std::map<std::pair<VertexId, VertexId>, std::int64_t> d;
  for (VertexId s : q.vertices()) {
    std::map<VertexId, std::int64_t> dist{{s, 0}};
    std::deque<VertexId> queue{s};
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop_front();
      for (ArrowId a : q.out_arrows(v)) {
        VertexId w = q.arrow(a).target;
        if (dist.emplace(w, dist[v] + 1).second) queue.push_back(w);
      }
    }
    for (VertexId t : q.vertices()) {
      auto it = dist.find(t);
      d[{s, t}] = it == dist.end() ? -1 : it->second;
    }
  }
  return d;
}

}  // namespace arq
