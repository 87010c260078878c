#include "arq/mesh_category.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace arq {

MeshCategory::MeshCategory(TranslationQuiver tq) : tq_(std::move(tq)) {
  auto report = validate(tq_);
  if (!report.ok()) throw Error("invalid translation quiver: " + report.violations.front());
  auto l = length_function(tq_);
  if (!l) throw Error("unbounded path spaces: translation quiver has no length function");
  length_ = std::move(*l);
}

MeshCategory::~MeshCategory() = default;

std::unique_ptr<MeshCategory> build_mesh_category(const TranslationQuiver& tq) {
  return std::make_unique<MeshCategory>(tq);
}

std::unique_ptr<MeshCategory::Table> MeshCategory::build_table(VertexId x) const {
  if (!tq_.has_vertex(x)) throw Error("unknown vertex " + std::to_string(x));
  std::set<VertexId> reach{x};
  std::deque<VertexId> queue{x};
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (ArrowId a : tq_.out_arrows(v)) {
      VertexId w = tq_.arrow(a).target;
      if (reach.insert(w).second) queue.push_back(w);
    }
  }
  std::vector<VertexId> order(reach.begin(), reach.end());
  std::sort(order.begin(), order.end(), [this](VertexId a, VertexId b) {
    return std::pair(length_.at(a), a) < std::pair(length_.at(b), b);
  });

  auto t = std::make_unique<Table>();
  t->nodes[x].basis.push_back(PathWord{x, {}});
  for (VertexId w : order) {
    if (w == x) continue;
    struct Block {
      ArrowId beta;
      VertexId y;
      std::size_t offset;
      std::size_t dim;
    };
    std::vector<Block> blocks;
    std::size_t udim = 0;
    for (ArrowId b : tq_.in_arrows(w)) {
      VertexId y = tq_.arrow(b).source;
      auto it = t->nodes.find(y);
      if (it == t->nodes.end() || it->second.basis.empty()) continue;
      blocks.push_back({b, y, udim, it->second.basis.size()});
      udim += it->second.basis.size();
    }
    Subspace rel(udim);
    if (!tq_.is_projective(w)) {
      VertexId tw = *tq_.tau(w);
      auto it = t->nodes.find(tw);
      if (it != t->nodes.end() && !it->second.basis.empty()) {
        const Node& tn = it->second;
        for (std::size_t j = 0; j < tn.basis.size(); ++j) {
          Vector u(udim);
          for (const Block& bl : blocks) {
            ArrowId s = *tq_.sigma(bl.beta);
            const Matrix& e = tn.extend.at(s);
            for (std::size_t i = 0; i < bl.dim; ++i) u[bl.offset + i] = e(i, j);
          }
          rel.add(std::move(u));
        }
      }
    }
    std::vector<std::size_t> free;
    {
      std::size_t k = 0;
      const auto& piv = rel.pivots();
      for (std::size_t c = 0; c < udim; ++c) {
        if (k < piv.size() && piv[k] == c) {
          ++k;
          continue;
        }
        free.push_back(c);
      }
    }
    Node& node = t->nodes[w];
    for (std::size_t c : free) {
      auto bl = std::find_if(blocks.begin(), blocks.end(),
                             [c](const Block& b) { return c >= b.offset && c < b.offset + b.dim; });
      PathWord p = t->nodes.at(bl->y).basis[c - bl->offset];
      p.arrows.push_back(bl->beta);
      node.basis.push_back(std::move(p));
    }
    for (const Block& bl : blocks) {
      Matrix e(free.size(), bl.dim);
      for (std::size_t i = 0; i < bl.dim; ++i) {
        Vector u(udim);
        u[bl.offset + i] = 1;
        u = rel.reduce(std::move(u));
        for (std::size_t r = 0; r < free.size(); ++r) e(r, i) = u[free[r]];
      }
      t->nodes.at(bl.y).extend.emplace(bl.beta, std::move(e));
    }
  }
  return t;
}

const MeshCategory::Table& MeshCategory::table(VertexId x) const {
  std::lock_guard lock(mutex_);
  auto it = tables_.find(x);
  if (it != tables_.end()) return *it->second;
  auto t = build_table(x);
  return *tables_.emplace(x, std::move(t)).first->second;
}

std::size_t MeshCategory::hom_dim(VertexId x, VertexId y) const {
  const Table& t = table(x);
  auto it = t.nodes.find(y);
  return it == t.nodes.end() ? 0 : it->second.basis.size();
}

std::vector<PathWord> MeshCategory::hom_basis(VertexId x, VertexId y) const {
  const Table& t = table(x);
  auto it = t.nodes.find(y);
  return it == t.nodes.end() ? std::vector<PathWord>{} : it->second.basis;
}

Vector MeshCategory::extend_along(const Table& t, VertexId from, Vector v, const std::vector<ArrowId>& arrows) const {
  VertexId cur = from;
  for (ArrowId a : arrows) {
    const Arrow& ar = tq_.arrow(a);
    if (ar.source != cur) throw Error("path is not composable at arrow " + std::to_string(a));
    cur = ar.target;
    auto it = t.nodes.find(ar.source);
    bool zero = it == t.nodes.end() || it->second.basis.empty() || is_zero(v);
    if (zero) {
      auto jt = t.nodes.find(cur);
      v.assign(jt == t.nodes.end() ? 0 : jt->second.basis.size(), Rational(0));
      continue;
    }
    v = it->second.extend.at(a).apply(v);
  }
  return v;
}

MorphismVector MeshCategory::reduce(const PathWord& p) const {
  VertexId end = path_end(tq_, p);
  const Table& t = table(p.start);
  Vector v{Rational(1)};
  return MorphismVector{p.start, end, extend_along(t, p.start, std::move(v), p.arrows)};
}

MorphismVector MeshCategory::identity(VertexId x) const { return reduce(PathWord{x, {}}); }

MorphismVector MeshCategory::zero(VertexId x, VertexId y) const {
  return MorphismVector{x, y, Vector(hom_dim(x, y))};
}

MorphismVector MeshCategory::compose(const MorphismVector& g, const MorphismVector& f) const {
  if (f.target != g.source) throw Error("compose: morphisms are not composable");
  const Table& tx = table(f.source);
  auto basis = hom_basis(g.source, g.target);
  Vector out(hom_dim(f.source, g.target));
  for (std::size_t j = 0; j < basis.size(); ++j) {
    if (sgn(g.coords[j]) == 0) continue;
    Vector w = extend_along(tx, f.target, f.coords, basis[j].arrows);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += g.coords[j] * w[i];
  }
  return MorphismVector{f.source, g.target, std::move(out)};
}

Subspace MeshCategory::radical_power(VertexId x, VertexId y, std::size_t n) const {
  const std::size_t d = hom_dim(x, y);
  if (n == 0) return Subspace::full(d);
  if (d == 0 || length_.at(y) - length_.at(x) < static_cast<std::int64_t>(n)) return Subspace(d);
  std::lock_guard lock(mutex_);
  auto key = std::make_tuple(x, y, n);
  if (auto it = rad_memo_.find(key); it != rad_memo_.end()) return it->second;
  Subspace s(d);
  for (ArrowId a : tq_.out_arrows(x)) {
    VertexId u = tq_.arrow(a).target;
    if (hom_dim(u, y) == 0) continue;
    MorphismVector alpha = reduce(PathWord{x, {a}});
    Subspace prev = radical_power(u, y, n - 1);
    for (const Vector& b : prev.basis()) s.add(compose(MorphismVector{u, y, b}, alpha).coords);
  }
  rad_memo_.emplace(key, s);
  return s;
}

std::vector<std::size_t> MeshCategory::radical_dims(VertexId x, VertexId y) const {
  std::vector<std::size_t> dims{hom_dim(x, y)};
  if (dims[0] == 0) return dims;
  for (std::size_t n = 1;; ++n) {
    dims.push_back(radical_power(x, y, n).dim());
    if (dims.back() == 0) break;
  }
  return dims;
}

std::vector<PathWord> enumerate_paths(const TranslationQuiver& q, VertexId x, VertexId y, std::size_t limit) {
  std::set<VertexId> reaches{y};
  std::deque<VertexId> queue{y};
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (ArrowId a : q.in_arrows(v)) {
      VertexId u = q.arrow(a).source;
      if (reaches.insert(u).second) queue.push_back(u);
    }
  }
  std::vector<PathWord> out;
  if (!reaches.count(x)) return out;
  PathWord cur{x, {}};
  std::vector<std::pair<VertexId, std::size_t>> stack{{x, 0}};
  std::set<VertexId> on_path{x};
  if (x == y) out.push_back(cur);
  while (!stack.empty() && out.size() < limit) {
    auto& [v, next] = stack.back();
    const auto& outs = q.out_arrows(v);
    if (next >= outs.size()) {
      on_path.erase(v);
      stack.pop_back();
      if (!cur.arrows.empty()) cur.arrows.pop_back();
      continue;
    }
    ArrowId a = outs[next++];
    VertexId w = q.arrow(a).target;
    if (!reaches.count(w) || on_path.count(w)) continue;
    cur.arrows.push_back(a);
    if (w == y) {
      out.push_back(cur);
      cur.arrows.pop_back();
      continue;
    }
    on_path.insert(w);
    stack.emplace_back(w, 0);
  }
  return out;
}

SectionalIndependenceReport sectional_independence(const MeshCategory& mc, VertexId x, VertexId y) {
  SectionalIndependenceReport r;
  const auto& q = mc.quiver();
  for (auto& p : enumerate_paths(q, x, y))
    if (is_sectional(q, p)) r.paths.push_back(std::move(p));
  if (r.paths.empty()) return r;
  r.length = r.paths.front().arrows.size();
  Subspace higher = mc.radical_power(x, y, r.length + 1);
  std::vector<Vector> cols;
  for (const auto& p : r.paths) cols.push_back(higher.reduce(mc.reduce(p).coords));
  Matrix m = Matrix::from_columns(cols, mc.hom_dim(x, y));
  Matrix k = kernel_basis(m);
  if (k.rows() > 0) {
    r.independent = false;
    r.witness = k.row(0);
  }
  return r;
}

}  // namespace arq
