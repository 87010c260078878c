#include "arq/quiver_rep.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace arq {

Quiver::Quiver(std::vector<VertexId> vertex_ids, const std::vector<Arrow>& arrows) : ids_(std::move(vertex_ids)) {
  std::sort(ids_.begin(), ids_.end());
  if (std::adjacent_find(ids_.begin(), ids_.end()) != ids_.end()) throw Error("duplicate vertex id in quiver");
  std::vector<Arrow> sorted = arrows;
  std::sort(sorted.begin(), sorted.end(), [](const Arrow& a, const Arrow& b) { return a.id < b.id; });
  for (const Arrow& a : sorted) arrows_.push_back(QArrow{a.id, index_of(a.source), index_of(a.target)});
}

Quiver Quiver::from_translation_quiver(const TranslationQuiver& q) { return Quiver(q.vertices(), q.arrows()); }

std::size_t Quiver::index_of(VertexId v) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
  if (it == ids_.end() || *it != v) throw Error("unknown quiver vertex " + std::to_string(v));
  return static_cast<std::size_t>(it - ids_.begin());
}

std::size_t Quiver::arrow_index(ArrowId a) const {
  for (std::size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].id == a) return i;
  throw Error("unknown quiver arrow " + std::to_string(a));
}

std::vector<std::size_t> Quiver::out_arrows(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].source == v) out.push_back(i);
  return out;
}

std::vector<std::size_t> Quiver::in_arrows(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].target == v) out.push_back(i);
  return out;
}

bool Quiver::is_acyclic() const {
  std::vector<std::size_t> indeg(ids_.size(), 0);
  for (const auto& a : arrows_) ++indeg[a.target];
  std::deque<std::size_t> ready;
  for (std::size_t v = 0; v < ids_.size(); ++v)
    if (indeg[v] == 0) ready.push_back(v);
  std::size_t seen = 0;
  while (!ready.empty()) {
    std::size_t v = ready.front();
    ready.pop_front();
    ++seen;
    for (std::size_t a : out_arrows(v))
      if (--indeg[arrows_[a].target] == 0) ready.push_back(arrows_[a].target);
  }
  return seen == ids_.size();
}

bool Quiver::is_connected() const {
  if (ids_.empty()) return true;
  std::vector<std::size_t> parent(ids_.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& a : arrows_) parent[find(a.source)] = find(a.target);
  std::size_t root = find(0);
  for (std::size_t v = 1; v < ids_.size(); ++v)
    if (find(v) != root) return false;
  return true;
}

Quiver Quiver::opposite() const {
  std::vector<Arrow> rev;
  for (const auto& a : arrows_) rev.push_back(Arrow{a.id, ids_[a.target], ids_[a.source]});
  return Quiver(ids_, rev);
}

QuiverRep::QuiverRep(QuiverPtr q, std::vector<std::size_t> dims, std::vector<Matrix> maps)
    : quiver_(std::move(q)), dims_(std::move(dims)), maps_(std::move(maps)) {
  if (dims_.size() != quiver_->vertex_count()) throw Error("representation: dimension count mismatch");
  if (maps_.size() != quiver_->arrow_count()) throw Error("representation: map count mismatch");
  for (std::size_t i = 0; i < maps_.size(); ++i) {
    const auto& a = quiver_->arrows()[i];
    if (maps_[i].rows() != dims_[a.target] || maps_[i].cols() != dims_[a.source])
      throw Error("representation: map for arrow " + std::to_string(a.id) + " has the wrong shape");
  }
}

QuiverRep QuiverRep::zero(QuiverPtr q) {
  std::vector<std::size_t> dims(q->vertex_count(), 0);
  std::vector<Matrix> maps(q->arrow_count());
  return QuiverRep(std::move(q), std::move(dims), std::move(maps));
}

std::size_t QuiverRep::total_dim() const { return std::accumulate(dims_.begin(), dims_.end(), std::size_t{0}); }

bool operator==(const QuiverRep& a, const QuiverRep& b) {
  return a.quiver_ == b.quiver_ && a.dims_ == b.dims_ && a.maps_ == b.maps_;
}

Morphism Morphism::zero(const QuiverRep& m, const QuiverRep& n) {
  std::vector<Matrix> parts;
  for (std::size_t v = 0; v < m.dims().size(); ++v) parts.emplace_back(n.dim(v), m.dim(v));
  return Morphism(std::move(parts));
}

Morphism Morphism::identity(const QuiverRep& m) {
  std::vector<Matrix> parts;
  for (std::size_t d : m.dims()) parts.push_back(Matrix::identity(d));
  return Morphism(std::move(parts));
}

bool Morphism::is_zero() const {
  return std::all_of(parts_.begin(), parts_.end(), [](const Matrix& m) { return m.is_zero(); });
}

Vector Morphism::flatten() const {
  Vector v;
  for (const auto& m : parts_) v.insert(v.end(), m.data().begin(), m.data().end());
  return v;
}

Morphism& Morphism::operator+=(const Morphism& o) {
  if (o.parts_.size() != parts_.size()) throw Error("morphism: vertex count mismatch");
  for (std::size_t v = 0; v < parts_.size(); ++v) parts_[v] += o.parts_[v];
  return *this;
}

Morphism operator-(Morphism a, const Morphism& b) {
  if (a.parts_.size() != b.parts_.size()) throw Error("morphism: vertex count mismatch");
  for (std::size_t v = 0; v < a.parts_.size(); ++v) a.parts_[v] -= b.parts_[v];
  return a;
}

Morphism operator*(const Rational& s, Morphism a) {
  for (auto& m : a.parts_) m *= s;
  return a;
}

Morphism compose(const Morphism& g, const Morphism& f) {
  if (g.vertex_count() != f.vertex_count()) throw Error("compose: vertex count mismatch");
  std::vector<Matrix> parts;
  for (std::size_t v = 0; v < f.vertex_count(); ++v) parts.push_back(g.at(v) * f.at(v));
  return Morphism(std::move(parts));
}

bool is_intertwiner(const Morphism& f, const QuiverRep& m, const QuiverRep& n) {
  if (f.vertex_count() != m.dims().size()) return false;
  for (std::size_t v = 0; v < f.vertex_count(); ++v)
    if (f.at(v).rows() != n.dim(v) || f.at(v).cols() != m.dim(v)) return false;
  const auto& arrows = m.quiver().arrows();
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (!(f.at(arrows[i].target) * m.map(i) == n.map(i) * f.at(arrows[i].source))) return false;
  return true;
}

bool is_mono(const Morphism& f) {
  return std::all_of(f.parts().begin(), f.parts().end(), [](const Matrix& m) { return rank(m) == m.cols(); });
}

bool is_epi(const Morphism& f) {
  return std::all_of(f.parts().begin(), f.parts().end(), [](const Matrix& m) { return rank(m) == m.rows(); });
}

bool is_iso(const Morphism& f) { return is_mono(f) && is_epi(f); }

HomSpace::HomSpace(std::vector<std::size_t> src_dims, std::vector<std::size_t> tgt_dims, std::vector<Morphism> basis,
                   std::vector<std::size_t> coordinate_columns)
    : src_dims_(std::move(src_dims)),
      tgt_dims_(std::move(tgt_dims)),
      basis_(std::move(basis)),
      coord_cols_(std::move(coordinate_columns)) {}

Vector HomSpace::coordinates(const Morphism& f) const {
  Vector flat = f.flatten();
  Vector c(coord_cols_.size());
  for (std::size_t i = 0; i < coord_cols_.size(); ++i) c[i] = flat.at(coord_cols_[i]);
  return c;
}

Morphism HomSpace::zero() const {
  std::vector<Matrix> parts;
  for (std::size_t v = 0; v < src_dims_.size(); ++v) parts.emplace_back(tgt_dims_[v], src_dims_[v]);
  return Morphism(std::move(parts));
}

Morphism HomSpace::element(const Vector& coords) const {
  if (coords.size() != basis_.size()) throw Error("hom: coordinate length mismatch");
  Morphism out = zero();
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (sgn(coords[i]) != 0) out += coords[i] * basis_[i];
  return out;
}

HomSpace hom(const QuiverRep& m, const QuiverRep& n) {
  if (m.quiver_ptr() != n.quiver_ptr() && !(m.quiver().vertex_ids() == n.quiver().vertex_ids() &&
                                              m.quiver().arrow_count() == n.quiver().arrow_count()))
    throw Error("hom: representations over different quivers");
  const std::size_t nv = m.dims().size();
  std::vector<std::size_t> off(nv + 1, 0);
  for (std::size_t v = 0; v < nv; ++v) off[v + 1] = off[v] + n.dim(v) * m.dim(v);
  const std::size_t unknowns = off[nv];
  const auto& arrows = m.quiver().arrows();
  std::size_t eqs = 0;
  for (const auto& a : arrows) eqs += n.dim(a.target) * m.dim(a.source);
  Matrix sys(eqs, unknowns);
  std::size_t row = 0;
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    const std::size_t s = arrows[i].source, t = arrows[i].target;
    const Matrix& ma = m.map(i);
    const Matrix& na = n.map(i);
    const std::size_t mt = m.dim(t), ms = m.dim(s);
    for (std::size_t r = 0; r < n.dim(t); ++r)
      for (std::size_t c = 0; c < ms; ++c, ++row) {
        for (std::size_t k = 0; k < mt; ++k)
          if (sgn(ma(k, c)) != 0) sys(row, off[t] + r * mt + k) += ma(k, c);
        for (std::size_t k = 0; k < n.dim(s); ++k)
          if (sgn(na(r, k)) != 0) sys(row, off[s] + k * ms + c) -= na(r, k);
      }
  }
  Echelon e = row_reduce(sys);
  auto free = free_columns(e, unknowns);
  std::vector<Morphism> basis;
  for (std::size_t i = 0; i < free.size(); ++i) {
    Vector x(unknowns);
    x[free[i]] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = -e.form(r, free[i]);
    std::vector<Matrix> parts;
    for (std::size_t v = 0; v < nv; ++v) {
      Matrix p(n.dim(v), m.dim(v));
      for (std::size_t r = 0; r < n.dim(v); ++r)
        for (std::size_t c = 0; c < m.dim(v); ++c) p(r, c) = x[off[v] + r * m.dim(v) + c];
      parts.push_back(std::move(p));
    }
    basis.emplace_back(std::move(parts));
  }
  return HomSpace(m.dims(), n.dims(), std::move(basis), std::move(free));
}

KernelResult kernel(const Morphism& f, const QuiverRep& m, const QuiverRep& n) {
  (void)n;
  const std::size_t nv = m.dims().size();
  std::vector<Matrix> incl;
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < nv; ++v) {
    Matrix k = kernel_basis(f.at(v));
    incl.push_back(k.transposed());
    if (incl.back().rows() != m.dim(v)) incl.back() = Matrix(m.dim(v), 0);
    dims.push_back(k.rows());
  }
  std::vector<Matrix> maps;
  const auto& arrows = m.quiver().arrows();
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    const auto s = arrows[i].source, t = arrows[i].target;
    auto x = solve(incl[t], m.map(i) * incl[s]);
    if (!x) throw Error("kernel: induced map does not exist (argument is not an intertwiner)");
    maps.push_back(std::move(*x));
  }
  QuiverRep km(m.quiver_ptr(), std::move(dims), std::move(maps));
  return KernelResult{std::move(km), Morphism(std::move(incl))};
}

CokernelResult cokernel(const Morphism& f, const QuiverRep& m, const QuiverRep& n) {
  (void)m;
  const std::size_t nv = n.dims().size();
  std::vector<Matrix> proj;
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < nv; ++v) {
    Matrix q = kernel_basis(f.at(v).transposed());
    if (q.cols() != n.dim(v)) q = Matrix(0, n.dim(v));
    dims.push_back(q.rows());
    proj.push_back(std::move(q));
  }
  std::vector<Matrix> maps;
  const auto& arrows = n.quiver().arrows();
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    const auto s = arrows[i].source, t = arrows[i].target;
    auto x = solve(proj[s].transposed(), (proj[t] * n.map(i)).transposed());
    if (!x) throw Error("cokernel: induced map does not exist (argument is not an intertwiner)");
    maps.push_back(x->transposed());
  }
  QuiverRep cm(n.quiver_ptr(), std::move(dims), std::move(maps));
  return CokernelResult{std::move(cm), Morphism(std::move(proj))};
}

QuiverRep direct_sum(std::span<const QuiverRep> parts) {
  if (parts.empty()) throw Error("direct_sum: empty list");
  const auto& q = parts.front().quiver_ptr();
  std::vector<std::size_t> dims(q->vertex_count(), 0);
  for (const auto& p : parts)
    for (std::size_t v = 0; v < dims.size(); ++v) dims[v] += p.dim(v);
  std::vector<Matrix> maps;
  for (std::size_t i = 0; i < q->arrow_count(); ++i) {
    std::vector<Matrix> blocks;
    for (const auto& p : parts) blocks.push_back(p.map(i));
    maps.push_back(block_diagonal(blocks));
  }
  return QuiverRep(q, std::move(dims), std::move(maps));
}

Morphism stack_targets(std::span<const Morphism> parts, const QuiverRep& m, std::span<const QuiverRep> targets) {
  (void)targets;
  std::vector<Matrix> out;
  for (std::size_t v = 0; v < m.dims().size(); ++v) {
    std::vector<Matrix> blocks;
    for (const auto& p : parts) blocks.push_back(p.at(v));
    out.push_back(vstack(blocks, m.dim(v)));
  }
  return Morphism(std::move(out));
}

Morphism stack_sources(std::span<const Morphism> parts, std::span<const QuiverRep> sources, const QuiverRep& n) {
  (void)sources;
  std::vector<Matrix> out;
  for (std::size_t v = 0; v < n.dims().size(); ++v) {
    std::vector<Matrix> blocks;
    for (const auto& p : parts) blocks.push_back(p.at(v));
    out.push_back(hstack(blocks, n.dim(v)));
  }
  return Morphism(std::move(out));
}

Subspace endomorphism_radical(const HomSpace& end) {
  const std::size_t k = end.dim();
  if (k == 0) return Subspace(0);
  std::vector<Matrix> left;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < k; ++j) cols.push_back(end.coordinates(compose(end.basis()[i], end.basis()[j])));
    left.push_back(Matrix::from_columns(cols, k));
  }
  Matrix form(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) form(i, j) = form(j, i) = trace(left[i] * left[j]);
  Matrix kb = kernel_basis(form);
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < kb.rows(); ++r) rows.push_back(kb.row(r));
  return Subspace::span(k, rows);
}

EndomorphismInfo endomorphism_info(const QuiverRep& m) {
  HomSpace end = hom(m, m);
  EndomorphismInfo info{end.dim(), 0};
  if (info.dim <= 1) return info;
  info.radical_dim = endomorphism_radical(end).dim();
  return info;
}

bool is_indecomposable(const QuiverRep& m) { return endomorphism_info(m).indecomposable(); }

std::optional<Morphism> find_isomorphism(const QuiverRep& a, const QuiverRep& b) {
  if (a.dims() != b.dims()) return std::nullopt;
  if (a.is_zero()) return Morphism::zero(a, b);
  HomSpace ab = hom(a, b);
  if (ab.dim() == 0) return std::nullopt;
  HomSpace ba = hom(b, a);
  for (const auto& g : ab.basis()) {
    if (!is_iso(g)) continue;
    return g;
  }
  for (const auto& g : ab.basis())
    for (const auto& h : ba.basis())
      if (is_iso(compose(h, g))) return g;
  for (std::size_t i = 0; i < ab.dim(); ++i) {
    Vector c(ab.dim());
    for (std::size_t j = 0; j < c.size(); ++j) c[j] = static_cast<long>((i * 7 + j * 3) % 11) + 1;
    Morphism g = ab.element(c);
    if (is_iso(g)) return g;
  }
  return std::nullopt;
}

namespace {

using ArrowSeq = std::vector<std::size_t>;

// Paths starting at i grouped by end vertex, in breadth-first order.
std::vector<std::vector<ArrowSeq>> paths_from(const Quiver& q, std::size_t i) {
  if (!q.is_acyclic()) throw Error("path algebra infinite-dimensional: quiver has an oriented cycle");
  std::vector<std::vector<ArrowSeq>> by_end(q.vertex_count());
  std::deque<std::pair<std::size_t, ArrowSeq>> queue{{i, {}}};
  while (!queue.empty()) {
    auto [v, p] = queue.front();
    queue.pop_front();
    by_end[v].push_back(p);
    for (std::size_t a : q.out_arrows(v)) {
      ArrowSeq next = p;
      next.push_back(a);
      queue.emplace_back(q.arrows()[a].target, std::move(next));
    }
  }
  return by_end;
}

// Paths ending at i grouped by start vertex, in breadth-first order.
std::vector<std::vector<ArrowSeq>> paths_to(const Quiver& q, std::size_t i) {
  if (!q.is_acyclic()) throw Error("path algebra infinite-dimensional: quiver has an oriented cycle");
  std::vector<std::vector<ArrowSeq>> by_start(q.vertex_count());
  std::deque<std::pair<std::size_t, ArrowSeq>> queue{{i, {}}};
  while (!queue.empty()) {
    auto [v, p] = queue.front();
    queue.pop_front();
    by_start[v].push_back(p);
    for (std::size_t a : q.in_arrows(v)) {
      ArrowSeq next{a};
      next.insert(next.end(), p.begin(), p.end());
      queue.emplace_back(q.arrows()[a].source, std::move(next));
    }
  }
  return by_start;
}

std::size_t position(const std::vector<ArrowSeq>& list, const ArrowSeq& p) {
  auto it = std::find(list.begin(), list.end(), p);
  if (it == list.end()) throw Error("internal: path not found");
  return static_cast<std::size_t>(it - list.begin());
}

}  // namespace

QuiverRep projective(const QuiverPtr& q, std::size_t i) {
  auto paths = paths_from(*q, i);
  std::vector<std::size_t> dims;
  for (const auto& l : paths) dims.push_back(l.size());
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < q->arrow_count(); ++a) {
    const auto& ar = q->arrows()[a];
    Matrix m(dims[ar.target], dims[ar.source]);
    for (std::size_t c = 0; c < paths[ar.source].size(); ++c) {
      ArrowSeq ext = paths[ar.source][c];
      ext.push_back(a);
      m(position(paths[ar.target], ext), c) = 1;
    }
    maps.push_back(std::move(m));
  }
  return QuiverRep(q, std::move(dims), std::move(maps));
}

QuiverRep injective(const QuiverPtr& q, std::size_t i) {
  auto paths = paths_to(*q, i);
  std::vector<std::size_t> dims;
  for (const auto& l : paths) dims.push_back(l.size());
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < q->arrow_count(); ++a) {
    const auto& ar = q->arrows()[a];
    Matrix m(dims[ar.target], dims[ar.source]);
    for (std::size_t c = 0; c < paths[ar.source].size(); ++c) {
      const ArrowSeq& p = paths[ar.source][c];
      if (p.empty() || p.front() != a) continue;
      ArrowSeq rest(p.begin() + 1, p.end());
      m(position(paths[ar.target], rest), c) = 1;
    }
    maps.push_back(std::move(m));
  }
  return QuiverRep(q, std::move(dims), std::move(maps));
}

QuiverRep simple(const QuiverPtr& q, std::size_t i) {
  std::vector<std::size_t> dims(q->vertex_count(), 0);
  dims.at(i) = 1;
  std::vector<Matrix> maps;
  for (const auto& a : q->arrows()) maps.emplace_back(dims[a.target], dims[a.source]);
  return QuiverRep(q, std::move(dims), std::move(maps));
}

Morphism projective_arrow_map(const QuiverPtr& q, std::size_t arrow_index) {
  const auto& ar = q->arrows().at(arrow_index);
  auto from = paths_from(*q, ar.target);
  auto to = paths_from(*q, ar.source);
  std::vector<Matrix> parts;
  for (std::size_t v = 0; v < q->vertex_count(); ++v) {
    Matrix m(to[v].size(), from[v].size());
    for (std::size_t c = 0; c < from[v].size(); ++c) {
      ArrowSeq ext{arrow_index};
      ext.insert(ext.end(), from[v][c].begin(), from[v][c].end());
      m(position(to[v], ext), c) = 1;
    }
    parts.push_back(std::move(m));
  }
  return Morphism(std::move(parts));
}

Morphism injective_arrow_map(const QuiverPtr& q, std::size_t arrow_index) {
  const auto& ar = q->arrows().at(arrow_index);
  auto from = paths_to(*q, ar.target);
  auto to = paths_to(*q, ar.source);
  std::vector<Matrix> parts;
  for (std::size_t v = 0; v < q->vertex_count(); ++v) {
    Matrix m(to[v].size(), from[v].size());
    for (std::size_t c = 0; c < from[v].size(); ++c) {
      const ArrowSeq& p = from[v][c];
      if (p.empty() || p.back() != arrow_index) continue;
      ArrowSeq rest(p.begin(), p.end() - 1);
      m(position(to[v], rest), c) = 1;
    }
    parts.push_back(std::move(m));
  }
  return Morphism(std::move(parts));
}

QuiverRep dual(const QuiverRep& m, const QuiverPtr& opposite) {
  std::vector<Matrix> maps;
  for (const auto& a : m.maps()) maps.push_back(a.transposed());
  return QuiverRep(opposite, m.dims(), std::move(maps));
}

Morphism dual(const Morphism& f) {
  std::vector<Matrix> parts;
  for (const auto& p : f.parts()) parts.push_back(p.transposed());
  return Morphism(std::move(parts));
}

std::vector<std::int64_t> dimension_vector(const QuiverRep& m) {
  return std::vector<std::int64_t>(m.dims().begin(), m.dims().end());
}

}  // namespace arq
