#include "arq/ar_quiver.hpp"

#include <algorithm>

namespace arq {

const ArVertex& ARQuiver::vertex(VertexId v) const {
  if (v < 0 || static_cast<std::size_t>(v) >= vertices_.size()) throw Error("unknown AR vertex " + std::to_string(v));
  return vertices_[static_cast<std::size_t>(v)];
}

ArVertex& ARQuiver::mutable_vertex(VertexId v) {
  if (v < 0 || static_cast<std::size_t>(v) >= vertices_.size()) throw Error("unknown AR vertex " + std::to_string(v));
  return vertices_[static_cast<std::size_t>(v)];
}

const ArArrow& ARQuiver::arrow(ArrowId a) const {
  if (a < 0 || static_cast<std::size_t>(a) >= arrows_.size()) throw Error("unknown AR arrow " + std::to_string(a));
  return arrows_[static_cast<std::size_t>(a)];
}

const std::vector<ArrowId>& ARQuiver::out_arrows(VertexId v) const {
  (void)vertex(v);
  return out_[static_cast<std::size_t>(v)];
}

const std::vector<ArrowId>& ARQuiver::in_arrows(VertexId v) const {
  (void)vertex(v);
  return in_[static_cast<std::size_t>(v)];
}

std::optional<VertexId> ARQuiver::tau(VertexId x) const {
  (void)vertex(x);
  return tau_[static_cast<std::size_t>(x)];
}

std::optional<VertexId> ARQuiver::tau_inverse(VertexId x) const {
  (void)vertex(x);
  return tau_inv_[static_cast<std::size_t>(x)];
}

const Mesh* ARQuiver::mesh_ending(VertexId x) const {
  (void)vertex(x);
  auto idx = mesh_at_[static_cast<std::size_t>(x)];
  return idx ? &meshes_[*idx] : nullptr;
}

VertexId ARQuiver::add_vertex(ArVertex v) {
  vertices_.push_back(std::move(v));
  out_.emplace_back();
  in_.emplace_back();
  tau_.emplace_back();
  tau_inv_.emplace_back();
  mesh_at_.emplace_back();
  return static_cast<VertexId>(vertices_.size() - 1);
}

ArrowId ARQuiver::add_arrow(VertexId s, VertexId t, Morphism f) {
  (void)vertex(s);
  (void)vertex(t);
  auto id = static_cast<ArrowId>(arrows_.size());
  arrows_.push_back(ArArrow{id, s, t, std::move(f)});
  out_[static_cast<std::size_t>(s)].push_back(id);
  in_[static_cast<std::size_t>(t)].push_back(id);
  return id;
}

void ARQuiver::add_mesh(Mesh m) {
  auto e = static_cast<std::size_t>(m.end);
  auto s = static_cast<std::size_t>(m.start);
  tau_.at(e) = m.start;
  tau_inv_.at(s) = m.end;
  mesh_at_.at(e) = meshes_.size();
  meshes_.push_back(std::move(m));
}

TranslationQuiver ARQuiver::translation_quiver() const {
  TranslationQuiver tq;
  for (std::size_t v = 0; v < vertices_.size(); ++v)
    tq.add_vertex(static_cast<VertexId>(v), !tau_[v].has_value(), !tau_inv_[v].has_value());
  for (const auto& a : arrows_) tq.add_arrow(a.id, a.source, a.target);
  for (const auto& m : meshes_) {
    tq.set_tau(m.end, m.start);
    for (auto [s, b] : m.arms) tq.set_sigma(b, s);
  }
  return tq;
}

std::optional<VertexId> ARQuiver::find_vertex(const QuiverRep& m) const {
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    if (vertices_[v].module.dims() != m.dims()) continue;
    if (find_isomorphism(vertices_[v].module, m)) return static_cast<VertexId>(v);
  }
  return std::nullopt;
}

std::optional<VertexId> ARQuiver::projective_vertex(std::size_t i) const {
  QuiverRep p = projective(quiver_, i);
  for (std::size_t v = 0; v < vertices_.size(); ++v)
    if (vertices_[v].projective && vertices_[v].module.dims() == p.dims()) return static_cast<VertexId>(v);
  return std::nullopt;
}

std::optional<VertexId> ARQuiver::injective_vertex(std::size_t i) const {
  QuiverRep inj = injective(quiver_, i);
  for (std::size_t v = 0; v < vertices_.size(); ++v)
    if (vertices_[v].injective && vertices_[v].module.dims() == inj.dims()) return static_cast<VertexId>(v);
  return std::nullopt;
}

ARQuiver ARQuiver::opposite(const QuiverPtr& opposite_quiver) const {
  KnitDirection d =
      direction_ == KnitDirection::from_projectives ? KnitDirection::from_injectives : KnitDirection::from_projectives;
  ARQuiver out(opposite_quiver, d, bound_);
  out.truncated_ = truncated_;
  for (const auto& v : vertices_) {
    ArVertex w{dual(v.module, opposite_quiver), v.injective, v.projective, v.orbit, v.right_complete, v.left_complete, ""};
    out.add_vertex(std::move(w));
  }
  for (const auto& a : arrows_) out.add_arrow(a.target, a.source, dual(a.morphism));
  for (const auto& m : meshes_) {
    Mesh flipped{m.start, m.end, {}};
    for (auto [s, b] : m.arms) flipped.arms.emplace_back(b, s);
    out.add_mesh(std::move(flipped));
  }
  return out;
}

namespace {

std::string dims_label(const QuiverRep& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.dims().size(); ++i) {
    if (i) s += ",";
    s += std::to_string(m.dims()[i]);
  }
  return s + "]";
}

void assign_labels(ARQuiver& ar) {
  const Quiver& q = ar.quiver();
  for (std::size_t v = 0; v < ar.vertex_count(); ++v) {
    ArVertex& x = ar.mutable_vertex(static_cast<VertexId>(v));
    std::string label;
    for (std::size_t i = 0; i < q.vertex_count(); ++i) {
      if (x.projective && projective(ar.quiver_ptr(), i).dims() == x.module.dims())
        label += (label.empty() ? "P" : "=P") + std::to_string(q.vertex_ids()[i]);
      if (x.injective && injective(ar.quiver_ptr(), i).dims() == x.module.dims())
        label += (label.empty() ? "I" : "=I") + std::to_string(q.vertex_ids()[i]);
    }
    x.label = label.empty() ? dims_label(x.module) : label;
  }
}

Morphism column_block(const Morphism& f, const std::vector<std::size_t>& offset, const QuiverRep& part) {
  std::vector<Matrix> parts;
  for (std::size_t v = 0; v < f.vertex_count(); ++v) {
    const Matrix& m = f.at(v);
    Matrix b(m.rows(), part.dim(v));
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < part.dim(v); ++c) b(r, c) = m(r, offset[v] + c);
    parts.push_back(std::move(b));
  }
  return Morphism(std::move(parts));
}

ARQuiver knit_from_projectives(const QuiverPtr& q, std::size_t bound, std::size_t verify_dim) {
  if (!q->is_acyclic()) throw Error("path algebra infinite-dimensional: quiver has an oriented cycle");
  if (q->vertex_count() == 0 || !q->is_connected()) throw Error("knitting needs a non-empty connected quiver");
  ARQuiver ar(q, KnitDirection::from_projectives, bound);
  const std::size_t n = q->vertex_count();
  std::vector<std::vector<std::size_t>> injective_dims;
  for (std::size_t i = 0; i < n; ++i) injective_dims.push_back(injective(q, i).dims());
  for (std::size_t i = 0; i < n; ++i) {
    ArVertex v{projective(q, i), true, false, 0, true, false, ""};
    ar.add_vertex(std::move(v));
  }
  for (std::size_t a = 0; a < q->arrow_count(); ++a) {
    const auto& qa = q->arrows()[a];
    ar.add_arrow(static_cast<VertexId>(qa.target), static_cast<VertexId>(qa.source), projective_arrow_map(q, a));
  }
  std::vector<bool> processed(n, false);
  for (;;) {
    std::optional<VertexId> next;
    for (std::size_t v = 0; v < ar.vertex_count() && !next; ++v) {
      if (processed[v] || ar.vertex(static_cast<VertexId>(v)).orbit >= bound) continue;
      bool ready = true;
      for (ArrowId a : ar.in_arrows(static_cast<VertexId>(v)))
        if (!processed[static_cast<std::size_t>(ar.arrow(a).source)]) ready = false;
      if (ready) next = static_cast<VertexId>(v);
    }
    if (!next) break;
    const VertexId x = *next;
    processed[static_cast<std::size_t>(x)] = true;
    ar.mutable_vertex(x).right_complete = true;
    const QuiverRep xm = ar.module(x);
    const std::vector<ArrowId> outs = ar.out_arrows(x);
    std::vector<QuiverRep> targets;
    std::vector<Morphism> maps;
    for (ArrowId a : outs) {
      targets.push_back(ar.module(ar.arrow(a).target));
      maps.push_back(ar.arrow(a).morphism);
    }
    bool inj = outs.empty();
    Morphism phi;
    if (!inj) {
      phi = stack_targets(maps, xm, targets);
      inj = !is_mono(phi);
    }
    if (inj) {
      if (std::find(injective_dims.begin(), injective_dims.end(), xm.dims()) == injective_dims.end())
        throw Error("knitting: vertex " + std::to_string(x) + " has a non-mono left almost split map but is not injective");
      ar.mutable_vertex(x).injective = true;
      continue;
    }
    QuiverRep e = direct_sum(targets);
    CokernelResult c = cokernel(phi, xm, e);
    if (c.module.is_zero()) throw Error("knitting: empty cokernel at vertex " + std::to_string(x));
    if (c.module.total_dim() <= verify_dim && !is_indecomposable(c.module))
      throw Error("knitting: decomposable cokernel at vertex " + std::to_string(x));
    ArVertex nv{c.module, false, false, ar.vertex(x).orbit + 1, true, false, ""};
    VertexId y = ar.add_vertex(std::move(nv));
    processed.push_back(false);
    std::vector<std::size_t> offset(q->vertex_count(), 0);
    Mesh mesh{y, x, {}};
    for (std::size_t k = 0; k < outs.size(); ++k) {
      ArrowId b = ar.add_arrow(ar.arrow(outs[k]).target, y, column_block(c.projection, offset, targets[k]));
      mesh.arms.emplace_back(outs[k], b);
      for (std::size_t v = 0; v < offset.size(); ++v) offset[v] += targets[k].dim(v);
    }
    ar.add_mesh(std::move(mesh));
  }
  ar.set_truncated(std::find(processed.begin(), processed.end(), false) != processed.end());
  return ar;
}

}  // namespace

ARQuiver knit_ar_component(const QuiverPtr& q, KnitDirection dir, std::size_t bound, std::size_t verify_dim) {
  if (dir == KnitDirection::from_projectives) {
    ARQuiver ar = knit_from_projectives(q, bound, verify_dim);
    assign_labels(ar);
    return ar;
  }
  auto op = std::make_shared<const Quiver>(q->opposite());
  ARQuiver ar = knit_from_projectives(op, bound, verify_dim).opposite(q);
  assign_labels(ar);
  return ar;
}

AlmostSplitCheck check_almost_split(const ARQuiver& ar, VertexId x) {
  const Mesh* m = ar.mesh_ending(x);
  if (!m) throw Error("no mesh ends at vertex " + std::to_string(x));
  AlmostSplitCheck out;
  const QuiverRep& end = ar.module(x);
  const QuiverRep& start = ar.module(m->start);
  std::vector<QuiverRep> mids;
  std::vector<Morphism> left, right;
  for (auto [s, b] : m->arms) {
    mids.push_back(ar.module(ar.arrow(s).target));
    left.push_back(ar.arrow(s).morphism);
    right.push_back(ar.arrow(b).morphism);
  }
  QuiverRep mid = direct_sum(mids);
  Morphism phi = stack_targets(left, start, mids);
  Morphism psi = stack_sources(right, mids, end);
  out.exact = is_intertwiner(phi, start, mid) && is_intertwiner(psi, mid, end) && is_mono(phi) && is_epi(psi) &&
              compose(psi, phi).is_zero();
  for (std::size_t v = 0; v < end.dims().size() && out.exact; ++v)
    if (mid.dim(v) != start.dim(v) + end.dim(v)) out.exact = false;
  if (!out.exact) out.problems.push_back("sequence is not exact");
  out.right_almost_split = true;
  for (std::size_t u = 0; u < ar.vertex_count(); ++u) {
    const QuiverRep& um = ar.module(static_cast<VertexId>(u));
    HomSpace target = hom(um, end);
    if (target.dim() == 0) continue;
    Subspace rad(target.dim());
    if (static_cast<VertexId>(u) == x)
      rad = endomorphism_radical(target);
    else
      rad = Subspace::full(target.dim());
    Subspace through(target.dim());
    for (std::size_t k = 0; k < mids.size(); ++k) {
      HomSpace to_mid = hom(um, mids[k]);
      for (const auto& h : to_mid.basis()) through.add(target.coordinates(compose(right[k], h)));
    }
    if (!through.includes(rad)) {
      out.right_almost_split = false;
      out.problems.push_back("radical morphism from vertex " + std::to_string(u) + " does not factor");
    }
  }
  return out;
}

Matrix coxeter_matrix(const Quiver& q) {
  const std::size_t n = q.vertex_count();
  Matrix e = Matrix::identity(n);
  for (const auto& a : q.arrows()) e(a.source, a.target) -= 1;
  auto inv = inverse(e);
  if (!inv) throw Error("Euler form is degenerate");
  return Rational(-1) * (*inv * e.transposed());
}

}  // namespace arq
