#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "arq/matrix.hpp"
#include "arq/translation_quiver.hpp"

namespace arq {

// Ordinary finite quiver; vertices and arrows are addressed by dense indices
// internally and carry their file ids.
class Quiver {
 public:
  struct QArrow {
    ArrowId id;
    std::size_t source;
    std::size_t target;
  };

  Quiver(std::vector<VertexId> vertex_ids, const std::vector<Arrow>& arrows);
  static Quiver from_translation_quiver(const TranslationQuiver& q);

  std::size_t vertex_count() const noexcept { return ids_.size(); }
  std::size_t arrow_count() const noexcept { return arrows_.size(); }
  const std::vector<VertexId>& vertex_ids() const noexcept { return ids_; }
  const std::vector<QArrow>& arrows() const noexcept { return arrows_; }
  std::size_t index_of(VertexId v) const;
  std::size_t arrow_index(ArrowId a) const;

  bool is_acyclic() const;
  bool is_connected() const;
  Quiver opposite() const;
  std::vector<std::size_t> out_arrows(std::size_t v) const;
  std::vector<std::size_t> in_arrows(std::size_t v) const;

 private:
  std::vector<VertexId> ids_;
  std::vector<QArrow> arrows_;
};

using QuiverPtr = std::shared_ptr<const Quiver>;

// Covariant representation: map(a) has shape dim(target) x dim(source).
class QuiverRep {
 public:
  QuiverRep(QuiverPtr q, std::vector<std::size_t> dims, std::vector<Matrix> maps);
  static QuiverRep zero(QuiverPtr q);

  const Quiver& quiver() const noexcept { return *quiver_; }
  const QuiverPtr& quiver_ptr() const noexcept { return quiver_; }
  std::size_t dim(std::size_t v) const { return dims_.at(v); }
  const std::vector<std::size_t>& dims() const noexcept { return dims_; }
  std::size_t total_dim() const;
  const Matrix& map(std::size_t arrow_index) const { return maps_.at(arrow_index); }
  const std::vector<Matrix>& maps() const noexcept { return maps_; }
  bool is_zero() const { return total_dim() == 0; }

  friend bool operator==(const QuiverRep& a, const QuiverRep& b);

 private:
  QuiverPtr quiver_;
  std::vector<std::size_t> dims_;
  std::vector<Matrix> maps_;
};

// Vertexwise family of linear maps; component v has shape N_v x M_v.
class Morphism {
 public:
  Morphism() = default;
  explicit Morphism(std::vector<Matrix> parts) : parts_(std::move(parts)) {}
  static Morphism zero(const QuiverRep& m, const QuiverRep& n);
  static Morphism identity(const QuiverRep& m);

  const Matrix& at(std::size_t v) const { return parts_.at(v); }
  Matrix& at(std::size_t v) { return parts_.at(v); }
  std::size_t vertex_count() const noexcept { return parts_.size(); }
  const std::vector<Matrix>& parts() const noexcept { return parts_; }

  bool is_zero() const;
  Vector flatten() const;

  Morphism& operator+=(const Morphism& o);
  friend Morphism operator+(Morphism a, const Morphism& b) { return a += b; }
  friend Morphism operator-(Morphism a, const Morphism& b);
  friend Morphism operator*(const Rational& s, Morphism a);
  friend bool operator==(const Morphism& a, const Morphism& b) { return a.parts_ == b.parts_; }

 private:
  std::vector<Matrix> parts_;
};

// g after f.
Morphism compose(const Morphism& g, const Morphism& f);
bool is_intertwiner(const Morphism& f, const QuiverRep& m, const QuiverRep& n);
bool is_mono(const Morphism& f);
bool is_epi(const Morphism& f);
bool is_iso(const Morphism& f);

class HomSpace {
 public:
  HomSpace() = default;
  HomSpace(std::vector<std::size_t> src_dims, std::vector<std::size_t> tgt_dims, std::vector<Morphism> basis,
           std::vector<std::size_t> coordinate_columns);

  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<Morphism>& basis() const noexcept { return basis_; }
  Vector coordinates(const Morphism& f) const;
  Morphism element(const Vector& coords) const;
  Morphism zero() const;

 private:
  std::vector<std::size_t> src_dims_;
  std::vector<std::size_t> tgt_dims_;
  std::vector<Morphism> basis_;
  std::vector<std::size_t> coord_cols_;
};

HomSpace hom(const QuiverRep& m, const QuiverRep& n);

struct KernelResult {
  QuiverRep module;
  Morphism inclusion;
};
struct CokernelResult {
  QuiverRep module;
  Morphism projection;
};

KernelResult kernel(const Morphism& f, const QuiverRep& m, const QuiverRep& n);
CokernelResult cokernel(const Morphism& f, const QuiverRep& m, const QuiverRep& n);

QuiverRep direct_sum(std::span<const QuiverRep> parts);
// [f_1; ...; f_r]: M -> N_1 + ... + N_r.
Morphism stack_targets(std::span<const Morphism> parts, const QuiverRep& m, std::span<const QuiverRep> targets);
// [g_1 ... g_r]: M_1 + ... + M_r -> N.
Morphism stack_sources(std::span<const Morphism> parts, std::span<const QuiverRep> sources, const QuiverRep& n);

struct EndomorphismInfo {
  std::size_t dim = 0;
  std::size_t radical_dim = 0;
  bool indecomposable() const noexcept { return dim > 0 && dim - radical_dim == 1; }
  bool brick() const noexcept { return dim == 1; }
};

EndomorphismInfo endomorphism_info(const QuiverRep& m);
// Jacobson radical of End(m) in the coordinates of `end` (= hom(m, m)),
// as the radical of the trace form.
Subspace endomorphism_radical(const HomSpace& end);
bool is_indecomposable(const QuiverRep& m);
// Isomorphism test for indecomposable arguments.
std::optional<Morphism> find_isomorphism(const QuiverRep& a, const QuiverRep& b);

// Paths-out projective and paths-in injective at vertex index i.
QuiverRep projective(const QuiverPtr& q, std::size_t i);
QuiverRep injective(const QuiverPtr& q, std::size_t i);
QuiverRep simple(const QuiverPtr& q, std::size_t i);
// Canonical map P_j -> P_i (q -> q after a) for an arrow a: i -> j.
Morphism projective_arrow_map(const QuiverPtr& q, std::size_t arrow_index);
// Canonical map I_j -> I_i (p -> p' with p = a after p') for an arrow a: i -> j.
Morphism injective_arrow_map(const QuiverPtr& q, std::size_t arrow_index);

// Module over the opposite quiver with transposed maps.
QuiverRep dual(const QuiverRep& m, const QuiverPtr& opposite);
Morphism dual(const Morphism& f);

std::vector<std::int64_t> dimension_vector(const QuiverRep& m);

}  // namespace arq
