#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arq/quiver_rep.hpp"
#include "arq/translation_quiver.hpp"

namespace arq {

enum class KnitDirection { from_projectives, from_injectives };

struct ArVertex {
  QuiverRep module;
  bool projective = false;
  bool injective = false;
  // tau-orbit distance from the end the knitting started at.
  std::size_t orbit = 0;
  // All arrows ending (resp. starting) here are present.
  bool left_complete = true;
  bool right_complete = true;
  std::string label;
};

struct ArArrow {
  ArrowId id;
  VertexId source;
  VertexId target;
  Morphism morphism;
};

// Knitted AR component. Vertex and arrow ids are dense indices.
class ARQuiver {
 public:
  ARQuiver(QuiverPtr q, KnitDirection dir, std::size_t bound) : quiver_(std::move(q)), direction_(dir), bound_(bound) {}

  const QuiverPtr& quiver_ptr() const noexcept { return quiver_; }
  const Quiver& quiver() const noexcept { return *quiver_; }
  KnitDirection direction() const noexcept { return direction_; }
  std::size_t bound() const noexcept { return bound_; }
  bool truncated() const noexcept { return truncated_; }

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t arrow_count() const noexcept { return arrows_.size(); }
  const std::vector<ArVertex>& vertices() const noexcept { return vertices_; }
  const std::vector<ArArrow>& arrows() const noexcept { return arrows_; }
  const std::vector<Mesh>& meshes() const noexcept { return meshes_; }
  const ArVertex& vertex(VertexId v) const;
  const ArArrow& arrow(ArrowId a) const;
  const QuiverRep& module(VertexId v) const { return vertex(v).module; }

  const std::vector<ArrowId>& out_arrows(VertexId v) const;
  const std::vector<ArrowId>& in_arrows(VertexId v) const;
  std::optional<VertexId> tau(VertexId x) const;
  std::optional<VertexId> tau_inverse(VertexId x) const;
  // Mesh ending at x, if recorded.
  const Mesh* mesh_ending(VertexId x) const;
  bool complete(VertexId v) const { return vertex(v).left_complete && vertex(v).right_complete; }

  // Boundary vertices whose translate is unknown are marked projective
  // (resp. injective) so the result is a valid translation quiver.
  TranslationQuiver translation_quiver() const;
  std::optional<VertexId> find_vertex(const QuiverRep& m) const;
  std::optional<VertexId> projective_vertex(std::size_t quiver_vertex) const;
  std::optional<VertexId> injective_vertex(std::size_t quiver_vertex) const;

  VertexId add_vertex(ArVertex v);
  ArrowId add_arrow(VertexId s, VertexId t, Morphism f);
  void add_mesh(Mesh m);
  void set_truncated(bool t) noexcept { truncated_ = t; }
  ArVertex& mutable_vertex(VertexId v);

  // Module-level opposite: dual modules over the opposite quiver, arrows
  // reversed with transposed maps, meshes flipped.
  ARQuiver opposite(const QuiverPtr& opposite_quiver) const;

 private:
  QuiverPtr quiver_;
  KnitDirection direction_;
  std::size_t bound_;
  bool truncated_ = false;
  std::vector<ArVertex> vertices_;
  std::vector<ArArrow> arrows_;
  std::vector<Mesh> meshes_;
  std::vector<std::vector<ArrowId>> out_;
  std::vector<std::vector<ArrowId>> in_;
  std::vector<std::optional<VertexId>> tau_;
  std::vector<std::optional<VertexId>> tau_inv_;
  std::vector<std::optional<std::size_t>> mesh_at_;
};

// Knits the preprojective (or preinjective) component up to `bound` tau-orbits.
// Cokernels of total dimension up to `verify_dim` are re-checked indecomposable.
ARQuiver knit_ar_component(const QuiverPtr& q, KnitDirection dir, std::size_t bound, std::size_t verify_dim = 16);

// Right map of the mesh ending at x as a single morphism from the direct sum.
struct AlmostSplitCheck {
  bool exact = false;
  bool right_almost_split = false;
  std::vector<std::string> problems;
  bool ok() const noexcept { return exact && right_almost_split && problems.empty(); }
};

// Exactness of 0 -> tau x -> E -> x -> 0 by vertexwise ranks, and a factorization
// test of every radical morphism U -> x through E for U in the component.
AlmostSplitCheck check_almost_split(const ARQuiver& ar, VertexId x);

// Coxeter transformation c with dim tau X = c(dim X) for non-projective X.
Matrix coxeter_matrix(const Quiver& q);

}  // namespace arq
