#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <vector>

#include "arq/matrix.hpp"
#include "arq/translation_quiver.hpp"

namespace arq {

struct MorphismVector {
  VertexId source;
  VertexId target;
  Vector coords;
};

// Mesh category k(G) of a finite translation quiver with length. Hom spaces
// are computed per source vertex on first use; the object is safe to share
// between threads.
class MeshCategory {
 public:
  explicit MeshCategory(TranslationQuiver tq);
  ~MeshCategory();
  MeshCategory(const MeshCategory&) = delete;
  MeshCategory& operator=(const MeshCategory&) = delete;

  const TranslationQuiver& quiver() const noexcept { return tq_; }
  const LengthFunction& lengths() const noexcept { return length_; }

  std::size_t hom_dim(VertexId x, VertexId y) const;
  // Representative paths of the basis classes of k(x,y).
  std::vector<PathWord> hom_basis(VertexId x, VertexId y) const;

  MorphismVector reduce(const PathWord& p) const;
  MorphismVector identity(VertexId x) const;
  // g after f.
  MorphismVector compose(const MorphismVector& g, const MorphismVector& f) const;
  MorphismVector zero(VertexId x, VertexId y) const;

  // Basis of R^n(x,y) in hom_basis(x,y) coordinates; R^0 is the whole space.
  Subspace radical_power(VertexId x, VertexId y, std::size_t n) const;
  // dims[n] = dim R^n(x,y), listed up to the first zero at n >= 1.
  std::vector<std::size_t> radical_dims(VertexId x, VertexId y) const;

 private:
  struct Node {
    std::vector<PathWord> basis;
    std::map<ArrowId, Matrix> extend;
  };
  struct Table {
    std::map<VertexId, Node> nodes;
  };

  const Table& table(VertexId x) const;
  std::unique_ptr<Table> build_table(VertexId x) const;
  Vector extend_along(const Table& t, VertexId from, Vector v, const std::vector<ArrowId>& arrows) const;

  TranslationQuiver tq_;
  LengthFunction length_;
  mutable std::recursive_mutex mutex_;
  mutable std::map<VertexId, std::unique_ptr<Table>> tables_;
  mutable std::map<std::tuple<VertexId, VertexId, std::size_t>, Subspace> rad_memo_;
};

std::unique_ptr<MeshCategory> build_mesh_category(const TranslationQuiver& tq);

struct SectionalIndependenceReport {
  bool independent = true;
  std::size_t length = 0;
  std::vector<PathWord> paths;
  Vector witness;  // nonzero coefficients of a dependency when !independent
};

SectionalIndependenceReport sectional_independence(const MeshCategory& mc, VertexId x, VertexId y);

// All paths from x to y (in arrow-id lexicographic order), capped at `limit`.
std::vector<PathWord> enumerate_paths(const TranslationQuiver& q, VertexId x, VertexId y, std::size_t limit = 100000);

}  // namespace arq
