#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "arq/ar_quiver.hpp"

namespace arq {

// Morphism between direct sums of component vertices;
// parts[j][k]: domain[k] -> codomain[j].
struct ArMorphism {
  std::vector<VertexId> domain;
  std::vector<VertexId> codomain;
  std::vector<std::vector<Morphism>> parts;

  const Morphism& at(std::size_t j, std::size_t k) const { return parts.at(j).at(k); }
  bool is_zero() const;

  static ArMorphism single(VertexId x, VertexId y, Morphism f);
  static ArMorphism from_arrow(const ARQuiver& ar, ArrowId a);
  static ArMorphism zero(const ARQuiver& ar, std::vector<VertexId> domain, std::vector<VertexId> codomain);
  // [alpha_1; ...; alpha_r]: x -> targets of the arrows starting at x.
  static ArMorphism out_map(const ARQuiver& ar, VertexId x);
  // [beta_1 ... beta_r]: sources of the arrows ending at x -> x.
  static ArMorphism in_map(const ARQuiver& ar, VertexId x);

  friend ArMorphism operator+(const ArMorphism& a, const ArMorphism& b);
  friend ArMorphism operator*(const Rational& s, ArMorphism a);
};

// g after f; requires f.codomain == g.domain.
ArMorphism compose(const ArMorphism& g, const ArMorphism& f);

struct RadicalSpace {
  Subspace space;
  // False when some vertex on the recursion is incomplete: then space is a
  // lower bound for the true radical power.
  bool exact = true;
};

// Which end a radical recursion keeps fixed; automatic follows the knit
// direction.
enum class Anchor { automatic, source, target };

// Radical filtration of a knitted component. rad^n(x, y) is computed through
// the left almost split map at x when x is right complete, otherwise through
// the right almost split map at y. Concurrent use is serialized internally.
class RadicalFiltration {
 public:
  explicit RadicalFiltration(const ARQuiver& ar) : ar_(ar) {}

  const ARQuiver& ar() const noexcept { return ar_; }
  const HomSpace& hom(VertexId x, VertexId y) const;
  RadicalSpace rad(VertexId x, VertexId y, std::size_t n, Anchor anchor = Anchor::automatic) const;
  bool in_rad(VertexId x, VertexId y, std::size_t n, const Morphism& f) const;
  // dims[n] = dim rad^n(x, y), up to the first zero.
  std::vector<std::size_t> dims(VertexId x, VertexId y, std::size_t cap = 64) const;
  // n with f in rad^n minus rad^{n+1}; nullopt when f = 0 or n > cap.
  std::optional<std::size_t> depth(VertexId x, VertexId y, const Morphism& f, std::size_t cap = 64) const;
  std::optional<std::size_t> depth(const ArMorphism& f, std::size_t cap = 64) const;
  bool in_rad(const ArMorphism& f, std::size_t n) const;

 private:
  const ArVertex& v(VertexId x) const { return ar_.vertex(x); }
  const ARQuiver& ar_;
  mutable std::recursive_mutex mu_;
  mutable std::map<std::pair<VertexId, VertexId>, std::unique_ptr<HomSpace>> homs_;
  mutable std::map<std::tuple<VertexId, VertexId, std::size_t>, RadicalSpace> rads_;
};

// rad(x, y) for indecomposables: Hom when not isomorphic, else rad End.
Subspace radical_of(const QuiverRep& x, const QuiverRep& y, const HomSpace& h);

struct UniverseRadical {
  HomSpace hom;
  Subspace space;
  bool lower_bound = false;
};

// rad^n(m, n) spanned by composites of radical maps between members of
// `universe` (indecomposables). rad^0 = Hom.
UniverseRadical rad_power(const QuiverRep& m, const QuiverRep& n, std::size_t power,
                          std::span<const QuiverRep> universe, bool universe_complete = true);

// Irreducible iff f is radical and, grouped by vertex, the components are
// linearly independent modulo rad^2. One side must be a single vertex.
bool is_irreducible(const ArMorphism& f, const RadicalFiltration& rf);

struct SectionalFamily {
  VertexId root;
  // paths[i][j] = f_{i,j+1}, each a single-vertex morphism.
  std::vector<std::vector<ArMorphism>> paths;
};

struct FamilyCheck {
  bool ok = true;
  // "composable", "independence" or "hook".
  std::string condition;
  std::size_t path = 0;
  std::size_t step = 0;
  std::string message;
};

FamilyCheck check_sectional_family(const SectionalFamily& family, const RadicalFiltration& rf);

}  // namespace arq
