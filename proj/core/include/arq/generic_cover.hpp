#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "arq/quiver_io.hpp"
#include "arq/radical.hpp"
#include "arq/translation_quiver.hpp"

namespace arq {

struct WalkStep {
  ArrowId arrow;
  // Traversed against its orientation.
  bool inverse = false;
  friend auto operator<=>(const WalkStep&, const WalkStep&) = default;
};

// Unoriented walk, steps read left to right.
struct Walk {
  VertexId start = 0;
  std::vector<WalkStep> steps;
  friend bool operator==(const Walk&, const Walk&) = default;
};

VertexId walk_end(const TranslationQuiver& q, const Walk& w);

// Truncated generic covering. Cover vertex ids are dense and ordered by
// canonical walk (shortest, then lexicographic); the base point lifts to 0.
struct GenericCover {
  TranslationQuiver cover;
  TranslationQuiver base;
  std::map<VertexId, VertexId> pi_vertices;
  std::map<ArrowId, ArrowId> pi_arrows;
  std::size_t radius = 0;
  VertexId base_vertex = 0;
  VertexId base_lift = 0;
  std::vector<std::size_t> distance;
  std::vector<Walk> walks;
  // Distance == radius, or some neighbour, translate or mark is cut off.
  std::set<VertexId> boundary;

  bool interior(VertexId x) const { return cover.has_vertex(x) && !boundary.count(x); }
  VertexId pi(VertexId x) const { return pi_vertices.at(x); }
  std::vector<VertexId> lifts(VertexId base_v) const;
};

// Identifications are closed on walks of length radius + slack before
// cutting back to radius.
GenericCover build_cover(const TranslationQuiver& base, VertexId base_vertex, std::size_t radius,
                         std::size_t slack = 4);

struct CoverViolation {
  std::string axiom;
  VertexId vertex;
  std::string message;
};

struct CoverReport {
  std::vector<CoverViolation> violations;
  bool has_length_function = false;
  std::size_t checked = 0;
  bool ok() const noexcept { return violations.empty() && has_length_function; }
};

CoverReport verify_cover(const GenericCover& gc);

// Cover vertex reached by lifting a base walk from the base point.
VertexId lift_walk(const GenericCover& gc, const Walk& w);
Walk canonical_walk(const GenericCover& gc, const Walk& w);

PathWord lift_path(const GenericCover& gc, const PathWord& p, VertexId start_lift);

// Base ids of gc must be the vertex ids of rf.ar().
std::vector<PathWord> lift_sectional_family(const GenericCover& gc, const SectionalFamily& family,
                                            const RadicalFiltration& rf,
                                            std::optional<VertexId> start_lift = std::nullopt);

struct WellBehavedAssignment {
  std::map<ArrowId, Morphism> morphisms;
};

// Extends `pinned` level by level; throws when a pin is not irreducible or
// cannot be matched by the mesh at some vertex.
WellBehavedAssignment well_behaved_assignment(const GenericCover& gc, const RadicalFiltration& rf,
                                              const std::map<ArrowId, Morphism>& pinned = {});

struct AssignmentCheck {
  std::size_t vertices_checked = 0;
  std::size_t meshes_checked = 0;
  std::vector<std::string> problems;
  bool ok() const noexcept { return problems.empty(); }
};

AssignmentCheck verify_assignment(const GenericCover& gc, const RadicalFiltration& rf,
                                  const WellBehavedAssignment& f);

// Quiver text with a pi section.
QuiverFile export_cover(const GenericCover& gc);

}  // namespace arq
