#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arq/radical.hpp"

namespace arq {

enum class Side { left, right };

struct DegreeWitness {
  VertexId z;
  std::size_t n = 0;
  // left: Z -> X; right: Y -> Z.
  Morphism h;
};

// Finite(n) when degree is set, otherwise NotFoundWithin(bound).
struct DegreeReport {
  std::string label;
  Side side = Side::left;
  std::size_t bound = 0;
  std::optional<std::size_t> degree;
  std::optional<DegreeWitness> witness;
  // Same Z, with f h = 0 (left) or h f = 0 (right).
  std::optional<DegreeWitness> zero_witness;
  // Some composite of knitted arrows along a path of length n is a witness.
  bool path_witness = false;
  bool truncated = false;
  // A radical layer used by the search was only a lower bound.
  bool partial = false;

  bool finite() const noexcept { return degree.has_value(); }
};

// Left degree needs a single-vertex domain, right degree a single-vertex
// codomain. An empty other side (the map to or from zero) is allowed.
// `only_z` restricts the search to one vertex.
DegreeReport left_degree(const ArMorphism& f, const RadicalFiltration& rf, std::size_t bound,
                         std::optional<VertexId> only_z = std::nullopt);
DegreeReport right_degree(const ArMorphism& f, const RadicalFiltration& rf, std::size_t bound,
                          std::optional<VertexId> only_z = std::nullopt);

// Stacked morphism of modules for f.
Morphism module_morphism(const ArMorphism& f, const ARQuiver& ar);

struct KernelReport {
  DegreeReport degree;
  bool mono = false;
  bool epi = false;
  // Kernel as a component vertex, with the depth of its inclusion.
  std::optional<VertexId> kernel_vertex;
  std::optional<std::size_t> kernel_depth;
  bool kernel_zero = false;
  // degree n iff epi with kernel depth n; such a kernel lies in the component;
  // the converse is checked on finite components.
  bool ab_equivalent = false;
  bool b_implies_c = false;
  std::optional<bool> c_implies_a;
  // The zero witness is ker(f) up to an isomorphism of its domain.
  std::optional<bool> witness_is_kernel;
  bool partial = false;
  bool ok() const noexcept {
    return ab_equivalent && b_implies_c && c_implies_a.value_or(true) && witness_is_kernel.value_or(true);
  }
};

KernelReport kernel_characterization(const ArMorphism& f, const RadicalFiltration& rf, std::size_t bound);

struct ShiftReport {
  VertexId end;
  std::size_t arm = 0;
  DegreeReport f_degree;
  DegreeReport g_degree;
  bool law_holds = false;
};

// Mesh ending at y with arm `arm` as f: X -> y and g: tau y -> X' the other arms.
ShiftReport degree_shift(const RadicalFiltration& rf, VertexId y, std::size_t arm, std::size_t bound);

struct DegreeTwoReport {
  // Mesh configuration for d_r(f) = 2.
  bool right_pattern = false;
  // 0 = none, 1 = single target pattern, 2 = two target pattern, for d_l(f) = 2.
  int left_pattern = 0;
  bool minimal_right_almost_split = false;
  DegreeReport left;
  DegreeReport right;
  bool agree_left = false;
  bool agree_right = false;
  bool ok() const noexcept { return agree_left && agree_right; }
};

DegreeTwoReport classify_degree_two(const ArMorphism& f, const RadicalFiltration& rf, std::size_t bound);

struct CompositeReport {
  std::size_t length = 0;
  bool zero = false;
  std::optional<std::size_t> depth;
  bool in_rad_n_plus_1 = false;
  bool trivial_valuation = false;
  bool decomposed = false;
  // f_i knitted arrows, eps_i = f_i or a rad^2 part of h_i.
  std::vector<Morphism> f;
  std::vector<Morphism> eps;
  std::vector<bool> perturbed;
  bool f_composite_zero = false;
  bool eps_composite_nonzero = false;
};

CompositeReport composite_analysis(const std::vector<ArMorphism>& path, const RadicalFiltration& rf);

struct FamilySumReport {
  std::size_t n = 0;
  VertexId target;
  ArMorphism sum;
  bool in_rad_n = false;
  bool in_rad_n_plus_1 = false;
  bool ok() const noexcept { return in_rad_n && !in_rad_n_plus_1; }
};

FamilySumReport sectional_family_sum(const SectionalFamily& family, const RadicalFiltration& rf);

struct SimplePathCheck {
  std::size_t quiver_vertex = 0;
  std::optional<std::size_t> degree;
  std::size_t modules_checked = 0;
  bool ok = true;
  std::string problem;
};

struct FiniteTypeReport {
  std::size_t bound = 0;
  std::vector<DegreeReport> projective_degrees;
  std::vector<DegreeReport> injective_degrees;
  bool finite_type = false;
  bool truncated = false;
  std::optional<std::size_t> diameter;
  bool within_diameter = true;
  std::vector<SimplePathCheck> path_bounds;
  bool path_bounds_ok = true;
};

FiniteTypeReport finite_type_check(const QuiverPtr& q, std::size_t bound);

// Undirected diameter of the knitted quiver.
std::size_t diameter(const ARQuiver& ar);
// Shortest directed path lengths from x; unreachable entries are nullopt.
std::vector<std::optional<std::size_t>> directed_distances(const ARQuiver& ar, VertexId x);

}  // namespace arq
