#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "arq/generic_cover.hpp"
#include "arq/mesh_category.hpp"

namespace arq {

struct ProbeOptions {
  // Levels compared one by one; totals are always compared.
  std::size_t max_level = 6;
  // 0 compares every interior pair.
  std::size_t sample = 0;
  std::uint64_t seed = 1;
};

// x is a cover vertex, y a base vertex; sums run over the lifts of y.
struct ProbePair {
  VertexId x = 0;
  VertexId y = 0;
  bool skipped = false;
  std::string reason;
  std::size_t hom_dim = 0;
  std::size_t cover_dim = 0;
  // [n] = dim rad^n/rad^{n+1}(Fx, Fy) and the sum of dim R^n/R^{n+1}(x, z).
  std::vector<std::size_t> component_layers;
  std::vector<std::size_t> cover_layers;
  // Rank of the images of the cover basis under F, modulo rad^{n+1}.
  std::vector<std::size_t> induced_ranks;

  bool equal() const noexcept;
};

struct ProbeReport {
  std::vector<ProbePair> pairs;
  std::size_t compared = 0;
  std::size_t skipped = 0;
  std::size_t mismatches = 0;
  bool consistent() const noexcept { return mismatches == 0; }
};

// Base ids of gc must be the vertex ids of rf.ar(); F must cover the interior.
ProbeReport generalized_standard_probe(const RadicalFiltration& rf, const GenericCover& gc,
                                       const WellBehavedAssignment& F, const ProbeOptions& opt = {});

}  // namespace arq
