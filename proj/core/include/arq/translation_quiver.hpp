#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace arq {

using VertexId = std::int64_t;
using ArrowId = std::int64_t;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Arrow {
  ArrowId id;
  VertexId source;
  VertexId target;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

struct PathWord {
  VertexId start;
  std::vector<ArrowId> arrows;
  friend bool operator==(const PathWord&, const PathWord&) = default;
  friend auto operator<=>(const PathWord&, const PathWord&) = default;
};

// The mesh ending at `end`: arms are pairs (sigma(beta), beta) with
// sigma(beta): start -> middle and beta: middle -> end.
struct Mesh {
  VertexId end;
  VertexId start;
  std::vector<std::pair<ArrowId, ArrowId>> arms;
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const noexcept { return violations.empty(); }
};

class TranslationQuiver {
 public:
  void add_vertex(VertexId v, bool projective = false, bool injective = false);
  void add_arrow(ArrowId a, VertexId source, VertexId target);
  void set_tau(VertexId x, VertexId tau_x);
  void set_sigma(ArrowId a, ArrowId sigma_a);
  void set_marks(VertexId v, bool projective, bool injective);

  bool has_vertex(VertexId v) const { return vertices_.count(v) != 0; }
  bool has_arrow(ArrowId a) const { return arrows_.count(a) != 0; }
  std::vector<VertexId> vertices() const;
  std::vector<Arrow> arrows() const;
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t arrow_count() const noexcept { return arrows_.size(); }
  const Arrow& arrow(ArrowId a) const;

  bool is_projective(VertexId v) const;
  bool is_injective(VertexId v) const;
  std::optional<VertexId> tau(VertexId x) const;
  std::optional<VertexId> tau_inverse(VertexId x) const;
  std::optional<ArrowId> sigma(ArrowId a) const;
  const std::map<VertexId, VertexId>& tau_map() const noexcept { return tau_; }
  const std::map<ArrowId, ArrowId>& sigma_map() const noexcept { return sigma_; }

  const std::vector<ArrowId>& out_arrows(VertexId v) const;
  const std::vector<ArrowId>& in_arrows(VertexId v) const;
  std::vector<ArrowId> arrows_between(VertexId x, VertexId y) const;

  // Mesh ending at a non-projective vertex; throws if x is projective.
  Mesh mesh(VertexId x) const;

  friend bool operator==(const TranslationQuiver& a, const TranslationQuiver& b);

 private:
  struct VertexMarks {
    bool projective = false;
    bool injective = false;
    friend bool operator==(const VertexMarks&, const VertexMarks&) = default;
  };
  std::map<VertexId, VertexMarks> vertices_;
  std::map<ArrowId, Arrow> arrows_;
  std::map<VertexId, VertexId> tau_;
  std::map<VertexId, VertexId> tau_inv_;
  std::map<ArrowId, ArrowId> sigma_;
  std::map<VertexId, std::vector<ArrowId>> out_;
  std::map<VertexId, std::vector<ArrowId>> in_;
};

ValidationReport validate(const TranslationQuiver& q);

using LengthFunction = std::map<VertexId, std::int64_t>;

// Normalized so the smallest vertex id has length 0. Throws Error when the
// underlying graph is disconnected; nullopt when no length function exists.
std::optional<LengthFunction> length_function(const TranslationQuiver& q);

// Throws Error when the arrows do not compose.
void check_composable(const TranslationQuiver& q, const PathWord& p);
VertexId path_end(const TranslationQuiver& q, const PathWord& p);
bool is_sectional(const TranslationQuiver& q, const PathWord& p);

// Hooks of p as positions i with arrows i, i+1 forming a hook.
std::vector<std::size_t> hook_positions(const TranslationQuiver& q, const PathWord& p);

std::vector<std::vector<VertexId>> connected_components(const TranslationQuiver& q);

// Shortest directed path length between every ordered pair; -1 for none.
std::map<std::pair<VertexId, VertexId>, std::int64_t> directed_distances(const TranslationQuiver& q);

}  // namespace arq
