#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "rado/equation.hpp"

namespace rado {

using Vertex = std::int32_t;

/// One integer solution. `values[i]` is the value of `eq.terms()[i]`.
struct SolutionTuple {
  std::vector<std::int64_t> values;

  friend bool operator==(const SolutionTuple&, const SolutionTuple&) = default;
  friend auto operator<=>(const SolutionTuple&, const SolutionTuple&) = default;
};

/// Distinct constrained values of one solution, ascending.
using Hyperedge = std::vector<Vertex>;

/// Hyperedges over [1, n], deduplicated and ordered by (largest vertex,
/// lexicographic). That order makes every prefix the edge set of a smaller
/// bound.
class EdgeSet {
 public:
  EdgeSet() = default;

  /// Sorts and deduplicates; removes supersets when `minimize`.
  static EdgeSet from_edges(std::int64_t n, std::vector<Hyperedge> edges,
                            bool minimize);

  std::int64_t n() const { return n_; }
  bool minimized() const { return minimized_; }
  std::size_t size() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  bool empty() const { return size() == 0; }

  std::span<const Vertex> operator[](std::size_t i) const {
    return {vertices_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
  }
  Vertex max_vertex(std::size_t i) const { return vertices_[offsets_[i + 1] - 1]; }

  /// Number of leading edges whose largest vertex is <= bound.
  std::size_t count_up_to(std::int64_t bound) const;

  /// The edges whose largest vertex is <= bound, as an edge set over [1, bound].
  EdgeSet prefix(std::int64_t bound) const;

  std::vector<Hyperedge> to_vectors() const;

  /// Smallest vertex occurring in any edge, or 0 when empty.
  Vertex smallest_vertex() const;

 private:
  std::int64_t n_ = 0;
  bool minimized_ = false;
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> vertices_;
};

/// Throws OverflowError when sums at bound n could exceed 2^62, or when n
/// does not fit a Vertex.
void check_bound(const Equation& eq, std::int64_t n);

/// Callback receives values aligned with eq.terms(); return false to stop.
using SolutionVisitor = std::function<bool(std::span<const std::int64_t>)>;

/// Visits every solution with constrained values in [1, n] exactly once up
/// to permutation of interchangeable variables (same side, same
/// coefficient): interchangeable values appear in nondecreasing order.
/// Free variables are solved exactly and are not bounded by n.
/// Returns false if the visitor stopped the walk.
bool for_each_canonical_solution(const Equation& eq, std::int64_t n,
                                 const SolutionVisitor& visit);

/// Every solution with constrained values in [1, n], sorted
/// lexicographically by value vector.
std::vector<SolutionTuple> enumerate_solutions(const Equation& eq, std::int64_t n);

EdgeSet build_hyperedges(const Equation& eq, std::int64_t n, bool minimize);

/// Number of canonical solutions at bound n (an upper bound on the edge
/// count). Exact for moderate bounds; a volume estimate when the sum range
/// is too large to tabulate.
double projected_edge_count(const Equation& eq, std::int64_t n);

/// True iff some solution has every constrained value in `class_values` and
/// largest constrained value exactly `pivot`.
/// Requires pivot in class_values and all class values <= pivot.
bool dp_feasible(const Equation& eq, std::span<const std::int64_t> class_values,
                 std::int64_t pivot);

/// "3^2+4^2=5^2" style rendering of a solution.
std::string render_solution(const Equation& eq, const SolutionTuple& s);

/// {"equation": ..., "n": ..., "edges": [[...], ...]}
std::string edges_to_json(const Equation& eq, const EdgeSet& edges);

}  // namespace rado
