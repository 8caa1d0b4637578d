#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rado/enumerate.hpp"
#include "rado/equation.hpp"

namespace rado {

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A requested computation exceeds a configured size limit.
class LimitError : public Error {
 public:
  using Error::Error;
};

inline constexpr int kMaxColors = 32;

enum class Backend { Edge, Dp, Auto };

std::string to_string(Backend b);
Backend parse_backend(const std::string& s);

struct SearchParams {
  std::int64_t n_cap = 10'000;
  std::chrono::milliseconds time_budget{600'000};
  Backend backend = Backend::Auto;
  /// Decision nodes per find_coloring call; 0 means unlimited.
  std::uint64_t node_limit = 0;
  /// Projected edge count above which the edge backend is refused.
  double edge_cap = 1e6;
  bool symmetry_breaking = true;
  bool minimize_edges = true;
};

/// colors[i] is the color of integer i + 1, in 1..r.
struct Coloring {
  int r = 1;
  std::vector<int> colors;

  std::int64_t n() const { return static_cast<std::int64_t>(colors.size()); }
  int at(std::int64_t v) const { return colors[static_cast<std::size_t>(v - 1)]; }

  friend bool operator==(const Coloring&, const Coloring&) = default;
};

enum class Verdict { Colorable, Uncolorable, BudgetExhausted };

std::string to_string(Verdict v);

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t propagations = 0;
  std::uint64_t max_depth = 0;
  double elapsed_ms = 0.0;

  SearchStats& operator+=(const SearchStats& o);
};

struct SearchOutcome {
  Verdict verdict = Verdict::BudgetExhausted;
  std::optional<Coloring> coloring;
  SearchStats stats;
  Backend backend = Backend::Edge;
};

/// Result of testing one bound during compute_rado.
struct BoundRecord {
  std::int64_t n = 0;
  Verdict verdict = Verdict::Colorable;
  Backend backend = Backend::Edge;
  bool warm_start = false;
  SearchStats stats;
};

struct RadoOutcome {
  enum class Kind { Exact, LowerBound };

  Kind kind = Kind::LowerBound;
  /// Exact: the Rado number N. LowerBound: the largest N shown colorable.
  std::int64_t value = 0;
  /// Valid coloring of [1, N-1] (Exact) or [1, N] (LowerBound).
  Coloring witness;
  std::vector<BoundRecord> history;
  SearchStats total;
  Backend backend = Backend::Edge;
};

/// Decides whether [1, n] has an r-coloring without monochromatic
/// solutions. Never reports Uncolorable unless the search space was
/// exhausted.
SearchOutcome find_coloring(const Equation& eq, std::int64_t n, int r,
                            const SearchParams& params = {});

/// Same decision over an explicit edge set on [1, edges.n()].
SearchOutcome find_coloring(const EdgeSet& edges, int r, const SearchParams& params = {});

/// Least N such that every r-coloring of [1, N] has a monochromatic
/// solution, or a lower bound when the cap or time budget is reached.
RadoOutcome compute_rado(const Equation& eq, int r, const SearchParams& params = {});

/// Exhaustive check over all r^n colorings, for testing. Requires
/// r^n <= 1e8.
bool oracle_colorable(const Equation& eq, std::int64_t n, int r);

/// True iff no edge is monochromatic under `c`.
bool coloring_avoids(const EdgeSet& edges, const Coloring& c);

}  // namespace rado
