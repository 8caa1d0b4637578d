#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "rado/solver.hpp"

namespace rado {

/// One row of the k-squares table: RR_r(x1^2 + ... + xk^2 = z^2).
struct TableRow {
  int k = 0;
  RadoOutcome::Kind kind = RadoOutcome::Kind::LowerBound;
  std::int64_t value = 0;
  double elapsed_ms = 0.0;
  Backend backend = Backend::Edge;
  std::uint64_t nodes = 0;
};

struct TableOptions {
  int min_k = 3;
  int max_k = 17;
  int r = 2;
  int jobs = 1;
  SearchParams params;  // time_budget applies per k
};

/// Rows in ascending k. Jobs only change scheduling, never results.
std::vector<TableRow> run_table(const TableOptions& options);

/// Aligned text table; timings included only when asked.
std::string format_table(const std::vector<TableRow>& rows, bool with_timings);

}  // namespace rado
