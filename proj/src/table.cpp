#include "rado/table.hpp"

#include <atomic>
#include <cstdio>
#include <exception>
#include <thread>

#include "rado/log.hpp"

namespace rado {

std::vector<TableRow> run_table(const TableOptions& options) {
  if (options.min_k < 2 || options.max_k < options.min_k) {
    throw InvalidArgument("table range must satisfy 2 <= min-k <= max-k");
  }
  const auto count = static_cast<std::size_t>(options.max_k - options.min_k + 1);
  std::vector<TableRow> rows(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      const int k = options.min_k + static_cast<int>(i);
      try {
        const auto start = std::chrono::steady_clock::now();
        const auto outcome = compute_rado(family_equation(k), options.r, options.params);
        TableRow row;
        row.k = k;
        row.kind = outcome.kind;
        row.value = outcome.value;
        row.backend = outcome.backend;
        row.nodes = outcome.total.nodes;
        row.elapsed_ms = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - start).count();
        log::info("k=" + std::to_string(k) + " done: " + std::to_string(row.value));
        rows[i] = row;
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  const auto jobs = static_cast<std::size_t>(std::max(1, options.jobs));
  std::vector<std::jthread> pool;
  for (std::size_t j = 1; j < std::min(jobs, count); ++j) pool.emplace_back(worker);
  worker();
  pool.clear();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return rows;
}

std::string format_table(const std::vector<TableRow>& rows, bool with_timings) {
  std::string out;
  char buf[160];
  std::snprintf(buf, sizeof buf, "%4s  %-8s  %-7s  %12s", "k", "N", "backend", "nodes");
  out += buf;
  if (with_timings) out += "  elapsed_ms";
  out += '\n';
  for (const auto& row : rows) {
    const std::string value = (row.kind == RadoOutcome::Kind::Exact ? "" : ">") +
                              std::to_string(row.value);
    std::snprintf(buf, sizeof buf, "%4d  %-8s  %-7s  %12llu", row.k, value.c_str(),
                  to_string(row.backend).c_str(), static_cast<unsigned long long>(row.nodes));
    out += buf;
    if (with_timings) {
      std::snprintf(buf, sizeof buf, "  %10.1f", row.elapsed_ms);
      out += buf;
    }
    out += '\n';
  }
  return out;
}

}  // namespace rado
