#include "rado/solver.hpp"

#include <algorithm>
#include <bit>

#include "rado/log.hpp"
#include "rado/power_sums.hpp"

namespace rado {

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kClockCheckMask = (std::uint64_t{1} << 16) - 1;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Node and wall-clock limits shared by both backends.
class Budget {
 public:
  Budget(Clock::time_point deadline, std::uint64_t node_limit)
      : deadline_(deadline), node_limit_(node_limit) {}

  // Counts one node; false once the budget is spent.
  bool tick(SearchStats& stats) {
    ++stats.nodes;
    if (node_limit_ != 0 && stats.nodes > node_limit_) exhausted_ = true;
    if ((stats.nodes & kClockCheckMask) == 0 && Clock::now() >= deadline_) exhausted_ = true;
    return !exhausted_;
  }

  bool exhausted() const { return exhausted_; }

 private:
  Clock::time_point deadline_;
  std::uint64_t node_limit_;
  bool exhausted_ = false;
};

void validate_colors(int r) {
  if (r < 1 || r > kMaxColors) {
    throw InvalidArgument("number of colors must lie in [1, " + std::to_string(kMaxColors) + "]");
  }
}

// Backtracking over constrained vertices in ascending order. Each edge keeps
// the number of assigned vertices and per-color counts; an edge whose
// assigned vertices all share color c and that has one vertex left removes c
// from that vertex's domain.
class EdgeSearch {
 public:
  EdgeSearch(const EdgeSet& edges, int r, const SearchParams& params, Budget& budget,
             const Coloring* hint)
      : edges_(edges), n_(edges.n()), r_(r), params_(params), budget_(budget), hint_(hint) {
    const auto nv = static_cast<std::size_t>(n_) + 1;
    std::vector<std::size_t> degree(nv, 0);
    for (std::size_t e = 0; e < edges_.size(); ++e)
      for (auto v : edges_[e]) ++degree[static_cast<std::size_t>(v)];
    inc_offsets_.assign(nv + 1, 0);
    for (std::size_t v = 0; v < nv; ++v) inc_offsets_[v + 1] = inc_offsets_[v] + degree[v];
    inc_.resize(inc_offsets_.back());
    std::vector<std::size_t> fill(inc_offsets_.begin(), inc_offsets_.end() - 1);
    for (std::size_t e = 0; e < edges_.size(); ++e)
      for (auto v : edges_[e]) inc_[fill[static_cast<std::size_t>(v)]++] = static_cast<std::uint32_t>(e);
    for (std::size_t v = 1; v < nv; ++v)
      if (degree[v] > 0) order_.push_back(static_cast<Vertex>(v));

    const std::uint32_t full = r_ == 32 ? ~0u : ((1u << r_) - 1u);
    domain_.assign(nv, full);
    color_.assign(nv, 0);
    assigned_.assign(edges_.size(), 0);
    counts_.assign(edges_.size() * static_cast<std::size_t>(r_), 0);
  }

  SearchOutcome run() {
    const auto start = Clock::now();
    SearchOutcome out;
    out.backend = Backend::Edge;
    const bool found = dfs(0, 0);
    out.stats = stats_;
    out.stats.elapsed_ms = ms_since(start);
    if (found) {
      Coloring c;
      c.r = r_;
      c.colors.assign(static_cast<std::size_t>(n_), 1);
      for (auto v : order_) c.colors[static_cast<std::size_t>(v - 1)] = color_[static_cast<std::size_t>(v)];
      out.verdict = Verdict::Colorable;
      out.coloring = std::move(c);
    } else {
      out.verdict = budget_.exhausted() ? Verdict::BudgetExhausted : Verdict::Uncolorable;
    }
    return out;
  }

 private:
  struct TrailEntry {
    Vertex vertex;
    std::uint32_t old_domain;
    bool assignment;
  };

  std::span<const std::uint32_t> incident(Vertex v) const {
    const auto i = static_cast<std::size_t>(v);
    return {inc_.data() + inc_offsets_[i], inc_offsets_[i + 1] - inc_offsets_[i]};
  }

  bool assign(Vertex v, int c) {
    const auto vi = static_cast<std::size_t>(v);
    trail_.push_back({v, domain_[vi], true});
    color_[vi] = c;
    domain_[vi] = 1u << (c - 1);
    bool ok = true;
    for (auto e : incident(v)) {
      const auto a = ++assigned_[e];
      const auto k = ++counts_[e * static_cast<std::size_t>(r_) + static_cast<std::size_t>(c - 1)];
      if (k != a || !ok) continue;
      const auto edge = edges_[e];
      const std::size_t left = edge.size() - a;
      if (left == 0) {
        ok = false;
      } else if (left == 1) {
        for (auto u : edge) {
          const auto ui = static_cast<std::size_t>(u);
          if (color_[ui] != 0) continue;
          const std::uint32_t bit = 1u << (c - 1);
          if (domain_[ui] & bit) {
            trail_.push_back({u, domain_[ui], false});
            domain_[ui] &= ~bit;
            ++stats_.propagations;
            if (domain_[ui] == 0) {
              ok = false;
            } else if (std::has_single_bit(domain_[ui])) {
              queue_.push_back(u);
            }
          }
          break;
        }
      }
    }
    return ok;
  }

  bool propagate() {
    while (!queue_.empty()) {
      const Vertex u = queue_.back();
      queue_.pop_back();
      const auto ui = static_cast<std::size_t>(u);
      if (color_[ui] != 0) continue;
      const int c = std::countr_zero(domain_[ui]) + 1;
      if (!assign(u, c)) {
        queue_.clear();
        return false;
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const TrailEntry t = trail_.back();
      trail_.pop_back();
      const auto vi = static_cast<std::size_t>(t.vertex);
      if (t.assignment) {
        const auto c = static_cast<std::size_t>(color_[vi] - 1);
        for (auto e : incident(t.vertex)) {
          --assigned_[e];
          --counts_[e * static_cast<std::size_t>(r_) + c];
        }
        color_[vi] = 0;
      }
      domain_[vi] = t.old_domain;
    }
  }

  bool dfs(std::size_t idx, int max_color) {
    stats_.max_depth = std::max<std::uint64_t>(stats_.max_depth, idx);
    if (idx == order_.size()) return true;
    const Vertex v = order_[idx];
    const auto vi = static_cast<std::size_t>(v);
    const int limit = params_.symmetry_breaking ? std::min(r_, max_color + 1) : r_;
    if (color_[vi] != 0) {
      if (color_[vi] > limit) return false;
      return dfs(idx + 1, std::max(max_color, color_[vi]));
    }

    int preferred = 0;
    if (hint_ != nullptr && v <= hint_->n()) preferred = hint_->at(v);
    for (int step = 0; step <= r_; ++step) {
      int c = 0;
      if (step == 0) {
        if (preferred < 1 || preferred > limit) continue;
        c = preferred;
      } else {
        c = step;
        if (c > limit) break;
        if (c == preferred) continue;
      }
      if (!(domain_[vi] & (1u << (c - 1)))) continue;
      if (!budget_.tick(stats_)) return false;
      const std::size_t mark = trail_.size();
      if (assign(v, c) && propagate()) {
        if (dfs(idx + 1, std::max(max_color, c))) return true;
      } else {
        queue_.clear();
      }
      undo(mark);
      if (budget_.exhausted()) return false;
    }
    return false;
  }

  const EdgeSet& edges_;
  std::int64_t n_;
  int r_;
  const SearchParams& params_;
  Budget& budget_;
  const Coloring* hint_;
  SearchStats stats_;

  std::vector<std::size_t> inc_offsets_;
  std::vector<std::uint32_t> inc_;
  std::vector<Vertex> order_;
  std::vector<std::uint32_t> domain_;
  std::vector<int> color_;
  std::vector<std::uint8_t> assigned_;
  std::vector<std::uint8_t> counts_;
  std::vector<TrailEntry> trail_;
  std::vector<Vertex> queue_;
};

// Assigns 1..n in ascending order. After coloring v with c, the new vertex
// is the largest value of its class, so any new monochromatic solution must
// use it: reject iff the class tables admit a solution through v.
class DpSearch {
 public:
  DpSearch(const Equation& eq, std::int64_t n, int r, const SearchParams& params,
           Budget& budget, const Coloring* hint)
      : eq_(eq), n_(n), r_(r), params_(params), budget_(budget), hint_(hint),
        distinct_(eq.distinct_required()) {
    if (!distinct_) {
      tables_.reserve(static_cast<std::size_t>(r_));
      for (int c = 0; c < r_; ++c) tables_.emplace_back(eq, n);
      saved_.resize(static_cast<std::size_t>(n_) + 1);
    }
    classes_.resize(static_cast<std::size_t>(r_));
    colors_.assign(static_cast<std::size_t>(n_), 0);
  }

  SearchOutcome run() {
    const auto start = Clock::now();
    SearchOutcome out;
    out.backend = Backend::Dp;
    const bool found = dfs(1, 0);
    out.stats = stats_;
    out.stats.elapsed_ms = ms_since(start);
    if (found) {
      out.verdict = Verdict::Colorable;
      out.coloring = Coloring{r_, colors_};
    } else {
      out.verdict = budget_.exhausted() ? Verdict::BudgetExhausted : Verdict::Uncolorable;
    }
    return out;
  }

 private:
  bool try_color(std::int64_t v, int c) {
    const auto ci = static_cast<std::size_t>(c - 1);
    classes_[ci].push_back(v);
    if (distinct_) {
      if (!class_has_solution(eq_, classes_[ci], v)) return true;
      classes_[ci].pop_back();
      return false;
    }
    auto& table = tables_[ci];
    auto& save = saved_[static_cast<std::size_t>(v)];
    const auto state = table.state();
    save.assign(state.begin(), state.end());
    table.add(v);
    if (!table.has_solution_with_pivot(v)) return true;
    table.restore(save);
    classes_[ci].pop_back();
    return false;
  }

  void untry(std::int64_t v, int c) {
    const auto ci = static_cast<std::size_t>(c - 1);
    classes_[ci].pop_back();
    if (!distinct_) tables_[ci].restore(saved_[static_cast<std::size_t>(v)]);
  }

  bool dfs(std::int64_t v, int max_color) {
    stats_.max_depth = std::max<std::uint64_t>(stats_.max_depth, static_cast<std::uint64_t>(v - 1));
    if (v > n_) return true;
    const int limit = params_.symmetry_breaking ? std::min(r_, max_color + 1) : r_;
    int preferred = 0;
    if (hint_ != nullptr && v <= hint_->n()) preferred = hint_->at(v);
    for (int step = 0; step <= r_; ++step) {
      int c = 0;
      if (step == 0) {
        if (preferred < 1 || preferred > limit) continue;
        c = preferred;
      } else {
        c = step;
        if (c > limit) break;
        if (c == preferred) continue;
      }
      if (!budget_.tick(stats_)) return false;
      if (!try_color(v, c)) {
        ++stats_.propagations;
        continue;
      }
      colors_[static_cast<std::size_t>(v - 1)] = c;
      if (dfs(v + 1, std::max(max_color, c))) return true;
      untry(v, c);
      if (budget_.exhausted()) return false;
    }
    return false;
  }

  const Equation& eq_;
  std::int64_t n_;
  int r_;
  const SearchParams& params_;
  Budget& budget_;
  const Coloring* hint_;
  bool distinct_;
  SearchStats stats_;
  std::vector<PowerSumTable> tables_;
  std::vector<std::vector<std::uint64_t>> saved_;
  std::vector<std::vector<std::int64_t>> classes_;
  std::vector<int> colors_;
};

SearchOutcome search_edges(const EdgeSet& edges, int r, const SearchParams& params,
                           Clock::time_point deadline, const Coloring* hint) {
  Budget budget(deadline, params.node_limit);
  return EdgeSearch(edges, r, params, budget, hint).run();
}

SearchOutcome search_dp(const Equation& eq, std::int64_t n, int r, const SearchParams& params,
                        Clock::time_point deadline, const Coloring* hint) {
  Budget budget(deadline, params.node_limit);
  return DpSearch(eq, n, r, params, budget, hint).run();
}

// Extends `witness` on [1, n-1] to [1, n] without a full search: returns the
// first color for n creating no monochromatic edge, or 0.
int extend_by_edges(const EdgeSet& cache, std::int64_t n, const Coloring& witness) {
  const std::size_t lo = cache.count_up_to(n - 1);
  const std::size_t hi = cache.count_up_to(n);
  for (int c = 1; c <= witness.r; ++c) {
    bool ok = true;
    for (std::size_t e = lo; e < hi && ok; ++e) {
      bool mono = true;
      for (auto u : cache[e]) {
        if (u != n && witness.at(u) != c) {
          mono = false;
          break;
        }
      }
      ok = !mono;
    }
    if (ok) return c;
  }
  return 0;
}

int extend_by_tables(const Equation& eq, std::int64_t n, const Coloring& witness) {
  for (int c = 1; c <= witness.r; ++c) {
    std::vector<std::int64_t> cls;
    for (std::int64_t v = 1; v < n; ++v)
      if (witness.at(v) == c) cls.push_back(v);
    cls.push_back(n);
    if (!dp_feasible(eq, cls, n)) return c;
  }
  return 0;
}

}  // namespace

std::string to_string(Backend b) {
  switch (b) {
    case Backend::Edge: return "edge";
    case Backend::Dp: return "dp";
    case Backend::Auto: return "auto";
  }
  return "auto";
}

Backend parse_backend(const std::string& s) {
  if (s == "edge" || s == "edge-based") return Backend::Edge;
  if (s == "dp" || s == "dp-based") return Backend::Dp;
  if (s == "auto") return Backend::Auto;
  throw InvalidArgument("unknown backend '" + s + "' (expected edge, dp or auto)");
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Colorable: return "colorable";
    case Verdict::Uncolorable: return "uncolorable";
    case Verdict::BudgetExhausted: return "budget-exhausted";
  }
  return "budget-exhausted";
}

SearchStats& SearchStats::operator+=(const SearchStats& o) {
  nodes += o.nodes;
  propagations += o.propagations;
  max_depth = std::max(max_depth, o.max_depth);
  elapsed_ms += o.elapsed_ms;
  return *this;
}

bool coloring_avoids(const EdgeSet& edges, const Coloring& c) {
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto edge = edges[e];
    const int first = c.at(edge.front());
    const bool mono = std::all_of(edge.begin(), edge.end(),
                                  [&](Vertex v) { return c.at(v) == first; });
    if (mono) return false;
  }
  return true;
}

SearchOutcome find_coloring(const EdgeSet& edges, int r, const SearchParams& params) {
  validate_colors(r);
  return search_edges(edges, r, params, Clock::now() + params.time_budget, nullptr);
}

SearchOutcome find_coloring(const Equation& eq, std::int64_t n, int r,
                            const SearchParams& params) {
  validate_colors(r);
  if (n < 1) throw InvalidArgument("bound must be at least 1");
  check_bound(eq, n);
  const auto deadline = Clock::now() + params.time_budget;
  Backend backend = params.backend;
  if (backend != Backend::Dp) {
    const double projected = projected_edge_count(eq, n);
    if (projected > params.edge_cap) {
      if (backend == Backend::Edge) {
        throw LimitError("edge backend refused: projected edge count " +
                         std::to_string(static_cast<long long>(projected)) +
                         " exceeds the cap");
      }
      backend = Backend::Dp;
    } else {
      backend = Backend::Edge;
    }
  }
  if (backend == Backend::Dp) return search_dp(eq, n, r, params, deadline, nullptr);
  const EdgeSet edges = build_hyperedges(eq, n, params.minimize_edges);
  return search_edges(edges, r, params, deadline, nullptr);
}

RadoOutcome compute_rado(const Equation& eq, int r, const SearchParams& params) {
  validate_colors(r);
  if (params.n_cap < 1) throw InvalidArgument("n_cap must be at least 1");
  check_bound(eq, params.n_cap);
  const auto deadline = Clock::now() + params.time_budget;

  RadoOutcome out;
  out.witness.r = r;
  bool use_dp = params.backend == Backend::Dp;
  EdgeSet cache;
  std::int64_t cache_bound = 0;

  auto finish_lower = [&](std::int64_t last) {
    out.kind = RadoOutcome::Kind::LowerBound;
    out.value = last;
    return out;
  };

  for (std::int64_t n = 1; n <= params.n_cap; ++n) {
    if (Clock::now() >= deadline) return finish_lower(n - 1);

    if (!use_dp && n > cache_bound) {
      std::int64_t next = std::min(params.n_cap, std::max(n, cache_bound + std::max<std::int64_t>(4, cache_bound / 8)));
      if (projected_edge_count(eq, next) > params.edge_cap) next = n;
      if (projected_edge_count(eq, next) > params.edge_cap) {
        if (params.backend == Backend::Edge) {
          throw LimitError("edge backend refused at bound " + std::to_string(n) +
                           ": projected edge count exceeds the cap");
        }
        log::info("switching to dp backend at n=" + std::to_string(n));
        use_dp = true;
      } else {
        cache = build_hyperedges(eq, next, params.minimize_edges);
        cache_bound = next;
        log::debug("edge cache to n=" + std::to_string(next) + ": " +
                   std::to_string(cache.size()) + " edges");
      }
    }

    BoundRecord rec;
    rec.n = n;
    rec.backend = use_dp ? Backend::Dp : Backend::Edge;
    out.backend = rec.backend;

    int extension = 0;
    bool singleton = false;
    if (!use_dp) {
      for (std::size_t e = cache.count_up_to(n - 1); e < cache.count_up_to(n); ++e)
        singleton |= cache[e].size() == 1;
      if (!singleton) extension = extend_by_edges(cache, n, out.witness);
    } else {
      extension = extend_by_tables(eq, n, out.witness);
    }

    SearchOutcome result;
    if (singleton) {
      result.verdict = Verdict::Uncolorable;
    } else if (extension != 0) {
      rec.warm_start = true;
      result.verdict = Verdict::Colorable;
      Coloring next = out.witness;
      next.colors.push_back(extension);
      result.coloring = std::move(next);
    } else {
      Coloring hint = out.witness;
      hint.colors.push_back(1);
      if (use_dp) {
        result = search_dp(eq, n, r, params, deadline, &hint);
      } else {
        const EdgeSet edges = cache.prefix(n);
        result = search_edges(edges, r, params, deadline, &hint);
      }
      log::info("n=" + std::to_string(n) + " " + to_string(result.verdict) + " after " +
                std::to_string(result.stats.nodes) + " nodes (" + to_string(rec.backend) + ")");
    }

    rec.verdict = result.verdict;
    rec.stats = result.stats;
    out.total += result.stats;
    out.history.push_back(rec);

    switch (result.verdict) {
      case Verdict::Uncolorable:
        out.kind = RadoOutcome::Kind::Exact;
        out.value = n;
        return out;
      case Verdict::BudgetExhausted:
        return finish_lower(n - 1);
      case Verdict::Colorable:
        out.witness = std::move(*result.coloring);
        break;
    }
  }
  return finish_lower(params.n_cap);
}

}  // namespace rado
