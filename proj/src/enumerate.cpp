#include "rado/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "enumerate_internal.hpp"
#include "rado/arith.hpp"

namespace rado {

namespace detail {

std::vector<SideLayout> make_layouts(const Equation& eq) {
  const auto terms = eq.terms();
  const std::size_t lhs_size = eq.lhs().size();
  std::vector<SideLayout> sides(2);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    auto& side = sides[i < lhs_size ? 0 : 1];
    const auto& t = terms[i];
    if (t.free) {
      side.free_index = static_cast<int>(i);
      side.free_coef = t.coefficient;
      continue;
    }
    const bool cont = !side.positions.empty() &&
                      side.coef.back() == t.coefficient &&
                      side.positions.back() + 1 == i;
    side.positions.push_back(i);
    side.coef.push_back(t.coefficient);
    side.continues.push_back(cont);
  }
  for (auto& side : sides) {
    const std::size_t m = side.positions.size();
    side.group_rest.assign(m, 0);
    side.min_after_group.assign(m, 0);
    std::int64_t after = 0;
    for (std::size_t i = m; i-- > 0;) {
      const bool next_continues = i + 1 < m && side.continues[i + 1];
      side.group_rest[i] = next_continues ? side.group_rest[i + 1] + 1 : 1;
      if (!next_continues) {
        // sum of coefficients strictly after this group
        std::int64_t tail = 0;
        for (std::size_t j = i + 1; j < m; ++j) tail += side.coef[j];
        after = tail;
      }
      side.min_after_group[i] = after;
    }
  }
  return sides;
}

std::int64_t side_max_sum(const SideLayout& side, std::int64_t n, int degree) {
  std::int64_t total = 0;
  for (auto a : side.coef) total += a * arith::power(n, degree);
  return total;
}

double side_multiset_count(const SideLayout& side, std::int64_t n, bool distinct) {
  double total = 1.0;
  std::size_t i = 0;
  while (i < side.positions.size()) {
    std::size_t t = 1;
    while (i + t < side.positions.size() && side.continues[i + t]) ++t;
    // C(n + t - 1, t) multisets, C(n, t) sets
    double c = 1.0;
    for (std::size_t j = 0; j < t; ++j) {
      const double top = distinct ? static_cast<double>(n) - static_cast<double>(j)
                                  : static_cast<double>(n + static_cast<std::int64_t>(j));
      c = c * std::max(0.0, top) / static_cast<double>(j + 1);
    }
    total *= c;
    i += t;
  }
  return total;
}

SideWalker::SideWalker(const SideLayout& side, int degree, bool distinct,
                       std::int64_t n, std::vector<std::int64_t>& values)
    : side_(side), degree_(degree), distinct_(distinct), n_(n), values_(values) {}

}  // namespace detail

namespace {

using detail::SideLayout;
using detail::SideWalker;

bool constrained_distinct(const Equation& eq, std::span<const std::int64_t> values,
                          std::vector<std::int64_t>& scratch) {
  scratch.clear();
  const auto terms_free = [&] {
    std::vector<bool> f;
    for (const auto& t : eq.terms()) f.push_back(t.free);
    return f;
  }();
  for (std::size_t i = 0; i < values.size(); ++i)
    if (!terms_free[i]) scratch.push_back(values[i]);
  std::sort(scratch.begin(), scratch.end());
  return std::adjacent_find(scratch.begin(), scratch.end()) == scratch.end();
}

struct VectorHash {
  std::size_t operator()(const Hyperedge& e) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto v : e) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

bool edge_order(const Hyperedge& a, const Hyperedge& b) {
  if (a.back() != b.back()) return a.back() < b.back();
  return a < b;
}

std::vector<Hyperedge> remove_supersets(std::vector<Hyperedge> edges) {
  std::unordered_set<Hyperedge, VectorHash> present(edges.begin(), edges.end());
  std::size_t max_size = 0;
  for (const auto& e : edges) max_size = std::max(max_size, e.size());
  std::vector<bool> size_present(max_size + 1, false);
  for (const auto& e : edges) size_present[e.size()] = true;

  // edges grouped by their smallest vertex, for the large-edge path
  std::unordered_map<Vertex, std::vector<std::size_t>> by_min;
  for (std::size_t i = 0; i < edges.size(); ++i) by_min[edges[i].front()].push_back(i);

  constexpr std::size_t kSubsetEnumLimit = 10;
  std::vector<Hyperedge> kept;
  kept.reserve(edges.size());
  Hyperedge sub;
  for (const auto& e : edges) {
    bool implied = false;
    const std::size_t k = e.size();
    if (k >= 2 && k <= kSubsetEnumLimit) {
      const std::uint32_t full = (1u << k) - 1;
      for (std::uint32_t mask = 1; mask < full && !implied; ++mask) {
        const auto bits = static_cast<std::size_t>(std::popcount(mask));
        if (!size_present[bits]) continue;
        sub.clear();
        for (std::size_t j = 0; j < k; ++j)
          if (mask >> j & 1u) sub.push_back(e[j]);
        implied = present.contains(sub);
      }
    } else if (k > kSubsetEnumLimit) {
      for (auto u : e) {
        auto it = by_min.find(u);
        if (it == by_min.end()) continue;
        for (auto idx : it->second) {
          const auto& f = edges[idx];
          if (f.size() >= k || f.back() > e.back()) continue;
          if (std::includes(e.begin(), e.end(), f.begin(), f.end())) {
            implied = true;
            break;
          }
        }
        if (implied) break;
      }
    }
    if (!implied) kept.push_back(e);
  }
  return kept;
}

// Number of canonical side assignments by sum, for sums below width.
std::vector<double> count_side_sums(const SideLayout& side, std::int64_t n,
                                    int degree, bool distinct, std::size_t width) {
  std::vector<double> acc(width, 0.0);
  acc[0] = 1.0;
  std::size_t i = 0;
  while (i < side.positions.size()) {
    std::size_t t = 1;
    while (i + t < side.positions.size() && side.continues[i + t]) ++t;
    const std::int64_t a = side.coef[i];
    std::vector<std::vector<double>> rows(t + 1, std::vector<double>(width, 0.0));
    rows[0][0] = 1.0;
    for (std::int64_t v = 1; v <= n; ++v) {
      const auto w = static_cast<std::size_t>(a * arith::power(v, degree));
      if (w >= width) break;
      auto update = [&](std::size_t j) {
        for (std::size_t s = width; s-- > w;) rows[j][s] += rows[j - 1][s - w];
      };
      if (distinct) {
        for (std::size_t j = t; j >= 1; --j) update(j);
      } else {
        for (std::size_t j = 1; j <= t; ++j) {
          for (std::size_t s = w; s < width; ++s) rows[j][s] += rows[j - 1][s - w];
        }
      }
    }
    std::vector<double> next(width, 0.0);
    for (std::size_t s = 0; s < width; ++s) {
      if (acc[s] == 0.0) continue;
      for (std::size_t u = 0; s + u < width; ++u) next[s + u] += acc[s] * rows[t][u];
    }
    acc = std::move(next);
    i += t;
  }
  return acc;
}

}  // namespace

void check_bound(const Equation& eq, std::int64_t n) {
  if (n < 1) throw OverflowError("bound must be at least 1");
  if (n > std::numeric_limits<Vertex>::max()) {
    throw OverflowError("bound " + std::to_string(n) + " exceeds the vertex range");
  }
  const auto p = arith::checked_mul(n, eq.degree() == 2 ? n : 1);
  if (!p) throw OverflowError("bound " + std::to_string(n) + " overflows 64-bit sums");
  for (const auto* side : {&eq.lhs(), &eq.rhs()}) {
    std::int64_t total = 0;
    for (const auto& t : *side) {
      const auto term = arith::checked_mul(*p, t.coefficient);
      const auto next = term ? arith::checked_add(total, *term) : std::nullopt;
      if (!next) {
        throw OverflowError("bound " + std::to_string(n) +
                            " overflows 64-bit sums for " + eq.to_string());
      }
      total = *next;
    }
  }
}

bool for_each_canonical_solution(const Equation& eq, std::int64_t n,
                                 const SolutionVisitor& visit) {
  check_bound(eq, n);
  const auto sides = detail::make_layouts(eq);
  const int degree = eq.degree();
  const bool distinct = eq.distinct_required();
  std::vector<std::int64_t> values(eq.variable_count(), 0);
  std::vector<std::int64_t> scratch;

  auto emit = [&]() -> bool {
    if (distinct && !constrained_distinct(eq, values, scratch)) return true;
    return visit(values);
  };

  const int free_side = sides[0].free_index >= 0 ? 0 : sides[1].free_index >= 0 ? 1 : -1;

  if (free_side >= 0) {
    const SideLayout& fside = sides[free_side];
    const SideLayout& oside = sides[1 - free_side];
    const std::int64_t omax = detail::side_max_sum(oside, n, degree);

    // Tabulate the constrained part of the free side, sorted by sum.
    std::vector<std::int64_t> flat;
    std::vector<std::pair<std::int64_t, std::size_t>> by_sum;
    const std::size_t fm = fside.positions.size();
    SideWalker fwalk(fside, degree, distinct, n, values);
    fwalk.walk(omax - fside.free_coef, [&](std::int64_t sum) {
      by_sum.emplace_back(sum, by_sum.size());
      for (auto pos : fside.positions) flat.push_back(values[pos]);
      return true;
    });
    std::sort(by_sum.begin(), by_sum.end());

    SideWalker owalk(oside, degree, distinct, n, values);
    return owalk.walk(omax, [&](std::int64_t osum) {
      for (const auto& [fsum, idx] : by_sum) {
        if (fsum >= osum) break;
        const auto root = arith::exact_root(osum - fsum, fside.free_coef, degree);
        if (!root) continue;
        for (std::size_t j = 0; j < fm; ++j) values[fside.positions[j]] = flat[idx * fm + j];
        values[static_cast<std::size_t>(fside.free_index)] = *root;
        if (!emit()) return false;
      }
      return true;
    });
  }

  const double count0 = detail::side_multiset_count(sides[0], n, distinct);
  const double count1 = detail::side_multiset_count(sides[1], n, distinct);
  const int table_side = count0 < count1 ? 0 : 1;
  const SideLayout& tside = sides[table_side];
  const SideLayout& sside = sides[1 - table_side];
  const std::int64_t tmax = detail::side_max_sum(tside, n, degree);
  const std::int64_t smax = detail::side_max_sum(sside, n, degree);

  SideWalker swalk(sside, degree, distinct, n, values);
  if (tside.positions.size() == 1) {
    const std::size_t pos = tside.positions[0];
    const std::int64_t b = tside.coef[0];
    return swalk.walk(tmax, [&](std::int64_t sum) {
      const auto root = arith::exact_root(sum, b, degree);
      if (!root || *root > n) return true;
      values[pos] = *root;
      return emit();
    });
  }

  std::unordered_map<std::int64_t, std::vector<std::uint32_t>> table;
  std::vector<std::int64_t> flat;
  const std::size_t tm = tside.positions.size();
  SideWalker twalk(tside, degree, distinct, n, values);
  twalk.walk(smax, [&](std::int64_t sum) {
    table[sum].push_back(static_cast<std::uint32_t>(flat.size() / tm));
    for (auto pos : tside.positions) flat.push_back(values[pos]);
    return true;
  });
  return swalk.walk(tmax, [&](std::int64_t sum) {
    auto it = table.find(sum);
    if (it == table.end()) return true;
    for (auto idx : it->second) {
      for (std::size_t j = 0; j < tm; ++j) values[tside.positions[j]] = flat[idx * tm + j];
      if (!emit()) return false;
    }
    return true;
  });
}

std::vector<SolutionTuple> enumerate_solutions(const Equation& eq, std::int64_t n) {
  const auto sides = detail::make_layouts(eq);
  // groups of interchangeable positions: [begin, end) in canonical order
  std::vector<std::pair<std::size_t, std::size_t>> groups;
  for (const auto& side : sides) {
    for (std::size_t i = 0; i < side.positions.size(); ++i) {
      if (side.continues[i]) {
        groups.back().second = side.positions[i] + 1;
      } else {
        groups.emplace_back(side.positions[i], side.positions[i] + 1);
      }
    }
  }

  std::vector<SolutionTuple> out;
  for_each_canonical_solution(eq, n, [&](std::span<const std::int64_t> canon) {
    std::vector<std::int64_t> v(canon.begin(), canon.end());
    // odometer over the distinct permutations of each group
    for (auto [b, e] : groups) std::sort(v.begin() + static_cast<std::ptrdiff_t>(b),
                                         v.begin() + static_cast<std::ptrdiff_t>(e));
    for (;;) {
      out.push_back({v});
      std::size_t g = 0;
      for (; g < groups.size(); ++g) {
        auto first = v.begin() + static_cast<std::ptrdiff_t>(groups[g].first);
        auto last = v.begin() + static_cast<std::ptrdiff_t>(groups[g].second);
        if (std::next_permutation(first, last)) break;
      }
      if (g == groups.size()) break;
    }
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

EdgeSet build_hyperedges(const Equation& eq, std::int64_t n, bool minimize) {
  std::unordered_set<Hyperedge, VectorHash> unique;
  const auto terms = eq.terms();
  Hyperedge e;
  for_each_canonical_solution(eq, n, [&](std::span<const std::int64_t> values) {
    e.clear();
    for (std::size_t i = 0; i < values.size(); ++i)
      if (!terms[i].free) e.push_back(static_cast<Vertex>(values[i]));
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    unique.insert(e);
    return true;
  });
  return EdgeSet::from_edges(n, {unique.begin(), unique.end()}, minimize);
}

double projected_edge_count(const Equation& eq, std::int64_t n) {
  check_bound(eq, n);
  const auto sides = detail::make_layouts(eq);
  const int degree = eq.degree();
  const bool distinct = eq.distinct_required();
  const int free_side = sides[0].free_index >= 0 ? 0 : sides[1].free_index >= 0 ? 1 : -1;

  std::int64_t width64 = 0;
  if (free_side >= 0) {
    width64 = detail::side_max_sum(sides[1 - free_side], n, degree) + 1;
  } else {
    width64 = std::min(detail::side_max_sum(sides[0], n, degree),
                       detail::side_max_sum(sides[1], n, degree)) + 1;
  }
  const double vars = static_cast<double>(eq.constrained_count());
  const double work = static_cast<double>(width64) * static_cast<double>(n) * vars;
  constexpr std::int64_t kMaxWidth = std::int64_t{1} << 22;
  if (width64 > kMaxWidth || work > 2e8) {
    const double product = detail::side_multiset_count(sides[0], n, distinct) *
                           detail::side_multiset_count(sides[1], n, distinct);
    return product / static_cast<double>(width64);
  }

  const auto width = static_cast<std::size_t>(width64);
  const auto c0 = count_side_sums(sides[0], n, degree, distinct, width);
  const auto c1 = count_side_sums(sides[1], n, degree, distinct, width);
  double total = 0.0;
  if (free_side < 0) {
    for (std::size_t s = 1; s < width; ++s) total += c0[s] * c1[s];
    return total;
  }
  const auto& cf = free_side == 0 ? c0 : c1;
  const auto& co = free_side == 0 ? c1 : c0;
  const std::int64_t a = sides[free_side].free_coef;
  for (std::int64_t f = 1;; ++f) {
    const std::int64_t shift = a * arith::power(f, degree);
    if (shift >= width64) break;
    const auto sh = static_cast<std::size_t>(shift);
    for (std::size_t s = sh; s < width; ++s) total += co[s] * cf[s - sh];
  }
  return total;
}

std::string render_solution(const Equation& eq, const SolutionTuple& s) {
  const auto terms = eq.terms();
  const std::size_t lhs_size = eq.lhs().size();
  std::string out;
  for (std::size_t i = 0; i < terms.size() && i < s.values.size(); ++i) {
    if (i == lhs_size) {
      out += '=';
    } else if (i) {
      out += '+';
    }
    if (terms[i].coefficient != 1) out += std::to_string(terms[i].coefficient) + "*";
    out += std::to_string(s.values[i]);
    if (eq.degree() == 2) out += "^2";
  }
  return out;
}

std::string edges_to_json(const Equation& eq, const EdgeSet& edges) {
  nlohmann::json j;
  j["equation"] = eq.to_string();
  j["n"] = edges.n();
  j["edges"] = edges.to_vectors();
  return j.dump();
}

EdgeSet EdgeSet::from_edges(std::int64_t n, std::vector<Hyperedge> edges,
                            bool minimize) {
  for (auto& e : edges) {
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
  }
  std::erase_if(edges, [](const Hyperedge& e) { return e.empty(); });
  std::sort(edges.begin(), edges.end(), edge_order);
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  if (minimize) edges = remove_supersets(std::move(edges));

  EdgeSet out;
  out.n_ = n;
  out.minimized_ = minimize;
  out.offsets_.reserve(edges.size() + 1);
  out.offsets_.push_back(0);
  for (const auto& e : edges) {
    out.vertices_.insert(out.vertices_.end(), e.begin(), e.end());
    out.offsets_.push_back(out.vertices_.size());
  }
  return out;
}

std::size_t EdgeSet::count_up_to(std::int64_t bound) const {
  std::size_t lo = 0, hi = size();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (max_vertex(mid) <= bound) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return lo;
}

EdgeSet EdgeSet::prefix(std::int64_t bound) const {
  EdgeSet out;
  out.n_ = bound;
  out.minimized_ = minimized_;
  const std::size_t count = count_up_to(bound);
  out.offsets_.assign(offsets_.begin(), offsets_.begin() + static_cast<std::ptrdiff_t>(count + (empty() ? 0 : 1)));
  if (out.offsets_.empty()) out.offsets_.push_back(0);
  out.vertices_.assign(vertices_.begin(),
                       vertices_.begin() + static_cast<std::ptrdiff_t>(out.offsets_.back()));
  return out;
}

std::vector<Hyperedge> EdgeSet::to_vectors() const {
  std::vector<Hyperedge> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) {
    auto e = (*this)[i];
    out.emplace_back(e.begin(), e.end());
  }
  return out;
}

Vertex EdgeSet::smallest_vertex() const {
  Vertex best = 0;
  for (std::size_t i = 0; i < size(); ++i) {
    const Vertex v = (*this)[i].front();
    if (best == 0 || v < best) best = v;
  }
  return best;
}

}  // namespace rado
