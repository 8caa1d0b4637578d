// Exhaustive colorability check. Deliberately shares nothing with the
// enumerate module or the search backends: solutions come from a plain
// odometer over all value tuples.

#include <cstdint>
#include <vector>

#include "rado/solver.hpp"

namespace rado {

namespace {

std::int64_t pow_d(std::int64_t v, int d) {
  std::int64_t out = 1;
  for (int i = 0; i < d; ++i) out *= v;
  return out;
}

// Vertex masks (bit v-1) of all solutions in [1, n].
std::vector<std::uint64_t> naive_solution_masks(const Equation& eq, std::int64_t n,
                                                bool stop_at_first) {
  std::vector<Term> terms = eq.terms();
  const std::size_t lhs_size = eq.lhs().size();
  std::vector<std::size_t> vars;
  int free_pos = -1;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].free) {
      free_pos = static_cast<int>(i);
    } else {
      vars.push_back(i);
    }
  }
  double tuples = 1.0;
  for (std::size_t i = 0; i < vars.size(); ++i) tuples *= static_cast<double>(n);
  if (tuples > 1e9) throw LimitError("oracle: too many value tuples");

  std::vector<std::uint64_t> masks;
  std::vector<std::int64_t> val(vars.size(), 1);
  for (;;) {
    std::int64_t left = 0, right = 0;
    for (std::size_t j = 0; j < vars.size(); ++j) {
      const std::int64_t t = terms[vars[j]].coefficient * pow_d(val[j], eq.degree());
      (vars[j] < lhs_size ? left : right) += t;
    }
    bool holds = false;
    if (free_pos < 0) {
      holds = left == right;
    } else {
      const auto& ft = terms[static_cast<std::size_t>(free_pos)];
      const bool free_left = static_cast<std::size_t>(free_pos) < lhs_size;
      const std::int64_t need = free_left ? right - left : left - right;
      for (std::int64_t f = 1; need > 0 && ft.coefficient * pow_d(f, eq.degree()) <= need; ++f) {
        if (ft.coefficient * pow_d(f, eq.degree()) == need) {
          holds = true;
          break;
        }
      }
    }
    if (holds && eq.distinct_required()) {
      for (std::size_t a = 0; a < val.size() && holds; ++a)
        for (std::size_t b = a + 1; b < val.size(); ++b)
          if (val[a] == val[b]) holds = false;
    }
    if (holds) {
      std::uint64_t m = 0;
      for (auto v : val) m |= std::uint64_t{1} << (v - 1);
      masks.push_back(m);
      if (stop_at_first) return masks;
    }
    std::size_t j = 0;
    while (j < val.size() && val[j] == n) val[j++] = 1;
    if (j == val.size()) break;
    ++val[j];
  }
  return masks;
}

}  // namespace

bool oracle_colorable(const Equation& eq, std::int64_t n, int r) {
  if (n < 1 || r < 1) throw InvalidArgument("oracle: n and r must be positive");
  double space = 1.0;
  for (std::int64_t i = 0; i < n; ++i) {
    space *= r;
    if (space > 1e8) throw LimitError("oracle: r^n exceeds 1e8");
  }
  if (r == 1) {
    if (n > 64) throw LimitError("oracle: n too large");
    return naive_solution_masks(eq, n, true).empty();
  }

  const auto masks = naive_solution_masks(eq, n, false);
  std::vector<int> color(static_cast<std::size_t>(n), 0);
  std::vector<std::uint64_t> class_mask(static_cast<std::size_t>(r), 0);
  for (;;) {
    std::fill(class_mask.begin(), class_mask.end(), 0);
    for (std::int64_t v = 0; v < n; ++v)
      class_mask[static_cast<std::size_t>(color[static_cast<std::size_t>(v)])] |= std::uint64_t{1} << v;
    bool valid = true;
    for (auto m : masks) {
      for (auto cm : class_mask) {
        if ((m & ~cm) == 0) {
          valid = false;
          break;
        }
      }
      if (!valid) break;
    }
    if (valid) return true;
    std::size_t i = 0;
    while (i < color.size() && color[i] == r - 1) color[i++] = 0;
    if (i == color.size()) return false;
    ++color[i];
  }
}

}  // namespace rado
