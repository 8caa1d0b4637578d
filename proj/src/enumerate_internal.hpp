#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "rado/arith.hpp"
#include "rado/equation.hpp"

namespace rado::detail {

// Constrained positions of one side, in canonical order. Consecutive
// positions with equal coefficients form a group of interchangeable
// variables; canonical assignments are nondecreasing within a group.
struct SideLayout {
  std::vector<std::size_t> positions;
  std::vector<std::int64_t> coef;
  std::vector<bool> continues;
  std::vector<std::size_t> group_rest;
  std::vector<std::int64_t> min_after_group;
  int free_index = -1;
  std::int64_t free_coef = 0;
};

std::vector<SideLayout> make_layouts(const Equation& eq);
std::int64_t side_max_sum(const SideLayout& side, std::int64_t n, int degree);
double side_multiset_count(const SideLayout& side, std::int64_t n, bool distinct);

// Walks canonical assignments of one side with weighted power sum <= bound,
// writing values into the shared value vector.
class SideWalker {
 public:
  SideWalker(const SideLayout& side, int degree, bool distinct, std::int64_t n,
             std::vector<std::int64_t>& values);

  template <class Emit>
  bool walk(std::int64_t bound, Emit&& emit) {
    return rec(0, 0, bound, emit);
  }

 private:
  template <class Emit>
  bool rec(std::size_t i, std::int64_t partial, std::int64_t bound, Emit& emit) {
    if (i == side_.positions.size()) return emit(partial);
    const std::int64_t a = side_.coef[i];
    const std::int64_t start =
        side_.continues[i] ? values_[side_.positions[i - 1]] + (distinct_ ? 1 : 0) : 1;
    const auto rest = static_cast<std::int64_t>(side_.group_rest[i]);
    for (std::int64_t v = start; v <= n_; ++v) {
      const std::int64_t pv = a * arith::power(v, degree_);
      if (partial + pv * rest + side_.min_after_group[i] > bound) break;
      values_[side_.positions[i]] = v;
      if (!rec(i + 1, partial + pv, bound, emit)) return false;
    }
    return true;
  }

  const SideLayout& side_;
  int degree_;
  bool distinct_;
  std::int64_t n_;
  std::vector<std::int64_t>& values_;
};

}  // namespace rado::detail
