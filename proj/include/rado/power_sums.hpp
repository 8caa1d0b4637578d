#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rado/equation.hpp"

namespace rado {

/// Reachability of weighted power sums from one color class.
///
/// Constrained variables are grouped by (side, coefficient). For a group of
/// t variables with coefficient a, row j of the group's table is the set of
/// sums a*(v_1^d + ... + v_j^d) over multisets {v_1..v_j} drawn from the
/// class, for j = 0..t. Only sums below the largest attainable common value
/// of both sides at bound n are tracked. Adding a value to the class only
/// ever sets bits.
///
/// Repetition is always allowed; equations with distinct_required are
/// handled by class_has_solution instead.
class PowerSumTable {
 public:
  PowerSumTable(const Equation& eq, std::int64_t n);

  /// Adds a value in [1, n] to the class.
  void add(std::int64_t value);

  /// True iff some solution uses only class values and uses `pivot` for at
  /// least one constrained variable. Assumes every class value <= pivot.
  bool has_solution_with_pivot(std::int64_t pivot) const;

  /// Whether `count` variables of group `group` can reach `sum`.
  bool reachable(std::size_t group, std::size_t count, std::int64_t sum) const;

  std::size_t group_count() const { return groups_.size(); }
  std::int64_t width() const { return width_; }

  /// Raw state for save/restore by a backtracking search.
  std::span<const std::uint64_t> state() const { return words_; }
  void restore(std::span<const std::uint64_t> saved);

 private:
  struct Group {
    int side;
    std::int64_t coefficient;
    std::size_t count;
    std::size_t first_row;
  };

  std::uint64_t* row(std::size_t group, std::size_t count) {
    return words_.data() + (groups_[group].first_row + count) * row_words_;
  }
  const std::uint64_t* row(std::size_t group, std::size_t count) const {
    return words_.data() + (groups_[group].first_row + count) * row_words_;
  }

  // Reachable side sums ("any") and those using the pivot ("with").
  void side_sums(int side, std::int64_t pivot, std::vector<std::uint64_t>& any,
                 std::vector<std::uint64_t>& with) const;

  int degree_;
  std::int64_t width_;
  std::size_t row_words_;
  int free_side_ = -1;
  std::int64_t free_coef_ = 0;
  std::vector<Group> groups_;
  std::vector<std::uint64_t> words_;
  mutable std::vector<std::uint64_t> scratch_[8];
};

/// Direct search for a solution over class values with largest value
/// `pivot`, honoring distinct_required. Used where tables cannot express
/// the constraint.
bool class_has_solution(const Equation& eq, std::span<const std::int64_t> class_values,
                        std::int64_t pivot);

}  // namespace rado
