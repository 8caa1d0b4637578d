#include "rado/power_sums.hpp"

#include <algorithm>

#include "enumerate_internal.hpp"
#include "rado/arith.hpp"
#include "rado/enumerate.hpp"

namespace rado {

namespace {

using Words = std::vector<std::uint64_t>;

// dst |= src << shift, truncated to `words` words.
void or_shifted(std::uint64_t* dst, const std::uint64_t* src, std::size_t words,
                std::int64_t shift) {
  const auto ws = static_cast<std::size_t>(shift / 64);
  const auto bs = static_cast<unsigned>(shift % 64);
  if (ws >= words) return;
  if (bs == 0) {
    for (std::size_t i = words; i-- > ws;) dst[i] |= src[i - ws];
    return;
  }
  for (std::size_t i = words; i-- > ws + 1;) {
    dst[i] |= (src[i - ws] << bs) | (src[i - ws - 1] >> (64 - bs));
  }
  dst[ws] |= src[0] << bs;
}

// any(a & (b << shift))
bool any_and_shifted(const Words& a, const Words& b, std::int64_t shift) {
  const std::size_t words = a.size();
  const auto ws = static_cast<std::size_t>(shift / 64);
  const auto bs = static_cast<unsigned>(shift % 64);
  if (ws >= words) return false;
  for (std::size_t i = ws; i < words; ++i) {
    std::uint64_t v = b[i - ws] << bs;
    if (bs != 0 && i > ws) v |= b[i - ws - 1] >> (64 - bs);
    if (a[i] & v) return true;
  }
  return false;
}

bool any_and(const Words& a, const Words& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & b[i]) return true;
  return false;
}

// out = OR over set bits j of y of (x << j)
void convolve(const Words& x, const Words& y, Words& out) {
  std::fill(out.begin(), out.end(), 0);
  for (std::size_t w = 0; w < y.size(); ++w) {
    std::uint64_t bits = y[w];
    while (bits) {
      const int b = __builtin_ctzll(bits);
      bits &= bits - 1;
      or_shifted(out.data(), x.data(), out.size(), static_cast<std::int64_t>(w * 64 + static_cast<std::size_t>(b)));
    }
  }
}

}  // namespace

PowerSumTable::PowerSumTable(const Equation& eq, std::int64_t n) : degree_(eq.degree()) {
  check_bound(eq, n);
  const auto sides = detail::make_layouts(eq);
  for (int s = 0; s < 2; ++s) {
    if (sides[s].free_index >= 0) {
      free_side_ = s;
      free_coef_ = sides[s].free_coef;
    }
  }
  if (free_side_ >= 0) {
    width_ = detail::side_max_sum(sides[1 - free_side_], n, degree_) + 1;
  } else {
    width_ = std::min(detail::side_max_sum(sides[0], n, degree_),
                      detail::side_max_sum(sides[1], n, degree_)) + 1;
  }
  row_words_ = static_cast<std::size_t>((width_ + 63) / 64);

  for (int s = 0; s < 2; ++s) {
    const auto& side = sides[s];
    for (std::size_t i = 0; i < side.positions.size(); ++i) {
      if (i > 0 && side.coef[i] == side.coef[i - 1]) {
        ++groups_.back().count;
      } else {
        groups_.push_back({s, side.coef[i], 1, 0});
      }
    }
  }
  std::size_t rows = 0;
  for (auto& g : groups_) {
    g.first_row = rows;
    rows += g.count + 1;
  }
  words_.assign(rows * row_words_, 0);
  for (std::size_t g = 0; g < groups_.size(); ++g) row(g, 0)[0] = 1;
  for (auto& s : scratch_) s.assign(row_words_, 0);
}

void PowerSumTable::add(std::int64_t value) {
  for (std::size_t g = 0; g < groups_.size(); ++g) {
    const std::int64_t w = groups_[g].coefficient * arith::power(value, degree_);
    if (w >= width_) continue;
    // ascending count so row j-1 already includes the new value (repetition)
    for (std::size_t j = 1; j <= groups_[g].count; ++j) {
      or_shifted(row(g, j), row(g, j - 1), row_words_, w);
    }
  }
}

bool PowerSumTable::reachable(std::size_t group, std::size_t count, std::int64_t sum) const {
  if (group >= groups_.size() || count > groups_[group].count || sum < 0 || sum >= width_) {
    return false;
  }
  const auto s = static_cast<std::size_t>(sum);
  return (row(group, count)[s / 64] >> (s % 64)) & 1u;
}

void PowerSumTable::restore(std::span<const std::uint64_t> saved) {
  std::copy(saved.begin(), saved.end(), words_.begin());
}

void PowerSumTable::side_sums(int side, std::int64_t pivot, Words& any, Words& with) const {
  std::fill(any.begin(), any.end(), 0);
  std::fill(with.begin(), with.end(), 0);
  any[0] = 1;
  bool first = true;
  Words& tmp_any = scratch_[4];
  Words& tmp_with = scratch_[5];
  Words& g_with = scratch_[6];
  Words& g_all = scratch_[7];
  for (std::size_t g = 0; g < groups_.size(); ++g) {
    if (groups_[g].side != side) continue;
    const std::size_t t = groups_[g].count;
    const std::uint64_t* all = row(g, t);
    std::fill(g_with.begin(), g_with.end(), 0);
    const std::int64_t w = groups_[g].coefficient * arith::power(pivot, degree_);
    if (w < width_) or_shifted(g_with.data(), row(g, t - 1), row_words_, w);
    if (first) {
      std::copy(all, all + row_words_, any.begin());
      std::copy(g_with.begin(), g_with.end(), with.begin());
      first = false;
      continue;
    }
    std::copy(all, all + row_words_, g_all.begin());
    convolve(with, g_all, tmp_with);
    convolve(any, g_with, tmp_any);
    for (std::size_t i = 0; i < row_words_; ++i) tmp_with[i] |= tmp_any[i];
    convolve(any, g_all, tmp_any);
    any.swap(tmp_any);
    with.swap(tmp_with);
  }
}

bool PowerSumTable::has_solution_with_pivot(std::int64_t pivot) const {
  Words& any0 = scratch_[0];
  Words& with0 = scratch_[1];
  Words& any1 = scratch_[2];
  Words& with1 = scratch_[3];
  side_sums(0, pivot, any0, with0);
  side_sums(1, pivot, any1, with1);
  if (free_side_ < 0) return any_and(with0, any1) || any_and(any0, with1);

  const Words& any_f = free_side_ == 0 ? any0 : any1;
  const Words& with_f = free_side_ == 0 ? with0 : with1;
  const Words& any_o = free_side_ == 0 ? any1 : any0;
  const Words& with_o = free_side_ == 0 ? with1 : with0;
  for (std::int64_t f = 1;; ++f) {
    const std::int64_t shift = free_coef_ * arith::power(f, degree_);
    if (shift >= width_) break;
    if (any_and_shifted(with_o, any_f, shift) || any_and_shifted(any_o, with_f, shift)) {
      return true;
    }
  }
  return false;
}

bool class_has_solution(const Equation& eq, std::span<const std::int64_t> class_values,
                        std::int64_t pivot) {
  std::vector<std::int64_t> cls(class_values.begin(), class_values.end());
  std::sort(cls.begin(), cls.end());
  cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
  const auto terms = eq.terms();
  const std::size_t lhs_size = eq.lhs().size();
  const int degree = eq.degree();
  const bool distinct = eq.distinct_required();

  std::vector<std::size_t> constrained;
  int free_pos = -1;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].free) {
      free_pos = static_cast<int>(i);
    } else {
      constrained.push_back(i);
    }
  }
  std::vector<std::size_t> choice(constrained.size(), 0);

  auto check = [&]() {
    bool uses_pivot = false;
    std::int64_t lhs = 0, rhs = 0;
    std::vector<std::int64_t> vals;
    for (std::size_t j = 0; j < constrained.size(); ++j) {
      const std::int64_t v = cls[choice[j]];
      vals.push_back(v);
      uses_pivot |= v == pivot;
      const std::int64_t term = terms[constrained[j]].coefficient * arith::power(v, degree);
      (constrained[j] < lhs_size ? lhs : rhs) += term;
    }
    if (!uses_pivot) return false;
    if (distinct) {
      std::sort(vals.begin(), vals.end());
      if (std::adjacent_find(vals.begin(), vals.end()) != vals.end()) return false;
    }
    if (free_pos < 0) return lhs == rhs;
    const bool free_left = static_cast<std::size_t>(free_pos) < lhs_size;
    const std::int64_t residual = free_left ? rhs - lhs : lhs - rhs;
    return arith::exact_root(residual, terms[static_cast<std::size_t>(free_pos)].coefficient,
                             degree).has_value();
  };

  // nondecreasing choice indices within runs of interchangeable variables
  auto rec = [&](auto&& self, std::size_t j) -> bool {
    if (j == constrained.size()) return check();
    std::size_t start = 0;
    if (j > 0) {
      const auto& prev = terms[constrained[j - 1]];
      const auto& cur = terms[constrained[j]];
      const bool same_side = (constrained[j - 1] < lhs_size) == (constrained[j] < lhs_size);
      if (same_side && prev.coefficient == cur.coefficient) {
        start = choice[j - 1] + (distinct ? 1 : 0);
      }
    }
    for (std::size_t c = start; c < cls.size(); ++c) {
      choice[j] = c;
      if (self(self, j + 1)) return true;
    }
    return false;
  };
  return rec(rec, 0);
}

bool dp_feasible(const Equation& eq, std::span<const std::int64_t> class_values,
                 std::int64_t pivot) {
  if (std::find(class_values.begin(), class_values.end(), pivot) == class_values.end()) {
    throw Error("dp_feasible: pivot must belong to the class");
  }
  for (auto v : class_values) {
    if (v < 1 || v > pivot) throw Error("dp_feasible: class values must lie in [1, pivot]");
  }
  if (eq.distinct_required()) return class_has_solution(eq, class_values, pivot);
  PowerSumTable table(eq, pivot);
  std::vector<std::int64_t> sorted(class_values.begin(), class_values.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (auto v : sorted) table.add(v);
  return table.has_solution_with_pivot(pivot);
}

}  // namespace rado
