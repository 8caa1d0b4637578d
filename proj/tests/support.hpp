#pragma once

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "rado/enumerate.hpp"
#include "rado/equation.hpp"

namespace testing {

struct CommandResult {
  int exit_code = -1;
  std::string out;
};

// Runs a shell command, capturing standard output only.
inline CommandResult run(const std::string& command) {
  CommandResult result;
  FILE* pipe = ::popen(command.c_str(), "r");
  if (pipe == nullptr) return result;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) result.out.append(buf.data(), got);
  const int status = ::pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

inline std::string quote(const std::string& s) { return "'" + s + "'"; }

struct RandomEquationOptions {
  int max_variables = 4;
  int max_coefficient = 3;
  double free_probability = 0.15;
  double distinct_probability = 0.15;
};

// Random valid equation with 2..max_variables variables and degree 1 or 2.
inline rado::Equation random_equation(std::mt19937_64& rng, const RandomEquationOptions& opt = {}) {
  std::uniform_int_distribution<int> var_count(2, opt.max_variables);
  std::uniform_int_distribution<int> coef(1, opt.max_coefficient);
  std::uniform_int_distribution<int> deg(1, 2);
  std::bernoulli_distribution make_free(opt.free_probability);
  std::bernoulli_distribution make_distinct(opt.distinct_probability);

  const int v = var_count(rng);
  const int split = std::uniform_int_distribution<int>(1, v - 1)(rng);
  const bool has_free = v >= 3 && make_free(rng);
  const int free_at = std::uniform_int_distribution<int>(0, v - 1)(rng);
  std::vector<rado::Term> lhs, rhs;
  for (int i = 0; i < v; ++i) {
    rado::Term t{coef(rng), "v" + std::to_string(i), has_free && i == free_at};
    (i < split ? lhs : rhs).push_back(t);
  }
  return rado::Equation(lhs, rhs, deg(rng), make_distinct(rng));
}

// Every solution with constrained values in [1, n], by a plain odometer.
// Free variables are found by scanning upward until the term exceeds the
// residual. Values are aligned with eq.terms(); the result is sorted.
inline std::vector<rado::SolutionTuple> naive_solutions(const rado::Equation& eq, std::int64_t n) {
  const auto terms = eq.terms();
  const std::size_t lhs_size = eq.lhs().size();
  std::vector<std::size_t> constrained;
  int free_pos = -1;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].free) {
      free_pos = static_cast<int>(i);
    } else {
      constrained.push_back(i);
    }
  }
  auto term_value = [&](std::size_t i, std::int64_t v) {
    std::int64_t p = 1;
    for (int d = 0; d < eq.degree(); ++d) p *= v;
    return terms[i].coefficient * p;
  };

  std::vector<rado::SolutionTuple> out;
  std::vector<std::int64_t> val(constrained.size(), 1);
  for (;;) {
    std::int64_t left = 0, right = 0;
    for (std::size_t j = 0; j < constrained.size(); ++j) {
      (constrained[j] < lhs_size ? left : right) += term_value(constrained[j], val[j]);
    }
    bool distinct_ok = true;
    if (eq.distinct_required()) {
      for (std::size_t a = 0; a < val.size(); ++a)
        for (std::size_t b = a + 1; b < val.size(); ++b)
          if (val[a] == val[b]) distinct_ok = false;
    }
    if (distinct_ok) {
      std::vector<std::int64_t> full(terms.size(), 0);
      for (std::size_t j = 0; j < constrained.size(); ++j) full[constrained[j]] = val[j];
      if (free_pos < 0) {
        if (left == right) out.push_back({full});
      } else {
        const auto fp = static_cast<std::size_t>(free_pos);
        const std::int64_t need = fp < lhs_size ? right - left : left - right;
        for (std::int64_t f = 1; need > 0 && term_value(fp, f) <= need; ++f) {
          if (term_value(fp, f) == need) {
            full[fp] = f;
            out.push_back({full});
          }
        }
      }
    }
    std::size_t j = 0;
    while (j < val.size() && val[j] == n) val[j++] = 1;
    if (j == val.size()) break;
    ++val[j];
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Substitutes a solution back into the equation.
inline bool satisfies(const rado::Equation& eq, const rado::SolutionTuple& s) {
  const auto terms = eq.terms();
  std::int64_t left = 0, right = 0;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    std::int64_t p = 1;
    for (int d = 0; d < eq.degree(); ++d) p *= s.values[i];
    (i < eq.lhs().size() ? left : right) += terms[i].coefficient * p;
  }
  return left == right;
}

}  // namespace testing
