#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rado {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed DSL text. `position` is a 0-based byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, std::string expected, std::string found);

  std::size_t position() const { return position_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

/// Well-formed text that does not describe a valid equation.
class EquationError : public Error {
 public:
  enum class Kind {
    MixedDegree,
    DuplicateVariable,
    InvalidName,
    AllVariablesFree,
    BadCoefficient,
    EmptySide,
    TooManyVariables,
    TooManyFreeVariables,
    BadDegree,
    BadFamily,
  };

  EquationError(Kind kind, const std::string& message)
      : Error(message), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Raised when a requested bound would overflow 64-bit arithmetic.
class OverflowError : public Error {
 public:
  using Error::Error;
};

inline constexpr std::int64_t kMaxCoefficient = 1'000'000;
inline constexpr std::size_t kMaxVariables = 64;

struct Term {
  std::int64_t coefficient = 1;
  std::string variable;
  bool free = false;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sum of a_i * v_i^d = sum of b_j * w_j^d, stored in canonical form.
///
/// Within each side terms are ordered by (coefficient, name); the side with
/// more terms is the left side, ties going to the lexicographically smaller
/// term sequence. A free variable only has to take some positive integer
/// value; it does not take part in the coloring constraint.
class Equation {
 public:
  /// Validates and normalizes. Throws EquationError.
  Equation(std::vector<Term> lhs, std::vector<Term> rhs, int degree,
           bool distinct_required = false);

  const std::vector<Term>& lhs() const { return lhs_; }
  const std::vector<Term>& rhs() const { return rhs_; }
  int degree() const { return degree_; }
  bool distinct_required() const { return distinct_required_; }

  /// All terms in canonical order: lhs first, then rhs.
  std::vector<Term> terms() const;
  std::size_t variable_count() const { return lhs_.size() + rhs_.size(); }
  std::size_t constrained_count() const;
  std::set<std::string> free_vars() const;

  Equation with_distinct(bool distinct) const;

  /// Canonical DSL rendering; parse_equation(to_string()) == *this.
  std::string to_string() const;

  friend bool operator==(const Equation&, const Equation&) = default;

 private:
  std::vector<Term> lhs_;
  std::vector<Term> rhs_;
  int degree_ = 1;
  bool distinct_required_ = false;
};

/// Grammar:
///   equation := side '=' side [';' 'distinct']
///   side     := term ('+' term)*
///   term     := [uint] var ['^' ('1'|'2')]
///   var      := ['~'] ident
Equation parse_equation(std::string_view text);

/// x1^2 + ... + xk^2 = z^2, for k >= 2.
Equation family_equation(int k);

}  // namespace rado
