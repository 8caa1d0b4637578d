#include "rado/equation.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <tuple>

namespace rado {

namespace {

std::string describe_found(std::string_view text, std::size_t pos) {
  if (pos >= text.size()) return "end of input";
  return std::string("'") + text[pos] + "'";
}

bool term_less(const Term& a, const Term& b) {
  return std::tie(a.coefficient, a.variable, a.free) <
         std::tie(b.coefficient, b.variable, b.free);
}

bool side_less(const std::vector<Term>& a, const std::vector<Term>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      term_less);
}

struct ParsedTerm {
  Term term;
  int exponent = 1;
  bool explicit_exponent = false;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Equation parse() {
    auto lhs = side();
    expect('=', "'='");
    auto rhs = side();
    bool distinct = false;
    skip_ws();
    if (peek() == ';') {
      ++pos_;
      skip_ws();
      const std::size_t start = pos_;
      const std::string word = ident_chars();
      if (word != "distinct") fail(start, "'distinct'");
      distinct = true;
    }
    skip_ws();
    if (pos_ != text_.size()) fail(pos_, "'+', '=' or end of input");

    std::optional<int> degree;
    for (const auto* side : {&lhs, &rhs}) {
      for (const auto& t : *side) {
        if (degree && *degree != t.exponent) {
          throw EquationError(EquationError::Kind::MixedDegree,
                              "mixed degrees: all terms must share one exponent");
        }
        degree = t.exponent;
      }
    }
    auto strip = [](const std::vector<ParsedTerm>& in) {
      std::vector<Term> out;
      out.reserve(in.size());
      for (const auto& t : in) out.push_back(t.term);
      return out;
    };
    return Equation(strip(lhs), strip(rhs), degree.value_or(1), distinct);
  }

 private:
  std::vector<ParsedTerm> side() {
    std::vector<ParsedTerm> terms;
    terms.push_back(term());
    for (;;) {
      skip_ws();
      if (peek() != '+') break;
      ++pos_;
      terms.push_back(term());
    }
    return terms;
  }

  ParsedTerm term() {
    skip_ws();
    ParsedTerm out;
    if (peek() == '-') {
      throw EquationError(EquationError::Kind::BadCoefficient,
                          "coefficients must be positive (at position " +
                              std::to_string(pos_) + ")");
    }
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      const std::size_t start = pos_;
      std::int64_t value = 0;
      bool too_big = false;
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        value = value * 10 + (text_[pos_] - '0');
        if (value > kMaxCoefficient) too_big = true, value = kMaxCoefficient + 1;
        ++pos_;
      }
      if (value == 0 || too_big) {
        throw EquationError(EquationError::Kind::BadCoefficient,
                            "coefficient at position " + std::to_string(start) +
                                " must lie in [1, " +
                                std::to_string(kMaxCoefficient) + "]");
      }
      out.term.coefficient = value;
      skip_ws();
    }
    if (peek() == '~') {
      out.term.free = true;
      ++pos_;
      skip_ws();
    }
    if (!std::isalpha(static_cast<unsigned char>(peek()))) {
      fail(pos_, "variable name");
    }
    out.term.variable = ident_chars();
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      if (peek() == '1' || peek() == '2') {
        out.exponent = text_[pos_] - '0';
        out.explicit_exponent = true;
        ++pos_;
        if (std::isdigit(static_cast<unsigned char>(peek()))) fail(pos_, "'1' or '2'");
      } else {
        fail(pos_, "'1' or '2'");
      }
    }
    return out;
  }

  std::string ident_chars() {
    std::string name;
    if (!std::isalpha(static_cast<unsigned char>(peek()))) return name;
    while (pos_ < text_.size() &&
           std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
      name.push_back(text_[pos_++]);
    }
    return name;
  }

  void expect(char c, const char* what) {
    skip_ws();
    if (peek() != c) fail(pos_, what);
    ++pos_;
  }

  [[noreturn]] void fail(std::size_t at, const std::string& expected) const {
    throw ParseError(at, expected, describe_found(text_, at));
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ParseError::ParseError(std::size_t position, std::string expected,
                       std::string found)
    : Error("syntax error at position " + std::to_string(position) +
            ": expected " + expected + ", found " + found),
      position_(position),
      expected_(std::move(expected)) {}

Equation::Equation(std::vector<Term> lhs, std::vector<Term> rhs, int degree,
                   bool distinct_required)
    : lhs_(std::move(lhs)),
      rhs_(std::move(rhs)),
      degree_(degree),
      distinct_required_(distinct_required) {
  using K = EquationError::Kind;
  if (degree_ != 1 && degree_ != 2) {
    throw EquationError(K::BadDegree, "degree must be 1 or 2");
  }
  if (lhs_.empty() || rhs_.empty()) {
    throw EquationError(K::EmptySide, "each side needs at least one term");
  }
  if (variable_count() > kMaxVariables) {
    throw EquationError(K::TooManyVariables,
                        "at most " + std::to_string(kMaxVariables) +
                            " variables are supported");
  }
  std::set<std::string> seen;
  std::size_t free_count = 0;
  for (const auto* side : {&lhs_, &rhs_}) {
    for (const auto& t : *side) {
      if (t.coefficient < 1 || t.coefficient > kMaxCoefficient) {
        throw EquationError(K::BadCoefficient,
                            "coefficient of " + t.variable + " must lie in [1, " +
                                std::to_string(kMaxCoefficient) + "]");
      }
      const bool ident_ok =
          !t.variable.empty() &&
          std::isalpha(static_cast<unsigned char>(t.variable.front())) &&
          std::all_of(t.variable.begin(), t.variable.end(), [](char c) {
            return std::isalnum(static_cast<unsigned char>(c));
          });
      if (!ident_ok) {
        throw EquationError(K::InvalidName,
                            "invalid variable name '" + t.variable + "'");
      }
      if (!seen.insert(t.variable).second) {
        throw EquationError(K::DuplicateVariable,
                            "variable " + t.variable + " appears more than once");
      }
      if (t.free) ++free_count;
    }
  }
  if (free_count == variable_count()) {
    throw EquationError(K::AllVariablesFree,
                        "at least one variable must be constrained");
  }
  if (free_count > 1) {
    throw EquationError(K::TooManyFreeVariables,
                        "at most one free variable is supported");
  }

  std::sort(lhs_.begin(), lhs_.end(), term_less);
  std::sort(rhs_.begin(), rhs_.end(), term_less);
  const bool swap_sides =
      rhs_.size() > lhs_.size() ||
      (rhs_.size() == lhs_.size() && side_less(rhs_, lhs_));
  if (swap_sides) std::swap(lhs_, rhs_);
}

std::vector<Term> Equation::terms() const {
  std::vector<Term> out(lhs_);
  out.insert(out.end(), rhs_.begin(), rhs_.end());
  return out;
}

std::size_t Equation::constrained_count() const {
  std::size_t n = 0;
  for (const auto* side : {&lhs_, &rhs_})
    for (const auto& t : *side) n += t.free ? 0 : 1;
  return n;
}

std::set<std::string> Equation::free_vars() const {
  std::set<std::string> out;
  for (const auto* side : {&lhs_, &rhs_})
    for (const auto& t : *side)
      if (t.free) out.insert(t.variable);
  return out;
}

Equation Equation::with_distinct(bool distinct) const {
  Equation copy = *this;
  copy.distinct_required_ = distinct;
  return copy;
}

std::string Equation::to_string() const {
  std::string out;
  auto render_side = [&](const std::vector<Term>& side) {
    for (std::size_t i = 0; i < side.size(); ++i) {
      if (i) out += '+';
      const auto& t = side[i];
      if (t.coefficient != 1) out += std::to_string(t.coefficient);
      if (t.free) out += '~';
      out += t.variable;
      if (degree_ == 2) out += "^2";
    }
  };
  render_side(lhs_);
  out += '=';
  render_side(rhs_);
  if (distinct_required_) out += ";distinct";
  return out;
}

Equation parse_equation(std::string_view text) { return Parser(text).parse(); }

Equation family_equation(int k) {
  if (k < 2) {
    throw EquationError(EquationError::Kind::BadFamily,
                        "family equation needs k >= 2");
  }
  if (static_cast<std::size_t>(k) + 1 > kMaxVariables) {
    throw EquationError(EquationError::Kind::TooManyVariables,
                        "family equation needs k < " +
                            std::to_string(kMaxVariables));
  }
  std::vector<Term> lhs;
  for (int i = 1; i <= k; ++i) lhs.push_back({1, "x" + std::to_string(i), false});
  return Equation(std::move(lhs), {{1, "z", false}}, 2);
}

}  // namespace rado
