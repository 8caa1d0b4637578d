#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "rado/enumerate.hpp"
#include "rado/solver.hpp"

namespace rado {

class CertificateFormatError : public Error {
 public:
  CertificateFormatError(std::size_t line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// A published coloring of [1, n]. `claim` is free-form context such as
/// "colorable" or "rado-exact 105"; it does not affect verification.
struct Certificate {
  std::string equation;
  std::int64_t n = 0;
  int r = 1;
  Coloring coloring;
  std::optional<std::string> claim;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

inline constexpr std::size_t kColorsPerLine = 50;

Certificate make_certificate(const Equation& eq, const Coloring& coloring,
                             std::optional<std::string> claim = std::nullopt);

/// rado-cert v1 / e <equation> / n <N> / r <R> / k <colors>... / [claim <text>]
std::string write_certificate(const Certificate& cert);

/// Inverse of write_certificate. Throws CertificateFormatError.
Certificate parse_certificate(std::string_view text);

struct VerifyResult {
  enum class Status { Valid, Invalid, Malformed };

  Status status = Status::Malformed;
  /// Set when Invalid: a monochromatic solution, aligned with equation terms.
  std::optional<SolutionTuple> violation;
  /// Malformed: why. Invalid: the violation rendered as "1+1=2".
  std::string reason;
};

std::string to_string(VerifyResult::Status s);

/// Re-enumerates every solution in [1, n] and checks none is monochromatic.
VerifyResult verify(const Certificate& cert);

/// Parses then verifies; parse failures come back as Malformed.
VerifyResult verify_text(std::string_view text);

}  // namespace rado
