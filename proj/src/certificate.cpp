#include "rado/certificate.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace rado {

namespace {

constexpr std::string_view kMagic = "rado-cert v1";

std::int64_t parse_int(std::string_view s, std::size_t line, const char* what) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw CertificateFormatError(line, std::string("bad ") + what + " '" + std::string(s) + "'");
  }
  return v;
}

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.emplace_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

}  // namespace

std::string to_string(VerifyResult::Status s) {
  switch (s) {
    case VerifyResult::Status::Valid: return "valid";
    case VerifyResult::Status::Invalid: return "invalid";
    case VerifyResult::Status::Malformed: return "malformed";
  }
  return "malformed";
}

Certificate make_certificate(const Equation& eq, const Coloring& coloring,
                             std::optional<std::string> claim) {
  return Certificate{eq.to_string(), coloring.n(), coloring.r, coloring, std::move(claim)};
}

std::string write_certificate(const Certificate& cert) {
  std::string out;
  out += kMagic;
  out += "\ne " + cert.equation;
  out += "\nn " + std::to_string(cert.n);
  out += "\nr " + std::to_string(cert.r);
  out += '\n';
  const auto& colors = cert.coloring.colors;
  for (std::size_t i = 0; i < colors.size(); i += kColorsPerLine) {
    out += 'k';
    for (std::size_t j = i; j < std::min(colors.size(), i + kColorsPerLine); ++j) {
      out += ' ';
      out += std::to_string(colors[j]);
    }
    out += '\n';
  }
  if (cert.claim) out += "claim " + *cert.claim + "\n";
  return out;
}

Certificate parse_certificate(std::string_view text) {
  const auto lines = split_lines(text);
  auto line_at = [&](std::size_t i) -> const std::string& {
    if (i >= lines.size()) throw CertificateFormatError(i + 1, "unexpected end of certificate");
    return lines[i];
  };
  auto field = [&](std::size_t i, std::string_view key) {
    const auto& l = line_at(i);
    const std::string prefix = std::string(key) + " ";
    if (l.rfind(prefix, 0) != 0) {
      throw CertificateFormatError(i + 1, "expected '" + std::string(key) + " ...'");
    }
    return std::string_view(l).substr(prefix.size());
  };

  if (line_at(0) != kMagic) throw CertificateFormatError(1, "expected 'rado-cert v1'");
  Certificate cert;
  cert.equation = std::string(field(1, "e"));
  cert.n = parse_int(field(2, "n"), 3, "n");
  cert.r = static_cast<int>(parse_int(field(3, "r"), 4, "r"));
  if (cert.n < 0) throw CertificateFormatError(3, "n must be nonnegative");
  if (cert.r < 1 || cert.r > kMaxColors) throw CertificateFormatError(4, "r out of range");
  cert.coloring.r = cert.r;

  std::size_t i = 4;
  for (; i < lines.size() && (lines[i] == "k" || lines[i].rfind("k ", 0) == 0); ++i) {
    std::string_view rest = std::string_view(lines[i]).substr(1);
    std::size_t count = 0;
    while (!rest.empty()) {
      if (rest.front() != ' ') throw CertificateFormatError(i + 1, "expected a space");
      rest.remove_prefix(1);
      const std::size_t end = std::min(rest.find(' '), rest.size());
      cert.coloring.colors.push_back(static_cast<int>(parse_int(rest.substr(0, end), i + 1, "color")));
      rest.remove_prefix(end);
      ++count;
    }
    if (count == 0 || count > kColorsPerLine) {
      throw CertificateFormatError(i + 1, "k-lines carry 1 to 50 colors");
    }
  }
  if (i < lines.size() && lines[i].rfind("claim ", 0) == 0) {
    cert.claim = lines[i].substr(6);
    ++i;
  }
  if (i != lines.size()) throw CertificateFormatError(i + 1, "unexpected line");
  if (cert.coloring.n() != cert.n) {
    throw CertificateFormatError(i, "expected " + std::to_string(cert.n) + " colors, found " +
                                        std::to_string(cert.coloring.n()));
  }
  return cert;
}

VerifyResult verify(const Certificate& cert) {
  VerifyResult out;
  std::optional<Equation> eq;
  try {
    eq = parse_equation(cert.equation);
  } catch (const Error& e) {
    out.reason = std::string("equation: ") + e.what();
    return out;
  }
  if (cert.r < 1 || cert.r > kMaxColors) {
    out.reason = "r out of range";
    return out;
  }
  if (cert.n < 0 || cert.coloring.n() != cert.n) {
    out.reason = "coloring length does not match n";
    return out;
  }
  for (std::size_t i = 0; i < cert.coloring.colors.size(); ++i) {
    const int c = cert.coloring.colors[i];
    if (c < 1 || c > cert.r) {
      out.reason = "color of " + std::to_string(i + 1) + " outside 1.." + std::to_string(cert.r);
      return out;
    }
  }
  out.status = VerifyResult::Status::Valid;
  if (cert.n == 0) return out;

  const auto terms = eq->terms();
  try {
    for_each_canonical_solution(*eq, cert.n, [&](std::span<const std::int64_t> values) {
      int shared = 0;
      for (std::size_t i = 0; i < values.size(); ++i) {
        if (terms[i].free) continue;
        const int c = cert.coloring.at(values[i]);
        if (shared == 0) {
          shared = c;
        } else if (c != shared) {
          return true;
        }
      }
      out.status = VerifyResult::Status::Invalid;
      out.violation = SolutionTuple{{values.begin(), values.end()}};
      return false;
    });
  } catch (const OverflowError& e) {
    out.status = VerifyResult::Status::Malformed;
    out.reason = e.what();
    return out;
  }
  if (out.violation) out.reason = render_solution(*eq, *out.violation);
  return out;
}

VerifyResult verify_text(std::string_view text) {
  try {
    return verify(parse_certificate(text));
  } catch (const Error& e) {
    VerifyResult out;
    out.reason = e.what();
    return out;
  }
}

}  // namespace rado
