#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "rado/certificate.hpp"
#include "support.hpp"

using namespace rado;

namespace {

Certificate schur_cert(std::vector<int> colors) {
  return make_certificate(parse_equation("x+y=z"), Coloring{2, std::move(colors)});
}

}  // namespace

TEST_SUITE("certificate") {

TEST_CASE("four-vertex schur coloring is valid and writes five lines") {
  const auto cert = schur_cert({1, 2, 2, 1});
  CHECK(write_certificate(cert) == "rado-cert v1\ne x+y=z\nn 4\nr 2\nk 1 2 2 1\n");
  CHECK(verify(cert).status == VerifyResult::Status::Valid);
}

TEST_CASE("monochromatic 1+1=2 is reported") {
  const auto result = verify(schur_cert({1, 1}));
  CHECK(result.status == VerifyResult::Status::Invalid);
  REQUIRE(result.violation.has_value());
  CHECK(result.violation->values == std::vector<std::int64_t>{1, 1, 2});
  CHECK(result.reason == "1+1=2");
}

TEST_CASE("long colorings wrap at fifty per line") {
  Coloring c{3, std::vector<int>(120, 3)};
  const auto text = write_certificate(make_certificate(parse_equation("x^2+y^2=z^2"), c, "colorable"));
  CHECK(std::count(text.begin(), text.end(), '\n') == 4 + 3 + 1);
  CHECK(text.substr(text.size() - 16) == "claim colorable\n");
  CHECK(parse_certificate(text).claim == "colorable");
}

TEST_CASE("malformed certificates") {
  auto status = [](const std::string& text) { return verify_text(text).status; };
  const auto M = VerifyResult::Status::Malformed;
  CHECK(status("") == M);
  CHECK(status("rado-cert v2\ne x+y=z\nn 1\nr 2\nk 1\n") == M);
  CHECK(status("rado-cert v1\ne x+y=\nn 1\nr 2\nk 1\n") == M);
  CHECK(status("rado-cert v1\ne x+y=z\nn 2\nr 2\nk 1\n") == M);
  CHECK(status("rado-cert v1\ne x+y=z\nn 1\nr 2\nk 3\n") == M);
  CHECK(status("rado-cert v1\ne x+y=z\nn 1\nr 2\nk 1\nextra\n") == M);
  CHECK(status("rado-cert v1\ne x+y=z\nn 1\nr 0\nk 1\n") == M);
  CHECK(status("rado-cert v1\ne x+y=z\nn -1\nr 2\n") == M);
  CHECK(status("rado-cert v1\ne x+y=z\nn 0\nr 2\n") == VerifyResult::Status::Valid);
  std::string crowded = "rado-cert v1\ne x+y=z\nn 51\nr 2\nk";
  for (int i = 0; i < 51; ++i) crowded += " 1";
  CHECK(status(crowded + "\n") == M);
  try {
    parse_certificate("rado-cert v1\ne x+y=z\nn x\nr 2\n");
    FAIL("expected a format error");
  } catch (const CertificateFormatError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("write then parse is the identity") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 1000; ++i) {
    const auto eq = testing::random_equation(rng);
    const int r = std::uniform_int_distribution<int>(1, kMaxColors)(rng);
    const auto n = std::uniform_int_distribution<std::int64_t>(0, 160)(rng);
    Coloring c{r, {}};
    for (std::int64_t v = 0; v < n; ++v) c.colors.push_back(std::uniform_int_distribution<int>(1, r)(rng));
    std::optional<std::string> claim;
    if (i % 3 == 1) claim = "colorable";
    if (i % 3 == 2) claim = "rado-exact " + std::to_string(n + 1);
    const auto cert = make_certificate(eq, c, claim);
    const auto text = write_certificate(cert);
    REQUIRE(parse_certificate(text) == cert);
    CHECK(write_certificate(parse_certificate(text)) == text);
  }
}

TEST_CASE("solver witnesses verify and a flipped color is caught") {
  std::mt19937_64 rng(43);
  int flipped = 0;
  for (int i = 0; i < 200; ++i) {
    const auto eq = testing::random_equation(rng);
    const int r = std::uniform_int_distribution<int>(2, 3)(rng);
    const auto n = std::uniform_int_distribution<std::int64_t>(1, 40)(rng);
    const auto out = find_coloring(eq, n, r);
    if (out.verdict != Verdict::Colorable) continue;
    auto cert = make_certificate(eq, *out.coloring);
    REQUIRE(verify(cert).status == VerifyResult::Status::Valid);

    // make one edge monochromatic by recoloring its first vertex
    const auto edges = build_hyperedges(eq, n, true);
    for (std::size_t e = 0; e < edges.size(); ++e) {
      const auto edge = edges[e];
      const int target = cert.coloring.at(edge.back());
      bool others_agree = true;
      for (std::size_t j = 1; j < edge.size(); ++j) others_agree = others_agree && cert.coloring.at(edge[j]) == target;
      if (!others_agree || edge.size() < 2) continue;
      cert.coloring.colors[static_cast<std::size_t>(edge.front() - 1)] = target;
      const auto bad = verify(cert);
      CHECK(bad.status == VerifyResult::Status::Invalid);
      REQUIRE(bad.violation.has_value());
      CHECK(testing::satisfies(eq, *bad.violation));
      ++flipped;
      break;
    }
  }
  CHECK(flipped > 20);
}

TEST_CASE("verdicts survive relabeling the colors") {
  std::mt19937_64 rng(47);
  for (int i = 0; i < 300; ++i) {
    const auto eq = testing::random_equation(rng);
    const int r = std::uniform_int_distribution<int>(2, 4)(rng);
    const auto n = std::uniform_int_distribution<std::int64_t>(1, 25)(rng);
    Coloring c{r, {}};
    for (std::int64_t v = 0; v < n; ++v) c.colors.push_back(std::uniform_int_distribution<int>(1, r)(rng));
    std::vector<int> perm(static_cast<std::size_t>(r));
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    Coloring relabeled = c;
    for (auto& col : relabeled.colors) col = perm[static_cast<std::size_t>(col - 1)];
    CHECK(verify(make_certificate(eq, c)).status == verify(make_certificate(eq, relabeled)).status);
  }
}

}  // TEST_SUITE
