#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "rado/enumerate.hpp"
#include "rado/power_sums.hpp"
#include "rado/solver.hpp"
#include "support.hpp"

using namespace rado;

namespace {

std::vector<Hyperedge> edges_of(const char* eq, std::int64_t n, bool minimize = true) {
  return build_hyperedges(parse_equation(eq), n, minimize).to_vectors();
}

std::set<std::vector<std::int64_t>> value_sets(const std::vector<SolutionTuple>& sols) {
  std::set<std::vector<std::int64_t>> out;
  for (const auto& s : sols) out.insert(s.values);
  return out;
}

}  // namespace

TEST_SUITE("enumerate") {

TEST_CASE("pythagorean solutions up to 5") {
  const auto eq = parse_equation("x^2+y^2=z^2");
  const auto sols = enumerate_solutions(eq, 5);
  CHECK(value_sets(sols) == std::set<std::vector<std::int64_t>>{{3, 4, 5}, {4, 3, 5}});
  CHECK(enumerate_solutions(eq, 4).empty());
}

TEST_CASE("three squares up to 3") {
  const auto eq = parse_equation("x^2+y^2+z^2=w^2");
  // terms in canonical order: w on the right, so values are (x, y, z, w)
  const auto sols = enumerate_solutions(eq, 3);
  CHECK(value_sets(sols) ==
        std::set<std::vector<std::int64_t>>{{1, 2, 2, 3}, {2, 1, 2, 3}, {2, 2, 1, 3}});
}

TEST_CASE("free-variable pairs for 9x^2+16y^2 up to 20 match a direct scan") {
  const auto eq = parse_equation("9x^2+16y^2=~n^2;distinct");
  // frozen from a brute-force squareness scan over (x, y) in [1, 20]^2, x != y
  const std::set<std::vector<std::int64_t>> expected{
      {3, 10, 41}, {5, 2, 17},  {5, 9, 39},  {6, 20, 82}, {7, 5, 29},  {7, 18, 75},
      {10, 4, 34}, {10, 18, 78}, {11, 14, 65}, {13, 20, 89}, {14, 10, 58}, {15, 6, 51},
      {15, 7, 53}, {16, 5, 52}, {16, 9, 60}, {20, 8, 68}};
  CHECK(value_sets(enumerate_solutions(eq, 20)) == expected);

  // and the scan itself, done here independently
  std::set<std::vector<std::int64_t>> scanned;
  for (std::int64_t x = 1; x <= 20; ++x) {
    for (std::int64_t y = 1; y <= 20; ++y) {
      if (x == y) continue;
      const std::int64_t s = 9 * x * x + 16 * y * y;
      for (std::int64_t m = 1; m * m <= s; ++m)
        if (m * m == s) scanned.insert({x, y, m});
    }
  }
  CHECK(scanned == expected);

  // x=y=5 gives 9*25+16*25=25^2, which only the repeats-allowed reading admits
  const auto loose = value_sets(enumerate_solutions(eq.with_distinct(false), 20));
  CHECK(loose.count({5, 5, 25}) == 1);
  CHECK(std::none_of(expected.begin(), expected.end(),
                     [](const auto& v) { return v[0] == 4 && v[1] == 3; }));
}

TEST_CASE("free variables are not bounded by n") {
  const auto eq = parse_equation("x+y=~z");
  const auto sols = enumerate_solutions(eq, 2);
  CHECK(value_sets(sols) ==
        std::set<std::vector<std::int64_t>>{{1, 1, 2}, {1, 2, 3}, {2, 1, 3}, {2, 2, 4}});
}

TEST_CASE("hyperedge examples") {
  CHECK(edges_of("x^2+y^2=z^2", 13) == std::vector<Hyperedge>{{3, 4, 5}, {6, 8, 10}, {5, 12, 13}});
  CHECK(edges_of("x+y=z", 3) == std::vector<Hyperedge>{{1, 2}});
  CHECK(edges_of("x+y=z", 3, false) == std::vector<Hyperedge>{{1, 2}, {1, 2, 3}});
  CHECK(edges_of("x^2+y^2+z^2=w^2", 3) == std::vector<Hyperedge>{{1, 2, 3}});
  CHECK(edges_of("x+y=z", 1).empty());
  CHECK(edges_of("x+y=~z", 1) == std::vector<Hyperedge>{{1}});
}

TEST_CASE("edge set invariants and prefixes") {
  const auto eq = parse_equation("x^2+y^2+z^2=w^2");
  const auto full = build_hyperedges(eq, 60, true);
  std::set<Hyperedge> seen;
  for (std::size_t i = 0; i < full.size(); ++i) {
    const Hyperedge e(full[i].begin(), full[i].end());
    CHECK(std::is_sorted(e.begin(), e.end()));
    CHECK(std::adjacent_find(e.begin(), e.end()) == e.end());
    CHECK(e.front() >= 1);
    CHECK(e.back() <= 60);
    CHECK(seen.insert(e).second);
  }
  for (std::int64_t n = 1; n <= 60; ++n) {
    CHECK(full.prefix(n).to_vectors() == build_hyperedges(eq, n, true).to_vectors());
  }
}

TEST_CASE("minimized edge sets contain no edge inside another") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const auto eq = testing::random_equation(rng);
    const auto edges = build_hyperedges(eq, 25, true).to_vectors();
    for (const auto& a : edges)
      for (const auto& b : edges)
        if (a != b) CHECK_FALSE(std::includes(b.begin(), b.end(), a.begin(), a.end()));
  }
}

TEST_CASE("unminimized edge sets grow monotonically with n") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 60; ++i) {
    const auto eq = testing::random_equation(rng);
    std::set<Hyperedge> prev;
    for (std::int64_t n = 1; n <= 20; ++n) {
      const auto cur_v = build_hyperedges(eq, n, false).to_vectors();
      const std::set<Hyperedge> cur(cur_v.begin(), cur_v.end());
      CHECK(std::includes(cur.begin(), cur.end(), prev.begin(), prev.end()));
      prev = cur;
    }
  }
}

TEST_CASE("enumeration agrees with a nested-loop scan") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 300; ++i) {
    const auto eq = testing::random_equation(rng);
    const std::int64_t n = std::uniform_int_distribution<std::int64_t>(1, 30)(rng);
    const auto got = enumerate_solutions(eq, n);
    REQUIRE_MESSAGE(got == testing::naive_solutions(eq, n), eq.to_string() << " n=" << n);
    for (const auto& s : got) CHECK(testing::satisfies(eq, s));
  }
}

TEST_CASE("enumeration is sound on larger equations") {
  for (int k = 2; k <= 8; ++k) {
    const auto eq = family_equation(k);
    const auto sols = enumerate_solutions(eq, k <= 3 ? 30 : 12);
    CHECK_FALSE(sols.empty());
    for (const auto& s : sols) CHECK(testing::satisfies(eq, s));
  }
}

TEST_CASE("projected count is exact at moderate bounds") {
  for (const char* text : {"x+y=z", "x^2+y^2=z^2", "x^2+y^2+z^2=w^2", "2x+y=3z+w"}) {
    const auto eq = parse_equation(text);
    for (std::int64_t n : {1, 5, 17, 40}) {
      std::size_t canonical = 0;
      for_each_canonical_solution(eq, n, [&](auto) { return ++canonical, true; });
      CHECK(projected_edge_count(eq, n) == doctest::Approx(static_cast<double>(canonical)));
    }
  }
}

TEST_CASE("bounds that would overflow are refused") {
  CHECK_THROWS_AS(build_hyperedges(family_equation(60), 2'000'000'000, false), OverflowError);
  CHECK_THROWS_AS(check_bound(parse_equation("x+y=z"), std::int64_t{1} << 40), OverflowError);
}

TEST_CASE("dp feasibility examples") {
  const auto e3 = family_equation(3);
  const std::vector<std::int64_t> c123{1, 2, 3}, c13{1, 3}, c12{1, 2};
  CHECK(dp_feasible(e3, c123, 3));
  CHECK_FALSE(dp_feasible(e3, c13, 3));
  CHECK(dp_feasible(parse_equation("x+y=z"), c12, 2));
  CHECK_THROWS_AS(dp_feasible(e3, c13, 2), Error);
}

TEST_CASE("dp feasibility matches explicit edges") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 400; ++i) {
    const auto eq = testing::random_equation(rng);
    const std::int64_t pivot = std::uniform_int_distribution<std::int64_t>(1, 18)(rng);
    std::vector<std::int64_t> cls{pivot};
    for (std::int64_t v = 1; v < pivot; ++v)
      if (std::bernoulli_distribution(0.5)(rng)) cls.push_back(v);
    const std::set<std::int64_t> in_class(cls.begin(), cls.end());
    const auto edges = build_hyperedges(eq, pivot, false);
    bool expected = false;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (edges.max_vertex(e) != pivot) continue;
      bool inside = true;
      for (auto v : edges[e]) inside = inside && in_class.count(v);
      expected = expected || inside;
    }
    REQUIRE_MESSAGE(dp_feasible(eq, cls, pivot) == expected, eq.to_string() << " pivot " << pivot);
  }
}

TEST_CASE("a coloring violates a minimized edge set iff it violates the full one") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 200; ++i) {
    const auto eq = testing::random_equation(rng);
    const std::int64_t n = std::uniform_int_distribution<std::int64_t>(1, 20)(rng);
    const auto minimized = build_hyperedges(eq, n, true);
    const auto full = build_hyperedges(eq, n, false);
    for (int j = 0; j < 10; ++j) {
      Coloring c{2, {}};
      for (std::int64_t v = 0; v < n; ++v) c.colors.push_back(std::uniform_int_distribution<int>(1, 2)(rng));
      CHECK(coloring_avoids(minimized, c) == coloring_avoids(full, c));
    }
  }
}

TEST_CASE("rendering and json") {
  const auto eq = parse_equation("9x^2+16y^2=~n^2");
  CHECK(render_solution(eq, {{4, 3, 20}}) == "9*4^2+16*3^2=20^2");
  CHECK(render_solution(parse_equation("x+y=z"), {{1, 1, 2}}) == "1+1=2");
  const auto edges = build_hyperedges(parse_equation("x^2+y^2=z^2"), 10, true);
  CHECK(edges_to_json(parse_equation("x^2+y^2=z^2"), edges) ==
        R"({"edges":[[3,4,5],[6,8,10]],"equation":"x^2+y^2=z^2","n":10})");
}

}  // TEST_SUITE
