#include <doctest.h>

#include <algorithm>

#include "gfa/errors.hpp"
#include "gfa/json_io.hpp"
#include "support.hpp"

using namespace gfa;
using namespace gfa_test;

TEST_CASE("graph JSON parsing") {
  const auto g = parse_graph(R"({"scalar":{"kind":"rational"},"n":3,"edges":[{"u":0,"v":1,"w":"1/2"},{"u":1,"v":2,"gamma_uv":1,"gamma_vu":2}]})");
  CHECK(g.node_count() == 3);
  CHECK(g.weight(0, 1) == q(1, 2));
  CHECK(g.weight(2, 1) == q(5));
  CHECK(g.weight(0, 2) == q(0));
  CHECK_FALSE(g.has_gamma());
  CHECK(serialize_graph(parse_graph(serialize_graph(g).dump())) == serialize_graph(g));
}

TEST_CASE("graph validation errors") {
  const std::string head = R"({"scalar":{"kind":"rational"},"n":3,"edges":)";
  CHECK_THROWS_AS(parse_graph(head + R"([{"u":0,"v":0,"w":1}]})"), ParseError);
  CHECK_THROWS_AS(parse_graph(head + R"([{"u":0,"v":1,"w":1},{"u":1,"v":0,"w":2}]})"), ParseError);
  CHECK_THROWS_AS(parse_graph(head + R"([{"u":0,"v":5,"w":1}]})"), ParseError);
  CHECK_THROWS_AS(parse_graph(head + R"([{"u":0,"v":1}]})"), ParseError);
  CHECK_THROWS_AS(parse_graph(head + R"([{"u":0,"v":1,"w":1,"gamma_uv":1,"gamma_vu":1}]})"), ParseError);
  CHECK_THROWS_AS(parse_graph(R"({"scalar":{"kind":"zmod"},"n":1,"edges":[]})"), ParseError);
  CHECK_THROWS_AS(parse_graph("{not json"), ParseError);
}

TEST_CASE("triangles, girth and distances") {
  const auto k4 = complete_graph(4, q(1));
  const auto s = triangles_girth_distance(k4);
  CHECK(s.triangles.size() == 4);
  CHECK(s.girth == 3);
  const auto c5 = cycle_graph(5, q(1));
  CHECK(triangles_girth_distance(c5).girth == 5);
  CHECK(triangles_girth_distance(c5).distance[0][2] == 2);
  CHECK_FALSE(triangles_girth_distance(path_graph(4, q(1))).girth.has_value());
  const auto e = edgeless_graph(ScalarDomain::rational(), 3);
  CHECK_FALSE(triangles_girth_distance(e).distance[0][1].has_value());
}

namespace {

// Brute-force oracle over all subsets.
std::size_t brute_force_size(const WeightedGraph& g, IndependenceVariant v) {
  const std::size_t n = g.node_count();
  const auto dist = triangles_girth_distance(g).distance;
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = i + 1; j < n && ok; ++j) {
        if (!((mask >> i) & 1u) || !((mask >> j) & 1u)) continue;
        const auto d = dist[i][j];
        if (d && (*d == 1 || (v == IndependenceVariant::two_packing && *d == 2))) ok = false;
      }
    if (ok) best = std::max<std::size_t>(best, __builtin_popcount(mask));
  }
  return best;
}

}  // namespace

TEST_CASE("exact independent sets match brute force") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 60; ++k) {
    const auto g = random_rational_graph(rng, 3 + k % 8, 0.4, false);
    for (auto v : {IndependenceVariant::independent, IndependenceVariant::two_packing}) {
      const auto set = max_independent_set(g, v);
      CHECK(set.size() == brute_force_size(g, v));
      CHECK(std::is_sorted(set.begin(), set.end()));
      CHECK(greedy_independent_set(g, v).size() <= set.size());
    }
  }
}

TEST_CASE("independent set size cap") {
  CHECK_THROWS_AS(max_independent_set(edgeless_graph(ScalarDomain::rational(), 41), IndependenceVariant::independent), SizeError);
  CHECK(greedy_independent_set(edgeless_graph(ScalarDomain::rational(), 41), IndependenceVariant::independent).size() == 41);
}

TEST_CASE("line graph harmonic weights") {
  const auto p = graph_from_weights(ScalarDomain::rational(), 3, {{0, 1, q(1)}, {1, 2, q(3)}});
  const auto lg = line_graph(p);
  CHECK(lg.graph.node_count() == 2);
  CHECK(lg.graph.weight(0, 1) == q(3, 2));

  const auto bad = graph_from_weights(ScalarDomain::rational(), 3, {{0, 1, q(1)}, {1, 2, q(-1)}});
  CHECK_THROWS_AS(line_graph(bad), DomainError);

  // Over Z_30 the denominator 6 + 10 = 16 is not a unit.
  const auto z = graph_from_weights(ScalarDomain::zmod(30), 3, {{0, 1, zm(6, 30)}, {1, 2, zm(10, 30)}});
  CHECK_THROWS_AS(line_graph(z), DomainError);
}

TEST_CASE("node strength") {
  const auto k3 = complete_graph(3, q(2));
  CHECK(node_strength(k3, 0) == q(4));
}
