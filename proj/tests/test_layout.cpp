#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "knitgraph/layout.hpp"
#include "knitgraph/patterns.hpp"
#include "oracles.hpp"

using namespace knitgraph;

namespace {

KnittingGraph complete(std::size_t n) {
  KnittingGraph kg{n, {}};
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) kg.edges.emplace_back(u, v);
  return kg;
}

KnittingGraph k33() {
  KnittingGraph kg{6, {}};
  for (VertexId u = 0; u < 3; ++u)
    for (VertexId v = 3; v < 6; ++v) kg.edges.emplace_back(u, v);
  return kg;
}

NaturalLayout transformed(const NaturalLayout& l, int drow, double dcol, int scale) {
  NaturalLayout out = l;
  for (auto& p : out.points) p = {p.row * scale + drow, p.col * scale + dcol};
  if (out.period) *out.period *= scale;
  return out;
}

// Star-stitch-like patch: a stitch pulled through two parents with two
// children of its own (red (2,2)), drawn without crossings.
DirectedKnitGraph many_to_many() {
  std::vector<Edge> edges;
  for (VertexId v = 0; v < 7; ++v) edges.push_back({v, v + 1, EdgeColor::Blue});
  for (auto [u, v] : {std::pair{0u, 3u}, {1u, 3u}, {3u, 6u}, {3u, 7u}}) edges.push_back({u, v, EdgeColor::Red});
  return build_directed_graph(8, std::move(edges));
}

}  // namespace

TEST_CASE("planarity") {
  CHECK_FALSE(is_planar(complete(5)));
  CHECK_FALSE(is_planar(k33()));
  CHECK(is_planar(complete(4)));
  CHECK(is_planar(underlying_knitting_graph(gen_stockinette(3, 3, false).graph)));
  KnittingGraph tree{7, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}}};
  CHECK(is_planar(tree));
  CHECK(is_planar(KnittingGraph{}));
  KnittingGraph dense = complete(6);
  CHECK_FALSE(is_planar(dense));
}

TEST_CASE("crossing graphs of fixtures") {
  const Fixture flat = gen_stockinette(4, 5, false);
  CHECK(crossing_graph(flat.graph, flat.layout).links.empty());
  const Fixture round = gen_stockinette(4, 5, true);
  CHECK(crossing_graph(round.graph, round.layout).links.empty());

  const Fixture c1b = gen_stitch_fixture("c1b");
  const CrossingGraph cg = crossing_graph(c1b.graph, c1b.layout);
  REQUIRE(cg.links.size() == 1);
  const Edge& a = c1b.graph.edge(cg.links[0].first);
  const Edge& b = c1b.graph.edge(cg.links[0].second);
  CHECK(a.color == EdgeColor::Red);
  CHECK(b.color == EdgeColor::Red);
  CHECK(oracle::crossings_float(c1b.graph, c1b.layout) == cg.links);
}

TEST_CASE("crossing graph agrees with floating point on random drawings") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 3 + rng() % 6;
    const auto g = oracle::random_dag(rng, n, 0.4);
    NaturalLayout layout;
    std::uniform_int_distribution<int> row(0, 30), col(0, 30);
    for (std::size_t v = 0; v < n; ++v) layout.points.push_back({row(rng), col(rng) + 0.5 * (v % 2)});
    try {
      const CrossingGraph cg = crossing_graph(g, layout);
      CHECK(cg.links == oracle::crossings_float(g, layout));
      CHECK(crossing_graph(g, transformed(layout, 7, -3.25, 3)).links == cg.links);
    } catch (const KnitError& e) {
      CHECK(e.kind() == ErrorKind::DegenerateLayout);
    }
  }
}

TEST_CASE("crossing graph is symmetric and invariant under translation and scaling") {
  const Fixture b = gen_brioche_maximal(8);
  const CrossingGraph cg = crossing_graph(b.graph, b.layout);
  for (const auto& [x, y] : cg.links) CHECK(x < y);
  CHECK(crossing_graph(b.graph, transformed(b.layout, 5, 2.5, 1)).links == cg.links);
  CHECK(crossing_graph(b.graph, transformed(b.layout, -1, 0.0, 4)).links == cg.links);
  const auto deg = cg.degrees();
  std::size_t total = 0;
  for (auto d : deg) total += d;
  CHECK(total == 2 * cg.links.size());
}

TEST_CASE("degenerate drawings are rejected") {
  const auto g = build_directed_graph(3, {{0, 1, EdgeColor::Blue}});
  NaturalLayout same{{{0, 0}, {0, 0}, {1, 0}}, std::nullopt};
  CHECK_KNIT_ERROR(crossing_graph(g, same), ErrorKind::DegenerateLayout);
  const auto h = build_directed_graph(4, {{0, 1, EdgeColor::Blue}, {2, 3, EdgeColor::Red}});
  NaturalLayout touching{{{0, 0}, {0, 2}, {0, 1}, {1, 1}}, std::nullopt};
  CHECK_KNIT_ERROR(crossing_graph(h, touching), ErrorKind::DegenerateLayout);
  NaturalLayout overlap{{{0, 0}, {0, 2}, {0, 1}, {0, 3}}, std::nullopt};
  CHECK_KNIT_ERROR(crossing_graph(h, overlap), ErrorKind::DegenerateLayout);
}

TEST_CASE("cable width") {
  const Fixture flat = gen_stockinette(3, 3, false);
  CHECK(cable_width(flat.graph, flat.layout) == 0);
  const Fixture c1b = gen_stitch_fixture("c1b");
  CHECK(cable_width(c1b.graph, c1b.layout) == 1);

  const auto x = build_directed_graph(4, {{0, 1, EdgeColor::Blue}, {2, 3, EdgeColor::Blue}});
  NaturalLayout cross{{{0, 0}, {1, 1}, {0, 1}, {1, 0}}, std::nullopt};
  CHECK_KNIT_ERROR(cable_width(x, cross), ErrorKind::BlueCrossing);
}

TEST_CASE("cable width takes the largest crossing component") {
  // Two separate cables: one single crossing, one edge crossing two others.
  const auto g = build_directed_graph(10, {{0, 1, EdgeColor::Red},
                                           {2, 3, EdgeColor::Red},
                                           {4, 5, EdgeColor::Red},
                                           {6, 7, EdgeColor::Red},
                                           {8, 9, EdgeColor::Red}});
  NaturalLayout l{{{0, 0}, {1, 1}, {0, 1}, {1, 0},
                   {0, 10}, {2, 10}, {1, 9}, {1, 11.5}, {0, 11}, {2, 11}},
                  std::nullopt};
  const CrossingGraph cg = crossing_graph(g, l);
  CHECK(cg.links.size() == 3);
  CHECK(cable_width(g, l) == 2);
}

TEST_CASE("classification of stitch fixtures") {
  for (const char* name : {"knit", "yo", "kfb", "k2tog"}) {
    const Fixture f = gen_stitch_fixture(name);
    const ComplexityClass cc = classify_complexity(f.graph, &f.layout, f.rule);
    CHECK_MESSAGE(cc.level == ComplexityLevel::Class0, name);
    CHECK(cc.planar);
    CHECK_FALSE(cc.layout_crossings);
  }
  const Fixture c1b = gen_stitch_fixture("c1b");
  const ComplexityClass cc = classify_complexity(c1b.graph, &c1b.layout, c1b.rule);
  CHECK(cc.level == ComplexityLevel::Class2);
  CHECK(cc.crossings_on_red);
  CHECK_FALSE(cc.crossings_on_blue);
  CHECK(cc.is_1b());
  CHECK_FALSE(cc.is_1a());
}

TEST_CASE("many-to-many planar patch is class 1") {
  const auto g = many_to_many();
  CHECK(is_planar(underlying_knitting_graph(g)));
  CHECK(classify_complexity(g, nullptr, RedRule::Strict).level == ComplexityLevel::Class1);
  CHECK(classify_complexity(g, nullptr, RedRule::Extended).level == ComplexityLevel::Class1);
  CHECK(classify_complexity(g, nullptr, RedRule::Unrestricted).level == ComplexityLevel::Class0);
}

TEST_CASE("class 3 only by declaration") {
  const Fixture f = gen_stitch_fixture("knit");
  CHECK(classify_complexity(f.graph, &f.layout, f.rule, true).level == ComplexityLevel::Class3);
}

TEST_CASE("blue-only crossings set 1a and clear 1b") {
  const auto g = build_directed_graph(4, {{0, 1, EdgeColor::Blue}, {2, 3, EdgeColor::Blue}});
  NaturalLayout cross{{{0, 0}, {1, 1}, {0, 1}, {1, 0}}, std::nullopt};
  const ComplexityClass cc = classify_complexity(g, &cross, RedRule::Unrestricted);
  CHECK(cc.level == ComplexityLevel::Class2);
  CHECK(cc.is_1a());
  CHECK_FALSE(cc.is_1b());
}

TEST_CASE("row counting") {
  for (std::size_t r = 1; r <= 8; ++r)
    for (std::size_t c = 2; c <= 8; ++c) {
      const Fixture f = gen_stockinette(r, c, false);
      const RowCount rc = count_rows(f.graph, f.cover, f.layout);
      CHECK(rc.rows == r);
      for (VertexId v = 0; v < f.graph.size(); ++v)
        CHECK(rc.row_of[v] == static_cast<std::size_t>(f.layout.points[v].row));
    }
  for (const char* name : {"kfb", "yo", "k2tog", "knit"}) {
    const Fixture f = gen_stitch_fixture(name);
    CHECK_MESSAGE(count_rows(f.graph, f.cover, f.layout).rows == 3, name);
  }
}

TEST_CASE("row counting preconditions") {
  const Fixture c1b = gen_stitch_fixture("c1b");
  CHECK_KNIT_ERROR(count_rows(c1b.graph, c1b.cover, c1b.layout), ErrorKind::NotPlanarLayout);
  const Fixture b = gen_brioche_maximal(4);
  CHECK_KNIT_ERROR(count_rows(b.graph, b.cover, b.layout), ErrorKind::NotSingleThread);
}

TEST_CASE("simple knittability") {
  for (std::size_t r = 1; r <= 5; ++r) {
    const Fixture f = gen_stockinette(r, 4, false);
    const SimplicityReport s = test_simple_knittable(f.graph, f.cover);
    CHECK(s.swaps == 0);
    CHECK(s.layout.has_value());
  }
  const Fixture c1b = gen_stitch_fixture("c1b");
  const SimplicityReport s = test_simple_knittable(c1b.graph, c1b.cover);
  CHECK(s.swaps == 1);
  CHECK_FALSE(s.layout.has_value());

  const auto line = testutil::chain(4, EdgeColor::Blue);
  const SimplicityReport t = test_simple_knittable(line, {{{0, 1, 2, 3}}});
  CHECK(t.swaps == 0);
  REQUIRE(t.layout.has_value());
  for (const auto& p : t.layout->points) CHECK(p.row == 0);
}

TEST_CASE("induced layout of a flat fabric is its grid") {
  const Fixture f = gen_stockinette(4, 3, false);
  const SimplicityReport s = test_simple_knittable(f.graph, f.cover);
  REQUIRE(s.layout.has_value());
  CHECK(*s.layout == f.layout);
}

TEST_CASE("class 0 generated fixtures are plane, cable free, simple and row counted") {
  for (std::size_t r = 2; r <= 5; ++r)
    for (std::size_t c = 2; c <= 5; ++c) {
      const Fixture f = gen_stockinette(r, c, false);
      REQUIRE(f.expected_class == ComplexityLevel::Class0);
      CHECK(is_planar(underlying_knitting_graph(f.graph)));
      CHECK(cable_width(f.graph, f.layout) == 0);
      CHECK(test_simple_knittable(f.graph, f.cover).layout.has_value());
      CHECK(count_rows(f.graph, f.cover, f.layout).rows == r);
    }
}
