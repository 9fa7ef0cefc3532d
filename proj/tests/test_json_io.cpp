#include <doctest.h>

#include <filesystem>
#include <random>

#include "helpers.hpp"
#include "knitgraph/json_io.hpp"
#include "knitgraph/patterns.hpp"
#include "oracles.hpp"

using namespace knitgraph;

namespace {

GraphDocument random_document(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> size(0, 9);
  const std::size_t n = size(rng);
  DirectedKnitGraph g = oracle::random_dag(rng, n, 0.4);
  std::uniform_int_distribution<int> color(0, 3);
  g = g.recolored([&](std::size_t) { return static_cast<EdgeColor>(color(rng)); });
  GraphDocument doc;
  doc.graph = g;
  if (rng() % 2 == 0) {
    NaturalLayout layout;
    std::uniform_int_distribution<int> row(0, 5);
    std::uniform_int_distribution<int> tenth(-30, 30);
    for (std::size_t v = 0; v < n; ++v) layout.points.push_back({row(rng), tenth(rng) / 10.0});
    if (rng() % 3 == 0) layout.period = 4.5;
    doc.layout = layout;
  }
  if (rng() % 2 == 0) doc.k = rng() % 4;
  if (n > 0 && rng() % 3 == 0) doc.labels["0"] = "a";
  if (rng() % 4 == 0) doc.rule = "extended";
  return doc;
}

}  // namespace

TEST_CASE("serialize then parse is the identity on random documents") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    const GraphDocument doc = random_document(rng);
    const std::string text = serialize_json(doc);
    const GraphDocument back = parse_json(text);
    REQUIRE(back == doc);
    CHECK(serialize_json(back) == text);
  }
}

TEST_CASE("yarn multigraph documents round-trip") {
  GraphDocument doc;
  doc.graph = YarnGraph::build(3, {{0, 1}, {1, 0}, {1, 2}}, 1, {0, 0, 0});
  doc.k = 1;
  const GraphDocument back = parse_json(serialize_json(doc));
  CHECK(back.is_yarn());
  CHECK(back == doc);
}

TEST_CASE("undirected graphs keep their flag") {
  GraphDocument doc;
  doc.graph = DirectedKnitGraph::build(3, {{0, 1, EdgeColor::Uncolored}, {1, 2, EdgeColor::Uncolored}}, false);
  const GraphDocument back = parse_json(serialize_json(doc));
  CHECK_FALSE(back.directed().directed());
  CHECK(export_dot(back).find("dir=none") != std::string::npos);
}

TEST_CASE("fixture documents carry threads, layout and labels") {
  const Fixture f = gen_brioche_maximal(4);
  GraphDocument doc;
  doc.graph = f.graph;
  doc.layout = f.layout;
  doc.threads = f.cover;
  doc.k = f.k();
  for (std::size_t v = 0; v < f.labels.size(); ++v) doc.labels[std::to_string(v)] = f.labels[v];
  CHECK(parse_json(serialize_json(doc)) == doc);
}

TEST_CASE("schema errors name the offending field") {
  auto error_of = [](std::string_view text) -> std::string {
    try {
      parse_json(text);
    } catch (const KnitError& e) {
      CHECK(e.kind() == ErrorKind::SchemaError);
      return e.what();
    }
    return "";
  };
  CHECK(error_of(R"({"directed": true, "edges": []})").find("n") != std::string::npos);
  CHECK(error_of(R"({"n": 2, "directed": true, "edges": [{"src": 0}]})").find("edges[0].dst") != std::string::npos);
  CHECK(error_of(R"({"n": 2, "directed": true, "edges": [{"src": 0, "dst": 1, "color": "green"}]})")
            .find("color") != std::string::npos);
  CHECK(error_of(R"({"n": 2, "directed": true, "edges": [{"src": 0, "dst": 0}]})").find("SelfLoop") !=
        std::string::npos);
  CHECK_FALSE(error_of("{\"n\": 2,").empty());
  CHECK(error_of(R"({"n": 1, "directed": true, "edges": [], "layout": {"0": [0]}})").find("layout") !=
        std::string::npos);
}

TEST_CASE("missing file is a schema error") {
  CHECK_KNIT_ERROR(load_document("/nonexistent/graph.json"), ErrorKind::SchemaError);
}

TEST_CASE("save and load through a file") {
  const auto path = std::filesystem::temp_directory_path() / "knitgraph_io_test.json";
  GraphDocument doc;
  doc.graph = testutil::chain(3, EdgeColor::Blue);
  save_document(path, doc);
  CHECK(load_document(path) == doc);
  std::filesystem::remove(path);
}

TEST_CASE("DOT export of a blue chain") {
  const std::string dot = export_dot(testutil::chain(3, EdgeColor::Blue));
  CHECK(dot.rfind("digraph knitgraph {", 0) == 0);
  std::size_t nodes = 0, edges = 0, blue = 0;
  for (std::size_t pos = 0; (pos = dot.find('\n', pos)) != std::string::npos; ++pos) {
    const auto next = dot.find('\n', pos + 1);
    const std::string line = dot.substr(pos + 1, next == std::string::npos ? std::string::npos : next - pos - 1);
    if (line.find("->") != std::string::npos) {
      ++edges;
      if (line.find("color=blue") != std::string::npos) ++blue;
    } else if (line.find('[') != std::string::npos || (line.find(';') != std::string::npos && !line.empty())) {
      ++nodes;
    }
  }
  CHECK(edges == 2);
  CHECK(blue == 2);
  CHECK(nodes == 3);
}
