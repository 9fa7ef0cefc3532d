#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "knitgraph/feasibility.hpp"
#include "knitgraph/graph.hpp"

namespace knitgraph {

/// Directed trail as a sequence of arc indices into the yarn graph.
struct Trail {
  std::vector<std::size_t> arcs;
  bool closed = false;
};

struct TrailDecomposition {
  std::vector<Trail> trails;
};

/// Vertex sets of the weakly connected components that carry arcs, ordered
/// by smallest vertex.
std::vector<std::vector<VertexId>> arc_components(const YarnGraph& y);

/// Eulerian trail through every arc (all components when `component` is
/// empty, otherwise the arcs among the given vertices). At each step the
/// unused arc to the smallest vertex id is taken, ties by arc order.
/// Throws NoEulerianPath.
Trail eulerian_path(const YarnGraph& y, const std::vector<VertexId>& component = {});

/// Fewest arc-disjoint trails covering every arc: per component,
/// max(1, sum of positive outdeg - indeg).
struct YarnCount {
  std::size_t k = 0;
  TrailDecomposition decomposition;
  // (vertex, outdeg - indeg) for every unbalanced vertex
  std::vector<std::pair<VertexId, long long>> imbalances;
};
YarnCount minimum_yarns(const YarnGraph& y);

struct YarnCheckReport {
  bool ok = false;
  std::size_t minimum_k = 0;
  std::optional<DirectedKnitGraph> reduced;
  std::vector<std::string> problems;
};

/// Could `y` be the yarn graph of a k-knittable object?
YarnCheckReport is_yarn_graph_of_k_knittable(const YarnGraph& y, std::size_t k, RedRule rule);

/// Blue edge: one strand along it. Red: there and back. Purple: the
/// sequential strand, then there and back. Arcs are tagged with the yarn of
/// the thread that lays them (loops belong to the stitch passing through).
YarnGraph yarn_from_threads(const DirectedKnitGraph& g, const ThreadCover& cover);

/// The arcs laid by one yarn, as its own graph on the same vertex set.
YarnGraph yarn_subgraph(const YarnGraph& y, std::size_t yarn);

}  // namespace knitgraph
