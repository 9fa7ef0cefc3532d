#pragma once

#include <algorithm>
#include <set>
#include <tuple>
#include <vector>

#include <doctest.h>

#include "knitgraph/errors.hpp"
#include "knitgraph/graph.hpp"

// Asserts that `expr` throws KnitError of the given kind.
#define CHECK_KNIT_ERROR(expr, expected_kind)                              \
  do {                                                                     \
    bool thrown_ = false;                                                  \
    try {                                                                  \
      (void)(expr);                                                        \
    } catch (const knitgraph::KnitError& e_) {                             \
      thrown_ = true;                                                      \
      CHECK_MESSAGE(e_.kind() == (expected_kind), e_.what());              \
    }                                                                      \
    CHECK_MESSAGE(thrown_, "expected " #expected_kind " from " #expr);     \
  } while (false)

namespace testutil {

using EdgeKey = std::tuple<knitgraph::VertexId, knitgraph::VertexId, knitgraph::EdgeColor>;

inline std::set<EdgeKey> edge_set(const knitgraph::DirectedKnitGraph& g) {
  std::set<EdgeKey> s;
  for (const auto& e : g.edges()) s.emplace(e.src, e.dst, e.color);
  return s;
}

inline knitgraph::DirectedKnitGraph chain(std::size_t n, knitgraph::EdgeColor c = knitgraph::EdgeColor::Uncolored) {
  std::vector<knitgraph::Edge> edges;
  for (knitgraph::VertexId v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1, c});
  return knitgraph::build_directed_graph(n, std::move(edges));
}

}  // namespace testutil
