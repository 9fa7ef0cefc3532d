#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "knitgraph/errors.hpp"

namespace knitgraph {

using VertexId = std::uint32_t;

enum class EdgeColor : std::uint8_t { Blue, Red, Purple, Uncolored };

std::string_view to_string(EdgeColor color);

struct Edge {
  VertexId src = 0;
  VertexId dst = 0;
  EdgeColor color = EdgeColor::Uncolored;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Directed simple graph of stitches with optionally colored edges.
///
/// Self-loops and repeated vertex pairs are rejected, including antiparallel
/// pairs, so dropping directions always yields a simple graph. When
/// `directed()` is false the edge orientation carries no meaning and the
/// value models an undirected knitting graph handed to the exhaustive oracle.
class DirectedKnitGraph {
 public:
  DirectedKnitGraph() = default;

  static DirectedKnitGraph build(std::size_t n, std::vector<Edge> edges, bool directed = true);

  std::size_t size() const noexcept { return n_; }
  bool directed() const noexcept { return directed_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_[i]; }

  /// Edge indices leaving / entering v, in edge-list order.
  const std::vector<std::size_t>& out_edges(VertexId v) const { return out_[v]; }
  const std::vector<std::size_t>& in_edges(VertexId v) const { return in_[v]; }
  std::size_t outdeg(VertexId v) const { return out_[v].size(); }
  std::size_t indeg(VertexId v) const { return in_[v].size(); }

  /// Index of the edge joining u and v in either direction.
  std::optional<std::size_t> find_edge(VertexId u, VertexId v) const;

  bool has_color(EdgeColor c) const;

  /// Copy with every edge recolored through `recolor(edge_index)`.
  template <class F>
  DirectedKnitGraph recolored(F&& recolor) const {
    DirectedKnitGraph g = *this;
    for (std::size_t i = 0; i < g.edges_.size(); ++i) g.edges_[i].color = recolor(i);
    return g;
  }

  friend bool operator==(const DirectedKnitGraph& a, const DirectedKnitGraph& b) {
    return a.n_ == b.n_ && a.directed_ == b.directed_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  bool directed_ = true;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
};

inline DirectedKnitGraph build_directed_graph(std::size_t n, std::vector<Edge> edges) {
  return DirectedKnitGraph::build(n, std::move(edges), true);
}

struct Arc {
  VertexId src = 0;
  VertexId dst = 0;
  friend bool operator==(const Arc&, const Arc&) = default;
};

/// Directed multigraph following the physical yarn.
struct YarnGraph {
  std::size_t n = 0;
  std::vector<Arc> arcs;
  std::optional<std::size_t> yarn_count_hint;
  // Optional per-arc yarn index (same length as arcs, or empty).
  std::vector<std::size_t> arc_yarn;

  /// Validates ranges and self-loops.
  static YarnGraph build(std::size_t n, std::vector<Arc> arcs,
                         std::optional<std::size_t> yarn_count_hint = std::nullopt,
                         std::vector<std::size_t> arc_yarn = {});

  friend bool operator==(const YarnGraph&, const YarnGraph&) = default;
};

/// Undirected simple graph; each pair stored as (min, max).
struct KnittingGraph {
  std::size_t n = 0;
  std::vector<std::pair<VertexId, VertexId>> edges;

  friend bool operator==(const KnittingGraph&, const KnittingGraph&) = default;
};

/// Stitch position: integer row, fractional column.
struct LayoutPoint {
  int row = 0;
  double col = 0.0;
  friend bool operator==(const LayoutPoint&, const LayoutPoint&) = default;
};

/// Drawing of a graph on the plane, or on a cylinder when `period` is set
/// (columns are then taken modulo the period and edges use the short way
/// around).
struct NaturalLayout {
  std::vector<LayoutPoint> points;
  std::optional<double> period;

  friend bool operator==(const NaturalLayout&, const NaturalLayout&) = default;
};

/// Ordered vertex-disjoint threads.
struct ThreadCover {
  std::vector<std::vector<VertexId>> threads;

  std::size_t k() const noexcept { return threads.size(); }
  friend bool operator==(const ThreadCover&, const ThreadCover&) = default;
};

// Topological order with smallest-id tie-break. Throws CycleDetected listing
// one cycle.
std::vector<VertexId> topological_sort(const DirectedKnitGraph& g);

bool is_dag(const DirectedKnitGraph& g);

KnittingGraph underlying_knitting_graph(const DirectedKnitGraph& g);

// Collapses yarn multiplicities into colored edges. With `yarn_order`
// (position of every vertex along the yarn) red edges run from the lower to
// the higher position; otherwise they follow the first arc of the pair.
DirectedKnitGraph reduce_yarn_to_directed(const YarnGraph& y,
                                          const std::vector<std::size_t>* yarn_order = nullptr);

}  // namespace knitgraph
