#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "knitgraph/feasibility.hpp"
#include "knitgraph/graph.hpp"

namespace knitgraph {

bool is_planar(const KnittingGraph& kg);

/// Nodes are edge indices of the graph; a link joins two edges whose straight
/// segments cross in the layout. Edges sharing an endpoint never link.
struct CrossingGraph {
  std::size_t edge_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> links;

  std::vector<std::size_t> degrees() const;
};

/// Exact segment test on a 1e-6 grid. Throws DegenerateLayout when two
/// vertices coincide, a vertex lies inside another edge's segment, or two
/// segments overlap.
CrossingGraph crossing_graph(const DirectedKnitGraph& g, const NaturalLayout& layout);

/// Largest link count among connected components of the crossing graph.
/// Throws BlueCrossing if two sequential (blue or purple) edges cross.
std::size_t cable_width(const DirectedKnitGraph& g, const NaturalLayout& layout);

enum class ComplexityLevel { Class0 = 0, Class1 = 1, Class2 = 2, Class3 = 3 };

struct ComplexityClass {
  ComplexityLevel level = ComplexityLevel::Class0;
  bool planar = true;
  bool layout_crossings = false;
  bool crossings_on_red = false;   // a crossing involves a loop edge
  bool crossings_on_blue = false;  // a crossing involves a sequential edge

  bool is_1a() const { return !crossings_on_red; }
  bool is_1b() const { return !crossings_on_blue; }
};

/// `multi_orientation` is the class-3 declaration; it cannot be detected.
ComplexityClass classify_complexity(const DirectedKnitGraph& g, const NaturalLayout* layout, RedRule rule,
                                    bool multi_orientation = false);

struct RowCount {
  std::size_t rows = 0;
  std::vector<std::size_t> row_of;  // 0-based row per vertex
};

/// Rows of a single-thread planar object: walk the thread and start a new
/// row whenever its loop edges (turn edges included) switch to the other
/// side of the thread.
/// Throws NotPlanarLayout, NotSingleThread.
RowCount count_rows(const DirectedKnitGraph& g, const ThreadCover& cover, const NaturalLayout& layout);

struct SimplicityReport {
  std::size_t swaps = 0;
  std::optional<NaturalLayout> layout;  // present iff swaps == 0
};

/// Counts interleaved loop pairs (a < c < b < d in thread order, both loops
/// leaving the same generation of stitches). Zero swaps yields the induced
/// row-by-row layout. Throws NotSingleThread.
SimplicityReport test_simple_knittable(const DirectedKnitGraph& g, const ThreadCover& cover);

}  // namespace knitgraph
