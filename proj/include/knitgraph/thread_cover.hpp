#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "knitgraph/feasibility.hpp"
#include "knitgraph/flow.hpp"
#include "knitgraph/graph.hpp"

namespace knitgraph {

/// A colored graph together with the threads its blue edges form.
struct KnitWitness {
  DirectedKnitGraph colored;
  ThreadCover cover;
};

/// Topological order if every consecutive pair is joined by an arc.
/// Throws NotADag.
std::optional<std::vector<VertexId>> has_hamiltonian_path_dag(const DirectedKnitGraph& g);

/// Network whose feasible flows are exactly the k-thread covers that respect
/// the vertex roles of `rule`. Throws PurplePresent or InfeasibleVertex.
FlowNetwork build_flow_network(const DirectedKnitGraph& g, std::size_t k, RedRule rule);

/// Threads in order of the source arcs that carry them.
ThreadCover extract_threads(const FlowNetwork& net, const ArcFlow& flow);

/// Exactly-k decision for DAGs without purple edges. Throws NotADag,
/// PurplePresent.
std::optional<KnitWitness> decide_k_knittable(const DirectedKnitGraph& g, std::size_t k, RedRule rule);

/// All k in [1, n] for which decide_k_knittable succeeds.
std::vector<std::size_t> feasible_thread_counts(const DirectedKnitGraph& g, RedRule rule);

struct PathCover {
  std::size_t k = 0;
  ThreadCover cover;
};

/// Minimum vertex-disjoint path cover of a DAG; colors are ignored.
PathCover minimum_path_cover(const DirectedKnitGraph& g);

inline constexpr std::size_t kDefaultOracleCap = 10;

/// Exhaustive search over k-path systems, accepting the first one that
/// check_coloring validates. Undirected inputs get every thread order tried,
/// with red edges pointing from the earlier to the later stitch. Purple edges
/// are treated as uncolored. Throws TooLarge when n > cap.
std::optional<KnitWitness> brute_force_knittable(const DirectedKnitGraph& g, std::size_t k, RedRule rule,
                                                 std::size_t cap = kDefaultOracleCap);

}  // namespace knitgraph
