#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

namespace knitgraph {

/// Dinic max-flow on integer capacities. Deterministic: arcs are explored in
/// insertion order.
class MaxFlow {
 public:
  static constexpr std::int64_t kInfinite = std::numeric_limits<std::int64_t>::max() / 4;

  explicit MaxFlow(std::size_t nodes) : adj_(nodes) {}

  std::size_t add_arc(std::size_t from, std::size_t to, std::int64_t capacity);

  /// Pushes up to `limit` more units from s to t; returns the amount pushed.
  std::int64_t run(std::size_t s, std::size_t t, std::int64_t limit = kInfinite);

  std::int64_t flow(std::size_t arc) const { return residual_[arc ^ 1]; }
  std::int64_t residual(std::size_t arc) const { return residual_[arc]; }
  /// Drops whatever forward capacity an arc has left; its flow is kept.
  void freeze(std::size_t arc) { residual_[arc] = 0; }

  std::size_t node_count() const { return adj_.size(); }

 private:
  bool build_levels(std::size_t s, std::size_t t);

  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::size_t> head_;
  std::vector<std::int64_t> residual_;
  std::vector<int> level_;
  std::vector<std::size_t> cursor_;
};

enum class ArcKind : std::uint8_t { Original, Split, Source, Sink, Super };

struct FlowArc {
  std::size_t from = 0;
  std::size_t to = 0;
  std::int64_t lower = 0;
  std::int64_t upper = 0;
  ArcKind kind = ArcKind::Original;
  // Edge index for Original arcs, vertex for Split/Source/Sink arcs.
  std::size_t origin = 0;
};

/// Split-vertex network: v_in = 2v, v_out = 2v + 1, followed by s_in, s_out,
/// t_in, t_out. A feasible flow is a circulation once t_out is joined back to
/// s_in; solvers add that closure arc themselves.
struct FlowNetwork {
  std::size_t vertex_count = 0;
  std::vector<FlowArc> arcs;

  std::size_t node_count() const { return 2 * vertex_count + 4; }
  static std::size_t in_node(std::size_t v) { return 2 * v; }
  static std::size_t out_node(std::size_t v) { return 2 * v + 1; }
  std::size_t s_in() const { return 2 * vertex_count; }
  std::size_t s_out() const { return 2 * vertex_count + 1; }
  std::size_t t_in() const { return 2 * vertex_count + 2; }
  std::size_t t_out() const { return 2 * vertex_count + 3; }
};

/// Flow per arc of the network, in network arc order.
using ArcFlow = std::vector<std::int64_t>;

/// Some integral flow from s_in to t_out meeting every lower and upper bound,
/// via the lower-bound elimination to a single max-flow problem.
std::optional<ArcFlow> solve_flow_with_bounds(const FlowNetwork& net);

/// Like solve_flow_with_bounds, then pushes flow back from t_out to s_in so
/// the s_in -> t_out value is as small as the bounds permit.
std::optional<ArcFlow> solve_min_flow(const FlowNetwork& net);

/// Net flow leaving s_in.
std::int64_t flow_value(const FlowNetwork& net, const ArcFlow& flow);

}  // namespace knitgraph
