#include "knitgraph/flow.hpp"

#include <algorithm>

namespace knitgraph {

std::size_t MaxFlow::add_arc(std::size_t from, std::size_t to, std::int64_t capacity) {
  const std::size_t id = head_.size();
  head_.push_back(to);
  residual_.push_back(capacity);
  adj_[from].push_back(id);
  head_.push_back(from);
  residual_.push_back(0);
  adj_[to].push_back(id + 1);
  return id;
}

bool MaxFlow::build_levels(std::size_t s, std::size_t t) {
  level_.assign(adj_.size(), -1);
  std::vector<std::size_t> queue{s};
  level_[s] = 0;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const std::size_t v = queue[i];
    for (std::size_t e : adj_[v]) {
      if (residual_[e] > 0 && level_[head_[e]] < 0) {
        level_[head_[e]] = level_[v] + 1;
        queue.push_back(head_[e]);
      }
    }
  }
  return level_[t] >= 0;
}

std::int64_t MaxFlow::run(std::size_t s, std::size_t t, std::int64_t limit) {
  std::int64_t total = 0;
  std::vector<std::size_t> path;
  while (total < limit && build_levels(s, t)) {
    cursor_.assign(adj_.size(), 0);
    // Blocking flow with an explicit stack; dead ends are pruned by level.
    std::size_t v = s;
    path.clear();
    while (total < limit) {
      if (v == t) {
        std::int64_t push = limit - total;
        for (std::size_t e : path) push = std::min(push, residual_[e]);
        for (std::size_t e : path) {
          residual_[e] -= push;
          residual_[e ^ 1] += push;
        }
        total += push;
        path.clear();
        v = s;
        continue;
      }
      auto& cur = cursor_[v];
      const auto& out = adj_[v];
      while (cur < out.size() && !(residual_[out[cur]] > 0 && level_[head_[out[cur]]] == level_[v] + 1)) ++cur;
      if (cur < out.size()) {
        path.push_back(out[cur]);
        v = head_[out[cur]];
        continue;
      }
      if (v == s) break;
      level_[v] = -1;
      const std::size_t back = path.back();
      path.pop_back();
      v = head_[back ^ 1];
      ++cursor_[v];
    }
  }
  return total;
}

namespace {

struct Reduction {
  MaxFlow solver;
  std::vector<std::size_t> arc_ids;
  std::size_t closure = 0;
  std::size_t super_source = 0;
  std::size_t super_sink = 0;
  std::int64_t demand = 0;
};

Reduction reduce(const FlowNetwork& net) {
  const std::size_t nodes = net.node_count();
  Reduction r{MaxFlow(nodes + 2), {}, 0, nodes, nodes + 1, 0};
  std::vector<std::int64_t> excess(nodes, 0);
  r.arc_ids.reserve(net.arcs.size());
  for (const FlowArc& a : net.arcs) {
    r.arc_ids.push_back(r.solver.add_arc(a.from, a.to, a.upper - a.lower));
    excess[a.to] += a.lower;
    excess[a.from] -= a.lower;
  }
  r.closure = r.solver.add_arc(net.t_out(), net.s_in(), MaxFlow::kInfinite);
  for (std::size_t v = 0; v < nodes; ++v) {
    if (excess[v] > 0) {
      r.solver.add_arc(r.super_source, v, excess[v]);
      r.demand += excess[v];
    } else if (excess[v] < 0) {
      r.solver.add_arc(v, r.super_sink, -excess[v]);
    }
  }
  return r;
}

bool bounds_valid(const FlowNetwork& net) {
  return std::all_of(net.arcs.begin(), net.arcs.end(),
                     [&](const FlowArc& a) { return 0 <= a.lower && a.lower <= a.upper && a.from < net.node_count() && a.to < net.node_count(); });
}

ArcFlow collect(const FlowNetwork& net, const Reduction& r) {
  ArcFlow flow(net.arcs.size());
  for (std::size_t i = 0; i < net.arcs.size(); ++i) flow[i] = net.arcs[i].lower + r.solver.flow(r.arc_ids[i]);
  return flow;
}

}  // namespace

std::optional<ArcFlow> solve_flow_with_bounds(const FlowNetwork& net) {
  if (!bounds_valid(net)) return std::nullopt;
  Reduction r = reduce(net);
  if (r.solver.run(r.super_source, r.super_sink) != r.demand) return std::nullopt;
  return collect(net, r);
}

std::optional<ArcFlow> solve_min_flow(const FlowNetwork& net) {
  if (!bounds_valid(net)) return std::nullopt;
  Reduction r = reduce(net);
  if (r.solver.run(r.super_source, r.super_sink) != r.demand) return std::nullopt;
  // Saturated super arcs cannot be traversed again (the super source only has
  // residual arcs pointing into it, the super sink only out of it), so the
  // return push respects every lower bound.
  r.solver.freeze(r.closure);
  r.solver.run(net.t_out(), net.s_in());
  return collect(net, r);
}

std::int64_t flow_value(const FlowNetwork& net, const ArcFlow& flow) {
  std::int64_t value = 0;
  for (std::size_t i = 0; i < net.arcs.size(); ++i) {
    if (net.arcs[i].from == net.s_in()) value += flow[i];
    if (net.arcs[i].to == net.s_in()) value -= flow[i];
  }
  return value;
}

}  // namespace knitgraph
