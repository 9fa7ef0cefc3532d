#include "knitgraph/thread_cover.hpp"

#include <algorithm>
#include <numeric>

namespace knitgraph {

namespace {

void require_dag(const DirectedKnitGraph& g) {
  if (!g.directed()) throw KnitError(ErrorKind::NotADag, "graph is undirected");
  try {
    topological_sort(g);
  } catch (const KnitError& e) {
    throw KnitError(ErrorKind::NotADag, e.what());
  }
}

void reject_purple(const DirectedKnitGraph& g) {
  for (const Edge& e : g.edges())
    if (e.color == EdgeColor::Purple)
      throw KnitError(ErrorKind::PurplePresent,
                      "edge (" + std::to_string(e.src) + "," + std::to_string(e.dst) + ")");
}

}  // namespace

std::optional<std::vector<VertexId>> has_hamiltonian_path_dag(const DirectedKnitGraph& g) {
  if (!g.directed()) throw KnitError(ErrorKind::NotADag, "graph is undirected");
  std::vector<VertexId> order;
  try {
    order = topological_sort(g);
  } catch (const KnitError& e) {
    throw KnitError(ErrorKind::NotADag, e.what());
  }
  for (std::size_t i = 1; i < order.size(); ++i) {
    const auto& out = g.out_edges(order[i - 1]);
    if (std::none_of(out.begin(), out.end(), [&](std::size_t e) { return g.edge(e).dst == order[i]; }))
      return std::nullopt;
  }
  return order;
}

FlowNetwork build_flow_network(const DirectedKnitGraph& g, std::size_t k, RedRule rule) {
  reject_purple(g);
  const std::size_t n = g.size();
  std::vector<RoleSet> roles(n);
  for (VertexId v = 0; v < n; ++v) {
    roles[v] = classify_vertex(g.indeg(v), g.outdeg(v), rule);
    if (roles[v].empty())
      throw KnitError(ErrorKind::InfeasibleVertex, "vertex " + std::to_string(v) + " (indeg " +
                                                       std::to_string(g.indeg(v)) + ", outdeg " +
                                                       std::to_string(g.outdeg(v)) + ")");
    // A vertex able to start and end threads must also be able to sit inside
    // one, or the split arc would let it pass flow through without M.
    if (roles[v].has(RoleSet::S) && roles[v].has(RoleSet::T) && !roles[v].has(RoleSet::M))
      throw std::logic_error("role set S,T without M cannot be modelled");
  }

  FlowNetwork net;
  net.vertex_count = n;
  net.arcs.reserve(3 * n + g.edges().size() + 2);
  for (std::size_t v = 0; v < n; ++v)
    net.arcs.push_back({FlowNetwork::in_node(v), FlowNetwork::out_node(v), 1, 1, ArcKind::Split, v});
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const Edge& e = g.edge(i);
    const bool leaves = roles[e.src].has(RoleSet::S) || roles[e.src].has(RoleSet::M);
    const bool enters = roles[e.dst].has(RoleSet::M) || roles[e.dst].has(RoleSet::T);
    if (leaves && enters)
      net.arcs.push_back({FlowNetwork::out_node(e.src), FlowNetwork::in_node(e.dst), 0, 1, ArcKind::Original, i});
  }
  for (std::size_t v = 0; v < n; ++v)
    if (roles[v].has(RoleSet::S)) net.arcs.push_back({net.s_out(), FlowNetwork::in_node(v), 0, 1, ArcKind::Source, v});
  for (std::size_t v = 0; v < n; ++v)
    if (roles[v].has(RoleSet::T)) net.arcs.push_back({FlowNetwork::out_node(v), net.t_in(), 0, 1, ArcKind::Sink, v});
  const auto kk = static_cast<std::int64_t>(k);
  net.arcs.push_back({net.s_in(), net.s_out(), kk, kk, ArcKind::Super, 0});
  net.arcs.push_back({net.t_in(), net.t_out(), kk, kk, ArcKind::Super, 0});
  return net;
}

ThreadCover extract_threads(const FlowNetwork& net, const ArcFlow& flow) {
  const std::size_t n = net.vertex_count;
  std::vector<long long> next(n, -1);
  std::vector<std::size_t> starts;
  for (std::size_t i = 0; i < net.arcs.size(); ++i) {
    if (flow[i] <= 0) continue;
    const FlowArc& a = net.arcs[i];
    if (a.kind == ArcKind::Original) next[a.from / 2] = static_cast<long long>(a.to / 2);
    if (a.kind == ArcKind::Source) starts.push_back(a.origin);
  }
  ThreadCover cover;
  for (std::size_t s : starts) {
    auto& thread = cover.threads.emplace_back();
    for (long long v = static_cast<long long>(s); v >= 0 && thread.size() <= n; v = next[v])
      thread.push_back(static_cast<VertexId>(v));
  }
  return cover;
}

namespace {

DirectedKnitGraph color_by_cover(const DirectedKnitGraph& g, const ThreadCover& cover) {
  std::vector<long long> next(g.size(), -1);
  for (const auto& thread : cover.threads)
    for (std::size_t i = 1; i < thread.size(); ++i) next[thread[i - 1]] = thread[i];
  return g.recolored([&](std::size_t i) {
    const Edge& e = g.edge(i);
    return next[e.src] == static_cast<long long>(e.dst) ? EdgeColor::Blue : EdgeColor::Red;
  });
}

}  // namespace

std::optional<KnitWitness> decide_k_knittable(const DirectedKnitGraph& g, std::size_t k, RedRule rule) {
  require_dag(g);
  reject_purple(g);
  if (k > g.size()) return std::nullopt;
  for (VertexId v = 0; v < g.size(); ++v)
    if (classify_vertex(g.indeg(v), g.outdeg(v), rule).empty()) return std::nullopt;

  const FlowNetwork net = build_flow_network(g, k, rule);
  const auto flow = solve_flow_with_bounds(net);
  if (!flow) return std::nullopt;
  KnitWitness witness;
  witness.cover = extract_threads(net, *flow);
  witness.colored = color_by_cover(g, witness.cover);
  return witness;
}

std::vector<std::size_t> feasible_thread_counts(const DirectedKnitGraph& g, RedRule rule) {
  std::vector<std::size_t> ks;
  for (std::size_t k = 1; k <= g.size(); ++k)
    if (decide_k_knittable(g, k, rule)) ks.push_back(k);
  return ks;
}

PathCover minimum_path_cover(const DirectedKnitGraph& g) {
  require_dag(g);
  const auto plain = g.recolored([](std::size_t) { return EdgeColor::Uncolored; });
  FlowNetwork net = build_flow_network(plain, 0, RedRule::Unrestricted);
  for (FlowArc& a : net.arcs) {
    if (a.kind == ArcKind::Super) {
      a.lower = 0;
      a.upper = static_cast<std::int64_t>(g.size());
    }
  }
  const auto flow = solve_min_flow(net);
  if (!flow) throw std::logic_error("path cover network must be feasible");
  PathCover pc;
  pc.cover = extract_threads(net, *flow);
  pc.k = pc.cover.k();
  return pc;
}

namespace {

// Depth-first enumeration of successor assignments (each vertex picks at most
// one successor, each vertex is picked at most once) with exactly n - k picks.
class PathSystemSearch {
 public:
  PathSystemSearch(const DirectedKnitGraph& g, std::size_t k, RedRule rule)
      : g_(g), k_(k), rule_(rule), next_(g.size(), -1), has_prev_(g.size(), false) {
    const std::size_t n = g.size();
    candidates_.resize(n);
    for (VertexId v = 0; v < n; ++v) {
      for (std::size_t e : g.out_edges(v)) candidates_[v].push_back(g.edge(e).dst);
      if (!g.directed())
        for (std::size_t e : g.in_edges(v)) candidates_[v].push_back(g.edge(e).src);
      std::sort(candidates_[v].begin(), candidates_[v].end());
    }
  }

  std::optional<KnitWitness> run() {
    if (k_ > g_.size() || (k_ == 0 && g_.size() > 0)) return std::nullopt;
    if (recurse(0, 0)) return result_;
    return std::nullopt;
  }

 private:
  bool recurse(VertexId v, std::size_t picks) {
    const std::size_t n = g_.size();
    const std::size_t target = n - k_;
    if (picks > target || picks + (n - v) < target) return false;
    if (v == n) return evaluate();
    for (VertexId w : candidates_[v]) {
      if (has_prev_[w] || closes_cycle(v, w)) continue;
      next_[v] = static_cast<long long>(w);
      has_prev_[w] = true;
      if (recurse(v + 1, picks + 1)) return true;
      has_prev_[w] = false;
      next_[v] = -1;
    }
    return recurse(v + 1, picks);
  }

  bool closes_cycle(VertexId from, VertexId to) const {
    for (long long u = to; u >= 0; u = next_[u])
      if (u == from) return true;
    return false;
  }

  ThreadCover threads() const {
    ThreadCover cover;
    for (VertexId v = 0; v < g_.size(); ++v) {
      if (has_prev_[v]) continue;
      auto& t = cover.threads.emplace_back();
      for (long long u = v; u >= 0; u = next_[u]) t.push_back(static_cast<VertexId>(u));
    }
    return cover;
  }

  bool evaluate() {
    ThreadCover cover = threads();
    if (g_.directed()) return accept(g_, std::move(cover));

    // Undirected: orient along every thread order.
    std::vector<std::size_t> order(cover.k());
    std::iota(order.begin(), order.end(), 0);
    do {
      std::vector<std::size_t> position(g_.size());
      std::size_t pos = 0;
      ThreadCover ordered;
      for (std::size_t t : order) {
        ordered.threads.push_back(cover.threads[t]);
        for (VertexId u : cover.threads[t]) position[u] = pos++;
      }
      std::vector<Edge> edges;
      edges.reserve(g_.edges().size());
      for (const Edge& e : g_.edges()) {
        Edge oriented = e;
        if (position[e.src] > position[e.dst]) std::swap(oriented.src, oriented.dst);
        edges.push_back(oriented);
      }
      if (accept(DirectedKnitGraph::build(g_.size(), std::move(edges), true), std::move(ordered))) return true;
    } while (std::next_permutation(order.begin(), order.end()));
    return false;
  }

  bool accept(const DirectedKnitGraph& oriented, ThreadCover cover) {
    auto colored = oriented.recolored([&](std::size_t i) {
      const Edge& e = oriented.edge(i);
      return next_[e.src] == static_cast<long long>(e.dst) ? EdgeColor::Blue : EdgeColor::Red;
    });
    if (!check_coloring(colored, k_, rule_).valid) return false;
    result_ = KnitWitness{std::move(colored), std::move(cover)};
    return true;
  }

  const DirectedKnitGraph& g_;
  std::size_t k_;
  RedRule rule_;
  std::vector<std::vector<VertexId>> candidates_;
  std::vector<long long> next_;
  std::vector<bool> has_prev_;
  KnitWitness result_;
};

}  // namespace

std::optional<KnitWitness> brute_force_knittable(const DirectedKnitGraph& g, std::size_t k, RedRule rule,
                                                 std::size_t cap) {
  if (g.size() > cap)
    throw KnitError(ErrorKind::TooLarge, "n=" + std::to_string(g.size()) + " exceeds cap " + std::to_string(cap));
  return PathSystemSearch(g, k, rule).run();
}

}  // namespace knitgraph
