#include "knitgraph/graph.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace knitgraph {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::CycleDetected: return "CycleDetected";
    case ErrorKind::NotADag: return "NotADag";
    case ErrorKind::MultiplicityTooHigh: return "MultiplicityTooHigh";
    case ErrorKind::InconsistentPair: return "InconsistentPair";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::PurplePresent: return "PurplePresent";
    case ErrorKind::UncoloredPresent: return "UncoloredPresent";
    case ErrorKind::InfeasibleVertex: return "InfeasibleVertex";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NoEulerianPath: return "NoEulerianPath";
    case ErrorKind::DegenerateLayout: return "DegenerateLayout";
    case ErrorKind::BlueCrossing: return "BlueCrossing";
    case ErrorKind::NotPlanarLayout: return "NotPlanarLayout";
    case ErrorKind::BadDims: return "BadDims";
    case ErrorKind::NotSingleThread: return "NotSingleThread";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

std::string_view to_string(EdgeColor color) {
  switch (color) {
    case EdgeColor::Blue: return "blue";
    case EdgeColor::Red: return "red";
    case EdgeColor::Purple: return "purple";
    case EdgeColor::Uncolored: return "uncolored";
  }
  return "uncolored";
}

namespace {

std::uint64_t pair_key(VertexId u, VertexId v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

}  // namespace

DirectedKnitGraph DirectedKnitGraph::build(std::size_t n, std::vector<Edge> edges, bool directed) {
  DirectedKnitGraph g;
  g.n_ = n;
  g.directed_ = directed;
  g.out_.assign(n, {});
  g.in_.assign(n, {});
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edges.size() * 2);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (e.src >= n || e.dst >= n) {
      std::ostringstream msg;
      msg << "edge " << i << " (" << e.src << "," << e.dst << ") with n=" << n;
      throw KnitError(ErrorKind::IndexOutOfRange, msg.str());
    }
    if (e.src == e.dst) throw KnitError(ErrorKind::SelfLoop, "vertex " + std::to_string(e.src));
    if (!seen.insert(pair_key(e.src, e.dst)).second) {
      throw KnitError(ErrorKind::DuplicateEdge,
                      "(" + std::to_string(e.src) + "," + std::to_string(e.dst) + ")");
    }
    g.out_[e.src].push_back(i);
    g.in_[e.dst].push_back(i);
  }
  g.edges_ = std::move(edges);
  return g;
}

std::optional<std::size_t> DirectedKnitGraph::find_edge(VertexId u, VertexId v) const {
  for (std::size_t i : out_[u])
    if (edges_[i].dst == v) return i;
  for (std::size_t i : in_[u])
    if (edges_[i].src == v) return i;
  return std::nullopt;
}

bool DirectedKnitGraph::has_color(EdgeColor c) const {
  return std::any_of(edges_.begin(), edges_.end(), [c](const Edge& e) { return e.color == c; });
}

YarnGraph YarnGraph::build(std::size_t n, std::vector<Arc> arcs,
                           std::optional<std::size_t> yarn_count_hint,
                           std::vector<std::size_t> arc_yarn) {
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const Arc& a = arcs[i];
    if (a.src >= n || a.dst >= n)
      throw KnitError(ErrorKind::IndexOutOfRange, "arc " + std::to_string(i));
    if (a.src == a.dst) throw KnitError(ErrorKind::SelfLoop, "vertex " + std::to_string(a.src));
  }
  if (!arc_yarn.empty() && arc_yarn.size() != arcs.size())
    throw KnitError(ErrorKind::InvalidArgument, "arc_yarn length differs from arc count");
  if (yarn_count_hint && *yarn_count_hint == 0)
    throw KnitError(ErrorKind::InvalidArgument, "yarn count hint must be positive");
  return YarnGraph{n, std::move(arcs), yarn_count_hint, std::move(arc_yarn)};
}

std::vector<VertexId> topological_sort(const DirectedKnitGraph& g) {
  const std::size_t n = g.size();
  std::vector<std::size_t> pending(n);
  std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> ready;
  for (VertexId v = 0; v < n; ++v) {
    pending[v] = g.indeg(v);
    if (pending[v] == 0) ready.push(v);
  }
  std::vector<VertexId> order;
  order.reserve(n);
  while (!ready.empty()) {
    VertexId v = ready.top();
    ready.pop();
    order.push_back(v);
    for (std::size_t e : g.out_edges(v)) {
      VertexId w = g.edge(e).dst;
      if (--pending[w] == 0) ready.push(w);
    }
  }
  if (order.size() == n) return order;

  // Every leftover vertex keeps an unprocessed predecessor; walking
  // predecessors backwards must revisit a vertex.
  VertexId start = 0;
  while (pending[start] == 0) ++start;
  std::vector<int> seen_at(n, -1);
  std::vector<VertexId> walk;
  VertexId v = start;
  while (seen_at[v] < 0) {
    seen_at[v] = static_cast<int>(walk.size());
    walk.push_back(v);
    for (std::size_t e : g.in_edges(v)) {
      VertexId u = g.edge(e).src;
      if (pending[u] > 0) {
        v = u;
        break;
      }
    }
  }
  std::vector<VertexId> cycle(walk.begin() + seen_at[v], walk.end());
  std::reverse(cycle.begin(), cycle.end());
  std::ostringstream msg;
  for (std::size_t i = 0; i < cycle.size(); ++i) msg << (i ? " -> " : "") << cycle[i];
  msg << " -> " << cycle.front();
  throw KnitError(ErrorKind::CycleDetected, msg.str());
}

bool is_dag(const DirectedKnitGraph& g) {
  if (!g.directed()) return false;
  std::vector<std::size_t> pending(g.size());
  std::vector<VertexId> stack;
  for (VertexId v = 0; v < g.size(); ++v)
    if ((pending[v] = g.indeg(v)) == 0) stack.push_back(v);
  std::size_t seen = 0;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    ++seen;
    for (std::size_t e : g.out_edges(v))
      if (--pending[g.edge(e).dst] == 0) stack.push_back(g.edge(e).dst);
  }
  return seen == g.size();
}

KnittingGraph underlying_knitting_graph(const DirectedKnitGraph& g) {
  KnittingGraph kg;
  kg.n = g.size();
  kg.edges.reserve(g.edges().size());
  for (const Edge& e : g.edges()) kg.edges.emplace_back(std::min(e.src, e.dst), std::max(e.src, e.dst));
  return kg;
}

DirectedKnitGraph reduce_yarn_to_directed(const YarnGraph& y,
                                          const std::vector<std::size_t>* yarn_order) {
  if (yarn_order && yarn_order->size() != y.n)
    throw KnitError(ErrorKind::InvalidArgument, "yarn order must rank every vertex");

  // Arcs grouped per unordered pair, in first-appearance order.
  std::unordered_map<std::uint64_t, std::size_t> slot;
  std::vector<std::vector<Arc>> groups;
  for (const Arc& a : y.arcs) {
    if (a.src >= y.n || a.dst >= y.n) throw KnitError(ErrorKind::IndexOutOfRange, "arc endpoint");
    if (a.src == a.dst) throw KnitError(ErrorKind::SelfLoop, "vertex " + std::to_string(a.src));
    auto [it, fresh] = slot.try_emplace(pair_key(a.src, a.dst), groups.size());
    if (fresh) groups.emplace_back();
    groups[it->second].push_back(a);
  }

  std::vector<Edge> edges;
  edges.reserve(groups.size());
  for (const auto& group : groups) {
    const Arc& first = group.front();
    const auto pair_name = "(" + std::to_string(std::min(first.src, first.dst)) + "," +
                           std::to_string(std::max(first.src, first.dst)) + ")";
    const std::size_t forward =
        std::count_if(group.begin(), group.end(), [&](const Arc& a) { return a.src == first.src; });
    const std::size_t backward = group.size() - forward;
    switch (group.size()) {
      case 1:
        edges.push_back({first.src, first.dst, EdgeColor::Blue});
        break;
      case 2: {
        if (backward != 1)
          throw KnitError(ErrorKind::InconsistentPair, pair_name + " has two arcs in one direction");
        Edge e{first.src, first.dst, EdgeColor::Red};
        if (yarn_order && (*yarn_order)[e.src] > (*yarn_order)[e.dst]) std::swap(e.src, e.dst);
        edges.push_back(e);
        break;
      }
      case 3: {
        if (backward == 0)
          throw KnitError(ErrorKind::InconsistentPair, pair_name + " has no returning strand");
        // The direction used twice is the sequential strand.
        Edge e{first.src, first.dst, EdgeColor::Purple};
        if (backward == 2) std::swap(e.src, e.dst);
        edges.push_back(e);
        break;
      }
      default:
        throw KnitError(ErrorKind::MultiplicityTooHigh,
                        pair_name + " carries " + std::to_string(group.size()) + " strands");
    }
  }
  return DirectedKnitGraph::build(y.n, std::move(edges), true);
}

}  // namespace knitgraph
