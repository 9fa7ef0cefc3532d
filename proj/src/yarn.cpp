#include "knitgraph/yarn.hpp"

#include <algorithm>
#include <numeric>

namespace knitgraph {

namespace {

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

// Hierholzer over a fixed arc subset. Out-arcs of each vertex are ordered by
// (target, arc index); the walk always takes the first unused one.
class Hierholzer {
 public:
  Hierholzer(const YarnGraph& y, const std::vector<std::size_t>& arc_ids) : y_(y), out_(y.n), cursor_(y.n, 0) {
    for (std::size_t id : arc_ids) out_[y.arcs[id].src].push_back(id);
    for (auto& list : out_)
      std::sort(list.begin(), list.end(), [&](std::size_t a, std::size_t b) {
        return std::pair(y.arcs[a].dst, a) < std::pair(y.arcs[b].dst, b);
      });
  }

  std::vector<std::size_t> circuit_from(VertexId start) {
    std::vector<std::pair<VertexId, long long>> stack{{start, -1}};
    std::vector<std::size_t> reversed;
    while (!stack.empty()) {
      const VertexId v = stack.back().first;
      if (cursor_[v] < out_[v].size()) {
        const std::size_t arc = out_[v][cursor_[v]++];
        stack.emplace_back(y_.arcs[arc].dst, static_cast<long long>(arc));
      } else {
        if (stack.back().second >= 0) reversed.push_back(static_cast<std::size_t>(stack.back().second));
        stack.pop_back();
      }
    }
    std::reverse(reversed.begin(), reversed.end());
    return reversed;
  }

 private:
  const YarnGraph& y_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::size_t> cursor_;
};

std::vector<long long> balance_of(const YarnGraph& y, const std::vector<std::size_t>& arc_ids) {
  std::vector<long long> balance(y.n, 0);
  for (std::size_t id : arc_ids) {
    ++balance[y.arcs[id].src];
    --balance[y.arcs[id].dst];
  }
  return balance;
}

}  // namespace

std::vector<std::vector<VertexId>> arc_components(const YarnGraph& y) {
  DisjointSets sets(y.n);
  std::vector<bool> touched(y.n, false);
  for (const Arc& a : y.arcs) {
    sets.unite(a.src, a.dst);
    touched[a.src] = touched[a.dst] = true;
  }
  std::vector<std::vector<VertexId>> comps;
  std::vector<long long> slot(y.n, -1);
  for (VertexId v = 0; v < y.n; ++v) {
    if (!touched[v]) continue;
    const std::size_t root = sets.find(v);
    if (slot[root] < 0) {
      slot[root] = static_cast<long long>(comps.size());
      comps.emplace_back();
    }
    comps[slot[root]].push_back(v);
  }
  return comps;
}

Trail eulerian_path(const YarnGraph& y, const std::vector<VertexId>& component) {
  std::vector<bool> member(y.n, component.empty());
  for (VertexId v : component) {
    if (v >= y.n) throw KnitError(ErrorKind::IndexOutOfRange, "component vertex " + std::to_string(v));
    member[v] = true;
  }
  std::vector<std::size_t> arc_ids;
  for (std::size_t i = 0; i < y.arcs.size(); ++i)
    if (member[y.arcs[i].src] && member[y.arcs[i].dst]) arc_ids.push_back(i);
  if (arc_ids.empty()) return Trail{};

  DisjointSets sets(y.n);
  for (std::size_t id : arc_ids) sets.unite(y.arcs[id].src, y.arcs[id].dst);
  const std::size_t root = sets.find(y.arcs[arc_ids.front()].src);
  for (std::size_t id : arc_ids)
    if (sets.find(y.arcs[id].src) != root)
      throw KnitError(ErrorKind::NoEulerianPath, "disconnected: arc " + std::to_string(id) +
                                                     " lies in another component");

  const auto balance = balance_of(y, arc_ids);
  std::vector<VertexId> surplus, deficit, bad;
  for (VertexId v = 0; v < y.n; ++v) {
    if (balance[v] == 1) surplus.push_back(v);
    else if (balance[v] == -1) deficit.push_back(v);
    else if (balance[v] != 0) bad.push_back(v);
  }
  if (!bad.empty() || surplus.size() > 1 || deficit.size() > 1 || surplus.size() != deficit.size()) {
    std::string msg = "imbalanced vertices:";
    for (VertexId v = 0; v < y.n; ++v)
      if (balance[v] != 0) msg += " " + std::to_string(v) + "(" + std::to_string(balance[v]) + ")";
    throw KnitError(ErrorKind::NoEulerianPath, msg);
  }

  VertexId start = surplus.empty() ? y.arcs[arc_ids.front()].src : surplus.front();
  if (surplus.empty())
    for (std::size_t id : arc_ids) start = std::min(start, y.arcs[id].src);
  Trail trail;
  trail.arcs = Hierholzer(y, arc_ids).circuit_from(start);
  trail.closed = surplus.empty();
  return trail;
}

YarnCount minimum_yarns(const YarnGraph& y) {
  YarnCount result;
  std::vector<std::size_t> all(y.arcs.size());
  std::iota(all.begin(), all.end(), 0);
  const auto balance = balance_of(y, all);
  for (VertexId v = 0; v < y.n; ++v)
    if (balance[v] != 0) result.imbalances.emplace_back(v, balance[v]);

  // Virtual arcs from every deficit back to a surplus balance the component;
  // one Euler circuit then splits at the virtual arcs into `excess` trails.
  for (const auto& comp : arc_components(y)) {
    std::vector<bool> member(y.n, false);
    for (VertexId v : comp) member[v] = true;
    YarnGraph work{y.n, {}, std::nullopt, {}};
    std::vector<std::size_t> original;
    for (std::size_t i = 0; i < y.arcs.size(); ++i) {
      if (!member[y.arcs[i].src]) continue;
      work.arcs.push_back(y.arcs[i]);
      original.push_back(i);
    }
    const std::size_t real = work.arcs.size();
    std::vector<VertexId> surplus_units, deficit_units;
    for (VertexId v : comp) {
      for (long long i = 0; i < balance[v]; ++i) surplus_units.push_back(v);
      for (long long i = 0; i < -balance[v]; ++i) deficit_units.push_back(v);
    }
    for (std::size_t i = 0; i < surplus_units.size(); ++i) work.arcs.push_back({deficit_units[i], surplus_units[i]});

    std::vector<std::size_t> ids(work.arcs.size());
    std::iota(ids.begin(), ids.end(), 0);
    if (surplus_units.empty()) {
      Trail t;
      t.arcs = Hierholzer(work, ids).circuit_from(comp.front());
      for (auto& a : t.arcs) a = original[a];
      t.closed = true;
      result.decomposition.trails.push_back(std::move(t));
      ++result.k;
      continue;
    }
    // Start on the first virtual arc's tail so the circuit begins with it.
    Hierholzer walker(work, ids);
    auto circuit = walker.circuit_from(deficit_units.front());
    // Rotate so that the circuit starts right after a virtual arc.
    auto first_virtual = std::find_if(circuit.begin(), circuit.end(), [&](std::size_t a) { return a >= real; });
    std::rotate(circuit.begin(), first_virtual + 1, circuit.end());
    Trail current;
    for (std::size_t a : circuit) {
      if (a >= real) {
        result.decomposition.trails.push_back(std::move(current));
        current = Trail{};
        ++result.k;
      } else {
        current.arcs.push_back(original[a]);
      }
    }
  }
  return result;
}

YarnCheckReport is_yarn_graph_of_k_knittable(const YarnGraph& y, std::size_t k, RedRule rule) {
  YarnCheckReport report;
  report.minimum_k = minimum_yarns(y).k;
  if (report.minimum_k > k)
    report.problems.push_back("needs at least " + std::to_string(report.minimum_k) + " yarns");
  try {
    report.reduced = reduce_yarn_to_directed(y);
  } catch (const KnitError& e) {
    report.problems.push_back(e.what());
    return report;
  }
  // The multiplicity-1 strands are the threads; they must cover V in at most
  // k paths with admissible loops everywhere.
  std::size_t threads = 0;
  {
    std::vector<bool> has_prev(y.n, false);
    for (const Edge& e : report.reduced->edges())
      if (e.color != EdgeColor::Red) has_prev[e.dst] = true;
    threads = static_cast<std::size_t>(std::count(has_prev.begin(), has_prev.end(), false));
  }
  if (threads > k) report.problems.push_back("sequential strands form " + std::to_string(threads) + " threads");
  const auto coloring = check_coloring(*report.reduced, threads, rule, PurplePolicy::SequentialAndLoop);
  for (const auto& p : coloring.problems) report.problems.push_back(p);
  report.ok = report.minimum_k <= k && threads <= k && coloring.valid;
  return report;
}

YarnGraph yarn_from_threads(const DirectedKnitGraph& g, const ThreadCover& cover) {
  std::vector<std::size_t> yarn_of(g.size(), 0);
  for (std::size_t t = 0; t < cover.threads.size(); ++t)
    for (VertexId v : cover.threads[t]) yarn_of[v] = t;
  YarnGraph y;
  y.n = g.size();
  y.yarn_count_hint = cover.k() > 0 ? std::optional<std::size_t>(cover.k()) : std::nullopt;
  for (const Edge& e : g.edges()) {
    const std::size_t yarn = yarn_of[e.dst];
    auto lay = [&](VertexId a, VertexId b) {
      y.arcs.push_back({a, b});
      y.arc_yarn.push_back(yarn);
    };
    switch (e.color) {
      case EdgeColor::Purple:
        lay(e.src, e.dst);
        [[fallthrough]];
      case EdgeColor::Red:
        lay(e.src, e.dst);
        lay(e.dst, e.src);
        break;
      default:
        lay(e.src, e.dst);
        break;
    }
  }
  return y;
}

YarnGraph yarn_subgraph(const YarnGraph& y, std::size_t yarn) {
  YarnGraph sub;
  sub.n = y.n;
  for (std::size_t i = 0; i < y.arcs.size(); ++i)
    if (i < y.arc_yarn.size() && y.arc_yarn[i] == yarn) sub.arcs.push_back(y.arcs[i]);
  return sub;
}

}  // namespace knitgraph
