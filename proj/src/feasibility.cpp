#include "knitgraph/feasibility.hpp"

#include <sstream>

namespace knitgraph {

std::string_view to_string(RedRule rule) {
  switch (rule) {
    case RedRule::Strict: return "strict";
    case RedRule::Extended: return "extended";
    case RedRule::Unrestricted: return "unrestricted";
  }
  return "strict";
}

RedRule parse_rule(std::string_view text) {
  if (text == "strict") return RedRule::Strict;
  if (text == "extended") return RedRule::Extended;
  if (text == "unrestricted") return RedRule::Unrestricted;
  throw KnitError(ErrorKind::InvalidArgument, "unknown rule \"" + std::string(text) + "\"");
}

std::string RoleSet::str() const {
  if (empty()) return "non-feasible";
  std::string out;
  for (auto [role, name] : {std::pair{S, "S"}, std::pair{M, "M"}, std::pair{T, "T"}}) {
    if (!has(role)) continue;
    if (!out.empty()) out += ", ";
    out += name;
  }
  return out;
}

bool red_config_allowed(std::size_t red_in, std::size_t red_out, RedRule rule) {
  switch (rule) {
    case RedRule::Strict:
      return (red_in == 0 && red_out == 1) || (red_in == 1 && red_out <= 2) ||
             (red_in == 2 && red_out == 1);
    case RedRule::Extended:
      return !(red_in == 0 && red_out == 0) && !(red_in >= 2 && red_out >= 2);
    case RedRule::Unrestricted:
      return true;
  }
  return false;
}

RoleSet classify_vertex(std::size_t indeg, std::size_t outdeg, RedRule rule) {
  if (rule == RedRule::Unrestricted) return RoleSet(RoleSet::S | RoleSet::M | RoleSet::T);
  std::uint8_t bits = 0;
  // A thread's first stitch must be passed through later, and its last
  // stitch must pass through an earlier one; otherwise the free end unravels.
  if (outdeg >= 2 && red_config_allowed(indeg, outdeg - 1, rule)) bits |= RoleSet::S;
  if (indeg >= 1 && outdeg >= 1 && red_config_allowed(indeg - 1, outdeg - 1, rule)) bits |= RoleSet::M;
  if (indeg >= 2 && red_config_allowed(indeg - 1, outdeg, rule)) bits |= RoleSet::T;
  return RoleSet(bits);
}

FeasibilityTable feasibility_table(RedRule rule) {
  FeasibilityTable table{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t o = 0; o < 4; ++o) table[i][o] = classify_vertex(i, o, rule);
  return table;
}

ColoringReport check_coloring(const DirectedKnitGraph& g, std::size_t k, RedRule rule,
                              PurplePolicy purple) {
  for (const Edge& e : g.edges()) {
    if (e.color == EdgeColor::Uncolored)
      throw KnitError(ErrorKind::UncoloredPresent,
                      "edge (" + std::to_string(e.src) + "," + std::to_string(e.dst) + ")");
    if (e.color == EdgeColor::Purple && purple == PurplePolicy::Reject)
      throw KnitError(ErrorKind::PurplePresent,
                      "edge (" + std::to_string(e.src) + "," + std::to_string(e.dst) + ")");
  }

  const std::size_t n = g.size();
  ColoringReport report;
  report.expected_k = k;

  std::vector<std::size_t> red_in(n, 0), red_out(n, 0);
  std::vector<int> next(n, -1), prev(n, -1);
  bool structure_ok = true;
  for (const Edge& e : g.edges()) {
    const bool sequential = e.color == EdgeColor::Blue || e.color == EdgeColor::Purple;
    const bool loop = e.color == EdgeColor::Red || e.color == EdgeColor::Purple;
    if (loop) {
      ++red_out[e.src];
      ++red_in[e.dst];
    }
    if (!sequential) continue;
    if (next[e.src] >= 0 || prev[e.dst] >= 0) {
      structure_ok = false;
      report.problems.push_back("vertex " + std::to_string(next[e.src] >= 0 ? e.src : e.dst) +
                                " has two sequential edges on one side");
      continue;
    }
    next[e.src] = static_cast<int>(e.dst);
    prev[e.dst] = static_cast<int>(e.src);
  }

  // Walk the blue paths from their starts; anything unvisited sits on a cycle.
  std::vector<bool> visited(n, false);
  if (structure_ok) {
    for (VertexId v = 0; v < n; ++v) {
      if (prev[v] >= 0) continue;
      auto& thread = report.threads.threads.emplace_back();
      for (int u = static_cast<int>(v); u >= 0; u = next[u]) {
        visited[u] = true;
        thread.push_back(static_cast<VertexId>(u));
      }
    }
    for (VertexId v = 0; v < n; ++v) {
      if (!visited[v]) {
        structure_ok = false;
        report.problems.push_back("sequential edges form a cycle through vertex " + std::to_string(v));
        break;
      }
    }
  }
  report.blue_forms_paths = structure_ok;
  if (!structure_ok) report.threads = {};
  report.path_count = report.threads.k();
  if (structure_ok && report.path_count != k)
    report.problems.push_back("blue edges form " + std::to_string(report.path_count) + " paths, expected " +
                              std::to_string(k));

  bool roles_ok = true;
  report.vertices.reserve(n);
  for (VertexId v = 0; v < n; ++v) {
    VertexVerdict verdict;
    verdict.vertex = v;
    verdict.red_in = red_in[v];
    verdict.red_out = red_out[v];
    const bool has_prev = prev[v] >= 0, has_next = next[v] >= 0;
    verdict.role = has_prev ? (has_next ? ThreadRole::Middle : ThreadRole::End)
                            : (has_next ? ThreadRole::Start : ThreadRole::Singleton);
    // Effective degrees: a purple edge counts once as thread, once as loop.
    const RoleSet roles = classify_vertex(red_in[v] + (has_prev ? 1 : 0), red_out[v] + (has_next ? 1 : 0), rule);
    switch (verdict.role) {
      case ThreadRole::Start: verdict.ok = roles.has(RoleSet::S); break;
      case ThreadRole::Middle: verdict.ok = roles.has(RoleSet::M); break;
      case ThreadRole::End: verdict.ok = roles.has(RoleSet::T); break;
      case ThreadRole::Singleton: verdict.ok = roles.has(RoleSet::S) && roles.has(RoleSet::T); break;
    }
    if (!verdict.ok) {
      roles_ok = false;
      std::ostringstream msg;
      msg << "vertex " << v << " red config (" << red_in[v] << "," << red_out[v] << ") not admissible for its role";
      report.problems.push_back(msg.str());
    }
    report.vertices.push_back(verdict);
  }
  report.valid = structure_ok && report.path_count == k && roles_ok;
  return report;
}

}  // namespace knitgraph
