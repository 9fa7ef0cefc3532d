#include "knitgraph/layout.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace knitgraph {

namespace {

using i64 = std::int64_t;
__extension__ typedef __int128 i128;

constexpr double kScale = 1e6;

struct Vec {
  i64 x = 0;
  i64 y = 0;
};

i128 cross(Vec a, Vec b) { return static_cast<i128>(a.x) * b.y - static_cast<i128>(a.y) * b.x; }

int sign(i128 v) { return (v > 0) - (v < 0); }

// Layout snapped to an integer grid. On a cylinder x lives in [0, period).
class Grid {
 public:
  Grid(const NaturalLayout& layout, std::size_t n) {
    if (layout.points.size() < n)
      throw KnitError(ErrorKind::InvalidArgument, "layout has " + std::to_string(layout.points.size()) +
                                                      " points for " + std::to_string(n) + " vertices");
    if (layout.period) {
      if (!(*layout.period > 0)) throw KnitError(ErrorKind::InvalidArgument, "layout period must be positive");
      period_ = std::llround(*layout.period * kScale);
    }
    pts_.reserve(n);
    for (std::size_t v = 0; v < n; ++v) {
      i64 x = std::llround(layout.points[v].col * kScale);
      if (period_) x = ((x % *period_) + *period_) % *period_;
      pts_.push_back({x, static_cast<i64>(layout.points[v].row) * static_cast<i64>(kScale)});
    }
  }

  Vec at(VertexId v) const { return pts_[v]; }
  std::optional<i64> period() const { return period_; }

  // Vector from u to v, the short way around on a cylinder.
  Vec delta(VertexId u, VertexId v) const {
    i64 dx = pts_[v].x - pts_[u].x;
    if (period_) {
      const i64 p = *period_;
      dx = ((dx % p) + p) % p;
      if (2 * dx > p) dx -= p;
    }
    return {dx, pts_[v].y - pts_[u].y};
  }

 private:
  std::vector<Vec> pts_;
  std::optional<i64> period_;
};

std::string point_str(Vec p) {
  return "(" + std::to_string(static_cast<double>(p.y) / kScale) + ", " +
         std::to_string(static_cast<double>(p.x) / kScale) + ")";
}

bool on_segment(Vec a, Vec b, Vec p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

enum class Touch { None, Cross, Degenerate };

Touch segment_touch(Vec a, Vec b, Vec c, Vec d, Vec* where) {
  if (std::max(a.x, b.x) < std::min(c.x, d.x) || std::max(c.x, d.x) < std::min(a.x, b.x) ||
      std::max(a.y, b.y) < std::min(c.y, d.y) || std::max(c.y, d.y) < std::min(a.y, b.y))
    return Touch::None;
  const Vec ab{b.x - a.x, b.y - a.y};
  const Vec cd{d.x - c.x, d.y - c.y};
  const int o1 = sign(cross(ab, {c.x - a.x, c.y - a.y}));
  const int o2 = sign(cross(ab, {d.x - a.x, d.y - a.y}));
  const int o3 = sign(cross(cd, {a.x - c.x, a.y - c.y}));
  const int o4 = sign(cross(cd, {b.x - c.x, b.y - c.y}));
  if (o1 * o2 < 0 && o3 * o4 < 0) return Touch::Cross;
  auto touching = [&](int o, Vec s, Vec t, Vec p) {
    if (o == 0 && on_segment(s, t, p)) {
      *where = p;
      return true;
    }
    return false;
  };
  if (touching(o1, a, b, c) || touching(o2, a, b, d) || touching(o3, c, d, a) || touching(o4, c, d, b))
    return Touch::Degenerate;
  return Touch::None;
}

bool is_sequential(EdgeColor c) { return c == EdgeColor::Blue || c == EdgeColor::Purple; }
bool is_loop(EdgeColor c) { return c == EdgeColor::Red || c == EdgeColor::Purple; }

}  // namespace

bool is_planar(const KnittingGraph& kg) {
  const std::size_t n = kg.n;
  const std::size_t m = kg.edges.size();
  if (n >= 3 && m > 3 * n - 6) return false;
  if (n < 5) return true;
  using G = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  G bg(n);
  for (const auto& [u, v] : kg.edges) boost::add_edge(u, v, bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

std::vector<std::size_t> CrossingGraph::degrees() const {
  std::vector<std::size_t> deg(edge_count, 0);
  for (const auto& [a, b] : links) {
    ++deg[a];
    ++deg[b];
  }
  return deg;
}

CrossingGraph crossing_graph(const DirectedKnitGraph& g, const NaturalLayout& layout) {
  const Grid grid(layout, g.size());
  {
    std::map<std::pair<i64, i64>, VertexId> seen;
    for (VertexId v = 0; v < g.size(); ++v) {
      const Vec p = grid.at(v);
      auto [it, fresh] = seen.emplace(std::pair{p.x, p.y}, v);
      if (!fresh)
        throw KnitError(ErrorKind::DegenerateLayout, "vertices " + std::to_string(it->second) + " and " +
                                                         std::to_string(v) + " share point " + point_str(p));
    }
  }

  struct Segment {
    Vec a, b;
  };
  std::vector<Segment> segs;
  segs.reserve(g.edges().size());
  for (const Edge& e : g.edges()) {
    const Vec a = grid.at(e.src);
    const Vec d = grid.delta(e.src, e.dst);
    segs.push_back({a, {a.x + d.x, a.y + d.y}});
  }

  std::vector<i64> shifts{0};
  if (auto p = grid.period()) shifts = {-2 * *p, -*p, 0, *p, 2 * *p};

  CrossingGraph cg;
  cg.edge_count = g.edges().size();
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const Edge& ei = g.edge(i);
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      const Edge& ej = g.edge(j);
      if (ei.src == ej.src || ei.src == ej.dst || ei.dst == ej.src || ei.dst == ej.dst) continue;
      bool crosses = false;
      for (i64 s : shifts) {
        Vec where;
        const Vec c{segs[j].a.x + s, segs[j].a.y};
        const Vec d{segs[j].b.x + s, segs[j].b.y};
        const Touch t = segment_touch(segs[i].a, segs[i].b, c, d, &where);
        if (t == Touch::Degenerate) {
          if (grid.period()) where.x = ((where.x % *grid.period()) + *grid.period()) % *grid.period();
          throw KnitError(ErrorKind::DegenerateLayout, "edges " + std::to_string(i) + " and " +
                                                           std::to_string(j) + " touch at " + point_str(where));
        }
        if (t == Touch::Cross) crosses = true;
      }
      if (crosses) cg.links.emplace_back(i, j);
    }
  }
  return cg;
}

std::size_t cable_width(const DirectedKnitGraph& g, const NaturalLayout& layout) {
  const CrossingGraph cg = crossing_graph(g, layout);
  std::vector<std::size_t> parent(cg.edge_count);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [a, b] : cg.links) {
    if (is_sequential(g.edge(a).color) && is_sequential(g.edge(b).color))
      throw KnitError(ErrorKind::BlueCrossing,
                      "sequential edges " + std::to_string(g.edge(a).src) + "->" + std::to_string(g.edge(a).dst) +
                          " and " + std::to_string(g.edge(b).src) + "->" + std::to_string(g.edge(b).dst) + " cross");
    parent[find(a)] = find(b);
  }
  std::map<std::size_t, std::size_t> links_per_component;
  std::size_t best = 0;
  for (const auto& link : cg.links) best = std::max(best, ++links_per_component[find(link.first)]);
  return best;
}

ComplexityClass classify_complexity(const DirectedKnitGraph& g, const NaturalLayout* layout, RedRule rule,
                                    bool multi_orientation) {
  ComplexityClass out;
  out.planar = is_planar(underlying_knitting_graph(g));
  if (layout) {
    const CrossingGraph cg = crossing_graph(g, *layout);
    out.layout_crossings = !cg.links.empty();
    for (const auto& [a, b] : cg.links) {
      for (std::size_t e : {a, b}) {
        out.crossings_on_red = out.crossings_on_red || is_loop(g.edge(e).color);
        out.crossings_on_blue = out.crossings_on_blue || is_sequential(g.edge(e).color);
      }
    }
  }
  if (multi_orientation) {
    out.level = ComplexityLevel::Class3;
  } else if (!out.planar || out.layout_crossings) {
    out.level = ComplexityLevel::Class2;
  } else {
    const ColoringReport probe = check_coloring(g, 0, rule, PurplePolicy::SequentialAndLoop);
    const bool ok = probe.blue_forms_paths &&
                    check_coloring(g, probe.path_count, rule, PurplePolicy::SequentialAndLoop).valid;
    out.level = ok ? ComplexityLevel::Class0 : ComplexityLevel::Class1;
  }
  return out;
}

RowCount count_rows(const DirectedKnitGraph& g, const ThreadCover& cover, const NaturalLayout& layout) {
  if (cover.k() != 1)
    throw KnitError(ErrorKind::NotSingleThread, "row counting needs one thread, got " + std::to_string(cover.k()));
  const auto& thread = cover.threads.front();
  if (thread.size() != g.size())
    throw KnitError(ErrorKind::InvalidArgument, "thread does not cover every vertex");
  if (!is_planar(underlying_knitting_graph(g)))
    throw KnitError(ErrorKind::NotPlanarLayout, "underlying knitting graph is not planar");

  const Grid grid(layout, g.size());
  std::vector<std::size_t> pos(g.size());
  for (std::size_t i = 0; i < thread.size(); ++i) pos[thread[i]] = i;
  auto is_thread_edge = [&](const Edge& e) {
    const std::size_t a = pos[e.src], b = pos[e.dst];
    return a + 1 == b || b + 1 == a;
  };

  RowCount rc;
  rc.row_of.assign(g.size(), 0);
  int side = 0;
  std::size_t row = 0;
  for (std::size_t i = 0; i < thread.size(); ++i) {
    const VertexId v = thread[i];
    const VertexId prev = i > 0 ? thread[i - 1] : v;
    const VertexId next = i + 1 < thread.size() ? thread[i + 1] : v;
    const Vec d1 = grid.delta(prev, v);
    const Vec d2 = grid.delta(v, next);
    const Vec dir{d1.x + d2.x, d1.y + d2.y};

    int here = 0;
    bool mixed = false;
    auto vote = [&](std::size_t ei) {
      const Edge& e = g.edge(ei);
      if (is_thread_edge(e) && e.color != EdgeColor::Purple) return;
      const int s = sign(cross(dir, grid.delta(e.src, e.dst)));
      if (s == 0) return;
      if (here != 0 && here != s) mixed = true;
      here = s;
    };
    for (std::size_t ei : g.out_edges(v)) vote(ei);
    for (std::size_t ei : g.in_edges(v)) vote(ei);

    if (here != 0 && !mixed) {
      if (side != 0 && here != side) ++row;
      side = here;
    }
    rc.row_of[v] = row;
  }
  rc.rows = thread.empty() ? 0 : row + 1;
  return rc;
}

SimplicityReport test_simple_knittable(const DirectedKnitGraph& g, const ThreadCover& cover) {
  if (cover.k() != 1)
    throw KnitError(ErrorKind::NotSingleThread, "simplicity test needs one thread, got " + std::to_string(cover.k()));
  const auto& thread = cover.threads.front();
  const std::size_t n = g.size();
  std::vector<std::size_t> pos(n);
  for (std::size_t i = 0; i < thread.size(); ++i) pos[thread[i]] = i;

  // Generation: one more than the deepest loop parent; stitches without a
  // loop parent stay in the generation of the previous stitch.
  std::vector<std::size_t> gen(n, 0);
  for (std::size_t i = 0; i < thread.size(); ++i) {
    const VertexId v = thread[i];
    bool has_parent = false;
    std::size_t depth = 0;
    for (std::size_t ei : g.in_edges(v)) {
      const Edge& e = g.edge(ei);
      if (!is_loop(e.color)) continue;
      has_parent = true;
      depth = std::max(depth, gen[e.src] + 1);
    }
    gen[v] = has_parent ? depth : (i > 0 ? gen[thread[i - 1]] : 0);
  }

  // Loops grouped by the generation they leave, children in thread order.
  std::map<std::size_t, std::vector<std::pair<std::size_t, std::size_t>>> bands;
  for (const Edge& e : g.edges())
    if (is_loop(e.color)) bands[gen[e.src]].emplace_back(pos[e.src], pos[e.dst]);

  SimplicityReport report;
  for (auto& [band, loops] : bands) {
    std::sort(loops.begin(), loops.end());
    for (std::size_t i = 0; i < loops.size(); ++i)
      for (std::size_t j = i + 1; j < loops.size(); ++j) {
        const auto [a, b] = loops[i];
        const auto [c, d] = loops[j];
        if (a < c && c < b && b < d) ++report.swaps;
      }
  }
  if (report.swaps != 0) return report;

  // Induced drawing: one row per generation, columns by thread order,
  // alternate rows read right to left.
  NaturalLayout layout;
  layout.points.resize(n);
  std::map<std::size_t, std::vector<VertexId>> rows;
  for (VertexId v : thread) rows[gen[v]].push_back(v);
  for (const auto& [r, members] : rows) {
    for (std::size_t c = 0; c < members.size(); ++c) {
      const std::size_t col = r % 2 == 0 ? c : members.size() - 1 - c;
      layout.points[members[c]] = {static_cast<int>(r), static_cast<double>(col)};
    }
  }
  report.layout = std::move(layout);
  return report;
}

}  // namespace knitgraph
