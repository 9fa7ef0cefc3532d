#include "knitgraph/patterns.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "knitgraph/yarn.hpp"

namespace knitgraph {

namespace {

std::size_t parents_needed(Stitch s) {
  switch (s) {
    case Stitch::Yo: return 0;
    case Stitch::K:
    case Stitch::Kfb: return 1;
    case Stitch::K2tog:
    case Stitch::C1b: return 2;
    case Stitch::K3tog: return 3;
  }
  return 1;
}

RedRule weakest_rule(const DirectedKnitGraph& g, std::size_t k) {
  for (RedRule r : {RedRule::Strict, RedRule::Extended})
    if (check_coloring(g, k, r, PurplePolicy::SequentialAndLoop).valid) return r;
  return RedRule::Unrestricted;
}

void finish(Fixture& f) {
  f.yarn = yarn_from_threads(f.graph, f.cover);
  f.rule = weakest_rule(f.graph, f.cover.k());
}

class PatternBuilder {
 public:
  VertexId add(double col, int row, const std::vector<VertexId>& parents) {
    const auto v = static_cast<VertexId>(points_.size());
    points_.push_back({row, col});
    bool merged = false;
    if (v > 0) {
      const VertexId pred = v - 1;
      merged = std::find(parents.begin(), parents.end(), pred) != parents.end();
      edges_.push_back({pred, v, merged ? EdgeColor::Purple : EdgeColor::Blue});
    }
    for (VertexId p : parents)
      if (!(merged && p == v - 1)) edges_.push_back({p, v, EdgeColor::Red});
    return v;
  }

  double col(VertexId v) const { return points_[v].col; }
  void set_col(VertexId v, double c) { points_[v].col = c; }

  Fixture take(std::string name) {
    Fixture f;
    f.name = std::move(name);
    const std::size_t n = points_.size();
    f.graph = build_directed_graph(n, std::move(edges_));
    std::vector<VertexId> thread(n);
    for (std::size_t i = 0; i < n; ++i) thread[i] = static_cast<VertexId>(i);
    f.cover.threads.push_back(std::move(thread));
    f.layout.points = std::move(points_);
    return f;
  }

 private:
  std::vector<LayoutPoint> points_;
  std::vector<Edge> edges_;
};

// Columns for yarn-overs, spread between their neighbours in the row.
void place_yarn_overs(PatternBuilder& b, const std::vector<VertexId>& row, const std::vector<bool>& is_yo,
                      double dir) {
  std::size_t i = 0;
  while (i < row.size()) {
    if (!is_yo[i]) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < row.size() && is_yo[j]) ++j;
    const std::size_t len = j - i;
    const bool has_left = i > 0, has_right = j < row.size();
    for (std::size_t t = 0; t < len; ++t) {
      double c;
      if (has_left && has_right) {
        const double l = b.col(row[i - 1]), r = b.col(row[j]);
        c = l + (r - l) * static_cast<double>(t + 1) / static_cast<double>(len + 1);
      } else if (has_left) {
        c = b.col(row[i - 1]) + dir * 0.5 * static_cast<double>(t + 1);
      } else if (has_right) {
        c = b.col(row[j]) - dir * 0.5 * static_cast<double>(len - t);
      } else {
        c = dir * static_cast<double>(t);
      }
      b.set_col(row[i + t], c);
    }
    i = j;
  }
}

void check_dims(std::size_t rows, std::size_t cols) {
  if (rows < 1 || cols < 2)
    throw KnitError(ErrorKind::BadDims, "need rows >= 1 and cols >= 2, got " + std::to_string(rows) + "x" +
                                            std::to_string(cols));
}

}  // namespace

std::string_view to_string(Stitch s) {
  switch (s) {
    case Stitch::K: return "k";
    case Stitch::Yo: return "yo";
    case Stitch::Kfb: return "kfb";
    case Stitch::K2tog: return "k2tog";
    case Stitch::K3tog: return "k3tog";
    case Stitch::C1b: return "c1b";
  }
  return "?";
}

Stitch parse_stitch(std::string_view name) {
  for (Stitch s : {Stitch::K, Stitch::Yo, Stitch::Kfb, Stitch::K2tog, Stitch::K3tog, Stitch::C1b})
    if (to_string(s) == name) return s;
  throw KnitError(ErrorKind::InvalidArgument, "unknown stitch '" + std::string(name) + "'");
}

Fixture gen_pattern(const PatternSpec& spec) {
  check_dims(spec.rows, spec.cols);
  std::map<std::pair<std::size_t, std::size_t>, Stitch> inserts;
  for (const StitchInsert& ins : spec.inserts) {
    if (ins.row == 0 || ins.row >= spec.rows)
      throw KnitError(ErrorKind::InvalidArgument, "insert row " + std::to_string(ins.row) + " outside 1.." +
                                                      std::to_string(spec.rows - 1));
    if (!inserts.emplace(std::pair{ins.row, ins.position}, ins.stitch).second)
      throw KnitError(ErrorKind::InvalidArgument, "two inserts at row " + std::to_string(ins.row) + " position " +
                                                      std::to_string(ins.position));
  }

  PatternBuilder b;
  std::vector<VertexId> prev;
  for (std::size_t c = 0; c < spec.cols; ++c) prev.push_back(b.add(static_cast<double>(c), 0, {}));

  bool has_cable = false;
  for (std::size_t r = 1; r < spec.rows; ++r) {
    const double dir = spec.round || r % 2 == 0 ? 1.0 : -1.0;
    std::vector<VertexId> parents = prev;
    if (!spec.round) std::reverse(parents.begin(), parents.end());

    std::vector<VertexId> row;
    std::vector<bool> is_yo;
    std::size_t used = 0;
    for (std::size_t pos = 0;; ++pos) {
      auto it = inserts.find({r, pos});
      if (it == inserts.end() && used == parents.size()) break;
      const Stitch s = it == inserts.end() ? Stitch::K : it->second;
      if (it != inserts.end()) inserts.erase(it);
      const std::size_t need = parents_needed(s);
      if (used + need > parents.size())
        throw KnitError(ErrorKind::InvalidArgument, std::string(to_string(s)) + " at row " + std::to_string(r) +
                                                        " position " + std::to_string(pos) +
                                                        " runs out of stitches");
      const std::vector<VertexId> take(parents.begin() + static_cast<std::ptrdiff_t>(used),
                                       parents.begin() + static_cast<std::ptrdiff_t>(used + need));
      used += need;
      const int row_no = static_cast<int>(r);
      switch (s) {
        case Stitch::Yo:
          row.push_back(b.add(std::numeric_limits<double>::quiet_NaN(), row_no, {}));
          break;
        case Stitch::K:
          row.push_back(b.add(b.col(take[0]), row_no, take));
          break;
        case Stitch::Kfb:
          row.push_back(b.add(b.col(take[0]) - 0.3 * dir, row_no, take));
          row.push_back(b.add(b.col(take[0]) + 0.3 * dir, row_no, take));
          break;
        case Stitch::K2tog:
        case Stitch::K3tog: {
          double sum = 0;
          for (VertexId p : take) sum += b.col(p);
          row.push_back(b.add(sum / static_cast<double>(take.size()), row_no, take));
          break;
        }
        case Stitch::C1b:
          has_cable = true;
          row.push_back(b.add(b.col(take[0]), row_no, {take[1]}));
          row.push_back(b.add(b.col(take[1]), row_no, {take[0]}));
          break;
      }
      is_yo.resize(row.size(), false);
      if (s == Stitch::Yo) is_yo.back() = true;
    }
    place_yarn_overs(b, row, is_yo, dir);
    prev = std::move(row);
  }
  if (!inserts.empty()) {
    const auto& [where, s] = *inserts.begin();
    throw KnitError(ErrorKind::InvalidArgument, std::string(to_string(s)) + " at row " +
                                                    std::to_string(where.first) + " position " +
                                                    std::to_string(where.second) + " lies past the row's end");
  }

  Fixture f = b.take(spec.round ? "round" : "flat");
  if (spec.round) f.layout.period = static_cast<double>(spec.cols);
  f.rows = spec.rows;
  f.expected_class = has_cable ? ComplexityLevel::Class2 : ComplexityLevel::Class0;
  finish(f);
  return f;
}

Fixture gen_stockinette(std::size_t rows, std::size_t cols, bool round) {
  Fixture f = gen_pattern({rows, cols, round, {}});
  f.name = round ? "stockinette-round" : "stockinette";
  return f;
}

Fixture gen_stitch_fixture(std::string_view name) {
  auto with_layout = [](Fixture f, std::string_view label, std::vector<LayoutPoint> pts) {
    f.name = std::string(label);
    if (!pts.empty()) f.layout.points = std::move(pts);
    return f;
  };
  if (name == "knit") return with_layout(gen_stockinette(3, 3, false), name, {});
  if (name == "yo")
    return with_layout(gen_pattern({3, 2, false, {{1, 1, Stitch::Yo}}}), name,
                       {{0, 0.65}, {0, 1.95}, {1, 2.6}, {1, 1.3}, {1, 0}, {2, 0}, {2, 1.3}, {2, 2.6}});
  if (name == "kfb")
    return with_layout(gen_pattern({3, 3, false, {{1, 1, Stitch::Kfb}}}), name,
                       {{0, 0},
                        {0, 1},
                        {0, 2},
                        {1, 2.6},
                        {1, 1.6},
                        {1, 0.6},
                        {1, -0.6},
                        {2, -0.6},
                        {2, 0.6},
                        {2, 1.6},
                        {2, 2.6}});
  if (name == "k2tog")
    return with_layout(gen_pattern({3, 4, false, {{2, 1, Stitch::K2tog}}}), name,
                       {{0, -0.6},
                        {0, 0.6},
                        {0, 1.6},
                        {0, 2.6},
                        {1, 2.6},
                        {1, 1.6},
                        {1, 0.6},
                        {1, -0.6},
                        {2, 0},
                        {2, 1},
                        {2, 2}});
  if (name == "c1b") return with_layout(gen_pattern({3, 4, false, {{2, 1, Stitch::C1b}}}), name, {});
  throw KnitError(ErrorKind::InvalidArgument, "unknown stitch fixture '" + std::string(name) +
                                                  "' (expected knit, yo, kfb, k2tog or c1b)");
}

Fixture gen_brioche_maximal(std::size_t cols) {
  if (cols < 4 || cols % 2 != 0)
    throw KnitError(ErrorKind::BadDims, "brioche needs an even column count >= 4, got " + std::to_string(cols));
  constexpr std::size_t rows = 3;
  auto id = [cols](std::size_t r, std::size_t c) { return static_cast<VertexId>(r * cols + c); };
  const std::size_t half = cols / 2;

  Fixture f;
  f.name = "brioche";
  for (std::size_t r = 0; r < rows; ++r) {
    if (r + 1 < rows) {
      std::vector<VertexId> t;
      for (std::size_t c = 0; c < cols; ++c) t.push_back(id(r, c));
      f.cover.threads.push_back(std::move(t));
    } else {
      std::vector<VertexId> left, right;
      for (std::size_t c = 0; c < cols; ++c) (c < half ? left : right).push_back(id(r, c));
      f.cover.threads.push_back(std::move(left));
      f.cover.threads.push_back(std::move(right));
    }
  }

  std::vector<Edge> edges;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c + 1 < cols; ++c) {
      const bool split = r + 1 == rows && c + 1 == half;
      edges.push_back({id(r, c), id(r, c + 1), split ? EdgeColor::Red : EdgeColor::Blue});
    }
    edges.push_back({id(r, 0), id(r, cols - 1), EdgeColor::Red});
  }
  for (std::size_t r = 0; r + 1 < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (c > 0) edges.push_back({id(r, c), id(r + 1, c - 1), EdgeColor::Red});
      edges.push_back({id(r, c), id(r + 1, c), EdgeColor::Red});
      if (c + 1 < cols) edges.push_back({id(r, c), id(r + 1, c + 1), EdgeColor::Red});
    }
  }
  f.graph = build_directed_graph(rows * cols, std::move(edges));

  f.layout.period = static_cast<double>(cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      f.layout.points.push_back({static_cast<int>(r), static_cast<double>(c)});
      f.labels.push_back((r + c) % 2 == 0 ? "a" : "b");
    }
  f.rows = rows;
  f.expected_class = ComplexityLevel::Class2;
  finish(f);
  return f;
}

std::string emit_instructions(const Fixture& fixture) {
  if (fixture.cover.k() != 1)
    throw KnitError(ErrorKind::NotSingleThread,
                    "instructions need a single thread, fixture has " + std::to_string(fixture.cover.k()));
  const DirectedKnitGraph& g = fixture.graph;
  const auto& thread = fixture.cover.threads.front();
  const RowCount rc = count_rows(g, fixture.cover, fixture.layout);

  std::vector<std::size_t> pos(g.size());
  for (std::size_t i = 0; i < thread.size(); ++i) pos[thread[i]] = i;
  auto loop_parents = [&](VertexId v) {
    std::vector<VertexId> ps;
    for (std::size_t ei : g.in_edges(v)) {
      const Edge& e = g.edge(ei);
      if (e.color == EdgeColor::Red || e.color == EdgeColor::Purple) ps.push_back(e.src);
    }
    return ps;
  };
  auto earlier_sibling = [&](VertexId parent, VertexId v) {
    for (std::size_t ei : g.out_edges(parent)) {
      const Edge& e = g.edge(ei);
      if ((e.color == EdgeColor::Red || e.color == EdgeColor::Purple) && e.dst != v && pos[e.dst] < pos[v])
        return true;
    }
    return false;
  };

  std::vector<std::vector<std::string>> rows(rc.rows);
  for (VertexId v : thread) {
    const auto ps = loop_parents(v);
    std::string token;
    if (ps.size() == 1 && earlier_sibling(ps[0], v)) {
      token = "kfb-second-leg";
    } else {
      switch (ps.size()) {
        case 0: token = "yo"; break;
        case 1: token = "k"; break;
        default: token = "k" + std::to_string(ps.size()) + "tog"; break;
      }
    }
    rows[rc.row_of[v]].push_back(std::move(token));
  }

  std::string out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    out += "row " + std::to_string(r + 1) + ":";
    for (const auto& t : rows[r]) out += " " + t;
    out += "\n";
  }
  return out;
}

GraphDocument to_document(const Fixture& fixture) {
  GraphDocument doc;
  doc.graph = fixture.graph;
  doc.layout = fixture.layout;
  doc.k = fixture.k();
  doc.threads = fixture.cover;
  doc.rule = std::string(to_string(fixture.rule));
  for (std::size_t v = 0; v < fixture.labels.size(); ++v) doc.labels[std::to_string(v)] = fixture.labels[v];
  return doc;
}

}  // namespace knitgraph
