#include "knitgraph/cli.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "knitgraph/feasibility.hpp"
#include "knitgraph/json_io.hpp"
#include "knitgraph/layout.hpp"
#include "knitgraph/patterns.hpp"
#include "knitgraph/thread_cover.hpp"
#include "knitgraph/yarn.hpp"

namespace knitgraph {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kInvalid = 2;

struct Options {
  std::string file;
  std::optional<std::size_t> k;
  std::string rule;
  std::size_t cap = kDefaultOracleCap;
  bool min = false;
  bool json = false;
  bool round = false;
  std::string pattern = "stockinette";
  std::size_t rows = 3;
  std::optional<std::size_t> cols;
  std::string to = "json";
  std::string output;
};

RedRule pick_rule(const Options& opt, const GraphDocument* doc) {
  if (!opt.rule.empty()) return parse_rule(opt.rule);
  if (doc && doc->rule) return parse_rule(*doc->rule);
  return RedRule::Strict;
}

DirectedKnitGraph directed_of(const GraphDocument& doc) {
  return doc.is_yarn() ? reduce_yarn_to_directed(doc.yarn()) : doc.directed();
}

// Threads stored in the document, else the blue/purple paths of the coloring.
ThreadCover threads_of(const GraphDocument& doc, const DirectedKnitGraph& g) {
  if (doc.threads) return *doc.threads;
  const ColoringReport report = check_coloring(g, 0, RedRule::Unrestricted, PurplePolicy::SequentialAndLoop);
  if (!report.blue_forms_paths)
    throw KnitError(ErrorKind::InvalidArgument, "no threads in the document and the blue edges do not form paths");
  return report.threads;
}

const NaturalLayout& layout_of(const GraphDocument& doc) {
  if (!doc.layout) throw KnitError(ErrorKind::InvalidArgument, "document has no layout block");
  return *doc.layout;
}

GraphDocument witness_document(const GraphDocument& input, const KnitWitness& w, std::size_t k, RedRule rule) {
  GraphDocument doc;
  doc.graph = w.colored;
  doc.layout = input.layout;
  doc.labels = input.labels;
  doc.k = k;
  doc.threads = w.cover;
  doc.rule = std::string(to_string(rule));
  return doc;
}

void write_text(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw KnitError(ErrorKind::InvalidArgument, "cannot write " + path);
  file << text;
}

std::string thread_text(const ThreadCover& cover) {
  std::ostringstream s;
  for (std::size_t t = 0; t < cover.threads.size(); ++t) {
    s << "thread " << t + 1 << ":";
    for (VertexId v : cover.threads[t]) s << ' ' << v;
    s << '\n';
  }
  return s.str();
}

std::string_view role_name(ThreadRole r) {
  switch (r) {
    case ThreadRole::Start: return "start";
    case ThreadRole::Middle: return "middle";
    case ThreadRole::End: return "end";
    case ThreadRole::Singleton: return "singleton";
  }
  return "?";
}

std::string_view level_name(ComplexityLevel level) {
  switch (level) {
    case ComplexityLevel::Class0: return "Class0";
    case ComplexityLevel::Class1: return "Class1";
    case ComplexityLevel::Class2: return "Class2";
    case ComplexityLevel::Class3: return "Class3";
  }
  return "?";
}

int cmd_validate(const Options& opt, std::ostream& out) {
  const GraphDocument doc = load_document(opt.file);
  const DirectedKnitGraph g = directed_of(doc);
  const RedRule rule = pick_rule(opt, &doc);
  std::size_t k = 0;
  if (opt.k) {
    k = *opt.k;
  } else if (doc.k) {
    k = *doc.k;
  } else {
    k = check_coloring(g, 0, rule, PurplePolicy::SequentialAndLoop).path_count;
  }
  const ColoringReport report = check_coloring(g, k, rule, PurplePolicy::SequentialAndLoop);
  if (opt.json) {
    ordered_json j;
    j["valid"] = report.valid;
    j["k"] = k;
    j["rule"] = to_string(rule);
    j["path_count"] = report.path_count;
    j["problems"] = report.problems;
    ordered_json verts = ordered_json::array();
    for (const VertexVerdict& v : report.vertices)
      verts.push_back({{"vertex", v.vertex},
                       {"role", role_name(v.role)},
                       {"red_in", v.red_in},
                       {"red_out", v.red_out},
                       {"ok", v.ok}});
    j["vertices"] = std::move(verts);
    out << j.dump(2) << '\n';
  } else {
    out << (report.valid ? "valid" : "invalid") << " (k=" << k << ", rule " << to_string(rule) << ")\n";
    for (const auto& p : report.problems) out << "  " << p << '\n';
  }
  return report.valid ? kYes : kNo;
}

int cmd_decide(const Options& opt, std::ostream& out) {
  const GraphDocument doc = load_document(opt.file);
  const DirectedKnitGraph g = directed_of(doc);
  const RedRule rule = pick_rule(opt, &doc);
  if (!opt.k) {
    const auto ks = feasible_thread_counts(g, rule);
    if (opt.json) {
      ordered_json j;
      j["rule"] = to_string(rule);
      j["feasible_k"] = ks;
      out << j.dump(2) << '\n';
    } else {
      out << "feasible k:";
      for (auto k : ks) out << ' ' << k;
      out << (ks.empty() ? " none\n" : "\n");
    }
    return ks.empty() ? kNo : kYes;
  }
  const auto witness = decide_k_knittable(g, *opt.k, rule);
  if (!witness) {
    if (opt.json) {
      ordered_json j;
      j["feasible"] = false;
      j["k"] = *opt.k;
      j["rule"] = to_string(rule);
      out << j.dump(2) << '\n';
    } else {
      out << "infeasible (k=" << *opt.k << ", rule " << to_string(rule) << ")\n";
    }
    return kNo;
  }
  write_text(serialize_json(witness_document(doc, *witness, *opt.k, rule)), opt.output, out);
  return kYes;
}

int cmd_oracle(const Options& opt, std::ostream& out) {
  const GraphDocument doc = load_document(opt.file);
  const DirectedKnitGraph g = directed_of(doc);
  const RedRule rule = pick_rule(opt, &doc);
  if (!opt.k) throw KnitError(ErrorKind::InvalidArgument, "oracle needs --k");
  const auto witness = brute_force_knittable(g, *opt.k, rule, opt.cap);
  if (!witness) {
    if (opt.json) {
      ordered_json j;
      j["feasible"] = false;
      j["k"] = *opt.k;
      j["rule"] = to_string(rule);
      out << j.dump(2) << '\n';
    } else {
      out << "infeasible (k=" << *opt.k << ", rule " << to_string(rule) << ")\n";
    }
    return kNo;
  }
  write_text(serialize_json(witness_document(doc, *witness, *opt.k, rule)), opt.output, out);
  return kYes;
}

int cmd_cover(const Options& opt, std::ostream& out) {
  const GraphDocument doc = load_document(opt.file);
  const PathCover pc = minimum_path_cover(directed_of(doc));
  if (opt.json) {
    ordered_json j;
    j["k"] = pc.k;
    j["threads"] = pc.cover.threads;
    out << j.dump(2) << '\n';
  } else {
    out << "k = " << pc.k << '\n' << thread_text(pc.cover);
  }
  return kYes;
}

int cmd_classify(const Options& opt, std::ostream& out) {
  const GraphDocument doc = load_document(opt.file);
  const DirectedKnitGraph g = directed_of(doc);
  const RedRule rule = pick_rule(opt, &doc);
  const ComplexityClass cc =
      classify_complexity(g, doc.layout ? &*doc.layout : nullptr, rule, doc.multi_orientation);
  if (opt.json) {
    ordered_json j;
    j["class"] = level_name(cc.level);
    j["planar"] = cc.planar;
    j["layout_crossings"] = cc.layout_crossings;
    j["crossings_on_red"] = cc.crossings_on_red;
    j["crossings_on_blue"] = cc.crossings_on_blue;
    j["1a"] = cc.is_1a();
    j["1b"] = cc.is_1b();
    out << j.dump(2) << '\n';
  } else {
    out << level_name(cc.level) << " (planar: " << (cc.planar ? "yes" : "no")
        << ", crossings on red: " << (cc.crossings_on_red ? "yes" : "no")
        << ", crossings on blue: " << (cc.crossings_on_blue ? "yes" : "no") << ")\n";
  }
  return kYes;
}

int cmd_rows(const Options& opt, std::ostream& out) {
  const GraphDocument doc = load_document(opt.file);
  const DirectedKnitGraph g = directed_of(doc);
  RowCount rc;
  try {
    rc = count_rows(g, threads_of(doc, g), layout_of(doc));
  } catch (const KnitError& e) {
    if (e.kind() != ErrorKind::NotPlanarLayout) throw;
    if (opt.json) {
      out << ordered_json{{"planar", false}, {"rows", nullptr}}.dump(2) << '\n';
    } else {
      out << "not planar\n";
    }
    return kNo;
  }
  if (opt.json) {
    ordered_json j;
    j["planar"] = true;
    j["rows"] = rc.rows;
    j["row_of"] = rc.row_of;
    out << j.dump(2) << '\n';
  } else {
    out << rc.rows << '\n';
  }
  return kYes;
}

int cmd_cablewidth(const Options& opt, std::ostream& out) {
  const GraphDocument doc = load_document(opt.file);
  const DirectedKnitGraph g = directed_of(doc);
  const NaturalLayout& layout = layout_of(doc);
  const std::size_t width = cable_width(g, layout);
  if (opt.json) {
    const CrossingGraph cg = crossing_graph(g, layout);
    ordered_json links = ordered_json::array();
    for (const auto& [a, b] : cg.links) links.push_back({a, b});
    out << ordered_json{{"cable_width", width}, {"links", links}}.dump(2) << '\n';
  } else {
    out << width << '\n';
  }
  return kYes;
}

YarnGraph yarn_of(const GraphDocument& doc) {
  if (doc.is_yarn()) return doc.yarn();
  return yarn_from_threads(doc.directed(), threads_of(doc, doc.directed()));
}

int cmd_yarn_check(const Options& opt, std::ostream& out) {
  const GraphDocument doc = load_document(opt.file);
  const YarnGraph y = yarn_of(doc);
  const RedRule rule = pick_rule(opt, &doc);
  std::size_t k = 0;
  if (opt.k) {
    k = *opt.k;
  } else if (doc.k) {
    k = *doc.k;
  } else if (y.yarn_count_hint) {
    k = *y.yarn_count_hint;
  } else {
    k = minimum_yarns(y).k;
  }
  const YarnCheckReport report = is_yarn_graph_of_k_knittable(y, k, rule);
  if (opt.json) {
    ordered_json j;
    j["ok"] = report.ok;
    j["k"] = k;
    j["minimum_k"] = report.minimum_k;
    j["rule"] = to_string(rule);
    j["problems"] = report.problems;
    out << j.dump(2) << '\n';
  } else {
    out << (report.ok ? "ok" : "not a yarn graph of a " + std::to_string(k) + "-knittable object") << '\n';
    for (const auto& p : report.problems) out << "  " << p << '\n';
  }
  return report.ok ? kYes : kNo;
}

int cmd_yarn_min_k(const Options& opt, std::ostream& out) {
  const GraphDocument doc = load_document(opt.file);
  const YarnGraph y = yarn_of(doc);
  const YarnCount count = minimum_yarns(y);
  ordered_json j;
  j["k"] = count.k;
  ordered_json trails = ordered_json::array();
  for (const Trail& t : count.decomposition.trails) {
    std::vector<VertexId> walk;
    if (!t.arcs.empty()) walk.push_back(y.arcs[t.arcs.front()].src);
    for (std::size_t a : t.arcs) walk.push_back(y.arcs[a].dst);
    trails.push_back({{"arcs", t.arcs}, {"vertices", walk}, {"closed", t.closed}});
  }
  j["trails"] = std::move(trails);
  ordered_json imbalances = ordered_json::array();
  for (const auto& [v, d] : count.imbalances) imbalances.push_back({{"vertex", v}, {"excess", d}});
  j["imbalances"] = std::move(imbalances);
  out << j.dump(2) << '\n';
  return kYes;
}

int cmd_gen(const Options& opt, std::ostream& out) {
  Fixture f;
  if (opt.pattern == "stockinette") {
    f = gen_stockinette(opt.rows, opt.cols.value_or(3), opt.round);
  } else if (opt.pattern == "brioche") {
    f = gen_brioche_maximal(opt.cols.value_or(6));
  } else {
    f = gen_stitch_fixture(opt.pattern);
  }
  write_text(serialize_json(to_document(f)), opt.output, out);
  return kYes;
}

int cmd_convert(const Options& opt, std::ostream& out) {
  const GraphDocument doc = load_document(opt.file);
  if (opt.to == "dot") {
    write_text(export_dot(doc), opt.output, out);
  } else {
    write_text(serialize_json(doc), opt.output, out);
  }
  return kYes;
}

int cmd_table(const Options& opt, std::ostream& out) {
  const RedRule rule = pick_rule(opt, nullptr);
  const FeasibilityTable table = feasibility_table(rule);
  ordered_json j;
  j["rule"] = to_string(rule);
  j["rows"] = "indeg 0, 1, 2, 3+";
  j["columns"] = "outdeg 0, 1, 2, 3+";
  ordered_json cells = ordered_json::array();
  for (const auto& row : table) {
    ordered_json r = ordered_json::array();
    for (RoleSet cell : row) r.push_back(cell.str());
    cells.push_back(std::move(r));
  }
  j["table"] = std::move(cells);
  if (!opt.json) {
    constexpr int w = 14;
    out << std::left << std::setw(12) << "in \\ out";
    for (const char* h : {"0", "1", "2", "3+"}) out << std::setw(w) << h;
    out << '\n';
    const char* labels[] = {"0", "1", "2", "3+"};
    for (std::size_t i = 0; i < 4; ++i) {
      out << std::setw(12) << labels[i];
      for (std::size_t o = 0; o < 4; ++o) out << std::setw(w) << table[i][o].str();
      out << '\n';
    }
    return kYes;
  }
  out << j.dump(2) << '\n';
  return kYes;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Knitting graph analysis: thread covers, yarn trails and layout classes", "knitgraph"};
  app.require_subcommand(1);
  Options opt;
  const std::vector<std::string> rules{"strict", "extended", "unrestricted"};
  auto rule_option = [&](CLI::App* sub) {
    sub->add_option("--rule", opt.rule, "Red degree rule (default strict, or the document's rule)")
        ->check(CLI::IsMember(rules));
  };
  auto file_arg = [&](CLI::App* sub) { sub->add_option("file", opt.file, "Graph JSON file")->required(); };
  app.add_flag("--json", opt.json, "Machine-readable output");

  auto* validate = app.add_subcommand("validate", "Check a colored graph as a k-thread witness");
  file_arg(validate);
  validate->add_option("--k", opt.k, "Thread count (default: the document's k)");
  rule_option(validate);

  auto* decide = app.add_subcommand("decide", "Decide k-knittability of a DAG (all k without --k)");
  file_arg(decide);
  decide->add_option("--k", opt.k, "Thread count");
  decide->add_option("-o", opt.output, "Write the witness here instead of stdout");
  rule_option(decide);

  auto* cover = app.add_subcommand("cover", "Minimum path cover of a DAG");
  file_arg(cover);
  cover->add_flag("--min", opt.min, "Minimum cover (the only mode)");

  auto* classify = app.add_subcommand("classify", "Knitting complexity class");
  file_arg(classify);
  rule_option(classify);

  auto* rows = app.add_subcommand("rows", "Rows of a single-thread planar object");
  file_arg(rows);

  auto* cablewidth = app.add_subcommand("cablewidth", "Cable width of the embedded layout");
  file_arg(cablewidth);

  auto* yarn = app.add_subcommand("yarn", "Yarn multigraph analysis");
  yarn->require_subcommand(1);
  auto* yarn_check = yarn->add_subcommand("check", "Is this the yarn graph of a k-knittable object?");
  file_arg(yarn_check);
  yarn_check->add_option("--k", opt.k, "Yarn count");
  rule_option(yarn_check);
  auto* yarn_min = yarn->add_subcommand("min-k", "Fewest yarns covering every arc");
  file_arg(yarn_min);

  auto* gen = app.add_subcommand("gen", "Generate a fixture as graph JSON");
  gen->add_option("--pattern", opt.pattern, "Pattern name")
      ->check(CLI::IsMember({"stockinette", "knit", "yo", "kfb", "k2tog", "c1b", "brioche"}));
  gen->add_option("--rows", opt.rows, "Rows (stockinette)");
  gen->add_option("--cols", opt.cols, "Columns (stockinette, brioche)");
  gen->add_flag("--round", opt.round, "Knit in the round");
  gen->add_option("-o", opt.output, "Output file (default stdout)");

  auto* convert = app.add_subcommand("convert", "Re-emit a graph as JSON or DOT");
  file_arg(convert);
  convert->add_option("--to", opt.to, "Output format")->check(CLI::IsMember({"json", "dot"}));
  convert->add_option("-o", opt.output, "Output file (default stdout)");

  auto* oracle = app.add_subcommand("oracle", "Exhaustive k-knittability search for small graphs");
  file_arg(oracle);
  oracle->add_option("--k", opt.k, "Thread count")->required();
  oracle->add_option("--cap", opt.cap, "Largest vertex count to search");
  oracle->add_option("-o", opt.output, "Write the witness here instead of stdout");
  rule_option(oracle);

  auto* table = app.add_subcommand("table", "Role table for red in/out degrees 0..3+");
  rule_option(table);

  for (CLI::App* sub : app.get_subcommands([](CLI::App*) { return true; }))
    sub->add_flag("--json", opt.json, "Machine-readable output");
  for (CLI::App* sub : {yarn_check, yarn_min}) sub->add_flag("--json", opt.json, "Machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    err << app.help();
    return kInvalid;
  }

  try {
    if (validate->parsed()) return cmd_validate(opt, out);
    if (decide->parsed()) return cmd_decide(opt, out);
    if (cover->parsed()) return cmd_cover(opt, out);
    if (classify->parsed()) return cmd_classify(opt, out);
    if (rows->parsed()) return cmd_rows(opt, out);
    if (cablewidth->parsed()) return cmd_cablewidth(opt, out);
    if (yarn_check->parsed()) return cmd_yarn_check(opt, out);
    if (yarn_min->parsed()) return cmd_yarn_min_k(opt, out);
    if (gen->parsed()) return cmd_gen(opt, out);
    if (convert->parsed()) return cmd_convert(opt, out);
    if (oracle->parsed()) return cmd_oracle(opt, out);
    if (table->parsed()) return cmd_table(opt, out);
  } catch (const KnitError& e) {
    err << "knitgraph: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::exception& e) {
    err << "knitgraph: internal error: " << e.what() << '\n';
    return kInvalid;
  }
  err << app.help();
  return kInvalid;
}

}  // namespace knitgraph
