// Python bindings. Graphs cross the boundary as JSON documents (str), the same
// format the command-line tool reads and writes.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "knitgraph/feasibility.hpp"
#include "knitgraph/json_io.hpp"
#include "knitgraph/layout.hpp"
#include "knitgraph/patterns.hpp"
#include "knitgraph/thread_cover.hpp"
#include "knitgraph/yarn.hpp"

namespace py = pybind11;
using namespace knitgraph;

namespace {

PyObject* knit_error_type = nullptr;

RedRule rule_of(const GraphDocument& doc, const std::optional<std::string>& rule) {
  if (rule) return parse_rule(*rule);
  if (doc.rule) return parse_rule(*doc.rule);
  return RedRule::Strict;
}

DirectedKnitGraph directed_of(const GraphDocument& doc) {
  return doc.is_yarn() ? reduce_yarn_to_directed(doc.yarn()) : doc.directed();
}

ThreadCover threads_of(const GraphDocument& doc, const DirectedKnitGraph& g) {
  if (doc.threads) return *doc.threads;
  const ColoringReport r = check_coloring(g, 0, RedRule::Unrestricted, PurplePolicy::SequentialAndLoop);
  if (!r.blue_forms_paths) throw KnitError(ErrorKind::InvalidArgument, "document has no threads");
  return r.threads;
}

const NaturalLayout& layout_of(const GraphDocument& doc) {
  if (!doc.layout) throw KnitError(ErrorKind::InvalidArgument, "document has no layout block");
  return *doc.layout;
}

std::optional<std::string> decide(const std::string& text, std::size_t k, const std::optional<std::string>& rule) {
  const GraphDocument doc = parse_json(text);
  const RedRule r = rule_of(doc, rule);
  const auto w = decide_k_knittable(directed_of(doc), k, r);
  if (!w) return std::nullopt;
  GraphDocument out;
  out.graph = w->colored;
  out.layout = doc.layout;
  out.labels = doc.labels;
  out.k = k;
  out.threads = w->cover;
  out.rule = std::string(to_string(r));
  return serialize_json(out);
}

py::dict check(const std::string& text, std::optional<std::size_t> k, const std::optional<std::string>& rule) {
  const GraphDocument doc = parse_json(text);
  const DirectedKnitGraph g = directed_of(doc);
  const std::size_t kk = k ? *k : doc.k ? *doc.k : doc.threads ? doc.threads->k() : 0;
  const ColoringReport r = check_coloring(g, kk, rule_of(doc, rule), PurplePolicy::SequentialAndLoop);
  py::dict d;
  d["valid"] = r.valid;
  d["path_count"] = r.path_count;
  d["problems"] = r.problems;
  return d;
}

py::dict classify(const std::string& text, const std::optional<std::string>& rule) {
  const GraphDocument doc = parse_json(text);
  const DirectedKnitGraph g = directed_of(doc);
  const ComplexityClass c =
      classify_complexity(g, doc.layout ? &*doc.layout : nullptr, rule_of(doc, rule), doc.multi_orientation);
  py::dict d;
  d["level"] = static_cast<int>(c.level);
  d["planar"] = c.planar;
  d["layout_crossings"] = c.layout_crossings;
  d["is_1a"] = c.is_1a();
  d["is_1b"] = c.is_1b();
  return d;
}

std::string generate(const std::string& pattern, std::size_t rows, std::optional<std::size_t> cols, bool round) {
  Fixture f;
  if (pattern == "stockinette") {
    f = gen_stockinette(rows, cols.value_or(3), round);
  } else if (pattern == "brioche") {
    f = gen_brioche_maximal(cols.value_or(6));
  } else {
    f = gen_stitch_fixture(pattern);
  }
  return serialize_json(to_document(f));
}

}  // namespace

PYBIND11_MODULE(knitgraph, m) {
  m.doc() = "Knittability of stitch graphs: thread covers, yarn graphs, layouts and classes.";

  knit_error_type = PyErr_NewException("knitgraph.KnitError", PyExc_ValueError, nullptr);
  m.attr("KnitError") = py::handle(knit_error_type);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const KnitError& e) {
      py::object exc = py::reinterpret_steal<py::object>(PyObject_CallFunction(knit_error_type, "s", e.what()));
      exc.attr("kind") = std::string(to_string(e.kind()));
      PyErr_SetObject(knit_error_type, exc.ptr());
    }
  });

  m.def(
      "feasibility_table",
      [](const std::string& rule) {
        const FeasibilityTable t = feasibility_table(parse_rule(rule));
        std::vector<std::vector<std::string>> out(t.size());
        for (std::size_t in = 0; in < t.size(); ++in)
          for (const RoleSet& s : t[in]) out[in].push_back(s.str());
        return out;
      },
      py::arg("rule") = "strict", "Role sets indexed [indegree][outdegree] for degrees 0..3.");
  m.def(
      "classify_vertex",
      [](std::size_t indeg, std::size_t outdeg, const std::string& rule) {
        return classify_vertex(indeg, outdeg, parse_rule(rule)).str();
      },
      py::arg("indeg"), py::arg("outdeg"), py::arg("rule") = "strict");

  m.def("decide", &decide, py::arg("document"), py::arg("k"), py::arg("rule") = std::nullopt,
        "Witness document for a k-thread cover, or None.");
  m.def(
      "feasible_thread_counts",
      [](const std::string& text, const std::optional<std::string>& rule) {
        const GraphDocument doc = parse_json(text);
        return feasible_thread_counts(directed_of(doc), rule_of(doc, rule));
      },
      py::arg("document"), py::arg("rule") = std::nullopt);
  m.def("check_coloring", &check, py::arg("document"), py::arg("k") = std::nullopt, py::arg("rule") = std::nullopt);
  m.def(
      "minimum_path_cover",
      [](const std::string& text) { return minimum_path_cover(directed_of(parse_json(text))).cover.threads; },
      py::arg("document"));
  m.def(
      "minimum_yarns",
      [](const std::string& text) {
        const GraphDocument doc = parse_json(text);
        if (!doc.is_yarn()) throw KnitError(ErrorKind::InvalidArgument, "expected a yarn graph document");
        return minimum_yarns(doc.yarn()).k;
      },
      py::arg("document"));

  m.def(
      "is_planar",
      [](std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& edges) {
        return is_planar(KnittingGraph{n, edges});
      },
      py::arg("n"), py::arg("edges"));
  m.def(
      "crossings",
      [](const std::string& text) {
        const GraphDocument doc = parse_json(text);
        return crossing_graph(directed_of(doc), layout_of(doc)).links;
      },
      py::arg("document"), "Pairs of edge indices whose drawn segments cross.");
  m.def(
      "cable_width",
      [](const std::string& text) {
        const GraphDocument doc = parse_json(text);
        return cable_width(directed_of(doc), layout_of(doc));
      },
      py::arg("document"));
  m.def("classify", &classify, py::arg("document"), py::arg("rule") = std::nullopt);
  m.def(
      "count_rows",
      [](const std::string& text) {
        const GraphDocument doc = parse_json(text);
        const DirectedKnitGraph g = directed_of(doc);
        return count_rows(g, threads_of(doc, g), layout_of(doc)).rows;
      },
      py::arg("document"));

  m.def("generate", &generate, py::arg("pattern") = "stockinette", py::arg("rows") = 3, py::arg("cols") = std::nullopt,
        py::arg("round") = false, "Fixture document: stockinette, brioche, or a stitch name.");
  m.def(
      "yarn_of",
      [](const std::string& text) {
        const GraphDocument doc = parse_json(text);
        const DirectedKnitGraph g = directed_of(doc);
        GraphDocument out;
        out.graph = yarn_from_threads(g, threads_of(doc, g));
        return serialize_json(out);
      },
      py::arg("document"), "Yarn graph document built from the document's threads.");
  m.def(
      "to_dot", [](const std::string& text) { return export_dot(parse_json(text)); }, py::arg("document"));
}
