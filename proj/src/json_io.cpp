#include "knitgraph/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace knitgraph {

using ordered_json = nlohmann::ordered_json;

const DirectedKnitGraph& GraphDocument::directed() const {
  if (auto* g = std::get_if<DirectedKnitGraph>(&graph)) return *g;
  throw KnitError(ErrorKind::InvalidArgument, "document holds a yarn multigraph");
}

const YarnGraph& GraphDocument::yarn() const {
  if (auto* y = std::get_if<YarnGraph>(&graph)) return *y;
  throw KnitError(ErrorKind::InvalidArgument, "document holds a simple directed graph");
}

namespace {

[[noreturn]] void schema_error(const std::string& field, const std::string& why) {
  throw KnitError(ErrorKind::SchemaError, field + ": " + why);
}

const ordered_json& require(const ordered_json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(where + key, "missing field");
  return *it;
}

std::size_t as_index(const ordered_json& v, const std::string& field) {
  if (!v.is_number_integer() || v.get<long long>() < 0) schema_error(field, "expected a non-negative integer");
  return static_cast<std::size_t>(v.get<long long>());
}

bool as_bool(const ordered_json& v, const std::string& field) {
  if (!v.is_boolean()) schema_error(field, "expected a boolean");
  return v.get<bool>();
}

EdgeColor parse_color(const ordered_json& v, const std::string& field) {
  if (v.is_null()) return EdgeColor::Uncolored;
  if (!v.is_string()) schema_error(field, "expected \"blue\", \"red\", \"purple\" or null");
  const auto s = v.get<std::string>();
  if (s == "blue") return EdgeColor::Blue;
  if (s == "red") return EdgeColor::Red;
  if (s == "purple") return EdgeColor::Purple;
  schema_error(field, "unknown color \"" + s + "\"");
}

}  // namespace

GraphDocument parse_json(std::string_view text) {
  ordered_json root;
  try {
    root = ordered_json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    schema_error("<document>", "byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!root.is_object()) schema_error("<document>", "expected a JSON object");

  const std::size_t n = as_index(require(root, "n", ""), "n");
  const bool directed = root.contains("directed") ? as_bool(root["directed"], "directed") : true;
  const bool multigraph = root.contains("multigraph") ? as_bool(root["multigraph"], "multigraph") : false;
  const auto& edges_json = require(root, "edges", "");
  if (!edges_json.is_array()) schema_error("edges", "expected an array");

  GraphDocument doc;
  if (root.contains("meta")) {
    const auto& meta = root["meta"];
    if (!meta.is_object()) schema_error("meta", "expected an object");
    if (meta.contains("k") && !meta["k"].is_null()) doc.k = as_index(meta["k"], "meta.k");
    if (meta.contains("labels")) {
      if (!meta["labels"].is_object()) schema_error("meta.labels", "expected an object");
      for (const auto& [key, value] : meta["labels"].items()) {
        if (!value.is_string()) schema_error("meta.labels." + key, "expected a string");
        doc.labels[key] = value.get<std::string>();
      }
    }
    if (meta.contains("threads")) {
      const auto& threads = meta["threads"];
      if (!threads.is_array()) schema_error("meta.threads", "expected an array of arrays");
      ThreadCover cover;
      for (std::size_t t = 0; t < threads.size(); ++t) {
        const std::string field = "meta.threads[" + std::to_string(t) + "]";
        if (!threads[t].is_array()) schema_error(field, "expected an array");
        auto& seq = cover.threads.emplace_back();
        for (std::size_t i = 0; i < threads[t].size(); ++i) {
          std::size_t v = as_index(threads[t][i], field + "[" + std::to_string(i) + "]");
          if (v >= n) schema_error(field, "vertex out of range");
          seq.push_back(static_cast<VertexId>(v));
        }
      }
      doc.threads = std::move(cover);
    }
    if (meta.contains("rule")) {
      if (!meta["rule"].is_string()) schema_error("meta.rule", "expected a string");
      doc.rule = meta["rule"].get<std::string>();
    }
    if (meta.contains("multi_orientation"))
      doc.multi_orientation = as_bool(meta["multi_orientation"], "meta.multi_orientation");
  }

  try {
    if (multigraph) {
      std::vector<Arc> arcs;
      std::vector<std::size_t> arc_yarn;
      for (std::size_t i = 0; i < edges_json.size(); ++i) {
        const std::string where = "edges[" + std::to_string(i) + "].";
        const auto& e = edges_json[i];
        if (!e.is_object()) schema_error("edges[" + std::to_string(i) + "]", "expected an object");
        arcs.push_back({static_cast<VertexId>(as_index(require(e, "src", where), where + "src")),
                        static_cast<VertexId>(as_index(require(e, "dst", where), where + "dst"))});
        if (e.contains("color") && !e["color"].is_null())
          schema_error(where + "color", "yarn multigraph arcs carry no color");
        if (e.contains("yarn")) arc_yarn.push_back(as_index(e["yarn"], where + "yarn"));
      }
      if (!arc_yarn.empty() && arc_yarn.size() != arcs.size())
        schema_error("edges", "either every arc or no arc carries \"yarn\"");
      doc.graph = YarnGraph::build(n, std::move(arcs), doc.k, std::move(arc_yarn));
    } else {
      std::vector<Edge> edges;
      for (std::size_t i = 0; i < edges_json.size(); ++i) {
        const std::string where = "edges[" + std::to_string(i) + "].";
        const auto& e = edges_json[i];
        if (!e.is_object()) schema_error("edges[" + std::to_string(i) + "]", "expected an object");
        Edge edge;
        edge.src = static_cast<VertexId>(as_index(require(e, "src", where), where + "src"));
        edge.dst = static_cast<VertexId>(as_index(require(e, "dst", where), where + "dst"));
        edge.color = e.contains("color") ? parse_color(e["color"], where + "color") : EdgeColor::Uncolored;
        edges.push_back(edge);
      }
      doc.graph = DirectedKnitGraph::build(n, std::move(edges), directed);
    }
  } catch (const KnitError& e) {
    if (e.kind() == ErrorKind::SchemaError) throw;
    schema_error("edges", e.what());
  }

  if (root.contains("layout") && !root["layout"].is_null()) {
    const auto& layout = root["layout"];
    if (!layout.is_object()) schema_error("layout", "expected an object keyed by vertex id");
    NaturalLayout nl;
    nl.points.resize(n);
    std::vector<bool> placed(n, false);
    for (const auto& [key, value] : layout.items()) {
      const std::string field = "layout." + key;
      std::size_t v = 0;
      try {
        std::size_t used = 0;
        v = std::stoul(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        schema_error(field, "key is not a vertex id");
      }
      if (v >= n) schema_error(field, "vertex out of range");
      if (!value.is_array() || value.size() != 2 || !value[0].is_number_integer() || !value[1].is_number())
        schema_error(field, "expected [row:int, col:number]");
      nl.points[v] = {value[0].get<int>(), value[1].get<double>()};
      placed[v] = true;
    }
    for (std::size_t v = 0; v < n; ++v)
      if (!placed[v]) schema_error("layout", "vertex " + std::to_string(v) + " has no position");
    if (root.contains("meta") && root["meta"].contains("period")) {
      const auto& p = root["meta"]["period"];
      if (!p.is_number() || p.get<double>() <= 0) schema_error("meta.period", "expected a positive number");
      nl.period = p.get<double>();
    }
    doc.layout = std::move(nl);
  }
  return doc;
}

std::string serialize_json(const GraphDocument& doc) {
  ordered_json root;
  ordered_json edges = ordered_json::array();
  if (const auto* y = std::get_if<YarnGraph>(&doc.graph)) {
    root["n"] = y->n;
    root["directed"] = true;
    root["multigraph"] = true;
    for (std::size_t i = 0; i < y->arcs.size(); ++i) {
      ordered_json e{{"src", y->arcs[i].src}, {"dst", y->arcs[i].dst}, {"color", nullptr}};
      if (!y->arc_yarn.empty()) e["yarn"] = y->arc_yarn[i];
      edges.push_back(std::move(e));
    }
  } else {
    const auto& g = std::get<DirectedKnitGraph>(doc.graph);
    root["n"] = g.size();
    root["directed"] = g.directed();
    root["multigraph"] = false;
    for (const Edge& e : g.edges()) {
      ordered_json color = nullptr;
      if (e.color != EdgeColor::Uncolored) color = std::string(to_string(e.color));
      edges.push_back({{"src", e.src}, {"dst", e.dst}, {"color", color}});
    }
  }
  root["edges"] = std::move(edges);
  if (doc.layout) {
    ordered_json layout = ordered_json::object();
    for (std::size_t v = 0; v < doc.layout->points.size(); ++v)
      layout[std::to_string(v)] = {doc.layout->points[v].row, doc.layout->points[v].col};
    root["layout"] = std::move(layout);
  }
  ordered_json meta = ordered_json::object();
  if (doc.k) meta["k"] = *doc.k;
  if (!doc.labels.empty()) meta["labels"] = doc.labels;
  if (doc.threads) meta["threads"] = doc.threads->threads;
  if (doc.rule) meta["rule"] = *doc.rule;
  if (doc.layout && doc.layout->period) meta["period"] = *doc.layout->period;
  if (doc.multi_orientation) meta["multi_orientation"] = true;
  if (!meta.empty()) root["meta"] = std::move(meta);
  return root.dump(2) + "\n";
}

GraphDocument load_document(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw KnitError(ErrorKind::SchemaError, path.string() + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

void save_document(const std::filesystem::path& path, const GraphDocument& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw KnitError(ErrorKind::InvalidArgument, path.string() + ": cannot write file");
  out << serialize_json(doc);
}

namespace {

std::string_view dot_color(EdgeColor c) {
  return c == EdgeColor::Uncolored ? std::string_view("gray") : to_string(c);
}

void dot_nodes(std::ostream& os, std::size_t n, const std::map<std::string, std::string>& labels) {
  for (std::size_t v = 0; v < n; ++v) {
    os << "  " << v;
    if (auto it = labels.find(std::to_string(v)); it != labels.end()) {
      os << " [label=\"";
      for (char ch : it->second) {
        if (ch == '"' || ch == '\\') os << '\\';
        os << ch;
      }
      os << "\"]";
    }
    os << ";\n";
  }
}

}  // namespace

std::string export_dot(const GraphDocument& doc) {
  std::ostringstream os;
  os << "digraph knitgraph {\n";
  if (const auto* y = std::get_if<YarnGraph>(&doc.graph)) {
    dot_nodes(os, y->n, doc.labels);
    for (const Arc& a : y->arcs) os << "  " << a.src << " -> " << a.dst << " [color=gray];\n";
  } else {
    const auto& g = std::get<DirectedKnitGraph>(doc.graph);
    dot_nodes(os, g.size(), doc.labels);
    for (const Edge& e : g.edges()) {
      os << "  " << e.src << " -> " << e.dst << " [color=" << dot_color(e.color);
      if (!g.directed()) os << ", dir=none";
      os << "];\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string export_dot(const DirectedKnitGraph& g) {
  GraphDocument doc;
  doc.graph = g;
  return export_dot(doc);
}

}  // namespace knitgraph
