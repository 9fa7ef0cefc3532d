#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "knitgraph/graph.hpp"

namespace knitgraph {

/// Everything a graph file can carry besides the graph itself.
struct GraphDocument {
  std::variant<DirectedKnitGraph, YarnGraph> graph;
  std::optional<NaturalLayout> layout;
  std::optional<std::size_t> k;
  std::map<std::string, std::string> labels;
  std::optional<ThreadCover> threads;
  std::optional<std::string> rule;
  bool multi_orientation = false;

  bool is_yarn() const { return std::holds_alternative<YarnGraph>(graph); }
  const DirectedKnitGraph& directed() const;
  const YarnGraph& yarn() const;

  friend bool operator==(const GraphDocument&, const GraphDocument&) = default;
};

/// Throws KnitError(SchemaError) naming the offending field or byte offset.
GraphDocument parse_json(std::string_view text);
std::string serialize_json(const GraphDocument& doc);

GraphDocument load_document(const std::filesystem::path& path);
void save_document(const std::filesystem::path& path, const GraphDocument& doc);

std::string export_dot(const GraphDocument& doc);
std::string export_dot(const DirectedKnitGraph& g);

}  // namespace knitgraph
