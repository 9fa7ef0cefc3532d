#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "knitgraph/feasibility.hpp"
#include "knitgraph/graph.hpp"
#include "knitgraph/json_io.hpp"
#include "knitgraph/layout.hpp"

namespace knitgraph {

enum class Stitch { K, Yo, Kfb, K2tog, K3tog, C1b };

std::string_view to_string(Stitch s);
Stitch parse_stitch(std::string_view name);  // InvalidArgument on unknown names

struct StitchInsert {
  std::size_t row = 0;       // 1-based rows above the cast-on row (row 0)
  std::size_t position = 0;  // index among the row's instructions, in working order
  Stitch stitch = Stitch::K;
};

/// Row 0 is the cast-on; every later row works the previous row's stitches
/// with plain knits except where an insert says otherwise.
struct PatternSpec {
  std::size_t rows = 0;
  std::size_t cols = 0;
  bool round = false;
  std::vector<StitchInsert> inserts;
};

struct Fixture {
  std::string name;
  DirectedKnitGraph graph;
  ThreadCover cover;
  NaturalLayout layout;
  YarnGraph yarn;
  ComplexityLevel expected_class = ComplexityLevel::Class0;
  RedRule rule = RedRule::Strict;  // weakest rule the coloring satisfies
  std::size_t rows = 0;
  std::vector<std::string> labels;  // per vertex; empty when unlabeled

  std::size_t k() const { return cover.k(); }
};

/// Throws BadDims when rows < 1 or cols < 2, InvalidArgument when an insert
/// does not fit.
Fixture gen_pattern(const PatternSpec& spec);

/// Throws BadDims when rows < 1 or cols < 2.
Fixture gen_stockinette(std::size_t rows, std::size_t cols, bool round);

/// One of knit, yo, kfb, k2tog, c1b, drawn with the reference coordinates.
/// Throws InvalidArgument on other names.
Fixture gen_stitch_fixture(std::string_view name);

/// Three rows of `cols` stitches worked in the round with four threads.
/// Throws BadDims unless cols is even and at least 4.
Fixture gen_brioche_maximal(std::size_t cols);

/// One line per row, e.g. "row 2: k k kfb-second-leg k". Throws
/// NotSingleThread.
std::string emit_instructions(const Fixture& fixture);

/// Graph, layout, threads, rule and labels as a saveable document.
GraphDocument to_document(const Fixture& fixture);

}  // namespace knitgraph
