#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "knitgraph/graph.hpp"

namespace knitgraph {

/// Which (red-in, red-out) configurations a stitch may have.
///
/// Strict: {(0,1), (1,0), (1,1), (1,2), (2,1)}: yarn over, top-row stitch,
/// knit, knit-front-and-back, knit-two-together.
/// Extended: anything but (0,0) and many-to-many (both sides >= 2).
/// Unrestricted: no degree restriction at all; every vertex may take any
/// role, which reduces knittability to plain path covers.
enum class RedRule : std::uint8_t { Strict, Extended, Unrestricted };

std::string_view to_string(RedRule rule);
RedRule parse_rule(std::string_view text);

/// Subset of {S, M, T}: may start, continue, or end a thread.
class RoleSet {
 public:
  enum Role : std::uint8_t { S = 1, M = 2, T = 4 };

  constexpr RoleSet() = default;
  constexpr explicit RoleSet(std::uint8_t bits) : bits_(bits & 7) {}

  constexpr bool has(Role r) const { return (bits_ & r) != 0; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint8_t bits() const { return bits_; }
  constexpr bool contains(RoleSet other) const { return (bits_ & other.bits_) == other.bits_; }

  /// "S, M, T" style; "non-feasible" when empty.
  std::string str() const;

  friend constexpr bool operator==(RoleSet, RoleSet) = default;

 private:
  std::uint8_t bits_ = 0;
};

bool red_config_allowed(std::size_t red_in, std::size_t red_out, RedRule rule);

RoleSet classify_vertex(std::size_t indeg, std::size_t outdeg, RedRule rule);

/// Cell (i, o) is classify_vertex(i, o, rule); index 3 stands for the
/// "3 or more" bucket and is evaluated at exactly 3.
using FeasibilityTable = std::array<std::array<RoleSet, 4>, 4>;
FeasibilityTable feasibility_table(RedRule rule);

/// How check_coloring treats purple edges.
enum class PurplePolicy : std::uint8_t {
  Reject,
  // A purple edge is a thread edge and a loop at once.
  SequentialAndLoop,
};

enum class ThreadRole : std::uint8_t { Start, Middle, End, Singleton };

struct VertexVerdict {
  VertexId vertex = 0;
  ThreadRole role = ThreadRole::Singleton;
  std::size_t red_in = 0;
  std::size_t red_out = 0;
  bool ok = false;
};

struct ColoringReport {
  bool valid = false;
  bool blue_forms_paths = false;
  std::size_t path_count = 0;
  std::size_t expected_k = 0;
  ThreadCover threads;  // recovered from the blue edges, when they form paths
  std::vector<VertexVerdict> vertices;
  std::vector<std::string> problems;
};

/// Verifies a colored graph as a witness of k-knittability: blue edges form
/// exactly k vertex-disjoint directed paths covering V, and every vertex's
/// degrees admit its role on its path.
ColoringReport check_coloring(const DirectedKnitGraph& g, std::size_t k, RedRule rule,
                              PurplePolicy purple = PurplePolicy::Reject);

}  // namespace knitgraph
