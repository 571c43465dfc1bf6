#pragma once
/**
 * @file breakpoint_graph.hpp
 * @brief Breakpoint graphs, grey-edge classification, and the deterministic
 *        scenario matchers that drive the sorters.
 */

#include <string>
#include <utility>
#include <vector>

#include "prefix_sort/permutation.hpp"

namespace prefix_sort {

enum class Convention { Standard, ForwardMarch };

enum class EdgeType { Type1, Type2, Type3, Type4 };

// Edges are stored over frame positions.  Under Standard the frame is the
// whole permutation (cursor 0) and black_edges holds breakpoint positions:
// 1 always, i in [2, n+1] when |values[i] - values[i-1]| != 1.  Under
// ForwardMarch frame position 0 is the last sorted element (the anchor,
// value = cursor) and a black edge at position i means
// |frame[i] - frame[i+1]| != 1; position cursor contributes the starting
// black edge whenever the suffix is unsorted.  Grey edges are pairs (p, q),
// p < q, q != p+1, with |frame[p] - frame[q]| = 1.
struct BreakpointGraph {
  Permutation perm;
  Convention convention = Convention::Standard;
  int cursor = 0;
  std::vector<int> black_edges;
  std::vector<std::pair<int, int>> grey_edges;
  std::vector<int> position_of_value;  // absolute positions, index = value

  int frame_size() const { return perm.n() - cursor; }
  int at(int frame_pos) const { return perm[cursor + frame_pos]; }
  // Frame position of a value, -1 when the value sits left of the frame.
  int frame_position(int value) const;
};

BreakpointGraph build_graph(const Permutation& p, Convention convention,
                            int cursor);

// Frame positions q adjacent-in-value to frame position p, ascending.
std::vector<int> grey_partners(const BreakpointGraph& g, int p);

// Classifies a grey edge (p, q) whose context endpoint p is position 1 (when
// frame[1] != 1-equivalent) or the end of the sorted value run.  Type1/Type2
// test the breakpoints right/left of q for the front context; Type3/Type4
// test left/right of q for the sorted-prefix context.  Ties resolve to
// Type1 and Type3.  Raises Unclassifiable when neither side qualifies.
EdgeType classify(const BreakpointGraph& g, std::pair<int, int> edge);

// Smallest i in [2, q] with a black edge between frame positions i-1 and i.
// Raises NoTrappedEdge when the whole span is adjacency-joined (cannot
// happen for matcher-produced edges).
int trapped_black(const BreakpointGraph& g, std::pair<int, int> edge);

struct ScenarioMatch {
  Scenario scenario;
  PrefixOp op;
  std::vector<std::pair<int, int>> grey_edges_used;
  int predicted_delta = 0;
  bool forward_march = false;
};

// Deterministic matchers.  Scenario priority first, then smallest q (and for
// the forward-march matcher smallest j, then smallest i).  The permutation
// (or suffix) must be unsorted.
ScenarioMatch match_rt3(const BreakpointGraph& g);
ScenarioMatch match_rt2(const BreakpointGraph& g);
ScenarioMatch match_fm(const BreakpointGraph& g);

// "B i" / "G p q" lines, frame-relative, blacks first, numeric order.
std::string dump_graph(const BreakpointGraph& g);

}  // namespace prefix_sort
