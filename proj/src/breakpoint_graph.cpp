#include "prefix_sort/breakpoint_graph.hpp"

#include <algorithm>
#include <limits>

namespace prefix_sort {

namespace {

int abs_diff(int a, int b) { return a > b ? a - b : b - a; }

// Length m of the maximal sorted value run values[1..m] = 1..m.
int sorted_prefix_end(const Permutation& p) {
  int m = 0;
  while (m < p.n() && p[m + 1] == m + 1) ++m;
  return m;
}

}  // namespace

int BreakpointGraph::frame_position(int value) const {
  const int abs_pos = position_of_value[static_cast<size_t>(value)];
  return abs_pos >= cursor ? abs_pos - cursor : -1;
}

BreakpointGraph build_graph(const Permutation& p, Convention convention,
                            int cursor) {
  BreakpointGraph g;
  g.perm = p;
  g.convention = convention;
  g.cursor = cursor;
  const int n = p.n();
  if (convention == Convention::Standard) {
    if (cursor != 0) {
      raise(ErrorCode::PreconditionViolated,
            "standard graphs use cursor 0, got " + std::to_string(cursor));
    }
    for (int i = 1; i <= n + 1; ++i) {
      if (std_breakpoint_at(p, i)) g.black_edges.push_back(i);
    }
  } else {
    if (cursor < 0 || cursor > n) {
      raise(ErrorCode::IndexOutOfRange,
            "cursor " + std::to_string(cursor) + " outside 0.." +
                std::to_string(n));
    }
    for (int i = 0; i <= cursor; ++i) {
      if (p[i] != i) {
        raise(ErrorCode::CursorNotSorted,
              "prefix is not 0.." + std::to_string(cursor) + " at position " +
                  std::to_string(i));
      }
    }
    for (int t = 0; t <= n - cursor; ++t) {
      if (abs_diff(p[cursor + t], p[cursor + t + 1]) != 1) {
        g.black_edges.push_back(t);
      }
    }
  }
  g.position_of_value.assign(static_cast<size_t>(n) + 2, 0);
  for (int i = 0; i <= n + 1; ++i) {
    g.position_of_value[static_cast<size_t>(p[i])] = i;
  }
  const int frame_end = n - cursor + 1;
  for (int q = 2; q <= frame_end; ++q) {
    const int v = g.at(q);
    for (int w : {v - 1, v + 1}) {
      if (w < 0 || w > n + 1) continue;
      const int pp = g.frame_position(w);
      if (pp >= 0 && pp < q - 1) g.grey_edges.emplace_back(pp, q);
    }
  }
  std::sort(g.grey_edges.begin(), g.grey_edges.end());
  return g;
}

std::vector<int> grey_partners(const BreakpointGraph& g, int p) {
  std::vector<int> out;
  for (const auto& [a, b] : g.grey_edges) {
    if (a == p) out.push_back(b);
    if (b == p) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Black edge between frame positions i-1 and i (the value-adjacency test;
// the standard convention's always-counted position 1 is not a value test
// and is handled by callers where it matters).
bool junction_black(const BreakpointGraph& g, int i) {
  return abs_diff(g.at(i - 1), g.at(i)) != 1;
}

}  // namespace

EdgeType classify(const BreakpointGraph& g, std::pair<int, int> edge) {
  const auto [p, q] = edge;
  const int frame_end = g.frame_size() + 1;
  if (p < 0 || q <= p || q > frame_end || q == p + 1 ||
      abs_diff(g.at(p), g.at(q)) != 1) {
    raise(ErrorCode::PreconditionViolated,
          "(" + std::to_string(p) + "," + std::to_string(q) +
              ") is not a grey edge");
  }
  if (g.at(1) != g.at(0) + 1) {
    // Front context: the first element is not the anchor's successor.
    if (p != 1) {
      raise(ErrorCode::PreconditionViolated,
            "context endpoint must be position 1, got " + std::to_string(p));
    }
    if (q < frame_end && junction_black(g, q + 1)) return EdgeType::Type1;
    if (junction_black(g, q)) return EdgeType::Type2;
  } else {
    // Sorted-prefix context: p must end the maximal sorted run.
    const int m = sorted_prefix_end(g.perm) - g.cursor;
    if (p != m) {
      raise(ErrorCode::PreconditionViolated,
            "context endpoint must be the sorted prefix end " +
                std::to_string(m) + ", got " + std::to_string(p));
    }
    if (junction_black(g, q)) return EdgeType::Type3;
    if (q < frame_end && junction_black(g, q + 1)) return EdgeType::Type4;
  }
  raise(ErrorCode::Unclassifiable,
        "grey edge (" + std::to_string(p) + "," + std::to_string(q) +
            ") has no adjacent breakpoint");
}

int trapped_black(const BreakpointGraph& g, std::pair<int, int> edge) {
  const int q = edge.second;
  for (int i = 2; i <= q; ++i) {
    if (junction_black(g, i)) return i;
  }
  raise(ErrorCode::NoTrappedEdge,
        "no black edge in positions 2.." + std::to_string(q));
}

namespace {

ScenarioMatch match_rt(const BreakpointGraph& g, bool transreversal_for_type4) {
  if (g.convention != Convention::Standard) {
    raise(ErrorCode::PreconditionViolated, "matcher requires a standard graph");
  }
  const Permutation& p = g.perm;
  if (is_sorted(p)) {
    raise(ErrorCode::PreconditionViolated, "permutation is already sorted");
  }
  if (p[1] != 1) {
    int qs[2] = {g.frame_position(p[1] - 1), g.frame_position(p[1] + 1)};
    std::sort(qs, qs + 2);
    for (const EdgeType wanted : {EdgeType::Type1, EdgeType::Type2}) {
      for (int q : qs) {
        if (q < 3) continue;
        if (classify(g, {1, q}) != wanted) continue;
        if (wanted == EdgeType::Type1) {
          const int i = trapped_black(g, {1, q});
          return {Scenario::Rt3S1, transposition_op(i, q + 1), {{1, q}}, 1,
                  false};
        }
        return {Scenario::Rt3S2, reversal_op(q), {{1, q}}, 1, false};
      }
    }
    raise(ErrorCode::NoMatch, "no scenario for front element " +
                                  std::to_string(p[1]));
  }
  const int m = sorted_prefix_end(p);
  const int q = g.position_of_value[static_cast<size_t>(m + 1)];
  const EdgeType type = classify(g, {m, q});
  if (type == EdgeType::Type3) {
    return {Scenario::Rt3S3, transposition_op(m + 1, q), {{m, q}}, 1, false};
  }
  if (transreversal_for_type4) {
    return {Scenario::Rt2S4, transreversal_op(m + 1, q + 1), {{m, q}}, 1,
            false};
  }
  return {Scenario::Rt3S4, reversal_op(q + 1), {{m, q}}, 0, false};
}

}  // namespace

ScenarioMatch match_rt3(const BreakpointGraph& g) { return match_rt(g, false); }

ScenarioMatch match_rt2(const BreakpointGraph& g) { return match_rt(g, true); }

ScenarioMatch match_fm(const BreakpointGraph& g) {
  if (g.convention != Convention::ForwardMarch) {
    raise(ErrorCode::PreconditionViolated,
          "matcher requires a forward-march graph");
  }
  const int n = g.perm.n();
  const int frame = g.frame_size();
  if (frame <= 0 || g.at(1) == g.cursor + 1) {
    raise(ErrorCode::PreconditionViolated,
          "suffix is sorted or the march has not been applied");
  }
  const int anchor = g.at(0);
  const int front = g.at(1);
  auto black = [&](int t) { return abs_diff(g.at(t), g.at(t + 1)) != 1; };
  auto fpos = [&](int v) {
    return (v >= 0 && v <= n + 1) ? g.frame_position(v) : -1;
  };
  const int none = std::numeric_limits<int>::max();

  // Successor-of-anchor edge, shared by S1 and S3.
  const int i0 = fpos(anchor + 1);
  const bool anchor_edge_ok = i0 >= 2 && black(0) && black(i0 - 1);

  if (anchor_edge_ok) {
    int best_j = none;
    for (int w : {g.at(i0 - 1) - 1, g.at(i0 - 1) + 1}) {
      const int j = fpos(w);
      if (j > i0 && j <= frame + 1 && black(j - 1)) best_j = std::min(best_j, j);
    }
    if (best_j != none) {
      return {Scenario::FmS1,
              transposition_op(i0, best_j, g.cursor),
              {{0, i0}, {i0 - 1, best_j}},
              2,
              true};
    }
  }

  // Positions of the front element's value neighbors; candidates for the
  // grey edge (1, j-1) used by S2, S3, and S4.
  int j_cands[2] = {-1, -1};
  {
    int idx = 0;
    for (int w : {front - 1, front + 1}) {
      const int q1 = fpos(w);
      if (q1 >= 3 && q1 <= frame) j_cands[idx] = q1 + 1;
      ++idx;
    }
    std::sort(j_cands, j_cands + 2);
  }

  {
    int best_j = none, best_i = none;
    for (int j : j_cands) {
      if (j < 0 || !(black(0) && black(j - 1))) continue;
      for (int u : {g.at(j) - 1, g.at(j) + 1}) {
        const int i1 = fpos(u);
        const int i = i1 + 1;
        if (i1 >= 1 && i > 1 && i < j && black(i - 1)) {
          if (j < best_j || (j == best_j && i < best_i)) {
            best_j = j;
            best_i = i;
          }
        }
      }
      if (best_j != none) break;  // j candidates are ascending
    }
    if (best_j != none) {
      return {Scenario::FmS2,
              transposition_op(best_i, best_j, g.cursor),
              {{1, best_j - 1}, {best_i - 1, best_j}},
              2,
              false};
    }
  }

  if (anchor_edge_ok) {
    for (int j : j_cands) {
      if (j < 0 || j <= i0 || !black(j - 1)) continue;
      return {Scenario::FmS3,
              transposition_op(i0, j, g.cursor),
              {{0, i0}, {1, j - 1}},
              2,
              true};
    }
  }

  for (int j : j_cands) {
    if (j < 0 || !(black(0) && black(j - 1))) continue;
    const int i = trapped_black(g, {1, j - 1});
    return {Scenario::FmS4,
            transposition_op(i, j, g.cursor),
            {{1, j - 1}},
            1,
            false};
  }

  {
    int qs[2] = {fpos(front - 1), fpos(front + 1)};
    std::sort(qs, qs + 2);
    for (int q : qs) {
      if (q >= 3 && q <= frame + 1 && black(0) && black(q - 1)) {
        return {Scenario::FmS5, reversal_op(q, g.cursor), {{1, q}}, 1, false};
      }
    }
  }

  raise(ErrorCode::NoMatch,
        "no scenario for suffix starting with " + std::to_string(front));
}

std::string dump_graph(const BreakpointGraph& g) {
  std::string out;
  for (int b : g.black_edges) {
    out += "B " + std::to_string(b) + "\n";
  }
  for (const auto& [p, q] : g.grey_edges) {
    out += "G " + std::to_string(p) + " " + std::to_string(q) + "\n";
  }
  return out;
}

}  // namespace prefix_sort
