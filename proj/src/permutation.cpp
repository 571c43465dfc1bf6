#include "prefix_sort/permutation.hpp"

#include <algorithm>
#include <cstdlib>

namespace prefix_sort {

namespace {

int abs_diff(int a, int b) { return a > b ? a - b : b - a; }

void check_offset(const Permutation& p, int offset) {
  if (offset < 0 || offset > p.n()) {
    raise(ErrorCode::IndexOutOfRange,
          "offset " + std::to_string(offset) + " outside 0.." +
              std::to_string(p.n()));
  }
}

}  // namespace

Permutation make_permutation(const std::vector<int>& middle_values) {
  const int n = static_cast<int>(middle_values.size());
  Permutation p;
  p.values.reserve(static_cast<size_t>(n) + 2);
  p.values.push_back(0);
  std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
  for (int i = 0; i < n; ++i) {
    const int v = middle_values[static_cast<size_t>(i)];
    if (v < 1 || v > n) {
      raise(ErrorCode::OutOfRange,
            "value " + std::to_string(v) + " at position " +
                std::to_string(i + 1) + " outside 1.." + std::to_string(n));
    }
    if (seen[static_cast<size_t>(v)]) {
      raise(ErrorCode::DuplicateValue,
            "value " + std::to_string(v) + " repeated at position " +
                std::to_string(i + 1));
    }
    seen[static_cast<size_t>(v)] = 1;
    p.values.push_back(v);
  }
  p.values.push_back(n + 1);
  return p;
}

Permutation identity_permutation(int n) {
  Permutation p;
  p.values.resize(static_cast<size_t>(n) + 2);
  for (int i = 0; i <= n + 1; ++i) p.values[static_cast<size_t>(i)] = i;
  return p;
}

bool is_sorted(const Permutation& p) {
  for (int i = 0; i < static_cast<int>(p.values.size()); ++i) {
    if (p[i] != i) return false;
  }
  return true;
}

bool is_valid(const Permutation& p) {
  const int n = p.n();
  if (n < 0) return false;
  if (p[0] != 0 || p[n + 1] != n + 1) return false;
  std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i) {
    const int v = p[i];
    if (v < 1 || v > n || seen[static_cast<size_t>(v)]) return false;
    seen[static_cast<size_t>(v)] = 1;
  }
  return true;
}

std::string to_text(const Permutation& p) {
  std::string out;
  for (int i = 1; i <= p.n(); ++i) {
    if (i > 1) out += ' ';
    out += std::to_string(p[i]);
  }
  return out;
}

PrefixOp reversal_op(int j, int offset) {
  return PrefixOp{OpKind::Reversal, j, 0, offset};
}

PrefixOp transposition_op(int j, int k, int offset) {
  return PrefixOp{OpKind::Transposition, j, k, offset};
}

PrefixOp transreversal_op(int j, int k, int offset) {
  return PrefixOp{OpKind::Transreversal, j, k, offset};
}

Permutation prefix_reversal(const Permutation& p, int j, int offset) {
  check_offset(p, offset);
  const int frame = p.n() - offset;
  if (j == 2) {
    raise(ErrorCode::DegenerateMove, "reversal j=2 moves a single element");
  }
  if (j < 3 || j > frame + 1) {
    raise(ErrorCode::IndexOutOfRange,
          "reversal j=" + std::to_string(j) + " outside 3.." +
              std::to_string(frame + 1) + " for frame size " +
              std::to_string(frame));
  }
  Permutation out = p;
  std::reverse(out.values.begin() + offset + 1, out.values.begin() + offset + j);
  return out;
}

Permutation prefix_transposition(const Permutation& p, int j, int k,
                                 int offset) {
  check_offset(p, offset);
  const int frame = p.n() - offset;
  if (k == j) {
    raise(ErrorCode::DegenerateMove,
          "transposition k=j=" + std::to_string(j) + " is the identity");
  }
  if (j < 2 || j > frame || k < j || k > frame + 1) {
    raise(ErrorCode::IndexOutOfRange,
          "transposition j=" + std::to_string(j) + " k=" + std::to_string(k) +
              " outside 2<=j<=" + std::to_string(frame) + ", j<k<=" +
              std::to_string(frame + 1));
  }
  Permutation out = p;
  std::rotate(out.values.begin() + offset + 1, out.values.begin() + offset + j,
              out.values.begin() + offset + k);
  return out;
}

Permutation prefix_transreversal(const Permutation& p, int j, int k,
                                 int offset) {
  check_offset(p, offset);
  const int frame = p.n() - offset;
  if (j < 2 || j > frame || k <= j || k > frame + 1) {
    raise(ErrorCode::IndexOutOfRange,
          "transreversal j=" + std::to_string(j) + " k=" + std::to_string(k) +
              " outside 2<=j<=" + std::to_string(frame) + ", j<k<=" +
              std::to_string(frame + 1));
  }
  Permutation out = p;
  std::reverse(out.values.begin() + offset + 1, out.values.begin() + offset + j);
  std::rotate(out.values.begin() + offset + 1, out.values.begin() + offset + j,
              out.values.begin() + offset + k);
  return out;
}

Permutation apply_op(const Permutation& p, const PrefixOp& op) {
  switch (op.kind) {
    case OpKind::Reversal:
      return prefix_reversal(p, op.j, op.offset);
    case OpKind::Transposition:
      return prefix_transposition(p, op.j, op.k, op.offset);
    case OpKind::Transreversal:
      return prefix_transreversal(p, op.j, op.k, op.offset);
  }
  raise(ErrorCode::PreconditionViolated, "unknown op kind");
}

bool std_breakpoint_at(const Permutation& p, int i) {
  if (i == 1) return true;
  if (i < 2 || i > p.n() + 1) {
    raise(ErrorCode::IndexOutOfRange,
          "breakpoint position " + std::to_string(i) + " outside 1.." +
              std::to_string(p.n() + 1));
  }
  return abs_diff(p[i], p[i - 1]) != 1;
}

bool fm_breakpoint_at(const Permutation& p, int i) {
  if (i < 0 || i > p.n()) {
    raise(ErrorCode::IndexOutOfRange,
          "breakpoint position " + std::to_string(i) + " outside 0.." +
              std::to_string(p.n()));
  }
  return abs_diff(p[i], p[i + 1]) != 1;
}

int breakpoints_std(const Permutation& p) {
  int b = 1;
  for (int i = 2; i <= p.n() + 1; ++i) {
    if (abs_diff(p[i], p[i - 1]) != 1) ++b;
  }
  return b;
}

int breakpoints_fm(const Permutation& p, int cursor) {
  if (cursor < 0 || cursor > p.n()) {
    raise(ErrorCode::IndexOutOfRange,
          "cursor " + std::to_string(cursor) + " outside 0.." +
              std::to_string(p.n()));
  }
  for (int i = 0; i <= cursor; ++i) {
    if (p[i] != i) {
      raise(ErrorCode::CursorNotSorted,
            "prefix is not 0.." + std::to_string(cursor) + " at position " +
                std::to_string(i));
    }
  }
  int b = 0;
  for (int i = cursor; i <= p.n(); ++i) {
    if (abs_diff(p[i], p[i + 1]) != 1) ++b;
  }
  return b;
}

const char* scenario_label(Scenario s) {
  switch (s) {
    case Scenario::Rt3S1: return "RT3-S1";
    case Scenario::Rt3S2: return "RT3-S2";
    case Scenario::Rt3S3: return "RT3-S3";
    case Scenario::Rt3S4: return "RT3-S4";
    case Scenario::Rt2S4: return "RT2-S4";
    case Scenario::FmS1: return "S1";
    case Scenario::FmS2: return "S2";
    case Scenario::FmS3: return "S3";
    case Scenario::FmS4: return "S4";
    case Scenario::FmS5: return "S5";
  }
  return "?";
}

Permutation apply_ops(const Permutation& p, const std::vector<PrefixOp>& ops) {
  Permutation cur = p;
  for (size_t i = 0; i < ops.size(); ++i) {
    try {
      cur = apply_op(cur, ops[i]);
    } catch (const Error& e) {
      raise(e.code(), "step " + std::to_string(i + 1) + ": " + e.message());
    }
  }
  return cur;
}

Permutation apply_trace(const Permutation& p, const SortTrace& trace) {
  return apply_ops(p, trace.ops);
}

}  // namespace prefix_sort
