#pragma once
/**
 * @file permutation.hpp
 * @brief Sentinel-framed permutations, the three prefix operations,
 *        breakpoint counting under both conventions, and sort traces.
 */

#include <string>
#include <vector>

#include "prefix_sort/errors.hpp"

namespace prefix_sort {

// Sentinel-framed permutation: values[0] = 0, values[n+1] = n+1, and
// values[1..n] is a permutation of {1..n}.  n = 0 gives [0, 1].
struct Permutation {
  std::vector<int> values;

  int n() const { return static_cast<int>(values.size()) - 2; }
  int operator[](int i) const { return values[static_cast<size_t>(i)]; }
  bool operator==(const Permutation&) const = default;
};

// Builds the framed permutation from middle values (1-based positions in
// error messages).  Raises DuplicateValue / OutOfRange naming the offending
// position.
Permutation make_permutation(const std::vector<int>& middle_values);
Permutation identity_permutation(int n);
bool is_sorted(const Permutation& p);
// True when the frame is intact and values[1..n] is a permutation of 1..n.
bool is_valid(const Permutation& p);
// Middle values as text, space separated ("3 1 2"; empty string for n = 0).
std::string to_text(const Permutation& p);

enum class OpKind { Reversal, Transposition, Transreversal };

// Prefix operation inside the frame that starts after an already-sorted
// prefix of length `offset`.  j and k are 1-based frame positions; frame
// position t is absolute position offset + t, and the frame holds
// n' = n - offset middle elements.  k is 0 for reversals.
struct PrefixOp {
  OpKind kind = OpKind::Reversal;
  int j = 0;
  int k = 0;
  int offset = 0;
  bool operator==(const PrefixOp&) const = default;
};

PrefixOp reversal_op(int j, int offset = 0);
PrefixOp transposition_op(int j, int k, int offset = 0);
PrefixOp transreversal_op(int j, int k, int offset = 0);

// Reverses frame positions 1..j-1.  Requires 3 <= j <= n'+1; j = 2 is
// DegenerateMove, anything else outside the range is IndexOutOfRange.
Permutation prefix_reversal(const Permutation& p, int j, int offset = 0);
// Moves frame positions j..k-1 in front of 1..j-1.  Requires 2 <= j <= n',
// j < k <= n'+1; k = j is DegenerateMove.
Permutation prefix_transposition(const Permutation& p, int j, int k,
                                 int offset = 0);
// Like the transposition but the moved-back block 1..j-1 is reversed.
// Requires 2 <= j <= n', j < k <= n'+1.
Permutation prefix_transreversal(const Permutation& p, int j, int k,
                                 int offset = 0);
Permutation apply_op(const Permutation& p, const PrefixOp& op);

// Standard convention: position 1 always counts, positions i in [2, n+1]
// count when |values[i] - values[i-1]| != 1.  Identity has 1.
int breakpoints_std(const Permutation& p);
// Forward-march convention: positions i in [cursor, n] count when
// |values[i] - values[i+1]| != 1.  Requires values[0..cursor] = 0..cursor.
// Identity has 0.
int breakpoints_fm(const Permutation& p, int cursor);
// Junction between values[i-1] and values[i] under the standard convention.
bool std_breakpoint_at(const Permutation& p, int i);
// Junction between values[i] and values[i+1] under the forward-march
// convention.
bool fm_breakpoint_at(const Permutation& p, int i);

enum class Scenario {
  Rt3S1,
  Rt3S2,
  Rt3S3,
  Rt3S4,
  Rt2S4,
  FmS1,
  FmS2,
  FmS3,
  FmS4,
  FmS5,
};

// "RT3-S1".."RT3-S4", "RT2-S4", "S1".."S5".
const char* scenario_label(Scenario s);

// Ops with per-op scenario labels and breakpoint deltas; the three vectors
// always have equal length.
struct SortTrace {
  std::vector<PrefixOp> ops;
  std::vector<Scenario> scenarios;
  std::vector<int> deltas;

  int total_ops() const { return static_cast<int>(ops.size()); }
};

// Applies ops in order, honoring per-op offsets.  A failing op is re-raised
// with its 1-based step index prefixed to the message.
Permutation apply_ops(const Permutation& p, const std::vector<PrefixOp>& ops);
Permutation apply_trace(const Permutation& p, const SortTrace& trace);

}  // namespace prefix_sort
