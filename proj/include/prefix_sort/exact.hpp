#pragma once
/**
 * @file exact.hpp
 * @brief Exhaustive BFS distance oracle over selectable operation sets.
 */

#include <cstdint>
#include <string>
#include <vector>

#include "prefix_sort/permutation.hpp"

namespace prefix_sort {

inline constexpr uint8_t kReversalFlag = 1;
inline constexpr uint8_t kTranspositionFlag = 2;
inline constexpr uint8_t kTransreversalFlag = 4;

// Non-empty subset of the three operation kinds.  Canonical names:
// "r" = {reversal}, "rt" = {reversal, transposition},
// "rtr" = {reversal, transreversal}, "all" = everything.
struct OpSet {
  uint8_t flags = kReversalFlag;

  bool has(OpKind kind) const;
  std::string name() const;
  static OpSet from_name(const std::string& name);  // UsageError otherwise
  bool operator==(const OpSet&) const = default;
};

inline constexpr OpSet opset_r{kReversalFlag};
inline constexpr OpSet opset_rt{kReversalFlag | kTranspositionFlag};
inline constexpr OpSet opset_rtr{kReversalFlag | kTransreversalFlag};
inline constexpr OpSet opset_all{kReversalFlag | kTranspositionFlag |
                                 kTransreversalFlag};

// One entry per legal op, reversals first (j ascending), then transpositions
// and transreversals (j, then k ascending).  With inverse = true each entry
// is the preimage under that op instead: reversals are self-inverse, the
// transposition (j,k) inverts to (k-j+1, k), and the transreversal inverse
// cuts positions k-j+1..k-1, reverses the block, and pastes it at the front.
std::vector<Permutation> neighbors(const Permutation& p, OpSet ops,
                                   bool inverse);

// Lexicographic rank of the middle values (identity = 0), and its inverse.
uint64_t lexicographic_rank(const Permutation& p);
Permutation permutation_of_rank(int n, uint64_t rank);

// Forward BFS with early exit at the identity.  Requires n <= 11
// (SizeTooLarge); worst-case queries at the top sizes visit the whole space.
int exact_distance(const Permutation& p, OpSet ops);

// Dense per-rank tables for all n! states.  Requires n <= 9 (SizeTooLarge).
// r_min[s] is the fewest reversals used by any optimal sort of s.
struct DistanceTable {
  int n = 0;
  OpSet opset;
  std::vector<uint8_t> dist;
  std::vector<uint8_t> r_min;

  uint8_t distance_of(const Permutation& p) const;
  uint8_t r_min_of(const Permutation& p) const;
  int diameter() const;
};

DistanceTable distance_table(int n, OpSet ops);
int diameter(int n, OpSet ops);

// Binary layout: 16-byte header (magic "PFXD", version u8 = 1, n u8, opset
// flags u8, zero padding), then n! distance bytes in rank order.
void write_table(const DistanceTable& table, const std::string& path);
// Reads header + distances; r_min is not stored and comes back empty.
DistanceTable read_table(const std::string& path);

}  // namespace prefix_sort
