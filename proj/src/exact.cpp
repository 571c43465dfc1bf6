#include "prefix_sort/exact.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <utility>

namespace prefix_sort {

bool OpSet::has(OpKind kind) const {
  switch (kind) {
    case OpKind::Reversal: return (flags & kReversalFlag) != 0;
    case OpKind::Transposition: return (flags & kTranspositionFlag) != 0;
    case OpKind::Transreversal: return (flags & kTransreversalFlag) != 0;
  }
  return false;
}

std::string OpSet::name() const {
  if (*this == opset_r) return "r";
  if (*this == opset_rt) return "rt";
  if (*this == opset_rtr) return "rtr";
  if (*this == opset_all) return "all";
  raise(ErrorCode::UsageError,
        "operation set flags " + std::to_string(flags) + " have no name");
}

OpSet OpSet::from_name(const std::string& name) {
  if (name == "r") return opset_r;
  if (name == "rt") return opset_rt;
  if (name == "rtr") return opset_rtr;
  if (name == "all") return opset_all;
  raise(ErrorCode::UsageError,
        "unknown operation set '" + name + "', expected r, rt, rtr, or all");
}

namespace {

// Enumerates every legal op for size n in canonical order: reversals by j,
// then transpositions and transreversals by (j, k).  k is 0 for reversals.
template <typename Fn>
void for_each_op(int n, OpSet ops, Fn&& fn) {
  if (ops.has(OpKind::Reversal)) {
    for (int j = 3; j <= n + 1; ++j) fn(OpKind::Reversal, j, 0);
  }
  for (const OpKind kind : {OpKind::Transposition, OpKind::Transreversal}) {
    if (!ops.has(kind)) continue;
    for (int j = 2; j <= n; ++j) {
      for (int k = j + 1; k <= n + 1; ++k) fn(kind, j, k);
    }
  }
}

Permutation inverse_of(const Permutation& p, OpKind kind, int j, int k) {
  switch (kind) {
    case OpKind::Reversal:
      return prefix_reversal(p, j);
    case OpKind::Transposition:
      return prefix_transposition(p, k - j + 1, k);
    case OpKind::Transreversal: {
      Permutation q = p;
      const auto first = q.values.begin() + 1;
      std::rotate(first, first + (k - j), first + (k - 1));
      std::reverse(first, first + (j - 1));
      return q;
    }
  }
  raise(ErrorCode::UsageError, "unknown operation kind");
}

Permutation forward_of(const Permutation& p, OpKind kind, int j, int k) {
  switch (kind) {
    case OpKind::Reversal: return prefix_reversal(p, j);
    case OpKind::Transposition: return prefix_transposition(p, j, k);
    case OpKind::Transreversal: return prefix_transreversal(p, j, k);
  }
  raise(ErrorCode::UsageError, "unknown operation kind");
}

uint64_t factorial(int n) {
  uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<uint64_t>(i);
  return f;
}

}  // namespace

std::vector<Permutation> neighbors(const Permutation& p, OpSet ops,
                                   bool inverse) {
  std::vector<Permutation> out;
  for_each_op(p.n(), ops, [&](OpKind kind, int j, int k) {
    out.push_back(inverse ? inverse_of(p, kind, j, k)
                          : forward_of(p, kind, j, k));
  });
  return out;
}

uint64_t lexicographic_rank(const Permutation& p) {
  const int n = p.n();
  uint64_t rank = 0;
  uint64_t place = factorial(n > 0 ? n - 1 : 0);
  for (int i = 1; i <= n; ++i) {
    int smaller = 0;
    for (int t = i + 1; t <= n; ++t) {
      if (p[t] < p[i]) ++smaller;
    }
    rank += static_cast<uint64_t>(smaller) * place;
    if (i < n) place /= static_cast<uint64_t>(n - i);
  }
  return rank;
}

Permutation permutation_of_rank(int n, uint64_t rank) {
  if (n < 0) {
    raise(ErrorCode::PreconditionViolated, "negative size");
  }
  if (rank >= factorial(n)) {
    raise(ErrorCode::OutOfRange,
          "rank " + std::to_string(rank) + " out of range for n = " +
              std::to_string(n));
  }
  std::vector<int> remaining;
  remaining.reserve(static_cast<size_t>(n));
  for (int v = 1; v <= n; ++v) remaining.push_back(v);
  std::vector<int> middle;
  middle.reserve(static_cast<size_t>(n));
  uint64_t place = factorial(n > 0 ? n - 1 : 0);
  for (int i = 0; i < n; ++i) {
    const size_t idx = static_cast<size_t>(rank / place);
    rank %= place;
    middle.push_back(remaining[idx]);
    remaining.erase(remaining.begin() + static_cast<long>(idx));
    if (i + 1 < n) place /= static_cast<uint64_t>(n - 1 - i);
  }
  return make_permutation(middle);
}

int exact_distance(const Permutation& p, OpSet ops) {
  const int n = p.n();
  if (n > 11) {
    raise(ErrorCode::SizeTooLarge,
          "exact distance supports n up to 11, got " + std::to_string(n));
  }
  const uint64_t start = lexicographic_rank(p);
  if (start == 0) return 0;
  const size_t states = static_cast<size_t>(factorial(n));
  std::vector<bool> visited(states, false);
  visited[static_cast<size_t>(start)] = true;
  std::vector<uint32_t> frontier{static_cast<uint32_t>(start)};
  std::vector<uint32_t> next;
  int depth = 0;
  while (!frontier.empty()) {
    ++depth;
    next.clear();
    for (const uint32_t rank : frontier) {
      const Permutation cur = permutation_of_rank(n, rank);
      bool done = false;
      for_each_op(n, ops, [&](OpKind kind, int j, int k) {
        if (done) return;
        const uint64_t r = lexicographic_rank(forward_of(cur, kind, j, k));
        if (r == 0) {
          done = true;
          return;
        }
        if (!visited[static_cast<size_t>(r)]) {
          visited[static_cast<size_t>(r)] = true;
          next.push_back(static_cast<uint32_t>(r));
        }
      });
      if (done) return depth;
    }
    frontier.swap(next);
  }
  raise(ErrorCode::PreconditionViolated,
        "identity unreachable, operation set is broken");
}

DistanceTable distance_table(int n, OpSet ops) {
  if (n > 9) {
    raise(ErrorCode::SizeTooLarge,
          "distance table supports n up to 9, got " + std::to_string(n));
  }
  const size_t states = static_cast<size_t>(factorial(n));
  DistanceTable table;
  table.n = n;
  table.opset = ops;
  table.dist.assign(states, 0xFF);
  table.dist[0] = 0;
  std::vector<uint32_t> frontier{0};
  std::vector<uint32_t> next;
  uint8_t depth = 0;
  while (!frontier.empty()) {
    ++depth;
    next.clear();
    for (const uint32_t rank : frontier) {
      const Permutation cur = permutation_of_rank(n, rank);
      for_each_op(n, ops, [&](OpKind kind, int j, int k) {
        const uint64_t r = lexicographic_rank(inverse_of(cur, kind, j, k));
        if (table.dist[static_cast<size_t>(r)] == 0xFF) {
          table.dist[static_cast<size_t>(r)] = depth;
          next.push_back(static_cast<uint32_t>(r));
        }
      });
    }
    frontier.swap(next);
  }
  for (size_t s = 0; s < states; ++s) {
    if (table.dist[s] == 0xFF) {
      raise(ErrorCode::PreconditionViolated,
            "state " + std::to_string(s) + " unreachable");
    }
  }

  // Fewest reversals over optimal sorts: relax states level by level, since
  // every optimal first move lands exactly one level closer to the identity.
  table.r_min.assign(states, 0xFF);
  table.r_min[0] = 0;
  std::vector<std::vector<uint32_t>> levels;
  for (size_t s = 0; s < states; ++s) {
    const uint8_t d = table.dist[s];
    if (levels.size() <= d) levels.resize(static_cast<size_t>(d) + 1);
    levels[d].push_back(static_cast<uint32_t>(s));
  }
  for (int d = 1; d < static_cast<int>(levels.size()); ++d) {
    for (const uint32_t rank : levels[d]) {
      const Permutation cur = permutation_of_rank(n, rank);
      uint8_t best = 0xFF;
      for_each_op(n, ops, [&](OpKind kind, int j, int k) {
        const uint64_t r = lexicographic_rank(forward_of(cur, kind, j, k));
        if (table.dist[static_cast<size_t>(r)] + 1 != d) return;
        const uint8_t cost = static_cast<uint8_t>(
            table.r_min[static_cast<size_t>(r)] +
            (kind == OpKind::Reversal ? 1 : 0));
        best = std::min(best, cost);
      });
      table.r_min[static_cast<size_t>(rank)] = best;
    }
  }
  return table;
}

uint8_t DistanceTable::distance_of(const Permutation& p) const {
  if (p.n() != n) {
    raise(ErrorCode::PreconditionViolated,
          "permutation size " + std::to_string(p.n()) +
              " does not match table size " + std::to_string(n));
  }
  return dist[static_cast<size_t>(lexicographic_rank(p))];
}

uint8_t DistanceTable::r_min_of(const Permutation& p) const {
  if (r_min.empty()) {
    raise(ErrorCode::PreconditionViolated,
          "table has no reversal-minimum data");
  }
  if (p.n() != n) {
    raise(ErrorCode::PreconditionViolated,
          "permutation size " + std::to_string(p.n()) +
              " does not match table size " + std::to_string(n));
  }
  return r_min[static_cast<size_t>(lexicographic_rank(p))];
}

int DistanceTable::diameter() const {
  uint8_t best = 0;
  for (const uint8_t d : dist) best = std::max(best, d);
  return best;
}

int diameter(int n, OpSet ops) { return distance_table(n, ops).diameter(); }

void write_table(const DistanceTable& table, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    raise(ErrorCode::IoError, "cannot open '" + path + "' for writing");
  }
  std::array<char, 16> header{};
  header[0] = 'P';
  header[1] = 'F';
  header[2] = 'X';
  header[3] = 'D';
  header[4] = 1;
  header[5] = static_cast<char>(table.n);
  header[6] = static_cast<char>(table.opset.flags);
  out.write(header.data(), header.size());
  out.write(reinterpret_cast<const char*>(table.dist.data()),
            static_cast<std::streamsize>(table.dist.size()));
  if (!out) {
    raise(ErrorCode::IoError, "short write to '" + path + "'");
  }
}

DistanceTable read_table(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    raise(ErrorCode::IoError, "cannot open '" + path + "'");
  }
  std::array<char, 16> header{};
  in.read(header.data(), header.size());
  if (!in || header[0] != 'P' || header[1] != 'F' || header[2] != 'X' ||
      header[3] != 'D') {
    raise(ErrorCode::IoError, "'" + path + "' is not a distance table");
  }
  if (header[4] != 1) {
    raise(ErrorCode::IoError,
          "unsupported table version " + std::to_string(header[4]));
  }
  DistanceTable table;
  table.n = static_cast<int>(header[5]);
  table.opset = OpSet{static_cast<uint8_t>(header[6])};
  table.opset.name();  // rejects flag bytes that name no operation set
  const size_t states = static_cast<size_t>(factorial(table.n));
  table.dist.resize(states);
  in.read(reinterpret_cast<char*>(table.dist.data()),
          static_cast<std::streamsize>(states));
  if (static_cast<size_t>(in.gcount()) != states) {
    raise(ErrorCode::IoError, "'" + path + "' is truncated");
  }
  return table;
}

}  // namespace prefix_sort
