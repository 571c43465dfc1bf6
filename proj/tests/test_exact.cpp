#include <filesystem>
#include <vector>

#include "doctest.h"
#include "prefix_sort/exact.hpp"
#include "test_support.hpp"

using namespace prefix_sort;
using test_support::error_code_of;
using test_support::frame;
using test_support::perm;
using test_support::temp_path;
using test_support::write_text_file;

TEST_CASE("operation set names round-trip") {
  for (const char* name : {"r", "rt", "rtr", "all"}) {
    CHECK(OpSet::from_name(name).name() == name);
  }
  CHECK(error_code_of([] { OpSet::from_name("xyz"); }) ==
        ErrorCode::UsageError);
  CHECK(error_code_of([] { OpSet{kTranspositionFlag}.name(); }) ==
        ErrorCode::UsageError);
}

TEST_CASE("operation set membership follows the flags") {
  CHECK(opset_rt.has(OpKind::Reversal));
  CHECK(opset_rt.has(OpKind::Transposition));
  CHECK_FALSE(opset_rt.has(OpKind::Transreversal));
  CHECK(opset_rtr.has(OpKind::Transreversal));
  CHECK_FALSE(opset_r.has(OpKind::Transposition));
  CHECK(opset_all.has(OpKind::Transreversal));
}

TEST_CASE("neighbors enumerates one entry per legal op") {
  const Permutation p = perm({2, 4, 1, 3});
  CHECK(neighbors(p, opset_rt, false).size() == 9);
  CHECK(neighbors(p, opset_r, false).size() == 3);
  CHECK(neighbors(p, opset_all, false).size() == 15);
}

TEST_CASE("neighbors applies the ops in canonical order") {
  const std::vector<Permutation> out =
      neighbors(frame({0, 2, 1, 3}), opset_rt, false);
  REQUIRE(out.size() == 2);
  CHECK(out[0].values == std::vector<int>{0, 1, 2, 3});  // reversal j=3
  CHECK(out[1].values == std::vector<int>{0, 1, 2, 3});  // transposition 2,3
}

TEST_CASE("inverse neighbors undo their forward op") {
  const Permutation p = perm({3, 1, 4, 2});
  const std::vector<Permutation> inv = neighbors(p, opset_all, true);
  size_t idx = 0;
  for (int j = 3; j <= 5; ++j) {
    CHECK(prefix_reversal(inv[idx++], j) == p);
  }
  for (int j = 2; j <= 4; ++j) {
    for (int k = j + 1; k <= 5; ++k) {
      CHECK(prefix_transposition(inv[idx++], j, k) == p);
    }
  }
  for (int j = 2; j <= 4; ++j) {
    for (int k = j + 1; k <= 5; ++k) {
      CHECK(prefix_transreversal(inv[idx++], j, k) == p);
    }
  }
  CHECK(idx == inv.size());
}

TEST_CASE("lexicographic_rank orders permutations by their values") {
  CHECK(lexicographic_rank(identity_permutation(5)) == 0);
  CHECK(lexicographic_rank(frame({0, 2, 1, 3})) == 1);
  CHECK(lexicographic_rank(frame({0, 3, 2, 1, 4})) == 5);
  for (uint64_t r = 0; r < 24; ++r) {
    CHECK(lexicographic_rank(permutation_of_rank(4, r)) == r);
  }
  CHECK(error_code_of([] { permutation_of_rank(3, 6); }) ==
        ErrorCode::OutOfRange);
}

TEST_CASE("exact_distance answers small frozen cases") {
  CHECK(exact_distance(identity_permutation(4), opset_rt) == 0);
  CHECK(exact_distance(frame({0, 3, 2, 1, 4}), opset_rt) == 1);
  CHECK(exact_distance(frame({0, 2, 1, 4, 3, 5}), opset_rt) == 2);
  CHECK(exact_distance(frame({0, 2, 1, 4, 3, 5}), opset_r) == 3);
}

TEST_CASE("exact_distance never beats the richer op set") {
  for (uint64_t r = 0; r < 120; ++r) {
    const Permutation p = permutation_of_rank(5, r);
    const int d_r = exact_distance(p, opset_r);
    const int d_rt = exact_distance(p, opset_rt);
    const int d_all = exact_distance(p, opset_all);
    CHECK(d_all <= d_rt);
    CHECK(d_rt <= d_r);
  }
}

TEST_CASE("exact_distance rejects oversized inputs") {
  CHECK(error_code_of([] {
          exact_distance(identity_permutation(12), opset_rt);
        }) == ErrorCode::SizeTooLarge);
}

TEST_CASE("distance_table agrees with per-state searches") {
  const DistanceTable table = distance_table(4, opset_rt);
  CHECK(table.n == 4);
  CHECK(table.opset == opset_rt);
  REQUIRE(table.dist.size() == 24);
  for (uint64_t r = 0; r < 24; ++r) {
    const Permutation p = permutation_of_rank(4, r);
    CHECK(table.distance_of(p) == exact_distance(p, opset_rt));
  }
}

TEST_CASE("distance_table tracks the fewest reversals over optimal sorts") {
  const DistanceTable small = distance_table(3, opset_rt);
  CHECK(small.r_min_of(frame({0, 3, 2, 1, 4})) == 1);
  CHECK(small.r_min_of(frame({0, 2, 3, 1, 4})) == 0);
  const DistanceTable table = distance_table(4, opset_rt);
  CHECK(table.r_min_of(identity_permutation(4)) == 0);
  for (uint64_t r = 0; r < 24; ++r) {
    const Permutation p = permutation_of_rank(4, r);
    CHECK(table.r_min_of(p) <= table.distance_of(p));
  }
}

TEST_CASE("diameter shrinks as the op set grows") {
  CHECK(diameter(3, opset_r) == 3);
  CHECK(diameter(1, opset_r) == 0);
  CHECK(diameter(4, opset_all) <= diameter(4, opset_rt));
  CHECK(diameter(4, opset_rt) <= diameter(4, opset_r));
}

TEST_CASE("distance_table rejects oversized inputs and size mismatches") {
  CHECK(error_code_of([] { distance_table(10, opset_rt); }) ==
        ErrorCode::SizeTooLarge);
  const DistanceTable table = distance_table(3, opset_rt);
  CHECK(error_code_of([&] {
          table.distance_of(identity_permutation(4));
        }) == ErrorCode::PreconditionViolated);
}

TEST_CASE("tables survive a file round trip without r_min") {
  const DistanceTable table = distance_table(4, opset_rtr);
  const std::string path = temp_path("table.bin");
  write_table(table, path);
  const DistanceTable loaded = read_table(path);
  CHECK(loaded.n == 4);
  CHECK(loaded.opset == opset_rtr);
  CHECK(loaded.dist == table.dist);
  CHECK(loaded.r_min.empty());
  CHECK(loaded.diameter() == table.diameter());
  CHECK(error_code_of([&] {
          loaded.r_min_of(identity_permutation(4));
        }) == ErrorCode::PreconditionViolated);
  std::filesystem::remove(path);
}

TEST_CASE("read_table rejects foreign and truncated files") {
  const std::string bad = temp_path("bad_table.bin");
  write_text_file(bad, "not a table at all");
  CHECK(error_code_of([&] { read_table(bad); }) == ErrorCode::IoError);
  std::filesystem::remove(bad);

  const DistanceTable table = distance_table(4, opset_rt);
  const std::string path = temp_path("short_table.bin");
  write_table(table, path);
  std::filesystem::resize_file(path, 16 + 10);
  CHECK(error_code_of([&] { read_table(path); }) == ErrorCode::IoError);
  std::filesystem::remove(path);

  CHECK(error_code_of([] {
          read_table(temp_path("missing_table.bin"));
        }) == ErrorCode::IoError);
}
