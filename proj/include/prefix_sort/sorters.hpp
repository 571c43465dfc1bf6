#pragma once
/**
 * @file sorters.hpp
 * @brief The three sorting heuristics: single steps and full-run drivers.
 */

#include "prefix_sort/breakpoint_graph.hpp"
#include "prefix_sort/permutation.hpp"

namespace prefix_sort {

enum class Algo { RT3, RT2, FM3 };

const char* algo_name(Algo a);      // "rt3" / "rt2" / "fm3"
Algo algo_from_name(const std::string& name);
Convention algo_convention(Algo a);

struct SorterState {
  Permutation perm;
  int cursor = 0;       // length of the sorted prefix (forward march only)
  int steps_taken = 0;
  int guard_limit = 0;  // 10n + 10; exceeding it signals a defect
};

// For FM3 the state starts with the initial march already applied.
SorterState make_sorter_state(const Permutation& p, Convention convention);

struct StepResult {
  PrefixOp op;
  Scenario scenario;
  int delta = 0;  // breakpoint decrease under the sorter's convention
};

// One matcher-chosen operation applied in place.  The permutation (or the
// unsorted suffix) must be non-empty; GuardExceeded after guard_limit steps.
StepResult rt3_step(SorterState& state);
StepResult rt2_step(SorterState& state);
StepResult fm3_step(SorterState& state);

SortTrace sort_rt3(const Permutation& p);
SortTrace sort_rt2(const Permutation& p);
SortTrace sort_fm3(const Permutation& p);
SortTrace sort_with(Algo algo, const Permutation& p);

}  // namespace prefix_sort
