#include "prefix_sort/sorters.hpp"

namespace prefix_sort {

const char* algo_name(Algo algo) {
  switch (algo) {
    case Algo::RT3: return "rt3";
    case Algo::RT2: return "rt2";
    case Algo::FM3: return "fm3";
  }
  raise(ErrorCode::UsageError, "unknown algorithm id");
}

Algo algo_from_name(const std::string& name) {
  if (name == "rt3") return Algo::RT3;
  if (name == "rt2") return Algo::RT2;
  if (name == "fm3") return Algo::FM3;
  raise(ErrorCode::UsageError,
        "unknown algorithm '" + name + "', expected rt3, rt2, or fm3");
}

Convention algo_convention(Algo algo) {
  return algo == Algo::FM3 ? Convention::ForwardMarch : Convention::Standard;
}

namespace {

void march(SorterState& state) {
  const int n = state.perm.n();
  while (state.cursor < n && state.perm[state.cursor + 1] == state.cursor + 1) {
    ++state.cursor;
  }
}

void check_guard(SorterState& state) {
  ++state.steps_taken;
  if (state.steps_taken > state.guard_limit) {
    raise(ErrorCode::GuardExceeded,
          "exceeded " + std::to_string(state.guard_limit) + " steps");
  }
}

}  // namespace

SorterState make_sorter_state(const Permutation& p, Convention convention) {
  if (!is_valid(p)) {
    raise(ErrorCode::PreconditionViolated, "malformed permutation");
  }
  SorterState state;
  state.perm = p;
  state.cursor = 0;
  state.steps_taken = 0;
  state.guard_limit = 10 * p.n() + 10;
  if (convention == Convention::ForwardMarch) march(state);
  return state;
}

StepResult rt3_step(SorterState& state) {
  check_guard(state);
  const int before = breakpoints_std(state.perm);
  const BreakpointGraph g = build_graph(state.perm, Convention::Standard, 0);
  const ScenarioMatch m = match_rt3(g);
  state.perm = apply_op(state.perm, m.op);
  return {m.op, m.scenario, before - breakpoints_std(state.perm)};
}

StepResult rt2_step(SorterState& state) {
  check_guard(state);
  const int before = breakpoints_std(state.perm);
  const BreakpointGraph g = build_graph(state.perm, Convention::Standard, 0);
  const ScenarioMatch m = match_rt2(g);
  state.perm = apply_op(state.perm, m.op);
  return {m.op, m.scenario, before - breakpoints_std(state.perm)};
}

StepResult fm3_step(SorterState& state) {
  check_guard(state);
  const int old_cursor = state.cursor;
  const int before = breakpoints_fm(state.perm, old_cursor);
  const BreakpointGraph g =
      build_graph(state.perm, Convention::ForwardMarch, old_cursor);
  const ScenarioMatch m = match_fm(g);
  state.perm = apply_op(state.perm, m.op);
  const int after = breakpoints_fm(state.perm, old_cursor);
  march(state);
  return {m.op, m.scenario, before - after};
}

namespace {

template <typename Step>
SortTrace run_sort(const Permutation& p, Convention convention, Step step) {
  SorterState state = make_sorter_state(p, convention);
  SortTrace trace;
  while (!is_sorted(state.perm)) {
    const StepResult r = step(state);
    trace.ops.push_back(r.op);
    trace.scenarios.push_back(r.scenario);
    trace.deltas.push_back(r.delta);
  }
  return trace;
}

}  // namespace

SortTrace sort_rt3(const Permutation& p) {
  return run_sort(p, Convention::Standard, rt3_step);
}

SortTrace sort_rt2(const Permutation& p) {
  return run_sort(p, Convention::Standard, rt2_step);
}

SortTrace sort_fm3(const Permutation& p) {
  return run_sort(p, Convention::ForwardMarch, fm3_step);
}

SortTrace sort_with(Algo algo, const Permutation& p) {
  switch (algo) {
    case Algo::RT3: return sort_rt3(p);
    case Algo::RT2: return sort_rt2(p);
    case Algo::FM3: return sort_fm3(p);
  }
  raise(ErrorCode::UsageError, "unknown algorithm id");
}

}  // namespace prefix_sort
