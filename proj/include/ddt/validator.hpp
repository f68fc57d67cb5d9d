#pragma once

#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ddt/model.hpp"

namespace ddt {

struct Violation {
  int trip;  // index into schedule.trips, -1 for schedule-level problems
  std::string what;
};

struct Validation {
  bool feasible = false;
  Rat duration;
  std::vector<Violation> violations;
};

namespace detail {
inline std::string vtx_str(const Vertex& v) {
  if (v.y == Rat(0)) return v.x.str();
  return "(" + v.x.str() + "," + v.y.str() + ")";
}
}  // namespace detail

/// Checks a schedule against the feasibility conditions: endpoint match
/// with the package, continuity of the route, area membership, empty-phase
/// readiness, the handover timing inequality, and (by default) the
/// once-per-agent normal form. Never throws on bad input; every failed
/// condition is reported as a violation.
inline Validation validate(const Instance& inst, const Schedule& sched,
                           bool enforce_once_per_agent = true) {
  Validation out;
  auto fail = [&](int trip, const std::string& what) {
    out.violations.push_back({trip, what});
  };
  const int m = static_cast<int>(sched.trips.size());
  if (m == 0) {
    if (inst.source == inst.target) {
      out.feasible = true;
      out.duration = Rat(0);
      return out;
    }
    fail(-1, "empty schedule but s != y");
    return out;
  }
  if (sched.trips.front().pickup != inst.source)
    fail(0, "first pickup is not s");
  if (sched.trips.back().dropoff != inst.target)
    fail(m - 1, "last dropoff is not y");

  std::set<std::string> used;
  Rat prev_arrival(0);
  bool have_prev = false;
  bool timing_ok = true;
  for (int i = 0; i < m; ++i) {
    const Trip& tr = sched.trips[i];
    const Agent* a = find_agent(inst, tr.agent);
    if (!a) {
      fail(i, "unknown agent id " + tr.agent);
      timing_ok = false;
      have_prev = false;
      continue;
    }
    if (enforce_once_per_agent && !used.insert(tr.agent).second)
      fail(i, "agent " + tr.agent + " used more than once");
    for (const Vertex* v : {&tr.pickup, &tr.dropoff})
      if (!graph_has_vertex(inst, *v))
        fail(i, "vertex " + detail::vtx_str(*v) + " not in graph");
    if (i > 0 && tr.pickup != sched.trips[i - 1].dropoff)
      fail(i, "pickup does not chain from previous dropoff");
    auto tt = travel_time(*a, tr.pickup, tr.dropoff);
    if (!tt) {
      fail(i, "trip endpoints outside area of agent " + tr.agent);
      timing_ok = false;
      have_prev = false;
      continue;
    }
    if (tr.t < Rat(0)) fail(i, "negative pickup time");
    auto ready = ready_time(inst, *a, tr.pickup);
    if (ready && tr.t < *ready)
      fail(i, "pickup before empty phase of agent " + tr.agent + " completes");
    if (have_prev && prev_arrival > tr.t)
      fail(i, "pickup before previous agent drops off");
    prev_arrival = tr.t + *tt;
    have_prev = true;
  }
  if (have_prev) out.duration = prev_arrival;
  out.feasible = out.violations.empty() && timing_ok;
  return out;
}

/// t(S): pickup time of the final trip plus its carrying time. Requires
/// the schedule to be structurally sound (endpoints, chaining, areas) but
/// tolerates timing infeasibility; throws otherwise.
inline Rat duration_of(const Instance& inst, const Schedule& sched) {
  if (sched.trips.empty()) {
    if (inst.source == inst.target) return Rat(0);
    throw std::invalid_argument("empty schedule but s != y");
  }
  if (sched.trips.front().pickup != inst.source)
    throw std::invalid_argument("first pickup is not s");
  if (sched.trips.back().dropoff != inst.target)
    throw std::invalid_argument("last dropoff is not y");
  for (std::size_t i = 1; i < sched.trips.size(); ++i)
    if (sched.trips[i].pickup != sched.trips[i - 1].dropoff)
      throw std::invalid_argument("schedule route is not continuous");
  const Trip& last = sched.trips.back();
  const Agent* a = find_agent(inst, last.agent);
  if (!a) throw std::invalid_argument("unknown agent id " + last.agent);
  auto tt = travel_time(*a, last.pickup, last.dropoff);
  if (!tt)
    throw std::invalid_argument("final trip leaves the agent's area");
  // the earlier trips must also stay in-area
  for (const Trip& tr : sched.trips) {
    const Agent* ta = find_agent(inst, tr.agent);
    if (!ta || !travel_time(*ta, tr.pickup, tr.dropoff))
      throw std::invalid_argument("trip leaves the agent's area");
  }
  return last.t + *tt;
}

}  // namespace ddt
