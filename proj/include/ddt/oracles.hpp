#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "ddt/model.hpp"

namespace ddt {

/// Brute-force answers used to cross-check the solvers. These enumerate
/// the raw definitions and share no search machinery with the solver
/// header: agent sequences are tried in input order, handovers at every
/// graph vertex inside the carrier's area.

struct OracleScheduleResult {
  enum class Kind { value, infeasible, budget_exhausted };
  Kind kind = Kind::infeasible;
  Rat duration;            // meaningful only for Kind::value
  std::uint64_t explored = 0;
};

namespace oracle_detail {

struct Enumerator {
  const Instance& inst;
  std::vector<Vertex> verts;
  std::size_t max_agents;
  std::uint64_t budget;
  std::uint64_t explored = 0;
  bool exhausted = false;
  std::optional<Rat> best;

  Enumerator(const Instance& i, std::size_t ma, std::uint64_t b)
      : inst(i), verts(vertex_table(i)), max_agents(ma), budget(b) {}

  void extend(const Vertex& at, const Rat& clock, std::set<std::size_t>& used) {
    if (exhausted) return;
    if (at == inst.target) {
      if (!best || clock < *best) best = clock;
      return;
    }
    if (used.size() >= max_agents) return;
    for (std::size_t i = 0; i < inst.agents.size(); ++i) {
      if (used.count(i)) continue;
      const Agent& a = inst.agents[i];
      auto ready = ready_time(inst, a, at);
      if (!ready) continue;
      Rat depart = clock < *ready ? *ready : clock;
      used.insert(i);
      for (const Vertex& w : verts) {
        if (w == at) continue;
        auto tt = travel_time(a, at, w);
        if (!tt) continue;
        if (++explored > budget) { exhausted = true; break; }
        Rat arrive = depart + *tt;
        if (best && *best <= arrive && w != inst.target) continue;
        extend(w, arrive, used);
        if (exhausted) break;
      }
      used.erase(i);
      if (exhausted) return;
    }
  }
};

}  // namespace oracle_detail

/// Minimum delivery duration by exhaustive enumeration of agent sequences
/// and handover vertices, capped at `max_agents` trips. Reports
/// budget_exhausted instead of guessing when the state budget runs out.
inline OracleScheduleResult oracle_schedule(const Instance& inst,
                                            std::size_t max_agents = 8,
                                            std::uint64_t budget = 20'000'000) {
  oracle_detail::Enumerator e(inst, max_agents, budget);
  std::set<std::size_t> used;
  e.extend(inst.source, Rat(0), used);
  OracleScheduleResult out;
  out.explored = e.explored;
  if (e.exhausted && !e.best) {
    out.kind = OracleScheduleResult::Kind::budget_exhausted;
    return out;
  }
  // with budget left the enumeration was complete; a found value is exact
  // even if the budget ran out afterwards only when nothing was cut short
  if (e.exhausted) {
    out.kind = OracleScheduleResult::Kind::budget_exhausted;
    return out;
  }
  if (e.best) {
    out.kind = OracleScheduleResult::Kind::value;
    out.duration = *e.best;
  }
  return out;
}

/// Subset of 1-based indices summing to half the total, or nullopt.
/// Odd totals are answered immediately.
inline std::optional<std::vector<int>> oracle_partition(
    const std::vector<long long>& elems) {
  long long total = 0;
  for (long long e : elems) total += e;
  if (total % 2 != 0) return std::nullopt;
  const long long half = total / 2;
  const int n = static_cast<int>(elems.size());
  if (n > 24) throw std::invalid_argument("partition oracle limited to n <= 24");
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    long long sum = 0;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) sum += elems[i];
    if (sum == half) {
      std::vector<int> subset;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) subset.push_back(i + 1);
      return subset;
    }
  }
  return std::nullopt;
}

/// Truth-table satisfiability check; literals are signed 1-based variable
/// indices. Returns a satisfying assignment or nullopt.
inline std::optional<std::vector<bool>> oracle_sat(
    int n_vars, const std::vector<std::vector<int>>& clauses) {
  if (n_vars > 20) throw std::invalid_argument("sat oracle limited to 20 vars");
  for (std::uint32_t bits = 0; bits < (1u << n_vars); ++bits) {
    bool all = true;
    for (const auto& cl : clauses) {
      bool sat = false;
      for (int lit : cl) {
        int v = lit > 0 ? lit : -lit;
        bool val = bits & (1u << (v - 1));
        if (lit > 0 ? val : !val) sat = true;
      }
      if (!sat) { all = false; break; }
    }
    if (all) {
      std::vector<bool> assignment(n_vars);
      for (int v = 0; v < n_vars; ++v) assignment[v] = bits & (1u << v);
      return assignment;
    }
  }
  return std::nullopt;
}

}  // namespace ddt
