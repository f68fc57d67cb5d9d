#pragma once

#include <cstdlib>
#include <queue>
#include <unordered_map>

#include "ddt/model.hpp"
#include "ddt/validator.hpp"

namespace ddt {

namespace detail {

/// Indexed view of an instance: vertex table, per-agent membership and
/// handover-relevant dropoff candidates, and the unit-edge union graph.
struct SearchGraph {
  const Instance* inst;
  std::vector<Vertex> verts;
  std::map<Vertex, int> index;
  std::vector<std::vector<int>> members;   // per agent: vertex indices in V_a
  std::vector<std::vector<int>> dropoffs;  // members also shared or == target
  int source = -1, target = -1;

  explicit SearchGraph(const Instance& instance) : inst(&instance) {
    verts = vertex_table(instance);
    for (int i = 0; i < static_cast<int>(verts.size()); ++i)
      index[verts[i]] = i;
    auto s_it = index.find(instance.source);
    auto t_it = index.find(instance.target);
    source = s_it == index.end() ? -1 : s_it->second;
    target = t_it == index.end() ? -1 : t_it->second;

    const int k = static_cast<int>(instance.agents.size());
    members.resize(k);
    std::vector<int> cover(verts.size(), 0);
    for (int a = 0; a < k; ++a)
      for (int v = 0; v < static_cast<int>(verts.size()); ++v)
        if (area_contains(instance.agents[a].area, verts[v])) {
          members[a].push_back(v);
          ++cover[v];
        }
    dropoffs.resize(k);
    for (int a = 0; a < k; ++a)
      for (int v : members[a])
        if (cover[v] > 1 || v == target) dropoffs[a].push_back(v);
  }

  const Agent& agent(int a) const { return inst->agents[a]; }

  /// Unit edges (consecutive-vertex segments on a line) with the cheapest
  /// traversal time over a set of admitted agents. Pairs (neighbor, time);
  /// time is 1/v times the segment length.
  std::vector<std::vector<std::pair<int, Rat>>> edge_graph(
      const std::vector<int>& admitted) const {
    std::vector<std::vector<std::pair<int, Rat>>> adj(verts.size());
    auto covered = [&](const Vertex& u, const Vertex& w) -> std::optional<Rat> {
      std::optional<Rat> best;
      for (int a : admitted) {
        const Agent& ag = agent(a);
        if (area_contains(ag.area, u) && area_contains(ag.area, w) &&
            (!best || ag.speed > *best))
          best = ag.speed;
      }
      return best;
    };
    if (inst->kind == GraphKind::line) {
      for (std::size_t i = 0; i + 1 < verts.size(); ++i) {
        Rat len = verts[i + 1].x - verts[i].x;
        if (auto v = covered(verts[i], verts[i + 1])) {
          adj[i].push_back({static_cast<int>(i + 1), len / *v});
          adj[i + 1].push_back({static_cast<int>(i), len / *v});
        }
      }
    } else {
      for (std::size_t i = 0; i < verts.size(); ++i)
        for (auto [dx, dy] : {std::pair{1, 0}, std::pair{0, 1}}) {
          Vertex nb{verts[i].x + Rat(dx), verts[i].y + Rat(dy)};
          auto it = index.find(nb);
          if (it == index.end()) continue;
          if (auto v = covered(verts[i], nb)) {
            adj[i].push_back({it->second, Rat(1) / *v});
            adj[it->second].push_back({static_cast<int>(i), Rat(1) / *v});
          }
        }
    }
    return adj;
  }
};

/// Dijkstra over the unit-edge union graph; returns earliest pure-travel
/// times from `from`. With all agents admitted this is an admissible
/// distance-to-go bound (empty phases can only delay pickups further).
inline std::vector<std::optional<Rat>> pure_travel_times(
    const SearchGraph& g, int from, const std::vector<int>& admitted) {
  std::vector<std::optional<Rat>> dist(g.verts.size());
  if (from < 0) return dist;
  auto adj = g.edge_graph(admitted);
  using QE = std::pair<Rat, int>;
  auto cmp = [](const QE& a, const QE& b) { return b.first < a.first; };
  std::priority_queue<QE, std::vector<QE>, decltype(cmp)> pq(cmp);
  dist[from] = Rat(0);
  pq.push({Rat(0), from});
  while (!pq.empty()) {
    auto [d, v] = pq.top();
    pq.pop();
    if (!dist[v] || *dist[v] < d) continue;
    for (auto& [w, cost] : adj[v]) {
      Rat nd = d + cost;
      if (!dist[w] || nd < *dist[w]) {
        dist[w] = nd;
        pq.push({nd, w});
      }
    }
  }
  return dist;
}

inline std::vector<int> all_agents(const SearchGraph& g) {
  std::vector<int> ids(g.inst->agents.size());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<int>(i);
  return ids;
}

inline std::uint64_t default_node_budget() {
  if (const char* env = std::getenv("DDT_NODE_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 50'000'000ULL;
}

}  // namespace detail

struct RelaxedOutcome {
  SolveStatus status = SolveStatus::unknown;
  Rat lower_bound;
  Schedule candidate;
  bool certified = false;
};

/// Label-correcting shortest-time search over vertices only. Agents may be
/// reused, each use priced as if fresh, so the result never exceeds the
/// optimum of the once-per-agent problem. When the extracted candidate
/// happens to use every agent at most once it is itself feasible and the
/// bound is tight.
inline RelaxedOutcome solve_relaxed(const Instance& inst) {
  detail::SearchGraph g(inst);
  RelaxedOutcome out;
  if (g.source < 0 || g.target < 0) {
    out.status = SolveStatus::infeasible;
    return out;
  }
  if (g.source == g.target) {
    out.status = SolveStatus::solved;
    out.lower_bound = Rat(0);
    out.certified = true;
    return out;
  }
  const int n = static_cast<int>(g.verts.size());
  std::vector<std::optional<Rat>> label(n);
  std::vector<std::pair<int, int>> pred(n, {-1, -1});  // (agent, from-vertex)
  using QE = std::pair<Rat, int>;
  auto cmp = [](const QE& a, const QE& b) { return b.first < a.first; };
  std::priority_queue<QE, std::vector<QE>, decltype(cmp)> pq(cmp);
  label[g.source] = Rat(0);
  pq.push({Rat(0), g.source});
  while (!pq.empty()) {
    auto [t, u] = pq.top();
    pq.pop();
    if (!label[u] || *label[u] < t) continue;
    if (u == g.target) break;
    for (int a = 0; a < static_cast<int>(inst.agents.size()); ++a) {
      const Agent& ag = g.agent(a);
      if (!area_contains(ag.area, g.verts[u])) continue;
      auto ready = ready_time(inst, ag, g.verts[u]);
      Rat pickup = t < *ready ? *ready : t;
      for (int w : g.dropoffs[a]) {
        if (w == u) continue;
        auto d = area_distance(ag, g.verts[u], g.verts[w]);
        if (!d) continue;
        Rat arrive = pickup + *d / ag.speed;
        if (!label[w] || arrive < *label[w]) {
          label[w] = arrive;
          pred[w] = {a, u};
          pq.push({arrive, w});
        }
      }
    }
  }
  if (!label[g.target]) {
    out.status = SolveStatus::infeasible;
    return out;
  }
  out.status = SolveStatus::solved;
  out.lower_bound = *label[g.target];
  // extract the label path, merging consecutive legs by the same agent
  std::vector<std::pair<int, int>> legs;  // (agent, pickup vertex)
  for (int v = g.target; v != g.source;) {
    auto [a, u] = pred[v];
    legs.push_back({a, u});
    v = u;
  }
  std::reverse(legs.begin(), legs.end());
  Rat clock(0);
  std::set<std::string> ids;
  out.certified = true;
  for (std::size_t i = 0; i < legs.size();) {
    std::size_t j = i;
    while (j + 1 < legs.size() && legs[j + 1].first == legs[i].first) ++j;
    const Agent& ag = g.agent(legs[i].first);
    Vertex u = g.verts[legs[i].second];
    Vertex w = j + 1 < legs.size() ? g.verts[legs[j + 1].second]
                                   : g.verts[g.target];
    auto ready = ready_time(inst, ag, u);
    Rat pickup = clock < *ready ? *ready : clock;
    out.candidate.trips.push_back({ag.id, u, w, pickup});
    clock = pickup + *travel_time(ag, u, w);
    if (!ids.insert(ag.id).second) out.certified = false;
    i = j + 1;
  }
  return out;
}

/// Best-first search over (location, used-agent set, arrival time) states
/// under the once-per-agent normal form, guided by the pure-travel
/// distance-to-go bound. Line instances are searched with trips oriented
/// toward y only; any schedule with a backward trip can be shortcut to a
/// no-slower oriented one because interval areas contain every vertex a
/// later carrier passes over.
inline SolveOutcome solve_exact(const Instance& inst,
                                std::optional<std::uint64_t> node_budget = {},
                                const Schedule* warm_start = nullptr) {
  if (inst.agents.size() > 64)
    throw std::invalid_argument("exact solver supports at most 64 agents");
  const std::uint64_t budget =
      node_budget ? *node_budget : detail::default_node_budget();
  detail::SearchGraph g(inst);
  SolveOutcome out;
  if (g.source < 0 || g.target < 0) {
    out.status = SolveStatus::infeasible;
    return out;
  }
  if (g.source == g.target) {
    out.status = SolveStatus::solved;
    out.duration = Rat(0);
    out.certificate = Certificate::exact;
    out.lower_bound = Rat(0);
    return out;
  }
  auto h = detail::pure_travel_times(g, g.target, detail::all_agents(g));
  if (!h[g.source]) {
    out.status = SolveStatus::infeasible;
    return out;
  }

  struct Node {
    int vertex;
    std::uint64_t mask;
    Rat t;
    Rat f;
    int parent;
    int agent;  // agent of the trip leading here, -1 at the root
  };
  std::vector<Node> arena;
  arena.push_back({g.source, 0, Rat(0), *h[g.source], -1, -1});

  struct QE {
    Rat f;
    Rat t;
    int node;
  };
  auto cmp = [](const QE& a, const QE& b) {
    if (a.f != b.f) return b.f < a.f;
    return b.t < a.t;
  };
  std::priority_queue<QE, std::vector<QE>, decltype(cmp)> pq(cmp);
  pq.push({arena[0].f, Rat(0), 0});

  // per-vertex Pareto front over (used-set, time); a state is dominated by
  // one that has used a subset of its agents no later
  std::vector<std::vector<std::pair<std::uint64_t, Rat>>> front(g.verts.size());
  auto dominated = [&](int v, std::uint64_t mask, const Rat& t) {
    for (auto& [m, ft] : front[v])
      if ((m & mask) == m && ft <= t) return true;
    return false;
  };
  auto record = [&](int v, std::uint64_t mask, const Rat& t) {
    auto& fr = front[v];
    fr.erase(std::remove_if(fr.begin(), fr.end(),
                            [&](const std::pair<std::uint64_t, Rat>& e) {
                              return (mask & e.first) == mask && t <= e.second;
                            }),
             fr.end());
    fr.push_back({mask, t});
  };

  std::optional<Rat> incumbent;
  int incumbent_node = -1;
  if (warm_start) {
    auto v = validate(inst, *warm_start);
    if (v.feasible) incumbent = v.duration;
  }

  const bool monotone = inst.kind == GraphKind::line;
  const bool rightward = inst.source.x < inst.target.x;

  std::uint64_t expanded = 0;
  std::optional<Rat> proven_bound;
  while (!pq.empty()) {
    QE top = pq.top();
    pq.pop();
    Node nd = arena[top.node];
    if (dominated(nd.vertex, nd.mask, nd.t)) continue;
    if (incumbent && *incumbent <= top.f && nd.vertex != g.target) {
      proven_bound = *incumbent;
      continue;
    }
    if (nd.vertex == g.target) {
      out.status = SolveStatus::solved;
      out.duration = nd.t;
      out.certificate = Certificate::exact;
      out.lower_bound = nd.t;
      out.nodes_expanded = expanded;
      std::vector<Trip> trips;
      for (int cur = top.node; arena[cur].parent >= 0;
           cur = arena[cur].parent) {
        const Node& c = arena[cur];
        const Node& p = arena[c.parent];
        const Agent& ag = g.agent(c.agent);
        Rat travel = *travel_time(ag, g.verts[p.vertex], g.verts[c.vertex]);
        trips.push_back(
            {ag.id, g.verts[p.vertex], g.verts[c.vertex], c.t - travel});
      }
      std::reverse(trips.begin(), trips.end());
      out.schedule.trips = std::move(trips);
      return out;
    }
    record(nd.vertex, nd.mask, nd.t);
    if (++expanded > budget) {
      proven_bound = top.f;
      break;
    }
    for (int a = 0; a < static_cast<int>(inst.agents.size()); ++a) {
      if (nd.mask & (1ULL << a)) continue;
      const Agent& ag = g.agent(a);
      const Vertex& loc = g.verts[nd.vertex];
      if (!area_contains(ag.area, loc)) continue;
      auto ready = ready_time(inst, ag, loc);
      Rat pickup = nd.t < *ready ? *ready : nd.t;
      for (int w : g.dropoffs[a]) {
        if (w == nd.vertex) continue;
        if (monotone &&
            (rightward ? !(loc.x < g.verts[w].x) : !(g.verts[w].x < loc.x)))
          continue;
        auto d = area_distance(ag, loc, g.verts[w]);
        if (!d || !h[w]) continue;
        Rat arrive = pickup + *d / ag.speed;
        std::uint64_t mask = nd.mask | (1ULL << a);
        if (dominated(w, mask, arrive)) continue;
        Rat f = arrive + *h[w];
        if (incumbent && *incumbent < f) continue;
        if (w == g.target && (!incumbent || arrive < *incumbent)) {
          incumbent = arrive;
          incumbent_node = static_cast<int>(arena.size());
        }
        arena.push_back({w, mask, arrive, f, top.node, a});
        pq.push({f, arrive, static_cast<int>(arena.size()) - 1});
      }
    }
  }

  out.nodes_expanded = expanded;
  if (!incumbent) {
    if (pq.empty()) {
      out.status = SolveStatus::infeasible;
    } else {
      out.status = SolveStatus::unknown;
      out.lower_bound = proven_bound;
    }
    return out;
  }
  // budget exhausted (or queue drained at the incumbent's bound) with a
  // feasible incumbent in hand
  out.status = SolveStatus::solved;
  out.duration = *incumbent;
  if (pq.empty() || (proven_bound && *incumbent <= *proven_bound)) {
    out.certificate = Certificate::lb_certified;
    out.lower_bound = *incumbent;
  } else {
    out.certificate = Certificate::heuristic;
    out.lower_bound = proven_bound;
  }
  if (incumbent_node >= 0) {
    std::vector<Trip> trips;
    for (int cur = incumbent_node; arena[cur].parent >= 0;
         cur = arena[cur].parent) {
      const Node& c = arena[cur];
      const Node& p = arena[c.parent];
      const Agent& ag = g.agent(c.agent);
      Rat travel = *travel_time(ag, g.verts[p.vertex], g.verts[c.vertex]);
      trips.push_back(
          {ag.id, g.verts[p.vertex], g.verts[c.vertex], c.t - travel});
    }
    std::reverse(trips.begin(), trips.end());
    out.schedule.trips = std::move(trips);
  } else if (warm_start) {
    out.schedule = *warm_start;
  }
  return out;
}

namespace detail {

/// Orders agents by non-increasing speed, ties broken by id.
inline std::vector<int> speed_order(const Instance& inst) {
  std::vector<int> order(inst.agents.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (inst.agents[a].speed != inst.agents[b].speed)
      return inst.agents[b].speed < inst.agents[a].speed;
    return inst.agents[a].id < inst.agents[b].id;
  });
  return order;
}

/// Min-time vertex path through the union graph of the admitted agents,
/// or empty if y is unreachable.
inline std::vector<int> min_time_path(const SearchGraph& g,
                                      const std::vector<int>& admitted) {
  auto adj = g.edge_graph(admitted);
  std::vector<std::optional<Rat>> dist(g.verts.size());
  std::vector<int> pred(g.verts.size(), -1);
  using QE = std::pair<Rat, int>;
  auto cmp = [](const QE& a, const QE& b) { return b.first < a.first; };
  std::priority_queue<QE, std::vector<QE>, decltype(cmp)> pq(cmp);
  dist[g.source] = Rat(0);
  pq.push({Rat(0), g.source});
  while (!pq.empty()) {
    auto [d, v] = pq.top();
    pq.pop();
    if (!dist[v] || *dist[v] < d) continue;
    if (v == g.target) break;
    for (auto& [w, cost] : adj[v]) {
      Rat ndist = d + cost;
      if (!dist[w] || ndist < *dist[w]) {
        dist[w] = ndist;
        pred[w] = v;
        pq.push({ndist, w});
      }
    }
  }
  if (!dist[g.target]) return {};
  std::vector<int> path;
  for (int v = g.target; v != -1; v = pred[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

/// Turns a vertex path plus a per-edge agent assignment into a
/// once-per-agent schedule: merge consecutive edges by the same agent,
/// then repeatedly shortcut any agent that reappears by routing it
/// directly from its first pickup to its last dropoff, and finally chain
/// pickup times with zero waiting.
inline Schedule path_to_schedule(const SearchGraph& g,
                                 const std::vector<int>& path,
                                 const std::vector<int>& edge_agent) {
  struct Leg {
    int agent;
    Vertex u, w;
  };
  std::vector<Leg> legs;
  for (std::size_t e = 0; e < edge_agent.size(); ++e) {
    Vertex u = g.verts[path[e]], w = g.verts[path[e + 1]];
    if (!legs.empty() && legs.back().agent == edge_agent[e])
      legs.back().w = w;
    else
      legs.push_back({edge_agent[e], u, w});
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < legs.size() && !changed; ++i)
      for (std::size_t j = i + 1; j < legs.size(); ++j)
        if (legs[j].agent == legs[i].agent) {
          legs[i].w = legs[j].w;
          legs.erase(legs.begin() + i + 1, legs.begin() + j + 1);
          changed = true;
          break;
        }
  }
  Schedule sched;
  Rat clock(0);
  for (const Leg& leg : legs) {
    const Agent& ag = g.agent(leg.agent);
    sched.trips.push_back({ag.id, leg.u, leg.w, clock});
    clock += *travel_time(ag, leg.u, leg.w);
  }
  return sched;
}

}  // namespace detail

struct GreedyOutcome {
  SolveOutcome outcome;
  Rat v_threshold;  // speed of the slowest admitted agent class
  int iterations = 0;
};

/// Greedy approximation for grids without initial positions: admit agents
/// in non-increasing speed order until the union of their areas connects s
/// to y, route the package along the cheapest path of that union, and
/// compress the schedule to once-per-agent.
inline GreedyOutcome solve_greedy_gridr(const Instance& inst) {
  if (inst.kind != GraphKind::grid || inst.mode != Positioning::free_choice)
    throw std::invalid_argument("greedy solver needs a free-mode grid");
  detail::SearchGraph g(inst);
  GreedyOutcome res;
  if (g.source == g.target && g.source >= 0) {
    res.outcome.status = SolveStatus::solved;
    res.outcome.duration = Rat(0);
    res.v_threshold = Rat(1);
    return res;
  }
  auto order = detail::speed_order(inst);
  std::vector<int> admitted;
  for (std::size_t i = 0; i < order.size(); ++i) {
    admitted.push_back(order[i]);
    auto path = detail::min_time_path(g, admitted);
    if (path.empty()) continue;
    std::vector<int> edge_agent(path.size() - 1, -1);
    for (std::size_t e = 0; e + 1 < path.size(); ++e)
      for (int a : admitted) {
        const Agent& ag = g.agent(a);
        if (area_contains(ag.area, g.verts[path[e]]) &&
            area_contains(ag.area, g.verts[path[e + 1]])) {
          edge_agent[e] = a;
          break;  // admitted is in speed order, first hit is fastest
        }
      }
    res.outcome.schedule = detail::path_to_schedule(g, path, edge_agent);
    res.outcome.status = SolveStatus::solved;
    res.outcome.certificate = Certificate::heuristic;
    res.outcome.duration = duration_of(inst, res.outcome.schedule);
    res.v_threshold = inst.agents[order[i]].speed;
    res.iterations = static_cast<int>(i) + 1;
    return res;
  }
  res.outcome.status = SolveStatus::infeasible;
  res.iterations = static_cast<int>(order.size());
  return res;
}

/// Equal-speed special case without initial positions: the optimum is the
/// shortest s-y path through the union of all areas, traversed at the
/// common speed. The schedule segments that path among the agents and is
/// compressed to once-per-agent; compression never lengthens the carried
/// route, which is already distance-optimal, so the certificate is exact.
inline SolveOutcome solve_equal_speed(const Instance& inst) {
  if (inst.mode != Positioning::free_choice)
    throw std::invalid_argument("equal-speed solver needs free positioning");
  for (const auto& a : inst.agents)
    if (a.speed != inst.agents.front().speed)
      throw std::invalid_argument("equal-speed solver needs uniform speeds");
  detail::SearchGraph g(inst);
  SolveOutcome out;
  if (g.source < 0 || g.target < 0) {
    out.status = SolveStatus::infeasible;
    return out;
  }
  if (g.source == g.target) {
    out.status = SolveStatus::solved;
    out.duration = Rat(0);
    out.certificate = Certificate::exact;
    return out;
  }
  if (inst.agents.empty()) {
    out.status = SolveStatus::infeasible;
    return out;
  }
  auto path = detail::min_time_path(g, detail::all_agents(g));
  if (path.empty()) {
    out.status = SolveStatus::infeasible;
    return out;
  }
  // assign each edge the agent covering the longest run ahead, for fewer
  // handovers and contiguous agent usage
  std::vector<int> edge_agent(path.size() - 1, -1);
  for (std::size_t e = 0; e + 1 < path.size(); ++e) {
    int best = -1;
    std::size_t best_run = 0;
    for (int a = 0; a < static_cast<int>(inst.agents.size()); ++a) {
      const Agent& ag = g.agent(a);
      std::size_t run = e;
      while (run + 1 < path.size() &&
             area_contains(ag.area, g.verts[path[run]]) &&
             area_contains(ag.area, g.verts[path[run + 1]]))
        ++run;
      if (run - e > best_run) {
        best_run = run - e;
        best = a;
      }
    }
    edge_agent[e] = best;
  }
  out.schedule = detail::path_to_schedule(g, path, edge_agent);
  out.status = SolveStatus::solved;
  out.certificate = Certificate::exact;
  out.duration = duration_of(inst, out.schedule);
  out.lower_bound = out.duration;
  return out;
}

struct RatioWitness {
  Rat ratio;
  bool bound_holds = false;
  Rat v_threshold;
  long long grid_size = 0;  // vertex count of the ambient grid
};

/// Checks the greedy guarantee on a solved instance pair: t(greedy) <= n *
/// OPT and t(greedy) <= n / v_threshold, plus OPT >= 1 / v_threshold.
inline RatioWitness approx_ratio_witness(const Instance& inst,
                                         const GreedyOutcome& greedy,
                                         const SolveOutcome& exact) {
  if (greedy.outcome.status != SolveStatus::solved ||
      exact.status != SolveStatus::solved)
    throw std::invalid_argument("ratio witness needs two solved outcomes");
  if (exact.certificate == Certificate::heuristic)
    throw std::invalid_argument("ratio witness needs a certified optimum");
  for (const Schedule* s : {&greedy.outcome.schedule, &exact.schedule})
    if (!s->trips.empty() && !validate(inst, *s).feasible)
      throw std::invalid_argument("outcome does not match instance");
  long long x_min = inst.source.x.num(), x_max = x_min;
  long long y_min = inst.source.y.num(), y_max = y_min;
  auto stretch = [&](long long x, long long y) {
    x_min = std::min(x_min, x);
    x_max = std::max(x_max, x);
    y_min = std::min(y_min, y);
    y_max = std::max(y_max, y);
  };
  stretch(inst.target.x.num(), inst.target.y.num());
  for (const auto& a : inst.agents) {
    if (const auto* rc = std::get_if<Rect>(&a.area)) {
      stretch(rc->x_min, rc->y_min);
      stretch(rc->x_max, rc->y_max);
    } else if (const auto* gc = std::get_if<GridCells>(&a.area)) {
      for (const auto& c : gc->cells) stretch(c.x, c.y);
    }
  }
  RatioWitness w;
  w.grid_size = (x_max - x_min + 1) * (y_max - y_min + 1);
  w.v_threshold = greedy.v_threshold;
  Rat n(w.grid_size);
  w.ratio = exact.duration == Rat(0) ? Rat(1)
                                     : greedy.outcome.duration / exact.duration;
  w.bound_holds = greedy.outcome.duration <= n * exact.duration &&
                  greedy.outcome.duration <= n / w.v_threshold &&
                  Rat(1) / w.v_threshold <= exact.duration;
  return w;
}

}  // namespace ddt
