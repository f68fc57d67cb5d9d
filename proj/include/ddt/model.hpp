#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "ddt/rational.hpp"

namespace ddt {

/// A graph vertex. Line instances use x only (y == 0); grid vertices
/// carry integer coordinates in both components.
struct Vertex {
  Rat x;
  Rat y;

  friend bool operator==(const Vertex& a, const Vertex& b) {
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator!=(const Vertex& a, const Vertex& b) { return !(a == b); }
  friend bool operator<(const Vertex& a, const Vertex& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  }
};

inline Vertex line_vertex(Rat x) { return Vertex{x, Rat(0)}; }
inline Vertex grid_vertex(long long x, long long y) {
  return Vertex{Rat(x), Rat(y)};
}

struct Cell {
  long long x;
  long long y;
  friend bool operator<(const Cell& a, const Cell& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  }
  friend bool operator==(const Cell& a, const Cell& b) {
    return a.x == b.x && a.y == b.y;
  }
};

/// Closed interval [lo, hi] on the line.
struct Interval {
  Rat lo;
  Rat hi;
};

/// Axis-aligned rectangle of grid vertices; every vertex and unit edge
/// inside the bounds is present.
struct Rect {
  long long x_min, x_max, y_min, y_max;
};

/// Explicit vertex set on the unit grid; edges are implied by unit
/// adjacency restricted to the set.
struct GridCells {
  std::set<Cell> cells;
};

using MovementArea = std::variant<Interval, Rect, GridCells>;

struct Agent {
  std::string id;
  Rat speed;
  MovementArea area;
  std::optional<Vertex> start;  // present iff the instance is predefined-mode
};

enum class GraphKind { line, grid };
enum class Positioning { predefined, free_choice };

struct Instance {
  GraphKind kind = GraphKind::line;
  Positioning mode = Positioning::predefined;
  std::vector<Rat> line_vertices;  // sorted strictly increasing; line only
  std::vector<Agent> agents;
  Vertex source;  // package start s
  Vertex target;  // package destination y
};

/// One carrying leg: agent picks the package up at `pickup` at time `t`
/// and drops it at `dropoff`.
struct Trip {
  std::string agent;
  Vertex pickup;
  Vertex dropoff;
  Rat t;
};

struct Schedule {
  std::vector<Trip> trips;
};

enum class Certificate { exact, lb_certified, heuristic };
enum class SolveStatus { solved, infeasible, unknown };

struct SolveOutcome {
  SolveStatus status = SolveStatus::unknown;
  Schedule schedule;
  Rat duration;
  Certificate certificate = Certificate::heuristic;
  std::optional<Rat> lower_bound;
  std::uint64_t nodes_expanded = 0;
};

inline bool area_contains(const MovementArea& area, const Vertex& v) {
  if (const auto* iv = std::get_if<Interval>(&area))
    return v.y == Rat(0) && iv->lo <= v.x && v.x <= iv->hi;
  if (const auto* rc = std::get_if<Rect>(&area))
    return v.x.is_integer() && v.y.is_integer() && Rat(rc->x_min) <= v.x &&
           v.x <= Rat(rc->x_max) && Rat(rc->y_min) <= v.y &&
           v.y <= Rat(rc->y_max);
  const auto& gc = std::get<GridCells>(area);
  if (!v.x.is_integer() || !v.y.is_integer()) return false;
  return gc.cells.count(Cell{v.x.num(), v.y.num()}) > 0;
}

/// Hop distance between two cells of an explicit grid subgraph, or
/// nullopt if disconnected.
inline std::optional<long long> grid_cells_distance(const GridCells& gc,
                                                    Cell from, Cell to) {
  if (from == to) return 0;
  std::map<Cell, long long> dist;
  std::deque<Cell> queue{from};
  dist[from] = 0;
  const long long dx[4] = {1, -1, 0, 0};
  const long long dy[4] = {0, 0, 1, -1};
  while (!queue.empty()) {
    Cell c = queue.front();
    queue.pop_front();
    long long d = dist[c];
    for (int k = 0; k < 4; ++k) {
      Cell nb{c.x + dx[k], c.y + dy[k]};
      if (!gc.cells.count(nb) || dist.count(nb)) continue;
      if (nb == to) return d + 1;
      dist[nb] = d + 1;
      queue.push_back(nb);
    }
  }
  return std::nullopt;
}

/// L_a(u, w): shortest-path length between u and w inside the agent's
/// movement area, or nullopt when either endpoint lies outside (or the
/// endpoints are disconnected within an explicit cell set).
inline std::optional<Rat> area_distance(const Agent& a, const Vertex& u,
                                        const Vertex& w) {
  if (!area_contains(a.area, u) || !area_contains(a.area, w))
    return std::nullopt;
  if (std::holds_alternative<Interval>(a.area)) return (u.x - w.x).abs();
  if (std::holds_alternative<Rect>(a.area))
    return (u.x - w.x).abs() + (u.y - w.y).abs();
  auto hops = grid_cells_distance(std::get<GridCells>(a.area),
                                  Cell{u.x.num(), u.y.num()},
                                  Cell{w.x.num(), w.y.num()});
  if (!hops) return std::nullopt;
  return Rat(*hops);
}

/// L_a(u, w) / v_a.
inline std::optional<Rat> travel_time(const Agent& a, const Vertex& u,
                                      const Vertex& w) {
  auto d = area_distance(a, u, w);
  if (!d) return std::nullopt;
  return *d / a.speed;
}

/// Earliest time agent `a` can pick the package up at `u`: the empty-phase
/// travel time from its initial position in predefined mode, zero when the
/// start position is free.
inline std::optional<Rat> ready_time(const Instance& inst, const Agent& a,
                                     const Vertex& u) {
  if (!area_contains(a.area, u)) return std::nullopt;
  if (inst.mode == Positioning::free_choice || !a.start) return Rat(0);
  return travel_time(a, *a.start, u);
}

inline const Agent* find_agent(const Instance& inst, const std::string& id) {
  for (const auto& a : inst.agents)
    if (a.id == id) return &a;
  return nullptr;
}

/// All vertices algorithms may hand the package over at: the explicit
/// list for line instances, the union of the agents' cells (plus s and y)
/// for grids.
inline std::vector<Vertex> vertex_table(const Instance& inst) {
  std::set<Vertex> verts;
  if (inst.kind == GraphKind::line) {
    for (const auto& x : inst.line_vertices) verts.insert(line_vertex(x));
  } else {
    for (const auto& a : inst.agents) {
      if (const auto* rc = std::get_if<Rect>(&a.area)) {
        for (long long x = rc->x_min; x <= rc->x_max; ++x)
          for (long long y = rc->y_min; y <= rc->y_max; ++y)
            verts.insert(grid_vertex(x, y));
      } else if (const auto* gc = std::get_if<GridCells>(&a.area)) {
        for (const auto& c : gc->cells) verts.insert(grid_vertex(c.x, c.y));
      }
    }
  }
  verts.insert(inst.source);
  verts.insert(inst.target);
  return {verts.begin(), verts.end()};
}

inline bool graph_has_vertex(const Instance& inst, const Vertex& v) {
  if (inst.kind == GraphKind::line) {
    if (v.y != Rat(0)) return false;
    return std::binary_search(inst.line_vertices.begin(),
                              inst.line_vertices.end(), v.x);
  }
  for (const auto& a : inst.agents)
    if (area_contains(a.area, v)) return true;
  return v == inst.source || v == inst.target;
}

/// Structural checks on an instance; returns human-readable problems,
/// empty when well-formed.
inline std::vector<std::string> check_instance(const Instance& inst) {
  std::vector<std::string> problems;
  if (inst.kind == GraphKind::line) {
    for (std::size_t i = 1; i < inst.line_vertices.size(); ++i)
      if (!(inst.line_vertices[i - 1] < inst.line_vertices[i]))
        problems.push_back("line vertex list not strictly increasing");
    auto on_line = [&](const Vertex& v) {
      return std::binary_search(inst.line_vertices.begin(),
                                inst.line_vertices.end(), v.x) &&
             v.y == Rat(0);
    };
    if (!on_line(inst.source)) problems.push_back("s not a line vertex");
    if (!on_line(inst.target)) problems.push_back("y not a line vertex");
  } else {
    if (!inst.source.x.is_integer() || !inst.source.y.is_integer())
      problems.push_back("grid s not integral");
    if (!inst.target.x.is_integer() || !inst.target.y.is_integer())
      problems.push_back("grid y not integral");
  }
  std::set<std::string> seen;
  for (const auto& a : inst.agents) {
    if (!seen.insert(a.id).second)
      problems.push_back("duplicate agent id " + a.id);
    if (!(Rat(0) < a.speed))
      problems.push_back("agent " + a.id + " has non-positive speed");
    if (const auto* iv = std::get_if<Interval>(&a.area)) {
      if (inst.kind != GraphKind::line)
        problems.push_back("agent " + a.id + " has interval area on a grid");
      else {
        if (!(iv->lo <= iv->hi))
          problems.push_back("agent " + a.id + " has empty interval");
        for (Rat end : {iv->lo, iv->hi})
          if (!std::binary_search(inst.line_vertices.begin(),
                                  inst.line_vertices.end(), end))
            problems.push_back("agent " + a.id +
                               " interval endpoint is not a line vertex");
      }
    } else if (const auto* rc = std::get_if<Rect>(&a.area)) {
      if (rc->x_min > rc->x_max || rc->y_min > rc->y_max)
        problems.push_back("agent " + a.id + " has empty rectangle");
    } else {
      const auto& gc = std::get<GridCells>(a.area);
      if (gc.cells.empty())
        problems.push_back("agent " + a.id + " has empty cell set");
      else {
        // connectivity under unit adjacency
        std::set<Cell> seen_cells{*gc.cells.begin()};
        std::deque<Cell> q{*gc.cells.begin()};
        while (!q.empty()) {
          Cell c = q.front();
          q.pop_front();
          for (Cell nb : {Cell{c.x + 1, c.y}, Cell{c.x - 1, c.y},
                          Cell{c.x, c.y + 1}, Cell{c.x, c.y - 1}})
            if (gc.cells.count(nb) && seen_cells.insert(nb).second)
              q.push_back(nb);
        }
        if (seen_cells.size() != gc.cells.size())
          problems.push_back("agent " + a.id + " cell set disconnected");
      }
    }
    if (inst.mode == Positioning::predefined) {
      if (!a.start)
        problems.push_back("agent " + a.id +
                           " lacks an initial position (predefined mode)");
      else if (!area_contains(a.area, *a.start))
        problems.push_back("agent " + a.id +
                           " starts outside its movement area");
    }
  }
  return problems;
}

}  // namespace ddt
