#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>

#include "ddt/oracles.hpp"
#include "ddt/solvers.hpp"

using namespace ddt;

namespace {

Instance example_line() {
  Instance in;
  in.kind = GraphKind::line;
  in.mode = Positioning::predefined;
  for (long long x : {0, 1, 4, 5, 6, 7}) in.line_vertices.push_back(Rat(x));
  in.agents = {
      {"d1", Rat(1), Interval{Rat(0), Rat(1)}, line_vertex(Rat(0))},
      {"d2", Rat(1), Interval{Rat(4), Rat(7)}, line_vertex(Rat(4))},
      {"d3", Rat(3), Interval{Rat(1), Rat(4)}, line_vertex(Rat(4))},
      {"d4", Rat(3), Interval{Rat(5), Rat(6)}, line_vertex(Rat(5))}};
  in.source = line_vertex(Rat(0));
  in.target = line_vertex(Rat(7));
  return in;
}

Instance example_grid_mixed() {
  Instance in;
  in.kind = GraphKind::grid;
  in.mode = Positioning::free_choice;
  in.agents = {{"a1", Rat(1), Rect{0, 3, 0, 0}, {}},
               {"a2", Rat(1), Rect{2, 2, 0, 3}, {}},
               {"a3", Rat(1), Rect{0, 1, 2, 3}, {}},
               {"a4", Rat(1), Rect{1, 3, 3, 3}, {}},
               {"a5", Rat(5), Rect{3, 3, 0, 3}, {}}};
  in.source = grid_vertex(0, 0);
  in.target = grid_vertex(0, 2);
  return in;
}

Instance example_grid_corridors() {
  Instance in;
  in.kind = GraphKind::grid;
  in.mode = Positioning::free_choice;
  in.agents = {
      {"a1", Rat(1), GridCells{{{7, 0}, {7, 1}, {7, 2}, {7, 3}, {8, 2}}}, {}},
      {"a2", Rat(1),
       GridCells{{{8, 2}, {8, 1}, {9, 1}, {10, 1}, {10, 2}, {10, 3}}}, {}}};
  in.source = grid_vertex(7, 0);
  in.target = grid_vertex(10, 3);
  return in;
}

}  // namespace

TEST_CASE("exact solver reproduces the three reference optima") {
  auto r1 = solve_exact(example_line());
  REQUIRE(r1.status == SolveStatus::solved);
  CHECK(r1.duration == Rat(5));
  CHECK(r1.certificate == Certificate::exact);
  CHECK(validate(example_line(), r1.schedule).feasible);

  auto r2 = solve_exact(example_grid_mixed());
  REQUIRE(r2.status == SolveStatus::solved);
  CHECK(r2.duration == Rat(38, 5));
  CHECK(validate(example_grid_mixed(), r2.schedule).feasible);

  auto r3 = solve_exact(example_grid_corridors());
  REQUIRE(r3.status == SolveStatus::solved);
  CHECK(r3.duration == Rat(8));
}

TEST_CASE("exact solver matches the exhaustive oracle") {
  auto in = example_line();
  auto orc = oracle_schedule(in, 4);
  REQUIRE(orc.kind == OracleScheduleResult::Kind::value);
  CHECK(orc.duration == solve_exact(in).duration);
}

TEST_CASE("exact solver detects infeasibility") {
  Instance in;
  in.kind = GraphKind::line;
  in.mode = Positioning::free_choice;
  for (long long x : {0, 1, 2, 3}) in.line_vertices.push_back(Rat(x));
  in.agents = {{"a", Rat(1), Interval{Rat(0), Rat(1)}, std::nullopt},
               {"b", Rat(1), Interval{Rat(2), Rat(3)}, std::nullopt}};
  in.source = line_vertex(Rat(0));
  in.target = line_vertex(Rat(3));
  CHECK(solve_exact(in).status == SolveStatus::infeasible);
  CHECK(solve_relaxed(in).status == SolveStatus::infeasible);
  CHECK(oracle_schedule(in).kind == OracleScheduleResult::Kind::infeasible);
}

TEST_CASE("source equal to target is a zero-duration delivery") {
  auto in = example_line();
  in.target = in.source;
  auto r = solve_exact(in);
  CHECK(r.status == SolveStatus::solved);
  CHECK(r.duration == Rat(0));
  CHECK(r.schedule.trips.empty());
}

TEST_CASE("relaxed bound is sound but can be uncertified and strictly low") {
  // a single slow agent must carry almost everything once the fast one is
  // spent; pricing reuse as free makes the relaxation optimistic
  Instance in;
  in.kind = GraphKind::line;
  in.mode = Positioning::free_choice;
  for (long long x = 0; x <= 11; ++x) in.line_vertices.push_back(Rat(x));
  in.agents = {{"slow", Rat(1), Interval{Rat(0), Rat(11)}, std::nullopt},
               {"fast", Rat(10), Interval{Rat(1), Rat(10)}, std::nullopt}};
  in.source = line_vertex(Rat(0));
  in.target = line_vertex(Rat(11));
  auto rel = solve_relaxed(in);
  auto ex = solve_exact(in);
  REQUIRE(rel.status == SolveStatus::solved);
  REQUIRE(ex.status == SolveStatus::solved);
  CHECK(ex.duration == Rat(11));
  CHECK(rel.lower_bound == Rat(29, 10));
  CHECK_FALSE(rel.certified);
  CHECK(rel.lower_bound < ex.duration);
}

TEST_CASE("relaxed candidate is feasible when certified") {
  auto in = example_line();
  auto rel = solve_relaxed(in);
  REQUIRE(rel.status == SolveStatus::solved);
  if (rel.certified) {
    auto v = validate(in, rel.candidate);
    CHECK(v.feasible);
    CHECK(v.duration == rel.lower_bound);
  }
  CHECK(rel.lower_bound <= solve_exact(in).duration);
}

TEST_CASE("node budget exhaustion reports unknown with a bound") {
  auto r = solve_exact(example_grid_mixed(), 1);
  CHECK(r.status == SolveStatus::unknown);
  REQUIRE(r.lower_bound);
  CHECK(*r.lower_bound <= Rat(38, 5));
}

TEST_CASE("warm start survives as incumbent under a tiny budget") {
  auto in = example_line();
  Schedule warm;
  warm.trips = {{"d1", line_vertex(Rat(0)), line_vertex(Rat(1)), Rat(0)},
                {"d3", line_vertex(Rat(1)), line_vertex(Rat(4)), Rat(1)},
                {"d2", line_vertex(Rat(4)), line_vertex(Rat(7)), Rat(2)}};
  auto r = solve_exact(in, 1, &warm);
  REQUIRE(r.status == SolveStatus::solved);
  CHECK(r.duration <= Rat(5));
  CHECK_FALSE(r.schedule.trips.empty());
}

TEST_CASE("node budget environment variable is honored") {
  setenv("DDT_NODE_BUDGET", "12345", 1);
  CHECK(detail::default_node_budget() == 12345);
  unsetenv("DDT_NODE_BUDGET");
  CHECK(detail::default_node_budget() == 50'000'000ULL);
}

TEST_CASE("greedy admits by speed and follows the cheapest union path") {
  auto in = example_grid_mixed();
  auto g = solve_greedy_gridr(in);
  REQUIRE(g.outcome.status == SolveStatus::solved);
  CHECK(g.outcome.duration == Rat(38, 5));
  CHECK(g.v_threshold == Rat(1));
  CHECK(g.iterations == 5);  // needs every agent before s-y connects
  auto v = validate(in, g.outcome.schedule);
  CHECK(v.feasible);
  // zero waiting: each pickup happens exactly at the previous arrival
  Rat clock(0);
  for (const auto& tr : g.outcome.schedule.trips) {
    CHECK(tr.t == clock);
    const Agent* a = find_agent(in, tr.agent);
    clock = tr.t + *travel_time(*a, tr.pickup, tr.dropoff);
  }
}

TEST_CASE("greedy rejects non-grid or predefined instances") {
  CHECK_THROWS_AS(solve_greedy_gridr(example_line()), std::invalid_argument);
}

TEST_CASE("greedy ratio witness holds on the mixed example") {
  auto in = example_grid_mixed();
  auto g = solve_greedy_gridr(in);
  auto ex = solve_exact(in);
  auto w = approx_ratio_witness(in, g, ex);
  CHECK(w.bound_holds);
  CHECK(w.ratio == Rat(1));
  CHECK(w.grid_size == 16);
}

TEST_CASE("equal-speed solver is exact on corridors") {
  auto in = example_grid_corridors();
  auto r = solve_equal_speed(in);
  REQUIRE(r.status == SolveStatus::solved);
  CHECK(r.duration == Rat(8));
  CHECK(r.certificate == Certificate::exact);
  CHECK(validate(in, r.schedule).feasible);
  CHECK_THROWS_AS(solve_equal_speed(example_grid_mixed()),
                  std::invalid_argument);
}

TEST_CASE("schedules from the exact solver respect once-per-agent") {
  auto r = solve_exact(example_grid_mixed());
  std::set<std::string> ids;
  for (const auto& tr : r.schedule.trips) CHECK(ids.insert(tr.agent).second);
}
