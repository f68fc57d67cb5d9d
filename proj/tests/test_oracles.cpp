#include <catch2/catch_amalgamated.hpp>

#include "ddt/oracles.hpp"

using namespace ddt;

TEST_CASE("schedule oracle solves a hand-checkable chain") {
  Instance in;
  in.kind = GraphKind::line;
  in.mode = Positioning::free_choice;
  for (long long x : {0, 2, 4}) in.line_vertices.push_back(Rat(x));
  in.agents = {{"a", Rat(1), Interval{Rat(0), Rat(2)}, std::nullopt},
               {"b", Rat(2), Interval{Rat(2), Rat(4)}, std::nullopt}};
  in.source = line_vertex(Rat(0));
  in.target = line_vertex(Rat(4));
  auto res = oracle_schedule(in);
  REQUIRE(res.kind == OracleScheduleResult::Kind::value);
  CHECK(res.duration == Rat(3));  // 2 at speed 1, then 2 at speed 2
}

TEST_CASE("schedule oracle accounts for empty phases") {
  Instance in;
  in.kind = GraphKind::line;
  in.mode = Positioning::predefined;
  for (long long x : {0, 2, 4}) in.line_vertices.push_back(Rat(x));
  in.agents = {{"a", Rat(1), Interval{Rat(0), Rat(4)}, line_vertex(Rat(4))}};
  in.source = line_vertex(Rat(0));
  in.target = line_vertex(Rat(4));
  auto res = oracle_schedule(in);
  REQUIRE(res.kind == OracleScheduleResult::Kind::value);
  CHECK(res.duration == Rat(8));  // 4 empty, 4 carrying
}

TEST_CASE("schedule oracle reports infeasibility and budget exhaustion") {
  Instance in;
  in.kind = GraphKind::line;
  in.mode = Positioning::free_choice;
  for (long long x : {0, 1, 3}) in.line_vertices.push_back(Rat(x));
  in.agents = {{"a", Rat(1), Interval{Rat(0), Rat(1)}, std::nullopt}};
  in.source = line_vertex(Rat(0));
  in.target = line_vertex(Rat(3));
  CHECK(oracle_schedule(in).kind == OracleScheduleResult::Kind::infeasible);

  in.agents = {{"a", Rat(1), Interval{Rat(0), Rat(3)}, std::nullopt},
               {"b", Rat(1), Interval{Rat(0), Rat(3)}, std::nullopt}};
  auto starved = oracle_schedule(in, 2, /*budget=*/1);
  CHECK(starved.kind == OracleScheduleResult::Kind::budget_exhausted);
}

TEST_CASE("partition oracle finds witnesses and rejects odd sums") {
  auto w = oracle_partition({1, 1, 2});
  REQUIRE(w);
  long long sum = 0;
  for (int i : *w) sum += std::vector<long long>{1, 1, 2}[i - 1];
  CHECK(sum == 2);

  CHECK(oracle_partition({3, 5, 8, 16}));   // {16} against {3, 5, 8}
  CHECK_FALSE(oracle_partition({1, 1, 1, 5}));
  CHECK_FALSE(oracle_partition({1, 2}));    // odd total
  CHECK(oracle_partition({}));              // empty set sums to 0 = 0
}

TEST_CASE("sat oracle agrees with hand-checked formulas") {
  auto yes = oracle_sat(1, {{1, 1, -1}});
  REQUIRE(yes);
  CHECK(oracle_sat(2, {{1, 2}, {-1}, {-2}, {1, 2}}) == std::nullopt);
  auto forced = oracle_sat(2, {{1}, {-2}});
  REQUIRE(forced);
  CHECK((*forced)[0]);
  CHECK_FALSE((*forced)[1]);
}
