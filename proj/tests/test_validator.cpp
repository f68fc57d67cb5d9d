#include <catch2/catch_amalgamated.hpp>

#include "ddt/validator.hpp"

using namespace ddt;

namespace {

// the six-vertex line with two slow and two fast agents whose optimum is 5
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

Schedule good_schedule() {
  Schedule s;
  s.trips = {{"d1", line_vertex(Rat(0)), line_vertex(Rat(1)), Rat(0)},
             {"d3", line_vertex(Rat(1)), line_vertex(Rat(4)), Rat(1)},
             {"d2", line_vertex(Rat(4)), line_vertex(Rat(7)), Rat(2)}};
  return s;
}

}  // namespace

TEST_CASE("a correct schedule validates with its duration") {
  auto in = example_line();
  auto v = validate(in, good_schedule());
  CHECK(v.feasible);
  CHECK(v.duration == Rat(5));
  CHECK(v.violations.empty());
  CHECK(duration_of(in, good_schedule()) == Rat(5));
}

TEST_CASE("empty schedule is feasible only when s equals y") {
  auto in = example_line();
  CHECK_FALSE(validate(in, Schedule{}).feasible);
  in.target = in.source;
  auto v = validate(in, Schedule{});
  CHECK(v.feasible);
  CHECK(v.duration == Rat(0));
}

TEST_CASE("endpoint and chaining violations are reported") {
  auto in = example_line();
  auto s = good_schedule();
  s.trips[0].pickup = line_vertex(Rat(1));
  auto v = validate(in, s);
  CHECK_FALSE(v.feasible);
  // both the s-endpoint and the chain into trip 1 break
  CHECK(v.violations.size() >= 1);

  s = good_schedule();
  s.trips.pop_back();
  CHECK_FALSE(validate(in, s).feasible);
}

TEST_CASE("pickup before the empty phase completes is rejected") {
  auto in = example_line();
  auto s = good_schedule();
  // d3 starts at 4; reaching vertex 1 empty takes 1 time unit
  s.trips[0] = {"d1", line_vertex(Rat(0)), line_vertex(Rat(1)), Rat(0)};
  s.trips[1].t = Rat(1, 2);
  auto v = validate(in, s);
  CHECK_FALSE(v.feasible);
  bool found = false;
  for (const auto& viol : v.violations)
    if (viol.what.find("empty phase") != std::string::npos) found = true;
  CHECK(found);
}

TEST_CASE("handover timing must respect the previous arrival") {
  auto in = example_line();
  auto s = good_schedule();
  s.trips[2].t = Rat(3, 2);  // d3 only arrives at 2
  CHECK_FALSE(validate(in, s).feasible);
}

TEST_CASE("waiting at a vertex is allowed") {
  auto in = example_line();
  auto s = good_schedule();
  s.trips[2].t = Rat(3);
  auto v = validate(in, s);
  CHECK(v.feasible);
  CHECK(v.duration == Rat(6));
}

TEST_CASE("trips outside the area or with unknown agents fail") {
  auto in = example_line();
  auto s = good_schedule();
  s.trips[1].agent = "nobody";
  CHECK_FALSE(validate(in, s).feasible);

  s = good_schedule();
  s.trips[1] = {"d4", line_vertex(Rat(1)), line_vertex(Rat(4)), Rat(1)};
  auto v = validate(in, s);
  CHECK_FALSE(v.feasible);
}

TEST_CASE("once-per-agent normal form is enforced by default") {
  auto in = example_line();
  Schedule s;
  s.trips = {{"d1", line_vertex(Rat(0)), line_vertex(Rat(1)), Rat(0)},
             {"d3", line_vertex(Rat(1)), line_vertex(Rat(4)), Rat(1)},
             {"d3", line_vertex(Rat(4)), line_vertex(Rat(4)), Rat(2)},
             {"d2", line_vertex(Rat(4)), line_vertex(Rat(7)), Rat(2)}};
  CHECK_FALSE(validate(in, s).feasible);
  CHECK(validate(in, s, /*enforce_once_per_agent=*/false).feasible);
}

TEST_CASE("duration_of throws on structural breakage") {
  auto in = example_line();
  auto s = good_schedule();
  s.trips[1].dropoff = line_vertex(Rat(5));  // chain break into trip 2
  CHECK_THROWS_AS(duration_of(in, s), std::invalid_argument);
  // but tolerates bad timing
  s = good_schedule();
  s.trips[1].t = Rat(0);
  CHECK(duration_of(in, s) == Rat(5));
}
