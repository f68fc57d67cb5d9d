#include <catch2/catch_amalgamated.hpp>

#include "ddt/model.hpp"

using namespace ddt;

namespace {

Instance tiny_line() {
  Instance in;
  in.kind = GraphKind::line;
  in.mode = Positioning::predefined;
  for (long long x : {0, 1, 3}) in.line_vertices.push_back(Rat(x));
  in.agents = {{"a", Rat(2), Interval{Rat(0), Rat(3)}, line_vertex(Rat(3))}};
  in.source = line_vertex(Rat(0));
  in.target = line_vertex(Rat(3));
  return in;
}

}  // namespace

TEST_CASE("interval areas") {
  Agent a{"a", Rat(2), Interval{Rat(1), Rat(4)}, std::nullopt};
  CHECK(area_contains(a.area, line_vertex(Rat(1))));
  CHECK(area_contains(a.area, line_vertex(Rat(5, 2))));
  CHECK_FALSE(area_contains(a.area, line_vertex(Rat(9, 2))));
  CHECK(*area_distance(a, line_vertex(Rat(1)), line_vertex(Rat(4))) == Rat(3));
  CHECK(*travel_time(a, line_vertex(Rat(1)), line_vertex(Rat(4))) == Rat(3, 2));
  CHECK_FALSE(area_distance(a, line_vertex(Rat(0)), line_vertex(Rat(4))));
}

TEST_CASE("rectangle areas use Manhattan distance") {
  Agent a{"a", Rat(1), Rect{0, 3, 0, 2}, std::nullopt};
  CHECK(*area_distance(a, grid_vertex(0, 0), grid_vertex(3, 2)) == Rat(5));
  CHECK_FALSE(area_contains(a.area, grid_vertex(4, 0)));
  CHECK_FALSE(area_contains(a.area, Vertex{Rat(1, 2), Rat(0)}));
}

TEST_CASE("rectangle distance agrees with its explicit cell set") {
  // convexity: every rectangle path is realizable cell by cell
  Rect rc{0, 3, 0, 2};
  GridCells gc;
  for (long long x = rc.x_min; x <= rc.x_max; ++x)
    for (long long y = rc.y_min; y <= rc.y_max; ++y) gc.cells.insert({x, y});
  Agent ar{"r", Rat(1), rc, std::nullopt};
  Agent ac{"c", Rat(1), gc, std::nullopt};
  for (long long x1 = 0; x1 <= 3; ++x1)
    for (long long y1 = 0; y1 <= 2; ++y1)
      for (long long x2 = 0; x2 <= 3; ++x2)
        for (long long y2 = 0; y2 <= 2; ++y2)
          CHECK(*area_distance(ar, grid_vertex(x1, y1), grid_vertex(x2, y2)) ==
                *area_distance(ac, grid_vertex(x1, y1), grid_vertex(x2, y2)));
}

TEST_CASE("cell-set distance can exceed Manhattan distance") {
  // an L-shaped corridor: (8,2) to (10,3) is 3 by Manhattan but 5 by path
  GridCells gc{{{8, 2}, {8, 1}, {9, 1}, {10, 1}, {10, 2}, {10, 3}}};
  Agent a{"a", Rat(1), gc, std::nullopt};
  CHECK(*area_distance(a, grid_vertex(8, 2), grid_vertex(10, 3)) == Rat(5));
}

TEST_CASE("disconnected cell endpoints have no distance") {
  GridCells gc{{{0, 0}, {2, 0}}};
  CHECK_FALSE(grid_cells_distance(gc, {0, 0}, {2, 0}));
}

TEST_CASE("ready time reflects the empty phase") {
  auto in = tiny_line();
  const Agent& a = in.agents[0];
  CHECK(*ready_time(in, a, line_vertex(Rat(0))) == Rat(3, 2));
  CHECK(*ready_time(in, a, line_vertex(Rat(3))) == Rat(0));
  in.mode = Positioning::free_choice;
  CHECK(*ready_time(in, a, line_vertex(Rat(0))) == Rat(0));
}

TEST_CASE("vertex table covers union of areas plus endpoints") {
  Instance in;
  in.kind = GraphKind::grid;
  in.mode = Positioning::free_choice;
  in.agents = {{"a", Rat(1), Rect{0, 1, 0, 0}, std::nullopt}};
  in.source = grid_vertex(0, 0);
  in.target = grid_vertex(5, 5);  // isolated target still shows up
  auto verts = vertex_table(in);
  CHECK(verts.size() == 3);
  CHECK(graph_has_vertex(in, grid_vertex(5, 5)));
  CHECK_FALSE(graph_has_vertex(in, grid_vertex(2, 2)));
}

TEST_CASE("instance checks flag structural problems") {
  auto in = tiny_line();
  CHECK(check_instance(in).empty());

  auto bad = in;
  bad.agents[0].start = line_vertex(Rat(10));
  CHECK_FALSE(check_instance(bad).empty());

  bad = in;
  bad.agents.push_back(bad.agents[0]);  // duplicate id
  CHECK_FALSE(check_instance(bad).empty());

  bad = in;
  bad.agents[0].speed = Rat(0);
  CHECK_FALSE(check_instance(bad).empty());

  Instance grid;
  grid.kind = GraphKind::grid;
  grid.mode = Positioning::free_choice;
  grid.agents = {{"a", Rat(1), GridCells{{{0, 0}, {2, 0}}}, std::nullopt}};
  grid.source = grid_vertex(0, 0);
  grid.target = grid_vertex(2, 0);
  auto problems = check_instance(grid);
  REQUIRE(problems.size() == 1);
  CHECK(problems[0].find("disconnected") != std::string::npos);
}
