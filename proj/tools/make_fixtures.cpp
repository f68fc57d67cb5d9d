#include "ddt/serialize.hpp"
using namespace ddt;
int main() {
  // Fig 1 line instance and its optimal schedule
  Instance f1;
  f1.kind = GraphKind::line;
  f1.mode = Positioning::predefined;
  for (long long x : {0, 1, 4, 5, 6, 7}) f1.line_vertices.push_back(Rat(x));
  f1.agents = {
      {"d1", Rat(1), Interval{Rat(0), Rat(1)}, line_vertex(Rat(0))},
      {"d2", Rat(1), Interval{Rat(4), Rat(7)}, line_vertex(Rat(4))},
      {"d3", Rat(3), Interval{Rat(1), Rat(4)}, line_vertex(Rat(4))},
      {"d4", Rat(3), Interval{Rat(5), Rat(6)}, line_vertex(Rat(5))}};
  f1.source = line_vertex(Rat(0));
  f1.target = line_vertex(Rat(7));
  save_json_file("fixtures/fig1.json", instance_to_json(f1));
  Schedule s1;
  s1.trips = {{"d1", line_vertex(Rat(0)), line_vertex(Rat(1)), Rat(0)},
              {"d3", line_vertex(Rat(1)), line_vertex(Rat(4)), Rat(1)},
              {"d2", line_vertex(Rat(4)), line_vertex(Rat(7)), Rat(2)}};
  save_json_file("fixtures/fig1_schedule.json", schedule_to_json(f1, s1));

  Instance f5a;
  f5a.kind = GraphKind::grid;
  f5a.mode = Positioning::free_choice;
  f5a.agents = {{"a1", Rat(1), Rect{0, 3, 0, 0}, {}},
                {"a2", Rat(1), Rect{2, 2, 0, 3}, {}},
                {"a3", Rat(1), Rect{0, 1, 2, 3}, {}},
                {"a4", Rat(1), Rect{1, 3, 3, 3}, {}},
                {"a5", Rat(5), Rect{3, 3, 0, 3}, {}}};
  f5a.source = grid_vertex(0, 0);
  f5a.target = grid_vertex(0, 2);
  save_json_file("fixtures/fig5a.json", instance_to_json(f5a));

  Instance f5b;
  f5b.kind = GraphKind::grid;
  f5b.mode = Positioning::free_choice;
  f5b.agents = {
      {"a1", Rat(1), GridCells{{{7, 0}, {7, 1}, {7, 2}, {7, 3}, {8, 2}}}, {}},
      {"a2", Rat(1),
       GridCells{{{8, 2}, {8, 1}, {9, 1}, {10, 1}, {10, 2}, {10, 3}}}, {}}};
  f5b.source = grid_vertex(7, 0);
  f5b.target = grid_vertex(10, 3);
  save_json_file("fixtures/fig5b.json", instance_to_json(f5b));

  auto yes = gen_partition_line(PartitionInput::of({1, 1, 2}), Rat(1, 8));
  save_json_file("fixtures/partition_yes.json", artifact_to_json(yes));
  auto no = gen_partition_line(PartitionInput::of({1, 1, 1, 5}), Rat(1, 16));
  save_json_file("fixtures/partition_no.json", artifact_to_json(no));

  auto sat = gen_2p1n_grid(Formula2P1N::of(1, {{1, 1, -1}}), 8);
  save_json_file("fixtures/sat_sat.json", artifact_to_json(sat));
  auto uns = gen_2p1n_grid(Formula2P1N::of(2, {{-1}, {-2}, {1, 2}, {1, 2}}), 116);
  save_json_file("fixtures/sat_unsat.json", artifact_to_json(uns));
  return 0;
}
