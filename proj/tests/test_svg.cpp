#include <catch2/catch_amalgamated.hpp>

#include "ddt/reductions.hpp"
#include "ddt/serialize.hpp"
#include "ddt/svg.hpp"

#ifndef DDT_FIXTURES_DIR
#define DDT_FIXTURES_DIR "fixtures"
#endif

using namespace ddt;

namespace {

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = hay.find(needle); p != std::string::npos;
       p = hay.find(needle, p + needle.size()))
    ++n;
  return n;
}

}  // namespace

TEST_CASE("line rendering stacks one shape per agent") {
  auto inst = instance_from_json(
      load_json_file(std::string(DDT_FIXTURES_DIR) + "/fig1.json"));
  auto svg = render_svg(inst);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("version=\"1.1\"") != std::string::npos);
  CHECK(count(svg, "class=\"agent\"") == 4);
  // two fast agents drawn in the fast color
  CHECK(count(svg, "stroke=\"#d62728\"") == 2);
  CHECK(count(svg, "class=\"trip\"") == 0);
}

TEST_CASE("line rendering with a schedule adds solid and dashed arrows") {
  auto inst = instance_from_json(
      load_json_file(std::string(DDT_FIXTURES_DIR) + "/fig1.json"));
  auto sched = schedule_from_json(
      inst,
      load_json_file(std::string(DDT_FIXTURES_DIR) + "/fig1_schedule.json"));
  auto svg = render_svg(inst, &sched);
  CHECK(count(svg, "class=\"trip\"") == 3);
  // d3 flies empty from 4 to 1 before its carrying leg
  CHECK(count(svg, "class=\"empty\"") >= 1);
  CHECK(count(svg, "stroke-dasharray") >= 1);
}

TEST_CASE("grid rendering draws one translucent shape per agent") {
  auto art = gen_2p1n_grid(Formula2P1N::of(1, {{1, 1, -1}}), 8);
  auto svg = render_svg(art.instance);
  // 8 gadget + 1 clause + 1 destination column + 6 literal + 1 bridge
  CHECK(count(svg, "class=\"agent\"") == 17);
  CHECK(count(svg, "fill-opacity") == 17);
}

TEST_CASE("cell areas render cell by cell inside one agent group") {
  auto inst = instance_from_json(
      load_json_file(std::string(DDT_FIXTURES_DIR) + "/fig5b.json"));
  auto svg = render_svg(inst);
  CHECK(count(svg, "class=\"agent\"") == 2);
  CHECK(count(svg, "class=\"agent-cell\"") == 11);  // 5 + 6 cells
}

TEST_CASE("grid schedule arrows follow the trips") {
  auto art = gen_2p1n_grid(Formula2P1N::of(1, {{1, 1, -1}}), 8);
  auto sched = assignment_to_schedule(art, {true});
  auto svg = render_svg(art.instance, &sched);
  CHECK(count(svg, "class=\"trip\"") == sched.trips.size());
}
