#include <catch2/catch_amalgamated.hpp>

#include "ddt/bench.hpp"
#include "ddt/serialize.hpp"

#ifndef DDT_FIXTURES_DIR
#define DDT_FIXTURES_DIR "fixtures"
#endif

using namespace ddt;

TEST_CASE("instance documents round-trip") {
  for (const char* f : {"fig1.json", "fig5a.json", "fig5b.json"}) {
    auto path = std::string(DDT_FIXTURES_DIR) + "/" + f;
    auto doc = load_json_file(path);
    auto inst = instance_from_json(doc);
    CHECK(instance_to_json(inst) == doc);
    CHECK(check_instance(inst).empty());
  }
}

TEST_CASE("artifact documents round-trip with thresholds intact") {
  auto path = std::string(DDT_FIXTURES_DIR) + "/partition_yes.json";
  auto doc = load_json_file(path);
  auto art = artifact_from_json(doc);
  CHECK(artifact_to_json(art) == doc);
  CHECK(art.thresholds.at("t") == Rat(593, 4));
  REQUIRE(art.partition);
  CHECK(art.partition->elems == std::vector<long long>{1, 1, 2});
  CHECK(art.epsilon == Rat(1, 8));

  path = std::string(DDT_FIXTURES_DIR) + "/sat_unsat.json";
  doc = load_json_file(path);
  auto sat_art = artifact_from_json(doc);
  CHECK(artifact_to_json(sat_art) == doc);
  REQUIRE(sat_art.formula);
  CHECK(sat_art.spacing == 116);
  CHECK(sat_art.thresholds.at("t_yes") == Rat(114));
}

TEST_CASE("schedule documents round-trip against their instance") {
  auto inst = instance_from_json(
      load_json_file(std::string(DDT_FIXTURES_DIR) + "/fig1.json"));
  auto doc =
      load_json_file(std::string(DDT_FIXTURES_DIR) + "/fig1_schedule.json");
  auto sched = schedule_from_json(inst, doc);
  CHECK(schedule_to_json(inst, sched) == doc);
  auto v = validate(inst, sched);
  CHECK(v.feasible);
  CHECK(v.duration == Rat(5));
}

TEST_CASE("non-canonical rationals load with a warning") {
  Json j = Json::parse(R"({
    "version": 1, "kind": "line", "mode": "free",
    "vertices": ["0", "2/4", "5/1"],
    "agents": [{"id": "a", "speed": "1", "area": {"interval": ["0", "5/1"]}}],
    "package": {"s": "0", "y": "5/1"}
  })");
  std::vector<std::string> warnings;
  auto inst = instance_from_json(j, &warnings);
  CHECK(inst.line_vertices[1] == Rat(1, 2));
  CHECK(inst.line_vertices[2] == Rat(5));
  CHECK(warnings.size() >= 2);
  CHECK(warnings[0].find("2/4") != std::string::npos);
}

TEST_CASE("schema errors carry the path of the offending field") {
  Json j = Json::parse(R"({
    "version": 1, "kind": "line", "mode": "free", "vertices": ["0", "1"],
    "agents": [{"id": "a", "speed": "fast",
                "area": {"interval": ["0", "1"]}}],
    "package": {"s": "0", "y": "1"}
  })");
  try {
    instance_from_json(j);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.where == "instance.agents[0].speed");
  }

  j["agents"][0]["speed"] = "1";
  j["agents"][0].erase("area");
  try {
    instance_from_json(j);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.where.find("agents[0]") != std::string::npos);
  }

  CHECK_THROWS_AS(instance_from_json(Json::parse("{\"kind\": \"circle\"}")),
                  ParseError);
}

TEST_CASE("generated artifacts reload bit-identically") {
  auto art = gen_2p1n_grid(Formula2P1N::of(1, {{1, 1, -1}}), 8);
  auto once = pretty(artifact_to_json(art));
  auto again = pretty(artifact_to_json(artifact_from_json(Json::parse(once))));
  CHECK(once == again);
}

TEST_CASE("fixture files are byte-stable under load and save") {
  for (const char* f :
       {"fig1.json", "fig5a.json", "fig5b.json", "partition_yes.json",
        "partition_no.json", "sat_sat.json", "sat_unsat.json"}) {
    auto path = std::string(DDT_FIXTURES_DIR) + "/" + f;
    auto text = bench::detail::slurp(path);
    auto doc = load_json_file(path);
    std::string regenerated;
    if (doc.contains("instance"))
      regenerated = pretty(artifact_to_json(artifact_from_json(doc)));
    else
      regenerated = pretty(instance_to_json(instance_from_json(doc)));
    INFO(f);
    CHECK(regenerated == text);
  }
}
