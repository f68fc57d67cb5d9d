// Command-line surface: validate schedules, run the solvers, generate
// hardness instances, query the brute-force oracles, render SVG pictures,
// and run the acceptance benchmark.
//
// Exit codes: 0 success, 1 infeasible / unsat / bound-only answer,
// 2 usage or input error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ddt/bench.hpp"
#include "ddt/oracles.hpp"
#include "ddt/reductions.hpp"
#include "ddt/serialize.hpp"
#include "ddt/solvers.hpp"
#include "ddt/svg.hpp"

namespace {

std::string rat_cli(const ddt::Rat& r) {
  return std::to_string(r.num()) + "/" + std::to_string(r.den());
}

std::string rat_pretty(const ddt::Rat& r) {
  std::ostringstream os;
  os << rat_cli(r) << " (= " << r.to_double() << ")";
  return os.str();
}

std::vector<long long> parse_set(const std::string& csv) {
  std::vector<long long> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ','))
    out.push_back(std::stoll(item));
  return out;
}

/// DIMACS-style clause list: optional "p cnf <vars> <clauses>" header,
/// "c" comment lines, clauses as whitespace-separated literals ending in 0.
std::pair<int, std::vector<std::vector<int>>> parse_dimacs(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  int n_vars = 0;
  std::vector<std::vector<int>> clauses;
  std::vector<int> cur;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == 'c') continue;
    if (line[0] == 'p') {
      std::stringstream ss(line);
      std::string p, cnf;
      ss >> p >> cnf >> n_vars;
      continue;
    }
    std::stringstream ss(line);
    int lit;
    while (ss >> lit) {
      if (lit == 0) {
        if (!cur.empty()) clauses.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(lit);
        n_vars = std::max(n_vars, lit > 0 ? lit : -lit);
      }
    }
  }
  if (!cur.empty()) clauses.push_back(cur);
  return {n_vars, clauses};
}

ddt::Instance load_instance_or_artifact(const std::string& path,
                                        ddt::ReductionArtifact* art_out) {
  auto j = ddt::load_json_file(path);
  if (j.contains("instance")) {
    auto art = ddt::artifact_from_json(j);
    if (art_out) *art_out = art;
    return art.instance;
  }
  std::vector<std::string> warnings;
  auto inst = ddt::instance_from_json(j, &warnings);
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
  return inst;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"toolkit for the drone delivery problem with respect to time"};
  app.require_subcommand(1);

  // validate
  std::string v_inst, v_sched;
  auto* validate_cmd =
      app.add_subcommand("validate", "check a schedule against an instance");
  validate_cmd->add_option("instance", v_inst)->required();
  validate_cmd->add_option("schedule", v_sched)->required();

  // solve
  std::string s_inst, s_method = "exact", s_out;
  std::uint64_t s_budget = 0;
  auto* solve_cmd = app.add_subcommand("solve", "run a solver on an instance");
  solve_cmd->add_option("instance", s_inst)->required();
  solve_cmd->add_option("--method", s_method)
      ->check(CLI::IsMember({"exact", "relaxed", "greedy", "equal-speed"}));
  solve_cmd->add_option("-o,--output", s_out, "write the schedule here");
  solve_cmd->add_option("--budget", s_budget,
                        "node budget for the exact solver "
                        "(default: DDT_NODE_BUDGET or 5e7)");

  // gen
  auto* gen_cmd = app.add_subcommand("gen", "generate a hardness instance");
  std::string g_set, g_eps, g_formula, g_out = "-";
  long long g_a = 0;
  auto* gen_part = gen_cmd->add_subcommand(
      "partition", "number-partition instance on the line");
  gen_part->add_option("--set", g_set, "comma-separated elements")->required();
  gen_part->add_option("--eps", g_eps, "offset, default 1/(2P)");
  gen_part->add_option("-o,--output", g_out);
  auto* gen_sat =
      gen_cmd->add_subcommand("sat", "2P1N-3SAT instance on the grid");
  gen_sat->add_option("--formula", g_formula, "DIMACS-style clause file")
      ->required();
  gen_sat->add_option("--a", g_a, "gadget spacing (>= 3)")->required();
  gen_sat->add_option("-o,--output", g_out);

  // oracle
  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force reference answers");
  std::string o_inst, o_set, o_formula;
  std::size_t o_max_agents = 8;
  auto* o_sched = oracle_cmd->add_subcommand("schedule", "exhaustive optimum");
  o_sched->add_option("instance", o_inst)->required();
  o_sched->add_option("--max-agents", o_max_agents);
  auto* o_part = oracle_cmd->add_subcommand("partition", "subset-sum witness");
  o_part->add_option("--set", o_set)->required();
  auto* o_sat = oracle_cmd->add_subcommand("sat", "truth-table satisfiability");
  o_sat->add_option("--formula", o_formula)->required();

  // render
  std::string r_inst, r_sched, r_out = "-";
  auto* render_cmd = app.add_subcommand("render", "draw an instance as SVG");
  render_cmd->add_option("instance", r_inst)->required();
  render_cmd->add_option("--schedule", r_sched);
  render_cmd->add_option("-o,--output", r_out);

  // bench
  std::string b_fixtures = "fixtures";
  bool b_extended = false;
  auto* bench_cmd =
      app.add_subcommand("bench", "run the acceptance suite and print a table");
  bench_cmd->add_option("--fixtures", b_fixtures, "fixture directory");
  bench_cmd->add_flag("--extended", b_extended,
                      "include the slow desk-scale equivalence sweep");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*validate_cmd) {
      auto inst = load_instance_or_artifact(v_inst, nullptr);
      auto sched = ddt::schedule_from_json(inst, ddt::load_json_file(v_sched));
      auto v = ddt::validate(inst, sched);
      if (v.feasible) {
        std::cout << "feasible, duration " << rat_pretty(v.duration) << "\n";
        return 0;
      }
      std::cout << "infeasible\n";
      for (const auto& viol : v.violations)
        std::cout << "  trip " << viol.trip << ": " << viol.what << "\n";
      return 1;
    }

    if (*solve_cmd) {
      auto inst = load_instance_or_artifact(s_inst, nullptr);
      ddt::SolveOutcome res;
      if (s_method == "exact") {
        res = ddt::solve_exact(
            inst, s_budget ? std::optional<std::uint64_t>(s_budget)
                           : std::nullopt);
      } else if (s_method == "relaxed") {
        auto rel = ddt::solve_relaxed(inst);
        if (rel.status == ddt::SolveStatus::infeasible) {
          std::cout << "infeasible\n";
          return 1;
        }
        std::cout << rat_cli(rel.lower_bound)
                  << (rel.certified ? " certified" : " lower-bound") << " (= "
                  << rel.lower_bound.to_double() << ")\n";
        if (!s_out.empty() && !rel.candidate.trips.empty())
          ddt::save_json_file(s_out, ddt::schedule_to_json(inst, rel.candidate));
        return rel.certified ? 0 : 1;
      } else if (s_method == "greedy") {
        auto g = ddt::solve_greedy_gridr(inst);
        res = g.outcome;
      } else {
        res = ddt::solve_equal_speed(inst);
      }
      if (res.status == ddt::SolveStatus::infeasible) {
        std::cout << "infeasible\n";
        return 1;
      }
      if (res.status == ddt::SolveStatus::unknown) {
        std::cout << "unknown";
        if (res.lower_bound)
          std::cout << ", lower bound " << rat_pretty(*res.lower_bound);
        std::cout << "\n";
        return 1;
      }
      const char* cert = res.certificate == ddt::Certificate::exact
                             ? "exact"
                             : res.certificate == ddt::Certificate::lb_certified
                                   ? "lb-certified"
                                   : "heuristic";
      std::cout << rat_cli(res.duration) << " " << cert << " (= "
                << res.duration.to_double() << ")\n";
      if (!s_out.empty())
        ddt::save_json_file(s_out, ddt::schedule_to_json(inst, res.schedule));
      return 0;
    }

    if (*gen_cmd) {
      ddt::ReductionArtifact art;
      if (*gen_part) {
        auto in = ddt::PartitionInput::of(parse_set(g_set));
        ddt::Rat eps = g_eps.empty() ? ddt::Rat(1, 2 * in.sum)
                                     : ddt::Rat::parse(g_eps);
        art = ddt::gen_partition_line(in, eps);
      } else if (*gen_sat) {
        auto [nv, clauses] = parse_dimacs(g_formula);
        art = ddt::gen_2p1n_grid(ddt::Formula2P1N::of(nv, clauses), g_a);
      } else {
        std::cerr << "gen needs a subcommand (partition or sat)\n";
        return 2;
      }
      auto doc = ddt::artifact_to_json(art);
      if (g_out == "-")
        std::cout << ddt::pretty(doc);
      else
        ddt::save_json_file(g_out, doc);
      for (const auto& [k, v] : art.thresholds)
        std::cerr << k << " = " << rat_pretty(v) << "\n";
      return 0;
    }

    if (*oracle_cmd) {
      if (*o_sched) {
        auto inst = load_instance_or_artifact(o_inst, nullptr);
        auto res = ddt::oracle_schedule(inst, o_max_agents);
        switch (res.kind) {
          case ddt::OracleScheduleResult::Kind::value:
            std::cout << rat_pretty(res.duration) << "\n";
            return 0;
          case ddt::OracleScheduleResult::Kind::infeasible:
            std::cout << "infeasible\n";
            return 1;
          default:
            std::cout << "budget exhausted after " << res.explored
                      << " states\n";
            return 1;
        }
      }
      if (*o_part) {
        auto witness = ddt::oracle_partition(parse_set(o_set));
        if (!witness) {
          std::cout << "none\n";
          return 1;
        }
        std::cout << "witness indices:";
        for (int i : *witness) std::cout << " " << i;
        std::cout << "\n";
        return 0;
      }
      if (*o_sat) {
        auto [nv, clauses] = parse_dimacs(o_formula);
        auto assignment = ddt::oracle_sat(nv, clauses);
        if (!assignment) {
          std::cout << "unsat\n";
          return 1;
        }
        std::cout << "sat:";
        for (int v = 0; v < nv; ++v)
          std::cout << " x" << v + 1 << "=" << (*assignment)[v];
        std::cout << "\n";
        return 0;
      }
      std::cerr << "oracle needs a subcommand (schedule, partition, sat)\n";
      return 2;
    }

    if (*render_cmd) {
      auto inst = load_instance_or_artifact(r_inst, nullptr);
      std::optional<ddt::Schedule> sched;
      if (!r_sched.empty())
        sched = ddt::schedule_from_json(inst, ddt::load_json_file(r_sched));
      std::string svg = ddt::render_svg(inst, sched ? &*sched : nullptr);
      if (r_out == "-") {
        std::cout << svg;
      } else {
        std::ofstream out(r_out);
        if (!out) throw std::runtime_error("cannot write " + r_out);
        out << svg;
      }
      return 0;
    }

    if (*bench_cmd) {
      auto results = ddt::bench::run_acceptance(b_fixtures, b_extended);
      bool all_pass = true;
      std::printf("%-4s %-45s %-8s %8s  %s\n", "#", "criterion", "result",
                  "seconds", "detail");
      for (const auto& r : results) {
        const char* status = r.skipped ? "skipped" : r.pass ? "pass" : "FAIL";
        if (!r.skipped && !r.pass) all_pass = false;
        std::printf("%-4d %-45s %-8s %8.2f  %s\n", r.id, r.name.c_str(), status,
                    r.seconds, r.detail.c_str());
      }
      return all_pass ? 0 : 1;
    }
  } catch (const ddt::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
