#pragma once

#include <array>
#include <cmath>
#include <cstdlib>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "ddt/model.hpp"
#include "ddt/validator.hpp"

namespace ddt {

// ---------------------------------------------------------------------------
// Partition -> DDT-Line (predefined positions, speeds 1 and 2P)
// ---------------------------------------------------------------------------

struct PartitionInput {
  std::vector<long long> elems;  // positive, non-descending
  long long sum = 0;

  static PartitionInput of(std::vector<long long> elems) {
    PartitionInput in;
    if (elems.size() < 2)
      throw std::invalid_argument("partition input needs at least 2 elements");
    for (std::size_t i = 0; i < elems.size(); ++i) {
      if (elems[i] <= 0)
        throw std::invalid_argument("partition elements must be positive");
      if (i > 0 && elems[i] < elems[i - 1])
        throw std::invalid_argument("partition elements must be non-descending");
      in.sum += elems[i];
    }
    in.elems = std::move(elems);
    return in;
  }
  int n() const { return static_cast<int>(elems.size()); }
};

/// Interval endpoints and derived quantities of the line construction.
/// Arrays are 1-based conceptually; index 0 is used for l_0 / r_0'.
struct PartitionLineLayout {
  std::vector<Rat> l, lp;      // l_i, l_i' for i = 0..n (lp[0] unused)
  std::vector<Rat> r, rp;      // r_i, r_i' for i = 0..n (r[0] unused)
  std::vector<Rat> dl, dr;     // delta_i and delta_i' offsets of the helpers
  Rat eps;
  Rat threshold;               // the yes-instance time bound t
  Rat fast_speed;              // 2P
};

inline PartitionLineLayout partition_line_layout(const PartitionInput& in,
                                                 const Rat& eps) {
  const int n = in.n();
  const Rat P(in.sum);
  if (!(Rat(0) < eps) || Rat(1) / (Rat(2) * P) < eps)
    throw std::invalid_argument("eps must lie in (0, 1/(2P)]");
  PartitionLineLayout lay;
  lay.eps = eps;
  lay.fast_speed = Rat(2) * P;
  const Rat stretch = Rat(2 * n + 2) * P * P;
  lay.l.assign(n + 1, Rat(0));
  lay.lp.assign(n + 1, Rat(0));
  lay.r.assign(n + 1, Rat(0));
  lay.rp.assign(n + 1, Rat(0));
  lay.dl.assign(n + 1, Rat(0));
  lay.dr.assign(n + 1, Rat(0));
  const Rat one_plus = Rat(1) + Rat(1) / P;
  lay.l[n] = stretch - P / Rat(2) - Rat(n, 2) - Rat(1) / (Rat(2) * P) -
             Rat(1) + eps;
  for (int i = n; i >= 1; --i) {
    lay.lp[i] = lay.l[i] + one_plus * Rat(in.elems[i - 1]);
    lay.l[i - 1] = lay.lp[i] + P;
  }
  lay.rp[0] = lay.l[0] + stretch + eps;
  for (int i = 1; i <= n; ++i) {
    lay.r[i] = lay.rp[i - 1] + P;
    lay.rp[i] = lay.r[i] + Rat(in.elems[i - 1]);
  }
  const Rat four_p_minus_2 = Rat(4) * P - Rat(2);
  for (int i = 1; i <= n; ++i) {
    lay.dl[i] = one_plus * Rat(in.elems[i - 1]) / four_p_minus_2;
    lay.dr[i] = Rat(in.elems[i - 1]) / four_p_minus_2;
  }
  lay.threshold = stretch + (Rat(n) + Rat(3, 2)) * P + Rat(n, 2) +
                  Rat(1, 2) + Rat(2) * eps;
  return lay;
}

// ---------------------------------------------------------------------------
// 2P1N-3SAT -> DDT-GridR (free positions, speeds 1 and a-1)
// ---------------------------------------------------------------------------

/// CNF where each variable occurs exactly twice positively and once
/// negatively. Literals are signed 1-based variable indices.
struct Formula2P1N {
  int n_vars = 0;
  std::vector<std::vector<int>> clauses;

  static Formula2P1N of(int n_vars, std::vector<std::vector<int>> clauses) {
    Formula2P1N f;
    f.n_vars = n_vars;
    f.clauses = std::move(clauses);
    std::vector<int> pos(n_vars + 1, 0), neg(n_vars + 1, 0);
    for (const auto& cl : f.clauses) {
      if (cl.empty() || cl.size() > 3)
        throw std::invalid_argument("clauses must hold 1 to 3 literals");
      for (int lit : cl) {
        int v = lit > 0 ? lit : -lit;
        if (v < 1 || v > n_vars)
          throw std::invalid_argument("literal references unknown variable");
        (lit > 0 ? pos : neg)[v]++;
      }
    }
    for (int v = 1; v <= n_vars; ++v)
      if (pos[v] != 2 || neg[v] != 1)
        throw std::invalid_argument(
            "variable " + std::to_string(v) +
            " must occur exactly twice positively and once negatively");
    return f;
  }
  int n_clauses() const { return static_cast<int>(clauses.size()); }

  bool satisfies(const std::vector<bool>& assignment) const {
    for (const auto& cl : clauses) {
      bool sat = false;
      for (int lit : cl)
        if (lit > 0 ? assignment[lit - 1] : !assignment[-lit - 1]) sat = true;
      if (!sat) return false;
    }
    return true;
  }

  /// Clause index (1-based) of each occurrence: (i, 1) and (i, 2) are the
  /// positive occurrences in clause order, (i, 3) the negative one.
  std::vector<std::array<int, 4>> occurrence_clauses() const {
    std::vector<std::array<int, 4>> occ(n_vars + 1, {0, 0, 0, 0});
    std::vector<int> next_pos(n_vars + 1, 1);
    for (int j = 0; j < n_clauses(); ++j)
      for (int lit : clauses[j]) {
        int v = lit > 0 ? lit : -lit;
        if (lit > 0)
          occ[v][next_pos[v]++] = j + 1;
        else
          occ[v][3] = j + 1;
      }
    return occ;
  }
};

struct SatGridParams {
  long long spacing = 0;       // a
  Rat fast_speed;              // a - 1
  long long grid_size_bound = 0;  // 8n'(a(m'+1)+3)
  Rat t_yes;
  Rat separation;              // a - 1; any slower bridge exceeds t_yes
};

inline SatGridParams sat_grid_params(const Formula2P1N& f, long long a) {
  if (a < 3) throw std::invalid_argument("spacing a must be at least 3");
  SatGridParams p;
  const long long n = f.n_vars, m = f.n_clauses();
  p.spacing = a;
  p.fast_speed = Rat(a - 1);
  p.grid_size_bound = 8 * n * (a * (m + 1) + 3);
  p.t_yes = Rat(12 * n + 2 + m * (2 + 8 * n) + 8 * n);
  p.separation = Rat(a - 1);
  return p;
}

/// The asymptotic-analysis spacing ceil(n'^(6/eps)) + 1; astronomically large for
/// anything but toy parameters, so callers normally pick their own a.
inline std::optional<long long> suggested_spacing(int n_vars, const Rat& eps) {
  if (n_vars < 1 || !(Rat(0) < eps)) return std::nullopt;
  long double expo = 6.0L * eps.den() / static_cast<long double>(eps.num());
  long double val = std::pow(static_cast<long double>(n_vars), expo);
  if (!(val < 4.0e18L)) return std::nullopt;
  auto ceiled = static_cast<long long>(std::ceil(val));
  return ceiled + 1;
}

// ---------------------------------------------------------------------------
// Generated artifacts
// ---------------------------------------------------------------------------

/// A generated hardness instance bundled with its decision threshold(s)
/// and a map from every agent back to the source element it encodes. The
/// generator inputs ride along so the proof-direction conversions can
/// recompute the layout.
struct ReductionArtifact {
  Instance instance;
  std::map<std::string, Rat> thresholds;
  std::map<std::string, std::string> provenance;
  std::optional<PartitionInput> partition;
  Rat epsilon;
  std::optional<Formula2P1N> formula;
  long long spacing = 0;
};

inline ReductionArtifact gen_partition_line(const PartitionInput& in,
                                            const Rat& eps) {
  auto lay = partition_line_layout(in, eps);
  const int n = in.n();
  ReductionArtifact art;
  art.partition = in;
  art.epsilon = eps;
  Instance& inst = art.instance;
  inst.kind = GraphKind::line;
  inst.mode = Positioning::predefined;
  inst.source = line_vertex(Rat(0));
  inst.target = line_vertex(lay.rp[n]);

  auto add = [&](const std::string& id, Rat speed, Rat lo, Rat hi, Rat start,
                 const std::string& origin) {
    inst.agents.push_back({id, speed, Interval{lo, hi}, line_vertex(start)});
    art.provenance[id] = origin;
  };
  const Rat slow(1);
  add("d", slow, Rat(0), lay.l[n], Rat(0), "delay agent");
  add("p", slow, lay.l[0], lay.rp[0], lay.rp[0], "gap carrier");
  add("q", lay.fast_speed, lay.l[0] + eps, lay.rp[0], lay.rp[0],
      "stretch carrier");
  for (int i = 1; i <= n; ++i) {
    std::string pi = "p_" + std::to_string(i) + " = " +
                     std::to_string(in.elems[i - 1]);
    std::string si = std::to_string(i);
    add("bl" + si, slow, lay.l[i], lay.lp[i], lay.l[i], "left base of " + pi);
    add("fl" + si, lay.fast_speed, lay.lp[i], lay.l[i - 1], lay.lp[i],
        "left connector of " + pi);
    add("br" + si, slow, lay.r[i], lay.rp[i], lay.r[i], "right base of " + pi);
    add("fr" + si, lay.fast_speed, lay.rp[i - 1], lay.r[i], lay.rp[i - 1],
        "right connector of " + pi);
    add("e" + si, slow, lay.l[i], lay.rp[i], lay.l[0] + eps,
        "element agent of " + pi);
    add("hl" + si, lay.fast_speed, lay.l[i] + lay.dl[i], lay.lp[i] - lay.dl[i],
        lay.l[i] + lay.dl[i], "left helper of " + pi);
    add("hr" + si, lay.fast_speed, lay.r[i] + lay.dr[i], lay.rp[i] - lay.dr[i],
        lay.r[i] + lay.dr[i], "right helper of " + pi);
  }
  std::set<Rat> verts{Rat(0)};
  for (const auto& a : inst.agents) {
    const auto& iv = std::get<Interval>(a.area);
    verts.insert(iv.lo);
    verts.insert(iv.hi);
  }
  verts.insert(lay.rp[n]);
  inst.line_vertices.assign(verts.begin(), verts.end());
  art.thresholds["t"] = lay.threshold;
  return art;
}

/// The intended yes-instance schedule: element agents with index in
/// `left_side` assist on the left of the gap, the rest on the right. The
/// indices must select elements summing to exactly P/2; the result then
/// meets the carrier p at the gap with zero waiting and finishes at the
/// threshold time.
inline Schedule partition_to_schedule(const ReductionArtifact& art,
                                      const std::set<int>& left_side) {
  if (!art.partition)
    throw std::invalid_argument("artifact is not a partition-line artifact");
  const PartitionInput& in = *art.partition;
  const int n = in.n();
  long long picked = 0;
  for (int i : left_side) {
    if (i < 1 || i > n)
      throw std::invalid_argument("subset index out of range");
    picked += in.elems[i - 1];
  }
  if (2 * picked != in.sum)
    throw std::invalid_argument("subset does not sum to P/2");
  auto lay = partition_line_layout(in, art.epsilon);
  Schedule s;
  Rat clock(0);
  auto leg = [&](const std::string& id, Rat from, Rat to, Rat speed) {
    s.trips.push_back({id, line_vertex(from), line_vertex(to), clock});
    clock += (to - from).abs() / speed;
  };
  const Rat slow(1), fast = lay.fast_speed;
  leg("d", Rat(0), lay.l[n], slow);
  for (int i = n; i >= 1; --i) {
    std::string si = std::to_string(i);
    if (left_side.count(i)) {
      leg("bl" + si, lay.l[i], lay.l[i] + lay.dl[i], slow);
      leg("hl" + si, lay.l[i] + lay.dl[i], lay.lp[i] - lay.dl[i], fast);
      leg("e" + si, lay.lp[i] - lay.dl[i], lay.lp[i], slow);
    } else {
      leg("bl" + si, lay.l[i], lay.lp[i], slow);
    }
    leg("fl" + si, lay.lp[i], lay.l[i - 1], fast);
  }
  leg("p", lay.l[0], lay.l[0] + lay.eps, slow);
  leg("q", lay.l[0] + lay.eps, lay.rp[0], fast);
  for (int i = 1; i <= n; ++i) {
    std::string si = std::to_string(i);
    leg("fr" + si, lay.rp[i - 1], lay.r[i], fast);
    if (!left_side.count(i)) {
      leg("br" + si, lay.r[i], lay.r[i] + lay.dr[i], slow);
      leg("hr" + si, lay.r[i] + lay.dr[i], lay.rp[i] - lay.dr[i], fast);
      leg("e" + si, lay.rp[i] - lay.dr[i], lay.rp[i], slow);
    } else {
      leg("br" + si, lay.r[i], lay.rp[i], slow);
    }
  }
  return s;
}

struct LemmaQuantities {
  Rat t_skip;    // bypassing a left connector via one element agent
  Rat t_f;       // taking the connector with no adjacent help
  Rat t_greedy;  // best schedule that skips the gap carrier p
  Rat t_star;    // schedule following a perfect partition
};

inline LemmaQuantities lemma_quantities(const PartitionInput& in, int i) {
  const int n = in.n();
  if (i < 2 || i > n) throw std::invalid_argument("index must satisfy 2 <= i <= n");
  const Rat P(in.sum);
  const Rat one_plus = Rat(1) + Rat(1) / P;
  const Rat pi(in.elems[i - 1]), pim1(in.elems[i - 2]);
  const Rat p1(in.elems[0]);
  LemmaQuantities q;
  q.t_skip = one_plus * ((pi + pim1) / P) + P;
  q.t_f = one_plus * (pi + pim1) + Rat(1, 2);
  q.t_greedy = P + p1 + Rat(1) + Rat(1) / P - p1 / (P * P);
  q.t_star = P + Rat(3, 2) + Rat(1) / (Rat(2) * P);
  return q;
}

inline ReductionArtifact gen_2p1n_grid(const Formula2P1N& f, long long a) {
  auto params = sat_grid_params(f, a);
  auto occ = f.occurrence_clauses();
  const long long n = f.n_vars, m = f.n_clauses();
  ReductionArtifact art;
  art.formula = f;
  art.spacing = a;
  Instance& inst = art.instance;
  inst.kind = GraphKind::grid;
  inst.mode = Positioning::free_choice;
  inst.source = grid_vertex(0, 0);
  inst.target = grid_vertex(-(m + 1) * a, 8 * n);

  auto add = [&](const std::string& id, Rat speed, long long x0, long long x1,
                 long long y0, long long y1, const std::string& origin) {
    inst.agents.push_back(
        {id, speed, Rect{x0, x1, y0, y1}, std::nullopt});
    art.provenance[id] = origin;
  };
  const Rat slow(1), fast = params.fast_speed;
  for (long long i = 1; i <= n; ++i) {
    const long long Y = 8 * (i - 1);
    const std::string si = std::to_string(i);
    const std::string origin = "variable gadget of x" + si;
    add("vg" + si + "_base", fast, -2, 2, Y, Y, origin);
    add("vg" + si + "_l1", fast, -2, -2, Y, Y + 1, origin);
    add("vg" + si + "_l2", fast, -2, -2, Y + 2, Y + 3, origin);
    add("vg" + si + "_l3", fast, -2, -2, Y + 4, Y + 7, origin);
    add("vg" + si + "_r1", fast, 2, 2, Y, Y + 5, origin);
    add("vg" + si + "_r2", fast, 2, 2, Y + 6, Y + 7, origin);
    add("vg" + si + "_top", fast, -2, 2, Y + 7, Y + 7, origin);
    add("vg" + si + "_exit", fast, 0, 0, Y + 7, Y + 8, origin);
  }
  for (long long j = 1; j <= m; ++j)
    add("c" + std::to_string(j), fast, -j * a, -j * a, 0, 8 * n,
        "clause " + std::to_string(j));
  add("ch", fast, -(m + 1) * a, -(m + 1) * a, 0, 8 * n, "destination column");
  for (long long i = 1; i <= n; ++i) {
    const long long Y = 8 * (i - 1);
    const std::string si = std::to_string(i);
    for (int k = 1; k <= 3; ++k) {
      const long long j = occ[i][k];
      const std::string sk = std::to_string(k);
      const std::string lit = k == 3 ? "-x" + si : "x" + si;
      const long long row = Y + 2 * k - 1;
      add("x" + si + "_" + sk, slow, -j * a - 1, k == 3 ? 2 : -2, row,
          row + 1,
          "literal " + lit + " occurrence " + sk + " (clause " +
              std::to_string(j) + ")");
      add("xp" + si + "_" + sk, fast, -(j + 1) * a, -j * a - 1, row, row,
          "counterpart of literal " + lit + " occurrence " + sk +
              " (clause " + std::to_string(j) + ")");
    }
  }
  add("g", fast, -a, 0, 8 * n, 8 * n, "gadget-to-clause bridge");
  art.thresholds["t_yes"] = params.t_yes;
  art.thresholds["separation"] = params.separation;
  return art;
}

/// Builds the intended schedule for a satisfying assignment: false
/// variables park their positive literal agents inside the gadget and the
/// negative one at its clause column, true variables the other way round;
/// the package then climbs every gadget, crosses to the clause columns,
/// and bridges each clause gap with an agent of a true literal.
inline Schedule assignment_to_schedule(const ReductionArtifact& art,
                                       const std::vector<bool>& assignment) {
  if (!art.formula)
    throw std::invalid_argument("artifact is not a 2P1N grid artifact");
  const Formula2P1N& f = *art.formula;
  if (static_cast<int>(assignment.size()) != f.n_vars)
    throw std::invalid_argument("assignment size mismatch");
  for (int j = 0; j < f.n_clauses(); ++j) {
    bool sat = false;
    for (int lit : f.clauses[j])
      if (lit > 0 ? assignment[lit - 1] : !assignment[-lit - 1]) sat = true;
    if (!sat)
      throw std::invalid_argument("assignment violates clause " +
                                  std::to_string(j + 1));
  }
  auto occ = f.occurrence_clauses();
  const long long a = art.spacing, n = f.n_vars, m = f.n_clauses();
  const Rat slow(1), fast(a - 1);
  Schedule s;
  Rat clock(0);
  auto leg = [&](const std::string& id, long long x0, long long y0,
                 long long x1, long long y1, const Rat& speed) {
    s.trips.push_back(
        {id, grid_vertex(x0, y0), grid_vertex(x1, y1), clock});
    clock += Rat(std::llabs(x1 - x0) + std::llabs(y1 - y0)) / speed;
  };
  for (long long i = 1; i <= n; ++i) {
    const long long Y = 8 * (i - 1);
    const std::string si = std::to_string(i);
    if (!assignment[i - 1]) {
      leg("vg" + si + "_base", 0, Y, -2, Y, fast);
      leg("vg" + si + "_l1", -2, Y, -2, Y + 1, fast);
      leg("x" + si + "_1", -2, Y + 1, -2, Y + 2, slow);
      leg("vg" + si + "_l2", -2, Y + 2, -2, Y + 3, fast);
      leg("x" + si + "_2", -2, Y + 3, -2, Y + 4, slow);
      leg("vg" + si + "_l3", -2, Y + 4, -2, Y + 7, fast);
    } else {
      leg("vg" + si + "_base", 0, Y, 2, Y, fast);
      leg("vg" + si + "_r1", 2, Y, 2, Y + 5, fast);
      leg("x" + si + "_3", 2, Y + 5, 2, Y + 6, slow);
      leg("vg" + si + "_r2", 2, Y + 6, 2, Y + 7, fast);
    }
    long long from_x = assignment[i - 1] ? 2 : -2;
    leg("vg" + si + "_top", from_x, Y + 7, 0, Y + 7, fast);
    leg("vg" + si + "_exit", 0, Y + 7, 0, Y + 8, fast);
  }
  leg("g", 0, 8 * n, -a, 8 * n, fast);
  long long row = 8 * n;
  for (long long j = 1; j <= m; ++j) {
    // any true literal occurrence assigned to this clause bridges the gap
    long long pick_i = 0;
    int pick_k = 0;
    for (long long i = 1; i <= n && !pick_i; ++i)
      for (int k = 1; k <= 3; ++k)
        if (occ[i][k] == j && (k == 3 ? !assignment[i - 1] : assignment[i - 1])) {
          pick_i = i;
          pick_k = k;
          break;
        }
    const long long target_row = 8 * (pick_i - 1) + 2 * pick_k - 1;
    const std::string si = std::to_string(pick_i);
    const std::string sk = std::to_string(pick_k);
    if (row != target_row)
      leg("c" + std::to_string(j), -j * a, row, -j * a, target_row, fast);
    leg("x" + si + "_" + sk, -j * a, target_row, -j * a - 1, target_row, slow);
    leg("xp" + si + "_" + sk, -j * a - 1, target_row, -(j + 1) * a, target_row,
        fast);
    row = target_row;
  }
  leg("ch", -(m + 1) * a, row, -(m + 1) * a, 8 * n, fast);
  return s;
}

/// Reads a (sufficiently fast) schedule back into an assignment by
/// checking which literal agents carried inside each variable gadget's
/// band. Throws when a slow agent spans a separation-breaking horizontal
/// distance or a gadget was crossed without literal help.
inline std::vector<bool> schedule_to_assignment(const ReductionArtifact& art,
                                                const Schedule& sched) {
  if (!art.formula)
    throw std::invalid_argument("artifact is not a 2P1N grid artifact");
  const Formula2P1N& f = *art.formula;
  const long long a = art.spacing;
  for (const Trip& tr : sched.trips) {
    const Agent* ag = find_agent(art.instance, tr.agent);
    if (!ag) throw std::invalid_argument("unknown agent " + tr.agent);
    if (ag->speed == Rat(1) &&
        Rat(a - 1) <= (tr.pickup.x - tr.dropoff.x).abs())
      throw std::runtime_error("separation violated: slow agent " + tr.agent +
                               " spans horizontal distance >= a-1");
  }
  std::vector<bool> assignment(f.n_vars, false);
  for (int i = 1; i <= f.n_vars; ++i) {
    const long long Y = 8 * (i - 1);
    bool pos_helped = false, neg_helped = false;
    for (const Trip& tr : sched.trips) {
      const std::string prefix = "x" + std::to_string(i) + "_";
      if (tr.agent.rfind(prefix, 0) != 0) continue;
      bool in_band = Rat(-2) <= tr.pickup.x && tr.pickup.x <= Rat(2) &&
                     Rat(-2) <= tr.dropoff.x && tr.dropoff.x <= Rat(2) &&
                     Rat(Y) <= tr.pickup.y && tr.pickup.y <= Rat(Y + 8);
      if (!in_band) continue;
      if (tr.agent == prefix + "3")
        neg_helped = true;
      else
        pos_helped = true;
    }
    if (pos_helped && neg_helped)
      throw std::runtime_error("inconsistent gadget for variable " +
                               std::to_string(i));
    if (!pos_helped && !neg_helped)
      throw std::runtime_error("gadget skipped for variable " +
                               std::to_string(i));
    assignment[i - 1] = neg_helped;  // right path used => variable true
  }
  auto v = validate(art.instance, sched);
  if (v.feasible && v.duration < Rat(a - 1) && !f.satisfies(assignment))
    throw std::logic_error("fast schedule yielded a non-satisfying assignment");
  return assignment;
}

}  // namespace ddt
