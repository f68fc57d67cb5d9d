#pragma once

#include <algorithm>
#include <sstream>
#include <string>

#include "ddt/model.hpp"

namespace ddt {

namespace svg_detail {

inline std::string fmt(double v) {
  std::ostringstream os;
  os.precision(2);
  os << std::fixed << v;
  return os.str();
}

inline const char* palette(std::size_t i) {
  static const char* colors[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                 "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
                                 "#bcbd22", "#17becf"};
  return colors[i % 10];
}

inline Rat min_speed(const Instance& inst) {
  Rat m = inst.agents.empty() ? Rat(1) : inst.agents.front().speed;
  for (const auto& a : inst.agents)
    if (a.speed < m) m = a.speed;
  return m;
}

}  // namespace svg_detail

/// SVG 1.1 picture of an instance, optionally with a schedule overlaid.
///
/// Line instances get two panels: the movement intervals stacked by agent
/// (fast agents in red, slow in black), and a space-time diagram where
/// carrying legs are solid arrows and empty phases dashed. Grid instances
/// show the movement areas as translucent rectangles and the package
/// route as solid arrows.
inline std::string render_svg(const Instance& inst,
                              const Schedule* sched = nullptr) {
  using namespace svg_detail;
  std::ostringstream out;
  if (inst.kind == GraphKind::line) {
    Rat xmin = inst.source.x, xmax = inst.source.x;
    auto widen = [&](const Rat& x) {
      if (x < xmin) xmin = x;
      if (xmax < x) xmax = x;
    };
    for (const auto& x : inst.line_vertices) widen(x);
    for (const auto& a : inst.agents) {
      const auto& iv = std::get<Interval>(a.area);
      widen(iv.lo);
      widen(iv.hi);
    }
    widen(inst.target.x);
    double lo = xmin.to_double(), hi = xmax.to_double();
    if (hi <= lo) hi = lo + 1;
    const double w = 900, margin = 50;
    auto X = [&](const Rat& x) {
      return margin + (x.to_double() - lo) / (hi - lo) * (w - 2 * margin);
    };
    const double row_h = 16;
    const double panel1_h = 40 + row_h * inst.agents.size();
    Rat makespan(1);
    if (sched)
      for (const auto& tr : sched->trips) {
        const Agent* a = find_agent(inst, tr.agent);
        auto tt = a ? travel_time(*a, tr.pickup, tr.dropoff) : std::nullopt;
        if (tt && makespan < tr.t + *tt) makespan = tr.t + *tt;
      }
    const double panel2_h = sched ? 260 : 0;
    const double h = panel1_h + panel2_h + 40;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
        << "width=\"" << w << "\" height=\"" << fmt(h) << "\">\n";
    const Rat slow = min_speed(inst);
    for (std::size_t i = 0; i < inst.agents.size(); ++i) {
      const Agent& a = inst.agents[i];
      const auto& iv = std::get<Interval>(a.area);
      double y = 30 + row_h * i;
      const char* color = a.speed > slow ? "#d62728" : "#000000";
      out << "  <line class=\"agent\" x1=\"" << fmt(X(iv.lo)) << "\" y1=\""
          << fmt(y) << "\" x2=\"" << fmt(X(iv.hi)) << "\" y2=\"" << fmt(y)
          << "\" stroke=\"" << color << "\" stroke-width=\"3\"/>\n";
      if (a.start)
        out << "  <circle class=\"agent-start\" cx=\"" << fmt(X(a.start->x))
            << "\" cy=\"" << fmt(y) << "\" r=\"3.5\" fill=\"" << color
            << "\"/>\n";
      out << "  <text x=\"" << fmt(X(iv.hi) + 6) << "\" y=\"" << fmt(y + 4)
          << "\" font-size=\"10\">" << a.id << " (v=" << a.speed.str()
          << ")</text>\n";
    }
    // axis with vertex ticks
    double axis_y = panel1_h;
    out << "  <line x1=\"" << fmt(margin) << "\" y1=\"" << fmt(axis_y)
        << "\" x2=\"" << fmt(w - margin) << "\" y2=\"" << fmt(axis_y)
        << "\" stroke=\"#999999\"/>\n";
    for (const auto& x : inst.line_vertices)
      out << "  <line class=\"vertex\" x1=\"" << fmt(X(x)) << "\" y1=\""
          << fmt(axis_y - 3) << "\" x2=\"" << fmt(X(x)) << "\" y2=\""
          << fmt(axis_y + 3) << "\" stroke=\"#999999\"/>\n";
    out << "  <circle class=\"endpoint\" cx=\"" << fmt(X(inst.source.x))
        << "\" cy=\"" << fmt(axis_y) << "\" r=\"4\" fill=\"#2ca02c\"/>\n";
    out << "  <circle class=\"endpoint\" cx=\"" << fmt(X(inst.target.x))
        << "\" cy=\"" << fmt(axis_y) << "\" r=\"4\" fill=\"#1f77b4\"/>\n";
    if (sched) {
      const double t0 = axis_y + 20;
      const double tscale = (panel2_h - 40) / makespan.to_double();
      auto Y = [&](const Rat& t) { return t0 + t.to_double() * tscale; };
      for (const auto& tr : sched->trips) {
        const Agent* a = find_agent(inst, tr.agent);
        if (!a) continue;
        auto tt = travel_time(*a, tr.pickup, tr.dropoff);
        if (!tt) continue;
        auto ready = ready_time(inst, *a, tr.pickup);
        if (a->start && *a->start != tr.pickup && ready) {
          Rat leave = tr.t - *ready;  // latest possible departure, zero wait
          out << "  <line class=\"empty\" x1=\"" << fmt(X(a->start->x))
              << "\" y1=\"" << fmt(Y(leave)) << "\" x2=\"" << fmt(X(tr.pickup.x))
              << "\" y2=\"" << fmt(Y(tr.t))
              << "\" stroke=\"#888888\" stroke-dasharray=\"5,4\"/>\n";
        }
        out << "  <line class=\"trip\" x1=\"" << fmt(X(tr.pickup.x))
            << "\" y1=\"" << fmt(Y(tr.t)) << "\" x2=\"" << fmt(X(tr.dropoff.x))
            << "\" y2=\"" << fmt(Y(tr.t + *tt))
            << "\" stroke=\"#d62728\" stroke-width=\"2\" "
               "marker-end=\"url(#arrow)\"/>\n";
      }
      out << "  <defs><marker id=\"arrow\" viewBox=\"0 0 8 8\" refX=\"7\" "
             "refY=\"4\" markerWidth=\"6\" markerHeight=\"6\" "
             "orient=\"auto\"><path d=\"M0,0 L8,4 L0,8 z\" "
             "fill=\"#d62728\"/></marker></defs>\n";
    }
    out << "</svg>\n";
    return out.str();
  }

  // grid rendering
  long long xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  bool first = true;
  auto widen = [&](long long x, long long y) {
    if (first) { xmin = xmax = x; ymin = ymax = y; first = false; return; }
    xmin = std::min(xmin, x); xmax = std::max(xmax, x);
    ymin = std::min(ymin, y); ymax = std::max(ymax, y);
  };
  for (const auto& a : inst.agents) {
    if (const auto* rc = std::get_if<Rect>(&a.area)) {
      widen(rc->x_min, rc->y_min);
      widen(rc->x_max, rc->y_max);
    } else if (const auto* gc = std::get_if<GridCells>(&a.area)) {
      for (const auto& c : gc->cells) widen(c.x, c.y);
    }
  }
  widen(inst.source.x.num(), inst.source.y.num());
  widen(inst.target.x.num(), inst.target.y.num());
  const double cell = std::min(40.0, 860.0 / std::max<long long>(
                                          1, std::max(xmax - xmin, ymax - ymin)));
  const double margin = 30;
  auto X = [&](const Rat& x) { return margin + (x.to_double() - xmin) * cell; };
  auto Y = [&](const Rat& y) { return margin + (ymax - y.to_double()) * cell; };
  const double w = 2 * margin + (xmax - xmin) * cell;
  const double h = 2 * margin + (ymax - ymin) * cell;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
      << "width=\"" << fmt(w) << "\" height=\"" << fmt(h) << "\">\n";
  for (std::size_t i = 0; i < inst.agents.size(); ++i) {
    const Agent& a = inst.agents[i];
    const char* color = palette(i);
    if (const auto* rc = std::get_if<Rect>(&a.area)) {
      out << "  <rect class=\"agent\" x=\"" << fmt(X(Rat(rc->x_min)) - cell / 4)
          << "\" y=\"" << fmt(Y(Rat(rc->y_max)) - cell / 4) << "\" width=\""
          << fmt((rc->x_max - rc->x_min) * cell + cell / 2) << "\" height=\""
          << fmt((rc->y_max - rc->y_min) * cell + cell / 2) << "\" fill=\""
          << color << "\" fill-opacity=\"0.25\" stroke=\"" << color
          << "\"/>\n";
    } else if (const auto* gc = std::get_if<GridCells>(&a.area)) {
      out << "  <g class=\"agent\" fill=\"" << color
          << "\" fill-opacity=\"0.25\" stroke=\"" << color << "\">\n";
      for (const auto& c : gc->cells)
        out << "    <rect class=\"agent-cell\" x=\""
            << fmt(X(Rat(c.x)) - cell / 4) << "\" y=\""
            << fmt(Y(Rat(c.y)) - cell / 4) << "\" width=\"" << fmt(cell / 2)
            << "\" height=\"" << fmt(cell / 2) << "\"/>\n";
      out << "  </g>\n";
    }
  }
  out << "  <circle class=\"endpoint\" cx=\"" << fmt(X(inst.source.x))
      << "\" cy=\"" << fmt(Y(inst.source.y)) << "\" r=\"5\" fill=\"#2ca02c\"/>\n";
  out << "  <circle class=\"endpoint\" cx=\"" << fmt(X(inst.target.x))
      << "\" cy=\"" << fmt(Y(inst.target.y)) << "\" r=\"5\" fill=\"#1f77b4\"/>\n";
  if (sched) {
    for (const auto& tr : sched->trips)
      out << "  <line class=\"trip\" x1=\"" << fmt(X(tr.pickup.x)) << "\" y1=\""
          << fmt(Y(tr.pickup.y)) << "\" x2=\"" << fmt(X(tr.dropoff.x))
          << "\" y2=\"" << fmt(Y(tr.dropoff.y))
          << "\" stroke=\"#d62728\" stroke-width=\"2\" "
             "marker-end=\"url(#arrow)\"/>\n";
    out << "  <defs><marker id=\"arrow\" viewBox=\"0 0 8 8\" refX=\"7\" "
           "refY=\"4\" markerWidth=\"6\" markerHeight=\"6\" "
           "orient=\"auto\"><path d=\"M0,0 L8,4 L0,8 z\" "
           "fill=\"#d62728\"/></marker></defs>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace ddt
