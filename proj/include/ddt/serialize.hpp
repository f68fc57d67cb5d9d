#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ddt/model.hpp"
#include "ddt/reductions.hpp"

namespace ddt {

using Json = nlohmann::ordered_json;

/// Thrown on malformed documents; `where` is a dotted path to the
/// offending field.
struct ParseError : std::runtime_error {
  std::string where;
  ParseError(std::string where_, const std::string& what)
      : std::runtime_error(where_ + ": " + what), where(std::move(where_)) {}
};

namespace ser_detail {

inline Rat read_rat(const Json& j, const std::string& where,
                    std::vector<std::string>* warnings) {
  if (!j.is_string()) throw ParseError(where, "expected a \"num/den\" string");
  const std::string s = j.get<std::string>();
  Rat r;
  try {
    r = Rat::parse(s);
  } catch (const std::exception& e) {
    throw ParseError(where, e.what());
  }
  if (warnings && r.str() != s)
    warnings->push_back(where + ": non-canonical rational '" + s +
                        "' normalized to '" + r.str() + "'");
  return r;
}

inline long long read_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ParseError(where, "expected an integer");
  return j.get<long long>();
}

inline const Json& field(const Json& j, const char* name,
                         const std::string& where) {
  if (!j.is_object()) throw ParseError(where, "expected an object");
  auto it = j.find(name);
  if (it == j.end()) throw ParseError(where + "." + name, "missing field");
  return *it;
}

inline Json vertex_json(const Instance& inst, const Vertex& v) {
  if (inst.kind == GraphKind::line) return v.x.str();
  return Json::array({v.x.num(), v.y.num()});
}

inline Vertex read_vertex(const Instance& inst, const Json& j,
                          const std::string& where,
                          std::vector<std::string>* warnings) {
  if (inst.kind == GraphKind::line) return line_vertex(read_rat(j, where, warnings));
  if (!j.is_array() || j.size() != 2)
    throw ParseError(where, "expected an [x, y] pair");
  return grid_vertex(read_int(j[0], where + "[0]"), read_int(j[1], where + "[1]"));
}

}  // namespace ser_detail

inline Json instance_to_json(const Instance& inst) {
  using namespace ser_detail;
  Json j;
  j["version"] = 1;
  j["kind"] = inst.kind == GraphKind::line ? "line" : "grid";
  j["mode"] = inst.mode == Positioning::predefined ? "predefined" : "free";
  if (inst.kind == GraphKind::line) {
    Json verts = Json::array();
    for (const auto& x : inst.line_vertices) verts.push_back(x.str());
    j["vertices"] = std::move(verts);
  }
  Json agents = Json::array();
  for (const auto& a : inst.agents) {
    Json ja;
    ja["id"] = a.id;
    ja["speed"] = a.speed.str();
    if (const auto* iv = std::get_if<Interval>(&a.area))
      ja["area"] = Json{{"interval", Json::array({iv->lo.str(), iv->hi.str()})}};
    else if (const auto* rc = std::get_if<Rect>(&a.area))
      ja["area"] = Json{
          {"rect", Json::array({rc->x_min, rc->x_max, rc->y_min, rc->y_max})}};
    else {
      Json cells = Json::array();
      for (const auto& c : std::get<GridCells>(a.area).cells)
        cells.push_back(Json::array({c.x, c.y}));
      ja["area"] = Json{{"cells", std::move(cells)}};
    }
    if (a.start) ja["start"] = vertex_json(inst, *a.start);
    agents.push_back(std::move(ja));
  }
  j["agents"] = std::move(agents);
  j["package"] = Json{{"s", vertex_json(inst, inst.source)},
                      {"y", vertex_json(inst, inst.target)}};
  return j;
}

inline Instance instance_from_json(const Json& j,
                                   std::vector<std::string>* warnings = nullptr) {
  using namespace ser_detail;
  Instance inst;
  const std::string root = "instance";
  const auto& kind = field(j, "kind", root);
  if (!kind.is_string()) throw ParseError(root + ".kind", "expected a string");
  if (kind == "line")
    inst.kind = GraphKind::line;
  else if (kind == "grid")
    inst.kind = GraphKind::grid;
  else
    throw ParseError(root + ".kind", "must be \"line\" or \"grid\"");
  const auto& mode = field(j, "mode", root);
  if (mode == "predefined")
    inst.mode = Positioning::predefined;
  else if (mode == "free")
    inst.mode = Positioning::free_choice;
  else
    throw ParseError(root + ".mode", "must be \"predefined\" or \"free\"");
  if (inst.kind == GraphKind::line) {
    const auto& verts = field(j, "vertices", root);
    if (!verts.is_array())
      throw ParseError(root + ".vertices", "expected an array");
    for (std::size_t i = 0; i < verts.size(); ++i)
      inst.line_vertices.push_back(read_rat(
          verts[i], root + ".vertices[" + std::to_string(i) + "]", warnings));
  }
  const auto& agents = field(j, "agents", root);
  if (!agents.is_array()) throw ParseError(root + ".agents", "expected an array");
  for (std::size_t i = 0; i < agents.size(); ++i) {
    const std::string where = root + ".agents[" + std::to_string(i) + "]";
    const auto& ja = agents[i];
    Agent a;
    const auto& id = field(ja, "id", where);
    if (!id.is_string()) throw ParseError(where + ".id", "expected a string");
    a.id = id.get<std::string>();
    a.speed = read_rat(field(ja, "speed", where), where + ".speed", warnings);
    const auto& area = field(ja, "area", where);
    if (area.contains("interval")) {
      const auto& iv = area["interval"];
      if (!iv.is_array() || iv.size() != 2)
        throw ParseError(where + ".area.interval", "expected [lo, hi]");
      a.area = Interval{read_rat(iv[0], where + ".area.interval[0]", warnings),
                        read_rat(iv[1], where + ".area.interval[1]", warnings)};
    } else if (area.contains("rect")) {
      const auto& rc = area["rect"];
      if (!rc.is_array() || rc.size() != 4)
        throw ParseError(where + ".area.rect",
                         "expected [x_min, x_max, y_min, y_max]");
      a.area = Rect{read_int(rc[0], where + ".area.rect[0]"),
                    read_int(rc[1], where + ".area.rect[1]"),
                    read_int(rc[2], where + ".area.rect[2]"),
                    read_int(rc[3], where + ".area.rect[3]")};
    } else if (area.contains("cells")) {
      const auto& cs = area["cells"];
      if (!cs.is_array()) throw ParseError(where + ".area.cells", "expected an array");
      GridCells gc;
      for (std::size_t k = 0; k < cs.size(); ++k) {
        const std::string cw = where + ".area.cells[" + std::to_string(k) + "]";
        if (!cs[k].is_array() || cs[k].size() != 2)
          throw ParseError(cw, "expected an [x, y] pair");
        gc.cells.insert(
            Cell{read_int(cs[k][0], cw + "[0]"), read_int(cs[k][1], cw + "[1]")});
      }
      a.area = std::move(gc);
    } else {
      throw ParseError(where + ".area",
                       "expected one of \"interval\", \"rect\", \"cells\"");
    }
    if (ja.contains("start"))
      a.start = read_vertex(inst, ja["start"], where + ".start", warnings);
    inst.agents.push_back(std::move(a));
  }
  const auto& pkg = field(j, "package", root);
  inst.source =
      read_vertex(inst, field(pkg, "s", root + ".package"), root + ".package.s",
                  warnings);
  inst.target =
      read_vertex(inst, field(pkg, "y", root + ".package"), root + ".package.y",
                  warnings);
  return inst;
}

inline Json schedule_to_json(const Instance& inst, const Schedule& s) {
  using namespace ser_detail;
  Json j;
  j["version"] = 1;
  Json trips = Json::array();
  for (const auto& tr : s.trips) {
    Json jt;
    jt["agent"] = tr.agent;
    jt["pickup"] = vertex_json(inst, tr.pickup);
    jt["dropoff"] = vertex_json(inst, tr.dropoff);
    jt["t"] = tr.t.str();
    trips.push_back(std::move(jt));
  }
  j["trips"] = std::move(trips);
  return j;
}

inline Schedule schedule_from_json(const Instance& inst, const Json& j,
                                   std::vector<std::string>* warnings = nullptr) {
  using namespace ser_detail;
  Schedule s;
  const auto& trips = field(j, "trips", "schedule");
  if (!trips.is_array()) throw ParseError("schedule.trips", "expected an array");
  for (std::size_t i = 0; i < trips.size(); ++i) {
    const std::string where = "schedule.trips[" + std::to_string(i) + "]";
    const auto& jt = trips[i];
    Trip tr;
    const auto& id = field(jt, "agent", where);
    if (!id.is_string()) throw ParseError(where + ".agent", "expected a string");
    tr.agent = id.get<std::string>();
    tr.pickup = read_vertex(inst, field(jt, "pickup", where), where + ".pickup",
                            warnings);
    tr.dropoff = read_vertex(inst, field(jt, "dropoff", where),
                             where + ".dropoff", warnings);
    tr.t = read_rat(field(jt, "t", where), where + ".t", warnings);
    s.trips.push_back(std::move(tr));
  }
  return s;
}

inline Json artifact_to_json(const ReductionArtifact& art) {
  Json j;
  j["version"] = 1;
  j["instance"] = instance_to_json(art.instance);
  Json th;
  for (const auto& [k, v] : art.thresholds) th[k] = v.str();
  j["thresholds"] = std::move(th);
  Json prov;
  for (const auto& [k, v] : art.provenance) prov[k] = v;
  j["provenance"] = std::move(prov);
  if (art.partition) {
    Json p;
    p["elements"] = art.partition->elems;
    p["eps"] = art.epsilon.str();
    j["partition"] = std::move(p);
  }
  if (art.formula) {
    Json f;
    f["vars"] = art.formula->n_vars;
    f["clauses"] = art.formula->clauses;
    f["spacing"] = art.spacing;
    j["formula"] = std::move(f);
  }
  return j;
}

inline ReductionArtifact artifact_from_json(
    const Json& j, std::vector<std::string>* warnings = nullptr) {
  using namespace ser_detail;
  ReductionArtifact art;
  art.instance = instance_from_json(field(j, "instance", "artifact"), warnings);
  const auto& th = field(j, "thresholds", "artifact");
  for (auto it = th.begin(); it != th.end(); ++it)
    art.thresholds[it.key()] =
        read_rat(it.value(), "artifact.thresholds." + it.key(), warnings);
  if (j.contains("provenance"))
    for (auto it = j["provenance"].begin(); it != j["provenance"].end(); ++it)
      art.provenance[it.key()] = it.value().get<std::string>();
  if (j.contains("partition")) {
    const auto& p = j["partition"];
    art.partition = PartitionInput::of(
        p.at("elements").get<std::vector<long long>>());
    art.epsilon = read_rat(field(p, "eps", "artifact.partition"),
                           "artifact.partition.eps", warnings);
  }
  if (j.contains("formula")) {
    const auto& f = j["formula"];
    art.formula = Formula2P1N::of(
        f.at("vars").get<int>(),
        f.at("clauses").get<std::vector<std::vector<int>>>());
    art.spacing = read_int(field(f, "spacing", "artifact.formula"),
                           "artifact.formula.spacing");
  }
  return art;
}

inline std::string pretty(const Json& j) { return j.dump(2) + "\n"; }

inline Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ParseError(path, e.what());
  }
  return j;
}

inline void save_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << pretty(j);
}

}  // namespace ddt
