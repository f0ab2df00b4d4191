#include "cplanar/io.hpp"

#include <fstream>
#include <sstream>

namespace cplanar {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(Errc::ParseError, what); }

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) parse_error(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

int as_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) parse_error(where + " must be an integer");
  return j.get<int>();
}

}  // namespace

CGraph instance_from_json(const json& j) {
  CGraph cg;
  cg.c = as_int(field(j, "c"), "c");
  const json& clusters = field(j, "clusters");
  const json& edges = field(j, "edges");
  const json& rotations = field(j, "rotations");
  if (!clusters.is_array() || !edges.is_array() || !rotations.is_array())
    parse_error("clusters, edges and rotations must be arrays");
  for (const json& x : clusters) cg.gamma.push_back(as_int(x, "cluster label"));
  const int n = static_cast<int>(cg.gamma.size());
  std::vector<Edge> es;
  for (const json& e : edges) {
    if (!e.is_array() || e.size() != 2) parse_error("each edge must be a pair [u, v]");
    es.push_back({as_int(e[0], "edge endpoint"), as_int(e[1], "edge endpoint")});
  }
  if (static_cast<int>(rotations.size()) != n) parse_error("need one rotation per vertex");
  std::vector<std::vector<DartId>> rot(n);
  for (int v = 0; v < n; ++v) {
    if (!rotations[v].is_array()) parse_error("rotation of vertex " + std::to_string(v) + " must be an array");
    for (const json& d : rotations[v]) rot[v].push_back(as_int(d, "dart id"));
  }
  for (int v = 0; v < n; ++v)
    if (cg.gamma[v] < 0 || cg.gamma[v] >= std::max(cg.c, 1))
      throw Error(Errc::InvalidArgument, "vertex " + std::to_string(v) + " has cluster outside [0, c)");
  cg.map = CombMap::build(n, std::move(es), rot);
  return cg;
}

json instance_to_json(const CGraph& cg) {
  json j;
  j["c"] = cg.c;
  j["clusters"] = cg.gamma;
  json edges = json::array();
  for (EdgeId e = 0; e < cg.map.edge_slots(); ++e) edges.push_back({cg.map.endpoints(e).u, cg.map.endpoints(e).v});
  j["edges"] = std::move(edges);
  j["rotations"] = cg.map.rotations();
  return j;
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    parse_error(path + ": " + e.what());
  }
}

void write_json(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::InvalidArgument, "cannot write " + path);
  out << j.dump(1) << '\n';
}

CGraph read_instance(const std::string& path) { return instance_from_json(read_json(path)); }

void write_instance(const std::string& path, const CGraph& cg) { write_json(path, instance_to_json(cg)); }

json certificate_to_json(const CGraph& input, const Certificate& cert) {
  json j;
  j["verdict"] = "CPlanar";
  j["input"] = instance_to_json(input);
  j["c"] = cert.augmented.c;
  j["clusters"] = cert.augmented.gamma;
  j["input_edge_count"] = cert.input_edge_count;
  json edges = json::array();
  for (EdgeId e = 0; e < cert.augmented.map.edge_slots(); ++e)
    edges.push_back({cert.augmented.map.endpoints(e).u, cert.augmented.map.endpoints(e).v});
  j["edges"] = std::move(edges);
  j["rotations"] = cert.augmented.map.rotations();
  json added = json::array();
  for (const AddedEdge& a : cert.added)
    added.push_back({{"edge", a.edge},
                     {"cluster", a.cluster},
                     {"endpoints", {a.u, a.v}},
                     {"phase", phase_name(a.phase)},
                     {"face_at_insertion", a.face_at_insertion},
                     {"component", a.component}});
  j["added_edges"] = std::move(added);
  j["auxiliary_vertices"] = cert.auxiliary_vertices;
  j["cluster_trees"] = cert.cluster_trees;
  return j;
}

json certificate_to_json(const CGraph& input, const Verdict& v) {
  if (v.certificate) {
    json j = certificate_to_json(input, *v.certificate);
    j["reason"] = reason_name(v.reason);
    return j;
  }
  json j;
  j["verdict"] = status_name(v.status);
  j["reason"] = reason_name(v.reason);
  j["detail"] = v.detail;
  j["input"] = instance_to_json(input);
  return j;
}

Certificate certificate_from_json(const json& j, CGraph* input) {
  if (!j.is_object() || j.value("verdict", "") != "CPlanar") parse_error("file holds no certificate");
  Certificate cert;
  json inst;
  inst["c"] = field(j, "c");
  inst["clusters"] = field(j, "clusters");
  inst["edges"] = field(j, "edges");
  inst["rotations"] = field(j, "rotations");
  cert.augmented = instance_from_json(inst);
  cert.input_edge_count = as_int(field(j, "input_edge_count"), "input_edge_count");
  cert.input_vertex_count = cert.augmented.map.vertex_slots();
  cert.auxiliary_vertices = j.value("auxiliary_vertices", 0);
  for (const json& t : field(j, "cluster_trees")) {
    std::vector<EdgeId> tree;
    for (const json& e : t) tree.push_back(as_int(e, "tree edge"));
    cert.cluster_trees.push_back(std::move(tree));
  }
  if (j.contains("added_edges")) {
    for (const json& a : j.at("added_edges")) {
      AddedEdge x;
      x.edge = as_int(field(a, "edge"), "edge");
      x.cluster = a.value("cluster", 0);
      const json& ends = field(a, "endpoints");
      if (!ends.is_array() || ends.size() != 2) parse_error("added edge endpoints must be a pair");
      x.u = as_int(ends[0], "endpoint");
      x.v = as_int(ends[1], "endpoint");
      x.phase = a.value("phase", "forest") == std::string("elimination") ? Phase::Elimination : Phase::Forest;
      x.face_at_insertion = a.value("face_at_insertion", -1);
      x.component = a.value("component", 0);
      cert.added.push_back(x);
    }
  }
  if (input) *input = instance_from_json(field(j, "input"));
  return cert;
}

}  // namespace cplanar
