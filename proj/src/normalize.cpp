#include "cplanar/normalize.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace cplanar {

std::vector<Component> split_components(const CGraph& cg) {
  const CombMap& map = cg.map;
  const auto [comp, count] = map.components();
  std::vector<Component> out(count);
  std::vector<int> local(map.vertex_slots(), -1);
  for (VertexId v = 0; v < map.vertex_slots(); ++v) {
    if (comp[v] < 0) continue;
    Component& k = out[comp[v]];
    local[v] = static_cast<int>(k.to_input_vertex.size());
    k.to_input_vertex.push_back(v);
  }
  std::vector<int> local_edge(map.edge_slots(), -1);
  std::vector<std::vector<Edge>> edges(count);
  for (EdgeId e = 0; e < map.edge_slots(); ++e) {
    if (!map.edge_alive(e)) continue;
    const Edge& ed = map.endpoints(e);
    Component& k = out[comp[ed.u]];
    local_edge[e] = static_cast<int>(k.to_input_edge.size());
    k.to_input_edge.push_back(e);
    edges[comp[ed.u]].push_back({local[ed.u], local[ed.v]});
  }
  for (int i = 0; i < count; ++i) {
    Component& k = out[i];
    std::vector<std::vector<DartId>> rot(k.to_input_vertex.size());
    for (std::size_t j = 0; j < k.to_input_vertex.size(); ++j)
      for (DartId d : map.rotation(k.to_input_vertex[j])) rot[j].push_back(dart_of(local_edge[edge_of(d)], d & 1));
    k.cg.c = cg.c;
    for (VertexId v : k.to_input_vertex) k.cg.gamma.push_back(cg.gamma[v]);
    k.cg.map = CombMap::build(static_cast<int>(rot.size()), std::move(edges[i]), rot);
  }
  return out;
}

namespace {

VertexId follow(std::vector<VertexId>& rep, VertexId v) {
  VertexId r = v;
  while (rep[r] != r) r = rep[r];
  while (rep[v] != r) {
    const VertexId next = rep[v];
    rep[v] = r;
    v = next;
  }
  return r;
}

std::string enclosure(int base_cluster, int other) {
  return "loop enclosure: a contracted loop of cluster " + std::to_string(base_cluster) +
         " separates a vertex of cluster " + std::to_string(other) + " from the outer face";
}

// Returns a rejection message, or empty if the loop was deleted. live[k] counts the
// live vertices of cluster k in the (connected) map.
std::string inspect_loop(CGraph& cg, EdgeId loop, DartId reference, const std::vector<int>& live) {
  const int g = cg.gamma[cg.map.endpoints(loop).u];
  const LoopSide side = smaller_loop_side(cg.map, loop, reference);
  if (!side.has_reference) {
    for (VertexId w : side.verts)
      if (cg.gamma[w] != g) return enclosure(g, cg.gamma[w]);
  } else {
    // The small side is the outer one: compare its cluster counts with the totals.
    std::vector<int> seen(cg.c, 0);
    for (VertexId w : side.verts) ++seen[cg.gamma[w]];
    for (int k = 0; k < cg.c; ++k)
      if (k != g && seen[k] < live[k]) return enclosure(g, k);
  }
  cg.map.delete_edge(loop);
  return {};
}

}  // namespace

ContractOutcome contract_clusters(CGraph& cg, const Poles& poles, std::vector<VertexId>* representative) {
  ContractOutcome out;
  CombMap& map = cg.map;
  std::vector<VertexId> local_rep;
  std::vector<VertexId>& rep = representative ? *representative : local_rep;
  if (static_cast<int>(rep.size()) < map.vertex_slots()) {
    const int old = static_cast<int>(rep.size());
    rep.resize(map.vertex_slots());
    for (int v = old; v < map.vertex_slots(); ++v) rep[v] = v;
  }
  if (poles.outer_dart == kNoDart) throw Error(Errc::InvalidArgument, "contraction needs an outer pole dart");

  std::vector<int> live(cg.c, 0);
  for (VertexId v = 0; v < map.vertex_slots(); ++v)
    if (map.vertex_alive(v)) ++live[cg.gamma[v]];
  auto handle = [&](EdgeId loop) {
    std::string why = inspect_loop(cg, loop, poles.outer_dart, live);
    if (!why.empty()) {
      out.rejected = true;
      out.reason = std::move(why);
      return false;
    }
    ++out.loops_deleted;
    return true;
  };

  for (EdgeId e = 0; e < map.edge_slots(); ++e)
    if (map.edge_alive(e) && map.is_loop(e) && !handle(e)) return out;

  // Contraction never changes whether a surviving edge is intra-cluster, so one pass suffices.
  for (EdgeId e = 0; e < map.edge_slots(); ++e) {
    if (!map.edge_alive(e) || map.is_loop(e)) continue;
    const Edge ed = map.endpoints(e);
    if (cg.gamma[ed.u] != cg.gamma[ed.v]) continue;
    const auto loops = map.contract(e, ed.u);
    rep[ed.v] = ed.u;
    --live[cg.gamma[ed.u]];
    ++out.contractions;
    for (EdgeId l : loops)
      if (map.edge_alive(l) && !handle(l)) return out;
  }
  for (VertexId v = 0; v < static_cast<int>(rep.size()); ++v) follow(rep, v);
  return out;
}

MinRun find_min_run(const CGraph& cg, const FacialWalk& walk) {
  const FaceInfo info = classify_face(cg, walk);
  if (info.cls != FaceClass::Other)
    throw Error(Errc::FaceAlreadyConforming, std::string("face is ") + face_class_name(info.cls));
  const int n = walk.size();
  std::vector<int> step(n);
  for (int k = 0; k < n; ++k) {
    step[k] = dart_step(cg, walk.darts[k]);
    if (step[k] == 0) throw Error(Errc::InvalidArgument, "face has an intra-cluster edge; contract first");
  }
  std::vector<int> ext;
  for (int k = 0; k < n; ++k)
    if (step[(k + n - 1) % n] != step[k]) ext.push_back(k);
  const int runs = static_cast<int>(ext.size());
  int best = -1, best_len = n + 1;
  for (int i = 0; i < runs; ++i) {
    const int len = (ext[(i + 1) % runs] - ext[i] + n) % n;
    if (len < best_len) {
      best_len = len;
      best = i;
    }
  }
  MinRun r;
  r.u = ext[best];
  r.v = ext[(best + 1) % runs];
  r.h = best_len;
  r.ascending = step[r.u] > 0;
  r.v_prime = (r.v + r.h) % n;
  r.u_prime = ((r.u - r.h) % n + n) % n;
  return r;
}

SubdivisionRecord subdivide_face(CGraph& cg, FaceTable& faces, FaceId face) {
  faces.require_current(cg.map);
  const FacialWalk walk = faces.walk(face);
  const MinRun run = find_min_run(cg, walk);
  const FaceInfo before = classify_face(cg, walk);

  SubdivisionRecord rec;
  rec.face = face;
  rec.height = before.height;
  rec.h = run.h;
  const VertexId vp = cg.map.tail(walk.corner(run.v_prime));
  const InsertedPath path = insert_path(cg.map, faces, face, run.v_prime, run.u_prime, run.h - 1);
  rec.new_vertices = path.vertices;
  rec.new_edges = path.edges;
  cg.gamma.resize(cg.map.vertex_slots(), 0);
  const int sign = run.ascending ? 1 : -1;
  for (int k = 0; k < static_cast<int>(path.vertices.size()); ++k)
    cg.gamma[path.vertices[k]] = ((cg.gamma[vp] + sign * (k + 1)) % cg.c + cg.c) % cg.c;

  const DartId first = dart_of(path.edges.front(), 0);
  rec.f_dprime = faces.retrace(cg.map, first);
  rec.f_prime = faces.retrace(cg.map, twin(first));

  const FaceInfo fd = classify_face(cg, faces.walk(rec.f_dprime));
  const FaceInfo fp = classify_face(cg, faces.walk(rec.f_prime));
  if (fd.height != 0 || fd.cls != FaceClass::SemiSimple)
    invariant_violation("subdivision produced f'' of height " + std::to_string(fd.height) + " and class " +
                        face_class_name(fd.cls));
  if (fp.height != before.height)
    invariant_violation("subdivision changed the height of f' from " + std::to_string(before.height) + " to " +
                        std::to_string(fp.height));
  if (fp.minima.size() >= before.minima.size())
    invariant_violation("subdivision did not reduce the minima of f'");
  return rec;
}

NormalizeOutcome normalize(CGraph cg, Poles poles) {
  NormalizeOutcome out;
  Provenance prov;
  prov.input_vertex_count = cg.map.vertex_slots();
  prov.input_edge_count = cg.map.edge_slots();
  std::vector<VertexId> rep;
  const ContractOutcome co = contract_clusters(cg, poles, &rep);
  prov.contractions = co.contractions;
  prov.loops_deleted = co.loops_deleted;
  if (co.rejected) {
    out.rejection = co.reason;
    return out;
  }
  prov.representative = std::move(rep);

  FaceTable faces = FaceTable::trace(cg.map);
  poles.outer = faces.face_of(poles.outer_dart);
  poles.outer_prime = faces.face_of(poles.outer_prime_dart);

  std::set<FaceId> pending;
  for (FaceId f : faces.live_faces())
    if (classify_face(cg, faces.walk(f)).cls == FaceClass::Other) pending.insert(f);

  const long budget = 2L * cg.map.dart_slots() + 4;
  while (!pending.empty()) {
    const FaceId f = *pending.begin();
    pending.erase(pending.begin());
    if (static_cast<long>(prov.subdivisions.size()) >= budget)
      invariant_violation("normalization did not terminate within the subdivision budget");
    SubdivisionRecord rec = subdivide_face(cg, faces, f);
    if (classify_face(cg, faces.walk(rec.f_prime)).cls == FaceClass::Other) pending.insert(rec.f_prime);
    auto pole_dart = [&](FaceId g) {
      for (DartId d : faces.walk(g).darts)
        if (dart_step(cg, d) != 0) return d;
      return kNoDart;
    };
    if (f == poles.outer) {
      poles.outer = rec.f_prime;
      poles.outer_dart = pole_dart(rec.f_prime);
    } else if (f == poles.outer_prime) {
      poles.outer_prime = rec.f_prime;
      poles.outer_prime_dart = pole_dart(rec.f_prime);
    }
    prov.subdivisions.push_back(std::move(rec));
  }

  NormalizedCGraph n{std::move(cg), poles, std::move(faces), std::move(prov)};
  check_normalized(n);
  out.normalized = std::move(n);
  return out;
}

void check_normalized(const NormalizedCGraph& n) {
  const CGraph& cg = n.cg;
  cg.map.debug_validate();
  if (!n.faces.is_current(cg.map)) invariant_violation("normalized face table is stale");
  if (cg.map.components().second != 1) invariant_violation("normalized instance is not connected");
  for (EdgeId e = 0; e < cg.map.edge_slots(); ++e) {
    if (!cg.map.edge_alive(e)) continue;
    const Edge& ed = cg.map.endpoints(e);
    if (cg.gamma[ed.u] == cg.gamma[ed.v]) invariant_violation("intra-cluster edge survives normalization");
  }
  int nonzero = 0;
  for (FaceId f : n.faces.live_faces()) {
    const FaceInfo info = classify_face(cg, n.faces.walk(f));
    const bool pole = f == n.poles.outer || f == n.poles.outer_prime;
    if (info.height != 0) ++nonzero;
    if (info.cls == FaceClass::Other) invariant_violation("face " + std::to_string(f) + " does not conform");
    if (pole && info.cls != FaceClass::Simple) invariant_violation("pole face is not simple");
    if (pole && std::labs(info.height) != cg.c) invariant_violation("pole face lost its winding");
  }
  if (nonzero != 2) invariant_violation("expected exactly two faces of nonzero height");
}

}  // namespace cplanar
