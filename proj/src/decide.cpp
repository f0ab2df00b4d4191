#include "cplanar/decide.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "cplanar/construct.hpp"

namespace cplanar {

const char* status_name(Status s) {
  switch (s) {
    case Status::CPlanar: return "CPlanar";
    case Status::NotCPlanar: return "NotCPlanar";
    case Status::Unsupported: return "Unsupported";
  }
  return "?";
}

const char* reason_name(Reason r) {
  switch (r) {
    case Reason::None: return "none";
    case Reason::WindingObstruction: return "winding_obstruction";
    case Reason::LoopEnclosure: return "loop_enclosure";
    case Reason::NoPerfectMatching: return "no_perfect_matching";
    case Reason::AllZeroWinding: return "all_zero_winding";
    case Reason::TwoClusters: return "two_clusters";
  }
  return "?";
}

const char* pole_rule_name(PoleRule r) {
  switch (r) {
    case PoleRule::Conjunctive: return "conjunctive";
    case PoleRule::Disjunctive: return "disjunctive";
    case PoleRule::Optional: return "optional";
  }
  return "?";
}

Orientation orient(const CGraph& cg) {
  const CombMap& map = cg.map;
  Orientation o;
  o.from.assign(map.edge_slots(), -1);
  o.indeg.assign(map.vertex_slots(), 0);
  o.outdeg.assign(map.vertex_slots(), 0);
  for (EdgeId e = 0; e < map.edge_slots(); ++e) {
    if (!map.edge_alive(e)) continue;
    const Edge& ed = map.endpoints(e);
    const int s = dart_step(cg, dart_of(e, 0));
    if (s == 0) throw Error(Errc::IntraClusterEdge, "edge " + std::to_string(e) + " has no orientation");
    const VertexId a = s > 0 ? ed.u : ed.v;
    const VertexId b = s > 0 ? ed.v : ed.u;
    o.from[e] = a;
    ++o.outdeg[a];
    ++o.indeg[b];
  }
  return o;
}

Extremes sinks_sources(const CGraph& cg, const Orientation& o) {
  Extremes x;
  for (VertexId v = 0; v < cg.map.vertex_slots(); ++v) {
    if (!cg.map.vertex_alive(v)) continue;
    if (o.indeg[v] == 0) x.sources.push_back(v);
    else if (o.outdeg[v] == 0) x.sinks.push_back(v);
  }
  return x;
}

int IncidenceGraph::edge_count() const {
  int n = 0;
  for (const auto& a : adj) n += static_cast<int>(a.size());
  return n;
}

IncidenceGraph build_incidence(const NormalizedCGraph& n, const Orientation& o, PoleRule rule) {
  const CGraph& cg = n.cg;
  const FaceTable& faces = n.faces;
  faces.require_current(cg.map);
  const Extremes x = sinks_sources(cg, o);
  IncidenceGraph g;
  for (VertexId v : x.sources) {
    g.s.push_back(v);
    g.is_source.push_back(1);
  }
  for (VertexId v : x.sinks) {
    g.s.push_back(v);
    g.is_source.push_back(0);
  }

  std::vector<int> f_index(faces.face_slots(), -1);
  for (FaceId f : faces.live_faces()) {
    if (f == n.poles.outer || f == n.poles.outer_prime) continue;
    if (classify_face(cg, faces.walk(f)).cls == FaceClass::SemiSimple) {
      f_index[f] = static_cast<int>(g.f.size());
      g.f.push_back(f);
      g.optional.push_back(0);
    }
  }
  for (FaceId pole : {n.poles.outer, n.poles.outer_prime}) {
    bool has_source = false, has_sink = false;
    for (DartId d : faces.walk(pole).darts) {
      const VertexId v = cg.map.tail(d);
      if (o.indeg[v] == 0) has_source = true;
      if (o.outdeg[v] == 0) has_sink = true;
    }
    const bool joins = rule == PoleRule::Conjunctive ? has_source && has_sink : has_source || has_sink;
    if (joins) {
      f_index[pole] = static_cast<int>(g.f.size());
      g.f.push_back(pole);
      g.optional.push_back(rule == PoleRule::Optional);
    }
  }

  g.adj.resize(g.s.size());
  for (std::size_t i = 0; i < g.s.size(); ++i) {
    const VertexId v = g.s[i];
    for (DartId d : cg.map.rotation(v)) {
      // The occurrence with corner d must be a local minimum (source) or maximum (sink).
      const FacialWalk& w = faces.walk(faces.face_of(d));
      const int pos = faces.position_of(d);
      const int entry = dart_step(cg, w.darts[(pos + w.size() - 1) % w.size()]);
      const int exit = dart_step(cg, d);
      if (g.is_source[i] ? !(entry < 0 && exit > 0) : !(entry > 0 && exit < 0))
        invariant_violation("vertex " + std::to_string(v) + " is not an extreme of an incident face");
      const int fi = f_index[faces.face_of(d)];
      if (fi >= 0 && std::find(g.adj[i].begin(), g.adj[i].end(), fi) == g.adj[i].end()) g.adj[i].push_back(fi);
    }
    std::sort(g.adj[i].begin(), g.adj[i].end());
  }
  return g;
}

std::optional<std::vector<int>> perfect_matching(const IncidenceGraph& g) {
  const int real = static_cast<int>(g.s.size());
  const int nf = static_cast<int>(g.f.size());
  // Optional faces left over are absorbed by dummy vertices adjacent to all of them.
  std::vector<int> optional_faces;
  for (int f = 0; f < nf; ++f)
    if (f < static_cast<int>(g.optional.size()) && g.optional[f]) optional_faces.push_back(f);
  const int dummies = nf - real;
  if (dummies < 0 || dummies > static_cast<int>(optional_faces.size())) return std::nullopt;
  std::vector<std::vector<int>> adj = g.adj;
  for (int i = 0; i < dummies; ++i) adj.push_back(optional_faces);
  const int ns = real + dummies;
  constexpr int kInf = std::numeric_limits<int>::max();
  std::vector<int> match_s(ns, -1), match_f(nf, -1), dist(ns);

  auto bfs = [&] {
    std::queue<int> q;
    bool found = false;
    for (int i = 0; i < ns; ++i) {
      dist[i] = match_s[i] < 0 ? 0 : kInf;
      if (match_s[i] < 0) q.push(i);
    }
    while (!q.empty()) {
      const int i = q.front();
      q.pop();
      for (int f : adj[i]) {
        const int j = match_f[f];
        if (j < 0) found = true;
        else if (dist[j] == kInf) {
          dist[j] = dist[i] + 1;
          q.push(j);
        }
      }
    }
    return found;
  };
  // Iterative DFS along layered augmenting paths.
  std::vector<std::size_t> it(ns);
  auto dfs = [&](int root) {
    std::vector<int> stack{root};
    std::vector<int> via;
    while (!stack.empty()) {
      const int i = stack.back();
      if (it[i] == adj[i].size()) {
        dist[i] = kInf;
        stack.pop_back();
        if (!via.empty()) via.pop_back();
        continue;
      }
      const int f = adj[i][it[i]++];
      const int j = match_f[f];
      if (j < 0) {
        via.push_back(f);
        for (std::size_t k = 0; k < stack.size(); ++k) {
          match_s[stack[k]] = via[k];
          match_f[via[k]] = stack[k];
        }
        return true;
      }
      if (dist[j] == dist[i] + 1) {
        via.push_back(f);
        stack.push_back(j);
      }
    }
    return false;
  };

  while (bfs()) {
    std::fill(it.begin(), it.end(), 0);
    for (int i = 0; i < ns; ++i)
      if (match_s[i] < 0) dfs(i);
  }
  for (int i = 0; i < ns; ++i)
    if (match_s[i] < 0) return std::nullopt;
  match_s.resize(real);
  return match_s;
}

namespace {

bool single_cluster(const CGraph& cg) {
  for (VertexId v = 0; v < cg.map.vertex_slots(); ++v)
    if (cg.map.vertex_alive(v) && cg.gamma[v] != cg.gamma[0]) return false;
  return true;
}

Certificate plain_certificate(const CGraph& cg) {
  Certificate cert;
  cert.augmented = cg;
  cert.input_vertex_count = cg.map.vertex_slots();
  cert.input_edge_count = cg.map.edge_slots();
  cert.cluster_trees = cluster_spanning_trees(cg, cert.input_edge_count);
  return cert;
}

ComponentVerdict run_component(const CGraph& cg, const DecideOptions& opts, std::optional<Certificate>& cert) {
  const bool want_cert = opts.build_certificate;
  ComponentVerdict out;
  out.stats.vertices = cg.map.live_vertex_count();
  out.stats.edges = cg.map.live_edge_count();
  if (single_cluster(cg)) {
    if (want_cert) cert = plain_certificate(cg);
    return out;
  }
  const FaceTable faces = FaceTable::trace(cg.map);
  const PoleSelection sel = select_poles(cg, faces);
  if (sel.kind == PoleSelection::Kind::AllZero) {
    out.status = Status::Unsupported;
    out.reason = Reason::AllZeroWinding;
    out.detail = sel.reason;
    return out;
  }
  if (sel.kind == PoleSelection::Kind::Reject) {
    out.status = Status::NotCPlanar;
    out.reason = Reason::WindingObstruction;
    out.detail = sel.reason;
    return out;
  }

  NormalizeOutcome norm = normalize(cg, sel.poles);
  if (!norm.normalized) {
    out.status = Status::NotCPlanar;
    out.reason = Reason::LoopEnclosure;
    out.detail = norm.rejection;
    return out;
  }
  NormalizedCGraph& n = *norm.normalized;
  out.stats.contractions = n.provenance.contractions;
  out.stats.loops_deleted = n.provenance.loops_deleted;
  out.stats.subdivisions = static_cast<int>(n.provenance.subdivisions.size());
  for (const auto& s : n.provenance.subdivisions) out.stats.subdivision_vertices += static_cast<int>(s.new_vertices.size());

  const Orientation o = orient(n.cg);
  const IncidenceGraph g = build_incidence(n, o, opts.pole_rule);
  out.stats.sinks_sources = static_cast<int>(g.s.size());
  out.stats.matched_faces = static_cast<int>(g.f.size());
  const auto match = perfect_matching(g);
  if (!match) {
    out.status = Status::NotCPlanar;
    out.reason = Reason::NoPerfectMatching;
    out.detail = "no perfect matching between " + std::to_string(g.s.size()) + " sinks/sources and " +
                 std::to_string(g.f.size()) + " faces";
    return out;
  }

  std::vector<ChordLog> chords = eliminate_extremes(n, g, *match);
  out.stats.elimination_chords = static_cast<int>(chords.size());
  const std::vector<Candidate> cands = chord_candidates(n);
  const std::vector<Candidate> forest = maximal_forest(n, cands);
  out.stats.candidates = static_cast<int>(cands.size());
  out.stats.forest_chords = static_cast<int>(forest.size());
  const std::vector<ChordLog> more = insert_forest(n, forest);
  chords.insert(chords.end(), more.begin(), more.end());
  if (want_cert) cert = build_certificate(cg, n, chords);
  return out;
}

}  // namespace

Verdict decide(const CGraph& cg, const DecideOptions& opts) {
  Verdict v;
  if (cg.c < 1) throw Error(Errc::ClusterCountTooSmall, "need at least one cluster");
  if (static_cast<int>(cg.gamma.size()) != cg.map.vertex_slots())
    throw Error(Errc::InvalidArgument, "cluster labels do not cover every vertex");
  if (cg.map.live_vertex_count() != cg.map.vertex_slots() || cg.map.live_edge_count() != cg.map.edge_slots())
    throw Error(Errc::InvalidArgument, "input map has deleted slots");
  for (int g : cg.gamma)
    if (g < 0 || g >= cg.c) throw Error(Errc::InvalidArgument, "cluster label " + std::to_string(g) + " out of range");
  if (cg.c == 1) {
    v.detail = "a single cluster is connected in every component";
    if (opts.build_certificate) v.certificate = plain_certificate(cg);
    return v;
  }
  if (cg.c == 2) {
    v.status = Status::Unsupported;
    v.reason = Reason::TwoClusters;
    v.detail = "two-cluster instances are outside the cyclic algorithm";
    return v;
  }
  validate_cyclic(cg);

  const std::vector<Component> parts = split_components(cg);
  std::vector<Certificate> certs;
  bool any_not = false, any_unsupported = false;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::optional<Certificate> cert;
    ComponentVerdict cv = run_component(parts[i].cg, opts, cert);
    if (cv.status == Status::NotCPlanar && !any_not) {
      any_not = true;
      v.reason = cv.reason;
      v.detail = "component " + std::to_string(i) + ": " + cv.detail;
    }
    if (cv.status == Status::Unsupported && !any_unsupported) {
      any_unsupported = true;
      if (!any_not) {
        v.reason = cv.reason;
        v.detail = "component " + std::to_string(i) + ": " + cv.detail;
      }
    }
    if (cert) certs.push_back(std::move(*cert));
    v.components.push_back(std::move(cv));
  }
  if (any_not) v.status = Status::NotCPlanar;
  else if (any_unsupported) v.status = Status::Unsupported;
  else {
    v.status = Status::CPlanar;
    v.reason = Reason::None;
    v.detail.clear();
    if (opts.build_certificate) v.certificate = combine_certificates(cg, parts, certs);
  }
  return v;
}

}  // namespace cplanar
