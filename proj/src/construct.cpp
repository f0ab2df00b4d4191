#include "cplanar/construct.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "cplanar/union_find.hpp"

namespace cplanar {

const char* phase_name(Phase p) { return p == Phase::Elimination ? "elimination" : "forest"; }

namespace {

DartId stepping_dart(const CGraph& cg, const FacialWalk& w) {
  for (DartId d : w.darts)
    if (dart_step(cg, d) != 0) return d;
  return kNoDart;
}

struct PoleSplit {
  int occ_u = -1;
  int occ_v = -1;
};

// Chord endpoints on a pole face that leave two simple faces of heights 0 and height(f).
PoleSplit find_pole_split(const CGraph& cg, const FacialWalk& w, VertexId u) {
  const int n = w.size();
  std::vector<int> s(n);
  std::vector<long> prefix(n + 1, 0);
  for (int k = 0; k < n; ++k) {
    s[k] = dart_step(cg, w.darts[k]);
    prefix[k + 1] = prefix[k] + s[k];
  }
  const long total = prefix[n];
  // minima[k] = 1 when occurrence k is a strict local minimum; doubled for cyclic ranges.
  std::vector<int> mincount(2 * n + 1, 0);
  for (int t = 0; t < 2 * n; ++t) {
    const int k = t % n;
    const int is_min = s[(k + n - 1) % n] < 0 && s[k] > 0;
    mincount[t + 1] = mincount[t] + is_min;
  }
  // Minima strictly between occurrences a and b walking forward from a.
  auto between = [&](int a, int b) {
    const int lo = a + 1;
    int hi = b;
    if (hi <= a) hi += n;
    return lo >= hi ? 0 : mincount[hi] - mincount[lo];
  };
  auto sum_forward = [&](int a, int b) {  // steps a .. b-1, cyclically
    return b > a ? prefix[b] - prefix[a] : total - (prefix[a] - prefix[b]);
  };

  PoleSplit found;
  VertexId partner = -1;
  for (int o = 0; o < n; ++o) {
    if (cg.map.tail(w.darts[o]) != u) continue;
    for (int j = 0; j < n; ++j) {
      const VertexId x = cg.map.tail(w.darts[j]);
      if (j == o || x == u || cg.gamma[x] != cg.gamma[u]) continue;
      const long ha = sum_forward(o, j);
      const long hb = total - ha;
      if (!((ha == 0 && hb == total) || (ha == total && hb == 0))) continue;
      const int min_a = between(o, j) + (s[(j + n - 1) % n] < 0 && s[o] > 0);
      const int min_b = between(j, o) + (s[(o + n - 1) % n] < 0 && s[j] > 0);
      if (min_a > 1 || min_b > 1) continue;
      if (partner >= 0 && partner != x)
        invariant_violation("pole split partner of vertex " + std::to_string(u) + " is not unique");
      if (partner < 0) {
        partner = x;
        found = {o, j};
      }
    }
  }
  if (partner < 0) invariant_violation("no pole split partner for vertex " + std::to_string(u));
  return found;
}

void check_no_intra_cycle(const CGraph& cg, UnionFind& uf) {
  for (EdgeId e = 0; e < cg.map.edge_slots(); ++e) {
    if (!cg.map.edge_alive(e)) continue;
    const Edge& ed = cg.map.endpoints(e);
    if (cg.gamma[ed.u] != cg.gamma[ed.v]) continue;
    if (!uf.unite(ed.u, ed.v))
      invariant_violation("cluster " + std::to_string(cg.gamma[ed.u]) + " contains a cycle through edge " +
                          std::to_string(e));
  }
}

}  // namespace

std::vector<ChordLog> eliminate_extremes(NormalizedCGraph& n, const IncidenceGraph& g,
                                         const std::vector<int>& match) {
  CGraph& cg = n.cg;
  FaceTable& faces = n.faces;
  std::vector<ChordLog> log;
  for (std::size_t i = 0; i < g.s.size(); ++i) {
    const VertexId u = g.s[i];
    const bool source = g.is_source[i] != 0;
    const FaceId f = g.f[match[i]];
    if (!faces.face_alive(f)) invariant_violation("matched face was split before its extreme was handled");
    const FacialWalk walk = faces.walk(f);
    const bool is_outer = f == n.poles.outer, is_outer_prime = f == n.poles.outer_prime;
    int mine = -1, other = -1;
    if (is_outer || is_outer_prime) {
      const PoleSplit ps = find_pole_split(cg, walk, u);
      mine = ps.occ_u;
      other = ps.occ_v;
    } else {
      const FaceInfo info = classify_face(cg, walk);
      const std::vector<int>& ext = source ? info.minima : info.maxima;
      if (info.cls != FaceClass::SemiSimple || ext.size() != 2)
        invariant_violation("matched inner face is not semi-simple");
      const VertexId a = cg.map.tail(walk.corner(ext[0])), b = cg.map.tail(walk.corner(ext[1]));
      if (a == u && b == u) invariant_violation("elimination chord would be a loop at " + std::to_string(u));
      if (a == u) {
        mine = ext[0];
        other = ext[1];
      } else if (b == u) {
        mine = ext[1];
        other = ext[0];
      } else {
        invariant_violation("vertex " + std::to_string(u) + " is not an extreme of its matched face");
      }
    }
    const VertexId partner = cg.map.tail(walk.corner(other));
    const EdgeId e = insert_chord(cg.map, faces, f, mine, other);
    const FaceId fa = faces.retrace(cg.map, dart_of(e, 0));
    const FaceId fb = faces.retrace(cg.map, dart_of(e, 1));
    log.push_back({e, source ? partner : u, Phase::Elimination, f});
    if (is_outer || is_outer_prime) {
      const long ha = height_of_walk(cg, faces.walk(fa).darts);
      const FaceId keep = ha != 0 ? fa : fb;
      (is_outer ? n.poles.outer : n.poles.outer_prime) = keep;
      (is_outer ? n.poles.outer_dart : n.poles.outer_prime_dart) = stepping_dart(cg, faces.walk(keep));
    }
  }
  assert_no_sinks_sources(n, log);
  assert_cluster_forest(cg);
  return log;
}

void assert_no_sinks_sources(const NormalizedCGraph& n, const std::vector<ChordLog>& chords) {
  const CGraph& cg = n.cg;
  std::vector<int> in(cg.map.vertex_slots(), 0), out(cg.map.vertex_slots(), 0);
  std::vector<VertexId> from(cg.map.edge_slots(), -1);
  for (const ChordLog& c : chords) from[c.edge] = c.from;
  for (EdgeId e = 0; e < cg.map.edge_slots(); ++e) {
    if (!cg.map.edge_alive(e)) continue;
    const Edge& ed = cg.map.endpoints(e);
    VertexId a = from[e];
    if (a < 0) {
      const int s = dart_step(cg, dart_of(e, 0));
      if (s == 0) invariant_violation("intra-cluster edge " + std::to_string(e) + " has no direction");
      a = s > 0 ? ed.u : ed.v;
    }
    const VertexId b = a == ed.u ? ed.v : ed.u;
    ++out[a];
    ++in[b];
  }
  for (VertexId v = 0; v < cg.map.vertex_slots(); ++v)
    if (cg.map.vertex_alive(v) && (in[v] == 0 || out[v] == 0))
      invariant_violation("vertex " + std::to_string(v) + " is still a sink or source after elimination");
  int nonzero = 0;
  for (FaceId f : n.faces.live_faces()) {
    const long h = height_of_walk(cg, n.faces.walk(f).darts);
    if (h == 0) continue;
    ++nonzero;
    if (f != n.poles.outer && f != n.poles.outer_prime)
      invariant_violation("face " + std::to_string(f) + " of nonzero height is not a pole");
  }
  if (nonzero != 2) invariant_violation("expected one inner face of nonzero height besides the outer face");
}

void assert_cluster_forest(const CGraph& cg) {
  UnionFind uf(cg.map.vertex_slots());
  check_no_intra_cycle(cg, uf);
}

void assert_cluster_trees(const CGraph& cg) {
  UnionFind uf(cg.map.vertex_slots());
  check_no_intra_cycle(cg, uf);
  std::vector<int> root(cg.c, -1);
  for (VertexId v = 0; v < cg.map.vertex_slots(); ++v) {
    if (!cg.map.vertex_alive(v)) continue;
    int& r = root[cg.gamma[v]];
    if (r < 0) r = uf.find(v);
    else if (uf.find(v) != r)
      invariant_violation("cluster " + std::to_string(cg.gamma[v]) + " is not connected");
  }
}

std::vector<Candidate> chord_candidates(const NormalizedCGraph& n) {
  const CGraph& cg = n.cg;
  std::vector<Candidate> out;
  for (FaceId f : n.faces.live_faces()) {
    if (f == n.poles.outer || f == n.poles.outer_prime) continue;
    const FacialWalk& w = n.faces.walk(f);
    const FaceInfo info = classify_face(cg, w);
    if (info.cls != FaceClass::Simple) invariant_violation("inner face " + std::to_string(f) + " is not simple");
    const std::vector<long>& lab = *info.gamma_f;
    const int len = w.size();
    const long lo = *std::min_element(lab.begin(), lab.end());
    const long hi = *std::max_element(lab.begin(), lab.end());
    if (hi - lo < 2) continue;
    int p = 0;
    while (!(lab[p] == lo && lab[(p + len - 1) % len] != lo)) ++p;
    const int levels = static_cast<int>(hi - lo + 1);
    std::vector<int> asc(levels, -1), desc(levels, -1);
    int phase = 0;  // 0 ascending, 1 at the top, 2 descending
    long last = lo;
    for (int t = 0; t < len; ++t) {
      const int k = (p + t) % len;
      const long l = lab[k];
      if (phase == 0 && l == hi) phase = 1;
      if (phase == 1 && l < hi) phase = 2;
      if ((phase == 0 && l < last) || (phase == 2 && l > last))
        invariant_violation("simple face " + std::to_string(f) + " is not two monotone runs");
      last = l;
      if (phase == 0 && asc[l - lo] < 0) asc[l - lo] = k;
      if (phase == 2 && desc[l - lo] < 0) desc[l - lo] = k;
    }
    for (long l = lo + 1; l < hi; ++l) {
      const int a = asc[l - lo], b = desc[l - lo];
      if (a < 0 || b < 0) invariant_violation("simple face " + std::to_string(f) + " skips a level");
      if (cg.map.tail(w.corner(a)) == cg.map.tail(w.corner(b))) continue;
      out.push_back({f, l, a, b});
    }
  }
  return out;
}

std::vector<Candidate> maximal_forest(const NormalizedCGraph& n, const std::vector<Candidate>& cands) {
  const CGraph& cg = n.cg;
  UnionFind uf(cg.map.vertex_slots());
  check_no_intra_cycle(cg, uf);
  std::vector<Candidate> keep;
  for (const Candidate& c : cands) {
    const FacialWalk& w = n.faces.walk(c.face);
    if (uf.unite(cg.map.tail(w.corner(c.occ_a)), cg.map.tail(w.corner(c.occ_b)))) keep.push_back(c);
  }
  return keep;
}

std::vector<ChordLog> insert_forest(NormalizedCGraph& n, const std::vector<Candidate>& forest) {
  CGraph& cg = n.cg;
  std::vector<ChordRequest> req;
  req.reserve(forest.size());
  for (const Candidate& c : forest) req.push_back({c.face, c.occ_a, c.occ_b});
  const std::vector<EdgeId> edges = insert_chords(cg.map, n.faces, req);
  std::vector<ChordLog> log;
  for (std::size_t i = 0; i < edges.size(); ++i)
    log.push_back({edges[i], cg.map.endpoints(edges[i]).u, Phase::Forest, forest[i].face});
  n.faces = FaceTable::trace(cg.map);
  n.poles.outer = n.faces.face_of(n.poles.outer_dart);
  n.poles.outer_prime = n.faces.face_of(n.poles.outer_prime_dart);
  assert_cluster_trees(cg);
  return log;
}

std::vector<std::vector<EdgeId>> cluster_spanning_trees(const CGraph& cg, int input_edge_count) {
  std::vector<std::vector<EdgeId>> trees(cg.c);
  UnionFind uf(cg.map.vertex_slots());
  auto scan = [&](EdgeId lo, EdgeId hi) {
    for (EdgeId e = lo; e < hi; ++e) {
      if (!cg.map.edge_alive(e)) continue;
      const Edge& ed = cg.map.endpoints(e);
      if (cg.gamma[ed.u] == cg.gamma[ed.v] && uf.unite(ed.u, ed.v)) trees[cg.gamma[ed.u]].push_back(e);
    }
  };
  scan(0, std::min(input_edge_count, cg.map.edge_slots()));
  scan(input_edge_count, cg.map.edge_slots());
  for (auto& t : trees) std::sort(t.begin(), t.end());
  return trees;
}

Certificate build_certificate(const CGraph& input, const NormalizedCGraph& n, const std::vector<ChordLog>& chords) {
  const CombMap& wm = n.cg.map;
  const int n0 = input.map.vertex_slots();
  const int m0 = input.map.edge_slots();
  auto added = [&](DartId d) { return edge_of(d) >= m0; };

  CombMap cm = input.map;
  std::vector<int> gamma = input.gamma;
  std::vector<VertexId> aux_of(wm.vertex_slots(), -1);
  int aux_count = 0;
  for (VertexId w = n0; w < wm.vertex_slots(); ++w) {
    if (!wm.vertex_alive(w)) continue;
    aux_of[w] = cm.add_vertex();
    gamma.push_back(n.cg.gamma[w]);
    ++aux_count;
  }

  // Each run of added darts sits right after the original dart preceding it.
  std::vector<VertexId> tail_c(wm.dart_slots(), -1);
  std::vector<std::vector<DartId>> rot(wm.vertex_slots());
  std::vector<int> start(wm.vertex_slots(), 0);
  for (VertexId w = 0; w < wm.vertex_slots(); ++w) {
    if (!wm.vertex_alive(w)) continue;
    rot[w] = wm.rotation(w);
    const auto& r = rot[w];
    if (w >= n0) {
      for (DartId d : r) tail_c[d] = aux_of[w];
      continue;
    }
    const auto it = std::find_if(r.begin(), r.end(), [&](DartId d) { return !added(d); });
    if (it == r.end()) invariant_violation("vertex " + std::to_string(w) + " kept no input dart");
    start[w] = static_cast<int>(it - r.begin());
    DartId anchor = *it;
    for (std::size_t t = 0; t < r.size(); ++t) {
      const DartId d = r[(start[w] + t) % r.size()];
      if (added(d)) tail_c[d] = input.map.tail(anchor);
      else anchor = d;
    }
  }

  std::vector<EdgeId> edge_c(wm.edge_slots(), -1);
  std::vector<EdgeId> edge_w;  // certificate edge -> working edge, offset by m0
  for (EdgeId e = m0; e < wm.edge_slots(); ++e) {
    if (!wm.edge_alive(e)) continue;
    edge_c[e] = cm.add_unlinked_edge(tail_c[dart_of(e, 0)], tail_c[dart_of(e, 1)]);
    edge_w.push_back(e);
  }
  auto dart_c = [&](DartId d) { return added(d) ? dart_of(edge_c[edge_of(d)], d & 1) : d; };
  for (VertexId w = 0; w < wm.vertex_slots(); ++w) {
    if (!wm.vertex_alive(w)) continue;
    const auto& r = rot[w];
    DartId after = kNoDart;
    for (std::size_t t = 0; t < r.size(); ++t) {
      const DartId d = r[(start[w] + t) % r.size()];
      if (!added(d)) {
        after = d;
        continue;
      }
      cm.link_after(after, dart_c(d), tail_c[d]);
      after = dart_c(d);
    }
  }
  cm.debug_validate();

  // Fold subdivision vertices: drop added inter-cluster edges, merge each auxiliary
  // vertex into its cluster along intra-cluster edges, then keep a spanning forest.
  for (EdgeId e = m0; e < cm.edge_slots(); ++e) {
    const Edge& ed = cm.endpoints(e);
    if (cm.edge_alive(e) && gamma[ed.u] != gamma[ed.v]) cm.delete_edge(e);
  }
  std::vector<EdgeId> parent(cm.vertex_slots(), -1);
  std::vector<char> seen(cm.vertex_slots(), 0);
  std::vector<VertexId> order;
  std::queue<VertexId> q;
  for (VertexId v = 0; v < n0; ++v) {
    seen[v] = 1;
    q.push(v);
  }
  while (!q.empty()) {
    const VertexId x = q.front();
    q.pop();
    for (DartId d : cm.rotation(x)) {
      const VertexId y = cm.head(d);
      if (seen[y] || gamma[y] != gamma[x]) continue;
      seen[y] = 1;
      parent[y] = edge_of(d);
      order.push_back(y);
      q.push(y);
    }
  }
  for (VertexId v = n0; v < cm.vertex_slots(); ++v)
    if (cm.vertex_alive(v) && !seen[v]) invariant_violation("auxiliary vertex is cut off from its cluster");
  for (VertexId y : order) {
    const EdgeId e = parent[y];
    const Edge ed = cm.endpoints(e);
    for (EdgeId l : cm.contract(e, ed.u == y ? ed.v : ed.u))
      if (cm.edge_alive(l)) cm.delete_edge(l);
  }
  UnionFind uf(cm.vertex_slots());
  for (EdgeId e = 0; e < m0; ++e) {
    const Edge& ed = cm.endpoints(e);
    if (gamma[ed.u] == gamma[ed.v]) uf.unite(ed.u, ed.v);
  }
  for (EdgeId e = m0; e < cm.edge_slots(); ++e) {
    if (!cm.edge_alive(e)) continue;
    const Edge& ed = cm.endpoints(e);
    if (gamma[ed.u] != gamma[ed.v]) invariant_violation("folded certificate kept an inter-cluster edge");
    if (!uf.unite(ed.u, ed.v)) cm.delete_edge(e);
  }

  const auto compact = cm.compacted();
  Certificate cert;
  cert.input_vertex_count = n0;
  cert.input_edge_count = m0;
  cert.auxiliary_vertices = aux_count;
  cert.augmented.map = compact.map;
  cert.augmented.c = input.c;
  cert.augmented.gamma.assign(gamma.begin(), gamma.begin() + n0);
  if (cert.augmented.map.vertex_slots() != n0) invariant_violation("folding left extra vertices");

  std::map<EdgeId, const ChordLog*> by_edge;
  for (const ChordLog& c : chords) by_edge[c.edge] = &c;
  for (EdgeId e = m0; e < cm.edge_slots(); ++e) {
    if (!cm.edge_alive(e)) continue;
    const EdgeId we = edge_w[e - m0];
    const auto it = by_edge.find(we);
    if (it == by_edge.end()) invariant_violation("certificate edge has no recorded origin");
    AddedEdge a;
    a.edge = compact.edge_map[e];
    a.u = cert.augmented.map.endpoints(a.edge).u;
    a.v = cert.augmented.map.endpoints(a.edge).v;
    a.cluster = cert.augmented.gamma[a.u];
    a.phase = it->second->phase;
    a.face_at_insertion = it->second->face;
    cert.added.push_back(a);
  }
  cert.cluster_trees = cluster_spanning_trees(cert.augmented, m0);
  return cert;
}

Certificate combine_certificates(const CGraph& input, const std::vector<Component>& parts,
                                 const std::vector<Certificate>& certs) {
  const int nv = input.map.vertex_slots();
  const int m = input.map.edge_slots();
  std::vector<Edge> edges;
  for (EdgeId e = 0; e < m; ++e) edges.push_back(input.map.endpoints(e));
  std::vector<std::vector<DartId>> rot(nv);
  Certificate out;
  out.input_vertex_count = nv;
  out.input_edge_count = m;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const Component& part = parts[k];
    const Certificate& cert = certs.at(k);
    const CombMap& cm = cert.augmented.map;
    std::vector<EdgeId> global(cm.edge_slots(), -1);
    for (EdgeId e = 0; e < cm.edge_slots(); ++e) {
      if (e < cert.input_edge_count) {
        global[e] = part.to_input_edge[e];
      } else {
        global[e] = static_cast<EdgeId>(edges.size());
        const Edge& ed = cm.endpoints(e);
        edges.push_back({part.to_input_vertex[ed.u], part.to_input_vertex[ed.v]});
      }
    }
    for (VertexId v = 0; v < cm.vertex_slots(); ++v)
      for (DartId d : cm.rotation(v)) rot[part.to_input_vertex[v]].push_back(dart_of(global[edge_of(d)], d & 1));
    for (AddedEdge a : cert.added) {
      a.edge = global[a.edge];
      a.u = part.to_input_vertex[a.u];
      a.v = part.to_input_vertex[a.v];
      a.component = static_cast<int>(k);
      out.added.push_back(a);
    }
    out.auxiliary_vertices += cert.auxiliary_vertices;
  }
  out.augmented.map = CombMap::build(nv, std::move(edges), rot);
  out.augmented.c = input.c;
  out.augmented.gamma = input.gamma;
  std::sort(out.added.begin(), out.added.end(), [](const AddedEdge& a, const AddedEdge& b) { return a.edge < b.edge; });
  out.cluster_trees = cluster_spanning_trees(out.augmented, m);
  return out;
}

}  // namespace cplanar
