#include "cplanar/generator.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <string>

#include "cplanar/union_find.hpp"

namespace cplanar {

std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return x % bound;
}

namespace {

double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

int mod(long a, int c) { return static_cast<int>(((a % c) + c) % c); }

// k+1 steps in {-1, 0, +1} summing to t, in random order. Without zeros the parity
// of k+1 and t must agree.
std::vector<int> random_steps(std::mt19937_64& rng, int k, long t, bool zeros) {
  const int len = k + 1;
  std::vector<int> s(std::labs(t), t > 0 ? 1 : -1);
  const int rest = len - static_cast<int>(s.size());
  const int pairs = zeros ? static_cast<int>(bounded(rng, rest / 2 + 1)) : rest / 2;
  for (int i = 0; i < pairs; ++i) {
    s.push_back(1);
    s.push_back(-1);
  }
  s.resize(len, 0);
  for (int i = len - 1; i > 0; --i) std::swap(s[i], s[bounded(rng, i + 1)]);
  return s;
}

}  // namespace

CGraph generate(const GenOptions& opt) {
  if (opt.c < 3) throw Error(Errc::ClusterCountTooSmall, "the generator needs c >= 3");
  if (opt.n < opt.c) throw Error(Errc::InvalidArgument, "n must be at least c");
  if (opt.max_path < 1) throw Error(Errc::InvalidArgument, "max_path must be positive");
  std::mt19937_64 rng(opt.seed);
  const int c = opt.c;

  CGraph cg;
  cg.c = c;
  std::vector<Edge> edges;
  std::vector<std::vector<DartId>> rot(c);
  for (int i = 0; i < c; ++i) {
    edges.push_back({i, (i + 1) % c});
    cg.gamma.push_back(i);
    rot[i] = {2 * i, 2 * ((i + c - 1) % c) + 1};
  }
  cg.map = CombMap::build(c, std::move(edges), rot);
  FaceTable faces = FaceTable::trace(cg.map);

  const int chord_target = opt.ops < 0 ? opt.n / 4 : opt.ops;
  int chords = 0;
  long attempts = 0;
  const long max_attempts = 200L * (opt.n + chord_target) + 1000;
  while (cg.map.live_vertex_count() < opt.n || chords < chord_target) {
    if (++attempts > max_attempts) throw Error(Errc::InternalInvariantViolation, "generator made no progress");
    const int need = opt.n - cg.map.live_vertex_count();
    const bool chord = need == 0 || (chords < chord_target && unit(rng) < 0.3);
    const std::vector<FaceId> live = faces.live_faces();
    const FaceId f = live[bounded(rng, live.size())];
    const FacialWalk w = faces.walk(f);
    const int len = w.size();

    if (!chord && unit(rng) < 0.3) {
      const DartId corner = w.corner(static_cast<int>(bounded(rng, len)));
      const VertexId v = cg.map.tail(corner);
      const VertexId x = cg.map.add_vertex();
      const int delta = opt.intra ? static_cast<int>(bounded(rng, 3)) - 1 : (bounded(rng, 2) ? 1 : -1);
      cg.gamma.push_back(mod(cg.gamma[v] + delta, c));
      const EdgeId e = cg.map.add_edge(v, corner, x, kNoDart);
      faces.retrace(cg.map, dart_of(e, 0));
      continue;
    }

    const int a = static_cast<int>(bounded(rng, len));
    int b = static_cast<int>(bounded(rng, len - 1));
    if (b >= a) ++b;
    const int k = chord ? 0 : 1 + static_cast<int>(bounded(rng, std::min(opt.max_path, need)));
    const VertexId va = cg.map.tail(w.corner(a)), vb = cg.map.tail(w.corner(b));
    if (k == 0 && va == vb) continue;

    long h_ab = 0, h_f = 0;
    for (int i = 0; i < len; ++i) {
      const int s = dart_step(cg, w.darts[i]);
      h_f += s;
      if ((i - a + len) % len < (b - a + len) % len) h_ab += s;
    }
    std::vector<long> targets;
    if (unit(rng) < opt.keep_winding) {
      for (long t : {h_ab, h_ab - h_f})
        if (std::labs(t) <= k + 1 && std::find(targets.begin(), targets.end(), t) == targets.end())
          targets.push_back(t);
    } else {
      for (long t = -(k + 1); t <= k + 1; ++t)
        if (mod(t - (cg.gamma[vb] - cg.gamma[va]), c) == 0) targets.push_back(t);
    }
    if (!opt.intra)
      targets.erase(std::remove_if(targets.begin(), targets.end(), [&](long t) { return (t + k + 1) % 2 != 0; }),
                    targets.end());
    if (targets.empty()) continue;
    const long t = targets[bounded(rng, targets.size())];
    const std::vector<int> steps = random_steps(rng, k, t, opt.intra);

    const InsertedPath path = insert_path(cg.map, faces, f, a, b, k);
    cg.gamma.resize(cg.map.vertex_slots(), 0);
    long label = cg.gamma[va];
    for (int i = 0; i < k; ++i) {
      label += steps[i];
      cg.gamma[path.vertices[i]] = mod(label, c);
    }
    faces.retrace(cg.map, dart_of(path.edges.front(), 0));
    faces.retrace(cg.map, dart_of(path.edges.front(), 1));
    if (k == 0) ++chords;
  }
  validate_cyclic(cg);
  return cg;
}

}  // namespace cplanar

namespace cplanar {

CGraph generate_fan(const GenOptions& opt) {
  const int c = opt.c;
  if (c < 3) throw Error(Errc::ClusterCountTooSmall, "the generator needs c >= 3");
  if (opt.n < 2 * c) throw Error(Errc::InvalidArgument, "the fan family needs n >= 2c");
  std::mt19937_64 rng(opt.seed);
  const int m = opt.n >= 4 * c ? 2 : 1;
  const int k = c * m;
  const int rings = opt.n / k;
  auto id = [&](int i, int j) { return i * k + ((j % k) + k) % k; };

  // Candidate edges: ring, radial, and at most one diagonal per quad.
  struct Cand {
    VertexId a, b;
    bool forced;
  };
  std::vector<Cand> cand;
  std::vector<int> quad(static_cast<std::size_t>(rings) * k, 0);
  for (int i = 0; i < rings; ++i)
    for (int j = 0; j < k; ++j) {
      cand.push_back({id(i, j), id(i, j + 1), i == 0 || i == rings - 1});
      if (i + 1 < rings) {
        cand.push_back({id(i, j), id(i + 1, j), j == 0});
        quad[id(i, j)] = static_cast<int>(bounded(rng, 3));
        if (quad[id(i, j)] == 1) cand.push_back({id(i, j), id(i + 1, j + 1), false});
        if (quad[id(i, j)] == 2) cand.push_back({id(i, j + 1), id(i + 1, j), false});
      }
    }
  const int grid = rings * k;
  std::vector<char> keep(cand.size(), 0);
  UnionFind uf(grid);
  for (std::size_t e = 0; e < cand.size(); ++e)
    if (cand[e].forced || unit(rng) < 0.7) {
      keep[e] = 1;
      uf.unite(cand[e].a, cand[e].b);
    }
  for (std::size_t e = 0; e < cand.size(); ++e)
    if (!keep[e] && uf.unite(cand[e].a, cand[e].b)) keep[e] = 1;

  // Pendants on distinct outer vertices.
  const int pendants = opt.n - grid;
  std::vector<int> outer(k);
  for (int j = 0; j < k; ++j) outer[j] = j;
  for (int j = k - 1; j > 0; --j) std::swap(outer[j], outer[bounded(rng, j + 1)]);
  std::vector<int> pendant_of(grid, -1);

  CGraph cg;
  cg.c = c;
  cg.gamma.resize(opt.n);
  for (int i = 0; i < rings; ++i)
    for (int j = 0; j < k; ++j) cg.gamma[id(i, j)] = j / m;
  std::vector<Edge> edges;
  std::map<std::pair<VertexId, VertexId>, EdgeId> edge_id;
  for (std::size_t e = 0; e < cand.size(); ++e)
    if (keep[e]) {
      edge_id[{cand[e].a, cand[e].b}] = static_cast<EdgeId>(edges.size());
      edges.push_back({cand[e].a, cand[e].b});
    }
  for (int p = 0; p < pendants; ++p) {
    const VertexId anchor = id(rings - 1, outer[p]);
    const VertexId x = grid + p;
    cg.gamma[x] = mod(cg.gamma[anchor] + static_cast<int>(bounded(rng, 3)) - 1, c);
    pendant_of[anchor] = x;
    edge_id[{anchor, x}] = static_cast<EdgeId>(edges.size());
    edges.push_back({anchor, x});
  }

  // Dart from a toward b, if that edge exists.
  auto dart = [&](VertexId a, VertexId b) -> DartId {
    auto it = edge_id.find({a, b});
    if (it != edge_id.end()) return dart_of(it->second, 0);
    it = edge_id.find({b, a});
    if (it != edge_id.end()) return dart_of(it->second, 1);
    return kNoDart;
  };
  std::vector<std::vector<DartId>> rot(opt.n);
  for (int i = 0; i < rings; ++i)
    for (int j = 0; j < k; ++j) {
      const VertexId v = id(i, j);
      std::vector<DartId> r;
      auto add = [&](DartId d) {
        if (d != kNoDart) r.push_back(d);
      };
      // Counterclockwise from the outward direction.
      if (i + 1 < rings) add(dart(v, id(i + 1, j)));
      if (pendant_of[v] >= 0) add(dart(v, pendant_of[v]));
      if (i + 1 < rings && quad[id(i, j)] == 1) add(dart(v, id(i + 1, j + 1)));
      add(dart(v, id(i, j + 1)));
      if (i > 0 && quad[id(i - 1, j)] == 2) add(dart(v, id(i - 1, j + 1)));
      if (i > 0) add(dart(v, id(i - 1, j)));
      if (i > 0 && quad[id(i - 1, j - 1)] == 1) add(dart(v, id(i - 1, j - 1)));
      add(dart(v, id(i, j - 1)));
      if (i + 1 < rings && quad[id(i, j - 1)] == 2) add(dart(v, id(i + 1, j - 1)));
      rot[v] = std::move(r);
    }
  for (int p = 0; p < pendants; ++p) rot[grid + p] = {dart(grid + p, id(rings - 1, outer[p]))};
  cg.map = CombMap::build(opt.n, std::move(edges), rot);
  validate_cyclic(cg);
  return cg;
}

}  // namespace cplanar
