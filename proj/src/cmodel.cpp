#include "cplanar/cmodel.hpp"

#include <cstdlib>
#include <string>

namespace cplanar {

int g_step(int c, int delta) {
  if (c < 3) throw Error(Errc::ClusterCountTooSmall, "g is defined for c >= 3, got c = " + std::to_string(c));
  if (delta == 0) return 0;
  if (delta == 1 || delta == 1 - c) return 1;
  if (delta == -1 || delta == c - 1) return -1;
  throw Error(Errc::IllegalDelta, "cluster difference " + std::to_string(delta) + " is not cyclic for c = " +
                                      std::to_string(c));
}

int dart_step(const CGraph& cg, DartId d) {
  return g_step(cg.c, cg.gamma[cg.map.head(d)] - cg.gamma[cg.map.tail(d)]);
}

long height_of_walk(const CGraph& cg, std::span<const DartId> walk) {
  const std::size_t n = walk.size();
  long h = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (cg.map.head(walk[i]) != cg.map.tail(walk[(i + 1) % n]))
      throw Error(Errc::NotClosed, "walk breaks after position " + std::to_string(i));
    h += dart_step(cg, walk[i]);
  }
  return h;
}

long winding_number(const CGraph& cg, std::span<const DartId> walk) {
  const long h = height_of_walk(cg, walk);
  if (h % cg.c != 0)
    throw Error(Errc::InternalNonDivisible, "closed walk of height " + std::to_string(h) +
                                                " is not divisible by c = " + std::to_string(cg.c));
  return h / cg.c;
}

const char* face_class_name(FaceClass k) {
  switch (k) {
    case FaceClass::Simple: return "simple";
    case FaceClass::SemiSimple: return "semi-simple";
    case FaceClass::Other: return "other";
  }
  return "?";
}

std::vector<long> gamma_f_labels(const CGraph& cg, const FacialWalk& walk) {
  const int n = walk.size();
  std::vector<long> labels(n);
  long acc = n > 0 ? cg.gamma[cg.map.tail(walk.darts[0])] : 0;
  long total = 0;
  for (int k = 0; k < n; ++k) {
    labels[k] = acc;
    const int s = dart_step(cg, walk.darts[k]);
    acc += s;
    total += s;
  }
  if (total != 0)
    throw Error(Errc::NonZeroHeightFace, "face of height " + std::to_string(total) + " has no lifted labels");
  return labels;
}

FaceInfo classify_face(const CGraph& cg, const FacialWalk& walk) {
  FaceInfo info;
  const int n = walk.size();
  std::vector<int> step(n);
  for (int k = 0; k < n; ++k) {
    step[k] = dart_step(cg, walk.darts[k]);
    info.height += step[k];
  }
  if (info.height % cg.c != 0)
    throw Error(Errc::InternalNonDivisible, "face height " + std::to_string(info.height));
  info.wn = info.height / cg.c;

  // next_nonzero[k]: first index j >= k (cyclically) with step[j] != 0.
  std::vector<int> next_nonzero(n, -1);
  int pending = -1;
  for (int i = 2 * n - 1; i >= 0; --i) {
    const int k = i % n;
    if (step[k] != 0) pending = k;
    if (i < n) next_nonzero[k] = pending;
  }
  if (n == 0 || next_nonzero[0] < 0) {
    info.minima = {0};
    info.maxima = {0};
  } else {
    for (int k = 0; k < n; ++k) {
      const int entry = step[(k + n - 1) % n];
      if (entry == 0) continue;
      const int exit = step[next_nonzero[k]];
      if (entry < 0 && exit > 0) info.minima.push_back(k);
      if (entry > 0 && exit < 0) info.maxima.push_back(k);
    }
  }

  if (info.height == 0) info.gamma_f = gamma_f_labels(cg, walk);

  if (info.minima.size() <= 1) {
    info.cls = FaceClass::Simple;
  } else if (info.height == 0 && info.minima.size() == 2 && info.maxima.size() == 2) {
    const auto& lab = *info.gamma_f;
    const bool equal_min = lab[info.minima[0]] == lab[info.minima[1]];
    const bool equal_max = lab[info.maxima[0]] == lab[info.maxima[1]];
    info.cls = equal_min && equal_max ? FaceClass::SemiSimple : FaceClass::Other;
  } else {
    info.cls = FaceClass::Other;
  }
  return info;
}

std::vector<long> face_heights(const CGraph& cg, const FaceTable& faces) {
  std::vector<long> h(faces.face_slots(), 0);
  for (FaceId f : faces.live_faces()) h[f] = height_of_walk(cg, faces.walk(f).darts);
  return h;
}

namespace {

DartId inter_cluster_dart(const CGraph& cg, const FacialWalk& w) {
  for (DartId d : w.darts)
    if (dart_step(cg, d) != 0) return d;
  return kNoDart;
}

}  // namespace

PoleSelection select_poles(const CGraph& cg, const FaceTable& faces) {
  PoleSelection out;
  const auto heights = face_heights(cg, faces);
  std::vector<FaceId> nonzero;
  for (FaceId f : faces.live_faces())
    if (heights[f] != 0) nonzero.push_back(f);

  if (nonzero.empty()) {
    out.kind = PoleSelection::Kind::AllZero;
    out.reason = "every face has winding number 0";
    return out;
  }
  if (nonzero.size() == 2 && heights[nonzero[0]] == -heights[nonzero[1]] &&
      std::abs(heights[nonzero[0]]) == cg.c) {
    const bool first_positive = heights[nonzero[0]] > 0;
    out.kind = PoleSelection::Kind::Poles;
    out.poles.outer = first_positive ? nonzero[0] : nonzero[1];
    out.poles.outer_prime = first_positive ? nonzero[1] : nonzero[0];
    out.poles.outer_dart = inter_cluster_dart(cg, faces.walk(out.poles.outer));
    out.poles.outer_prime_dart = inter_cluster_dart(cg, faces.walk(out.poles.outer_prime));
    return out;
  }
  out.kind = PoleSelection::Kind::Reject;
  std::string hs;
  for (FaceId f : nonzero) hs += (hs.empty() ? "" : ", ") + std::to_string(heights[f] / cg.c);
  out.reason = "winding obstruction: nonzero face winding numbers {" + hs + "}";
  return out;
}

void validate_cyclic(const CGraph& cg) {
  const int c = cg.c;
  if (c < 3) throw Error(Errc::ClusterCountTooSmall, "need at least 3 clusters, got " + std::to_string(c));
  if (static_cast<int>(cg.gamma.size()) != cg.map.vertex_slots())
    throw Error(Errc::InvalidArgument, "cluster labels do not cover every vertex");
  for (VertexId v = 0; v < cg.map.vertex_slots(); ++v)
    if (cg.map.vertex_alive(v) && (cg.gamma[v] < 0 || cg.gamma[v] >= c))
      throw Error(Errc::InvalidArgument, "vertex " + std::to_string(v) + " has cluster " +
                                             std::to_string(cg.gamma[v]) + " outside [0, c)");
  std::vector<char> covered(c, 0);
  for (EdgeId e = 0; e < cg.map.edge_slots(); ++e) {
    if (!cg.map.edge_alive(e)) continue;
    const Edge& ed = cg.map.endpoints(e);
    const int a = cg.gamma[ed.u], b = cg.gamma[ed.v];
    const int diff = ((b - a) % c + c) % c;
    if (diff == 1) covered[a] = 1;
    else if (diff == c - 1) covered[b] = 1;
    else if (diff != 0)
      throw Error(Errc::NotCyclic, "edge " + std::to_string(e) + " joins clusters " + std::to_string(a) +
                                       " and " + std::to_string(b));
  }
  for (int i = 0; i < c; ++i)
    if (!covered[i])
      throw Error(Errc::MissingInterClusterEdges, "no edge between clusters " + std::to_string(i) + " and " +
                                                      std::to_string((i + 1) % c));
}

}  // namespace cplanar
