#include "cplanar/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <regex>

namespace cplanar {

namespace {

constexpr double kTau = 2 * std::numbers::pi;
constexpr double kScale = 300;     // pixels per layout unit
constexpr double kControl = 0.15;  // curve control arm, layout units
constexpr double kLeaf = 0.12;

struct Solver {
  const CombMap& map;
  Layout& out;
  std::vector<char> pinned;

  void relax(const std::vector<VertexId>& verts) {
    std::vector<std::vector<VertexId>> nbr(verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i)
      for (DartId d : map.rotation(verts[i]))
        if (map.head(d) != verts[i]) nbr[i].push_back(map.head(d));
    const int sweeps = 4000;
    for (int it = 0; it < sweeps; ++it) {
      double moved = 0;
      for (std::size_t i = 0; i < verts.size(); ++i) {
        const VertexId v = verts[i];
        if (pinned[v] || nbr[i].empty()) continue;
        double sx = 0, sy = 0;
        for (VertexId w : nbr[i]) {
          sx += out.x[w];
          sy += out.y[w];
        }
        const double k = static_cast<double>(nbr[i].size());
        sx /= k;
        sy /= k;
        moved = std::max(moved, std::abs(sx - out.x[v]) + std::abs(sy - out.y[v]));
        out.x[v] = sx;
        out.y[v] = sy;
      }
      if (moved < 1e-9) break;
    }
  }

  // Evenly spaced angles in rotation order, turned to fit the actual neighbor directions.
  // Returns how well they fit, summed over darts.
  double assign_angles(const std::vector<VertexId>& verts) {
    double fit = 0;
    for (VertexId v : verts) {
      const std::vector<DartId> rot = map.rotation(v);
      const int k = static_cast<int>(rot.size());
      double cx = 0, cy = 0;
      std::vector<double> actual(k, NAN);
      for (int i = 0; i < k; ++i) {
        const VertexId w = map.head(rot[i]);
        const double dx = out.x[w] - out.x[v], dy = out.y[w] - out.y[v];
        if (w == v || std::hypot(dx, dy) < 1e-12) continue;
        actual[i] = std::atan2(dy, dx);
        const double off = actual[i] - kTau * i / k;
        cx += std::cos(off);
        cy += std::sin(off);
      }
      const double base = (cx == 0 && cy == 0) ? 0 : std::atan2(cy, cx);
      for (int i = 0; i < k; ++i) {
        out.angle[rot[i]] = base + kTau * i / k;
        if (!std::isnan(actual[i])) fit += std::cos(actual[i] - out.angle[rot[i]]);
      }
    }
    return fit;
  }

  // Degree-one vertices sit on their neighbor after relaxation; move them out along the dart.
  void place_leaves(const std::vector<VertexId>& verts) {
    for (VertexId v : verts) {
      if (pinned[v] || map.degree(v) != 1) continue;
      const DartId d = map.first_dart(v);
      const VertexId p = map.head(d);
      if (p == v) continue;
      const double a = out.angle[twin(d)];
      out.x[v] = out.x[p] + kLeaf * std::cos(a);
      out.y[v] = out.y[p] + kLeaf * std::sin(a);
      out.angle[d] = a + std::numbers::pi;
    }
  }
};

std::string color(int k, int c) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "hsl(%d,70%%,45%%)", c > 0 ? 360 * k / c : 0);
  return buf;
}

void append(std::string& s, const char* fmt, auto... args) {
  char buf[512];
  const int len = std::snprintf(buf, sizeof buf, fmt, args...);
  s.append(buf, std::min<int>(len, sizeof buf - 1));
}

}  // namespace

Layout layout_map(const CGraph& cg) {
  const CombMap& map = cg.map;
  Layout out;
  out.x.assign(map.vertex_slots(), 0);
  out.y.assign(map.vertex_slots(), 0);
  out.angle.assign(map.dart_slots(), 0);
  const auto [comp, count] = map.components();
  std::vector<std::vector<VertexId>> verts(count);
  for (VertexId v = 0; v < map.vertex_slots(); ++v)
    if (comp[v] >= 0) verts[comp[v]].push_back(v);

  const FaceTable faces = FaceTable::trace(map);
  std::vector<FaceId> largest(count, -1);
  for (FaceId f : faces.live_faces()) {
    const int k = comp[map.tail(faces.walk(f).darts.front())];
    if (largest[k] < 0 || faces.walk(f).size() > faces.walk(largest[k]).size()) largest[k] = f;
  }

  Solver solver{map, out, std::vector<char>(map.vertex_slots(), 0)};
  for (int k = 0; k < count; ++k) {
    const double cx = 2.6 * k;
    if (largest[k] < 0) {
      for (VertexId v : verts[k]) out.x[v] = cx;
      continue;
    }
    std::vector<VertexId> ring;
    for (DartId d : faces.walk(largest[k]).darts)
      if (std::find(ring.begin(), ring.end(), map.tail(d)) == ring.end()) ring.push_back(map.tail(d));
    for (VertexId v : ring) solver.pinned[v] = 1;

    // Try both orientations of the pinned ring and keep the one the rotations agree with.
    double best = -1e300;
    Layout keep;
    for (int sense : {1, -1}) {
      const int r = static_cast<int>(ring.size());
      for (int i = 0; i < r; ++i) {
        out.x[ring[i]] = cx + std::cos(sense * kTau * i / r);
        out.y[ring[i]] = std::sin(sense * kTau * i / r);
      }
      for (VertexId v : verts[k])
        if (!solver.pinned[v]) out.x[v] = cx, out.y[v] = 0;
      solver.relax(verts[k]);
      const double fit = solver.assign_angles(verts[k]);
      if (fit > best) {
        best = fit;
        keep = out;
      }
    }
    out = std::move(keep);
    solver.place_leaves(verts[k]);
  }
  return out;
}

std::string render_svg(const CGraph& cg, const std::vector<std::vector<EdgeId>>& cluster_trees) {
  const CombMap& map = cg.map;
  const Layout lay = layout_map(cg);
  double lo_x = 0, hi_x = 0, lo_y = 0, hi_y = 0;
  for (VertexId v = 0; v < map.vertex_slots(); ++v) {
    if (!map.vertex_alive(v)) continue;
    lo_x = std::min(lo_x, lay.x[v]);
    hi_x = std::max(hi_x, lay.x[v]);
    lo_y = std::min(lo_y, lay.y[v]);
    hi_y = std::max(hi_y, lay.y[v]);
  }
  const double margin = 0.4;
  lo_x -= margin, hi_x += margin, lo_y -= margin, hi_y += margin;
  auto X = [](double x) { return kScale * x; };
  auto Y = [](double y) { return -kScale * y; };

  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  append(s, "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"%.3f %.3f %.3f %.3f\">\n", X(lo_x),
         Y(hi_y), X(hi_x - lo_x), X(hi_y - lo_y));

  // Wedges around the center of the drawing, one per cluster.
  const double ox = (lo_x + hi_x) / 2, oy = (lo_y + hi_y) / 2;
  const double reach = std::hypot(hi_x - lo_x, hi_y - lo_y);
  s += "<g id=\"wedges\">\n";
  for (int k = 0; k < cg.c; ++k) {
    const double a0 = kTau * k / cg.c, a1 = kTau * (k + 1) / cg.c;
    if (cg.c == 1) {
      append(s, "<circle class=\"wedge\" data-cluster=\"0\" fill=\"%s\" fill-opacity=\"0.08\" cx=\"%.3f\" cy=\"%.3f\" r=\"%.3f\"/>\n",
             color(0, 1).c_str(), X(ox), Y(oy), X(reach));
      continue;
    }
    append(s,
           "<path class=\"wedge\" data-cluster=\"%d\" fill=\"%s\" fill-opacity=\"0.08\" stroke=\"none\" "
           "d=\"M %.3f %.3f L %.3f %.3f A %.3f %.3f 0 %d 0 %.3f %.3f Z\"/>\n",
           k, color(k, cg.c).c_str(), X(ox), Y(oy), X(ox + reach * std::cos(a0)), Y(oy + reach * std::sin(a0)),
           X(reach), X(reach), a1 - a0 > std::numbers::pi ? 1 : 0, X(ox + reach * std::cos(a1)),
           Y(oy + reach * std::sin(a1)));
    append(s, "<line class=\"ray\" stroke=\"#888\" stroke-dasharray=\"6 4\" x1=\"%.3f\" y1=\"%.3f\" x2=\"%.3f\" y2=\"%.3f\"/>\n",
           X(ox), Y(oy), X(ox + reach * std::cos(a0)), Y(oy + reach * std::sin(a0)));
  }
  s += "</g>\n";

  auto curve = [&](EdgeId e) {
    const Edge& ed = map.endpoints(e);
    const double a = lay.angle[dart_of(e, 0)], b = lay.angle[dart_of(e, 1)];
    char buf[256];
    std::snprintf(buf, sizeof buf, "M %.3f %.3f C %.3f %.3f %.3f %.3f %.3f %.3f", X(lay.x[ed.u]), Y(lay.y[ed.u]),
                  X(lay.x[ed.u] + kControl * std::cos(a)), Y(lay.y[ed.u] + kControl * std::sin(a)),
                  X(lay.x[ed.v] + kControl * std::cos(b)), Y(lay.y[ed.v] + kControl * std::sin(b)), X(lay.x[ed.v]),
                  Y(lay.y[ed.v]));
    return std::string(buf);
  };

  s += "<g id=\"cluster-trees\" fill=\"none\" stroke-linecap=\"round\" stroke-opacity=\"0.35\" stroke-width=\"14\">\n";
  for (std::size_t k = 0; k < cluster_trees.size(); ++k)
    for (EdgeId e : cluster_trees[k]) {
      if (e < 0 || e >= map.edge_slots() || !map.edge_alive(e)) continue;
      const int g = cg.gamma[map.endpoints(e).u];
      append(s, "<path class=\"tree\" data-edge=\"%d\" stroke=\"%s\" d=\"%s\"/>\n", e, color(g, cg.c).c_str(),
             curve(e).c_str());
    }
  s += "</g>\n";

  s += "<g id=\"edges\" fill=\"none\" stroke=\"#222\" stroke-width=\"1.5\">\n";
  for (EdgeId e = 0; e < map.edge_slots(); ++e) {
    if (!map.edge_alive(e)) continue;
    append(s, "<path class=\"edge\" data-edge=\"%d\" data-u=\"%d\" data-v=\"%d\" d=\"%s\"/>\n", e,
           map.endpoints(e).u, map.endpoints(e).v, curve(e).c_str());
  }
  s += "</g>\n";

  s += "<g id=\"vertices\" font-family=\"sans-serif\" font-size=\"10\" text-anchor=\"middle\">\n";
  for (VertexId v = 0; v < map.vertex_slots(); ++v) {
    if (!map.vertex_alive(v)) continue;
    append(s, "<circle class=\"vertex\" data-vertex=\"%d\" data-cluster=\"%d\" cx=\"%.3f\" cy=\"%.3f\" r=\"5\" fill=\"%s\"/>\n",
           v, cg.gamma[v], X(lay.x[v]), Y(lay.y[v]), color(cg.gamma[v], cg.c).c_str());
    append(s, "<text x=\"%.3f\" y=\"%.3f\">%d</text>\n", X(lay.x[v]), Y(lay.y[v]) - 8, v);
  }
  s += "</g>\n</svg>\n";
  return s;
}

std::string render_svg(const Certificate& cert) { return render_svg(cert.augmented, cert.cluster_trees); }

std::vector<std::vector<DartId>> extract_rotations(const std::string& svg, int vertex_count) {
  static const std::regex edge_re(
      R"re(<path class="edge" data-edge="(\d+)" data-u="(\d+)" data-v="(\d+)" d="M (\S+) (\S+) C (\S+) (\S+) (\S+) (\S+) (\S+) (\S+)"/>)re");
  std::vector<std::vector<std::pair<double, DartId>>> at(vertex_count);
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), edge_re); it != std::sregex_iterator(); ++it) {
    const std::smatch& m = *it;
    const int e = std::stoi(m[1]), u = std::stoi(m[2]), v = std::stoi(m[3]);
    double p[8];
    for (int i = 0; i < 8; ++i) p[i] = std::stod(m[4 + i]);
    if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count)
      throw Error(Errc::ParseError, "edge " + std::to_string(e) + " names a vertex out of range");
    // Screen y points down; flip back to math orientation.
    at[u].push_back({std::atan2(-(p[3] - p[1]), p[2] - p[0]), dart_of(e, 0)});
    at[v].push_back({std::atan2(-(p[5] - p[7]), p[4] - p[6]), dart_of(e, 1)});
  }
  std::vector<std::vector<DartId>> out(vertex_count);
  for (int v = 0; v < vertex_count; ++v) {
    std::sort(at[v].begin(), at[v].end());
    for (const auto& [a, d] : at[v]) out[v].push_back(d);
  }
  return out;
}

bool rotations_match(const CombMap& map, const std::vector<std::vector<DartId>>& extracted) {
  if (static_cast<int>(extracted.size()) != map.vertex_slots()) return false;
  for (VertexId v = 0; v < map.vertex_slots(); ++v) {
    std::vector<DartId> want = map.vertex_alive(v) ? map.rotation(v) : std::vector<DartId>{};
    std::vector<DartId> got = extracted[v];
    if (want.size() != got.size()) return false;
    if (want.empty()) continue;
    std::rotate(got.begin(), std::find(got.begin(), got.end(), want.front()), got.end());
    if (got != want) return false;
  }
  return true;
}

}  // namespace cplanar
