#include "cplanar/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>

#include "cplanar/generator.hpp"

namespace cplanar {

CGraph bench_instance(int n, const BenchOptions& opt) {
  GenOptions g;
  g.n = n;
  g.seed = opt.seed;
  if (opt.fan && n >= 2 * opt.c) {
    g.c = opt.c;
    return generate_fan(g);
  }
  g.c = std::clamp(opt.c, 3, std::max(n, 3));
  return generate(g);
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  std::vector<std::pair<double, double>> pts;
  for (std::size_t i = 0; i < std::min(x.size(), y.size()); ++i)
    if (x[i] > 0 && y[i] > 0) pts.push_back({std::log(x[i]), std::log(y[i])});
  if (pts.size() < 2) return 0;
  double mx = 0, my = 0;
  for (auto [a, b] : pts) mx += a, my += b;
  mx /= pts.size();
  my /= pts.size();
  double sxy = 0, sxx = 0;
  for (auto [a, b] : pts) {
    sxy += (a - mx) * (b - my);
    sxx += (a - mx) * (a - mx);
  }
  return sxx > 0 ? sxy / sxx : 0;
}

BenchReport run_bench(const BenchOptions& opt) {
  BenchReport rep;
  std::vector<double> xs, ys;
  for (int n : opt.sizes) {
    const CGraph cg = bench_instance(n, opt);
    BenchRow row;
    row.n = cg.map.live_vertex_count();
    row.c = cg.c;
    row.edges = cg.map.live_edge_count();
    row.faces = cg.map.face_count();
    std::vector<double> times;
    for (int r = 0; r < std::max(opt.repeats, 1); ++r) {
      const auto t0 = std::chrono::steady_clock::now();
      const Verdict v = decide(cg);
      times.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
      if (r == 0) {
        row.status = v.status;
        for (const ComponentVerdict& cv : v.components) {
          row.contractions += cv.stats.contractions;
          row.subdivisions += cv.stats.subdivisions;
        }
        row.added_edges = v.certificate ? static_cast<int>(v.certificate->added.size()) : 0;
      }
    }
    std::nth_element(times.begin(), times.begin() + times.size() / 2, times.end());
    row.seconds = times[times.size() / 2];
    xs.push_back(row.n);
    ys.push_back(row.seconds);
    rep.rows.push_back(row);
  }
  rep.slope = loglog_slope(xs, ys);
  return rep;
}

std::string format_bench(const BenchReport& r) {
  std::string s = "       n   c   edges   faces  verdict      contr   subdiv   added     seconds\n";
  char buf[160];
  for (const BenchRow& row : r.rows) {
    std::snprintf(buf, sizeof buf, "%8d %3d %7d %7d  %-11s %6d %8d %7d %11.6f\n", row.n, row.c, row.edges, row.faces,
                  status_name(row.status), row.contractions, row.subdivisions, row.added_edges, row.seconds);
    s += buf;
  }
  std::snprintf(buf, sizeof buf, "log-log slope %.3f\n", r.slope);
  s += buf;
  return s;
}

}  // namespace cplanar
