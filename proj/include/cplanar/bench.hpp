#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cplanar/decide.hpp"

namespace cplanar {

struct BenchOptions {
  std::vector<int> sizes{1000, 2000, 4000, 8000};
  int c = 4;
  std::uint64_t seed = 1;
  int repeats = 5;
  bool fan = true;  // fan family; sizes below 2c fall back to the random family
};

struct BenchRow {
  int n = 0;
  int c = 0;
  int edges = 0;
  int faces = 0;
  Status status = Status::CPlanar;
  int contractions = 0;
  int subdivisions = 0;
  int added_edges = 0;
  double seconds = 0;  // median over repeats, certificate included
};

struct BenchReport {
  std::vector<BenchRow> rows;
  double slope = 0;  // least squares of log(seconds) on log(n); 0 with fewer than two sizes
};

/// Instance used for size n; deterministic in (n, options).
CGraph bench_instance(int n, const BenchOptions& opt);

BenchReport run_bench(const BenchOptions& opt);

/// Least-squares slope of log(y) against log(x). Pairs with a non-positive value are skipped.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

std::string format_bench(const BenchReport& r);

}  // namespace cplanar
