#include <doctest.h>

#include "cplanar/oracle.hpp"
#include "cplanar/union_find.hpp"
#include "support.hpp"

using namespace cplanar;

namespace {

// Brute force over chord sets of a cycle: chords on one side must not interleave.
bool cycle_cplanar(const std::vector<int>& w) {
  const int n = static_cast<int>(w.size());
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 2; j < n; ++j)
      if (w[i] == w[j] && !(i == 0 && j == n - 1)) pairs.push_back({i, j});
  const int p = static_cast<int>(pairs.size());
  auto crossing_free = [&](unsigned mask) {
    for (int a = 0; a < p; ++a)
      for (int b = a + 1; b < p; ++b)
        if ((mask >> a & 1) && (mask >> b & 1) &&
            chords_interleave(pairs[a].first, pairs[a].second, pairs[b].first, pairs[b].second))
          return false;
    return true;
  };
  for (unsigned in = 0; in < (1u << p); ++in) {
    if (!crossing_free(in)) continue;
    for (unsigned out = 0; out < (1u << p); ++out) {
      if (!crossing_free(out)) continue;
      UnionFind uf(n);
      for (int i = 0; i < n; ++i)
        if (w[i] == w[(i + 1) % n]) uf.unite(i, (i + 1) % n);
      for (int a = 0; a < p; ++a)
        if (((in | out) >> a) & 1) uf.unite(pairs[a].first, pairs[a].second);
      bool connected = true;
      for (int i = 0; i < n && connected; ++i)
        for (int j = 0; j < n && connected; ++j)
          if (w[i] == w[j] && !uf.same(i, j)) connected = false;
      if (connected) return true;
    }
  }
  return false;
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("named instances") {
  const OracleResult t3 = oracle_decide(fixtures::t3());
  CHECK(t3.status == OracleStatus::CPlanar);
  CHECK(t3.witness.empty());
  CHECK(oracle_decide(fixtures::double_hexagon()).status == OracleStatus::NotCPlanar);
}

TEST_CASE("limits") {
  CHECK(oracle_decide(fixtures::double_hexagon(), {.max_vertices = 5}).status == OracleStatus::LimitExceeded);
  const CGraph cg = fixtures::cycle({0, 1, 2, 0, 1, 2, 0, 1, 2}, 3);
  CHECK(oracle_decide(cg, {.max_vertices = 14, .max_nodes = 1}).status == OracleStatus::LimitExceeded);
}

TEST_CASE("agrees with chord enumeration on short cycles") {
  int yes = 0, no = 0;
  for (int n = 3; n <= 7; ++n)
    for (const auto& w : fixtures::cyclic_words(n, 3)) {
      const CGraph cg = fixtures::cycle(w, 3);
      const OracleResult r = oracle_decide(cg);
      REQUIRE(r.status != OracleStatus::LimitExceeded);
      const bool want = cycle_cplanar(w);
      CHECK_MESSAGE((r.status == OracleStatus::CPlanar) == want, "cycle of length ", n);
      (want ? yes : no) += 1;
      if (r.certificate) CHECK(verify_certificate(cg, *r.certificate).ok);
    }
  CHECK(yes > 0);
  CHECK(no > 0);
}

TEST_CASE("witnesses verify") {
  const CGraph cg = fixtures::t3_with_path(1, 2, {0});
  const OracleResult r = oracle_decide(cg);
  REQUIRE(r.status == OracleStatus::CPlanar);
  CHECK(r.witness.size() == 1);
  const Certificate cert = witness_certificate(cg, r.witness);
  CHECK(verify_certificate(cg, cert).ok);
}

TEST_CASE("dead slots are compacted first") {
  CGraph cg = fixtures::t3();
  fixtures::pendant(cg, 0, 0);
  contract_edge(cg.map, 3);
  const CGraph dense = compact_instance(cg);
  CHECK(dense.map.vertex_slots() == 3);
  CHECK(dense.map.edge_slots() == 3);
  CHECK(oracle_decide(cg).status == OracleStatus::CPlanar);
}

}  // TEST_SUITE
