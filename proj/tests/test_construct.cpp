#include <doctest.h>

#include "cplanar/construct.hpp"
#include "cplanar/generator.hpp"
#include "cplanar/oracle.hpp"
#include "mutate.hpp"
#include "support.hpp"

using namespace cplanar;
using fixtures::error_kind;
using fixtures::pendant;
using fixtures::t3_with_path;

namespace {

NormalizedCGraph normalized(const CGraph& cg) {
  const PoleSelection p = select_poles(cg, trace_faces(cg.map));
  REQUIRE(p.kind == PoleSelection::Kind::Poles);
  NormalizeOutcome o = normalize(cg, p.poles);
  REQUIRE(o.normalized);
  return std::move(*o.normalized);
}

// Runs elimination on a normalized instance and returns its chords.
std::vector<ChordLog> eliminate(NormalizedCGraph& n) {
  const IncidenceGraph g = build_incidence(n, orient(n.cg));
  const auto m = perfect_matching(g);
  REQUIRE(m);
  return eliminate_extremes(n, g, *m);
}

// A working instance made of a bare map, without poles.
NormalizedCGraph bare(const CGraph& cg) { return NormalizedCGraph{cg, Poles{}, trace_faces(cg.map), {}}; }

std::set<VertexId> ends(const CombMap& m, EdgeId e) { return {m.endpoints(e).u, m.endpoints(e).v}; }

}  // namespace

TEST_SUITE("construct") {

TEST_CASE("elimination") {
  SUBCASE("nothing to do on T3") {
    NormalizedCGraph n = normalized(fixtures::t3());
    const auto before = n.cg.map.rotations();
    CHECK(eliminate(n).empty());
    CHECK(n.cg.map.rotations() == before);
  }
  SUBCASE("square face closes with chords between equal extremes") {
    // Square 0 1 x y with source x (cluster 0) and sink y (cluster 1).
    NormalizedCGraph n = normalized(t3_with_path(1, 0, {0, 1}));
    const auto chords = eliminate(n);
    REQUIRE(chords.size() == 2);
    for (const ChordLog& c : chords) {
      const Edge& e = n.cg.map.endpoints(c.edge);
      CHECK(n.cg.gamma[e.u] == n.cg.gamma[e.v]);
      CHECK(e.u != e.v);
    }
    // The source is x = 3, paired with vertex 0; the sink y = 4 with vertex 1.
    std::set<std::set<VertexId>> got;
    for (const ChordLog& c : chords) got.insert(ends(n.cg.map, c.edge));
    CHECK(got == std::set<std::set<VertexId>>{{0, 3}, {1, 4}});
    CHECK_NOTHROW(assert_no_sinks_sources(n, chords));
    CHECK_NOTHROW(assert_cluster_forest(n.cg));
  }
  SUBCASE("source matched to a pole splits it") {
    CGraph cg = fixtures::t3();
    const VertexId s = pendant(cg, 0, 2);
    NormalizedCGraph n = normalized(cg);
    const auto chords = eliminate(n);
    REQUIRE(chords.size() == 1);
    CHECK(ends(n.cg.map, chords[0].edge) == std::set<VertexId>{2, s});
    const std::vector<long> h = face_heights(n.cg, n.faces);
    int nonzero = 0;
    for (FaceId f : n.faces.live_faces()) nonzero += h[f] != 0;
    CHECK(nonzero == 2);
    CHECK(h[n.poles.outer] == 3);
    CHECK(h[n.poles.outer_prime] == -3);
  }
}

TEST_CASE("candidate chords") {
  SUBCASE("(0,1,2,3,2,1) gives two nested chords per side") {
    const NormalizedCGraph n = bare(fixtures::zero_hexagon());
    const auto c = chord_candidates(n);
    REQUIRE(c.size() == 4);
    std::set<std::set<VertexId>> pairs;
    for (const Candidate& x : c) {
      const FacialWalk& w = n.faces.walk(x.face);
      pairs.insert({n.cg.map.tail(w.corner(x.occ_a)), n.cg.map.tail(w.corner(x.occ_b))});
    }
    CHECK(pairs == std::set<std::set<VertexId>>{{1, 5}, {2, 4}});
  }
  SUBCASE("triangle (0,1,0) has no interior level") {
    CHECK(chord_candidates(bare(fixtures::cycle({0, 1, 0}, 3))).empty());
  }
  SUBCASE("poles contribute nothing") {
    NormalizedCGraph n = bare(fixtures::zero_hexagon());
    const auto live = n.faces.live_faces();
    n.poles.outer = live[0];
    n.poles.outer_prime = live[1];
    CHECK(chord_candidates(n).empty());
  }
}

TEST_CASE("maximal forest") {
  const NormalizedCGraph n = bare(fixtures::zero_hexagon());
  const auto all = chord_candidates(n);
  SUBCASE("repeated pairs keep the first") {
    const auto kept = maximal_forest(n, all);
    REQUIRE(kept.size() == 2);
    CHECK(kept[0].face == all[0].face);
    CHECK(kept[1].face == all[1].face);
  }
  SUBCASE("distinct pairs are all kept") {
    const std::vector<Candidate> one_face(all.begin(), all.begin() + 2);
    CHECK(maximal_forest(n, one_face).size() == 2);
  }
  SUBCASE("existing intra-cluster edges are respected") {
    CGraph cg = fixtures::zero_hexagon();
    const FaceTable f = trace_faces(cg.map);
    const FaceId face = f.face_of(1);
    const FacialWalk& w = f.walk(face);
    insert_chord(cg.map, f, face, fixtures::occurrence_of(cg.map, w, 1), fixtures::occurrence_of(cg.map, w, 5));
    const NormalizedCGraph m = bare(cg);
    const auto kept = maximal_forest(m, chord_candidates(m));
    REQUIRE(kept.size() == 1);
    const FacialWalk& kw = m.faces.walk(kept[0].face);
    CHECK(std::set<VertexId>{m.cg.map.tail(kw.corner(kept[0].occ_a)), m.cg.map.tail(kw.corner(kept[0].occ_b))} ==
          std::set<VertexId>{2, 4});
  }
  SUBCASE("a cluster cycle is an invariant violation") {
    CGraph cg = fixtures::cycle({0, 0, 0}, 3);
    CHECK(error_kind([&] { maximal_forest(bare(cg), {}); }) == Errc::InternalInvariantViolation);
  }
}

TEST_CASE("certificates") {
  SUBCASE("T3 needs nothing") {
    const CGraph cg = fixtures::t3();
    const Verdict v = decide(cg);
    REQUIRE(v.certificate);
    CHECK(v.certificate->added.empty());
    REQUIRE(v.certificate->cluster_trees.size() == 3);
    for (const auto& t : v.certificate->cluster_trees) CHECK(t.empty());
    CHECK(verify_certificate(cg, *v.certificate).ok);
  }
  SUBCASE("two cluster-0 vertices on a common face get one edge") {
    const CGraph cg = t3_with_path(1, 2, {0});
    CHECK(oracle_decide(cg).status == OracleStatus::CPlanar);
    const Verdict v = decide(cg);
    REQUIRE(v.certificate);
    REQUIRE(v.certificate->added.size() == 1);
    CHECK(v.certificate->added[0].cluster == 0);
    CHECK(std::set<VertexId>{v.certificate->added[0].u, v.certificate->added[0].v} == std::set<VertexId>{0, 3});
    CHECK(verify_certificate(cg, *v.certificate).ok);
  }
  SUBCASE("generated instances verify and reject mutations") {
    int with_edges = 0;
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      GenOptions o;
      o.n = 9;
      o.seed = seed;
      const CGraph cg = generate(o);
      const Verdict v = decide(cg);
      if (!v.certificate) continue;
      CHECK(verify_certificate(cg, *v.certificate).ok);
      const json j = certificate_to_json(cg, v);
      CHECK(mutate::accepted(cg, j));
      for (std::size_t i = 0; i < v.certificate->added.size(); ++i)
        CHECK(!mutate::accepted(cg, mutate::delete_added_edge(j, i)));
      for (int x = 0; x < static_cast<int>(j["rotations"].size()); ++x)
        if (j["rotations"][x].size() >= 3) {
          const json m = mutate::transpose_rotation(j, x, 0);
          CHECK(mutate::accepted(cg, m) == mutate::equivalent(cg, m));
        }
      with_edges += !v.certificate->added.empty();
    }
    CHECK(with_edges > 5);
  }
}

TEST_CASE("verifier checks") {
  const CGraph cg = t3_with_path(1, 2, {0});
  const Certificate good = *decide(cg).certificate;
  SUBCASE("inter-cluster additions are refused") {
    Certificate bad = good;
    bad.augmented.gamma[3] = 1;
    CHECK(!verify_certificate(cg, bad).ok);
  }
  SUBCASE("labels must match") {
    CHECK(verify_certificate(cg, good).ok);
    Certificate relabeled = good;
    relabeled.augmented.gamma[1] = 2;
    CHECK(!verify_certificate(cg, relabeled).ok);
  }
  SUBCASE("the bare input is not a certificate") {
    Certificate bare_input;
    bare_input.augmented = cg;
    bare_input.input_vertex_count = cg.map.vertex_slots();
    bare_input.input_edge_count = cg.map.edge_slots();
    bare_input.cluster_trees = cluster_spanning_trees(cg, cg.map.edge_slots());
    const VerifyReport r = verify_certificate(cg, bare_input);
    CHECK(!r.ok);
    CHECK(!r.failures.empty());
  }
}

}  // TEST_SUITE
