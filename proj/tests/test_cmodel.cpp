#include <doctest.h>

#include <numeric>

#include "support.hpp"

using namespace cplanar;
using fixtures::error_kind;
using fixtures::walk_from_dart0;

TEST_SUITE("cmodel") {

TEST_CASE("step function") {
  CHECK(g_step(3, 0) == 0);
  CHECK(g_step(3, -2) == 1);
  CHECK(g_step(3, 2) == -1);
  CHECK(g_step(3, 1) == 1);
  CHECK(g_step(3, -1) == -1);
  CHECK(g_step(5, 4) == -1);
  CHECK(g_step(5, -4) == 1);
  CHECK(error_kind([] { g_step(5, 2); }) == Errc::IllegalDelta);
  CHECK(error_kind([] { g_step(2, 1); }) == Errc::ClusterCountTooSmall);
  for (int c = 3; c <= 9; ++c)
    for (int a = 0; a < c; ++a)
      for (int b = 0; b < c; ++b) {
        const int want = fixtures::ref_step(c, a, b);
        if (want == 99) continue;
        CHECK(g_step(c, b - a) == want);
      }
}

TEST_CASE("heights and winding numbers of cycles") {
  const CGraph t3 = fixtures::t3();
  const FacialWalk w = walk_from_dart0(t3);
  CHECK(height_of_walk(t3, w.darts) == 3);
  CHECK(winding_number(t3, w.darts) == 1);

  const CGraph dh = fixtures::double_hexagon();
  const FacialWalk w2 = walk_from_dart0(dh);
  CHECK(height_of_walk(dh, w2.darts) == 6);
  CHECK(winding_number(dh, w2.darts) == 2);

  const CGraph flat = fixtures::cycle({1, 1, 1, 1}, 3);
  const FacialWalk w3 = walk_from_dart0(flat);
  CHECK(height_of_walk(flat, w3.darts) == 0);
  CHECK(winding_number(flat, w3.darts) == 0);

  const std::vector<DartId> open{0, 2};
  CHECK(error_kind([&] { height_of_walk(t3, open); }) == Errc::NotClosed);
}

TEST_CASE("pole selection") {
  SUBCASE("T3 has poles of height +3 and -3") {
    const CGraph cg = fixtures::t3();
    const FaceTable f = trace_faces(cg.map);
    std::vector<long> h = face_heights(cg, f);
    std::vector<long> live;
    for (FaceId x : f.live_faces()) live.push_back(h[x]);
    std::sort(live.begin(), live.end());
    CHECK(live == std::vector<long>{-3, 3});
    const PoleSelection p = select_poles(cg, f);
    REQUIRE(p.kind == PoleSelection::Kind::Poles);
    CHECK(h[p.poles.outer] == 3);
    CHECK(h[p.poles.outer_prime] == -3);
  }
  SUBCASE("zero hexagon has no winding") {
    const CGraph cg = fixtures::zero_hexagon();
    const FaceTable f = trace_faces(cg.map);
    for (FaceId x : f.live_faces()) CHECK(face_heights(cg, f)[x] == 0);
    CHECK(select_poles(cg, f).kind == PoleSelection::Kind::AllZero);
  }
  SUBCASE("double hexagon winds twice") {
    const CGraph cg = fixtures::double_hexagon();
    const FaceTable f = trace_faces(cg.map);
    CHECK(select_poles(cg, f).kind == PoleSelection::Kind::Reject);
  }
}

TEST_CASE("lifted labels") {
  SUBCASE("(0,1,2,0,2,1)") {
    const CGraph cg = fixtures::zero_hexagon();
    CHECK(gamma_f_labels(cg, walk_from_dart0(cg)) == std::vector<long>{0, 1, 2, 3, 2, 1});
  }
  SUBCASE("(0,1,0,1)") {
    const CGraph cg = fixtures::cycle({0, 1, 0, 1}, 3);
    CHECK(gamma_f_labels(cg, walk_from_dart0(cg)) == std::vector<long>{0, 1, 0, 1});
  }
  SUBCASE("single cluster edge") {
    const CGraph cg = fixtures::make(3, {2, 2}, {{0, 1}}, {{0}, {1}});
    CHECK(gamma_f_labels(cg, trace_faces(cg.map).walk(0)) == std::vector<long>{2, 2});
  }
  SUBCASE("nonzero height is refused") {
    const CGraph cg = fixtures::t3();
    CHECK(error_kind([&] { gamma_f_labels(cg, walk_from_dart0(cg)); }) == Errc::NonZeroHeightFace);
  }
  SUBCASE("labels agree with clusters modulo c") {
    const CGraph cg = fixtures::cycle({0, 1, 2, 1, 2, 0, 2, 1}, 3);
    const FacialWalk w = walk_from_dart0(cg);
    const std::vector<long> l = gamma_f_labels(cg, w);
    for (int k = 0; k < w.size(); ++k) CHECK(((l[k] % 3) + 3) % 3 == cg.gamma[cg.map.tail(w.corner(k))]);
  }
}

TEST_CASE("face classes") {
  SUBCASE("(0,1,2,3,2,1) is simple") {
    const CGraph cg = fixtures::zero_hexagon();
    const FaceInfo i = classify_face(cg, walk_from_dart0(cg));
    CHECK(i.cls == FaceClass::Simple);
    CHECK(i.minima.size() == 1);
    CHECK(i.maxima.size() == 1);
  }
  SUBCASE("(0,1,0,1) is semi-simple") {
    const CGraph cg = fixtures::cycle({0, 1, 0, 1}, 3);
    const FaceInfo i = classify_face(cg, walk_from_dart0(cg));
    CHECK(i.cls == FaceClass::SemiSimple);
    CHECK(i.minima == std::vector<int>{0, 2});
    CHECK(i.maxima == std::vector<int>{1, 3});
  }
  SUBCASE("(0,1,2,1,2,3,2,1) is other") {
    const CGraph cg = fixtures::cycle({0, 1, 2, 1, 2, 0, 2, 1}, 3);
    const FaceInfo i = classify_face(cg, walk_from_dart0(cg));
    CHECK(i.cls == FaceClass::Other);
    CHECK(i.minima.size() == 2);
  }
  SUBCASE("T3 faces are simple without extremes") {
    const CGraph cg = fixtures::t3();
    const FaceTable f = trace_faces(cg.map);
    for (FaceId x : f.live_faces()) {
      const FaceInfo i = classify_face(cg, f.walk(x));
      CHECK(i.cls == FaceClass::Simple);
      CHECK(i.minima.empty());
      CHECK(std::abs(i.wn) == 1);
    }
  }
  SUBCASE("plateaus count once") {
    const CGraph cg = fixtures::cycle({0, 0, 1, 1}, 3);
    const FaceInfo i = classify_face(cg, walk_from_dart0(cg));
    CHECK(i.minima.size() == 1);
    CHECK(i.maxima.size() == 1);
    CHECK(i.cls == FaceClass::Simple);
  }
}

TEST_CASE("cyclic validation") {
  CHECK_NOTHROW(validate_cyclic(fixtures::t3()));
  CHECK_NOTHROW(validate_cyclic(fixtures::cycle({0, 2, 1}, 3)));
  CHECK(error_kind([] { validate_cyclic(fixtures::cycle({0, 1, 2, 1}, 3)); }) == Errc::MissingInterClusterEdges);
  CHECK(error_kind([] { validate_cyclic(fixtures::cycle({0, 1, 2, 3, 1}, 4)); }) == Errc::NotCyclic);
  CHECK(error_kind([] { validate_cyclic(fixtures::cycle({0, 1, 0}, 2)); }) == Errc::ClusterCountTooSmall);
}

}  // TEST_SUITE
