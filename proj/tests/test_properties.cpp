#include <doctest.h>

#include "properties.hpp"

namespace {

constexpr long kChecks = 10000;

}  // namespace

TEST_SUITE("properties") {

TEST_CASE("face heights sum to zero and match the reference step") {
  const props::Tally t = props::face_sums(kChecks);
  CHECK(t.checks >= kChecks);
  CHECK(t.failures == 0);
}

TEST_CASE("closed walks have height divisible by c") {
  const props::Tally t = props::closed_walks(kChecks);
  CHECK(t.checks >= kChecks);
  CHECK(t.failures == 0);
}

TEST_CASE("height is additive under concatenation") {
  const props::Tally t = props::additivity(kChecks);
  CHECK(t.checks >= kChecks);
  CHECK(t.failures == 0);
}

TEST_CASE("intra-cluster contraction preserves face heights") {
  const props::Tally t = props::contraction(kChecks);
  CHECK(t.checks >= kChecks);
  CHECK(t.failures == 0);
}

}  // TEST_SUITE
