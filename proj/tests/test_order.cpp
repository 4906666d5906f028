#include <doctest.h>

#include <random>

#include "monobar/error.hpp"
#include "monobar/grassmann.hpp"
#include "monobar/order.hpp"
#include "oracles.hpp"

using namespace monobar;

namespace {

SetSystem system(std::size_t n, std::vector<std::vector<std::size_t>> rs) {
  std::vector<PointMask> masks;
  for (const auto& r : rs) masks.push_back(mask_of(r));
  return SetSystem(n, masks);
}

const SetSystem kTriangle = system(3, {{1, 2}, {1, 3}, {2, 3}});
const SetSystem kOnePoint = system(1, {{1}});

} // namespace

TEST_CASE("basic points") {
  const auto b = find_basic_points(system(3, {{1, 2}, {2, 3}}));
  REQUIRE(b.size() == 2);
  CHECK(b[0] == BasicPoint{1, 0b011});
  CHECK(b[1] == BasicPoint{3, 0b110});
  CHECK(find_basic_points(kTriangle).empty());
  CHECK(find_basic_points(kOnePoint) == std::vector<BasicPoint>{{1, 1}});
}

TEST_CASE("contraction under the fresh-point rule") {
  const auto rule = ContractionRule::FreshPoint;
  CHECK(contract(system(3, {{1, 2}, {2, 3}}), 1, rule) == system(2, {{1, 2}}));
  CHECK(contract(system(2, {{1, 2}}), 1, rule) == kOnePoint);
  CHECK(contract(system(4, {{1, 2}, {3, 4}}), 1, rule) == system(2, {{1, 2}}));
}

TEST_CASE("contraction under the substitution rule") {
  CHECK(contract(system(3, {{1, 2}, {2, 3}}), 1) == kOnePoint);
  CHECK(contract(system(2, {{1, 2}}), 1) == kOnePoint);
  CHECK(contract(system(4, {{1, 2}, {3, 4}}), 1) == system(2, {{1, 2}}));
  // {1,3} removed; {2,3,5} loses 3
  CHECK(contract(system(5, {{1, 3}, {2, 4}, {4, 5}, {2, 3, 5}}), 1) ==
        system(3, {{1, 2}, {2, 3}, {1, 3}}));
  // a singleton basic point is deleted
  CHECK(contract(system(3, {{1}, {2, 3}}), 1) == system(2, {{1, 2}}));
  // R plus an unused point leaves a system with no relations
  CHECK(contract(system(3, {{1, 2}}), 1) == SetSystem(1, {}));
}

TEST_CASE("contraction preconditions") {
  const SetSystem ex72 = system(6, {{1, 3}, {1, 4}, {1, 2}, {2, 5}, {2, 6}, {3, 4}, {5, 6}});
  CHECK_THROWS_AS(contract(ex72, 6), InputError);
  CHECK_THROWS_AS(contract(kTriangle, 1), InputError);
}

TEST_CASE("substitution contraction preserves total homology") {
  std::mt19937_64 rng(37);
  int checked = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    std::vector<PointMask> rs;
    for (std::size_t i = 0; i < 1 + rng() % 5; ++i) rs.push_back(1 + rng() % ((PointMask{1} << n) - 1));
    const SetSystem s(n, rs);
    for (const auto& b : find_basic_points(s)) {
      const SetSystem t = contract(s, b.point);
      CHECK(system_homology(s, FieldSpec::rational()).total == system_homology(t, FieldSpec::rational()).total);
      ++checked;
    }
  }
  CHECK(checked > 500);
}

TEST_CASE("order search examples") {
  CHECK_FALSE(is_order(kTriangle));
  const auto one = is_order(kOnePoint);
  REQUIRE(one);
  CHECK(one->steps.empty());
  const SetSystem chain = system(3, {{1, 2}, {2, 3}});
  const auto cert = is_order(chain);
  REQUIRE(cert);
  CHECK(replay_certificate(chain, *cert));
  CHECK_FALSE(replay_certificate(chain, OrderCertificate{}));
  CHECK_FALSE(replay_certificate(chain, OrderCertificate{{{2, 0b011}}}));
  CHECK_THROWS_AS(is_order(SetSystem(0, {})), InputError);
}

TEST_CASE("the two rules disagree on a known system") {
  const SetSystem s = system(5, {{1, 3}, {2, 4}, {4, 5}, {2, 3, 5}});
  CHECK_FALSE(is_order(s));
  const auto fresh = is_order(s, kDefaultOrderMemoLimit, ContractionRule::FreshPoint);
  REQUIRE(fresh);
  CHECK(replay_certificate(s, *fresh, ContractionRule::FreshPoint));
  CHECK(system_homology(s, FieldSpec::rational()).total == 2);
}

TEST_CASE("word interval systems from non-exact words are orders") {
  // xxxx/{xxx}, xyzz/{xyz,zz}
  CHECK(is_order(system(3, {{1, 2}, {2, 3}})));
  CHECK(is_order(system(3, {{1, 2}, {3}})));
  CHECK_FALSE(is_order(system(3, {{1, 2}})));  // unused point
}

TEST_CASE("private points everywhere imply an order") {
  CHECK(private_point_everywhere(system(4, {{1, 2}, {3, 4}})));
  CHECK_FALSE(private_point_everywhere(kTriangle));
  CHECK(private_point_everywhere(system(3, {{1, 2}, {2, 3}})));
  CHECK(is_order(system(4, {{1, 2}, {3, 4}})));
}

TEST_CASE("order search agrees with the exhaustive oracle") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    std::vector<PointMask> rs;
    for (std::size_t i = 0; i < 1 + rng() % 5; ++i) rs.push_back(1 + rng() % ((PointMask{1} << n) - 1));
    const SetSystem s(n, rs);
    const auto cert = is_order(s);
    CHECK(cert.has_value() == oracle::is_order(n, s.relations()));
    if (cert) {
      CHECK(replay_certificate(s, *cert));
      CHECK(system_homology(s, FieldSpec::rational()).total == 1);
    }
  }
}
