#include <doctest.h>

#include <random>

#include "monobar/error.hpp"
#include "monobar/grassmann.hpp"
#include "monobar/problem_file.hpp"
#include "oracles.hpp"

using namespace monobar;

namespace {

const Alphabet kXYZ = Alphabet::from_chars("xyz");

RelationSet rels(std::vector<const char*> ws) {
  std::vector<Word> out;
  for (const char* w : ws) out.push_back(Word::parse(kXYZ, w));
  return reduce_antichain(out);
}

SetSystem system(std::size_t n, std::vector<std::vector<std::size_t>> rs) {
  std::vector<PointMask> masks;
  for (const auto& r : rs) masks.push_back(mask_of(r));
  return SetSystem(n, masks);
}

const char* kTernaryTree = R"(tree
node r arity 3 parent root
node a arity 2 parent r
node b arity 2 parent r
node c arity 2 parent r
treerel r a b
treerel r a c
treerel r b c
)";

SetSystem example_71() { return system(4, {{1, 2, 3}, {1, 4}, {2, 4}, {3, 4}}); }
SetSystem example_72() {
  return system(6, {{1, 3}, {1, 4}, {1, 2}, {2, 5}, {2, 6}, {3, 4}, {5, 6}});
}

} // namespace

TEST_CASE("set system normalization") {
  const SetSystem s = system(4, {{1, 2, 3}, {1, 2}, {4}, {1, 2}});
  CHECK(s.relations() == std::vector<PointMask>{0b1000, 0b0011});
  CHECK(s.coverage(1) == 1);
  CHECK(s.unused_points() == 0b0100);
  CHECK(format_mask(0b10101) == "{1,3,5}");
  CHECK_THROWS_AS(SetSystem(2, {0b100}), InputError);
  CHECK_THROWS_AS(SetSystem(2, {0}), InputError);
  CHECK_THROWS_AS(SetSystem(64, {}), CapacityError);
}

TEST_CASE("word to system examples") {
  CHECK(word_to_system(Word::parse(kXYZ, "xxxx"), rels({"xxx"})) == system(3, {{1, 2}, {2, 3}}));
  CHECK(word_to_system(Word::parse(kXYZ, "xy"), rels({"xy"})) == system(1, {{1}}));
  CHECK(word_to_system(Word::parse(kXYZ, "xyzz"), rels({"xyz", "zz"})) == system(3, {{1, 2}, {3}}));
}

TEST_CASE("rooted tree validation") {
  using N = RootedTree::Node;
  CHECK_THROWS_AS(RootedTree({N{"a", 1, std::nullopt}, N{"b", 1, std::nullopt}}), InputError);
  CHECK_THROWS_AS(RootedTree({N{"a", 1, std::nullopt}, N{"b", 0, "z"}}), InputError);
  CHECK_THROWS_AS(RootedTree({N{"a", 1, std::nullopt}, N{"b", 0, "a"}, N{"c", 0, "a"}}), InputError);
  CHECK_THROWS_AS(RootedTree({N{"a", 1, std::nullopt}, N{"a", 0, "a"}}), InputError);
  const RootedTree t({N{"r", 2, std::nullopt}, N{"l", 2, "r"}, N{"leaf", 0, "r"}, N{"m", 2, "l"}});
  CHECK(t.internal_edges().size() == 2);
  CHECK(t.children(0).size() == 2);
}

TEST_CASE("tree to system examples") {
  const ProblemFile p = parse_problem_text(kTernaryTree);
  const SetSystem s = tree_to_system(*p.tree, p.tree_relations);
  CHECK(s == system(3, {{1, 2}, {1, 3}, {2, 3}}));
  const auto h = system_homology(s, FieldSpec::rational());
  CHECK(h.total == 2);
  CHECK(h.concentrated_degree() == 1);

  const RootedTree corolla({{"x", 3, std::nullopt}});
  const SetSystem c = tree_to_system(corolla, {});
  CHECK(c.ground_size() == 0);
  CHECK(system_homology(c, FieldSpec::rational()).total == 1);

  const RootedTree cherry({{"r", 2, std::nullopt}, {"a", 2, "r"}, {"b", 2, "r"}});
  CHECK(tree_to_system(cherry, {{0, 1, 2}}) == system(2, {{1, 2}}));
  CHECK_THROWS_AS(tree_to_system(cherry, {{1, 2}}), InputError);  // disconnected
  CHECK_THROWS_AS(tree_to_system(cherry, {{0}}), InputError);     // too small
}

TEST_CASE("grassmann complex examples") {
  CHECK(grassmann_complex(example_71()).dims() == std::vector<std::size_t>{1, 4, 3});
  CHECK(grassmann_complex(example_72()).dims() == std::vector<std::size_t>{1, 6, 8});
  CHECK(grassmann_complex(SetSystem(2, {})).dims() == std::vector<std::size_t>{1, 2, 1});
  CHECK(grassmann_complex(SetSystem(3, {}), PointMask{0b011}).dims() == std::vector<std::size_t>{1, 2, 1});
}

TEST_CASE("system homology examples") {
  for (const FieldSpec& f : {FieldSpec::rational(), FieldSpec::default_field()}) {
    const auto h71 = system_homology(example_71(), f);
    CHECK(h71.dims == std::vector<std::size_t>{0, 1, 1});
    CHECK(h71.total == 2);
    const auto h72 = system_homology(example_72(), f);
    CHECK(h72.dims == std::vector<std::size_t>{0, 0, 3});
  }
  CHECK(system_homology(system(2, {{1}}), FieldSpec::rational()).total == 0);
}

TEST_CASE("word bar homology equals gap system homology") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 300; ++trial) {
    std::string w(2 + rng() % 8, 'x');
    for (auto& ch : w) ch = "xyz"[rng() % 2];
    std::vector<Word> ws;
    for (std::size_t i = 0; i < 1 + rng() % 2; ++i) {
      std::string r(2 + rng() % 3, 'x');
      for (auto& ch : r) ch = "xyz"[rng() % 2];
      ws.push_back(Word::parse(kXYZ, r));
    }
    const RelationSet R = reduce_antichain(ws);
    const Word W = Word::parse(kXYZ, w);
    CHECK(word_homology(W, R, FieldSpec::rational()) ==
          system_homology(word_to_system(W, R), FieldSpec::rational()));
  }
}

TEST_CASE("grassmann homology agrees with the oracle") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 7;
    std::vector<PointMask> rs;
    for (std::size_t i = 0; i < 1 + rng() % 5; ++i) rs.push_back(1 + rng() % ((PointMask{1} << n) - 1));
    const SetSystem s(n, rs);
    const auto expect = oracle::subset_homology(n, s.relations(), 0);
    const auto h = system_homology(s, FieldSpec::rational());
    for (std::size_t g = 0; g <= n; ++g) CHECK(h.at(g) == expect[g]);
  }
}
