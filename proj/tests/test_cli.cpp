#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "monobar/cli.hpp"
#include "monobar/error.hpp"
#include "monobar/fuzz.hpp"
#include "monobar/problem_file.hpp"

using namespace monobar;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);)
    if (l == line) return true;
  return false;
}

const char* kXxxx = "alphabet x\nrelation x x x\nword x x x x\n";
const char* kExample72 = R"(# full binary tree, relations of three operations
ground 6
rel 1 3
rel 1 4
rel 1 2
rel 2 5
rel 2 6
rel 3 4
rel 5 6
)";

} // namespace

TEST_CASE("word-homology report") {
  const Run r = run({"word-homology"}, kXxxx);
  CHECK(r.code == kExitOk);
  CHECK(has_line(r.out, "H\t3\t1"));
  CHECK(has_line(r.out, "total\t1"));
  CHECK(has_line(r.out, "bar_degree\t3"));
  CHECK(has_line(r.out, "place\t2"));
  CHECK(has_line(r.out, "dyck\t3 4"));
  CHECK(has_line(r.out, "r\t2"));
}

TEST_CASE("grassmann report on the binary tree system") {
  for (const char* field : {"q", "32003"}) {
    const Run r = run({"grassmann", "--field", field}, kExample72);
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("H\t0\t0\nH\t1\t0\nH\t2\t3\n") != std::string::npos);
  }
}

TEST_CASE("grassmann report on a tree file") {
  const Run r = run({"grassmann"}, "tree\nnode r arity 3 parent root\nnode a arity 2 parent r\n"
                                   "node b arity 2 parent r\nnode c arity 2 parent r\n"
                                   "treerel r a b\ntreerel r a c\ntreerel r b c\n");
  CHECK(r.code == kExitOk);
  CHECK(has_line(r.out, "H\t1\t2"));
  CHECK(has_line(r.out, "total\t2"));
}

TEST_CASE("recurrence rows") {
  const Run r = run({"recurrence", "--n", "3"});
  CHECK(r.code == kExitOk);
  CHECK(has_line(r.out, "3\t16\t25\t1\t12\t4\t5\t51"));
  CHECK(has_line(r.out, "1\t0\t1\t1\t0\t0\t1\t3"));
}

TEST_CASE("recurrence crosscheck reports the mismatch") {
  const Run r = run({"recurrence", "--n", "4", "--crosscheck"});
  CHECK(r.code == kExitViolation);
  CHECK(r.out.find("crosscheck\t2\tmatch") != std::string::npos);
  CHECK(r.out.find("crosscheck\t3\tmismatch") != std::string::npos);
}

TEST_CASE("order-check certificate lines") {
  const Run r = run({"order-check"}, "ground 3\nrel 1 2\nrel 2 3\n");
  CHECK(r.code == kExitOk);
  CHECK(has_line(r.out, "order\tyes"));
  CHECK(has_line(r.out, "contract point=1 relation={1,2}"));
  const Run fresh = run({"order-check", "--rule", "fresh"}, "ground 5\nrel 1 3\nrel 2 4\nrel 4 5\nrel 2 3 5\n");
  CHECK(fresh.code == kExitViolation);
  CHECK(run({"order-check", "--rule", "other"}, "ground 1\nrel 1\n").code == kExitInput);
}

TEST_CASE("graph-reduce and tree-family") {
  const Run g = run({"graph-reduce"}, "ground 3\nrel 1 2\nrel 1 3\nrel 2 3\n");
  CHECK(g.code == kExitOk);
  CHECK(g.out.rfind("clique vertices=3 edges=3 vertex=1 neighbors=2,3", 0) == 0);
  CHECK(has_line(g.out, "total\t2"));
  CHECK(run({"graph-reduce"}, "ground 3\nrel 1 2 3\n").code == kExitInput);
  const Run t = run({"tree-family", "--family", "cherries", "--n", "4"});
  CHECK(has_line(t.out, "total\t1"));
  CHECK(run({"tree-family", "--n", "9"}).code == kExitCapacity);
  CHECK(run({"tree-family", "--family", "oak"}).code == kExitInput);
}

TEST_CASE("series-invert") {
  const Run r = run({"series-invert", "--n", "3"}, "alphabet x\nrelation x x\n");
  CHECK(r.code == kExitOk);
  CHECK(r.out == "1\t1\nx\t-1\nxx\t1\nxxx\t-1\n");
  const Run w = run({"series-invert"}, kXxxx);
  CHECK(has_line(w.out, "coeff\t-1"));
  CHECK(has_line(w.out, "alternating_sum\t-1"));
}

TEST_CASE("input errors exit 2") {
  CHECK(run({}).code == kExitInput);
  CHECK(run({"frobnicate"}).code == kExitInput);
  CHECK(run({"word-homology", "--bogus"}, kXxxx).code == kExitInput);
  CHECK(run({"word-homology", "--field", "4"}, kXxxx).code == kExitInput);
  CHECK(run({"word-homology", "/nonexistent/file"}).code == kExitInput);
  CHECK(run({"word-homology"}, "alphabet x\nword x y\n").code == kExitInput);
  CHECK(run({"word-homology"}, "ground 2\n").code == kExitInput);
  CHECK(run({"dyck"}, "alphabet x\nrelation x\nword x x\n").code == kExitInput);
  CHECK(run({"fuzz", "no-such-scenario"}).code == kExitInput);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("capacity errors exit 3") {
  std::string text = "alphabet x y\nrelation y y\nword";
  for (int i = 0; i < 30; ++i) text += " x";
  CHECK(run({"word-homology", "--max-basis", "1000"}, text + "\n").code == kExitCapacity);
}

TEST_CASE("problem file parsing") {
  CHECK_THROWS_AS(parse_problem_text("alphabet x\nground 2\n"), InputError);
  CHECK_THROWS_AS(parse_problem_text("frob 1\n"), InputError);
  CHECK_THROWS_AS(parse_problem_text("rel 1 2\n"), InputError);
  CHECK_THROWS_AS(parse_problem_text("ground 2\nrel 3\n"), InputError);
  CHECK_THROWS_AS(parse_problem_text("ground x\n"), InputError);
  CHECK_THROWS_AS(parse_problem_text("# nothing\n"), InputError);
  CHECK_THROWS_AS(parse_problem_text("node a arity 1 parent root\n"), InputError);
  CHECK_THROWS_AS(parse_problem_text("tree\nnode a arity 1 parent root\ntreerel a b\n"), InputError);
  const ProblemFile p = parse_problem_text("alphabet aa bb # two tokens\nrelation aa bb\n");
  CHECK(p.kind == ProblemFile::Kind::Algebra);
  CHECK(p.relations.size() == 1);
}

TEST_CASE("problem files round-trip") {
  const ProblemFile w = parse_problem_text(kXxxx);
  CHECK(format_word_problem(*w.alphabet, w.relations, w.word) == kXxxx);
  const ProblemFile s = parse_problem_text(kExample72);
  CHECK(parse_problem_text(format_system_problem(*s.system)).system == s.system);
}

TEST_CASE("fuzz output is deterministic") {
  const Run a = run({"fuzz", "algebra-dichotomy", "--trials", "200", "--seed", "9"});
  const Run b = run({"fuzz", "algebra-dichotomy", "--trials", "200", "--seed", "9"});
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  FuzzOptions one, four;
  one.threads = 1;
  four.threads = 4;
  one.trials = four.trials = 300;
  for (FuzzScenario sc : all_scenarios()) {
    const FuzzReport x = run_fuzz(sc, one), y = run_fuzz(sc, four);
    CHECK(x.findings == y.findings);
    CHECK(x.checked == y.checked);
    CHECK(x.findings.empty());
  }
  CHECK(trial_seed(1, 0) != trial_seed(1, 1));
  CHECK(trial_seed(1, 5) == trial_seed(1, 5));
}

TEST_CASE("finding files replay through the named command") {
  // a finding file as the fuzzer writes it, for a violation the fresh-point rule produces
  const auto dir = std::filesystem::temp_directory_path() / "monobar_cli_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "finding.txt";
  std::ofstream(path) << "# violation: order with total homology 2\n"
                      << "ground 5\nrel 1 3\nrel 2 4\nrel 4 5\nrel 2 3 5\n";
  const Run r = run({"order-check", "--rule", "fresh", path.string()});
  CHECK(r.code == kExitViolation);
  CHECK(has_line(r.out, "violation\torder with total homology 2"));
  std::filesystem::remove_all(dir);
}

TEST_CASE("selftest and calibrate") {
  const Run s = run({"selftest", "--trials", "50"});
  CHECK(s.code == kExitOk);
  CHECK(has_line(s.out, "failures\t0"));
  const Run c = run({"calibrate", "--n", "3"});
  CHECK(c.code == kExitOk);
  CHECK(has_line(c.out, "cherries\t3\t6\t3\t1\t0,0,0,1"));
}
