#include "monobar/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "monobar/error.hpp"
#include "monobar/fuzz.hpp"
#include "monobar/grassmann.hpp"
#include "monobar/ncseries.hpp"
#include "monobar/order.hpp"
#include "monobar/problem_file.hpp"
#include "monobar/quad_graph.hpp"
#include "monobar/recurrence.hpp"

namespace monobar {

namespace {

struct Options {
  std::string field = "32003";
  std::size_t max_basis = kDefaultMaxBasis;
  std::uint64_t seed = 1;
  std::size_t trials = 1000;
  std::string family = "line";
  std::optional<std::size_t> n;
  std::string input = "-";
  std::string scenario = "all";
  std::string out_dir;
  std::string xz = "z";
  bool crosscheck = false;
  std::string rule = "substitution";
};

FieldSpec parse_field(const std::string& s) {
  if (s == "q" || s == "Q") return FieldSpec::rational();
  std::size_t pos = 0;
  unsigned long long p = 0;
  try {
    p = std::stoull(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != s.size()) throw InputError("--field expects q or a prime, got '" + s + "'");
  return FieldSpec::prime(p);
}

TreeFamily parse_family(const std::string& s) {
  if (s == "line") return TreeFamily::LineGraph;
  if (s == "cherries") return TreeFamily::CherriesOnly;
  if (s == "singletons") return TreeFamily::DeepSingletons;
  throw InputError("--family expects line, cherries or singletons, got '" + s + "'");
}

std::string_view family_name(TreeFamily f) {
  switch (f) {
    case TreeFamily::LineGraph: return "line";
    case TreeFamily::CherriesOnly: return "cherries";
    case TreeFamily::DeepSingletons: return "singletons";
  }
  return "?";
}

std::string join(const std::vector<std::size_t>& xs, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + std::to_string(xs[i]);
  return s;
}

class Session {
public:
  Session(const Options& o, std::istream& in, std::ostream& out)
      : o_(o), in_(in), out_(out), field_(parse_field(o.field)) {}

  int word_homology();
  int dyck();
  int series_invert();
  int grassmann();
  int order_check();
  int graph_reduce();
  int tree_family();
  int recurrence();
  int fuzz();
  int selftest();
  int calibrate();

private:
  ProblemFile load() const {
    if (o_.input == "-") return parse_problem(in_);
    std::ifstream f(o_.input);
    if (!f) throw InputError("cannot open '" + o_.input + "'");
    return parse_problem(f);
  }
  ProblemFile load_word() const {
    ProblemFile p = load();
    if (p.kind != ProblemFile::Kind::Word) throw InputError("expected a word problem");
    if (p.word->empty()) throw InputError("word must be nonempty");
    return p;
  }
  SetSystem load_system() const {
    ProblemFile p = load();
    switch (p.kind) {
      case ProblemFile::Kind::System: return *p.system;
      case ProblemFile::Kind::Tree: return tree_to_system(*p.tree, p.tree_relations);
      case ProblemFile::Kind::Word:
        if (p.word->size() < 2) throw InputError("word needs at least one gap");
        return word_to_system(*p.word, p.relations);
      case ProblemFile::Kind::Algebra: break;
    }
    throw InputError("expected a set system, tree or word problem");
  }
  void print_profile(const HomologyProfile& h) {
    if (h.dims.empty()) out_ << "H\t0\t0\n";
    for (std::size_t g = 0; g < h.dims.size(); ++g) out_ << "H\t" << g << '\t' << h.dims[g] << '\n';
    out_ << "total\t" << h.total << "\neuler\t" << h.euler << '\n';
  }
  int report(const std::optional<std::string>& violation) {
    if (!violation) return kExitOk;
    out_ << "violation\t" << *violation << '\n';
    return kExitViolation;
  }
  void print_dyck(const Word& w, const RelationSet& r) {
    const DyckResult d = dyck_path(w, r);
    const Prediction p = predict_homology(w, r);
    out_ << "dyck\t" << join(d.ends, " ") << "\nr\t" << d.r << "\nreason\t" << to_string(d.reason) << '\n';
    if (p.placed())
      out_ << "bar_degree\t" << p.bar_degree << "\nplace\t" << p.place << '\n';
    else
      out_ << "prediction\texact\n";
  }

  const Options& o_;
  std::istream& in_;
  std::ostream& out_;
  FieldSpec field_;
};

int Session::word_homology() {
  const ProblemFile p = load_word();
  const Word& w = *p.word;
  const HomologyProfile h = monobar::word_homology(w, p.relations, field_, o_.max_basis);
  const auto bar = by_bar_index(h, w.size());
  std::int64_t euler = 0;
  for (std::size_t k = 1; k < bar.size(); ++k) {
    out_ << "H\t" << k << '\t' << bar[k] << '\n';
    euler += (k % 2 ? -1 : 1) * static_cast<std::int64_t>(bar[k]);
  }
  out_ << "total\t" << h.total << "\neuler\t" << euler << '\n';
  print_dyck(w, p.relations);
  auto v = check_dichotomy(w, p.relations, field_, o_.max_basis);
  if (!v) v = check_dyck_position(w, p.relations, field_, o_.max_basis);
  return report(v);
}

int Session::dyck() {
  const ProblemFile p = load_word();
  print_dyck(*p.word, p.relations);
  return kExitOk;
}

int Session::series_invert() {
  const ProblemFile p = load();
  if (p.kind == ProblemFile::Kind::Word) {
    const EulerCrosscheck e = euler_crosscheck(*p.word, p.relations, o_.max_basis);
    out_ << "coeff\t" << e.coeff.str() << "\nalternating_sum\t" << e.alternating_sum << '\n';
    return report(check_series_word(*p.word, p.relations, o_.max_basis));
  }
  if (p.kind != ProblemFile::Kind::Algebra) throw InputError("expected an algebra or word problem");
  const std::size_t N = o_.n.value_or(8);
  const NCSeries inverse = invert_series(hilbert_truncated(*p.alphabet, p.relations, N));
  write_series(out_, inverse, *p.alphabet);
  for (const auto& [word, c] : inverse.terms())
    if (c < -1 || c > 1)
      return report("inverse coefficient " + c.str() + " at " + word.render(*p.alphabet));
  return kExitOk;
}

int Session::grassmann() {
  const SetSystem s = load_system();
  out_ << "variables\t" << s.ground_size() << "\nrelations\t" << s.relation_count() << '\n';
  print_profile(trimmed(system_homology(s, field_, o_.max_basis)));
  return kExitOk;
}

int Session::order_check() {
  const SetSystem s = load_system();
  ContractionRule rule = ContractionRule::Substitution;
  if (o_.rule == "fresh") {
    rule = ContractionRule::FreshPoint;
  } else if (o_.rule != "substitution") {
    throw InputError("--rule expects substitution or fresh, got '" + o_.rule + "'");
  }
  const auto cert = is_order(s, kDefaultOrderMemoLimit, rule);
  out_ << "order\t" << (cert ? "yes" : "no") << '\n';
  if (cert)
    for (const auto& step : cert->steps)
      out_ << "contract point=" << step.point << " relation=" << format_mask(step.relation) << '\n';
  out_ << "private_point\t" << (private_point_everywhere(s) ? "yes" : "no") << '\n';
  const HomologyProfile h = trimmed(system_homology(s, field_, o_.max_basis));
  print_profile(h);
  if (rule == ContractionRule::FreshPoint)
    return report(cert && h.total > 1 ? std::optional<std::string>("order with total homology " +
                                                                   std::to_string(h.total))
                                      : std::nullopt);
  return report(check_order_system(s, field_, o_.max_basis));
}

int Session::graph_reduce() {
  const SetSystem s = load_system();
  const auto [profile, trace] = reduce_homology(graph_from_system(s), field_, o_.max_basis);
  render_trace(out_, trace);
  print_profile(profile);
  return report(check_graph_rules(s, field_, o_.max_basis));
}

int Session::tree_family() {
  const TreeFamily f = parse_family(o_.family);
  const SetSystem s = binary_tree_family(o_.n.value_or(3), f);
  out_ << "family\t" << family_name(f) << "\nground\t" << s.ground_size() << "\nrelations\t"
       << s.relation_count() << '\n';
  print_profile(reduce_homology(graph_from_system(s), field_, o_.max_basis).first);
  return kExitOk;
}

int Session::recurrence() {
  const std::size_t N = o_.n.value_or(5);
  if (N == 0) throw InputError("--n must be at least 1");
  out_ << "n\ta\tb\tc\tp\tq\tr\tdim\n";
  RecurrenceState s = RecurrenceState::initial();
  for (std::size_t n = 1; n <= N; ++n, s = recurrence_step(s)) {
    out_ << n;
    for (const BigInt& v : s.vector()) out_ << '\t' << v.str();
    out_ << '\t' << BigInt(s.a + s.c + 2 * s.p + 2 * s.r).str() << '\n';
  }
  if (!o_.crosscheck) return kExitOk;

  if (o_.xz.size() != 1 || std::string("xyz0").find(o_.xz[0]) == std::string::npos)
    throw InputError("--xz expects x, y, z or 0");
  const RewriteTable table = RewriteTable::with_xz(o_.xz[0]);
  std::optional<std::string> violation;
  for (std::size_t n = 1; n <= std::min<std::size_t>(N, 4); ++n) {
    RewriteLog log;
    const auto rewritten = rewritten_power_vector(n, table, &log);
    const bool match = rewritten == recurrence_state(n).vector();
    out_ << "crosscheck\t" << n << '\t' << (match ? "match" : "mismatch");
    for (const BigInt& v : rewritten) out_ << '\t' << v.str();
    out_ << "\tassumed_pairs\t" << (log.consulted_assumed ? "used" : "unused") << '\n';
    if (!match && !violation) violation = "rewrite and recurrence differ at n=" + std::to_string(n);
  }
  return report(violation);
}

int Session::fuzz() {
  std::vector<FuzzScenario> scenarios;
  if (o_.scenario == "all") {
    scenarios = all_scenarios();
  } else if (auto s = parse_scenario(o_.scenario)) {
    scenarios.push_back(*s);
  } else {
    throw InputError("unknown fuzz scenario '" + o_.scenario + "'");
  }
  FuzzOptions fo;
  fo.seed = o_.seed;
  fo.trials = o_.trials;
  fo.field = field_;
  fo.max_basis = o_.max_basis;
  std::size_t total = 0;
  for (FuzzScenario sc : scenarios) {
    const FuzzReport r = run_fuzz(sc, fo);
    out_ << "scenario\t" << to_string(sc) << "\ntrials\t" << r.trials << "\nchecked\t" << r.checked
         << "\nskipped\t" << r.skipped << "\nfindings\t" << r.findings.size() << '\n';
    for (std::size_t i = 0; i < r.findings.size(); ++i) {
      const Finding& f = r.findings[i];
      out_ << "finding\t" << i + 1 << '\t' << f.command << '\t' << f.violation << '\n' << f.problem;
      if (!o_.out_dir.empty()) {
        std::filesystem::create_directories(o_.out_dir);
        const auto path = std::filesystem::path(o_.out_dir) /
                          (std::string(to_string(sc)) + "-" + std::to_string(i + 1) + ".txt");
        std::ofstream file(path);
        file << "# violation: " << f.violation << "\n# replay: monobar " << f.command << ' '
             << path.filename().string() << '\n' << f.problem;
        if (!file) throw InputError("cannot write '" + path.string() + "'");
      }
    }
    total += r.findings.size();
  }
  return total ? kExitViolation : kExitOk;
}

int Session::selftest() {
  std::size_t failures = 0;
  auto check = [&](const std::string& name, const std::function<bool()>& pass) {
    bool ok = false;
    try {
      ok = pass();
    } catch (const Error&) {
      ok = false;
    }
    out_ << (ok ? "ok\t" : "FAIL\t") << name << '\n';
    failures += !ok;
  };
  auto word_case = [&](const char* alphabet, std::vector<const char*> rels, const char* word) {
    const Alphabet a = Alphabet::from_chars(alphabet);
    std::vector<Word> ws;
    for (const char* r : rels) ws.push_back(Word::parse(a, r));
    return std::pair{reduce_antichain(ws), Word::parse(a, word)};
  };

  check("xxxx/{xxx} homology at bar degree 3", [&] {
    auto [r, w] = word_case("x", {"xxx"}, "xxxx");
    const auto bar = by_bar_index(monobar::word_homology(w, r, field_), 4);
    return bar[3] == 1 && predict_homology(w, r).bar_degree == 3 && dyck_path(w, r).ends ==
                                                                        std::vector<std::size_t>{3, 4};
  });
  check("xyzz/{xyz,zz} dyck path 3 4", [&] {
    auto [r, w] = word_case("xyz", {"xyz", "zz"}, "xyzz");
    return dyck_path(w, r).ends == std::vector<std::size_t>{3, 4} &&
           monobar::word_homology(w, r, field_).total == 1;
  });
  check("triangle has homology 2", [&] {
    return system_homology(SetSystem(3, {3, 5, 6}), field_).total == 2;
  });
  check("single edge has homology 1", [&] {
    return system_homology(SetSystem(2, {3}), field_).total == 1;
  });
  check("isolated vertex kills homology", [&] {
    return system_homology(SetSystem(4, {3, 5, 6}), field_).total == 0;
  });
  check("line family n=3 has homology 3", [&] {
    return reduce_homology(graph_from_system(binary_tree_family(3, TreeFamily::LineGraph)), field_)
               .first.total == 3;
  });
  check("recurrence dims 3 5 51", [&] {
    return recurrence_dims(1) == 3 && recurrence_dims(2) == 5 && recurrence_dims(3) == 51;
  });
  FuzzOptions fo;
  fo.seed = o_.seed;
  fo.trials = std::min<std::size_t>(o_.trials, 200);
  fo.field = field_;
  fo.max_basis = o_.max_basis;
  for (FuzzScenario sc : all_scenarios())
    check("fuzz " + std::string(to_string(sc)), [&] { return run_fuzz(sc, fo).findings.empty(); });
  out_ << "failures\t" << failures << '\n';
  return failures ? kExitViolation : kExitOk;
}

int Session::calibrate() {
  const std::size_t N = std::min<std::size_t>(o_.n.value_or(4), 6);
  out_ << "family\tn\tground\trelations\ttotal\tdims\n";
  std::map<std::pair<TreeFamily, std::size_t>, std::size_t> totals;
  for (TreeFamily f : {TreeFamily::LineGraph, TreeFamily::CherriesOnly, TreeFamily::DeepSingletons}) {
    for (std::size_t n = 1; n <= N; ++n) {
      const SetSystem s = binary_tree_family(n, f);
      const HomologyProfile h = reduce_homology(graph_from_system(s), field_, o_.max_basis).first;
      totals[{f, n}] = h.total;
      out_ << family_name(f) << '\t' << n << '\t' << s.ground_size() << '\t' << s.relation_count()
           << '\t' << h.total << '\t' << (h.dims.empty() ? "0" : join(h.dims, ",")) << '\n';
    }
  }
  out_ << "n\trecurrence_dim\tline\tcherries\tsingletons\n";
  for (std::size_t n = 1; n <= std::min<std::size_t>(N, 3); ++n)
    out_ << n << '\t' << recurrence_dims(n).str() << '\t' << totals[{TreeFamily::LineGraph, n}] << '\t'
         << totals[{TreeFamily::CherriesOnly, n}] << '\t' << totals[{TreeFamily::DeepSingletons, n}]
         << '\n';
  return kExitOk;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  Options o;
  CLI::App app{"Homology of bar complexes of monomial algebras and related set systems", "monobar"};
  app.require_subcommand(1);
  app.add_option("--field", o.field, "q, 2 or a prime (default 32003)");
  app.add_option("--max-basis", o.max_basis, "cap on basis elements per complex");
  app.add_option("--seed", o.seed, "fuzz seed");
  app.add_option("--trials", o.trials, "fuzz trials per scenario");
  app.add_option("--family", o.family, "tree family: line, cherries or singletons");
  app.add_option("--n", o.n, "depth, truncation or recurrence index");

  using Handler = int (Session::*)();
  std::vector<std::pair<CLI::App*, Handler>> commands;
  auto with_input = [&](const char* name, const char* help, Handler h) {
    CLI::App* sub = app.add_subcommand(name, help)->fallthrough();
    sub->add_option("input", o.input, "problem file, - for stdin");
    commands.emplace_back(sub, h);
    return sub;
  };
  with_input("word-homology", "bar homology of a word", &Session::word_homology);
  with_input("dyck", "generalized Dyck path of a word", &Session::dyck);
  with_input("series-invert", "inverted Hilbert series", &Session::series_invert);
  with_input("grassmann", "homology of a monomial Grassmann quotient", &Session::grassmann);
  with_input("order-check", "order search with certificate", &Session::order_check)
      ->add_option("--rule", o.rule, "contraction rule: substitution or fresh");
  with_input("graph-reduce", "graph reduction rules with trace", &Session::graph_reduce);
  commands.emplace_back(app.add_subcommand("tree-family", "truncated binary tree families")->fallthrough(),
                        &Session::tree_family);
  CLI::App* rec = app.add_subcommand("recurrence", "six-coefficient recurrence")->fallthrough();
  rec->add_flag("--crosscheck", o.crosscheck, "compare with the pair-rewriting engine for n <= 4");
  rec->add_option("--xz", o.xz, "image of xz and zx: x, y, z or 0");
  commands.emplace_back(rec, &Session::recurrence);
  CLI::App* fz = app.add_subcommand("fuzz", "randomized property search")->fallthrough();
  fz->add_option("scenario", o.scenario, "scenario name or all");
  fz->add_option("--out", o.out_dir, "directory for finding files");
  commands.emplace_back(fz, &Session::fuzz);
  commands.emplace_back(app.add_subcommand("selftest", "pinned examples and short fuzz runs")->fallthrough(),
                        &Session::selftest);
  commands.emplace_back(app.add_subcommand("calibrate", "tree family conventions table")->fallthrough(),
                        &Session::calibrate);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kExitInput;
  }

  try {
    Session session(o, in, out);
    for (auto& [sub, handler] : commands)
      if (sub->parsed()) return (session.*handler)();
    throw InternalError("no command selected");
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitViolation;
  }
}

} // namespace monobar
