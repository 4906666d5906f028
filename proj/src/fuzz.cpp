#include "monobar/fuzz.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <functional>
#include <random>
#include <thread>

#include "monobar/error.hpp"
#include "monobar/grassmann.hpp"
#include "monobar/ncseries.hpp"
#include "monobar/order.hpp"
#include "monobar/problem_file.hpp"
#include "monobar/quad_graph.hpp"

namespace monobar {

namespace {

std::string join(const std::vector<std::size_t>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out;
}

} // namespace

std::optional<std::string> check_dichotomy(const Word& w, const RelationSet& relations,
                                           const FieldSpec& field, std::size_t max_basis) {
  const GradedComplex c = bar_subcomplex(w, relations, max_basis);
  const HomologyProfile h = homology_dims(c, field);
  if (h.total > 1) return "total homology " + std::to_string(h.total) + " exceeds 1";
  if ((h.total == 0) != (c.total_dim() % 2 == 0))
    return "total homology " + std::to_string(h.total) + " with basis dimension " +
           std::to_string(c.total_dim());
  return std::nullopt;
}

std::optional<std::string> check_dyck_position(const Word& w, const RelationSet& relations,
                                               const FieldSpec& field, std::size_t max_basis) {
  const HomologyProfile h = word_homology(w, relations, field, max_basis);
  const Prediction p = predict_homology(w, relations);
  if (!p.placed()) {
    if (h.total != 0) return "predicted exact, total homology " + std::to_string(h.total);
    return std::nullopt;
  }
  if (h.total == 0) return std::nullopt;
  const auto bar = by_bar_index(h, w.size());
  if (h.total != 1 || p.bar_degree >= bar.size() || bar[p.bar_degree] != 1)
    return "predicted bar degree " + std::to_string(p.bar_degree) + ", homology by bar index " +
           join(std::vector<std::size_t>(bar.begin() + 1, bar.end()));
  return std::nullopt;
}

std::optional<std::string> check_series_word(const Word& w, const RelationSet& relations,
                                             std::size_t max_basis) {
  const EulerCrosscheck e = euler_crosscheck(w, relations, max_basis);
  if (e.coeff < -1 || e.coeff > 1) return "inverse coefficient " + e.coeff.str();
  if (e.coeff != e.alternating_sum)
    return "inverse coefficient " + e.coeff.str() + " but alternating sum " +
           std::to_string(e.alternating_sum);
  return std::nullopt;
}

std::optional<std::string> check_order_system(const SetSystem& s, const FieldSpec& field,
                                              std::size_t max_basis) {
  const auto cert = is_order(s);
  if (!cert) {
    if (s.relation_count() > 0 && s.unused_points() == 0 && private_point_everywhere(s))
      return "private point in every relation but no order";
    return std::nullopt;
  }
  if (!replay_certificate(s, *cert)) return "certificate does not replay";
  const HomologyProfile h = system_homology(s, field, max_basis);
  if (h.total > 1) return "order with total homology " + std::to_string(h.total);
  return std::nullopt;
}

std::optional<std::string> check_graph_rules(const SetSystem& s, const FieldSpec& field,
                                             std::size_t max_basis) {
  const RelationGraph g = graph_from_system(s);
  const HomologyProfile reduced = reduce_homology(g, field, max_basis).first;
  const HomologyProfile oracle = trimmed(system_homology(s, field, max_basis));
  if (reduced != oracle)
    return "reduction gives " + join(reduced.dims) + ", oracle gives " + join(oracle.dims);
  for (std::size_t v = 1; v <= g.vertex_count(); ++v)
    if (g.degree(v) == 0 && oracle.total != 0) return "isolated vertex with nonzero homology";
  return std::nullopt;
}

std::string_view to_string(FuzzScenario scenario) {
  switch (scenario) {
    case FuzzScenario::AlgebraDichotomy: return "algebra-dichotomy";
    case FuzzScenario::DyckPosition: return "dyck-position";
    case FuzzScenario::SeriesPm1: return "series-pm1";
    case FuzzScenario::OrderDichotomy: return "order-dichotomy";
    case FuzzScenario::GraphRules: return "graph-rules";
  }
  return "unknown";
}

std::vector<FuzzScenario> all_scenarios() {
  return {FuzzScenario::AlgebraDichotomy, FuzzScenario::DyckPosition, FuzzScenario::SeriesPm1,
          FuzzScenario::OrderDichotomy, FuzzScenario::GraphRules};
}

std::optional<FuzzScenario> parse_scenario(std::string_view name) {
  for (FuzzScenario s : all_scenarios())
    if (to_string(s) == name) return s;
  return std::nullopt;
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
  // splitmix64 of the combined key
  std::uint64_t z = seed + (trial + 1) * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

using Rng = std::mt19937_64;

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

struct WordInstance {
  Alphabet alphabet;
  std::vector<Word> relations;
  Word word;
};

struct SystemInstance {
  SetSystem system;
};

Word random_word(Rng& rng, std::size_t k, std::size_t len) {
  Word w;
  for (std::size_t i = 0; i < len; ++i) w.letters.push_back(static_cast<Letter>(uniform(rng, 0, k - 1)));
  return w;
}

WordInstance random_word_instance(Rng& rng, std::size_t max_len) {
  const std::size_t k = uniform(rng, 1, 3);
  WordInstance inst{Alphabet::from_chars(std::string("xyz").substr(0, k)), {}, {}};
  inst.word = random_word(rng, k, uniform(rng, 1, max_len));
  const std::size_t m = uniform(rng, 1, 3);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t len = uniform(rng, 2, 4);
    if (inst.word.size() >= len && uniform(rng, 0, 1) == 0) {
      const std::size_t start = uniform(rng, 0, inst.word.size() - len);
      inst.relations.emplace_back(std::vector<Letter>(inst.word.letters.begin() + start,
                                                      inst.word.letters.begin() + start + len));
    } else {
      inst.relations.push_back(random_word(rng, k, len));
    }
  }
  return inst;
}

std::vector<WordInstance> shrink(const WordInstance& inst) {
  std::vector<WordInstance> out;
  for (std::size_t i = 0; inst.word.size() > 1 && i < inst.word.size(); ++i) {
    WordInstance c = inst;
    c.word.letters.erase(c.word.letters.begin() + i);
    out.push_back(std::move(c));
  }
  for (std::size_t j = 0; j < inst.relations.size(); ++j) {
    if (inst.relations.size() > 1) {
      WordInstance c = inst;
      c.relations.erase(c.relations.begin() + j);
      out.push_back(std::move(c));
    }
    for (std::size_t i = 0; inst.relations[j].size() > 2 && i < inst.relations[j].size(); ++i) {
      WordInstance c = inst;
      c.relations[j].letters.erase(c.relations[j].letters.begin() + i);
      out.push_back(std::move(c));
    }
  }
  return out;
}

SystemInstance random_system(Rng& rng) {
  const std::size_t n = uniform(rng, 1, 6);
  const std::size_t m = uniform(rng, 1, 5);
  std::vector<PointMask> rels;
  for (std::size_t i = 0; i < m; ++i) {
    PointMask r = 0;
    const std::size_t size = uniform(rng, 1, std::min<std::size_t>(n, 3));
    while (static_cast<std::size_t>(std::popcount(r)) < size) r |= PointMask{1} << uniform(rng, 0, n - 1);
    rels.push_back(r);
  }
  return {SetSystem(n, rels)};
}

SystemInstance random_graph(Rng& rng) {
  const std::size_t n = uniform(rng, 1, 12);
  const std::size_t density = uniform(rng, 1, 7);
  std::vector<PointMask> rels;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (uniform(rng, 0, 9) < density) rels.push_back((PointMask{1} << u) | (PointMask{1} << v));
  return {SetSystem(n, rels)};
}

SetSystem drop_point(const SetSystem& s, std::size_t point) {
  const PointMask bit = PointMask{1} << (point - 1);
  const PointMask low = bit - 1;
  std::vector<PointMask> rels;
  for (PointMask r : s.relations())
    if (!(r & bit)) rels.push_back((r & low) | ((r >> 1) & ~low));
  return SetSystem(s.ground_size() - 1, rels);
}

std::vector<SystemInstance> shrink(const SystemInstance& inst) {
  std::vector<SystemInstance> out;
  const SetSystem& s = inst.system;
  for (std::size_t j = 0; j < s.relation_count(); ++j) {
    auto rels = s.relations();
    rels.erase(rels.begin() + j);
    out.push_back({SetSystem(s.ground_size(), rels)});
  }
  for (std::size_t p = 1; s.ground_size() > 1 && p <= s.ground_size(); ++p)
    out.push_back({drop_point(s, p)});
  return out;
}

template <class Instance, class Check>
Instance minimize(Instance inst, const Check& violates) {
  for (bool progress = true; progress;) {
    progress = false;
    for (Instance& candidate : shrink(inst)) {
      if (violates(candidate)) {
        inst = std::move(candidate);
        progress = true;
        break;
      }
    }
  }
  return inst;
}

struct TrialOutcome {
  bool skipped = false;
  std::optional<Finding> finding;
};

using WordCheck = std::function<std::optional<std::string>(const Word&, const RelationSet&)>;
using SystemCheck = std::function<std::optional<std::string>(const SetSystem&)>;

TrialOutcome word_trial(const WordInstance& inst, const WordCheck& check, const std::string& command) {
  auto run = [&](const WordInstance& i) -> std::optional<std::string> {
    try {
      return check(i.word, reduce_antichain(i.relations));
    } catch (const CapacityError&) {
      return std::nullopt;
    }
  };
  TrialOutcome out;
  std::optional<std::string> v;
  try {
    v = check(inst.word, reduce_antichain(inst.relations));
  } catch (const CapacityError&) {
    out.skipped = true;
    return out;
  }
  if (!v) return out;
  const WordInstance small = minimize(inst, [&](const WordInstance& i) { return run(i).has_value(); });
  out.finding = Finding{*run(small), command,
                        format_word_problem(small.alphabet, reduce_antichain(small.relations), small.word)};
  return out;
}

TrialOutcome system_trial(const SystemInstance& inst, const SystemCheck& check, const std::string& command) {
  auto run = [&](const SystemInstance& i) -> std::optional<std::string> {
    try {
      return check(i.system);
    } catch (const CapacityError&) {
      return std::nullopt;
    }
  };
  TrialOutcome out;
  std::optional<std::string> v;
  try {
    v = check(inst.system);
  } catch (const CapacityError&) {
    out.skipped = true;
    return out;
  }
  if (!v) return out;
  const SystemInstance small = minimize(inst, [&](const SystemInstance& i) { return run(i).has_value(); });
  out.finding = Finding{*run(small), command, format_system_problem(small.system)};
  return out;
}

TrialOutcome run_trial(FuzzScenario scenario, const FuzzOptions& o, std::uint64_t seed) {
  Rng rng(seed);
  const FieldSpec field = o.field;
  const std::size_t mb = o.max_basis;
  switch (scenario) {
    case FuzzScenario::AlgebraDichotomy:
      return word_trial(random_word_instance(rng, 12),
                        [&](const Word& w, const RelationSet& r) { return check_dichotomy(w, r, field, mb); },
                        "word-homology");
    case FuzzScenario::DyckPosition:
      return word_trial(random_word_instance(rng, 12),
                        [&](const Word& w, const RelationSet& r) { return check_dyck_position(w, r, field, mb); },
                        "word-homology");
    case FuzzScenario::SeriesPm1:
      return word_trial(random_word_instance(rng, 10),
                        [&](const Word& w, const RelationSet& r) { return check_series_word(w, r, mb); },
                        "series-invert");
    case FuzzScenario::OrderDichotomy:
      return system_trial(random_system(rng),
                          [&](const SetSystem& s) { return check_order_system(s, field, mb); },
                          "order-check");
    case FuzzScenario::GraphRules:
      return system_trial(random_graph(rng),
                          [&](const SetSystem& s) { return check_graph_rules(s, field, mb); },
                          "graph-reduce");
  }
  throw InternalError("unknown fuzz scenario");
}

} // namespace

FuzzReport run_fuzz(FuzzScenario scenario, const FuzzOptions& options) {
  std::vector<TrialOutcome> outcomes(options.trials);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (std::size_t i; !failed && (i = next++) < options.trials;) {
      try {
        outcomes[i] = run_trial(scenario, options, trial_seed(options.seed, i));
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };
  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(options.trials, 1)));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  FuzzReport report;
  report.scenario = scenario;
  report.trials = options.trials;
  for (const auto& o : outcomes) {
    if (o.skipped) {
      ++report.skipped;
      continue;
    }
    ++report.checked;
    if (o.finding) report.findings.push_back(*o.finding);
  }
  std::sort(report.findings.begin(), report.findings.end());
  report.findings.erase(std::unique(report.findings.begin(), report.findings.end()), report.findings.end());
  return report;
}

} // namespace monobar
