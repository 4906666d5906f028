#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "monobar/field.hpp"
#include "monobar/graded_complex.hpp"
#include "monobar/monomial_algebra.hpp"
#include "monobar/set_system.hpp"

namespace monobar {

// Property checks shared by the fuzzer and the CLI commands. Each returns a
// description of the violation, or nothing when the property holds.

/// Total homology in {0,1}, and zero exactly when the basis is even.
std::optional<std::string> check_dichotomy(const Word& w, const RelationSet& relations,
                                           const FieldSpec& field, std::size_t max_basis);
/// Nonzero homology sits at bar degree r+1, and words the Dyck path marks
/// exact have zero homology.
std::optional<std::string> check_dyck_position(const Word& w, const RelationSet& relations,
                                               const FieldSpec& field, std::size_t max_basis);
/// Coefficient of w in the inverted Hilbert series is -1, 0 or 1 and equals
/// the alternating bar-dimension sum.
std::optional<std::string> check_series_word(const Word& w, const RelationSet& relations,
                                             std::size_t max_basis);
/// An order has total homology in {0,1} and a certificate that replays; a
/// covered system with a private point in every relation is an order.
std::optional<std::string> check_order_system(const SetSystem& s, const FieldSpec& field,
                                              std::size_t max_basis);
/// The reduction strategy agrees with the Grassmann oracle, degree by
/// degree. The system must be quadratic.
std::optional<std::string> check_graph_rules(const SetSystem& s, const FieldSpec& field,
                                             std::size_t max_basis);

enum class FuzzScenario { AlgebraDichotomy, DyckPosition, SeriesPm1, OrderDichotomy, GraphRules };

std::string_view to_string(FuzzScenario scenario);
std::optional<FuzzScenario> parse_scenario(std::string_view name);
std::vector<FuzzScenario> all_scenarios();

struct FuzzOptions {
  std::uint64_t seed = 1;
  std::size_t trials = 1000;
  FieldSpec field = FieldSpec::default_field();
  std::size_t max_basis = kDefaultMaxBasis;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct Finding {
  std::string violation;
  std::string command;   // CLI command that replays it
  std::string problem;   // minimized problem file
  friend bool operator==(const Finding&, const Finding&) = default;
  friend auto operator<=>(const Finding&, const Finding&) = default;
};

struct FuzzReport {
  FuzzScenario scenario = FuzzScenario::AlgebraDichotomy;
  std::size_t trials = 0;
  std::size_t checked = 0;
  std::size_t skipped = 0;          // capacity errors
  std::vector<Finding> findings;    // sorted, deduplicated
};

/// Instance size bounds:
///   algebra-dichotomy, dyck-position: alphabet <= 3, |w| <= 12, <= 3 relations of length 2..4
///   series-pm1: alphabet <= 3, |w| <= 10, <= 3 relations of length 2..4
///   order-dichotomy: ground <= 6, <= 5 relations
///   graph-rules: <= 12 vertices
FuzzReport run_fuzz(FuzzScenario scenario, const FuzzOptions& options);

/// Seed of trial i, independent of scheduling.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

} // namespace monobar
