#pragma once

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "monobar/monomial_algebra.hpp"
#include "monobar/rooted_tree.hpp"
#include "monobar/set_system.hpp"

namespace monobar {

/// Parsed problem file. Line-oriented, '#' starts a comment, tokens are
/// whitespace separated:
///
///   alphabet <tok> <tok> ...
///   relation <tok> <tok> ...        (repeatable)
///   word <tok> <tok> ...
///   ground <n>
///   rel <i> <i> ...                 (repeatable, after ground)
///   tree
///   node <id> arity <k> parent <id|root>
///   treerel <id> <id> ...
///
/// A file holds exactly one kind of problem.
struct ProblemFile {
  enum class Kind { Word, Algebra, System, Tree };

  Kind kind = Kind::Algebra;
  std::optional<Alphabet> alphabet;
  RelationSet relations;
  std::optional<Word> word;
  std::optional<SetSystem> system;
  std::optional<RootedTree> tree;
  std::vector<std::vector<std::size_t>> tree_relations;  // node indices
};

/// Throws InputError with a line number on malformed input.
ProblemFile parse_problem(std::istream& in);
ProblemFile parse_problem_text(const std::string& text);

std::string format_word_problem(const Alphabet& alphabet, const RelationSet& relations,
                                const std::optional<Word>& word);
std::string format_system_problem(const SetSystem& s);

} // namespace monobar
