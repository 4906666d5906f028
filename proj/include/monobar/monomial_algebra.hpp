#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "monobar/aho_corasick.hpp"
#include "monobar/field.hpp"
#include "monobar/graded_complex.hpp"

namespace monobar {

using Letter = std::uint32_t;

/// Ordered list of distinct, nonempty symbol tokens.
class Alphabet {
public:
  Alphabet() = default;
  /// Throws InputError on an empty list or repeated tokens.
  explicit Alphabet(std::vector<std::string> tokens);
  /// Single-character tokens "a", "b", ... or "x", "y", "z" style.
  static Alphabet from_chars(std::string_view chars);

  std::size_t size() const { return tokens_.size(); }
  const std::string& token(Letter l) const { return tokens_.at(l); }
  std::optional<Letter> find(std::string_view token) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
  std::vector<std::string> tokens_;
};

/// Word over an alphabet, stored as letter indices. Ordered graded
/// lexicographically (shorter words first).
struct Word {
  std::vector<Letter> letters;

  Word() = default;
  Word(std::initializer_list<Letter> ls) : letters(ls) {}
  explicit Word(std::vector<Letter> ls) : letters(std::move(ls)) {}

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  Letter operator[](std::size_t i) const { return letters[i]; }

  /// Parses "xyzz" against an alphabet of single-character tokens.
  static Word parse(const Alphabet& alphabet, std::string_view chars);
  std::string render(const Alphabet& alphabet, std::string_view separator = "") const;

  friend bool operator==(const Word&, const Word&) = default;
  friend bool operator<(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.letters < b.letters;
  }
};

/// True iff needle occurs in haystack as a contiguous factor.
bool is_factor(const Word& needle, const Word& haystack);

/// Antichain of relation words (none a factor of another, all of length
/// at least 2) together with a matcher for them.
class RelationSet {
public:
  RelationSet();
  const std::vector<Word>& words() const { return words_; }
  std::size_t size() const { return words_.size(); }
  bool empty() const { return words_.empty(); }
  const AhoCorasick& matcher() const { return *matcher_; }

  friend bool operator==(const RelationSet& a, const RelationSet& b) { return a.words_ == b.words_; }

private:
  friend RelationSet reduce_antichain(std::vector<Word> words);
  explicit RelationSet(std::vector<Word> antichain);

  std::vector<Word> words_;
  std::shared_ptr<const AhoCorasick> matcher_;
};

/// Minimal antichain generating the same monomial ideal, sorted graded
/// lexicographically. Throws InputError on a word of length <= 1.
RelationSet reduce_antichain(std::vector<Word> words);

/// Occurrence of a relation in a word, as 1-based inclusive letter
/// positions [first, last].
struct Occurrence {
  std::size_t first;
  std::size_t last;
  std::size_t relation;

  friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

/// All occurrences, ordered by (first, last).
std::vector<Occurrence> occurrences(const Word& w, const RelationSet& relations);

bool is_zero_word(const Word& w, const RelationSet& relations);

/// Gap masks of the relation occurrences: bit j-1 stands for the gap
/// between letters j and j+1.
std::vector<std::uint64_t> occurrence_gap_masks(const Word& w, const RelationSet& relations);

/// Bar subcomplex B_w in cochain orientation: degree g holds the tensors
/// with g merged gaps (bar index n-g). Labels are merged-gap masks.
/// Empty word gives the empty complex. Throws CapacityError past max_basis.
GradedComplex bar_subcomplex(const Word& w, const RelationSet& relations,
                             std::size_t max_basis = kDefaultMaxBasis);

/// "x|yz|z" rendering of a bar basis element.
std::string render_bar_label(const Word& w, const Alphabet& alphabet, BasisLabel merged_gaps);

enum class DyckReason { UnusedLetter, NonIncreasing, LastNotN, ReachesEnd };
std::string_view to_string(DyckReason reason);

struct DyckResult {
  std::vector<std::size_t> ends;  // d_1 <= d_2 <= ...
  std::size_t r = 0;              // number of distinct ends
  bool exact = true;              // exactness forced by an unused letter
  DyckReason reason = DyckReason::UnusedLetter;
};

/// Generalized Dyck path: minimal zero prefixes started at 1, 2, d_1+1,
/// d_2+1, ... until an end reaches n. Marked exact when a letter lies in no
/// occurrence, when an end repeats, or when a start has no zero prefix.
/// A path that reaches n does not by itself make the complex non-exact.
DyckResult dyck_path(const Word& w, const RelationSet& relations);

struct Prediction {
  enum class Kind { Exact, Placed };
  Kind kind = Kind::Exact;
  std::size_t bar_degree = 0;   // r + 1
  std::size_t place = 0;  // n - r, counted from the top term B_n

  bool placed() const { return kind == Kind::Placed; }
  friend bool operator==(const Prediction&, const Prediction&) = default;
};

/// Exact when the Dyck path forces it; otherwise the degree at which the
/// homology sits if it is nonzero (a single letter always has homology 1).
Prediction predict_homology(const Word& w, const RelationSet& relations);

/// Homology of bar_subcomplex, indexed by cochain degree g.
HomologyProfile word_homology(const Word& w, const RelationSet& relations, const FieldSpec& field,
                              std::size_t max_basis = kDefaultMaxBasis);

/// Re-indexes a degree profile of a word of length n by bar index:
/// entry k (1 <= k <= n) is the homology of B_k; entry 0 is unused.
std::vector<std::size_t> by_bar_index(const HomologyProfile& profile, std::size_t n);

} // namespace monobar
