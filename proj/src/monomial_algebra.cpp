#include "monobar/monomial_algebra.hpp"

#include <algorithm>
#include <set>

#include "monobar/error.hpp"
#include "monobar/subset_complex.hpp"

namespace monobar {

Alphabet::Alphabet(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
  if (tokens_.empty()) throw InputError("alphabet is empty");
  std::set<std::string> seen;
  for (const auto& t : tokens_) {
    if (t.empty()) throw InputError("alphabet token is empty");
    if (!seen.insert(t).second) throw InputError("alphabet token '" + t + "' repeated");
  }
}

Alphabet Alphabet::from_chars(std::string_view chars) {
  std::vector<std::string> tokens;
  for (char c : chars) tokens.emplace_back(1, c);
  return Alphabet(std::move(tokens));
}

std::optional<Letter> Alphabet::find(std::string_view token) const {
  for (std::size_t i = 0; i < tokens_.size(); ++i)
    if (tokens_[i] == token) return static_cast<Letter>(i);
  return std::nullopt;
}

Word Word::parse(const Alphabet& alphabet, std::string_view chars) {
  Word w;
  for (char c : chars) {
    auto l = alphabet.find(std::string_view(&c, 1));
    if (!l) throw InputError(std::string("letter '") + c + "' not in alphabet");
    w.letters.push_back(*l);
  }
  return w;
}

std::string Word::render(const Alphabet& alphabet, std::string_view separator) const {
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i > 0) out += separator;
    out += alphabet.token(letters[i]);
  }
  return out;
}

bool is_factor(const Word& needle, const Word& haystack) {
  return std::search(haystack.letters.begin(), haystack.letters.end(), needle.letters.begin(),
                     needle.letters.end()) != haystack.letters.end();
}

namespace {

std::shared_ptr<const AhoCorasick> build_matcher(const std::vector<Word>& words) {
  std::size_t alphabet_size = 0;
  std::vector<std::vector<std::uint32_t>> patterns;
  for (const auto& w : words) {
    for (Letter l : w.letters) alphabet_size = std::max<std::size_t>(alphabet_size, l + 1);
    patterns.push_back(w.letters);
  }
  return std::make_shared<const AhoCorasick>(alphabet_size, patterns);
}

} // namespace

RelationSet::RelationSet() : matcher_(build_matcher({})) {}

RelationSet::RelationSet(std::vector<Word> antichain)
    : words_(std::move(antichain)), matcher_(build_matcher(words_)) {}

RelationSet reduce_antichain(std::vector<Word> words) {
  for (const auto& w : words)
    if (w.size() <= 1)
      throw InputError("relation of length " + std::to_string(w.size()) +
                       " would kill a generator");
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  // Sorted by length, so a word can only contain earlier survivors.
  std::vector<Word> kept;
  for (auto& w : words) {
    bool redundant = std::any_of(kept.begin(), kept.end(),
                                 [&](const Word& k) { return is_factor(k, w); });
    if (!redundant) kept.push_back(std::move(w));
  }
  return RelationSet(std::move(kept));
}

std::vector<Occurrence> occurrences(const Word& w, const RelationSet& relations) {
  std::vector<Occurrence> out;
  for (const auto& m : relations.matcher().find_all(w.letters)) {
    const std::size_t len = relations.words()[m.pattern].size();
    out.push_back({m.end - len + 1, m.end, m.pattern});
  }
  std::sort(out.begin(), out.end(), [](const Occurrence& a, const Occurrence& b) {
    return a.first != b.first ? a.first < b.first : a.last < b.last;
  });
  return out;
}

bool is_zero_word(const Word& w, const RelationSet& relations) {
  return relations.matcher().first_match_end(w.letters) != 0;
}

std::vector<std::uint64_t> occurrence_gap_masks(const Word& w, const RelationSet& relations) {
  if (w.size() > kMaxGround + 1)
    throw CapacityError("word of length " + std::to_string(w.size()) + " has too many gaps");
  std::vector<std::uint64_t> masks;
  for (const auto& occ : occurrences(w, relations)) {
    std::uint64_t mask = 0;
    for (std::size_t gap = occ.first; gap < occ.last; ++gap) mask |= std::uint64_t{1} << (gap - 1);
    masks.push_back(mask);
  }
  return masks;
}

GradedComplex bar_subcomplex(const Word& w, const RelationSet& relations, std::size_t max_basis) {
  if (w.empty()) return {};
  const auto masks = occurrence_gap_masks(w, relations);
  return subset_complex(w.size() - 1, masks, max_basis);
}

std::string render_bar_label(const Word& w, const Alphabet& alphabet, BasisLabel merged_gaps) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0 && !(merged_gaps >> (i - 1) & 1)) out += '|';
    out += alphabet.token(w[i]);
  }
  return out;
}

std::string_view to_string(DyckReason reason) {
  switch (reason) {
    case DyckReason::UnusedLetter: return "unused_letter";
    case DyckReason::NonIncreasing: return "non_increasing";
    case DyckReason::LastNotN: return "last_not_n";
    case DyckReason::ReachesEnd: return "reaches_end";
  }
  return "?";
}

DyckResult dyck_path(const Word& w, const RelationSet& relations) {
  const std::size_t n = w.size();
  DyckResult result;

  std::vector<char> covered(n + 1, 0);
  for (const auto& occ : occurrences(w, relations))
    for (std::size_t p = occ.first; p <= occ.last; ++p) covered[p] = 1;
  const bool all_covered = std::all_of(covered.begin() + 1, covered.end(), [](char c) { return c; });

  auto minimal_zero_end = [&](std::size_t start) -> std::size_t {
    std::span<const Letter> tail(w.letters.data() + start - 1, n - start + 1);
    const std::size_t len = relations.matcher().first_match_end(tail);
    return len == 0 ? 0 : start - 1 + len;
  };

  DyckReason reason = DyckReason::LastNotN;
  for (std::size_t i = 0;; ++i) {
    const std::size_t start = i == 0 ? 1 : i == 1 ? 2 : result.ends[i - 2] + 1;
    const std::size_t end = start <= n ? minimal_zero_end(start) : 0;
    if (end == 0) {
      reason = DyckReason::LastNotN;
      break;
    }
    if (!result.ends.empty() && end <= result.ends.back()) {
      result.ends.push_back(end);
      reason = DyckReason::NonIncreasing;
      break;
    }
    result.ends.push_back(end);
    if (end == n) {
      reason = DyckReason::ReachesEnd;
      break;
    }
  }

  std::vector<std::size_t> distinct = result.ends;
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  result.r = distinct.size();

  if (!all_covered) reason = DyckReason::UnusedLetter;
  result.reason = reason;
  result.exact = reason != DyckReason::ReachesEnd;
  return result;
}

Prediction predict_homology(const Word& w, const RelationSet& relations) {
  const std::size_t n = w.size();
  if (n == 1) return {Prediction::Kind::Placed, 1, 1};
  const DyckResult dyck = dyck_path(w, relations);
  if (dyck.exact) return {};
  return {Prediction::Kind::Placed, dyck.r + 1, n - dyck.r};
}

HomologyProfile word_homology(const Word& w, const RelationSet& relations, const FieldSpec& field,
                              std::size_t max_basis) {
  return homology_dims(bar_subcomplex(w, relations, max_basis), field);
}

std::vector<std::size_t> by_bar_index(const HomologyProfile& profile, std::size_t n) {
  std::vector<std::size_t> out(n + 1, 0);
  for (std::size_t g = 0; g < profile.dims.size() && g < n; ++g) out[n - g] = profile.dims[g];
  return out;
}

} // namespace monobar
