#include "monobar/aho_corasick.hpp"

#include <queue>

namespace monobar {

AhoCorasick::AhoCorasick(std::size_t alphabet_size,
                         const std::vector<std::vector<std::uint32_t>>& patterns)
    : alphabet_size_(alphabet_size) {
  constexpr State kNone = static_cast<State>(-1);
  goto_.assign(alphabet_size_, kNone);
  output_.emplace_back();

  // trie
  for (std::size_t p = 0; p < patterns.size(); ++p) {
    State s = kRoot;
    for (std::uint32_t symbol : patterns[p]) {
      if (symbol >= alphabet_size_) {
        s = kNone;
        break;
      }
      State& next = goto_[s * alphabet_size_ + symbol];
      if (next == kNone) {
        next = static_cast<State>(output_.size());
        output_.emplace_back();
        goto_.resize(goto_.size() + alphabet_size_, kNone);
      }
      s = goto_[s * alphabet_size_ + symbol];
    }
    if (s != kNone && !patterns[p].empty()) output_[s].push_back(static_cast<std::uint32_t>(p));
    pattern_length_.push_back(patterns[p].size());
  }

  // failure links, folded into a complete goto function
  std::vector<State> fail(output_.size(), kRoot);
  std::queue<State> queue;
  for (std::size_t a = 0; a < alphabet_size_; ++a) {
    State& next = goto_[a];
    if (next == kNone) {
      next = kRoot;
    } else {
      fail[next] = kRoot;
      queue.push(next);
    }
  }
  while (!queue.empty()) {
    const State s = queue.front();
    queue.pop();
    for (std::uint32_t out : output_[fail[s]]) output_[s].push_back(out);
    for (std::size_t a = 0; a < alphabet_size_; ++a) {
      State& next = goto_[s * alphabet_size_ + a];
      const State via_fail = goto_[fail[s] * alphabet_size_ + a];
      if (next == kNone) {
        next = via_fail;
      } else {
        fail[next] = via_fail;
        queue.push(next);
      }
    }
  }
}

std::vector<AhoCorasick::Match> AhoCorasick::find_all(std::span<const std::uint32_t> text) const {
  std::vector<Match> matches;
  if (output_.empty()) return matches;
  State s = kRoot;
  for (std::size_t i = 0; i < text.size(); ++i) {
    s = step(s, text[i]);
    for (std::uint32_t p : output_[s]) matches.push_back({i + 1, p});
  }
  return matches;
}

std::size_t AhoCorasick::first_match_end(std::span<const std::uint32_t> text) const {
  if (output_.empty()) return 0;
  State s = kRoot;
  for (std::size_t i = 0; i < text.size(); ++i) {
    s = step(s, text[i]);
    if (accepting(s)) return i + 1;
  }
  return 0;
}

} // namespace monobar
