#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace monobar {

/// Multi-pattern matcher over a small integer alphabet with a dense
/// goto table. Symbols outside [0, alphabet_size) never match and send the
/// automaton back to the root.
class AhoCorasick {
public:
  using State = std::uint32_t;
  static constexpr State kRoot = 0;

  struct Match {
    std::size_t end;      // index one past the last matched symbol
    std::size_t pattern;  // index into the pattern list
  };

  AhoCorasick() = default;
  AhoCorasick(std::size_t alphabet_size, const std::vector<std::vector<std::uint32_t>>& patterns);

  std::size_t alphabet_size() const { return alphabet_size_; }
  std::size_t state_count() const { return output_.size(); }

  State step(State s, std::uint32_t symbol) const {
    if (symbol >= alphabet_size_) return kRoot;
    return goto_[s * alphabet_size_ + symbol];
  }
  /// True iff some pattern ends at this state (directly or via suffix links).
  bool accepting(State s) const { return !output_[s].empty(); }
  /// Patterns ending at this state, longest first.
  const std::vector<std::uint32_t>& outputs(State s) const { return output_[s]; }

  /// Every occurrence of every pattern in text, ordered by end position.
  std::vector<Match> find_all(std::span<const std::uint32_t> text) const;
  /// End (exclusive) of the shortest prefix of text that contains a
  /// pattern, or 0 if there is none.
  std::size_t first_match_end(std::span<const std::uint32_t> text) const;

private:
  std::size_t alphabet_size_ = 0;
  std::vector<State> goto_;
  std::vector<std::vector<std::uint32_t>> output_;
  std::vector<std::size_t> pattern_length_;
};

} // namespace monobar
