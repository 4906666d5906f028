#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>

#include "monobar/bigint.hpp"
#include "monobar/error.hpp"

namespace monobar {

/// Mirror-pair coefficients of a length-2 combination differ.
class SymmetryError : public Error {
public:
  using Error::Error;
};

/// Linear combination of words over {x, y, z}, all of one length, with
/// nonnegative coefficients. Words are plain strings such as "xyzz".
class LetterCombo {
public:
  LetterCombo() = default;
  /// {word: 1}
  static LetterCombo monomial(const std::string& word);
  static LetterCombo power(char letter, std::size_t exponent);

  /// Throws InputError on a letter outside {x,y,z} or a length mismatch.
  void add(const std::string& word, const BigInt& coeff);

  bool empty() const { return terms_.empty(); }
  /// Common word length (0 when empty).
  std::size_t word_length() const { return length_; }
  const std::map<std::string, BigInt>& terms() const { return terms_; }
  BigInt coeff(const std::string& word) const;

  friend bool operator==(const LetterCombo&, const LetterCombo&) = default;

private:
  std::size_t length_ = 0;
  std::map<std::string, BigInt> terms_;
};

/// Pair-rewriting table r(ab) = sum of letters. The default leaves the
/// unspecified pairs xz, zx at z.
class RewriteTable {
public:
  static RewriteTable standard();
  /// Standard table with r(xz) = r(zx) = letter ('0' for zero).
  static RewriteTable with_xz(char letter);

  const std::string& image(const std::string& pair) const { return images_.at(pair); }
  /// Whether the pair is one the rules leave unspecified.
  static bool is_assumed(const std::string& pair) { return pair == "xz" || pair == "zx"; }

private:
  std::map<std::string, std::string> images_;
};

struct RewriteLog {
  bool consulted_assumed = false;  // r(xz) or r(zx) was used
};

/// w_1...w_{2m} -> r(w_1 w_2) r(w_3 w_4) ... r(w_{2m-1} w_{2m}), expanded
/// and extended linearly. Throws InputError on odd word length.
LetterCombo rewrite_step(const LetterCombo& c, const RewriteTable& table = RewriteTable::standard(),
                         RewriteLog* log = nullptr);

/// (a, b, c, p, q, r): coefficients of x^2, y^2, z^2, xy(=yx), xz(=zx),
/// yz(=zy). Throws InputError unless words have length 2, SymmetryError if
/// a mirror pair carries different coefficients.
std::array<BigInt, 6> coeff_vector(const LetterCombo& c);

struct RecurrenceState {
  std::size_t n = 1;
  BigInt a = 0, b = 1, c = 1, p = 0, q = 0, r = 1;

  static RecurrenceState initial() { return {}; }
  std::array<BigInt, 6> vector() const { return {a, b, c, p, q, r}; }

  friend bool operator==(const RecurrenceState&, const RecurrenceState&) = default;
};

/// a' = c^2, b' = (a+2q)^2, c' = (a+2p+2r)^2, p' = c(a+q),
/// q' = c(a+2p+2r), r' = (a+2q)(a+2p+2r).
RecurrenceState recurrence_step(const RecurrenceState& s);

/// State at index n (n >= 1), iterated from the initial state.
RecurrenceState recurrence_state(std::size_t n);

/// a_n + c_n + 2 p_n + 2 r_n. Throws InputError for n = 0.
BigInt recurrence_dims(std::size_t n);

/// coeff_vector of the n-fold rewrite of x^(2^(n+1)).
std::array<BigInt, 6> rewritten_power_vector(std::size_t n,
                                             const RewriteTable& table = RewriteTable::standard(),
                                             RewriteLog* log = nullptr);

} // namespace monobar
