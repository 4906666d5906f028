#pragma once

#include <cstddef>
#include <map>
#include <ostream>

#include "monobar/bigint.hpp"
#include "monobar/monomial_algebra.hpp"

namespace monobar {

/// Default cap on the number of words a series computation may touch.
inline constexpr std::size_t kDefaultSeriesWorkLimit = std::size_t{1} << 22;

/// Noncommutative power series truncated at word length N, with integer
/// coefficients. Only nonzero coefficients are stored.
class NCSeries {
public:
  NCSeries(std::size_t alphabet_size, std::size_t truncation)
      : alphabet_size_(alphabet_size), truncation_(truncation) {}

  std::size_t alphabet_size() const { return alphabet_size_; }
  std::size_t truncation() const { return truncation_; }

  /// Zero for words that are not stored.
  BigInt coeff(const Word& w) const;
  /// Stores c at w (erasing on zero). Throws InputError if w is longer
  /// than the truncation or uses a letter outside the alphabet.
  void set(const Word& w, BigInt c);

  /// Nonzero terms in graded lexicographic order.
  const std::map<Word, BigInt>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  friend bool operator==(const NCSeries&, const NCSeries&) = default;

private:
  std::size_t alphabet_size_;
  std::size_t truncation_;
  std::map<Word, BigInt> terms_;
};

/// Hilbert series of the monomial algebra: coefficient 1 on the empty word
/// and on every nonzero word of length <= N. Words are enumerated with
/// zero-prefix pruning; throws CapacityError past work_limit words.
NCSeries hilbert_truncated(const Alphabet& alphabet, const RelationSet& relations, std::size_t N,
                           std::size_t work_limit = kDefaultSeriesWorkLimit);

/// The S with s*S = 1 up to the truncation degree, by the prefix recursion
/// S(w) = -sum_{w = u v, u nonempty} s(u) S(v). Throws InputError unless
/// the constant term is 1, CapacityError past work_limit words.
NCSeries invert_series(const NCSeries& s, std::size_t work_limit = kDefaultSeriesWorkLimit);

/// Coefficient of w in the inverse of s, evaluating the recursion on the
/// suffixes of w only.
BigInt inverse_coefficient(const NCSeries& s, const Word& w);

struct EulerCrosscheck {
  BigInt coeff;                 // coefficient of w in 1/R
  std::int64_t alternating_sum; // sum_k (-1)^k dim B_k(w)
};

/// Both sides of the identity between the inverted Hilbert series and the
/// bar complex of w. The Hilbert series is evaluated on the factors of w.
EulerCrosscheck euler_crosscheck(const Word& w, const RelationSet& relations,
                                 std::size_t max_basis = kDefaultMaxBasis);

/// "word<TAB>coefficient" lines in graded lexicographic order, the empty
/// word written as 1.
void write_series(std::ostream& out, const NCSeries& s, const Alphabet& alphabet);

} // namespace monobar
