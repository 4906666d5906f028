#pragma once
// Slow, independent reference implementations for the tests.

#include <cstdint>
#include <string>
#include <vector>

namespace oracle {

using Mask = std::uint64_t;
using Dense = std::vector<std::vector<long long>>;

/// Rank of a dense integer matrix over GF(p) (p > 0) or the rationals (p = 0).
std::size_t rank(const Dense& m, std::uint32_t p);

/// Homology dims, by subset size, of the complex spanned by the subsets of
/// {0..n-1} containing no forbidden mask, with d(S) = sum over j not in S
/// of (-1)^{#{i in S : i < j}} (S + j).
std::vector<std::size_t> subset_homology(std::size_t n, const std::vector<Mask>& forbidden,
                                         std::uint32_t p);
std::vector<std::size_t> subset_dims(std::size_t n, const std::vector<Mask>& forbidden);

/// Words are strings over single-character letters.
/// Gap masks (bit j-1 = gap between letters j and j+1) of all relation
/// occurrences, found by plain substring search.
std::vector<Mask> occurrence_gaps(const std::string& w, const std::vector<std::string>& rels);

/// Bar homology of w indexed by bar index k = 1..n (entry 0 unused).
std::vector<std::size_t> bar_homology(const std::string& w, const std::vector<std::string>& rels,
                                      std::uint32_t p);
/// Basis dims of the bar complex by bar index.
std::vector<std::size_t> bar_dims(const std::string& w, const std::vector<std::string>& rels);

/// Coefficient of w in the inverse of the Hilbert series, by the block
/// decomposition of w into consecutive zero-covering pieces.
long long inverse_coefficient_dp(const std::string& w, const std::vector<std::string>& rels);
/// Same coefficient through the right-inverse recursion S(w) = -sum S(u) h(v).
long long inverse_coefficient_right(const std::string& w, const std::vector<std::string>& rels);

bool is_zero(const std::string& w, const std::vector<std::string>& rels);

/// Graded product of two dim vectors.
std::vector<std::size_t> convolve(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b);
std::vector<std::size_t> trim(std::vector<std::size_t> v);

/// Order test by exhaustive search over contraction sequences (no memo),
/// contracting a relation by deleting its points from every relation.
bool is_order(std::size_t n, const std::vector<Mask>& relations);

/// Reference recurrence in 64-bit arithmetic (n <= 4).
struct State {
  long long a, b, c, p, q, r;
};
State recurrence(std::size_t n);

} // namespace oracle
