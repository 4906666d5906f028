#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "monobar/graded_complex.hpp"

namespace monobar {

inline constexpr std::size_t kMaxGround = 63;

/// Number of subsets of {1..ground} that contain no forbidden mask, or
/// limit+1 as soon as the count exceeds limit.
std::size_t count_admissible(std::size_t ground, std::span<const std::uint64_t> forbidden,
                             std::size_t limit);

/// The complex whose degree-g basis is the g-element subsets of
/// {1..ground} containing no forbidden mask, with
/// d(e_S) = sum over j not in S of (-1)^{#{i in S : i > j}} e_{S+j}.
/// This is both the Grassmann quotient complex and, on gap sets, the bar
/// subcomplex of a word. Throws CapacityError past max_basis elements.
GradedComplex subset_complex(std::size_t ground, std::span<const std::uint64_t> forbidden,
                             std::size_t max_basis = kDefaultMaxBasis);

} // namespace monobar
