#pragma once

#include <cstddef>

#include "monobar/field.hpp"
#include "monobar/int_matrix.hpp"

namespace monobar {

/// Largest rows*cols accepted by rank() unless the caller overrides it.
inline constexpr std::size_t kDefaultRankWorkLimit = std::size_t{1} << 40;

/// Rank of m over the given field. Sparse elimination with Markowitz
/// pivoting; over the rationals rows are combined fraction-free and divided
/// by their content, so no fractions or floating point appear.
/// Throws CapacityError if rows*cols exceeds work_limit.
std::size_t rank(const IntMatrix& m, const FieldSpec& field,
                 std::size_t work_limit = kDefaultRankWorkLimit);

} // namespace monobar
