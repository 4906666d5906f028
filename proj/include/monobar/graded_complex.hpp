#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "monobar/field.hpp"
#include "monobar/int_matrix.hpp"
#include "monobar/rank.hpp"

namespace monobar {

/// Canonical monomial encoding of a basis element: bit i-1 set means that
/// variable (or gap) i is present.
using BasisLabel = std::uint64_t;

/// Default cap on the total number of basis elements of a single complex.
inline constexpr std::size_t kDefaultMaxBasis = std::size_t{1} << 20;

/// Cochain complex concentrated in degrees 0..top_degree(). The differential
/// d_g maps degree g to degree g+1, so d_g has dim(g+1) rows and dim(g)
/// columns. All entries are +1 or -1.
class GradedComplex {
public:
  GradedComplex() = default;

  /// Throws StructuralError if a differential does not fit the basis sizes
  /// or carries an entry other than +-1.
  GradedComplex(std::vector<std::vector<BasisLabel>> basis,
                std::vector<IntMatrix> differentials);

  bool empty() const { return basis_.empty(); }
  std::size_t degree_count() const { return basis_.size(); }
  std::size_t top_degree() const { return basis_.empty() ? 0 : basis_.size() - 1; }

  std::size_t dim(std::size_t degree) const {
    return degree < basis_.size() ? basis_[degree].size() : 0;
  }
  std::vector<std::size_t> dims() const;
  std::size_t total_dim() const;

  const std::vector<BasisLabel>& labels(std::size_t degree) const { return basis_.at(degree); }
  const std::vector<std::vector<BasisLabel>>& basis() const { return basis_; }

  /// d_g for g < top_degree(); the map out of the top degree is zero and
  /// not stored.
  const IntMatrix& differential(std::size_t degree) const { return differentials_.at(degree); }
  const std::vector<IntMatrix>& differentials() const { return differentials_; }

  /// Copy with one differential replaced, bypassing the +-1 check on the
  /// value but not the shape check. Test and diagnostic use.
  GradedComplex with_differential(std::size_t degree, IntMatrix d) const;

  friend bool operator==(const GradedComplex&, const GradedComplex&) = default;

private:
  std::vector<std::vector<BasisLabel>> basis_;
  std::vector<IntMatrix> differentials_;
};

struct HomologyProfile {
  std::vector<std::size_t> dims;
  std::size_t total = 0;
  std::int64_t euler = 0;

  /// Profile from per-degree dims, with total and the alternating sum filled in.
  static HomologyProfile from_dims(std::vector<std::size_t> dims);

  std::size_t at(std::size_t degree) const { return degree < dims.size() ? dims[degree] : 0; }
  /// Index of the only nonzero degree, or -1 if there is none or several.
  long concentrated_degree() const;

  friend bool operator==(const HomologyProfile&, const HomologyProfile&) = default;
};

/// True iff every composite d_{g+1} * d_g vanishes over the integers.
/// Throws StructuralError when consecutive shapes do not match.
bool validate_complex(const GradedComplex& c);

/// dim ker d_g - rank d_{g-1} in every degree. Throws InternalError if a
/// dimension comes out negative, which only happens for a non-complex.
HomologyProfile homology_dims(const GradedComplex& c, const FieldSpec& field,
                              std::size_t rank_work_limit = kDefaultRankWorkLimit);

/// Alternating sum of basis dimensions by stored degree.
std::int64_t euler_characteristic(const GradedComplex& c);

} // namespace monobar
