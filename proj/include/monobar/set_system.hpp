#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace monobar {

/// Subset of a ground set {1..n}, n <= 63; bit i-1 stands for point i.
using PointMask = std::uint64_t;

/// Points of a mask as 1-based indices, ascending.
std::vector<std::size_t> mask_points(PointMask m);
/// "{1,2,5}"
std::string format_mask(PointMask m);
PointMask mask_of(const std::vector<std::size_t>& points);

/// Ground set {1..n} with an antichain of nonempty relation subsets. The
/// constructor keeps only the inclusion-minimal relations and sorts them
/// by (size, mask).
class SetSystem {
public:
  SetSystem() = default;
  /// Throws InputError on an empty relation or a point outside the ground
  /// set, CapacityError if n exceeds 63.
  SetSystem(std::size_t n, std::vector<PointMask> relations);

  std::size_t ground_size() const { return n_; }
  const std::vector<PointMask>& relations() const { return relations_; }
  std::size_t relation_count() const { return relations_.size(); }
  PointMask ground_mask() const { return n_ == 0 ? 0 : (~PointMask{0} >> (64 - n_)); }

  /// Relations containing the point (1-based).
  std::size_t coverage(std::size_t point) const;
  /// Points in no relation.
  PointMask unused_points() const;

  friend bool operator==(const SetSystem&, const SetSystem&) = default;

private:
  std::size_t n_ = 0;
  std::vector<PointMask> relations_;
};

} // namespace monobar
