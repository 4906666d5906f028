#include "monobar/set_system.hpp"

#include <algorithm>
#include <bit>

#include "monobar/error.hpp"
#include "monobar/subset_complex.hpp"

namespace monobar {

std::vector<std::size_t> mask_points(PointMask m) {
  std::vector<std::size_t> out;
  while (m) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(m)) + 1);
    m &= m - 1;
  }
  return out;
}

std::string format_mask(PointMask m) {
  std::string out = "{";
  bool first = true;
  for (std::size_t p : mask_points(m)) {
    if (!first) out += ',';
    out += std::to_string(p);
    first = false;
  }
  return out + "}";
}

PointMask mask_of(const std::vector<std::size_t>& points) {
  PointMask m = 0;
  for (std::size_t p : points) {
    if (p == 0 || p > kMaxGround) throw InputError("point " + std::to_string(p) + " out of range");
    m |= PointMask{1} << (p - 1);
  }
  return m;
}

SetSystem::SetSystem(std::size_t n, std::vector<PointMask> relations) : n_(n) {
  if (n > kMaxGround)
    throw CapacityError("ground set of " + std::to_string(n) + " points exceeds " +
                        std::to_string(kMaxGround));
  for (PointMask r : relations) {
    if (r == 0) throw InputError("empty relation");
    if (r & ~ground_mask()) throw InputError("relation " + format_mask(r) + " leaves the ground set");
  }
  auto by_size = [](PointMask a, PointMask b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  };
  std::sort(relations.begin(), relations.end(), by_size);
  relations.erase(std::unique(relations.begin(), relations.end()), relations.end());
  for (PointMask r : relations) {
    bool redundant = std::any_of(relations_.begin(), relations_.end(),
                                 [&](PointMask k) { return (r & k) == k; });
    if (!redundant) relations_.push_back(r);
  }
}

std::size_t SetSystem::coverage(std::size_t point) const {
  const PointMask bit = PointMask{1} << (point - 1);
  return static_cast<std::size_t>(
      std::count_if(relations_.begin(), relations_.end(), [&](PointMask r) { return r & bit; }));
}

PointMask SetSystem::unused_points() const {
  PointMask used = 0;
  for (PointMask r : relations_) used |= r;
  return ground_mask() & ~used;
}

} // namespace monobar
