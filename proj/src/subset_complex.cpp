#include "monobar/subset_complex.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "monobar/error.hpp"

namespace monobar {

namespace {

bool admissible(std::uint64_t s, std::span<const std::uint64_t> forbidden) {
  for (std::uint64_t f : forbidden)
    if ((s & f) == f) return false;
  return true;
}

void check_ground(std::size_t ground) {
  if (ground > kMaxGround)
    throw CapacityError("ground set of " + std::to_string(ground) + " points exceeds " +
                        std::to_string(kMaxGround));
}

// Admissible sets are closed under taking subsets, so extending in
// increasing element order and pruning at the first inadmissible set
// visits each admissible set exactly once.
template <class Visit>
bool enumerate(std::size_t ground, std::span<const std::uint64_t> forbidden, std::uint64_t s,
               std::size_t next, Visit& visit) {
  if (!visit(s)) return false;
  for (std::size_t j = next; j < ground; ++j) {
    const std::uint64_t t = s | (std::uint64_t{1} << j);
    if (!admissible(t, forbidden)) continue;
    if (!enumerate(ground, forbidden, t, j + 1, visit)) return false;
  }
  return true;
}

} // namespace

std::size_t count_admissible(std::size_t ground, std::span<const std::uint64_t> forbidden,
                             std::size_t limit) {
  check_ground(ground);
  if (!admissible(0, forbidden)) return 0;
  std::size_t count = 0;
  auto visit = [&](std::uint64_t) { return ++count <= limit; };
  enumerate(ground, forbidden, 0, 0, visit);
  return count;
}

GradedComplex subset_complex(std::size_t ground, std::span<const std::uint64_t> forbidden,
                             std::size_t max_basis) {
  check_ground(ground);
  if (!admissible(0, forbidden)) return {};

  std::vector<std::vector<BasisLabel>> basis;
  std::size_t count = 0;
  auto visit = [&](std::uint64_t s) {
    if (++count > max_basis) return false;
    const auto g = static_cast<std::size_t>(std::popcount(s));
    if (basis.size() <= g) basis.resize(g + 1);
    basis[g].push_back(s);
    return true;
  };
  if (!enumerate(ground, forbidden, 0, 0, visit))
    throw CapacityError("complex exceeds the work limit of " + std::to_string(max_basis) +
                        " basis elements");
  for (auto& level : basis) std::sort(level.begin(), level.end());

  std::vector<IntMatrix> differentials;
  for (std::size_t g = 0; g + 1 < basis.size(); ++g) {
    const auto& source = basis[g];
    const auto& target = basis[g + 1];
    std::vector<MatrixEntry> entries;
    for (std::size_t col = 0; col < source.size(); ++col) {
      const std::uint64_t s = source[col];
      for (std::size_t j = 0; j < ground; ++j) {
        const std::uint64_t bit = std::uint64_t{1} << j;
        if (s & bit) continue;
        const std::uint64_t t = s | bit;
        auto it = std::lower_bound(target.begin(), target.end(), t);
        if (it == target.end() || *it != t) continue;
        const int above = std::popcount(j + 1 < 64 ? s >> (j + 1) : 0);
        entries.push_back({static_cast<std::size_t>(it - target.begin()), col,
                           above % 2 == 0 ? 1 : -1});
      }
    }
    differentials.emplace_back(target.size(), source.size(), std::move(entries));
  }
  return GradedComplex(std::move(basis), std::move(differentials));
}

} // namespace monobar
