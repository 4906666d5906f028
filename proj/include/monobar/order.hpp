#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "monobar/set_system.hpp"

namespace monobar {

struct BasicPoint {
  std::size_t point;     // 1-based
  PointMask relation;    // the only relation containing it

  friend bool operator==(const BasicPoint&, const BasicPoint&) = default;
};

/// Every point lying in exactly one relation, with that relation.
std::vector<BasicPoint> find_basic_points(const SetSystem& s);

/// Substitution: R is replaced by the operation it composes, so its points
/// disappear and every other relation loses its points in R. FreshPoint:
/// R collapses to a fresh last point, which relations meeting R gain; if no
/// relation meets R its points just disappear.
enum class ContractionRule { Substitution, FreshPoint };

/// Contracts the unique relation R through a basic point. Points outside R
/// keep their order. Under either rule a system consisting of R alone
/// becomes the one-point system. Throws InputError if the point is not
/// basic.
SetSystem contract(const SetSystem& s, std::size_t point,
                   ContractionRule rule = ContractionRule::Substitution);

/// ({1}, {{1}})
bool is_one_point_system(const SetSystem& s);

struct ContractionStep {
  std::size_t point;    // in the coordinates of the system it is applied to
  PointMask relation;

  friend bool operator==(const ContractionStep&, const ContractionStep&) = default;
};

struct OrderCertificate {
  std::vector<ContractionStep> steps;
};

inline constexpr std::size_t kDefaultOrderMemoLimit = std::size_t{1} << 20;

/// Depth-first search over contraction choices through basic systems,
/// memoizing dead ends by a relabeled form. Returns a certificate iff the
/// one-point system is reachable. Throws InputError on an empty ground
/// set, CapacityError when the memo table outgrows memo_limit.
std::optional<OrderCertificate> is_order(const SetSystem& s,
                                         std::size_t memo_limit = kDefaultOrderMemoLimit,
                                         ContractionRule rule = ContractionRule::Substitution);

/// Replays the certificate from s: every step must contract a basic point
/// of the current system through its unique relation, and the last system
/// must be the one-point system.
bool replay_certificate(const SetSystem& s, const OrderCertificate& certificate,
                        ContractionRule rule = ContractionRule::Substitution);

/// Every relation owns a point that no other relation contains.
bool private_point_everywhere(const SetSystem& s);

} // namespace monobar
