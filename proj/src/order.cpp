#include "monobar/order.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <string>
#include <utility>

#include "monobar/error.hpp"

namespace monobar {

std::vector<BasicPoint> find_basic_points(const SetSystem& s) {
  std::vector<BasicPoint> out;
  for (std::size_t p = 1; p <= s.ground_size(); ++p) {
    const PointMask bit = PointMask{1} << (p - 1);
    PointMask owner = 0;
    std::size_t hits = 0;
    for (PointMask r : s.relations())
      if (r & bit) {
        owner = r;
        ++hits;
      }
    if (hits == 1) out.push_back({p, owner});
  }
  return out;
}

SetSystem contract(const SetSystem& s, std::size_t point, ContractionRule rule) {
  std::optional<PointMask> owner;
  for (const auto& b : find_basic_points(s))
    if (b.point == point) owner = b.relation;
  if (!owner) throw InputError("point " + std::to_string(point) + " is not basic");
  const PointMask collapsed = *owner;

  // old point -> new point, for points outside the collapsed relation
  std::vector<std::size_t> remap(s.ground_size() + 1, 0);
  std::size_t next = 0;
  for (std::size_t p = 1; p <= s.ground_size(); ++p)
    if (!(collapsed >> (p - 1) & 1)) remap[p] = ++next;
  const std::size_t fresh = next + 1;
  const PointMask fresh_bit = PointMask{1} << (fresh - 1);

  auto translate = [&](PointMask m) {
    PointMask out = 0;
    for (std::size_t p : mask_points(m & ~collapsed)) out |= PointMask{1} << (remap[p] - 1);
    return out;
  };

  std::vector<PointMask> relations;
  bool met = false;
  for (PointMask r : s.relations()) {
    if (r == collapsed) continue;
    if (r & collapsed) {
      relations.push_back(translate(r) | (rule == ContractionRule::FreshPoint ? fresh_bit : 0));
      met = true;
    } else {
      relations.push_back(translate(r));
    }
  }
  if (met && rule == ContractionRule::FreshPoint) return SetSystem(fresh, std::move(relations));
  if (relations.empty() && next == 0) return SetSystem(1, {1});
  return SetSystem(next, std::move(relations));
}

bool is_one_point_system(const SetSystem& s) {
  return s.ground_size() == 1 && s.relations().size() == 1 && s.relations()[0] == 1;
}

namespace {

using Key = std::pair<std::size_t, std::vector<PointMask>>;

// Relabels points by their incidence signature so that systems differing
// only by a permutation of equivalent points share a key. Equal keys always
// mean isomorphic systems; the converse is not guaranteed.
Key relabeled_key(const SetSystem& s) {
  const std::size_t n = s.ground_size();
  std::vector<std::pair<std::vector<int>, std::size_t>> signature(n);
  for (std::size_t p = 1; p <= n; ++p) {
    std::vector<int> sizes;
    for (PointMask r : s.relations())
      if (r >> (p - 1) & 1) sizes.push_back(std::popcount(r));
    std::sort(sizes.begin(), sizes.end());
    signature[p - 1] = {std::move(sizes), p};
  }
  std::sort(signature.begin(), signature.end());
  std::vector<std::size_t> label(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) label[signature[i].second] = i;

  std::vector<PointMask> relations;
  for (PointMask r : s.relations()) {
    PointMask m = 0;
    for (std::size_t p : mask_points(r)) m |= PointMask{1} << label[p];
    relations.push_back(m);
  }
  std::sort(relations.begin(), relations.end());
  return {n, std::move(relations)};
}

class OrderSearch {
public:
  OrderSearch(std::size_t memo_limit, ContractionRule rule) : memo_limit_(memo_limit), rule_(rule) {}

  bool search(const SetSystem& s, std::vector<ContractionStep>& path) {
    if (is_one_point_system(s)) return true;
    std::set<PointMask> tried;
    for (const auto& b : find_basic_points(s)) {
      // the result depends on the relation, not on which of its points is used
      if (!tried.insert(b.relation).second) continue;
      SetSystem next = contract(s, b.point, rule_);
      Key key = relabeled_key(next);
      if (dead_.count(key)) continue;
      path.push_back({b.point, b.relation});
      if (search(next, path)) return true;
      path.pop_back();
      if (dead_.size() >= memo_limit_)
        throw CapacityError("order search memo table exceeds " + std::to_string(memo_limit_));
      dead_.insert(std::move(key));
    }
    return false;
  }

private:
  std::size_t memo_limit_;
  ContractionRule rule_;
  std::set<Key> dead_;
};

} // namespace

std::optional<OrderCertificate> is_order(const SetSystem& s, std::size_t memo_limit,
                                         ContractionRule rule) {
  if (s.ground_size() == 0) throw InputError("order check needs a nonempty ground set");
  OrderSearch search(memo_limit, rule);
  OrderCertificate cert;
  if (search.search(s, cert.steps)) return cert;
  return std::nullopt;
}

bool replay_certificate(const SetSystem& s, const OrderCertificate& certificate,
                        ContractionRule rule) {
  SetSystem current = s;
  for (const auto& step : certificate.steps) {
    const auto basics = find_basic_points(current);
    const bool valid = std::any_of(basics.begin(), basics.end(), [&](const BasicPoint& b) {
      return b.point == step.point && b.relation == step.relation;
    });
    if (!valid) return false;
    current = contract(current, step.point, rule);
  }
  return is_one_point_system(current);
}

bool private_point_everywhere(const SetSystem& s) {
  PointMask owned = 0;
  for (const auto& b : find_basic_points(s)) owned |= PointMask{1} << (b.point - 1);
  return std::all_of(s.relations().begin(), s.relations().end(),
                     [&](PointMask r) { return (r & owned) != 0; });
}

} // namespace monobar
