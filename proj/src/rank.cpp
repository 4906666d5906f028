#include "monobar/rank.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "monobar/bigint.hpp"
#include "monobar/error.hpp"

namespace monobar {

namespace {

struct Overflow {};

// Modular arithmetic; pivot rows are used unnormalized and targets are
// updated as target - (t / a) * pivot.
struct PrimeOps {
  using Value = std::uint32_t;
  std::uint64_t p;

  Value convert(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p);
    if (r < 0) r += static_cast<std::int64_t>(p);
    return static_cast<Value>(r);
  }
  static bool is_zero(Value v) { return v == 0; }

  Value inverse(Value a) const {
    std::uint64_t result = 1, base = a, e = p - 2;
    while (e) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return static_cast<Value>(result);
  }

  struct Scales {
    Value factor;
  };
  Scales scales(Value pivot, Value target) const {
    return {static_cast<Value>(std::uint64_t{target} * inverse(pivot) % p)};
  }
  // target_scaled - factor * pivot_value
  Value combine(const Scales&, Value target, Value pivot_value, const Scales& s) const {
    std::uint64_t sub = std::uint64_t{s.factor} * pivot_value % p;
    return static_cast<Value>((target + p - sub) % p);
  }
  Value target_only(const Scales&, Value target) const { return target; }
  Value pivot_only(Value pivot_value, const Scales& s) const {
    return static_cast<Value>((p - std::uint64_t{s.factor} * pivot_value % p) % p);
  }
  template <class Row>
  void normalize(Row&) const {}
};

// Fraction-free integer elimination: target <- (a/g) target - (t/g) pivot,
// followed by division of the row by its content.
template <class V>
struct IntegerOps {
  using Value = V;

  static Value convert(std::int64_t v) { return Value(v); }
  static bool is_zero(const Value& v) { return v == 0; }

  static Value mul(const Value& a, const Value& b) {
    if constexpr (std::is_same_v<Value, std::int64_t>) {
      Value r;
      if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
      return r;
    } else {
      return a * b;
    }
  }
  static Value sub(const Value& a, const Value& b) {
    if constexpr (std::is_same_v<Value, std::int64_t>) {
      Value r;
      if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
      return r;
    } else {
      return a - b;
    }
  }
  static Value gcd(const Value& a, const Value& b) {
    if constexpr (std::is_same_v<Value, std::int64_t>) {
      if (a == INT64_MIN || b == INT64_MIN) throw Overflow{};
      return std::gcd(a, b);
    } else {
      return boost::multiprecision::gcd(a, b);
    }
  }

  struct Scales {
    Value target_scale;
    Value pivot_scale;
  };
  static Scales scales(const Value& pivot, const Value& target) {
    Value g = gcd(pivot, target);
    return {pivot / g, target / g};
  }
  static Value combine(const Scales& s, const Value& target, const Value& pivot_value,
                       const Scales&) {
    return sub(mul(s.target_scale, target), mul(s.pivot_scale, pivot_value));
  }
  static Value target_only(const Scales& s, const Value& target) {
    return mul(s.target_scale, target);
  }
  static Value pivot_only(const Value& pivot_value, const Scales& s) {
    return sub(Value(0), mul(s.pivot_scale, pivot_value));
  }
  template <class Row>
  static void normalize(Row& row) {
    if (row.empty()) return;
    Value content = 0;
    for (const auto& [col, v] : row) {
      content = gcd(content, v);
      if (content == 1) return;
    }
    if (content < 0) content = -content;
    if (content > 1)
      for (auto& entry : row) entry.second /= content;
  }
};

template <class Ops>
std::size_t sparse_rank(const IntMatrix& m, const Ops& ops) {
  using Value = typename Ops::Value;
  using Row = std::vector<std::pair<std::uint32_t, Value>>;

  const std::size_t nrows = m.rows();
  const std::size_t ncols = m.cols();
  std::vector<Row> rows(nrows);
  for (const auto& e : m.entries()) {
    Value v = ops.convert(e.value);
    if (!Ops::is_zero(v)) rows[e.row].emplace_back(static_cast<std::uint32_t>(e.col), v);
  }

  std::vector<std::uint32_t> col_count(ncols, 0);
  std::vector<std::vector<std::uint32_t>> col_rows(ncols);
  for (std::uint32_t r = 0; r < nrows; ++r)
    for (const auto& [c, v] : rows[r]) {
      ++col_count[c];
      col_rows[c].push_back(r);
    }

  using HeapItem = std::pair<std::size_t, std::uint32_t>;
  std::priority_queue<HeapItem, std::vector<HeapItem>, std::greater<>> heap;
  std::vector<char> active(nrows, 1);
  for (std::uint32_t r = 0; r < nrows; ++r) heap.emplace(rows[r].size(), r);

  auto find_col = [](const Row& row, std::uint32_t col) {
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const auto& entry, std::uint32_t c) { return entry.first < c; });
    return (it != row.end() && it->first == col) ? it : row.end();
  };

  std::vector<std::uint32_t> seen(nrows, 0);
  std::uint32_t epoch = 0;
  std::size_t rank = 0;
  Row merged;

  while (!heap.empty()) {
    auto [nnz, r] = heap.top();
    heap.pop();
    if (!active[r] || nnz != rows[r].size()) continue;
    active[r] = 0;
    if (nnz == 0) continue;

    // Markowitz: the sparsest row, and in it the column touching fewest rows.
    const Row& pivot_row = rows[r];
    std::uint32_t pivot_col = pivot_row.front().first;
    for (const auto& [c, v] : pivot_row)
      if (col_count[c] < col_count[pivot_col]) pivot_col = c;
    const Value pivot_value = find_col(pivot_row, pivot_col)->second;

    ++rank;
    for (const auto& [c, v] : pivot_row) --col_count[c];

    ++epoch;
    std::vector<std::uint32_t> targets;
    for (std::uint32_t t : col_rows[pivot_col]) {
      if (!active[t] || seen[t] == epoch) continue;
      seen[t] = epoch;
      if (find_col(rows[t], pivot_col) != rows[t].end()) targets.push_back(t);
    }

    for (std::uint32_t t : targets) {
      Row& target = rows[t];
      const auto sc = ops.scales(pivot_value, find_col(target, pivot_col)->second);
      merged.clear();
      std::size_t i = 0, j = 0;
      while (i < target.size() || j < pivot_row.size()) {
        if (j == pivot_row.size() || (i < target.size() && target[i].first < pivot_row[j].first)) {
          merged.emplace_back(target[i].first, ops.target_only(sc, target[i].second));
          ++i;
        } else if (i == target.size() || pivot_row[j].first < target[i].first) {
          Value v = ops.pivot_only(pivot_row[j].second, sc);
          if (!Ops::is_zero(v)) {
            merged.emplace_back(pivot_row[j].first, v);
            ++col_count[pivot_row[j].first];
            col_rows[pivot_row[j].first].push_back(t);
          }
          ++j;
        } else {
          Value v = ops.combine(sc, target[i].second, pivot_row[j].second, sc);
          if (!Ops::is_zero(v))
            merged.emplace_back(target[i].first, v);
          else
            --col_count[target[i].first];
          ++i;
          ++j;
        }
      }
      ops.normalize(merged);
      target.swap(merged);
      heap.emplace(target.size(), t);
    }
  }
  return rank;
}

} // namespace

std::size_t rank(const IntMatrix& m, const FieldSpec& field, std::size_t work_limit) {
  if (m.rows() != 0 && m.cols() > work_limit / m.rows())
    throw CapacityError("matrix " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                        " exceeds the rank work limit");
  if (m.is_zero()) return 0;
  if (!field.is_rational()) return sparse_rank(m, PrimeOps{field.characteristic()});
  try {
    return sparse_rank(m, IntegerOps<std::int64_t>{});
  } catch (const Overflow&) {
    return sparse_rank(m, IntegerOps<BigInt>{});
  }
}

} // namespace monobar
