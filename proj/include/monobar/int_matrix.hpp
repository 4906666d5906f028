#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace monobar {

struct MatrixEntry {
  std::size_t row;
  std::size_t col;
  std::int64_t value;

  friend bool operator==(const MatrixEntry&, const MatrixEntry&) = default;
};

/// Sparse integer matrix stored as (row, col, value) triplets sorted by
/// (row, col). Zero values and duplicate positions are rejected.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}
  /// Sorts the entries and validates the invariants; throws InputError.
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<MatrixEntry> entries);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<MatrixEntry>& entries() const { return entries_; }
  std::size_t nonzeros() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }

  std::int64_t at(std::size_t row, std::size_t col) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<MatrixEntry> entries_;
};

/// Exact integer product lhs * rhs. Throws StructuralError on a shape
/// mismatch.
IntMatrix multiply(const IntMatrix& lhs, const IntMatrix& rhs);

} // namespace monobar
