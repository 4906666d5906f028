#include "monobar/int_matrix.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "monobar/error.hpp"

namespace monobar {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<MatrixEntry> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(), [](const MatrixEntry& a, const MatrixEntry& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& e = entries_[i];
    if (e.row >= rows_ || e.col >= cols_)
      throw InputError("matrix entry (" + std::to_string(e.row) + "," + std::to_string(e.col) +
                       ") out of range");
    if (e.value == 0) throw InputError("matrix stores an explicit zero");
    if (i > 0 && entries_[i - 1].row == e.row && entries_[i - 1].col == e.col)
      throw InputError("duplicate matrix entry");
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  std::vector<MatrixEntry> entries;
  entries.reserve(n);
  for (std::size_t i = 0; i < n; ++i) entries.push_back({i, i, 1});
  return IntMatrix(n, n, std::move(entries));
}

std::int64_t IntMatrix::at(std::size_t row, std::size_t col) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), MatrixEntry{row, col, 0},
                             [](const MatrixEntry& a, const MatrixEntry& b) {
                               return a.row != b.row ? a.row < b.row : a.col < b.col;
                             });
  if (it != entries_.end() && it->row == row && it->col == col) return it->value;
  return 0;
}

IntMatrix multiply(const IntMatrix& lhs, const IntMatrix& rhs) {
  if (lhs.cols() != rhs.rows())
    throw StructuralError("cannot multiply " + std::to_string(lhs.rows()) + "x" +
                          std::to_string(lhs.cols()) + " by " + std::to_string(rhs.rows()) + "x" +
                          std::to_string(rhs.cols()));
  // rhs rows as slices of its row-sorted entry list
  std::vector<std::size_t> row_start(rhs.rows() + 1, 0);
  for (const auto& e : rhs.entries()) ++row_start[e.row + 1];
  for (std::size_t r = 0; r < rhs.rows(); ++r) row_start[r + 1] += row_start[r];

  std::map<std::pair<std::size_t, std::size_t>, std::int64_t> acc;
  for (const auto& a : lhs.entries()) {
    for (std::size_t k = row_start[a.col]; k < row_start[a.col + 1]; ++k) {
      const auto& b = rhs.entries()[k];
      acc[{a.row, b.col}] += a.value * b.value;
    }
  }
  std::vector<MatrixEntry> out;
  for (const auto& [pos, value] : acc)
    if (value != 0) out.push_back({pos.first, pos.second, value});
  return IntMatrix(lhs.rows(), rhs.cols(), std::move(out));
}

} // namespace monobar
