#pragma once

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "skewhopf/rational.hpp"

namespace skewhopf {

/// Sparse row: (column, nonzero value) pairs sorted by column.
using SparseRow = std::vector<std::pair<std::uint32_t, Rational>>;

/// Sorts by column, merges duplicates and drops zeros.
SparseRow make_sparse_row(std::vector<std::pair<std::uint32_t, Rational>> entries);

/// Incremental exact Gaussian elimination. Rows are reduced against the
/// stored pivots on insertion; the rank is the number of stored pivots.
class RowEchelon {
 public:
  /// Returns true iff the row was independent of the rows inserted so far.
  bool insert(SparseRow row);
  std::size_t rank() const { return pivots_.size(); }

 private:
  // Keyed by leading column; each stored row has leading coefficient 1.
  std::unordered_map<std::uint32_t, SparseRow> pivots_;
};

}  // namespace skewhopf
