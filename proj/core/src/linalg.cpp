#include "skewhopf/linalg.hpp"

#include <algorithm>

namespace skewhopf {

SparseRow make_sparse_row(std::vector<std::pair<std::uint32_t, Rational>> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseRow row;
  for (auto& [col, value] : entries) {
    if (!row.empty() && row.back().first == col) {
      row.back().second += value;
      if (row.back().second.is_zero()) row.pop_back();
    } else if (!value.is_zero()) {
      row.emplace_back(col, std::move(value));
    }
  }
  return row;
}

namespace {

// row - factor * pivot, both sorted.
SparseRow subtract_scaled(const SparseRow& row, const Rational& factor, const SparseRow& pivot) {
  SparseRow out;
  out.reserve(row.size() + pivot.size());
  std::size_t a = 0;
  std::size_t b = 0;
  while (a < row.size() || b < pivot.size()) {
    if (b == pivot.size() || (a < row.size() && row[a].first < pivot[b].first)) {
      out.push_back(row[a++]);
    } else if (a == row.size() || pivot[b].first < row[a].first) {
      out.emplace_back(pivot[b].first, -(factor * pivot[b].second));
      ++b;
    } else {
      Rational v = row[a].second - factor * pivot[b].second;
      if (!v.is_zero()) out.emplace_back(row[a].first, std::move(v));
      ++a;
      ++b;
    }
  }
  return out;
}

}  // namespace

bool RowEchelon::insert(SparseRow row) {
  while (!row.empty()) {
    auto it = pivots_.find(row.front().first);
    if (it == pivots_.end()) {
      const Rational lead = row.front().second;
      for (auto& entry : row) entry.second /= lead;
      const auto col = row.front().first;
      pivots_.emplace(col, std::move(row));
      return true;
    }
    const Rational factor = row.front().second;
    row = subtract_scaled(row, factor, it->second);
  }
  return false;
}

}  // namespace skewhopf
