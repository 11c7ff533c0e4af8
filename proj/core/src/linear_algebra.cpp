#include "invsemi/linear_algebra.hpp"

namespace invsemi {

namespace {

// v -= factor * row
void axpy(SparseVector& v, const Rational& factor, const SparseVector& row) {
  for (const auto& [col, value] : row) {
    auto [it, inserted] = v.try_emplace(col, 0);
    it->second -= factor * value;
    if (it->second == 0) v.erase(it);
  }
}

}  // namespace

SparseVector RowEchelon::reduce(SparseVector v) const {
  // Pivots are processed in increasing column order; eliminating a pivot
  // only touches larger columns because each row starts at its pivot.
  auto it = v.begin();
  while (it != v.end()) {
    const auto row = rows_.find(it->first);
    if (row == rows_.end()) {
      ++it;
      continue;
    }
    const std::size_t col = it->first;
    const Rational factor = it->second;
    axpy(v, factor, row->second);
    it = v.upper_bound(col);
  }
  return v;
}

bool RowEchelon::insert(SparseVector v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  const std::size_t pivot = v.begin()->first;
  const Rational lead = v.begin()->second;
  for (auto& [col, value] : v) value /= lead;
  // Keep the basis fully reduced so that reduce() needs one pass.
  for (auto& [other_pivot, row] : rows_) {
    const auto hit = row.find(pivot);
    if (hit != row.end()) {
      const Rational factor = hit->second;
      axpy(row, factor, v);
    }
  }
  rows_.emplace(pivot, std::move(v));
  return true;
}

std::vector<SparseVector> kernel_basis(const std::vector<SparseVector>& images) {
  // Echelon rows over the image, each carrying the domain combination that
  // produced it.
  struct Row {
    SparseVector image;
    SparseVector combination;
  };
  std::map<std::size_t, Row> rows;
  std::vector<SparseVector> kernel;
  for (std::size_t k = 0; k < images.size(); ++k) {
    Row current{images[k], SparseVector{{k, Rational(1)}}};
    auto it = current.image.begin();
    while (it != current.image.end()) {
      const auto row = rows.find(it->first);
      if (row == rows.end()) {
        ++it;
        continue;
      }
      const std::size_t col = it->first;
      const Rational factor = it->second / row->second.image.at(col);
      axpy(current.image, factor, row->second.image);
      axpy(current.combination, factor, row->second.combination);
      it = current.image.upper_bound(col);
    }
    if (current.image.empty()) {
      kernel.push_back(std::move(current.combination));
    } else {
      const std::size_t pivot = current.image.begin()->first;
      rows.emplace(pivot, std::move(current));
    }
  }
  return kernel;
}

}  // namespace invsemi
