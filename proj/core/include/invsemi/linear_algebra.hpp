#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace invsemi {

using Rational = boost::multiprecision::cpp_rational;

/// Sparse vector over Q keyed by column index; zero entries are not stored.
using SparseVector = std::map<std::size_t, Rational>;

/// Incremental Gaussian elimination. Rows are kept reduced against each
/// other's pivots, so membership tests and rank are exact.
class RowEchelon {
 public:
  /// Reduces v against the current basis. Returns the residue (empty when v
  /// lies in the span).
  SparseVector reduce(SparseVector v) const;

  /// Adds v to the span; returns true when it was independent.
  bool insert(SparseVector v);

  bool contains(const SparseVector& v) const { return reduce(v).empty(); }
  std::size_t rank() const noexcept { return rows_.size(); }

 private:
  std::map<std::size_t, SparseVector> rows_;  // pivot column -> row with leading 1
};

/// Kernel of the linear map sending basis vector k to images[k]: returns a
/// basis of {c : sum c_k images[k] = 0}, each as a sparse vector over the
/// domain indices.
std::vector<SparseVector> kernel_basis(const std::vector<SparseVector>& images);

}  // namespace invsemi
