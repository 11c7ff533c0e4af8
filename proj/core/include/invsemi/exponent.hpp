#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "invsemi/integer.hpp"

namespace invsemi {

/// A point a = (a_1, ..., a_e) of N^e: the exponent of x^a in S or of X^a in
/// the inverse system. Ordered lexicographically.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t dim) : coords_(dim, 0) {}
  ExponentVector(std::initializer_list<Integer> coords) : coords_(coords) {}
  explicit ExponentVector(std::vector<Integer> coords) : coords_(std::move(coords)) {}

  static ExponentVector unit(std::size_t dim, std::size_t i) {
    ExponentVector v(dim);
    v.coords_.at(i) = 1;
    return v;
  }

  std::size_t size() const noexcept { return coords_.size(); }
  Integer operator[](std::size_t i) const { return coords_[i]; }
  Integer& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Integer>& coords() const noexcept { return coords_; }

  /// deg_H(a) = sum a_i n_i for the given generator weights.
  Integer degree(std::span<const Integer> weights) const;
  /// ord(a) = sum a_i.
  Integer order() const;
  bool is_zero() const;

  /// Componentwise a <= b, i.e. x^a divides x^b.
  bool divides(const ExponentVector& other) const;
  bool disjoint_support(const ExponentVector& other) const;

  ExponentVector operator+(const ExponentVector& other) const;
  /// Componentwise difference; caller guarantees other.divides(*this).
  ExponentVector operator-(const ExponentVector& other) const;

  /// Reorders coordinates: result[perm[i]] = (*this)[i].
  ExponentVector permuted(std::span<const std::size_t> perm) const;

  std::string to_string() const;

  auto operator<=>(const ExponentVector&) const = default;
  bool operator==(const ExponentVector&) const = default;

 private:
  std::vector<Integer> coords_;
};

struct ExponentVectorHash {
  std::size_t operator()(const ExponentVector& v) const noexcept;
};

}  // namespace invsemi
