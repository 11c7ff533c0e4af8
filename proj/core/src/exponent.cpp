#include "invsemi/exponent.hpp"

#include <sstream>

namespace invsemi {

Integer ExponentVector::degree(std::span<const Integer> weights) const {
  if (weights.size() != coords_.size())
    fail(ErrorCode::DimensionMismatch, "exponent vector and weights differ in length");
  Integer d = 0;
  for (std::size_t i = 0; i < coords_.size(); ++i)
    d = checked_add(d, checked_mul(coords_[i], weights[i]));
  return d;
}

Integer ExponentVector::order() const {
  Integer s = 0;
  for (Integer c : coords_) s = checked_add(s, c);
  return s;
}

bool ExponentVector::is_zero() const {
  for (Integer c : coords_)
    if (c != 0) return false;
  return true;
}

bool ExponentVector::divides(const ExponentVector& other) const {
  if (other.size() != size()) fail(ErrorCode::DimensionMismatch, "exponent vectors differ in length");
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (coords_[i] > other.coords_[i]) return false;
  return true;
}

bool ExponentVector::disjoint_support(const ExponentVector& other) const {
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (coords_[i] != 0 && other.coords_[i] != 0) return false;
  return true;
}

ExponentVector ExponentVector::operator+(const ExponentVector& other) const {
  if (other.size() != size()) fail(ErrorCode::DimensionMismatch, "exponent vectors differ in length");
  ExponentVector r(*this);
  for (std::size_t i = 0; i < coords_.size(); ++i) r.coords_[i] = checked_add(r.coords_[i], other.coords_[i]);
  return r;
}

ExponentVector ExponentVector::operator-(const ExponentVector& other) const {
  if (other.size() != size()) fail(ErrorCode::DimensionMismatch, "exponent vectors differ in length");
  ExponentVector r(*this);
  for (std::size_t i = 0; i < coords_.size(); ++i) r.coords_[i] -= other.coords_[i];
  return r;
}

ExponentVector ExponentVector::permuted(std::span<const std::size_t> perm) const {
  if (perm.size() != size()) fail(ErrorCode::DimensionMismatch, "permutation length mismatch");
  ExponentVector r(size());
  for (std::size_t i = 0; i < size(); ++i) r.coords_[perm[i]] = coords_[i];
  return r;
}

std::string ExponentVector::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) out << (i ? "," : "") << coords_[i];
  out << ')';
  return out.str();
}

std::size_t ExponentVectorHash::operator()(const ExponentVector& v) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (Integer c : v.coords()) {
    h ^= static_cast<std::size_t>(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace invsemi
