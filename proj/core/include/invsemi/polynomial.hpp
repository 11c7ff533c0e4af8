#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "invsemi/exponent.hpp"

namespace invsemi {

/// Sparse integer combination of monomials in e variables. Shared storage for
/// polynomials of S = k[x_1..x_e] and inverse polynomials of E = k[X_1..X_e].
/// Zero coefficients are never stored.
class TermMap {
 public:
  using Map = std::map<ExponentVector, Integer>;

  explicit TermMap(std::size_t dim = 0) : dim_(dim) {}

  std::size_t dim() const noexcept { return dim_; }
  const Map& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }

  /// Coefficient of the given exponent (0 when absent).
  Integer coefficient(const ExponentVector& a) const;

  void add_term(const ExponentVector& a, Integer coefficient);

  /// Common deg_H of all terms, or nullopt when the terms disagree or the map
  /// is empty.
  std::optional<Integer> homogeneous_degree(std::span<const Integer> weights) const;

  /// Largest total order among the terms (0 when empty).
  Integer max_order() const;

  bool operator==(const TermMap&) const = default;

 protected:
  std::string render(char var) const;
  void check_dim(const TermMap& other) const;

  std::size_t dim_;
  Map terms_;
};

/// Element of the polynomial ring S.
class Polynomial : public TermMap {
 public:
  using TermMap::TermMap;

  static Polynomial monomial(const ExponentVector& a, Integer coefficient = 1);
  /// x^a - x^b.
  static Polynomial binomial(const ExponentVector& a, const ExponentVector& b);

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator-() const;

  /// "x1^3 - x3*x4".
  std::string to_string() const { return render('x'); }
};

/// Element of the inverse system E, acted on by S through contraction.
class InversePolynomial : public TermMap {
 public:
  using TermMap::TermMap;

  static InversePolynomial monomial(const ExponentVector& a, Integer coefficient = 1);

  InversePolynomial operator+(const InversePolynomial& other) const;
  InversePolynomial operator-(const InversePolynomial& other) const;
  InversePolynomial scaled(Integer factor) const;

  /// Ordinary product in E (same variables), e.g. X^c * J.
  InversePolynomial operator*(const InversePolynomial& other) const;

  /// Product over disjoint variable blocks: the result lives in
  /// dim() + other.dim() variables, this polynomial in the first block.
  InversePolynomial block_product(const InversePolynomial& other) const;

  /// Reorders variables: coordinate i moves to perm[i].
  InversePolynomial permuted(std::span<const std::size_t> perm) const;

  /// "X2^10*X3 + X4^20", terms lex-descending. The zero polynomial is "0".
  std::string to_string() const { return render('X'); }

  /// Inverse of to_string. Accepts '+'/'-' separated terms, '*' between
  /// factors, optional integer coefficients, and variables X1..Xdim (any
  /// letter followed by an index is accepted as a variable name).
  static InversePolynomial parse(std::string_view text, std::size_t dim);
};

/// Contraction x^a o X^b = X^{b-a} when a <= b, else 0.
InversePolynomial contract(const ExponentVector& a, const InversePolynomial& j);

/// Bilinear extension of the contraction action.
InversePolynomial apply(const Polynomial& p, const InversePolynomial& j);

}  // namespace invsemi
