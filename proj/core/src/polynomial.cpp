#include "invsemi/polynomial.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace invsemi {

Integer TermMap::coefficient(const ExponentVector& a) const {
  auto it = terms_.find(a);
  return it == terms_.end() ? 0 : it->second;
}

void TermMap::add_term(const ExponentVector& a, Integer coefficient) {
  if (a.size() != dim_)
    fail(ErrorCode::DimensionMismatch, "term " + a.to_string() + " outside " + std::to_string(dim_) + " variables");
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(a, coefficient);
  if (inserted) return;
  it->second = checked_add(it->second, coefficient);
  if (it->second == 0) terms_.erase(it);
}

std::optional<Integer> TermMap::homogeneous_degree(std::span<const Integer> weights) const {
  std::optional<Integer> degree;
  for (const auto& [a, c] : terms_) {
    const Integer d = a.degree(weights);
    if (degree && *degree != d) return std::nullopt;
    degree = d;
  }
  return degree;
}

Integer TermMap::max_order() const {
  Integer best = 0;
  for (const auto& [a, c] : terms_) best = std::max(best, a.order());
  return best;
}

void TermMap::check_dim(const TermMap& other) const {
  if (other.dim_ != dim_)
    fail(ErrorCode::DimensionMismatch,
         "polynomials in " + std::to_string(dim_) + " and " + std::to_string(other.dim_) + " variables");
}

std::string TermMap::render(char var) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [a, c] = *it;
    const Integer magnitude = c < 0 ? -c : c;
    if (first)
      out << (c < 0 ? "-" : "");
    else
      out << (c < 0 ? " - " : " + ");
    first = false;

    bool wrote = false;
    if (magnitude != 1 || a.is_zero()) {
      out << magnitude;
      wrote = true;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      if (wrote) out << '*';
      out << var << (i + 1);
      if (a[i] != 1) out << '^' << a[i];
      wrote = true;
    }
  }
  return out.str();
}

Polynomial Polynomial::monomial(const ExponentVector& a, Integer coefficient) {
  Polynomial p(a.size());
  p.add_term(a, coefficient);
  return p;
}

Polynomial Polynomial::binomial(const ExponentVector& a, const ExponentVector& b) {
  if (a.size() != b.size()) fail(ErrorCode::DimensionMismatch, "binomial sides differ in length");
  Polynomial p(a.size());
  p.add_term(a, 1);
  p.add_term(b, -1);
  return p;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  check_dim(other);
  Polynomial r(*this);
  for (const auto& [a, c] : other.terms_) r.add_term(a, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  check_dim(other);
  Polynomial r(*this);
  for (const auto& [a, c] : other.terms_) r.add_term(a, -c);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(dim_);
  for (const auto& [a, c] : terms_) r.add_term(a, -c);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  check_dim(other);
  Polynomial r(dim_);
  for (const auto& [a, c] : terms_)
    for (const auto& [b, d] : other.terms_) r.add_term(a + b, checked_mul(c, d));
  return r;
}

InversePolynomial InversePolynomial::monomial(const ExponentVector& a, Integer coefficient) {
  InversePolynomial p(a.size());
  p.add_term(a, coefficient);
  return p;
}

InversePolynomial InversePolynomial::operator+(const InversePolynomial& other) const {
  check_dim(other);
  InversePolynomial r(*this);
  for (const auto& [a, c] : other.terms_) r.add_term(a, c);
  return r;
}

InversePolynomial InversePolynomial::operator-(const InversePolynomial& other) const {
  check_dim(other);
  InversePolynomial r(*this);
  for (const auto& [a, c] : other.terms_) r.add_term(a, -c);
  return r;
}

InversePolynomial InversePolynomial::scaled(Integer factor) const {
  InversePolynomial r(dim_);
  for (const auto& [a, c] : terms_) r.add_term(a, checked_mul(c, factor));
  return r;
}

InversePolynomial InversePolynomial::operator*(const InversePolynomial& other) const {
  check_dim(other);
  InversePolynomial r(dim_);
  for (const auto& [a, c] : terms_)
    for (const auto& [b, d] : other.terms_) r.add_term(a + b, checked_mul(c, d));
  return r;
}

InversePolynomial InversePolynomial::block_product(const InversePolynomial& other) const {
  InversePolynomial r(dim_ + other.dim_);
  for (const auto& [a, c] : terms_) {
    for (const auto& [b, d] : other.terms_) {
      std::vector<Integer> coords(a.coords());
      coords.insert(coords.end(), b.coords().begin(), b.coords().end());
      r.add_term(ExponentVector(std::move(coords)), checked_mul(c, d));
    }
  }
  return r;
}

InversePolynomial InversePolynomial::permuted(std::span<const std::size_t> perm) const {
  InversePolynomial r(dim_);
  for (const auto& [a, c] : terms_) r.add_term(a.permuted(perm), c);
  return r;
}

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
  Integer v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
    fail(ErrorCode::InvalidGenerator, "cannot parse '" + std::string(whole) + "' as an inverse polynomial");
  return v;
}

}  // namespace

InversePolynomial InversePolynomial::parse(std::string_view text, std::size_t dim) {
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  InversePolynomial result(dim);
  if (compact == "0") return result;

  std::size_t pos = 0;
  while (pos < compact.size()) {
    Integer sign = 1;
    if (compact[pos] == '+' || compact[pos] == '-') {
      sign = compact[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      fail(ErrorCode::InvalidGenerator, "expected '+' or '-' in '" + std::string(text) + "'");
    }
    std::size_t end = compact.find_first_of("+-", pos);
    if (end == std::string::npos) end = compact.size();
    const std::string_view term = std::string_view(compact).substr(pos, end - pos);
    if (term.empty()) fail(ErrorCode::InvalidGenerator, "empty term in '" + std::string(text) + "'");

    Integer coefficient = sign;
    ExponentVector exponent(dim);
    std::size_t start = 0;
    while (start <= term.size()) {
      std::size_t stop = term.find('*', start);
      if (stop == std::string_view::npos) stop = term.size();
      const std::string_view factor = term.substr(start, stop - start);
      if (factor.empty()) fail(ErrorCode::InvalidGenerator, "empty factor in '" + std::string(text) + "'");
      if (std::isalpha(static_cast<unsigned char>(factor[0]))) {
        const std::size_t caret = factor.find('^');
        const Integer index = parse_integer(factor.substr(1, caret == std::string_view::npos ? std::string_view::npos : caret - 1), text);
        const Integer power = caret == std::string_view::npos ? 1 : parse_integer(factor.substr(caret + 1), text);
        if (index < 1 || static_cast<std::size_t>(index) > dim)
          fail(ErrorCode::DimensionMismatch, "variable index " + std::to_string(index) + " outside 1.." + std::to_string(dim));
        if (power < 0) fail(ErrorCode::InvalidGenerator, "negative exponent in '" + std::string(text) + "'");
        exponent[static_cast<std::size_t>(index - 1)] = checked_add(exponent[static_cast<std::size_t>(index - 1)], power);
      } else {
        coefficient = checked_mul(coefficient, parse_integer(factor, text));
      }
      start = stop + 1;
    }
    result.add_term(exponent, coefficient);
    pos = end;
  }
  return result;
}

InversePolynomial contract(const ExponentVector& a, const InversePolynomial& j) {
  if (a.size() != j.dim()) fail(ErrorCode::DimensionMismatch, "monomial and inverse polynomial differ in variables");
  InversePolynomial r(j.dim());
  for (const auto& [b, c] : j.terms())
    if (a.divides(b)) r.add_term(b - a, c);
  return r;
}

InversePolynomial apply(const Polynomial& p, const InversePolynomial& j) {
  if (p.dim() != j.dim()) fail(ErrorCode::DimensionMismatch, "polynomial and inverse polynomial differ in variables");
  InversePolynomial r(j.dim());
  for (const auto& [a, c] : p.terms())
    for (const auto& [b, d] : j.terms())
      if (a.divides(b)) r.add_term(b - a, checked_mul(c, d));
  return r;
}

}  // namespace invsemi
