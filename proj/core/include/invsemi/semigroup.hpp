#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "invsemi/integer.hpp"

namespace invsemi {

struct SemigroupInvariants {
  Integer frobenius = -1;
  Integer genus = 0;
  std::vector<Integer> pseudo_frobenius;  // ascending
  std::size_t type = 1;
  bool is_symmetric = true;
  bool is_almost_symmetric = true;

  bool operator==(const SemigroupInvariants&) const = default;
};

/// Least element of H in each residue class modulo `modulus`, ascending.
struct AperySet {
  Integer modulus = 0;
  std::vector<Integer> elements;
};

/// A numerical semigroup given by its minimal generating system
/// n_1 < n_2 < ... < n_e. Instances are immutable; all invariants are
/// computed on construction.
class NumericalSemigroup {
 public:
  /// Largest multiplicity accepted (the Apéry table has n_1 entries).
  static constexpr Integer kMaxMultiplicity = Integer{1} << 24;

  /// Canonicalizes `raw`: sorts, drops duplicates and redundant generators.
  /// Throws EmptyInput, InvalidGenerator (a value < 1), GcdNotOne, TooLarge.
  static NumericalSemigroup from_generators(std::span<const Integer> raw);
  static NumericalSemigroup from_generators(std::initializer_list<Integer> raw) {
    return from_generators(std::span<const Integer>(raw.begin(), raw.size()));
  }

  /// Comma-separated generators, whitespace ignored ("41, 99,70,53").
  static NumericalSemigroup parse(std::string_view text);

  const std::vector<Integer>& generators() const noexcept { return generators_; }
  Integer generator(std::size_t i) const { return generators_.at(i); }
  std::size_t embedding_dimension() const noexcept { return generators_.size(); }
  Integer multiplicity() const noexcept { return generators_.front(); }

  /// True when the raw input was already a minimal system (duplicates and
  /// order aside).
  bool input_was_minimal() const noexcept { return input_was_minimal_; }

  bool contains(Integer n) const noexcept {
    if (n < 0) return false;
    if (n > invariants_.frobenius) return true;
    if (!small_members_.empty()) return small_members_[static_cast<std::size_t>(n)] != 0;
    return apery_mod_multiplicity_[static_cast<std::size_t>(n % multiplicity())] <= n;
  }

  /// n <=_H m, i.e. m - n lies in H.
  bool leq(Integer n, Integer m) const noexcept { return m >= n && contains(m - n); }

  const SemigroupInvariants& invariants() const noexcept { return invariants_; }
  Integer frobenius() const noexcept { return invariants_.frobenius; }
  Integer genus() const noexcept { return invariants_.genus; }
  const std::vector<Integer>& pseudo_frobenius() const noexcept {
    return invariants_.pseudo_frobenius;
  }
  std::size_t type() const noexcept { return invariants_.type; }
  bool is_symmetric() const noexcept { return invariants_.is_symmetric; }
  bool is_almost_symmetric() const noexcept { return invariants_.is_almost_symmetric; }

  /// Ap(H, n_1) indexed by residue modulo n_1.
  const std::vector<Integer>& apery_by_residue() const noexcept {
    return apery_mod_multiplicity_;
  }

  /// Ap(H, h) for h in H_+. Throws ZeroModulus, NotInSemigroup.
  AperySet apery(Integer h) const;

  std::string to_string() const;

  bool operator==(const NumericalSemigroup& other) const noexcept {
    return generators_ == other.generators_;
  }

 private:
  NumericalSemigroup() = default;
  void compute_invariants();

  std::vector<Integer> generators_;
  std::vector<Integer> apery_mod_multiplicity_;
  std::vector<std::uint8_t> small_members_;  // H ∩ [0, Fr] when Fr is small
  SemigroupInvariants invariants_;
  bool input_was_minimal_ = true;
};

/// Ap(H, m) as a residue table: least combination of `generators` in each
/// class mod `modulus`, or kUnreachable. Generators need not be minimal or
/// coprime.
inline constexpr Integer kUnreachable = std::numeric_limits<Integer>::max();
std::vector<Integer> residue_table(std::span<const Integer> generators, Integer modulus);

/// Adds one generator to a residue table in place (round-robin update).
void add_to_residue_table(std::vector<Integer>& table, Integer generator);

}  // namespace invsemi
