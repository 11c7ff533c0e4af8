#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "invsemi/factorization.hpp"
#include "invsemi/polynomial.hpp"
#include "invsemi/semigroup.hpp"

namespace invsemi {

/// An ordering of the generators with d_i = gcd(n_1, ..., n_{i-1}) such that
/// n_i / d_{i+1} lies in <n_1/d_i, ..., n_{i-1}/d_i> for i >= 2.
struct FreenessWitness {
  std::vector<std::size_t> ordering;  // indices into the canonical generators
  std::vector<Integer> gcd_chain;     // d_2, ..., d_{e+1}
  Integer telescopic_frobenius = 0;   // sum (d_i/d_{i+1} - 1) n_i - n_1
};

/// The lexicographically least witness ordering, if H is free. Checks the
/// telescopic Frobenius formula (Inconsistency on mismatch).
std::optional<FreenessWitness> is_free(const NumericalSemigroup& h_semigroup);

struct MonomialCriterion {
  std::optional<FreenessWitness> witness;
  /// Indices i with J_{H, Fr + n_i} a monomial.
  std::vector<std::size_t> monomial_indices;
  bool equivalence_holds() const { return witness.has_value() == !monomial_indices.empty(); }
};

/// For symmetric H, records freeness and which J_{H, Fr + n_i} are
/// monomials. Free does not imply a monomial one: <10,15,32,48>. Throws
/// NotSymmetric.
MonomialCriterion monomial_criterion(const NumericalSemigroup& h_semigroup);

/// At most p - 1 of the given generators lie in any ideal generated by p
/// variables.
bool variable_ideal_bound_holds(const BinomialIdealPresentation& presentation, std::size_t e);

/// alpha_1, ..., alpha_e (canonical order) with every J_{H, Fr + n_i} the
/// monomial prod_{j != i} X_j^{alpha_j - 1}, alpha_i n_i = d for all i,
/// alphas pairwise coprime and n_j = prod_{i != j} alpha_i. Absent otherwise.
std::optional<std::vector<Integer>> ci_same_degree(const NumericalSemigroup& h_semigroup);

/// <prod_{i != j} alpha_i : j>, checked to round-trip through
/// ci_same_degree. Throws AlphaTooSmall, NotCoprimeAlphas, NotApplicable
/// for fewer than two alphas.
NumericalSemigroup construct_from_alphas(const std::vector<Integer>& alphas);

struct HecCertificate {
  std::vector<Integer> defined_generators;  // as listed by the definition
  NumericalSemigroup h;
  Integer predicted_frobenius = 0;
  InversePolynomial predicted_j;  // J_{H, Fr + e + c}
  bool generators_minimal = false;
  bool symmetric = false;
  bool multiplicity_matches = false;
  bool frobenius_matches = false;
  bool j_matches = false;
  bool holds() const {
    return generators_minimal && symmetric && multiplicity_matches && frobenius_matches && j_matches;
  }
};

/// H_{e,c} with its predicted Frobenius number and J, each compared with the
/// direct computation. Throws BothOdd, NotApplicable for e < 2 or c < 1.
HecCertificate check_H_ec(Integer e, Integer c);

/// check_H_ec, throwing Inconsistency when a prediction fails.
HecCertificate construct_H_ec(Integer e, Integer c);

struct ShapeTag {
  Integer multiplicity_offset = 0;  // n_1 - e, in {1, 2, 3}
  std::string variant;              // "1", "2", "3", "4", "5" or "6b"
  /// Variables of each term of J_{H, Fr + n_1}, 1-based, with repetition.
  std::vector<std::vector<std::size_t>> pair_matching;
  Integer order = 0;  // ord J_{H, Fr + n_1}
  /// False when J has the shape only up to relabeling, e.g. X_3^3 in place
  /// of X_2^3; the pair-sum identities are checked only for exact matches.
  bool exact_pattern = true;
};

/// Matches J_{H, Fr + n_1} against the shapes possible for n_1 <= e + 3 and
/// checks the pair-sum identities. Throws NotSymmetric,
/// MultiplicityOutOfRange, NoShapeMatch or Inconsistency.
ShapeTag classify_small_multiplicity(const NumericalSemigroup& h_semigroup);

/// n_1 >= e + s - 1 with s = ord J_{H, Fr + n_1}, for symmetric H.
bool order_bound_holds(const NumericalSemigroup& h_semigroup);

}  // namespace invsemi
