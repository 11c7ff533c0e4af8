#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "invsemi/factorization.hpp"
#include "invsemi/polynomial.hpp"
#include "invsemi/semigroup.hpp"

namespace invsemi {

struct AlphaEntry {
  Integer alpha = 0;  // least alpha with alpha n_i in <n_j : j != i>
  std::vector<ExponentVector> factorizations;  // of alpha n_i, without n_i
};

/// One entry per canonical generator. Throws NotApplicable for e < 2.
std::vector<AlphaEntry> alpha_table(const NumericalSemigroup& h_semigroup);

/// The data of the skew-symmetric 5x5 presentation of a symmetric,
/// non complete intersection, 4-generated H. Indices in the names refer to
/// the relabeled generators m_k = n_{permutation[k]}.
struct PfaffianStructure {
  std::array<std::size_t, 4> permutation{};  // relabeled k -> canonical index
  std::array<Integer, 4> alpha{};            // alpha_1..alpha_4, relabeled
  /// alpha_21, alpha_31, alpha_32, alpha_42, alpha_13, alpha_43, alpha_24,
  /// alpha_14.
  std::array<Integer, 8> alpha_off{};
  /// f_1..f_5 as x^lhs - x^rhs in relabeled coordinates.
  std::array<Binomial, 5> generators{};
  /// Entry (i, j): {sign, exponent}; sign 0 marks a zero entry.
  std::array<std::array<std::pair<int, ExponentVector>, 5>, 5> skew_matrix{};

  Integer a21() const { return alpha_off[0]; }
  Integer a31() const { return alpha_off[1]; }
  Integer a32() const { return alpha_off[2]; }
  Integer a42() const { return alpha_off[3]; }
  Integer a13() const { return alpha_off[4]; }
  Integer a43() const { return alpha_off[5]; }
  Integer a24() const { return alpha_off[6]; }
  Integer a14() const { return alpha_off[7]; }

  /// Relabeled exponent vector in canonical coordinates, and back.
  ExponentVector to_canonical(const ExponentVector& a) const;
  ExponentVector to_relabeled(const ExponentVector& a) const;
  /// Generators of the relabeled semigroup, m_k = n_{permutation[k]}.
  std::vector<Integer> relabeled_generators(const NumericalSemigroup& h_semigroup) const;
};

/// The structure for one relabeling, if the alpha_ij exist and the five
/// binomials generate I_H. Only needs e = 4, so it also answers for complete
/// intersections and non-symmetric H. Throws NotFourGenerated and
/// InvalidGenerator for a bad relabeling.
std::optional<PfaffianStructure> pfaffian_structure_with(const NumericalSemigroup& h_semigroup,
                                                         const std::array<std::size_t, 4>& permutation);

/// The lexicographically least relabeling that works. Throws
/// NotFourGenerated, NotSymmetric, IsCompleteIntersection, StructureNotFound.
PfaffianStructure pfaffian_structure(const NumericalSemigroup& h_semigroup);

/// Pf(M(i)) for the 4x4 minor without row and column i (0-based), in
/// relabeled coordinates.
Polynomial pfaffian_of_minor(const PfaffianStructure& structure, std::size_t i);

struct TwoFactorizationWitness {
  std::size_t index = 0;  // canonical i with exactly two factorizations of Fr + n_i
  std::array<ExponentVector, 2> factorizations;
  std::vector<std::size_t> all_indices;
};

/// Throws as pfaffian_structure, and NoWitness when no index has exactly two
/// factorizations.
TwoFactorizationWitness two_factorization_witness(const NumericalSemigroup& h_semigroup);

struct FourGorensteinCertificate {
  PfaffianStructure structure;
  // (a) the two expressions of Fr + m_1 are factorizations
  bool stated_factorizations = false;
  // (b) J_{Fr + m_1} against sum_{k >= -1} X_2^{a32-1-k a42} X_3^{a13-1-k a43}
  //     X_4^{a14-1+(k+1) a4}
  bool divisibility_branch = false;
  InversePolynomial predicted_j;  // relabeled coordinates
  bool j_matches = false;
  bool printed_j_matches = false;  // the formula as printed, k >= 0 only
  // (c) Fr + N = deg M_ij + deg f_i + deg f_j for nonzero entries
  bool degree_identity = false;
  // (d) no Fr + n_i has a unique factorization, plus the alpha conditions
  bool no_unique_factorization = false;
  bool apery_alpha_exists = false;      // each i has some j with alpha_j n_j in Ap(H, n_i)
  bool apery_alpha_unique = false;      // and it is unique
  bool restricted_factorization = false;  // unique factorization with mu_j < alpha_j
  bool apery_pattern = false;           // the map i -> j is a 4-cycle or two swaps
  bool alpha_products_distinct = false;
  // (e) mu(I_H) = 5
  bool mu_is_five = false;
  // Pfaffians of the minors reproduce +-f_i
  bool pfaffians_match = false;
  // mu(Ann(J_{Fr+n_i}) / (x_i)) at the witness index equals the Artinian
  // count, which is 3 or 5
  std::size_t witness_mu = 0;
  bool witness_mu_matches = false;

  bool holds() const {
    return stated_factorizations && j_matches && degree_identity && no_unique_factorization &&
           apery_alpha_exists && apery_alpha_unique && restricted_factorization && apery_pattern &&
           alpha_products_distinct && mu_is_five && pfaffians_match && witness_mu_matches;
  }
};

using Relabeling = std::optional<std::array<std::size_t, 4>>;

/// Throws as pfaffian_structure; Inconsistency when a clause fails. A given
/// relabeling is used when it fits, else the lex search decides.
FourGorensteinCertificate verify_4gor(const NumericalSemigroup& h_semigroup, const Relabeling& preferred = {});

/// Builds the certificate without throwing on failed clauses.
FourGorensteinCertificate check_4gor(const NumericalSemigroup& h_semigroup, const Relabeling& preferred = {});

/// The relabeling that lists the canonical generators in the given order.
Relabeling relabeling_of(const NumericalSemigroup& h_semigroup, const std::vector<Integer>& listed);

}  // namespace invsemi
