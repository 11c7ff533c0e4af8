#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "invsemi/factorization.hpp"
#include "invsemi/polynomial.hpp"
#include "invsemi/semigroup.hpp"

namespace invsemi {

/// J_{H,h}: the sum of X^a over all factorizations a of h. Zero when h is
/// not in H. Throws BoundExceeded past `limit` terms.
InversePolynomial inverse_polynomial(const NumericalSemigroup& h_semigroup, Integer h,
                                     std::size_t limit = std::numeric_limits<std::size_t>::max());

/// Generators and colength of Ann_S(J) for an inverse polynomial J.
struct AnnihilatorPresentation {
  std::vector<ExponentVector> monomial_generators;  // antichain, lex ascending
  std::vector<Binomial> binomial_generators;        // x^lhs - x^rhs
  Integer colength = 0;                             // dim_k S/Ann_S(J)
  std::vector<Integer> degree_set;                  // Deg(S/Ann) when J = J_{H,m}
};

/// Ann_S(J_{H,m}) = I_H + (x^a : deg a not <=_H m). The colength is
/// #{h in H : m - h in H}. Throws NotInSemigroup.
AnnihilatorPresentation annihilator_of_semigroup_J(const NumericalSemigroup& h_semigroup, Integer m);

/// Deg(S/Ann_S(J_{H,m})) = {h in H : m - h in H}, ascending.
std::vector<Integer> degree_set(const NumericalSemigroup& h_semigroup, Integer m);

/// Ann_S(J) for an arbitrary nonzero J, by exact linear algebra on the
/// contraction module S o J.
struct GeneralAnnihilator {
  AnnihilatorPresentation presentation;  // binomial degrees are total orders
  /// True when the monomials and +-1 binomials found generate all of
  /// Ann_S(J), verified by comparing colengths. Annihilators that need other
  /// coefficients are reported with complete = false.
  bool complete = false;
};
GeneralAnnihilator annihilator_general(const InversePolynomial& j);

/// dim_k of the span of {x^a o J_k : a in N^e, all k}, i.e. the colength of
/// the intersection of the Ann_S(J_k).
Integer contraction_span_dimension(std::span<const InversePolynomial> js);

/// dim_k S/(M + B) for monomials M and binomials B = {x^u - x^v}, provided
/// the quotient is finite and every monomial outside `staircase` lies in
/// M + B. Counts the classes of staircase monomials under the moves
/// x^w x^u <-> x^w x^v that contain no element of M.
Integer binomial_quotient_colength(const std::vector<ExponentVector>& monomials,
                                   const std::vector<Binomial>& binomials,
                                   const std::vector<ExponentVector>& staircase);

/// The presentation of Ann_S(X^a + X^b) given by the closed form
/// (x_i^{p_i}) + (x_i^{q_i} x_j^{q_j})_{a_i<b_i, a_j>b_j} + (x^a - x^b), with
/// p_i = max(a_i,b_i)+1 and q_i = min(a_i,b_i)+1. The form is only an
/// annihilator presentation when a and b have disjoint supports; otherwise
/// NotApplicable is thrown.
AnnihilatorPresentation binomial_closed_form(const ExponentVector& a, const ExponentVector& b);

/// Minimal number of generators of Ann_S(J) for J homogeneous with respect
/// to the positive weights, computed degree by degree as
/// dim I_d - dim (m I)_d. Throws NotApplicable when J is not homogeneous.
std::size_t graded_minimal_generator_count(const InversePolynomial& j, std::span<const Integer> weights);

/// Positive weights making X^a + X^b homogeneous (requires a, b incomparable).
std::vector<Integer> balancing_weights(const ExponentVector& a, const ExponentVector& b);

/// Upper bound on mu(Ann_S(X^a + X^b)) from the count of the closed form:
/// e + e'^2 + 1 for e = 2e', e + e'(e'+1) for e = 2e'+1.
std::size_t binomial_mu_bound(std::size_t e);

struct AlmostSymmetryCheck {
  Integer h = 0;
  Integer colength = 0;  // dim_k S/Ann_S(J_{H, Fr(H)+h})
  Integer bound = 0;     // h - (type(H) - 1)
  bool equality = false;
};

/// Compares the colength of Ann_S(J_{H,Fr(H)+h}) with h - (type - 1).
/// Throws NotInSemigroup for h outside H_+; Inconsistency if the bound fails.
AlmostSymmetryCheck check_AS(const NumericalSemigroup& h_semigroup, Integer h);

/// check_AS over h in the generators and Ap(H, n_1) \ {0}, next to the
/// direct test 2g = Fr + type.
struct AlmostSymmetryReport {
  std::vector<AlmostSymmetryCheck> checks;
  bool equality_somewhere = false;
  bool equality_everywhere = false;
  bool almost_symmetric = false;  // 2g = Fr + type
  /// The "for some h" reading of the theorem agrees with the direct test.
  bool some_h_agrees() const { return equality_somewhere == almost_symmetric; }
  /// The "for every h in the range" reading agrees with the direct test.
  bool every_h_agrees() const { return equality_everywhere == almost_symmetric; }
};
AlmostSymmetryReport almost_symmetry_report(const NumericalSemigroup& h_semigroup);

enum class CertificateLevel {
  /// Degree sets only: exact, via x^a o J_{H,m} = J_{H,m-deg a}.
  Degrees,
  /// Explicit contraction of every generator and rational rank of the
  /// intersection.
  Polynomials,
};

/// Certificate for I_H + (x^a) = intersection over f in PF(H) of
/// Ann_S(J_{H, f+h}), h = deg_H(a).
struct IntersectionCertificate {
  Integer h = 0;
  CertificateLevel level = CertificateLevel::Degrees;
  /// Every minimal generator of I_H and x^a annihilate each J_{H,f+h}.
  bool generators_annihilate = false;
  /// Colength of the intersection of the annihilators.
  Integer intersection_colength = 0;
  /// {x in H : f + h - x in H for some f in PF(H)}; equals Ap(H, h).
  std::vector<Integer> degree_union;
  bool degree_union_is_apery = false;
  bool holds() const {
    return generators_annihilate && intersection_colength == h && degree_union_is_apery;
  }
};

/// Throws DegreeZero when deg_H(a) = 0.
IntersectionCertificate verify_intersection_theorem(const NumericalSemigroup& h_semigroup,
                                                    const ExponentVector& a,
                                                    CertificateLevel level = CertificateLevel::Polynomials);

}  // namespace invsemi
