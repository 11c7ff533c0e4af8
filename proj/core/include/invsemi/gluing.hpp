#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "invsemi/polynomial.hpp"
#include "invsemi/semigroup.hpp"

namespace invsemi {

/// H = <d1 H1, d2 H2> with d1 in H2, d2 in H1 and gcd(d1, d2) = 1.
struct GluingSpec {
  NumericalSemigroup h1;
  NumericalSemigroup h2;
  Integer d1 = 0;
  Integer d2 = 0;
};

/// Throws NotCoprime, NotMember or NotMinimalGlue.
void validate(const GluingSpec& spec);

struct GluingResult {
  NumericalSemigroup h;
  /// Invariants from the gluing formulas: PF = {d1 f1 + d2 f2 + d1 d2},
  /// type = type1 * type2, genus = d1 g1 + d2 g2 + (d1-1)(d2-1)/2.
  SemigroupInvariants predicted;
  /// Block coordinate i (H1 generators, then H2 generators) is coordinate
  /// permutation[i] of the canonical generator order of h.
  std::vector<std::size_t> permutation;
};

/// Builds the gluing and checks the predicted invariants against the direct
/// computation (Inconsistency on mismatch).
GluingResult glue(const GluingSpec& spec);

/// J_{H,m} for m = d1 m1 + d2 m2 in block coordinates, as
/// sum over d of J_{H1, m1 + d d2} J_{H2, m2 - d d1},
/// d in [-floor(m1/d2), floor(m2/d1)]. Checked against the direct J_{H,m}.
/// Throws NotInSemigroup when m1 is not in H1 or m2 not in H2.
InversePolynomial glued_inverse_poly(const GluingSpec& spec, Integer m1, Integer m2);

/// Converts a polynomial in the canonical coordinates of the glued semigroup
/// to block coordinates.
InversePolynomial to_block_coordinates(const GluingResult& glued, const InversePolynomial& j);

enum class GluingSide { First, Second };

struct GluedMonomialCertificate {
  Integer f = 0;       // d1 f1 + d2 f2 + d1 d2
  Integer degree = 0;  // f + d1 h (First) or f + d2 h (Second)
  InversePolynomial direct;   // J_{H, degree}, block coordinates
  InversePolynomial factor1;  // J_{H1, f1 + h} or J_{H1, f1 + d2}
  InversePolynomial factor2;  // J_{H2, f2 + d1} or J_{H2, f2 + h}
  bool product_holds = false;
  /// f1 + h in Ap(H1, d2) (resp. f2 + h in Ap(H2, d1)). Only then do the
  /// d != 0 terms of the product formula vanish; h in the Apery set alone
  /// does not suffice.
  bool shifted_in_apery = false;
  /// Only for H2 = <1> on the First side: J_{H,degree} is a monomial iff
  /// factor1 is.
  std::optional<bool> monomial_equivalence;
  bool holds() const { return !shifted_in_apery || (product_holds && monomial_equivalence.value_or(true)); }
};

/// J_{H, f + d1 h} = J_{H1, f1 + h} J_{H2, f2 + d1} for h in Ap(H1, d2), or
/// the mirrored identity for h in Ap(H2, d1). Throws NotInApery, or
/// NotApplicable when f1, f2 are not pseudo-Frobenius numbers.
GluedMonomialCertificate glued_monomial_check(const GluingSpec& spec, Integer f1, Integer f2, Integer h,
                                              GluingSide side = GluingSide::First);

struct SymmetricExtension {
  NumericalSemigroup h;        // <d H1, m>
  NumericalSemigroup h_prime;  // <H1, m>
  bool is_symmetric = false;
  /// d Fr(H') + (d-1) m when H' is symmetric.
  std::optional<Integer> predicted_pf;
  /// (d-1) m + d f for f in PF(H'); all lie in PF(H).
  std::vector<Integer> predicted_pf_elements;
};

/// Symmetry of <d H1, m> read off <H1, m>, checked against the direct
/// computation. Throws NotCoprime, MemberAlready, NotMinimalGlue, and
/// NotApplicable for d < 2.
SymmetricExtension symmetric_extension_test(const NumericalSemigroup& h1, Integer d, Integer m);

}  // namespace invsemi
