#include "invsemi/gluing.hpp"

#include <algorithm>
#include <numeric>

#include "invsemi/inverse_system.hpp"

namespace invsemi {

namespace {

std::vector<Integer> block_generators(const GluingSpec& spec) {
  std::vector<Integer> raw;
  for (Integer n : spec.h1.generators()) raw.push_back(checked_mul(spec.d1, n));
  for (Integer n : spec.h2.generators()) raw.push_back(checked_mul(spec.d2, n));
  return raw;
}

bool in_apery(const NumericalSemigroup& h_semigroup, Integer h, Integer modulus) {
  return h_semigroup.contains(h) && !h_semigroup.contains(h - modulus);
}

bool is_pf(const NumericalSemigroup& h_semigroup, Integer f) {
  const auto& pf = h_semigroup.pseudo_frobenius();
  return std::binary_search(pf.begin(), pf.end(), f);
}

// Canonical coordinate c goes to block coordinate inverse[c].
std::vector<std::size_t> inverse_of(const std::vector<std::size_t>& perm) {
  std::vector<std::size_t> inverse(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) inverse[perm[i]] = i;
  return inverse;
}

}  // namespace

void validate(const GluingSpec& spec) {
  if (spec.d1 <= 0 || spec.d2 <= 0) fail(ErrorCode::NotMember, "gluing multipliers must be positive");
  if (std::gcd(spec.d1, spec.d2) != 1)
    fail(ErrorCode::NotCoprime, "d1 = " + std::to_string(spec.d1) + " and d2 = " + std::to_string(spec.d2) +
                                    " are not coprime");
  if (!spec.h2.contains(spec.d1))
    fail(ErrorCode::NotMember, "d1 = " + std::to_string(spec.d1) + " is not in " + spec.h2.to_string());
  if (!spec.h1.contains(spec.d2))
    fail(ErrorCode::NotMember, "d2 = " + std::to_string(spec.d2) + " is not in " + spec.h1.to_string());
  const auto raw = block_generators(spec);
  const auto h = NumericalSemigroup::from_generators(raw);
  if (h.embedding_dimension() != raw.size())
    fail(ErrorCode::NotMinimalGlue, "d1 H1 and d2 H2 generators are not a minimal system of " + h.to_string());
}

GluingResult glue(const GluingSpec& spec) {
  validate(spec);
  const auto raw = block_generators(spec);
  GluingResult out{NumericalSemigroup::from_generators(raw), {}, {}};
  const auto& gens = out.h.generators();
  for (Integer n : raw)
    out.permutation.push_back(
        static_cast<std::size_t>(std::lower_bound(gens.begin(), gens.end(), n) - gens.begin()));

  auto& p = out.predicted;
  const Integer d1d2 = checked_mul(spec.d1, spec.d2);
  for (Integer f1 : spec.h1.pseudo_frobenius())
    for (Integer f2 : spec.h2.pseudo_frobenius())
      p.pseudo_frobenius.push_back(checked_add(checked_add(checked_mul(spec.d1, f1), checked_mul(spec.d2, f2)), d1d2));
  std::sort(p.pseudo_frobenius.begin(), p.pseudo_frobenius.end());
  p.frobenius = p.pseudo_frobenius.back();
  p.type = spec.h1.type() * spec.h2.type();
  p.genus = spec.d1 * spec.h1.genus() + spec.d2 * spec.h2.genus() + (spec.d1 - 1) * (spec.d2 - 1) / 2;
  p.is_symmetric = p.type == 1;
  p.is_almost_symmetric = 2 * p.genus == p.frobenius + static_cast<Integer>(p.type);

  ensure(p == out.h.invariants(),
         [&] { return "gluing formulas disagree with the invariants of " + out.h.to_string(); });
  ensure(p.is_symmetric == (spec.h1.is_symmetric() && spec.h2.is_symmetric()),
         [&] { return "symmetry of " + out.h.to_string() + " does not transfer from its parts"; });
  return out;
}

InversePolynomial to_block_coordinates(const GluingResult& glued, const InversePolynomial& j) {
  return j.permuted(inverse_of(glued.permutation));
}

InversePolynomial glued_inverse_poly(const GluingSpec& spec, Integer m1, Integer m2) {
  const auto glued = glue(spec);
  if (!spec.h1.contains(m1))
    fail(ErrorCode::NotInSemigroup, std::to_string(m1) + " is not in " + spec.h1.to_string());
  if (!spec.h2.contains(m2))
    fail(ErrorCode::NotInSemigroup, std::to_string(m2) + " is not in " + spec.h2.to_string());

  InversePolynomial sum(glued.h.embedding_dimension());
  for (Integer d = -(m1 / spec.d2); d <= m2 / spec.d1; ++d) {
    const auto left = inverse_polynomial(spec.h1, m1 + d * spec.d2);
    if (left.is_zero()) continue;
    sum = sum + left.block_product(inverse_polynomial(spec.h2, m2 - d * spec.d1));
  }
  const Integer m = checked_add(checked_mul(spec.d1, m1), checked_mul(spec.d2, m2));
  ensure(sum == to_block_coordinates(glued, inverse_polynomial(glued.h, m)),
         [&] { return "product formula fails for J_{H," + std::to_string(m) + "} on " + glued.h.to_string(); });
  return sum;
}

GluedMonomialCertificate glued_monomial_check(const GluingSpec& spec, Integer f1, Integer f2, Integer h,
                                              GluingSide side) {
  const auto glued = glue(spec);
  if (!is_pf(spec.h1, f1) || !is_pf(spec.h2, f2))
    fail(ErrorCode::NotApplicable, "f1 and f2 must be pseudo-Frobenius numbers of H1 and H2");
  const bool first = side == GluingSide::First;
  if (first ? !in_apery(spec.h1, h, spec.d2) : !in_apery(spec.h2, h, spec.d1))
    fail(ErrorCode::NotInApery, std::to_string(h) + " is not in Ap(" +
                                    (first ? spec.h1.to_string() + ", " + std::to_string(spec.d2)
                                           : spec.h2.to_string() + ", " + std::to_string(spec.d1)) +
                                    ")");
  GluedMonomialCertificate cert;
  cert.f = spec.d1 * f1 + spec.d2 * f2 + spec.d1 * spec.d2;
  cert.degree = cert.f + (first ? spec.d1 : spec.d2) * h;
  cert.direct = to_block_coordinates(glued, inverse_polynomial(glued.h, cert.degree));
  cert.factor1 = inverse_polynomial(spec.h1, f1 + (first ? h : spec.d2));
  cert.factor2 = inverse_polynomial(spec.h2, f2 + (first ? spec.d1 : h));
  cert.product_holds = cert.direct == cert.factor1.block_product(cert.factor2);
  cert.shifted_in_apery = first ? in_apery(spec.h1, f1 + h, spec.d2) : in_apery(spec.h2, f2 + h, spec.d1);
  if (first && spec.h2.embedding_dimension() == 1 && spec.h2.multiplicity() == 1)
    cert.monomial_equivalence = cert.direct.is_monomial() == cert.factor1.is_monomial();
  return cert;
}

SymmetricExtension symmetric_extension_test(const NumericalSemigroup& h1, Integer d, Integer m) {
  if (d < 2) fail(ErrorCode::NotApplicable, "the multiplier d must be at least 2");
  if (m <= 0) fail(ErrorCode::InvalidGenerator, "m must be positive");
  if (std::gcd(d, m) != 1)
    fail(ErrorCode::NotCoprime, "d = " + std::to_string(d) + " and m = " + std::to_string(m) + " are not coprime");
  if (h1.contains(m))
    fail(ErrorCode::MemberAlready, std::to_string(m) + " is already in " + h1.to_string() +
                                       "; <d H1, m> is then a gluing with <1>");
  std::vector<Integer> raw;
  for (Integer n : h1.generators()) raw.push_back(checked_mul(d, n));
  raw.push_back(m);
  std::vector<Integer> raw_prime(h1.generators());
  raw_prime.push_back(m);

  SymmetricExtension out{NumericalSemigroup::from_generators(raw), NumericalSemigroup::from_generators(raw_prime),
                         false, std::nullopt, {}};
  if (out.h.embedding_dimension() != raw.size())
    fail(ErrorCode::NotMinimalGlue, "d H1 and m are not a minimal system of " + out.h.to_string());
  out.is_symmetric = out.h.is_symmetric();
  ensure(out.is_symmetric == out.h_prime.is_symmetric(),
         [&] { return "symmetry of " + out.h.to_string() + " differs from " + out.h_prime.to_string(); });
  for (Integer f : out.h_prime.pseudo_frobenius()) {
    const Integer phi = checked_add(checked_mul(d - 1, m), checked_mul(d, f));
    out.predicted_pf_elements.push_back(phi);
    ensure(is_pf(out.h, phi),
           [&] { return std::to_string(phi) + " should be pseudo-Frobenius in " + out.h.to_string(); });
  }
  if (out.is_symmetric) {
    out.predicted_pf = out.predicted_pf_elements.front();
    ensure(out.h.frobenius() == *out.predicted_pf,
           [&] { return "Frobenius number of " + out.h.to_string() + " differs from d Fr(H') + (d-1) m"; });
  }
  return out;
}

}  // namespace invsemi
