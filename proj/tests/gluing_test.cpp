#include <gtest/gtest.h>

#include <random>

#include "invsemi/gluing.hpp"
#include "invsemi/inverse_system.hpp"
#include "oracles.hpp"

namespace invsemi {
namespace {

using V = ExponentVector;

NumericalSemigroup H(std::initializer_list<Integer> g) { return NumericalSemigroup::from_generators(g); }

InversePolynomial X(const V& a) { return InversePolynomial::monomial(a); }

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::EmptyInput;
}

TEST(Glue, TwoThreeWithOne) {
  const auto r = glue({H({2, 3}), H({1}), 2, 5});
  EXPECT_EQ(r.h.generators(), (std::vector<Integer>{4, 5, 6}));
  EXPECT_EQ(r.h.frobenius(), 7);
  EXPECT_EQ(r.permutation, (std::vector<std::size_t>{0, 2, 1}));
  EXPECT_EQ(r.predicted.pseudo_frobenius, (std::vector<Integer>{7}));
}

TEST(Glue, WithOneGivesShiftedPseudoFrobenius) {
  for (const auto& h1 : {H({3, 5, 7}), H({4, 5, 11}), H({5, 6, 9})})
    for (Integer d1 : {2, 3, 5})
      for (Integer d2 : {11, 13, 31}) {
        if (std::gcd(d1, d2) != 1 || !h1.contains(d2)) continue;
        const GluingSpec spec{h1, H({1}), d1, d2};
        if (code_of([&] { validate(spec); }) == ErrorCode::NotMinimalGlue) continue;
        const auto r = glue(spec);
        std::vector<Integer> expected;
        for (Integer f : h1.pseudo_frobenius()) expected.push_back(d1 * f + d2 * (d1 - 1));
        EXPECT_EQ(r.h.pseudo_frobenius(), expected);
      }
}

TEST(Glue, FiveSixNineWithThirtyOne) {
  const auto r = glue({H({5, 6, 9}), H({1}), 5, 31});
  EXPECT_EQ(r.h.generators(), (std::vector<Integer>{25, 30, 31, 45}));
  EXPECT_EQ(r.h.frobenius(), 189);
}

TEST(Glue, DoubleGluingOfTwoThree) {
  // <10,15,14,21> = <5<2,3>, 7<2,3>>.
  const auto r = glue({H({2, 3}), H({2, 3}), 5, 7});
  EXPECT_EQ(r.h.generators(), (std::vector<Integer>{10, 14, 15, 21}));
  EXPECT_EQ(r.h.frobenius(), 5 * 1 + 7 * 1 + 35);
  EXPECT_EQ(r.h.frobenius(), testing::brute_force_invariants({10, 14, 15, 21}).frobenius);
}

TEST(Glue, Errors) {
  EXPECT_EQ(code_of([] { glue({H({2, 3}), H({2, 3}), 4, 6}); }), ErrorCode::NotCoprime);
  EXPECT_EQ(code_of([] { glue({H({2, 3}), H({2, 3}), 1, 2}); }), ErrorCode::NotMember);
  EXPECT_EQ(code_of([] { glue({H({2, 3}), H({2, 3}), 3, 2}); }), ErrorCode::NotMinimalGlue);
}

TEST(GluedInversePoly, Examples) {
  EXPECT_EQ(glued_inverse_poly({H({2, 3}), H({1}), 2, 5}, 0, 0), X(V{0, 0, 0}));
  // J_{H,220} with 220 = 5 * 44 - 31 * 0: five terms, none in the last block.
  const auto j = glued_inverse_poly({H({5, 6, 9}), H({1}), 5, 31}, 44, 0);
  EXPECT_EQ(j.terms().size(), 5u);
  for (const auto& [a, c] : j.terms()) EXPECT_EQ(a[3], 0);
  EXPECT_EQ(j, inverse_polynomial(H({5, 6, 9}), 44).block_product(X(V{0})));
}

TEST(Glue, ThreeFourWithTwoThree) {
  const auto r = glue({H({3, 4}), H({2, 3}), 5, 7});
  EXPECT_EQ(r.h.generators(), (std::vector<Integer>{14, 15, 20, 21}));
  EXPECT_EQ(r.h.frobenius(), 5 * 5 + 7 * 1 + 35);
}

TEST(GluedInversePoly, ThreeFourWithTwoThree) {
  // Blocks (x15, x20 | x14, x21); 82 = 5*8 + 7*6 and 88 = 5*12 + 7*4.
  const GluingSpec spec{H({3, 4}), H({2, 3}), 5, 7};
  const auto j82 = glued_inverse_poly(spec, 8, 6);
  EXPECT_EQ(j82, X(V{0, 2, 3, 0}) + X(V{0, 2, 0, 2}));
  EXPECT_EQ(j82, inverse_polynomial(H({3, 4}), 8).block_product(inverse_polynomial(H({2, 3}), 6)));
  EXPECT_EQ(glued_inverse_poly(spec, 12, 4), X(V{4, 0, 2, 0}) + X(V{0, 3, 2, 0}));
}

TEST(GluedInversePoly, RandomAgainstDirect) {
  std::mt19937_64 rng(7);
  std::size_t checked = 0;
  while (checked < 60) {
    const auto h1 = testing::random_semigroup(rng, 9, 3);
    const auto h2 = testing::random_semigroup(rng, 7, 3);
    const Integer d1 = testing::random_element(rng, h2, 20);
    const Integer d2 = testing::random_element(rng, h1, 20);
    const GluingSpec spec{h1, h2, d1, d2};
    try {
      validate(spec);
    } catch (const Error&) {
      continue;
    }
    const Integer m1 = testing::random_element(rng, h1, 30);
    const Integer m2 = testing::random_element(rng, h2, 30);
    EXPECT_NO_THROW(glued_inverse_poly(spec, m1, m2)) << h1.to_string() << " " << h2.to_string();
    ++checked;
  }
}

TEST(GluedInversePoly, RejectsNonMembers) {
  EXPECT_EQ(code_of([] { glued_inverse_poly({H({2, 3}), H({1}), 2, 5}, 1, 0); }), ErrorCode::NotInSemigroup);
}

TEST(GluedMonomial, Examples) {
  const auto c = glued_monomial_check({H({2, 3}), H({1}), 2, 5}, 1, -1, 2);
  EXPECT_EQ(c.degree, 11);
  EXPECT_EQ(c.direct, X(V{0, 1, 1}));
  EXPECT_TRUE(c.holds());
  ASSERT_TRUE(c.monomial_equivalence.has_value());

  const auto d = glued_monomial_check({H({5, 6, 9}), H({1}), 5, 31}, 13, -1, 5);
  EXPECT_EQ(d.degree, 214);
  EXPECT_TRUE(d.holds());
  EXPECT_EQ(d.direct.terms().size(), 2u);
  for (const auto& [a, coeff] : d.direct.terms()) EXPECT_EQ(a[3], 4);

  const auto z = glued_monomial_check({H({2, 3}), H({1}), 2, 5}, 1, -1, 0);
  EXPECT_TRUE(z.direct.is_zero());
  EXPECT_TRUE(z.factor1.is_zero());
  EXPECT_TRUE(z.holds());
}

TEST(GluedMonomial, Errors) {
  EXPECT_EQ(code_of([] { glued_monomial_check({H({2, 3}), H({1}), 2, 5}, 1, -1, 5); }), ErrorCode::NotInApery);
  EXPECT_EQ(code_of([] { glued_monomial_check({H({2, 3}), H({1}), 2, 5}, 2, -1, 0); }), ErrorCode::NotApplicable);
}

TEST(GluedMonomial, AperyAloneIsNotEnough) {
  // 8 is in Ap(<2,5>, 11) but 3 + 8 - 11 = 0 lies in <2,5>, so the d = -1 term
  // J_{H1,0} X_3^3 survives.
  const auto c = glued_monomial_check({H({2, 5}), H({1}), 2, 11}, 3, -1, 8);
  EXPECT_FALSE(c.shifted_in_apery);
  EXPECT_FALSE(c.product_holds);
  EXPECT_EQ(c.direct, X(V{3, 1, 1}) + X(V{0, 0, 3}));
  EXPECT_TRUE(c.holds());
}

TEST(GluedMonomial, EveryAperyElement) {
  for (const GluingSpec& spec : {GluingSpec{H({3, 5, 7}), H({1}), 2, 9}, GluingSpec{H({2, 3}), H({3, 4}), 7, 5},
                                 GluingSpec{H({4, 5, 11}), H({2, 5}), 7, 9}}) {
    std::size_t shifted = 0;
    for (Integer f1 : spec.h1.pseudo_frobenius())
      for (Integer f2 : spec.h2.pseudo_frobenius()) {
        for (Integer h : spec.h1.apery(spec.d2).elements) {
          const auto c = glued_monomial_check(spec, f1, f2, h, GluingSide::First);
          EXPECT_TRUE(c.holds());
          shifted += c.shifted_in_apery;
        }
        for (Integer h : spec.h2.apery(spec.d1).elements) {
          const auto c = glued_monomial_check(spec, f1, f2, h, GluingSide::Second);
          EXPECT_TRUE(c.holds());
          shifted += c.shifted_in_apery;
        }
      }
    EXPECT_GT(shifted, 2u);
  }
}

TEST(GluedMonomial, RandomShiftedHypothesis) {
  std::mt19937_64 rng(11);
  std::size_t checked = 0;
  while (checked < 300) {
    const auto h1 = testing::random_semigroup(rng, 10, 3);
    const auto h2 = testing::random_semigroup(rng, 6, 2);
    const GluingSpec spec{h1, h2, testing::random_element(rng, h2, 20), testing::random_element(rng, h1, 20)};
    if (code_of([&] { validate(spec); }) != ErrorCode::EmptyInput) continue;
    for (Integer f1 : h1.pseudo_frobenius())
      for (Integer f2 : h2.pseudo_frobenius())
        for (Integer h : h1.apery(spec.d2).elements) {
          const auto c = glued_monomial_check(spec, f1, f2, h);
          EXPECT_TRUE(c.holds()) << h1.to_string() << " " << h2.to_string() << " h=" << h;
          checked += c.shifted_in_apery;
        }
  }
}

TEST(SymmetricExtension, Examples) {
  // H' = <3,4,5> has PF {1, 2}, so <9,12,5> has PF {2*5 + 3, 2*5 + 6}.
  const auto s = symmetric_extension_test(H({3, 4}), 3, 5);
  EXPECT_FALSE(s.is_symmetric);
  EXPECT_EQ(s.predicted_pf_elements, (std::vector<Integer>{13, 16}));
  EXPECT_EQ(s.h.pseudo_frobenius(), (std::vector<Integer>{13, 16}));
  const auto t = symmetric_extension_test(H({4, 7}), 5, 6);
  EXPECT_TRUE(t.is_symmetric);
  EXPECT_EQ(t.predicted_pf, 5 * 9 + 4 * 6);
  for (Integer f : s.predicted_pf_elements) {
    const auto& pf = s.h.pseudo_frobenius();
    EXPECT_TRUE(std::binary_search(pf.begin(), pf.end(), f));
  }
  EXPECT_EQ(code_of([] { symmetric_extension_test(H({2, 3}), 2, 5); }), ErrorCode::MemberAlready);
  EXPECT_EQ(code_of([] { symmetric_extension_test(H({5, 6, 9}), 5, 31); }), ErrorCode::MemberAlready);
  EXPECT_EQ(code_of([] { symmetric_extension_test(H({4, 5, 11}), 7, 7); }), ErrorCode::NotCoprime);
  EXPECT_EQ(code_of([] { symmetric_extension_test(H({4, 5, 11}), 1, 7); }), ErrorCode::NotApplicable);
}

TEST(SymmetricExtension, SymmetryTransfersOverSmallCases) {
  std::size_t symmetric = 0, total = 0;
  for (const auto& h1 : {H({3, 4}), H({3, 5}), H({4, 5}), H({4, 7}), H({5, 7}), H({4, 5, 7}), H({5, 6, 7})})
    for (Integer d = 2; d <= 4; ++d)
      for (Integer m = 1; m <= 3 * h1.frobenius(); ++m) {
        if (std::gcd(d, m) != 1 || h1.contains(m)) continue;
        try {
          const auto s = symmetric_extension_test(h1, d, m);
          ++total;
          symmetric += s.is_symmetric;
        } catch (const Error& e) {
          EXPECT_EQ(e.code(), ErrorCode::NotMinimalGlue);
        }
      }
  EXPECT_GT(total, 20u);
  EXPECT_GT(symmetric, 0u);
}

}  // namespace
}  // namespace invsemi
