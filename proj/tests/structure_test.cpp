#include <gtest/gtest.h>

#include <numeric>

#include "invsemi/enumeration.hpp"
#include "invsemi/inverse_system.hpp"
#include "invsemi/structure.hpp"
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

TEST(Free, Examples) {
  const auto w = is_free(H({4, 6, 5}));
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->telescopic_frobenius, 7);
  EXPECT_EQ(w->gcd_chain.back(), 1);
  EXPECT_FALSE(is_free(H({3, 4, 5})).has_value());
  const auto t = is_free(H({2, 3}));
  ASSERT_TRUE(t.has_value());
  EXPECT_EQ(t->telescopic_frobenius, 1);
  // A complete intersection without a telescopic ordering.
  EXPECT_FALSE(is_free(H({10, 14, 15, 21})).has_value());
  EXPECT_EQ(minimal_generators(H({10, 14, 15, 21})).mu, 3u);
}

TEST(Free, WitnessDefinition) {
  for_each_symmetric_semigroup(8, 40, [](const NumericalSemigroup& s) {
    if (s.embedding_dimension() < 2) return;
    const auto w = is_free(s);
    if (!w) return;
    const auto& g = s.generators();
    Integer d = g[w->ordering[0]];
    for (std::size_t p = 1; p < g.size(); ++p) {
      const Integer next = std::gcd(d, g[w->ordering[p]]);
      EXPECT_EQ(w->gcd_chain[p], next);
      std::vector<Integer> scaled;
      for (std::size_t q = 0; q < p; ++q) scaled.push_back(g[w->ordering[q]] / d);
      const Integer target = g[w->ordering[p]] / next;
      EXPECT_FALSE(testing::brute_force_factorizations(scaled, target).empty()) << s.to_string();
      d = next;
    }
    EXPECT_EQ(w->telescopic_frobenius, s.frobenius());
    EXPECT_TRUE(s.is_symmetric());
    EXPECT_EQ(minimal_generators(s).mu, g.size() - 1);
  });
}

TEST(MonomialCriterion, Examples) {
  const auto m = monomial_criterion(H({4, 6, 5}));
  EXPECT_TRUE(m.witness.has_value());
  EXPECT_FALSE(m.monomial_indices.empty());
  EXPECT_TRUE(inverse_polynomial(H({4, 6, 5}), 11).is_monomial());
  EXPECT_FALSE(inverse_polynomial(H({4, 6, 5}), 12).is_monomial());

  const auto n = monomial_criterion(H({41, 99, 70, 53}));
  EXPECT_FALSE(n.witness.has_value());
  EXPECT_TRUE(n.monomial_indices.empty());
  EXPECT_TRUE(n.equivalence_holds());

  EXPECT_EQ(code_of([] { monomial_criterion(H({3, 4, 5})); }), ErrorCode::NotSymmetric);
}

TEST(MonomialCriterion, ThreeGeneratedSymmetric) {
  // <a d, b d, c>: J_{Fr + a d} = X_2^{a-1} X_3^{d-1}.
  const auto s = H({6, 10, 15});
  EXPECT_EQ(inverse_polynomial(s, s.frobenius() + 6), X(V{0, 2, 1}));
}

TEST(MonomialCriterion, AllSmallSymmetric) {
  for_each_symmetric_semigroup(9, 50, [](const NumericalSemigroup& s) {
    EXPECT_TRUE(monomial_criterion(s).equivalence_holds()) << s.to_string();
  });
}

TEST(MonomialCriterion, FreeWithoutMonomial) {
  const auto s = H({10, 15, 32, 48});
  const auto m = monomial_criterion(s);
  ASSERT_TRUE(m.witness.has_value());
  EXPECT_EQ(m.witness->telescopic_frobenius, 101);
  EXPECT_TRUE(m.monomial_indices.empty());
  EXPECT_FALSE(m.equivalence_holds());
  // Free by definition in the order 32, 48, 10, 15 (gcds 32, 16, 2, 1):
  // 48/16 in <1>, 10/2 in <2, 3>, 15 in <16, 24, 5>.
  EXPECT_EQ(48 / 16, 3);
  EXPECT_FALSE(testing::brute_force_factorizations({2, 3}, 5).empty());
  EXPECT_FALSE(testing::brute_force_factorizations({16, 24, 5}, 15).empty());
  for (Integer n : {10, 15, 32, 48})
    EXPECT_GE(testing::brute_force_factorizations({10, 15, 32, 48}, 101 + n).size(), 2u) << n;
}

TEST(VariableIdealBound, FreeSemigroups) {
  for (const auto& s : {H({4, 5, 6}), H({6, 10, 15}), H({8, 10, 12, 13})}) {
    const auto p = minimal_generators(s);
    EXPECT_TRUE(variable_ideal_bound_holds(p, s.embedding_dimension())) << s.to_string();
  }
}

TEST(SameDegree, Examples) {
  const auto a = ci_same_degree(H({6, 10, 15}));
  ASSERT_TRUE(a.has_value());
  EXPECT_EQ(*a, (std::vector<Integer>{5, 3, 2}));
  EXPECT_EQ(ci_same_degree(H({2, 3})), (std::vector<Integer>{3, 2}));
  EXPECT_FALSE(ci_same_degree(H({3, 4, 5})).has_value());
  EXPECT_FALSE(ci_same_degree(H({4, 5, 6})).has_value());
  for (std::size_t i = 0; i < 3; ++i) {
    const auto s = H({6, 10, 15});
    EXPECT_TRUE(inverse_polynomial(s, s.frobenius() + s.generator(i)).is_monomial());
  }
}

TEST(SameDegree, ConstructRoundTrip) {
  EXPECT_EQ(construct_from_alphas({2, 3, 5}).generators(), (std::vector<Integer>{6, 10, 15}));
  EXPECT_EQ(construct_from_alphas({2, 3}).generators(), (std::vector<Integer>{2, 3}));
  EXPECT_EQ(construct_from_alphas({3, 4, 5, 7}).embedding_dimension(), 4u);
  EXPECT_EQ(code_of([] { construct_from_alphas({2, 4}); }), ErrorCode::NotCoprimeAlphas);
  EXPECT_EQ(code_of([] { construct_from_alphas({1, 3}); }), ErrorCode::AlphaTooSmall);
  EXPECT_EQ(code_of([] { construct_from_alphas({5}); }), ErrorCode::NotApplicable);
}

TEST(Hec, Examples) {
  EXPECT_EQ(construct_H_ec(4, 1).h.generators(), (std::vector<Integer>{5, 6, 7, 8}));
  const auto h52 = construct_H_ec(5, 2);
  EXPECT_EQ(h52.h.generators(), (std::vector<Integer>{7, 8, 11, 12, 13}));
  EXPECT_EQ(h52.h.frobenius(), 17);
  const auto h63 = construct_H_ec(6, 3);
  EXPECT_EQ(h63.defined_generators, (std::vector<Integer>{9, 11, 19, 21, 23, 25}));
  EXPECT_EQ(h63.h.frobenius(), 35);
  EXPECT_EQ(h63.h.frobenius(), testing::brute_force_invariants(h63.h.generators()).frobenius);
  EXPECT_EQ(code_of([] { check_H_ec(5, 3); }), ErrorCode::BothOdd);
  EXPECT_EQ(code_of([] { check_H_ec(1, 2); }), ErrorCode::NotApplicable);
  EXPECT_EQ(code_of([] { check_H_ec(4, 0); }), ErrorCode::NotApplicable);
}

TEST(Hec, Grid) {
  for (Integer e = 2; e <= 7; ++e)
    for (Integer c = 1; c <= 5; ++c) {
      if (e % 2 == 1 && c % 2 == 1) continue;
      const auto h = check_H_ec(e, c);
      EXPECT_TRUE(h.holds()) << e << "," << c;
      EXPECT_EQ(h.h.multiplicity(), e + c);
    }
}

TEST(Classify, Examples) {
  const auto a = classify_small_multiplicity(H({5, 6, 7, 8}));
  EXPECT_EQ(a.multiplicity_offset, 1);
  EXPECT_EQ(a.variant, "2");
  const auto b = classify_small_multiplicity(H({7, 8, 11, 12, 13}));
  EXPECT_EQ(b.multiplicity_offset, 2);
  EXPECT_EQ(b.variant, "3");
  const auto c = classify_small_multiplicity(H({8, 9, 10, 14, 15}));
  EXPECT_EQ(c.multiplicity_offset, 3);
  EXPECT_EQ(c.variant, "5");
  EXPECT_EQ(c.order, 3);
  EXPECT_TRUE(c.exact_pattern);
  // Fr + 7 = 78 = 3 * 26 = 23 + 55 = 2 * 39: the cube sits on X_3.
  const auto d = classify_small_multiplicity(H({7, 23, 26, 39, 55}));
  EXPECT_EQ(d.variant, "3");
  EXPECT_FALSE(d.exact_pattern);
  EXPECT_EQ(code_of([] { classify_small_multiplicity(H({4, 5, 6, 7})); }), ErrorCode::NotSymmetric);
  EXPECT_EQ(code_of([] { classify_small_multiplicity(H({41, 53, 70, 99})); }), ErrorCode::MultiplicityOutOfRange);
}

TEST(Classify, AllSmallSymmetric) {
  std::size_t classified = 0;
  for_each_symmetric_semigroup(11, 80, [&](const NumericalSemigroup& s) {
    const auto e = static_cast<Integer>(s.embedding_dimension());
    if (e < 2) return;
    EXPECT_TRUE(order_bound_holds(s)) << s.to_string();
    if (s.multiplicity() <= e || s.multiplicity() > e + 3) return;
    const auto t = classify_small_multiplicity(s);
    EXPECT_EQ(t.multiplicity_offset, s.multiplicity() - e);
    ++classified;
  });
  EXPECT_GT(classified, 50u);
}

}  // namespace
}  // namespace invsemi
