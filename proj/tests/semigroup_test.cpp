#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "invsemi/semigroup.hpp"
#include "oracles.hpp"

namespace invsemi {
namespace {

using Gens = std::vector<Integer>;

TEST(Construct, KeepsMinimalSystem) {
  const auto h = NumericalSemigroup::from_generators({3, 4, 5});
  EXPECT_EQ(h.generators(), (Gens{3, 4, 5}));
  EXPECT_TRUE(h.input_was_minimal());
}

TEST(Construct, DropsRedundantGenerators) {
  const auto h = NumericalSemigroup::from_generators({4, 6, 5, 9});
  EXPECT_EQ(h.generators(), (Gens{4, 5, 6}));
  EXPECT_FALSE(h.input_was_minimal());
}

TEST(Construct, NaturalNumbers) {
  const auto h = NumericalSemigroup::from_generators({1, 7});
  EXPECT_EQ(h.generators(), (Gens{1}));
  EXPECT_EQ(h.embedding_dimension(), 1u);
  EXPECT_EQ(h.frobenius(), -1);
  EXPECT_EQ(h.pseudo_frobenius(), (Gens{-1}));
  EXPECT_EQ(h.genus(), 0);
  EXPECT_TRUE(h.is_symmetric());
}

TEST(Construct, DuplicatesAreNotMinimal) {
  const auto h = NumericalSemigroup::from_generators({3, 3, 5});
  EXPECT_EQ(h.generators(), (Gens{3, 5}));
  EXPECT_FALSE(h.input_was_minimal());
}

TEST(Construct, Errors) {
  auto code_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Inconsistency;
  };
  EXPECT_EQ(code_of([] { NumericalSemigroup::from_generators(std::span<const Integer>{}); }),
            ErrorCode::EmptyInput);
  EXPECT_EQ(code_of([] { NumericalSemigroup::from_generators({4, 6}); }), ErrorCode::GcdNotOne);
  EXPECT_EQ(code_of([] { NumericalSemigroup::from_generators({0, 3}); }), ErrorCode::InvalidGenerator);
  EXPECT_EQ(code_of([] { NumericalSemigroup::from_generators({-2, 3}); }), ErrorCode::InvalidGenerator);
  EXPECT_EQ(code_of([] { NumericalSemigroup::from_generators({Integer{1} << 30, 3 + (Integer{1} << 30)}); }),
            ErrorCode::TooLarge);
  EXPECT_EQ(code_of([] { NumericalSemigroup::parse("3,,4"); }), ErrorCode::InvalidGenerator);
  EXPECT_EQ(code_of([] { NumericalSemigroup::parse("3,x"); }), ErrorCode::InvalidGenerator);
  EXPECT_EQ(code_of([] { NumericalSemigroup::parse(""); }), ErrorCode::EmptyInput);
}

TEST(Parse, IgnoresWhitespace) {
  EXPECT_EQ(NumericalSemigroup::parse(" 41, 99,70 ,53").generators(), (Gens{41, 53, 70, 99}));
  EXPECT_EQ(NumericalSemigroup::parse("3,4,5").to_string(), "<3,4,5>");
}

TEST(Contains, Examples) {
  const auto h = NumericalSemigroup::from_generators({3, 4, 5});
  EXPECT_FALSE(h.contains(2));
  EXPECT_TRUE(h.contains(0));
  EXPECT_FALSE(h.contains(-3));
  const auto mcnugget = NumericalSemigroup::from_generators({6, 9, 20});
  EXPECT_FALSE(mcnugget.contains(43));
  EXPECT_TRUE(mcnugget.contains(44));
  EXPECT_EQ(mcnugget.frobenius(), 43);
  EXPECT_TRUE(mcnugget.leq(9, 29));
  EXPECT_FALSE(mcnugget.leq(9, 52));
}

TEST(Apery, Examples) {
  EXPECT_EQ(NumericalSemigroup::from_generators({2, 3}).apery(2).elements, (Gens{0, 3}));
  EXPECT_EQ(NumericalSemigroup::from_generators({3, 4, 5}).apery(3).elements, (Gens{0, 4, 5}));
  const auto h = NumericalSemigroup::from_generators({3, 4, 5});
  EXPECT_THROW(h.apery(2), Error);
  EXPECT_THROW(h.apery(0), Error);
}

TEST(Invariants, KnownValues) {
  const auto h = NumericalSemigroup::from_generators({11, 13, 17});
  EXPECT_EQ(h.pseudo_frobenius(), (Gens{49, 53}));
  EXPECT_EQ(h.type(), 2u);
  EXPECT_EQ(NumericalSemigroup::from_generators({2, 3}).frobenius(), 2 * 3 - 2 - 3);
  const auto free = NumericalSemigroup::from_generators({4, 6, 5});
  EXPECT_EQ(free.frobenius(), 7);
  EXPECT_TRUE(free.is_symmetric());
  EXPECT_EQ(NumericalSemigroup::from_generators({41, 99, 70, 53}).frobenius(), 1019);
  EXPECT_EQ(NumericalSemigroup::from_generators({43, 20, 27, 37}).frobenius(), 179);
}

TEST(Invariants, ThreeFourFive) {
  const auto h = NumericalSemigroup::from_generators({3, 4, 5});
  EXPECT_EQ(h.frobenius(), 2);
  EXPECT_EQ(h.pseudo_frobenius(), (Gens{1, 2}));
  EXPECT_FALSE(h.is_symmetric());
  EXPECT_TRUE(h.is_almost_symmetric());
}

// Property: invariants agree with a brute-force scan for every generator
// system with entries up to 60 drawn at random.
TEST(Properties, AgreesWithBruteForce) {
  std::mt19937_64 rng(20240607);
  for (int trial = 0; trial < 400; ++trial) {
    const auto h = testing::random_semigroup(rng, 60, 5);
    const auto oracle = testing::brute_force_invariants(h.generators());
    ASSERT_EQ(h.frobenius(), oracle.frobenius) << h.to_string();
    ASSERT_EQ(h.genus(), oracle.genus) << h.to_string();
    ASSERT_EQ(h.pseudo_frobenius(), oracle.pseudo_frobenius) << h.to_string();
    ASSERT_EQ(h.generators(), oracle.generators) << h.to_string();
  }
}

TEST(Properties, AperyStructure) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto h = testing::random_semigroup(rng, 40, 4);
    const Integer m = testing::random_element(rng, h, 60);
    if (m == 0) continue;
    const auto ap = h.apery(m);
    ASSERT_EQ(static_cast<Integer>(ap.elements.size()), m);
    EXPECT_EQ(ap.elements.front(), 0);
    EXPECT_EQ(ap.elements.back(), h.frobenius() + m);
    EXPECT_EQ(ap.elements, testing::brute_force_apery(h.generators(), m));
    for (Integer w : ap.elements) {
      EXPECT_TRUE(h.contains(w));
      EXPECT_FALSE(h.contains(w - m));
    }
  }
}

TEST(Properties, SymmetryTestsAgree) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const auto h = testing::random_semigroup(rng, 30, 4);
    const Integer fr = h.frobenius();
    bool reflective = true;
    for (Integer z = 0; z <= fr; ++z) reflective = reflective && (h.contains(z) != h.contains(fr - z));
    const bool by_type = h.type() == 1;
    const bool by_genus = 2 * h.genus() == fr + 1;
    EXPECT_EQ(by_type, by_genus) << h.to_string();
    EXPECT_EQ(by_type, reflective) << h.to_string();
    EXPECT_EQ(h.is_symmetric(), by_type);
  }
}

TEST(Properties, GapsLieBelowPseudoFrobenius) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const auto h = testing::random_semigroup(rng, 30, 4);
    const auto& pf = h.pseudo_frobenius();
    EXPECT_EQ(pf.back(), h.frobenius());
    EXPECT_GE(2 * h.genus(), h.frobenius() + static_cast<Integer>(h.type()));
    for (Integer x = 0; x <= h.frobenius(); ++x) {
      if (h.contains(x)) continue;
      EXPECT_TRUE(std::any_of(pf.begin(), pf.end(), [&](Integer f) { return h.leq(x, f); }))
          << x << " in " << h.to_string();
    }
  }
}

}  // namespace
}  // namespace invsemi
