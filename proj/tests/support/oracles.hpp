#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "invsemi/exponent.hpp"
#include "invsemi/semigroup.hpp"

namespace invsemi::testing {

/// member[n] for 0 <= n <= limit, by the plain coin-change recurrence.
std::vector<bool> membership_oracle(const std::vector<Integer>& gens, Integer limit);

struct OracleInvariants {
  Integer frobenius = -1;
  Integer genus = 0;
  std::vector<Integer> pseudo_frobenius;
  std::vector<Integer> generators;  // minimal system
};

/// Invariants by scanning every integer up to n_1 * n_e.
OracleInvariants brute_force_invariants(const std::vector<Integer>& gens);

/// Least element of each residue class mod m, by scanning the membership table.
std::vector<Integer> brute_force_apery(const std::vector<Integer>& gens, Integer m);

/// All a with sum a_i g_i = h by plain recursion, sorted lexicographically.
std::vector<ExponentVector> brute_force_factorizations(const std::vector<Integer>& gens, Integer h);

/// A random numerical semigroup with generators in [2, max_generator] and at
/// most max_count raw generators (retried until the gcd is 1).
NumericalSemigroup random_semigroup(std::mt19937_64& rng, Integer max_generator, std::size_t max_count);

/// A uniformly chosen element of H in [0, limit].
Integer random_element(std::mt19937_64& rng, const NumericalSemigroup& h, Integer limit);

}  // namespace invsemi::testing
