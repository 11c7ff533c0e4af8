#pragma once

#include <functional>

#include "invsemi/semigroup.hpp"

namespace invsemi {

using SemigroupVisitor = std::function<void(const NumericalSemigroup&)>;

/// Visits every numerical semigroup with multiplicity <= max_multiplicity
/// and Frobenius number <= max_frobenius (including N itself), by a
/// depth-first search over Kunz coordinates. Order: by multiplicity, then
/// lexicographically on the Apéry set indexed by residue.
void for_each_semigroup(Integer max_multiplicity, Integer max_frobenius, const SemigroupVisitor& visit);

/// Same as for_each_semigroup restricted to symmetric semigroups; the search
/// fixes the largest Apéry element first and pairs residues r, s - r, so it
/// never visits non-symmetric coordinates.
void for_each_symmetric_semigroup(Integer max_multiplicity, Integer max_frobenius,
                                  const SemigroupVisitor& visit);

/// The semigroup whose Apéry set with respect to m is `apery_by_residue`
/// (entry r is the least element congruent to r). No validation beyond the
/// constructor's.
NumericalSemigroup semigroup_from_apery(const std::vector<Integer>& apery_by_residue);

}  // namespace invsemi
