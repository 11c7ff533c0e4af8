#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <vector>

#include "invsemi/exponent.hpp"
#include "invsemi/semigroup.hpp"

namespace invsemi {

/// Solves sum a_i w_i = h over N^k for a fixed weight list and every
/// h <= max_degree, emitting solutions in lexicographic order. A table of
/// suffix reachability prunes every branch that cannot be completed, so the
/// cost is proportional to the output.
class FactorizationEnumerator {
 public:
  FactorizationEnumerator(std::vector<Integer> weights, Integer max_degree);

  const std::vector<Integer>& weights() const noexcept { return weights_; }
  Integer max_degree() const noexcept { return max_degree_; }

  /// True when h is a nonnegative combination of the weights.
  bool representable(Integer h) const {
    return h >= 0 && h <= max_degree_ && reachable(0, h);
  }

  /// Calls visit(const ExponentVector&) for each solution of degree h;
  /// visit returns false to stop early.
  template <class Visit>
  void for_each(Integer h, Visit&& visit) const;

  /// The lexicographically largest solution of degree h, if any.
  std::optional<ExponentVector> lex_max(Integer h) const;

  /// All solutions of degree h. Throws BoundExceeded past `limit` entries.
  std::vector<ExponentVector> all(Integer h,
                                  std::size_t limit = std::numeric_limits<std::size_t>::max()) const;

 private:
  bool reachable(std::size_t from, Integer h) const {
    return reach_[from * stride_ + static_cast<std::size_t>(h)] != 0;
  }
  void check_degree(Integer h) const;

  std::vector<Integer> weights_;
  Integer max_degree_;
  std::size_t stride_;
  std::vector<std::uint8_t> reach_;  // reach_[i*stride+r]: r is a combination of weights i..k-1
};

/// Every factorization of h in H, in lexicographic order; empty when h is not
/// in H. Throws BoundExceeded past `limit` entries.
std::vector<ExponentVector> factorizations(const NumericalSemigroup& h_semigroup, Integer h,
                                           std::size_t limit = std::numeric_limits<std::size_t>::max());

/// Number of factorizations of h (the denumerant), by dynamic programming.
BigInteger denumerant(const NumericalSemigroup& h_semigroup, Integer h);

bool has_unique_factorization(const NumericalSemigroup& h_semigroup, Integer h);

/// Connected components of the factorization graph: vertices are the given
/// factorizations, edges join two with intersecting support. Each component
/// is returned in the input order; components are ordered by their
/// lexicographically largest member, descending.
std::vector<std::vector<ExponentVector>> factorization_components(
    const std::vector<ExponentVector>& factorizations);

/// Number of components of the factorization graph of h (0 when h is not in
/// H), computed on the graph of variables without enumerating factorizations.
std::size_t factorization_graph_component_count(const NumericalSemigroup& h_semigroup, Integer h);

struct Binomial {
  ExponentVector lhs;
  ExponentVector rhs;
  Integer degree = 0;

  auto operator<=>(const Binomial&) const = default;
};

struct BinomialIdealPresentation {
  std::vector<Binomial> generators;  // sorted by (degree, lhs, rhs)
  std::size_t mu = 0;
  std::vector<Integer> betti_degrees;  // one entry per generator, ascending
};

/// Degrees of minimal generators of (I_H + (x_i))/(x_i) with multiplicity,
/// computed in the Artinian reduction modulo the variable with index i.
std::map<Integer, std::size_t> artinian_generator_degrees(const NumericalSemigroup& h_semigroup,
                                                          std::size_t i);

/// A minimal H-homogeneous binomial generating system of I_H. Throws
/// NotApplicable when e = 1.
BinomialIdealPresentation minimal_generators(const NumericalSemigroup& h_semigroup);

/// Upper bound on the degree of a minimal generator of the reduction modulo
/// x_i: Fr(H) + n_i + n_e.
Integer generator_degree_bound(const NumericalSemigroup& h_semigroup, std::size_t i);

template <class Visit>
void FactorizationEnumerator::for_each(Integer h, Visit&& visit) const {
  check_degree(h);
  const std::size_t k = weights_.size();
  if (!reachable(0, h)) return;
  ExponentVector current(k);
  if (k == 0) {
    visit(static_cast<const ExponentVector&>(current));
    return;
  }
  // Iterative DFS over coordinates; remaining[i] is the degree still to be
  // covered by coordinates i..k-1.
  std::vector<Integer> remaining(k + 1, 0);
  remaining[0] = h;
  std::size_t i = 0;
  current[0] = -1;
  while (true) {
    if (i + 1 == k) {
      // The last coordinate is forced.
      const Integer rest = remaining[i];
      if (rest % weights_[i] == 0) {
        current[i] = rest / weights_[i];
        if (!visit(static_cast<const ExponentVector&>(current))) return;
      }
      current[i] = 0;
      if (i == 0) return;
      --i;
    }
    // Advance coordinate i to its next feasible value.
    bool descended = false;
    while (true) {
      const Integer next = current[i] + 1;
      const Integer rest = remaining[i] - next * weights_[i];
      if (rest < 0) break;
      current[i] = next;
      if (reachable(i + 1, rest)) {
        remaining[i + 1] = rest;
        ++i;
        current[i] = i + 1 == k ? 0 : -1;
        descended = true;
        break;
      }
    }
    if (descended) continue;
    current[i] = 0;
    if (i == 0) return;
    --i;
  }
}

}  // namespace invsemi
