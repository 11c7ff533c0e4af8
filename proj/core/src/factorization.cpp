#include "invsemi/factorization.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace invsemi {

FactorizationEnumerator::FactorizationEnumerator(std::vector<Integer> weights, Integer max_degree)
    : weights_(std::move(weights)), max_degree_(max_degree) {
  if (max_degree_ < 0) fail(ErrorCode::InvalidGenerator, "negative degree bound");
  for (Integer w : weights_)
    if (w < 1) fail(ErrorCode::InvalidGenerator, "weights must be positive");
  stride_ = static_cast<std::size_t>(max_degree_) + 1;
  const std::size_t k = weights_.size();
  reach_.assign((k + 1) * stride_, 0);
  reach_[k * stride_] = 1;
  for (std::size_t i = k; i-- > 0;) {
    const std::size_t w = static_cast<std::size_t>(weights_[i]);
    std::uint8_t* row = &reach_[i * stride_];
    const std::uint8_t* below = &reach_[(i + 1) * stride_];
    for (std::size_t r = 0; r < stride_; ++r) row[r] = below[r] | (r >= w ? row[r - w] : 0);
  }
}

void FactorizationEnumerator::check_degree(Integer h) const {
  if (h > max_degree_)
    fail(ErrorCode::BoundExceeded,
         "degree " + std::to_string(h) + " beyond enumerator bound " + std::to_string(max_degree_));
}

std::vector<ExponentVector> FactorizationEnumerator::all(Integer h, std::size_t limit) const {
  std::vector<ExponentVector> out;
  if (h < 0) return out;
  for_each(h, [&](const ExponentVector& a) {
    if (out.size() == limit)
      fail(ErrorCode::BoundExceeded, "more than " + std::to_string(limit) + " factorizations");
    out.push_back(a);
    return true;
  });
  return out;
}

std::optional<ExponentVector> FactorizationEnumerator::lex_max(Integer h) const {
  check_degree(h);
  if (h < 0 || !reachable(0, h)) return std::nullopt;
  ExponentVector a(weights_.size());
  Integer rest = h;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    Integer k = rest / weights_[i];
    while (!reachable(i + 1, rest - k * weights_[i])) --k;
    a[i] = k;
    rest -= k * weights_[i];
  }
  return a;
}

std::vector<ExponentVector> factorizations(const NumericalSemigroup& h_semigroup, Integer h,
                                           std::size_t limit) {
  if (!h_semigroup.contains(h)) return {};
  return FactorizationEnumerator(h_semigroup.generators(), h).all(h, limit);
}

BigInteger denumerant(const NumericalSemigroup& h_semigroup, Integer h) {
  if (!h_semigroup.contains(h)) return 0;
  std::vector<BigInteger> count(static_cast<std::size_t>(h) + 1, 0);
  count[0] = 1;
  for (Integer g : h_semigroup.generators())
    for (Integer r = g; r <= h; ++r) count[static_cast<std::size_t>(r)] += count[static_cast<std::size_t>(r - g)];
  return count[static_cast<std::size_t>(h)];
}

bool has_unique_factorization(const NumericalSemigroup& h_semigroup, Integer h) {
  if (!h_semigroup.contains(h)) return false;
  std::size_t seen = 0;
  FactorizationEnumerator(h_semigroup.generators(), h).for_each(h, [&](const ExponentVector&) {
    return ++seen < 2;
  });
  return seen == 1;
}

namespace {

struct VariableUnion {
  std::vector<std::size_t> parent;
  explicit VariableUnion(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

std::size_t first_support(const ExponentVector& a) {
  for (std::size_t j = 0; j < a.size(); ++j)
    if (a[j] != 0) return j;
  return a.size();
}

// Component label per factorization: the root of its support in the union of
// all supports. The zero vector gets its own label.
std::vector<std::size_t> component_labels(const std::vector<ExponentVector>& facts) {
  if (facts.empty()) return {};
  const std::size_t e = facts.front().size();
  VariableUnion uf(e + 1);
  for (const auto& a : facts) {
    const std::size_t first = first_support(a);
    for (std::size_t j = first + 1; j < e; ++j)
      if (a[j] != 0) uf.unite(j, first);
  }
  std::vector<std::size_t> labels;
  labels.reserve(facts.size());
  for (const auto& a : facts) labels.push_back(uf.find(first_support(a)));
  return labels;
}

}  // namespace

std::vector<std::vector<ExponentVector>> factorization_components(
    const std::vector<ExponentVector>& facts) {
  const auto labels = component_labels(facts);
  std::map<std::size_t, std::vector<ExponentVector>> grouped;
  for (std::size_t k = 0; k < facts.size(); ++k) grouped[labels[k]].push_back(facts[k]);
  std::vector<std::vector<ExponentVector>> out;
  for (auto& [label, members] : grouped) out.push_back(std::move(members));
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return *std::max_element(x.begin(), x.end()) > *std::max_element(y.begin(), y.end());
  });
  return out;
}

Integer generator_degree_bound(const NumericalSemigroup& h_semigroup, std::size_t i) {
  const auto& gens = h_semigroup.generators();
  return checked_add(checked_add(h_semigroup.frobenius(), gens.at(i)), gens.back());
}

namespace {

// Components of the factorization graph in degree h, computed on variables:
// j is a vertex when h - n_j is representable, and j ~ k when h - n_j - n_k
// is. Every factorization's support is a clique, and an edge j ~ k is
// witnessed by a factorization containing both, so the two graphs have the
// same components. Buffers are reused across degrees.
class VariableGraph {
 public:
  explicit VariableGraph(const std::vector<Integer>& weights)
      : weights_(weights), parent_(weights.size()), present_(weights.size()), flag_(weights.size()) {}

  template <class Representable>
  std::size_t build(Integer h, Representable&& representable) {
    const std::size_t k = weights_.size();
    std::size_t components = 0;
    for (std::size_t j = 0; j < k; ++j) {
      present_[j] = representable(h - weights_[j]);
      if (!present_[j]) continue;
      parent_[j] = j;
      ++components;
      for (std::size_t l = 0; l < j; ++l) {
        if (!present_[l] || !representable(h - weights_[j] - weights_[l])) continue;
        const std::size_t a = find(j);
        const std::size_t b = find(l);
        if (a != b) {
          parent_[a] = b;
          --components;
        }
      }
    }
    return components;
  }

  bool present(std::size_t j) const { return present_[j] != 0; }
  std::size_t root(std::size_t j) { return find(j); }

  /// Number of components containing a vertex j with marked(j).
  template <class Marked>
  std::size_t count_marked(Marked&& marked) {
    std::fill(flag_.begin(), flag_.end(), 0);
    std::size_t count = 0;
    for (std::size_t j = 0; j < weights_.size(); ++j) {
      if (!present_[j] || !marked(j)) continue;
      const std::size_t r = find(j);
      if (!flag_[r]) {
        flag_[r] = 1;
        ++count;
      }
    }
    return count;
  }

 private:
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }

  const std::vector<Integer>& weights_;
  std::vector<std::size_t> parent_;
  std::vector<std::uint8_t> present_;
  std::vector<std::uint8_t> flag_;
};

std::vector<std::uint8_t> representable_table(const std::vector<Integer>& weights, Integer bound) {
  std::vector<std::uint8_t> table(static_cast<std::size_t>(bound) + 1, 0);
  table[0] = 1;
  for (Integer w : weights)
    for (Integer r = w; r <= bound; ++r)
      table[static_cast<std::size_t>(r)] |= table[static_cast<std::size_t>(r - w)];
  return table;
}

}  // namespace

std::map<Integer, std::size_t> artinian_generator_degrees(const NumericalSemigroup& h_semigroup,
                                                          std::size_t i) {
  const auto& gens = h_semigroup.generators();
  const std::size_t e = gens.size();
  if (i >= e) fail(ErrorCode::DimensionMismatch, "variable index out of range");
  const Integer ni = gens[i];
  const Integer bound = generator_degree_bound(h_semigroup, i);
  // Past the bound every monomial c with j in supp(c) has deg c - n_j - n_i > Fr(H),
  // so it lies in m * (I_H + (x_i)) and contributes nothing.
  ensure(bound + 1 - gens.back() - ni > h_semigroup.frobenius(), [&] { return "generator degree bound too small"; });

  std::vector<Integer> others;
  for (std::size_t j = 0; j < e; ++j)
    if (j != i) others.push_back(gens[j]);
  const auto table = representable_table(others, bound);
  auto without_i = [&](Integer n) { return n >= 0 && table[static_cast<std::size_t>(n)] != 0; };
  VariableGraph graph(others);

  // In degree h the reduction S_i/(I_H + (x_i)) has dimension 1 if h is in
  // Ap(H, n_i) and 0 otherwise; a monomial c of degree h lies in
  // m * (I_H + (x_i)) iff some j in supp(c) has h - n_j - n_i in H. Minimal
  // generators in degree h therefore number (#components with no such j)
  // minus [h in Ap(H, n_i)].
  std::map<Integer, std::size_t> degrees;
  for (Integer h = 1; h <= bound; ++h) {
    if (!without_i(h)) continue;
    const bool in_apery = !h_semigroup.contains(h - ni);
    const std::size_t components = graph.build(h, without_i);
    std::size_t count = 0;
    if (in_apery) {
      count = components - 1;
    } else {
      count = components - graph.count_marked([&](std::size_t j) { return h_semigroup.contains(h - others[j] - ni); });
    }
    if (count > 0) degrees[h] = count;
  }
  return degrees;
}

std::size_t factorization_graph_component_count(const NumericalSemigroup& h_semigroup, Integer h) {
  if (!h_semigroup.contains(h)) return 0;
  if (h == 0) return 1;
  VariableGraph graph(h_semigroup.generators());
  return graph.build(h, [&](Integer n) { return h_semigroup.contains(n); });
}

BinomialIdealPresentation minimal_generators(const NumericalSemigroup& h_semigroup) {
  const auto& gens = h_semigroup.generators();
  if (gens.size() < 2) fail(ErrorCode::NotApplicable, "I_H = 0 when e = 1");
  const auto degrees = artinian_generator_degrees(h_semigroup, 0);
  BinomialIdealPresentation result;
  // Cross-check every degree against the full factorization graph.
  VariableGraph graph(gens);
  auto in_h = [&](Integer n) { return h_semigroup.contains(n); };
  const Integer bound = generator_degree_bound(h_semigroup, 0);
  for (Integer h = 1; h <= bound; ++h) {
    if (!h_semigroup.contains(h)) continue;
    const auto it = degrees.find(h);
    const std::size_t expected = it == degrees.end() ? 0 : it->second;
    if (graph.build(h, in_h) != expected + 1)
      fail(ErrorCode::Inconsistency,
           "factorization graph at degree " + std::to_string(h) + " disagrees with the Artinian reduction");
  }
  // Lift: each component of the graph at a Betti degree is represented by
  // its lexicographically largest factorization, i.e. the largest one
  // supported on the component's variables.
  for (const auto& [h, count] : degrees) {
    graph.build(h, in_h);
    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (graph.present(j)) groups[graph.root(j)].push_back(j);
    if (groups.size() != count + 1) fail(ErrorCode::Inconsistency, "component count changed at degree " + std::to_string(h));
    std::vector<ExponentVector> reps;
    for (const auto& [root, members] : groups) {
      std::vector<Integer> weights;
      for (std::size_t j : members) weights.push_back(gens[j]);
      const auto local = FactorizationEnumerator(weights, h).lex_max(h);
      if (!local) fail(ErrorCode::Inconsistency, "empty component at degree " + std::to_string(h));
      ExponentVector rep(gens.size());
      for (std::size_t t = 0; t < members.size(); ++t) rep[members[t]] = (*local)[t];
      reps.push_back(std::move(rep));
    }
    std::sort(reps.begin(), reps.end(), std::greater<>());
    for (std::size_t c = 1; c < reps.size(); ++c) {
      result.generators.push_back(Binomial{reps[0], reps[c], h});
      result.betti_degrees.push_back(h);
    }
  }
  std::sort(result.generators.begin(), result.generators.end(), [](const Binomial& x, const Binomial& y) {
    if (x.degree != y.degree) return x.degree < y.degree;
    if (x.lhs != y.lhs) return x.lhs < y.lhs;
    return x.rhs < y.rhs;
  });
  result.mu = result.generators.size();
  return result;
}

}  // namespace invsemi
