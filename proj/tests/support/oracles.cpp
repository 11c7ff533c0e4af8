#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace invsemi::testing {

std::vector<bool> membership_oracle(const std::vector<Integer>& gens, Integer limit) {
  std::vector<bool> member(static_cast<std::size_t>(limit) + 1, false);
  member[0] = true;
  const Integer n1 = *std::min_element(gens.begin(), gens.end());
  Integer run = 1;
  for (Integer n = 1; n <= limit; ++n) {
    // After n1 consecutive members every larger integer is a member.
    if (run >= n1) {
      std::fill(member.begin() + n, member.end(), true);
      break;
    }
    for (Integer g : gens)
      if (g <= n && member[static_cast<std::size_t>(n - g)]) {
        member[static_cast<std::size_t>(n)] = true;
        break;
      }
    run = member[static_cast<std::size_t>(n)] ? run + 1 : 0;
  }
  return member;
}

OracleInvariants brute_force_invariants(const std::vector<Integer>& gens) {
  const Integer n1 = *std::min_element(gens.begin(), gens.end());
  const Integer ne = *std::max_element(gens.begin(), gens.end());
  const Integer limit = n1 * ne;  // Fr <= (n1 - 1)(ne - 1) - 1
  const auto member = membership_oracle(gens, limit);
  auto in_h = [&](Integer n) { return n >= 0 && (n > limit || member[static_cast<std::size_t>(n)]); };

  OracleInvariants out;
  for (Integer n = 0; n <= limit; ++n) {
    if (in_h(n)) continue;
    out.frobenius = n;
    ++out.genus;
  }
  for (Integer g : gens) {
    // g is redundant iff g - h lies in H for some nonzero h in H below g.
    bool redundant = false;
    for (Integer x = 1; x < g && !redundant; ++x) redundant = in_h(x) && in_h(g - x);
    if (!redundant && std::find(out.generators.begin(), out.generators.end(), g) == out.generators.end())
      out.generators.push_back(g);
  }
  std::sort(out.generators.begin(), out.generators.end());
  // f + h in H for all h in H_+ iff it holds for the generators.
  for (Integer f = -1; f <= out.frobenius; ++f) {
    if (in_h(f)) continue;
    if (std::all_of(out.generators.begin(), out.generators.end(), [&](Integer g) { return in_h(f + g); }))
      out.pseudo_frobenius.push_back(f);
  }
  return out;
}

std::vector<Integer> brute_force_apery(const std::vector<Integer>& gens, Integer m) {
  const Integer n1 = *std::min_element(gens.begin(), gens.end());
  const Integer ne = *std::max_element(gens.begin(), gens.end());
  const Integer limit = n1 * ne + m;  // Ap(H, m) lies below Fr + m
  const auto member = membership_oracle(gens, limit);
  std::vector<Integer> least(static_cast<std::size_t>(m), -1);
  for (Integer n = 0; n <= limit; ++n) {
    auto& slot = least[static_cast<std::size_t>(n % m)];
    if (slot < 0 && member[static_cast<std::size_t>(n)]) slot = n;
  }
  std::sort(least.begin(), least.end());
  return least;
}

std::vector<ExponentVector> brute_force_factorizations(const std::vector<Integer>& gens, Integer h) {
  std::vector<ExponentVector> out;
  if (h < 0) return out;
  std::vector<Integer> current(gens.size(), 0);
  std::function<void(std::size_t, Integer)> recurse = [&](std::size_t i, Integer rest) {
    if (i == gens.size()) {
      if (rest == 0) out.emplace_back(current);
      return;
    }
    for (Integer k = 0; k * gens[i] <= rest; ++k) {
      current[i] = k;
      recurse(i + 1, rest - k * gens[i]);
    }
    current[i] = 0;
  };
  recurse(0, h);
  std::sort(out.begin(), out.end());
  return out;
}

NumericalSemigroup random_semigroup(std::mt19937_64& rng, Integer max_generator, std::size_t max_count) {
  std::uniform_int_distribution<Integer> value(2, max_generator);
  std::uniform_int_distribution<std::size_t> count(2, max_count);
  while (true) {
    std::vector<Integer> raw(count(rng));
    for (auto& g : raw) g = value(rng);
    Integer g = 0;
    for (Integer v : raw) g = std::gcd(g, v);
    if (g == 1) return NumericalSemigroup::from_generators(raw);
  }
}

Integer random_element(std::mt19937_64& rng, const NumericalSemigroup& h, Integer limit) {
  std::uniform_int_distribution<Integer> value(0, limit);
  while (true) {
    const Integer n = value(rng);
    if (h.contains(n)) return n;
  }
}

}  // namespace invsemi::testing
