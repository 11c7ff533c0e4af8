#include "invsemi/structure.hpp"

#include <algorithm>
#include <numeric>

#include "invsemi/inverse_system.hpp"

namespace invsemi {

namespace {

class FreeSearch {
 public:
  explicit FreeSearch(const std::vector<Integer>& gens) : gens_(gens) {
    if (gens.size() <= kMemoLimit) failed_.assign(std::size_t{1} << gens.size(), 0);
  }

  std::optional<FreenessWitness> run() {
    for (std::size_t first = 0; first < gens_.size(); ++first) {
      order_ = {first};
      chain_ = {gens_[first]};
      if (extend(std::size_t{1} << first)) return FreenessWitness{order_, chain_, 0};
    }
    return std::nullopt;
  }

 private:
  static constexpr std::size_t kMemoLimit = 20;
  static constexpr Integer kReachLimit = 1 << 16;

  // d_i is chain_.back(); the next generator must shrink it strictly and
  // n_i / d_{i+1} must lie in <n_j / d_i : j chosen>. Whether a chosen set
  // extends to a full ordering depends only on the set, so failures are
  // remembered by mask.
  bool extend(std::size_t used) {
    const Integer d = chain_.back();
    if (order_.size() == gens_.size()) return d == 1;
    if (!failed_.empty() && failed_[used]) return false;

    std::vector<Integer> scaled;
    for (std::size_t j : order_) scaled.push_back(gens_[j] / d);
    Integer top = 0;
    for (std::size_t k = 0; k < gens_.size(); ++k)
      if (!((used >> k) & 1)) top = std::max(top, gens_[k] / std::gcd(d, gens_[k]));
    // Small targets use a reachability table, large ones the Apery table.
    std::vector<char> reach;
    std::optional<NumericalSemigroup> reduced;
    if (top <= kReachLimit) {
      reach.assign(static_cast<std::size_t>(top) + 1, 0);
      reach[0] = 1;
      for (Integer v = 1; v <= top; ++v)
        for (Integer g : scaled)
          if (g <= v && reach[static_cast<std::size_t>(v - g)]) {
            reach[static_cast<std::size_t>(v)] = 1;
            break;
          }
    } else {
      reduced = NumericalSemigroup::from_generators(scaled);
    }
    auto member = [&](Integer v) { return reduced ? reduced->contains(v) : reach[static_cast<std::size_t>(v)] != 0; };

    for (std::size_t k = 0; k < gens_.size(); ++k) {
      if ((used >> k) & 1) continue;
      const Integer next = std::gcd(d, gens_[k]);
      if (next == d) continue;
      if (order_.size() + 1 == gens_.size() && next != 1) continue;
      if (!member(gens_[k] / next)) continue;
      order_.push_back(k);
      chain_.push_back(next);
      if (extend(used | (std::size_t{1} << k))) return true;
      chain_.pop_back();
      order_.pop_back();
    }
    if (!failed_.empty()) failed_[used] = 1;
    return false;
  }

  const std::vector<Integer>& gens_;
  std::vector<char> failed_;
  std::vector<std::size_t> order_;
  std::vector<Integer> chain_;
};

bool fr_plus_is_monomial(const NumericalSemigroup& h_semigroup, std::size_t i) {
  return has_unique_factorization(h_semigroup, h_semigroup.frobenius() + h_semigroup.generator(i));
}

// Product of X_a X_b over index pairs (1-based), plus optional powers.
void add_pair(InversePolynomial& j, std::size_t e, std::size_t a, std::size_t b) {
  ExponentVector v(e);
  ++v[a - 1];
  ++v[b - 1];
  j.add_term(v, 1);
}

void add_power(InversePolynomial& j, std::size_t e, std::size_t a, Integer power) {
  ExponentVector v(e);
  v[a - 1] = power;
  j.add_term(v, 1);
}

// X_{lead}^{power} (if power > 0) + sum_{i=first}^{last} X_i X_{mirror - i}
// + X_{middle}^2 (if middle > 0).
std::vector<std::size_t> distinct_of(std::vector<std::size_t> vars) {
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

// One term X_i^power, the others of order two, every variable 2..e once.
bool power_plus_pairs(const std::vector<std::vector<std::size_t>>& terms, std::size_t e, std::size_t power) {
  std::vector<int> seen(e + 1, 0);
  std::size_t powers = 0;
  bool ok = true;
  for (const auto& vars : terms) {
    const auto distinct = distinct_of(vars);
    if (vars.size() == power && distinct.size() == 1)
      ++powers;
    else
      ok &= vars.size() == 2;
    for (std::size_t v : distinct) ++seen[v];
  }
  for (std::size_t v = 2; v <= e; ++v) ok &= seen[v] == 1;
  return ok && seen[1] == 0 && powers == 1;
}

InversePolynomial pattern(std::size_t e, Integer power, std::size_t first, std::size_t last, std::size_t mirror,
                          std::size_t middle) {
  InversePolynomial j(e);
  if (power > 0) add_power(j, e, 2, power);
  for (std::size_t i = first; i <= last; ++i) add_pair(j, e, i, mirror - i);
  if (middle > 0) add_power(j, e, middle, 2);
  return j;
}

}  // namespace

std::optional<FreenessWitness> is_free(const NumericalSemigroup& h_semigroup) {
  const auto& gens = h_semigroup.generators();
  auto witness = FreeSearch(gens).run();
  if (!witness) return witness;
  const auto& o = witness->ordering;
  const auto& d = witness->gcd_chain;
  Integer fr = -gens[o[0]];
  for (std::size_t p = 1; p < o.size(); ++p) fr = checked_add(fr, checked_mul(d[p - 1] / d[p] - 1, gens[o[p]]));
  witness->telescopic_frobenius = fr;
  ensure(fr == h_semigroup.frobenius(),
         [&] { return "telescopic Frobenius formula disagrees with Fr for " + h_semigroup.to_string(); });
  return witness;
}

MonomialCriterion monomial_criterion(const NumericalSemigroup& h_semigroup) {
  if (!h_semigroup.is_symmetric()) fail(ErrorCode::NotSymmetric, h_semigroup.to_string() + " is not symmetric");
  MonomialCriterion out;
  out.witness = is_free(h_semigroup);
  for (std::size_t i = 0; i < h_semigroup.embedding_dimension(); ++i)
    if (fr_plus_is_monomial(h_semigroup, i)) out.monomial_indices.push_back(i);
  return out;
}

bool variable_ideal_bound_holds(const BinomialIdealPresentation& presentation, std::size_t e) {
  if (e >= 20) fail(ErrorCode::TooLarge, "variable subsets are enumerated only for e < 20");
  for (std::size_t mask = 1; mask < (std::size_t{1} << e); ++mask) {
    auto meets = [&](const ExponentVector& a) {
      for (std::size_t i = 0; i < e; ++i)
        if ((mask >> i & 1) && a[i] > 0) return true;
      return false;
    };
    const std::size_t p = static_cast<std::size_t>(__builtin_popcountll(mask));
    std::size_t inside = 0;
    for (const auto& g : presentation.generators)
      if (meets(g.lhs) && meets(g.rhs)) ++inside;
    if (inside + 1 > p) return false;
  }
  return true;
}

std::optional<std::vector<Integer>> ci_same_degree(const NumericalSemigroup& h_semigroup) {
  const auto& gens = h_semigroup.generators();
  const std::size_t e = gens.size();
  if (e < 2) return std::nullopt;
  std::vector<ExponentVector> js;
  for (std::size_t i = 0; i < e; ++i) {
    if (!fr_plus_is_monomial(h_semigroup, i)) return std::nullopt;
    js.push_back(factorizations(h_semigroup, h_semigroup.frobenius() + gens[i]).front());
  }
  std::vector<Integer> alphas(e);
  for (std::size_t j = 0; j < e; ++j) alphas[j] = js[j == 0 ? 1 : 0][j] + 1;
  for (std::size_t i = 0; i < e; ++i)
    for (std::size_t j = 0; j < e; ++j)
      if (j != i && js[i][j] + 1 != alphas[j]) return std::nullopt;
  const Integer d = alphas[0] * gens[0];
  for (std::size_t i = 0; i < e; ++i) {
    if (alphas[i] < 2 || alphas[i] * gens[i] != d) return std::nullopt;
    for (std::size_t j = i + 1; j < e; ++j)
      if (std::gcd(alphas[i], alphas[j]) != 1) return std::nullopt;
    Integer product = 1;
    for (std::size_t k = 0; k < e; ++k)
      if (k != i) product = checked_mul(product, alphas[k]);
    if (product != gens[i]) return std::nullopt;
  }
  const auto presentation = minimal_generators(h_semigroup);
  ensure(presentation.mu == e - 1 &&
             std::all_of(presentation.betti_degrees.begin(), presentation.betti_degrees.end(),
                         [&](Integer b) { return b == d; }),
         [&] {
           return "I_H of " + h_semigroup.to_string() + " is not a complete intersection in the single degree " +
                  std::to_string(d);
         });
  return alphas;
}

NumericalSemigroup construct_from_alphas(const std::vector<Integer>& alphas) {
  const std::size_t e = alphas.size();
  if (e < 2) fail(ErrorCode::NotApplicable, "at least two alphas are needed");
  for (Integer a : alphas)
    if (a < 2) fail(ErrorCode::AlphaTooSmall, "alpha " + std::to_string(a) + " is not greater than one");
  for (std::size_t i = 0; i < e; ++i)
    for (std::size_t j = i + 1; j < e; ++j)
      if (std::gcd(alphas[i], alphas[j]) != 1)
        fail(ErrorCode::NotCoprimeAlphas,
             "alphas " + std::to_string(alphas[i]) + " and " + std::to_string(alphas[j]) + " are not coprime");
  std::vector<std::pair<Integer, Integer>> generator_alpha;
  for (std::size_t j = 0; j < e; ++j) {
    Integer n = 1;
    for (std::size_t i = 0; i < e; ++i)
      if (i != j) n = checked_mul(n, alphas[i]);
    generator_alpha.emplace_back(n, alphas[j]);
  }
  std::vector<Integer> raw;
  for (const auto& [n, a] : generator_alpha) raw.push_back(n);
  auto h = NumericalSemigroup::from_generators(raw);
  std::sort(generator_alpha.begin(), generator_alpha.end());
  std::vector<Integer> expected;
  for (const auto& [n, a] : generator_alpha) expected.push_back(a);
  const auto detected = ci_same_degree(h);
  ensure(detected && *detected == expected, [&] { return "alphas do not round-trip through " + h.to_string(); });
  return h;
}

HecCertificate check_H_ec(Integer e, Integer c) {
  if (e < 2 || c < 1) fail(ErrorCode::NotApplicable, "H_{e,c} needs e > 1 and c > 0");
  if (e % 2 != 0 && c % 2 != 0) fail(ErrorCode::BothOdd, "H_{e,c} needs e or c even");
  std::vector<Integer> raw;
  Integer fr = 0;
  if (c == 1) {
    for (Integer k = e + 1; k <= 2 * e; ++k) raw.push_back(k);
    fr = 2 * e + 1;
  } else if (c % 2 == 0) {
    raw = {e + c, e + c + 1};
    for (Integer i = 3; i <= e; ++i) raw.push_back((c * c + (e + 2) * c + 2 * (i - 1)) / 2);
    fr = c * c + (e + 1) * c + 1;
  } else {
    raw = {e + c, e + c + 2};
    for (Integer i = 3; i <= e; ++i) raw.push_back((c * c + (e + 3) * c + 4 * (i - 1) - e) / 2);
    fr = c * c + (e + 2) * c + 2;
  }

  const std::size_t dim = static_cast<std::size_t>(e);
  const std::size_t half = dim / 2;
  const bool even = dim % 2 == 0;
  InversePolynomial j(dim);
  if (c == 1)
    j = even ? pattern(dim, 0, 2, half, dim + 2, half + 1) : pattern(dim, 0, 2, half + 1, dim + 2, 0);
  else
    j = even ? pattern(dim, c + 1, 3, half + 1, dim + 3, 0) : pattern(dim, c + 1, 3, half + 1, dim + 3, half + 2);

  HecCertificate cert{raw, NumericalSemigroup::from_generators(raw), fr, j};
  cert.generators_minimal = cert.h.generators() == raw;
  cert.symmetric = cert.h.is_symmetric();
  cert.multiplicity_matches = cert.h.multiplicity() == e + c;
  cert.frobenius_matches = cert.h.frobenius() == fr;
  cert.j_matches = cert.generators_minimal &&
                   inverse_polynomial(cert.h, cert.h.frobenius() + cert.h.multiplicity()) == cert.predicted_j;
  return cert;
}

HecCertificate construct_H_ec(Integer e, Integer c) {
  auto cert = check_H_ec(e, c);
  ensure(cert.holds(),
         [&] {
           return "H_{" + std::to_string(e) + "," + std::to_string(c) + "} built as " + cert.h.to_string() +
                  " fails: minimal=" + std::to_string(cert.generators_minimal) +
                  " symmetric=" + std::to_string(cert.symmetric) +
                  " multiplicity=" + std::to_string(cert.multiplicity_matches) +
                  " Fr=" + std::to_string(cert.frobenius_matches) + " J=" + std::to_string(cert.j_matches);
         });
  return cert;
}

ShapeTag classify_small_multiplicity(const NumericalSemigroup& h_semigroup) {
  if (!h_semigroup.is_symmetric()) fail(ErrorCode::NotSymmetric, h_semigroup.to_string() + " is not symmetric");
  const auto& n = h_semigroup.generators();
  const std::size_t e = n.size();
  const Integer offset = n[0] - static_cast<Integer>(e);
  if (offset < 1 || offset > 3)
    fail(ErrorCode::MultiplicityOutOfRange, "multiplicity of " + h_semigroup.to_string() + " is not in e+1..e+3");
  const Integer fr = h_semigroup.frobenius();
  const auto j = inverse_polynomial(h_semigroup, fr + n[0]);

  ShapeTag tag;
  tag.multiplicity_offset = offset;
  tag.order = j.max_order();
  for (auto it = j.terms().rbegin(); it != j.terms().rend(); ++it) {
    std::vector<std::size_t> vars;
    for (std::size_t i = 0; i < e; ++i)
      for (Integer k = 0; k < it->first[i]; ++k) vars.push_back(i + 1);
    tag.pair_matching.push_back(std::move(vars));
  }

  const std::size_t half = e / 2;
  const bool even = e % 2 == 0;
  auto sum = [&](std::size_t a, std::size_t b) { return n[a - 1] + n[b - 1]; };
  if (offset == 1) {
    tag.variant = even ? "2" : "1";
    const auto expected = even ? pattern(e, 0, 2, half, e + 2, half + 1) : pattern(e, 0, 2, half + 1, e + 2, 0);
    if (j != expected) fail(ErrorCode::NoShapeMatch, "J_{H,Fr+n_1} = " + j.to_string() + " fits no shape");
    for (std::size_t i = 2; i <= e; ++i)
      ensure(sum(i, e + 2 - i) == fr + static_cast<Integer>(e) + 1,
             [&] { return "pair sums of " + h_semigroup.to_string() + " differ from Fr + e + 1"; });
  } else if (offset == 2) {
    tag.variant = even ? "4" : "3";
    const auto expected = even ? pattern(e, 3, 3, half + 1, e + 3, 0) : pattern(e, 3, 3, half + 1, e + 3, half + 2);
    if (j == expected) {
      const Integer target = fr + static_cast<Integer>(e) + 2;
      ensure(3 * n[1] == target, [&] { return "3 n_2 differs from Fr + e + 2 for " + h_semigroup.to_string(); });
      for (std::size_t i = 3; i <= e; ++i)
        ensure(sum(i, e + 3 - i) == target,
               [&] { return "pair sums of " + h_semigroup.to_string() + " differ from Fr + e + 2"; });
    } else if (power_plus_pairs(tag.pair_matching, e, 3)) {
      tag.exact_pattern = false;
    } else {
      fail(ErrorCode::NoShapeMatch, "J_{H,Fr+n_1} = " + j.to_string() + " fits no shape");
    }
  } else if (even && j == pattern(e, 4, 3, half + 1, e + 3, 0)) {
    tag.variant = "6b";
  } else if (even && power_plus_pairs(tag.pair_matching, e, 4)) {
    tag.variant = "6b";
    tag.exact_pattern = false;
  } else {
    // One term X_i^2 X_j, the rest of order two, every variable once.
    std::vector<int> seen(e + 1, 0);
    std::size_t cubic = 0;
    bool ok = true;
    for (const auto& vars : tag.pair_matching) {
      if (vars.size() == 3) {
        ++cubic;
        ok &= (vars[0] == vars[1]) != (vars[1] == vars[2]);
      } else {
        ok &= vars.size() == 2;
      }
      for (std::size_t v : distinct_of(vars)) ++seen[v];
    }
    for (std::size_t v = 2; v <= e; ++v) ok &= seen[v] == 1;
    ok &= seen[1] == 0 && cubic == 1;
    if (!ok) fail(ErrorCode::NoShapeMatch, "J_{H,Fr+n_1} = " + j.to_string() + " fits no shape");
    tag.variant = "5";
  }
  return tag;
}

bool order_bound_holds(const NumericalSemigroup& h_semigroup) {
  if (!h_semigroup.is_symmetric()) fail(ErrorCode::NotSymmetric, h_semigroup.to_string() + " is not symmetric");
  const Integer s = inverse_polynomial(h_semigroup, h_semigroup.frobenius() + h_semigroup.multiplicity()).max_order();
  return h_semigroup.multiplicity() >= static_cast<Integer>(h_semigroup.embedding_dimension()) + s - 1;
}

}  // namespace invsemi
