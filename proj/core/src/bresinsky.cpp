#include "invsemi/bresinsky.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "invsemi/inverse_system.hpp"

namespace invsemi {

namespace {

BinomialIdealPresentation require_four_gorenstein(const NumericalSemigroup& h_semigroup) {
  if (h_semigroup.embedding_dimension() != 4)
    fail(ErrorCode::NotFourGenerated, h_semigroup.to_string() + " is not 4-generated");
  if (!h_semigroup.is_symmetric()) fail(ErrorCode::NotSymmetric, h_semigroup.to_string() + " is not symmetric");
  auto presentation = minimal_generators(h_semigroup);
  if (presentation.mu == 3)
    fail(ErrorCode::IsCompleteIntersection, h_semigroup.to_string() + " is a complete intersection");
  ensure(presentation.mu == 5, [&] {
    return "symmetric 4-generated " + h_semigroup.to_string() + " has mu(I_H) = " + std::to_string(presentation.mu);
  });
  return presentation;
}

ExponentVector monomial(std::initializer_list<std::pair<std::size_t, Integer>> powers) {
  ExponentVector a(4);
  for (const auto& [i, p] : powers) a[i] += p;
  return a;
}

// Up to `cap` factorizations of h.
std::vector<ExponentVector> first_factorizations(const NumericalSemigroup& h_semigroup, Integer h, std::size_t cap) {
  std::vector<ExponentVector> out;
  if (!h_semigroup.contains(h)) return out;
  FactorizationEnumerator(h_semigroup.generators(), h).for_each(h, [&](const ExponentVector& a) {
    out.push_back(a);
    return out.size() < cap;
  });
  return out;
}

// lhs and rhs joined by moves w + u <-> w + v along the given binomials.
bool connected_by_moves(const ExponentVector& lhs, const ExponentVector& rhs, const std::array<Binomial, 5>& moves) {
  std::set<ExponentVector> seen{lhs};
  std::deque<ExponentVector> queue{lhs};
  while (!queue.empty()) {
    const ExponentVector a = queue.front();
    queue.pop_front();
    if (a == rhs) return true;
    for (const auto& b : moves) {
      for (const auto& [from, to] : {std::pair{&b.lhs, &b.rhs}, std::pair{&b.rhs, &b.lhs}}) {
        if (!from->divides(a)) continue;
        ExponentVector next = a - *from + *to;
        if (seen.insert(next).second) queue.push_back(std::move(next));
      }
    }
  }
  return false;
}

std::optional<PfaffianStructure> try_structure(const NumericalSemigroup& h_semigroup,
                                               const std::array<std::size_t, 4>& perm,
                                               const BinomialIdealPresentation& presentation,
                                               const std::vector<AlphaEntry>& table) {
  PfaffianStructure s;
  s.permutation = perm;
  const auto m = s.relabeled_generators(h_semigroup);
  for (std::size_t k = 0; k < 4; ++k) s.alpha[k] = table[perm[k]].alpha;
  const auto [a1, a2, a3, a4] = s.alpha;
  const auto [m1, m2, m3, m4] = std::array<Integer, 4>{m[0], m[1], m[2], m[3]};

  // Solve f_3, f_2, f_4 in turn for each alpha_31, then check f_1 and f_5.
  for (Integer a31 = 1; a31 < a1; ++a31) {
    const Integer a21 = a1 - a31;
    const Integer r32 = a3 * m3 - a31 * m1;
    if (r32 <= 0 || r32 % m2 != 0) continue;
    const Integer a32 = r32 / m2;
    if (a32 >= a2) continue;
    const Integer a42 = a2 - a32;
    const Integer r24 = a2 * m2 - a21 * m1;
    if (r24 <= 0 || r24 % m4 != 0) continue;
    const Integer a24 = r24 / m4;
    if (a24 >= a4) continue;
    const Integer a14 = a4 - a24;
    const Integer r43 = a4 * m4 - a42 * m2;
    if (r43 <= 0 || r43 % m3 != 0) continue;
    const Integer a43 = r43 / m3;
    if (a43 >= a3) continue;
    const Integer a13 = a3 - a43;
    if (a1 * m1 != a13 * m3 + a14 * m4) continue;
    if (a21 * m1 + a43 * m3 != a32 * m2 + a14 * m4) continue;

    s.alpha_off = {a21, a31, a32, a42, a13, a43, a24, a14};
    const std::array<std::pair<ExponentVector, ExponentVector>, 5> sides{{
        {monomial({{0, a1}}), monomial({{2, a13}, {3, a14}})},
        {monomial({{1, a2}}), monomial({{3, a24}, {0, a21}})},
        {monomial({{2, a3}}), monomial({{0, a31}, {1, a32}})},
        {monomial({{3, a4}}), monomial({{1, a42}, {2, a43}})},
        {monomial({{0, a21}, {2, a43}}), monomial({{1, a32}, {3, a14}})},
    }};
    for (std::size_t i = 0; i < 5; ++i)
      s.generators[i] = Binomial{sides[i].first, sides[i].second, sides[i].first.degree(m)};

    auto set = [&](std::size_t i, std::size_t j, int sign, ExponentVector a) {
      s.skew_matrix[i][j] = {sign, a};
      s.skew_matrix[j][i] = {-sign, a};
    };
    for (auto& row : s.skew_matrix)
      for (auto& entry : row) entry = {0, ExponentVector(4)};
    set(0, 1, -1, monomial({{2, a43}}));
    set(0, 3, -1, monomial({{1, a32}}));
    set(0, 4, -1, monomial({{3, a24}}));
    set(1, 2, 1, monomial({{3, a14}}));
    set(1, 4, -1, monomial({{0, a31}}));
    set(2, 3, -1, monomial({{0, a21}}));
    set(2, 4, -1, monomial({{1, a42}}));
    set(3, 4, -1, monomial({{2, a13}}));

    bool generates = true;
    for (const auto& g : presentation.generators)
      generates &= connected_by_moves(s.to_relabeled(g.lhs), s.to_relabeled(g.rhs), s.generators);
    if (generates) return s;
  }
  return std::nullopt;
}

Polynomial entry(const PfaffianStructure& s, std::size_t i, std::size_t j) {
  const auto& [sign, a] = s.skew_matrix[i][j];
  return sign == 0 ? Polynomial(4) : Polynomial::monomial(a, sign);
}

bool in_apery(const NumericalSemigroup& h_semigroup, Integer x, Integer modulus) {
  return h_semigroup.contains(x) && !h_semigroup.contains(x - modulus);
}

}  // namespace

ExponentVector PfaffianStructure::to_canonical(const ExponentVector& a) const {
  return a.permuted(std::span<const std::size_t>(permutation.data(), 4));
}

ExponentVector PfaffianStructure::to_relabeled(const ExponentVector& a) const {
  ExponentVector r(4);
  for (std::size_t k = 0; k < 4; ++k) r[k] = a[permutation[k]];
  return r;
}

std::vector<Integer> PfaffianStructure::relabeled_generators(const NumericalSemigroup& h_semigroup) const {
  std::vector<Integer> m;
  for (std::size_t k : permutation) m.push_back(h_semigroup.generator(k));
  return m;
}

std::vector<AlphaEntry> alpha_table(const NumericalSemigroup& h_semigroup) {
  const auto& gens = h_semigroup.generators();
  const std::size_t e = gens.size();
  if (e < 2) fail(ErrorCode::NotApplicable, "alpha table needs at least two generators");
  std::vector<AlphaEntry> table;
  for (std::size_t i = 0; i < e; ++i) {
    std::vector<Integer> others;
    Integer cap = std::numeric_limits<Integer>::max();
    for (std::size_t j = 0; j < e; ++j) {
      if (j == i) continue;
      others.push_back(gens[j]);
      cap = std::min(cap, gens[j] / std::gcd(gens[i], gens[j]));
    }
    const FactorizationEnumerator enumerator(others, checked_mul(cap, gens[i]));
    AlphaEntry entry;
    for (Integer alpha = 1; alpha <= cap; ++alpha) {
      if (!enumerator.representable(alpha * gens[i])) continue;
      entry.alpha = alpha;
      for (const auto& local : enumerator.all(alpha * gens[i])) {
        std::vector<Integer> coords(local.coords());
        coords.insert(coords.begin() + static_cast<std::ptrdiff_t>(i), 0);
        entry.factorizations.emplace_back(std::move(coords));
      }
      break;
    }
    ensure(entry.alpha > 0,
           [&] { return "no multiple of " + std::to_string(gens[i]) + " lies in the other generators"; });
    table.push_back(std::move(entry));
  }
  return table;
}

std::optional<PfaffianStructure> pfaffian_structure_with(const NumericalSemigroup& h_semigroup,
                                                         const std::array<std::size_t, 4>& permutation) {
  if (h_semigroup.embedding_dimension() != 4)
    fail(ErrorCode::NotFourGenerated, h_semigroup.to_string() + " is not 4-generated");
  const auto presentation = minimal_generators(h_semigroup);
  std::array<std::size_t, 4> sorted = permutation;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::array<std::size_t, 4>{0, 1, 2, 3})
    fail(ErrorCode::InvalidGenerator, "relabeling must be a permutation of 0..3");
  return try_structure(h_semigroup, permutation, presentation, alpha_table(h_semigroup));
}

PfaffianStructure pfaffian_structure(const NumericalSemigroup& h_semigroup) {
  const auto presentation = require_four_gorenstein(h_semigroup);
  const auto table = alpha_table(h_semigroup);
  std::array<std::size_t, 4> perm{0, 1, 2, 3};
  do {
    if (auto s = try_structure(h_semigroup, perm, presentation, table)) return *s;
  } while (std::next_permutation(perm.begin(), perm.end()));
  fail(ErrorCode::StructureNotFound, "no relabeling of " + h_semigroup.to_string() + " fits the Pfaffian format");
}

Polynomial pfaffian_of_minor(const PfaffianStructure& structure, std::size_t i) {
  if (i >= 5) fail(ErrorCode::InvalidGenerator, "minor index out of range");
  std::array<std::size_t, 4> r{};
  for (std::size_t k = 0, t = 0; k < 5; ++k)
    if (k != i) r[t++] = k;
  auto m = [&](std::size_t a, std::size_t b) { return entry(structure, r[a], r[b]); };
  return m(0, 1) * m(2, 3) - m(0, 2) * m(1, 3) + m(0, 3) * m(1, 2);
}

TwoFactorizationWitness two_factorization_witness(const NumericalSemigroup& h_semigroup) {
  require_four_gorenstein(h_semigroup);
  TwoFactorizationWitness w;
  for (std::size_t i = 0; i < 4; ++i) {
    const auto facts = first_factorizations(h_semigroup, h_semigroup.frobenius() + h_semigroup.generator(i), 3);
    if (facts.size() != 2) continue;
    if (w.all_indices.empty()) {
      w.index = i;
      w.factorizations = {facts[0], facts[1]};
    }
    w.all_indices.push_back(i);
  }
  if (w.all_indices.empty())
    fail(ErrorCode::NoWitness, "no Fr + n_i of " + h_semigroup.to_string() + " has exactly two factorizations");
  return w;
}

Relabeling relabeling_of(const NumericalSemigroup& h_semigroup, const std::vector<Integer>& listed) {
  const auto& gens = h_semigroup.generators();
  if (listed.size() != 4 || gens.size() != 4) return std::nullopt;
  std::array<std::size_t, 4> perm{};
  for (std::size_t k = 0; k < 4; ++k) {
    const auto it = std::find(gens.begin(), gens.end(), listed[k]);
    if (it == gens.end()) return std::nullopt;
    perm[k] = static_cast<std::size_t>(it - gens.begin());
  }
  std::array<std::size_t, 4> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::array<std::size_t, 4>{0, 1, 2, 3}) return std::nullopt;
  return perm;
}

FourGorensteinCertificate check_4gor(const NumericalSemigroup& h_semigroup, const Relabeling& preferred) {
  const auto presentation = require_four_gorenstein(h_semigroup);
  const auto table = alpha_table(h_semigroup);
  FourGorensteinCertificate c;
  std::optional<PfaffianStructure> chosen;
  if (preferred) chosen = try_structure(h_semigroup, *preferred, presentation, table);
  c.structure = chosen ? *chosen : pfaffian_structure(h_semigroup);
  const auto& s = c.structure;
  const auto m = s.relabeled_generators(h_semigroup);
  const auto& n = h_semigroup.generators();
  const Integer fr = h_semigroup.frobenius();
  const auto [a1, a2, a3, a4] = s.alpha;

  // (a)
  const ExponentVector first{0, a2 - 1, a3 - 1, s.a14() - 1};
  const ExponentVector second{0, s.a32() - 1, s.a13() - 1, a4 + s.a14() - 1};
  auto is_factorization = [&](const ExponentVector& v) {
    return std::all_of(v.coords().begin(), v.coords().end(), [](Integer x) { return x >= 0; }) &&
           v.degree(m) == fr + m[0];
  };
  c.stated_factorizations = is_factorization(first) && is_factorization(second);

  // (b)
  c.divisibility_branch = s.a42() <= s.a32() - 1 && s.a43() <= s.a13() - 1;
  c.predicted_j = InversePolynomial(4);
  InversePolynomial printed(4);
  for (Integer k = -1;; ++k) {
    const Integer p2 = s.a32() - 1 - k * s.a42();
    const Integer p3 = s.a13() - 1 - k * s.a43();
    if (p2 < 0 || p3 < 0) break;
    c.predicted_j.add_term(ExponentVector{0, p2, p3, s.a14() - 1 + (k + 1) * a4}, 1);
    if (c.divisibility_branch && k >= 0) printed.add_term(ExponentVector{0, p2, p3, (k + 1) * a4}, 1);
  }
  if (!c.divisibility_branch) printed = c.predicted_j;
  std::array<std::size_t, 4> inverse{};
  for (std::size_t k = 0; k < 4; ++k) inverse[s.permutation[k]] = k;
  const auto direct = inverse_polynomial(h_semigroup, fr + m[0]).permuted(inverse);
  c.j_matches = direct == c.predicted_j;
  c.printed_j_matches = direct == printed;

  // (c)
  const Integer big_n = m[0] + m[1] + m[2] + m[3];
  c.degree_identity = true;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j)
      if (s.skew_matrix[i][j].first != 0)
        c.degree_identity &= fr + big_n == s.skew_matrix[i][j].second.degree(m) + s.generators[i].degree +
                                               s.generators[j].degree;

  // (d)
  c.no_unique_factorization = true;
  for (std::size_t i = 0; i < 4; ++i)
    c.no_unique_factorization &= first_factorizations(h_semigroup, fr + n[i], 2).size() == 2;
  std::array<std::optional<std::size_t>, 4> target{};
  c.apery_alpha_exists = c.apery_alpha_unique = c.restricted_factorization = true;
  for (std::size_t i = 0; i < 4; ++i) {
    std::vector<std::size_t> js;
    for (std::size_t j = 0; j < 4; ++j)
      if (in_apery(h_semigroup, table[j].alpha * n[j], n[i])) js.push_back(j);
    c.apery_alpha_exists &= !js.empty();
    bool equal_values = js.size() <= 2;
    for (std::size_t j : js) equal_values &= table[j].alpha * n[j] == table[js[0]].alpha * n[js[0]];
    c.apery_alpha_unique &= equal_values && js.size() == 1;
    if (js.size() == 1) target[i] = js[0];
    const auto facts = factorizations(h_semigroup, fr + n[i]);
    for (std::size_t j : js)
      c.restricted_factorization &=
          std::count_if(facts.begin(), facts.end(), [&](const ExponentVector& v) { return v[j] < table[j].alpha; }) == 1;
  }
  c.apery_pattern = true;
  std::set<std::size_t> images;
  for (std::size_t i = 0; i < 4; ++i) {
    c.apery_pattern &= target[i].has_value() && *target[i] != i;
    if (target[i]) images.insert(*target[i]);
  }
  c.apery_pattern &= images.size() == 4;
  std::set<Integer> products;
  for (std::size_t j = 0; j < 4; ++j) products.insert(table[j].alpha * n[j]);
  c.alpha_products_distinct = products.size() == 4;

  // (e)
  c.mu_is_five = presentation.mu == 5;

  c.pfaffians_match = true;
  for (std::size_t i = 0; i < 5; ++i) {
    const auto f = Polynomial::binomial(s.generators[i].lhs, s.generators[i].rhs);
    const auto pf = pfaffian_of_minor(s, i);
    c.pfaffians_match &= pf == f || pf == -f;
  }

  const auto witness = two_factorization_witness(h_semigroup);
  const auto j = inverse_polynomial(h_semigroup, fr + n[witness.index]);
  c.witness_mu = graded_minimal_generator_count(j, n) - 1;
  std::size_t artinian = 0;
  for (const auto& [d, count] : artinian_generator_degrees(h_semigroup, witness.index)) artinian += count;
  c.witness_mu_matches = c.witness_mu == artinian && (artinian == 3 || artinian == 5);
  return c;
}

FourGorensteinCertificate verify_4gor(const NumericalSemigroup& h_semigroup, const Relabeling& preferred) {
  auto c = check_4gor(h_semigroup, preferred);
  ensure(c.holds(),
         [&] { return "a clause of the 4-generated Gorenstein structure fails for " + h_semigroup.to_string(); });
  return c;
}

}  // namespace invsemi
