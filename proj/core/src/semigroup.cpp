#include "invsemi/semigroup.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace invsemi {

void add_to_residue_table(std::vector<Integer>& table, Integer generator) {
  const Integer m = static_cast<Integer>(table.size());
  const Integer step = generator % m;
  if (step == 0) return;
  const Integer d = std::gcd(step, m);
  const Integer cycle = m / d;
  for (Integer p = 0; p < d; ++p) {
    // Start the walk at the cycle minimum; one pass then suffices.
    Integer start = p;
    Integer r = p;
    for (Integer k = 0; k < cycle; ++k) {
      if (table[static_cast<std::size_t>(r)] < table[static_cast<std::size_t>(start)]) start = r;
      r = (r + step) % m;
    }
    if (table[static_cast<std::size_t>(start)] == kUnreachable) continue;
    r = start;
    for (Integer k = 1; k < cycle; ++k) {
      const Integer next = (r + step) % m;
      const Integer candidate = checked_add(table[static_cast<std::size_t>(r)], generator);
      auto& slot = table[static_cast<std::size_t>(next)];
      if (candidate < slot) slot = candidate;
      r = next;
    }
  }
}

std::vector<Integer> residue_table(std::span<const Integer> generators, Integer modulus) {
  if (modulus <= 0) fail(ErrorCode::ZeroModulus, "modulus must be positive");
  if (modulus > NumericalSemigroup::kMaxMultiplicity)
    fail(ErrorCode::TooLarge, "modulus " + std::to_string(modulus) + " too large");
  std::vector<Integer> table(static_cast<std::size_t>(modulus), kUnreachable);
  table[0] = 0;
  for (Integer g : generators) add_to_residue_table(table, g);
  return table;
}

NumericalSemigroup NumericalSemigroup::from_generators(std::span<const Integer> raw) {
  if (raw.empty()) fail(ErrorCode::EmptyInput, "no generators given");
  std::vector<Integer> sorted(raw.begin(), raw.end());
  for (Integer g : sorted)
    if (g < 1) fail(ErrorCode::InvalidGenerator, "generator " + std::to_string(g) + " is not positive");
  std::sort(sorted.begin(), sorted.end());
  const bool had_duplicates = std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (gcd_of(sorted) != 1) fail(ErrorCode::GcdNotOne, "generators have a common divisor");

  const Integer n1 = sorted.front();
  if (n1 > kMaxMultiplicity)
    fail(ErrorCode::TooLarge, "multiplicity " + std::to_string(n1) + " exceeds supported range");
  // Every Apéry element is below n_1 * n_e; keep that in range.
  checked_mul(n1, checked_add(sorted.back(), 1));

  NumericalSemigroup h;
  h.apery_mod_multiplicity_.assign(static_cast<std::size_t>(n1), kUnreachable);
  h.apery_mod_multiplicity_[0] = 0;
  h.generators_.push_back(n1);
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    const Integer g = sorted[i];
    if (h.apery_mod_multiplicity_[static_cast<std::size_t>(g % n1)] <= g) continue;
    h.generators_.push_back(g);
    add_to_residue_table(h.apery_mod_multiplicity_, g);
  }
  h.input_was_minimal_ = !had_duplicates && h.generators_.size() == sorted.size();
  h.compute_invariants();
  return h;
}

namespace {
constexpr Integer kSmallMembershipLimit = 4096;
}  // namespace

void NumericalSemigroup::compute_invariants() {
  const Integer n1 = multiplicity();
  const auto& ap = apery_mod_multiplicity_;
  Integer max_element = 0;
  Integer genus = 0;
  for (std::size_t r = 0; r < ap.size(); ++r) {
    max_element = std::max(max_element, ap[r]);
    genus += (ap[r] - static_cast<Integer>(r)) / n1;
  }
  invariants_.frobenius = max_element - n1;
  invariants_.genus = genus;
  if (invariants_.frobenius < kSmallMembershipLimit) {
    small_members_.resize(static_cast<std::size_t>(invariants_.frobenius + 1));
    for (Integer n = 0; n <= invariants_.frobenius; ++n)
      small_members_[static_cast<std::size_t>(n)] = ap[static_cast<std::size_t>(n % n1)] <= n;
  }

  std::vector<Integer> pf;
  for (Integer w : ap) {
    const Integer f = w - n1;
    if (contains(f)) continue;
    bool all = true;
    for (Integer g : generators_) {
      if (!contains(f + g)) {
        all = false;
        break;
      }
    }
    if (all) pf.push_back(f);
  }
  std::sort(pf.begin(), pf.end());
  invariants_.pseudo_frobenius = std::move(pf);
  invariants_.type = invariants_.pseudo_frobenius.size();
  invariants_.is_symmetric = invariants_.type == 1;
  invariants_.is_almost_symmetric =
      2 * genus == invariants_.frobenius + static_cast<Integer>(invariants_.type);
}

AperySet NumericalSemigroup::apery(Integer h) const {
  if (h == 0) fail(ErrorCode::ZeroModulus, "Apéry set needs a nonzero element");
  if (!contains(h)) fail(ErrorCode::NotInSemigroup, std::to_string(h) + " is not in " + to_string());
  AperySet result{h, {}};
  const Integer top = frobenius() + h;
  if (top / h <= 4 * static_cast<Integer>(generators_.size())) {
    // Short range: w in Ap(H, h) iff w in H and w - h is not, all below Fr + h.
    result.elements.reserve(static_cast<std::size_t>(h));
    for (Integer w = 0; w <= top; ++w)
      if (contains(w) && !contains(w - h)) result.elements.push_back(w);
    return result;
  }
  result.elements = residue_table(generators_, h);
  std::sort(result.elements.begin(), result.elements.end());
  return result;
}

NumericalSemigroup NumericalSemigroup::parse(std::string_view text) {
  std::vector<Integer> values;
  std::string token;
  auto flush = [&](bool final_token) {
    if (token.empty()) {
      if (!final_token || !values.empty())
        fail(ErrorCode::InvalidGenerator, "empty entry in generator list");
      return;
    }
    Integer v = 0;
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last)
      fail(ErrorCode::InvalidGenerator, "cannot parse generator '" + token + "'");
    values.push_back(v);
    token.clear();
  };
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == ',') {
      flush(false);
      continue;
    }
    token.push_back(c);
  }
  flush(true);
  return from_generators(values);
}

std::string NumericalSemigroup::to_string() const {
  std::ostringstream out;
  out << '<';
  for (std::size_t i = 0; i < generators_.size(); ++i) out << (i ? "," : "") << generators_[i];
  out << '>';
  return out.str();
}

}  // namespace invsemi
