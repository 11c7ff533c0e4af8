#include "invsemi/enumeration.hpp"

#include <algorithm>

namespace invsemi {

NumericalSemigroup semigroup_from_apery(const std::vector<Integer>& w) {
  const std::size_t m = w.size();
  if (m == 0) fail(ErrorCode::EmptyInput, "empty Apéry set");
  std::vector<Integer> gens{static_cast<Integer>(m)};
  for (std::size_t r = 1; r < m; ++r) {
    bool decomposable = false;
    for (std::size_t i = 1; i < m && !decomposable; ++i) {
      const std::size_t j = (r + m - i) % m;
      decomposable = j != 0 && w[i] + w[j] == w[r];
    }
    if (!decomposable) gens.push_back(w[r]);
  }
  return NumericalSemigroup::from_generators(gens);
}

namespace {

// Partial Kunz coordinates for one multiplicity; w[r] = 0 marks "unassigned"
// for r > 0.
class KunzSearch {
 public:
  KunzSearch(Integer m, Integer max_frobenius, const SemigroupVisitor& visit)
      : m_(static_cast<std::size_t>(m)), cap_(max_frobenius + m), w_(m_, 0), visit_(visit) {}

  void run_all() { descend(1); }

  void run_symmetric() {
    // s is the residue of the largest Apéry element Fr + m.
    for (std::size_t s = 1; s < m_; ++s) {
      for (Integer top = static_cast<Integer>(m_ + s); top <= cap_; top += static_cast<Integer>(m_)) {
        w_[s] = top;
        pair_from(1, s);
        w_[s] = 0;
      }
    }
  }

 private:
  bool consistent(std::size_t r) const {
    const Integer wr = w_[r];
    for (std::size_t j = 1; j < m_; ++j) {
      if (w_[j] == 0) continue;
      const std::size_t sum = (r + j) % m_;
      if (sum != 0 && w_[sum] != 0 && wr + w_[j] < w_[sum]) return false;
      const std::size_t diff = (r + m_ - j) % m_;
      if (diff != 0 && w_[diff] != 0 && w_[j] + w_[diff] < wr) return false;
    }
    return true;
  }

  void emit() { visit_(semigroup_from_apery(w_)); }

  void descend(std::size_t r) {
    if (r == m_) {
      emit();
      return;
    }
    for (Integer v = static_cast<Integer>(m_ + r); v <= cap_; v += static_cast<Integer>(m_)) {
      w_[r] = v;
      if (consistent(r)) descend(r + 1);
    }
    w_[r] = 0;
  }

  void pair_from(std::size_t r, std::size_t s) {
    while (r < m_ && w_[r] != 0) ++r;
    if (r == m_) {
      emit();
      return;
    }
    const std::size_t partner = (s + m_ - r) % m_;
    const Integer top = w_[s];
    if (partner == 0) return;  // only r = s pairs with 0, and w_s is assigned
    if (partner == r) {
      if (top % 2 != 0) return;
      const Integer half = top / 2;
      if (mod(half, static_cast<Integer>(m_)) != static_cast<Integer>(r) || half < static_cast<Integer>(m_ + r)) return;
      w_[r] = half;
      if (consistent(r)) pair_from(r + 1, s);
      w_[r] = 0;
      return;
    }
    for (Integer v = static_cast<Integer>(m_ + r); top - v >= static_cast<Integer>(m_ + partner); v += static_cast<Integer>(m_)) {
      w_[r] = v;
      w_[partner] = top - v;
      if (consistent(r) && consistent(partner)) pair_from(r + 1, s);
    }
    w_[r] = 0;
    w_[partner] = 0;
  }

  std::size_t m_;
  Integer cap_;
  std::vector<Integer> w_;
  const SemigroupVisitor& visit_;
};

}  // namespace

void for_each_semigroup(Integer max_multiplicity, Integer max_frobenius, const SemigroupVisitor& visit) {
  if (max_multiplicity >= 1 && max_frobenius >= -1) visit(NumericalSemigroup::from_generators({1}));
  for (Integer m = 2; m <= max_multiplicity; ++m) KunzSearch(m, max_frobenius, visit).run_all();
}

void for_each_symmetric_semigroup(Integer max_multiplicity, Integer max_frobenius,
                                  const SemigroupVisitor& visit) {
  if (max_multiplicity >= 1 && max_frobenius >= -1) visit(NumericalSemigroup::from_generators({1}));
  for (Integer m = 2; m <= max_multiplicity; ++m) KunzSearch(m, max_frobenius, visit).run_symmetric();
}

}  // namespace invsemi
