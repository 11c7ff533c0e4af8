#include "invsemi/inverse_system.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>

#include "invsemi/linear_algebra.hpp"

namespace invsemi {

InversePolynomial inverse_polynomial(const NumericalSemigroup& h_semigroup, Integer h, std::size_t limit) {
  const std::size_t e = h_semigroup.embedding_dimension();
  InversePolynomial j(e);
  if (!h_semigroup.contains(h)) return j;
  std::size_t count = 0;
  FactorizationEnumerator(h_semigroup.generators(), h).for_each(h, [&](const ExponentVector& a) {
    if (++count > limit)
      fail(ErrorCode::BoundExceeded, "J_{H," + std::to_string(h) + "} has more than " + std::to_string(limit) + " terms");
    j.add_term(a, 1);
    return true;
  });
  return j;
}

std::vector<Integer> degree_set(const NumericalSemigroup& h_semigroup, Integer m) {
  // The set is closed under x -> m - x: scan the lower half and mirror it.
  std::vector<Integer> out;
  out.reserve(static_cast<std::size_t>(std::min<Integer>(m + 1, 1024)));
  for (Integer x = 0; 2 * x <= m; ++x)
    if (h_semigroup.contains(x) && h_semigroup.contains(m - x)) out.push_back(x);
  for (std::size_t k = out.size(); k-- > 0;)
    if (2 * out[k] != m) out.push_back(m - out[k]);
  return out;
}

AnnihilatorPresentation annihilator_of_semigroup_J(const NumericalSemigroup& h_semigroup, Integer m) {
  if (!h_semigroup.contains(m))
    fail(ErrorCode::NotInSemigroup, std::to_string(m) + " is not in " + h_semigroup.to_string());
  const auto& gens = h_semigroup.generators();
  const std::size_t e = gens.size();

  AnnihilatorPresentation out;
  out.degree_set = degree_set(h_semigroup, m);
  out.colength = static_cast<Integer>(out.degree_set.size());

  // x^a is a minimal monomial generator iff y = m - deg a is not in H while
  // y + n_k is for every k in supp(a). Group by y: the generators of degree
  // m - y are the factorizations supported on K(y) = {k : y + n_k in H}.
  for (Integer y = -gens.back(); y < m; ++y) {
    if (h_semigroup.contains(y)) continue;
    std::vector<std::size_t> support;
    std::vector<Integer> weights;
    for (std::size_t k = 0; k < e; ++k) {
      if (!h_semigroup.contains(y + gens[k])) continue;
      support.push_back(k);
      weights.push_back(gens[k]);
    }
    if (support.empty()) continue;
    const Integer target = m - y;
    FactorizationEnumerator(weights, target).for_each(target, [&](const ExponentVector& local) {
      ExponentVector a(e);
      for (std::size_t t = 0; t < support.size(); ++t) a[support[t]] = local[t];
      out.monomial_generators.push_back(std::move(a));
      return true;
    });
  }
  std::sort(out.monomial_generators.begin(), out.monomial_generators.end());

  if (e >= 2) {
    for (const auto& g : minimal_generators(h_semigroup).generators)
      if (h_semigroup.leq(g.degree, m)) out.binomial_generators.push_back(g);
  }
  return out;
}

namespace {

// Every exponent dividing some term of the given polynomials, sorted by
// (order, lex).
std::vector<ExponentVector> staircase_of(std::span<const InversePolynomial> js) {
  std::set<ExponentVector> seen;
  for (const auto& j : js) {
    for (const auto& [top, coefficient] : j.terms()) {
      // Walk the box [0, top] like an odometer.
      ExponentVector a(top.size());
      while (true) {
        seen.insert(a);
        std::size_t i = 0;
        while (i < a.size() && a[i] == top[i]) a[i++] = 0;
        if (i == a.size()) break;
        ++a[i];
      }
    }
  }
  std::vector<ExponentVector> out(seen.begin(), seen.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const ExponentVector& x, const ExponentVector& y) { return x.order() < y.order(); });
  return out;
}

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

// Rank of a family of inverse polynomials over Q. Identical members are
// merged first, then the family is split into blocks that share no
// monomial; ranks of blocks add up.
Integer span_rank(const std::vector<InversePolynomial>& family) {
  std::set<TermMap::Map> distinct;
  for (const auto& p : family)
    if (!p.is_zero()) distinct.insert(p.terms());
  std::vector<const TermMap::Map*> members;
  for (const auto& m : distinct) members.push_back(&m);

  std::map<ExponentVector, std::size_t> column;
  for (const auto* m : members)
    for (const auto& [a, c] : *m) column.try_emplace(a, column.size());
  DisjointSets blocks(column.size());
  for (const auto* m : members) {
    const std::size_t first = column.at(m->begin()->first);
    for (const auto& [a, c] : *m) blocks.unite(first, column.at(a));
  }
  std::map<std::size_t, RowEchelon> echelons;
  Integer rank = 0;
  for (const auto* m : members) {
    SparseVector v;
    for (const auto& [a, c] : *m) v.emplace(column.at(a), Rational(c));
    if (echelons[blocks.find(column.at(m->begin()->first))].insert(std::move(v))) ++rank;
  }
  return rank;
}

// Union-find over staircase monomials plus a ground node standing for every
// monomial of the ideal.
class QuotientClasses {
 public:
  QuotientClasses(const std::vector<ExponentVector>& staircase, const std::vector<ExponentVector>& monomials)
      : staircase_(staircase), sets_(staircase.size() + 1) {
    for (std::size_t k = 0; k < staircase_.size(); ++k) {
      index_.emplace(staircase_[k], k);
      for (const auto& m : monomials)
        if (m.divides(staircase_[k])) {
          sets_.unite(k, ground());
          break;
        }
    }
  }

  /// Adds the multiples of x^u - x^v; returns true when any two classes merged.
  bool add(const ExponentVector& u, const ExponentVector& v) {
    bool merged = false;
    for (std::size_t k = 0; k < staircase_.size(); ++k) {
      const ExponentVector& s = staircase_[k];
      if (u.divides(s)) merged |= sets_.unite(k, slot(s - u + v));
      if (v.divides(s)) merged |= sets_.unite(k, slot(s - v + u));
    }
    return merged;
  }

  Integer colength() {
    const std::size_t g = sets_.find(ground());
    Integer count = 0;
    std::vector<bool> seen(staircase_.size() + 1, false);
    for (std::size_t k = 0; k < staircase_.size(); ++k) {
      const std::size_t r = sets_.find(k);
      if (r == g || seen[r]) continue;
      seen[r] = true;
      ++count;
    }
    return count;
  }

 private:
  std::size_t ground() const { return staircase_.size(); }
  std::size_t slot(const ExponentVector& a) const {
    const auto it = index_.find(a);
    return it == index_.end() ? ground() : it->second;
  }

  const std::vector<ExponentVector>& staircase_;
  std::unordered_map<ExponentVector, std::size_t, ExponentVectorHash> index_;
  DisjointSets sets_;
};

Binomial oriented(const ExponentVector& u, const ExponentVector& v) {
  Binomial b{std::max(u, v), std::min(u, v), 0};
  b.degree = b.lhs.order();
  return b;
}

}  // namespace

Integer contraction_span_dimension(std::span<const InversePolynomial> js) {
  std::vector<InversePolynomial> family;
  const auto staircase = staircase_of(js);
  for (const auto& j : js)
    for (const auto& a : staircase) family.push_back(contract(a, j));
  return span_rank(family);
}

Integer binomial_quotient_colength(const std::vector<ExponentVector>& monomials,
                                   const std::vector<Binomial>& binomials,
                                   const std::vector<ExponentVector>& staircase) {
  QuotientClasses classes(staircase, monomials);
  for (const auto& b : binomials) classes.add(b.lhs, b.rhs);
  return classes.colength();
}

GeneralAnnihilator annihilator_general(const InversePolynomial& j) {
  if (j.is_zero()) fail(ErrorCode::ZeroPolynomial, "the annihilator of 0 is S");
  const InversePolynomial single[] = {j};
  const auto staircase = staircase_of(single);
  std::set<ExponentVector> inside(staircase.begin(), staircase.end());

  std::vector<InversePolynomial> derivatives;
  derivatives.reserve(staircase.size());
  for (const auto& a : staircase) derivatives.push_back(contract(a, j));

  GeneralAnnihilator out;
  auto& p = out.presentation;
  p.colength = span_rank(derivatives);

  // Minimal killing monomials: one step outside the staircase with every
  // predecessor inside.
  std::set<ExponentVector> monomials;
  for (const auto& c : staircase) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      ExponentVector a = c;
      ++a[i];
      if (inside.count(a)) continue;
      bool minimal = true;
      for (std::size_t k = 0; k < a.size() && minimal; ++k) {
        if (a[k] == 0) continue;
        ExponentVector below = a;
        --below[k];
        minimal = inside.count(below) != 0;
      }
      if (minimal) monomials.insert(a);
    }
  }
  p.monomial_generators.assign(monomials.begin(), monomials.end());

  // Binomials x^u - x^v with x^u o J = x^v o J, taken greedily in staircase
  // order and kept only when they shrink the quotient.
  QuotientClasses classes(staircase, p.monomial_generators);
  Integer quotient = classes.colength();
  std::map<TermMap::Map, std::size_t> anchor;
  for (std::size_t k = 0; k < staircase.size() && quotient > p.colength; ++k) {
    const auto [it, fresh] = anchor.try_emplace(derivatives[k].terms(), k);
    if (fresh) continue;
    const ExponentVector& u = staircase[it->second];
    const ExponentVector& v = staircase[k];
    if (!classes.add(u, v)) continue;
    p.binomial_generators.push_back(oriented(u, v));
    quotient = classes.colength();
  }
  out.complete = quotient == p.colength;
  return out;
}

AnnihilatorPresentation binomial_closed_form(const ExponentVector& a, const ExponentVector& b) {
  if (a.size() != b.size()) fail(ErrorCode::DimensionMismatch, "exponent vectors differ in length");
  if (a.is_zero() || b.is_zero() || a == b)
    fail(ErrorCode::NotApplicable, "closed form needs two distinct nonconstant monomials");
  if (!a.disjoint_support(b))
    fail(ErrorCode::NotApplicable, "closed form needs disjoint supports; " + a.to_string() + " and " +
                                       b.to_string() + " share a variable");
  const std::size_t e = a.size();
  std::set<ExponentVector> monomials;
  for (std::size_t i = 0; i < e; ++i) {
    ExponentVector m(e);
    m[i] = std::max(a[i], b[i]) + 1;
    monomials.insert(m);
  }
  for (std::size_t i = 0; i < e; ++i) {
    for (std::size_t j = 0; j < e; ++j) {
      if (!(a[i] < b[i] && a[j] > b[j])) continue;
      ExponentVector m(e);
      m[i] = std::min(a[i], b[i]) + 1;
      m[j] = std::min(a[j], b[j]) + 1;
      monomials.insert(m);
    }
  }
  AnnihilatorPresentation p;
  p.monomial_generators.assign(monomials.begin(), monomials.end());
  p.binomial_generators.push_back(oriented(a, b));
  InversePolynomial j(e);
  j.add_term(a, 1);
  j.add_term(b, 1);
  const InversePolynomial single[] = {j};
  p.colength = binomial_quotient_colength(p.monomial_generators, p.binomial_generators, staircase_of(single));
  return p;
}

std::vector<Integer> balancing_weights(const ExponentVector& a, const ExponentVector& b) {
  if (a.size() != b.size()) fail(ErrorCode::DimensionMismatch, "exponent vectors differ in length");
  Integer up = 0;
  Integer down = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) up += a[i] - b[i];
    if (a[i] < b[i]) down += b[i] - a[i];
  }
  if (up == 0 || down == 0) fail(ErrorCode::NotApplicable, "comparable exponents admit no balancing grading");
  std::vector<Integer> w(a.size(), 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) w[i] = down;
    if (a[i] < b[i]) w[i] = up;
  }
  const Integer g = gcd_of(w);
  for (auto& x : w) x /= g;
  return w;
}

std::size_t binomial_mu_bound(std::size_t e) {
  const std::size_t half = e / 2;
  return e % 2 == 0 ? e + half * half + 1 : e + half * (half + 1);
}

std::size_t graded_minimal_generator_count(const InversePolynomial& j, std::span<const Integer> weights) {
  if (j.is_zero()) fail(ErrorCode::ZeroPolynomial, "the annihilator of 0 is S");
  if (weights.size() != j.dim()) fail(ErrorCode::DimensionMismatch, "weights and polynomial differ in variables");
  for (Integer w : weights)
    if (w < 1) fail(ErrorCode::NotApplicable, "grading weights must be positive");
  const auto top = j.homogeneous_degree(weights);
  if (!top) fail(ErrorCode::NotApplicable, "inverse polynomial is not homogeneous for the given weights");
  const Integer max_weight = *std::max_element(weights.begin(), weights.end());
  const Integer last = *top + max_weight;
  const FactorizationEnumerator monomials_of(std::vector<Integer>(weights.begin(), weights.end()), last);

  std::map<ExponentVector, std::size_t> column;  // E-side monomials
  std::vector<std::vector<ExponentVector>> basis_monomials(static_cast<std::size_t>(last) + 1);
  std::vector<std::vector<SparseVector>> kernels(static_cast<std::size_t>(last) + 1);
  std::size_t mu = 0;
  for (Integer d = 0; d <= last; ++d) {
    auto& monomials = basis_monomials[static_cast<std::size_t>(d)];
    monomials = monomials_of.all(d);
    std::vector<SparseVector> images;
    for (const auto& a : monomials) {
      SparseVector v;
      const InversePolynomial derivative = contract(a, j);
      for (const auto& [b, c] : derivative.terms()) {
        const auto [it, fresh] = column.try_emplace(b, column.size());
        v.emplace(it->second, Rational(c));
      }
      images.push_back(std::move(v));
    }
    auto& kernel = kernels[static_cast<std::size_t>(d)];
    kernel = kernel_basis(images);

    // (m I)_d: x_i times the kernel in degree d - w_i, written over the
    // degree-d monomials.
    std::map<ExponentVector, std::size_t> position;
    for (std::size_t k = 0; k < monomials.size(); ++k) position.emplace(monomials[k], k);
    RowEchelon products;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      const Integer below = d - weights[i];
      if (below < 0) continue;
      const auto& lower = basis_monomials[static_cast<std::size_t>(below)];
      for (const auto& v : kernels[static_cast<std::size_t>(below)]) {
        SparseVector shifted;
        for (const auto& [k, c] : v) {
          ExponentVector a = lower[k];
          ++a[i];
          shifted.emplace(position.at(a), c);
        }
        products.insert(std::move(shifted));
      }
    }
    mu += kernel.size() - products.rank();
  }
  return mu;
}

AlmostSymmetryCheck check_AS(const NumericalSemigroup& h_semigroup, Integer h) {
  if (h <= 0 || !h_semigroup.contains(h))
    fail(ErrorCode::NotInSemigroup, std::to_string(h) + " is not in " + h_semigroup.to_string() + " \\ {0}");
  AlmostSymmetryCheck out;
  out.h = h;
  out.colength = static_cast<Integer>(degree_set(h_semigroup, h_semigroup.frobenius() + h).size());
  out.bound = h - (static_cast<Integer>(h_semigroup.type()) - 1);
  ensure(out.colength <= out.bound,
         [&] {
           return "colength of Ann(J_{H,Fr+" + std::to_string(h) + "}) exceeds h - (type - 1) for " +
                  h_semigroup.to_string();
         });
  out.equality = out.colength == out.bound;
  return out;
}

AlmostSymmetryReport almost_symmetry_report(const NumericalSemigroup& h_semigroup) {
  std::vector<Integer> range(h_semigroup.generators());
  for (Integer w : h_semigroup.apery_by_residue())
    if (w != 0) range.push_back(w);
  std::sort(range.begin(), range.end());
  range.erase(std::unique(range.begin(), range.end()), range.end());

  AlmostSymmetryReport report;
  report.equality_everywhere = true;
  for (Integer h : range) {
    report.checks.push_back(check_AS(h_semigroup, h));
    report.equality_somewhere |= report.checks.back().equality;
    report.equality_everywhere &= report.checks.back().equality;
  }
  report.almost_symmetric = h_semigroup.is_almost_symmetric();
  return report;
}

IntersectionCertificate verify_intersection_theorem(const NumericalSemigroup& h_semigroup, const ExponentVector& a,
                                                    CertificateLevel level) {
  const auto& gens = h_semigroup.generators();
  const Integer h = a.degree(gens);
  if (h == 0) fail(ErrorCode::DegreeZero, "x^a must be a nonconstant monomial");
  const auto& pf = h_semigroup.pseudo_frobenius();

  IntersectionCertificate cert;
  cert.h = h;
  cert.level = level;
  const Integer top = pf.back() + h;
  cert.degree_union.reserve(static_cast<std::size_t>(h));
  for (Integer x = 0; x <= top; ++x) {
    if (!h_semigroup.contains(x)) continue;
    // Largest f first; f + h - x < 0 rules out every smaller f too.
    for (auto f = pf.rbegin(); f != pf.rend() && *f + h >= x; ++f)
      if (h_semigroup.contains(*f + h - x)) {
        cert.degree_union.push_back(x);
        break;
      }
  }
  cert.degree_union_is_apery = cert.degree_union == h_semigroup.apery(h).elements;

  if (level == CertificateLevel::Degrees) {
    // x^a o J_{H,f+h} = J_{H,f}, which vanishes iff f is a gap; binomials of
    // I_H send J_{H,m} to J_{H,m-d} from both sides. The J_{H,x} of distinct
    // degrees are independent, so the span has one dimension per degree.
    cert.generators_annihilate =
        std::none_of(pf.begin(), pf.end(), [&](Integer f) { return h_semigroup.contains(f); });
    cert.intersection_colength = static_cast<Integer>(cert.degree_union.size());
    return cert;
  }

  std::vector<InversePolynomial> js;
  for (Integer f : pf) js.push_back(inverse_polynomial(h_semigroup, f + h));
  std::vector<Binomial> binomials;
  if (gens.size() >= 2) binomials = minimal_generators(h_semigroup).generators;
  cert.generators_annihilate = true;
  for (const auto& j : js) {
    if (!contract(a, j).is_zero()) cert.generators_annihilate = false;
    for (const auto& g : binomials)
      if (!apply(Polynomial::binomial(g.lhs, g.rhs), j).is_zero()) cert.generators_annihilate = false;
  }
  cert.intersection_colength = contraction_span_dimension(js);
  return cert;
}

}  // namespace invsemi
