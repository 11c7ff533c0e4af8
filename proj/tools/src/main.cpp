#include <iostream>
#include <random>

#include "CLI11.hpp"
#include "invsemi/bresinsky.hpp"
#include "invsemi/gluing.hpp"
#include "invsemi/inverse_system.hpp"
#include "invsemi/structure.hpp"
#include "render.hpp"

namespace invsemi::cli {
namespace {

enum Exit { Ok = 0, Domain = 1, Usage = 2, Fatal = 3 };

struct Options {
  bool json = false;
  std::size_t bound = 100000;
  std::uint64_t seed = 1;
};

// Result of one subcommand; `sound` false means a certificate failed.
struct Outcome {
  ordered_json body;
  bool sound = true;
};

NumericalSemigroup semigroup(const std::string& text) {
  return NumericalSemigroup::from_generators(parse_integer_list(text));
}

ordered_json invariants_json(const NumericalSemigroup& h) {
  return {{"generators", h.generators()},
          {"multiplicity", h.multiplicity()},
          {"embedding_dimension", h.embedding_dimension()},
          {"frobenius", h.frobenius()},
          {"genus", h.genus()},
          {"pseudo_frobenius", h.pseudo_frobenius()},
          {"type", h.type()},
          {"symmetric", h.is_symmetric()},
          {"almost_symmetric", h.is_almost_symmetric()}};
}

ordered_json presentation_json(const AnnihilatorPresentation& p) {
  ordered_json monomials = ordered_json::array();
  for (const auto& a : p.monomial_generators) monomials.push_back(to_json(Polynomial::monomial(a)));
  ordered_json binomials = ordered_json::array();
  for (const auto& b : p.binomial_generators) binomials.push_back(to_json(b));
  return {{"colength", p.colength}, {"monomials", monomials}, {"binomials", binomials}, {"degree_set", p.degree_set}};
}

Outcome info(const std::string& gens) {
  const auto h = semigroup(gens);
  auto body = invariants_json(h);
  body["input_was_minimal"] = h.input_was_minimal();
  return {body};
}

Outcome apery(const std::string& gens, std::optional<Integer> modulus) {
  const auto h = semigroup(gens);
  const auto ap = h.apery(modulus.value_or(h.multiplicity()));
  return {{{"modulus", ap.modulus}, {"elements", ap.elements}}};
}

Outcome factorize(const std::string& gens, Integer n, const Options& opt) {
  const auto h = semigroup(gens);
  ordered_json list = ordered_json::array();
  for (const auto& a : factorizations(h, n, opt.bound)) list.push_back(to_json(a));
  return {{{"h", n}, {"count", to_json(denumerant(h, n))}, {"factorizations", list}}};
}

Outcome invpoly(const std::string& gens, Integer n, const Options& opt) {
  const auto h = semigroup(gens);
  return {{{"h", n}, {"j", to_json(inverse_polynomial(h, n, opt.bound))}}};
}

Outcome ann(const std::string& gens, Integer m) {
  const auto h = semigroup(gens);
  return {{{"m", m}, {"j", to_json(inverse_polynomial(h, m))}, {"annihilator", presentation_json(annihilator_of_semigroup_J(h, m))}}};
}

Outcome check_as(const std::string& gens) {
  const auto h = semigroup(gens);
  const auto report = almost_symmetry_report(h);
  ordered_json checks = ordered_json::array();
  bool inequality = true;
  for (const auto& c : report.checks) {
    checks.push_back({{"h", c.h}, {"colength", c.colength}, {"bound", c.bound}, {"equality", c.equality}});
    inequality &= c.colength <= c.bound;
  }
  return {{{"almost_symmetric", report.almost_symmetric},
           {"equality_somewhere", report.equality_somewhere},
           {"equality_everywhere", report.equality_everywhere},
           {"checks", checks}},
          inequality && (!report.almost_symmetric || report.equality_everywhere)};
}

Outcome verify_intersection(const std::string& gens, const std::string& monomial, const std::string& level_name) {
  const auto h = semigroup(gens);
  const std::size_t e = h.embedding_dimension();
  if (level_name != "degrees" && level_name != "polynomials") throw UsageError("--level is degrees or polynomials");
  const auto level = level_name == "degrees" ? CertificateLevel::Degrees : CertificateLevel::Polynomials;
  std::vector<ExponentVector> monomials;
  if (monomial.empty()) {
    for (std::size_t i = 0; i < e; ++i) monomials.push_back(ExponentVector::unit(e, i));
  } else {
    const auto a = parse_integer_list(monomial, 0);
    if (a.size() != e) throw UsageError("--monomial needs " + std::to_string(e) + " exponents");
    monomials.emplace_back(a);
  }
  Outcome out{{{"level", level_name}, {"certificates", ordered_json::array()}}};
  for (const auto& a : monomials) {
    const auto c = verify_intersection_theorem(h, a, level);
    out.body["certificates"].push_back({{"monomial", to_json(a)},
                                        {"h", c.h},
                                        {"generators_annihilate", c.generators_annihilate},
                                        {"intersection_colength", c.intersection_colength},
                                        {"degree_union_is_apery", c.degree_union_is_apery},
                                        {"holds", c.holds()}});
    out.sound &= c.holds();
  }
  return out;
}

Outcome glue_command(const std::string& h1, Integer d1, const std::string& h2, Integer d2,
                     const std::vector<Integer>& invpoly_args) {
  const GluingSpec spec{semigroup(h1), semigroup(h2), d1, d2};
  const auto r = glue(spec);
  ordered_json body = invariants_json(r.h);
  body["block_permutation"] = r.permutation;
  body["predicted"] = {{"frobenius", r.predicted.frobenius},
                       {"genus", r.predicted.genus},
                       {"pseudo_frobenius", r.predicted.pseudo_frobenius},
                       {"type", r.predicted.type}};
  if (!invpoly_args.empty()) {
    if (invpoly_args.size() != 2) throw UsageError("--invpoly takes m1 m2");
    const Integer m = d1 * invpoly_args[0] + d2 * invpoly_args[1];
    body["invpoly"] = {{"m", m}, {"j_block", to_json(glued_inverse_poly(spec, invpoly_args[0], invpoly_args[1]))}};
  }
  return {body};
}

Outcome free_command(const std::string& gens) {
  const auto h = semigroup(gens);
  const auto w = is_free(h);
  ordered_json body{{"free", w.has_value()}};
  if (w) {
    body["ordering"] = w->ordering;
    body["gcd_chain"] = w->gcd_chain;
    body["telescopic_frobenius"] = w->telescopic_frobenius;
  }
  bool sound = true;
  if (h.is_symmetric() && h.embedding_dimension() > 1) {
    const auto m = monomial_criterion(h);
    body["monomial_indices"] = m.monomial_indices;
    body["equivalence_holds"] = m.equivalence_holds();
    sound = m.equivalence_holds();
  }
  return {body, sound};
}

Outcome hec(Integer e, Integer c) {
  const auto cert = check_H_ec(e, c);
  return {{{"defined_generators", cert.defined_generators},
           {"generators", cert.h.generators()},
           {"frobenius", cert.h.frobenius()},
           {"predicted_frobenius", cert.predicted_frobenius},
           {"predicted_j", to_json(cert.predicted_j)},
           {"generators_minimal", cert.generators_minimal},
           {"symmetric", cert.symmetric},
           {"multiplicity_matches", cert.multiplicity_matches},
           {"frobenius_matches", cert.frobenius_matches},
           {"j_matches", cert.j_matches}},
          cert.holds()};
}

Outcome classify(const std::string& gens) {
  const auto h = semigroup(gens);
  const auto t = classify_small_multiplicity(h);
  return {{{"multiplicity_offset", t.multiplicity_offset},
           {"variant", t.variant},
           {"exact_pattern", t.exact_pattern},
           {"order", t.order},
           {"terms", t.pair_matching},
           {"j", to_json(inverse_polynomial(h, h.frobenius() + h.multiplicity()))},
           {"order_bound_holds", order_bound_holds(h)}}};
}

Outcome ci(const std::string& gens, const std::string& alphas) {
  if (!alphas.empty()) {
    const auto h = construct_from_alphas(parse_integer_list(alphas));
    return {{{"generators", h.generators()}, {"alphas", ci_same_degree(h).value()}}};
  }
  const auto a = ci_same_degree(semigroup(gens));
  return {{{"same_degree_ci", a.has_value()}, {"alphas", a ? ordered_json(*a) : ordered_json()}}};
}

Outcome bresinsky(const std::string& gens) {
  const auto listed = parse_integer_list(gens);
  const auto h = NumericalSemigroup::from_generators(listed);
  const auto table = alpha_table(h);
  const auto preferred = relabeling_of(h, listed);
  std::optional<PfaffianStructure> s;
  if (preferred) s = pfaffian_structure_with(h, *preferred);
  if (!s) s = pfaffian_structure(h);
  const auto w = two_factorization_witness(h);
  ordered_json alphas = ordered_json::array();
  for (const auto& entry : table) alphas.push_back(entry.alpha);
  ordered_json body = to_json(*s);
  body["canonical_alpha"] = alphas;
  body["witness_index"] = w.index;
  body["witness_indices"] = w.all_indices;
  body["witness_factorizations"] = {to_json(w.factorizations[0]), to_json(w.factorizations[1])};
  return {body};
}

Outcome verify_4gor_command(const std::string& gens) {
  const auto listed = parse_integer_list(gens);
  const auto h = NumericalSemigroup::from_generators(listed);
  const auto c = check_4gor(h, relabeling_of(h, listed));
  return {{{"structure", to_json(c.structure)},
           {"stated_factorizations", c.stated_factorizations},
           {"divisibility_branch", c.divisibility_branch},
           {"predicted_j", to_json(c.predicted_j)},
           {"j_matches", c.j_matches},
           {"printed_j_matches", c.printed_j_matches},
           {"degree_identity", c.degree_identity},
           {"no_unique_factorization", c.no_unique_factorization},
           {"apery_alpha_exists", c.apery_alpha_exists},
           {"apery_alpha_unique", c.apery_alpha_unique},
           {"restricted_factorization", c.restricted_factorization},
           {"apery_pattern", c.apery_pattern},
           {"alpha_products_distinct", c.alpha_products_distinct},
           {"mu_is_five", c.mu_is_five},
           {"pfaffians_match", c.pfaffians_match},
           {"witness_mu", c.witness_mu},
           {"witness_mu_matches", c.witness_mu_matches},
           {"holds", c.holds()}},
          c.holds()};
}

Outcome mu(const std::string& gens, std::optional<std::size_t> artinian) {
  const auto h = semigroup(gens);
  const auto p = minimal_generators(h);
  ordered_json generators = ordered_json::array();
  for (const auto& g : p.generators) generators.push_back(to_json(g));
  ordered_json body{{"mu", p.mu}, {"betti_degrees", p.betti_degrees}, {"generators", generators}};
  if (artinian) {
    if (*artinian >= h.embedding_dimension()) throw UsageError("--artinian index out of range");
    ordered_json degrees = ordered_json::object();
    for (const auto& [d, count] : artinian_generator_degrees(h, *artinian)) degrees[std::to_string(d)] = count;
    body["artinian_degrees"] = degrees;
  }
  return {body};
}

// Random m in H below the bound for the seeded J listing.
Outcome sample(const std::string& gens, std::size_t count, const Options& opt) {
  const auto h = semigroup(gens);
  std::mt19937_64 rng(opt.seed);
  const Integer top = std::max<Integer>(h.frobenius() + 2 * h.multiplicity(), 1);
  std::uniform_int_distribution<Integer> pick(0, top);
  ordered_json rows = ordered_json::array();
  while (rows.size() < count) {
    const Integer m = pick(rng);
    if (!h.contains(m)) continue;
    rows.push_back({{"m", m}, {"colength", annihilator_of_semigroup_J(h, m).colength}});
  }
  return {{{"seed", opt.seed}, {"samples", rows}}};
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"Invariants, inverse polynomials and structure of numerical semigroups"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_flag("--json", opt.json, "Print JSON");
  app.add_option("--bound", opt.bound, "Cap on enumerated factorizations and terms")->check(CLI::PositiveNumber);
  app.add_option("--seed", opt.seed, "Seed for randomized subcommands");

  std::string gens, h1, h2, alphas, monomial, level = "polynomials";
  Integer number = 0, d1 = 0, d2 = 0, e = 0, c = 0;
  std::optional<Integer> modulus;
  std::optional<std::size_t> artinian;
  std::size_t count = 5;
  std::vector<Integer> invpoly_args;
  std::function<Outcome()> action;

  auto with_gens = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("generators", gens, "Comma-separated generators")->required();
    return sub;
  };

  with_gens("info", "Frobenius number, genus, pseudo-Frobenius set, type")->callback([&] { action = [&] { return info(gens); }; });
  auto* ap = with_gens("apery", "Apery set with respect to a member (default n_1)");
  ap->add_option("modulus", modulus);
  ap->callback([&] { action = [&] { return apery(gens, modulus); }; });
  auto* fz = with_gens("factorize", "Factorizations of an element");
  fz->add_option("element", number)->required();
  fz->callback([&] { action = [&] { return factorize(gens, number, opt); }; });
  auto* ip = with_gens("invpoly", "Inverse polynomial J_{H,h}");
  ip->add_option("element", number)->required();
  ip->callback([&] { action = [&] { return invpoly(gens, number, opt); }; });
  auto* an = with_gens("ann", "Annihilator of J_{H,m}");
  an->add_option("m", number)->required();
  an->callback([&] { action = [&] { return ann(gens, number); }; });
  with_gens("check-as", "Almost symmetry inequality at every generator")->callback([&] {
    action = [&] { return check_as(gens); };
  });
  auto* vi = with_gens("verify-intersection", "I_H + (x^a) as an intersection of annihilators");
  vi->add_option("--monomial", monomial, "Exponents of x^a (default: every variable)");
  vi->add_option("--level", level, "degrees or polynomials");
  vi->callback([&] { action = [&] { return verify_intersection(gens, monomial, level); }; });
  auto* gl = app.add_subcommand("glue", "Gluing <d1 H1, d2 H2>");
  gl->add_option("--h1", h1)->required();
  gl->add_option("--d1", d1)->required();
  gl->add_option("--h2", h2)->required();
  gl->add_option("--d2", d2)->required();
  gl->add_option("--invpoly", invpoly_args, "m1 m2")->expected(2);
  gl->callback([&] { action = [&] { return glue_command(h1, d1, h2, d2, invpoly_args); }; });
  with_gens("free", "Freeness and the monomial criterion")->callback([&] { action = [&] { return free_command(gens); }; });
  auto* hc = app.add_subcommand("hec", "The semigroup H_{e,c}");
  hc->add_option("e", e)->required();
  hc->add_option("c", c)->required();
  hc->callback([&] { action = [&] { return hec(e, c); }; });
  with_gens("classify", "Shape of J_{H,Fr+n_1} for n_1 <= e + 3")->callback([&] {
    action = [&] { return classify(gens); };
  });
  auto* cs = app.add_subcommand("ci", "Complete intersections generated in one degree");
  cs->add_option("generators", gens);
  cs->add_option("--alphas", alphas, "Build from pairwise coprime alphas");
  cs->callback([&] {
    if (gens.empty() == alphas.empty()) throw CLI::ValidationError("ci", "give generators or --alphas");
    action = [&] { return ci(gens, alphas); };
  });
  with_gens("bresinsky", "Pfaffian structure of a symmetric 4-generated semigroup")->callback([&] {
    action = [&] { return bresinsky(gens); };
  });
  with_gens("verify-4gor", "All clauses of the 4-generated Gorenstein structure")->callback([&] {
    action = [&] { return verify_4gor_command(gens); };
  });
  auto* mc = with_gens("mu", "Minimal binomial generators of I_H");
  mc->add_option("--artinian", artinian, "Also the Artinian reduction modulo x_i (0-based)");
  mc->callback([&] { action = [&] { return mu(gens, artinian); }; });
  auto* sm = with_gens("sample", "Colengths at seeded random members");
  sm->add_option("--count", count)->check(CLI::PositiveNumber);
  sm->callback([&] { action = [&] { return sample(gens, count, opt); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? Ok : Usage;
  }

  try {
    const Outcome out = action();
    if (opt.json)
      std::cout << out.body.dump(2) << "\n";
    else
      render_human(std::cout, out.body);
    if (!out.sound) {
      std::cerr << "error: a certificate failed\n";
      return Fatal;
    }
    return Ok;
  } catch (const UsageError& err) {
    std::cerr << "usage error: " << err.what() << "\n";
    return Usage;
  } catch (const Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return err.fatal() ? Fatal : Domain;
  } catch (const std::exception& err) {
    std::cerr << "fatal: " << err.what() << "\n";
    return Fatal;
  }
}

}  // namespace invsemi::cli

int main(int argc, char** argv) { return invsemi::cli::run(argc, argv); }
