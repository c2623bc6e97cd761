#include "tautclass/suites.hpp"

#include <array>
#include <sstream>

#include "tautclass/configs.hpp"
#include "tautclass/groupcoh.hpp"

namespace tautclass {

std::int64_t Sampler::integer(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
}

std::int64_t Sampler::nonzero_integer(std::int64_t bound) {
  std::int64_t v = 0;
  while (v == 0) v = integer(-bound, bound);
  return v;
}

Rational Sampler::nonzero_rational(std::int64_t bound) { return Rational(nonzero_integer(bound), integer(1, bound)); }

Matrix<Rational> Sampler::sl2_integer(std::int64_t bound) {
  while (true) {
    const std::int64_t a = integer(-bound, bound), b = integer(-bound, bound), c = integer(-bound, bound);
    if (a == 0 || (1 + b * c) % a != 0) continue;
    const std::int64_t d = (1 + b * c) / a;
    if (d < -bound || d > bound) continue;
    return matrix2(a, b, c, d);
  }
}

template <class Scalar>
Matrix<Scalar> Sampler::generic_tuple(Index n, Index count, std::int64_t bound, std::int64_t radicand) {
  while (true) {
    Matrix<Scalar> m(n, count);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < count; ++j) m(i, j) = detail::sample_scalar<Scalar>(rng_, bound, radicand);
    if (is_linearly_generic(m)) return m;
  }
}

template Matrix<Rational> Sampler::generic_tuple<Rational>(Index, Index, std::int64_t, std::int64_t);
template Matrix<QuadraticNumber> Sampler::generic_tuple<QuadraticNumber>(Index, Index, std::int64_t, std::int64_t);

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

Matrix<Rational> line_stabilizer(const Vector<Rational>& u, Sampler& sampler) {
  Matrix<Rational> p(2, 2);
  p.col(0) = u;
  p(0, 1) = is_zero(u(0)) ? 1 : 0;
  p(1, 1) = is_zero(u(0)) ? 0 : 1;
  const Rational a = sampler.nonzero_rational(5);
  const Matrix<Rational> t = matrix2(a, Rational(sampler.integer(-5, 5), sampler.integer(1, 5)), 0, 1 / a);
  return multiply(multiply(p, t), inverse(p));
}

namespace {

std::string describe(const Matrix<Rational>& m) { return matrix_to_string(m); }

Vector<Rational> vec2(std::int64_t a, std::int64_t b) {
  Vector<Rational> v(2);
  v << a, b;
  return v;
}

SuiteReport witt_relations(const SuiteOptions& o) {
  SuiteReport r{"witt-relations", o.samples > 0 ? o.samples : 200, {}, Json::array()};
  Sampler s(o.seed);
  for (int i = 0; i < r.samples; ++i) {
    Rational a, b;
    do {
      a = s.nonzero_rational(99);
      b = s.nonzero_rational(99);
    } while (is_zero(a + b));
    const WittElement four = WittElement::symbol(a) + WittElement::symbol(b) - WittElement::symbol(a + b) -
                             WittElement::symbol(a * b * (a + b));
    if (!witt_is_zero(four))
      r.failures.push_back("four-term relation at a=" + to_string(a) + ", b=" + to_string(b));
    const WittElement alt = WittElement::symbol(-a) + WittElement::symbol(a);
    if (!witt_is_zero(alt)) r.failures.push_back("<-a> + <a> != 0 at a=" + to_string(a));
    const WittElement x = WittElement::symbol(a) + WittElement::symbol(b), y = WittElement::symbol(a * b);
    if (signature(x + y) != signature(x) + signature(y))
      r.failures.push_back("signature not additive at a=" + to_string(a) + ", b=" + to_string(b));
  }
  return r;
}

SuiteReport witt_cocycle_suite(const SuiteOptions& o) {
  SuiteReport r{"witt-cocycle", o.samples > 0 ? o.samples : 100, {}, Json::array()};
  const int engineered = std::max(1, r.samples / 5);
  Sampler s(o.seed);
  const Vector<Rational> e1 = vec2(1, 0);
  for (int i = 0; i < r.samples; ++i) {
    const std::array<Matrix<Rational>, 4> g{s.sl2_integer(9), s.sl2_integer(9), s.sl2_integer(9), s.sl2_integer(9)};
    if (!witt_is_zero(cocycle_identity_residual(g, e1)))
      r.failures.push_back("random quadruple " + std::to_string(i) + " starting " + describe(g[0]));
  }
  int built = 0;
  while (built < engineered) {
    const Vector<Rational> u = vec2(s.integer(-3, 3), s.nonzero_integer(3));
    std::array<Matrix<Rational>, 4> g{s.sl2_integer(9), Matrix<Rational>(), s.sl2_integer(9), s.sl2_integer(9)};
    g[1] = multiply(g[0], line_stabilizer(u, s));
    // Keep quadruples where [g0 u] = [g1 u] is the only coincidence.
    int coincident = 0;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j) {
        const Vector<Rational> p = multiply(g[i], u), q = multiply(g[j], u);
        coincident += is_zero(p(0) * q(1) - p(1) * q(0));
      }
    if (coincident != 1) continue;
    ++built;
    if (!witt_is_zero(cocycle_identity_residual(g, u)))
      r.failures.push_back("engineered quadruple starting " + describe(g[0]));
  }
  r.samples += engineered;
  return r;
}

template <class Scalar>
void boundary_samples(SuiteReport& r, const SuiteOptions& o) {
  Sampler s(o.seed);
  for (int i = 0; i < r.samples; ++i) {
    const Matrix<Scalar> t = s.generic_tuple<Scalar>(o.n, o.n + 2, 9, o.radicand);
    if (o.n % 2 == 0 && std::get<std::int64_t>(boundary_symbol_sum(t, SymbolMode::projective)) != 0)
      r.failures.push_back("U boundary sum nonzero at sample " + std::to_string(i));
    if (!(std::get<UPlusSymbol>(boundary_symbol_sum(t, SymbolMode::positive)) == UPlusSymbol::zero(o.n)))
      r.failures.push_back("U+ boundary sum nonzero at sample " + std::to_string(i));
    if constexpr (std::is_same_v<Scalar, Rational>) {
      if (o.n == 2 && !witt_is_zero(std::get<WittElement>(boundary_symbol_sum(t, SymbolMode::witt))))
        r.failures.push_back("Witt boundary sum nonzero at sample " + std::to_string(i));
    }
  }
}

SuiteReport euler_boundary(const SuiteOptions& o) {
  if (o.n < 1) throw std::invalid_argument("--n must be at least 1");
  SuiteReport r{"euler-boundary", o.samples > 0 ? o.samples : 100, {}, Json::array()};
  if (o.radicand == 0) boundary_samples<Rational>(r, o);
  else boundary_samples<QuadraticNumber>(r, o);
  return r;
}

template <class Scalar>
void alternation_samples(SuiteReport& r, const SuiteOptions& o) {
  Sampler s(o.seed);
  for (int i = 0; i < r.samples; ++i) {
    const Matrix<Scalar> t = s.generic_tuple<Scalar>(o.n, o.n + 1, 9, o.radicand);
    const Index j = s.integer(0, o.n - 1);
    Matrix<Scalar> swapped = t;
    swapped.col(j).swap(swapped.col(j + 1));
    if (o.n % 2 == 0 && u_symbol(swapped).coefficient != -u_symbol(t).coefficient)
      r.failures.push_back("u_symbol not negated at sample " + std::to_string(i));
    if (!(uplus_canonicalize(uplus_raw_symbol(swapped)) == -uplus_canonicalize(uplus_raw_symbol(t))))
      r.failures.push_back("U+ symbol not negated at sample " + std::to_string(i));
  }
}

SuiteReport alternation(const SuiteOptions& o) {
  if (o.n < 1) throw std::invalid_argument("--n must be at least 1");
  SuiteReport r{"alternation", o.samples > 0 ? o.samples : 100, {}, Json::array()};
  if (o.radicand == 0) alternation_samples<Rational>(r, o);
  else alternation_samples<QuadraticNumber>(r, o);
  return r;
}

std::vector<ClassSummary> summaries_for(const SuiteOptions& o) {
  if (o.reps.empty()) return builtin_summaries(o.seed, true);
  std::vector<ClassSummary> out;
  for (const auto& path : o.reps) out.push_back(summarize_surface(load_representation(resolve_fixture(path)), o.seed));
  return out;
}

SuiteReport summary_suite(const std::string& name, const SuiteOptions& o,
                          const std::vector<std::vector<std::string> (*)(const ClassSummary&)>& checks) {
  SuiteReport r{name, 0, {}, Json::array()};
  for (const ClassSummary& s : summaries_for(o)) {
    ++r.samples;
    for (auto check : checks)
      for (std::string& f : check(s)) r.failures.push_back(s.name + ": " + f);
    Json entry = summary_to_json(s);
    if (name == "smillie") {
      Json factors = Json::array();
      for (int k = 0; k <= s.n / 2; ++k) factors.push_back((k % 2 == 0 ? 1 : -1) * binomial(s.n + 1, k));
      entry["factors"] = std::move(factors);
    }
    r.details.push_back(std::move(entry));
  }
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"witt-relations", "witt-cocycle", "euler-boundary",
                                              "alternation",    "smillie",      "comparison"};
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& options) {
  if (options.samples < 0) throw std::invalid_argument("--samples must be non-negative");
  if (name == "witt-relations" || name == "witt-cocycle") {
    if (options.radicand != 0) throw std::invalid_argument(name + " runs over Q only");
    return name == "witt-relations" ? witt_relations(options) : witt_cocycle_suite(options);
  }
  if (name == "euler-boundary") return euler_boundary(options);
  if (name == "alternation") return alternation(options);
  if (name == "smillie") return summary_suite(name, options, {&smillie_failures, &linear_relation_failures});
  if (name == "comparison")
    return summary_suite(name, options, {&comparison_failures, &triangulation_failures});
  throw std::invalid_argument("unknown suite '" + name + "'");
}

template <class Scalar>
ClassSummary summarize(const FlatBundle<Scalar>& bundle, const Chain& z, std::uint64_t seed, std::string name) {
  ClassSummary out;
  out.name = std::move(name);
  out.n = bundle.fiber_dimension();
  out.simplices = z.coefficients.size();
  const Section<Scalar> s = random_generic_section(bundle, seed);
  auto integer_value = [&](const ClassSelector& sel) {
    return std::get<std::int64_t>(evaluate_class(bundle, s, sel, z).value);
  };
  out.eu0 = integer_value(ClassSelector::eu_k(0));
  out.euler = integer_value(ClassSelector::eu());
  if (bundle.positively_flat()) {
    for (int k = 0; k <= out.n / 2; ++k) out.components.push_back(integer_value(ClassSelector::eu_k(k)));
    out.plus = std::get<UPlusSymbol>(evaluate_class(bundle, s, ClassSelector::eu_plus(), z).value);
  }
  if constexpr (std::is_same_v<Scalar, Rational>) {
    if (out.n == 2 && bundle.tag() == StructureTag::sl)
      out.witt = std::get<WittElement>(evaluate_class(bundle, s, ClassSelector::witt(), z).value);
  }
  return out;
}

template ClassSummary summarize<Rational>(const FlatBundle<Rational>&, const Chain&, std::uint64_t, std::string);
template ClassSummary summarize<QuadraticNumber>(const FlatBundle<QuadraticNumber>&, const Chain&, std::uint64_t,
                                                 std::string);

namespace {

template <class Scalar>
ClassSummary surface_summary(const std::string& name, int genus, const std::vector<Matrix<Scalar>>& gens,
                             StructureTag tag, std::uint64_t seed) {
  const SurfaceBundle<Scalar> sb = bundle_from_surface_rep(genus, gens, tag);
  ClassSummary out = summarize(sb.bundle, sb.surface.fundamental, seed, name);
  if constexpr (std::is_same_v<Scalar, Rational>) {
    if (out.n == 2 && (tag == StructureTag::sl || tag == StructureTag::pgl_plus) &&
        std::all_of(gens.begin(), gens.end(), [](const Matrix<Rational>& g) { return determinant(g) == 1; })) {
      const WittCocycle cocycle = [](const BarTriple& g, const Vector<Rational>& u) { return witt_cocycle(g, u); };
      out.bar_witt = evaluate_bar(cocycle, surface_cycle_from_rep(genus, gens), vec2(1, 0));
    }
  }
  return out;
}

}  // namespace

ClassSummary summarize_surface(const RepresentationFile& rep, std::uint64_t seed) {
  const std::string name = rep.name.empty() ? "representation" : rep.name;
  if (rep.radicand == 0) return surface_summary(name, rep.genus, rational_generators(rep), rep.tag, seed);
  return surface_summary(name, rep.genus, quadratic_generators(rep), rep.tag, seed);
}

ClassSummary summarize_surface(const SurfaceRep<Rational>& rep, StructureTag tag, std::uint64_t seed) {
  return surface_summary(rep.name, rep.genus, rep.generators, tag, seed);
}

ClassSummary summarize_product(const SurfaceRep<Rational>& a, const SurfaceRep<Rational>& b, std::uint64_t seed) {
  const SurfaceBundle<Rational> e = bundle_from_surface_rep(a.genus, a.generators, StructureTag::sl);
  const SurfaceBundle<Rational> f = bundle_from_surface_rep(b.genus, b.generators, StructureTag::sl);
  const CrossProductReport r =
      cross_product_check_refining(e.bundle, e.surface.fundamental, f.bundle, f.surface.fundamental, seed);
  ClassSummary out;
  out.name = a.name + " x " + b.name;
  out.n = e.bundle.fiber_dimension() + f.bundle.fiber_dimension();
  out.eu0 = r.product;
  out.plus = r.product_plus;
  for (Index k = 0; k < r.product_plus.coefficients.size(); ++k) out.components.push_back(r.product_plus.coefficients(k));
  out.euler = r.product_euler;
  out.simplices = r.product_simplices;
  return out;
}

std::vector<ClassSummary> builtin_summaries(std::uint64_t seed, bool with_product) {
  std::vector<ClassSummary> out;
  for (const auto& rep : genus2_family()) out.push_back(summarize_surface(rep, StructureTag::sl, seed));
  out.push_back(summarize_surface(torus_diagonal(), StructureTag::sl, seed));
  for (const auto& rep : quadratic_family())
    out.push_back(surface_summary(rep.name, rep.genus, rep.generators, StructureTag::sl, seed));
  if (with_product) out.push_back(summarize_product(doubled_torus(), reversed(doubled_torus()), seed));
  return out;
}

std::vector<std::string> smillie_failures(const ClassSummary& s) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < s.components.size(); ++k) {
    const std::int64_t expected = (k % 2 == 0 ? 1 : -1) * binomial(s.n + 1, static_cast<int>(k)) * s.eu0;
    if (s.components[k] != expected)
      out.push_back("eu_" + std::to_string(k) + " = " + std::to_string(s.components[k]) + ", expected " +
                    std::to_string(expected));
  }
  return out;
}

std::vector<std::string> linear_relation_failures(const ClassSummary& s) {
  std::vector<std::string> out;
  std::int64_t total = 0;
  for (std::size_t k = 0; k < s.components.size(); ++k)
    total += (s.n - 2 * static_cast<std::int64_t>(k) + 1) * s.components[k];
  if (total != 0) out.push_back("sum (n-2k+1) eu_k = " + std::to_string(total));
  if (s.plus && !homological_core_check(*s.plus)) out.push_back("eu_plus fails the homological core check");
  if (s.plus)
    for (std::size_t k = 0; k < s.components.size(); ++k)
      if (s.plus->coefficients(static_cast<Index>(k)) != s.components[k])
        out.push_back("eu_plus component " + std::to_string(k) + " differs from eu_" + std::to_string(k));
  return out;
}

std::vector<std::string> comparison_failures(const ClassSummary& s) {
  std::vector<std::string> out;
  if (s.n % 2 == 0 && s.euler != (std::int64_t{1} << s.n) * s.eu0)
    out.push_back("eu = " + std::to_string(s.euler) + ", expected 2^n eu_0 = " +
                  std::to_string((std::int64_t{1} << s.n) * s.eu0));
  if (s.witt && signature(*s.witt) != 4 * s.eu0)
    out.push_back("signature of the section Witt value is " + std::to_string(signature(*s.witt)));
  if (s.bar_witt && signature(*s.bar_witt) != 4 * s.eu0)
    out.push_back("signature of the bar-cycle Witt value is " + std::to_string(signature(*s.bar_witt)));
  return out;
}

std::vector<std::string> triangulation_failures(const ClassSummary& s) {
  const std::int64_t need = (std::int64_t{1} << s.n) * std::abs(s.eu0);
  if (static_cast<std::int64_t>(s.simplices) >= need) return {};
  return {std::to_string(s.simplices) + " simplices < 2^n |eu_0| = " + std::to_string(need)};
}

Json summary_to_json(const ClassSummary& s) {
  Json j{{"name", s.name}, {"n", s.n}, {"eu0", s.eu0}, {"components", s.components}, {"eu", s.euler},
         {"simplices", s.simplices}, {"bound", (std::int64_t{1} << s.n) * std::abs(s.eu0)}};
  if (s.plus) j["eu_plus"] = uplus_to_json(*s.plus);
  if (s.witt) {
    j["witt"] = witt_to_json(*s.witt);
    j["witt_signature"] = signature(*s.witt);
  }
  if (s.bar_witt) {
    j["bar_witt"] = witt_to_json(*s.bar_witt);
    j["bar_witt_signature"] = signature(*s.bar_witt);
  }
  return j;
}

}  // namespace tautclass
