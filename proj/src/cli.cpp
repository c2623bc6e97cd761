#include "tautclass/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>

#include <CLI11.hpp>

#include "tautclass/groupcoh.hpp"
#include "tautclass/io.hpp"
#include "tautclass/oracle.hpp"
#include "tautclass/suites.hpp"

namespace tautclass {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Outcome {
  int code = exit_pass;
  Json report;
};

std::int64_t parse_field(const std::string& text) {
  if (text == "Q") return 0;
  std::string digits;
  if (text.rfind("quad:", 0) == 0) digits = text.substr(5);
  else if (text.rfind("sqrt(", 0) == 0 && text.back() == ')') digits = text.substr(5, text.size() - 6);
  std::int64_t d = 0;
  const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), d);
  if (digits.empty() || ec != std::errc() || end != digits.data() + digits.size() || !is_valid_radicand(d))
    throw UsageError("--field must be Q, quad:D or sqrt(D) with D > 1 squarefree");
  return d;
}

Json field_json(std::int64_t radicand) { return radicand == 0 ? Json("Q") : Json{{"quad", radicand}}; }

// --- verify ---------------------------------------------------------------

struct VerifyFlags {
  std::string suite;
  int n = 2;
  int samples = 0;
  std::uint64_t seed = 1;
  std::string field = "Q";
  std::vector<std::string> reps;
  bool no_timing = false;
};

Outcome verify(const VerifyFlags& f) {
  SuiteOptions o;
  o.n = f.n;
  o.samples = f.samples;
  o.seed = f.seed;
  o.radicand = parse_field(f.field);
  for (const auto& r : f.reps) o.reps.emplace_back(r);
  const auto start = std::chrono::steady_clock::now();
  SuiteReport r;
  try {
    r = run_suite(f.suite, o);
  } catch (const FormatError&) {
    throw;
  } catch (const RepresentationError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const double elapsed =
      f.no_timing ? 0.0 : std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  Json report{{"suite", r.suite}, {"samples", r.samples}, {"failures", r.failures}, {"elapsed", elapsed},
              {"seed", f.seed},   {"n", f.n},             {"field", field_json(o.radicand)}};
  if (!r.details.empty()) report["details"] = r.details;
  return {r.failures.empty() ? exit_pass : exit_property_failure, std::move(report)};
}

// --- eval -----------------------------------------------------------------

struct EvalFlags {
  std::string rep;
  std::string selector = "eu0";
  std::uint64_t seed = 1;
  bool oracle = false;
};

template <class Scalar>
Outcome evaluate(const RepresentationFile& file, const std::vector<Matrix<Scalar>>& gens, const EvalFlags& f) {
  ClassSelector selector;
  try {
    selector = ClassSelector::parse(f.selector);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const SurfaceBundle<Scalar> sb = bundle_from_surface_rep(file.genus, gens, file.tag);
  const Chain& z = sb.surface.fundamental;
  const Section<Scalar> s = random_generic_section(sb.bundle, f.seed);
  Evaluation e;
  try {
    e = evaluate_class(sb.bundle, s, selector, z);
  } catch (const RepresentationError&) {
    throw;
  } catch (const std::invalid_argument& err) {
    throw UsageError(err.what());
  }
  Json report{{"command", "eval"}, {"name", file.name}, {"field", field_json(file.radicand)},
              {"genus", file.genus}, {"n", file.fiber_dimension()}, {"tag", to_string(file.tag)}};
  report.update(evaluation_to_json(e, f.seed, s));
  const int n = file.fiber_dimension();
  if (const auto* plus = std::get_if<UPlusSymbol>(&e.value)) {
    std::int64_t total = 0;
    for (Index k = 0; k < plus->coefficients.size(); ++k) total += (n - 2 * k + 1) * plus->coefficients(k);
    report["linear_relation"] = total;
    report["homological_core"] = homological_core_check(*plus);
  }
  if (f.oracle) {
    if (n != 2) throw UsageError("--oracle needs a rank-2 representation");
    const RotationReport r = rotation_euler_report(file.genus, oracle_generators(file));
    const std::int64_t eu0 =
        selector.kind == ClassSelector::Kind::euler_component && selector.component == 0
            ? std::get<std::int64_t>(e.value)
            : std::get<std::int64_t>(evaluate_class(sb.bundle, s, ClassSelector::eu_k(0), z).value);
    report["eu0"] = eu0;
    report["oracle"] = r.value;
    report["oracle_residual"] = r.residual;
    report["agree"] = r.value == eu0;
    if (r.value != eu0) return {exit_property_failure, std::move(report)};
  }
  return {exit_pass, std::move(report)};
}

Outcome eval(const EvalFlags& f) {
  const RepresentationFile file = load_representation(resolve_fixture(f.rep));
  if (file.radicand == 0) return evaluate(file, rational_generators(file), f);
  if (f.selector == "witt") throw UsageError("the witt selector needs a representation over Q");
  return evaluate(file, quadratic_generators(file), f);
}

// --- product --------------------------------------------------------------

struct ProductFlags {
  std::string rep_a, rep_b;
  std::uint64_t seed = 1;
  int retry_budget = 10;
};

template <class Scalar>
Outcome product_of(const RepresentationFile& fa, const std::vector<Matrix<Scalar>>& ga, const RepresentationFile& fb,
                   const std::vector<Matrix<Scalar>>& gb, std::uint64_t seed, int budget) {
  const SurfaceBundle<Scalar> a = bundle_from_surface_rep(fa.genus, ga, fa.tag);
  const SurfaceBundle<Scalar> b = bundle_from_surface_rep(fb.genus, gb, fb.tag);
  const int na = a.bundle.fiber_dimension(), nb = b.bundle.fiber_dimension();
  Json report{{"command", "product"}, {"a", fa.name}, {"b", fb.name}, {"seed", seed}, {"n", na + nb}};
  if (na + nb != 4) throw UsageError("the ranks must add up to 4, the dimension of the product of two surfaces");
  try {
    if (na == 2 && nb == 2) {
      bool refined = false;
      const CrossProductReport r = cross_product_check_refining(a.bundle, a.surface.fundamental, b.bundle,
                                                                b.surface.fundamental, seed, budget, &refined);
      report["mixed"] = false;
      report["refined"] = refined;
      report["left"] = r.left;
      report["right"] = r.right;
      report["left_times_right"] = r.left * r.right;
      report["product"] = r.product;
      report["cup"] = r.cup;
      report["product_agrees"] = r.product == r.left * r.right;
      report["cup_agrees"] = r.cup == r.product;
      report["eu_plus"] = uplus_to_json(r.product_plus);
      report["eu"] = r.product_euler;
      report["attempts"] = r.attempts;
      report["simplices"] = r.product_simplices;
      const bool ok = r.product == r.left * r.right && r.cup == r.product;
      return {ok ? exit_pass : exit_property_failure, std::move(report)};
    }
    // The rank exceeding its base dimension carries the positive section.
    const bool a_big = na > 2;
    const PositiveMixedReport r =
        a_big ? evaluate_positive_mixed(a.bundle, a.surface.fundamental, b.bundle, b.surface.fundamental, seed, budget)
              : evaluate_positive_mixed(b.bundle, b.surface.fundamental, a.bundle, a.surface.fundamental, seed, budget);
    report["mixed"] = true;
    report["product"] = r.value;
    report["attempts"] = r.attempts;
    report["simplices"] = r.product_simplices;
    return {r.value == 0 ? exit_pass : exit_property_failure, std::move(report)};
  } catch (const RepresentationError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

Outcome product(const ProductFlags& f) {
  const RepresentationFile fa = load_representation(resolve_fixture(f.rep_a));
  const RepresentationFile fb = load_representation(resolve_fixture(f.rep_b));
  if (fa.radicand != fb.radicand) throw UsageError("the two representations are over different fields");
  if (fa.radicand == 0) return product_of(fa, rational_generators(fa), fb, rational_generators(fb), f.seed, f.retry_budget);
  return product_of(fa, quadratic_generators(fa), fb, quadratic_generators(fb), f.seed, f.retry_budget);
}

// --- explore --------------------------------------------------------------

struct ExploreFlags {
  std::string rep;
  int samples = 200;
  std::uint64_t seed = 1;
};

// Random solved-relator representations, screened by the float oracle, confirmed exactly.
Outcome explore_search(const ExploreFlags& f) {
  Sampler s(f.seed);
  Json hits = Json::array();
  int valid = 0;
  for (int i = 0; i < f.samples; ++i) {
    const Matrix<Rational> a1 = s.sl2_integer(4), b1 = s.sl2_integer(4);
    const Rational alpha(s.integer(-3, 3)), beta(s.integer(-3, 3));
    const int k = static_cast<int>(s.integer(-2, 2));
    SurfaceRep<Rational> rep;
    try {
      rep = solved_relator(a1, b1, alpha, beta, std::max(k, 0), "candidate");
      if (determinant(rep.generators[2]) != 1) continue;
    } catch (const std::exception&) {
      continue;
    }
    std::int64_t value = 0;
    try {
      value = rotation_euler(2, to_double(rep.generators));
    } catch (const OracleError&) {
      continue;
    }
    ++valid;
    if (value == 0) continue;
    const ClassSummary exact = summarize_surface(rep, StructureTag::sl, f.seed);
    Json gens = Json::array();
    for (const auto& m : rep.generators) gens.push_back(matrix_to_json(m));
    hits.push_back({{"sample", i}, {"oracle", value}, {"eu0", exact.eu0}, {"matrices", std::move(gens)}});
  }
  return {exit_pass, Json{{"command", "explore"}, {"mode", "search"}, {"seed", f.seed}, {"samples", f.samples},
                          {"valid", valid}, {"hits", std::move(hits)}}};
}

// Witt value of the surface bar cycle minus its signature part.
Outcome explore_torsion(const ExploreFlags& f) {
  std::vector<SurfaceRep<Rational>> reps;
  if (!f.rep.empty()) {
    const RepresentationFile file = load_representation(resolve_fixture(f.rep));
    reps.push_back({file.name, file.genus, rational_generators(file)});
  } else {
    reps = genus2_family();
  }
  const WittCocycle cocycle = [](const BarTriple& g, const Vector<Rational>& u) { return witt_cocycle(g, u); };
  Vector<Rational> u(2);
  u << 1, 0;
  Json rows = Json::array();
  for (const auto& rep : reps) {
    if (rep.generators.front().rows() != 2) throw UsageError("torsion exploration needs rank 2");
    const WittElement w = evaluate_bar(cocycle, surface_cycle_from_rep(rep.genus, rep.generators), u);
    const WittElement torsion = w - signature(w) * WittElement::symbol(1);
    rows.push_back({{"name", rep.name},
                    {"witt", witt_to_json(w)},
                    {"invariants", witt_invariants_to_json(w)},
                    {"torsion", witt_to_json(torsion)},
                    {"torsion_zero", witt_is_zero(torsion)}});
  }
  return {exit_pass, Json{{"command", "explore"}, {"mode", "torsion"}, {"results", std::move(rows)}}};
}

Outcome explore_oracle(const ExploreFlags& f) {
  if (f.rep.empty()) throw UsageError("explore oracle needs --rep");
  const RepresentationFile file = load_representation(resolve_fixture(f.rep));
  const RotationReport r = rotation_euler_report(file.genus, oracle_generators(file));
  return {exit_pass, Json{{"command", "explore"},
                          {"mode", "oracle"},
                          {"name", file.name},
                          {"oracle", r.value},
                          {"translation", r.translation},
                          {"residual", r.residual},
                          {"relator_residual", r.relator_residual}}};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact evaluation of tautological Euler classes of flat bundles"};
  app.require_subcommand(1);
  bool csv = false;
  app.add_flag("--csv", csv, "Print a CSV summary instead of JSON");

  VerifyFlags vf;
  auto* verify_cmd = app.add_subcommand("verify", "Run a property suite");
  verify_cmd->add_option("suite", vf.suite)->required()->check(CLI::IsMember(suite_names()));
  verify_cmd->add_option("--n", vf.n, "Fiber dimension");
  verify_cmd->add_option("--samples", vf.samples, "Number of samples (0: suite default)");
  verify_cmd->add_option("--seed", vf.seed);
  verify_cmd->add_option("--field", vf.field, "Q, quad:D or sqrt(D)");
  verify_cmd->add_option("--rep", vf.reps, "Representation files for smillie and comparison");
  verify_cmd->add_flag("--no-timing", vf.no_timing, "Report elapsed as 0 for byte-identical output");

  EvalFlags ef;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a class on the fundamental cycle");
  eval_cmd->add_option("--rep", ef.rep)->required();
  eval_cmd->add_option("--selector", ef.selector, "eu0 | euk:K | eu | euplus | witt");
  eval_cmd->add_option("--seed", ef.seed);
  eval_cmd->add_flag("--oracle", ef.oracle, "Compare eu0 with the rotation-number oracle");

  ProductFlags pf;
  auto* product_cmd = app.add_subcommand("product", "Cross and cup products of two surface bundles");
  product_cmd->add_option("--repA", pf.rep_a)->required();
  product_cmd->add_option("--repB", pf.rep_b)->required();
  product_cmd->add_option("--seed", pf.seed);
  product_cmd->add_option("--retry-budget", pf.retry_budget, "Resampling attempts per base before giving up")
      ->check(CLI::NonNegativeNumber);

  ExploreFlags xf;
  std::string mode;
  auto* explore_cmd = app.add_subcommand("explore", "Exploratory computations without asserted values");
  explore_cmd->add_option("mode", mode)->required()->check(CLI::IsMember({"search", "torsion", "oracle"}));
  explore_cmd->add_option("--rep", xf.rep);
  explore_cmd->add_option("--samples", xf.samples);
  explore_cmd->add_option("--seed", xf.seed);

  for (auto* sub : {verify_cmd, eval_cmd, product_cmd, explore_cmd}) sub->fallthrough();

  std::vector<std::string> reversed_args(args.rbegin(), args.rend());
  try {
    app.parse(reversed_args);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return exit_pass;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return exit_pass;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return exit_usage;
  }

  Outcome outcome;
  try {
    if (verify_cmd->parsed()) outcome = verify(vf);
    else if (eval_cmd->parsed()) outcome = eval(ef);
    else if (product_cmd->parsed()) outcome = product(pf);
    else if (mode == "search") outcome = explore_search(xf);
    else if (mode == "torsion") outcome = explore_torsion(xf);
    else outcome = explore_oracle(xf);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return exit_usage;
  } catch (const FormatError& e) {
    err << "invalid representation: " << e.what() << "\n";
    return exit_invalid_representation;
  } catch (const RepresentationError& e) {
    err << "invalid representation: " << e.what() << "\n";
    if (!e.residual().empty()) err << "residual: " << e.residual() << "\n";
    return exit_invalid_representation;
  } catch (const OracleError& e) {
    err << "invalid representation: " << e.what() << "\n";
    return exit_invalid_representation;
  } catch (const ResamplingError& e) {
    err << "resampling exhausted: " << e.what() << "\n";
    return exit_resampling;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_property_failure;
  }
  if (csv) out << report_to_csv(outcome.report);
  else out << outcome.report.dump(2) << "\n";
  return outcome.code;
}

}  // namespace tautclass
