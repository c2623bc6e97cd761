#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tautclass/families.hpp"
#include "tautclass/flatbundles.hpp"
#include "tautclass/io.hpp"

namespace tautclass {

/// Seeded source for every random choice made by the suites.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi);
  std::int64_t nonzero_integer(std::int64_t bound);
  /// p/q with 0 < |p| <= bound, 0 < q <= bound.
  Rational nonzero_rational(std::int64_t bound);
  /// SL(2,Z) element with entries in [-bound, bound].
  Matrix<Rational> sl2_integer(std::int64_t bound);
  /// Integer points, plus integer multiples of sqrt(d) when d != 0, with every n columns independent.
  template <class Scalar>
  Matrix<Scalar> generic_tuple(Index n, Index count, std::int64_t bound, std::int64_t radicand);

  std::uint64_t next_seed() { return rng_(); }

 private:
  std::mt19937_64 rng_;
};

struct SuiteOptions {
  int n = 2;
  /// 0 selects the suite default.
  int samples = 0;
  std::uint64_t seed = 1;
  /// 0 for Q.
  std::int64_t radicand = 0;
  /// Representation files for smillie and comparison; empty runs the built-in fixtures.
  std::vector<std::filesystem::path> reps;
};

struct SuiteReport {
  std::string suite;
  int samples = 0;
  std::vector<std::string> failures;
  Json details = Json::array();
};

const std::vector<std::string>& suite_names();
/// Throws std::invalid_argument for an unknown suite or options it cannot use.
SuiteReport run_suite(const std::string& name, const SuiteOptions& options);

/// Values of the Euler classes of one bundle on one cycle.
struct ClassSummary {
  std::string name;
  int n = 0;
  std::int64_t eu0 = 0;
  /// eu_k evaluated one selector at a time, k = 0 .. floor(n/2); empty unless positively flat.
  std::vector<std::int64_t> components;
  std::optional<UPlusSymbol> plus;
  std::int64_t euler = 0;
  /// Section pipeline, rank 2 over Q with tag SL.
  std::optional<WittElement> witt;
  /// Group cocycle on the surface bar cycle, rank-2 surface representations over Q.
  std::optional<WittElement> bar_witt;
  /// Number of n-simplices in the support of the cycle.
  std::size_t simplices = 0;
};

template <class Scalar>
ClassSummary summarize(const FlatBundle<Scalar>& bundle, const Chain& z, std::uint64_t seed, std::string name);
ClassSummary summarize_surface(const RepresentationFile& rep, std::uint64_t seed);
ClassSummary summarize_surface(const SurfaceRep<Rational>& rep, StructureTag tag, std::uint64_t seed);
/// eu_0 of the block-sum bundle on z x z' over the product of the two surfaces.
ClassSummary summarize_product(const SurfaceRep<Rational>& a, const SurfaceRep<Rational>& b, std::uint64_t seed);

/// Built-in fixtures: the rational genus-2 family, the diagonal torus, the Q(sqrt 2) family and,
/// when asked, the rank-4 product of the doubled torus with its reverse.
std::vector<ClassSummary> builtin_summaries(std::uint64_t seed, bool with_product);

/// Failures of eu_k = (-1)^k C(n+1, k) eu_0.
std::vector<std::string> smillie_failures(const ClassSummary& s);
/// Failures of sum_k (n-2k+1) eu_k = 0 and of the homological core check on eu_plus.
std::vector<std::string> linear_relation_failures(const ClassSummary& s);
/// Failures of eu = 2^n eu_0 and signature(witt) = 4 eu_0 (both Witt routes).
std::vector<std::string> comparison_failures(const ClassSummary& s);
/// Failures of #simplices >= 2^n |eu_0|.
std::vector<std::string> triangulation_failures(const ClassSummary& s);

Json summary_to_json(const ClassSummary& s);

/// M in SL(2,Q) fixing the line through u, with random diagonal and shear parts.
Matrix<Rational> line_stabilizer(const Vector<Rational>& u, Sampler& sampler);

std::int64_t binomial(int n, int k);

}  // namespace tautclass
