#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "tautclass/complexes.hpp"
#include "tautclass/configs.hpp"
#include "tautclass/families.hpp"
#include "tautclass/flatbundles.hpp"
#include "tautclass/groupcoh.hpp"

namespace tautclass {

using Json = nlohmann::ordered_json;

/// Malformed or inconsistent input file.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Representation file with entries kept as text until a field is chosen.
struct RepresentationFile {
  std::string name;
  /// 0 for Q, otherwise the radicand of Q(sqrt d).
  std::int64_t radicand = 0;
  int genus = 0;
  StructureTag tag = StructureTag::sl;
  /// matrices[m][row][col]
  std::vector<std::vector<std::vector<std::string>>> entries;

  int fiber_dimension() const;
  bool has_decimals() const;
};

RepresentationFile parse_representation(const Json& j);
RepresentationFile load_representation(const std::filesystem::path& path);

/// Exact generators; FormatError on decimal entries or a field mismatch.
std::vector<Matrix<Rational>> rational_generators(const RepresentationFile& rep);
std::vector<Matrix<QuadraticNumber>> quadratic_generators(const RepresentationFile& rep);
/// Rank-2 generators for the float oracle; decimal entries are allowed.
std::vector<Eigen::Matrix2d> oracle_generators(const RepresentationFile& rep);

Json representation_to_json(const SurfaceRep<Rational>& rep, StructureTag tag);
Json representation_to_json(const SurfaceRep<QuadraticNumber>& rep, StructureTag tag);

/// A relative path is looked up as given, then under the fixture directory: $TAUTCLASS_FIXTURES
/// if set, else ./fixtures. A leading "fixtures/" component is replaced by that directory.
std::filesystem::path resolve_fixture(const std::filesystem::path& path);

Json complex_to_json(const DeltaComplex& complex);
DeltaComplex complex_from_json(const Json& j);
Json chain_to_json(const Chain& chain);
Chain chain_from_json(const Json& j);

/// [[representative, multiplicity], ...] in canonical order.
Json witt_to_json(const WittElement& w);
WittElement witt_from_json(const Json& j);
Json witt_invariants_to_json(const WittElement& w);

Json uplus_to_json(const UPlusSymbol& c);
Json class_value_to_json(const ClassValue& v);

Json bar_chain_to_json(const BarChain2& chain);
BarChain2 bar_chain_from_json(const Json& j);

template <class Scalar>
Json matrix_to_json(const Matrix<Scalar>& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix<Rational> rational_matrix_from_json(const Json& j);

template <class Scalar>
Json evaluation_to_json(const Evaluation& e, std::uint64_t seed, const Section<Scalar>& s) {
  Json section = Json::array();
  for (const auto& v : s.values) {
    Json vertex = Json::array();
    for (Index i = 0; i < v.size(); ++i) vertex.push_back(to_string(v(i)));
    section.push_back(std::move(vertex));
  }
  Json simplices = Json::array();
  for (const auto& r : e.simplices)
    simplices.push_back({{"simplex", r.simplex}, {"coefficient", r.coefficient}, {"symbol", r.symbol}});
  return Json{{"selector", e.selector.to_string()},
              {"value", class_value_to_json(e.value)},
              {"seed", seed},
              {"section", std::move(section)},
              {"simplices", std::move(simplices)}};
}

/// Two-line CSV of the scalar top-level fields of a report; arrays and objects are
/// written as quoted compact JSON.
std::string report_to_csv(const Json& report);

}  // namespace tautclass
