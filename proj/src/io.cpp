#include "tautclass/io.hpp"

#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

namespace tautclass {

namespace {

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string entry_text(const Json& e) {
  if (e.is_string()) return e.get<std::string>();
  if (e.is_number_integer()) return std::to_string(e.get<std::int64_t>());
  if (e.is_number_float()) {
    std::ostringstream out;
    out.precision(17);
    out << e.get<double>();
    std::string s = out.str();
    if (s.find_first_of(".eE") == std::string::npos) s += ".0";
    return s;
  }
  throw FormatError("matrix entry must be a string or a number");
}

bool is_decimal(const std::string& s) { return s.find_first_of(".eE") != std::string::npos && s.find("sqrt") == std::string::npos; }

Integer parse_integer(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) return Integer(j.get<std::string>());
  throw FormatError("expected an integer");
}

Json integer_to_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return x.convert_to<std::int64_t>();
  return to_string(x);
}

template <class Scalar, class Parse>
std::vector<Matrix<Scalar>> exact_generators(const RepresentationFile& rep, Parse parse) {
  std::vector<Matrix<Scalar>> out;
  for (const auto& m : rep.entries) {
    const Index n = static_cast<Index>(m.size());
    Matrix<Scalar> g(n, n);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) {
        const std::string& text = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        if (is_decimal(text)) throw FormatError("decimal entry '" + text + "' is only accepted by the oracle");
        try {
          g(i, j) = parse(text);
        } catch (const FormatError&) {
          throw;
        } catch (const std::exception& e) {
          throw FormatError("bad matrix entry '" + text + "': " + e.what());
        }
      }
    out.push_back(std::move(g));
  }
  return out;
}

template <class Scalar>
Json representation_json(const SurfaceRep<Scalar>& rep, StructureTag tag, Json field) {
  Json matrices = Json::array();
  for (const auto& m : rep.generators) matrices.push_back(matrix_to_json(m));
  return Json{{"name", rep.name}, {"field", std::move(field)}, {"genus", rep.genus},
              {"tag", to_string(tag)}, {"matrices", std::move(matrices)}};
}

}  // namespace

int RepresentationFile::fiber_dimension() const {
  return entries.empty() ? 0 : static_cast<int>(entries.front().size());
}

bool RepresentationFile::has_decimals() const {
  for (const auto& m : entries)
    for (const auto& row : m)
      for (const auto& e : row)
        if (is_decimal(e)) return true;
  return false;
}

RepresentationFile parse_representation(const Json& j) {
  RepresentationFile rep;
  if (j.contains("name")) rep.name = j.at("name").get<std::string>();
  const Json& field = member(j, "field");
  if (field.is_string()) {
    if (field.get<std::string>() != "Q") throw FormatError("unknown field '" + field.get<std::string>() + "'");
  } else {
    rep.radicand = member(field, "quad").get<std::int64_t>();
    if (!is_valid_radicand(rep.radicand)) throw FormatError("radicand must be a squarefree integer > 1");
  }
  rep.genus = member(j, "genus").get<int>();
  if (rep.genus < 1) throw FormatError("genus must be at least 1");
  try {
    rep.tag = parse_structure_tag(member(j, "tag").get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  const Json& matrices = member(j, "matrices");
  if (!matrices.is_array() || matrices.size() != static_cast<std::size_t>(2 * rep.genus))
    throw FormatError("expected 2*genus matrices");
  for (const Json& m : matrices) {
    if (!m.is_array() || m.empty()) throw FormatError("matrix must be a nonempty list of rows");
    std::vector<std::vector<std::string>> rows;
    for (const Json& row : m) {
      if (!row.is_array() || row.size() != m.size()) throw FormatError("matrices must be square");
      std::vector<std::string> r;
      for (const Json& e : row) r.push_back(entry_text(e));
      rows.push_back(std::move(r));
    }
    if (!rep.entries.empty() && rows.size() != rep.entries.front().size())
      throw FormatError("matrices have different sizes");
    rep.entries.push_back(std::move(rows));
  }
  return rep;
}

RepresentationFile load_representation(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
  try {
    return parse_representation(j);
  } catch (const Json::exception& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

std::vector<Matrix<Rational>> rational_generators(const RepresentationFile& rep) {
  if (rep.radicand != 0) throw FormatError("representation is not over Q");
  return exact_generators<Rational>(rep, [](const std::string& s) {
    try {
      return parse_rational(s);
    } catch (const std::exception& e) {
      throw FormatError("bad rational '" + s + "': " + e.what());
    }
  });
}

std::vector<Matrix<QuadraticNumber>> quadratic_generators(const RepresentationFile& rep) {
  return exact_generators<QuadraticNumber>(rep, [&](const std::string& s) {
    QuadraticNumber x = parse_quadratic(s, rep.radicand);
    return x;
  });
}

std::vector<Eigen::Matrix2d> oracle_generators(const RepresentationFile& rep) {
  if (rep.fiber_dimension() != 2) throw FormatError("the oracle needs rank-2 matrices");
  std::vector<Eigen::Matrix2d> out;
  for (const auto& m : rep.entries) {
    Eigen::Matrix2d g;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        const std::string& text = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        try {
          g(i, j) = is_decimal(text) ? std::stod(text) : parse_quadratic(text, rep.radicand).to_double();
        } catch (const std::exception& e) {
          throw FormatError("bad matrix entry '" + text + "': " + e.what());
        }
      }
    out.push_back(g);
  }
  return out;
}

Json representation_to_json(const SurfaceRep<Rational>& rep, StructureTag tag) {
  return representation_json(rep, tag, "Q");
}

Json representation_to_json(const SurfaceRep<QuadraticNumber>& rep, StructureTag tag) {
  std::int64_t d = 0;
  for (const auto& m : rep.generators)
    for (Index i = 0; i < m.size(); ++i) d = std::max(d, m.data()[i].radicand());
  if (d == 0) return representation_json(rep, tag, "Q");
  return representation_json(rep, tag, Json{{"quad", d}});
}

std::filesystem::path resolve_fixture(const std::filesystem::path& path) {
  if (path.is_absolute()) return path;
  const char* env = std::getenv("TAUTCLASS_FIXTURES");
  const std::filesystem::path dir = env && *env ? std::filesystem::path(env) : std::filesystem::path("fixtures");
  if (env && *env) {
    auto it = path.begin();
    if (it != path.end() && *it == "fixtures") {
      std::filesystem::path rest;
      for (++it; it != path.end(); ++it) rest /= *it;
      return dir / rest;
    }
  }
  if (std::filesystem::exists(path)) return path;
  return dir / path;
}

Json complex_to_json(const DeltaComplex& complex) {
  Json simplices = Json::array();
  for (int dim = 1; dim <= complex.dimension(); ++dim)
    for (const Simplex& s : complex.simplices(dim))
      simplices.push_back({{"dim", dim}, {"vertices", s.vertices}, {"faces", s.faces}});
  return Json{{"vertices", complex.vertex_count()}, {"simplices", std::move(simplices)}};
}

DeltaComplex complex_from_json(const Json& j) {
  DeltaComplex out(member(j, "vertices").get<int>());
  for (const Json& s : member(j, "simplices")) {
    const int dim = member(s, "dim").get<int>();
    auto vertices = member(s, "vertices").get<std::vector<int>>();
    auto faces = member(s, "faces").get<std::vector<int>>();
    if (static_cast<int>(vertices.size()) != dim + 1) throw FormatError("simplex dimension mismatch");
    try {
      out.add_simplex(std::move(vertices), std::move(faces));
    } catch (const std::exception& e) {
      throw FormatError(std::string("invalid simplex: ") + e.what());
    }
  }
  return out;
}

Json chain_to_json(const Chain& chain) {
  Json entries = Json::array();
  for (const auto& [id, c] : chain.coefficients) entries.push_back({id, c});
  return Json{{"dim", chain.dimension}, {"entries", std::move(entries)}};
}

Chain chain_from_json(const Json& j) {
  Chain out;
  out.dimension = member(j, "dim").get<int>();
  for (const Json& e : member(j, "entries")) {
    if (!e.is_array() || e.size() != 2) throw FormatError("chain entries are [simplex-id, coeff] pairs");
    out.add(e[0].get<int>(), e[1].get<std::int64_t>());
  }
  return out;
}

Json witt_to_json(const WittElement& w) {
  Json out = Json::array();
  for (const auto& [rep, m] : w.terms()) out.push_back({integer_to_json(rep), m});
  return out;
}

WittElement witt_from_json(const Json& j) {
  std::map<Integer, std::int64_t> terms;
  for (const Json& e : j) {
    if (!e.is_array() || e.size() != 2) throw FormatError("Witt terms are [representative, multiplicity] pairs");
    terms[parse_integer(e[0])] += e[1].get<std::int64_t>();
  }
  return WittElement::from_terms(terms);
}

Json witt_invariants_to_json(const WittElement& w) {
  const WittInvariants inv = witt_invariants(w);
  Json hasse = Json::array();
  for (const auto& [p, h] : inv.hasse) hasse.push_back({integer_to_json(p), h});
  return Json{{"dimension", inv.dimension},
              {"signature", inv.signature},
              {"discriminant", integer_to_json(inv.discriminant)},
              {"hasse", std::move(hasse)},
              {"zero", witt_is_zero(w)}};
}

Json uplus_to_json(const UPlusSymbol& c) {
  Json out = Json::array();
  for (Index i = 0; i < c.coefficients.size(); ++i) out.push_back(c.coefficients(i));
  return out;
}

Json class_value_to_json(const ClassValue& v) {
  if (const auto* k = std::get_if<std::int64_t>(&v)) return Json{{"kind", "integer"}, {"value", *k}};
  if (const auto* c = std::get_if<UPlusSymbol>(&v))
    return Json{{"kind", "uplus"}, {"dimension", c->dimension}, {"coefficients", uplus_to_json(*c)}};
  const auto& w = std::get<WittElement>(v);
  return Json{{"kind", "witt"}, {"terms", witt_to_json(w)}, {"invariants", witt_invariants_to_json(w)}};
}

Matrix<Rational> rational_matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw FormatError("matrix must be a nonempty list of rows");
  const Index rows = static_cast<Index>(j.size()), cols = static_cast<Index>(j[0].size());
  Matrix<Rational> m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    const Json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != cols) throw FormatError("ragged matrix");
    for (Index c = 0; c < cols; ++c) {
      const std::string text = entry_text(row[static_cast<std::size_t>(c)]);
      try {
        m(i, c) = parse_rational(text);
      } catch (const std::exception& e) {
        throw FormatError("bad rational '" + text + "': " + e.what());
      }
    }
  }
  return m;
}

Json bar_chain_to_json(const BarChain2& chain) {
  Json out = Json::array();
  for (const auto& [triple, c] : chain.terms) {
    Json t = Json::array();
    for (const auto& m : triple) t.push_back(matrix_to_json(m));
    out.push_back({{"coeff", c}, {"triple", std::move(t)}});
  }
  return out;
}

BarChain2 bar_chain_from_json(const Json& j) {
  if (!j.is_array()) throw FormatError("bar chain must be a list");
  BarChain2 out;
  for (const Json& term : j) {
    const Json& t = member(term, "triple");
    if (!t.is_array() || t.size() != 3) throw FormatError("triple must hold three matrices");
    out.add({rational_matrix_from_json(t[0]), rational_matrix_from_json(t[1]), rational_matrix_from_json(t[2])},
            member(term, "coeff").get<std::int64_t>());
  }
  return out;
}

std::string report_to_csv(const Json& report) {
  auto quote = [](const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
      if (c == '"') out += '"';
      out += c;
    }
    return out + "\"";
  };
  std::string header, values;
  for (auto it = report.begin(); it != report.end(); ++it) {
    if (!header.empty()) {
      header += ',';
      values += ',';
    }
    header += quote(it.key());
    values += quote(it.value().is_string() ? it.value().get<std::string>() : it.value().dump());
  }
  return header + "\n" + values + "\n";
}

}  // namespace tautclass
