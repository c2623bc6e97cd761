#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "tautclass/complexes.hpp"
#include "tautclass/configs.hpp"
#include "tautclass/exactmath.hpp"
#include "tautclass/quadratic_number.hpp"
#include "tautclass/witt.hpp"

namespace tautclass {

enum class StructureTag { gl_plus, sl, pgl_plus, p_plus_gl_plus };

std::string to_string(StructureTag tag);
/// Accepts "GL+", "SL", "PGL+", "P+GL+".
StructureTag parse_structure_tag(std::string_view text);
/// True for tags whose relators hold only up to scalars.
inline bool is_projective(StructureTag tag) {
  return tag == StructureTag::pgl_plus || tag == StructureTag::p_plus_gl_plus;
}

/// Invalid holonomy data: tag violation, relator failure, broken triangle condition.
class RepresentationError : public std::invalid_argument {
 public:
  RepresentationError(const std::string& what, std::string residual = {})
      : std::invalid_argument(what), residual_(std::move(residual)) {}
  const std::string& residual() const { return residual_; }

 private:
  std::string residual_;
};

struct ClassSelector {
  enum class Kind { euler, euler_component, euler_plus, witt };
  Kind kind = Kind::euler_component;
  int component = 0;

  static ClassSelector eu() { return {Kind::euler, 0}; }
  static ClassSelector eu_k(int k) { return {Kind::euler_component, k}; }
  static ClassSelector eu_plus() { return {Kind::euler_plus, 0}; }
  static ClassSelector witt() { return {Kind::witt, 0}; }
  /// "eu0", "euk:K", "eu", "euplus", "witt".
  static ClassSelector parse(std::string_view text);
  std::string to_string() const;
};

enum class Genericity { standard, strong };

template <class Scalar>
std::string matrix_to_string(const Matrix<Scalar>& m) {
  std::string out = "[";
  for (Index i = 0; i < m.rows(); ++i) {
    out += i ? ", [" : "[";
    for (Index j = 0; j < m.cols(); ++j) {
      if (j) out += ", ";
      if constexpr (std::is_floating_point_v<Scalar>) out += std::to_string(m(i, j));
      else out += to_string(m(i, j));
    }
    out += "]";
  }
  return out + "]";
}

/// Radicand of the quadratic field generated by the entries, 0 for Q.
template <class Scalar>
std::int64_t field_radicand(const Matrix<Scalar>& m) {
  if constexpr (std::is_same_v<Scalar, QuadraticNumber>) {
    std::int64_t d = 0;
    for (Index i = 0; i < m.rows(); ++i)
      for (Index j = 0; j < m.cols(); ++j) {
        const std::int64_t e = m(i, j).radicand();
        if (e == 0) continue;
        if (d != 0 && d != e) throw std::domain_error("entries from different quadratic fields");
        d = e;
      }
    return d;
  } else {
    (void)m;
    return 0;
  }
}

/// Edge holonomies on a Delta-complex: h(e) transports the fiber at e's first vertex to its second.
template <class Scalar>
class FlatBundle {
 public:
  FlatBundle(DeltaComplex base, int fiber_dimension, StructureTag tag,
             std::vector<Matrix<Scalar>> holonomy)
      : base_(std::move(base)), n_(fiber_dimension), tag_(tag), holonomy_(std::move(holonomy)) {
    if (n_ < 1) throw RepresentationError("fiber dimension must be positive");
    if (static_cast<int>(holonomy_.size()) != base_.count(1))
      throw RepresentationError("need one holonomy matrix per edge");
    for (std::size_t e = 0; e < holonomy_.size(); ++e) {
      const Matrix<Scalar>& h = holonomy_[e];
      if (h.rows() != n_ || h.cols() != n_)
        throw RepresentationError("holonomy of edge " + std::to_string(e) + " has the wrong size");
      const Scalar d = determinant(h);
      if (tag_ == StructureTag::sl ? !(d == Scalar(1)) : sign(d) <= 0)
        throw RepresentationError("edge " + std::to_string(e) + " violates the " + tautclass::to_string(tag_) +
                                      " determinant condition",
                                  matrix_to_string(h));
      inverse_.push_back(inverse(h));
      radicand_ = merge(radicand_, field_radicand(h));
    }
    for (int t = 0; t < base_.count(2); ++t) {
      const Simplex& s = base_.simplex(2, t);
      const Matrix<Scalar>& lhs = holonomy_[static_cast<std::size_t>(s.faces[1])];
      const Matrix<Scalar> rhs = multiply(holonomy_[static_cast<std::size_t>(s.faces[0])],
                                          holonomy_[static_cast<std::size_t>(s.faces[2])]);
      const std::optional<Scalar> ratio = scalar_ratio(lhs, rhs);
      const bool ok = ratio && (is_projective(tag_) ? (tag_ == StructureTag::pgl_plus || sign(*ratio) > 0)
                                                    : *ratio == Scalar(1));
      if (!ok)
        throw RepresentationError("triangle " + std::to_string(t) + " violates flatness",
                                  matrix_to_string(Matrix<Scalar>(lhs - rhs)));
      if (sign(*ratio) < 0) positively_flat_ = false;
    }
  }

  const DeltaComplex& base() const { return base_; }
  int fiber_dimension() const { return n_; }
  StructureTag tag() const { return tag_; }
  std::int64_t radicand() const { return radicand_; }
  const Matrix<Scalar>& holonomy(int edge) const { return holonomy_.at(static_cast<std::size_t>(edge)); }
  const Matrix<Scalar>& inverse_holonomy(int edge) const { return inverse_.at(static_cast<std::size_t>(edge)); }
  /// Triangle conditions hold up to positive scalars (needed for the U_+ classes).
  bool positively_flat() const { return positively_flat_; }

 private:
  static std::int64_t merge(std::int64_t a, std::int64_t b) {
    if (a == 0) return b;
    if (b == 0 || a == b) return a;
    throw std::domain_error("holonomy entries from different quadratic fields");
  }

  // lambda with lhs = lambda * rhs, if any.
  static std::optional<Scalar> scalar_ratio(const Matrix<Scalar>& lhs, const Matrix<Scalar>& rhs) {
    for (Index i = 0; i < rhs.rows(); ++i)
      for (Index j = 0; j < rhs.cols(); ++j)
        if (!is_zero(rhs(i, j))) {
          const Scalar lambda = lhs(i, j) / rhs(i, j);
          for (Index a = 0; a < rhs.rows(); ++a)
            for (Index b = 0; b < rhs.cols(); ++b)
              if (!(lhs(a, b) == lambda * rhs(a, b))) return std::nullopt;
          return lambda;
        }
    return std::nullopt;
  }

  DeltaComplex base_;
  int n_ = 0;
  StructureTag tag_;
  std::vector<Matrix<Scalar>> holonomy_;
  std::vector<Matrix<Scalar>> inverse_;
  std::int64_t radicand_ = 0;
  bool positively_flat_ = true;
};

/// A flat bundle over the genus-g surface model, from generators A_1, B_1, ..., A_g, B_g.
template <class Scalar>
struct SurfaceBundle {
  SurfaceModel surface;
  FlatBundle<Scalar> bundle;
};

/// prod [A_i, B_i] with [A, B] = A B A^-1 B^-1.
template <class Scalar>
Matrix<Scalar> surface_relator(const std::vector<Matrix<Scalar>>& generators) {
  if (generators.empty() || generators.size() % 2 == 1)
    throw RepresentationError("need an even, positive number of generators");
  const Index n = generators.front().rows();
  Matrix<Scalar> r = Matrix<Scalar>::Identity(n, n);
  for (std::size_t i = 0; i < generators.size(); i += 2) {
    const Matrix<Scalar>& a = generators[i];
    const Matrix<Scalar>& b = generators[i + 1];
    r = multiply(multiply(multiply(multiply(r, a), b), inverse(a)), inverse(b));
  }
  return r;
}

/// Checks the relator against the tag: I for GL+/SL, a positive scalar for P+GL+, any scalar for PGL+.
template <class Scalar>
void check_surface_relator(const std::vector<Matrix<Scalar>>& generators, StructureTag tag) {
  const Matrix<Scalar> r = surface_relator(generators);
  const Index n = r.rows();
  const Scalar lambda = r(0, 0);
  bool scalar = true;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (!(r(i, j) == (i == j ? lambda : Scalar(0)))) scalar = false;
  bool ok = scalar;
  if (ok && !is_projective(tag)) ok = lambda == Scalar(1);
  if (ok && tag == StructureTag::p_plus_gl_plus) ok = sign(lambda) > 0;
  if (!ok) {
    const Matrix<Scalar> residual = r - Matrix<Scalar>::Identity(n, n);
    throw RepresentationError("relator is not trivial in the " + to_string(tag) + " quotient",
                              matrix_to_string(residual));
  }
}

template <class Scalar>
SurfaceBundle<Scalar> bundle_from_surface_rep(int genus, const std::vector<Matrix<Scalar>>& generators,
                                              StructureTag tag) {
  if (genus < 1) throw RepresentationError("genus must be >= 1");
  if (static_cast<int>(generators.size()) != 2 * genus)
    throw RepresentationError("expected " + std::to_string(2 * genus) + " matrices");
  const Index n = generators.front().rows();
  for (const auto& m : generators) {
    if (m.rows() != n || m.cols() != n) throw RepresentationError("matrices must be square of one size");
    const Scalar d = determinant(m);
    if (tag == StructureTag::sl ? !(d == Scalar(1)) : sign(d) <= 0)
      throw RepresentationError("generator violates the " + to_string(tag) + " determinant condition",
                                matrix_to_string(m));
  }
  check_surface_relator(generators, tag);
  SurfaceModel surface = surface_complex(genus);
  std::vector<Matrix<Scalar>> holonomy(static_cast<std::size_t>(surface.complex.count(1)));
  for (int x = 0; x < 2 * genus; ++x)
    holonomy[static_cast<std::size_t>(surface.generator_edges[static_cast<std::size_t>(x)])] =
        inverse(generators[static_cast<std::size_t>(x)]);
  // Transport from corner 0 to corner k+1 along the polygon boundary; side k moves by rho(x)^-e.
  Matrix<Scalar> along = Matrix<Scalar>::Identity(n, n);
  for (int k = 0; k + 1 <= 4 * genus - 2; ++k) {
    const auto [x, exponent] = surface.sides[static_cast<std::size_t>(k)];
    const Matrix<Scalar>& rho = generators[static_cast<std::size_t>(x)];
    along = multiply(exponent > 0 ? Matrix<Scalar>(inverse(rho)) : rho, along);
    if (k + 1 >= 2)
      holonomy[static_cast<std::size_t>(surface.diagonals[static_cast<std::size_t>(k - 1)])] = along;
  }
  DeltaComplex base = surface.complex;
  return SurfaceBundle<Scalar>{std::move(surface), FlatBundle<Scalar>(std::move(base), static_cast<int>(n), tag,
                                                                      std::move(holonomy))};
}

/// Bundle over the one-edge circle whose loop transports by h.
template <class Scalar>
FlatBundle<Scalar> bundle_over_circle(const Matrix<Scalar>& h, StructureTag tag) {
  auto [circle, loop] = circle_complex();
  (void)loop;
  return FlatBundle<Scalar>(circle, static_cast<int>(h.rows()), tag, {h});
}

/// Parallel transport from corner i of a simplex to its corner 0.
template <class Scalar>
Matrix<Scalar> transport_to_base(const FlatBundle<Scalar>& bundle, int dim, int id, int corner) {
  const int n = bundle.fiber_dimension();
  if (corner < 0 || corner > dim) throw std::invalid_argument("transport_to_base: no such corner");
  if (corner == 0) return Matrix<Scalar>::Identity(n, n);
  return bundle.inverse_holonomy(bundle.base().edge(dim, id, 0, corner));
}

template <class Scalar>
struct Section {
  std::vector<Vector<Scalar>> values;

  const Vector<Scalar>& operator[](int vertex) const { return values.at(static_cast<std::size_t>(vertex)); }
};

/// Corner values of s on a simplex, transported into the fiber at corner 0 (as columns).
template <class Scalar>
Matrix<Scalar> corner_tuple(const FlatBundle<Scalar>& bundle, const Section<Scalar>& s, int dim, int id) {
  const Simplex& simplex = bundle.base().simplex(dim, id);
  const int n = bundle.fiber_dimension();
  Matrix<Scalar> out(n, dim + 1);
  for (int i = 0; i <= dim; ++i)
    out.col(i) = multiply(transport_to_base(bundle, dim, id, i), s[simplex.vertices[static_cast<std::size_t>(i)]]);
  return out;
}

namespace detail {

template <class Scalar>
bool simplex_is_generic(const FlatBundle<Scalar>& bundle, const Section<Scalar>& s, int dim, int id,
                        Genericity level) {
  const Matrix<Scalar> tuple = corner_tuple(bundle, s, dim, id);
  if (!is_linearly_generic(tuple)) return false;
  if (level == Genericity::strong && dim == bundle.fiber_dimension())
    return !unique_relation(tuple).zero_sum;
  return true;
}

template <class Scalar>
Scalar sample_scalar(std::mt19937_64& rng, std::int64_t bound, std::int64_t radicand) {
  std::uniform_int_distribution<std::int64_t> pick(-bound, bound);
  if constexpr (std::is_same_v<Scalar, QuadraticNumber>) {
    const std::int64_t a = pick(rng), b = pick(rng);
    if (radicand == 0) return QuadraticNumber(Rational(a));
    return QuadraticNumber(Rational(a), Rational(b), radicand);
  } else {
    (void)radicand;
    return Scalar(pick(rng));
  }
}

template <class Scalar>
Vector<Scalar> sample_vector(std::mt19937_64& rng, int n, std::int64_t bound, std::int64_t radicand) {
  while (true) {
    Vector<Scalar> v(n);
    bool nonzero = false;
    for (int i = 0; i < n; ++i) {
      v(i) = sample_scalar<Scalar>(rng, bound, radicand);
      if (!is_zero(v(i))) nonzero = true;
    }
    if (nonzero) return v;
  }
}

// Simplices of the fiber dimension, grouped by their largest vertex.
template <class Scalar>
std::vector<std::vector<int>> simplices_by_last_vertex(const FlatBundle<Scalar>& bundle) {
  const DeltaComplex& base = bundle.base();
  const int n = bundle.fiber_dimension();
  std::vector<std::vector<int>> out(static_cast<std::size_t>(base.vertex_count()));
  for (int id = 0; id < base.count(n); ++id) {
    const auto& v = base.simplex(n, id).vertices;
    out[static_cast<std::size_t>(*std::max_element(v.begin(), v.end()))].push_back(id);
  }
  return out;
}

}  // namespace detail

/// Every simplex of the fiber dimension has linearly generic transported corner values;
/// strong mode also requires a nonzero relation sum there.
template <class Scalar>
bool is_generic_section(const FlatBundle<Scalar>& bundle, const Section<Scalar>& s,
                        Genericity level = Genericity::standard) {
  const int n = bundle.fiber_dimension();
  if (static_cast<int>(s.values.size()) != bundle.base().vertex_count()) return false;
  for (const auto& v : s.values)
    if (v.size() != n || std::all_of(v.begin(), v.end(), [](const Scalar& x) { return is_zero(x); }))
      return false;
  if (n > bundle.base().dimension()) return true;
  for (int id = 0; id < bundle.base().count(n); ++id)
    if (!detail::simplex_is_generic(bundle, s, n, id, level)) return false;
  return true;
}

struct SamplingOptions {
  Genericity level = Genericity::standard;
  std::int64_t initial_bound = 9;
  /// Rejections before the bound doubles; 0 means 50 n.
  int rejections_per_doubling = 0;
};

/// Vertex-by-vertex rejection sampling of integer (or a+b*sqrt(d)) vectors; deterministic in the seed.
/// After 10 n rejections at one vertex the earlier vertices are resampled too.
template <class Scalar>
Section<Scalar> random_generic_section(const FlatBundle<Scalar>& bundle, std::uint64_t seed,
                                       const SamplingOptions& options = {}) {
  if (options.initial_bound < 1) throw std::invalid_argument("random_generic_section: bound must be >= 1");
  const int n = bundle.fiber_dimension();
  const int per_doubling = options.rejections_per_doubling > 0 ? options.rejections_per_doubling : 50 * n;
  std::mt19937_64 rng(seed);
  std::int64_t bound = options.initial_bound;
  int rejections = 0;
  const auto groups = detail::simplices_by_last_vertex(bundle);
  Section<Scalar> s;
  s.values.assign(static_cast<std::size_t>(bundle.base().vertex_count()), Vector<Scalar>());
  int stuck = 0;
  for (int v = 0; v < bundle.base().vertex_count(); ++v) {
    s.values[static_cast<std::size_t>(v)] = detail::sample_vector<Scalar>(rng, n, bound, bundle.radicand());
    bool ok = true;
    for (int id : groups[static_cast<std::size_t>(v)])
      if (!detail::simplex_is_generic(bundle, s, n, id, options.level)) {
        ok = false;
        break;
      }
    if (ok) {
      stuck = 0;
      continue;
    }
    if (++rejections % per_doubling == 0) bound *= 2;
    v = ++stuck >= 10 * n ? -1 : v - 1;
    if (v < 0) stuck = 0;
  }
  return s;
}

/// Proper nonempty subset sums of the sum-normalized relations on simplices of the fiber dimension.
template <class Scalar>
std::set<Scalar> scalar_set(const FlatBundle<Scalar>& bundle, const Section<Scalar>& s) {
  const int n = bundle.fiber_dimension();
  std::set<Scalar> out;
  for (int id = 0; id < bundle.base().count(n); ++id) {
    const LinearRelation<Scalar> rel = unique_relation(corner_tuple(bundle, s, n, id));
    if (rel.zero_sum) throw GenericityError("scalar_set: section is not strongly generic");
    const int m = n + 1;
    for (std::uint32_t mask = 1; mask + 1 < (1u << m); ++mask) {
      Scalar total(0);
      for (int i = 0; i < m; ++i)
        if (mask & (1u << i)) total = total + rel.coefficients(i);
      out.insert(total);
    }
  }
  return out;
}

template <class Scalar>
struct JointScalarSets {
  std::set<Scalar> left;
  std::set<Scalar> right;
  bool disjoint = false;
};

template <class Scalar>
JointScalarSets<Scalar> joint_scalar_sets(const FlatBundle<Scalar>& e, const Section<Scalar>& s,
                                          const FlatBundle<Scalar>& f, const Section<Scalar>& t) {
  if (!is_generic_section(e, s, Genericity::strong) || !is_generic_section(f, t, Genericity::strong))
    throw GenericityError("joint_scalar_sets: sections must be strongly generic");
  JointScalarSets<Scalar> out{scalar_set(e, s), scalar_set(f, t), true};
  for (const Scalar& a : out.left)
    if (out.right.count(a)) {
      out.disjoint = false;
      break;
    }
  return out;
}

/// Functionals phi_sigma (row vectors in the fiber at corner 0) on simplices of the fiber dimension.
template <class Scalar>
using Witnesses = std::map<int, Matrix<Scalar>>;

namespace detail {

template <class Scalar>
bool witnessed_positive(const FlatBundle<Scalar>& bundle, const Section<Scalar>& s,
                        const Witnesses<Scalar>& witnesses) {
  const int n = bundle.fiber_dimension();
  for (int id = 0; id < bundle.base().count(n); ++id) {
    const auto it = witnesses.find(id);
    if (it == witnesses.end()) return false;
    const Matrix<Scalar> values = multiply(it->second, corner_tuple(bundle, s, n, id));
    for (Index i = 0; i < values.cols(); ++i)
      if (sign(values(0, i)) <= 0) return false;
  }
  return true;
}

}  // namespace detail

/// Perturbs a positive section into a generic positive one. Each vertex value moves to
/// s(x) + alpha w with alpha = M/4, M the positivity margin along w; alpha is halved while a
/// genericity condition still fails, and w is resampled after 40 halvings.
template <class Scalar>
Section<Scalar> make_positive_generic(const FlatBundle<Scalar>& bundle, const Section<Scalar>& s,
                                      const Witnesses<Scalar>& witnesses, std::uint64_t seed = 1) {
  if (!detail::witnessed_positive(bundle, s, witnesses))
    throw std::invalid_argument("make_positive_generic: witnesses are not positive on the input section");
  const int n = bundle.fiber_dimension();
  const DeltaComplex& base = bundle.base();
  std::mt19937_64 rng(seed);
  const auto groups = detail::simplices_by_last_vertex(bundle);
  Section<Scalar> out = s;
  for (int v = 0; v < base.vertex_count(); ++v) {
    // Corners (simplex, corner index) of witnessed simplices located at v.
    std::vector<std::pair<int, int>> corners;
    for (int id = 0; id < base.count(n); ++id) {
      const auto& vertices = base.simplex(n, id).vertices;
      for (int i = 0; i <= n; ++i)
        if (vertices[static_cast<std::size_t>(i)] == v) corners.emplace_back(id, i);
    }
    bool done = false;
    while (!done) {
      const Vector<Scalar> w = detail::sample_vector<Scalar>(rng, n, 9, bundle.radicand());
      std::optional<Scalar> margin;
      for (const auto& [id, i] : corners) {
        const Matrix<Scalar> phi = multiply(witnesses.at(id), transport_to_base(bundle, n, id, i));
        const Scalar at_s = multiply(phi, s[v])(0, 0);
        const Scalar at_w = multiply(phi, w)(0, 0);
        if (sign(at_w) < 0) {
          const Scalar bound = -at_s / at_w;
          if (!margin || bound < *margin) margin = bound;
        }
      }
      Scalar alpha = margin ? Scalar(*margin / Scalar(4)) : Scalar(1);
      for (int attempt = 0; attempt < 40 && !done; ++attempt) {
        out.values[static_cast<std::size_t>(v)] = s[v] + alpha * w;
        done = true;
        for (int id : groups[static_cast<std::size_t>(v)])
          if (!detail::simplex_is_generic(bundle, out, n, id, Genericity::standard)) {
            done = false;
            break;
          }
        alpha = alpha / Scalar(2);
      }
    }
  }
  if (!detail::witnessed_positive(bundle, out, witnesses))
    throw std::logic_error("make_positive_generic: positivity lost");
  return out;
}

/// Per-simplex record of an evaluation.
struct SimplexSymbol {
  int simplex = 0;
  std::int64_t coefficient = 0;
  std::string symbol;
};

struct Evaluation {
  ClassSelector selector;
  ClassValue value;
  std::vector<SimplexSymbol> simplices;
};

/// sum_sigma z_sigma * symbol(transported corner tuple of s at sigma).
template <class Scalar>
Evaluation evaluate_class(const FlatBundle<Scalar>& bundle, const Section<Scalar>& s,
                          const ClassSelector& selector, const Chain& z) {
  const int n = bundle.fiber_dimension();
  if (z.dimension != n)
    throw std::invalid_argument("evaluate_class: cycle dimension " + std::to_string(z.dimension) +
                                " differs from fiber dimension " + std::to_string(n));
  if (!boundary(bundle.base(), z).empty()) throw std::invalid_argument("evaluate_class: chain is not a cycle");
  using Kind = ClassSelector::Kind;
  if (selector.kind == Kind::witt) {
    if (n != 2 || !std::is_same_v<Scalar, Rational>)
      throw std::invalid_argument("evaluate_class: the Witt class needs n = 2 over Q");
    if (bundle.tag() != StructureTag::sl)
      throw std::invalid_argument("evaluate_class: the Witt class needs SL holonomy");
  }
  if (selector.kind == Kind::euler_component && (selector.component < 0 || selector.component > n / 2))
    throw std::invalid_argument("evaluate_class: component out of range");
  if (selector.kind != Kind::witt && selector.kind != Kind::euler && !bundle.positively_flat())
    throw std::invalid_argument("evaluate_class: U_+ classes need positive triangle scalars");
  Evaluation out{selector, std::int64_t{0}, {}};
  std::int64_t total = 0;
  UPlusSymbol plus = UPlusSymbol::zero(n);
  WittElement witt;
  for (const auto& [id, c] : z.coefficients) {
    const Matrix<Scalar> tuple = corner_tuple(bundle, s, n, id);
    SimplexSymbol record{id, c, {}};
    switch (selector.kind) {
      case Kind::euler: {
        if (n % 2 == 1) {
          record.symbol = "0";
          break;
        }
        const USymbol u = u_symbol(tuple);
        total += c * u.coefficient;
        record.symbol = to_string(u);
        break;
      }
      case Kind::euler_component:
      case Kind::euler_plus: {
        const RawPlusSymbol raw = uplus_raw_symbol(tuple);
        const UPlusSymbol canonical = uplus_canonicalize(raw);
        plus += c * canonical;
        record.symbol = to_string(raw);
        break;
      }
      case Kind::witt: {
        if constexpr (std::is_same_v<Scalar, Rational>) {
          const WittElement w = witt_triple_symbol(tuple);
          witt += c * w;
          record.symbol = to_string(w);
        }
        break;
      }
    }
    out.simplices.push_back(std::move(record));
  }
  switch (selector.kind) {
    case Kind::euler: out.value = total; break;
    case Kind::euler_component: out.value = plus.coefficients(selector.component); break;
    case Kind::euler_plus: out.value = plus; break;
    case Kind::witt: out.value = witt; break;
  }
  return out;
}

/// Values of an integer-valued class cocycle s^*T on all simplices of the fiber dimension.
template <class Scalar>
Cochain class_cochain(const FlatBundle<Scalar>& bundle, const Section<Scalar>& s, const ClassSelector& selector) {
  const int n = bundle.fiber_dimension();
  Cochain out;
  for (int id = 0; id < bundle.base().count(n); ++id) {
    const Matrix<Scalar> tuple = corner_tuple(bundle, s, n, id);
    if (selector.kind == ClassSelector::Kind::euler) {
      out[id] = n % 2 == 1 ? 0 : u_symbol(tuple).coefficient;
    } else if (selector.kind == ClassSelector::Kind::euler_component) {
      out[id] = uplus_canonicalize(uplus_raw_symbol(tuple)).coefficients(selector.component);
    } else {
      throw std::invalid_argument("class_cochain: selector is not integer valued");
    }
  }
  return out;
}

template <class Scalar>
struct ProductBundle {
  ProductComplex product;
  FlatBundle<Scalar> bundle;
};

/// E x E' over the product complex, with block-diagonal holonomies.
template <class Scalar>
ProductBundle<Scalar> product_bundle(const FlatBundle<Scalar>& e, const FlatBundle<Scalar>& f) {
  if (is_projective(e.tag()) || is_projective(f.tag()))
    throw std::invalid_argument("product_bundle: factors must carry linear (GL+ or SL) holonomy");
  if (e.radicand() != 0 && f.radicand() != 0 && e.radicand() != f.radicand())
    throw std::invalid_argument("product_bundle: factors over different fields");
  ProductComplex product(e.base(), f.base());
  const int n = e.fiber_dimension(), k = f.fiber_dimension();
  std::vector<Matrix<Scalar>> holonomy;
  for (int id = 0; id < product.complex().count(1); ++id) {
    const ProductCell& cell = product.cell(1, id);
    Matrix<Scalar> h = Matrix<Scalar>::Zero(n + k, n + k);
    h.topLeftCorner(n, n) = cell.left_dim == 1 ? e.holonomy(cell.left) : Matrix<Scalar>::Identity(n, n);
    h.bottomRightCorner(k, k) = cell.right_dim == 1 ? f.holonomy(cell.right) : Matrix<Scalar>::Identity(k, k);
    holonomy.push_back(std::move(h));
  }
  const StructureTag tag =
      (e.tag() == StructureTag::sl && f.tag() == StructureTag::sl) ? StructureTag::sl : StructureTag::gl_plus;
  DeltaComplex base = product.complex();
  FlatBundle<Scalar> bundle(std::move(base), n + k, tag, std::move(holonomy));
  return ProductBundle<Scalar>{std::move(product), std::move(bundle)};
}

/// S(x, x') = (s(x), s'(x')).
template <class Scalar>
Section<Scalar> product_section(const ProductBundle<Scalar>& p, const Section<Scalar>& s, const Section<Scalar>& t) {
  const int n = static_cast<int>(s.values.front().size()), k = static_cast<int>(t.values.front().size());
  Section<Scalar> out;
  out.values.resize(static_cast<std::size_t>(p.product.complex().vertex_count()));
  for (std::size_t v = 0; v < s.values.size(); ++v)
    for (std::size_t w = 0; w < t.values.size(); ++w) {
      Vector<Scalar> x(n + k);
      x.head(n) = s.values[v];
      x.tail(k) = t.values[w];
      out.values[static_cast<std::size_t>(p.product.vertex_id(static_cast<int>(v), static_cast<int>(w)))] = x;
    }
  return out;
}

template <class Scalar>
struct SubdividedBundle {
  Subdivision subdivision;
  FlatBundle<Scalar> bundle;
};

/// Pullback to the barycentric subdivision; the fiber over the barycenter of a face is the
/// fiber over that face's corner 0.
template <class Scalar>
SubdividedBundle<Scalar> subdivide_bundle(const FlatBundle<Scalar>& bundle) {
  Subdivision sd(bundle.base());
  std::vector<Matrix<Scalar>> holonomy;
  for (int id = 0; id < sd.complex().count(1); ++id) {
    const FlagCell& cell = sd.cell(1, id);
    int lowest = 0;
    while (!(cell.flag.front() >> lowest & 1u)) ++lowest;
    holonomy.push_back(transport_to_base(bundle, cell.carrier_dim, cell.carrier, lowest));
  }
  DeltaComplex base = sd.complex();
  FlatBundle<Scalar> pulled(std::move(base), bundle.fiber_dimension(), bundle.tag(), std::move(holonomy));
  return SubdividedBundle<Scalar>{std::move(sd), std::move(pulled)};
}

/// Joint genericity could not be reached within the retry budget.
class ResamplingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CrossProductReport {
  std::int64_t left = 0;
  std::int64_t right = 0;
  /// <eu_0(E x E'), z x z'>.
  std::int64_t product = 0;
  /// <pr^* eu_0(E) cup pr'^* eu_0(E'), z x z'>.
  std::int64_t cup = 0;
  /// <eu_plus(E x E'), z x z'> and <eu(E x E'), z x z'>.
  UPlusSymbol product_plus;
  std::int64_t product_euler = 0;
  int attempts = 0;
  std::size_t product_simplices = 0;
};

/// Samples strongly generic sections with disjoint scalar sets, then evaluates both sides of
/// the cross-product formula and the cup-product route.
template <class Scalar>
CrossProductReport cross_product_check(const FlatBundle<Scalar>& e, const Chain& z, const FlatBundle<Scalar>& f,
                                       const Chain& w, std::uint64_t seed, int retry_budget = 10) {
  const ClassSelector eu0 = ClassSelector::eu_k(0);
  const ProductBundle<Scalar> p = product_bundle(e, f);
  const Chain zw = product_chain(p.product, z, w);
  const SamplingOptions strong{Genericity::strong};
  const Section<Scalar> s = random_generic_section(e, seed, strong);
  for (int attempt = 1; attempt <= retry_budget; ++attempt) {
    const Section<Scalar> t = random_generic_section(f, seed + static_cast<std::uint64_t>(attempt), strong);
    if (!joint_scalar_sets(e, s, f, t).disjoint) continue;
    const Section<Scalar> st = product_section(p, s, t);
    CrossProductReport out;
    try {
      out.product = std::get<std::int64_t>(evaluate_class(p.bundle, st, eu0, zw).value);
      out.product_plus = std::get<UPlusSymbol>(evaluate_class(p.bundle, st, ClassSelector::eu_plus(), zw).value);
      out.product_euler = std::get<std::int64_t>(evaluate_class(p.bundle, st, ClassSelector::eu(), zw).value);
    } catch (const GenericityError&) {
      continue;
    }
    out.left = std::get<std::int64_t>(evaluate_class(e, s, eu0, z).value);
    out.right = std::get<std::int64_t>(evaluate_class(f, t, eu0, w).value);
    const int n = e.fiber_dimension(), k = f.fiber_dimension();
    out.cup = cup_evaluate(p.product.complex(), pullback_left(p.product, class_cochain(e, s, eu0), n), n,
                           pullback_right(p.product, class_cochain(f, t, eu0), k), k, zw);
    out.attempts = attempt;
    out.product_simplices = zw.coefficients.size();
    return out;
  }
  throw ResamplingError("no jointly generic sections within " + std::to_string(retry_budget) + " attempts");
}

/// cross_product_check, retried on the barycentric subdivision of the right factor when the
/// coarse attempts run out. On a one-vertex base with commuting holonomy the scalar set does
/// not depend on the section, so E x E can never be made jointly generic there.
template <class Scalar>
CrossProductReport cross_product_check_refining(const FlatBundle<Scalar>& e, const Chain& z,
                                                const FlatBundle<Scalar>& f, const Chain& w, std::uint64_t seed,
                                                int retry_budget = 10, bool* refined = nullptr) {
  if (refined) *refined = false;
  try {
    return cross_product_check(e, z, f, w, seed, retry_budget);
  } catch (const ResamplingError&) {
  }
  const SubdividedBundle<Scalar> sf = subdivide_bundle(f);
  if (refined) *refined = true;
  return cross_product_check(e, z, sf.bundle, sf.subdivision.subdivide(w), seed, retry_budget);
}

struct PositiveMixedReport {
  std::int64_t value = 0;
  std::size_t product_simplices = 0;
  int attempts = 0;
};

/// For rank(E) > dim z: S = (s, 0) is positive for the functionals (phi_sigma, 0), phi_sigma
/// equal to 1 on the corner values of s; it is perturbed to a generic positive section and
/// eu_0(E x E') is evaluated on z x z'. Both bases are subdivided first, so that product cells
/// have distinct vertices; on a one-vertex base every section of E x E' is a product section.
template <class Scalar>
PositiveMixedReport evaluate_positive_mixed(const FlatBundle<Scalar>& coarse_e, const Chain& coarse_z,
                                            const FlatBundle<Scalar>& coarse_f, const Chain& coarse_w,
                                            std::uint64_t seed, int retry_budget = 10) {
  const SubdividedBundle<Scalar> se = subdivide_bundle(coarse_e), sf = subdivide_bundle(coarse_f);
  const FlatBundle<Scalar>& e = se.bundle;
  const FlatBundle<Scalar>& f = sf.bundle;
  const Chain z = se.subdivision.subdivide(coarse_z), w = sf.subdivision.subdivide(coarse_w);
  const int n = e.fiber_dimension(), k = f.fiber_dimension();
  const int m = z.dimension;
  if (m >= n) throw std::invalid_argument("evaluate_positive_mixed: need rank(E) > dim z");
  if (n + k != m + w.dimension) throw std::invalid_argument("evaluate_positive_mixed: dimensions do not add up");
  const ProductBundle<Scalar> p = product_bundle(e, f);
  const Chain zw = product_chain(p.product, z, w);
  Section<Scalar> t;
  for (int v = 0; v < f.base().vertex_count(); ++v) t.values.push_back(Vector<Scalar>::Zero(k));
  for (int attempt = 1; attempt <= retry_budget; ++attempt) {
    const std::uint64_t round = seed + static_cast<std::uint64_t>(attempt - 1);
    std::mt19937_64 rng(round);
    Section<Scalar> s;
    for (int v = 0; v < e.base().vertex_count(); ++v)
      s.values.push_back(detail::sample_vector<Scalar>(rng, n, 9, e.radicand()));
    // phi_sigma with value 1 at every corner of each m-simplex of the base of E.
    std::map<int, Matrix<Scalar>> phi;
    bool ok = true;
    for (int id = 0; id < e.base().count(m) && ok; ++id) {
      const Matrix<Scalar> q = corner_tuple(e, s, m, id);
      if (rank(q) != m + 1) {
        ok = false;
        break;
      }
      const auto solution = solve_any(Matrix<Scalar>(q.transpose()), Vector<Scalar>::Ones(m + 1));
      phi[id] = solution.front().transpose();
    }
    if (!ok) continue;
    Witnesses<Scalar> witnesses;
    for (int id = 0; id < p.bundle.base().count(n + k); ++id) {
      const ProductCell& cell = p.product.cell(n + k, id);
      if (cell.left_dim != m) throw std::logic_error("evaluate_positive_mixed: top cell over a lower face");
      Matrix<Scalar> row = Matrix<Scalar>::Zero(1, n + k);
      row.leftCols(n) = phi.at(cell.left);
      witnesses[id] = row;
    }
    const Section<Scalar> positive = product_section(p, s, t);
    const Section<Scalar> generic = make_positive_generic(p.bundle, positive, witnesses, round);
    PositiveMixedReport out;
    out.value = std::get<std::int64_t>(evaluate_class(p.bundle, generic, ClassSelector::eu_k(0), zw).value);
    out.product_simplices = zw.coefficients.size();
    out.attempts = attempt;
    return out;
  }
  throw ResamplingError("no section with independent corner values within " + std::to_string(retry_budget) +
                        " attempts");
}

}  // namespace tautclass
