#include "tautclass/groupcoh.hpp"

#include <stdexcept>

#include "tautclass/configs.hpp"
#include "tautclass/flatbundles.hpp"

namespace tautclass {

namespace {

void require_sl2(const Matrix<Rational>& g) {
  if (g.rows() != 2 || g.cols() != 2 || determinant(g) != 1)
    throw std::invalid_argument("expected a 2x2 matrix of determinant 1");
}

void require_nonzero(const Vector<Rational>& u) {
  if (u.size() != 2 || (is_zero(u(0)) && is_zero(u(1)))) throw std::invalid_argument("u must be a nonzero 2-vector");
}

std::array<Rational, 4> coinvariant_key(const Matrix<Rational>& g0, const Matrix<Rational>& g1) {
  const Matrix<Rational> d = multiply(inverse(g0), g1);
  std::array<Rational, 4> key{d(0, 0), d(0, 1), d(1, 0), d(1, 1)};
  for (const Rational& x : key)
    if (!is_zero(x)) {
      if (x < 0)
        for (Rational& y : key) y = -y;
      break;
    }
  return key;
}

}  // namespace

WittElement witt_cocycle(const BarTriple& g, const Vector<Rational>& u) {
  require_nonzero(u);
  Matrix<Rational> points(2, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    require_sl2(g[i]);
    points.col(static_cast<Index>(i)) = multiply(g[i], u);
  }
  for (Index i = 0; i < 3; ++i)
    for (Index j = i + 1; j < 3; ++j)
      if (is_zero(points(0, i) * points(1, j) - points(1, i) * points(0, j))) return WittElement();
  return witt_triple_symbol(points);
}

WittElement cocycle_identity_residual(const std::array<Matrix<Rational>, 4>& g, const Vector<Rational>& u) {
  WittElement total;
  for (std::size_t i = 0; i < 4; ++i) {
    BarTriple face;
    std::size_t k = 0;
    for (std::size_t j = 0; j < 4; ++j)
      if (j != i) face[k++] = g[j];
    const WittElement w = witt_cocycle(face, u);
    total += i % 2 ? -w : w;
  }
  return total;
}

BarChain2 commuting_pair_cycle(const Matrix<Rational>& g, const Matrix<Rational>& h) {
  require_sl2(g);
  require_sl2(h);
  const Matrix<Rational> gh = multiply(g, h), hg = multiply(h, g);
  if (!equal(gh, hg) && !equal(gh, Matrix<Rational>(-hg)))
    throw std::invalid_argument("commuting_pair_cycle: g and h do not commute in PSL(2,Q)");
  const Matrix<Rational> one = Matrix<Rational>::Identity(2, 2);
  BarChain2 out;
  out.add({one, g, gh}, 1);
  out.add({one, h, hg}, -1);
  return out;
}

BarChain2 surface_cycle_from_rep(int genus, const std::vector<Matrix<Rational>>& generators) {
  for (const auto& g : generators) require_sl2(g);
  const SurfaceBundle<Rational> b = bundle_from_surface_rep(genus, generators, StructureTag::pgl_plus);
  BarChain2 out;
  for (const auto& [id, c] : b.surface.fundamental.coefficients)
    out.add({transport_to_base(b.bundle, 2, id, 0), transport_to_base(b.bundle, 2, id, 1),
             transport_to_base(b.bundle, 2, id, 2)},
            c);
  return out;
}

BarChain1 bar_boundary(const BarChain2& chain) {
  BarChain1 out;
  auto add = [&out](const std::array<Rational, 4>& key, std::int64_t c) {
    if ((out[key] += c) == 0) out.erase(key);
  };
  for (const auto& [g, c] : chain.terms) {
    add(coinvariant_key(g[1], g[2]), c);
    add(coinvariant_key(g[0], g[2]), -c);
    add(coinvariant_key(g[0], g[1]), c);
  }
  return out;
}

WittElement evaluate_bar(const WittCocycle& cocycle, const BarChain2& chain, const Vector<Rational>& u) {
  WittElement total;
  for (const auto& [g, c] : chain.terms) total += c * cocycle(g, u);
  return total;
}

}  // namespace tautclass
