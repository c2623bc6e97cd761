#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "tautclass/exactmath.hpp"
#include "tautclass/witt.hpp"

namespace tautclass {

/// Homogeneous bar triple of SL(2,Q) matrices standing for PSL(2,Q) elements.
using BarTriple = std::array<Matrix<Rational>, 3>;

/// Integer combination of homogeneous triples.
struct BarChain2 {
  std::vector<std::pair<BarTriple, std::int64_t>> terms;

  void add(BarTriple triple, std::int64_t coefficient) { terms.emplace_back(std::move(triple), coefficient); }
  bool empty() const { return terms.empty(); }
};

/// Coinvariant 1-chain: (g0, g1) ~ (I, g0^-1 g1), keyed by the +-normalized entries of g0^-1 g1.
using BarChain1 = std::map<std::array<Rational, 4>, std::int64_t>;

using WittCocycle = std::function<WittElement(const BarTriple&, const Vector<Rational>&)>;

/// <det(g0u,g1u) det(g1u,g2u) det(g2u,g0u)>, or 0 when two of the points agree projectively.
WittElement witt_cocycle(const BarTriple& g, const Vector<Rational>& u);

/// sum_i (-1)^i w(g0, .., g_i omitted, .., g3); zero whenever w is a cocycle.
WittElement cocycle_identity_residual(const std::array<Matrix<Rational>, 4>& g, const Vector<Rational>& u);

/// (1, g, gh) - (1, h, hg) for gh = +-hg.
BarChain2 commuting_pair_cycle(const Matrix<Rational>& g, const Matrix<Rational>& h);

/// Corner-to-base transports of every triangle of the surface model, with the fundamental
/// chain's coefficients. The relator has to be +-I.
BarChain2 surface_cycle_from_rep(int genus, const std::vector<Matrix<Rational>>& generators);

/// Homogeneous bar boundary in the coinvariants.
BarChain1 bar_boundary(const BarChain2& chain);

WittElement evaluate_bar(const WittCocycle& cocycle, const BarChain2& chain, const Vector<Rational>& u);

}  // namespace tautclass
