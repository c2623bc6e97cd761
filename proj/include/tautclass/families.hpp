#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tautclass/exactmath.hpp"
#include "tautclass/quadratic_number.hpp"

namespace tautclass {

/// Generators A_1, B_1, ..., A_g, B_g of a surface group representation.
template <class Scalar>
struct SurfaceRep {
  std::string name;
  int genus = 0;
  std::vector<Matrix<Scalar>> generators;
};

Matrix<Rational> matrix2(const Rational& a, const Rational& b, const Rational& c, const Rational& d);

/// diag(2, 1/2), diag(3, 1/3).
SurfaceRep<Rational> torus_diagonal();
/// (A, B, B, A); [A, B][B, A] = I for any A, B.
SurfaceRep<Rational> swap_family(const Matrix<Rational>& a, const Matrix<Rational>& b, std::string name);
/// A_2 = Y B_1 Y^-1 and B_2 = Y A_1 B_1^k Y^-1 with Y = alpha I + beta [B_1, A_1],
/// so that [A_2, B_2] = [B_1, A_1].
SurfaceRep<Rational> solved_relator(const Matrix<Rational>& a1, const Matrix<Rational>& b1, const Rational& alpha,
                                    const Rational& beta, int k, std::string name);
/// A genus-2 SL(2,Q) representation with Euler number of absolute value 1.
SurfaceRep<Rational> doubled_torus();
/// (B_g, A_g, ..., B_1, A_1): the same representation read with the opposite orientation.
template <class Scalar>
SurfaceRep<Scalar> reversed(const SurfaceRep<Scalar>& rep) {
  SurfaceRep<Scalar> out{rep.name + "-reversed", rep.genus, {}};
  for (auto it = rep.generators.rbegin(); it != rep.generators.rend(); ++it) out.generators.push_back(*it);
  return out;
}
/// SL(2) block of `rep` plus a positive scalar block (det != 1, so GL+).
SurfaceRep<Rational> with_scalar_block(const SurfaceRep<Rational>& rep, const std::vector<Rational>& scalars);
/// Rank-1 representation by positive scalars.
SurfaceRep<Rational> scalar_rep(const std::vector<Rational>& scalars);
/// Ten genus-2 SL(2,Q) representations: swap and solved-relator families.
std::vector<SurfaceRep<Rational>> genus2_family();
/// Genus-1 and genus-2 representations over Q(sqrt 2).
std::vector<SurfaceRep<QuadraticNumber>> quadratic_family();

}  // namespace tautclass
