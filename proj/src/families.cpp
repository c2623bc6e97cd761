#include "tautclass/families.hpp"

#include <utility>

namespace tautclass {

Matrix<Rational> matrix2(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  Matrix<Rational> m(2, 2);
  m << a, b, c, d;
  return m;
}

SurfaceRep<Rational> torus_diagonal() {
  return {"torus-diagonal", 1, {matrix2(2, 0, 0, Rational(1, 2)), matrix2(3, 0, 0, Rational(1, 3))}};
}

SurfaceRep<Rational> swap_family(const Matrix<Rational>& a, const Matrix<Rational>& b, std::string name) {
  return {std::move(name), 2, {a, b, b, a}};
}

SurfaceRep<Rational> solved_relator(const Matrix<Rational>& a1, const Matrix<Rational>& b1, const Rational& alpha,
                                    const Rational& beta, int k, std::string name) {
  const Matrix<Rational> c = multiply(multiply(multiply(b1, a1), inverse(b1)), inverse(a1));
  const Matrix<Rational> y = Matrix<Rational>(alpha * Matrix<Rational>::Identity(2, 2) + beta * c);
  const Matrix<Rational> y_inv = inverse(y);
  Matrix<Rational> z = Matrix<Rational>::Identity(2, 2);
  for (int i = 0; i < k; ++i) z = multiply(z, b1);
  return {std::move(name), 2,
          {a1, b1, multiply(multiply(y, b1), y_inv), multiply(multiply(multiply(y, a1), z), y_inv)}};
}

SurfaceRep<Rational> doubled_torus() {
  const Matrix<Rational> a1 = matrix2(4, -1, 1, 0);
  const Matrix<Rational> b1 = matrix2(1, -1, Rational(-1, 2), Rational(3, 2));
  const Matrix<Rational> r = matrix2(-1, 16, 0, 1);
  const Matrix<Rational> r_inv = inverse(r);
  return {"doubled-torus", 2, {a1, b1, multiply(multiply(r, b1), r_inv), multiply(multiply(r, a1), r_inv)}};
}

SurfaceRep<Rational> with_scalar_block(const SurfaceRep<Rational>& rep, const std::vector<Rational>& scalars) {
  SurfaceRep<Rational> out{rep.name + "+scalar", rep.genus, {}};
  for (std::size_t i = 0; i < rep.generators.size(); ++i) {
    Matrix<Rational> m = Matrix<Rational>::Zero(3, 3);
    m.topLeftCorner(2, 2) = rep.generators[i];
    m(2, 2) = scalars.at(i);
    out.generators.push_back(std::move(m));
  }
  return out;
}

SurfaceRep<Rational> scalar_rep(const std::vector<Rational>& scalars) {
  SurfaceRep<Rational> out{"scalar", static_cast<int>(scalars.size()) / 2, {}};
  for (const Rational& c : scalars) out.generators.push_back(Matrix<Rational>::Constant(1, 1, c));
  return out;
}

std::vector<SurfaceRep<Rational>> genus2_family() {
  const Matrix<Rational> u = matrix2(1, 1, 0, 1), l = matrix2(1, 0, 1, 1);
  const Matrix<Rational> h = matrix2(2, 1, 1, 1), k = matrix2(3, 2, 1, 1);
  const Matrix<Rational> d = matrix2(2, 0, 0, Rational(1, 2));
  std::vector<SurfaceRep<Rational>> out;
  out.push_back(swap_family(u, l, "swap-unipotent"));
  out.push_back(swap_family(h, k, "swap-hyperbolic"));
  out.push_back(swap_family(d, l, "swap-mixed"));
  out.push_back(doubled_torus());
  out.push_back(reversed(doubled_torus()));
  out.push_back(solved_relator(u, l, 1, 1, 0, "solved-ul"));
  out.push_back(solved_relator(h, l, 2, -1, 1, "solved-hl"));
  const Matrix<Rational> a1 = matrix2(4, -1, 1, 0), b1 = matrix2(1, -1, Rational(-1, 2), Rational(3, 2));
  out.push_back(solved_relator(a1, b1, 1, 1, 0, "solved-dt"));
  out.push_back(solved_relator(a1, b1, 2, 3, 1, "solved-dt-twisted"));
  out.push_back(solved_relator(matrix2(0, -1, 1, 3), matrix2(2, 3, 1, 2), -1, 2, 1, "solved-elliptic"));
  return out;
}

std::vector<SurfaceRep<QuadraticNumber>> quadratic_family() {
  const QuadraticNumber one(1), zero(0), r(Rational(0), Rational(1), 2);
  auto m2 = [](QuadraticNumber a, QuadraticNumber b, QuadraticNumber c, QuadraticNumber d) {
    Matrix<QuadraticNumber> m(2, 2);
    m << a, b, c, d;
    return m;
  };
  const Matrix<QuadraticNumber> a = m2(one + r, zero, zero, r - one);
  const Matrix<QuadraticNumber> u = m2(one, r, zero, one), l = m2(one, zero, r, one);
  std::vector<SurfaceRep<QuadraticNumber>> out;
  out.push_back({"torus-sqrt2", 1, {a, multiply(a, a)}});
  out.push_back({"swap-sqrt2", 2, {u, l, l, u}});
  return out;
}

}  // namespace tautclass
