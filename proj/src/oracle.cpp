#include "tautclass/oracle.hpp"

#include <cmath>
#include <complex>
#include <string>

namespace tautclass {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2 * kPi;

// Into (-pi, pi].
double wrap(double x) {
  x = std::remainder(x, kTwoPi);
  return x <= -kPi ? x + kTwoPi : x;
}

Eigen::Matrix2d normalized(const Eigen::Matrix2d& m) {
  const double d = m.determinant();
  if (!(d > 0)) throw OracleError("matrix with non-positive determinant");
  return m / std::sqrt(d);
}

}  // namespace

CircleLift::CircleLift(const Eigen::Matrix2d& m, double shift) : m_(normalized(m)), shift_(shift) {
  start_ = image_angle(0.0);
}

double CircleLift::image_angle(double x) const {
  const Eigen::Vector2d v = m_ * Eigen::Vector2d(std::cos(x), std::sin(x));
  return std::atan2(v(1), v(0));
}

// Continuous branch of image_angle(x) - x on [0, r], tracked from x = 0 with steps whose
// images subtend at most pi/2.
double CircleLift::displacement(double r) const {
  double x = 0.0, delta = start_;
  double image = image_angle(0.0);
  while (x < r) {
    double step = std::min(kPi / 4, r - x);
    double next_image = image_angle(x + step);
    int halvings = 0;
    while (std::abs(wrap(next_image - image)) > kPi / 2) {
      if (++halvings > 60) throw OracleError("angle tracking failed to converge");
      step /= 2;
      next_image = image_angle(x + step);
    }
    delta += wrap((next_image - image) - step);
    image = next_image;
    x += step;
  }
  return delta;
}

double CircleLift::operator()(double x) const {
  const double turns = std::floor(x / kTwoPi);
  const double r = x - turns * kTwoPi;
  return x + displacement(r) + shift_;
}

CircleLift CircleLift::inverse() const {
  const CircleLift candidate(m_.inverse());
  const double back = (*this)(candidate(0.0));
  return CircleLift(m_.inverse(), -kTwoPi * std::round(back / kTwoPi));
}

RotationReport rotation_euler_report(int genus, const std::vector<Eigen::Matrix2d>& generators) {
  if (genus < 1 || static_cast<int>(generators.size()) != 2 * genus)
    throw std::invalid_argument("rotation_euler: expected 2g generators");
  Eigen::Matrix2d relator = Eigen::Matrix2d::Identity();
  double scale = 1.0;
  std::vector<CircleLift> lifts, inverses;
  for (int i = 0; i < 2 * genus; ++i) {
    lifts.emplace_back(generators[static_cast<std::size_t>(i)]);
    inverses.push_back(lifts.back().inverse());
  }
  for (int i = 0; i < genus; ++i) {
    const Eigen::Matrix2d a = normalized(generators[static_cast<std::size_t>(2 * i)]);
    const Eigen::Matrix2d b = normalized(generators[static_cast<std::size_t>(2 * i + 1)]);
    relator = relator * a * b * a.inverse() * b.inverse();
    // Normalized a and a^-1 have equal operator norms.
    scale *= std::pow(a.operatorNorm() * b.operatorNorm(), 2);
  }
  RotationReport out;
  out.relator_residual = (relator - Eigen::Matrix2d::Identity()).cwiseAbs().maxCoeff() / scale;
  if (!(out.relator_residual <= 1e-9))
    throw OracleError("relator differs from the identity (relative residual " + std::to_string(out.relator_residual) + ")");
  // The word acts right to left: B_g^-1 first.
  double x = 0.0;
  for (int i = genus - 1; i >= 0; --i) {
    const std::size_t a = static_cast<std::size_t>(2 * i), b = a + 1;
    x = inverses[b](x);
    x = inverses[a](x);
    x = lifts[b](x);
    x = lifts[a](x);
  }
  out.translation = x / kTwoPi;
  out.value = static_cast<std::int64_t>(std::llround(out.translation));
  out.residual = std::abs(out.translation - static_cast<double>(out.value));
  if (out.residual > 0.1)
    throw OracleError("translation number " + std::to_string(out.translation) + " is not near an integer");
  return out;
}

std::int64_t rotation_euler(int genus, const std::vector<Eigen::Matrix2d>& generators) {
  return rotation_euler_report(genus, generators).value;
}

std::vector<Eigen::Matrix2d> to_double(const std::vector<Matrix<Rational>>& matrices) {
  std::vector<Eigen::Matrix2d> out;
  for (const auto& m : matrices) {
    if (m.rows() != 2 || m.cols() != 2) throw std::invalid_argument("to_double: expected 2x2 matrices");
    Eigen::Matrix2d d;
    for (Index i = 0; i < 2; ++i)
      for (Index j = 0; j < 2; ++j) d(i, j) = m(i, j).convert_to<double>();
    out.push_back(d);
  }
  return out;
}

std::vector<Eigen::Matrix2d> octagon_generators() {
  using Complex = std::complex<double>;
  using M = Eigen::Matrix2cd;
  // Disk model: SU(1,1) acting by Moebius maps, conjugated to SL(2,R) by the Cayley transform.
  const double radius = std::tanh(std::acosh(1.0 / std::tan(kPi / 8)) / 2);
  auto rotation = [](double t) {
    M r = M::Zero();
    r(0, 0) = std::polar(1.0, t / 2);
    r(1, 1) = std::polar(1.0, -t / 2);
    return r;
  };
  auto half_turn = [&](Complex p) {
    M t;
    t << 1.0, p, std::conj(p), 1.0;
    t /= std::sqrt(1 - std::norm(p));
    return M(t * rotation(kPi) * t.inverse());
  };
  // Pairs side j with side i: rotate j onto i, then turn across i.
  auto pairing = [&](int i, int j) {
    return M(half_turn(std::polar(radius, (i + 0.5) * kPi / 4)) * rotation((i - j) * kPi / 4));
  };
  M cayley;
  cayley << 1.0, Complex(0, -1), 1.0, Complex(0, 1);
  cayley /= std::sqrt(2.0);
  const M pairings[] = {pairing(0, 2), M(pairing(1, 3).inverse()), pairing(4, 6), M(pairing(5, 7).inverse())};
  std::vector<Eigen::Matrix2d> out;
  for (const M& g : pairings) out.push_back((cayley.inverse() * g * cayley).real());
  return out;
}

}  // namespace tautclass
