#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "tautclass/exactmath.hpp"

namespace tautclass {

class OracleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Lift to R of the action of a positive-determinant 2x2 matrix on the circle of directions.
/// The canonical lift has F(0) in (-pi, pi]; `shift` adds a multiple of 2 pi.
class CircleLift {
 public:
  explicit CircleLift(const Eigen::Matrix2d& m, double shift = 0.0);

  double operator()(double x) const;
  /// The lift G of m^-1 with F(G(x)) = x.
  CircleLift inverse() const;

 private:
  double displacement(double r) const;
  double image_angle(double x) const;

  Eigen::Matrix2d m_;
  double shift_ = 0.0;
  double start_ = 0.0;
};

struct RotationReport {
  std::int64_t value = 0;
  double translation = 0.0;
  /// |translation - value|.
  double residual = 0.0;
  /// max |entry| of the normalized relator minus the identity, divided by the product of the
  /// squared operator norms of the normalized generators.
  double relator_residual = 0.0;
};

/// Euler number of the flat circle-of-directions bundle of a surface group representation:
/// the translation number of the lifted relator prod [A_i, B_i]. Throws OracleError when the
/// relator is not within 1e-9 of I (relative residual) or the translation number is more than 0.1 from an integer.
RotationReport rotation_euler_report(int genus, const std::vector<Eigen::Matrix2d>& generators);
std::int64_t rotation_euler(int genus, const std::vector<Eigen::Matrix2d>& generators);

std::vector<Eigen::Matrix2d> to_double(const std::vector<Matrix<Rational>>& matrices);

/// Side pairings of the regular hyperbolic octagon with angles pi/4, in the order A_1, B_1, A_2, B_2.
std::vector<Eigen::Matrix2d> octagon_generators();

}  // namespace tautclass
