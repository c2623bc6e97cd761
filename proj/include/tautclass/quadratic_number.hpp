#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "tautclass/exactmath.hpp"

namespace tautclass {

/// Element a + b*sqrt(d) of a real quadratic field, ordered by the embedding with sqrt(d) > 0.
/// d = 0 marks an element known to be rational that mixes freely with any field.
class QuadraticNumber {
 public:
  QuadraticNumber() = default;
  QuadraticNumber(int v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  QuadraticNumber(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  QuadraticNumber(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  QuadraticNumber(Rational a, Rational b, std::int64_t d);

  const Rational& rational_part() const { return a_; }
  const Rational& irrational_part() const { return b_; }
  std::int64_t radicand() const { return d_; }
  bool is_rational() const { return b_.is_zero(); }
  double to_double() const;

  QuadraticNumber operator-() const;
  friend QuadraticNumber operator+(const QuadraticNumber& x, const QuadraticNumber& y);
  friend QuadraticNumber operator-(const QuadraticNumber& x, const QuadraticNumber& y);
  friend QuadraticNumber operator*(const QuadraticNumber& x, const QuadraticNumber& y);
  friend QuadraticNumber operator/(const QuadraticNumber& x, const QuadraticNumber& y);
  QuadraticNumber& operator+=(const QuadraticNumber& y) { return *this = *this + y; }
  QuadraticNumber& operator-=(const QuadraticNumber& y) { return *this = *this - y; }
  QuadraticNumber& operator*=(const QuadraticNumber& y) { return *this = *this * y; }
  QuadraticNumber& operator/=(const QuadraticNumber& y) { return *this = *this / y; }

  friend bool operator==(const QuadraticNumber& x, const QuadraticNumber& y);
  friend bool operator<(const QuadraticNumber& x, const QuadraticNumber& y);

 private:
  Rational a_;
  Rational b_;
  std::int64_t d_ = 0;
};

int sign(const QuadraticNumber& x);
inline bool is_zero(const QuadraticNumber& x) { return sign(x) == 0; }
QuadraticNumber abs(const QuadraticNumber& x);

/// True when d is a squarefree integer greater than 1.
bool is_valid_radicand(std::int64_t d);

/// Parses "a", "a+b*sqrt(d)", "a-b*sqrt(d)", "b*sqrt(d)", "sqrt(d)"; d must equal `radicand`
/// unless `radicand` is 0, in which case only rational literals are accepted.
QuadraticNumber parse_quadratic(std::string_view text, std::int64_t radicand);
std::string to_string(const QuadraticNumber& x);
std::ostream& operator<<(std::ostream& out, const QuadraticNumber& x);

}  // namespace tautclass

namespace Eigen {

template <>
struct NumTraits<tautclass::QuadraticNumber> : GenericNumTraits<tautclass::QuadraticNumber> {
  using Real = tautclass::QuadraticNumber;
  using NonInteger = tautclass::QuadraticNumber;
  using Nested = tautclass::QuadraticNumber;
  using Literal = tautclass::QuadraticNumber;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 8,
    MulCost = 16
  };
};

}  // namespace Eigen
