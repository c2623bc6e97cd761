#include "tautclass/configs.hpp"

#include <algorithm>
#include <sstream>

namespace tautclass {

int RawPlusSymbol::plus_count() const {
  return static_cast<int>(std::count(tail.begin(), tail.end(), 1));
}

UPlusSymbol UPlusSymbol::zero(int n) {
  return UPlusSymbol{n, IntVector::Zero(n / 2 + 1)};
}

UPlusSymbol& UPlusSymbol::operator+=(const UPlusSymbol& other) {
  if (other.dimension != dimension) throw std::invalid_argument("U+ symbols of different n");
  coefficients += other.coefficients;
  return *this;
}

UPlusSymbol& UPlusSymbol::operator-=(const UPlusSymbol& other) {
  if (other.dimension != dimension) throw std::invalid_argument("U+ symbols of different n");
  coefficients -= other.coefficients;
  return *this;
}

UPlusSymbol operator*(std::int64_t m, const UPlusSymbol& a) {
  return UPlusSymbol{a.dimension, m * a.coefficients};
}

bool operator==(const UPlusSymbol& a, const UPlusSymbol& b) {
  return a.dimension == b.dimension && a.coefficients.size() == b.coefficients.size() &&
         a.coefficients == b.coefficients;
}

std::string to_string(const USymbol& s) {
  if (s.coefficient == 1) return "[+]";
  if (s.coefficient == -1) return "-[+]";
  return std::to_string(s.coefficient) + "*[+]";
}

std::string to_string(const RawPlusSymbol& s) {
  std::string out = s.leading > 0 ? "[+;" : "[-;";
  for (int t : s.tail) out += t > 0 ? '+' : '-';
  return out + "]";
}

std::string to_string(const UPlusSymbol& s) {
  std::ostringstream out;
  bool first = true;
  for (Index a = 0; a < s.coefficients.size(); ++a) {
    if (s.coefficients(a) == 0) continue;
    if (!first) out << " + ";
    first = false;
    out << s.coefficients(a) << "*" << a << "+";
  }
  return first ? "0" : out.str();
}

std::string to_string(const ClassValue& v) {
  if (const auto* k = std::get_if<std::int64_t>(&v)) return std::to_string(*k);
  if (const auto* u = std::get_if<UPlusSymbol>(&v)) return to_string(*u);
  return to_string(std::get<WittElement>(v));
}

UPlusSymbol uplus_canonicalize(const RawPlusSymbol& raw) {
  const int n = raw.dimension();
  UPlusSymbol out = UPlusSymbol::zero(n);
  int a = raw.plus_count();
  std::int64_t c = raw.leading > 0 ? 1 : -1;
  if (a > n / 2) {
    if (n % 2 == 1 && 2 * a == n + 1) return out;
    a = n + 1 - a;
    c = -c;
  }
  out.coefficients(a) = c;
  return out;
}

std::int64_t to_u(const UPlusSymbol& c) {
  if (c.dimension % 2 == 1) return 0;
  std::int64_t out = 0;
  for (Index a = 0; a < c.coefficients.size(); ++a) out += (a % 2 == 0 ? 1 : -1) * c.coefficients(a);
  return out;
}

bool homological_core_check(const UPlusSymbol& c) {
  std::int64_t total = 0;
  for (Index a = 0; a < c.coefficients.size(); ++a)
    total += c.coefficients(a) * (c.dimension - 2 * a + 1);
  return total == 0;
}

WittElement witt_triple_symbol(const Matrix<Rational>& points) {
  if (points.rows() != 2 || points.cols() != 3)
    throw std::invalid_argument("witt_triple_symbol: expected three vectors in Q^2");
  auto det2 = [&](Index i, Index j) {
    return points(0, i) * points(1, j) - points(1, i) * points(0, j);
  };
  const Rational product = det2(0, 1) * det2(1, 2) * det2(2, 0);
  if (product.is_zero()) throw GenericityError("witt_triple_symbol: degenerate pair");
  return WittElement::symbol(product);
}

}  // namespace tautclass
