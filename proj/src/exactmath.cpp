#include "tautclass/exactmath.hpp"

#include <cctype>
#include <cmath>
#include <ostream>
#include <sstream>

#include "tautclass/quadratic_number.hpp"

namespace tautclass {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Integer ten_power(long e) {
  Integer out = 1;
  for (long i = 0; i < e; ++i) out *= 10;
  return out;
}

std::int64_t merge_radicand(std::int64_t d1, std::int64_t d2) {
  if (d1 == 0) return d2;
  if (d2 == 0 || d1 == d2) return d1;
  throw std::domain_error("quadratic number: elements of different fields Q(sqrt(" +
                          std::to_string(d1) + ")) and Q(sqrt(" + std::to_string(d2) + "))");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  const std::string original(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  std::string_view body = s;
  bool negative = false;
  if (body.front() == '+' || body.front() == '-') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational value;
  if (const auto slash = body.find('/'); slash != std::string_view::npos) {
    const auto num = body.substr(0, slash), den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw std::invalid_argument("malformed rational literal '" + original + "'");
    const Integer d(std::string{den});
    if (d.is_zero()) throw std::invalid_argument("zero denominator in '" + original + "'");
    value = Rational(Integer(std::string{num}), d);
  } else {
    std::string_view mantissa = body;
    long exponent = 0;
    if (const auto e = body.find_first_of("eE"); e != std::string_view::npos) {
      mantissa = body.substr(0, e);
      std::string_view exp = body.substr(e + 1);
      bool exp_negative = false;
      if (!exp.empty() && (exp.front() == '+' || exp.front() == '-')) {
        exp_negative = exp.front() == '-';
        exp.remove_prefix(1);
      }
      if (!all_digits(exp) || exp.size() > 6)
        throw std::invalid_argument("malformed exponent in '" + original + "'");
      exponent = std::stol(std::string{exp});
      if (exp_negative) exponent = -exponent;
    }
    std::string digits;
    if (const auto dot = mantissa.find('.'); dot != std::string_view::npos) {
      const auto whole = mantissa.substr(0, dot), frac = mantissa.substr(dot + 1);
      if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
          (!frac.empty() && !all_digits(frac)))
        throw std::invalid_argument("malformed decimal literal '" + original + "'");
      digits = std::string{whole} + std::string{frac};
      exponent -= static_cast<long>(frac.size());
    } else {
      if (!all_digits(mantissa))
        throw std::invalid_argument("malformed rational literal '" + original + "'");
      digits = std::string{mantissa};
    }
    value = Rational(Integer(digits));
    if (exponent > 0) value *= Rational(ten_power(exponent));
    if (exponent < 0) value /= Rational(ten_power(-exponent));
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Integer& x) { return x.str(); }

std::string to_string(const Rational& x) {
  const Integer den = boost::multiprecision::denominator(x);
  if (den == 1) return boost::multiprecision::numerator(x).str();
  return boost::multiprecision::numerator(x).str() + "/" + den.str();
}

bool is_valid_radicand(std::int64_t d) {
  if (d < 2) return false;
  for (std::int64_t p = 2; p * p <= d; ++p)
    if (d % (p * p) == 0) return false;
  return true;
}

QuadraticNumber::QuadraticNumber(Rational a, Rational b, std::int64_t d)
    : a_(std::move(a)), b_(std::move(b)), d_(d) {
  if (d_ != 0 && !is_valid_radicand(d_))
    throw std::invalid_argument("quadratic number: radicand " + std::to_string(d_) +
                                " is not a squarefree integer > 1");
  if (d_ == 0 && !b_.is_zero())
    throw std::invalid_argument("quadratic number: irrational part without a radicand");
}

double QuadraticNumber::to_double() const {
  return a_.convert_to<double>() + b_.convert_to<double>() * std::sqrt(static_cast<double>(d_));
}

QuadraticNumber QuadraticNumber::operator-() const {
  QuadraticNumber out = *this;
  out.a_ = -a_;
  out.b_ = -b_;
  return out;
}

QuadraticNumber operator+(const QuadraticNumber& x, const QuadraticNumber& y) {
  QuadraticNumber out;
  out.d_ = merge_radicand(x.d_, y.d_);
  out.a_ = x.a_ + y.a_;
  out.b_ = x.b_ + y.b_;
  return out;
}

QuadraticNumber operator-(const QuadraticNumber& x, const QuadraticNumber& y) { return x + (-y); }

QuadraticNumber operator*(const QuadraticNumber& x, const QuadraticNumber& y) {
  QuadraticNumber out;
  out.d_ = merge_radicand(x.d_, y.d_);
  out.a_ = x.a_ * y.a_ + x.b_ * y.b_ * out.d_;
  out.b_ = x.a_ * y.b_ + x.b_ * y.a_;
  return out;
}

QuadraticNumber operator/(const QuadraticNumber& x, const QuadraticNumber& y) {
  const std::int64_t d = merge_radicand(x.d_, y.d_);
  const Rational norm = y.a_ * y.a_ - y.b_ * y.b_ * d;
  if (norm.is_zero()) throw std::domain_error("quadratic number: division by zero");
  QuadraticNumber conjugate;
  conjugate.d_ = d;
  conjugate.a_ = y.a_ / norm;
  conjugate.b_ = -y.b_ / norm;
  return x * conjugate;
}

bool operator==(const QuadraticNumber& x, const QuadraticNumber& y) {
  if (!x.b_.is_zero() && !y.b_.is_zero()) merge_radicand(x.d_, y.d_);
  return x.a_ == y.a_ && x.b_ == y.b_;
}

bool operator<(const QuadraticNumber& x, const QuadraticNumber& y) { return sign(x - y) < 0; }

int sign(const QuadraticNumber& x) {
  const int sa = sign(x.rational_part());
  const int sb = sign(x.irrational_part());
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sa == 0 ? sb : sa;
  // Opposite signs: compare a^2 with b^2 d.
  const Rational a2 = x.rational_part() * x.rational_part();
  const Rational b2d = x.irrational_part() * x.irrational_part() * x.radicand();
  if (a2 == b2d) return 0;
  return a2 > b2d ? sa : sb;
}

QuadraticNumber abs(const QuadraticNumber& x) { return sign(x) < 0 ? -x : x; }

QuadraticNumber parse_quadratic(std::string_view text, std::int64_t radicand) {
  const std::string original(text);
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  const auto root = s.find("sqrt(");
  if (root == std::string::npos) return QuadraticNumber(parse_rational(s));
  if (radicand == 0)
    throw std::invalid_argument("irrational literal '" + original + "' in a rational field");
  const auto close = s.find(')', root);
  if (close == std::string::npos || close + 1 != s.size())
    throw std::invalid_argument("malformed quadratic literal '" + original + "'");
  const Rational d = parse_rational(s.substr(root + 5, close - root - 5));
  if (d != Rational(radicand))
    throw std::invalid_argument("literal '" + original + "' uses a radicand other than " +
                                std::to_string(radicand));
  // Split the prefix "a+b*" / "a-b*" / "b*" / "" / "-" at the last top-level sign.
  std::string prefix = s.substr(0, root);
  std::string coefficient;
  if (!prefix.empty() && prefix.back() == '*') {
    prefix.pop_back();
    std::size_t cut = std::string::npos;
    for (std::size_t i = prefix.size(); i-- > 1;) {
      if ((prefix[i] == '+' || prefix[i] == '-') && prefix[i - 1] != 'e' && prefix[i - 1] != 'E') {
        cut = i;
        break;
      }
    }
    if (cut == std::string::npos) {
      coefficient = prefix;
      prefix.clear();
    } else {
      coefficient = prefix.substr(cut);
      prefix = prefix.substr(0, cut);
    }
  } else {
    // "sqrt(d)", "-sqrt(d)", "a+sqrt(d)", "a-sqrt(d)".
    if (!prefix.empty() && (prefix.back() == '+' || prefix.back() == '-')) {
      coefficient = std::string(1, prefix.back()) + "1";
      prefix.pop_back();
    } else if (prefix.empty()) {
      coefficient = "1";
    } else {
      throw std::invalid_argument("malformed quadratic literal '" + original + "'");
    }
  }
  const Rational a = prefix.empty() ? Rational(0) : parse_rational(prefix);
  const Rational b = parse_rational(coefficient);
  return QuadraticNumber(a, b, radicand);
}

std::string to_string(const QuadraticNumber& x) {
  if (x.is_rational()) return to_string(x.rational_part());
  std::string out;
  if (!x.rational_part().is_zero()) out = to_string(x.rational_part());
  const Rational& b = x.irrational_part();
  if (b.sign() < 0) {
    out += "-" + to_string(Rational(-b));
  } else {
    if (!out.empty()) out += "+";
    out += to_string(b);
  }
  return out + "*sqrt(" + std::to_string(x.radicand()) + ")";
}

std::ostream& operator<<(std::ostream& out, const QuadraticNumber& x) { return out << to_string(x); }

}  // namespace tautclass
