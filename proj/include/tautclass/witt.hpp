#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tautclass/exactmath.hpp"

namespace tautclass {

inline constexpr std::uint64_t kDefaultTrialBound = 1'000'000;

class FactorizationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Factorization {
  int sign = 1;
  std::vector<std::pair<Integer, int>> primes;  // ascending
};

/// Trial division up to `bound`; a remaining cofactor must be prime (below bound^2, or
/// passing Miller-Rabin) or FactorizationError is thrown.
Factorization factorize(const Integer& n, std::uint64_t bound = kDefaultTrialBound);

bool is_prime(const Integer& n);

/// The squarefree integer in q * (Q^*)^2.
Integer square_class(const Rational& q, std::uint64_t bound = kDefaultTrialBound);

/// A completion of Q: a prime p or the real place.
class Place {
 public:
  static Place infinite() { return Place(); }
  static Place prime(const Integer& p);

  bool is_infinite() const { return !prime_.has_value(); }
  const Integer& prime_number() const { return *prime_; }
  std::string to_string() const;

 private:
  Place() = default;
  std::optional<Integer> prime_;
};

/// Hilbert symbol (a, b) at a place, for nonzero rationals.
int hilbert_symbol(const Rational& a, const Rational& b, const Place& place);

/// Integer combination of square classes; keyed by the squarefree representative.
class WittElement {
 public:
  WittElement() = default;

  /// The one-dimensional form <lambda>.
  static WittElement symbol(const Rational& lambda);
  static WittElement from_terms(const std::map<Integer, std::int64_t>& terms);

  const std::map<Integer, std::int64_t>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::int64_t multiplicity(const Integer& representative) const;

  WittElement& operator+=(const WittElement& other);
  WittElement& operator-=(const WittElement& other);
  friend WittElement operator+(WittElement a, const WittElement& b) { return a += b; }
  friend WittElement operator-(WittElement a, const WittElement& b) { return a -= b; }
  friend WittElement operator-(const WittElement& a) { return std::int64_t{-1} * a; }
  friend WittElement operator*(std::int64_t m, const WittElement& w);
  /// Equality of representations, not of Witt classes; see witt_is_zero.
  friend bool operator==(const WittElement& a, const WittElement& b) { return a.terms_ == b.terms_; }

 private:
  void add_term(const Integer& representative, std::int64_t multiplicity);
  std::map<Integer, std::int64_t> terms_;
};

inline WittElement witt_add(const WittElement& a, const WittElement& b) { return a + b; }
inline WittElement witt_negate(const WittElement& w) { return -w; }
inline WittElement witt_scale(const WittElement& w, std::int64_t m) { return m * w; }

std::int64_t signature(const WittElement& w);

/// Classical invariants of the diagonal form attached to w, after cancelling <a> + <-a>.
struct WittInvariants {
  std::int64_t dimension = 0;
  std::int64_t signature = 0;
  Integer discriminant = 1;  // square class of the signed discriminant (-1)^(d(d-1)/2) det
  std::vector<std::pair<Integer, int>> hasse;  // prime -> Hasse invariant, relevant primes only
};

WittInvariants witt_invariants(const WittElement& w);

/// Decides w = 0 in W(Q) through dimension, signature, discriminant and Hasse invariants.
bool witt_is_zero(const WittElement& w);

/// Equality in W(Q).
inline bool witt_equal(const WittElement& a, const WittElement& b) { return witt_is_zero(a - b); }

/// "k1*<a1> + k2*<a2>", or "0" for the empty element.
std::string to_string(const WittElement& w);

}  // namespace tautclass
