#include "tautclass/witt.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <boost/multiprecision/miller_rabin.hpp>

namespace tautclass {

namespace {

Integer absolute(const Integer& n) { return n.sign() < 0 ? Integer(-n) : n; }

// Squarefree integer in the class of a*b for squarefree a, b.
Integer squarefree_product(const Integer& a, const Integer& b) {
  const Integer g = boost::multiprecision::gcd(a, b);
  return (a / g) * (b / g);
}

Integer integer_class(const Rational& q) {
  return boost::multiprecision::numerator(q) * boost::multiprecision::denominator(q);
}

// n = p^valuation * unit.
int split_valuation(Integer& n, const Integer& p) {
  int valuation = 0;
  while (!n.is_zero() && (n % p).is_zero()) {
    n /= p;
    ++valuation;
  }
  return valuation;
}

Integer positive_mod(const Integer& n, const Integer& m) {
  Integer r = n % m;
  if (r.sign() < 0) r += m;
  return r;
}

int legendre(const Integer& u, const Integer& p) {
  const Integer r = positive_mod(u, p);
  const Integer e = boost::multiprecision::powm(r, Integer((p - 1) / 2), p);
  return e == 1 ? 1 : -1;
}

}  // namespace

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  return boost::multiprecision::miller_rabin_test(n, 25);
}

Factorization factorize(const Integer& n, std::uint64_t bound) {
  if (n.is_zero()) throw std::invalid_argument("factorize: zero has no factorization");
  Factorization out;
  out.sign = n.sign();
  Integer rest = absolute(n);
  auto record = [&out](const Integer& p, int e) {
    if (e > 0) out.primes.emplace_back(p, e);
  };
  std::uint64_t p = 2;
  if (rest > 1) {
    for (; p <= bound; p += (p == 2 ? 1 : 2)) {
      if (rest <= std::numeric_limits<std::uint64_t>::max()) {
        // Native arithmetic for the common word-sized case.
        std::uint64_t r = rest.convert_to<std::uint64_t>();
        for (; p <= bound; p += (p == 2 ? 1 : 2)) {
          if (static_cast<unsigned __int128>(p) * p > r) break;
          int e = 0;
          while (r % p == 0) {
            r /= p;
            ++e;
          }
          record(Integer(p), e);
        }
        rest = Integer(r);
        break;
      }
      const Integer ip(p);
      if (ip * ip > rest) break;
      record(ip, split_valuation(rest, ip));
    }
  }
  if (rest > 1) {
    const Integer b(bound);
    const bool exhausted = Integer(p) * Integer(p) > rest;
    if (!exhausted && rest >= (b + 1) * (b + 1) && !is_prime(rest))
      throw FactorizationError("factorize: cofactor " + rest.str() +
                               " has no prime factor below the trial bound");
    record(rest, 1);
  }
  std::sort(out.primes.begin(), out.primes.end());
  return out;
}

Integer square_class(const Rational& q, std::uint64_t bound) {
  if (q.is_zero()) throw std::domain_error("square_class: the symbol <0> is senseless");
  const Factorization f = factorize(integer_class(q), bound);
  Integer out = f.sign;
  for (const auto& [p, e] : f.primes)
    if (e % 2 == 1) out *= p;
  return out;
}

Place Place::prime(const Integer& p) {
  if (!is_prime(p)) throw std::invalid_argument("Place: " + p.str() + " is not prime");
  Place out;
  out.prime_ = p;
  return out;
}

std::string Place::to_string() const { return is_infinite() ? "inf" : prime_->str(); }

int hilbert_symbol(const Rational& a, const Rational& b, const Place& place) {
  if (a.is_zero() || b.is_zero()) throw std::domain_error("hilbert_symbol: zero argument");
  if (place.is_infinite()) return (a.sign() < 0 && b.sign() < 0) ? -1 : 1;
  const Integer& p = place.prime_number();
  Integer u = integer_class(a), v = integer_class(b);
  const int alpha = split_valuation(u, p);
  const int beta = split_valuation(v, p);
  if (p == 2) {
    const Integer eight(8);
    const int u8 = positive_mod(u, eight).convert_to<int>();
    const int v8 = positive_mod(v, eight).convert_to<int>();
    const int eps_u = (u8 % 4 == 3) ? 1 : 0, eps_v = (v8 % 4 == 3) ? 1 : 0;
    const int omega_u = (u8 == 3 || u8 == 5) ? 1 : 0, omega_v = (v8 == 3 || v8 == 5) ? 1 : 0;
    const int exponent = eps_u * eps_v + alpha * omega_v + beta * omega_u;
    return exponent % 2 == 0 ? 1 : -1;
  }
  int out = 1;
  const bool p_is_3_mod_4 = positive_mod(p, Integer(4)) == 3;
  if (p_is_3_mod_4 && (alpha * beta) % 2 == 1) out = -out;
  if (beta % 2 == 1) out *= legendre(u, p);
  if (alpha % 2 == 1) out *= legendre(v, p);
  return out;
}

WittElement WittElement::symbol(const Rational& lambda) {
  WittElement out;
  out.add_term(square_class(lambda), 1);
  return out;
}

WittElement WittElement::from_terms(const std::map<Integer, std::int64_t>& terms) {
  WittElement out;
  for (const auto& [rep, m] : terms) out.add_term(square_class(Rational(rep)), m);
  return out;
}

std::int64_t WittElement::multiplicity(const Integer& representative) const {
  const auto it = terms_.find(representative);
  return it == terms_.end() ? 0 : it->second;
}

void WittElement::add_term(const Integer& representative, std::int64_t multiplicity) {
  if (multiplicity == 0) return;
  auto [it, inserted] = terms_.try_emplace(representative, 0);
  it->second += multiplicity;
  if (it->second == 0) terms_.erase(it);
}

WittElement& WittElement::operator+=(const WittElement& other) {
  for (const auto& [rep, m] : other.terms_) add_term(rep, m);
  return *this;
}

WittElement& WittElement::operator-=(const WittElement& other) {
  for (const auto& [rep, m] : other.terms_) add_term(rep, -m);
  return *this;
}

WittElement operator*(std::int64_t m, const WittElement& w) {
  WittElement out;
  if (m == 0) return out;
  for (const auto& [rep, k] : w.terms_) out.terms_.emplace(rep, k * m);
  return out;
}

std::int64_t signature(const WittElement& w) {
  std::int64_t out = 0;
  for (const auto& [rep, m] : w.terms()) out += rep.sign() * m;
  return out;
}

namespace {

// Diagonal entries of the anisotropic-reduced form: <a> with multiplicity -k becomes k*<-a>,
// then pairs <a>, <-a> are dropped.
std::vector<Integer> reduced_entries(const WittElement& w) {
  std::map<Integer, std::int64_t> counts;
  for (const auto& [rep, m] : w.terms()) {
    if (m > 0) counts[rep] += m;
    else counts[Integer(-rep)] += -m;
  }
  for (auto& [rep, c] : counts) {
    if (rep.sign() <= 0) continue;
    const auto neg = counts.find(Integer(-rep));
    if (neg == counts.end()) continue;
    const std::int64_t k = std::min(c, neg->second);
    c -= k;
    neg->second -= k;
  }
  std::vector<Integer> out;
  for (const auto& [rep, c] : counts)
    for (std::int64_t i = 0; i < c; ++i) out.push_back(rep);
  return out;
}

int hasse_invariant(const std::vector<Integer>& entries, const Place& place) {
  // prod_{i<j} (a_i, a_j) = prod_i (a_i, a_{i+1} ... a_last).
  int out = 1;
  Integer tail = 1;
  std::vector<Integer> tails(entries.size());
  for (std::size_t i = entries.size(); i-- > 0;) {
    tails[i] = tail;
    tail = squarefree_product(tail, entries[i]);
  }
  for (std::size_t i = 0; i < entries.size(); ++i)
    out *= hilbert_symbol(Rational(entries[i]), Rational(tails[i]), place);
  return out;
}

}  // namespace

WittInvariants witt_invariants(const WittElement& w) {
  const std::vector<Integer> entries = reduced_entries(w);
  WittInvariants out;
  out.dimension = static_cast<std::int64_t>(entries.size());
  std::set<Integer> primes{Integer(2)};
  for (const Integer& a : entries) {
    out.signature += a.sign();
    out.discriminant = squarefree_product(out.discriminant, a);
    for (const auto& [p, e] : factorize(a).primes) primes.insert(p);
  }
  for (const Integer& p : primes)
    out.hasse.emplace_back(p, hasse_invariant(entries, Place::prime(p)));
  return out;
}

bool witt_is_zero(const WittElement& w) {
  const std::vector<Integer> entries = reduced_entries(w);
  if (entries.empty()) return true;
  if (entries.size() % 2 == 1) return false;
  const std::int64_t m = static_cast<std::int64_t>(entries.size()) / 2;
  std::int64_t sig = 0;
  Integer disc = 1;
  for (const Integer& a : entries) {
    sig += a.sign();
    disc = squarefree_product(disc, a);
  }
  if (sig != 0) return false;
  if (disc != Integer(m % 2 == 0 ? 1 : -1)) return false;
  std::set<Integer> primes{Integer(2)};
  for (const Integer& a : entries)
    for (const auto& [p, e] : factorize(a).primes) primes.insert(p);
  const std::int64_t pairs = m * (m - 1) / 2;
  for (const Integer& p : primes) {
    const int hyperbolic = (p == 2 && pairs % 2 == 1) ? -1 : 1;
    if (hasse_invariant(entries, Place::prime(p)) != hyperbolic) return false;
  }
  return true;
}

std::string to_string(const WittElement& w) {
  if (w.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [rep, m] : w.terms()) {
    if (!first) out << " + ";
    first = false;
    out << m << "*<" << rep.str() << ">";
  }
  return out.str();
}

}  // namespace tautclass
