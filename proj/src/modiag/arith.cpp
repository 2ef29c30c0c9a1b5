#include "modiag/arith.hpp"

#include "modiag/error.hpp"

#include <algorithm>
#include <cctype>

namespace modiag {

Sign Sign::from_int(long v) {
  if (v == 1) return plus();
  if (v == -1) return minus();
  fail(ErrorKind::usage, "sign must be +1 or -1, got " + std::to_string(v));
}

FieldDesc FieldDesc::totally_real(std::string label, int degree) {
  if (degree < 1) fail(ErrorKind::usage, "field degree must be positive");
  if (label.empty()) fail(ErrorKind::usage, "field label must be nonempty");
  return {std::move(label), degree, degree};
}

namespace {

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

} // namespace

Place Place::real(int index) {
  if (index < 0) fail(ErrorKind::usage, "real place index must be nonnegative");
  Place p;
  p.real_ = true;
  p.index_ = index;
  return p;
}

Place Place::finite(std::string label) {
  if (all_digits(label)) {
    if (label.size() > 18 || label[0] == '0' || !is_prime(std::stol(label)))
      fail(ErrorKind::usage, "finite place '" + label + "' is not a prime");
  } else if (label.size() < 3 || label.rfind("v:", 0) != 0) {
    fail(ErrorKind::usage, "finite place '" + label + "' must be a prime or v:<label>");
  }
  Place p;
  p.label_ = std::move(label);
  return p;
}

Place Place::prime(long p) { return finite(std::to_string(p)); }

Place Place::parse(const std::string& text) {
  if (text.rfind("inf", 0) == 0) {
    const std::string idx = text.substr(3);
    if (!all_digits(idx) || idx.size() > 9 || (idx.size() > 1 && idx[0] == '0'))
      fail(ErrorKind::usage, "bad real place '" + text + "'");
    return real(std::stoi(idx));
  }
  return finite(text);
}

long Place::prime_value() const {
  if (real_ || !all_digits(label_)) return 0;
  return std::stol(label_);
}

std::string Place::to_string() const { return real_ ? "inf" + std::to_string(index_) : label_; }

std::strong_ordering operator<=>(const Place& a, const Place& b) {
  if (a.real_ != b.real_) return a.real_ ? std::strong_ordering::less : std::strong_ordering::greater;
  if (a.real_) return a.index_ <=> b.index_;
  const long pa = a.prime_value();
  const long pb = b.prime_value();
  if ((pa != 0) != (pb != 0)) return pa != 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  if (pa != 0) return pa <=> pb;
  return a.label_.compare(b.label_) <=> 0;
}

void require_place_of(const FieldDesc& base, const Place& v) {
  if (v.is_real()) {
    if (v.real_index() >= base.real_places)
      fail(ErrorKind::usage, "place " + v.to_string() + " is not a real place of " + base.label);
    return;
  }
  // Over Q finite places are rational primes; other fields only carry
  // abstract place labels.
  if (base.is_rationals() != (v.prime_value() != 0))
    fail(ErrorKind::usage, "place " + v.to_string() + " is not a finite place of " + base.label);
}

QuaternionAlgebra::QuaternionAlgebra(FieldDesc base, std::set<Place> ramified)
    : base_(std::move(base)), ramified_(std::move(ramified)) {
  for (const auto& v : ramified_) require_place_of(base_, v);
  if (ramified_.size() % 2 != 0)
    fail(ErrorKind::parity, "odd number of ramified places (" + std::to_string(ramified_.size()) +
                                "): the Hasse invariants must satisfy prod_v eps_v = 1");
}

std::string QuaternionAlgebra::to_string() const {
  std::string s = "quaternion algebra over " + base_.label + " ramified at {";
  bool first = true;
  for (const auto& v : ramified_) {
    if (!first) s += ", ";
    first = false;
    s += v.to_string();
  }
  return s + "}";
}

Sign hasse_invariant(const QuaternionAlgebra& b, const Place& v) {
  require_place_of(b.base(), v);
  return b.ramified().contains(v) ? Sign::minus() : Sign::plus();
}

QuaternionAlgebra quaternion_from_invariants(const FieldDesc& base, const std::map<Place, Sign>& signs) {
  std::set<Place> ramified;
  for (const auto& [v, s] : signs) {
    require_place_of(base, v);
    if (s.is_minus()) ramified.insert(v);
  }
  return QuaternionAlgebra(base, std::move(ramified));
}

bool is_almost_definite(const QuaternionAlgebra& b) {
  int split_real = 0;
  for (int i = 0; i < b.base().real_places; ++i)
    if (!b.ramified().contains(Place::real(i))) ++split_real;
  return split_real == 1;
}

bool is_prime(long n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(Integer(n).get_mpz_t(), 30) != 0;
}

std::map<long, int> factorize(long n) {
  if (n < 1) fail(ErrorKind::usage, "factorize: argument must be positive");
  std::map<long, int> out;
  for (long p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  if (n > 1) ++out[n];
  return out;
}

bool is_squarefree(long n) {
  for (const auto& [p, e] : factorize(n))
    if (e > 1) return false;
  return true;
}

int legendre(const Integer& a, const Integer& p) {
  if (p < 3 || mpz_even_p(p.get_mpz_t()) || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0)
    fail(ErrorKind::usage, "legendre: modulus " + p.get_str() + " is not an odd prime");
  Integer r = a % p;
  if (r < 0) r += p;
  return mpz_legendre(r.get_mpz_t(), p.get_mpz_t());
}

bool splits_in_real_quadratic(long d, long p) {
  if (p == 2) return d % 8 == 1;
  return legendre(d, p) == 1;
}

long find_real_quadratic_split(const std::set<long>& primes) {
  for (long p : primes)
    if (!is_prime(p)) fail(ErrorKind::usage, "find_real_quadratic_split: " + std::to_string(p) + " is not prime");
  for (long d = 2; d <= QuadraticSplitBound::max_d; ++d) {
    if (!is_squarefree(d)) continue;
    bool ok = true;
    for (long p : primes)
      if (!splits_in_real_quadratic(d, p)) {
        ok = false;
        break;
      }
    if (ok) return d;
  }
  fail(ErrorKind::internal, "find_real_quadratic_split: no d <= 10^6 found");
}

std::vector<int> torsion_units_totally_real(const FieldDesc& f) {
  if (f.real_places != f.degree) fail(ErrorKind::usage, "field " + f.label + " is not totally real");
  // A root of unity other than +-1 generates a CM subfield, which has no real embedding.
  return {-1, 1};
}

} // namespace modiag
