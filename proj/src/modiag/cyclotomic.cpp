#include "modiag/cyclotomic.hpp"

#include "modiag/error.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace modiag {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) fail(ErrorKind::usage, "rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

long euler_phi(long n) {
  if (n < 1) fail(ErrorKind::usage, "euler_phi: modulus must be positive");
  long result = n;
  long m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace {

using IntPoly = std::vector<Integer>;

// Exact division of a by a monic b.
IntPoly divide_monic(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  IntPoly q(a.size() - db, 0);
  for (std::size_t k = a.size(); k-- > db;) {
    const Integer c = a[k];
    if (c == 0) continue;
    q[k - db] = c;
    for (std::size_t i = 0; i <= db; ++i) a[k - db + i] -= c * b[i];
  }
  return q;
}

IntPoly compute_cyclotomic(long n) {
  IntPoly poly(static_cast<std::size_t>(n) + 1, 0);
  poly[0] = -1;
  poly[static_cast<std::size_t>(n)] = 1;
  for (long d = 1; d < n; ++d)
    if (n % d == 0) poly = divide_monic(poly, cyclotomic_polynomial(d));
  return poly;
}

} // namespace

const std::vector<Integer>& cyclotomic_polynomial(long n) {
  if (n < 1) fail(ErrorKind::usage, "cyclotomic polynomial: modulus must be positive");
  // Entries are never erased, so references stay valid after the lock drops.
  static std::mutex mu;
  static std::map<long, std::unique_ptr<const IntPoly>> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;
  }
  auto poly = std::make_unique<const IntPoly>(compute_cyclotomic(n));
  std::lock_guard lock(mu);
  auto [it, inserted] = cache.emplace(n, std::move(poly));
  return *it->second;
}

namespace {

void reduce(long n, std::vector<Rational>& c) {
  const auto& phi = cyclotomic_polynomial(n);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t k = c.size(); k-- > deg;) {
    if (c[k] == 0) continue;
    const Rational lead = c[k];
    for (std::size_t i = 0; i <= deg; ++i)
      if (phi[i] != 0) c[k - deg + i] -= lead * phi[i];
  }
  c.resize(deg, Rational(0));
}

void require_same_modulus(long a, long b) {
  if (a != b)
    fail(ErrorKind::usage, "cyclotomic modulus mismatch: " + std::to_string(a) + " vs " +
                               std::to_string(b) + " (lift with embed first)");
}

} // namespace

CycloElt::CycloElt(long modulus) : modulus_(modulus) {
  coeffs_.assign(static_cast<std::size_t>(euler_phi(modulus)), Rational(0));
}

CycloElt::CycloElt(long modulus, const Rational& value) : CycloElt(modulus) { coeffs_[0] = value; }

CycloElt CycloElt::from_coefficients(long modulus, std::vector<Rational> coeffs) {
  CycloElt out(modulus);
  if (coeffs.size() < out.coeffs_.size()) coeffs.resize(out.coeffs_.size(), Rational(0));
  reduce(modulus, coeffs);
  out.coeffs_ = std::move(coeffs);
  return out;
}

bool CycloElt::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

std::optional<Rational> CycloElt::rational_part() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return std::nullopt;
  return coeffs_[0];
}

CycloElt& CycloElt::operator+=(const CycloElt& rhs) {
  require_same_modulus(modulus_, rhs.modulus_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

CycloElt& CycloElt::operator-=(const CycloElt& rhs) {
  require_same_modulus(modulus_, rhs.modulus_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

CycloElt& CycloElt::operator*=(const CycloElt& rhs) {
  require_same_modulus(modulus_, rhs.modulus_);
  const std::size_t d = coeffs_.size();
  std::vector<Rational> prod(2 * d - 1, Rational(0));
  for (std::size_t i = 0; i < d; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j)
      if (rhs.coeffs_[j] != 0) prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  reduce(modulus_, prod);
  coeffs_ = std::move(prod);
  return *this;
}

CycloElt& CycloElt::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

CycloElt CycloElt::operator-() const {
  CycloElt out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CycloElt CycloElt::conj() const {
  // z^i -> z^(n-i), then reduce.
  std::vector<Rational> c(static_cast<std::size_t>(modulus_), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const std::size_t j = i == 0 ? 0 : static_cast<std::size_t>(modulus_) - i;
    c[j] += coeffs_[i];
  }
  return from_coefficients(modulus_, std::move(c));
}

CycloElt CycloElt::pow(unsigned long e) const {
  CycloElt result(modulus_, Rational(1));
  CycloElt base(*this);
  while (e > 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

CycloElt CycloElt::embed(long m) const {
  if (m < 1 || m % modulus_ != 0)
    fail(ErrorKind::usage, "embed: target modulus " + std::to_string(m) + " is not a multiple of " +
                               std::to_string(modulus_));
  const std::size_t step = static_cast<std::size_t>(m / modulus_);
  std::vector<Rational> c(step * (coeffs_.size() - 1) + 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i * step] = coeffs_[i];
  return from_coefficients(m, std::move(c));
}

std::string CycloElt::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << coeffs_[i].get_str();
    if (i == 1) os << "*z";
    if (i > 1) os << "*z^" << i;
  }
  if (first) os << "0";
  if (modulus_ > 2) os << " (z = zeta_" << modulus_ << ")";
  return os.str();
}

CycloElt zeta(long n, long k) {
  if (n < 1) fail(ErrorKind::usage, "zeta: modulus must be positive");
  const long r = ((k % n) + n) % n;
  std::vector<Rational> c(static_cast<std::size_t>(r) + 1, Rational(0));
  c[static_cast<std::size_t>(r)] = 1;
  return CycloElt::from_coefficients(n, std::move(c));
}

} // namespace modiag
