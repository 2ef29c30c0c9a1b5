#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_n).
//
// Elements are stored in the power basis 1, z, ..., z^(phi(n)-1) and are kept
// reduced modulo the n-th cyclotomic polynomial, so structural equality of two
// CycloElt values is field equality.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace modiag {

using Integer = mpz_class;
using Rational = mpq_class;

// num/den in lowest terms with a positive denominator; den == 0 throws.
Rational make_rational(const Integer& num, const Integer& den = 1);

long euler_phi(long n);

// Integer coefficients of Phi_n, lowest degree first (length phi(n) + 1).
const std::vector<Integer>& cyclotomic_polynomial(long n);

class CycloElt {
public:
  // The zero element of Q(zeta_n).
  explicit CycloElt(long modulus = 1);
  CycloElt(long modulus, const Rational& value);

  // Reduces an arbitrary-length coefficient list modulo Phi_n.
  static CycloElt from_coefficients(long modulus, std::vector<Rational> coeffs);

  long modulus() const noexcept { return modulus_; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

  bool is_zero() const;
  std::optional<Rational> rational_part() const;

  CycloElt& operator+=(const CycloElt& rhs);
  CycloElt& operator-=(const CycloElt& rhs);
  CycloElt& operator*=(const CycloElt& rhs);
  CycloElt& operator*=(const Rational& scalar);
  CycloElt operator-() const;

  // Complex conjugation, zeta -> zeta^-1.
  CycloElt conj() const;
  CycloElt pow(unsigned long e) const;

  // Same element viewed in Q(zeta_m); requires modulus() | m.
  CycloElt embed(long m) const;

  std::string to_string() const;

  friend bool operator==(const CycloElt& a, const CycloElt& b) {
    return a.modulus_ == b.modulus_ && a.coeffs_ == b.coeffs_;
  }

private:
  long modulus_;
  std::vector<Rational> coeffs_;
};

CycloElt zeta(long n, long k);

inline CycloElt operator+(CycloElt a, const CycloElt& b) { return a += b; }
inline CycloElt operator-(CycloElt a, const CycloElt& b) { return a -= b; }
inline CycloElt operator*(CycloElt a, const CycloElt& b) { return a *= b; }
inline CycloElt operator*(CycloElt a, const Rational& s) { return a *= s; }
inline CycloElt operator*(const Rational& s, CycloElt a) { return a *= s; }

} // namespace modiag
