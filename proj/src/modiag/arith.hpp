#pragma once

// Places of totally real fields, quaternion algebras given by their
// ramification sets, and the elementary number theory the constructions need.

#include "modiag/cyclotomic.hpp"

#include <compare>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace modiag {

class Sign {
public:
  static constexpr Sign plus() { return Sign(1); }
  static constexpr Sign minus() { return Sign(-1); }
  static Sign from_int(long v);

  constexpr int value() const { return v_; }
  constexpr bool is_plus() const { return v_ == 1; }
  constexpr bool is_minus() const { return v_ == -1; }
  std::string to_string() const { return v_ == 1 ? "+1" : "-1"; }

  friend constexpr Sign operator*(Sign a, Sign b) { return Sign(a.v_ * b.v_); }
  Sign operator-() const { return Sign(-v_); }
  friend constexpr bool operator==(Sign, Sign) = default;

private:
  constexpr explicit Sign(int v) : v_(v) {}
  int v_;
};

struct FieldDesc {
  std::string label = "Q";
  int degree = 1;
  int real_places = 1;

  static FieldDesc rationals() { return {}; }
  // Totally real field descriptor; usage error unless degree >= 1.
  static FieldDesc totally_real(std::string label, int degree);
  bool is_rationals() const { return label == "Q" && degree == 1; }
  friend bool operator==(const FieldDesc&, const FieldDesc&) = default;
};

class Place {
public:
  static Place real(int index);
  // For Q the label is a decimal prime; abstract places use "v:<label>".
  static Place finite(std::string label);
  static Place prime(long p);
  // "inf0", "7", "v:w1"; usage error otherwise.
  static Place parse(const std::string& text);

  bool is_real() const { return real_; }
  bool is_finite() const { return !real_; }
  int real_index() const { return index_; }
  const std::string& label() const { return label_; }
  // The rational prime for a decimal finite label, else 0.
  long prime_value() const;
  std::string to_string() const;

  friend bool operator==(const Place& a, const Place& b) {
    return a.real_ == b.real_ && a.index_ == b.index_ && a.label_ == b.label_;
  }
  // Real places first by index, then rational primes numerically, then
  // abstract labels lexicographically.
  friend std::strong_ordering operator<=>(const Place& a, const Place& b);

private:
  bool real_ = false;
  int index_ = 0;
  std::string label_;
};

// Usage error unless v is a place of the field.
void require_place_of(const FieldDesc& base, const Place& v);

class QuaternionAlgebra {
public:
  // Parity error when |ramified| is odd.
  QuaternionAlgebra(FieldDesc base, std::set<Place> ramified);
  static QuaternionAlgebra matrix_algebra(FieldDesc base) { return {std::move(base), {}}; }

  const FieldDesc& base() const { return base_; }
  const std::set<Place>& ramified() const { return ramified_; }
  std::string to_string() const;
  friend bool operator==(const QuaternionAlgebra&, const QuaternionAlgebra&) = default;

private:
  FieldDesc base_;
  std::set<Place> ramified_;
};

Sign hasse_invariant(const QuaternionAlgebra& b, const Place& v);
QuaternionAlgebra quaternion_from_invariants(const FieldDesc& base, const std::map<Place, Sign>& signs);
bool is_almost_definite(const QuaternionAlgebra& b);

bool is_prime(long n);
bool is_squarefree(long n);
// Prime factorization, primes ascending.
std::map<long, int> factorize(long n);

int legendre(const Integer& a, const Integer& p);

struct QuadraticSplitBound {
  static constexpr long max_d = 1000000;
};

// Whether Q(sqrt d) splits at p: (d/p) = 1 for odd p, d = 1 mod 8 for p = 2.
bool splits_in_real_quadratic(long d, long p);

// Smallest squarefree d > 1 with Q(sqrt d) split at every listed prime.
long find_real_quadratic_split(const std::set<long>& primes);

std::vector<int> torsion_units_totally_real(const FieldDesc& f);

} // namespace modiag
