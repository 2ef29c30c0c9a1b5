#include "support/gen.hpp"

#include "modiag/error.hpp"

#include <doctest.h>

using namespace modiag;
using modiag::testing::Gen;

namespace {

// Random place set over a field: real places inf0.. and, over Q, small primes;
// otherwise abstract labels.
std::map<Place, Sign> random_prescription(Gen& g, const FieldDesc& f) {
  static const std::vector<long> ps = testing::primes_below(50);
  std::map<Place, Sign> m;
  for (int i = 0; i < f.real_places; ++i)
    if (g.coin()) m.emplace(Place::real(i), g.sign());
  const long k = g.range(0, 6);
  for (long i = 0; i < k; ++i) {
    const Place v = f.is_rationals() ? Place::prime(g.pick(ps)) : Place::finite("v:w" + std::to_string(g.range(1, 12)));
    m.emplace(v, g.sign());
  }
  return m;
}

} // namespace

TEST_SUITE("arith") {

TEST_CASE("place syntax") {
  CHECK(Place::parse("inf0") == Place::real(0));
  CHECK(Place::parse("7") == Place::prime(7));
  CHECK(Place::parse("v:w1").label() == "v:w1");
  CHECK(Place::parse("13").prime_value() == 13);
  CHECK(Place::parse("v:w1").prime_value() == 0);
  CHECK_THROWS_AS(Place::parse("8"), Error);
  CHECK_THROWS_AS(Place::parse("infx"), Error);
  CHECK_THROWS_AS(Place::parse("w1"), Error);
  CHECK(Place::real(1) < Place::prime(2));
  CHECK(Place::prime(3) < Place::prime(11));
  CHECK(Place::prime(97) < Place::finite("v:a"));
  CHECK(Place::parse(Place::real(3).to_string()) == Place::real(3));
}

TEST_CASE("place membership") {
  const FieldDesc q = FieldDesc::rationals();
  const FieldDesc f = FieldDesc::totally_real("F", 3);
  CHECK_NOTHROW(require_place_of(q, Place::prime(5)));
  CHECK_THROWS_AS(require_place_of(q, Place::real(1)), Error);
  CHECK_THROWS_AS(require_place_of(q, Place::finite("v:w")), Error);
  CHECK_NOTHROW(require_place_of(f, Place::real(2)));
  CHECK_THROWS_AS(require_place_of(f, Place::prime(5)), Error);
  CHECK_THROWS_AS(FieldDesc::totally_real("F", 0), Error);
}

TEST_CASE("quaternion algebras over Q") {
  const FieldDesc q = FieldDesc::rationals();
  CHECK_THROWS_AS(QuaternionAlgebra(q, {Place::prime(2)}), Error);
  try {
    QuaternionAlgebra(q, {Place::prime(2)});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::parity);
  }
  const QuaternionAlgebra b(q, {Place::prime(2), Place::real(0)});
  CHECK(hasse_invariant(b, Place::prime(2)) == Sign::minus());
  CHECK(hasse_invariant(b, Place::prime(3)) == Sign::plus());
  CHECK_FALSE(is_almost_definite(b));
  CHECK(is_almost_definite(QuaternionAlgebra(q, {Place::prime(2), Place::prime(3)})));
  CHECK(is_almost_definite(QuaternionAlgebra::matrix_algebra(q)));
}

TEST_CASE("almost definite over a totally real cubic") {
  const FieldDesc f = FieldDesc::totally_real("F", 3);
  CHECK(is_almost_definite(QuaternionAlgebra(f, {Place::real(1), Place::real(2)})));
  CHECK_FALSE(is_almost_definite(QuaternionAlgebra(f, {Place::real(1), Place::finite("v:a")})));
}

TEST_CASE("Hasse calculus: odd prescriptions rejected, even ones round-trip") {
  Gen g(0xA817);
  int odd = 0, even = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const FieldDesc f = g.coin() ? FieldDesc::rationals() : FieldDesc::totally_real("F", static_cast<int>(g.range(1, 4)));
    const auto m = random_prescription(g, f);
    long minus = 0;
    for (const auto& [v, s] : m) minus += s.is_minus();
    if (minus % 2) {
      ++odd;
      CHECK_THROWS_AS(quaternion_from_invariants(f, m), Error);
      continue;
    }
    ++even;
    const QuaternionAlgebra b = quaternion_from_invariants(f, m);
    for (const auto& [v, s] : m) CHECK(hasse_invariant(b, v) == s);
    std::map<Place, Sign> back;
    for (const auto& v : b.ramified()) back.emplace(v, hasse_invariant(b, v));
    CHECK(quaternion_from_invariants(f, back) == b);
    CHECK(b.ramified().size() % 2 == 0);
  }
  CHECK(odd > 100);
  CHECK(even > 100);
}

TEST_CASE("primes and factorization") {
  const auto small = testing::primes_below(500);
  for (long n = 0; n < 500; ++n) CHECK(is_prime(n) == std::binary_search(small.begin(), small.end(), n));
  for (long n = 1; n < 2000; ++n) {
    long prod = 1;
    for (const auto& [p, e] : factorize(n)) {
      CHECK(is_prime(p));
      for (int i = 0; i < e; ++i) prod *= p;
    }
    CHECK(prod == n);
    CHECK(is_squarefree(n) == testing::squarefree_oracle(n));
  }
  CHECK(factorize(459) == std::map<long, int>{{3, 3}, {17, 1}});
}

TEST_CASE("Legendre symbol against Euler's criterion") {
  const auto ps = testing::primes_below(400);
  for (long p : ps) {
    if (p == 2) continue;
    for (long a = -30; a < 2 * p; ++a) CHECK(legendre(a, p) == testing::euler_legendre(a, p));
  }
  CHECK_THROWS_AS(legendre(3, 2), Error);
  CHECK_THROWS_AS(legendre(3, 15), Error);
}

TEST_CASE("Legendre multiplicativity on random samples") {
  Gen g(0x1E6E);
  const auto ps = testing::primes_below(1000);
  for (int trial = 0; trial < 1000; ++trial) {
    const long p = g.pick(ps);
    if (p == 2) continue;
    const long a = g.range(1, 10000), b = g.range(1, 10000);
    if (a % p == 0 || b % p == 0) continue;
    CHECK(legendre(Integer(a) * b, p) == legendre(a, p) * legendre(b, p));
  }
}

TEST_CASE("quadratic split finder") {
  CHECK(find_real_quadratic_split({}) == 2);
  CHECK(find_real_quadratic_split({2}) == 17);
  CHECK(find_real_quadratic_split({3}) == 7);
  CHECK(find_real_quadratic_split({3, 7, 11}) == 37);
  CHECK_THROWS_AS(find_real_quadratic_split({9}), Error);
  CHECK(splits_in_real_quadratic(17, 2));
  CHECK_FALSE(splits_in_real_quadratic(5, 2));
}

TEST_CASE("quadratic split finder: minimality and independent recheck") {
  Gen g(0x5B11);
  const auto ps = testing::primes_below(100);
  for (int trial = 0; trial < 200; ++trial) {
    std::set<long> s;
    const long k = g.range(1, 4);
    while (static_cast<long>(s.size()) < k) s.insert(g.pick(ps));
    const long d = find_real_quadratic_split(s);
    CHECK(testing::squarefree_oracle(d));
    for (long p : s) CHECK(testing::split_oracle(d, p));
    // Nothing smaller works.
    for (long e = 2; e < d; ++e) {
      if (!testing::squarefree_oracle(e)) continue;
      bool all = true;
      for (long p : s) all = all && testing::split_oracle(e, p);
      CHECK_FALSE(all);
    }
  }
}

TEST_CASE("torsion units of totally real fields") {
  CHECK(torsion_units_totally_real(FieldDesc::rationals()) == std::vector<int>{-1, 1});
  CHECK(torsion_units_totally_real(FieldDesc::totally_real("K", 3)) == std::vector<int>{-1, 1});
  FieldDesc cm{"K", 2, 0};
  CHECK_THROWS_AS(torsion_units_totally_real(cm), Error);
}

} // TEST_SUITE
