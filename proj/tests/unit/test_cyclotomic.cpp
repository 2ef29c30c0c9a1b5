#include "support/gen.hpp"

#include "modiag/error.hpp"

#include <doctest.h>

using namespace modiag;
using modiag::testing::Gen;

TEST_SUITE("cyclotomic") {

TEST_CASE("euler_phi small values") {
  const long want[] = {1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4};
  for (long n = 1; n <= 12; ++n) CHECK(euler_phi(n) == want[n - 1]);
  CHECK_THROWS_AS(euler_phi(0), Error);
}

TEST_CASE("cyclotomic polynomials agree with the Moebius product") {
  for (long n = 1; n <= 105; ++n) {
    const auto& got = cyclotomic_polynomial(n);
    const auto want = testing::mobius_cyclotomic(n);
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < want.size(); ++i) CHECK(got[i] == want[i]);
    CHECK(static_cast<long>(got.size()) == euler_phi(n) + 1);
  }
  // Phi_105 is the first with a coefficient outside {-1, 0, 1}.
  const auto& p105 = cyclotomic_polynomial(105);
  CHECK(std::any_of(p105.begin(), p105.end(), [](const Integer& c) { return c == -2; }));
}

TEST_CASE("small examples") {
  CHECK((zeta(3, 1) + zeta(3, 2)).rational_part() == Rational(-1));
  CHECK_FALSE(zeta(5, 1).rational_part().has_value());
  CHECK(zeta(4, 1) * zeta(4, 1) == CycloElt(4, -1));
  CHECK(CycloElt(3, 1).embed(12) == CycloElt(12, 1));
  CHECK(zeta(3, 1).embed(6) == zeta(6, 2));
  CHECK(zeta(8, 3).conj() == zeta(8, 5));
  CHECK(zeta(1, 0) == CycloElt(1, 1));
  CHECK(CycloElt(7).is_zero());
}

TEST_CASE("mismatched moduli are rejected") {
  CHECK_THROWS_AS(zeta(3, 1) + zeta(5, 1), Error);
  CHECK_THROWS_AS(zeta(3, 1) * zeta(4, 1), Error);
  CHECK_THROWS_AS(zeta(6, 1).embed(9), Error);
  CHECK_THROWS_AS(make_rational(1, 0), Error);
}

TEST_CASE("zeta^n = 1 and the n-th roots sum to zero") {
  for (long n = 2; n <= 60; ++n) {
    CHECK(zeta(n, 1).pow(static_cast<unsigned long>(n)) == CycloElt(n, 1));
    CycloElt s(n);
    for (long k = 0; k < n; ++k) s += zeta(n, k);
    CHECK(s.is_zero());
  }
}

TEST_CASE("ring axioms on random elements") {
  Gen g(0xC1C10);
  for (int trial = 0; trial < 300; ++trial) {
    const long n = g.range(1, 60);
    const CycloElt a = testing::random_cyclo(g, n), b = testing::random_cyclo(g, n), c = testing::random_cyclo(g, n);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    CHECK(a.conj().conj() == a);
    CHECK((a * b).conj() == a.conj() * b.conj());
  }
}

TEST_CASE("multiplication matches complex evaluation") {
  Gen g(0xC1C11);
  for (int trial = 0; trial < 200; ++trial) {
    const long n = g.range(2, 40);
    const CycloElt a = testing::random_cyclo(g, n), b = testing::random_cyclo(g, n);
    const auto want = testing::numeric(a) * testing::numeric(b);
    const auto got = testing::numeric(a * b);
    CHECK(std::abs(got - want) < 1e-8 * (1 + std::abs(want)));
    CHECK(std::abs(testing::numeric(a.conj()) - std::conj(testing::numeric(a))) < 1e-8 * (1 + std::abs(want)));
  }
}

TEST_CASE("embed is an injective ring homomorphism") {
  Gen g(0xC1C12);
  for (int trial = 0; trial < 200; ++trial) {
    const long n = g.range(1, 20);
    const long m = n * g.range(1, 4);
    const CycloElt a = testing::random_cyclo(g, n), b = testing::random_cyclo(g, n);
    CHECK((a * b).embed(m) == a.embed(m) * b.embed(m));
    CHECK((a + b).embed(m) == a.embed(m) + b.embed(m));
    CHECK((a == b) == (a.embed(m) == b.embed(m)));
    CHECK(std::abs(testing::numeric(a.embed(m)) - testing::numeric(a)) < 1e-8 * (1 + std::abs(testing::numeric(a))));
  }
}

TEST_CASE("rational_part detects rationals exactly") {
  Gen g(0xC1C13);
  for (int trial = 0; trial < 100; ++trial) {
    const long n = g.range(3, 30);
    const Rational q = g.rational(9);
    CHECK(CycloElt(n, q).rational_part() == q);
    // z + z^-1 is rational only when it is 2cos(2 pi / n) in Q.
    const auto r = (zeta(n, 1) + zeta(n, -1)).rational_part();
    CHECK(r.has_value() == (n == 3 || n == 4 || n == 6));
  }
}

} // TEST_SUITE
