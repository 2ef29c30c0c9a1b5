// Acceptance run: one line per criterion, nonzero exit when any fails.

#include "support/gen.hpp"

#include "modiag/error.hpp"
#include "modiag/goodness.hpp"
#include "modiag/localglobal.hpp"
#include "modiag/repcore.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace modiag;
using modiag::testing::Gen;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string note;
};

// Collects failed checks without stopping at the first one.
class Checker {
public:
  void check(bool ok, const std::string& what) {
    if (ok) return;
    ++failures_;
    if (first_.empty()) first_ = what;
  }
  Outcome outcome(std::string note = "") const {
    if (failures_ == 0) return {true, std::move(note)};
    std::ostringstream s;
    s << failures_ << " failed check(s), first: " << first_;
    return {false, s.str()};
  }

private:
  long failures_ = 0;
  std::string first_;
};

std::string fixture(const std::string& name) { return std::string(MODIAG_FIXTURE_DIR) + "/" + name; }

const QuaternionAlgebra& m2() {
  static const QuaternionAlgebra b = QuaternionAlgebra::matrix_algebra(FieldDesc::rationals());
  return b;
}

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& s : v) out += (out.empty() ? "" : " ") + s;
  return out.empty() ? "none" : out;
}

Outcome squarefree_tables() {
  const Dataset d = load_dataset(fixture("go_table1.json"));
  const TablesSummary s = reproduce_tables(d);
  Checker c;
  std::vector<std::string> good;
  for (const auto& cat : s.categories)
    if (cat.category == "squarefree") good = cat.good;
  std::sort(good.begin(), good.end());
  c.check(good == std::vector<std::string>{"217.A", "295.A", "329.C"}, "square-free good set is " + join(good));
  return c.outcome("good: " + join(good));
}

Outcome prime_exact_tables() {
  const Dataset d = load_dataset(fixture("go_table1.json"));
  Checker c;
  std::vector<std::string> reviewed;
  for (const auto& curve : d.curves()) {
    if (curve_category(curve) != "p-exact") continue;
    const bool good = check_curve(d, curve.label, m2()).good == Goodness::yes;
    if (curve.label == "475.E" || curve.label == "1175.D")
      c.check(good, curve.label + " not good");
    else if (good)
      reviewed.push_back(curve.label);
  }
  return c.outcome("reviewed: " + join(reviewed));
}

Outcome certified_459() {
  Dataset d = load_dataset(fixture("go_table1.json"));
  Checker c;
  const auto start = Clock::now();
  for (const char* name : {"459.B", "459.I"})
    c.check(check_curve(d, name, m2()).good == Goodness::yes, std::string(name) + " not good with certificates");
  const double certified = std::chrono::duration<double>(Clock::now() - start).count();
  d.clear_certificates();
  for (const char* name : {"459.B", "459.I"})
    c.check(check_curve(d, name, m2()).good == Goodness::unknown, std::string(name) + " not unknown without certificates");
  c.check(certified < 1.0, "certified path too slow");
  std::ostringstream note;
  note << "certified path " << std::fixed << std::setprecision(3) << certified << "s";
  return c.outcome(note.str());
}

Outcome dihedral_multiplicities() {
  Checker c;
  long triples = 0;
  for (long n = 3; n <= 12; ++n) {
    const GroupSpec g = GroupSpec::dihedral(n);
    const auto& t = character_table(g);
    for (const auto& a : t.irreps)
      for (const auto& b : t.irreps)
        for (const auto& x : t.irreps) {
          ++triples;
          const std::string tag = g.to_string() + " " + a.name + "," + b.name + "," + x.name;
          CycloElt sum(t.rows[0][0].modulus());
          for (std::size_t k = 0; k < t.classes.size(); ++k)
            sum += t.row(a.name)[k] * t.row(b.name)[k] * t.row(x.name)[k] * Rational(t.classes[k].size);
          sum *= make_rational(1, g.order());
          const auto q = sum.rational_part();
          c.check(q.has_value() && q->get_den() == 1 && *q >= 0, tag + " character sum not a nonnegative integer");
          const long m = trilinear_multiplicity(g, a.name, b.name, x.name);
          c.check(q.has_value() && *q == m, tag + " multiplicity disagrees with the character sum");
          c.check(oracle_multiplicity(g, a.name, b.name, x.name) == m, tag + " oracle disagrees");
          const CycloMatrix p = averaging_operator(g, a.name, b.name, x.name);
          c.check(p * p == p, tag + " averaging operator not idempotent");
        }
  }
  return c.outcome(std::to_string(triples) + " triples");
}

Outcome orthogonality() {
  Checker c;
  for (long n = 1; n <= 20; ++n)
    for (const GroupSpec g : n >= 3 ? std::vector{GroupSpec::cyclic(n), GroupSpec::dihedral(n)} : std::vector{GroupSpec::cyclic(n)}) {
      const auto& t = character_table(g);
      long dims = 0;
      for (const auto& r : t.irreps) dims += r.dim * r.dim;
      c.check(dims == g.order(), g.to_string() + " sum of squared dimensions");
      const long mod = t.rows[0][0].modulus();
      for (std::size_t i = 0; i < t.rows.size(); ++i)
        for (std::size_t j = 0; j < t.rows.size(); ++j) {
          CycloElt s(mod);
          for (std::size_t k = 0; k < t.classes.size(); ++k)
            s += t.rows[i][k] * t.rows[j][k].conj() * Rational(t.classes[k].size);
          c.check(s.rational_part() == Rational(i == j ? g.order() : 0), g.to_string() + " row orthogonality");
        }
      for (std::size_t a = 0; a < t.classes.size(); ++a)
        for (std::size_t b = 0; b < t.classes.size(); ++b) {
          CycloElt s(mod);
          for (std::size_t i = 0; i < t.rows.size(); ++i) s += t.rows[i][a] * t.rows[i][b].conj();
          const Rational want = a == b ? make_rational(g.order(), t.classes[a].size) : Rational(0);
          c.check(s.rational_part() == want, g.to_string() + " column orthogonality");
        }
    }
  return c.outcome();
}

Outcome root_numbers() {
  Checker c;
  const FieldDesc q = FieldDesc::rationals();
  const auto ps = testing::primes_below(100);
  {
    std::map<Place, Sign> all;
    for (long p : {2L, 7L, 31L}) all.emplace(Place::prime(p), Sign::plus());
    const auto r = global_root_number(q, all);
    c.check(r.global_sign == Sign::minus(), "all +1: global sign not -1");
    c.check(r.l_value_forced_zero, "all +1: forced-zero flag not set");
  }
  Gen g(0xACC6);
  for (int trial = 0; trial < 1000; ++trial) {
    std::map<Place, Sign> signs;
    const long k = g.range(0, 6);
    for (long i = 0; i < k; ++i) signs.insert_or_assign(Place::prime(g.pick(ps)), g.sign());
    Sign prod = Sign::plus();
    std::set<Place> candidates{Place::real(0)};
    for (const auto& [v, s] : signs) {
      prod = prod * s;
      if (s.is_minus()) candidates.insert(v);
    }
    const auto r = global_root_number(q, signs);
    c.check(r.global_sign == -prod, "global sign is not minus the product");
    c.check(r.l_value_forced_zero == r.global_sign.is_minus(), "forced-zero flag");
    const auto b = supporting_quaternion(q, signs);
    c.check(b.has_value() == (candidates.size() % 2 == 0), "existence does not follow parity");
    if (!b) continue;
    c.check(b->ramified() == candidates, "support is not the candidate set");
    std::set<Place> checked = candidates;
    for (const auto& [v, s] : signs) checked.insert(v);
    checked.insert(Place::prime(g.pick(ps)));
    for (const auto& v : checked) {
      const Sign local = v.is_real() ? Sign::minus() : (signs.contains(v) ? signs.at(v) : Sign::plus());
      c.check(local * hasse_invariant(*b, v) == Sign::plus(), "eps(Pi_v) eps(B_v) != 1 at " + v.to_string());
    }
    c.check(quaternion_from_invariants(q, [&] {
              std::map<Place, Sign> m;
              for (const auto& v : candidates) m.emplace(v, Sign::minus());
              return m;
            }()) == *b,
            "supporting algebra not unique");
  }
  return c.outcome();
}

Outcome hasse_round_trip() {
  Checker c;
  Gen g(0xACC7);
  const auto ps = testing::primes_below(50);
  int odd = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const FieldDesc f = g.coin() ? FieldDesc::rationals() : FieldDesc::totally_real("F", static_cast<int>(g.range(1, 4)));
    std::map<Place, Sign> m;
    for (int i = 0; i < f.real_places; ++i)
      if (g.coin()) m.emplace(Place::real(i), g.sign());
    const long k = g.range(0, 6);
    for (long i = 0; i < k; ++i)
      m.emplace(f.is_rationals() ? Place::prime(g.pick(ps)) : Place::finite("v:w" + std::to_string(g.range(1, 12))), g.sign());
    long minus = 0;
    for (const auto& [v, s] : m) minus += s.is_minus();
    if (minus % 2) {
      ++odd;
      bool rejected = false;
      try {
        quaternion_from_invariants(f, m);
      } catch (const Error& e) {
        rejected = e.kind() == ErrorKind::parity;
      }
      c.check(rejected, "odd prescription accepted");
      continue;
    }
    const QuaternionAlgebra b = quaternion_from_invariants(f, m);
    for (const auto& [v, s] : m) c.check(hasse_invariant(b, v) == s, "invariant not reproduced");
    std::set<Place> want;
    for (const auto& [v, s] : m)
      if (s.is_minus()) want.insert(v);
    c.check(b.ramified() == want, "ramification set differs from the prescription");
  }
  return c.outcome(std::to_string(odd) + " odd prescriptions");
}

Outcome isogeny_algebra() {
  Checker c;
  Gen g(0xACC8);
  for (int trial = 0; trial < 100; ++trial) {
    const AlgebraSpec s = testing::random_spec(g);
    AlgebraElement sum = algebra_zero(s);
    for (const auto& a : s.factors()) {
      const AlgebraElement p = isotypic_projector(s, a.label);
      c.check(multiply(p, p) == p, "projector not idempotent");
      c.check(transpose(s, p) == p, "transpose moves a projector");
      for (const auto& b : s.factors())
        if (b.label != a.label) c.check(testing::is_zero(multiply(p, isotypic_projector(s, b.label))), "projectors not orthogonal");
      sum = add(sum, p);
    }
    c.check(sum == algebra_identity(s), "projectors not complete");
    const AlgebraElement x = testing::random_algebra_element(g, s);
    const AlgebraElement y = testing::random_algebra_element(g, s);
    c.check(transpose(s, transpose(s, x)) == x, "transpose not an involution");
    c.check(transpose(s, multiply(x, y)) == multiply(transpose(s, y), transpose(s, x)), "transpose not anti-multiplicative");
  }
  int checked = 0;
  while (checked < 1000) {
    const auto [s, t] = testing::random_spec_pair(g);
    for (int k = 0; k < 10 && checked < 1000; ++k, ++checked) {
      const HomElement z = testing::random_hom(g, s, t);
      const std::string label = g.coin() || z.labels.empty() ? s.factors()[0].label : z.labels[0];
      c.check(projector_sandwich_check(s, t, z, label), "projector sandwich identity fails");
    }
  }
  return c.outcome();
}

Outcome pipelines() {
  Checker c;
  Gen g(0xACC9);
  long tampers = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const auto s = testing::random_special_triple(g);
    const ConstructionCertificate cert = vanishing_pipeline(s.data, s.labels, s.prime);
    c.check(verify_certificate(cert).ok, "certificate does not verify");
    for (const auto& [name, t] : testing::tampered(cert)) {
      ++tampers;
      c.check(!verify_certificate(t).ok, "tamper not detected: " + name);
    }
  }
  return c.outcome(std::to_string(tampers) + " tampers");
}

Outcome quadratic_finder() {
  Checker c;
  Gen g(0xACCA);
  const auto ps = testing::primes_below(100);
  for (int trial = 0; trial < 200; ++trial) {
    std::set<long> s;
    const long k = g.range(1, 4);
    while (static_cast<long>(s.size()) < k) s.insert(g.pick(ps));
    const long d = find_real_quadratic_split(s);
    c.check(d > 1 && testing::squarefree_oracle(d), "d not square-free");
    for (long p : s) c.check(testing::split_oracle(d, p), "d does not split at " + std::to_string(p));
  }
  return c.outcome();
}

struct Criterion {
  int number;
  std::string name;
  double limit; // seconds; 0 means untimed
  std::function<Outcome()> run;
};

} // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "square-free table", 1.0, squarefree_tables},
      {2, "p-exact table", 1.0, prime_exact_tables},
      {3, "certified 459", 0.0, certified_459},
      {4, "dihedral trilinear multiplicities", 60.0, dihedral_multiplicities},
      {5, "orthogonality", 10.0, orthogonality},
      {6, "root numbers and supporting algebras", 0.0, root_numbers},
      {7, "Hasse round trip", 0.0, hasse_round_trip},
      {8, "isogeny algebra", 30.0, isogeny_algebra},
      {9, "construction certificates", 0.0, pipelines},
      {10, "quadratic split finder", 0.0, quadratic_finder},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = cr.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (cr.limit > 0 && secs >= cr.limit) {
      o.pass = false;
      o.note += (o.note.empty() ? "" : "; ") + std::string("over the time limit");
    }
    failed += !o.pass;
    std::cout << "criterion " << cr.number << ": " << (o.pass ? "PASS" : "FAIL") << " " << cr.name << " ("
              << std::fixed << std::setprecision(3) << secs << "s" << (cr.limit > 0 ? " < " + std::to_string(static_cast<int>(cr.limit)) + "s" : "")
              << ")" << (o.note.empty() ? "" : " " + o.note) << "\n";
  }
  return failed == 0 ? 0 : 1;
}
