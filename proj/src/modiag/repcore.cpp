#include "modiag/repcore.hpp"

#include "modiag/error.hpp"

#include <algorithm>
#include <cctype>
#include <memory>
#include <mutex>

namespace modiag {

GroupSpec GroupSpec::cyclic(long n) {
  if (n < 1) fail(ErrorKind::usage, "Cyclic(n) needs n >= 1");
  return {Kind::cyclic, n};
}

GroupSpec GroupSpec::dihedral(long n) {
  if (n < 3) fail(ErrorKind::usage, "Dihedral(n) needs n >= 3");
  return {Kind::dihedral, n};
}

std::string GroupSpec::to_string() const {
  return (kind == Kind::cyclic ? "Cyclic(" : "Dihedral(") + std::to_string(n) + ")";
}

GroupSpec parse_group(const std::string& kind, long n) {
  std::string k = kind;
  std::transform(k.begin(), k.end(), k.begin(), [](unsigned char ch) { return std::tolower(ch); });
  if (k == "cyclic") return GroupSpec::cyclic(n);
  if (k == "dihedral") return GroupSpec::dihedral(n);
  fail(ErrorKind::usage, "unknown group kind '" + kind + "' (expected cyclic or dihedral)");
}

std::vector<GroupElement> group_elements(const GroupSpec& g) {
  std::vector<GroupElement> out;
  for (long k = 0; k < g.n; ++k) out.push_back({k, false});
  if (g.kind == GroupSpec::Kind::dihedral)
    for (long k = 0; k < g.n; ++k) out.push_back({k, true});
  return out;
}

namespace {

std::string power_word(const char* gen, long k) {
  if (k == 0) return "e";
  if (k == 1) return gen;
  return std::string(gen) + "^" + std::to_string(k);
}

std::vector<ConjClass> make_classes(const GroupSpec& g) {
  std::vector<ConjClass> cls;
  const long n = g.n;
  if (g.kind == GroupSpec::Kind::cyclic) {
    for (long k = 0; k < n; ++k) cls.push_back({power_word("g", k), 1, {k, false}});
    return cls;
  }
  cls.push_back({"e", 1, {0, false}});
  for (long k = 1; 2 * k < n; ++k) cls.push_back({power_word("r", k), 2, {k, false}});
  if (n % 2 == 0) {
    cls.push_back({power_word("r", n / 2), 1, {n / 2, false}});
    cls.push_back({"s", n / 2, {0, true}});
    cls.push_back({"rs", n / 2, {1, true}});
  } else {
    cls.push_back({"s", n, {0, true}});
  }
  return cls;
}

std::vector<IrrepLabel> make_irreps(const GroupSpec& g) {
  std::vector<IrrepLabel> out;
  if (g.kind == GroupSpec::Kind::cyclic) {
    for (long k = 0; k < g.n; ++k) out.push_back({"chi_" + std::to_string(k), 1});
    return out;
  }
  out.push_back({"triv", 1});
  out.push_back({"sgn", 1});
  if (g.n % 2 == 0) {
    out.push_back({"sgn'", 1});
    out.push_back({"sgn''", 1});
  }
  for (long j = 1; 2 * j < g.n; ++j) out.push_back({"V_" + std::to_string(j), 2});
  return out;
}

long mod(long a, long n) { return ((a % n) + n) % n; }

// Parsed form of a label: a one-dimensional dihedral character is determined
// by its values a = chi(r), b = chi(s); V_j and chi_k carry an index.
struct Parsed {
  enum class Kind { one_dim, two_dim, cyclic } kind;
  int r_sign = 1;
  int s_sign = 1;
  long index = 0;
};

Parsed parse_label(const GroupSpec& g, const std::string& label) {
  auto bad = [&]() -> Parsed {
    fail(ErrorKind::usage, "irrep label '" + label + "' does not belong to " + g.to_string());
  };
  auto parse_index = [&](const std::string& digits) -> long {
    if (digits.empty() || digits.size() > 9 ||
        !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); }))
      bad();
    if (digits.size() > 1 && digits[0] == '0') bad();
    return std::stol(digits);
  };
  if (g.kind == GroupSpec::Kind::cyclic) {
    if (label.rfind("chi_", 0) != 0) bad();
    const long k = parse_index(label.substr(4));
    if (k >= g.n) bad();
    return {Parsed::Kind::cyclic, 1, 1, k};
  }
  if (label == "triv") return {Parsed::Kind::one_dim, 1, 1, 0};
  if (label == "sgn") return {Parsed::Kind::one_dim, 1, -1, 0};
  if (g.n % 2 == 0 && label == "sgn'") return {Parsed::Kind::one_dim, -1, 1, 0};
  if (g.n % 2 == 0 && label == "sgn''") return {Parsed::Kind::one_dim, -1, -1, 0};
  if (label.rfind("V_", 0) == 0) {
    const long j = parse_index(label.substr(2));
    if (j < 1 || 2 * j >= g.n) bad();
    return {Parsed::Kind::two_dim, 1, 1, j};
  }
  return bad();
}

CycloElt sign_elt(long n, int s) { return CycloElt(n, Rational(s)); }

} // namespace

CycloElt character_value(const GroupSpec& g, const std::string& label, const GroupElement& x) {
  const Parsed p = parse_label(g, label);
  const long n = g.n;
  switch (p.kind) {
  case Parsed::Kind::cyclic: return zeta(n, mod(p.index * x.rotation, n));
  case Parsed::Kind::one_dim: {
    int v = (x.rotation % 2 != 0) ? p.r_sign : 1;
    if (x.reflection) v *= p.s_sign;
    return sign_elt(n, v);
  }
  case Parsed::Kind::two_dim:
    if (x.reflection) return CycloElt(n);
    return zeta(n, p.index * x.rotation) + zeta(n, -p.index * x.rotation);
  }
  fail(ErrorKind::internal, "unreachable label kind");
}

std::size_t CharacterTable::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < irreps.size(); ++i)
    if (irreps[i].name == label) return i;
  fail(ErrorKind::usage, "irrep label '" + label + "' does not belong to " + group.to_string());
}

const std::vector<CycloElt>& CharacterTable::row(const std::string& label) const {
  return rows[index_of(label)];
}

namespace {

CharacterTable build_table(const GroupSpec& g) {
  CharacterTable t;
  t.group = g;
  t.classes = make_classes(g);
  t.irreps = make_irreps(g);
  for (const auto& irr : t.irreps) {
    std::vector<CycloElt> row;
    row.reserve(t.classes.size());
    for (const auto& c : t.classes) row.push_back(character_value(g, irr.name, c.element));
    t.rows.push_back(std::move(row));
  }
  return t;
}

} // namespace

const CharacterTable& character_table(const GroupSpec& g) {
  if (g.kind == GroupSpec::Kind::cyclic ? g.n < 1 : g.n < 3)
    fail(ErrorKind::usage, "invalid group " + g.to_string());
  static std::mutex mu;
  static std::map<GroupSpec, std::unique_ptr<const CharacterTable>> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find(g);
    if (it != cache.end()) return *it->second;
  }
  auto table = std::make_unique<const CharacterTable>(build_table(g));
  std::lock_guard lock(mu);
  auto [it, inserted] = cache.emplace(g, std::move(table));
  return *it->second;
}

namespace {

long to_multiplicity(const CycloElt& sum, const std::string& what) {
  const auto q = sum.rational_part();
  if (!q || q->get_den() != 1 || *q < 0)
    fail(ErrorKind::internal, what + ": character sum " + sum.to_string() +
                                  " is not a nonnegative integer (character table bug)");
  return q->get_num().get_si();
}

} // namespace

long trilinear_multiplicity(const GroupSpec& g, const std::string& a, const std::string& b,
                            const std::string& c) {
  const auto& t = character_table(g);
  const auto& ra = t.row(a);
  const auto& rb = t.row(b);
  const auto& rc = t.row(c);
  CycloElt sum(g.n);
  for (std::size_t i = 0; i < t.classes.size(); ++i)
    sum += ra[i] * rb[i] * rc[i] * Rational(t.classes[i].size);
  sum *= Rational(1, g.order());
  return to_multiplicity(sum, "trilinear multiplicity");
}

std::map<std::string, long> tensor_decompose(const GroupSpec& g, const std::string& a,
                                             const std::string& b) {
  const auto& t = character_table(g);
  const auto& ra = t.row(a);
  const auto& rb = t.row(b);
  std::map<std::string, long> out;
  for (std::size_t k = 0; k < t.irreps.size(); ++k) {
    CycloElt sum(g.n);
    for (std::size_t i = 0; i < t.classes.size(); ++i)
      sum += ra[i] * rb[i] * t.rows[k][i].conj() * Rational(t.classes[i].size);
    sum *= Rational(1, g.order());
    const long m = to_multiplicity(sum, "tensor decomposition");
    if (m > 0) out[t.irreps[k].name] = m;
  }
  return out;
}

CycloMatrix::CycloMatrix(std::size_t d, long modulus) : dim(d), entries(d * d, CycloElt(modulus)) {}

CycloMatrix CycloMatrix::identity(std::size_t d, long modulus) {
  CycloMatrix m(d, modulus);
  for (std::size_t i = 0; i < d; ++i) m.at(i, i) = CycloElt(modulus, Rational(1));
  return m;
}

CycloElt CycloMatrix::trace() const {
  if (dim == 0) return CycloElt(1);
  CycloElt t(entries.front().modulus());
  for (std::size_t i = 0; i < dim; ++i) t += at(i, i);
  return t;
}

CycloMatrix operator*(const CycloMatrix& a, const CycloMatrix& b) {
  if (a.dim != b.dim) fail(ErrorKind::usage, "matrix dimension mismatch");
  const long n = a.entries.empty() ? 1 : a.entries.front().modulus();
  CycloMatrix out(a.dim, n);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t k = 0; k < a.dim; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < a.dim; ++j)
        if (!b.at(k, j).is_zero()) out.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return out;
}

CycloMatrix kronecker(const CycloMatrix& a, const CycloMatrix& b) {
  const long n = a.entries.front().modulus();
  CycloMatrix out(a.dim * b.dim, n);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) {
      if (a.at(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.dim; ++k)
        for (std::size_t l = 0; l < b.dim; ++l)
          out.at(i * b.dim + k, j * b.dim + l) = a.at(i, j) * b.at(k, l);
    }
  return out;
}

CycloMatrix representation_matrix(const GroupSpec& g, const std::string& label, const GroupElement& x) {
  const Parsed p = parse_label(g, label);
  const long n = g.n;
  if (p.kind != Parsed::Kind::two_dim) {
    CycloMatrix m(1, n);
    m.at(0, 0) = character_value(g, label, x);
    return m;
  }
  // r -> diag(z^j, z^-j), s -> swap; r^k s = diag(..) * swap.
  CycloMatrix m(2, n);
  const CycloElt up = zeta(n, p.index * x.rotation);
  const CycloElt down = zeta(n, -p.index * x.rotation);
  if (x.reflection) {
    m.at(0, 1) = up;
    m.at(1, 0) = down;
  } else {
    m.at(0, 0) = up;
    m.at(1, 1) = down;
  }
  return m;
}

CycloMatrix averaging_operator(const GroupSpec& g, const std::string& a, const std::string& b,
                               const std::string& c) {
  CycloMatrix sum;
  bool started = false;
  for (const auto& x : group_elements(g)) {
    CycloMatrix term = kronecker(kronecker(representation_matrix(g, a, x), representation_matrix(g, b, x)),
                                 representation_matrix(g, c, x));
    if (!started) {
      sum = std::move(term);
      started = true;
      continue;
    }
    for (std::size_t i = 0; i < sum.entries.size(); ++i) sum.entries[i] += term.entries[i];
  }
  const Rational inv(1, g.order());
  for (auto& e : sum.entries) e *= inv;
  return sum;
}

long oracle_multiplicity(const GroupSpec& g, const std::string& a, const std::string& b,
                         const std::string& c) {
  return to_multiplicity(averaging_operator(g, a, b, c).trace(), "averaging operator trace");
}

} // namespace modiag
