#include "modiag/isogeny.hpp"

#include "modiag/error.hpp"

#include <json.hpp>

#include <set>

namespace modiag {

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int deg(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly derivative(const Poly& p) {
  Poly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rational(static_cast<long>(i)));
  trim(d);
  return d;
}

Poly poly_rem(Poly a, const Poly& b) {
  trim(a);
  const int db = deg(b);
  while (deg(a) >= db && !a.empty()) {
    const Rational f = a.back() / b.back();
    const int shift = deg(a) - db;
    for (int i = 0; i <= db; ++i) a[shift + i] -= f * b[i];
    trim(a);
  }
  return a;
}

Poly poly_gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

int sign_at_infinity(const Poly& p, bool negative) {
  const int s = sgn(p.back());
  return (negative && deg(p) % 2 == 1) ? -s : s;
}

} // namespace

int count_real_roots(const std::vector<Rational>& poly) {
  Poly p = poly;
  trim(p);
  if (p.empty()) fail(ErrorKind::usage, "count_real_roots: zero polynomial");
  if (deg(p) == 0) return 0;
  std::vector<Poly> chain{p, derivative(p)};
  while (true) {
    Poly r = poly_rem(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  auto variations = [&](bool negative) {
    int v = 0;
    int last = 0;
    for (const auto& q : chain) {
      const int s = sign_at_infinity(q, negative);
      if (s != 0 && last != 0 && s != last) ++v;
      if (s != 0) last = s;
    }
    return v;
  };
  return variations(true) - variations(false);
}

NumberField::NumberField(std::vector<Rational> poly) : poly_(std::move(poly)) {
  trim(poly_);
  if (deg(poly_) < 1) fail(ErrorKind::usage, "field polynomial must have degree >= 1");
  const Rational lead = poly_.back();
  for (auto& c : poly_) c /= lead;
  if (deg(poly_gcd(poly_, derivative(poly_))) > 0)
    fail(ErrorKind::usage, "field polynomial is not squarefree");
  if (count_real_roots(poly_) != deg(poly_))
    fail(ErrorKind::usage, "field polynomial has non-real roots (field not totally real)");
}

FieldElt::FieldElt(FieldPtr field) : field_(std::move(field)) {
  c_.assign(static_cast<std::size_t>(field_->degree()), Rational(0));
}

FieldElt::FieldElt(FieldPtr field, std::vector<Rational> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  const auto& m = field_->min_poly();
  const std::size_t d = static_cast<std::size_t>(field_->degree());
  if (c_.size() < d) c_.resize(d, Rational(0));
  for (std::size_t k = c_.size(); k-- > d;) {
    if (c_[k] == 0) continue;
    const Rational f = c_[k];
    for (std::size_t i = 0; i <= d; ++i) c_[k - d + i] -= f * m[i];
  }
  c_.resize(d);
}

FieldElt FieldElt::scalar(FieldPtr field, const Rational& q) {
  FieldElt e(std::move(field));
  e.c_[0] = q;
  return e;
}

bool FieldElt::is_zero() const {
  for (const auto& c : c_)
    if (c != 0) return false;
  return true;
}

namespace {

void require_same_field(const FieldPtr& a, const FieldPtr& b) {
  if (a != b && !(*a == *b)) fail(ErrorKind::usage, "number field mismatch");
}

} // namespace

FieldElt& FieldElt::operator+=(const FieldElt& o) {
  require_same_field(field_, o.field_);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

FieldElt& FieldElt::operator-=(const FieldElt& o) {
  require_same_field(field_, o.field_);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

FieldElt& FieldElt::operator*=(const FieldElt& o) {
  require_same_field(field_, o.field_);
  std::vector<Rational> prod(2 * c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      if (o.c_[j] != 0) prod[i + j] += c_[i] * o.c_[j];
  }
  *this = FieldElt(field_, std::move(prod));
  return *this;
}

bool operator==(const FieldElt& a, const FieldElt& b) {
  return (a.field_ == b.field_ || *a.field_ == *b.field_) && a.c_ == b.c_;
}

FieldMatrix::FieldMatrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), e_(rows * cols, FieldElt(field)) {}

FieldMatrix FieldMatrix::identity(FieldPtr field, std::size_t d) {
  FieldMatrix m(field, d, d);
  for (std::size_t i = 0; i < d; ++i) m.at(i, i) = FieldElt::scalar(field, 1);
  return m;
}

bool FieldMatrix::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

FieldMatrix FieldMatrix::transpose() const {
  FieldMatrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.cols_ != b.rows_) fail(ErrorKind::usage, "matrix shape mismatch in product");
  require_same_field(a.field_, b.field_);
  FieldMatrix out(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return out;
}

FieldMatrix operator+(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorKind::usage, "matrix shape mismatch in sum");
  FieldMatrix out(a);
  for (std::size_t i = 0; i < out.e_.size(); ++i) out.e_[i] += b.e_[i];
  return out;
}

bool operator==(const FieldMatrix& a, const FieldMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

AlgebraSpec::AlgebraSpec(std::vector<SimpleFactor> factors) : factors_(std::move(factors)) {
  std::set<std::string> seen;
  for (const auto& f : factors_) {
    if (!f.field) fail(ErrorKind::usage, "factor " + f.label + " has no field");
    if (f.multiplicity < 0) fail(ErrorKind::usage, "factor " + f.label + " has negative multiplicity");
    if (!seen.insert(f.label).second) fail(ErrorKind::usage, "repeated factor label " + f.label);
  }
}

namespace {

Rational json_rational(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    Rational q;
    if (q.set_str(j.get<std::string>(), 10) != 0 || q.get_den() == 0)
      fail(ErrorKind::schema, "bad rational '" + j.get<std::string>() + "'");
    q.canonicalize();
    return q;
  }
  fail(ErrorKind::schema, "rational must be an integer or a \"p/q\" string");
}

} // namespace

AlgebraSpec AlgebraSpec::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::schema, std::string("algebra spec: ") + e.what());
  }
  if (!j.is_object() || !j.contains("factors") || !j["factors"].is_array())
    fail(ErrorKind::schema, "algebra spec needs a \"factors\" array");
  std::vector<SimpleFactor> factors;
  for (const auto& f : j["factors"]) {
    if (!f.is_object() || !f.contains("label") || !f.contains("min_poly") || !f.contains("multiplicity") ||
        !f["label"].is_string() || !f["min_poly"].is_array() || !f["multiplicity"].is_number_integer())
      fail(ErrorKind::schema, "algebra factor needs label, min_poly and multiplicity");
    std::vector<Rational> poly;
    for (const auto& c : f["min_poly"]) poly.push_back(json_rational(c));
    factors.push_back({f["label"].get<std::string>(), std::make_shared<const NumberField>(std::move(poly)),
                       f["multiplicity"].get<int>()});
  }
  return AlgebraSpec(std::move(factors));
}

std::optional<std::size_t> AlgebraSpec::find(const std::string& label) const {
  for (std::size_t i = 0; i < factors_.size(); ++i)
    if (factors_[i].label == label) return i;
  return std::nullopt;
}

AlgebraElement algebra_zero(const AlgebraSpec& spec) {
  AlgebraElement x;
  for (const auto& f : spec.factors())
    x.blocks.emplace_back(f.field, static_cast<std::size_t>(f.multiplicity), static_cast<std::size_t>(f.multiplicity));
  return x;
}

AlgebraElement algebra_identity(const AlgebraSpec& spec) {
  AlgebraElement x;
  for (const auto& f : spec.factors()) x.blocks.push_back(FieldMatrix::identity(f.field, static_cast<std::size_t>(f.multiplicity)));
  return x;
}

AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) {
  if (x.blocks.size() != y.blocks.size()) fail(ErrorKind::usage, "algebra elements of different specs");
  AlgebraElement out;
  for (std::size_t i = 0; i < x.blocks.size(); ++i) out.blocks.push_back(x.blocks[i] * y.blocks[i]);
  return out;
}

AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y) {
  if (x.blocks.size() != y.blocks.size()) fail(ErrorKind::usage, "algebra elements of different specs");
  AlgebraElement out;
  for (std::size_t i = 0; i < x.blocks.size(); ++i) out.blocks.push_back(x.blocks[i] + y.blocks[i]);
  return out;
}

AlgebraElement isotypic_projector(const AlgebraSpec& spec, const std::string& label) {
  AlgebraElement x = algebra_zero(spec);
  if (auto i = spec.find(label)) {
    const auto& f = spec.factors()[*i];
    x.blocks[*i] = FieldMatrix::identity(f.field, static_cast<std::size_t>(f.multiplicity));
  }
  return x;
}

AlgebraElement projector_from_dual_basis(const AlgebraSpec& spec, const std::string& label) {
  AlgebraElement x = algebra_zero(spec);
  auto i = spec.find(label);
  if (!i) return x;
  const auto& f = spec.factors()[*i];
  const auto d = static_cast<std::size_t>(f.multiplicity);
  for (std::size_t k = 0; k < d; ++k) {
    FieldMatrix phi(f.field, 1, d); // projection J -> A onto copy k
    FieldMatrix dual(f.field, d, 1); // inclusion A -> J of copy k
    phi.at(0, k) = FieldElt::scalar(f.field, 1);
    dual.at(k, 0) = FieldElt::scalar(f.field, 1);
    if (!(phi * dual == FieldMatrix::identity(f.field, 1)))
      fail(ErrorKind::internal, "standard basis is not dual under the pairing");
    x.blocks[*i] = x.blocks[*i] + dual * phi;
  }
  return x;
}

FieldElt dual_pairing(const std::vector<FieldElt>& phi, const std::vector<FieldElt>& psi) {
  if (phi.size() != psi.size()) fail(ErrorKind::usage, "dual_pairing: length mismatch");
  if (phi.empty()) fail(ErrorKind::usage, "dual_pairing: empty vectors");
  FieldElt sum(phi.front().field());
  for (std::size_t i = 0; i < phi.size(); ++i) sum += phi[i] * psi[i];
  return sum;
}

AlgebraElement transpose(const AlgebraSpec& spec, const AlgebraElement& x) {
  if (x.blocks.size() != spec.factors().size()) fail(ErrorKind::usage, "transpose: element does not match spec");
  AlgebraElement out;
  for (const auto& b : x.blocks) out.blocks.push_back(b.transpose());
  return out;
}

namespace {

const SimpleFactor& shared_factor(const AlgebraSpec& source, const AlgebraSpec& target, const std::string& label) {
  const auto s = source.find(label);
  const auto t = target.find(label);
  if (!s || !t) fail(ErrorKind::usage, "label " + label + " is not shared");
  const auto& fs = source.factors()[*s];
  const auto& ft = target.factors()[*t];
  if (!(*fs.field == *ft.field)) fail(ErrorKind::usage, "factor " + label + " has different fields in the two specs");
  return fs;
}

void check_hom_shape(const AlgebraSpec& source, const AlgebraSpec& target, const HomElement& z) {
  const HomElement ref = hom_zero(source, target);
  if (ref.labels != z.labels || z.blocks.size() != ref.blocks.size())
    fail(ErrorKind::usage, "hom element blocks do not match the shared labels");
  for (std::size_t i = 0; i < z.blocks.size(); ++i)
    if (z.blocks[i].rows() != ref.blocks[i].rows() || z.blocks[i].cols() != ref.blocks[i].cols())
      fail(ErrorKind::usage, "hom element block " + z.labels[i] + " has the wrong shape");
}

} // namespace

HomElement hom_zero(const AlgebraSpec& source, const AlgebraSpec& target) {
  HomElement z;
  for (const auto& ft : target.factors()) {
    if (!source.find(ft.label)) continue;
    const auto& fs = shared_factor(source, target, ft.label);
    z.labels.push_back(ft.label);
    z.blocks.emplace_back(ft.field, static_cast<std::size_t>(ft.multiplicity), static_cast<std::size_t>(fs.multiplicity));
  }
  return z;
}

HomElement compose(const AlgebraElement& left, const AlgebraSpec& target, const HomElement& z) {
  if (left.blocks.size() != target.factors().size()) fail(ErrorKind::usage, "compose: element does not match target");
  HomElement out = z;
  for (std::size_t i = 0; i < z.labels.size(); ++i) out.blocks[i] = left.blocks[*target.find(z.labels[i])] * z.blocks[i];
  return out;
}

HomElement compose(const HomElement& z, const AlgebraSpec& source, const AlgebraElement& right) {
  if (right.blocks.size() != source.factors().size()) fail(ErrorKind::usage, "compose: element does not match source");
  HomElement out = z;
  for (std::size_t i = 0; i < z.labels.size(); ++i) out.blocks[i] = z.blocks[i] * right.blocks[*source.find(z.labels[i])];
  return out;
}

bool hom_equal(const HomElement& a, const HomElement& b) { return a.labels == b.labels && a.blocks == b.blocks; }

bool projector_sandwich_check(const AlgebraSpec& source, const AlgebraSpec& target, const HomElement& z, const std::string& label) {
  check_hom_shape(source, target, z);
  const AlgebraElement di = isotypic_projector(source, label);
  const AlgebraElement di_prime = isotypic_projector(target, label);
  const AlgebraElement id_source = algebra_identity(source);
  const AlgebraElement id_target = algebra_identity(target);
  const HomElement lhs = compose(compose(di_prime, target, z), source, id_source);
  const HomElement mid = compose(compose(di_prime, target, z), source, di);
  const HomElement rhs = compose(compose(id_target, target, z), source, di);
  return hom_equal(lhs, mid) && hom_equal(mid, rhs);
}

bool projector_decomposition_check(const AlgebraSpec& spec) {
  const AlgebraElement one = algebra_identity(spec);
  AlgebraElement sum = algebra_zero(spec);
  std::vector<AlgebraElement> proj;
  for (const auto& f : spec.factors()) proj.push_back(isotypic_projector(spec, f.label));
  for (std::size_t i = 0; i < proj.size(); ++i) {
    sum = add(sum, proj[i]);
    if (!(multiply(proj[i], proj[i]) == proj[i])) return false;
    for (std::size_t j = 0; j < proj.size(); ++j) {
      if (i == j) continue;
      const AlgebraElement p = multiply(proj[i], proj[j]);
      for (const auto& b : p.blocks)
        if (!b.is_zero()) return false;
    }
  }
  return sum == one;
}

} // namespace modiag
