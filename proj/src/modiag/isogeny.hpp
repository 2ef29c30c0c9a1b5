#pragma once

// Block calculus of the semisimple algebra End(J) (x) Q = prod_A M_{d_A}(M_A)
// where each M_A is a totally real field given by a squarefree polynomial
// with only real roots. A and its dual share one block, so transposition is
// the anti-involution dual to taking dual homomorphisms.

#include "modiag/cyclotomic.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace modiag {

class NumberField {
public:
  // Coefficients lowest degree first; normalized to monic. Usage error unless
  // the polynomial has degree >= 1, is squarefree and has only real roots.
  explicit NumberField(std::vector<Rational> poly);

  int degree() const { return static_cast<int>(poly_.size()) - 1; }
  const std::vector<Rational>& min_poly() const { return poly_; }
  friend bool operator==(const NumberField& a, const NumberField& b) { return a.poly_ == b.poly_; }

private:
  std::vector<Rational> poly_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

// Number of distinct real roots (Sturm), for any nonzero polynomial.
int count_real_roots(const std::vector<Rational>& poly);

class FieldElt {
public:
  explicit FieldElt(FieldPtr field);
  FieldElt(FieldPtr field, std::vector<Rational> coeffs);
  static FieldElt scalar(FieldPtr field, const Rational& q);

  const FieldPtr& field() const { return field_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const;

  FieldElt& operator+=(const FieldElt& o);
  FieldElt& operator-=(const FieldElt& o);
  FieldElt& operator*=(const FieldElt& o);
  friend FieldElt operator+(FieldElt a, const FieldElt& b) { return a += b; }
  friend FieldElt operator-(FieldElt a, const FieldElt& b) { return a -= b; }
  friend FieldElt operator*(FieldElt a, const FieldElt& b) { return a *= b; }
  friend bool operator==(const FieldElt& a, const FieldElt& b);

private:
  FieldPtr field_;
  std::vector<Rational> c_;
};

class FieldMatrix {
public:
  FieldMatrix(FieldPtr field, std::size_t rows, std::size_t cols);
  static FieldMatrix identity(FieldPtr field, std::size_t d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldPtr& field() const { return field_; }
  FieldElt& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const FieldElt& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
  bool is_zero() const;

  FieldMatrix transpose() const;
  friend FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b);
  friend FieldMatrix operator+(const FieldMatrix& a, const FieldMatrix& b);
  friend bool operator==(const FieldMatrix& a, const FieldMatrix& b);

private:
  FieldPtr field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<FieldElt> e_;
};

struct SimpleFactor {
  std::string label;
  FieldPtr field;
  int multiplicity = 0;
  int field_degree() const { return field->degree(); }
};

class AlgebraSpec {
public:
  AlgebraSpec() = default;
  // Usage error on repeated labels or negative multiplicities.
  explicit AlgebraSpec(std::vector<SimpleFactor> factors);
  // {"factors":[{"label":..,"min_poly":[c0,..],"multiplicity":d}]}; rationals
  // may be JSON integers or "p/q" strings.
  static AlgebraSpec from_json(const std::string& text);

  const std::vector<SimpleFactor>& factors() const { return factors_; }
  std::optional<std::size_t> find(const std::string& label) const;

private:
  std::vector<SimpleFactor> factors_;
};

// One square block per factor of the spec, in spec order.
struct AlgebraElement {
  std::vector<FieldMatrix> blocks;
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;
};

// Blocks indexed by the labels shared between source and target, in target
// order; block for A is d'_A x d_A.
struct HomElement {
  std::vector<std::string> labels;
  std::vector<FieldMatrix> blocks;
};

AlgebraElement algebra_zero(const AlgebraSpec& spec);
AlgebraElement algebra_identity(const AlgebraSpec& spec);
AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y);

AlgebraElement isotypic_projector(const AlgebraSpec& spec, const std::string& label);
// Sum over the standard basis phi_i of Hom(J, A) of dual(phi_i) o phi_i.
AlgebraElement projector_from_dual_basis(const AlgebraSpec& spec, const std::string& label);

FieldElt dual_pairing(const std::vector<FieldElt>& phi, const std::vector<FieldElt>& psi);

AlgebraElement transpose(const AlgebraSpec& spec, const AlgebraElement& x);

// Zero Hom element with the right shapes.
HomElement hom_zero(const AlgebraSpec& source, const AlgebraSpec& target);

HomElement compose(const AlgebraElement& left, const AlgebraSpec& target, const HomElement& z);
HomElement compose(const HomElement& z, const AlgebraSpec& source, const AlgebraElement& right);
bool hom_equal(const HomElement& a, const HomElement& b);

// delta'_i o z o 1 = delta'_i o z o delta_i = 1 o z o delta_i.
bool projector_sandwich_check(const AlgebraSpec& source, const AlgebraSpec& target, const HomElement& z,
                  const std::string& label);

// Projectors sum to 1, are idempotent and pairwise orthogonal.
bool projector_decomposition_check(const AlgebraSpec& spec);

} // namespace modiag
