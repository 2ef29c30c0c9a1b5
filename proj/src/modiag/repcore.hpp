#pragma once

// Character tables of cyclic and dihedral groups, and multiplicities of the
// trivial representation in triple tensor products.
//
// Dihedral(n) = <r, s | r^n = s^2 = 1, srs = r^-1>. Irrep labels are stable
// strings: "triv", "sgn" (s -> -1), "sgn'" (r -> -1, s -> 1), "sgn''"
// (r -> -1, s -> -1), "V_j" for 1 <= j < n/2; Cyclic(n) uses "chi_k".

#include "modiag/cyclotomic.hpp"

#include <map>
#include <string>
#include <vector>

namespace modiag {

struct GroupSpec {
  enum class Kind { cyclic, dihedral };
  Kind kind = Kind::cyclic;
  long n = 1;

  static GroupSpec cyclic(long n);
  static GroupSpec dihedral(long n);

  long order() const { return kind == Kind::cyclic ? n : 2 * n; }
  std::string to_string() const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
  friend auto operator<=>(const GroupSpec&, const GroupSpec&) = default;
};

// Parses "cyclic"/"dihedral" (case-insensitive) with the given n.
GroupSpec parse_group(const std::string& kind, long n);

// r^rotation s^reflection for dihedral groups; g^rotation for cyclic ones.
struct GroupElement {
  long rotation = 0;
  bool reflection = false;
};

std::vector<GroupElement> group_elements(const GroupSpec& g);

struct ConjClass {
  std::string representative;
  long size = 0;
  GroupElement element;
};

struct IrrepLabel {
  std::string name;
  int dim = 1;
  friend bool operator==(const IrrepLabel&, const IrrepLabel&) = default;
};

struct CharacterTable {
  GroupSpec group;
  std::vector<ConjClass> classes;
  std::vector<IrrepLabel> irreps;
  std::vector<std::vector<CycloElt>> rows; // rows[i][c] = chi_i(class c)

  // Index of the named irrep; usage error when absent.
  std::size_t index_of(const std::string& label) const;
  const std::vector<CycloElt>& row(const std::string& label) const;
};

// Memoized; the returned reference stays valid for the program's lifetime.
const CharacterTable& character_table(const GroupSpec& g);

// Character value at an arbitrary element.
CycloElt character_value(const GroupSpec& g, const std::string& label, const GroupElement& x);

// dim Hom_G(a (x) b (x) c, 1) from the character sum.
long trilinear_multiplicity(const GroupSpec& g, const std::string& a, const std::string& b,
                            const std::string& c);

std::map<std::string, long> tensor_decompose(const GroupSpec& g, const std::string& a,
                                             const std::string& b);

// Square matrix over Q(zeta_n), row-major.
struct CycloMatrix {
  std::size_t dim = 0;
  std::vector<CycloElt> entries;

  CycloMatrix() = default;
  CycloMatrix(std::size_t d, long modulus);
  static CycloMatrix identity(std::size_t d, long modulus);

  CycloElt& at(std::size_t i, std::size_t j) { return entries[i * dim + j]; }
  const CycloElt& at(std::size_t i, std::size_t j) const { return entries[i * dim + j]; }

  CycloElt trace() const;
  friend CycloMatrix operator*(const CycloMatrix& a, const CycloMatrix& b);
  friend bool operator==(const CycloMatrix&, const CycloMatrix&) = default;
};

CycloMatrix kronecker(const CycloMatrix& a, const CycloMatrix& b);

// Explicit matrix model of an irrep evaluated at x.
CycloMatrix representation_matrix(const GroupSpec& g, const std::string& label, const GroupElement& x);

// (1/|G|) sum_x rho_a(x) (x) rho_b(x) (x) rho_c(x).
CycloMatrix averaging_operator(const GroupSpec& g, const std::string& a, const std::string& b,
                               const std::string& c);

// Trace of the averaging operator; independent of the character table.
long oracle_multiplicity(const GroupSpec& g, const std::string& a, const std::string& b,
                         const std::string& c);

} // namespace modiag
