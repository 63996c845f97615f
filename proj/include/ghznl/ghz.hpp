#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ghznl/matrix.hpp"
#include "ghznl/rational.hpp"

namespace ghznl {

// The three bipartitions of parties A,B,C. Enumeration order is the
// canonical scan order everywhere (reports, protocol attempts).
enum class Bipartition { a_bc = 0, b_ca = 1, c_ab = 2 };

inline constexpr std::array<Bipartition, 3> all_bipartitions = {
    Bipartition::a_bc, Bipartition::b_ca, Bipartition::c_ab};

std::string_view to_string(Bipartition cut);                       // "A|BC" ...
std::optional<Bipartition> parse_bipartition(std::string_view s);  // inverse

// Index into the 8-element maximally entangled basis of one three-qubit
// cell. Basis vector i is (|x> + s|xbar>)/sqrt(2) with x = bits(i) in 0..3,
// xbar its bitwise complement, s = sign(i): +1 for i in 0..3, -1 for 4..7
// (so index 7-i carries the same bit pair as i with the opposite sign).
class GhzIndex {
 public:
  explicit GhzIndex(int v);
  int value() const { return v_; }
  int bits() const { return v_ < 4 ? v_ : 7 - v_; }  // the representative ket, A-bit 0
  int partner_bits() const { return 7 - bits(); }
  int sign() const { return v_ < 4 ? 1 : -1; }

  friend bool operator==(GhzIndex a, GhzIndex b) { return a.v_ == b.v_; }
  friend bool operator!=(GhzIndex a, GhzIndex b) { return a.v_ != b.v_; }
  friend bool operator<(GhzIndex a, GhzIndex b) { return a.v_ < b.v_; }

 private:
  int v_;
};

// A point of the t-level lattice: one basis index per level. Level 0 is the
// leftmost tensor factor and the most significant digit of rank().
class LatticeIndex {
 public:
  LatticeIndex() = default;
  explicit LatticeIndex(std::vector<GhzIndex> levels);
  LatticeIndex(std::initializer_list<int> levels);
  static LatticeIndex from_rank(int t, std::uint64_t rank);

  int t() const { return static_cast<int>(levels_.size()); }
  GhzIndex operator[](int level) const { return levels_[static_cast<std::size_t>(level)]; }
  const std::vector<GhzIndex>& levels() const { return levels_; }
  std::uint64_t rank() const;  // base-8 value of the digit string
  LatticeIndex extended(GhzIndex next) const;
  std::string str() const;  // "(1,0)" style

  friend bool operator==(const LatticeIndex& a, const LatticeIndex& b) {
    return a.levels_ == b.levels_;
  }
  friend bool operator!=(const LatticeIndex& a, const LatticeIndex& b) { return !(a == b); }
  friend bool operator<(const LatticeIndex& a, const LatticeIndex& b);

 private:
  std::vector<GhzIndex> levels_;
};

// Operator diagonal in the lattice basis: sum_v c[rank(v)] * rho_v where
// rho_v is the projector onto lattice basis vector v. Closed under the
// partial-transpose transform, which is what makes the certification LPs
// finite-dimensional.
struct DiagOperator {
  int t = 0;
  std::vector<Rational> c;  // size 8^t, indexed by LatticeIndex rank

  static DiagOperator zero(int t);
  static DiagOperator basis(const LatticeIndex& v);  // single projector

  std::size_t dim() const { return c.size(); }
  Rational trace() const;
  bool entrywise_nonneg() const;
  DiagOperator tensor(const DiagOperator& o) const;

  DiagOperator& operator+=(const DiagOperator& o);
  DiagOperator& operator-=(const DiagOperator& o);
  friend DiagOperator operator+(DiagOperator a, const DiagOperator& b) { a += b; return a; }
  friend DiagOperator operator-(DiagOperator a, const DiagOperator& b) { a -= b; return a; }
  friend DiagOperator operator*(const Rational& s, DiagOperator d);
  friend bool operator==(const DiagOperator& a, const DiagOperator& b) {
    return a.t == b.t && a.c == b.c;
  }
};

// Operator on (C^2)^{x3t} in the computational basis. Row/column index packs
// one octal digit per level, party A the most significant bit of each digit.
// Materialized only for t <= 3 (dimension 512); the factory functions throw
// beyond that.
struct DenseOperator {
  int t = 0;
  Matrix m;  // 8^t x 8^t
};

// Single Pauli letter acting on one qubit.
enum class Pauli : std::uint8_t { i, x, y, z };

// Three letters acting on the A,B,C qubits of one level.
struct PauliString {
  std::array<Pauli, 3> p;
  std::string str() const;  // "XYY"
};

// The eight commuting strings whose uniform average projects any one-level
// operator onto the diagonal of the entangled basis. Every basis vector is
// a signed eigenvector of each element.
const std::array<PauliString, 8>& dephasing_group();

// Eigenvalue (+1/-1) of basis vector `i` under group element `g`.
int dephasing_sign(const PauliString& g, GhzIndex i);

// One entry of a basis vector written in the computational basis:
// amplitude sign/sqrt(2^t) on ket |ket>.
struct KetTerm {
  std::size_t ket;
  int sign;
};
std::vector<KetTerm> lattice_terms(const LatticeIndex& v);  // 2^t entries

DenseOperator ghz_density(GhzIndex i);                 // t = 1 projector
DenseOperator lattice_density(const LatticeIndex& v);  // tensor of levels
DenseOperator dense_from_diag(const DiagOperator& d);

// Transpose the indices of one party's qubits (all levels at once).
DenseOperator partial_transpose_dense(const DenseOperator& rho, Bipartition cut);

// 8x8 matrix of the induced map on diagonal operators at one level:
// column j holds the expansion of the transformed j-th basis projector.
// Symmetric, involutive, block 2x(4x4).
struct PtTransform {
  Bipartition cut;
  std::array<std::array<Rational, 8>, 8> m;
};
const PtTransform& pt_transform(Bipartition cut);

// The two 4-element index classes coupled by pt_transform at the given cut.
// Within a class, entries are ordered so the negative matrix entries sit on
// the block anti-diagonal. These classes double as the outcome grouping of
// the level parity measurement across the same cut.
const std::array<std::array<GhzIndex, 4>, 2>& pt_quadruples(Bipartition cut);

// Apply the transform level-by-level to a diagonal operator (tensor power
// of pt_transform acting on the coefficient vector).
DiagOperator apply_pt_diag(const DiagOperator& d, Bipartition cut);

// Coefficients <psi_v|rho|psi_v> for all lattice v, plus whether rho has no
// off-basis-diagonal component (i.e. rho == dense_from_diag(diag part)).
// Throws if a diagonal coefficient is not real.
std::pair<DiagOperator, bool> expand_in_ghz_basis(const DenseOperator& rho);

// Average over the dephasing group at every level. Exact projection onto
// lattice-diagonal operators: positive, trace preserving, idempotent, and
// commuting with partial_transpose_dense.
DenseOperator dephase(const DenseOperator& rho);

}  // namespace ghznl
