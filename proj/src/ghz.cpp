#include "ghznl/ghz.hpp"

#include <cstdlib>
#include <stdexcept>

namespace ghznl {

namespace {

std::size_t pow8(int t) {
  std::size_t r = 1;
  for (int i = 0; i < t; ++i) r *= 8;
  return r;
}

constexpr int kMaxDenseLevels = 3;

void check_dense_levels(int t) {
  if (t < 1 || t > kMaxDenseLevels)
    throw std::invalid_argument("dense operators are limited to 1..3 levels, got " +
                                std::to_string(t));
}

}  // namespace

std::string_view to_string(Bipartition cut) {
  switch (cut) {
    case Bipartition::a_bc: return "A|BC";
    case Bipartition::b_ca: return "B|CA";
    case Bipartition::c_ab: return "C|AB";
  }
  std::abort();
}

std::optional<Bipartition> parse_bipartition(std::string_view s) {
  for (Bipartition cut : all_bipartitions)
    if (s == to_string(cut)) return cut;
  return std::nullopt;
}

GhzIndex::GhzIndex(int v) : v_(v) {
  if (v < 0 || v > 7)
    throw std::invalid_argument("basis index out of range 0..7: " + std::to_string(v));
}

LatticeIndex::LatticeIndex(std::vector<GhzIndex> levels) : levels_(std::move(levels)) {
  if (levels_.empty()) throw std::invalid_argument("lattice index needs at least one level");
}

LatticeIndex::LatticeIndex(std::initializer_list<int> levels) {
  for (int v : levels) levels_.emplace_back(v);
  if (levels_.empty()) throw std::invalid_argument("lattice index needs at least one level");
}

LatticeIndex LatticeIndex::from_rank(int t, std::uint64_t rank) {
  if (t < 1) throw std::invalid_argument("lattice index needs at least one level");
  std::vector<GhzIndex> ls;
  ls.reserve(static_cast<std::size_t>(t));
  for (int l = t - 1; l >= 0; --l)
    ls.emplace_back(static_cast<int>((rank >> (3 * l)) & 7));
  if (rank >> (3 * t)) throw std::invalid_argument("lattice rank out of range");
  return LatticeIndex(std::move(ls));
}

std::uint64_t LatticeIndex::rank() const {
  std::uint64_t r = 0;
  for (GhzIndex g : levels_) r = (r << 3) | static_cast<std::uint64_t>(g.value());
  return r;
}

LatticeIndex LatticeIndex::extended(GhzIndex next) const {
  std::vector<GhzIndex> ls = levels_;
  ls.push_back(next);
  return LatticeIndex(std::move(ls));
}

std::string LatticeIndex::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(levels_[i].value());
  }
  return s + ")";
}

bool operator<(const LatticeIndex& a, const LatticeIndex& b) {
  if (a.t() != b.t()) return a.t() < b.t();
  return a.rank() < b.rank();
}

DiagOperator DiagOperator::zero(int t) {
  if (t < 1) throw std::invalid_argument("diagonal operator needs at least one level");
  DiagOperator d;
  d.t = t;
  d.c.assign(pow8(t), Rational(0));
  return d;
}

DiagOperator DiagOperator::basis(const LatticeIndex& v) {
  DiagOperator d = zero(v.t());
  d.c[v.rank()] = Rational(1);
  return d;
}

Rational DiagOperator::trace() const {
  Rational s;
  for (const Rational& x : c) s += x;
  return s;
}

bool DiagOperator::entrywise_nonneg() const {
  for (const Rational& x : c)
    if (x.sign() < 0) return false;
  return true;
}

DiagOperator DiagOperator::tensor(const DiagOperator& o) const {
  DiagOperator r = zero(t + o.t);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c.size(); ++j)
      if (!o.c[j].is_zero()) r.c[i * o.c.size() + j] = c[i] * o.c[j];
  }
  return r;
}

DiagOperator& DiagOperator::operator+=(const DiagOperator& o) {
  if (t != o.t) throw std::invalid_argument("diagonal operator: level mismatch");
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
  return *this;
}

DiagOperator& DiagOperator::operator-=(const DiagOperator& o) {
  if (t != o.t) throw std::invalid_argument("diagonal operator: level mismatch");
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
  return *this;
}

DiagOperator operator*(const Rational& s, DiagOperator d) {
  for (Rational& x : d.c) x *= s;
  return d;
}

std::string PauliString::str() const {
  std::string s;
  for (Pauli q : p) {
    switch (q) {
      case Pauli::i: s += 'I'; break;
      case Pauli::x: s += 'X'; break;
      case Pauli::y: s += 'Y'; break;
      case Pauli::z: s += 'Z'; break;
    }
  }
  return s;
}

const std::array<PauliString, 8>& dephasing_group() {
  using enum Pauli;
  static const std::array<PauliString, 8> g = {{
      {{i, i, i}},
      {{x, x, x}},
      {{i, z, z}},
      {{z, i, z}},
      {{z, z, i}},
      {{x, y, y}},
      {{y, x, y}},
      {{y, y, x}},
  }};
  return g;
}

namespace {

// U|k> = phase * |ket'> for a one-level string acting on 3-bit ket k.
struct SignedImage {
  int ket;
  GaussianRational phase;
};

SignedImage apply_string(const PauliString& g, int ket) {
  SignedImage out{0, GaussianRational(1)};
  for (int q = 0; q < 3; ++q) {
    int bit = (ket >> (2 - q)) & 1;
    int nbit = bit;
    switch (g.p[static_cast<std::size_t>(q)]) {
      case Pauli::i:
        break;
      case Pauli::x:
        nbit = 1 - bit;
        break;
      case Pauli::z:
        if (bit) out.phase *= GaussianRational(-1);
        break;
      case Pauli::y:
        // Y|0> = i|1>, Y|1> = -i|0>
        nbit = 1 - bit;
        out.phase *= bit ? -GaussianRational::i() : GaussianRational::i();
        break;
    }
    out.ket |= nbit << (2 - q);
  }
  return out;
}

}  // namespace

int dephasing_sign(const PauliString& g, GhzIndex i) {
  // act on the representative ket and read off the eigenvalue
  int x = i.bits();
  SignedImage im = apply_string(g, x);
  GaussianRational amp_on_x, amp_on_xbar;
  (im.ket == x ? amp_on_x : amp_on_xbar) = im.phase;
  SignedImage im2 = apply_string(g, 7 - x);
  GaussianRational s{Rational(i.sign())};
  (im2.ket == x ? amp_on_x : amp_on_xbar) += s * im2.phase;
  // eigenvector: (amp_on_x, amp_on_xbar) must be lambda * (1, s)
  GaussianRational lambda = amp_on_x;
  if (amp_on_xbar != s * lambda || !lambda.is_real() || abs(lambda.re) != Rational(1))
    throw std::logic_error("basis vector is not an eigenvector of " + g.str());
  return lambda.re.sign();
}

std::vector<KetTerm> lattice_terms(const LatticeIndex& v) {
  std::vector<KetTerm> terms = {{0, 1}};
  for (GhzIndex g : v.levels()) {
    std::vector<KetTerm> next;
    next.reserve(terms.size() * 2);
    for (const KetTerm& t : terms) {
      next.push_back({t.ket * 8 + static_cast<std::size_t>(g.bits()), t.sign});
      next.push_back({t.ket * 8 + static_cast<std::size_t>(g.partner_bits()), t.sign * g.sign()});
    }
    terms = std::move(next);
  }
  return terms;
}

DenseOperator ghz_density(GhzIndex i) { return lattice_density(LatticeIndex({i.value()})); }

DenseOperator lattice_density(const LatticeIndex& v) {
  check_dense_levels(v.t());
  std::size_t dim = pow8(v.t());
  DenseOperator rho{v.t(), Matrix(dim, dim)};
  std::vector<KetTerm> terms = lattice_terms(v);
  Rational norm(1, static_cast<long>(1) << v.t());  // 1/2^t
  for (const KetTerm& a : terms)
    for (const KetTerm& b : terms)
      rho.m(a.ket, b.ket) = GaussianRational(Rational(a.sign * b.sign) * norm);
  return rho;
}

DenseOperator dense_from_diag(const DiagOperator& d) {
  check_dense_levels(d.t);
  std::size_t dim = d.dim();
  DenseOperator rho{d.t, Matrix(dim, dim)};
  for (std::size_t r = 0; r < dim; ++r) {
    if (d.c[r].is_zero()) continue;
    DenseOperator basis = lattice_density(LatticeIndex::from_rank(d.t, r));
    rho.m += GaussianRational(d.c[r]) * basis.m;
  }
  return rho;
}

DenseOperator partial_transpose_dense(const DenseOperator& rho, Bipartition cut) {
  check_dense_levels(rho.t);
  int party_bit = cut == Bipartition::a_bc ? 2 : cut == Bipartition::b_ca ? 1 : 0;
  std::size_t mask = 0;
  for (int l = 0; l < rho.t; ++l) mask |= static_cast<std::size_t>(1) << (3 * l + party_bit);
  std::size_t dim = pow8(rho.t);
  DenseOperator out{rho.t, Matrix(dim, dim)};
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) {
      const GaussianRational& v = rho.m(r, c);
      if (v.is_zero()) continue;
      std::size_t nr = (r & ~mask) | (c & mask);
      std::size_t nc = (c & ~mask) | (r & mask);
      out.m(nr, nc) = v;
    }
  return out;
}

const std::array<std::array<GhzIndex, 4>, 2>& pt_quadruples(Bipartition cut) {
  using G = GhzIndex;
  static const std::array<std::array<std::array<G, 4>, 2>, 3> tables = {{
      {{{G(0), G(7), G(3), G(4)}, {G(1), G(6), G(2), G(5)}}},
      {{{G(0), G(7), G(2), G(5)}, {G(3), G(4), G(1), G(6)}}},
      {{{G(0), G(7), G(1), G(6)}, {G(2), G(5), G(3), G(4)}}},
  }};
  return tables[static_cast<std::size_t>(cut)];
}

const PtTransform& pt_transform(Bipartition cut) {
  static const std::array<PtTransform, 3> tables = [] {
    std::array<PtTransform, 3> out;
    Rational half(1, 2);
    for (Bipartition c : all_bipartitions) {
      PtTransform& tr = out[static_cast<std::size_t>(c)];
      tr.cut = c;
      for (auto& row : tr.m) row.fill(Rational(0));
      for (const auto& quad : pt_quadruples(c))
        for (int a = 0; a < 4; ++a)
          for (int b = 0; b < 4; ++b) {
            std::size_t i = static_cast<std::size_t>(quad[static_cast<std::size_t>(a)].value());
            std::size_t j = static_cast<std::size_t>(quad[static_cast<std::size_t>(b)].value());
            tr.m[i][j] = (a + b == 3) ? -half : half;
          }
    }
    return out;
  }();
  return tables[static_cast<std::size_t>(cut)];
}

DiagOperator apply_pt_diag(const DiagOperator& d, Bipartition cut) {
  const PtTransform& tr = pt_transform(cut);
  DiagOperator out = d;
  std::size_t dim = d.dim();
  // contract each level's axis with the 8x8 table
  std::size_t stride = dim / 8;  // stride of level 0
  for (int l = 0; l < d.t; ++l) {
    DiagOperator next = DiagOperator::zero(d.t);
    for (std::size_t base = 0; base < dim; ++base) {
      std::size_t digit = (base / stride) % 8;
      if (digit != 0) continue;  // enumerate positions with this level's digit zeroed
      for (std::size_t j = 0; j < 8; ++j) {
        const Rational& x = out.c[base + j * stride];
        if (x.is_zero()) continue;
        for (std::size_t i = 0; i < 8; ++i) {
          const Rational& w = tr.m[i][j];
          if (!w.is_zero()) next.c[base + i * stride] += w * x;
        }
      }
    }
    out = std::move(next);
    stride /= 8;
  }
  return out;
}

std::pair<DiagOperator, bool> expand_in_ghz_basis(const DenseOperator& rho) {
  check_dense_levels(rho.t);
  DiagOperator diag = DiagOperator::zero(rho.t);
  Rational norm(1, static_cast<long>(1) << rho.t);
  for (std::size_t v = 0; v < diag.dim(); ++v) {
    std::vector<KetTerm> terms = lattice_terms(LatticeIndex::from_rank(rho.t, v));
    GaussianRational coeff;
    for (const KetTerm& a : terms)
      for (const KetTerm& b : terms) {
        const GaussianRational& x = rho.m(a.ket, b.ket);
        if (!x.is_zero()) coeff += GaussianRational(Rational(a.sign * b.sign)) * x;
      }
    if (!coeff.is_real())
      throw std::invalid_argument("operator has a non-real diagonal coefficient");
    diag.c[v] = coeff.re * norm;
  }
  bool offdiag_zero = dense_from_diag(diag).m == rho.m;
  return {std::move(diag), offdiag_zero};
}

DenseOperator dephase(const DenseOperator& rho) {
  check_dense_levels(rho.t);
  std::size_t dim = pow8(rho.t);
  DenseOperator cur = rho;
  Rational eighth(1, 8);
  for (int l = 0; l < rho.t; ++l) {
    int shift = 3 * (rho.t - 1 - l);
    Matrix acc(dim, dim);
    for (const PauliString& g : dephasing_group()) {
      // precompute the level action on all 8 digits
      std::array<SignedImage, 8> im;
      for (int k = 0; k < 8; ++k) im[static_cast<std::size_t>(k)] = apply_string(g, k);
      for (std::size_t r = 0; r < dim; ++r) {
        std::size_t rd = (r >> shift) & 7;
        const SignedImage& ir = im[rd];
        std::size_t nr = (r & ~(static_cast<std::size_t>(7) << shift)) |
                         (static_cast<std::size_t>(ir.ket) << shift);
        for (std::size_t c = 0; c < dim; ++c) {
          const GaussianRational& v = cur.m(r, c);
          if (v.is_zero()) continue;
          std::size_t cd = (c >> shift) & 7;
          const SignedImage& ic = im[cd];
          std::size_t nc = (c & ~(static_cast<std::size_t>(7) << shift)) |
                           (static_cast<std::size_t>(ic.ket) << shift);
          acc(nr, nc) += ir.phase * ic.phase.conj() * v;
        }
      }
    }
    cur.m = GaussianRational(eighth) * acc;
  }
  return cur;
}

}  // namespace ghznl
