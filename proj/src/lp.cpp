#include "ghznl/lp.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace ghznl {

namespace {

template <class T>
struct Num;

template <>
struct Num<Rational> {
  static Rational from(const Rational& r) { return r; }
  static bool zero(const Rational& x) { return x.is_zero(); }
  static bool neg(const Rational& x) { return x.sign() < 0; }
  static bool pos(const Rational& x) { return x.sign() > 0; }
};

template <>
struct Num<double> {
  static constexpr double kEps = 1e-9;
  static double from(const Rational& r) { return r.to_double(); }
  static bool zero(double x) { return std::fabs(x) <= kEps; }
  static bool neg(double x) { return x < -kEps; }
  static bool pos(double x) { return x > kEps; }
};

// Raised by the double instantiation when rounding keeps the pivot sequence
// from settling; the rational instantiation cannot cycle once Bland's rule
// engages, so there it signals a plain bug instead.
struct SimplexStall {};

enum class ColKind : unsigned char { var_pos, var_neg, slack, surplus, artificial };

struct Col {
  ColKind kind;
  std::size_t ref;  // local var index, or local row index for row columns
};

template <class T>
struct SubSolution {
  LpStatus status = LpStatus::infeasible;
  T value{};
  std::vector<T> x;  // per local var
  std::vector<T> y;  // per local row, original row orientation
  std::uint64_t pivots = 0;
};

// Two-phase primal simplex on one connected component, minimization form.
template <class T>
class Simplex {
 public:
  Simplex(const LpInstance& lp, const std::vector<Rational>& cmin,
          const std::vector<std::size_t>& vars, const std::vector<std::size_t>& rows)
      : nvars_(vars.size()), nrows_(rows.size()) {
    cvar_.reserve(nvars_);
    for (std::size_t v : vars) cvar_.push_back(Num<T>::from(cmin[v]));

    // local column layout: variables first (free ones split), then one
    // slack or surplus per row, then artificials for rows whose initial
    // basis needs one
    var_col_.resize(nvars_);
    free_.resize(nvars_);
    for (std::size_t lv = 0; lv < nvars_; ++lv) {
      var_col_[lv] = cols_.size();
      free_[lv] = !lp.nonneg[vars[lv]];
      cols_.push_back({ColKind::var_pos, lv});
      if (free_[lv]) cols_.push_back({ColKind::var_neg, lv});
    }

    struct RowPrep {
      std::vector<T> a;
      T rhs;
      Relation rel;
      int sigma;  // stored row = sigma * original row
    };
    std::vector<RowPrep> prep;
    prep.reserve(nrows_);
    for (std::size_t r : rows) {
      RowPrep p;
      p.rel = lp.rows[r].rel;
      p.sigma = 1;
      p.rhs = Num<T>::from(lp.rows[r].rhs);
      p.a.reserve(nvars_);
      for (std::size_t v : vars) p.a.push_back(Num<T>::from(lp.rows[r].a[v]));
      auto negate_row = [&p] {
        for (T& x : p.a) x = -x;
        p.rhs = -p.rhs;
        p.sigma = -p.sigma;
        if (p.rel == Relation::le) p.rel = Relation::ge;
        else if (p.rel == Relation::ge) p.rel = Relation::le;
      };
      if (Num<T>::neg(p.rhs)) negate_row();
      // a >=-row with zero rhs is the same halfspace as a <=-row with zero
      // rhs after negation, and the latter starts with a feasible slack
      // basis, so phase 1 only ever deals with rhs > 0 inequality rows
      if (p.rel == Relation::ge && Num<T>::zero(p.rhs)) negate_row();
      prep.push_back(std::move(p));
    }

    row_extra_.assign(nrows_, npos);
    for (std::size_t i = 0; i < nrows_; ++i) {
      if (prep[i].rel == Relation::eq) continue;
      row_extra_[i] = cols_.size();
      cols_.push_back({prep[i].rel == Relation::le ? ColKind::slack : ColKind::surplus, i});
    }
    row_art_.assign(nrows_, npos);
    for (std::size_t i = 0; i < nrows_; ++i) {
      if (prep[i].rel == Relation::le) continue;
      row_art_[i] = cols_.size();
      cols_.push_back({ColKind::artificial, i});
    }

    ncols_ = cols_.size();
    sigma_.resize(nrows_);
    local_row_.resize(nrows_);
    tab_.assign(nrows_, std::vector<T>(ncols_ + 1, T{}));
    basis_.resize(nrows_);
    for (std::size_t i = 0; i < nrows_; ++i) {
      sigma_[i] = prep[i].sigma;
      local_row_[i] = i;
      for (std::size_t lv = 0; lv < nvars_; ++lv) {
        const T& a = prep[i].a[lv];
        if (Num<T>::zero(a)) continue;
        tab_[i][var_col_[lv]] = a;
        if (free_[lv]) tab_[i][var_col_[lv] + 1] = -a;
      }
      if (row_extra_[i] != npos)
        tab_[i][row_extra_[i]] = prep[i].rel == Relation::le ? T(1) : T(-1);
      if (row_art_[i] != npos) tab_[i][row_art_[i]] = T(1);
      tab_[i][ncols_] = prep[i].rhs;
      basis_[i] = row_art_[i] != npos ? row_art_[i] : row_extra_[i];
    }
  }

  SubSolution<T> run() {
    SubSolution<T> out;
    obj_.assign(ncols_ + 1, T{});

    bool have_art = false;
    for (std::size_t i = 0; i < nrows_; ++i) have_art |= row_art_[i] != npos;
    if (have_art) {
      // phase 1: minimize the artificial sum; price out the initial basis
      for (std::size_t j = 0; j <= ncols_; ++j) {
        T s{};
        for (std::size_t i = 0; i < nrows_; ++i)
          if (row_art_[i] != npos) s += tab_[i][j];
        obj_[j] = (j < ncols_ && cols_[j].kind == ColKind::artificial) ? T(1) - s : -s;
      }
      phase_ = 1;
      if (!iterate()) std::abort();  // phase 1 is bounded below by zero
      if (Num<T>::pos(-obj_[ncols_])) {
        out.status = LpStatus::infeasible;
        out.pivots = pivots_;
        return out;
      }
      purge_artificials();
    }

    // phase 2 objective from scratch against the current basis
    obj_.assign(ncols_ + 1, T{});
    for (std::size_t j = 0; j < ncols_; ++j) obj_[j] = col_cost(j);
    for (std::size_t i = 0; i < nrows_; ++i) {
      T cb = col_cost(basis_[i]);
      if (Num<T>::zero(cb)) continue;
      for (std::size_t j = 0; j <= ncols_; ++j) {
        const T& t = tab_[i][j];
        if (!Num<T>::zero(t)) obj_[j] -= cb * t;
      }
    }
    phase_ = 2;
    if (!iterate()) {
      out.status = LpStatus::unbounded;
      out.pivots = pivots_;
      return out;
    }

    out.status = LpStatus::optimal;
    out.value = -obj_[ncols_];
    out.x.assign(nvars_, T{});
    for (std::size_t i = 0; i < nrows_; ++i) {
      const Col& b = cols_[basis_[i]];
      if (b.kind == ColKind::var_pos) out.x[b.ref] += tab_[i][ncols_];
      else if (b.kind == ColKind::var_neg) out.x[b.ref] -= tab_[i][ncols_];
    }
    // multiplier of a row = minus the reduced cost of the identity column
    // that row contributed (artificial if present, else slack)
    out.y.assign(sigma_.size(), T{});
    for (std::size_t i = 0; i < nrows_; ++i) {
      std::size_t orig = local_row_[i];
      std::size_t id_col = row_art_[i] != npos ? row_art_[i] : row_extra_[i];
      T y = -obj_[id_col];
      out.y[orig] = sigma_[orig] < 0 ? -y : y;
    }
    out.pivots = pivots_;
    return out;
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  T col_cost(std::size_t j) const {
    const Col& c = cols_[j];
    if (c.kind == ColKind::var_pos) return cvar_[c.ref];
    if (c.kind == ColKind::var_neg) return -cvar_[c.ref];
    return T{};
  }

  bool enterable(std::size_t j) const {
    return !(phase_ == 2 && cols_[j].kind == ColKind::artificial);
  }

  // Dantzig pricing with a switch to Bland's rule after a degenerate stall;
  // ties always break toward the lowest index, so runs are reproducible.
  bool iterate() {
    const std::uint64_t stall_limit = 3 * (nrows_ + ncols_) + 32;
    // Bland's rule terminates only in exact arithmetic; over doubles a
    // generous size-proportional cap converts a numerical cycle into a
    // fast give-up instead of a runaway loop.
    const std::uint64_t pivot_cap = std::is_same_v<T, double>
                                        ? 64 * (nrows_ + ncols_) + 1024
                                        : std::uint64_t{4000000};
    const std::uint64_t start = pivots_;
    std::uint64_t stalled = 0;
    bool bland = false;
    for (;;) {
      std::size_t e = npos;
      if (bland) {
        for (std::size_t j = 0; j < ncols_; ++j)
          if (enterable(j) && Num<T>::neg(obj_[j])) { e = j; break; }
      } else {
        for (std::size_t j = 0; j < ncols_; ++j)
          if (enterable(j) && Num<T>::neg(obj_[j]) && (e == npos || obj_[j] < obj_[e])) e = j;
      }
      if (e == npos) return true;  // optimal for this phase

      std::size_t r = npos;
      T best{};
      for (std::size_t i = 0; i < nrows_; ++i) {
        const T& a = tab_[i][e];
        if (!Num<T>::pos(a)) continue;
        T ratio = tab_[i][ncols_] / a;
        if (r == npos || ratio < best || (ratio == best && basis_[i] < basis_[r])) {
          r = i;
          best = ratio;
        }
      }
      if (r == npos) return false;  // unbounded

      if (Num<T>::zero(tab_[r][ncols_])) {
        if (++stalled > stall_limit) bland = true;
      } else {
        stalled = 0;
      }
      pivot(r, e);
      if (pivots_ - start > pivot_cap) {
        if constexpr (std::is_same_v<T, double>) throw SimplexStall{};
        throw std::runtime_error("simplex: pivot limit exceeded");
      }
    }
  }

  void pivot(std::size_t r, std::size_t e) {
    ++pivots_;
    std::vector<T>& pr = tab_[r];
    if (!(pr[e] == T(1))) {
      T inv = pr[e];
      for (std::size_t j = 0; j <= ncols_; ++j)
        if (!Num<T>::zero(pr[j])) pr[j] /= inv;
      pr[e] = T(1);
    }
    nz_.clear();
    for (std::size_t j = 0; j <= ncols_; ++j)
      if (!Num<T>::zero(pr[j])) nz_.push_back(j);
    for (std::size_t i = 0; i < nrows_; ++i) {
      if (i == r) continue;
      elim_row(tab_[i], pr, e);
    }
    elim_row(obj_, pr, e);
    basis_[r] = e;
  }

  void elim_row(std::vector<T>& row, const std::vector<T>& pr, std::size_t e) {
    T f = row[e];
    if (Num<T>::zero(f)) { row[e] = T{}; return; }
    for (std::size_t j : nz_) row[j] -= f * pr[j];
    row[e] = T{};
  }

  // After phase 1 every artificial sits at zero; pivot each one out on any
  // nonzero entry of its row, or drop the row as redundant if none exists.
  void purge_artificials() {
    std::vector<bool> drop(nrows_, false);
    for (std::size_t i = 0; i < nrows_; ++i) {
      if (cols_[basis_[i]].kind != ColKind::artificial) continue;
      std::size_t e = npos;
      for (std::size_t j = 0; j < ncols_ && e == npos; ++j)
        if (cols_[j].kind != ColKind::artificial && !Num<T>::zero(tab_[i][j])) e = j;
      if (e == npos) {
        drop[i] = true;
        continue;
      }
      pivot(i, e);  // degenerate: the row's rhs is zero
    }
    std::size_t w = 0;
    for (std::size_t i = 0; i < nrows_; ++i) {
      if (drop[i]) continue;
      if (w != i) {
        tab_[w] = std::move(tab_[i]);
        basis_[w] = basis_[i];
        local_row_[w] = local_row_[i];
        row_extra_[w] = row_extra_[i];
        row_art_[w] = row_art_[i];
      }
      ++w;
    }
    nrows_ = w;
    tab_.resize(nrows_);
    basis_.resize(nrows_);
    local_row_.resize(nrows_);
    row_extra_.resize(nrows_);
    row_art_.resize(nrows_);
  }

  std::size_t nvars_, nrows_, ncols_ = 0;
  std::vector<T> cvar_;
  std::vector<Col> cols_;
  std::vector<std::size_t> var_col_;
  std::vector<bool> free_;
  std::vector<std::size_t> row_extra_, row_art_;
  std::vector<int> sigma_;              // indexed by ORIGINAL local row
  std::vector<std::size_t> local_row_;  // tableau row -> original local row
  std::vector<std::vector<T>> tab_;
  std::vector<T> obj_;
  std::vector<std::size_t> basis_;
  std::vector<std::size_t> nz_;
  int phase_ = 1;
  std::uint64_t pivots_ = 0;
};

struct Dsu {
  std::vector<std::size_t> p;
  explicit Dsu(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), std::size_t{0}); }
  std::size_t find(std::size_t a) {
    while (p[a] != a) a = p[a] = p[p[a]];
    return a;
  }
  void unite(std::size_t a, std::size_t b) { p[find(a)] = find(b); }
};

struct Split {
  std::vector<std::vector<std::size_t>> comp_vars, comp_rows;
  std::vector<std::size_t> empty_rows;
};

Split split_components(const LpInstance& lp) {
  std::size_t n = lp.num_vars();
  Dsu dsu(n);
  std::vector<std::size_t> row_anchor(lp.rows.size(), static_cast<std::size_t>(-1));
  for (std::size_t r = 0; r < lp.rows.size(); ++r) {
    std::size_t first = static_cast<std::size_t>(-1);
    for (std::size_t j = 0; j < n; ++j) {
      if (lp.rows[r].a[j].is_zero()) continue;
      if (first == static_cast<std::size_t>(-1)) first = j;
      else dsu.unite(first, j);
    }
    row_anchor[r] = first;
  }
  Split out;
  std::vector<std::size_t> comp_of(n, static_cast<std::size_t>(-1));
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t root = dsu.find(j);
    if (comp_of[root] == static_cast<std::size_t>(-1)) {
      comp_of[root] = out.comp_vars.size();
      out.comp_vars.emplace_back();
      out.comp_rows.emplace_back();
    }
    comp_of[j] = comp_of[root];
    out.comp_vars[comp_of[j]].push_back(j);
  }
  for (std::size_t r = 0; r < lp.rows.size(); ++r) {
    if (row_anchor[r] == static_cast<std::size_t>(-1)) out.empty_rows.push_back(r);
    else out.comp_rows[comp_of[row_anchor[r]]].push_back(r);
  }
  return out;
}

bool zero_row_feasible(const LpConstraint& row) {
  switch (row.rel) {
    case Relation::le: return row.rhs.sign() >= 0;
    case Relation::ge: return row.rhs.sign() <= 0;
    case Relation::eq: return row.rhs.is_zero();
  }
  std::abort();
}

template <class T, class Out>
Out solve_impl(const LpInstance& lp) {
  lp.validate();
  bool maximize = lp.sense == Sense::maximize;
  std::vector<Rational> cmin = lp.c;
  if (maximize)
    for (Rational& x : cmin) x = -x;

  Out out;
  out.status = LpStatus::optimal;
  std::uint64_t pivots = 0;

  Split comps = split_components(lp);
  for (std::size_t r : comps.empty_rows)
    if (!zero_row_feasible(lp.rows[r])) {
      out.status = LpStatus::infeasible;
      return out;
    }
  std::vector<T> primal(lp.num_vars(), T{});
  std::vector<T> dual(lp.rows.size(), T{});
  T value{};
  bool unbounded = false;
  for (std::size_t k = 0; k < comps.comp_vars.size(); ++k) {
    SubSolution<T> sub = Simplex<T>(lp, cmin, comps.comp_vars[k], comps.comp_rows[k]).run();
    pivots += sub.pivots;
    if (sub.status == LpStatus::infeasible) {
      out.status = LpStatus::infeasible;
      if constexpr (std::is_same_v<Out, LpResult>) out.pivots = pivots;
      return out;
    }
    if (sub.status == LpStatus::unbounded) {
      unbounded = true;
      continue;
    }
    value += sub.value;
    for (std::size_t i = 0; i < comps.comp_vars[k].size(); ++i)
      primal[comps.comp_vars[k][i]] = sub.x[i];
    for (std::size_t i = 0; i < comps.comp_rows[k].size(); ++i)
      dual[comps.comp_rows[k][i]] = sub.y[i];
  }
  if (unbounded) {
    out.status = LpStatus::unbounded;
    if constexpr (std::is_same_v<Out, LpResult>) out.pivots = pivots;
    return out;
  }
  if (maximize) {
    value = -value;
    for (T& y : dual) y = -y;
  }
  if constexpr (std::is_same_v<Out, LpResult>) {
    out.value = value;
    out.primal = std::move(primal);
    out.dual = std::move(dual);
    out.pivots = pivots;
  } else {
    out.value = value;
    out.primal = std::move(primal);
  }
  return out;
}

}  // namespace

void LpInstance::validate() const {
  if (c.empty()) throw std::invalid_argument("lp: no variables");
  if (nonneg.size() != c.size())
    throw std::invalid_argument("lp: variable bound flags do not match objective size");
  for (const LpConstraint& row : rows)
    if (row.a.size() != c.size())
      throw std::invalid_argument("lp: constraint width does not match variable count");
}

LpResult solve(const LpInstance& lp) { return solve_impl<Rational, LpResult>(lp); }

LpApprox solve_approx(const LpInstance& lp) {
  try {
    return solve_impl<double, LpApprox>(lp);
  } catch (const SimplexStall&) {
    LpApprox out;
    out.gave_up = true;
    return out;
  }
}

bool certify_optimality(const LpInstance& lp, const LpResult& res) {
  lp.validate();
  if (res.status != LpStatus::optimal) return false;
  std::size_t n = lp.num_vars();
  if (res.primal.size() != n || res.dual.size() != lp.rows.size()) return false;
  bool maximize = lp.sense == Sense::maximize;

  for (std::size_t j = 0; j < n; ++j)
    if (lp.nonneg[j] && res.primal[j].sign() < 0) return false;
  Rational cx;
  for (std::size_t j = 0; j < n; ++j) cx += lp.c[j] * res.primal[j];
  if (cx != res.value) return false;

  Rational by;
  for (std::size_t i = 0; i < lp.rows.size(); ++i) {
    const LpConstraint& row = lp.rows[i];
    Rational lhs;
    for (std::size_t j = 0; j < n; ++j)
      if (!row.a[j].is_zero()) lhs += row.a[j] * res.primal[j];
    const Rational& y = res.dual[i];
    switch (row.rel) {
      case Relation::le:
        if (lhs > row.rhs) return false;
        if ((maximize ? -y : y).sign() > 0) return false;
        break;
      case Relation::ge:
        if (lhs < row.rhs) return false;
        if ((maximize ? -y : y).sign() < 0) return false;
        break;
      case Relation::eq:
        if (lhs != row.rhs) return false;
        break;
    }
    by += y * row.rhs;
  }
  if (by != res.value) return false;

  for (std::size_t j = 0; j < n; ++j) {
    Rational s;
    for (std::size_t i = 0; i < lp.rows.size(); ++i)
      if (!lp.rows[i].a[j].is_zero()) s += res.dual[i] * lp.rows[i].a[j];
    if (!lp.nonneg[j]) {
      if (s != lp.c[j]) return false;
    } else if (maximize ? s < lp.c[j] : s > lp.c[j]) {
      return false;
    }
  }
  return true;
}

}  // namespace ghznl
