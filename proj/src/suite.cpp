#include "ghznl/suite.hpp"

#include <bit>
#include <chrono>
#include <cstdio>
#include <ostream>
#include <random>
#include <utility>

#include "ghznl/bounds.hpp"
#include "ghznl/certifier.hpp"
#include "ghznl/fixtures.hpp"
#include "ghznl/lp.hpp"
#include "ghznl/protocols.hpp"
#include "ghznl/search.hpp"

namespace ghznl {

namespace {

struct Failure {
  std::string what;
};

[[noreturn]] void failf(std::string msg) { throw Failure{std::move(msg)}; }

void expect(bool cond, const std::string& msg) {
  if (!cond) failf(msg);
}

const std::array<Rational, 3> kFiveValues = {Rational(4, 5), Rational(4, 5), Rational(3, 5)};
const std::array<Rational, 3> kEightValues = {Rational(7, 8), Rational(7, 8), Rational(3, 4)};

std::string values_row(const std::array<Rational, 3>& b) {
  std::string s;
  for (std::size_t i = 0; i < 3; ++i) {
    if (i) s += " ";
    s += std::string(to_string(all_bipartitions[i])) + "=" + b[i].str();
  }
  return s;
}

void expect_values(const std::array<Rational, 3>& got, const std::array<Rational, 3>& want,
                   const std::string& label) {
  for (std::size_t i = 0; i < 3; ++i)
    expect(got[i] == want[i], label + ": value at " + std::string(to_string(all_bipartitions[i])) +
                                  " is " + got[i].str() + ", expected " + want[i].str());
}

// Bounded random rationals keep every downstream computation exact and fast.
Rational random_rational(std::mt19937& gen) {
  long long num = static_cast<long long>(gen() % 9) - 4;
  long long den = static_cast<long long>(gen() % 3) + 1;
  return Rational(num, den);
}

DenseOperator random_hermitian(std::mt19937& gen) {
  Matrix m(8, 8);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j)
      m(i, j) = GaussianRational(random_rational(gen), random_rational(gen));
  return DenseOperator{1, m + m.conjugate_transpose()};
}

// Level-by-level contraction with an arbitrary 8x8 table; deliberately local
// to the oracle so the checked quantity does not come from apply_pt_diag.
DiagOperator apply_table(const std::array<std::array<Rational, 8>, 8>& m, const DiagOperator& d) {
  DiagOperator out = d;
  std::size_t stride = out.dim();
  for (int level = 0; level < d.t; ++level) {
    stride /= 8;
    DiagOperator next = DiagOperator::zero(d.t);
    for (std::size_t hi = 0; hi < out.dim(); hi += stride * 8) {
      for (std::size_t lo = 0; lo < stride; ++lo) {
        for (int a = 0; a < 8; ++a) {
          Rational acc;
          for (int b = 0; b < 8; ++b)
            acc += m[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] *
                   out.c[hi + static_cast<std::size_t>(b) * stride + lo];
          next.c[hi + static_cast<std::size_t>(a) * stride + lo] = acc;
        }
      }
    }
    out = std::move(next);
  }
  return out;
}

StateSet one_level_subset(unsigned mask) {
  std::vector<LatticeIndex> st;
  for (int i = 0; i < 8; ++i)
    if (mask >> i & 1u) st.push_back(LatticeIndex{i});
  return StateSet(1, std::move(st));
}

// Number of the four partner pairs {i, 7-i} that the mask touches.
int pairs_covered(unsigned mask) {
  int n = 0;
  for (int p = 0; p < 4; ++p)
    if ((mask >> p & 1u) || (mask >> (7 - p) & 1u)) ++n;
  return n;
}

std::string run_five_state_values() {
  Verdict v = certify(fixtures::s5());
  expect_values(v.betas, kFiveValues, "five-state family");
  expect(v.kind == Verdict::Kind::certified, "five-state family not certified");
  return values_row(v.betas) + ", certified";
}

std::string run_ten_state_values() {
  Verdict v = certify(fixtures::s10());
  expect_values(v.betas, kFiveValues, "ten-state family");
  expect(v.kind == Verdict::Kind::certified, "ten-state family not certified");
  return values_row(v.betas) + ", certified";
}

std::string run_eight_state_certification() {
  Verdict v = certify(fixtures::s8());
  expect_values(v.betas, kEightValues, "eight-state family");
  expect(v.kind == Verdict::Kind::certified, "eight-state family not certified");
  return values_row(v.betas) + ", certified";
}

std::string run_certificate_verification() {
  struct Family {
    const char* label;
    StateSet set;
    const std::array<Rational, 3>& values;
    Certificate (*cert)(Bipartition);
  };
  const Family families[] = {
      {"five-state", fixtures::s5(), kFiveValues, fixtures::s5_certificate},
      {"eight-state", fixtures::s8(), kEightValues, fixtures::s8_certificate},
      {"ten-state", fixtures::s10(), kFiveValues, fixtures::s10_certificate},
  };
  int verified = 0;
  for (const Family& f : families) {
    for (std::size_t i = 0; i < 3; ++i) {
      Bipartition cut = all_bipartitions[i];
      const std::string label = std::string(f.label) + " at " + std::string(to_string(cut));
      Certificate cert = f.cert(cut);
      expect(cert.claimed_value == f.values[i],
             label + ": stated value " + cert.claimed_value.str() + ", expected " + f.values[i].str());
      VerifyOutcome out = verify_certificate(f.set, cert);
      expect(out.feasible, label + ": " + out.detail);
      expect(out.matches_claim, label + ": value mismatch: " + out.detail);
      ++verified;
    }
  }
  expect(verified == 9, "expected nine certificates");
  return "9 certificates feasible at their stated values (entrywise and dense routes)";
}

std::string run_single_level_census() {
  int certified5 = 0;
  for (unsigned mask = 0; mask < 256; ++mask) {
    if (std::popcount(mask) != 5) continue;
    Verdict v = certify(one_level_subset(mask));
    expect(v.kind == Verdict::Kind::certified,
           "five-subset mask " + std::to_string(mask) + " not certified");
    ++certified5;
  }
  expect(certified5 == 56, "expected 56 five-subsets");

  std::array<int, 5> class_count{};
  for (unsigned mask = 0; mask < 256; ++mask) {
    if (std::popcount(mask) != 4) continue;
    StateSet set = one_level_subset(mask);
    int successes = 0;
    for (Bipartition cut : all_bipartitions)
      if (run_lattice_protocol(set, cut).success) ++successes;
    int pc = pairs_covered(mask);
    int want = pc == 4 ? 3 : pc == 3 ? 1 : 2;
    expect(successes == want, "four-subset mask " + std::to_string(mask) + " covers " +
                                  std::to_string(pc) + " pairs but succeeds at " +
                                  std::to_string(successes) + " cuts, expected " +
                                  std::to_string(want));
    ++class_count[static_cast<std::size_t>(pc)];
  }
  expect(class_count[4] == 16 && class_count[3] == 48 && class_count[2] == 6,
         "four-subset pair-coverage classes off: " + std::to_string(class_count[4]) + "/" +
             std::to_string(class_count[3]) + "/" + std::to_string(class_count[2]));
  return "56 five-subsets certified; 70 four-subsets split 16@3cuts, 48@1cut, 6@2cuts by pairs "
         "covered";
}

std::string run_transform_oracle_criterion() {
  OracleReport rep = run_transform_oracle(builtin_transform_source());
  expect(rep.passed, rep.detail);
  return std::to_string(rep.checks) +
         " exact comparisons: dense transpose vs table columns, table algebra, dephasing twirl vs "
         "projection, transpose commutation";
}

std::string run_duality_audit() {
  struct Instance {
    const char* label;
    StateSet set;
    const std::array<Rational, 3>& values;
  };
  const Instance instances[] = {
      {"five-state", fixtures::s5(), kFiveValues},
      {"eight-state", fixtures::s8(), kEightValues},
  };
  int audited = 0;
  for (const Instance& inst : instances) {
    for (std::size_t i = 0; i < 3; ++i) {
      Bipartition cut = all_bipartitions[i];
      const std::string label = std::string(inst.label) + " at " + std::string(to_string(cut));
      LpInstance dual = build_dual_lp(inst.set, cut);
      LpInstance primal = build_primal_lp(inst.set, cut);
      LpResult rd = solve(dual);
      LpResult rp = solve(primal);
      expect(rd.status == LpStatus::optimal, label + ": minimization did not reach optimal");
      expect(rp.status == LpStatus::optimal, label + ": maximization did not reach optimal");
      expect(certify_optimality(dual, rd), label + ": minimization recheck failed");
      expect(certify_optimality(primal, rp), label + ": maximization recheck failed");
      expect(rd.value == rp.value, label + ": gap " + rd.value.str() + " vs " + rp.value.str());
      expect(rd.value == inst.values[i],
             label + ": optimum " + rd.value.str() + ", expected " + inst.values[i].str());
      ++audited;
    }
  }
  return std::to_string(audited) +
         " instances: both optima solved, rechecked from first principles, zero gap";
}

std::string run_cardinality_bounds() {
  expect(cardinality_bound(3, 2) == Rational(27, 2),
         "bound at local dimension 3, weight 2 is " + cardinality_bound(3, 2).str());
  expect(cardinality_bound(4, 4) == Rational(16),
         "bound at local dimension 4, weight 4 is " + cardinality_bound(4, 4).str());

  GhzLikeSet family = fixtures::n26();
  expect(orthogonality_check(family), "the 26-state family is not pairwise orthogonal");
  std::vector<std::size_t> order(family.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::mt19937 gen(26014);
  for (std::size_t i = order.size() - 1; i > 0; --i)
    std::swap(order[i], order[gen() % (i + 1)]);
  std::vector<std::size_t> pick14(order.begin(), order.begin() + 14);
  std::vector<std::size_t> pick13(order.begin(), order.begin() + 13);
  expect(certify_by_bound(family.subset(pick14)), "a random 14-subset should exceed the bound");
  expect(!certify_by_bound(family.subset(pick13)), "a 13-subset cannot exceed the bound");

  expect(!certify_by_bound(to_ghzlike(fixtures::s8())),
         "the eight-state family must be out of the bound's reach");
  expect(!certify_by_bound(to_ghzlike(fixtures::s16())),
         "the sixteen-state family must be out of the bound's reach");

  StateSet s16 = fixtures::s16();
  std::array<Rational, 3> ceilings;
  for (std::size_t i = 0; i < 3; ++i) {
    Bipartition cut = all_bipartitions[i];
    Certificate lifted = extend_certificate_by_pair(fixtures::s8_certificate(cut), GhzIndex(0));
    VerifyOutcome out = verify_certificate(s16, lifted);
    const std::string label = "sixteen-state lift at " + std::string(to_string(cut));
    expect(out.feasible, label + ": " + out.detail);
    expect(out.matches_claim, label + ": value mismatch: " + out.detail);
    expect(out.value < Rational(1), label + ": ceiling " + out.value.str() + " not below 1");
    ceilings[i] = out.value;
  }
  expect_values(ceilings, kEightValues, "sixteen-state lift");
  return "27/2 and 16 as stated; 14-subset certified, 13-subset inconclusive; sixteen-state "
         "family certified by lifted certificates (" + values_row(ceilings) + ")";
}

std::string run_search_reproduction() {
  SearchOptions opts;
  opts.strategy = SearchStrategy::exhaustive;
  opts.target_size = 8;
  opts.budget = 100000;
  opts.float_prefilter = true;
  StateSet ten = fixtures::s10();
  SearchReport rep = search_min_subsets(ten, opts);
  expect(rep.complete, "scan ran out of budget");
  const StateSet eight = fixtures::s8();
  bool found = false;
  std::array<Rational, 3> betas;
  for (const CertifiedSubset& c : rep.found) {
    if (ten.subset(c.indices) == eight) {
      found = true;
      betas = c.betas;
    }
  }
  expect(found, "the reference eight-state subset is not among the results");
  expect_values(betas, kEightValues, "recovered eight-state subset");
  return "exhaustive size-8 scan over the ten-state family: " + std::to_string(rep.found.size()) +
         " certified subsets, including the reference one at " + values_row(betas);
}

std::string run_protocol_value_consistency() {
  int one_level = 0;
  for (unsigned mask = 0; mask < 256; ++mask) {
    if (std::popcount(mask) != 4) continue;
    StateSet set = one_level_subset(mask);
    for (Bipartition cut : all_bipartitions) {
      if (!run_lattice_protocol(set, cut).success) continue;
      Rational b = beta(set, cut);
      expect(b == Rational(1), "four-subset mask " + std::to_string(mask) + " resolves at " +
                                   std::string(to_string(cut)) + " but its value is " + b.str());
      ++one_level;
    }
  }
  expect(one_level == 108, "expected 108 single-level protocol successes, saw " +
                               std::to_string(one_level));

  ProtocolResult first = lattice_protocol(fixtures::l16());
  expect(first.cut.has_value() && *first.cut == Bipartition::b_ca,
         "the {0,7,3,4} square should resolve at B|CA first");
  ProtocolResult second = lattice_protocol(fixtures::quad_square({0, 7, 1, 6}));
  expect(second.cut.has_value() && *second.cut == Bipartition::a_bc,
         "the {0,7,1,6} square should resolve at A|BC first");

  int two_level = 0;
  for (const auto& q : {std::array<int, 4>{0, 7, 3, 4}, std::array<int, 4>{0, 7, 1, 6}}) {
    StateSet square = fixtures::quad_square(q);
    int successes = 0;
    for (Bipartition cut : all_bipartitions) {
      if (!run_lattice_protocol(square, cut).success) continue;
      ++successes;
      Rational b = beta(square, cut);
      expect(b == Rational(1), "square resolves at " + std::string(to_string(cut)) +
                                   " but its value is " + b.str());
      ++two_level;
    }
    expect(successes >= 1, "every square must resolve at some cut");
  }
  return std::to_string(one_level) + " single-level and " + std::to_string(two_level) +
         " two-level protocol successes, each with discrimination value exactly 1";
}

CriterionResult run_one(int id, const char* name, double limit_seconds,
                        const std::function<std::string()>& body, std::ostream* progress) {
  CriterionResult r;
  r.id = id;
  r.name = name;
  auto start = std::chrono::steady_clock::now();
  try {
    r.detail = body();
    r.passed = true;
  } catch (const Failure& f) {
    r.detail = f.what;
  } catch (const std::exception& e) {
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (r.passed && limit_seconds > 0.0 && r.seconds > limit_seconds) {
    r.passed = false;
    char buf[96];
    std::snprintf(buf, sizeof(buf), "time budget of %.0f s exceeded", limit_seconds);
    r.detail = std::string(buf) + "; " + r.detail;
  }
  if (progress != nullptr) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2f", r.seconds);
    *progress << "[" << (id < 10 ? " " : "") << id << "/10] " << r.name << ": "
              << (r.passed ? "pass" : "FAIL") << " (" << buf << " s)\n        " << r.detail
              << "\n";
    progress->flush();
  }
  return r;
}

}  // namespace

bool SuiteReport::all_passed() const {
  for (const CriterionResult& r : results)
    if (!r.passed) return false;
  return !results.empty();
}

TransformSource builtin_transform_source() {
  return [](Bipartition cut) { return pt_transform(cut); };
}

OracleReport run_transform_oracle(const TransformSource& source) {
  OracleReport rep;
  auto check = [&rep](bool ok, const std::string& msg) {
    ++rep.checks;
    if (!ok && rep.detail.empty()) rep.detail = msg;
    return ok;
  };

  for (Bipartition cut : all_bipartitions) {
    const PtTransform table = source(cut);
    const std::string where = std::string("cut ") + std::string(to_string(cut));

    // Columns against the brute-force dense route.
    for (int j = 0; j < 8; ++j) {
      DenseOperator transposed = partial_transpose_dense(ghz_density(GhzIndex(j)), cut);
      auto [diag, offdiag_zero] = expand_in_ghz_basis(transposed);
      if (!check(offdiag_zero, where + ": transposed basis projector " + std::to_string(j) +
                                   " left the diagonal span"))
        return rep;
      bool column_ok = true;
      for (int i = 0; i < 8; ++i)
        column_ok = column_ok && diag.c[static_cast<std::size_t>(i)] ==
                                     table.m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (!check(column_ok,
                 where + ": table column " + std::to_string(j) + " disagrees with the dense route"))
        return rep;
    }

    // Algebra of the table itself: symmetric, trace preserving, involutive.
    bool symmetric = true, stochastic = true, involutive = true;
    for (std::size_t i = 0; i < 8; ++i) {
      Rational col_sum;
      for (std::size_t j = 0; j < 8; ++j) {
        symmetric = symmetric && table.m[i][j] == table.m[j][i];
        col_sum += table.m[j][i];
        Rational dot;
        for (std::size_t k = 0; k < 8; ++k) dot += table.m[i][k] * table.m[k][j];
        involutive = involutive && dot == Rational(i == j ? 1 : 0);
      }
      stochastic = stochastic && col_sum == Rational(1);
    }
    if (!check(symmetric, where + ": table not symmetric")) return rep;
    if (!check(stochastic, where + ": table columns do not sum to 1")) return rep;
    if (!check(involutive, where + ": table squared is not the identity")) return rep;

    // Random two-level diagonals: table tensor-square vs dense vs library.
    std::mt19937 gen(20260 + static_cast<unsigned>(cut));
    for (int sample = 0; sample < 20; ++sample) {
      DiagOperator d = DiagOperator::zero(2);
      for (Rational& c : d.c) c = random_rational(gen);
      DiagOperator via_table = apply_table(table.m, d);
      auto [via_dense, offdiag_zero] = expand_in_ghz_basis(
          partial_transpose_dense(dense_from_diag(d), cut));
      if (!check(offdiag_zero, where + ": transposed two-level diagonal left the diagonal span"))
        return rep;
      if (!check(via_table == via_dense,
                 where + ": table tensor square disagrees with the dense route"))
        return rep;
      if (!check(apply_pt_diag(d, cut) == via_dense,
                 where + ": library transform disagrees with the dense route"))
        return rep;
    }
  }

  // Dephasing channel: twirl form vs projection form, and commutation with
  // the partial transpose, on one seeded hermitian sample.
  std::mt19937 gen(8080);
  for (int sample = 0; sample < 100; ++sample) {
    DenseOperator rho = random_hermitian(gen);
    DenseOperator twirled = dephase(rho);
    DiagOperator diag = expand_in_ghz_basis(rho).first;
    if (!check(twirled.m == dense_from_diag(diag).m,
               "sample " + std::to_string(sample) + ": twirl and projection forms disagree"))
      return rep;
    for (Bipartition cut : all_bipartitions) {
      DenseOperator a = dephase(partial_transpose_dense(rho, cut));
      DenseOperator b = partial_transpose_dense(twirled, cut);
      if (!check(a.m == b.m, "sample " + std::to_string(sample) + ": dephasing does not commute "
                                                                  "with the transpose at " +
                                 std::string(to_string(cut))))
        return rep;
    }
  }

  rep.passed = rep.detail.empty();
  return rep;
}

SuiteReport run_reference_suite(std::ostream* progress) {
  SuiteReport rep;
  rep.results.push_back(run_one(1, "five-state-values", 1.0, run_five_state_values, progress));
  rep.results.push_back(run_one(2, "ten-state-values", 30.0, run_ten_state_values, progress));
  rep.results.push_back(
      run_one(3, "eight-state-certification", 0.0, run_eight_state_certification, progress));
  rep.results.push_back(
      run_one(4, "certificate-verification", 0.0, run_certificate_verification, progress));
  rep.results.push_back(run_one(5, "single-level-census", 0.0, run_single_level_census, progress));
  rep.results.push_back(
      run_one(6, "transform-oracle", 0.0, run_transform_oracle_criterion, progress));
  rep.results.push_back(run_one(7, "duality-audit", 0.0, run_duality_audit, progress));
  rep.results.push_back(run_one(8, "cardinality-bounds", 600.0, run_cardinality_bounds, progress));
  rep.results.push_back(run_one(9, "search-reproduction", 0.0, run_search_reproduction, progress));
  rep.results.push_back(
      run_one(10, "protocol-value-consistency", 0.0, run_protocol_value_consistency, progress));
  return rep;
}

Json suite_report_to_json(const SuiteReport& rep) {
  Json j;
  j["passed"] = rep.all_passed();
  Json criteria = Json::array();
  for (const CriterionResult& r : rep.results) {
    Json c;
    c["id"] = r.id;
    c["name"] = r.name;
    c["passed"] = r.passed;
    c["detail"] = r.detail;
    criteria.push_back(std::move(c));
  }
  j["criteria"] = std::move(criteria);
  return j;
}

}  // namespace ghznl
