#include <exception>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ghznl/bounds.hpp"
#include "ghznl/certifier.hpp"
#include "ghznl/fixtures.hpp"
#include "ghznl/io.hpp"
#include "ghznl/protocols.hpp"
#include "ghznl/search.hpp"
#include "ghznl/suite.hpp"

namespace {

using ghznl::Json;

// Exit codes are a stable contract: 0 positive verdict / success, 1 negative
// verdict, 2 input error, 3 no verdict (budget exhausted or approximate
// mode). Internal invariant violations use 70.
constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;
constexpr int kNoVerdict = 3;
constexpr int kInternal = 70;

void write_report(const std::string& path, const Json& report) {
  if (!path.empty()) ghznl::write_json_file(path, report);
}

ghznl::Bipartition parse_cut_or_throw(const std::string& name) {
  auto cut = ghznl::parse_bipartition(name);
  if (!cut) throw ghznl::IoError("unknown cut '" + name + "' (expected A|BC, B|CA, or C|AB)");
  return *cut;
}

std::vector<ghznl::Bipartition> selected_cuts(const std::string& cut_name) {
  if (cut_name.empty())
    return {ghznl::all_bipartitions.begin(), ghznl::all_bipartitions.end()};
  return {parse_cut_or_throw(cut_name)};
}

Json solutions_json(const ghznl::CutSolutions& sol) {
  Json j;
  j["cut"] = std::string(to_string(sol.certificate.cut));
  j["beta"] = ghznl::rational_to_json(sol.value);
  j["certificate"] = ghznl::certificate_to_json(sol.certificate);
  Json povm = Json::array();
  for (const ghznl::DiagOperator& p : sol.measurement)
    povm.push_back(ghznl::diag_operator_to_json(p));
  j["measurement"] = std::move(povm);
  return j;
}

int run_certify(const std::string& input, const std::string& output, const std::string& cut_name,
                const std::string& mode, bool with_solutions) {
  ghznl::StateSet set = ghznl::state_set_from_json(ghznl::read_json_file(input));
  std::vector<ghznl::Bipartition> cuts = selected_cuts(cut_name);

  if (mode == "float-prefilter") {
    // Screening only: approximate values, no verdict, exit code 3.
    Json report;
    report["mode"] = "float-prefilter";
    Json approx;
    for (ghznl::Bipartition cut : cuts) {
      ghznl::LpApprox a = ghznl::solve_approx(ghznl::build_dual_lp(set, cut));
      if (a.status != ghznl::LpStatus::optimal)
        throw std::logic_error("approximate solve did not reach optimal");
      approx[std::string(to_string(cut))] = a.value;
      std::cout << to_string(cut) << ": beta ~= " << a.value << "\n";
    }
    report["approx_betas"] = std::move(approx);
    std::cout << "no verdict: approximate values only; rerun in exact mode\n";
    write_report(output, report);
    return kNoVerdict;
  }

  Json report;
  std::vector<Json> solutions;
  ghznl::Verdict verdict;
  bool filtered = cuts.size() != 3;
  if (filtered) {
    ghznl::Rational b =
        with_solutions ? [&] {
          ghznl::CutSolutions sol = ghznl::beta_with_solutions(set, cuts[0]);
          solutions.push_back(solutions_json(sol));
          return sol.value;
        }()
                       : ghznl::beta(set, cuts[0]);
    report["cut"] = std::string(to_string(cuts[0]));
    report["beta"] = ghznl::rational_to_json(b);
    std::cout << to_string(cuts[0]) << ": beta = " << b.str() << "\n";
    if (with_solutions) report["solutions"] = solutions;
    bool below = b < ghznl::Rational(1);
    std::cout << (below ? "indistinguishable across this cut (value below 1)\n"
                        : "no conclusion at this cut (value 1)\n");
    write_report(output, report);
    return below ? kOk : kNegative;
  }

  if (with_solutions) {
    verdict.kind = ghznl::Verdict::Kind::certified;
    for (std::size_t i = 0; i < 3; ++i) {
      ghznl::CutSolutions sol = ghznl::beta_with_solutions(set, ghznl::all_bipartitions[i]);
      verdict.betas[i] = sol.value;
      solutions.push_back(solutions_json(sol));
      if (sol.value >= ghznl::Rational(1) && verdict.kind == ghznl::Verdict::Kind::certified) {
        verdict.kind = ghznl::Verdict::Kind::distinguishable;
        verdict.cut = ghznl::all_bipartitions[i];
      }
    }
  } else {
    verdict = ghznl::certify(set);
  }

  report = ghznl::verdict_to_json(verdict);
  for (std::size_t i = 0; i < 3; ++i)
    std::cout << to_string(ghznl::all_bipartitions[i]) << ": beta = " << verdict.betas[i].str()
              << "\n";
  bool certified = verdict.kind == ghznl::Verdict::Kind::certified;
  if (certified) {
    std::cout << "verdict: certified genuinely nonlocal (every value below 1)\n";
  } else {
    // A value of 1 only says this relaxation cannot tell the states apart
    // no wiser; when the one-way protocol also resolves the set, say where.
    ghznl::ProtocolResult hint = ghznl::lattice_protocol(set);
    report["protocol_hint"] = hint.cut ? Json(std::string(to_string(*hint.cut))) : Json(nullptr);
    std::cout << "verdict: not certified (value 1 at " << to_string(*verdict.cut) << ")\n";
    if (hint.cut)
      std::cout << "one-way protocol resolves the set across " << to_string(*hint.cut) << "\n";
  }
  if (with_solutions) report["solutions"] = solutions;
  write_report(output, report);
  return certified ? kOk : kNegative;
}

int run_verify(const std::string& input, const std::string& cert_path,
               const std::string& output) {
  ghznl::StateSet set = ghznl::state_set_from_json(ghznl::read_json_file(input));
  ghznl::Certificate cert = ghznl::certificate_from_json(ghznl::read_json_file(cert_path));
  if (cert.y.t != set.t())
    throw ghznl::IoError("certificate has " + std::to_string(cert.y.t) + " levels, set has " +
                         std::to_string(set.t()));
  if (cert.qs.size() != set.size())
    throw ghznl::IoError("certificate carries " + std::to_string(cert.qs.size()) +
                         " Q blocks, set has " + std::to_string(set.size()) + " states");

  ghznl::VerifyOutcome out = ghznl::verify_certificate(set, cert);
  write_report(output, ghznl::verify_outcome_to_json(out, cert));
  std::cout << "cut " << to_string(cert.cut) << ": ";
  if (!out.feasible) {
    std::cout << "infeasible: " << out.detail << "\n";
    return kNegative;
  }
  std::cout << "feasible, value = " << out.value.str() << " (claimed "
            << cert.claimed_value.str() << ")\n";
  if (!out.matches_claim) {
    std::cout << "stated value does not match\n";
    return kNegative;
  }
  return kOk;
}

int run_bound(const std::string& input, const std::string& output) {
  Json j = ghznl::read_json_file(input);
  // Accepts either shape: an explicit family, or a lattice set to regroup.
  ghznl::GhzLikeSet family = j.contains("d") ? ghznl::ghzlike_set_from_json(j)
                                             : ghznl::to_ghzlike(ghznl::state_set_from_json(j));
  auto bad = ghznl::find_nonorthogonal_pair(family);
  if (bad)
    throw ghznl::IoError("states " + std::to_string(bad->first) + " and " +
                         std::to_string(bad->second) + " are not orthogonal");
  ghznl::Rational bound = ghznl::cardinality_bound(family.d, family.w);
  bool certified = ghznl::certify_by_bound(family);

  Json report;
  report["size"] = family.size();
  report["local_dimension"] = family.d;
  report["weight"] = family.w;
  report["bound"] = ghznl::rational_to_json(bound);
  report["certified"] = certified;
  write_report(output, report);
  std::cout << family.size() << " states, local dimension " << family.d << ", weight " << family.w
            << ": bound = " << bound.str() << "\n"
            << (certified ? "certified genuinely nonlocal (size exceeds the bound)\n"
                          : "inconclusive (size within the bound)\n");
  return certified ? kOk : kNegative;
}

int run_search(const std::string& input, const std::string& output, std::optional<std::size_t> target,
               std::uint64_t budget, bool exhaustive, bool no_prefilter,
               const std::string& cursor_path) {
  ghznl::StateSet set = ghznl::state_set_from_json(ghznl::read_json_file(input));
  ghznl::SearchOptions opts;
  opts.strategy = exhaustive ? ghznl::SearchStrategy::exhaustive : ghznl::SearchStrategy::greedy;
  opts.target_size = target;
  opts.budget = budget;
  opts.float_prefilter = !no_prefilter;
  opts.log = [](const std::string& line) { std::cerr << line << "\n"; };
  if (!cursor_path.empty() && std::filesystem::exists(cursor_path))
    opts.resume = ghznl::search_cursor_from_json(ghznl::read_json_file(cursor_path));

  ghznl::SearchReport rep = ghznl::search_min_subsets(set, opts);
  write_report(output, ghznl::search_report_to_json(rep, set));
  std::cout << (rep.complete ? "complete" : "incomplete") << ": " << rep.examined
            << " subsets examined, " << rep.lp_solves << " LP solves\n";
  for (const ghznl::CertifiedSubset& c : rep.found) {
    std::cout << "certified subset of size " << c.indices.size() << ": {";
    for (std::size_t i = 0; i < c.indices.size(); ++i)
      std::cout << (i ? "," : "") << c.indices[i];
    std::cout << "} values";
    for (std::size_t i = 0; i < 3; ++i) std::cout << " " << c.betas[i].str();
    std::cout << "\n";
  }
  if (!rep.complete && rep.cursor && !cursor_path.empty()) {
    ghznl::write_json_file(cursor_path, ghznl::search_cursor_to_json(*rep.cursor));
    std::cout << "cursor written to " << cursor_path << "\n";
  }
  return rep.complete ? kOk : kNoVerdict;
}

int run_suite(const std::string& output) {
  ghznl::SuiteReport rep = ghznl::run_reference_suite(&std::cout);
  int passed = 0;
  for (const ghznl::CriterionResult& r : rep.results) passed += r.passed ? 1 : 0;
  std::cout << (rep.all_passed() ? "passed " : "FAILED ") << passed << "/" << rep.results.size()
            << "\n";
  write_report(output, ghznl::suite_report_to_json(rep));
  return rep.all_passed() ? kOk : kNegative;
}

int run_fixtures(const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  for (const auto& [name, doc] : ghznl::bundled_fixture_files()) {
    std::string path = (std::filesystem::path(out_dir) / name).string();
    ghznl::write_json_file(path, doc);
    std::cout << path << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"PPT discrimination toolkit for maximally entangled lattice bases"};
  app.require_subcommand(1);

  std::string input, output, cut_name, cert_path, cursor_path;
  std::string mode = "exact";
  std::string out_dir = "fixtures";
  bool with_solutions = false, exhaustive = false, no_prefilter = false;
  std::optional<std::size_t> target_size;
  std::uint64_t budget = 100000;

  CLI::App* certify = app.add_subcommand(
      "certify", "Discrimination values across all cuts, with verdict (exact mode)");
  certify->add_option("--input", input, "state-set JSON file")->required();
  certify->add_option("--output", output, "write the JSON report here");
  certify->add_option("--cut", cut_name, "restrict to one cut (A|BC, B|CA, C|AB)");
  certify->add_option("--mode", mode, "exact (default) or float-prefilter (no verdict)")
      ->check(CLI::IsMember({"exact", "float-prefilter"}));
  certify->add_flag("--solutions", with_solutions,
                    "include optimal certificate and measurement per cut");

  CLI::App* verify = app.add_subcommand("verify", "Check a certificate file against a state set");
  verify->add_option("--input", input, "state-set JSON file")->required();
  verify->add_option("--certificate", cert_path, "certificate JSON file")->required();
  verify->add_option("--output", output, "write the JSON report here");

  CLI::App* bound = app.add_subcommand(
      "bound", "Counting certificate: size vs d^3/w for an orthogonal family");
  bound->add_option("--input", input, "family or state-set JSON file")->required();
  bound->add_option("--output", output, "write the JSON report here");

  CLI::App* search = app.add_subcommand("search", "Find minimal certified subsets");
  search->add_option("--input", input, "state-set JSON file")->required();
  search->add_option("--output", output, "write the JSON report here");
  search->add_option("--target-size", target_size, "restrict to subsets of this size");
  search->add_option("--budget", budget, "LP-solve budget (default 100000)");
  search->add_flag("--exhaustive", exhaustive, "scan all subsets instead of greedy descent");
  search->add_flag("--no-prefilter", no_prefilter, "skip the floating-point screen");
  search->add_option("--cursor", cursor_path,
                     "cursor file: resumed from when present, rewritten when the budget runs out");

  CLI::App* suite =
      app.add_subcommand("suite", "Run the full acceptance suite and print a pass/fail table");
  suite->add_option("--output", output, "write the JSON report here");

  CLI::App* fixtures = app.add_subcommand("fixtures", "Write the bundled fixture files");
  fixtures->add_option("--out-dir", out_dir, "target directory (default: fixtures)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  try {
    if (*certify) return run_certify(input, output, cut_name, mode, with_solutions);
    if (*verify) return run_verify(input, cert_path, output);
    if (*bound) return run_bound(input, output);
    if (*search)
      return run_search(input, output, target_size, budget, exhaustive, no_prefilter, cursor_path);
    if (*suite) return run_suite(output);
    if (*fixtures) return run_fixtures(out_dir);
  } catch (const ghznl::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
