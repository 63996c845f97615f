#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "ghznl/bounds.hpp"
#include "ghznl/certifier.hpp"
#include "ghznl/fixtures.hpp"
#include "ghznl/io.hpp"
#include "ghznl/protocols.hpp"
#include "ghznl/search.hpp"
#include "ghznl/suite.hpp"

namespace py = pybind11;

namespace {

using ghznl::Json;

// Every entry point speaks JSON strings; the python package converts to and
// from dicts, so the binding layer stays free of object marshalling.

std::string certify_json(const std::string& set_json) {
  ghznl::StateSet set = ghznl::state_set_from_json(Json::parse(set_json));
  return ghznl::verdict_to_json(ghznl::certify(set)).dump();
}

std::string beta_json(const std::string& set_json, const std::string& cut_name) {
  ghznl::StateSet set = ghznl::state_set_from_json(Json::parse(set_json));
  auto cut = ghznl::parse_bipartition(cut_name);
  if (!cut) throw ghznl::IoError("unknown cut '" + cut_name + "'");
  return ghznl::beta(set, *cut).str();
}

std::string verify_json(const std::string& set_json, const std::string& cert_json) {
  ghznl::StateSet set = ghznl::state_set_from_json(Json::parse(set_json));
  ghznl::Certificate cert = ghznl::certificate_from_json(Json::parse(cert_json));
  ghznl::VerifyOutcome out = ghznl::verify_certificate(set, cert);
  return ghznl::verify_outcome_to_json(out, cert).dump();
}

std::string bound_json(const std::string& family_json) {
  Json j = Json::parse(family_json);
  ghznl::GhzLikeSet family = j.contains("d") ? ghznl::ghzlike_set_from_json(j)
                                             : ghznl::to_ghzlike(ghznl::state_set_from_json(j));
  auto bad = ghznl::find_nonorthogonal_pair(family);
  if (bad)
    throw ghznl::IoError("states " + std::to_string(bad->first) + " and " +
                         std::to_string(bad->second) + " are not orthogonal");
  Json report;
  report["size"] = family.size();
  report["local_dimension"] = family.d;
  report["weight"] = family.w;
  report["bound"] = ghznl::rational_to_json(ghznl::cardinality_bound(family.d, family.w));
  report["certified"] = ghznl::certify_by_bound(family);
  return report.dump();
}

std::string protocol_json(const std::string& set_json) {
  ghznl::StateSet set = ghznl::state_set_from_json(Json::parse(set_json));
  return ghznl::protocol_result_to_json(ghznl::lattice_protocol(set)).dump();
}

std::string search_json(const std::string& set_json, std::optional<std::size_t> target_size,
                        std::uint64_t budget, bool exhaustive, bool prefilter) {
  ghznl::StateSet set = ghznl::state_set_from_json(Json::parse(set_json));
  ghznl::SearchOptions opts;
  opts.strategy = exhaustive ? ghznl::SearchStrategy::exhaustive : ghznl::SearchStrategy::greedy;
  opts.target_size = target_size;
  opts.budget = budget;
  opts.float_prefilter = prefilter;
  return ghznl::search_report_to_json(ghznl::search_min_subsets(set, opts), set).dump();
}

std::string fixture_json(const std::string& name) {
  std::string file = name;
  if (file.size() < 5 || file.substr(file.size() - 5) != ".json") file += ".json";
  for (const auto& [fname, doc] : ghznl::bundled_fixture_files())
    if (fname == file) return doc.dump();
  throw ghznl::IoError("unknown fixture '" + name + "'");
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> names;
  for (const auto& [fname, doc] : ghznl::bundled_fixture_files())
    names.push_back(fname.substr(0, fname.size() - 5));
  return names;
}

std::string suite_json() {
  return ghznl::suite_report_to_json(ghznl::run_reference_suite(nullptr)).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact PPT-discrimination toolkit (JSON-string entry points)";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ghznl::IoError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def("certify_json", &certify_json, py::arg("state_set"),
        "Exact discrimination values at all three cuts, with verdict");
  m.def("beta_json", &beta_json, py::arg("state_set"), py::arg("cut"),
        "Exact discrimination value at one cut, as a rational string");
  m.def("verify_json", &verify_json, py::arg("state_set"), py::arg("certificate"),
        "Check a certificate: feasibility and stated value");
  m.def("bound_json", &bound_json, py::arg("family"),
        "Counting certificate: size vs d^3/w for an orthogonal family");
  m.def("protocol_json", &protocol_json, py::arg("state_set"),
        "One-way parity/identify protocol transcript per cut");
  m.def("search_json", &search_json, py::arg("state_set"), py::arg("target_size") = std::nullopt,
        py::arg("budget") = std::uint64_t{100000}, py::arg("exhaustive") = false,
        py::arg("prefilter") = true, "Find minimal certified subsets");
  m.def("fixture_json", &fixture_json, py::arg("name"), "One bundled fixture document");
  m.def("fixture_names", &fixture_names, "Names of the bundled fixtures");
  m.def("cardinality_bound", [](int d, int w) { return ghznl::cardinality_bound(d, w).str(); },
        py::arg("d"), py::arg("w"), "d^3/w as a rational string");
  m.def("suite_json", &suite_json, "Run the full acceptance suite (slow)");
}
