#include "ghznl/io.hpp"

#include <fstream>

#include "ghznl/fixtures.hpp"

namespace ghznl {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw IoError(msg); }

const Json& need(const Json& j, const char* key, const std::string& what) {
  if (!j.is_object()) fail(what + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(what + ": missing key '" + key + "'");
  return *it;
}

int need_int(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) fail(what + ": expected an integer");
  return j.get<int>();
}

}  // namespace

Json rational_to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j, const std::string& what) {
  try {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return Rational::parse(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    fail(what + ": " + e.what());
  }
  fail(what + ": expected a rational as \"p/q\" or an integer");
}

Json state_set_to_json(const StateSet& set) {
  Json j;
  j["t"] = set.t();
  Json states = Json::array();
  for (const LatticeIndex& v : set.states()) {
    Json levels = Json::array();
    for (GhzIndex g : v.levels()) levels.push_back(g.value());
    states.push_back(std::move(levels));
  }
  j["states"] = std::move(states);
  return j;
}

StateSet state_set_from_json(const Json& j) {
  int t = need_int(need(j, "t", "state set"), "state set: t");
  if (t < 1) fail("state set: t must be at least 1");
  const Json& states = need(j, "states", "state set");
  if (!states.is_array() || states.empty()) fail("state set: 'states' must be a nonempty array");
  std::vector<LatticeIndex> out;
  out.reserve(states.size());
  for (std::size_t k = 0; k < states.size(); ++k) {
    const Json& st = states[k];
    if (!st.is_array() || static_cast<int>(st.size()) != t)
      fail("state set: state " + std::to_string(k) + " must be an array of " + std::to_string(t) +
           " levels");
    std::vector<GhzIndex> levels;
    levels.reserve(st.size());
    for (const Json& lv : st) {
      int v = need_int(lv, "state set: level value");
      if (v < 0 || v > 7) fail("state set: level value " + std::to_string(v) + " out of range 0..7");
      levels.emplace_back(v);
    }
    out.emplace_back(std::move(levels));
  }
  try {
    return StateSet(t, std::move(out));
  } catch (const std::invalid_argument& e) {
    fail(std::string("state set: ") + e.what());
  }
}

namespace {

Json diag_to_json(const DiagOperator& d) {
  Json arr = Json::array();
  for (const Rational& c : d.c) arr.push_back(rational_to_json(c));
  return arr;
}

DiagOperator diag_from_json(const Json& j, int t, const std::string& what) {
  DiagOperator d = DiagOperator::zero(t);
  if (!j.is_array() || j.size() != d.dim())
    fail(what + ": expected an array of " + std::to_string(d.dim()) + " coefficients");
  for (std::size_t i = 0; i < d.dim(); ++i)
    d.c[i] = rational_from_json(j[i], what + "[" + std::to_string(i) + "]");
  return d;
}

int levels_from_dim(std::size_t dim, const std::string& what) {
  int t = 0;
  std::size_t p = 1;
  while (p < dim) {
    p *= 8;
    ++t;
  }
  if (p != dim || t < 1) fail(what + ": length must be a power of 8");
  return t;
}

}  // namespace

Json diag_operator_to_json(const DiagOperator& d) { return diag_to_json(d); }

Json certificate_to_json(const Certificate& cert) {
  Json j;
  j["cut"] = std::string(to_string(cert.cut));
  j["value"] = rational_to_json(cert.claimed_value);
  j["y"] = diag_to_json(cert.y);
  Json qs = Json::array();
  for (const DiagOperator& q : cert.qs) qs.push_back(diag_to_json(q));
  j["qs"] = std::move(qs);
  return j;
}

Certificate certificate_from_json(const Json& j) {
  Certificate cert;
  const Json& cut = need(j, "cut", "certificate");
  if (!cut.is_string()) fail("certificate: 'cut' must be a string");
  auto parsed = parse_bipartition(cut.get<std::string>());
  if (!parsed) fail("certificate: unknown cut '" + cut.get<std::string>() + "'");
  cert.cut = *parsed;
  cert.claimed_value = rational_from_json(need(j, "value", "certificate"), "certificate: value");
  const Json& y = need(j, "y", "certificate");
  if (!y.is_array()) fail("certificate: 'y' must be an array");
  int t = levels_from_dim(y.size(), "certificate: y");
  cert.y = diag_from_json(y, t, "certificate: y");
  const Json& qs = need(j, "qs", "certificate");
  if (!qs.is_array() || qs.empty()) fail("certificate: 'qs' must be a nonempty array");
  for (std::size_t k = 0; k < qs.size(); ++k)
    cert.qs.push_back(diag_from_json(qs[k], t, "certificate: qs[" + std::to_string(k) + "]"));
  return cert;
}

Json ghzlike_set_to_json(const GhzLikeSet& set) {
  Json j;
  j["d"] = set.d;
  j["w"] = set.w;
  Json states = Json::array();
  for (const GhzLikeState& st : set.states) {
    Json s;
    Json terms = Json::array();
    for (const auto& term : st.terms) terms.push_back({term[0], term[1], term[2]});
    Json phases = Json::array();
    for (const GhzPhase& p : st.phases) phases.push_back(p.str());
    s["terms"] = std::move(terms);
    s["phases"] = std::move(phases);
    states.push_back(std::move(s));
  }
  j["states"] = std::move(states);
  return j;
}

GhzLikeSet ghzlike_set_from_json(const Json& j) {
  GhzLikeSet set;
  set.d = need_int(need(j, "d", "state family"), "state family: d");
  set.w = need_int(need(j, "w", "state family"), "state family: w");
  const Json& states = need(j, "states", "state family");
  if (!states.is_array() || states.empty())
    fail("state family: 'states' must be a nonempty array");
  for (std::size_t k = 0; k < states.size(); ++k) {
    const std::string what = "state family: state " + std::to_string(k);
    const Json& s = states[k];
    GhzLikeState st;
    st.d = set.d;
    const Json& terms = need(s, "terms", what);
    const Json& phases = need(s, "phases", what);
    if (!terms.is_array() || !phases.is_array() || terms.size() != phases.size())
      fail(what + ": 'terms' and 'phases' must be arrays of equal length");
    for (const Json& term : terms) {
      if (!term.is_array() || term.size() != 3) fail(what + ": each term needs three digits");
      st.terms.push_back({need_int(term[0], what), need_int(term[1], what), need_int(term[2], what)});
    }
    for (const Json& ph : phases) {
      if (!ph.is_string()) fail(what + ": phases must be strings");
      try {
        st.phases.push_back(GhzPhase::parse(ph.get<std::string>()));
      } catch (const std::invalid_argument& e) {
        fail(what + ": " + e.what());
      }
    }
    set.states.push_back(std::move(st));
  }
  try {
    set.validate();
  } catch (const std::invalid_argument& e) {
    fail(std::string("state family: ") + e.what());
  }
  return set;
}

Json verdict_to_json(const Verdict& v) {
  Json j;
  Json betas;
  for (std::size_t i = 0; i < 3; ++i)
    betas[std::string(to_string(all_bipartitions[i]))] = rational_to_json(v.betas[i]);
  j["betas"] = std::move(betas);
  switch (v.kind) {
    case Verdict::Kind::certified: j["verdict"] = "certified"; break;
    case Verdict::Kind::distinguishable: j["verdict"] = "distinguishable"; break;
    case Verdict::Kind::inconclusive: j["verdict"] = "inconclusive"; break;
  }
  if (v.cut) j["distinguishable_cut"] = std::string(to_string(*v.cut));
  return j;
}

Json verify_outcome_to_json(const VerifyOutcome& out, const Certificate& cert) {
  Json j;
  j["cut"] = std::string(to_string(cert.cut));
  j["claimed_value"] = rational_to_json(cert.claimed_value);
  j["computed_value"] = rational_to_json(out.value);
  j["feasible"] = out.feasible;
  j["matches_claim"] = out.matches_claim;
  j["detail"] = out.detail;
  return j;
}

Json transcript_to_json(const TranscriptNode& node) {
  Json j;
  switch (node.kind) {
    case TranscriptNode::Kind::parity: j["kind"] = "parity"; break;
    case TranscriptNode::Kind::identify: j["kind"] = "identify"; break;
    case TranscriptNode::Kind::leaf: j["kind"] = "leaf"; break;
  }
  if (node.kind != TranscriptNode::Kind::leaf) j["level"] = node.level;
  Json states = Json::array();
  for (const LatticeIndex& v : node.states) {
    Json levels = Json::array();
    for (GhzIndex g : v.levels()) levels.push_back(g.value());
    states.push_back(std::move(levels));
  }
  j["states"] = std::move(states);
  if (node.kind == TranscriptNode::Kind::leaf) {
    j["resolved"] = node.resolved;
    j["note"] = node.note;
  } else {
    Json children = Json::array();
    for (const TranscriptNode& c : node.children) children.push_back(transcript_to_json(c));
    j["children"] = std::move(children);
  }
  return j;
}

Json protocol_result_to_json(const ProtocolResult& res) {
  Json j;
  j["distinguishing_cut"] = res.cut ? Json(std::string(to_string(*res.cut))) : Json(nullptr);
  Json attempts = Json::array();
  for (const ProtocolOutcome& a : res.attempts) {
    Json att;
    att["cut"] = std::string(to_string(a.cut));
    att["success"] = a.success;
    att["transcript"] = transcript_to_json(a.root);
    attempts.push_back(std::move(att));
  }
  j["attempts"] = std::move(attempts);
  return j;
}

Json search_cursor_to_json(const SearchCursor& cur) {
  Json j;
  j["size"] = cur.size;
  j["rank"] = cur.rank;
  return j;
}

SearchCursor search_cursor_from_json(const Json& j) {
  SearchCursor cur;
  cur.size = static_cast<std::size_t>(need_int(need(j, "size", "cursor"), "cursor: size"));
  const Json& rank = need(j, "rank", "cursor");
  if (!rank.is_number_unsigned() && !rank.is_number_integer())
    fail("cursor: rank must be an integer");
  cur.rank = rank.get<std::uint64_t>();
  return cur;
}

Json search_report_to_json(const SearchReport& rep, const StateSet& candidates) {
  Json j;
  j["strategy"] = rep.strategy == SearchStrategy::exhaustive ? "exhaustive" : "greedy";
  j["lp_solves"] = rep.lp_solves;
  j["examined"] = rep.examined;
  j["complete"] = rep.complete;
  if (rep.cursor) j["cursor"] = search_cursor_to_json(*rep.cursor);
  Json found = Json::array();
  for (const CertifiedSubset& c : rep.found) {
    Json f;
    Json idx = Json::array();
    for (std::size_t i : c.indices) idx.push_back(i);
    f["indices"] = std::move(idx);
    f["states"] = state_set_to_json(candidates.subset(c.indices))["states"];
    Json betas;
    for (std::size_t i = 0; i < 3; ++i)
      betas[std::string(to_string(all_bipartitions[i]))] = rational_to_json(c.betas[i]);
    f["betas"] = std::move(betas);
    found.push_back(std::move(f));
  }
  j["found"] = std::move(found);
  return j;
}

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    fail(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) fail("cannot open " + path + " for writing");
  out << dump_canonical(j);
  if (!out) fail("failed writing " + path);
}

std::vector<std::pair<std::string, Json>> bundled_fixture_files() {
  std::vector<std::pair<std::string, Json>> files;
  files.emplace_back("ghz_basis.json", state_set_to_json(fixtures::ghz_basis()));
  files.emplace_back("s5.json", state_set_to_json(fixtures::s5()));
  files.emplace_back("s8.json", state_set_to_json(fixtures::s8()));
  files.emplace_back("s10.json", state_set_to_json(fixtures::s10()));
  files.emplace_back("s16.json", state_set_to_json(fixtures::s16()));
  files.emplace_back("l16.json", state_set_to_json(fixtures::l16()));
  files.emplace_back("n26.json", ghzlike_set_to_json(fixtures::n26()));
  auto cut_tag = [](Bipartition cut) {
    switch (cut) {
      case Bipartition::a_bc: return "a";
      case Bipartition::b_ca: return "b";
      case Bipartition::c_ab: return "c";
    }
    return "";
  };
  for (Bipartition cut : all_bipartitions) {
    files.emplace_back(std::string("s5_cert_") + cut_tag(cut) + ".json",
                       certificate_to_json(fixtures::s5_certificate(cut)));
    files.emplace_back(std::string("s8_cert_") + cut_tag(cut) + ".json",
                       certificate_to_json(fixtures::s8_certificate(cut)));
    files.emplace_back(std::string("s10_cert_") + cut_tag(cut) + ".json",
                       certificate_to_json(fixtures::s10_certificate(cut)));
  }
  return files;
}

}  // namespace ghznl
