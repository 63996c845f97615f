#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ghznl/bounds.hpp"
#include "ghznl/certifier.hpp"
#include "ghznl/protocols.hpp"
#include "ghznl/search.hpp"

namespace ghznl {

// Insertion-ordered documents so every serializer below is byte-stable.
using Json = nlohmann::ordered_json;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Rationals travel as strings "p" or "p/q"; integers are accepted on input.
Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j, const std::string& what);

// {"t": 2, "states": [[1,0],[2,0],...]}
Json state_set_to_json(const StateSet& set);
StateSet state_set_from_json(const Json& j);

// {"cut": "A|BC", "value": "4/5", "y": [... 8^t ...], "qs": [[...], ...]}
Json certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const Json& j);

// Flat coefficient array in rank order, entries as "p/q" strings.
Json diag_operator_to_json(const DiagOperator& d);

// {"d": 3, "w": 2, "states": [{"terms": [[0,1,2],...], "phases": ["+1",...]}, ...]}
Json ghzlike_set_to_json(const GhzLikeSet& set);
GhzLikeSet ghzlike_set_from_json(const Json& j);

Json verdict_to_json(const Verdict& v);
Json verify_outcome_to_json(const VerifyOutcome& out, const Certificate& cert);
Json transcript_to_json(const TranscriptNode& node);
Json protocol_result_to_json(const ProtocolResult& res);
Json search_report_to_json(const SearchReport& rep, const StateSet& candidates);
Json search_cursor_to_json(const SearchCursor& cur);
SearchCursor search_cursor_from_json(const Json& j);

// Canonical text form: two-space indent plus trailing newline. Equal
// documents serialize to identical bytes.
std::string dump_canonical(const Json& j);
Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

// Every fixture this library publishes, as (file name, document) pairs:
// the named state sets, the generalized 26-state set, and the certificate
// files for the 5-, 8-, and 10-state sets at each cut.
std::vector<std::pair<std::string, Json>> bundled_fixture_files();

}  // namespace ghznl
