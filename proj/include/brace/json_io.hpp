#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "brace/axioms.hpp"
#include "brace/free_bm.hpp"
#include "brace/free_c.hpp"
#include "brace/hom.hpp"
#include "brace/lambda_builder.hpp"
#include "brace/series.hpp"

namespace brace {

using Json = nlohmann::json;

/// Integers that fit in int64 become JSON numbers, larger ones decimal strings.
Json int_to_json(const Int& value);
/// Accepts JSON integers and decimal strings; throws Error(MalformedJson).
Int int_from_json(const Json& value);

/// Reads and parses a file; Error(UnreadableFile) or Error(MalformedJson).
Json read_json_file(const std::string& path);
Json parse_json_text(const std::string& text);

/// {"order": n, "add": [[...]], "mul": [[...]]}
Json to_json(const FiniteBrace& brace);
FiniteBrace brace_from_json(const Json& doc);
/// A single brace object, an array of them, or an object with a "braces"
/// array (the output of enumeration).
std::vector<FiniteBrace> braces_from_json(const Json& doc);

/// {"order": n, "add": [[...]], "lambda": [[...]]}; "group": "2x2" may be
/// given instead of "add".
Json to_json(const LambdaAction& action);
LambdaAction action_from_json(const Json& doc);

/// {"0": 1, "-1": -2}
Json to_json(const FreeCElement& x);
FreeCElement free_c_from_json(const Json& doc);

/// [n_1, ..., n_m]; when expected_m is set a different length is Error(RankMismatch).
Json to_json(const BmElement& x);
BmElement bm_from_json(const Json& doc, std::optional<std::size_t> expected_m = std::nullopt);

Json to_json(const AdditiveSubgroup& group);
Json to_json(const LawCheck& law);
Json to_json(const AxiomReport& report);
Json to_json(const ActionReport& report);
Json to_json(const Rn2Conditions& conditions);
Json to_json(const SeriesReport& report);
Json to_json(const HomReport& report);
/// {"summary": {signature, candidates_scanned, valid_actions, distinct_braces}, "braces": [...]}
Json to_json(const EnumerationResult& result);

} // namespace brace
