#pragma once

#include <string>
#include <vector>

#include <json.hpp>  // vendored nlohmann/json single header

#include "szlab/enumerate.hpp"
#include "szlab/error.hpp"
#include "szlab/indices.hpp"
#include "szlab/transforms.hpp"

namespace szlab {

// All serialization lives here; nothing else in the library does I/O or
// formatting. Q4 values render as exact "<quarters>/4" strings everywhere;
// JSON additionally carries a decimal convenience field. elapsed_seconds is
// informational and deliberately absent from every rendering so that reports
// are byte-identical across runs and worker counts.

enum class Format { Json, Csv, Text };
Format parse_format(const std::string& name);  // "json" | "csv" | "text"
const char* format_name(Format f);

using Json = nlohmann::ordered_json;

Json json_of(const Q4& q);  // {"q4": "p/4", "decimal": ...}
Q4 q4_from_json(const Json& j);

Json json_of(const IndexSuite& s);
Json json_of(const DecompositionReport& r);
Json json_of(const TransformReport& r);
Json json_of(const SearchReport& r);
Json json_of(const VerificationReport& r);

IndexSuite index_suite_from_json(const Json& j);
DecompositionReport decomposition_from_json(const Json& j);
TransformReport transform_from_json(const Json& j);
SearchReport search_from_json(const Json& j);
VerificationReport verification_from_json(const Json& j);

// Canonical-field equality (elapsed_seconds ignored), used by the round-trip
// tests and by callers that diff reports.
bool same_report(const IndexSuite& a, const IndexSuite& b);
bool same_report(const DecompositionReport& a, const DecompositionReport& b);
bool same_report(const TransformReport& a, const TransformReport& b);
bool same_report(const SearchReport& a, const SearchReport& b);
bool same_report(const VerificationReport& a, const VerificationReport& b);

// Rendering. JSON output is pretty-printed with a trailing newline; CSV has a
// header row; text is aligned key/value lines (plus a row table for
// verification reports).
std::string render(const IndexSuite& s, Format f);
std::string render(const DecompositionReport& r, Format f);
std::string render(const TransformReport& r, Format f);
std::string render(const SearchReport& r, Format f);
std::string render(const VerificationReport& r, Format f);

// Batches share one header row in CSV and form a JSON array.
std::string render_batch(const std::vector<DecompositionReport>& rs, Format f);
std::string render_batch(const std::vector<TransformReport>& rs, Format f);

// Machine-readable failure object: {"error": {"kind": ..., "message": ...}}.
Json json_of(const Error& e);
std::string render_error(const Error& e, Format f);

}  // namespace szlab
