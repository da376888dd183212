#pragma once

#include <string>

#include <json.hpp>

#include <maxplus/matrix.hpp>
#include <maxplus/scheduling.hpp>
#include <maxplus/spectrum.hpp>

namespace maxplus::io {

using nlohmann::json;

// Exact entry encoding: JSON integer when the value is an integer, "p/q" in
// lowest terms otherwise, "-inf" for bottom. Floating-point JSON numbers are
// rejected (ParseError) — no value may pass through a double.
ExtReal entry_from_json(const json& j);
json entry_to_json(const ExtReal& v);

// { "rows": n, "cols": m, "entries": [[...], ...] }
TropMatrix matrix_from_json(const json& j);
json matrix_to_json(const TropMatrix& A);

// { "intervals": [[a, c], ...] } with finite rational endpoints.
IntervalSystem intervals_from_json(const json& j);
json intervals_to_json(const IntervalSystem& sys);

// { "durations_a": [[...], ...], "durations_b": [[...], ...] } (finite, >= 0).
ScheduleInstance instance_from_json(const json& j);
json instance_to_json(const ScheduleInstance& inst);

// File wrappers; JSON syntax errors surface as ParseError.
json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);
TropMatrix read_matrix_file(const std::string& path);
void write_matrix_file(const std::string& path, const TropMatrix& A);
IntervalSystem read_intervals_file(const std::string& path);
ScheduleInstance read_instance_file(const std::string& path);

}  // namespace maxplus::io
