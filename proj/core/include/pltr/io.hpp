#pragma once

#include <string>

#include "pltr/flow.hpp"
#include "pltr/model.hpp"

namespace pltr::io {

/// Parses instance JSON
/// {"q": int, "m": int, "jobs": [{"id", "release", "deadline", "volume"}]}
/// and normalizes releases to start at 0. Throws Error on malformed input.
Instance parse_instance(const std::string& text);
Instance load_instance(const std::string& path);

/// Canonical serialization: sorted keys, fixed indentation, trailing
/// newline. Times are written with the original offset restored.
std::string instance_to_json(const Instance& instance);

/// Bounds JSON: {"segments": [{"begin", "end", "lower", "upper"}]}.
BoundProfile parse_bounds(const std::string& text);
BoundProfile load_bounds(const std::string& path);
std::string bounds_to_json(const BoundProfile& bounds);

/// Schedule JSON:
/// {"processors": [{"k": int, "slots": [{"t": int, "job": str}]}],
///  "cost": {...breakdown..., "q": int}}.
std::string schedule_to_json(const Schedule& schedule, const CostBreakdown& cost,
                             Energy q, int offset = 0);

struct ParsedSchedule {
    Schedule schedule;
    Energy q = 0;
};
ParsedSchedule parse_schedule(const std::string& text);
ParsedSchedule load_schedule(const std::string& path);

std::string certificate_to_json(const CutCertificate& certificate);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace pltr::io
