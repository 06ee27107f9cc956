#include "pltr/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <tuple>

#include <json.hpp>

namespace pltr::io {

using nlohmann::json;

namespace {

json parse_or_throw(const std::string& text) {
    json parsed = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (parsed.is_discarded()) throw Error("malformed JSON");
    return parsed;
}

int require_int(const json& object, const char* key) {
    if (!object.contains(key) || !object[key].is_number_integer())
        throw Error(std::string("missing or non-integer field '") + key + "'");
    return object[key].get<int>();
}

}  // namespace

Instance parse_instance(const std::string& text) {
    json parsed = parse_or_throw(text);
    if (!parsed.is_object()) throw Error("instance must be a JSON object");

    Instance instance;
    instance.m = require_int(parsed, "m");
    instance.q = require_int(parsed, "q");
    if (!parsed.contains("jobs") || !parsed["jobs"].is_array())
        throw Error("missing 'jobs' array");
    for (const json& entry : parsed["jobs"]) {
        Job job;
        if (!entry.contains("id") || !entry["id"].is_string())
            throw Error("job without string 'id'");
        job.id = entry["id"].get<std::string>();
        job.release = require_int(entry, "release");
        job.deadline = require_int(entry, "deadline");
        job.volume = require_int(entry, "volume");
        instance.jobs.push_back(std::move(job));
    }
    instance.normalize();
    return instance;
}

Instance load_instance(const std::string& path) {
    return parse_instance(read_file(path));
}

std::string instance_to_json(const Instance& instance) {
    json jobs = json::array();
    for (const auto& job : instance.jobs) {
        jobs.push_back({{"id", job.id},
                        {"release", job.release + instance.offset},
                        {"deadline", job.deadline + instance.offset},
                        {"volume", job.volume}});
    }
    json out{{"m", instance.m}, {"q", instance.q}, {"jobs", jobs}};
    return out.dump(2) + "\n";
}

BoundProfile parse_bounds(const std::string& text) {
    json parsed = parse_or_throw(text);
    if (!parsed.contains("segments") || !parsed["segments"].is_array())
        throw Error("missing 'segments' array");

    BoundProfile profile;
    int cursor = 0;
    // Build by extending a wide uniform profile segment by segment so the
    // monotone-update invariants of BoundProfile stay internal.
    std::vector<Segment> segments;
    for (const json& entry : parsed["segments"]) {
        Segment segment;
        segment.begin = require_int(entry, "begin");
        segment.end = require_int(entry, "end");
        segment.lower = require_int(entry, "lower");
        segment.upper = require_int(entry, "upper");
        if (segment.begin != cursor)
            throw Error("bound segments must tile the horizon without gaps");
        if (segment.end <= segment.begin) throw Error("empty bound segment");
        if (segment.lower < 0 || segment.lower > segment.upper)
            throw Error("bound segment with l > m or negative lower");
        segments.push_back(segment);
        cursor = segment.end;
    }
    if (segments.empty()) throw Error("bound profile has no segments");

    int max_upper = 0;
    for (const auto& s : segments) max_upper = std::max(max_upper, s.upper);
    profile = BoundProfile::uniform(cursor, 0, max_upper);
    for (const auto& s : segments) {
        profile.clamp_upper(s.begin, s.end, s.upper);
        profile.raise_lower(s.begin, s.end, s.lower);
    }
    return profile;
}

BoundProfile load_bounds(const std::string& path) {
    return parse_bounds(read_file(path));
}

std::string bounds_to_json(const BoundProfile& bounds) {
    json segments = json::array();
    for (const auto& s : bounds.segments())
        segments.push_back({{"begin", s.begin},
                            {"end", s.end},
                            {"lower", s.lower},
                            {"upper", s.upper}});
    json out{{"segments", segments}};
    return out.dump(2) + "\n";
}

std::string schedule_to_json(const Schedule& schedule, const CostBreakdown& cost,
                             Energy q, int offset) {
    json processors = json::array();
    for (const auto& [k, busy] : schedule.busy_slots_by_processor()) {
        json slots = json::array();
        for (int t : busy) {
            for (const auto& [proc, job] :
                 schedule.slots[static_cast<std::size_t>(t)]) {
                if (proc == k)
                    slots.push_back({{"t", t + offset}, {"job", job}});
            }
        }
        processors.push_back({{"k", k}, {"slots", slots}});
    }

    json per_processor = json::array();
    for (const auto& p : cost.per_processor)
        per_processor.push_back({{"k", p.k},
                                 {"busy", p.busy},
                                 {"interior_idle", p.interior_idle},
                                 {"powerup", p.powerup}});
    json cost_json{{"busy", cost.busy}, {"idle", cost.idle},
                   {"on", cost.on},     {"off", cost.off},
                   {"total", cost.total}, {"q", q},
                   {"per_processor", per_processor}};
    json out{{"processors", processors}, {"cost", cost_json}};
    return out.dump(2) + "\n";
}

ParsedSchedule parse_schedule(const std::string& text) {
    json parsed = parse_or_throw(text);
    if (!parsed.contains("processors") || !parsed["processors"].is_array())
        throw Error("missing 'processors' array");

    ParsedSchedule result;
    int horizon = 0;
    std::vector<std::tuple<int, int, std::string>> entries;
    for (const json& proc : parsed["processors"]) {
        int k = require_int(proc, "k");
        if (!proc.contains("slots") || !proc["slots"].is_array())
            throw Error("processor without 'slots' array");
        for (const json& slot : proc["slots"]) {
            int t = require_int(slot, "t");
            if (!slot.contains("job") || !slot["job"].is_string())
                throw Error("slot without string 'job'");
            entries.emplace_back(t, k, slot["job"].get<std::string>());
            horizon = std::max(horizon, t + 1);
        }
    }
    result.schedule = Schedule::empty_over(horizon);
    std::sort(entries.begin(), entries.end());
    for (const auto& [t, k, job] : entries)
        result.schedule.slots[static_cast<std::size_t>(t)].emplace_back(k, job);

    if (parsed.contains("cost") && parsed["cost"].contains("q"))
        result.q = parsed["cost"]["q"].get<Energy>();
    return result;
}

ParsedSchedule load_schedule(const std::string& path) {
    return parse_schedule(read_file(path));
}

std::string certificate_to_json(const CutCertificate& certificate) {
    json out{{"kind", certificate.kind == CutCertificate::Kind::Deficiency
                          ? "deficiency"
                          : "excess"},
             {"Q", certificate.witness},
             {"value", certificate.value}};
    return out.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write file: " + path);
    out << content;
}

}  // namespace pltr::io
