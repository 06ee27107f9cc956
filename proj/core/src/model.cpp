#include "pltr/model.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <numeric>
#include <set>

namespace pltr {

int Instance::horizon_end() const {
    if (jobs.empty()) throw Error("empty instance");
    int d = 0;
    for (const auto& j : jobs) d = std::max(d, j.deadline);
    return d;
}

long long Instance::total_volume() const {
    long long p = 0;
    for (const auto& j : jobs) p += j.volume;
    return p;
}

const Job* Instance::find_job(const std::string& id) const {
    for (const auto& j : jobs)
        if (j.id == id) return &j;
    return nullptr;
}

void Instance::normalize() {
    if (jobs.empty()) return;
    int shift = std::numeric_limits<int>::max();
    for (const auto& j : jobs) shift = std::min(shift, j.release);
    if (shift == 0) return;
    for (auto& j : jobs) {
        j.release -= shift;
        j.deadline -= shift;
    }
    offset += shift;
}

bool ValidationReport::structurally_ok() const {
    for (const auto& v : violations)
        if (v.structural) return false;
    return true;
}

ValidationReport validate_instance(const Instance& instance) {
    ValidationReport report;
    auto flag = [&](std::string msg, std::string id = "", bool structural = true) {
        report.violations.push_back({std::move(msg), std::move(id), structural});
    };

    if (instance.m < 1) flag("processor count must be at least 1");
    if (instance.q < 0) flag("wake-up cost must be non-negative");

    std::set<std::string> seen;
    for (const auto& j : instance.jobs) {
        if (!seen.insert(j.id).second) flag("duplicate id", j.id);
        if (j.release < 0) flag("negative release", j.id);
        if (j.deadline < j.release) flag("deadline before release", j.id);
        if (j.volume < 1) flag("volume must be at least 1", j.id);
        if (j.volume >= 1 && j.deadline >= j.release && j.volume > j.window())
            flag("volume exceeds execution interval", j.id, /*structural=*/false);
    }
    return report;
}

Horizon horizon(const Instance& instance) {
    int d = instance.horizon_end();
    return {d, d + 1};
}

BoundProfile BoundProfile::uniform(int end, int lower, int upper) {
    BoundProfile p;
    if (end > 0) p.segments_.push_back({0, end, lower, upper});
    return p;
}

int BoundProfile::lower_at(int t) const {
    for (const auto& s : segments_)
        if (t >= s.begin && t < s.end) return s.lower;
    throw Error("slot outside bound profile");
}

int BoundProfile::upper_at(int t) const {
    for (const auto& s : segments_)
        if (t >= s.begin && t < s.end) return s.upper;
    throw Error("slot outside bound profile");
}

void BoundProfile::split_at(int t) {
    if (t <= 0 || t >= end()) return;
    for (std::size_t i = 0; i < segments_.size(); ++i) {
        Segment& s = segments_[i];
        if (t > s.begin && t < s.end) {
            Segment right = s;
            right.begin = t;
            s.end = t;
            segments_.insert(segments_.begin() + static_cast<long>(i) + 1, right);
            return;
        }
    }
}

void BoundProfile::merge() {
    std::vector<Segment> merged;
    for (const auto& s : segments_) {
        if (!merged.empty() && merged.back().lower == s.lower &&
            merged.back().upper == s.upper && merged.back().end == s.begin) {
            merged.back().end = s.end;
        } else {
            merged.push_back(s);
        }
    }
    segments_ = std::move(merged);
}

void BoundProfile::clamp_upper(int from, int to, int value) {
    if (from >= to) return;
    if (from < 0 || to > end()) throw Error("range outside bound profile");
    split_at(from);
    split_at(to);
    for (auto& s : segments_)
        if (s.begin >= from && s.end <= to) s.upper = std::min(s.upper, value);
    merge();
}

void BoundProfile::raise_lower(int from, int to, int value) {
    if (from >= to) return;
    if (from < 0 || to > end()) throw Error("range outside bound profile");
    split_at(from);
    split_at(to);
    for (auto& s : segments_)
        if (s.begin >= from && s.end <= to) s.lower = std::max(s.lower, value);
    merge();
}

long long BoundProfile::sum_lower() const {
    long long sum = 0;
    for (const auto& s : segments_)
        sum += static_cast<long long>(s.lower) * (s.end - s.begin);
    return sum;
}

long long BoundProfile::sum_upper() const {
    long long sum = 0;
    for (const auto& s : segments_)
        sum += static_cast<long long>(s.upper) * (s.end - s.begin);
    return sum;
}

bool BoundProfile::consistent() const {
    for (const auto& s : segments_)
        if (s.lower > s.upper || s.lower < 0) return false;
    return true;
}

bool BoundProfile::consistent_on(int from, int to) const {
    for (const auto& s : segments_) {
        if (s.end <= from || s.begin >= to) continue;
        if (s.lower > s.upper || s.lower < 0) return false;
    }
    return true;
}

std::vector<int> BoundProfile::breakpoints() const {
    std::vector<int> points;
    for (const auto& s : segments_) points.push_back(s.begin);
    points.push_back(end());
    return points;
}

Schedule Schedule::empty_over(int horizon_size) {
    Schedule s;
    s.horizon = horizon_size;
    s.slots.resize(static_cast<std::size_t>(std::max(0, horizon_size)));
    return s;
}

int Schedule::volume_at(int t) const {
    if (t < 0 || t >= horizon) return 0;
    return static_cast<int>(slots[static_cast<std::size_t>(t)].size());
}

std::map<int, std::vector<int>> Schedule::busy_slots_by_processor() const {
    std::map<int, std::vector<int>> busy;
    for (int t = 0; t < horizon; ++t)
        for (const auto& [k, job] : slots[static_cast<std::size_t>(t)])
            busy[k].push_back(t);
    for (auto& [k, v] : busy) std::sort(v.begin(), v.end());
    return busy;
}

bool check_stair(const Schedule& schedule) {
    for (int t = 0; t < schedule.horizon; ++t) {
        std::set<int> procs;
        for (const auto& [k, job] : schedule.slots[static_cast<std::size_t>(t)])
            procs.insert(k);
        int expected = 1;
        for (int k : procs)
            if (k != expected++) return false;
    }
    return true;
}

CheckReport check_valid(const Schedule& schedule, const Instance& instance,
                        const BoundProfile* bounds) {
    CheckReport report;
    auto flag = [&](const std::string& msg) { report.violations.push_back(msg); };

    std::map<std::string, std::vector<int>> placements;
    for (int t = 0; t < schedule.horizon; ++t) {
        std::set<int> procs;
        std::set<std::string> jobs_here;
        for (const auto& [k, job] : schedule.slots[static_cast<std::size_t>(t)]) {
            if (!procs.insert(k).second)
                flag("processor " + std::to_string(k) + " used twice at slot " +
                     std::to_string(t));
            if (!jobs_here.insert(job).second)
                flag("job " + job + " scheduled twice at slot " + std::to_string(t));
            placements[job].push_back(t);
        }
        if (bounds != nullptr) {
            int v = schedule.volume_at(t);
            if (v < bounds->lower_at(t))
                flag("slot " + std::to_string(t) + " below lower bound");
            if (v > bounds->upper_at(t))
                flag("slot " + std::to_string(t) + " above upper bound");
        }
    }

    for (const auto& job : instance.jobs) {
        auto it = placements.find(job.id);
        int placed = it == placements.end() ? 0 : static_cast<int>(it->second.size());
        if (placed < job.volume)
            flag("volume deficit for job " + job.id + " (" + std::to_string(placed) +
                 " of " + std::to_string(job.volume) + ")");
        if (placed > job.volume)
            flag("volume surplus for job " + job.id);
        if (it != placements.end())
            for (int t : it->second)
                if (!job.covers(t))
                    flag("job " + job.id + " at slot " + std::to_string(t) +
                         " outside execution interval");
    }
    for (const auto& [id, ts] : placements)
        if (instance.find_job(id) == nullptr) flag("unknown job " + id);
    return report;
}

namespace {

ProcessorCost processor_cost(int k, const std::vector<int>& busy, Energy q) {
    ProcessorCost cost;
    cost.k = k;
    if (busy.empty()) return cost;
    cost.busy = static_cast<Energy>(busy.size());
    cost.powerup = q;
    for (std::size_t i = 1; i < busy.size(); ++i) {
        Energy gap = busy[i] - busy[i - 1] - 1;
        if (gap > 0) cost.interior_idle += std::min(gap, q);
    }
    return cost;
}

/// On/off view: busy slots plus interior gaps of length <= q are merged
/// into on-intervals; each on-interval pays q to power up.
std::pair<Energy, Energy> on_off_cost(const std::vector<int>& busy, Energy q) {
    if (busy.empty()) return {0, 0};
    Energy on = 0;
    Energy intervals = 1;
    int start = busy.front();
    int prev = busy.front();
    for (std::size_t i = 1; i < busy.size(); ++i) {
        Energy gap = busy[i] - prev - 1;
        if (gap > q) {
            on += prev - start + 1;
            ++intervals;
            start = busy[i];
        }
        prev = busy[i];
    }
    on += prev - start + 1;
    return {on, intervals * q};
}

}  // namespace

CostBreakdown compute_cost(const Schedule& schedule, Energy q) {
    CostBreakdown breakdown;
    for (const auto& [k, busy] : schedule.busy_slots_by_processor()) {
        ProcessorCost cost = processor_cost(k, busy, q);
        auto [on, off] = on_off_cost(busy, q);
        if (cost.total() != on + off)
            throw Error("cost views disagree for processor " + std::to_string(k));
        breakdown.busy += cost.busy;
        breakdown.idle += cost.interior_idle;
        breakdown.on += on;
        breakdown.off += off;
        breakdown.total += cost.total();
        breakdown.per_processor.push_back(cost);
    }
    assert(breakdown.total == breakdown.on + breakdown.off);
    return breakdown;
}

}  // namespace pltr
