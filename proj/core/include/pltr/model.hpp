#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pltr {

using Slot = int;
using Energy = long long;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A schedulable task: `volume` unit slots of work inside the inclusive
/// execution interval [release, deadline].
struct Job {
    std::string id;
    int release = 0;
    int deadline = 0;
    int volume = 0;

    int window() const { return deadline - release + 1; }
    bool covers(int t) const { return t >= release && t <= deadline; }
};

/// Immutable problem input: job set, processor count, wake-up energy.
struct Instance {
    std::vector<Job> jobs;
    int m = 1;
    Energy q = 0;
    int offset = 0;  // original minimum release, kept for output

    bool empty() const { return jobs.empty(); }

    /// Last deadline d. Throws on an empty instance.
    int horizon_end() const;

    /// Number of slots |T| = d + 1.
    int horizon_size() const { return horizon_end() + 1; }

    long long total_volume() const;

    /// Effective processor count m' = min(m, n); more than n processors
    /// can never be busy at the same time.
    int effective_m() const {
        return std::min<long long>(m, static_cast<long long>(jobs.size()));
    }

    const Job* find_job(const std::string& id) const;

    /// Shift all times so that the earliest release is 0; remembers the
    /// shift in `offset`.
    void normalize();
};

struct Violation {
    std::string message;
    std::string job_id;    // empty for instance-level violations
    bool structural = true;  // false: the job cannot fit its window
                             // (an infeasibility, not a malformed input)
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    bool structurally_ok() const;
};

ValidationReport validate_instance(const Instance& instance);

struct Horizon {
    int d;
    int size;
};

/// Last deadline and slot count; throws Error("empty instance") when
/// there are no jobs.
Horizon horizon(const Instance& instance);

/// One maximal run of slots with constant lower/upper busy-processor
/// bounds. Covers [begin, end).
struct Segment {
    int begin = 0;
    int end = 0;
    int lower = 0;
    int upper = 0;
};

/// Piecewise-constant per-slot bounds l_t <= vol(t) <= m_t over [0, end).
/// PLTR only ever tightens: uppers decrease, lowers increase.
class BoundProfile {
public:
    BoundProfile() = default;

    static BoundProfile uniform(int end, int lower, int upper);

    bool defined() const { return !segments_.empty(); }
    int end() const { return segments_.empty() ? 0 : segments_.back().end; }

    int lower_at(int t) const;
    int upper_at(int t) const;

    /// m_t <- min(m_t, value) on [from, to). Rejects raises.
    void clamp_upper(int from, int to, int value);

    /// l_t <- max(l_t, value) on [from, to). Rejects drops.
    void raise_lower(int from, int to, int value);

    long long sum_lower() const;
    long long sum_upper() const;

    /// l_t <= u_t everywhere.
    bool consistent() const;
    bool consistent_on(int from, int to) const;

    const std::vector<Segment>& segments() const { return segments_; }

    /// Segment starts plus the horizon end.
    std::vector<int> breakpoints() const;

private:
    void split_at(int t);
    void merge();

    std::vector<Segment> segments_;  // sorted, tiling [0, end)
};

/// Per-slot assignment of jobs to processors (1-based processor ids).
struct Schedule {
    int horizon = 0;
    std::vector<std::vector<std::pair<int, std::string>>> slots;

    static Schedule empty_over(int horizon_size);

    int volume_at(int t) const;

    /// k -> sorted busy slots.
    std::map<int, std::vector<int>> busy_slots_by_processor() const;
};

/// Stair property: at every slot the busy processors are exactly
/// {1, ..., vol(t)}.
bool check_stair(const Schedule& schedule);

struct CheckReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Verifies schedule well-formedness against the instance and, when
/// given, the per-slot bounds l_t <= vol(t) <= m_t.
CheckReport check_valid(const Schedule& schedule, const Instance& instance,
                        const BoundProfile* bounds = nullptr);

struct ProcessorCost {
    int k = 0;
    Energy busy = 0;
    Energy interior_idle = 0;
    Energy powerup = 0;
    Energy total() const { return busy + interior_idle + powerup; }
};

struct CostBreakdown {
    std::vector<ProcessorCost> per_processor;
    Energy busy = 0;
    Energy idle = 0;
    Energy on = 0;
    Energy off = 0;
    Energy total = 0;
};

/// Energy of a schedule under wake-up cost q. Computes both the
/// busy/idle and the on/off decomposition and requires them to agree.
/// Leading and trailing idle cost nothing; the first power-up costs q;
/// interior idle intervals cost min(|I|, q) each.
CostBreakdown compute_cost(const Schedule& schedule, Energy q);

}  // namespace pltr
