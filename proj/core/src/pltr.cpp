#include "pltr/pltr.hpp"

#include <algorithm>
#include <functional>

namespace pltr {

namespace {

/// Largest t' in [t, limit] whose restriction keeps the instance
/// feasible. `restrict` applies the trial tightening on [t, t') to a
/// scratch copy of the bounds. The predicate is monotone: a longer
/// restriction is never easier to satisfy. The empty restriction t' = t
/// is feasible by the caller's invariant, so no probe is spent on it.
int search_maximal(int t, int limit, const BoundProfile& bounds,
                   const Instance& instance,
                   const std::function<void(BoundProfile&, int)>& restrict,
                   long long& feasibility_calls) {
    auto feasible_up_to = [&](int end) {
        BoundProfile trial = bounds;
        restrict(trial, end);
        ++feasibility_calls;
        if (!trial.consistent_on(t, end)) return false;
        return is_feasible(instance, trial);
    };

    if (feasible_up_to(limit)) return limit;
    int lo = t;       // feasible (empty restriction)
    int hi = limit;   // infeasible
    while (hi - lo > 1) {
        int mid = lo + (hi - lo) / 2;
        if (feasible_up_to(mid))
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

}  // namespace

int keep_idle(int k, int t, BoundProfile& bounds, const Instance& instance,
              long long& feasibility_calls) {
    int limit = bounds.end();
    if (t >= limit) return t;
    int found = search_maximal(
        t, limit, bounds, instance,
        [&](BoundProfile& trial, int end) { trial.clamp_upper(t, end, k - 1); },
        feasibility_calls);
    bounds.clamp_upper(t, found, k - 1);
    return found;
}

int keep_busy(int k, int t, BoundProfile& bounds, const Instance& instance,
              long long& feasibility_calls) {
    int limit = bounds.end();
    if (t >= limit) return t;
    int found = search_maximal(
        t, limit, bounds, instance,
        [&](BoundProfile& trial, int end) { trial.raise_lower(t, end, k); },
        feasibility_calls);
    bounds.raise_lower(t, found, k);
    return found;
}

PltrResult run(const Instance& instance, const PltrOptions& options) {
    PltrResult result;
    if (instance.empty()) return result;

    int d = instance.horizon_end();
    result.final_bounds = BoundProfile::uniform(d + 1, 0, instance.m);

    ++result.feasibility_calls;
    FeasibilityResult initial = check_feasible(instance, result.final_bounds);
    if (!initial.feasible) throw InfeasibleError(*initial.certificate);

    BoundProfile& bounds = result.final_bounds;
    for (int k = instance.effective_m(); k >= 1; --k) {
        int t = 0;
        while (t <= d) {
            t = keep_idle(k, t, bounds, instance, result.feasibility_calls);
            if (t > d) break;

            Engagement engagement{k, t, -1};
            if (options.diagnostics) {
                engagement.snapshot = static_cast<int>(result.snapshots.size());
                result.snapshots.push_back(bounds);
            }
            result.engagements.push_back(engagement);
            ++result.busy_interval_count;

            int advanced = keep_busy(k, t, bounds, instance,
                                     result.feasibility_calls);
            if (advanced <= t)
                throw Error("invariant broken: keep_busy failed to advance");
            t = advanced;
        }
    }
    return result;
}

TightnessReport engagement_tightness_check(const PltrResult& result,
                                           const Instance& instance) {
    TightnessReport report;
    for (const Engagement& engagement : result.engagements) {
        if (engagement.snapshot < 0) {
            report.violations.push_back("no snapshot recorded (run without diagnostics)");
            return report;
        }
        BoundProfile probe =
            result.snapshots[static_cast<std::size_t>(engagement.snapshot)];
        probe.clamp_upper(engagement.slot, engagement.slot + 1,
                          engagement.processor - 1);
        bool extendable = probe.consistent() && is_feasible(instance, probe);
        if (extendable)
            report.violations.push_back(
                "idle interval before engagement (k=" +
                std::to_string(engagement.processor) +
                ", t=" + std::to_string(engagement.slot) + ") was extendable");
    }
    return report;
}

}  // namespace pltr
