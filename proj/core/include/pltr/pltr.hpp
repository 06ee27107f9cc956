#pragma once

#include <vector>

#include "pltr/flow.hpp"
#include "pltr/model.hpp"

namespace pltr {

/// First slot of a busy interval opened by keep_busy on `processor`.
/// `snapshot` indexes PltrResult::snapshots (-1 without diagnostics).
struct Engagement {
    int processor = 0;
    int slot = 0;
    int snapshot = -1;
};

struct PltrResult {
    BoundProfile final_bounds;
    std::vector<Engagement> engagements;
    std::vector<BoundProfile> snapshots;
    long long feasibility_calls = 0;
    int busy_interval_count = 0;
};

struct PltrOptions {
    bool diagnostics = false;  // retain bound snapshots per engagement
};

/// Maximal t' in [t, d+1] such that clamping m to k-1 on [t, t') stays
/// feasible; updates bounds on [t, t'). Returns t when no extension is
/// feasible. Binary search over a monotone predicate.
int keep_idle(int k, int t, BoundProfile& bounds, const Instance& instance,
              long long& feasibility_calls);

/// Maximal t' in (t, d+1] such that raising l to k on [t, t') stays
/// feasible; updates bounds on [t, t'). Immediately after a failed idle
/// extension at t, t' >= t+1 is guaranteed. No-op when t > d.
int keep_busy(int k, int t, BoundProfile& bounds, const Instance& instance,
              long long& feasibility_calls);

/// Algorithm driver: processors m'..1, alternating keep_idle/keep_busy
/// from the left. Throws InfeasibleError on an infeasible instance.
PltrResult run(const Instance& instance, const PltrOptions& options = {});

struct TightnessReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// At every engagement, extending the idle stretch by one more slot must
/// have been infeasible. Requires a run with diagnostics enabled.
TightnessReport engagement_tightness_check(const PltrResult& result,
                                           const Instance& instance);

}  // namespace pltr
