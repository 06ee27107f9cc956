#include "pltr/oracle.hpp"

#include <algorithm>
#include <functional>
#include <limits>

#include "pltr/flow.hpp"
#include "pltr/pltr.hpp"
#include "pltr/schedule_build.hpp"

namespace pltr {

namespace {

/// Cost of one processor busy exactly on the maximal runs of `busy`
/// (sorted): |B| for busy slots, q for the first power-up, min(gap, q)
/// per interior idle gap.
Energy stair_processor_cost(const std::vector<int>& busy, Energy q) {
    if (busy.empty()) return 0;
    Energy cost = static_cast<Energy>(busy.size()) + q;
    for (std::size_t i = 1; i < busy.size(); ++i) {
        Energy gap = busy[i] - busy[i - 1] - 1;
        if (gap > 0) cost += std::min(gap, q);
    }
    return cost;
}

Energy profile_cost(const std::vector<int>& counts, int max_processors,
                    Energy q) {
    Energy total = 0;
    for (int k = 1; k <= max_processors; ++k) {
        std::vector<int> busy;
        for (int t = 0; t < static_cast<int>(counts.size()); ++t)
            if (counts[static_cast<std::size_t>(t)] >= k) busy.push_back(t);
        total += stair_processor_cost(busy, q);
    }
    return total;
}

}  // namespace

OptResult brute_force_opt(const Instance& instance, long long profile_cap) {
    OptResult best;
    if (instance.empty()) return best;

    const int d = instance.horizon_end();
    const int slots = d + 1;
    const int m = instance.effective_m();
    const long long total = instance.total_volume();

    long long candidates = 1;
    for (int t = 0; t < slots; ++t) {
        candidates *= m + 1;
        if (candidates > profile_cap) throw Error("instance too large for oracle");
    }

    // Infeasible instances have no profile at all; surface the certificate.
    FeasibilityResult overall =
        check_feasible(instance, BoundProfile::uniform(slots, 0, instance.m));
    if (!overall.feasible) throw InfeasibleError(*overall.certificate);

    // available[t]: jobs whose window covers t; no profile may exceed it.
    std::vector<int> available(static_cast<std::size_t>(slots), 0);
    for (const auto& job : instance.jobs)
        for (int t = job.release; t <= job.deadline; ++t)
            ++available[static_cast<std::size_t>(t)];

    Energy best_cost = std::numeric_limits<Energy>::max();
    std::vector<int> best_counts;
    std::vector<int> counts(static_cast<std::size_t>(slots), 0);

    auto feasible_profile = [&](const std::vector<int>& n) {
        BoundProfile bounds = BoundProfile::uniform(slots, 0, instance.m);
        for (int t = 0; t < slots; ++t) {
            bounds.clamp_upper(t, t + 1, n[static_cast<std::size_t>(t)]);
            bounds.raise_lower(t, t + 1, n[static_cast<std::size_t>(t)]);
        }
        return is_feasible(instance, bounds);
    };

    std::function<void(int, long long)> descend = [&](int t, long long sum) {
        if (t == slots) {
            if (sum != total || !feasible_profile(counts)) return;
            Energy cost = profile_cost(counts, m, instance.q);
            if (cost < best_cost) {
                best_cost = cost;
                best_counts = counts;
            }
            return;
        }
        long long remaining_capacity =
            static_cast<long long>(slots - t - 1) * m;
        int limit = std::min(m, available[static_cast<std::size_t>(t)]);
        for (int n = 0; n <= limit; ++n) {
            long long next = sum + n;
            if (next > total) break;
            if (next + remaining_capacity < total) continue;
            counts[static_cast<std::size_t>(t)] = n;
            descend(t + 1, next);
        }
        counts[static_cast<std::size_t>(t)] = 0;
    };
    descend(0, 0);

    if (best_counts.empty() && best_cost == std::numeric_limits<Energy>::max())
        throw Error("oracle found no feasible profile for a feasible instance");

    best.cost = best_cost;
    best.profile.counts = best_counts;
    BoundProfile witness_bounds = BoundProfile::uniform(slots, 0, instance.m);
    for (int t = 0; t < slots; ++t) {
        witness_bounds.clamp_upper(t, t + 1, best_counts[static_cast<std::size_t>(t)]);
        witness_bounds.raise_lower(t, t + 1, best_counts[static_cast<std::size_t>(t)]);
    }
    best.schedule = realize(instance, witness_bounds);
    return best;
}

bool edf_feasible(const Instance& instance) {
    if (instance.effective_m() > 1)
        throw Error("EDF check is single-processor only");
    if (instance.empty()) return true;

    std::vector<long long> remaining;
    for (const auto& job : instance.jobs) remaining.push_back(job.volume);

    int d = instance.horizon_end();
    for (int t = 0; t <= d; ++t) {
        int pick = -1;
        for (int j = 0; j < static_cast<int>(instance.jobs.size()); ++j) {
            const Job& job = instance.jobs[static_cast<std::size_t>(j)];
            if (remaining[static_cast<std::size_t>(j)] == 0 || job.release > t ||
                job.deadline < t)
                continue;
            if (pick < 0 ||
                job.deadline < instance.jobs[static_cast<std::size_t>(pick)].deadline)
                pick = j;
        }
        if (pick >= 0) --remaining[static_cast<std::size_t>(pick)];
    }
    for (long long r : remaining)
        if (r > 0) return false;
    return true;
}

ApproximationReport approximation_report(const Instance& instance) {
    ApproximationReport report;
    report.total_volume = instance.total_volume();

    OptResult opt = brute_force_opt(instance);
    report.opt_cost = opt.cost;

    auto [schedule, cost] = schedule_from_result(instance, run(instance));
    report.pltr_cost = cost.total;

    report.bound_ok = report.pltr_cost <= 2 * report.opt_cost + report.total_volume;
    report.ratio = report.opt_cost == 0
                       ? Rational::of(report.pltr_cost == 0 ? 0 : 1, 1)
                       : Rational::of(report.pltr_cost, report.opt_cost);
    return report;
}

}  // namespace pltr
