#pragma once

#include <vector>

#include "pltr/model.hpp"
#include "pltr/volume.hpp"

namespace pltr {

/// Per-slot busy-processor counts; with the stair property this fully
/// determines the per-processor busy sets.
struct Profile {
    std::vector<int> counts;
};

struct OptResult {
    Energy cost = 0;
    Profile profile;
    Schedule schedule;
};

/// Brute-force optimum: enumerate stair profiles with sum n_t = P in
/// lexicographic order, keep those feasible under l_t = m_t = n_t, and
/// return the cheapest (lexicographically smallest on ties). Throws on
/// infeasible instances (with certificate) and when the search space
/// exceeds `profile_cap`.
OptResult brute_force_opt(const Instance& instance,
                          long long profile_cap = 2'000'000);

/// Earliest-Deadline-First simulation; single-processor only.
bool edf_feasible(const Instance& instance);

struct ApproximationReport {
    Energy pltr_cost = 0;
    Energy opt_cost = 0;
    long long total_volume = 0;
    bool bound_ok = false;     // pltr_cost <= 2 * opt_cost + P
    Rational ratio{0, 1};      // pltr_cost / opt_cost
};

ApproximationReport approximation_report(const Instance& instance);

}  // namespace pltr
