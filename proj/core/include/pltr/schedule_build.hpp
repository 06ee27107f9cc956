#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pltr/flow.hpp"
#include "pltr/model.hpp"
#include "pltr/pltr.hpp"

namespace pltr {

/// Per-job volumes x_j assigned to one elementary interval by the flow;
/// 0 <= x_j <= |I| and l_I * |I| <= sum x_j <= m_I * |I|.
struct IntervalAssignment {
    IntervalInfo interval;
    std::vector<std::pair<std::string, long long>> volumes;  // sorted by job id

    long long total() const {
        long long sum = 0;
        for (const auto& [id, x] : volumes) sum += x;
        return sum;
    }
};

/// Wrap-around expansion: job units laid row-major over |I| columns, so
/// no job repeats a column and per-column counts differ by at most one.
/// Returns one job list per slot of the interval.
std::vector<std::vector<std::string>> expand_interval(
    const IntervalAssignment& assignment);

/// Realizes a concrete schedule from feasible bounds: compressed max
/// flow, then per-interval wrap-around expansion, stacking each column
/// onto processors 1..count (stair property).
Schedule realize(const Instance& instance, const BoundProfile& final_bounds);

/// realize + compute_cost on a finished PLTR run.
std::pair<Schedule, CostBreakdown> schedule_from_result(
    const Instance& instance, const PltrResult& result);

}  // namespace pltr
