#include "pltr/schedule_build.hpp"

#include <algorithm>

namespace pltr {

std::vector<std::vector<std::string>> expand_interval(
    const IntervalAssignment& assignment) {
    const int width = assignment.interval.length();
    const long long total = assignment.total();
    if (width <= 0) throw Error("empty interval");
    if (total < static_cast<long long>(assignment.interval.lower) * width ||
        total > static_cast<long long>(assignment.interval.upper) * width)
        throw Error("interval volume outside bounds");

    std::vector<std::vector<std::string>> columns(
        static_cast<std::size_t>(width));
    long long position = 0;
    for (const auto& [id, x] : assignment.volumes) {
        if (x < 0 || x > width) throw Error("job volume exceeds interval length");
        for (long long u = 0; u < x; ++u) {
            std::size_t column = static_cast<std::size_t>(position % width);
            // x <= width keeps a job's units in distinct columns.
            if (!columns[column].empty() && columns[column].back() == id)
                throw Error("wrap-around placed a job twice in one column");
            columns[column].push_back(id);
            ++position;
        }
    }
    return columns;
}

Schedule realize(const Instance& instance, const BoundProfile& final_bounds) {
    if (instance.empty()) return Schedule::empty_over(final_bounds.end());

    FlowNetwork network = build_network(instance, final_bounds, /*compressed=*/true);
    MaxFlowResult flow = max_flow(network);
    if (flow.value != network.total_volume)
        throw Error("realize called with infeasible bounds");

    Schedule schedule = Schedule::empty_over(final_bounds.end());
    for (int i = 0; i < static_cast<int>(network.intervals.size()); ++i) {
        IntervalAssignment assignment;
        assignment.interval = network.intervals[static_cast<std::size_t>(i)];
        int node = network.interval_node(i);
        for (int j = 0; j < network.job_count; ++j) {
            for (const FlowEdge& e : network.adj[static_cast<std::size_t>(
                     network.job_node(j))]) {
                if (e.to == node && e.flow > 0)
                    assignment.volumes.emplace_back(
                        instance.jobs[static_cast<std::size_t>(j)].id, e.flow);
            }
        }
        std::sort(assignment.volumes.begin(), assignment.volumes.end());
        if (assignment.volumes.empty() && assignment.interval.lower == 0)
            continue;

        auto columns = expand_interval(assignment);
        for (int c = 0; c < assignment.interval.length(); ++c) {
            int t = assignment.interval.begin + c;
            int processor = 1;
            for (const std::string& id : columns[static_cast<std::size_t>(c)])
                schedule.slots[static_cast<std::size_t>(t)].emplace_back(processor++,
                                                                         id);
        }
    }
    return schedule;
}

std::pair<Schedule, CostBreakdown> schedule_from_result(
    const Instance& instance, const PltrResult& result) {
    Schedule schedule = realize(instance, result.final_bounds);
    CostBreakdown cost = compute_cost(schedule, instance.q);
    return {std::move(schedule), std::move(cost)};
}

}  // namespace pltr
