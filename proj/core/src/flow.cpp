#include "pltr/flow.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>

namespace pltr {

void FlowNetwork::add_edge(int from, int to, long long cap) {
    FlowEdge fwd{to, cap, 0, static_cast<int>(adj[static_cast<std::size_t>(to)].size())};
    FlowEdge bwd{from, 0, 0, static_cast<int>(adj[static_cast<std::size_t>(from)].size())};
    adj[static_cast<std::size_t>(from)].push_back(fwd);
    adj[static_cast<std::size_t>(to)].push_back(bwd);
}

namespace {

std::vector<IntervalInfo> elementary_intervals(const Instance& instance,
                                               const BoundProfile& bounds,
                                               bool compressed) {
    int horizon_size = bounds.end();
    std::vector<IntervalInfo> intervals;
    if (horizon_size <= 0) return intervals;

    std::set<int> points;
    if (compressed) {
        points.insert(0);
        points.insert(horizon_size);
        for (const auto& job : instance.jobs) {
            points.insert(job.release);
            points.insert(std::min(job.deadline + 1, horizon_size));
        }
        for (int b : bounds.breakpoints()) points.insert(b);
    } else {
        for (int t = 0; t <= horizon_size; ++t) points.insert(t);
    }

    auto it = points.begin();
    int prev = *it++;
    for (; it != points.end(); ++it) {
        IntervalInfo info{prev, *it, bounds.lower_at(prev), bounds.upper_at(prev)};
        intervals.push_back(info);
        prev = *it;
    }
    return intervals;
}

}  // namespace

FlowNetwork build_network(const Instance& instance, const BoundProfile& bounds,
                          bool compressed) {
    for (const auto& job : instance.jobs)
        if (job.deadline + 1 > bounds.end())
            throw Error("bounds do not cover the horizon");
    if (!bounds.consistent()) throw Error("bounds inconsistent (l > m)");

    FlowNetwork network;
    network.job_count = static_cast<int>(instance.jobs.size());
    network.total_volume = instance.total_volume();
    network.intervals = elementary_intervals(instance, bounds, compressed);

    long long spare = network.total_volume - bounds.sum_lower();
    if (spare < 0) throw Error("lower bounds exceed total volume");

    network.adj.resize(static_cast<std::size_t>(network.node_count()));
    network.kinds.assign(static_cast<std::size_t>(network.node_count()),
                         NodeKind::IntervalNode);
    network.kinds[static_cast<std::size_t>(network.source())] = NodeKind::Source;
    for (int j = 0; j < network.job_count; ++j)
        network.kinds[static_cast<std::size_t>(network.job_node(j))] = NodeKind::JobNode;
    network.kinds[static_cast<std::size_t>(network.relief())] = NodeKind::Relief;
    network.kinds[static_cast<std::size_t>(network.sink())] = NodeKind::Sink;

    for (int j = 0; j < network.job_count; ++j)
        network.add_edge(network.source(), network.job_node(j),
                         instance.jobs[static_cast<std::size_t>(j)].volume);

    for (int j = 0; j < network.job_count; ++j) {
        const Job& job = instance.jobs[static_cast<std::size_t>(j)];
        for (int i = 0; i < static_cast<int>(network.intervals.size()); ++i) {
            const IntervalInfo& interval =
                network.intervals[static_cast<std::size_t>(i)];
            // By construction I never straddles a release or deadline, so
            // containment in E_j is an endpoint check.
            if (interval.begin >= job.release && interval.end <= job.deadline + 1)
                network.add_edge(network.job_node(j), network.interval_node(i),
                                 interval.length());
        }
    }

    for (int i = 0; i < static_cast<int>(network.intervals.size()); ++i) {
        const IntervalInfo& interval = network.intervals[static_cast<std::size_t>(i)];
        long long len = interval.length();
        network.add_edge(network.interval_node(i), network.relief(),
                         static_cast<long long>(interval.upper - interval.lower) * len);
        network.add_edge(network.interval_node(i), network.sink(),
                         static_cast<long long>(interval.lower) * len);
    }
    network.add_edge(network.relief(), network.sink(), spare);
    return network;
}

namespace {

class Dinic {
public:
    explicit Dinic(FlowNetwork& network) : net_(network) {}

    long long run() {
        long long total = 0;
        while (bfs()) {
            iter_.assign(net_.adj.size(), 0);
            while (long long pushed = dfs(net_.source(),
                                          std::numeric_limits<long long>::max()))
                total += pushed;
        }
        return total;
    }

    /// Nodes with a residual path to the sink.
    std::vector<bool> coreach_sink() const {
        std::vector<bool> reaches(net_.adj.size(), false);
        std::deque<int> queue;
        reaches[static_cast<std::size_t>(net_.sink())] = true;
        queue.push_back(net_.sink());
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            // v reaches the sink if some residual edge v -> u exists; scan
            // u's reverse stubs, whose mirror is the forward edge from v.
            for (const FlowEdge& e : net_.adj[static_cast<std::size_t>(u)]) {
                const FlowEdge& mirror =
                    net_.adj[static_cast<std::size_t>(e.to)][static_cast<std::size_t>(e.rev)];
                if (mirror.cap - mirror.flow > 0 &&
                    !reaches[static_cast<std::size_t>(e.to)]) {
                    reaches[static_cast<std::size_t>(e.to)] = true;
                    queue.push_back(e.to);
                }
            }
        }
        return reaches;
    }

private:
    bool bfs() {
        level_.assign(net_.adj.size(), -1);
        std::deque<int> queue;
        level_[static_cast<std::size_t>(net_.source())] = 0;
        queue.push_back(net_.source());
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (const FlowEdge& e : net_.adj[static_cast<std::size_t>(u)]) {
                if (e.cap - e.flow > 0 && level_[static_cast<std::size_t>(e.to)] < 0) {
                    level_[static_cast<std::size_t>(e.to)] =
                        level_[static_cast<std::size_t>(u)] + 1;
                    queue.push_back(e.to);
                }
            }
        }
        return level_[static_cast<std::size_t>(net_.sink())] >= 0;
    }

    long long dfs(int u, long long limit) {
        if (u == net_.sink()) return limit;
        for (std::size_t& i = iter_[static_cast<std::size_t>(u)];
             i < net_.adj[static_cast<std::size_t>(u)].size(); ++i) {
            FlowEdge& e = net_.adj[static_cast<std::size_t>(u)][i];
            if (e.cap - e.flow <= 0 ||
                level_[static_cast<std::size_t>(e.to)] !=
                    level_[static_cast<std::size_t>(u)] + 1)
                continue;
            long long pushed = dfs(e.to, std::min(limit, e.cap - e.flow));
            if (pushed > 0) {
                e.flow += pushed;
                net_.adj[static_cast<std::size_t>(e.to)][static_cast<std::size_t>(e.rev)]
                    .flow -= pushed;
                return pushed;
            }
        }
        return 0;
    }

    FlowNetwork& net_;
    std::vector<int> level_;
    std::vector<std::size_t> iter_;
};

}  // namespace

MaxFlowResult max_flow(FlowNetwork& network) {
    Dinic dinic(network);
    MaxFlowResult result;
    result.value = dinic.run();
    std::vector<bool> reaches = dinic.coreach_sink();
    result.cut_side.resize(reaches.size());
    for (std::size_t i = 0; i < reaches.size(); ++i) result.cut_side[i] = !reaches[i];
    return result;
}

CutCertificate extract_certificate(const Instance& instance,
                                   const BoundProfile& bounds,
                                   const FlowNetwork& network,
                                   const MaxFlowResult& result) {
    if (result.value >= network.total_volume)
        throw Error("certificate requested for a feasible instance");

    bool relief_on_source_side =
        result.cut_side[static_cast<std::size_t>(network.relief())];

    // Deficiency witnesses live on the source side Q(S), excess witnesses
    // on the sink side Q(S-bar).
    CutCertificate cert;
    std::vector<int> slots;
    for (int i = 0; i < static_cast<int>(network.intervals.size()); ++i) {
        bool in_s = result.cut_side[static_cast<std::size_t>(network.interval_node(i))];
        if (in_s == relief_on_source_side) continue;
        const IntervalInfo& interval = network.intervals[static_cast<std::size_t>(i)];
        for (int t = interval.begin; t < interval.end; ++t) slots.push_back(t);
    }
    cert.kind = relief_on_source_side ? CutCertificate::Kind::Excess
                                      : CutCertificate::Kind::Deficiency;
    cert.witness = make_slot_set(std::move(slots));
    cert.value = cert.kind == CutCertificate::Kind::Deficiency
                     ? deficiency(instance, bounds, cert.witness)
                     : excess(instance, bounds, cert.witness);
    if (cert.value <= 0) throw Error("certificate verification failed");
    return cert;
}

FeasibilityResult check_feasible(const Instance& instance,
                                 const BoundProfile& bounds) {
    if (!bounds.consistent()) throw Error("bounds inconsistent (l > m)");

    long long total = instance.total_volume();
    if (bounds.sum_lower() > total) {
        CutCertificate cert;
        cert.kind = CutCertificate::Kind::Excess;
        cert.witness = full_slot_set(bounds.end());
        cert.value = excess(instance, bounds, cert.witness);
        return {false, 0, cert};
    }

    FlowNetwork network = build_network(instance, bounds, /*compressed=*/true);
    MaxFlowResult result = max_flow(network);
    if (result.value == total) return {true, result.value, std::nullopt};
    return {false, result.value,
            extract_certificate(instance, bounds, network, result)};
}

bool is_feasible(const Instance& instance, const BoundProfile& bounds) {
    return check_feasible(instance, bounds).feasible;
}

bool equivalent_networks_check(const Instance& instance,
                               const BoundProfile& bounds) {
    FlowNetwork per_slot = build_network(instance, bounds, /*compressed=*/false);
    FlowNetwork compressed = build_network(instance, bounds, /*compressed=*/true);
    return max_flow(per_slot).value == max_flow(compressed).value;
}

}  // namespace pltr
