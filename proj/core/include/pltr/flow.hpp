#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pltr/model.hpp"
#include "pltr/volume.hpp"

namespace pltr {

enum class NodeKind { Source, JobNode, IntervalNode, Relief, Sink };

/// One elementary time interval [begin, end) with constant bounds; in the
/// per-slot network every interval has length 1.
struct IntervalInfo {
    int begin = 0;
    int end = 0;
    int lower = 0;
    int upper = 0;
    int length() const { return end - begin; }
};

struct FlowEdge {
    int to = 0;
    long long cap = 0;
    long long flow = 0;
    int rev = 0;  // index of the reverse edge in adj[to]
};

/// Feasibility network: source -> job nodes (cap p_j) -> interval nodes
/// (cap |I| when I is inside E_j) -> relief/sink, relief -> sink with the
/// spare capacity P - sum l_t. Total capacity into the sink is P.
struct FlowNetwork {
    std::vector<NodeKind> kinds;
    std::vector<std::vector<FlowEdge>> adj;
    std::vector<IntervalInfo> intervals;  // parallel to interval nodes
    int job_count = 0;
    long long total_volume = 0;

    int source() const { return 0; }
    int job_node(int j) const { return 1 + j; }
    int interval_node(int i) const { return 1 + job_count + i; }
    int relief() const { return 1 + job_count + static_cast<int>(intervals.size()); }
    int sink() const { return relief() + 1; }
    int node_count() const { return sink() + 1; }

    void add_edge(int from, int to, long long cap);
};

struct CutCertificate {
    enum class Kind { Deficiency, Excess };
    Kind kind = Kind::Deficiency;
    SlotSet witness;
    long long value = 0;
};

/// Thrown when an instance (or bound profile) admits no feasible
/// schedule; carries the min-cut witness.
struct InfeasibleError : Error {
    CutCertificate certificate;
    explicit InfeasibleError(CutCertificate cert)
        : Error(cert.kind == CutCertificate::Kind::Deficiency
                    ? "infeasible: deficiency"
                    : "infeasible: excess"),
          certificate(std::move(cert)) {}
};

/// Builds the feasibility network. compressed=true splits the horizon at
/// releases, deadlines+1, and bound breakpoints into O(n) elementary
/// intervals; compressed=false uses one node per slot.
/// Requires sum_t l_t <= P and l <= u everywhere (callers short-circuit
/// those cases; see check_feasible).
FlowNetwork build_network(const Instance& instance, const BoundProfile& bounds,
                          bool compressed);

struct MaxFlowResult {
    long long value = 0;
    /// Source side S of a canonical min cut: the complement of the nodes
    /// that still reach the sink in the residual network.
    std::vector<bool> cut_side;
};

/// Exact integral max flow (Dinic); deterministic for a fixed edge order.
MaxFlowResult max_flow(FlowNetwork& network);

/// Lemma-3 certificate from a min cut: deficiency on the slots of the
/// source-side interval nodes when the relief node is on the sink side,
/// excess on the sink-side slots otherwise. Re-verified via the volume
/// module; throws on a non-positive recomputation.
CutCertificate extract_certificate(const Instance& instance,
                                   const BoundProfile& bounds,
                                   const FlowNetwork& network,
                                   const MaxFlowResult& result);

struct FeasibilityResult {
    bool feasible = false;
    long long flow_value = 0;
    std::optional<CutCertificate> certificate;
};

/// Full feasibility check on the compressed network. Bound profiles with
/// sum l_t > P short-circuit to an excess certificate on Q = T.
FeasibilityResult check_feasible(const Instance& instance,
                                 const BoundProfile& bounds);

bool is_feasible(const Instance& instance, const BoundProfile& bounds);

/// Per-slot and compressed networks must agree on the max-flow value.
bool equivalent_networks_check(const Instance& instance,
                               const BoundProfile& bounds);

}  // namespace pltr
