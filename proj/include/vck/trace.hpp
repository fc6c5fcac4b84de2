#pragma once

#include <string>
#include <variant>
#include <vector>

#include "vck/graph.hpp"
#include "vck/pattern.hpp"

namespace vck {

enum class RuleTag {
    Isolated,
    HighDegree,
    Crown,
    Lp,
    Pendant,
    Dominance,
    Degree2Contract,
    CliqueComatching,
    Degree3Rewire,
    Degree4PathRewire,
    Degree4DisjointSwap,
    Degree4PathSwap,
};

const char* rule_name(RuleTag tag);

struct IsolatedPayload {
    VertexId v;
};
struct HighDegreePayload {
    VertexId v;
};
struct CrownPayload {
    VertexSet crown;
    VertexSet head;
};
struct LpPayload {
    VertexSet zeros;
    VertexSet ones;
};
struct PendantPayload {
    VertexId leaf;
    VertexId support;
};
struct DominancePayload {
    VertexId removed;   // the dominating endpoint u
    VertexId witness;   // v with N(v) subset of N[u]
};
struct Degree2Payload {
    VertexId v, a, b;   // folded vertex and its two non-adjacent neighbors
    VertexId z;         // contraction vertex
};
struct CliqueComatchingPayload {
    VertexId v;
    VertexSet c1, c2;
    std::vector<Edge> non_edges;  // M: per c1 exactly one pair (c1, c2)
};
struct Degree3Payload {
    VertexId v, a, b, c;
};
struct Degree4PathPayload {
    VertexId v, a, b, c, d;  // neighborhood path a-b-c-d
};
// Generic c-equivalent pattern replacement. interface_sets[i] holds the host
// vertices forming external neighborhood class i; removed/inserted core lists
// follow pattern vertex order. Enough to replay forward and to lift a cover
// back without the original graph.
struct PatternSwapPayload {
    std::vector<VertexId> removed_core;
    AttachmentPattern removed_pattern;
    std::vector<VertexSet> interface_sets;
    std::vector<VertexId> inserted_core;
    AttachmentPattern inserted_pattern;
    int shift = 0;  // the equivalence constant c
};

using TracePayload =
    std::variant<IsolatedPayload, HighDegreePayload, CrownPayload, LpPayload, PendantPayload,
                 DominancePayload, Degree2Payload, CliqueComatchingPayload, Degree3Payload,
                 Degree4PathPayload, PatternSwapPayload>;

struct TraceEvent {
    RuleTag rule;
    int budget_delta = 0;  // amount subtracted from k by this event

    // Net graph delta, replayable without the original graph: deletions
    // first (with the incident edges held at deletion time), then fresh
    // vertices with their edges, then extra edges between survivors.
    std::vector<std::pair<VertexId, std::vector<VertexId>>> deleted;
    std::vector<std::pair<VertexId, std::vector<VertexId>>> created;
    std::vector<Edge> added_edges;

    TracePayload payload;
};

struct ReductionTrace {
    std::vector<TraceEvent> events;

    int total_budget_delta() const;
    void append(TraceEvent e) { events.push_back(std::move(e)); }
    void append(ReductionTrace other);
    bool empty() const { return events.empty(); }

    // One line per event: rule name followed by the payload's vertex ids.
    // Format documented in the README; meant for audit and debugging.
    std::vector<std::string> log_lines() const;
};

// Applies the recorded deltas to g in order. Reproduces the kernel graph
// exactly when g is the graph the trace was recorded against.
Graph replay(const Graph& g, const ReductionTrace& trace);

}  // namespace vck
