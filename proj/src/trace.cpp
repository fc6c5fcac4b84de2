#include "vck/trace.hpp"

#include <numeric>
#include <sstream>

namespace vck {

const char* rule_name(RuleTag tag) {
    switch (tag) {
        case RuleTag::Isolated: return "isolated";
        case RuleTag::HighDegree: return "high_degree";
        case RuleTag::Crown: return "crown";
        case RuleTag::Lp: return "lp";
        case RuleTag::Pendant: return "pendant";
        case RuleTag::Dominance: return "dominance";
        case RuleTag::Degree2Contract: return "degree2_contract";
        case RuleTag::CliqueComatching: return "clique_comatching";
        case RuleTag::Degree3Rewire: return "degree3_rewire";
        case RuleTag::Degree4PathRewire: return "degree4_path_rewire";
        case RuleTag::Degree4DisjointSwap: return "degree4_disjoint_swap";
        case RuleTag::Degree4PathSwap: return "degree4_path_swap";
    }
    return "unknown";
}

int ReductionTrace::total_budget_delta() const {
    return std::accumulate(events.begin(), events.end(), 0,
                           [](int acc, const TraceEvent& e) { return acc + e.budget_delta; });
}

void ReductionTrace::append(ReductionTrace other) {
    for (auto& e : other.events) events.push_back(std::move(e));
}

namespace {

void print_set(std::ostringstream& os, const char* key, const VertexSet& s) {
    os << ' ' << key << '=';
    bool first = true;
    for (VertexId v : s) {
        if (!first) os << ',';
        os << v.value;
        first = false;
    }
    if (first) os << '-';
}

struct LogVisitor {
    std::ostringstream& os;

    void operator()(const IsolatedPayload& p) { os << " v=" << p.v.value; }
    void operator()(const HighDegreePayload& p) { os << " v=" << p.v.value; }
    void operator()(const CrownPayload& p) {
        print_set(os, "crown", p.crown);
        print_set(os, "head", p.head);
    }
    void operator()(const LpPayload& p) {
        print_set(os, "zeros", p.zeros);
        print_set(os, "ones", p.ones);
    }
    void operator()(const PendantPayload& p) {
        os << " leaf=" << p.leaf.value << " support=" << p.support.value;
    }
    void operator()(const DominancePayload& p) {
        os << " removed=" << p.removed.value << " witness=" << p.witness.value;
    }
    void operator()(const Degree2Payload& p) {
        os << " v=" << p.v.value << " a=" << p.a.value << " b=" << p.b.value
           << " z=" << p.z.value;
    }
    void operator()(const CliqueComatchingPayload& p) {
        os << " v=" << p.v.value;
        print_set(os, "c1", p.c1);
        print_set(os, "c2", p.c2);
        os << " m=";
        bool first = true;
        for (const auto& [a, b] : p.non_edges) {
            if (!first) os << ',';
            os << a.value << '-' << b.value;
            first = false;
        }
    }
    void operator()(const Degree3Payload& p) {
        os << " v=" << p.v.value << " a=" << p.a.value << " b=" << p.b.value
           << " c=" << p.c.value;
    }
    void operator()(const Degree4PathPayload& p) {
        os << " v=" << p.v.value << " path=" << p.a.value << '-' << p.b.value << '-'
           << p.c.value << '-' << p.d.value;
    }
    void operator()(const PatternSwapPayload& p) {
        os << " removed=";
        for (std::size_t i = 0; i < p.removed_core.size(); ++i)
            os << (i ? "," : "") << p.removed_core[i].value;
        os << " inserted=";
        for (std::size_t i = 0; i < p.inserted_core.size(); ++i)
            os << (i ? "," : "") << p.inserted_core[i].value;
        os << " c=" << p.shift;
    }
};

}  // namespace

std::vector<std::string> ReductionTrace::log_lines() const {
    std::vector<std::string> lines;
    lines.reserve(events.size());
    for (const TraceEvent& e : events) {
        std::ostringstream os;
        os << rule_name(e.rule) << " dk=" << e.budget_delta;
        std::visit(LogVisitor{os}, e.payload);
        lines.push_back(os.str());
    }
    return lines;
}

Graph replay(const Graph& g, const ReductionTrace& trace) {
    Graph cur = g;
    for (const TraceEvent& e : trace.events) {
        for (const auto& [v, _] : e.deleted) cur.remove_vertex(v);
        for (const auto& [v, nbrs] : e.created) {
            cur.add_vertex(v);
            for (VertexId w : nbrs) cur.add_edge(v, w);
        }
        for (const auto& [u, w] : e.added_edges) cur.add_edge(u, w);
    }
    return cur;
}

}  // namespace vck
