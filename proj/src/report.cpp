#include "vck/report.hpp"

#include <stdexcept>

#include "vck/classic_kernels.hpp"
#include "vck/degree_kernels.hpp"

namespace vck {

std::map<std::string, int> count_rules(const ReductionTrace& trace) {
    std::map<std::string, int> counts;
    for (const TraceEvent& e : trace.events) ++counts[rule_name(e.rule)];
    return counts;
}

namespace {

KernelOutcome run_all(Instance inst) {
    ReductionTrace trace;
    auto chain = [&trace](KernelOutcome out) {
        ReductionTrace t = std::move(trace);
        t.append(std::move(out.trace));
        out.trace = std::move(t);
        return out;
    };
    KernelOutcome out = buss_kernelize(std::move(inst));
    if (out.decided()) return out;
    trace = std::move(out.trace);
    out = chain(crown_kernelize(std::move(*out.instance)));
    if (out.decided()) return out;
    trace = std::move(out.trace);
    out = chain(rule_lp(std::move(*out.instance)));
    if (out.decided()) return out;
    trace = std::move(out.trace);
    return chain(kernelize_min_degree(std::move(*out.instance), {true}));
}

}  // namespace

PipelineResult run_pipeline(const std::string& name, Instance inst) {
    KernelOutcome out = [&] {
        if (name == "buss") return buss_kernelize(std::move(inst));
        if (name == "crown") return crown_kernelize(std::move(inst));
        if (name == "lp") return rule_lp(std::move(inst));
        if (name == "mindeg") return kernelize_min_degree(std::move(inst), {false});
        if (name == "mindeg+auto") return kernelize_min_degree(std::move(inst), {true});
        if (name == "all") return run_all(std::move(inst));
        throw std::invalid_argument("unknown pipeline '" + name + "'");
    }();
    PipelineResult result{std::move(out), {}};
    result.rule_counts = count_rules(result.outcome.trace);
    return result;
}

bool min_degree_postcondition(const Graph& g, bool discovered_rules) {
    std::size_t cap = discovered_rules ? 1 : 2;
    for (VertexId v : g.vertices()) {
        std::size_t deg = g.degree(v);
        if (deg < 4) return false;
        if (deg == 4 && induced_edge_count(g, g.neighbors(v)) > cap) return false;
    }
    return true;
}

bool pipeline_bounds_ok(const std::string& name, const KernelOutcome& outcome) {
    if (!outcome.is_kernel()) return true;
    const Instance& inst = *outcome.instance;
    auto k = static_cast<std::size_t>(inst.budget);
    if (name == "buss")
        return inst.graph.vertex_count() <= k * k + k && inst.graph.edge_count() <= k * k;
    if (name == "crown") return inst.graph.vertex_count() <= 3 * k;
    if (name == "lp") return inst.graph.vertex_count() <= 2 * k;
    if (name == "mindeg") return min_degree_postcondition(inst.graph, false);
    if (name == "mindeg+auto" || name == "all")
        return min_degree_postcondition(inst.graph, true);
    throw std::invalid_argument("unknown pipeline '" + name + "'");
}

namespace {

nlohmann::json input_json(const ReportInput& input) {
    nlohmann::json j;
    j["vertices"] = input.vertices;
    j["edges"] = input.edges;
    if (input.budget)
        j["budget"] = *input.budget;
    else
        j["budget"] = nullptr;
    return j;
}

nlohmann::json kernel_json(const std::optional<Instance>& inst) {
    if (!inst) return nullptr;
    return {{"vertices", inst->graph.vertex_count()},
            {"edges", inst->graph.edge_count()},
            {"budget", inst->budget}};
}

const char* verdict_name(KernelOutcome::Status s) {
    switch (s) {
        case KernelOutcome::Status::Kernel: return "kernel";
        case KernelOutcome::Status::Yes: return "yes";
        case KernelOutcome::Status::No: return "no";
    }
    return "unknown";
}

}  // namespace

nlohmann::json kernelize_report(const ReportInput& input, const std::string& pipeline,
                                const PipelineResult& result,
                                const std::map<std::string, double>& timings_ms) {
    nlohmann::json j;
    j["command"] = "kernelize";
    j["pipeline"] = pipeline;
    j["input"] = input_json(input);
    j["rule_applications"] = result.rule_counts;
    j["verdict"] = verdict_name(result.outcome.status);
    j["kernel"] = kernel_json(result.outcome.instance);
    j["timings_ms"] = timings_ms;
    return j;
}

nlohmann::json solve_report(const ReportInput& input, bool used_kernelization,
                            const std::map<std::string, int>& rule_counts,
                            const std::optional<Instance>& kernel, const std::string& verdict,
                            std::optional<int> optimum, const std::optional<VertexSet>& witness,
                            std::uint64_t nodes, const std::map<std::string, double>& timings_ms) {
    nlohmann::json j;
    j["command"] = "solve";
    j["kernelization"] = used_kernelization;
    j["input"] = input_json(input);
    j["rule_applications"] = rule_counts;
    j["kernel"] = kernel_json(kernel);
    j["verdict"] = verdict;
    if (optimum)
        j["optimum"] = *optimum;
    else
        j["optimum"] = nullptr;
    if (witness) {
        nlohmann::json w = nlohmann::json::array();
        for (VertexId v : *witness) w.push_back(v.value + 1);  // 1-based input labels
        j["witness"] = w;
    } else {
        j["witness"] = nullptr;
    }
    j["nodes_expanded"] = nodes;
    j["timings_ms"] = timings_ms;
    return j;
}

std::vector<std::string> validate_report_json(const nlohmann::json& report) {
    std::vector<std::string> problems;
    auto need = [&](const char* key, bool ok) {
        if (!ok) problems.push_back(std::string("bad or missing field: ") + key);
    };
    need("command", report.contains("command") && report["command"].is_string());
    if (!problems.empty()) return problems;
    std::string command = report["command"];

    need("input", report.contains("input") && report["input"].is_object());
    if (report.contains("input") && report["input"].is_object()) {
        const auto& in = report["input"];
        need("input.vertices", in.contains("vertices") && in["vertices"].is_number_unsigned());
        need("input.edges", in.contains("edges") && in["edges"].is_number_unsigned());
        need("input.budget",
             in.contains("budget") && (in["budget"].is_number_integer() || in["budget"].is_null()));
    }
    need("rule_applications",
         report.contains("rule_applications") && report["rule_applications"].is_object());
    need("verdict", report.contains("verdict") && report["verdict"].is_string());
    need("timings_ms", report.contains("timings_ms") && report["timings_ms"].is_object());
    need("kernel", report.contains("kernel") &&
                       (report["kernel"].is_object() || report["kernel"].is_null()));
    if (report.contains("kernel") && report["kernel"].is_object()) {
        const auto& kn = report["kernel"];
        need("kernel.vertices", kn.contains("vertices") && kn["vertices"].is_number_unsigned());
        need("kernel.edges", kn.contains("edges") && kn["edges"].is_number_unsigned());
        need("kernel.budget", kn.contains("budget") && kn["budget"].is_number_integer());
    }

    if (command == "kernelize") {
        need("pipeline", report.contains("pipeline") && report["pipeline"].is_string());
        if (report.contains("verdict") && report["verdict"].is_string()) {
            std::string v = report["verdict"];
            need("verdict value", v == "kernel" || v == "yes" || v == "no");
            if (report.contains("kernel"))
                need("kernel presence", (v == "no") == report["kernel"].is_null());
        }
    } else if (command == "solve") {
        need("kernelization",
             report.contains("kernelization") && report["kernelization"].is_boolean());
        need("optimum", report.contains("optimum") &&
                            (report["optimum"].is_number_integer() || report["optimum"].is_null()));
        need("witness",
             report.contains("witness") && (report["witness"].is_array() || report["witness"].is_null()));
        need("nodes_expanded",
             report.contains("nodes_expanded") && report["nodes_expanded"].is_number_unsigned());
        if (report.contains("verdict") && report["verdict"].is_string()) {
            std::string v = report["verdict"];
            need("verdict value", v == "optimum" || v == "yes" || v == "no");
        }
    } else {
        problems.push_back("unknown command '" + command + "'");
    }
    return problems;
}

}  // namespace vck
