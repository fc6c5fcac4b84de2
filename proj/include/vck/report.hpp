#pragma once

#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "vck/outcome.hpp"

namespace vck {

struct PipelineResult {
    KernelOutcome outcome;
    std::map<std::string, int> rule_counts;  // trace events per rule name
};

// name is one of: buss, crown, lp, mindeg, mindeg+auto, all. "all" composes
// buss, crown, lp and mindeg+auto in that order, stopping at a verdict.
// Unknown names throw std::invalid_argument.
PipelineResult run_pipeline(const std::string& name, Instance inst);

// Rechecks the pipeline's advertised kernel guarantee against the emitted
// graph: buss |V| <= k^2+k and |E| <= k^2; crown |V| <= 3k; lp |V| <= 2k;
// the min-degree pipelines their structural postcondition. Verdict outcomes
// pass trivially.
bool pipeline_bounds_ok(const std::string& name, const KernelOutcome& outcome);

// Minimum degree >= 4 and every degree-4 vertex has at most two induced
// neighborhood edges; at most one when the discovered rules were enabled.
bool min_degree_postcondition(const Graph& g, bool discovered_rules);

std::map<std::string, int> count_rules(const ReductionTrace& trace);

struct ReportInput {
    std::size_t vertices = 0;
    std::size_t edges = 0;
    std::optional<int> budget;
};

nlohmann::json kernelize_report(const ReportInput& input, const std::string& pipeline,
                                const PipelineResult& result,
                                const std::map<std::string, double>& timings_ms);

nlohmann::json solve_report(const ReportInput& input, bool used_kernelization,
                            const std::map<std::string, int>& rule_counts,
                            const std::optional<Instance>& kernel, const std::string& verdict,
                            std::optional<int> optimum, const std::optional<VertexSet>& witness,
                            std::uint64_t nodes, const std::map<std::string, double>& timings_ms);

// Empty when the report conforms to the documented schema; otherwise one
// message per problem.
std::vector<std::string> validate_report_json(const nlohmann::json& report);

}  // namespace vck
