#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "vck/classic_kernels.hpp"
#include "vck/degree_kernels.hpp"
#include "vck/dimacs.hpp"
#include "vck/exact_solver.hpp"
#include "vck/profile.hpp"
#include "vck/report.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

vck::Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw vck::ParseError(0, "cannot open '" + path + "'");
    return vck::parse_dimacs(in);
}

int cmd_kernelize(const std::string& path, const std::string& pipeline, int budget,
                  const std::string& out_path) {
    std::map<std::string, double> timings;
    auto t0 = Clock::now();
    vck::Graph g = load_graph(path);
    timings["parse"] = ms_since(t0);

    vck::ReportInput input{g.vertex_count(), g.edge_count(), budget};
    t0 = Clock::now();
    vck::PipelineResult result = vck::run_pipeline(pipeline, {g, budget});
    timings["kernelize"] = ms_since(t0);

    if (!vck::pipeline_bounds_ok(pipeline, result.outcome))
        throw std::logic_error("kernel bound recheck failed for pipeline " + pipeline);

    if (!out_path.empty() && result.outcome.instance) {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("cannot write '" + out_path + "'");
        vck::write_dimacs(result.outcome.instance->graph, out);
    }
    std::cout << vck::kernelize_report(input, pipeline, result, timings).dump(2) << "\n";
    return 0;
}

int cmd_solve(const std::string& path, std::optional<int> budget, bool no_kernel) {
    std::map<std::string, double> timings;
    auto t0 = Clock::now();
    vck::Graph g = load_graph(path);
    timings["parse"] = ms_since(t0);

    vck::ReportInput input{g.vertex_count(), g.edge_count(), budget};
    std::map<std::string, int> rule_counts;
    std::optional<vck::Instance> kernel;
    std::optional<vck::VertexSet> witness;
    std::optional<int> optimum;
    std::string verdict;
    std::uint64_t nodes = 0;
    bool use_kernel = !no_kernel;

    vck::ReductionTrace trace;
    std::optional<vck::Instance> reduced;
    t0 = Clock::now();
    if (use_kernel) {
        int start_budget = budget ? *budget : static_cast<int>(g.vertex_count());
        vck::KernelOutcome out = vck::kernelize_min_degree({g, start_budget}, {true});
        rule_counts = vck::count_rules(out.trace);
        trace = std::move(out.trace);
        if (out.is_no()) {
            verdict = "no";
        } else {
            kernel = out.instance;
            if (out.is_yes()) {
                witness = vck::lift_solution(g, trace, {});
            } else {
                reduced = std::move(out.instance);
            }
        }
    }
    timings["kernelize"] = ms_since(t0);

    t0 = Clock::now();
    if (budget) {
        if (verdict.empty() && !witness) {
            if (reduced) {
                vck::DecideResult d = vck::branch_solve(*reduced, true);
                nodes = d.nodes;
                if (d.yes) witness = vck::lift_solution(g, trace, d.witness);
            } else {
                vck::DecideResult d = vck::branch_solve({g, *budget}, false);
                nodes = d.nodes;
                if (d.yes) witness = d.witness;
            }
        }
        if (verdict.empty()) verdict = witness ? "yes" : "no";
    } else {
        if (!witness) {
            if (reduced) {
                vck::SolveResult r = vck::branch_optimize(reduced->graph, true);
                nodes = r.nodes;
                witness = vck::lift_solution(g, trace, r.witness);
            } else if (verdict.empty()) {
                vck::SolveResult r = vck::branch_optimize(g, false);
                nodes = r.nodes;
                witness = r.witness;
            }
        }
        if (witness) optimum = static_cast<int>(witness->size());
        verdict = "optimum";
    }
    timings["solve"] = ms_since(t0);

    if (witness) {
        if (!vck::is_vertex_cover(g, *witness))
            throw std::logic_error("witness fails to cover the input graph");
        if (budget && static_cast<int>(witness->size()) > *budget)
            throw std::logic_error("witness exceeds the budget");
    }
    std::cout << vck::solve_report(input, use_kernel, rule_counts, kernel, verdict, optimum,
                                   witness, nodes, timings)
                     .dump(2)
              << "\n";
    return 0;
}

int cmd_discover(const std::string& pattern_name, int n, int t, bool verify,
                 std::uint64_t max_candidates) {
    vck::AttachmentPattern source;
    if (pattern_name == "deg4-disjoint") {
        source = vck::deg4_two_disjoint_edges_pattern();
    } else if (pattern_name == "deg4-path") {
        source = vck::deg4_path_two_edges_pattern();
    } else if (pattern_name.rfind("file:", 0) == 0) {
        std::ifstream in(pattern_name.substr(5));
        if (!in) throw std::invalid_argument("cannot open '" + pattern_name.substr(5) + "'");
        vck::Certificate cert = vck::parse_certificate(in);
        source = cert.pattern;
        vck::Profile recomputed = vck::compute_profile(source);
        for (std::size_t x = 0; x < recomputed.table.size(); ++x)
            recomputed.table[x] -= cert.shift;
        if (recomputed.table != cert.target.table)
            throw std::invalid_argument("certificate profile does not match its pattern");
    } else {
        throw std::invalid_argument("unknown pattern '" + pattern_name + "'");
    }
    if (source.t != t)
        throw std::invalid_argument("pattern has t=" + std::to_string(source.t) +
                                    ", requested t=" + std::to_string(t));

    vck::Profile target = vck::compute_profile(source);
    int emitted = 0;
    vck::discover_replacements(
        target, n, t,
        [&](const vck::DiscoveredReplacement& r) {
            std::cout << vck::write_certificate(target, r);
            ++emitted;
            if (!verify) return;
            vck::Profile direct = vck::compute_profile(r.pattern);
            vck::Profile literal =
                vck::verify_profile_against_witness(r.pattern, vck::pendant_witness(t));
            bool ok = direct.table == literal.table;
            for (std::size_t x = 0; ok && x < target.table.size(); ++x)
                ok = target.table[x] == direct.table[x] + r.shift;
            for (std::uint64_t seed = 1; ok && seed <= 20; ++seed) {
                vck::BoundariedGraph host = vck::random_strong_witness(t, seed);
                std::vector<vck::VertexId> ids;
                std::vector<vck::VertexSet> classes;
                vck::Graph a = vck::pattern_glue(host, source, ids, classes);
                vck::Graph b = vck::pattern_glue(host, r.pattern, ids, classes);
                ok = vck::brute_force_vc(a).optimum ==
                     vck::brute_force_vc(b).optimum + r.shift;
            }
            if (!ok) throw std::logic_error("discovered pattern failed re-verification");
            std::cout << "# verified: profile recomputation and 20 oracle hosts\n";
        },
        max_candidates);
    std::cerr << "discovered " << emitted << " replacement(s)\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Vertex cover kernelization toolkit"};
    app.require_subcommand(1);

    std::string in_path, out_path, pipeline, pattern;
    int budget = 0, n = 4, t = 4;
    bool no_kernel = false, verify = false;
    std::uint64_t max_candidates = std::uint64_t(1) << 31;
    std::optional<int> opt_budget;

    auto* kern = app.add_subcommand("kernelize", "Reduce a DIMACS instance");
    kern->add_option("input", in_path, "DIMACS edge-format file")->required();
    kern->add_option("--pipeline", pipeline, "buss|crown|lp|mindeg|mindeg+auto|all")->required();
    kern->add_option("-k,--budget", budget, "cover budget k")->required()
        ->check(CLI::NonNegativeNumber);
    kern->add_option("--out", out_path, "write the reduced graph here");

    auto* solve = app.add_subcommand("solve", "Solve a DIMACS instance exactly");
    solve->add_option("input", in_path, "DIMACS edge-format file")->required();
    solve->add_option("-k,--budget", opt_budget, "decide (G,k); omit to optimize")
        ->check(CLI::NonNegativeNumber);
    solve->add_flag("--no-kernel", no_kernel, "disable preprocessing");

    auto* disc = app.add_subcommand("discover", "Enumerate equivalent replacement patterns");
    disc->add_option("--pattern", pattern, "deg4-disjoint|deg4-path|file:<path>")->required();
    disc->add_option("--n", n, "replacement core size")->required();
    disc->add_option("--t", t, "interface classes")->required();
    disc->add_flag("--verify", verify, "re-check every certificate");
    disc->add_option("--max-candidates", max_candidates, "enumeration refusal threshold");

    try {
        app.parse(argc, argv);
        if (*kern) return cmd_kernelize(in_path, pipeline, budget, out_path);
        if (*solve) return cmd_solve(in_path, opt_budget, no_kernel);
        if (*disc) return cmd_discover(pattern, n, t, verify, max_candidates);
        return 1;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const vck::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
