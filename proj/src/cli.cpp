#include "cacheopt/cli.hpp"

#include <algorithm>
#include <ostream>

#include <CLI11.hpp>

#include "cacheopt/report.hpp"
#include "cacheopt/workload_json.hpp"

namespace cacheopt {

namespace {

struct Options {
    std::string input;
    std::string format = "table";
    std::string strategy;
    std::string objective;
    std::string policy = "chunked";
    std::string interleaving = "concat";
    bool integral = false;
};

void add_common_options(CLI::App* cmd, Options& opt) {
    cmd->add_option("--input", opt.input, "workload document (json)")
        ->required();
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"table", "json", "csv"}))
        ->capture_default_str();
}

void add_strategy_option(CLI::App* cmd, Options& opt) {
    cmd->add_option("--strategy", opt.strategy, "allocation strategy")
        ->check(CLI::IsMember(
            {"total-calls", "minimax-ratio", "weighted-minimax", "nearest-ideal"}))
        ->required();
}

// predicted_calls / fully_cached_count for the report: the cost model the
// simulation is compared against, regardless of the policy simulated.
void fill_cost_model(const Workload& w, const Allocation& alloc, SimulationSection& sec) {
    std::vector<std::int64_t> buffers = alloc.as_integers();
    for (std::size_t i = 0; i < w.file_count(); ++i) {
        const FileSpec& f = w.files[i];
        if (buffers[i] == f.size_blocks) {
            ++sec.fully_cached_count;
        } else {
            std::int64_t per_scan = (f.size_blocks + buffers[i] - 1) / buffers[i];
            sec.predicted_calls += f.scan_count * per_scan;
        }
    }
}

int cmd_allocate(const Options& opt, std::ostream& out) {
    Workload w = load_workload_file(opt.input);
    ReportDocument doc;
    doc.workload = w;
    doc.strategies.push_back(
        build_strategy_report(w, *strategy_from_name(opt.strategy), opt.integral));
    write_report(doc, *format_from_name(opt.format), out);
    return 0;
}

int cmd_compare(const Options& opt, std::ostream& out) {
    Workload w = load_workload_file(opt.input);
    ReportDocument doc;
    doc.workload = w;
    for (StrategyKind kind : kAllStrategies)
        doc.strategies.push_back(build_strategy_report(w, kind, true));
    write_report(doc, *format_from_name(opt.format), out);
    return 0;
}

int cmd_oracle_check(const Options& opt, std::ostream& out) {
    Workload w = load_workload_file(opt.input);
    Objective objective = *objective_from_name(opt.objective);

    ReportDocument doc;
    doc.workload = w;
    doc.strategies.push_back(
        build_strategy_report(w, strategy_for_objective(objective), true));
    const StrategyReport& report = doc.strategies.front();

    OracleResult oracle = brute_force_optimum(w, objective);
    OracleSection sec;
    sec.objective = objective;
    sec.closed_form_value = evaluate_objective(w, report.real_alloc, objective);
    sec.rounded_value = evaluate_objective(w, *report.int_alloc, objective);
    sec.oracle_value = oracle.optimal_value;
    sec.absolute_gap = sec.rounded_value - sec.oracle_value;
    sec.relative_gap = sec.absolute_gap / std::max(sec.oracle_value, 1.0);
    sec.instances_enumerated = oracle.instances_enumerated;
    sec.tie_count = static_cast<std::int64_t>(oracle.optima.size());
    doc.oracle = sec;

    write_report(doc, *format_from_name(opt.format), out);
    return 0;
}

int cmd_simulate(const Options& opt, std::ostream& out) {
    Workload w = load_workload_file(opt.input);
    ReportDocument doc;
    doc.workload = w;
    doc.strategies.push_back(
        build_strategy_report(w, *strategy_from_name(opt.strategy), true));
    const StrategyReport& report = doc.strategies.front();

    Interleaving interleaving = *interleaving_from_name(opt.interleaving);
    FetchPolicy policy = *policy_from_name(opt.policy);
    AccessTrace trace = generate_trace(w, interleaving);
    SimulationResult sim = simulate(w, *report.int_alloc, trace, policy);

    SimulationSection sec;
    sec.policy = policy;
    sec.interleaving = interleaving;
    sec.per_file_calls = sim.per_file_calls;
    sec.total_calls = sim.total_calls;
    sec.blocks_transferred = sim.blocks_transferred;
    fill_cost_model(w, *report.int_alloc, sec);
    doc.simulation = sec;

    write_report(doc, *format_from_name(opt.format), out);
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"per-file cache-buffer sizing for a two-level memory system"};
    app.name("cacheopt");
    app.require_subcommand(1);

    Options opt;
    CLI::App* allocate_cmd =
        app.add_subcommand("allocate", "run one strategy and report its allocation");
    add_common_options(allocate_cmd, opt);
    add_strategy_option(allocate_cmd, opt);
    allocate_cmd->add_flag("--integral", opt.integral,
                           "also report the rounded integer allocation");

    CLI::App* compare_cmd =
        app.add_subcommand("compare", "run all four strategies side by side");
    add_common_options(compare_cmd, opt);

    CLI::App* oracle_cmd = app.add_subcommand(
        "oracle-check", "compare a strategy against the brute-force integer optimum");
    add_common_options(oracle_cmd, opt);
    oracle_cmd->add_option("--objective", opt.objective, "objective to check")
        ->check(CLI::IsMember({"f1", "f2", "f3", "f4"}))
        ->required();

    CLI::App* simulate_cmd =
        app.add_subcommand("simulate", "replay a block trace against the rounded allocation");
    add_common_options(simulate_cmd, opt);
    add_strategy_option(simulate_cmd, opt);
    simulate_cmd->add_option("--policy", opt.policy, "fetch policy")
        ->check(CLI::IsMember({"chunked", "lru-block"}))
        ->capture_default_str();
    simulate_cmd->add_option("--interleaving", opt.interleaving, "scan order across files")
        ->check(CLI::IsMember({"concat", "round-robin"}))
        ->capture_default_str();

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("cacheopt");
    for (const std::string& arg : args) argv.push_back(arg.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 1;
    }

    try {
        if (allocate_cmd->parsed()) return cmd_allocate(opt, out);
        if (compare_cmd->parsed()) return cmd_compare(opt, out);
        if (oracle_cmd->parsed()) return cmd_oracle_check(opt, out);
        if (simulate_cmd->parsed()) return cmd_simulate(opt, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const BudgetTooSmallError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const EnumerationLimitError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

}  // namespace cacheopt
