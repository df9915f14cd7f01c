#include "cacheopt/report.hpp"

#include <charconv>
#include <cstdio>
#include <ostream>

#include <json.hpp>

namespace cacheopt {

std::string_view format_name(OutputFormat format) {
    switch (format) {
        case OutputFormat::Table: return "table";
        case OutputFormat::Json: return "json";
        case OutputFormat::Csv: return "csv";
    }
    return "unknown";
}

std::optional<OutputFormat> format_from_name(std::string_view name) {
    if (name == format_name(OutputFormat::Table)) return OutputFormat::Table;
    if (name == format_name(OutputFormat::Json)) return OutputFormat::Json;
    if (name == format_name(OutputFormat::Csv)) return OutputFormat::Csv;
    return std::nullopt;
}

StrategyReport build_strategy_report(const Workload& w, StrategyKind kind,
                                     bool include_integral) {
    StrategyReport report;
    report.strategy = kind;
    report.real_alloc = allocate(w, kind);
    report.real_objectives = evaluate_all(w, report.real_alloc);
    if (include_integral) {
        report.int_alloc = round_to_integers(w, report.real_alloc);
        report.int_objectives = evaluate_all(w, *report.int_alloc);
    }
    return report;
}

namespace {

// Human-output formatting: 6 significant digits, trailing zeros trimmed.
std::string fmt6(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.6g", value);
    return buffer;
}

// Machine-output formatting: shortest representation that parses back to
// the same double.
std::string fmt_exact(double value) {
    char buffer[64];
    auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
    return std::string(buffer, end);
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string quoted = "\"";
    for (char c : field) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

void write_objective_block(const Workload& w, const Allocation& alloc,
                           const ObjectiveReport& report, const char* label,
                           std::ostream& out) {
    out << "  " << label << ": f1=" << fmt6(report.f1) << " f2=" << fmt6(report.f2)
        << " f3=" << fmt6(report.f3) << " f4=" << fmt6(report.f4) << "\n";
    for (std::size_t i = 0; i < w.file_count(); ++i) {
        out << "    file " << w.files[i].name << ": buffer=" << fmt6(alloc.buffers[i])
            << " ratio=" << fmt6(report.per_file_ratio[i])
            << " utilization=" << fmt6(report.per_file_utilization[i])
            << " cached=" << (report.cached_flags[i] == 0 ? "yes" : "no") << "\n";
    }
}

void write_table(const ReportDocument& doc, std::ostream& out) {
    const Workload& w = doc.workload;
    out << "workload: files=" << w.file_count() << " free_memory=" << w.free_memory
        << " budget=" << w.budget() << "\n";
    for (const StrategyReport& s : doc.strategies) {
        out << "strategy: " << strategy_name(s.strategy) << "\n";
        write_objective_block(w, s.real_alloc, s.real_objectives, "real", out);
        if (s.int_alloc)
            write_objective_block(w, *s.int_alloc, *s.int_objectives, "integral", out);
    }
    if (doc.oracle) {
        const OracleSection& o = *doc.oracle;
        out << "oracle: objective=" << objective_name(o.objective)
            << " optimum=" << fmt6(o.oracle_value) << " enumerated=" << o.instances_enumerated
            << " ties=" << o.tie_count << "\n";
        out << "  closed-form=" << fmt6(o.closed_form_value)
            << " rounded=" << fmt6(o.rounded_value)
            << " absolute-gap=" << fmt6(o.absolute_gap)
            << " relative-gap=" << fmt6(o.relative_gap) << "\n";
    }
    if (doc.simulation) {
        const SimulationSection& s = *doc.simulation;
        out << "simulation: policy=" << policy_name(s.policy)
            << " interleaving=" << interleaving_name(s.interleaving)
            << " predicted=" << s.predicted_calls
            << " fully-cached=" << s.fully_cached_count << "\n";
        for (std::size_t i = 0; i < w.file_count(); ++i)
            out << "  file " << w.files[i].name << ": calls=" << s.per_file_calls[i] << "\n";
        out << "  total-calls=" << s.total_calls
            << " blocks-transferred=" << s.blocks_transferred << "\n";
    }
}

nlohmann::ordered_json objectives_json(const Allocation& alloc, const ObjectiveReport& report,
                                       bool integral_buffers) {
    nlohmann::ordered_json node;
    if (integral_buffers) {
        node["buffers"] = alloc.as_integers();
    } else {
        node["buffers"] = alloc.buffers;
    }
    node["f1"] = report.f1;
    node["f2"] = report.f2;
    node["f3"] = report.f3;
    node["f4"] = report.f4;
    node["per_file_ratio"] = report.per_file_ratio;
    node["per_file_utilization"] = report.per_file_utilization;
    node["cached_flags"] = report.cached_flags;
    return node;
}

void write_json(const ReportDocument& doc, std::ostream& out) {
    nlohmann::ordered_json root;
    root["workload"]["free_memory"] = doc.workload.free_memory;
    auto& files = root["workload"]["files"];
    files = nlohmann::ordered_json::array();
    for (const FileSpec& f : doc.workload.files)
        files.push_back({{"name", f.name},
                         {"size_blocks", f.size_blocks},
                         {"scan_count", f.scan_count}});

    auto& strategies = root["strategies"];
    strategies = nlohmann::ordered_json::array();
    for (const StrategyReport& s : doc.strategies) {
        nlohmann::ordered_json node;
        node["strategy"] = strategy_name(s.strategy);
        node["real"] = objectives_json(s.real_alloc, s.real_objectives, false);
        if (s.int_alloc)
            node["integral"] = objectives_json(*s.int_alloc, *s.int_objectives, true);
        strategies.push_back(std::move(node));
    }
    if (doc.oracle) {
        const OracleSection& o = *doc.oracle;
        auto& node = root["oracle"];
        node["objective"] = objective_name(o.objective);
        node["closed_form_value"] = o.closed_form_value;
        node["rounded_value"] = o.rounded_value;
        node["oracle_value"] = o.oracle_value;
        node["absolute_gap"] = o.absolute_gap;
        node["relative_gap"] = o.relative_gap;
        node["instances_enumerated"] = o.instances_enumerated;
        node["tie_count"] = o.tie_count;
    }
    if (doc.simulation) {
        const SimulationSection& s = *doc.simulation;
        auto& node = root["simulation"];
        node["policy"] = policy_name(s.policy);
        node["interleaving"] = interleaving_name(s.interleaving);
        node["per_file_calls"] = s.per_file_calls;
        node["total_calls"] = s.total_calls;
        node["blocks_transferred"] = s.blocks_transferred;
        node["predicted_calls"] = s.predicted_calls;
        node["fully_cached_count"] = s.fully_cached_count;
    }
    out << root.dump(2) << "\n";
}

void write_csv(const ReportDocument& doc, std::ostream& out) {
    out << "strategy,file,buffer_real,buffer_int,ratio,f1,f2,f3,f4\n";
    for (const StrategyReport& s : doc.strategies) {
        for (std::size_t i = 0; i < doc.workload.file_count(); ++i) {
            out << strategy_name(s.strategy) << ','
                << csv_escape(doc.workload.files[i].name) << ','
                << fmt_exact(s.real_alloc.buffers[i]) << ',';
            if (s.int_alloc) out << s.int_alloc->as_integers()[i];
            out << ',' << fmt_exact(s.real_objectives.per_file_ratio[i]) << ','
                << fmt_exact(s.real_objectives.f1) << ',' << fmt_exact(s.real_objectives.f2)
                << ',' << fmt_exact(s.real_objectives.f3) << ','
                << fmt_exact(s.real_objectives.f4) << "\n";
        }
    }
}

}  // namespace

void write_report(const ReportDocument& doc, OutputFormat format, std::ostream& out) {
    switch (format) {
        case OutputFormat::Table: write_table(doc, out); return;
        case OutputFormat::Json: write_json(doc, out); return;
        case OutputFormat::Csv: write_csv(doc, out); return;
    }
}

}  // namespace cacheopt
