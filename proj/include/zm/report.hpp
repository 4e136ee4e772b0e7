#pragma once

#include "zm/identity_suite.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace zm {

inline constexpr const char* kToolVersion = "1.0.0";

enum class OutputFormat { json, csv, text };
OutputFormat parse_format(const std::string& s);

struct RunConfig {
    double rel_tol_default = 0.0;  // 0: per-check tolerances
    double tmax_critical = 5000.0;
    int worker_count = 1;
    std::string output_path;  // empty: stdout
    OutputFormat format = OutputFormat::text;

    void validate() const;  // throws std::invalid_argument
    Json to_json() const;
};

// reads a JSON config file; keys mirror the RunConfig fields
RunConfig load_config(const std::string& path);
// path named by ZMOM_CONFIG, if set
std::string config_path_from_env();

struct Summary {
    int total = 0;
    int passed = 0;
    int failed = 0;
    int skipped = 0;
    double runtime_ms = 0.0;
};

struct Report {
    std::string tool_version = kToolVersion;
    RunConfig config;
    std::vector<CheckResult> results;
    Summary summary;
};

Report make_report(const RunConfig& cfg, std::vector<CheckResult> results);

// with_runtime = false drops wall-clock fields so output is byte-stable
Json report_json(const Report& r, bool with_runtime = true);
void write_csv(std::ostream& os, const Report& r);
void write_text(std::ostream& os, const Report& r);
void write_report(std::ostream& os, const Report& r, OutputFormat f);

// 0 when every executed check passed, 1 otherwise
int exit_code(const Report& r);

}  // namespace zm
