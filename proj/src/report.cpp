#include "zm/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <stdexcept>

namespace zm {

OutputFormat parse_format(const std::string& s) {
    if (s == "json") return OutputFormat::json;
    if (s == "csv") return OutputFormat::csv;
    if (s == "text") return OutputFormat::text;
    throw std::invalid_argument("unknown format: " + s);
}

static std::string format_name(OutputFormat f) {
    switch (f) {
        case OutputFormat::json: return "json";
        case OutputFormat::csv: return "csv";
        case OutputFormat::text: return "text";
    }
    return "?";
}

void RunConfig::validate() const {
    if (!(tmax_critical >= 100.0)) throw std::invalid_argument("tmax_critical must be >= 100");
    if (worker_count < 1) throw std::invalid_argument("worker_count must be >= 1");
    if (rel_tol_default < 0.0) throw std::invalid_argument("rel_tol_default must be >= 0");
}

Json RunConfig::to_json() const {
    Json j{{"tmax_critical", tmax_critical}, {"worker_count", worker_count}, {"format", format_name(format)}};
    j["rel_tol_default"] = rel_tol_default > 0 ? Json(rel_tol_default) : Json(nullptr);
    j["output_path"] = output_path;
    return j;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read config " + path);
    Json j = Json::parse(in);
    RunConfig c;
    if (j.contains("rel_tol_default") && !j["rel_tol_default"].is_null()) c.rel_tol_default = j["rel_tol_default"];
    if (j.contains("tmax_critical")) c.tmax_critical = j["tmax_critical"];
    if (j.contains("worker_count")) c.worker_count = j["worker_count"];
    if (j.contains("output_path")) c.output_path = j["output_path"];
    if (j.contains("format")) c.format = parse_format(j["format"]);
    c.validate();
    return c;
}

std::string config_path_from_env() {
    const char* p = std::getenv("ZMOM_CONFIG");
    return p ? std::string(p) : std::string();
}

Report make_report(const RunConfig& cfg, std::vector<CheckResult> results) {
    Report r;
    r.config = cfg;
    r.results = std::move(results);
    for (const auto& c : r.results) {
        ++r.summary.total;
        if (c.skipped)
            ++r.summary.skipped;
        else if (c.pass)
            ++r.summary.passed;
        else
            ++r.summary.failed;
        r.summary.runtime_ms += c.runtime_ms;
    }
    return r;
}

Json report_json(const Report& r, bool with_runtime) {
    Json res = Json::array();
    for (const auto& c : r.results) res.push_back(to_json(c, with_runtime));
    Json summary{{"total", r.summary.total}, {"passed", r.summary.passed}, {"failed", r.summary.failed},
                 {"skipped", r.summary.skipped}};
    if (with_runtime) summary["runtime_ms"] = r.summary.runtime_ms;
    return Json{{"version", r.tool_version}, {"config", r.config.to_json()}, {"results", res}, {"summary", summary}};
}

namespace {

std::string csv_field(std::string s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string o = "\"";
    for (char ch : s) {
        if (ch == '"') o += '"';
        o += ch;
    }
    return o + "\"";
}

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

}  // namespace

void write_csv(std::ostream& os, const Report& r) {
    os << "id,params,lhs,rhs,abs_err,rel_err,tail_estimate,tolerance,pass,skipped,kind,paper_eq,runtime_ms,diagnostic\n";
    for (const auto& c : r.results) {
        os << csv_field(c.id) << ',' << csv_field(c.params.dump()) << ',' << num(c.lhs) << ',' << num(c.rhs) << ','
           << num(c.abs_err) << ',' << num(c.rel_err) << ',' << num(c.tail_estimate) << ',' << num(c.tolerance) << ','
           << (c.pass ? "true" : "false") << ',' << (c.skipped ? "true" : "false") << ',' << c.kind << ','
           << csv_field(c.paper_eq) << ',' << num(c.runtime_ms) << ',' << csv_field(c.diagnostic) << '\n';
    }
}

void write_text(std::ostream& os, const Report& r) {
    for (const auto& c : r.results) {
        const char* tag = c.skipped ? "SKIP" : (c.pass ? "PASS" : "FAIL");
        os << std::left << std::setw(5) << tag << std::setw(9) << c.id << ' ' << c.params.dump() << "\n      lhs "
           << num(c.lhs) << "  rhs " << num(c.rhs) << "  rel_err " << num(c.rel_err) << "  tol " << num(c.tolerance) << "  "
           << std::fixed << std::setprecision(0) << c.runtime_ms << " ms" << std::defaultfloat << std::setprecision(6) << '\n';
        if (!c.diagnostic.empty()) os << "      " << c.diagnostic << '\n';
    }
    os << "passed " << r.summary.passed << " / " << r.summary.total - r.summary.skipped;
    if (r.summary.skipped) os << " (skipped " << r.summary.skipped << ")";
    os << '\n';
}

void write_report(std::ostream& os, const Report& r, OutputFormat f) {
    switch (f) {
        case OutputFormat::json: os << report_json(r).dump(2) << '\n'; break;
        case OutputFormat::csv: write_csv(os, r); break;
        case OutputFormat::text: write_text(os, r); break;
    }
}

int exit_code(const Report& r) { return r.summary.failed == 0 ? 0 : 1; }

}  // namespace zm
