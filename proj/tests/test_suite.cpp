#include "zm/identity_suite.hpp"
#include "zm/report.hpp"
#include "zm/rhs_series.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

using namespace zm;

TEST_SUITE_BEGIN("identity_suite");

namespace {

int run_cli(const std::string& args, std::string* out = nullptr) {
    const auto path = std::filesystem::temp_directory_path() / "zmom_cli_test.txt";
    const std::string cmd = std::string(ZMOM_EXE) + " " + args + " > " + path.string() + " 2>&1";
    const int st = std::system(cmd.c_str());
    if (out) {
        std::ifstream in(path);
        std::stringstream ss;
        ss << in.rdbuf();
        *out = ss.str();
    }
    return WEXITSTATUS(st);
}

}  // namespace

TEST_CASE("registry contents") {
    const auto& reg = registry();
    CHECK(reg.size() >= 34);
    for (std::size_t i = 1; i < reg.size(); ++i) CHECK(reg[i - 1].id < reg[i].id);
    for (const auto& c : reg) {
        CAPTURE(c.id);
        CHECK_FALSE(c.paper_eq.empty());
        CHECK_FALSE(c.grid.empty());
        CHECK(c.lhs);
        CHECK(c.rhs);
    }
    for (const char* id : {"P1a", "P1b", "C1", "C2", "P2", "C3", "C4", "C5", "C6", "C7a", "C7b", "C7c", "P3", "P4a", "P4b",
                           "P4c", "P5", "P6a", "P6b", "P6c", "P7", "C8a", "C8b", "P8a", "P8b", "P9", "P10", "P11a", "P11b",
                           "L1", "L2a", "L2b", "Ci-sum", "E257", "E226", "Kernel", "PF", "A-routes", "A1", "M24"})
        CHECK_MESSAGE(lookup(id) != nullptr, id);
    CHECK(lookup("NOPE") == nullptr);
}

TEST_CASE("registry lookups") {
    const auto* c5 = lookup("C5");
    REQUIRE(c5);
    const double pi = std::numbers::pi;
    CHECK(std::fabs(c5->rhs(c5->grid[0].params, {}).value - pi * pi) < 1e-13);

    const auto* p10 = lookup("P10");
    REQUIRE(p10);
    std::set<int> ks;
    for (const auto& g : p10->grid)
        if (g.params.value("route", std::string()) == "decomposition") ks.insert(g.params["k"].get<int>());
    CHECK(ks == std::set<int>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10});

    std::set<std::string> appendix;
    for (const auto& c : registry())
        for (const auto& t : c.tags)
            if (t == "appendix") appendix.insert(c.id);
    CHECK(appendix == std::set<std::string>{"Kernel", "PF", "A-routes", "A1"});
}

TEST_CASE("run_check examples") {
    auto c2 = run_check("C2", {{"sigma", 1.5}});
    REQUIRE(c2.size() == 1);
    CHECK(c2[0].pass);
    CHECK(c2[0].rel_err < 1e-6);
    CHECK(std::fabs(c2[0].rhs - 4.37270161595791) < 1e-12);

    auto p4b = run_check("P4b", {{"sigma", 1.25}});
    REQUIRE(p4b.size() == 1);
    CHECK(p4b[0].pass);
    CHECK(p4b[0].lhs <= p4b[0].rhs);
    CHECK(p4b[0].kind == "inequality");

    auto p10 = run_check("P10");
    int decomposition = 0;
    for (const auto& r : p10) {
        CAPTURE(r.params.dump());
        CHECK(r.pass);
        if (r.params.value("route", std::string()) == "decomposition") {
            ++decomposition;
            CHECK(r.tolerance == 1e-6);
        }
    }
    CHECK(decomposition == 10);
}

TEST_CASE("run_check errors and overrides") {
    CHECK_THROWS_AS(run_check("NOPE"), UnknownIdError);
    // two grid points collapse into one once sigma is pinned
    auto r = run_check("E257", {{"k", 3}});
    CHECK(r.size() == 1);
    CHECK(r[0].params["k"] == 3);
    // a pinned point keeps its own grid tolerance
    const auto* p9 = lookup("P9");
    auto r3 = run_check("P9", p9->grid[1].params);
    REQUIRE(r3.size() == 1);
    CHECK(r3[0].tolerance == p9->grid[1].tolerance);
    CHECK(p9->grid[1].tolerance != p9->grid[0].tolerance);
    // domain violations become failed results
    auto bad = run_check("P7", {{"sigma", -1.0}});
    REQUIRE(bad.size() == 1);
    CHECK_FALSE(bad[0].pass);
    CHECK(bad[0].diagnostic.find("evaluation error") != std::string::npos);
}

TEST_CASE("P3 at z = -1 reproduces P2") {
    const auto* p2 = lookup("P2");
    const auto* p3 = lookup("P3");
    for (double s : {1.25, 1.5})
        for (double a : {0.5, 1.0}) {
            Json q2{{"sigma", s}, {"a", a}};
            Json q3{{"sigma", s}, {"a", a}, {"z", {-1.0, 0.0}}};
            const double r2 = p2->rhs(q2, {}).value, r3 = p3->rhs(q3, {}).value;
            CHECK(std::fabs(r2 - r3) <= 1e-12 * std::fabs(r2));
        }
}

TEST_CASE("P4a partial sums stay within the truncation estimate") {
    for (double s : {1.1, 1.5}) {
        auto a = series_mobius_partial(s, 10000), b = series_mobius_partial(s, 40000);
        CHECK(std::fabs(a.value - b.value) < a.truncation);
        auto full = series_mobius(s);
        CHECK(std::fabs(full.value - b.value) < b.truncation);
    }
}

TEST_CASE("run_all: tag filter, ordering and worker invariance") {
    SuiteOptions o;
    o.tags = {"appendix"};
    auto a = run_all(o);
    std::set<std::string> ids;
    for (const auto& r : a) ids.insert(r.id);
    CHECK(ids == std::set<std::string>{"Kernel", "PF", "A-routes", "A1"});
    for (std::size_t i = 1; i < a.size(); ++i) CHECK(a[i - 1].id <= a[i].id);

    o.workers = 3;
    auto b = run_all(o);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].id == b[i].id);
        CHECK(a[i].params == b[i].params);
        CHECK(a[i].lhs == b[i].lhs);
        CHECK(a[i].rhs == b[i].rhs);
        CHECK(a[i].pass == b[i].pass);
    }
}

TEST_CASE("heavy checks are opt-in and the budget skips work") {
    SuiteOptions o;
    o.tags = {"heavy"};
    CHECK(run_all(o).empty());

    SuiteOptions b;
    b.ids = {"E257", "Ci-sum"};
    b.budget_seconds = 0.0;
    auto r = run_all(b);
    REQUIRE_FALSE(r.empty());
    for (const auto& x : r) CHECK(x.skipped);
}

TEST_CASE("report JSON and CSV schema") {
    SuiteOptions o;
    o.ids = {"E257"};
    RunConfig cfg;
    auto rep = make_report(cfg, run_all(o));
    CHECK(rep.summary.total == 5);
    CHECK(rep.summary.failed == 0);
    CHECK(exit_code(rep) == 0);

    Json j = report_json(rep);
    for (const char* k : {"version", "config", "results", "summary"}) CHECK(j.contains(k));
    CHECK(j["config"]["tmax_critical"] == 5000.0);
    for (const auto& r : j["results"])
        for (const char* k : {"id", "params", "lhs", "rhs", "abs_err", "rel_err", "tail_estimate", "pass", "paper_eq",
                              "runtime_ms"})
            CHECK_MESSAGE(r.contains(k), k);
    // without timing the document is byte-stable
    auto rep2 = make_report(cfg, run_all(o));
    CHECK(report_json(rep, false).dump() == report_json(rep2, false).dump());

    std::ostringstream csv;
    write_csv(csv, rep);
    std::string header;
    std::istringstream in(csv.str());
    std::getline(in, header);
    CHECK(header == "id,params,lhs,rhs,abs_err,rel_err,tail_estimate,tolerance,pass,skipped,kind,paper_eq,runtime_ms,diagnostic");
    int rows = 0;
    for (std::string line; std::getline(in, line);) ++rows;
    CHECK(rows == 5);

    rep.results[0].pass = false;
    CHECK(exit_code(make_report(cfg, rep.results)) == 1);
}

TEST_CASE("config validation") {
    RunConfig c;
    c.tmax_critical = 50;
    CHECK_THROWS(c.validate());
    c.tmax_critical = 5000;
    c.worker_count = 0;
    CHECK_THROWS(c.validate());
    CHECK_THROWS(parse_format("xml"));

    const auto path = std::filesystem::temp_directory_path() / "zmom_cfg_test.json";
    std::ofstream(path) << R"({"tmax_critical": 2500, "worker_count": 2, "format": "csv"})";
    auto l = load_config(path.string());
    CHECK(l.tmax_critical == 2500);
    CHECK(l.worker_count == 2);
    CHECK(l.format == OutputFormat::csv);
}

TEST_CASE("command line exit codes") {
    std::string out;
    CHECK(run_cli("verify --ids NOPE", &out) == 2);
    CHECK(run_cli("verify --ids E257,Ci-sum --format json --no-timing", &out) == 0);
    auto j = Json::parse(out);
    CHECK(j["summary"]["failed"] == 0);
    CHECK(j["summary"]["total"] == 10);
    CHECK(run_cli("verify --ids A-routes", &out) == 1);

    CHECK(run_cli("eval --fn zeta --s 2+0i", &out) == 0);
    CHECK(out.find("1.644934066848") != std::string::npos);
    CHECK(run_cli("eval --fn hurwitz --s 0+0i --a 0.3", &out) == 0);
    CHECK(std::fabs(std::stod(out) - 0.2) < 1e-13);
    CHECK(run_cli("eval --fn digamma --a 1", &out) == 0);
    CHECK(out.find("-0.5772156649") != std::string::npos);
    CHECK(run_cli("eval --fn zeta --s 1+0i", &out) == 2);
    CHECK(run_cli("eval --fn nonsense --s 1+0i", &out) == 2);

    CHECK(run_cli("phi2 --x 7", &out) == 0);
    CHECK(out.find("1.41203601116") != std::string::npos);
    CHECK(run_cli("damped --kind frac_over_x --T 50,100,200,400", &out) == 0);
    int lines = 0;
    for (char ch : out) lines += ch == '\n';
    CHECK(lines == 5);
    CHECK(run_cli("list", &out) == 0);
    CHECK(out.find("Ci-sum") != std::string::npos);
}

TEST_SUITE_END();
