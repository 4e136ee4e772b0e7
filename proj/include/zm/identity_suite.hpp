#pragma once

#include <json.hpp>

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace zm {

using Json = nlohmann::json;

enum class CheckKind { equality, inequality, asymptotic_order, cross_route };
std::string check_kind_name(CheckKind k);

// one evaluated side of an identity
struct Side {
    double value = 0.0;
    double error = 0.0;  // quadrature or series error estimate
    double tail = 0.0;   // truncation tail estimate
    std::string note;
};

struct EvalContext {
    double tmax_critical = 5000.0;  // truncation for moment integrals with sigma <= 1
};

struct GridPoint {
    Json params;
    double tolerance;
};

using SideFn = std::function<Side(const Json& params, const EvalContext& ctx)>;
// decides pass for inequality and asymptotic_order kinds; equality kinds use rel_err <= tol
using PredicateFn = std::function<bool(const Side& lhs, const Side& rhs, const Json& params, double tol)>;
// free-form extra information (corrected forms, imaginary parts, ratios)
using DiagnosticFn = std::function<std::string(const Side& lhs, const Side& rhs, const Json& params)>;

struct IdentityCheck {
    std::string id;
    std::string description;
    std::string paper_eq;  // the identity as a formula string
    std::vector<std::string> tags;
    CheckKind kind = CheckKind::equality;
    bool heavy = false;
    std::vector<GridPoint> grid;
    SideFn lhs;
    SideFn rhs;
    PredicateFn predicate;    // optional
    DiagnosticFn diagnostic;  // optional
};

struct CheckResult {
    std::string id;
    Json params;
    double lhs = 0.0;
    double rhs = 0.0;
    double abs_err = 0.0;
    double rel_err = 0.0;
    double tail_estimate = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    bool skipped = false;
    std::string kind;
    std::string paper_eq;
    std::string diagnostic;
    double runtime_ms = 0.0;
};

Json to_json(const CheckResult& r, bool with_runtime = true);

const std::vector<IdentityCheck>& registry();
const IdentityCheck* lookup(const std::string& id);

class UnknownIdError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct SuiteOptions {
    std::vector<std::string> ids;  // empty: all
    std::set<std::string> tags;    // empty: all; otherwise a check needs at least one tag
    std::optional<double> tol;     // replaces every grid tolerance
    double tmax_critical = 5000.0;
    int workers = 1;
    bool heavy = false;
    std::optional<double> budget_seconds;  // tasks not started before the budget runs out are skipped
    std::function<void(const CheckResult&)> on_result;  // progress hook, called under a lock
};

// one result per grid point; overrides replace (or add) parameter keys and duplicate points collapse
std::vector<CheckResult> run_check(const std::string& id, const Json& overrides = Json::object(),
                                   const SuiteOptions& opts = {});

// results sorted by id with grid order preserved inside an id
std::vector<CheckResult> run_all(const SuiteOptions& opts);

}  // namespace zm
