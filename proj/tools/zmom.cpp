// zmom: evaluate zeta-family functions and verify moment identities
#include "zm/frac_integrals.hpp"
#include "zm/identity_suite.hpp"
#include "zm/quadrature.hpp"
#include "zm/report.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

using namespace zm;

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// "<re>+<im>i", "<re>-<im>i", "<re>" or "<im>i"
Complex parse_complex(const std::string& s) {
    static const std::regex full(R"(\s*([-+]?[0-9.]+(?:[eE][-+]?[0-9]+)?)\s*([-+])\s*([0-9.]+(?:[eE][-+]?[0-9]+)?)\s*i\s*)");
    static const std::regex real_only(R"(\s*([-+]?[0-9.]+(?:[eE][-+]?[0-9]+)?)\s*)");
    static const std::regex imag_only(R"(\s*([-+]?[0-9.]+(?:[eE][-+]?[0-9]+)?)\s*i\s*)");
    std::smatch m;
    if (std::regex_match(s, m, full)) {
        double im = std::stod(m[3]);
        return {std::stod(m[1]), m[2] == "-" ? -im : im};
    }
    if (std::regex_match(s, m, real_only)) return {std::stod(m[1]), 0.0};
    if (std::regex_match(s, m, imag_only)) return {0.0, std::stod(m[1])};
    throw UsageError("bad complex literal '" + s + "' (expected <re>+<im>i)");
}

std::vector<std::string> split(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

std::vector<double> split_doubles(const std::string& s) {
    std::vector<double> v;
    for (auto& t : split(s)) v.push_back(std::stod(t));
    return v;
}

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

std::string cnum(Complex z) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%.15g%+.15gi", z.real(), z.imag());
    return buf;
}

// writes to --out when given, stdout otherwise
struct Sink {
    std::ofstream file;
    std::ostream* os = &std::cout;
    explicit Sink(const std::string& path) {
        if (path.empty()) return;
        file.open(path);
        if (!file) throw UsageError("cannot open " + path);
        os = &file;
    }
};

DirichletCharacter pick_character(unsigned modulus, unsigned index) {
    auto chars = characters_mod(modulus);
    if (index >= chars.size()) throw UsageError("char-index out of range for modulus " + std::to_string(modulus));
    return chars[index];
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Zeta-family moment identities: evaluation and verification"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    // verify
    auto* verify = app.add_subcommand("verify", "run identity checks and write a report");
    std::string v_ids, v_tags, v_out, v_format = "text", v_config;
    double v_tol = 0, v_tmax = 0, v_budget = 0;
    int v_workers = 0;
    bool v_heavy = false, v_no_timing = false;
    verify->add_option("--ids", v_ids, "comma-separated identity ids");
    verify->add_option("--tags", v_tags, "comma-separated tags (a check runs if it has any of them)");
    verify->add_option("--tol", v_tol, "relative tolerance replacing the per-check values");
    verify->add_option("--tmax", v_tmax, "truncation height for moment integrals with sigma <= 1 (default 5000)");
    verify->add_option("--workers", v_workers, "concurrent checks (default 1)");
    verify->add_option("--out", v_out, "report file (default stdout)");
    verify->add_option("--format", v_format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    verify->add_option("--budget", v_budget, "seconds after which unstarted checks are skipped");
    verify->add_option("--config", v_config, "JSON config file (default: $ZMOM_CONFIG)");
    verify->add_flag("--heavy", v_heavy, "include heavy checks");
    verify->add_flag("--no-timing", v_no_timing, "omit runtime fields from JSON for byte-stable reports");

    auto* list = app.add_subcommand("list", "list registered identities");

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate one special function");
    std::string e_fn, e_s = "2+0i", e_z = "1+0i";
    double e_a = 1.0;
    unsigned e_mod = 1, e_idx = 0;
    int e_k = 1, e_order = 0;
    eval->add_option("--fn", e_fn, "hurwitz, alt, lerch, zeta, L, digamma, polygamma, ci")
        ->required()
        ->check(CLI::IsMember({"hurwitz", "alt", "lerch", "zeta", "L", "digamma", "polygamma", "ci"}));
    eval->add_option("--s", e_s, "complex argument <re>+<im>i");
    eval->add_option("--a", e_a, "shift a, or the real argument of digamma, polygamma and ci");
    eval->add_option("--z", e_z, "Lerch z as <re>+<im>i");
    eval->add_option("--modulus", e_mod, "character modulus");
    eval->add_option("--char-index", e_idx, "character index within characters_mod(modulus)");
    eval->add_option("--k", e_k, "polygamma order");
    eval->add_option("--deriv", e_order, "s-derivative order for hurwitz (1, 2) and alt (1)");

    // moment
    auto* mom = app.add_subcommand("moment", "moment integral on a vertical line, as JSON");
    std::string m_kind = "riemann", m_mod = "none", m_z = "1+0i";
    double m_sigma = 2.0, m_a = 1.0, m_tmax = 0, m_tol = 1e-9;
    int m_weight = 2, m_zpow = 2;
    unsigned m_modulus = 0, m_idx = 0;
    mom->add_option("--kind", m_kind, "integrand kind");
    mom->add_option("--sigma", m_sigma, "abscissa of the line");
    mom->add_option("--a", m_a, "Hurwitz shift");
    mom->add_option("--z", m_z, "Lerch z");
    mom->add_option("--weight", m_weight, "2 for |s|^-2, 4 for |s|^-4");
    mom->add_option("--modulation", m_mod, "none, cos_t_ln2, one_minus_cos_t_ln2, one_minus_cos_sq");
    mom->add_option("--zeta-power", m_zpow, "2 or 4");
    mom->add_option("--modulus", m_modulus, "character modulus for dirichlet_L");
    mom->add_option("--char-index", m_idx, "character index");
    mom->add_option("--tmax", m_tmax, "truncation height");
    mom->add_option("--tol", m_tol, "relative tolerance per panel");

    // phi2
    auto* phi2 = app.add_subcommand("phi2", "phi_2 (or phi_3) values; CSV columns: x,route,value,closed_form");
    std::string p_x = "1,2,3,4,5,6,7,8,9,10";
    int p_n = 2;
    std::size_t p_jmax = 100000;
    phi2->add_option("--x", p_x, "comma list of arguments");
    phi2->add_option("--n", p_n, "convolution order 1..3");
    phi2->add_option("--j-max", p_jmax, "truncation of the summatory route");

    // damped
    auto* damped = app.add_subcommand("damped", "damped integrals vs asymptotics; CSV columns: T,lhs,rhs,residual,scaled_residual");
    std::string d_kind = "frac_over_x", d_T = "50,100,200,400";
    int d_k = 1;
    damped->add_option("--kind", d_kind, "frac_over_x, frac_sq_over_x_sq or log_weighted")
        ->check(CLI::IsMember({"frac_over_x", "frac_sq_over_x_sq", "log_weighted"}));
    damped->add_option("--T", d_T, "comma list of T");
    damped->add_option("--k", d_k, "power of ln x for log_weighted");

    // fracint
    auto* fracint = app.add_subcommand("fracint", "fractional-part integrals; CSV columns: quantity,route,value");
    double f_sigma = 0.75;
    int f_n = 2;
    bool f_p1 = false;
    fracint->add_option("--sigma", f_sigma, "sigma");
    fracint->add_option("--n", f_n, "power of {x}");
    fracint->add_flag("--p1-square", f_p1, "all routes to int_1^inf P_1^2 x^{-2sigma-1} dx");

    // conjecture1
    auto* conj = app.add_subcommand("conjecture1", "probe s^2 int_1^inf phi(x) x^{-s-1} dx; CSV columns: s,cutoff,partial,tail,scaled");
    std::string c_s = "0.2,0.1,0.05,0.02";
    std::size_t c_X = 1000000;
    conj->add_option("--s", c_s, "comma list of s");
    conj->add_option("--X", c_X, "table cutoff");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*verify) {
            RunConfig cfg;
            std::string path = v_config.empty() ? config_path_from_env() : v_config;
            if (!path.empty()) cfg = load_config(path);
            if (v_tol > 0) cfg.rel_tol_default = v_tol;
            if (v_tmax > 0) cfg.tmax_critical = v_tmax;
            if (v_workers > 0) cfg.worker_count = v_workers;
            if (!v_out.empty()) cfg.output_path = v_out;
            if (verify->count("--format")) cfg.format = parse_format(v_format);
            cfg.validate();

            SuiteOptions o;
            o.ids = split(v_ids);
            for (auto& t : split(v_tags)) o.tags.insert(t);
            if (cfg.rel_tol_default > 0) o.tol = cfg.rel_tol_default;
            o.tmax_critical = cfg.tmax_critical;
            o.workers = cfg.worker_count;
            o.heavy = v_heavy;
            if (v_budget > 0) o.budget_seconds = v_budget;
            auto rep = make_report(cfg, run_all(o));
            Sink sink(cfg.output_path);
            if (cfg.format == OutputFormat::json)
                *sink.os << report_json(rep, !v_no_timing).dump(2) << '\n';
            else
                write_report(*sink.os, rep, cfg.format);
            if (!cfg.output_path.empty()) std::cerr << "passed " << rep.summary.passed << " / " << rep.summary.total << '\n';
            return exit_code(rep);
        }
        if (*list) {
            for (const auto& c : registry()) {
                std::string tags;
                for (auto& t : c.tags) tags += (tags.empty() ? "" : ",") + t;
                std::printf("%-9s %-17s %3zu pts %s  [%s]%s\n", c.id.c_str(), check_kind_name(c.kind).c_str(), c.grid.size(),
                            c.description.c_str(), tags.c_str(), c.heavy ? " heavy" : "");
            }
            return 0;
        }
        if (*eval) {
            const Complex s = parse_complex(e_s);
            if (e_fn == "hurwitz") {
                Complex v = e_order ? hurwitz_zeta_sderiv(e_order, s, e_a) : hurwitz_zeta(s, e_a);
                std::cout << cnum(v) << "  (rel. precision ~1e-12)\n";
            } else if (e_fn == "alt") {
                Complex v = e_order ? alt_hurwitz_zeta_sderiv(s, e_a) : alt_hurwitz_zeta(s, e_a);
                std::cout << cnum(v) << "  (rel. precision ~1e-12)\n";
            } else if (e_fn == "lerch") {
                std::cout << cnum(lerch_phi({parse_complex(e_z), s, e_a})) << "  (rel. precision ~1e-10)\n";
            } else if (e_fn == "zeta") {
                std::cout << cnum(riemann_zeta(s)) << "  (rel. precision ~1e-12)\n";
            } else if (e_fn == "L") {
                std::cout << cnum(dirichlet_L(s, pick_character(e_mod, e_idx))) << "  (rel. precision ~1e-12)\n";
            } else if (e_fn == "digamma") {
                std::cout << num(digamma(e_a)) << "  (rel. precision ~1e-14)\n";
            } else if (e_fn == "polygamma") {
                std::cout << num(polygamma(e_k, e_a)) << "  (rel. precision ~1e-13)\n";
            } else {
                std::cout << num(cosine_integral(e_a)) << "  (abs. precision ~1e-12)\n";
            }
            return 0;
        }
        if (*mom) {
            MomentSpec sp;
            auto k = parse_kind(m_kind);
            if (!k) throw UsageError("unknown kind " + m_kind);
            auto md = parse_modulation(m_mod);
            if (!md) throw UsageError("unknown modulation " + m_mod);
            sp.kind = *k;
            sp.sigma = m_sigma;
            sp.a = m_a;
            sp.z = parse_complex(m_z);
            sp.weight_power = m_weight;
            sp.modulation = *md;
            sp.zeta_power = m_zpow;
            if (m_modulus > 0) sp.character = pick_character(m_modulus, m_idx);
            MomentOptions o;
            o.t_max = m_tmax;
            auto r = moment_integral(sp, m_tol, o);
            Json j{{"kind", m_kind},
                   {"sigma", m_sigma},
                   {"value", r.value},
                   {"abs_error_estimate", r.abs_error_estimate},
                   {"tail_estimate", r.tail_estimate},
                   {"truncation_height", r.truncation_height},
                   {"nodes_used", r.nodes_used},
                   {"converged", r.converged},
                   {"note", r.note}};
            std::cout << j.dump(2) << '\n';
            return 0;
        }
        if (*phi2) {
            std::cout << "x,route,value,closed_form\n";
            for (double x : split_doubles(p_x)) {
                auto v = phi_n(p_n, x);
                const bool integer = p_n == 2 && x == std::floor(x) && x >= 1 && x <= 10;
                const std::string closed = integer ? num(phi2_closed(static_cast<int>(x))) : "";
                std::cout << num(x) << ',' << route_name(v.route) << ',' << num(v.value) << ',' << closed << '\n';
                if (p_n == 2 && x > 0) std::cout << num(x) << ",summatory," << num(phi2_summatory(x, p_jmax)) << ',' << closed << '\n';
            }
            return 0;
        }
        if (*damped) {
            DampedKind kind = d_kind == "frac_over_x" ? DampedKind::frac_over_x
                              : d_kind == "frac_sq_over_x_sq" ? DampedKind::frac_sq_over_x_sq
                                                               : DampedKind::log_weighted;
            Asymptotic form = kind == DampedKind::frac_over_x        ? Asymptotic::frac_over_x
                              : kind == DampedKind::frac_sq_over_x_sq ? Asymptotic::frac_sq_over_x_sq
                                                                      : Asymptotic::log_weighted;
            // residual order: T^3, T^4, and for the log-weighted leading term ln^k T
            std::cout << "T,lhs,rhs,residual,scaled_residual\n";
            for (double T : split_doubles(d_T)) {
                long double l = damped_integral(kind, T, d_k);
                double r = damped_asymptotic_rhs(form, T, d_k);
                double res = static_cast<double>(l - r);
                double scale = kind == DampedKind::frac_over_x ? std::pow(T, 3)
                               : kind == DampedKind::frac_sq_over_x_sq ? std::pow(T, 4)
                                                                       : 1.0 / std::pow(std::log(T), d_k);
                std::cout << num(T) << ',' << num(static_cast<double>(l)) << ',' << num(r) << ',' << num(res) << ','
                          << num(res * scale) << '\n';
            }
            return 0;
        }
        if (*fracint) {
            std::cout << "quantity,route,value\n";
            if (f_p1) {
                for (auto r : {P1SquareRoute::quadrature, P1SquareRoute::first_closed, P1SquareRoute::second_closed,
                               P1SquareRoute::telescoped, P1SquareRoute::first_closed_fixed})
                    std::cout << "p1_square," << p1_route_name(r) << ',' << num(p1_square_integral(f_sigma, r)) << '\n';
            } else {
                std::cout << "moment_frac,hurwitz," << num(moment_frac(f_n, f_sigma)) << '\n';
                std::cout << "moment_frac,segments," << num(moment_frac_direct(f_n, f_sigma)) << '\n';
            }
            return 0;
        }
        if (*conj) {
            std::cout << "s,cutoff,partial,tail,scaled\n";
            for (const auto& r : conjecture1_probe(split_doubles(c_s), c_X))
                std::cout << num(r.s) << ',' << r.cutoff << ',' << num(r.partial) << ',' << num(r.tail) << ',' << num(r.scaled) << '\n';
            return 0;
        }
    } catch (const UnknownIdError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
