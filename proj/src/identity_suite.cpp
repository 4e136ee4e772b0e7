#include "zm/identity_suite.hpp"

#include "zm/frac_integrals.hpp"
#include "zm/quadrature.hpp"
#include "zm/rhs_series.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>
#include <thread>

namespace zm {

std::string check_kind_name(CheckKind k) {
    switch (k) {
        case CheckKind::equality: return "equality";
        case CheckKind::inequality: return "inequality";
        case CheckKind::asymptotic_order: return "asymptotic_order";
        case CheckKind::cross_route: return "cross_route";
    }
    return "?";
}

Json to_json(const CheckResult& r, bool with_runtime) {
    Json j{{"id", r.id},
           {"params", r.params},
           {"lhs", r.lhs},
           {"rhs", r.rhs},
           {"abs_err", r.abs_err},
           {"rel_err", r.rel_err},
           {"tail_estimate", r.tail_estimate},
           {"tolerance", r.tolerance},
           {"pass", r.pass},
           {"kind", r.kind},
           {"paper_eq", r.paper_eq}};
    if (r.skipped) j["skipped"] = true;
    if (!r.diagnostic.empty()) j["diagnostic"] = r.diagnostic;
    if (with_runtime) j["runtime_ms"] = r.runtime_ms;
    return j;
}

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMomentTol = 1e-9;

double zr(double s, double a = 1.0) { return hurwitz_zeta(Complex(s, 0), a).real(); }
double zd(int order, double s, double a = 1.0) { return hurwitz_zeta_sderiv(order, Complex(s, 0), a).real(); }
double za(double s, double a) { return alt_hurwitz_zeta(Complex(s, 0), a).real(); }
double gam() { return constants().euler_gamma; }

double num(const Json& p, const char* key) { return p.at(key).get<double>(); }
double num_or(const Json& p, const char* key, double fallback) {
    return p.contains(key) ? p.at(key).get<double>() : fallback;
}

std::string fmt(double v) {
    std::ostringstream o;
    o.precision(12);
    o << v;
    return o.str();
}

Side from_quad(const QuadratureResult& q, double scale = 1.0) {
    return {q.value * scale, q.abs_error_estimate * std::fabs(scale), q.tail_estimate * std::fabs(scale), q.note};
}

Side moment(const MomentSpec& sp, const EvalContext& ctx, double scale = 1.0) {
    MomentOptions o;
    if (sp.sigma <= 1.0) o.t_max = ctx.tmax_critical;
    return from_quad(moment_integral(sp, kMomentTol, o), scale);
}

MomentSpec spec(IntegrandKind k, double sigma, double a = 1.0, int w = 2, Modulation m = Modulation::none) {
    MomentSpec s;
    s.kind = k;
    s.sigma = sigma;
    s.a = a;
    s.weight_power = w;
    s.modulation = m;
    return s;
}

Side value(double v, double err = 0.0, std::string note = {}) { return {v, err, 0.0, std::move(note)}; }

// cartesian product of named value lists
std::vector<GridPoint> grid(std::vector<std::pair<std::string, std::vector<Json>>> axes, double tol) {
    std::vector<Json> pts{Json::object()};
    for (auto& [name, vals] : axes) {
        std::vector<Json> next;
        for (auto& p : pts)
            for (auto& v : vals) {
                Json q = p;
                q[name] = v;
                next.push_back(q);
            }
        pts = std::move(next);
    }
    std::vector<GridPoint> out;
    for (auto& p : pts) out.push_back({p, tol});
    return out;
}

void append(std::vector<GridPoint>& g, std::vector<GridPoint> more) { g.insert(g.end(), more.begin(), more.end()); }

const DirichletCharacter& character(unsigned k, unsigned index) {
    static std::mutex mu;
    static std::map<unsigned, std::vector<DirichletCharacter>> cache;
    std::lock_guard lk(mu);
    auto it = cache.find(k);
    if (it == cache.end()) it = cache.emplace(k, characters_mod(k)).first;
    if (index >= it->second.size()) throw DomainError("character index out of range");
    return it->second[index];
}

const DirichletCharacter& principal(unsigned k) {
    for (unsigned i = 0;; ++i)
        if (character(k, i).is_principal) return character(k, i);
}

const Phi2Table& phi_table() {
    static const Phi2Table t(200000);
    return t;
}

// slope and intercept of y against x
std::pair<double, double> linear_fit(const std::vector<double>& x, const std::vector<double>& y) {
    Eigen::MatrixXd A(x.size(), 2);
    Eigen::VectorXd b(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        A(i, 0) = x[i];
        A(i, 1) = 1.0;
        b(i) = y[i];
    }
    Eigen::VectorXd c = A.colPivHouseholderQr().solve(b);
    return {c(0), c(1)};
}

std::vector<double> logspace(double lo, double hi, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1));
    return v;
}

bool in_bracket(double v, const Json& p) { return v >= num(p, "lo") && v <= num(p, "hi"); }

double damped_residual(DampedKind kind, double T) {
    const Asymptotic form = kind == DampedKind::frac_over_x ? Asymptotic::frac_over_x : Asymptotic::frac_sq_over_x_sq;
    return static_cast<double>(damped_integral(kind, T) - static_cast<long double>(damped_asymptotic_rhs(form, T)));
}

// appendix pieces of the P_1-based evaluation of int |zeta(s)/s|^2
double piece_a4(double s) { return kPi * (s - 1) / (2 * s - 1) * (1 / (s - 1) - 1 / s); }
double piece_a5(double s) { return kPi / (2 * s) * (zr(2 * s) - 1 / (2 * s - 1)); }
double piece_a5_corrected(double s) { return kPi / s * (zr(2 * s) - 0.25 - 1 / (2 * s - 1)); }
double piece_a6(double s) { return kPi / (2 * s - 1) * (-1 / s + 1 / (s - 1)); }
double piece_a9(double s) {
    return 4 * kPi * ((zr(2 * s - 1) - 0.5 - 1 / (2 * (s - 1))) / (2 * s - 1) - (zr(2 * s) - 0.5 - 1 / (2 * s - 1)) / (2 * s));
}

P1SquareRoute parse_p1_route(const std::string& s) {
    for (auto r : {P1SquareRoute::quadrature, P1SquareRoute::first_closed, P1SquareRoute::second_closed,
                   P1SquareRoute::telescoped, P1SquareRoute::first_closed_fixed})
        if (p1_route_name(r) == s) return r;
    throw DomainError("unknown P1 route " + s);
}

RealFn poly(int deg) {
    return [deg](double y) { return std::pow(y, deg); };
}

std::vector<IdentityCheck> build_registry() {
    std::vector<IdentityCheck> R;
    auto add = [&](IdentityCheck c) { R.push_back(std::move(c)); };
    const std::vector<Json> sig_hi{1.25, 1.5, 2.0};
    const std::vector<Json> a_p1{0.5, 1.0, 1.7};
    const auto eq = CheckKind::equality;
    const auto cross = CheckKind::cross_route;

    add({"P1a", "second moment of the Hurwitz zeta function", "int |zeta(s,a)/s|^2 dt = (pi/sigma)[2 zeta(2sigma-1,a)+(1-2a) zeta(2sigma,a)]",
         {"moment", "hurwitz"}, eq, false, grid({{"sigma", sig_hi}, {"a", a_p1}}, 1e-6),
         [](const Json& p, const EvalContext& c) { return moment(spec(IntegrandKind::hurwitz, num(p, "sigma"), num(p, "a")), c); },
         [](const Json& p, const EvalContext&) {
             double s = num(p, "sigma"), a = num(p, "a");
             return value(kPi / s * (2 * zr(2 * s - 1, a) + (1 - 2 * a) * zr(2 * s, a)));
         }});

    add({"P1b", "second moment of the s-derivative of the Hurwitz zeta function",
         "int |zeta'(s,a)/s|^2 dt = (pi/sigma)[zeta''(2sigma,a) + 2 sum_m ln((a)_m) ln(m+a) (m+a)^{-2sigma}]",
         {"moment", "hurwitz", "series"}, eq, false, grid({{"sigma", sig_hi}, {"a", a_p1}}, 1e-6),
         [](const Json& p, const EvalContext& c) { return moment(spec(IntegrandKind::hurwitz_sderiv, num(p, "sigma"), num(p, "a")), c); },
         [](const Json& p, const EvalContext&) {
             double s = num(p, "sigma"), a = num(p, "a");
             auto sv = series_logpoch_log(s, a);
             return value(kPi / s * (zd(2, 2 * s, a) + 2 * sv.value), 2 * kPi / s * sv.truncation);
         }});

    add({"C1", "Hurwitz moment at a = 1/2", "int |(2^s-1) zeta(s)/s|^2 dt = 2(pi/sigma)(2^{2sigma-1}-1) zeta(2sigma-1)",
         {"moment", "hurwitz", "corollary"}, eq, false, grid({{"sigma", sig_hi}}, 1e-6),
         [](const Json& p, const EvalContext& c) { return moment(spec(IntegrandKind::hurwitz, num(p, "sigma"), 0.5), c); },
         [](const Json& p, const EvalContext&) {
             double s = num(p, "sigma");
             return value(2 * kPi / s * (std::pow(2.0, 2 * s - 1) - 1) * zr(2 * s - 1));
         }});

    add({"C2", "second moment of the Riemann zeta function", "int |zeta(s)/s|^2 dt = (pi/sigma)[2 zeta(2sigma-1) - zeta(2sigma)]",
         {"moment", "riemann", "corollary"}, eq, false, grid({{"sigma", sig_hi}}, 1e-6),
         [](const Json& p, const EvalContext& c) { return moment(spec(IntegrandKind::riemann, num(p, "sigma")), c); },
         [](const Json& p, const EvalContext&) {
             double s = num(p, "sigma");
             return value(kPi / s * (2 * zr(2 * s - 1) - zr(2 * s)));
         }});

    {
        auto g = grid({{"sigma", {0.75, 1.5}}, {"a", {0.5, 1.0, 2.0}}}, 1e-6);
        append(g, grid({{"sigma", {0.5}}, {"a", {0.5, 1.0, 2.0}}}, 2e-3));
        add({"P2", "second moment of the alternating Hurwitz zeta function", "int |zeta_a(s,a)/s|^2 dt = (pi/sigma) zeta_a(2sigma,a)",
             {"moment", "alternating"}, eq, false, g,
             [](const Json& p, const EvalContext& c) { return moment(spec(IntegrandKind::alt_hurwitz, num(p, "sigma"), num(p, "a")), c); },
             [](const Json& p, const EvalContext&) {
                 double s = num(p, "sigma"), a = num(p, "a");
                 return value(kPi / s * za(2 * s, a));
             }});
    }
    {
        auto g = grid({{"sigma", {0.75, 1.5}}}, 1e-6);
        append(g, grid({{"sigma", {0.5}}}, 2e-3));
        add({"C3", "alternating zeta moment", "int |zeta_a(s)/s|^2 dt = (pi/sigma)(1-2^{1-2sigma}) zeta(2sigma)",
             {"moment", "alternating", "corollary"}, eq, false, g,
             [](const Json& p, const EvalContext& c) { return moment(spec(IntegrandKind::alt_hurwitz, num(p, "sigma"), 1.0), c); },
             [](const Json& p, const EvalContext&) {
                 double s = num(p, "sigma");
                 // (1-2^{1-2sigma}) zeta(2sigma) -> ln 2 at sigma = 1/2
                 double eta = std::fabs(s - 0.5) < 1e-12 ? std::numbers::ln2 : (1 - std::pow(2.0, 1 - 2 * s)) * zr(2 * s);
                 return value(kPi / s * eta);
             }});
    }

    add({"C4", "alternating Hurwitz moment on the critical line", "int |zeta_a(1/2+it,a)/(1/2+it)|^2 dt = pi[psi((1+a)/2) - psi(a/2)]",
         {"moment", "alternating", "critical", "corollary"}, eq, false, grid({{"a", {0.5, 1.0, 2.0}}}, 2e-3),
         [](const Json& p, const EvalContext& c) { return moment(spec(IntegrandKind::alt_hurwitz, 0.5, num(p, "a")), c); },
         [](const Json& p, const EvalContext&) {
             double a = num(p, "a");
             return value(kPi * (digamma((1 + a) / 2) - digamma(a / 2)));
         }});

    add({"C5", "alternating Hurwitz moment at a = 1/2 on the critical line", "int |zeta_a(1/2+it,1/2)/(1/2+it)|^2 dt = pi^2",
         {"moment", "alternating", "critical", "corollary"}, eq, false, grid({{"a", {0.5}}}, 2e-3),
         [](const Json& p, const EvalContext& c) { return moment(spec(IntegrandKind::alt_hurwitz, 0.5, num(p, "a")), c); },
         [](const Json&, const EvalContext&) { return value(kPi * kPi); }});

    add({"C6", "alternating Hurwitz moment at a = 2 on the critical line", "int |zeta_a(1/2+it,2)/(1/2+it)|^2 dt = 2 pi (1 - ln 2)",
         {"moment", "alternating", "critical", "corollary"}, eq, false, grid({{"a", {2.0}}}, 2e-3),
         [](const Json& p, const EvalContext& c) { return moment(spec(IntegrandKind::alt_hurwitz, 0.5, num(p, "a")), c); },
         [](const Json&, const EvalContext&) { return value(2 * kPi * (1 - std::numbers::ln2)); }});

    add({"C7a", "Mellin integral of Ivic's phi", "int_1^inf phi(x)/x^2 dx = ln^2 2", {"frac", "phi"}, eq, false,
         grid({{"cutoff", {100000}}}, 5e-3),
         [](const Json& p, const EvalContext&) {
             auto r = phi_over_x2_integral(p.at("cutoff").get<std::size_t>());
             return Side{r.value, 0.0, std::fabs(r.tail), "fitted c1 ln x + c0 tail beyond cutoff"};
         },
         [](const Json&, const EvalContext&) { return value(std::numbers::ln2 * std::numbers::ln2); }});

    add({"C7b", "modulated moment on sigma = 1", "int_0^inf [1-cos(t ln 2)] |zeta(1+it)|^2 dt/(1+t^2) = pi^3/48",
         {"moment", "riemann", "critical"}, eq, false, grid({{"sigma", {1.0}}}, 2e-3),
         [](const Json& p, const EvalContext& c) {
             return moment(spec(IntegrandKind::riemann, num(p, "sigma"), 1.0, 2, Modulation::one_minus_cos_t_ln2), c, 0.5);
         },
         [](const Json&, const EvalContext&) { return value(kPi * kPi * kPi / 48); }});

    add({"C7c", "fourth-power modulated moment against the square integral of phi",
         "int_0^inf [1-cos(t ln 2)]^2 |zeta(1+it)|^4 dt/(1+t^2)^2 = int_1^inf phi^2(x)/x^3 dx", {"moment", "riemann", "phi"}, cross,
         true, grid({{"sigma", {1.0}}}, 1e-2),
         [](const Json& p, const EvalContext& c) {
             auto sp = spec(IntegrandKind::riemann, num(p, "sigma"), 1.0, 4, Modulation::one_minus_cos_sq);
             sp.zeta_power = 4;
             return moment(sp, c, 0.5);
         },
         [](const Json&, const EvalContext&) {
             auto r = phi_sq_over_x3_integral();
             return Side{r.value, 0.0, std::fabs(r.tail), "fitted tail beyond cutoff"};
         },
         {},
         [](const Side& l, const Side& r, const Json&) {
             return "lhs/rhs = " + fmt(l.value / r.value) + "; Parseval over the full line with this weight gives pi/4 = " +
                    fmt(kPi / 4);
         }});

    {
        std::vector<GridPoint> g;
        for (Json z : {Json{0.5, 0.0}, Json{0.3, 0.4}, Json{-1.0, 0.0}})
            for (double s : {1.25, 1.5})
                for (double a : {0.5, 1.0}) g.push_back({Json{{"z", z}, {"sigma", s}, {"a", a}}, 1e-6});
        auto zof = [](const Json& p) { return Complex(p.at("z")[0].get<double>(), p.at("z")[1].get<double>()); };
        auto rhs_c = [zof](const Json& p) {
            double s = num(p, "sigma"), a = num(p, "a");
            Complex z = zof(p);
            return (kPi / s) / (z - 1.0) *
                   ((z + 1.0) * lerch_phi({Complex(std::norm(z), 0), Complex(2 * s, 0), a}) -
                    2.0 * lerch_phi({std::conj(z), Complex(2 * s, 0), a}));
        };
        add({"P3", "second moment of the Lerch transcendent",
             "int |Phi(z,s,a)/s|^2 dt = (pi/sigma)/(z-1) [(z+1) Phi(|z|^2,2sigma,a) - 2 Phi(z*,2sigma,a)] (real part)",
             {"moment", "lerch"}, eq, false, g,
             [zof](const Json& p, const EvalContext& c) {
                 auto sp = spec(IntegrandKind::lerch, num(p, "sigma"), num(p, "a"));
                 sp.z = zof(p);
                 return moment(sp, c);
             },
             [rhs_c](const Json& p, const EvalContext&) { return value(rhs_c(p).real()); }, {},
             [rhs_c](const Side&, const Side&, const Json& p) {
                 double im = rhs_c(p).imag();
                 return im == 0.0 ? std::string{} : "imaginary part of the printed right side: " + fmt(im);
             }});
    }

    add({"P4a", "moment of 1/zeta", "int |zeta(s)|^{-2} dt/|s|^2 = (pi/sigma)[zeta(2sigma)/zeta(4sigma) + 2 sum_m mu(m) M(m-1) m^{-2sigma}]",
         {"moment", "arithmetic", "series"}, eq, false, grid({{"sigma", {1.1, 1.5}}}, 1e-6),
         [](const Json& p, const EvalContext& c) { return moment(spec(IntegrandKind::inverse_zeta, num(p, "sigma")), c); },
         [](const Json& p, const EvalContext&) {
             double s = num(p, "sigma");
             auto sv = series_mobius(s);
             return Side{kPi / s * (zr(2 * s) / zr(4 * s) + 2 * sv.value), 0.0, 2 * kPi / s * sv.truncation,
                         "Mertens series summed by parts to the sieve limit"};
         },
         {},
         [](const Side&, const Side&, const Json& p) {
             double s = num(p, "sigma");
             auto a = series_mobius_partial(s, 10000), b = series_mobius_partial(s, 40000);
             return "partial sums at 1e4 and 4e4 differ by " + fmt(std::fabs(a.value - b.value)) + " (truncation estimate " +
                    fmt(a.truncation) + ")";
         }});

    add({"P4b", "moment of 1/zeta is dominated by the moment of zeta", "int |zeta(s)|^{-2} dt/|s|^2 <= int |zeta(s)/s|^2 dt",
         {"moment", "arithmetic"}, CheckKind::inequality, false, grid({{"sigma", {1.1, 1.25, 1.5}}}, 1e-6),
         [](const Json& p, const EvalContext& c) { return moment(spec(IntegrandKind::inverse_zeta, num(p, "sigma")), c); },
         [](const Json& p, const EvalContext&) {
             double s = num(p, "sigma");
             return value(kPi / s * (2 * zr(2 * s - 1) - zr(2 * s)));
         },
         [](const Side& l, const Side& r, const Json&, double) {
             return r.value - l.value > l.error + l.tail + r.error + r.tail;
         },
         [](const Side& l, const Side& r, const Json&) { return "margin " + fmt(r.value - l.value); }});

    add({"P4c", "moment of zeta^2", "int |zeta^2(s)/s|^2 dt = (pi/sigma)[zeta^4(2sigma)/zeta(4sigma) + 2 sum_m d(m) D(m-1) m^{-2sigma}]",
         {"moment", "arithmetic", "series"}, eq, false, grid({{"sigma", {1.1, 1.5}}}, 1e-6),
         [](const Json& p, const EvalContext& c) { return moment(spec(IntegrandKind::zeta_squared, num(p, "sigma")), c); },
         [](const Json& p, const EvalContext&) {
             double s = num(p, "sigma");
             auto sv = series_divisor(s);
             double z2 = zr(2 * s);
             return Side{kPi / s * (z2 * z2 * z2 * z2 / zr(4 * s) + 2 * sv.value), 0.0, 2 * kPi / s * sv.truncation,
                         "divisor main terms in closed form, Delta(m) part summed"};
         }});

    {
        std::vector<GridPoint> g;
        for (unsigned k : {3u, 4u, 5u}) {
            auto chars = characters_mod(k);
            for (unsigned i = 0; i < chars.size(); ++i) {
                const bool pr = chars[i].is_principal;
                for (double s : pr ? std::vector<double>{1.25, 1.5} : std::vector<double>{0.75, 1.5})
                    g.push_back({Json{{"modulus", k}, {"index", i}, {"principal", pr}, {"sigma", s}}, 1e-6});
            }
        }
        add({"P5", "second moment of Dirichlet L-functions",
             "int |L(s,chi)/s|^2 dt = (pi/sigma)[L(2sigma,chi_0) + 2 Re sum_m sum_{n<m} chi(n) chi*(m) m^{-2sigma}]",
             {"moment", "dirichlet"}, eq, false, g,
             [](const Json& p, const EvalContext& c) {
                 auto sp = spec(IntegrandKind::dirichlet_L, num(p, "sigma"));
                 sp.character = character(p.at("modulus").get<unsigned>(), p.at("index").get<unsigned>());
                 return moment(sp, c);
             },
             [](const Json& p, const EvalContext&) {
                 double s = num(p, "sigma");
                 unsigned k = p.at("modulus").get<unsigned>();
                 const auto& chi = character(k, p.at("index").get<unsigned>());
                 Complex ser = series_character(s, chi);
                 return value(kPi / s * (dirichlet_L(Complex(2 * s, 0), principal(k)).real() + 2 * ser.real()));
             }});
    }

    add({"P6a", "Hurwitz moment with the |s|^-4 weight",
         "int |zeta(s,a)|^2/|s|^4 dt = (pi/sigma^2)[zeta(2sigma-1,a)/sigma + (1/2-a) zeta(2sigma,a)/sigma - zeta'(2sigma-1,a) + a zeta'(2sigma,a) - sum_m ln((a)_m) (m+a)^{-2sigma}]",
         {"moment", "hurwitz", "series"}, eq, false, grid({{"sigma", sig_hi}, {"a", a_p1}}, 1e-6),
         [](const Json& p, const EvalContext& c) { return moment(spec(IntegrandKind::hurwitz, num(p, "sigma"), num(p, "a"), 4), c); },
         [](const Json& p, const EvalContext&) {
             double s = num(p, "sigma"), a = num(p, "a");
             auto sv = series_logpoch(s, a);
             return value(kPi / (s * s) *
                              (zr(2 * s - 1, a) / s + (0.5 - a) * zr(2 * s, a) / s - zd(1, 2 * s - 1, a) + a * zd(1, 2 * s, a) - sv.value),
                          kPi / (s * s) * sv.truncation);
         }});

    add({"P6b", "Riemann moment with the |s|^-4 weight",
         "int |zeta(s)|^2/|s|^4 dt = (pi/sigma^2)[zeta(2sigma-1)/sigma - zeta(2sigma)/(2sigma) - zeta'(2sigma-1) + zeta'(2sigma) - sum_m ln((m-1)!) m^{-2sigma}]",
         {"moment", "riemann", "series"}, eq, false, grid({{"sigma", sig_hi}}, 1e-6),
         [](const Json& p, const EvalContext& c) { return moment(spec(IntegrandKind::riemann, num(p, "sigma"), 1.0, 4), c); },
         [](const Json& p, const EvalContext&) {
             double s = num(p, "sigma");
             auto sv = series_logpoch(s, 1.0);
             return value(kPi / (s * s) * (zr(2 * s - 1) / s - zr(2 * s) / (2 * s) - zd(1, 2 * s - 1) + zd(1, 2 * s) - sv.value),
                          kPi / (s * s) * sv.truncation);
         }});

    add({"P6c", "alternating Hurwitz moment with the |s|^-4 weight",
         "int |zeta_a(s,a)|^2/|s|^4 dt = (pi/(2sigma^2))[zeta_a(2sigma,a)/sigma - zeta_a'(2sigma,a) + zeta'(2sigma,a) - 2 sum_m sum_{n<m} (-1)^{m+n} ln(n+a) (m+a)^{-2sigma}]",
         {"moment", "alternating", "series"}, eq, false, grid({{"sigma", {0.75, 1.5}}, {"a", {0.5, 1.0, 2.0}}}, 1e-6),
         [](const Json& p, const EvalContext& c) { return moment(spec(IntegrandKind::alt_hurwitz, num(p, "sigma"), num(p, "a"), 4), c); },
         [](const Json& p, const EvalContext&) {
             double s = num(p, "sigma"), a = num(p, "a");
             auto sv = series_alt_double(s, a);
             double azp = alt_hurwitz_zeta_sderiv(Complex(2 * s, 0), a).real();
             return value(kPi / (2 * s * s) * (za(2 * s, a) / s - azp + zd(1, 2 * s, a) - 2 * sv.value), kPi / (s * s) * sv.truncation);
         }});

    auto p7_closed = [](double s) {
        // sigma = 1/2 is the removable limit ln(2 pi) - gamma
        if (std::fabs(s - 0.5) < 1e-12) return constants().log_two_pi - gam();
        return -(1 / s) * (zr(2 * s) / 2 + zr(2 * s - 1) / (2 * s - 1));
    };
    add({"P7", "critical-strip moment through the fractional-part integral",
         "(1/2pi) int |zeta(s)|^2 dt/|s|^2 = int_0^inf {x}^2 x^{-2sigma-1} dx = -(1/sigma)[zeta(2sigma)/2 + zeta(2sigma-1)/(2sigma-1)]",
         {"frac", "riemann"}, eq, false, grid({{"sigma", {0.25, 0.5, 0.75}}}, 1e-8),
         [](const Json& p, const EvalContext&) { return value(moment_frac(2, num(p, "sigma"))); },
         [p7_closed](const Json& p, const EvalContext&) { return value(p7_closed(num(p, "sigma"))); }});

    add({"C8a", "Riemann moment on the critical line", "int |zeta(1/2+it)|^2 dt/(t^2+1/4) = 2 pi [ln(2 pi) - gamma]",
         {"moment", "riemann", "critical", "corollary"}, eq, true, grid({{"sigma", {0.5}}}, 2e-3),
         [](const Json& p, const EvalContext& c) { return moment(spec(IntegrandKind::riemann, num(p, "sigma")), c); },
         [](const Json&, const EvalContext&) { return value(2 * kPi * (constants().log_two_pi - gam())); }});

    add({"C8b", "cos(t ln 2)-modulated Riemann moment on the critical line",
         "int cos(t ln 2) |zeta(1/2+it)|^2 dt/(t^2+1/4) = (pi/sqrt 2)[2 ln 2 + 3 ln pi - 3 gamma]",
         {"moment", "riemann", "critical", "corollary"}, eq, true, grid({{"sigma", {0.5}}}, 2e-3),
         [](const Json& p, const EvalContext& c) {
             return moment(spec(IntegrandKind::riemann, num(p, "sigma"), 1.0, 2, Modulation::cos_t_ln2), c);
         },
         [](const Json&, const EvalContext&) {
             return value(kPi / std::numbers::sqrt2 * (2 * std::numbers::ln2 + 3 * std::log(kPi) - 3 * gam()));
         }});

    auto order_check = [&](std::string id, std::string desc, std::string formula, DampedKind kind, double predicted, double lo,
                           double hi) {
        add({std::move(id), std::move(desc), std::move(formula), {"asymptotic", "damped"}, CheckKind::asymptotic_order, false,
             grid({{"T", {50.0, 100.0, 200.0}}, {"lo", {lo}}, {"hi", {hi}}}, 1.0),
             [kind](const Json& p, const EvalContext&) {
                 double T = num(p, "T");
                 double r1 = damped_residual(kind, T), r2 = damped_residual(kind, 2 * T);
                 return Side{r1 / r2, 0.0, 0.0, "residual(T)/residual(2T)"};
             },
             [predicted](const Json&, const EvalContext&) { return value(predicted, 0.0, "doubling ratio for the stated order"); },
             [](const Side& l, const Side&, const Json& p, double) { return in_bracket(l.value, p); },
             [kind](const Side&, const Side&, const Json& p) {
                 double T = num(p, "T");
                 int ord = kind == DampedKind::frac_over_x ? 3 : 4;
                 return "residual*T^" + std::to_string(ord) + " = " + fmt(damped_residual(kind, T) * std::pow(T, ord));
             }});
    };
    order_check("P8a", "damped integral of {x}/x: remainder order",
                "int_0^inf {x}/x e^{-x/T} dx = (1/2)[ln T - gamma + ln 2pi] + 1/(12T) + O(T^-3)", DampedKind::frac_over_x, 8.0,
                4.0, 16.0);
    order_check("P8b", "damped integral of {x}^2/x^2: remainder order",
                "int_0^inf {x}^2/x^2 e^{-x/T} dx = ln 2pi - gamma + [-2+2gamma+12 ln A - 3 ln 2pi - 2 ln T]/(6T) - 1/(24T^2) + 1/(2160T^3) + O(T^-4)",
                DampedKind::frac_sq_over_x_sq, 16.0, 8.0, 32.0);

    add({"P9", "growth of phi_2 and phi_3",
         "phi_2(x) = (1/4) ln x + (1/2) ln 2pi + o(1); phi_n(x) = ln^{n-1}x/(2^n (n-1)!) + n ln(2pi) ln^{n-2}x/(2^n (n-2)!) + O(ln^{n-3} x)",
         {"asymptotic", "phi"}, CheckKind::asymptotic_order, false,
         {{Json{{"n", 2}, {"x_lo", 1e3}, {"x_hi", 1e5}, {"lo", 0.23}, {"hi", 0.27}}, 1.0},
          {Json{{"n", 3}, {"x_lo", 1e2}, {"x_hi", 1e4}}, 0.10}},
         [](const Json& p, const EvalContext&) {
             const int n = p.at("n").get<int>();
             const auto& tab = phi_table();
             auto xs = logspace(num(p, "x_lo"), num(p, "x_hi"), n == 2 ? 4001 : 801);
             std::vector<double> lx, y;
             for (double x : xs) {
                 double L = std::log(x);
                 lx.push_back(L);
                 y.push_back(n == 2 ? tab.phi2(x) - constants().log_two_pi / 2 : tab.phi3(x) - L * L / 16);
             }
             auto [slope, icpt] = linear_fit(lx, y);
             return Side{slope, 0.0, 0.0, "fitted ln x coefficient, intercept " + fmt(icpt)};
         },
         [](const Json& p, const EvalContext&) {
             return value(p.at("n").get<int>() == 2 ? 0.25 : 3.0 / 8.0 * constants().log_two_pi);
         },
         [](const Side& l, const Side& r, const Json& p, double tol) {
             if (p.contains("lo")) return in_bracket(l.value, p);
             return std::fabs(l.value / r.value - 1) <= tol;
         }});

    {
        auto g = grid({{"k", {1, 2, 3, 4, 5, 6, 7, 8, 9, 10}}, {"route", {"decomposition"}}}, 1e-6);
        append(g, grid({{"k", {1, 2, 3, 4, 5}}, {"route", {"summatory"}}, {"j_max", {100000}}}, 1e-6));
        add({"P10", "special values of phi_2", "phi_2(1) = 2(1-gamma), ..., phi_2(10) = 20(1-gamma) + 11 ln(5/2) - 2 ln 5103",
             {"frac", "phi"}, eq, false, g,
             [](const Json& p, const EvalContext&) {
                 double k = num(p, "k");
                 if (p.at("route") == "summatory") return value(phi2_summatory(k, p.at("j_max").get<std::size_t>()));
                 return value(phi_n(2, k).value);
             },
             [](const Json& p, const EvalContext&) { return value(phi2_closed(p.at("k").get<int>())); }});
    }

    add({"P11a", "damped log-weighted integral, k = 1", "int_0^inf {x}/x ln x e^{-x/T} dx = (1/4) ln^2 T + O(ln T)",
         {"asymptotic", "damped"}, CheckKind::asymptotic_order, false, grid({{"T", {1e4}}, {"lo", {0.9}}, {"hi", {1.1}}}, 1.0),
         [](const Json& p, const EvalContext&) {
             double T = num(p, "T");
             return Side{static_cast<double>(damped_integral(DampedKind::log_weighted, T, 1)) /
                             damped_asymptotic_rhs(Asymptotic::log_weighted, T, 1),
                         0.0, 0.0, "lhs / leading term"};
         },
         [](const Json&, const EvalContext&) { return value(1.0); },
         [](const Side& l, const Side&, const Json& p, double) { return in_bracket(l.value, p); }});

    add({"P11b", "damped log-weighted integrals, leading coefficient",
         "int_0^inf {x}/x ln^k x e^{-x/T} dx = (-1)^{k+1} ln^{k+1} T/(2 (k+1)!) + lower order", {"asymptotic", "damped"},
         CheckKind::asymptotic_order, false, grid({{"k", {2, 3}}, {"T_lo", {50.0}}, {"T_hi", {1e4}}}, 0.05),
         [](const Json& p, const EvalContext&) {
             const int k = p.at("k").get<int>();
             auto Ts = logspace(num(p, "T_lo"), num(p, "T_hi"), 30);
             Eigen::MatrixXd A(Ts.size(), k + 2);
             Eigen::VectorXd b(Ts.size());
             for (std::size_t i = 0; i < Ts.size(); ++i) {
                 double L = std::log(Ts[i]);
                 for (int j = 0; j <= k + 1; ++j) A(i, j) = std::pow(L, j);
                 b(i) = static_cast<double>(damped_integral(DampedKind::log_weighted, Ts[i], k));
             }
             Eigen::VectorXd c = A.colPivHouseholderQr().solve(b);
             return Side{c(k + 1), 0.0, 0.0, "fitted coefficient of ln^{k+1} T"};
         },
         [](const Json& p, const EvalContext&) {
             const int k = p.at("k").get<int>();
             return value(damped_asymptotic_rhs(Asymptotic::log_weighted, std::numbers::e, k));
         },
         [](const Side& l, const Side& r, const Json&, double tol) { return std::fabs(l.value / r.value - 1) <= tol; },
         [](const Side& l, const Side&, const Json& p) {
             const int k = p.at("k").get<int>();
             return "fit " + fmt(l.value) + " against 1/(2(k+1)) = " + fmt(1.0 / (2 * (k + 1)));
         }});

    add({"L1", "fractional-part integrals through the Hurwitz zeta function",
         "int_1^inf f({x}) x^{-lambda} dx = int_0^1 f(y) zeta(lambda,y+1) dy", {"frac", "lemma"}, cross, false,
         grid({{"degree", {0, 1, 2, 3}}, {"lambda", {2.2, 3.0, 4.0}}}, 1e-9),
         [](const Json& p, const EvalContext&) { return value(frac_power_direct(poly(p.at("degree").get<int>()), num(p, "lambda"))); },
         [](const Json& p, const EvalContext&) { return value(lemma1_transform(poly(p.at("degree").get<int>()), num(p, "lambda"))); }});

    add({"L2a", "I_1 against its cosine-integral series", "I_1(x) = P_1(x) + 1/2 + 2x sum_j Ci(2 pi j x)", {"frac", "lemma"}, cross,
         false, grid({{"x", {1.5, 2.5, 3.7, 2.0}}, {"terms", {10000}}}, 1e-6),
         [](const Json& p, const EvalContext&) { return value(i1(num(p, "x"))); },
         [](const Json& p, const EvalContext&) { return value(i1_ci_series(num(p, "x"), p.at("terms").get<unsigned>())); }});

    add({"L2b", "I_1 at integers", "I_1(k) = k psi(k) - k ln k + 1", {"frac", "lemma"}, eq, false,
         grid({{"k", {1, 2, 3, 4, 5}}}, 1e-8),
         [](const Json& p, const EvalContext&) { return value(i1(num(p, "k"))); },
         [](const Json& p, const EvalContext&) {
             double k = num(p, "k");
             return value(k * digamma(k) - k * std::log(k) + 1);
         }});

    add({"Ci-sum", "lattice sums of the cosine integral", "sum_{j>=1} Ci(2 pi j k) = psi(k)/2 - (ln k)/2 + 1/(4k)",
         {"special", "lemma"}, eq, false, grid({{"k", {1, 2, 3, 4, 5}}}, 1e-8),
         [](const Json& p, const EvalContext&) { return value(ci_lattice_sum(num(p, "k"))); },
         [](const Json& p, const EvalContext&) {
             double k = num(p, "k");
             return value(digamma(k) / 2 - std::log(k) / 2 + 1 / (4 * k));
         }});

    add({"E257", "tail integral of {u}/u^2", "int_k^inf {u}/u^2 du = H_k - gamma - ln k", {"frac"}, eq, false,
         grid({{"k", {1, 2, 3, 5, 10}}}, 1e-10),
         [](const Json& p, const EvalContext&) { return value(tail_frac_numeric(num(p, "k"))); },
         [](const Json& p, const EvalContext&) { return value(tail_frac_integral(p.at("k").get<unsigned>())); }});

    add({"E226", "fractional-part moment by segments against the closed form",
         "int_0^inf {x}^2 x^{-2sigma-1} dx = -(1/sigma)[zeta(2sigma)/2 + zeta(2sigma-1)/(2sigma-1)]", {"frac"}, eq, false,
         grid({{"sigma", {0.25, 0.5, 0.75}}}, 1e-9),
         [](const Json& p, const EvalContext&) { return value(moment_frac_direct(2, num(p, "sigma"))); },
         [p7_closed](const Json& p, const EvalContext&) { return value(p7_closed(num(p, "sigma"))); }});

    add({"Kernel", "Fourier kernels of the moment evaluations",
         "int_R cos(alpha t)/(sigma^2+t^2) dt = (pi/sigma) e^{-|alpha| sigma}; int_R cos(alpha t)/(sigma^2+t^2)^2 dt = (pi/(2sigma^2))(|alpha| + 1/sigma) e^{-|alpha| sigma}",
         {"appendix", "quadrature"}, eq, false,
         grid({{"power", {1, 2}}, {"alpha", {0.0, std::numbers::ln2, 1.0, 3.0}}, {"sigma", {0.5, 1.0, 2.0}}}, 1e-8),
         [](const Json& p, const EvalContext&) {
             const int pw = p.at("power").get<int>();
             double al = num(p, "alpha"), s = num(p, "sigma");
             RealFn g = [s, pw](double t) { return std::pow(s * s + t * t, -pw); };
             QuadratureResult q = al == 0.0 ? integrate_semi_infinite(g, 0.0, DecayModel::power(2.0 * pw), 1e-12)
                                            : integrate_fourier(g, al, Trig::cos, 0.0, 1e-12);
             return from_quad(q, 2.0);
         },
         [](const Json& p, const EvalContext&) {
             const int pw = p.at("power").get<int>();
             double al = std::fabs(num(p, "alpha")), s = num(p, "sigma");
             double e = std::exp(-al * s);
             return value(pw == 1 ? kPi / s * e : kPi / (2 * s * s) * (al + 1 / s) * e);
         }});

    {
        std::vector<GridPoint> g{{Json{{"form", "denominator"}, {"sigma", 1.5}, {"x", 1.0}}, 1e-8}};
        for (const char* f : {"cos", "sin"})
            for (double x : {2.0, std::numbers::e, 10.0}) g.push_back({Json{{"form", f}, {"sigma", 1.5}, {"x", x}}, 1e-8});
        add({"PF", "partial-fraction integrals",
             "int_R dt/((sigma^2+t^2)((sigma-1)^2+t^2)) = (pi/(2sigma-1))(1/(sigma-1) - 1/sigma); -int_R t^2 cos(t ln x)/(...) dt = -(pi/(2sigma-1)) x^{1-sigma}[sigma/x - (sigma-1)]; (2sigma-1) int_R t sin(t ln x)/(...) dt = pi x^{1-sigma}(1 - 1/x)",
             {"appendix", "quadrature"}, eq, false, g,
             [](const Json& p, const EvalContext&) {
                 double s = num(p, "sigma"), x = num(p, "x"), b = s - 1;
                 const std::string f = p.at("form");
                 auto den = [s, b](double t) { return (s * s + t * t) * (b * b + t * t); };
                 if (f == "denominator")
                     return from_quad(integrate_semi_infinite([den](double t) { return 1 / den(t); }, 0.0, DecayModel::power(4), 1e-12), 2.0);
                 if (f == "cos")
                     return from_quad(integrate_fourier([den](double t) { return t * t / den(t); }, std::log(x), Trig::cos, 0.0, 1e-12), -2.0);
                 return from_quad(integrate_fourier([den](double t) { return t / den(t); }, std::log(x), Trig::sin, 0.0, 1e-12),
                                  2.0 * (2 * s - 1));
             },
             [](const Json& p, const EvalContext&) {
                 double s = num(p, "sigma"), x = num(p, "x");
                 const std::string f = p.at("form");
                 if (f == "denominator") return value(piece_a6(s));
                 if (f == "cos") return value(-kPi / (2 * s - 1) * std::pow(x, 1 - s) * (s / x - (s - 1)));
                 return value(kPi * std::pow(x, 1 - s) * (1 - 1 / x));
             }});
    }

    {
        std::vector<GridPoint> g;
        for (double s : {0.8, 1.2, 1.5, 3.0}) {
            g.push_back({Json{{"sigma", s}, {"lhs_route", "first_closed"}, {"rhs_route", "second_closed"}}, 1e-12});
            g.push_back({Json{{"sigma", s}, {"lhs_route", "telescoped"}, {"rhs_route", "second_closed"}}, 1e-12});
            g.push_back({Json{{"sigma", s}, {"lhs_route", "quadrature"}, {"rhs_route", "second_closed"}}, 1e-9});
        }
        add({"A-routes", "three closed forms and quadrature for the P_1 square integral", "int_1^inf P_1(x)^2 x^{-2sigma-1} dx by four routes",
             {"appendix", "frac"}, cross, false, g,
             [](const Json& p, const EvalContext&) {
                 return value(p1_square_integral(num(p, "sigma"), parse_p1_route(p.at("lhs_route"))));
             },
             [](const Json& p, const EvalContext&) {
                 return value(p1_square_integral(num(p, "sigma"), parse_p1_route(p.at("rhs_route"))));
             },
             {},
             [](const Side&, const Side&, const Json& p) -> std::string {
                 if (p.at("lhs_route") != "first_closed") return {};
                 return "first closed form without the (1/2sigma)[zeta(2sigma)-1] term: " +
                        fmt(p1_square_integral(num(p, "sigma"), P1SquareRoute::first_closed_fixed));
             }});
    }

    add({"A1", "reassembly of the Riemann moment from its P_1 pieces",
         "int |zeta(s)/s|^2 dt = [1/(s-1) cross terms] + [1/4 and P_1 linear terms] + [P_1/(s-1) terms] + 2 pi int_1^inf P_1^2 x^{-2sigma-1} dx",
         {"appendix", "riemann"}, cross, false, grid({{"sigma", sig_hi}}, 1e-9),
         [](const Json& p, const EvalContext&) {
             double s = num(p, "sigma");
             double i12 = p1_square_integral(s, P1SquareRoute::second_closed);
             return value(piece_a4(s) + piece_a5(s) + piece_a9(s) + 2 * kPi * i12, 0.0, "printed pieces");
         },
         [](const Json& p, const EvalContext&) {
             double s = num(p, "sigma");
             return value(kPi / s * (2 * zr(2 * s - 1) - zr(2 * s)));
         },
         {},
         [](const Side&, const Side&, const Json& p) {
             double s = num(p, "sigma");
             double i12 = p1_square_integral(s, P1SquareRoute::second_closed);
             double fixed = piece_a4(s) + piece_a6(s) + piece_a5_corrected(s) + piece_a9(s) + 2 * kPi * i12;
             return "with the 1/|s-1|^2 piece and the corrected linear piece: " + fmt(fixed);
         }});

    add({"M24", "Parseval for the Mellin pair of {x}", "int_R |zeta(s)|^2 dt/|s|^2 = 2 pi int_0^inf {x}^2 x^{-2sigma-1} dx, 0 < sigma < 1",
         {"moment", "riemann", "frac"}, cross, true, grid({{"sigma", {0.25, 0.75}}}, 2e-3),
         [](const Json& p, const EvalContext& c) {
             return moment(spec(IntegrandKind::riemann, num(p, "sigma")), c, 1.0 / (2 * kPi));
         },
         [](const Json& p, const EvalContext&) { return value(moment_frac(2, num(p, "sigma"))); }});

    std::sort(R.begin(), R.end(), [](const IdentityCheck& a, const IdentityCheck& b) { return a.id < b.id; });
    return R;
}

struct Task {
    const IdentityCheck* check;
    GridPoint point;
};

CheckResult execute(const Task& t, const SuiteOptions& opts) {
    const auto& c = *t.check;
    CheckResult r;
    r.id = c.id;
    r.params = t.point.params;
    r.kind = check_kind_name(c.kind);
    r.paper_eq = c.paper_eq;
    r.tolerance = opts.tol.value_or(t.point.tolerance);
    // bracket predicates carry their own limits; a global tolerance only applies to relative checks
    if (opts.tol && c.kind == CheckKind::asymptotic_order && t.point.params.contains("lo")) r.tolerance = t.point.tolerance;
    EvalContext ctx;
    ctx.tmax_critical = num_or(r.params, "tmax", opts.tmax_critical);
    const auto t0 = std::chrono::steady_clock::now();
    try {
        Side l = c.lhs(r.params, ctx);
        Side h = c.rhs(r.params, ctx);
        r.lhs = l.value;
        r.rhs = h.value;
        r.abs_err = std::fabs(l.value - h.value);
        r.rel_err = h.value != 0.0 ? r.abs_err / std::fabs(h.value) : r.abs_err;
        r.tail_estimate = l.tail + h.tail;
        if (c.predicate)
            r.pass = c.predicate(l, h, r.params, r.tolerance);
        else
            r.pass = std::isfinite(r.rel_err) && r.rel_err <= r.tolerance;
        std::string diag;
        if (c.diagnostic) diag = c.diagnostic(l, h, r.params);
        for (const auto& n : {l.note, h.note})
            if (!n.empty()) diag += (diag.empty() ? "" : "; ") + n;
        r.diagnostic = diag;
    } catch (const std::exception& e) {
        r.pass = false;
        r.diagnostic = std::string("evaluation error: ") + e.what();
    }
    r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

std::vector<GridPoint> apply_overrides(const std::vector<GridPoint>& grid, const Json& overrides) {
    if (overrides.is_null() || overrides.empty()) return grid;
    // naming a complete grid point selects it as is
    for (const auto& g : grid)
        if (g.params == overrides) return {g};
    std::vector<GridPoint> out;
    for (auto g : grid) {
        for (auto it = overrides.begin(); it != overrides.end(); ++it) g.params[it.key()] = it.value();
        // a point that lands on an existing grid entry keeps that entry's tolerance
        for (const auto& orig : grid)
            if (orig.params == g.params) g.tolerance = orig.tolerance;
        bool dup = std::any_of(out.begin(), out.end(), [&](const GridPoint& o) { return o.params == g.params; });
        if (!dup) out.push_back(g);
    }
    return out;
}

std::vector<CheckResult> run_tasks(const std::vector<Task>& tasks, const SuiteOptions& opts) {
    std::vector<CheckResult> results(tasks.size());
    std::atomic<std::size_t> next{0};
    std::mutex hook_mu;
    const auto start = std::chrono::steady_clock::now();
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            if (opts.budget_seconds && elapsed > *opts.budget_seconds) {
                auto& r = results[i];
                r.id = tasks[i].check->id;
                r.params = tasks[i].point.params;
                r.kind = check_kind_name(tasks[i].check->kind);
                r.paper_eq = tasks[i].check->paper_eq;
                r.tolerance = tasks[i].point.tolerance;
                r.skipped = true;
                r.diagnostic = "skipped: time budget exhausted";
            } else {
                results[i] = execute(tasks[i], opts);
            }
            if (opts.on_result) {
                std::lock_guard lk(hook_mu);
                opts.on_result(results[i]);
            }
        }
    };
    const int nw = std::max(1, std::min<int>(opts.workers, static_cast<int>(tasks.size())));
    if (nw == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int w = 0; w < nw; ++w) pool.emplace_back(worker);
    }
    return results;
}

}  // namespace

const std::vector<IdentityCheck>& registry() {
    static const std::vector<IdentityCheck> R = build_registry();
    return R;
}

const IdentityCheck* lookup(const std::string& id) {
    for (const auto& c : registry())
        if (c.id == id) return &c;
    return nullptr;
}

std::vector<CheckResult> run_check(const std::string& id, const Json& overrides, const SuiteOptions& opts) {
    const IdentityCheck* c = lookup(id);
    if (!c) throw UnknownIdError("unknown identity id: " + id);
    std::vector<Task> tasks;
    for (auto& g : apply_overrides(c->grid, overrides)) tasks.push_back({c, g});
    return run_tasks(tasks, opts);
}

std::vector<CheckResult> run_all(const SuiteOptions& opts) {
    for (const auto& id : opts.ids)
        if (!lookup(id)) throw UnknownIdError("unknown identity id: " + id);
    std::vector<Task> tasks;
    for (const auto& c : registry()) {  // registry is sorted by id
        if (!opts.ids.empty() && std::find(opts.ids.begin(), opts.ids.end(), c.id) == opts.ids.end()) continue;
        if (!opts.tags.empty() &&
            std::none_of(c.tags.begin(), c.tags.end(), [&](const std::string& t) { return opts.tags.count(t) > 0; }))
            continue;
        // heavy checks run when requested explicitly by id or with the heavy flag
        if (c.heavy && !opts.heavy && opts.ids.empty()) continue;
        for (const auto& g : c.grid) tasks.push_back({&c, g});
    }
    return run_tasks(tasks, opts);
}

}  // namespace zm
