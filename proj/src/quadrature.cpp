#include "zm/quadrature.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <queue>
#include <unordered_map>

namespace zm {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLn2 = std::numbers::ln2;

constexpr long double kXgk[8] = {
    0.991455371120812639206854697526329L, 0.949107912342758524526189684047851L,
    0.864864423359769072789712788640926L, 0.741531185599394439863864773280788L,
    0.586087235467691130294144845693013L, 0.405845151377397166906606412076961L,
    0.207784955007898467600689403773245L, 0.0L};
constexpr long double kWgk[8] = {
    0.022935322010529224963732008058970L, 0.063092092629978553290700663189204L,
    0.104790010322250183839876322541518L, 0.140653259715525918745189590510238L,
    0.169004726639267902826583426598550L, 0.190350578064785409913256402421014L,
    0.204432940075298892414161999234649L, 0.209482141084727828012999174891714L};
constexpr long double kWg[4] = {
    0.129484966168869693270611432679082L, 0.279705391489276667901467771423780L,
    0.381830050505118944950369775488975L, 0.417959183673469387755102040816327L};

template <class T, class F>
void gk15(const F& f, T lo, T hi, T& value, T& err, T& resabs)
{
    const T c = (lo + hi) / 2, h = (hi - lo) / 2;
    const T fc = f(c);
    T rk = fc * static_cast<T>(kWgk[7]);
    T rg = fc * static_cast<T>(kWg[3]);
    T ra = std::fabs(rk);
    for (int j = 0; j < 7; ++j) {
        const T dx = h * static_cast<T>(kXgk[j]);
        const T f1 = f(c - dx), f2 = f(c + dx);
        rk += static_cast<T>(kWgk[j]) * (f1 + f2);
        ra += static_cast<T>(kWgk[j]) * (std::fabs(f1) + std::fabs(f2));
        if (j % 2 == 1) rg += static_cast<T>(kWg[j / 2]) * (f1 + f2);
    }
    value = rk * h;
    err = std::fabs((rk - rg) * h);
    resabs = ra * std::fabs(h);
}

struct Piece {
    double lo, hi, value, err;
    bool operator<(const Piece& o) const { return err < o.err; }
};

// Neumaier summation of values ordered by interval start
double ordered_sum(std::vector<Piece>& pieces)
{
    std::sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) { return a.lo < b.lo; });
    double s = 0.0, c = 0.0;
    for (const auto& p : pieces) {
        const double t = s + p.value;
        if (std::fabs(s) >= std::fabs(p.value))
            c += (s - t) + p.value;
        else
            c += (p.value - t) + s;
        s = t;
    }
    return s + c;
}

struct AdaptiveOut {
    QuadratureResult r;
    double resabs = 0.0;
};

AdaptiveOut adaptive_impl(const RealFn& f, double lo, double hi, double rel_tol,
                          std::span<const double> breakpoints, double abs_floor, int max_sub)
{
    if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi))
        throw DomainError("integrate_adaptive: need finite lo < hi");
    if (rel_tol < 1e-14) throw DomainError("integrate_adaptive: rel_tol must be >= 1e-14");

    std::vector<double> cuts{lo};
    for (double b : breakpoints)
        if (b > lo && b < hi && b > cuts.back()) cuts.push_back(b);
    cuts.push_back(hi);

    AdaptiveOut out;
    std::priority_queue<Piece> heap;
    std::vector<Piece> done;
    double total_err = 0.0, total_val = 0.0, total_abs = 0.0;
    std::size_t nodes = 0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        double v, e, a;
        gk15<double>(f, cuts[i], cuts[i + 1], v, e, a);
        nodes += 15;
        heap.push({cuts[i], cuts[i + 1], v, e});
        total_err += e;
        total_val += v;
        total_abs += a;
    }
    int sub = 0;
    bool ok = true;
    while (total_err > std::max(rel_tol * std::fabs(total_val), abs_floor)) {
        if (heap.empty()) break;
        if (sub >= max_sub) {
            ok = false;
            break;
        }
        Piece p = heap.top();
        heap.pop();
        const double mid = 0.5 * (p.lo + p.hi);
        if (!(mid > p.lo && mid < p.hi) || (p.hi - p.lo) < 1e-13 * std::max(1.0, std::fabs(mid))) {
            done.push_back(p);  // cannot refine further
            continue;
        }
        double v1, e1, a1, v2, e2, a2;
        gk15<double>(f, p.lo, mid, v1, e1, a1);
        gk15<double>(f, mid, p.hi, v2, e2, a2);
        nodes += 30;
        ++sub;
        total_err += e1 + e2 - p.err;
        total_val += v1 + v2 - p.value;
        heap.push({p.lo, mid, v1, e1});
        heap.push({mid, p.hi, v2, e2});
    }
    while (!heap.empty()) {
        done.push_back(heap.top());
        heap.pop();
    }
    double err = 0.0;
    for (const auto& p : done) err += p.err;
    out.r.value = ordered_sum(done);
    out.r.abs_error_estimate = err;
    out.r.truncation_height = hi;
    out.r.nodes_used = nodes;
    out.r.converged = ok;
    if (!ok) out.r.note = "maximum subdivisions reached";
    out.resabs = total_abs;
    return out;
}

long double adaptive_ld_rec(const std::function<long double(long double)>& f, long double lo, long double hi,
                            long double tol, int depth, std::size_t& nodes)
{
    long double v, e, a;
    gk15<long double>(f, lo, hi, v, e, a);
    nodes += 15;
    if (e <= tol || depth >= 40) return v;
    const long double mid = (lo + hi) / 2;
    return adaptive_ld_rec(f, lo, mid, tol / 2, depth + 1, nodes) +
           adaptive_ld_rec(f, mid, hi, tol / 2, depth + 1, nodes);
}

}  // namespace

QuadratureResult integrate_adaptive(const RealFn& f, double lo, double hi, double rel_tol,
                                    std::span<const double> breakpoints, double abs_floor, int max_subdivisions)
{
    return adaptive_impl(f, lo, hi, rel_tol, breakpoints, abs_floor, max_subdivisions).r;
}

long double integrate_adaptive_ld(const std::function<long double(long double)>& f, long double lo,
                                  long double hi, long double rel_tol, std::size_t* nodes)
{
    long double v, e, a;
    gk15<long double>(f, lo, hi, v, e, a);
    std::size_t n = 15;
    const long double tol = std::max(rel_tol * a, 1e-30L);
    long double r = (e <= tol) ? v : adaptive_ld_rec(f, lo, hi, tol, 0, n);
    if (nodes) *nodes += n;
    return r;
}

QuadratureResult integrate_semi_infinite(const RealFn& f, double lo, DecayModel model, double rel_tol,
                                         const SemiInfiniteOptions& opts)
{
    if (model.kind == DecayModel::Kind::power && !(model.param > 1.0))
        throw DomainError("integrate_semi_infinite: power model needs p > 1");
    if (model.kind == DecayModel::Kind::exponential && !(model.param > 0.0))
        throw DomainError("integrate_semi_infinite: exponential model needs rate > 0");

    QuadratureResult res;
    double partial = 0.0, err = 0.0, tail = 0.0;
    double b = lo;
    std::vector<double> chunk_vals;
    const double p = model.param;
    int chunks = 0;
    while (true) {
        double next;
        if (model.kind == DecayModel::Kind::exponential)
            next = b + 2.0 / p;
        else
            next = (b < 1.0) ? std::max(b + 1.0, 1.0) : 2.0 * b;
        next = std::min(next, opts.t_max);
        std::vector<double> br;
        if (opts.breaks) br = opts.breaks(b, next);
        auto chunk = adaptive_impl(f, b, next, 0.1 * rel_tol, br, 1e-300, 200000);
        partial += chunk.r.value;
        err += chunk.r.abs_error_estimate;
        res.nodes_used += chunk.r.nodes_used;
        res.converged = res.converged && chunk.r.converged;
        chunk_vals.push_back(chunk.resabs);
        ++chunks;

        // fit the model amplitude on this chunk
        switch (model.kind) {
        case DecayModel::Kind::power: {
            const double lo_b = std::max(b, 1e-300);
            const double basis = (std::pow(lo_b, 1 - p) - std::pow(next, 1 - p)) / (p - 1);
            tail = chunk.r.value / basis * std::pow(next, 1 - p) / (p - 1);
            break;
        }
        case DecayModel::Kind::exponential: {
            const double basis = (std::exp(-p * b) - std::exp(-p * next)) / p;
            tail = chunk.r.value / basis * std::exp(-p * next) / p;
            break;
        }
        case DecayModel::Kind::zeta_mean_growth: {
            const double lb = std::max(b, 1.0);
            const double basis = (std::log(lb) + 1) / lb - (std::log(next) + 1) / next;
            tail = chunk.r.value / basis * (std::log(next) + 1) / next;
            break;
        }
        }
        b = next;
        if (b >= opts.t_max) break;
        if (model.kind != DecayModel::Kind::zeta_mean_growth && chunks >= 3 &&
            std::fabs(tail) < 0.1 * rel_tol * std::fabs(partial))
            break;
    }

    // observed decay against the declared model
    if (chunk_vals.size() >= 3 && model.kind == DecayModel::Kind::power) {
        const double r1 = chunk_vals[chunk_vals.size() - 1], r0 = chunk_vals[chunk_vals.size() - 2];
        if (r0 > 0 && r1 > 0) {
            const double slope = std::log2(r1 / r0);
            if (std::fabs(slope - (1 - p)) > 0.5 * std::fabs(1 - p)) res.decay_warning = true;
        }
    } else if (chunk_vals.size() >= 3 && model.kind == DecayModel::Kind::exponential) {
        const double r1 = chunk_vals[chunk_vals.size() - 1], r0 = chunk_vals[chunk_vals.size() - 2];
        if (r0 > 0 && r1 > 0) {
            const double rate = -std::log(r1 / r0) / (2.0 / p);
            if (std::fabs(rate - p) > 0.5 * p) res.decay_warning = true;
        }
    }

    res.value = partial;
    if (model.kind == DecayModel::Kind::zeta_mean_growth) {
        res.value += tail;
        res.note = "tail from fitted mean-value model";
    }
    res.abs_error_estimate = err;
    res.tail_estimate = std::fabs(tail);
    res.truncation_height = b;
    if (res.decay_warning) res.note += res.note.empty() ? "decay inconsistent with model" : "; decay inconsistent with model";
    return res;
}

QuadratureResult integrate_fourier(const RealFn& g, double alpha, Trig trig, double lo, double rel_tol,
                                   double x_max)
{
    alpha = std::fabs(alpha);
    QuadratureResult res;
    if (alpha == 0.0) {
        if (trig == Trig::sin) {
            res.truncation_height = lo;
            return res;
        }
        std::vector<double> br;
        for (double x = std::max(lo, 1.0); x < x_max; x *= 2) br.push_back(x);
        auto body = adaptive_impl(g, lo, x_max, 0.1 * rel_tol, br, 1e-300, 100000).r;
        // algebraic tail from the local decay exponent
        const double X = x_max, h = X * 1e-3;
        const double p = -(std::log(std::fabs(g(X + h))) - std::log(std::fabs(g(X - h)))) /
                         (std::log(X + h) - std::log(X - h));
        const double tail = g(X) * X / (p - 1.0);
        res = body;
        res.value += tail;
        res.tail_estimate = std::fabs(tail);
        res.truncation_height = X;
        return res;
    }
    const double half = kPi / alpha;
    const double X = std::ceil((x_max - lo) / half) * half + lo;
    std::vector<double> br;
    for (double x = lo + half; x < X - 0.5 * half; x += half) br.push_back(x);
    auto f = [&](double t) { return g(t) * (trig == Trig::cos ? std::cos(alpha * t) : std::sin(alpha * t)); };
    auto body = adaptive_impl(f, lo, X, 0.1 * rel_tol, br, 1e-300, 1000000).r;

    // derivatives of g at X by 5-point stencils
    const double h = X / 50.0;
    const double gm2 = g(X - 2 * h), gm1 = g(X - h), g0 = g(X), gp1 = g(X + h), gp2 = g(X + 2 * h);
    const double d1 = (gm2 - 8 * gm1 + 8 * gp1 - gp2) / (12 * h);
    const double d2 = (-gm2 + 16 * gm1 - 30 * g0 + 16 * gp1 - gp2) / (12 * h * h);
    const double d3 = (-gm2 + 2 * gm1 - 2 * gp1 + gp2) / (2 * h * h * h);
    const double s = std::sin(alpha * X), c = std::cos(alpha * X);
    const double a1 = alpha, a2 = a1 * alpha, a3 = a2 * alpha, a4 = a3 * alpha;
    double tail;
    if (trig == Trig::cos)
        tail = -s * g0 / a1 - c * d1 / a2 + s * d2 / a3 + c * d3 / a4;
    else
        tail = c * g0 / a1 - s * d1 / a2 - c * d2 / a3 + s * d3 / a4;
    res = body;
    res.value += tail;
    res.tail_estimate = std::fabs(tail);
    res.truncation_height = X;
    return res;
}

// ---------------------------------------------------------------------------

std::string kind_name(IntegrandKind k)
{
    switch (k) {
    case IntegrandKind::hurwitz: return "hurwitz";
    case IntegrandKind::alt_hurwitz: return "alt_hurwitz";
    case IntegrandKind::lerch: return "lerch";
    case IntegrandKind::riemann: return "riemann";
    case IntegrandKind::inverse_zeta: return "inverse_zeta";
    case IntegrandKind::zeta_squared: return "zeta_squared";
    case IntegrandKind::dirichlet_L: return "dirichlet_L";
    case IntegrandKind::hurwitz_sderiv: return "hurwitz_sderiv";
    case IntegrandKind::alt_hurwitz_sderiv: return "alt_hurwitz_sderiv";
    }
    return "?";
}

std::optional<IntegrandKind> parse_kind(const std::string& s)
{
    for (auto k : {IntegrandKind::hurwitz, IntegrandKind::alt_hurwitz, IntegrandKind::lerch, IntegrandKind::riemann,
                   IntegrandKind::inverse_zeta, IntegrandKind::zeta_squared, IntegrandKind::dirichlet_L,
                   IntegrandKind::hurwitz_sderiv, IntegrandKind::alt_hurwitz_sderiv})
        if (kind_name(k) == s) return k;
    return std::nullopt;
}

std::string modulation_name(Modulation m)
{
    switch (m) {
    case Modulation::none: return "none";
    case Modulation::cos_t_ln2: return "cos_t_ln2";
    case Modulation::one_minus_cos_t_ln2: return "one_minus_cos_t_ln2";
    case Modulation::one_minus_cos_sq: return "one_minus_cos_sq";
    }
    return "?";
}

std::optional<Modulation> parse_modulation(const std::string& s)
{
    for (auto m : {Modulation::none, Modulation::cos_t_ln2, Modulation::one_minus_cos_t_ln2, Modulation::one_minus_cos_sq})
        if (modulation_name(m) == s) return m;
    return std::nullopt;
}

void validate_moment_spec(const MomentSpec& sp)
{
    const double s = sp.sigma;
    auto fail = [&](const std::string& why) { throw DomainError("moment_integral: " + why); };
    if (!std::isfinite(s) || s <= 0.0) fail("sigma must be > 0");
    if (sp.weight_power != 2 && sp.weight_power != 4) fail("weight_power must be 2 or 4");
    if (sp.zeta_power != 2 && sp.zeta_power != 4) fail("zeta_power must be 2 or 4");
    if (sp.zeta_power == 4 && sp.kind != IntegrandKind::riemann) fail("zeta_power 4 only for the riemann kind");
    if (!(sp.a > 0.0)) fail("a must be > 0");
    switch (sp.kind) {
    case IntegrandKind::hurwitz:
    case IntegrandKind::hurwitz_sderiv:
    case IntegrandKind::inverse_zeta:
    case IntegrandKind::zeta_squared:
        if (s <= 1.0) fail(kind_name(sp.kind) + " requires sigma > 1");
        break;
    case IntegrandKind::alt_hurwitz:
    case IntegrandKind::alt_hurwitz_sderiv: break;
    case IntegrandKind::lerch:
        if (std::abs(sp.z) > 1.0 + 1e-12) fail("|z| must be <= 1");
        if (std::abs(sp.z - 1.0) < 1e-15 && s <= 1.0) fail("lerch with z = 1 requires sigma > 1");
        if (std::abs(std::abs(sp.z) - 1.0) <= 1e-12 && std::abs(sp.z + 1.0) > 1e-15 && s <= 1.0)
            fail("lerch with |z| = 1, z != -1 requires sigma > 1");
        break;
    case IntegrandKind::riemann:
        if (std::fabs(s - 1.0) < 1e-12 && sp.modulation != Modulation::one_minus_cos_t_ln2 &&
            sp.modulation != Modulation::one_minus_cos_sq)
            fail("riemann at sigma = 1 needs a modulation that removes the pole");
        break;
    case IntegrandKind::dirichlet_L:
        if (!sp.character) fail("dirichlet_L needs a character");
        if (sp.character->is_principal && s <= 1.0) fail("principal character requires sigma > 1");
        break;
    }
    if (sp.weight_power == 4 && sp.kind != IntegrandKind::hurwitz && sp.kind != IntegrandKind::riemann &&
        sp.kind != IntegrandKind::alt_hurwitz)
        fail("weight_power 4 only for hurwitz, riemann and alt_hurwitz kinds");
}

namespace {

struct NodeCache {
    std::mutex mu;
    std::map<std::string, std::unordered_map<std::uint64_t, double>> tables;
};

NodeCache& node_cache()
{
    static NodeCache c;
    return c;
}

std::string factor_key(const MomentSpec& sp, double t_max)
{
    char buf[256];
    std::snprintf(buf, sizeof buf, "%s|%a|%a|%a|%a|%d|%a", kind_name(sp.kind).c_str(), sp.sigma, sp.a, sp.z.real(),
                  sp.z.imag(), sp.zeta_power, t_max);
    std::string k = buf;
    if (sp.character) {
        k += "|chi" + std::to_string(sp.character->modulus) + ":";
        for (int e : sp.character->exponent) k += std::to_string(e) + ",";
    }
    return k;
}

// returns |F(s)|^p + |F~(s)|^p where F~ has conjugated coefficients (so that the
// sum is the even part of the integrand over the whole line)
std::function<double(double)> make_factor(const MomentSpec& sp, double t_max)
{
    const double s = sp.sigma;
    using Line = std::shared_ptr<HurwitzLine>;
    auto sym = [](std::function<Complex(double)> F, std::function<Complex(double)> Fc,
                  std::function<double(double)> h) -> std::function<double(double)> {
        if (!Fc) return [F, h](double t) { return 2.0 * h(std::norm(F(t))); };
        return [F, Fc, h](double t) { return h(std::norm(F(t))) + h(std::norm(Fc(t))); };
    };
    auto line_fn = [](Line L) { return std::function<Complex(double)>([L](double t) { return (*L)(t); }); };
    const auto sq = [](double n) { return n; };
    switch (sp.kind) {
    case IntegrandKind::hurwitz:
    case IntegrandKind::hurwitz_sderiv: {
        const int d = sp.kind == IntegrandKind::hurwitz ? 0 : 1;
        return sym(line_fn(std::make_shared<HurwitzLine>(s, std::vector<HurwitzTerm>{{1.0, sp.a}}, t_max, d)), {}, sq);
    }
    case IntegrandKind::alt_hurwitz:
    case IntegrandKind::alt_hurwitz_sderiv: {
        const int d = sp.kind == IntegrandKind::alt_hurwitz ? 0 : 1;
        std::vector<HurwitzTerm> t{{1.0, sp.a / 2}, {-1.0, (sp.a + 1) / 2}};
        return sym(line_fn(std::make_shared<HurwitzLine>(s, t, t_max, d, 2.0)), {}, sq);
    }
    case IntegrandKind::riemann:
    case IntegrandKind::inverse_zeta:
    case IntegrandKind::zeta_squared: {
        auto L = line_fn(std::make_shared<HurwitzLine>(s, std::vector<HurwitzTerm>{{1.0, 1.0}}, t_max, 0));
        if (sp.kind == IntegrandKind::inverse_zeta) return sym(L, {}, [](double n) { return 1.0 / n; });
        if (sp.kind == IntegrandKind::zeta_squared || sp.zeta_power == 4)
            return sym(L, {}, [](double n) { return n * n; });
        return sym(L, {}, sq);
    }
    case IntegrandKind::dirichlet_L: {
        const auto& chi = *sp.character;
        auto build = [&](const DirichletCharacter& c) {
            std::vector<HurwitzTerm> t;
            for (unsigned m = 1; m <= c.modulus; ++m)
                if (c(m) != 0.0) t.push_back({c(m), double(m) / c.modulus});
            return line_fn(std::make_shared<HurwitzLine>(s, t, t_max, 0, double(c.modulus)));
        };
        if (chi.is_real()) return sym(build(chi), {}, sq);
        return sym(build(chi), build(chi.conj()), sq);
    }
    case IntegrandKind::lerch: {
        const Complex z = sp.z;
        const double a = sp.a;
        if (std::abs(z + 1.0) < 1e-15) {
            std::vector<HurwitzTerm> t{{1.0, a / 2}, {-1.0, (a + 1) / 2}};
            return sym(line_fn(std::make_shared<HurwitzLine>(s, t, t_max, 0, 2.0)), {}, sq);
        }
        if (std::abs(z - 1.0) < 1e-15)
            return sym(line_fn(std::make_shared<HurwitzLine>(s, std::vector<HurwitzTerm>{{1.0, a}}, t_max, 0)), {}, sq);
        auto F = [z, a, s](double t) { return lerch_phi({z, {s, t}, a}); };
        if (z.imag() == 0.0) return sym(F, {}, sq);
        const Complex zc = std::conj(z);
        auto Fc = [zc, a, s](double t) { return lerch_phi({zc, {s, t}, a}); };
        return sym(F, Fc, sq);
    }
    }
    throw DomainError("moment_integral: unknown kind");
}

// int_T^inf of the weight times a basis growth, used for the tail fit
double weight_tail(double sigma, int w, double T)
{
    const double at = kPi / 2 - std::atan(T / sigma);
    if (w == 2) return at / sigma;
    return at / (2 * sigma * sigma * sigma) - T / (2 * sigma * sigma * (sigma * sigma + T * T));
}

double growth_tail(double sigma, int w, double T)
{
    if (std::fabs(sigma - 0.5) < 1e-12) {
        const double q = w - 1.0;
        return std::pow(T, -q) * (std::log(T) / q + 1.0 / (q * q));
    }
    const double e = w + 2 * sigma - 2;
    return std::pow(T, -e) / e;
}

}  // namespace

void clear_node_cache()
{
    auto& c = node_cache();
    std::lock_guard lk(c.mu);
    c.tables.clear();
}

std::size_t node_cache_size()
{
    auto& c = node_cache();
    std::lock_guard lk(c.mu);
    std::size_t n = 0;
    for (auto& [k, v] : c.tables) n += v.size();
    return n;
}

QuadratureResult moment_integral(const MomentSpec& sp, double rel_tol, const MomentOptions& opts)
{
    validate_moment_spec(sp);
    const double sigma = sp.sigma;
    const double T = opts.t_max > 0 ? opts.t_max : (sigma <= 1.0 ? 5000.0 : 2000.0);
    if (T < 100.0) throw DomainError("moment_integral: t_max must be >= 100");
    const double h = opts.panel;

    auto factor = make_factor(sp, T);
    std::unordered_map<std::uint64_t, double>* table = nullptr;
    std::mutex* mu = nullptr;
    if (opts.use_cache) {
        auto& c = node_cache();
        std::lock_guard lk(c.mu);
        table = &c.tables[factor_key(sp, T)];
        mu = &c.mu;
    }
    auto cached = [&](double t) {
        if (!table) return factor(t);
        const auto key = std::bit_cast<std::uint64_t>(t);
        {
            std::lock_guard lk(*mu);
            auto it = table->find(key);
            if (it != table->end()) return it->second;
        }
        const double v = factor(t);
        std::lock_guard lk(*mu);
        table->emplace(key, v);
        return v;
    };

    const bool removable = sp.kind == IntegrandKind::riemann && std::fabs(sigma - 1.0) < 1e-12;
    const double ln2sq = kLn2 * kLn2;
    auto integrand = [&](double t) -> double {
        const double w = sp.weight_power == 2 ? 1.0 / (sigma * sigma + t * t)
                                               : 1.0 / ((sigma * sigma + t * t) * (sigma * sigma + t * t));
        if (removable && std::fabs(t) < 1e-3) {
            // (1-cos)|zeta|^2 -> ln^2 2/2 and (1-cos)^2|zeta|^4 -> ln^4 2/4 as t -> 0 (both halves)
            const double lim = sp.modulation == Modulation::one_minus_cos_t_ln2 ? ln2sq / 2 : ln2sq * ln2sq / 4;
            return 2.0 * lim * w;
        }
        double m = 1.0;
        const double sh = std::sin(t * kLn2 / 2);
        switch (sp.modulation) {
        case Modulation::none: break;
        case Modulation::cos_t_ln2: m = std::cos(t * kLn2); break;
        case Modulation::one_minus_cos_t_ln2: m = 2 * sh * sh; break;
        case Modulation::one_minus_cos_sq: m = 4 * sh * sh * sh * sh; break;
        }
        return cached(t) * m * w;
    };

    const std::size_t npan = static_cast<std::size_t>(std::ceil(T / h));
    std::vector<double> knots(npan + 1), cum(npan + 1, 0.0);
    QuadratureResult res;
    double err = 0.0, scale = 0.0;
    double run = 0.0, comp = 0.0;
    for (std::size_t j = 0; j < npan; ++j) {
        const double a = j * h, b = std::min(T, (j + 1) * h);
        knots[j] = a;
        const double floor_abs = scale > 0 ? 1e-3 * rel_tol * scale * h / std::max(1.0, a) : 1e-300;
        auto r = adaptive_impl(integrand, a, b, 0.1 * rel_tol, {}, floor_abs, 400).r;
        if (j == 0) scale = std::fabs(r.value) / h;
        // compensated running sum
        const double y = r.value - comp;
        const double tt = run + y;
        comp = (tt - run) - y;
        run = tt;
        cum[j + 1] = run;
        err += r.abs_error_estimate;
        res.nodes_used += r.nodes_used;
        res.converged = res.converged && r.converged;
    }
    knots[npan] = T;

    // least-squares fit of the cumulative integral on the last decade:
    //   C(t) = I - sum_b beta_b phi_b(t)
    std::vector<std::function<double(double)>> basis{[&](double t) { return weight_tail(sigma, sp.weight_power, t); }};
    const double p_eff = sp.kind == IntegrandKind::zeta_squared || sp.zeta_power == 4 ? 2.0 : 1.0;
    if (sigma < 1.0 && sp.kind != IntegrandKind::inverse_zeta) {
        // mean of |F|^2 grows like t^{1-2 sigma} (log at sigma = 1/2); |F|^4 is only needed at sigma >= 1
        (void)p_eff;
        basis.push_back([&](double t) { return growth_tail(sigma, sp.weight_power, t); });
    }
    std::vector<std::size_t> rows;
    for (std::size_t j = 0; j <= npan; ++j)
        if (knots[j] >= T / 4) rows.push_back(j);
    const int nb = static_cast<int>(basis.size());
    Eigen::MatrixXd A(rows.size(), nb + 1);
    Eigen::VectorXd y(rows.size());
    std::vector<double> colscale(nb, 1.0);
    for (int b = 0; b < nb; ++b) colscale[b] = basis[b](T);
    // oscillatory remainders of C(t) shrink like 1/t^2, so rows are weighted by t^2
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const double t = knots[rows[i]];
        const double wt = (t / T) * (t / T);
        A(i, 0) = wt;
        for (int b = 0; b < nb; ++b) A(i, b + 1) = -wt * basis[b](t) / colscale[b];
        y(i) = wt * cum[rows[i]];
    }
    Eigen::VectorXd coef = A.colPivHouseholderQr().solve(y);
    Eigen::VectorXd resid = y - A * coef;
    for (std::size_t i = 0; i < rows.size(); ++i) resid(i) /= A(i, 0);
    const double rms = std::sqrt(resid.squaredNorm() / std::max<std::size_t>(1, rows.size() - nb - 1));

    res.value = coef(0);
    res.tail_estimate = std::fabs(coef(0) - cum[npan]);
    res.abs_error_estimate = err + rms / std::sqrt(static_cast<double>(rows.size()));
    res.truncation_height = T;
    res.note = sigma <= 1.0 ? "tail from fitted mean-value model" : "tail from fitted 1/T model";
    if (!res.converged) res.note += "; some panels hit the subdivision cap";
    return res;
}

}  // namespace zm
