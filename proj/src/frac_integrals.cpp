#include "zm/frac_integrals.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace zm {

namespace {

// 20-point Gauss-Legendre on [0,1], long double
struct GaussLegendre {
    static constexpr int n = 20;
    std::array<long double, n> x{}, w{};
    GaussLegendre() {
        for (int i = 0; i < n; ++i) {
            long double z = std::cos(kPiL * (i + 0.75L) / (n + 0.5L));
            long double dp = 0;
            for (int it = 0; it < 100; ++it) {
                long double p0 = 1, p1v = z;
                for (int k = 2; k <= n; ++k) {
                    long double p2 = ((2 * k - 1) * z * p1v - (k - 1) * p0) / k;
                    p0 = p1v;
                    p1v = p2;
                }
                dp = n * (z * p1v - p0) / (z * z - 1);
                long double dz = p1v / dp;
                z -= dz;
                if (std::fabs(dz) < 1e-21L) break;
            }
            x[i] = (1 - z) / 2;
            w[i] = 1 / ((1 - z * z) * dp * dp);  // 2/((1-z^2)p'^2) scaled by 1/2
        }
    }
    template <class F>
    long double operator()(F&& f, long double a, long double b) const {
        long double h = b - a, s = 0;
        for (int i = 0; i < n; ++i) s += w[i] * f(a + h * x[i]);
        return s * h;
    }
};

const GaussLegendre& gl() {
    static const GaussLegendre g;
    return g;
}

double zeta_real(double s, double a = 1.0) { return hurwitz_zeta(Complex(s, 0.0), a).real(); }

// int_j^{j+1} {u}/u^2 du
long double frac_piece(long double j) { return std::log1p(1.0L / j) - 1.0L / (j + 1); }

// int_K^inf {u}/u^2 du for integer K >= 1: direct pieces up to 32, then a Hurwitz series
long double frac_tail_int(std::size_t K) {
    std::size_t J = std::max<std::size_t>(K, 32);
    long double s = 0;
    for (std::size_t j = K; j < J; ++j) s += frac_piece(static_cast<long double>(j));
    for (int k = 2; k < 80; ++k) {
        long double term = (1.0L - 1.0L / k) * zeta_real(k, static_cast<double>(J));
        s += (k % 2 == 0) ? term : -term;
        if (term < 1e-22L) break;
    }
    return s;
}

// int_p^q (u-j)(x/u-k)/u du with j = floor(u), k = floor(x/u) fixed on the piece
long double fx_piece(long double p, long double q, long double x) {
    if (q <= p) return 0;
    long double m = (p + q) / 2;
    long double j = std::floor(m), k = std::floor(x / m);
    long double lg = std::log1p((q - p) / p);
    return (x + j * k) * lg - k * (q - p) + j * x * (1 / q - 1 / p);
}

// int_1^x {u}{x/u} du/u by exact pieces
long double j_direct(double x) {
    if (x <= 1) return 0;
    std::size_t n = static_cast<std::size_t>(std::floor(x));
    std::vector<long double> pts;
    pts.reserve(2 * n + 2);
    for (std::size_t j = 1; j <= n; ++j) {
        pts.push_back(static_cast<long double>(j));
        pts.push_back(static_cast<long double>(x) / j);
    }
    pts.push_back(x);
    std::sort(pts.begin(), pts.end());
    long double s = 0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        if (pts[i + 1] - pts[i] > 1e-15L * pts[i]) s += fx_piece(pts[i], pts[i + 1], x);
    }
    return s;
}

std::pair<double, double> fit_log(const std::vector<double>& xs, const std::vector<double>& ys) {
    Eigen::MatrixXd A(xs.size(), 2);
    Eigen::VectorXd b(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        A(i, 0) = std::log(xs[i]);
        A(i, 1) = 1.0;
        b(i) = ys[i];
    }
    Eigen::VectorXd c = A.colPivHouseholderQr().solve(b);
    return {c(0), c(1)};
}

}  // namespace

double frac(double x) { return x - std::floor(x); }
double p1(double x) { return frac(x) - 0.5; }

double phi_ivic(double x) {
    if (!(x >= 1)) throw DomainError("phi_ivic: x >= 1");
    if (x == 1) return 0.0;
    std::size_t n = static_cast<std::size_t>(std::floor(x));
    std::vector<double> pts;
    for (std::size_t j = 1; j <= n; ++j) {
        pts.push_back(static_cast<double>(j));
        pts.push_back(x / j);
    }
    pts.push_back(x);
    std::sort(pts.begin(), pts.end());
    long double s = 0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        double p = pts[i], q = pts[i + 1];
        if (q - p <= 1e-15 * p) continue;
        double m = 0.5 * (p + q);
        auto u = static_cast<long long>(std::floor(m));
        auto v = static_cast<long long>(std::floor(x / m));
        if ((u & 1) && (v & 1)) s += std::log1p((q - p) / p);
    }
    return static_cast<double>(s);
}

IvicPhiTable::IvicPhiTable(std::size_t limit) : limit_(limit), phi_(limit + 2, 0.0L), beta_(limit + 2, 0) {
    // jump of x phi'(x) at N is sum_{k | N} (-1)^{k + N/k}
    for (std::size_t k = 1; k <= limit; ++k)
        for (std::size_t j = 1, n = k; n <= limit; ++j, n += k) beta_[n] += ((k + j) % 2 == 0) ? 1 : -1;
    for (std::size_t n = 2; n <= limit; ++n) beta_[n] += beta_[n - 1];
    for (std::size_t n = 1; n <= limit; ++n) phi_[n + 1] = phi_[n] + beta_[n] * std::log1p(1.0L / n);
}

double IvicPhiTable::operator()(double x) const {
    if (x < 1) return 0.0;
    auto n = static_cast<std::size_t>(std::floor(x));
    if (n > limit_) throw DomainError("phi table: x beyond table limit");
    return static_cast<double>(phi_[n] + beta_[n] * std::log(static_cast<long double>(x) / n));
}

long double IvicPhiTable::mellin_partial(double s, std::size_t X) const {
    X = std::min(X, limit_);
    long double sum = 0, comp = 0;
    for (std::size_t n = 1; n < X; ++n) {
        long double L = std::log1p(1.0L / n);
        long double y = s * L;
        long double first = -std::expm1(-y) / s;
        long double second;
        if (y < 1e-3L)
            second = L * L * (0.5L - y / 3 + y * y / 8 - y * y * y / 30);
        else
            second = (1 - std::exp(-y) * (1 + y)) / (static_cast<long double>(s) * s);
        long double term = std::pow(static_cast<long double>(n), -static_cast<long double>(s)) *
                           (phi_[n] * first + beta_[n] * second);
        long double t = sum + term;
        comp += (std::fabs(sum) >= std::fabs(term)) ? (sum - t) + term : (term - t) + sum;
        sum = t;
    }
    return sum + comp;
}

long double IvicPhiTable::square_partial(std::size_t X) const {
    X = std::min(X, limit_);
    const auto& g = gl();
    long double sum = 0;
    for (std::size_t n = 1; n < X; ++n) {
        long double A = phi_[n], B = beta_[n], N = n;
        sum += g([&](long double x) {
            long double v = A + B * std::log(x / N);
            return v * v / (x * x * x);
        }, N, N + 1);
    }
    return sum;
}

std::pair<double, double> IvicPhiTable::log_fit(std::size_t lo, std::size_t hi) const {
    hi = std::min(hi, limit_);
    std::size_t step = std::max<std::size_t>(1, (hi - lo) / 4000);
    std::vector<double> xs, ys;
    for (std::size_t n = lo; n <= hi; n += step) {
        xs.push_back(static_cast<double>(n));
        ys.push_back(static_cast<double>(phi_[n]));
    }
    return fit_log(xs, ys);
}

std::string route_name(PhiRoute r) {
    switch (r) {
        case PhiRoute::direct_double_sum: return "direct_double_sum";
        case PhiRoute::summatory: return "summatory";
        case PhiRoute::decomposition: return "decomposition";
        case PhiRoute::closed_form: return "closed_form";
    }
    return "?";
}

double tail_frac_integral(unsigned k) {
    if (k == 0) throw DomainError("tail_frac_integral: k >= 1");
    return static_cast<double>(harmonic(k) - kEulerGammaL - std::log(static_cast<long double>(k)));
}

double tail_frac_numeric(double x0) {
    if (!(x0 > 0)) throw DomainError("tail_frac_numeric: x0 > 0");
    long double n = std::floor(static_cast<long double>(x0));
    long double head = 0;
    std::size_t K;
    if (n == x0) {
        K = static_cast<std::size_t>(n);
    } else {
        K = static_cast<std::size_t>(n) + 1;
        head = std::log(K / static_cast<long double>(x0)) + n * (1.0L / K - 1.0L / x0);
    }
    return static_cast<double>(head + frac_tail_int(K));
}

double i1(double x) {
    if (!(x > 0)) throw DomainError("i1: x > 0");
    return x * tail_frac_numeric(x);
}

double i1_integer(unsigned k) {
    if (k == 0) throw DomainError("i1_integer: k >= 1");
    return k * digamma(k) - k * std::log(static_cast<double>(k)) + 1.0;
}

double i_infty(double x) {
    if (!(x > 0)) throw DomainError("i_infty: x > 0");
    if (x <= 1) return x * static_cast<double>(frac_tail_int(1));
    return i1(x) + static_cast<double>(j_direct(x));
}

double i1_ci_series(double x, unsigned terms) {
    bool integer = (x == std::floor(x));
    return (integer ? 0.0 : p1(x)) + 0.5 + 2.0 * x * ci_lattice_sum(x, terms);
}

double phi2_closed(int k) {
    const double g = 1.0 - constants().euler_gamma;
    using std::log;
    switch (k) {
        case 1: return 2 * g;
        case 2: return 4 * g - log(2.0);
        case 3: return 6 * g - 2 * log(2.0);
        case 4: return 8 * g - 2 * log(3.0);
        case 5: return 10 * g - log(2304.0 / 125.0);
        case 6: return 12 * g - 2 * log(20.0 / 3.0);
        case 7: return 14 * g - 2 * log(8640.0) + 7 * log(7.0);
        case 8: return 16 * g - 2 * log(945.0 / 64.0);
        case 9: return 18 * g - 2 * log(143360.0 / 6561.0);
        case 10: return 20 * g + 11 * log(2.5) - 2 * log(5103.0);
        default: throw DomainError("phi2_closed: k in 1..10");
    }
}

double phi2_summatory(double x, std::size_t j_max) {
    if (!(x > 0)) throw DomainError("phi2_summatory: x > 0");
    if (j_max < 10) throw DomainError("phi2_summatory: j_max >= 10");
    const long double X = x;
    long double s = 0;
    // j = 0: int_0^1 {x/u} du, cut at u = x/(j_max+1)
    for (std::size_t k = static_cast<std::size_t>(std::floor(x)); k <= j_max; ++k) {
        long double p = X / (k + 1);
        long double q = (k == 0) ? 1.0L : std::min(1.0L, X / k);
        if (q > p) s += X * std::log(q / p) - k * (q - p);
    }
    long double K = j_max + 1;
    s += X * (1 / (2 * K) - 1 / (12 * K * K));
    // j >= 1 up to j_max
    std::vector<long double> pts;
    for (std::size_t j = 1; j < j_max; ++j) {
        long double a = j, b = j + 1.0L;
        if (a >= X) {
            s += X * frac_piece(a);
            continue;
        }
        pts.clear();
        pts.push_back(a);
        for (auto k = static_cast<std::size_t>(std::floor(X / b)) + 1; k <= static_cast<std::size_t>(X / a); ++k) {
            long double c = X / k;
            if (c > a && c < b) pts.push_back(c);
        }
        pts.push_back(b);
        std::sort(pts.begin(), pts.end());
        for (std::size_t i = 0; i + 1 < pts.size(); ++i) s += fx_piece(pts[i], pts[i + 1], X);
    }
    long double Jm = static_cast<long double>(j_max);
    s += X * (1 / (2 * Jm) - 1 / (12 * Jm * Jm));
    return static_cast<double>(s);
}

Phi2Table::Phi2Table(std::size_t limit)
    : limit_(limit), J_(limit + 2), A_(limit + 2), H_(limit + 2), T_(limit + 2), Gint_(limit + 2), Kcum_(limit + 2),
      D_(limit + 2, 0) {
    if (limit < 1000) throw DomainError("Phi2Table: limit >= 1000");
    std::vector<std::uint32_t> d(limit + 2, 0);
    for (std::size_t k = 1; k <= limit + 1; ++k)
        for (std::size_t n = k; n <= limit + 1; n += k) ++d[n];
    for (std::size_t n = 1; n <= limit + 1; ++n) D_[n] = D_[n - 1] + d[n];
    A_[1] = 0;
    H_[1] = 1;
    for (std::size_t n = 1; n <= limit; ++n) {
        A_[n + 1] = A_[n] + frac_piece(n);
        H_[n + 1] = H_[n] + 1.0L / (n + 1);
    }
    T_[limit + 1] = frac_tail_int(limit + 1);
    for (std::size_t n = limit; n >= 1; --n) T_[n] = T_[n + 1] + frac_piece(n);
    J_[1] = 0;
    for (std::size_t n = 1; n <= limit; ++n) {
        long double lg = std::log1p(1.0L / n);
        J_[n + 1] = J_[n] + (A_[n] - H_[n]) + ((n + 1) * lg - 1) + D_[n] * lg;
    }
    const auto& g = gl();
    long double N = limit;
    Gint_[limit] = (std::log(N) + 1) / (2 * N) - std::log(N) / (12 * N * N);
    for (std::size_t n = limit - 1; n >= 1; --n) {
        long double a = n;
        Gint_[n] = Gint_[n + 1] + g([a](long double u) { return (u - a) * std::log(u) / (u * u); }, a, a + 1);
    }
    std::vector<double> xs, ys;
    for (std::size_t n = limit / 10; n < limit; n += std::max<std::size_t>(1, limit / 20000)) {
        xs.push_back(static_cast<double>(n));
        ys.push_back(phi2(static_cast<double>(n)));
    }
    std::tie(c1_, c0_) = fit_log(xs, ys);
    Kcum_[limit] = 0;
    for (std::size_t n = limit - 1; n >= 1; --n) {
        long double a = n;
        Kcum_[n] = Kcum_[n + 1] + g([this](long double v) { return phi2(static_cast<double>(v)) / (v * v); }, a, a + 1);
    }
}

long double Phi2Table::R(double x) const {
    auto n = static_cast<std::size_t>(std::floor(x));
    long double X = x, N = n;
    return std::log((N + 1) / X) + N * (1 / (N + 1) - 1 / X) + T_[n + 1];
}

long double Phi2Table::G(double x) const {
    auto n = static_cast<std::size_t>(std::floor(x));
    long double N = n, X = x;
    if (X == N) return Gint_[n];
    return gl()([N](long double u) { return (u - N) * std::log(u) / (u * u); }, X, N + 1) + Gint_[n + 1];
}

double Phi2Table::phi2(double x) const {
    if (!(x > 0)) throw DomainError("phi2: x > 0");
    long double X = x;
    if (x < 1) return static_cast<double>(X * (2 * T_[1] - std::log(X)));
    auto n = static_cast<std::size_t>(std::floor(x));
    if (n >= limit_) throw DomainError("phi2: x beyond table limit");
    long double N = n, lg = std::log(X / N);
    long double J = J_[n] + (A_[n] - H_[n]) * (X - N) + (X * lg - X + N) + D_[n] * lg;
    return static_cast<double>(2 * X * R(x) + J);
}

long double Phi2Table::tail_over_v2(double x) const {
    auto n = static_cast<std::size_t>(std::ceil(x));
    long double N = limit_;
    long double head = gl()([this](long double v) { return phi2(static_cast<double>(v)) / (v * v); },
                            static_cast<long double>(x), static_cast<long double>(n));
    return head + Kcum_[n] + (c1_ * (std::log(N) + 1) + c0_) / N;
}

double Phi2Table::phi3(double x) const {
    if (!(x >= 1)) throw DomainError("phi3: x >= 1");
    if (x * 10 > static_cast<double>(limit_)) throw DomainError("phi3: table too small for x");
    long double X = x;
    long double a_part = X * tail_over_v2(x);
    std::size_t n = static_cast<std::size_t>(std::floor(x));
    std::vector<long double> pts;
    for (std::size_t j = 1; j <= n; ++j) {
        pts.push_back(static_cast<long double>(j));
        pts.push_back(X / j);
    }
    pts.push_back(X);
    std::sort(pts.begin(), pts.end());
    long double b1 = 0;
    const auto& g = gl();
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        if (pts[i + 1] - pts[i] <= 1e-15L * pts[i]) continue;
        b1 += g([this, X](long double u) {
            long double f = u - std::floor(u);
            return f * phi2(static_cast<double>(X / u)) / u;
        }, pts[i], pts[i + 1]);
    }
    long double c = 2 * T_[1];
    long double b2 = X * ((c - std::log(X)) * R(x) + G(x));
    return static_cast<double>(a_part + b1 + b2);
}

namespace {
std::mutex g_phi_mutex;
std::shared_ptr<Phi2Table> g_phi2_table;

std::shared_ptr<Phi2Table> phi2_table_for(double x) {
    std::lock_guard<std::mutex> lk(g_phi_mutex);
    std::size_t need = std::max<std::size_t>(200000, static_cast<std::size_t>(50 * x));
    if (!g_phi2_table || g_phi2_table->limit() < need) g_phi2_table = std::make_shared<Phi2Table>(need);
    return g_phi2_table;
}
}  // namespace

PhiValue phi_n(int n, double x, double rel_tol) {
    if (!(x > 0)) throw DomainError("phi_n: x > 0");
    if (n >= 2 && rel_tol < 1e-10) throw DomainError("phi_n: rel_tol below 1e-10 is not supported for n >= 2");
    PhiValue v;
    v.x = x;
    switch (n) {
        case 1:
            v.value = frac(x);
            v.route = PhiRoute::closed_form;
            return v;
        case 2:
            v.value = i1(x) + i_infty(x);
            v.route = PhiRoute::decomposition;
            return v;
        case 3:
            if (x < 1) throw DomainError("phi_n(3): x >= 1");
            v.value = phi2_table_for(x)->phi3(x);
            v.route = PhiRoute::decomposition;
            return v;
        default: throw DomainError("phi_n: n in 1..3");
    }
}

double lemma1_transform(const RealFn& f, double lambda) {
    if (!(lambda > 1)) throw DomainError("lemma1_transform: lambda > 1");
    auto r = integrate_adaptive([&](double y) { return f(y) * zeta_real(lambda, y + 1.0); }, 0.0, 1.0, 1e-13);
    return r.value;
}

double frac_power_direct(const RealFn& f, double lambda) {
    if (!(lambda > 1)) throw DomainError("frac_power_direct: lambda > 1");
    const auto& g = gl();
    const long double lam = lambda;
    const int L = 32;
    auto seg = [&](long double shift, long double power) {
        return g([&](long double y) { return f(static_cast<double>(y)) * std::pow(y + shift, -power); }, 0.0L, 1.0L);
    };
    long double s = 0;
    for (int l = 1; l < L; ++l) s += seg(l, lam);
    // Euler-Maclaurin for sum_{l >= L} g(l), g(l) = int_0^1 f(y) (y+l)^{-lam} dy
    s += seg(L, lam - 1) / (lam - 1);
    s += seg(L, lam) / 2;
    const auto& B = BernoulliTable::instance();
    long double fall = -lam;  // (-lam)(-lam-1)...(-lam-r+1)
    long double fact = 1;
    for (int r = 1; r <= 15; ++r) {
        if (r > 1) fall *= (-lam - r + 1);
        fact *= r;
        if (r % 2 == 1) {
            long double b = B.number(r + 1);
            s -= b / (fact * (r + 1)) * fall * seg(L, lam + r);
        }
    }
    return static_cast<double>(s);
}

double moment_frac(int n, double sigma) {
    if (!(sigma > 0) || !(n > 2 * sigma)) throw DomainError("moment_frac: need 0 < 2 sigma < n");
    return 1.0 / (n - 2 * sigma) + lemma1_transform([n](double y) { return std::pow(y, n); }, 2 * sigma + 1);
}

double moment_frac_direct(int n, double sigma) {
    if (!(sigma > 0) || !(n > 2 * sigma)) throw DomainError("moment_frac_direct: need 0 < 2 sigma < n");
    return 1.0 / (n - 2 * sigma) + frac_power_direct([n](double y) { return std::pow(y, n); }, 2 * sigma + 1);
}

std::string damped_name(DampedKind k) {
    switch (k) {
        case DampedKind::frac_over_x: return "frac_over_x";
        case DampedKind::frac_sq_over_x_sq: return "frac_sq_over_x_sq";
        case DampedKind::log_weighted: return "log_weighted";
    }
    return "?";
}

long double damped_integral(DampedKind kind, double T, int k) {
    if (!(T > 0)) throw DomainError("damped_integral: T > 0");
    if (kind == DampedKind::log_weighted && k < 1) throw DomainError("damped_integral: k >= 1");
    const auto& g = gl();
    const long double TT = T;
    std::array<long double, GaussLegendre::n> ew{};
    for (int i = 0; i < GaussLegendre::n; ++i) ew[i] = g.w[i] * std::exp(-g.x[i] / TT);
    long double sum = 0, comp = 0;
    auto add = [&](long double term) {
        long double t = sum + term;
        comp += (std::fabs(sum) >= std::fabs(term)) ? (sum - t) + term : (term - t) + sum;
        sum = t;
    };
    // l = 0
    if (kind == DampedKind::log_weighted) {
        long double kf = std::tgamma(static_cast<long double>(k + 1));
        long double sign = (k % 2 == 0) ? 1 : -1;
        long double pw = 1, s0 = 0;
        for (int m = 0; m < 400; ++m) {
            if (m > 0) pw *= -1.0L / (TT * m);
            long double term = pw * sign * kf / std::pow(static_cast<long double>(m + 1), k + 1);
            s0 += term;
            if (std::fabs(term) < 1e-24L && m > 2) break;
        }
        add(s0);
    } else {
        add(-TT * std::expm1(-1.0L / TT));
    }
    auto L = static_cast<std::size_t>(std::ceil(50 * T));
    for (std::size_t l = 1; l <= L; ++l) {
        long double el = std::exp(-static_cast<long double>(l) / TT), s = 0, ll = l;
        for (int i = 0; i < GaussLegendre::n; ++i) {
            long double y = g.x[i], u = y + ll, v;
            switch (kind) {
                case DampedKind::frac_over_x: v = y / u; break;
                case DampedKind::frac_sq_over_x_sq: v = (y * y) / (u * u); break;
                default: v = y * std::pow(std::log(u), k) / u; break;
            }
            s += ew[i] * v;
        }
        add(el * s);
    }
    return sum + comp;
}

double damped_asymptotic_rhs(Asymptotic form, double T, int order) {
    if (!(T >= 2)) throw DomainError("damped_asymptotic_rhs: T >= 2");
    if (order < 1 || (form == Asymptotic::ivic_series && order > 3))
        throw DomainError("damped_asymptotic_rhs: unsupported order");
    const long double t = T, lt = std::log(t);
    const long double gam = kEulerGammaL, l2p = kLogTwoPiL;
    switch (form) {
        case Asymptotic::ivic_series: {
            long double s = 0.5L * (lt - gam + l2p);
            const auto& B = BernoulliTable::instance();
            long double fact = 1;  // (2m-1)!
            for (int m = 1; m <= order; ++m) {
                if (m > 1) fact *= (2 * m - 2) * (2 * m - 1);
                long double z = -B.number(2 * m) / (2 * m);
                s += z / (fact * (1 - 2 * m)) * std::pow(t, 1 - 2 * m);
            }
            return static_cast<double>(s);
        }
        case Asymptotic::frac_over_x: return static_cast<double>(0.5L * (lt - gam + l2p) + 1 / (12 * t));
        case Asymptotic::frac_sq_over_x_sq:
            return static_cast<double>(l2p - gam + (-2 + 2 * gam + 12 * kGlaisherLogL - 3 * l2p - 2 * lt) / (6 * t) -
                                       1 / (24 * t * t) + 1 / (2160 * t * t * t));
        case Asymptotic::log_weighted: {
            int k = order;
            long double s = std::pow(lt, k + 1) / (2 * std::tgamma(static_cast<long double>(k + 2)));
            return static_cast<double>((k % 2 == 1) ? s : -s);
        }
        case Asymptotic::phi2_growth: return static_cast<double>(lt / 4 + l2p / 2);
        case Asymptotic::phi_n_growth: {
            int n = order;
            if (n < 2) throw DomainError("phi_n_growth: n >= 2");
            long double p = std::ldexp(1.0L, n);
            return static_cast<double>(std::pow(lt, n - 1) / (p * std::tgamma(static_cast<long double>(n))) +
                                       n * l2p * std::pow(lt, n - 2) / (p * std::tgamma(static_cast<long double>(n - 1))));
        }
    }
    return 0.0;
}

std::string p1_route_name(P1SquareRoute r) {
    switch (r) {
        case P1SquareRoute::quadrature: return "quadrature";
        case P1SquareRoute::first_closed: return "first_closed";
        case P1SquareRoute::second_closed: return "second_closed";
        case P1SquareRoute::telescoped: return "telescoped";
        case P1SquareRoute::first_closed_fixed: return "first_closed_fixed";
    }
    return "?";
}

double p1_square_integral(double sigma, P1SquareRoute route) {
    if (!(sigma > 0)) throw DomainError("p1_square_integral: sigma > 0");
    const double s = sigma;
    if (route == P1SquareRoute::quadrature)
        return frac_power_direct([](double y) { return (y - 0.5) * (y - 0.5); }, 2 * s + 1);
    if (std::fabs(s - 1) < 1e-6 || std::fabs(2 * s - 1) < 1e-6)
        throw PoleError("p1_square_integral: closed forms singular at sigma = 1/2, 1");
    double z2 = zeta_real(2 * s), z1 = zeta_real(2 * s - 1);
    double first_form = (-z1 + 0.5 + 1 / (2 * (s - 1))) / (s * (2 * s - 1)) + 1 / (8 * s) + (z2 - 1) / (2 * s);
    switch (route) {
        case P1SquareRoute::first_closed: return first_form;
        case P1SquareRoute::first_closed_fixed: return first_form - (z2 - 1) / (2 * s);
        case P1SquareRoute::second_closed:
            return 1 / (2 * (s - 1)) - z1 / (s * (2 * s - 1)) - 1 / (2 * s - 1) + 1 / (8 * s);
        case P1SquareRoute::telescoped: {
            // sum_j j^p [a (j+1)^{-2s} - b j^{-2s}] in closed form
            auto lemma = [&](int p, double a, double b) {
                switch (p) {
                    case 0: return (a - b) * z2 - a;
                    case 1: return -a * z2 + (a - b) * z1;
                    default: {
                        double v = a * z2 - 2 * a * z1;
                        if (a != b) v += (a - b) * zeta_real(2 * s - 2);
                        return v;
                    }
                }
            };
            double S = lemma(0, -(1 + s + 2 * s * s), -(1 - 3 * s + 2 * s * s)) + lemma(1, -4 * (1 + s), -4 * (1 - s)) +
                       lemma(2, -4, -4);
            return S / (8 * s * (s - 1) * (2 * s - 1));
        }
        default: break;
    }
    return 0.0;
}

LogIntegral phi_over_x2_integral(std::size_t X) {
    IvicPhiTable tab(X);
    auto [c1, c0] = tab.log_fit(X / 10, X);
    LogIntegral r;
    r.cutoff = X;
    r.partial = static_cast<double>(tab.mellin_partial(1.0, X));
    double lx = std::log(static_cast<double>(X));
    r.tail = (c1 * (lx + 1) + c0) / static_cast<double>(X);
    r.value = r.partial + r.tail;
    return r;
}

LogIntegral phi_sq_over_x3_integral(std::size_t X) {
    IvicPhiTable tab(X);
    auto [c1, c0] = tab.log_fit(X / 10, X);
    LogIntegral r;
    r.cutoff = X;
    r.partial = static_cast<double>(tab.square_partial(X));
    double L = std::log(static_cast<double>(X)), x2 = 1.0 / (static_cast<double>(X) * X);
    double g0 = x2 / 2, g1 = x2 * (L / 2 + 0.25), g2 = x2 * (L * L / 2 + L / 2 + 0.25);
    r.tail = c1 * c1 * g2 + 2 * c1 * c0 * g1 + c0 * c0 * g0;
    r.value = r.partial + r.tail;
    return r;
}

std::vector<ConjectureRow> conjecture1_probe(const std::vector<double>& s_values, std::size_t X) {
    IvicPhiTable tab(X);
    auto [c1, c0] = tab.log_fit(X / 10, X);
    std::vector<ConjectureRow> rows;
    double L = std::log(static_cast<double>(X));
    for (double s : s_values) {
        if (!(s > 0)) throw DomainError("conjecture1_probe: s > 0");
        ConjectureRow r{};
        r.s = s;
        r.cutoff = X;
        r.partial = static_cast<double>(tab.mellin_partial(s, X));
        r.tail = std::exp(-s * L) * (c1 * (L / s + 1 / (s * s)) + c0 / s);
        r.scaled = s * s * (r.partial + r.tail);
        rows.push_back(r);
    }
    return rows;
}

}  // namespace zm
