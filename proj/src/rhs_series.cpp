#include "zm/rhs_series.hpp"

#include <cmath>
#include <numbers>
#include <vector>
#include <memory>
#include <mutex>

namespace zm {

namespace {

constexpr int kDirect = 40;  // terms summed before the asymptotic tail takes over

double hz(double s, double a, int order = 0) {
    if (order == 0) return hurwitz_zeta(Complex(s, 0.0), a).real();
    return hurwitz_zeta_sderiv(order, Complex(s, 0.0), a).real();
}

// Stirling coefficients B_{2k} / (2k (2k-1))
long double stirling_coef(int k) {
    return BernoulliTable::instance().number(2 * k) / (2.0L * k * (2 * k - 1));
}

std::size_t g_sieve_limit = 10000000;
std::once_flag g_sieve_once;
std::unique_ptr<SievedTables> g_sieve;

const SievedTables& sieve() {
    std::call_once(g_sieve_once, [] { g_sieve = std::make_unique<SievedTables>(build_sieves(g_sieve_limit)); });
    return *g_sieve;
}

}  // namespace

std::size_t arithmetic_sieve_limit() { return g_sieve_limit; }

SeriesValue series_logpoch_log(double sigma, double a) {
    if (!(sigma > 1) || !(a > 0)) throw DomainError("series_logpoch_log: sigma > 1, a > 0");
    const long double s2 = 2.0L * sigma;
    long double sum = 0, lp = 0;
    for (int m = 0; m < kDirect; ++m) {
        long double x = m + static_cast<long double>(a);
        sum += lp * std::log(x) * std::pow(x, -s2);
        lp += std::log(x);
    }
    // ln((a)_m) = lnGamma(x) - lnGamma(a), x = m + a, with Stirling's series for lnGamma(x)
    const double x0 = kDirect + a, s = 2 * sigma;
    const double c = 0.5 * std::log(2 * std::numbers::pi) - log_gamma(a);
    long double tail = hz(s - 1, x0, 2) - 0.5 * hz(s, x0, 2) + hz(s - 1, x0, 1) - c * hz(s, x0, 1);
    long double last = 0;
    for (int k = 1; k <= 8; ++k) {
        last = stirling_coef(k) * hz(s + 2 * k - 1, x0, 1);
        tail -= last;
    }
    return {static_cast<double>(sum + tail), static_cast<double>(std::fabs(last))};
}

SeriesValue series_logpoch(double sigma, double a) {
    if (!(sigma > 1) || !(a > 0)) throw DomainError("series_logpoch: sigma > 1, a > 0");
    const long double s2 = 2.0L * sigma;
    long double sum = 0, lp = 0;
    for (int m = 0; m < kDirect; ++m) {
        long double x = m + static_cast<long double>(a);
        sum += lp * std::pow(x, -s2);
        lp += std::log(x);
    }
    const double x0 = kDirect + a, s = 2 * sigma;
    const double c = 0.5 * std::log(2 * std::numbers::pi) - log_gamma(a);
    long double tail = -hz(s - 1, x0, 1) + 0.5 * hz(s, x0, 1) - hz(s - 1, x0) + c * hz(s, x0);
    long double last = 0;
    for (int k = 1; k <= 8; ++k) {
        last = stirling_coef(k) * hz(s + 2 * k - 1, x0);
        tail += last;
    }
    return {static_cast<double>(sum + tail), static_cast<double>(std::fabs(last))};
}

SeriesValue series_alt_double(double sigma, double a) {
    if (!(sigma > 0.5) || !(a > 0)) throw DomainError("series_alt_double: sigma > 1/2, a > 0");
    const int P0 = kDirect;
    const long double s2 = 2.0L * sigma, A = a;
    long double sum = 0, inner = 0;  // inner = sum_{n<m} (-1)^n ln(n+a)
    for (int m = 0; m < 2 * P0; ++m) {
        long double x = m + A;
        long double t = inner * std::pow(x, -s2);
        sum += (m % 2 == 0) ? t : -t;
        inner += ((m % 2 == 0) ? 1 : -1) * std::log(x);
    }
    const double s = 2 * sigma;
    const auto& B = BernoulliTable::instance();
    // pair (2p, 2p+1) for p >= P0 with z = p + a/2:
    //   A_{2p} [(2z)^{-s} - (2z+1)^{-s}] - ln(2z) ... rewritten through Hurwitz values at z0
    const double z0 = P0 + a / 2;
    const double K0 = log_gamma(a / 2) - log_gamma((a + 1) / 2);
    // lnGamma(z) - lnGamma(z+1/2) = -ln(z)/2 + sum_k d_k z^{-k}
    std::vector<long double> d(24, 0.0L);
    for (int k = 1; k < 24; ++k) {
        long double diff = B.polynomial(k + 1, 0.0L) - B.polynomial(k + 1, 0.5L);
        d[k] = ((k % 2 == 1) ? 1 : -1) * diff / (static_cast<long double>(k) * (k + 1));
    }
    long double tailA = 0, lastA = 0;
    long double binom = 1;  // binom(-s, j)
    for (int j = 1; j <= 60; ++j) {
        binom *= (-s - (j - 1)) / static_cast<long double>(j);
        long double e = -std::pow(2.0L, -s - j) * binom;
        long double inner_sum = 0.5L * hz(s + j, z0, 1) - K0 * hz(s + j, z0);
        for (int k = 1; k < 24; ++k) {
            if (d[k] == 0) continue;
            long double v = d[k] * hz(s + j + k, z0);
            inner_sum += v;
            if (std::fabs(v) < 1e-30L) break;
        }
        lastA = e * inner_sum;
        tailA += lastA;
        if (std::fabs(lastA) < 1e-22L) break;
    }
    // sum_{p >= P0} ln(2p+a) / (2p+1+a)^s with w = p + (a+1)/2
    const double w0 = P0 + (a + 1) / 2;
    long double tailB = kLn2L * hz(s, w0) - hz(s, w0, 1);
    long double lastB = 0;
    for (int j = 1; j <= 80; ++j) {
        lastB = hz(s + j, w0) / (j * std::pow(2.0L, j));
        tailB -= lastB;
        if (lastB < 1e-24L) break;
    }
    tailB *= std::pow(2.0L, -s);
    return {static_cast<double>(sum + tailA - tailB),
            static_cast<double>(std::fabs(lastA) + std::fabs(lastB))};
}

SeriesValue series_mobius(double sigma) {
    if (!(sigma > 1)) throw DomainError("series_mobius: sigma > 1");
    const auto& sv = sieve();
    const std::size_t N = sv.limit;
    const long double s2 = 2.0L * sigma;
    // mu(m) M(m-1) = [M(m)^2 - M(m-1)^2 - mu(m)^2] / 2, summed by parts
    long double abel = 0;
    long double prev = 1.0L;  // m^{-2 sigma} at m = 1
    for (std::size_t m = 1; m <= N; ++m) {
        long double next = std::pow(static_cast<long double>(m + 1), -s2);
        long double M = sv.mertens[m];
        abel += M * M * (prev - next);
        prev = next;
    }
    // remainder: M(N)^2 (N+1)^{-2s} boundary of the Abel form plus fitted mean-square growth
    long double c = 0;
    std::size_t cnt = 0;
    for (std::size_t m = N / 2; m <= N; m += 97, ++cnt) c += static_cast<long double>(sv.mertens[m]) * sv.mertens[m] / m;
    c /= cnt;
    long double tail = c * s2 * std::pow(static_cast<long double>(N), 1 - s2) / (s2 - 1);
    long double mu2_tail = std::pow(static_cast<long double>(N), 1 - s2) / (s2 - 1) * 6 / (kPiL * kPiL);
    long double value = 0.5L * (abel + tail) - 0.5L * (hz(2 * sigma, 1.0) / hz(4 * sigma, 1.0));
    return {static_cast<double>(value), static_cast<double>(std::fabs(tail) + mu2_tail)};
}

SeriesValue series_mobius_partial(double sigma, std::size_t N) {
    if (!(sigma > 1)) throw DomainError("series_mobius_partial: sigma > 1");
    const auto& sv = sieve();
    if (N > sv.limit) throw DomainError("series_mobius_partial: N beyond sieve");
    const long double s2 = 2.0L * sigma;
    long double sum = 0;
    for (std::size_t m = 2; m <= N; ++m) sum += sv.mobius[m] * static_cast<long double>(sv.mertens[m - 1]) * std::pow(static_cast<long double>(m), -s2);
    // sum_{m>N} |M(m-1)| m^{-2 sigma} with |M(m)| <= sqrt(c m)
    long double cmax = 0;
    for (std::size_t m = std::max<std::size_t>(N / 10, 1); m <= N; ++m)
        cmax = std::max(cmax, static_cast<long double>(sv.mertens[m]) * sv.mertens[m] / m);
    cmax = std::max(cmax, 1.0L);
    long double bound = std::sqrt(2 * cmax) * std::pow(static_cast<long double>(N), 1.5L - s2) / (s2 - 1.5L);
    if (!(s2 > 1.5L)) bound = INFINITY;
    return {static_cast<double>(sum), static_cast<double>(bound)};
}

SeriesValue series_divisor(double sigma) {
    if (!(sigma > 1)) throw DomainError("series_divisor: sigma > 1");
    const auto& sv = sieve();
    const std::size_t N = sv.limit;
    const long double s2 = 2.0L * sigma, cg = 2 * kEulerGammaL - 1;
    // D(m) = m ln m + (2 gamma - 1) m + Delta(m); only the Delta part is summed numerically
    long double rem = 0, comp = 0, rms = 0;
    unsigned long long D = 0;
    std::size_t cnt = 0;
    for (std::size_t m = 1; m <= N; ++m) {
        D += sv.divisor_count[m];
        long double mm = m;
        long double delta = D - mm * std::log(mm) - cg * mm;
        long double term = sv.divisor_count[m] * delta * std::pow(mm, -s2);
        long double t = rem + term;
        comp += (std::fabs(rem) >= std::fabs(term)) ? (rem - t) + term : (term - t) + rem;
        rem = t;
        if (m > N / 2 && m % 101 == 0) {
            rms += delta * delta;
            ++cnt;
        }
    }
    rem += comp;
    rms = std::sqrt(rms / std::max<std::size_t>(cnt, 1));
    const double s = 2 * sigma;
    double z1 = hz(s - 1, 1.0), z1p = hz(s - 1, 1.0, 1), z2 = hz(s, 1.0), z4 = hz(2 * s, 1.0);
    long double value = -2.0L * z1 * z1p + cg * z1 * z1 + rem - static_cast<long double>(z2) * z2 * z2 * z2 / z4;
    long double LN = std::log(static_cast<long double>(N));
    long double trunc = rms * LN * std::pow(static_cast<long double>(N), 1 - s2) / (s2 - 1);
    return {static_cast<double>(value), static_cast<double>(trunc)};
}

Complex series_character(double sigma, const DirichletCharacter& chi) {
    const unsigned k = chi.modulus;
    if (chi.is_principal ? !(sigma > 1) : !(sigma > 0.5))
        throw DomainError("series_character: sigma out of range for this character");
    Complex c = 0;
    for (unsigned n = 1; n <= k; ++n) c += chi(n);
    if (std::abs(c) < 1e-12) c = 0;
    const double kk = k, s = 2 * sigma;
    Complex sum = 0, C = 0;  // C = sum_{j <= r-1} chi(j)
    for (unsigned r = 1; r <= k; ++r) {
        Complex q = C - c / kk * static_cast<double>(r);
        Complex cs = std::conj(chi(r));
        if (std::abs(cs) > 0) {
            Complex term = q * std::pow(kk, -s) * hz(s, r / kk);
            if (std::abs(c) > 0) term += c / kk * std::pow(kk, 1 - s) * hz(s - 1, r / kk);
            sum += cs * term;
        }
        C += chi(r);
    }
    return sum;
}

}  // namespace zm
