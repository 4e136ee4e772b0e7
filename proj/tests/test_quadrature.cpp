#include "zm/frac_integrals.hpp"
#include "zm/quadrature.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace zm;

TEST_SUITE_BEGIN("quadrature");

namespace {
constexpr double pi = std::numbers::pi;
double zr(double s) { return riemann_zeta({s, 0}).real(); }
}  // namespace

TEST_CASE("adaptive rule on smooth integrands") {
    auto r = integrate_adaptive([](double x) { return x * x; }, 0, 1, 1e-12);
    CHECK(std::fabs(r.value - 1.0 / 3) < 1e-15);
    CHECK(r.converged);
    auto s = integrate_adaptive([](double x) { return std::sin(x); }, 0, pi, 1e-12);
    CHECK(std::fabs(s.value - 2.0) < 1e-14);
    CHECK(s.abs_error_estimate >= 0);
    CHECK(s.tail_estimate >= 0);
}

TEST_CASE("adaptive rule with a breakpoint-free fractional piece") {
    // P1(x) = x - 3/2 on [1, 2)
    auto r = integrate_adaptive([](double x) { return (x - 1.5) / (x * x * x); }, 1, 2, 1e-13);
    const double exact = (-1.0 / 2 + 1.5 / 8) - (-1.0 + 1.5 / 2);
    CHECK(std::fabs(r.value - exact) < 1e-13);

    // jump at 1.5 handled by a breakpoint
    const double bp[] = {1.5};
    auto step = [](double x) { return x < 1.5 ? 0.0 : 1.0; };
    CHECK(std::fabs(integrate_adaptive(step, 1, 2, 1e-12, bp).value - 0.5) < 1e-14);
}

TEST_CASE("adaptive rule reports non-convergence") {
    auto r = integrate_adaptive([](double x) { return std::sin(1 / x) / x; }, 1e-8, 1, 1e-14, {}, 1e-15, 5);
    CHECK_FALSE(r.converged);
    CHECK(std::isfinite(r.value));
}

TEST_CASE("semi-infinite integrals") {
    auto a = integrate_semi_infinite([](double x) { return 1 / (x * x); }, 1, DecayModel::power(2), 1e-10);
    CHECK(std::fabs(a.value - 1) < 1e-9);
    auto b = integrate_semi_infinite([](double x) { return std::exp(-x); }, 0, DecayModel::exponential(1), 1e-12);
    CHECK(std::fabs(b.value - 1) < 1e-11);

    SemiInfiniteOptions o;
    o.breaks = [](double lo, double hi) {
        std::vector<double> v;
        for (double j = std::floor(lo) + 1; j < hi; ++j) v.push_back(j);
        return v;
    };
    auto c = integrate_semi_infinite([](double x) { return frac(x) / (x * x * x); }, 1, DecayModel::power(3), 1e-11, o);
    const double lemma = lemma1_transform([](double y) { return y; }, 3.0);
    CHECK(std::fabs(c.value - lemma) < 1e-10);
    CHECK(std::fabs(lemma - 0.177532966575886781763792416677) < 1e-12);
}

TEST_CASE("master kernel") {
    for (double alpha : {0.0, std::numbers::ln2, 1.0, 3.0})
        for (double s : {0.5, 1.0, 2.0}) {
            CAPTURE(alpha);
            CAPTURE(s);
            auto g1 = [s](double t) { return 1 / (s * s + t * t); };
            auto g2 = [s](double t) { return 1 / ((s * s + t * t) * (s * s + t * t)); };
            double v1, v2;
            if (alpha == 0) {
                v1 = 2 * integrate_semi_infinite(g1, 0, DecayModel::power(2), 1e-11).value;
                v2 = 2 * integrate_semi_infinite(g2, 0, DecayModel::power(4), 1e-11).value;
            } else {
                v1 = 2 * integrate_fourier(g1, alpha, Trig::cos, 0, 1e-11).value;
                v2 = 2 * integrate_fourier(g2, alpha, Trig::cos, 0, 1e-11).value;
            }
            const double e1 = pi / s * std::exp(-alpha * s);
            const double e2 = pi / (2 * s * s) * (alpha + 1 / s) * std::exp(-alpha * s);
            CHECK(std::fabs(v1 - e1) <= 1e-8 * e1);
            CHECK(std::fabs(v2 - e2) <= 1e-8 * e2);
        }
}

TEST_CASE("moment integral: closed-form anchors") {
    MomentSpec sp;
    sp.kind = IntegrandKind::riemann;
    sp.sigma = 1.5;
    auto r = moment_integral(sp, 1e-9);
    const double c2 = pi / 1.5 * (2 * zr(2) - zr(3));
    CHECK(std::fabs(r.value - c2) <= 1e-6 * c2);
    CHECK(std::fabs(r.value - 4.37271) < 1e-5);
    CHECK(r.abs_error_estimate >= 0);
    CHECK(r.tail_estimate >= 0);

    // doubling the truncation height leaves the value unchanged
    MomentOptions o;
    o.t_max = 4000;
    auto r2 = moment_integral(sp, 1e-9, o);
    CHECK(std::fabs(r2.value - r.value) <= 1e-9 * r.value);
}

TEST_CASE("moment integral: validation") {
    MomentSpec sp;
    sp.kind = IntegrandKind::hurwitz;
    sp.sigma = 0.9;
    CHECK_THROWS(moment_integral(sp, 1e-9));
    sp.kind = IntegrandKind::alt_hurwitz;
    sp.sigma = -0.1;
    CHECK_THROWS(moment_integral(sp, 1e-9));
    sp.sigma = 1.5;
    sp.weight_power = 3;
    CHECK_THROWS(validate_moment_spec(sp));
    CHECK(parse_kind("riemann") == IntegrandKind::riemann);
    CHECK_FALSE(parse_kind("bogus").has_value());
    CHECK(parse_modulation(modulation_name(Modulation::one_minus_cos_sq)) == Modulation::one_minus_cos_sq);
}

TEST_CASE("moment integral is deterministic and cached") {
    clear_node_cache();
    MomentSpec sp;
    sp.kind = IntegrandKind::hurwitz;
    sp.sigma = 2.0;
    sp.a = 0.5;
    auto a = moment_integral(sp, 1e-9);
    CHECK(node_cache_size() > 0);
    auto b = moment_integral(sp, 1e-9);
    CHECK(a.value == b.value);
    MomentOptions nc;
    nc.use_cache = false;
    CHECK(moment_integral(sp, 1e-9, nc).value == a.value);
}

TEST_SUITE_END();
