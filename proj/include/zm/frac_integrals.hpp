#pragma once

#include "zm/quadrature.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace zm {

double frac(double x);
double p1(double x);

// Ivic's phi: int_1^x [floor(u) odd][floor(x/u) odd] du/u, as a finite sum of logs
double phi_ivic(double x);

// phi on [1, limit] through the jump sieve of x phi'(x), which is constant on [N, N+1)
class IvicPhiTable {
public:
    explicit IvicPhiTable(std::size_t limit);
    std::size_t limit() const { return limit_; }
    double operator()(double x) const;
    // int_1^X phi(x) x^{-s-1} dx over whole unit intervals, X <= limit
    long double mellin_partial(double s, std::size_t X) const;
    // int_1^X phi^2(x) x^{-3} dx
    long double square_partial(std::size_t X) const;
    // least-squares fit phi(x) ~ c1 ln x + c0 at integers in [lo, hi]
    std::pair<double, double> log_fit(std::size_t lo, std::size_t hi) const;

private:
    std::size_t limit_;
    std::vector<long double> phi_;  // phi(N)
    std::vector<int> beta_;         // x phi'(x) on [N, N+1)
};

enum class PhiRoute { direct_double_sum, summatory, decomposition, closed_form };
std::string route_name(PhiRoute r);

struct PhiValue {
    double x = 0.0;
    double value = 0.0;
    PhiRoute route = PhiRoute::decomposition;
};

// phi_1 = {x}; phi_2 = I_1 + I_infty; phi_3 by one more convolution
PhiValue phi_n(int n, double x, double rel_tol = 1e-9);

// closed forms for phi_2(k), k = 1..10
double phi2_closed(int k);

// int_1^inf {xy}/y^2 dy
double i1(double x);
double i1_integer(unsigned k);
// int_0^1 {1/y}{xy} dy/y
double i_infty(double x);
// right-hand side of the Ci-series representation of I_1 (P_1 term dropped at integers)
double i1_ci_series(double x, unsigned terms = 2000);

// int_k^inf {u}/u^2 du in closed form, and by piecewise integration plus a Hurwitz tail
double tail_frac_integral(unsigned k);
double tail_frac_numeric(double x0);

// int_0^1 f(y) zeta(lambda, y+1) dy
double lemma1_transform(const RealFn& f, double lambda);
// int_1^inf f({x}) x^{-lambda} dx by unit-segment summation with an Euler-Maclaurin tail
double frac_power_direct(const RealFn& f, double lambda);

// int_0^inf {x}^n x^{-2 sigma - 1} dx via Hurwitz zeta (needs 0 < 2 sigma < n)
double moment_frac(int n, double sigma);
// same integral by segment summation
double moment_frac_direct(int n, double sigma);

enum class DampedKind { frac_over_x, frac_sq_over_x_sq, log_weighted };
std::string damped_name(DampedKind k);

// int_0^inf {x}/x e^{-x/T}, {x}^2/x^2 e^{-x/T} or {x}/x ln^k x e^{-x/T}
long double damped_integral(DampedKind kind, double T, int k = 1);

enum class Asymptotic {
    ivic_series,       // (1/2)[ln T - gamma + ln 2pi] + sum_{m<=M} zeta(1-2m) T^{1-2m} / ((2m-1)! (1-2m))
    frac_over_x,       // same with the single 1/(12T) term
    frac_sq_over_x_sq, // four-term expansion with ln A
    log_weighted,      // (-1)^{k+1} ln^{k+1} T / (2 (k+1)!)
    phi2_growth,       // (1/4) ln x + (1/2) ln 2pi
    phi_n_growth       // two leading terms for phi_n
};
double damped_asymptotic_rhs(Asymptotic form, double T, int order = 1);

enum class P1SquareRoute { quadrature, first_closed, second_closed, telescoped, first_closed_fixed };
std::string p1_route_name(P1SquareRoute r);
// int_1^inf P_1(x)^2 x^{-2 sigma - 1} dx
double p1_square_integral(double sigma, P1SquareRoute route);

// phi_2 through its summatory representation, truncated at j_max with tail estimates
double phi2_summatory(double x, std::size_t j_max);

// fast phi_2 and phi_3 from divisor-sum tables up to limit
class Phi2Table {
public:
    explicit Phi2Table(std::size_t limit);
    std::size_t limit() const { return limit_; }
    double phi2(double x) const;
    double phi3(double x) const;

private:
    long double R(double x) const;       // int_x^inf {u}/u^2
    long double G(double x) const;       // int_x^inf {u} ln u / u^2
    long double tail_over_v2(double x) const;  // int_x^inf phi_2(v)/v^2
    std::size_t limit_;
    std::vector<long double> J_, A_, H_, T_, Gint_, Kcum_;
    std::vector<unsigned long long> D_;
    double c1_ = 0.25, c0_ = 0.0;
};

struct LogIntegral {
    double value = 0.0;
    double partial = 0.0;
    double tail = 0.0;
    std::size_t cutoff = 0;
};
// int_1^inf phi(x)/x^2 dx with fitted logarithmic tail
LogIntegral phi_over_x2_integral(std::size_t X = 100000);
// int_1^inf phi(x)^2/x^3 dx
LogIntegral phi_sq_over_x3_integral(std::size_t X = 100000);

struct ConjectureRow {
    double s;
    std::size_t cutoff;
    double partial;
    double tail;
    double scaled;  // s^2 (partial + tail)
};
std::vector<ConjectureRow> conjecture1_probe(const std::vector<double>& s_values, std::size_t X = 1000000);

}  // namespace zm
