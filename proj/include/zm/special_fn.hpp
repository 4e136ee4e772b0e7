#pragma once

#include "zm/nt_core.hpp"

#include <complex>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace zm {

using Complex = std::complex<double>;

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// evaluation exactly at (or within 1e-8 of) a pole
class PoleError : public DomainError {
public:
    using DomainError::DomainError;
};

struct LerchArgs {
    Complex z{1.0, 0.0};
    Complex s;
    double a = 1.0;
};

struct Constants {
    double euler_gamma;
    double log_two_pi;
    double glaisher_log;
    double zeta_prime_at_2;
};

// 30-digit literals; verified against the evaluators on first use
const Constants& constants();

// long double versions used by the asymptotic formulas
inline constexpr long double kEulerGammaL = 0.577215664901532860606512090082402431L;
inline constexpr long double kLogTwoPiL = 1.83787706640934548356065947281123527L;
inline constexpr long double kGlaisherLogL = 0.248754477033784262547009746487995987L;
inline constexpr long double kPiL = 3.14159265358979323846264338327950288L;
inline constexpr long double kLn2L = 0.693147180559945309417232121458176568L;

Complex hurwitz_zeta(Complex s, double a);
Complex riemann_zeta(Complex s);
Complex alt_hurwitz_zeta(Complex s, double a);
Complex lerch_phi(const LerchArgs& args);
Complex hurwitz_zeta_sderiv(int order, Complex s, double a);
Complex alt_hurwitz_zeta_sderiv(Complex s, double a);
Complex dirichlet_L(Complex s, const DirichletCharacter& chi);

double digamma(double x);
double polygamma(int k, double x);
double log_gamma(double x);
double log_pochhammer(double a, unsigned long long m);
double cosine_integral(double x);

// Sum_{j>=1} Ci(2 pi j x): direct terms plus the asymptotic tail
double ci_lattice_sum(double x, unsigned terms = 2000);

// Weighted Hurwitz combination  sum_i w_i zeta(s, a_i), with derivatives in s.
// Sum of weights may vanish, in which case the combination is finite at s = 1.
struct HurwitzTerm {
    Complex weight;
    double shift;
};

Complex hurwitz_combination(Complex s, std::span<const HurwitzTerm> terms, int deriv = 0);

// Fast repeated evaluation on a fixed vertical line s = sigma + i t.
// Tables of ln(n+a) and (n+a)^{-sigma} are built once up to t_max.
class HurwitzLine {
public:
    // evaluates d^deriv/ds^deriv [ base^{-s} sum_i w_i zeta(s, a_i) ]
    HurwitzLine(double sigma, std::vector<HurwitzTerm> terms, double t_max, int deriv = 0,
                double base = 1.0);
    Complex operator()(double t) const;
    double sigma() const { return sigma_; }

private:
    double sigma_;
    std::vector<HurwitzTerm> terms_;
    int deriv_;
    double base_;
    double t_max_;
    std::vector<std::vector<long double>> logs_;
    std::vector<std::vector<double>> mags_;
};

}  // namespace zm
