#pragma once

#include "zm/special_fn.hpp"

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace zm {

struct QuadratureResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    double tail_estimate = 0.0;
    double truncation_height = 0.0;
    std::size_t nodes_used = 0;
    bool converged = true;
    bool decay_warning = false;
    std::string note;
};

using RealFn = std::function<double(double)>;

QuadratureResult integrate_adaptive(const RealFn& f, double lo, double hi, double rel_tol,
                                    std::span<const double> breakpoints = {}, double abs_floor = 1e-15,
                                    int max_subdivisions = 2000);

// extended precision variant used for the damped integrals
long double integrate_adaptive_ld(const std::function<long double(long double)>& f, long double lo,
                                  long double hi, long double rel_tol, std::size_t* nodes = nullptr);

struct DecayModel {
    enum class Kind { power, exponential, zeta_mean_growth };
    Kind kind = Kind::power;
    double param = 2.0;  // exponent p for power, rate for exponential

    static DecayModel power(double p) { return {Kind::power, p}; }
    static DecayModel exponential(double r) { return {Kind::exponential, r}; }
    static DecayModel zeta_mean_growth() { return {Kind::zeta_mean_growth, 2.0}; }
};

// breakpoints inside [lo, hi) for an integrand with known jumps
using BreakFn = std::function<std::vector<double>(double lo, double hi)>;

struct SemiInfiniteOptions {
    double t_max = 1e12;
    BreakFn breaks;
};

QuadratureResult integrate_semi_infinite(const RealFn& f, double lo, DecayModel model, double rel_tol,
                                         const SemiInfiniteOptions& opts = {});

// int_lo^inf g(t) trig(alpha t) dt for smooth algebraically decaying g; the part beyond
// the truncation point is integrated by parts with numerically differentiated g.
enum class Trig { cos, sin };
QuadratureResult integrate_fourier(const RealFn& g, double alpha, Trig trig, double lo, double rel_tol,
                                   double x_max = 4000.0);

// ---------------------------------------------------------------------------
// moments on vertical lines

enum class IntegrandKind {
    hurwitz,
    alt_hurwitz,
    lerch,
    riemann,
    inverse_zeta,
    zeta_squared,
    dirichlet_L,
    hurwitz_sderiv,
    alt_hurwitz_sderiv
};

enum class Modulation { none, cos_t_ln2, one_minus_cos_t_ln2, one_minus_cos_sq };

struct MomentSpec {
    IntegrandKind kind = IntegrandKind::riemann;
    double sigma = 2.0;
    int weight_power = 2;
    Modulation modulation = Modulation::none;
    double a = 1.0;
    Complex z{1.0, 0.0};
    std::optional<DirichletCharacter> character;
    int zeta_power = 2;  // |F|^zeta_power; 4 only for the riemann kind
};

struct MomentOptions {
    double t_max = 0.0;  // 0: 5000 for sigma <= 1, 2000 otherwise
    double panel = 1.0;
    bool use_cache = true;
};

void validate_moment_spec(const MomentSpec& spec);
std::string kind_name(IntegrandKind k);
std::optional<IntegrandKind> parse_kind(const std::string& s);
std::string modulation_name(Modulation m);
std::optional<Modulation> parse_modulation(const std::string& s);

// int_R |F(sigma+it)|^p m(t) dt / (sigma^2+t^2)^{w/2}
QuadratureResult moment_integral(const MomentSpec& spec, double rel_tol, const MomentOptions& opts = {});

void clear_node_cache();
std::size_t node_cache_size();

}  // namespace zm
