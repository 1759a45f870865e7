#pragma once

#include <functional>
#include <vector>

#include "hypermix/fraction.hpp"

namespace hypermix {

// ---------------------------------------------------------------------------
// Edge process: the birth-death game on one edge of size m. State k counts
// the unoccupied non-change vertices ("units"); p_k is the probability of
// bankruptcy (the coupled chains diverging on that edge) from k units.
// ---------------------------------------------------------------------------

struct EdgeProcessTable {
    int m = 0;
    double lambda = 0.0;
    std::vector<double> p; // p[k-1] = p_k, k = 1..m-1

    double p_k(int k) const { return p.at(static_cast<size_t>(k) - 1); }
};

/// Direct solve of the tridiagonal system
///   (m-1+2L) p_1 - (m-2) p_2 = L
///   -kL p_{k-1} + (m-k+(k+1)L) p_k - (m-k-1) p_{k+1} = 0   (k = 2..m-1).
EdgeProcessTable edge_process_solve(int m, double lambda);

/// Same system in exact rationals. Throws std::overflow_error when the exact
/// values no longer fit 64-bit numerators/denominators.
std::vector<Fraction> edge_process_solve_rational(int m, const Fraction& lambda);

/// Closed form
///   p_k = sum_{i=k+1..m} C(m,i) L^{m+k-i} / ((1+L)^m - L^m) / C(m-1,k).
/// Switches to log-domain summation when (1+L)^m would overflow doubles.
double edge_process_closed(int m, double lambda, int k);

/// Closed form in exact rationals (throws std::overflow_error past 64 bits).
Fraction edge_process_closed_rational(int m, const Fraction& lambda, int k);

/// Anchors: p_1 = L/(m-1) * (1 - m L^{m-1} / ((1+L)^m - L^m)) and
/// p_{m-1} = L^{m-1} / ((1+L)^m - L^m).
double edge_process_p1(int m, double lambda);
double edge_process_p_last(int m, double lambda);

// ---------------------------------------------------------------------------
// Mixing-time bounds
// ---------------------------------------------------------------------------

/// Worst-case expected stop distance 2*Delta*p_1(m, lambda) for the
/// independent-set chain; rapid is the < 1 condition.
struct AlphaBound {
    double value = 0.0;
    bool rapid = false;
};
AlphaBound indset_alpha_bound(int m, double lambda, int delta);

/// The displayed value of 2*Delta*p_1 at the threshold m = 2*lambda*Delta+1:
///   1 - (2LD+1) L^{2LD} / ((1+L)^{2LD+1} - L^{2LD+1}).
double indset_alpha_threshold_expr(double lambda, int delta);

/// tau(eps) <= (1/p) * (3/(1-alpha)) * ln(e*D2) * ln(2*D1 / (eps*(1-alpha))).
double stopping_time_bound(double p, double alpha, double d1, double d2, double eps);

enum class IndsetBoundVariant {
    Theorem2,     // 6 n R ln(n R / eps), R = ((1+L)^{2LD+1}-L^{2LD+1})/((2LD+1) L^{2LD}); needs m >= 2LD+1
    Remark5,      // 6 (2LD+1) n ln(n (2LD+1) / eps); needs m >= 2LD+2
    Remark5Delta, // alpha = 2 Delta p_1(m, L) at the caller's m; tau via the stopping-time
                  // bound with p = 1/n, D1 = n, D2 = 2; needs 2 Delta p_1 < 1
};

struct BoundReport {
    const char* variant = "";
    double tau = 0.0;
    double alpha = 0.0;   // 2*Delta*p_1 at the m the variant evaluates
    double r = 0.0;       // Theorem2's R factor (NaN otherwise)
    double c_delta = 0.0; // Remark5Delta's tau / (n ln(n/eps)) (NaN otherwise)
};

/// m is the instance's minimum edge size; variant preconditions on m are
/// enforced (std::invalid_argument).
BoundReport indset_mixing_bound(long n, double lambda, int delta, double eps,
                                IndsetBoundVariant variant, int m);

/// tau(eps) <= n q ln(n / eps) for m >= 4, q >= Delta+1. m = 3 is rejected
/// (that case needs the 3-uniform threshold analysis below).
double colouring_path_bound(long n, int q, int delta, int m, double eps);

/// phi(d) = 1 - d (1 - e^{-(q-Delta+d) t / (M q)}) / (q-Delta+d); requires
/// q > Delta. Satisfies phi(d) >= phi(1)^d for all t >= 0, d >= 1.
double phi(double d, double t, int q, int delta, int big_m);

// ---------------------------------------------------------------------------
// Quadrature, series, and the beta* threshold
// ---------------------------------------------------------------------------

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    bool converged = false;
    long evaluations = 0;
};

/// Adaptive Simpson with interval bisection to an absolute tolerance.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b, double abs_tol);

/// int_0^upper e^{-z - a (1 - e^{-b z})} dz. The integrand is <= e^{-z}, so
/// an infinite upper limit can be proxied by any upper with e^{-upper} below
/// the tolerance.
QuadratureResult success_integral(double a, double b, double upper, double abs_tol = 1e-10);

struct SeriesResult {
    double value = 0.0;
    int terms = 0;
};

/// sum_{i>=0} (-2)^i (1-beta)^i / prod_{j=0..i} (1+j beta), summed until the
/// term magnitude drops below 1e-14. Throws NumericError past max_terms.
SeriesResult series_value(double beta, int max_terms = 1000);

enum class BetaStarMethod { Integral, Series };

struct ThresholdReport {
    double beta_star = 0.0;
    double q_factor = 0.0; // 1 / (1 - beta_star)
    BetaStarMethod method = BetaStarMethod::Integral;
    double residual = 0.0;
};

/// Root of  int_0^inf e^{-z - (2(1-beta)/beta)(1 - e^{-beta z})} dz = 1/2
/// (or of the equivalent series) by bisection on [0.2, 0.6] to 1e-9.
ThresholdReport beta_star(BetaStarMethod method);

} // namespace hypermix
