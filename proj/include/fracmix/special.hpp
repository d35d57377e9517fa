#pragma once

#include <cstdint>

// Special functions used throughout the solver: the gamma and digamma
// functions, the two-parameter Mittag-Leffler function E_{rho,mu}(x) on the
// non-positive real axis, and the large-argument asymptotic leading terms of
// the three E-variants that drive every monotonicity statement downstream.

namespace fracmix::special {

// Parameters of a Mittag-Leffler evaluation E_{rho,mu}(x).
//   rho: order, must lie in (0, 2]
//   mu:  second parameter (callers here use mu in [0, 2])
//   x:   argument, must satisfy x <= 0
struct MLParams {
    double rho;
    double mu;
    double x;
};

// Leading large-argument behaviour of an E-variant:
//   E = leading + r / y^2 with |r| <= remainder_bound, certified for
//   y = lambda * t^rho >= threshold.
struct AsymptoticExpansion {
    double leading;
    double remainder_bound;
    double threshold;
};

// Gamma function.  Rejects non-positive integers (poles).
// Relative error <= 1e-13 on [0.1, 50].
double gamma(double x);

// Digamma (logarithmic derivative of gamma), x > 0.
// Absolute error <= 1e-12 on [0.5, 3] (and far better in practice).
double digamma(double x);

// E_{rho,mu}(x) for x <= 0, absolute error <= 1e-10 over rho in [0.1, 2],
// mu in [0, 2], x in [-1e6, 0].  Throws fracmix::domain_error for parameters
// outside the supported domain and fracmix::convergence_error if the internal
// accuracy target cannot be met (never silently returns garbage).
double mittag_leffler(const MLParams& p);

inline double mittag_leffler(double rho, double mu, double x) {
    return mittag_leffler(MLParams{rho, mu, x});
}

// Asymptotic leading terms (y = lambda * t^order must be >= threshold,
// otherwise fracmix::domain_error):
//   e2: E_{beta,2}(-y) ~  (2-beta) / (Gamma(3-beta) * y),  beta in (1,2)
//   e1: E_{beta,1}(-y) ~ -(beta-1)(2-beta) / (Gamma(3-beta) * y)
//   e3: E_{alpha,1}(-y) ~ (1-alpha) / (Gamma(2-alpha) * y), alpha in (0,1)
AsymptoticExpansion ml_asymptotic_e2(double beta, double lambda_t_beta);
AsymptoticExpansion ml_asymptotic_e1(double beta, double lambda_t_beta);
AsymptoticExpansion ml_asymptotic_e3(double alpha, double lambda_t_alpha);

// Diagnostic: leading term of d/dbeta E_{beta,2}(-lambda t^beta) in the
// asymptotic regime, [Psi(2-beta) - ln t] / (Gamma(2-beta) * lambda * t^beta).
// Used by the verification suite to corroborate the sign found by the
// finite-difference monotonicity audits; never used as the primary evaluator.
double e2_dbeta_leading(double beta, double lambda, double t);

// Numerical calibration of the decay constant C(rho, mu) =
// sup_{t >= 0} (1 + t) |E_{rho,mu}(-t)| over a logarithmic grid up to 1e6.
// The bound |E| <= C/(1+t) feeds the series-truncation tail estimates.
double ml_decay_constant(double rho, double mu);

namespace detail {

// The two evaluation branches, exposed for cross-validation in tests.
// Branch selection in mittag_leffler() switches on s = |x|^(1/rho) at
// s = 35: Taylor in double-double below, asymptotic series above.  Both are
// accurate on a band around the switch point.
double ml_taylor_dd(double rho, double mu, double t);     // t = -x >= 0
double ml_asymptotic(double rho, double mu, double t);    // t = -x, large

// sin(pi * x) with exact argument reduction.
double sinpi(double x);

// 1 / Gamma(z) for arbitrary real z (0 at the poles).
double inv_gamma(double z);

} // namespace detail

} // namespace fracmix::special
