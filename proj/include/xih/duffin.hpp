#pragma once

// Moebius-regularized half-plane series: its bridge back to the Poisson
// integral of the Xi boundary data, boundary recovery as y -> 0+, the scan of
// the continuation at zero ordinates, and bracketed zero finding.

#include <cstdint>
#include <utility>
#include <vector>

#include "xih/adjudicated.hpp"
#include "xih/quadrature.hpp"
#include "xih/types.hpp"

namespace xih {

// F(y) = int_0^inf h(v) e^{-y v} dv for y > -1/2. Evaluated through the
// incomplete-gamma series except inside the cancellation window around
// y = 1/2, where the two leading terms nearly cancel and direct quadrature
// is used instead.
double theta_laplace(double y);

// Poisson integral of the even scalar boundary data f(t) = Xi(t)/(t^2+1/4)
// at (x, y), folded onto (0, inf): int_0^inf f(t) [K_y(x-t) + K_y(x+t)] dt.
QuadResult poisson_halfplane(double x, double y, const Tolerances& tol = {});

// Closed cosine transform of f: (pi/2) h(u) under PLAIN (cos(u t) pairing),
// (pi/2) h(2 pi u) under TWO_PI (cos(2 pi u t) pairing). Decays in both
// conventions; inherits theta_factor's overflow guard.
double cosine_transform_C(double u, Convention conv);

struct PSumResult {
    double value = 0.0;   // the estimate selected by scheme.method
    double spread = 0.0;  // disagreement across methods
    double partial = 0.0;
    double abel = 0.0;
    double cesaro = 0.0;
    bool partial_converged = false;
};

// Resummation of a real term sequence by truncated partial sums, radius
// extrapolation of the power series (Abel), and mean-of-means extrapolation
// (Cesaro). Throws InstabilityError when the methods spread wider than
// 100 * target_tol.
PSumResult p_summation(const std::vector<double>& terms, const SummationScheme& scheme,
                       double target_tol = 1e-6);

struct DuffinDetail {
    double value = 0.0;         // bridged estimate of the Poisson integral
    double series_value = 0.0;  // (pi/2) * regularized Moebius sum
    double bridge_gain = 0.0;   // value = gain * series_value + offset
    double bridge_offset = 0.0;
    double spread = 0.0;        // p_summation spread propagated through the bridge
    PSumResult psum;            // diagnostics on the peeled residual terms
    std::int64_t n_evals = 0;
    bool truncated = false;     // an inner sum hit N_max before its geometric zone
};

// The double series sum_m mu(m)/m sum_n e^{-2 pi n y/(m x)} h(lambda n/(m x)),
// lambda = 2 pi (TWO_PI) or 1 (PLAIN), regularized by peeling the Euler-
// Maclaurin profile of the inner sums and resumming the residuals, then
// bridged to the Poisson integral: at (x, y) under TWO_PI, at the rescaled
// point (2 pi x, 2 pi y) under PLAIN.
DuffinDetail duffin_series_detail(double x, double y, const SummationScheme& scheme = {},
                                  Convention conv = kConvention);
double duffin_series(double x, double y, const SummationScheme& scheme = {},
                     Convention conv = kConvention);

Tolerances duffin_gates();
std::vector<VerificationReport> verify_duffin(const std::vector<double>& xs,
                                              const std::vector<double>& ys,
                                              const SummationScheme& scheme = {},
                                              Convention conv = kConvention,
                                              const Tolerances& tol = duffin_gates());

// Trajectory of the raw (unbridged) PLAIN series at shrinking x with y fixed.
// The series tends to 0 like x^3; the report carries both closed-form
// small-x limit candidates, neither of which the trajectory approaches.
VerificationReport duffin_small_x_probe(double y = 1.0, const SummationScheme& scheme = {});

// |duffin_series(x, y_i) - f(x)| along a decreasing sequence of heights.
// Report i passes when its error does not exceed the previous one.
std::vector<VerificationReport> boundary_recovery(double x, const std::vector<double>& y_seq,
                                                  const SummationScheme& scheme = {});

// Continuation values at (gamma, y) for each y in y_seq; pairs (y, value).
std::vector<std::pair<double, double>> rh_criterion_scan(double gamma,
                                                         const std::vector<double>& y_seq,
                                                         const SummationScheme& scheme = {});

// All zeros of Xi(t) for 0 < t <= max_height (cap 60), located by sign-change
// scanning at step 0.2 and bisection to bracket width <= 1e-8.
ZerosTable find_zeros(double max_height, const Tolerances& tol = {});

}  // namespace xih
