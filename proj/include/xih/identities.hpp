#pragma once

// Verification routines for the xi-based harmonic identities: the cosine
// transform of Xi against the theta factor, the completed-zeta contour
// integral against its incomplete-gamma series, Poisson extensions of the
// Xi boundary data on R^n x (0, inf), the diagonal-transform binomial chain,
// and the square-count convolution identities.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "xih/adjudicated.hpp"
#include "xih/quadrature.hpp"
#include "xih/types.hpp"

namespace xih {

// Scalar boundary profile f(t) = Xi(t) / (t^2 + 1/4). Even, positive at 0,
// decays like e^{-pi |t| / 4} up to polynomial factors.
double boundary_f(double t);

// Product boundary data g(x) = prod_l f(x_l) on R^n.
struct BoundaryData {
  int n = 1;
  std::function<double(const std::vector<double>&)> evaluator;
};
BoundaryData xi_boundary(int n);

// Per-axis transform of f under the 2-pi-exponent convention: pi * h(2 pi u)
// with h the stable theta factor. Every conversion between the cos(x t)
// closed forms and the 2-pi convention routes through this one helper.
double boundary_factor_transform(double u);

// --- Cosine transform identity -------------------------------------------

// lhs(x) = int_0^inf Xi(t/2) / (t^2 + 1) * cos(x t) dt, by adaptive panels.
QuadResult eq11_lhs(double x, const Tolerances& tol = {});

// rhs(x) = (pi / 2) * h(x); h evaluated in its stable decaying form.
// Throws OverflowError for |x| > 1400 (the naive e^{|x|/2} intermediate of
// the direct form would overflow there; the contract is kept).
double eq11_rhs(double x);

Tolerances eq11_gates();
std::vector<VerificationReport> verify_eq11(const std::vector<double>& x_grid,
                                            const Tolerances& tol = eq11_gates());

// --- Completed-zeta series identity --------------------------------------

// Upsilon(s) = int_0^inf Xi(t) / ((t^2 + 1/4) (t^2 + (s - 1/2)^2)) dt,
// requires Re s > 1.
QuadResult upsilon_integral(complex s, const Tolerances& tol = {});

struct UpsilonSeries {
  complex value;
  int terms_used = 0;       // incomplete-gamma tail terms actually summed
  double tail_bound = 0.0;  // bound on the dropped remainder
  bool terms_monotone = true;
};
UpsilonSeries upsilon_series_detail(complex s,
                                    MiddleTermVariant variant = kMiddleTerm,
                                    const Tolerances& tol = {});
complex upsilon_series(complex s, const Tolerances& tol = {});

Tolerances upsilon_gates();
std::vector<VerificationReport> verify_upsilon(const std::vector<complex>& s_list,
                                               const Tolerances& tol = upsilon_gates());

// --- Poisson extension on R^n x (0, inf) ----------------------------------

// K(x) = Gamma((n+1)/2) / (pi^{(n+1)/2} (1 + |x|^2)^{(n+1)/2}), n = x.size().
double poisson_kernel(const std::vector<double>& x);
// y^{-n} K(x / y); y must be positive.
double poisson_kernel_scaled(const std::vector<double>& x, double y);

// u(x, y) = int_{R^n} g(t) K_y(x - t) dt for the product boundary data.
// Supports n <= 3. `plan` follows the replay contract of integrate_rn.
struct ExtensionOptions {
  BoxPlan* record_plan = nullptr;
  const BoxPlan* use_plan = nullptr;
  // Folding even axes halves the grid but pins the center to x_l = 0; stencil
  // replays at shifted centers must disable it.
  bool allow_folding = true;
};
QuadResult harmonic_extension_u(const std::vector<double>& x, double y,
                                const BoundaryData& data,
                                const Tolerances& tol = {},
                                const ExtensionOptions& opts = {});

// Transform-side route to u(0, y). BRIDGED integrates
//   e^{-2 pi y |z|} prod_l [pi h(2 pi z_l)]
// over R^n; PRINTED integrates y^{1-n} e^{-2 pi y |z|} prod_l h(z_l).
// Requires 2 pi y - sqrt(n)/2 >= 1/2 (integrability with working margin),
// else DomainError.
QuadResult u0_alternate_variant(double y, int n, TransformVariant variant,
                                const Tolerances& tol = {});
QuadResult u0_alternate(double y, int n, const Tolerances& tol = {});

Tolerances dirichlet_gates();
std::vector<VerificationReport> verify_dirichlet(const std::vector<int>& ns,
                                                 const std::vector<double>& ys,
                                                 const Tolerances& tol = dirichlet_gates());

// --- Diagonal transform and the binomial resolvent chain ------------------

// Diagonal of the transformed product data: ghat(y 1) = h(y)^n.
double ghat_diagonal(double y, int n);
// Same value through the binomial expansion of (e^{-y/2} - 2 e^{y/2} psi)^n;
// loses digits to cancellation as y grows.
double ghat_diagonal_binomial(double y, int n);

struct ChainDetail {
  complex a;                         // Laplace transform of h^n
  std::optional<complex> b;          // boundary-integral route (n <= 2)
  complex c_derived;                 // resolvent series, adjudicated form
  complex c_printed_leading;         // display leading term 1/(s - 1/2)
  complex c_printed_scale;           // display final-form term scale
  complex c_printed_tpower;          // display middle-form t-power
  std::optional<complex> upsilon_link;  // n = 1: (pi/2) a == Upsilon(s + 1/2)
  std::int64_t n_evals = 0;
  std::string notes;
};
// Requires Re s >= n/2 + 1 (margin over bare integrability), else DomainError.
ChainDetail laplace_chain_detail(int n, complex s, const Tolerances& tol = {});
VerificationReport verify_laplace_chain(int n, complex s);
VerificationReport verify_laplace_chain(int n, complex s, const Tolerances& tol);
Tolerances chain_gates(int n);

// --- Square-count convolution identities ----------------------------------

// r_k(m) = #{(a_1..a_k) in Z^k : sum a_i^2 = m} vs the convolution
// sum_l binom(k, l) 2^l r'_l(m) over positive-coordinate counts r'_l.
std::vector<VerificationReport> verify_rk(int k_max = 6, std::int64_t n_max = 500);

// --- Harmonicity probe -----------------------------------------------------

// Five/seven/nine-point discrete Laplacian of u at (x, y) with step h.
// Requires y > 3 h. All stencil evaluations replay one frozen panel plan so
// the second differences are not polluted by adaptive-grid jitter.
VerificationReport harmonicity_check(const BoundaryData& data,
                                     const std::vector<double>& x, double y,
                                     double h);

}  // namespace xih
