#pragma once

#include <cstdint>
#include <vector>

#include "xih/types.hpp"

namespace xih {

// Complex gamma function. Lanczos approximation with reflection for
// Re(s) < 0.5; relative accuracy ~1e-13 on |Re s| <= 30, |Im s| <= 60.
complex gamma_complex(complex s);

// Riemann zeta. Euler-Maclaurin for Re(s) >= 0.5 (N ~ max(10, |Im s|) direct
// terms, 12 Bernoulli corrections), functional equation for Re(s) < 0.5.
// Accurate to ~1e-14 relative for |Im s| <= 60.
complex zeta_complex(complex s, const Tolerances& tol = {});

// Completed zeta: entire, symmetric under s -> 1-s, real on the real axis and
// on the critical line. Poles/zeros of the factors cancel internally.
complex xi(complex s);

// xi on the critical line: Xi(t) = xi(1/2 + i t). Even in t by construction;
// exactly real output for real input.
complex Xi(complex t);

// Theta remainder psi(x) = sum_{n>=1} e^{-pi n^2 x}; modular transformation
// used for x < 1 so the term count stays O(1).
double psi_theta(double x, const Tolerances& tol = {});

// Stable evaluation of the even theta factor
//   h(y) = e^{-|y|/2} - 2 e^{|y|/2} psi(e^{2|y|}),
// the decaying closed form of e^{y/2} - 2 e^{-y/2} psi(e^{-2y}).
// h(0) = 1 - 2 psi(1); h(y) ~ e^{-|y|/2} for large |y|.
double theta_factor(double y);

// Upper incomplete gamma Gamma(s, x), x >= 0 real, s complex.
// Continued fraction for x > |s|+1, series for the complement otherwise.
complex incomplete_gamma_upper(complex s, double x, const Tolerances& tol = {});

// Moebius function by linear sieve; slot m of the result holds mu(m) for
// 1 <= m <= N (slot 0 is unused and set to 0).
std::vector<int> mobius_sieve(std::int64_t N);

// r_k(n): representations of n as an ordered sum of k squares of integers
// (signs and zeros included). Computed by k-fold Cauchy products of the
// full theta coefficient vector.
std::int64_t sum_of_squares_r(int k, std::int64_t n);

// r'_l(n): ordered l-tuples of positive integers whose squares sum to n.
std::int64_t sum_of_squares_rprime(int l, std::int64_t n);

// Whole coefficient tables 0..n_max of the two generating functions above;
// the scalar accessors are one-element views of these.
std::vector<std::int64_t> sum_of_squares_r_table(int k, std::int64_t n_max);
std::vector<std::int64_t> sum_of_squares_rprime_table(int l, std::int64_t n_max);

}  // namespace xih
